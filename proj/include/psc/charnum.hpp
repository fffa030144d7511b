#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "psc/arith.hpp"

namespace psc::charnum {

using arith::Int;
using arith::Rat;

// Closed manifolds whose cohomology rings the engine models: complex
// projective spaces, the projective-bundle manifolds H_{i,j} = P(L + C^j)
// over CP^i, the quaternionic plane, and finite products of these.
struct ManifoldDescriptor {
  enum class Kind { CP, MilnorH, HP2, Product };

  Kind kind = Kind::CP;
  long n = 0;  // CP: complex dimension
  long i = 0, j = 0;  // MilnorH parameters, 0 <= i <= j, j >= 1
  std::vector<ManifoldDescriptor> factors;

  static ManifoldDescriptor cp(long n);
  static ManifoldDescriptor milnor(long i, long j);
  static ManifoldDescriptor hp2();
  static ManifoldDescriptor product(std::vector<ManifoldDescriptor> factors);

  long real_dim() const;
  bool is_complex() const;  // carries a stable complex structure we model

  std::string str() const;                       // e.g. "cp4", "h_2_3", "cp2*cp2"
  static ManifoldDescriptor parse(std::string_view text);
};

// One polynomial generator of a truncated graded cohomology ring. Exponents
// above max_exp either vanish or reduce through a relation (the
// projective-bundle case).
struct RingVariable {
  std::string name;
  int degree = 2;    // cohomological degree
  long max_exp = 0;  // largest exponent kept in normal form
  bool has_relation = false;
};

class GradedRing;

// Element of a GradedRing in normal form: a finite integer combination of
// in-bound monomials, keyed by exponent vector.
class Element {
 public:
  explicit Element(const GradedRing* ring = nullptr) : ring_(ring) {}

  static Element zero(const GradedRing& ring);
  static Element one(const GradedRing& ring);
  static Element monomial(const GradedRing& ring, std::vector<long> exps,
                          Int coeff = 1);

  const GradedRing* ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator*(const Int& k) const;
  Element operator-() const;
  bool operator==(const Element& o) const;

  Element pow(long e) const;

  // Sum of the terms of the given cohomological degree.
  Element graded_part(int degree) const;

  Int coefficient(const std::vector<long>& exps) const;
  // Coefficient on the fundamental-degree monomial: the pairing with the
  // fundamental class.
  Int top_coefficient() const;

  const std::map<std::vector<long>, Int>& terms() const { return terms_; }
  std::string str() const;

 private:
  friend class GradedRing;
  const GradedRing* ring_;
  std::map<std::vector<long>, Int> terms_;
};

class GradedRing {
 public:
  static GradedRing for_manifold(const ManifoldDescriptor& d);

  int var_count() const { return static_cast<int>(vars_.size()); }
  const RingVariable& var(int v) const { return vars_[v]; }
  const std::vector<long>& top_monomial() const { return top_; }
  int top_degree() const;
  int monomial_degree(const std::vector<long>& exps) const;

  // Adds coeff * monomial(exps) to acc, rewriting out-of-bound exponents
  // into normal form.
  void accumulate(std::map<std::vector<long>, Int>& acc,
                  const std::vector<long>& exps, const Int& coeff) const;

 private:
  std::vector<RingVariable> vars_;
  // Relation substituted for var^(max_exp+1), as monomial/coefficient pairs.
  std::vector<std::vector<std::pair<std::vector<long>, Int>>> relations_;
  std::vector<long> top_;
  int top_degree_ = 0;

  void append_block(const ManifoldDescriptor& d, int copy_index);
};

// Total characteristic class, split into graded components: classes[q] is
// the degree-2q (Chern) or degree-4q (Pontryagin) part. Owns the ring the
// component elements live in.
struct CharClassVector {
  enum class Kind { Chern, Pontryagin };
  Kind kind = Kind::Chern;
  std::shared_ptr<const GradedRing> ring;
  std::vector<Element> classes;
};

// Total Chern class of the tangent bundle. Defined for complex descriptors;
// throws std::domain_error otherwise.
CharClassVector chern_total(const ManifoldDescriptor& d);

// Total Pontryagin class: from the Chern class for complex descriptors,
// tabulated for the quaternionic plane, multiplicative over products.
CharClassVector pontryagin_total(const ManifoldDescriptor& d);

// The k-th power sum written in the elementary symmetric classes p_1..p_k:
// exponent vectors over (p_1, ..., p_k) with integer coefficients.
using SPolynomial = std::map<std::vector<long>, Int>;

SPolynomial s_polynomial_in_pontryagin(int k);
std::string spolynomial_str(const SPolynomial& s);

// The s-number <s_k(p_1, ..., p_k), [M]> of a 4k-dimensional descriptor.
Int s_number(const ManifoldDescriptor& d, int k);

// Signature via the L-genus; defined for real dimension 0, 4 and 8.
Int signature(const ManifoldDescriptor& d);

// Certificate that combinations from the standard pool reach the minimal
// positive s-number in dimension 4k: pairs (coefficient, manifold) with
// sum coeff * s_number == target, zero coefficients omitted.
struct GeneratorCertificate {
  Int target;
  std::vector<std::pair<Int, ManifoldDescriptor>> combination;
};

GeneratorCertificate generator_search(int k);

// Expresses the quaternionic plane in terms of the two standard generators
// of the rank-2 lattice in dimension 8 through (signature, s-number) pairs,
// and the index of the sublattice they span.
struct Omega8Report {
  Int a, b;        // [HP2] = a*[CP4] + b*[CP2xCP2]
  Int index;       // index of the span of the two generators
  Int sig_hp2, s_hp2;
};

Omega8Report omega8_report();

}  // namespace psc::charnum
