#include "psc/charnum.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace psc::charnum {

using arith::binomial;

// ---------------------------------------------------------------------------
// descriptors

ManifoldDescriptor ManifoldDescriptor::cp(long n) {
  if (n < 1) throw std::domain_error("cp: n must be >= 1");
  ManifoldDescriptor d;
  d.kind = Kind::CP;
  d.n = n;
  return d;
}

ManifoldDescriptor ManifoldDescriptor::milnor(long i, long j) {
  if (i < 0 || j < 1 || i > j)
    throw std::domain_error("milnor: need 0 <= i <= j, j >= 1");
  ManifoldDescriptor d;
  d.kind = Kind::MilnorH;
  d.i = i;
  d.j = j;
  return d;
}

ManifoldDescriptor ManifoldDescriptor::hp2() {
  ManifoldDescriptor d;
  d.kind = Kind::HP2;
  return d;
}

ManifoldDescriptor ManifoldDescriptor::product(
    std::vector<ManifoldDescriptor> factors) {
  ManifoldDescriptor d;
  d.kind = Kind::Product;
  d.factors = std::move(factors);
  return d;
}

long ManifoldDescriptor::real_dim() const {
  switch (kind) {
    case Kind::CP: return 2 * n;
    case Kind::MilnorH: return 2 * (i + j - 1);
    case Kind::HP2: return 8;
    case Kind::Product: {
      long s = 0;
      for (const auto& f : factors) s += f.real_dim();
      return s;
    }
  }
  throw std::logic_error("real_dim: bad kind");
}

bool ManifoldDescriptor::is_complex() const {
  switch (kind) {
    case Kind::CP:
    case Kind::MilnorH: return true;
    case Kind::HP2: return false;
    case Kind::Product:
      return std::all_of(factors.begin(), factors.end(),
                         [](const auto& f) { return f.is_complex(); });
  }
  return false;
}

std::string ManifoldDescriptor::str() const {
  switch (kind) {
    case Kind::CP: return "cp" + std::to_string(n);
    case Kind::MilnorH:
      return "h_" + std::to_string(i) + "_" + std::to_string(j);
    case Kind::HP2: return "hp2";
    case Kind::Product: {
      std::string s;
      for (std::size_t t = 0; t < factors.size(); ++t) {
        if (t) s += "*";
        s += factors[t].str();
      }
      return s;
    }
  }
  return "";
}

namespace {

long parse_long(std::string_view text) {
  std::size_t pos = 0;
  long v;
  try {
    v = std::stol(std::string(text), &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("manifold: bad integer in descriptor");
  }
  if (pos != text.size())
    throw std::invalid_argument("manifold: bad integer in descriptor");
  return v;
}

ManifoldDescriptor parse_atom(std::string_view t) {
  if (t == "hp2") return ManifoldDescriptor::hp2();
  if (t.size() > 2 && t.substr(0, 2) == "cp")
    return ManifoldDescriptor::cp(parse_long(t.substr(2)));
  if (t.size() > 2 && t.substr(0, 2) == "h_") {
    std::string_view rest = t.substr(2);
    std::size_t sep = rest.find('_');
    if (sep == std::string_view::npos)
      throw std::invalid_argument("manifold: expected h_<i>_<j>");
    return ManifoldDescriptor::milnor(parse_long(rest.substr(0, sep)),
                                      parse_long(rest.substr(sep + 1)));
  }
  throw std::invalid_argument("manifold: unknown descriptor '" +
                              std::string(t) + "'");
}

}  // namespace

ManifoldDescriptor ManifoldDescriptor::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("manifold: empty descriptor");
  std::vector<ManifoldDescriptor> factors;
  std::size_t start = 0;
  while (true) {
    std::size_t sep = text.find('*', start);
    std::string_view piece = sep == std::string_view::npos
                                 ? text.substr(start)
                                 : text.substr(start, sep - start);
    factors.push_back(parse_atom(piece));
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  if (factors.size() == 1) return factors[0];
  return product(std::move(factors));
}

// ---------------------------------------------------------------------------
// graded ring engine

namespace {

// Products flatten into a sequence of atomic blocks.
void flatten(const ManifoldDescriptor& d, std::vector<ManifoldDescriptor>& out) {
  if (d.kind == ManifoldDescriptor::Kind::Product)
    for (const auto& f : d.factors) flatten(f, out);
  else
    out.push_back(d);
}

std::vector<ManifoldDescriptor> flatten(const ManifoldDescriptor& d) {
  std::vector<ManifoldDescriptor> atoms;
  flatten(d, atoms);
  return atoms;
}

}  // namespace

void GradedRing::append_block(const ManifoldDescriptor& d, int copy_index) {
  const std::string suffix = copy_index < 0 ? "" : std::to_string(copy_index);
  using Kind = ManifoldDescriptor::Kind;
  switch (d.kind) {
    case Kind::CP:
      vars_.push_back({"x" + suffix, 2, d.n, false});
      relations_.emplace_back();
      top_.push_back(d.n);
      break;
    case Kind::MilnorH: {
      const int vx = static_cast<int>(vars_.size());
      vars_.push_back({"x" + suffix, 2, d.i, false});
      relations_.emplace_back();
      top_.push_back(d.i);
      vars_.push_back({"y" + suffix, 2, d.j - 1, true});
      // The fiber is the projectivized kernel of the bilinear pairing
      // against the tautological line, whose total Chern class is
      // 1/(1+x) = sum (-x)^q. Grothendieck relation:
      // sum_q (-1)^q x^q y^(j-q) = 0, i.e. y^j = sum_{q>=1} (-1)^(q+1)
      // x^q y^(j-q).
      std::vector<std::pair<std::vector<long>, Int>> rel;
      for (long q = 1; q <= d.j && q <= d.i; ++q) {
        std::vector<long> e(vars_.size(), 0);
        e[vx] = q;
        e[vx + 1] = d.j - q;
        rel.emplace_back(std::move(e), Int(q % 2 == 1 ? 1 : -1));
      }
      relations_.push_back(std::move(rel));
      top_.push_back(d.j - 1);
      break;
    }
    case Kind::HP2:
      vars_.push_back({"u" + suffix, 4, 2, false});
      relations_.emplace_back();
      top_.push_back(2);
      break;
    case Kind::Product:
      throw std::logic_error("append_block: unflattened product");
  }
}

GradedRing GradedRing::for_manifold(const ManifoldDescriptor& d) {
  GradedRing ring;
  std::vector<ManifoldDescriptor> atoms = flatten(d);
  for (std::size_t t = 0; t < atoms.size(); ++t)
    ring.append_block(atoms[t], atoms.size() > 1 ? static_cast<int>(t) : -1);
  // Relation exponent vectors were sized as blocks were appended; pad to the
  // final variable count.
  for (auto& rel : ring.relations_)
    for (auto& [e, c] : rel) e.resize(ring.vars_.size(), 0);
  ring.top_degree_ = ring.monomial_degree(ring.top_);
  return ring;
}

int GradedRing::top_degree() const { return top_degree_; }

int GradedRing::monomial_degree(const std::vector<long>& exps) const {
  long deg = 0;
  for (std::size_t v = 0; v < vars_.size(); ++v)
    deg += exps[v] * vars_[v].degree;
  return static_cast<int>(deg);
}

void GradedRing::accumulate(std::map<std::vector<long>, Int>& acc,
                            const std::vector<long>& exps,
                            const Int& coeff) const {
  if (coeff == 0) return;
  // Every relation is homogeneous, so a monomial above the fundamental
  // degree can only rewrite to monomials above it, none of which fit a
  // normal form; it contributes nothing.
  if (monomial_degree(exps) > top_degree_) return;

  auto merge = [](std::map<std::vector<long>, Int>& m,
                  const std::vector<long>& e, const Int& c) {
    auto it = m.find(e);
    if (it == m.end()) {
      m.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) m.erase(it);
    }
  };
  // Classify a monomial: -1 normal form, -2 dead (truncated power), else the
  // index of a relation variable to rewrite.
  auto classify = [this](const std::vector<long>& e) -> int {
    int rewrite = -1;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (e[v] <= vars_[v].max_exp) continue;
      if (!vars_[v].has_relation) return -2;
      if (rewrite < 0) rewrite = static_cast<int>(v);
    }
    return rewrite;
  };
  const int v0 = classify(exps);
  if (v0 == -2) return;
  if (v0 == -1) {
    merge(acc, exps, coeff);
    return;
  }

  // Each rewrite strictly lowers the total exponent of the relation
  // variables, so processing the worklist in decreasing order of that sum
  // visits every distinct monomial once, with all its contributions merged.
  auto measure = [this](const std::vector<long>& e) {
    long m = 0;
    for (std::size_t v = 0; v < vars_.size(); ++v)
      if (vars_[v].has_relation) m += e[v];
    return m;
  };
  std::map<std::pair<long, std::vector<long>>, Int> pending;
  pending.emplace(std::make_pair(measure(exps), exps), coeff);
  while (!pending.empty()) {
    auto node = pending.extract(std::prev(pending.end()));
    const std::vector<long>& e = node.key().second;
    const Int& c = node.mapped();
    if (c == 0) continue;
    const int v = classify(e);
    if (v == -2) continue;
    if (v == -1) {
      merge(acc, e, c);
      continue;
    }
    std::vector<long> base = e;
    base[static_cast<std::size_t>(v)] -=
        vars_[static_cast<std::size_t>(v)].max_exp + 1;
    for (const auto& [rexps, rc] : relations_[static_cast<std::size_t>(v)]) {
      std::vector<long> next = base;
      for (std::size_t w = 0; w < next.size(); ++w) next[w] += rexps[w];
      auto key = std::make_pair(measure(next), std::move(next));
      auto it = pending.find(key);
      if (it == pending.end())
        pending.emplace(std::move(key), c * rc);
      else
        it->second += c * rc;
    }
  }
}

Element Element::zero(const GradedRing& ring) { return Element(&ring); }

Element Element::one(const GradedRing& ring) {
  return monomial(ring, std::vector<long>(ring.var_count(), 0));
}

Element Element::monomial(const GradedRing& ring, std::vector<long> exps,
                          Int coeff) {
  if (static_cast<int>(exps.size()) != ring.var_count())
    throw std::domain_error("monomial: exponent arity mismatch");
  Element e(&ring);
  ring.accumulate(e.terms_, exps, coeff);
  return e;
}

namespace {

const GradedRing* common_ring(const Element& a, const Element& b) {
  if (a.ring() != b.ring() || a.ring() == nullptr)
    throw std::logic_error("element arithmetic across distinct rings");
  return a.ring();
}

}  // namespace

Element Element::operator+(const Element& o) const {
  const GradedRing* ring = common_ring(*this, o);
  Element r = *this;
  for (const auto& [e, c] : o.terms_) ring->accumulate(r.terms_, e, c);
  return r;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::operator-() const {
  Element r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Element Element::operator*(const Element& o) const {
  const GradedRing* ring = common_ring(*this, o);
  Element r(ring);
  std::vector<long> e(ring->var_count());
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int v = 0; v < ring->var_count(); ++v) e[v] = ea[v] + eb[v];
      ring->accumulate(r.terms_, e, ca * cb);
    }
  return r;
}

Element Element::operator*(const Int& k) const {
  if (k == 0) return Element(ring_);
  Element r = *this;
  for (auto& [e, c] : r.terms_) c *= k;
  return r;
}

bool Element::operator==(const Element& o) const {
  return ring_ == o.ring_ && terms_ == o.terms_;
}

Element Element::pow(long e) const {
  if (e < 0) throw std::domain_error("pow: negative exponent");
  if (ring_ == nullptr) throw std::logic_error("pow: detached element");
  Element r = one(*ring_);
  for (long t = 0; t < e; ++t) r = r * *this;
  return r;
}

Element Element::graded_part(int degree) const {
  Element r(ring_);
  for (const auto& [e, c] : terms_)
    if (ring_->monomial_degree(e) == degree) r.terms_.emplace(e, c);
  return r;
}

Int Element::coefficient(const std::vector<long>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Int(0) : it->second;
}

Int Element::top_coefficient() const {
  if (ring_ == nullptr) throw std::logic_error("top_coefficient: detached");
  return coefficient(ring_->top_monomial());
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool constant = true;
    for (long ev : e) constant = constant && ev == 0;
    if (a != 1 || constant) os << a.get_str();
    bool need_sep = a != 1 && !constant;
    for (int v = 0; v < ring_->var_count(); ++v) {
      if (e[v] == 0) continue;
      if (need_sep) os << "*";
      os << ring_->var(v).name;
      if (e[v] > 1) os << "^" << e[v];
      need_sep = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// characteristic classes

namespace {

// Chern class of one atomic complex block, embedded at var_offset.
Element chern_block(const GradedRing& ring, const ManifoldDescriptor& atom,
                    int var_offset) {
  using Kind = ManifoldDescriptor::Kind;
  Element c = Element::zero(ring);
  std::vector<long> e(ring.var_count(), 0);
  auto add = [&](const Int& coeff) {
    Element m = Element::monomial(ring, e, coeff);
    c = c + m;
  };
  if (atom.kind == Kind::CP) {
    // c(T CP^n) = (1 + x)^(n+1)
    for (long t = 0; t <= atom.n; ++t) {
      e[var_offset] = t;
      add(binomial(atom.n + 1, t));
    }
    return c;
  }
  if (atom.kind == Kind::MilnorH) {
    // Base times fiber: (1 + x)^(i+1) * sum_q (-1)^q x^q (1 + y)^(j-q),
    // the same complement class as in the ring relation. This agrees with
    // the adjunction formula (1+x)^(i+1) (1+y)^(j+1) / (1+x+y) for the
    // degree (1,1) hypersurface model.
    Element a = Element::zero(ring);
    for (long t = 0; t <= atom.i; ++t) {
      e[var_offset] = t;
      a = a + Element::monomial(ring, e, binomial(atom.i + 1, t));
    }
    Element b = Element::zero(ring);
    for (long q = 0; q <= atom.j && q <= atom.i; ++q) {
      e[var_offset] = q;
      const Int sign = q % 2 == 0 ? 1 : -1;
      for (long t = 0; t <= atom.j - q; ++t) {
        e[var_offset + 1] = t;
        b = b + Element::monomial(ring, e, sign * binomial(atom.j - q, t));
      }
      e[var_offset + 1] = 0;
    }
    return a * b;
  }
  throw std::domain_error("chern_total: descriptor has no complex model");
}

// Pontryagin class of one atomic block, embedded at var_offset.
Element pontryagin_block(const GradedRing& ring,
                         const ManifoldDescriptor& atom, int var_offset) {
  using Kind = ManifoldDescriptor::Kind;
  if (atom.kind == Kind::HP2) {
    std::vector<long> e(ring.var_count(), 0);
    Element p = Element::one(ring);
    e[var_offset] = 1;
    p = p + Element::monomial(ring, e, 2);
    e[var_offset] = 2;
    p = p + Element::monomial(ring, e, 7);
    return p;
  }
  // Complex block: 1 - p_1 + p_2 - ... = (sum (-1)^q c_q)(sum c_q).
  Element c = chern_block(ring, atom, var_offset);
  Element alt = Element::zero(ring);
  const long cdim = atom.real_dim() / 2;
  for (long q = 0; q <= cdim; ++q) {
    Element part = c.graded_part(static_cast<int>(2 * q));
    alt = alt + (q % 2 == 0 ? part : -part);
  }
  Element n = alt * c;
  Element p = Element::zero(ring);
  for (long q = 0; 4 * q <= atom.real_dim(); ++q) {
    Element part = n.graded_part(static_cast<int>(4 * q));
    p = p + (q % 2 == 0 ? part : -part);
  }
  return p;
}

// Offsets of each atomic block's first variable.
std::vector<int> block_offsets(const std::vector<ManifoldDescriptor>& atoms) {
  std::vector<int> off;
  int v = 0;
  for (const auto& a : atoms) {
    off.push_back(v);
    v += a.kind == ManifoldDescriptor::Kind::MilnorH ? 2 : 1;
  }
  return off;
}

}  // namespace

CharClassVector chern_total(const ManifoldDescriptor& d) {
  if (!d.is_complex())
    throw std::domain_error("chern_total: descriptor has no complex model");
  auto ring = std::make_shared<const GradedRing>(GradedRing::for_manifold(d));
  std::vector<ManifoldDescriptor> atoms = flatten(d);
  std::vector<int> off = block_offsets(atoms);
  Element c = Element::one(*ring);
  for (std::size_t t = 0; t < atoms.size(); ++t)
    c = c * chern_block(*ring, atoms[t], off[t]);
  CharClassVector out;
  out.kind = CharClassVector::Kind::Chern;
  out.ring = ring;
  for (long q = 0; 2 * q <= d.real_dim(); ++q)
    out.classes.push_back(c.graded_part(static_cast<int>(2 * q)));
  return out;
}

CharClassVector pontryagin_total(const ManifoldDescriptor& d) {
  auto ring = std::make_shared<const GradedRing>(GradedRing::for_manifold(d));
  std::vector<ManifoldDescriptor> atoms = flatten(d);
  std::vector<int> off = block_offsets(atoms);
  Element p = Element::one(*ring);
  for (std::size_t t = 0; t < atoms.size(); ++t)
    p = p * pontryagin_block(*ring, atoms[t], off[t]);
  CharClassVector out;
  out.kind = CharClassVector::Kind::Pontryagin;
  out.ring = ring;
  for (long q = 0; 4 * q <= d.real_dim(); ++q)
    out.classes.push_back(p.graded_part(static_cast<int>(4 * q)));
  return out;
}

// ---------------------------------------------------------------------------
// s-numbers and cobordism certificates

SPolynomial s_polynomial_in_pontryagin(int k) {
  if (k < 1)
    throw std::domain_error("s_polynomial_in_pontryagin: k must be >= 1");
  std::vector<SPolynomial> s(static_cast<std::size_t>(k) + 1);
  for (int j = 1; j <= k; ++j) {
    SPolynomial acc;
    std::vector<long> e(static_cast<std::size_t>(k), 0);
    e[j - 1] = 1;
    acc[e] = (j % 2 == 1 ? Int(j) : Int(-j));
    for (int i = 1; i < j; ++i) {
      const Int sign = i % 2 == 1 ? 1 : -1;
      for (const auto& [se, sc] : s[j - i]) {
        std::vector<long> t = se;
        t[i - 1] += 1;
        Int& slot = acc[t];
        slot += sign * sc;
        if (slot == 0) acc.erase(t);
      }
    }
    s[j] = std::move(acc);
  }
  return s[k];
}

std::string spolynomial_str(const SPolynomial& s) {
  if (s.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : s) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool constant = true;
    for (long ev : e) constant = constant && ev == 0;
    if (a != 1 || constant) os << a.get_str();
    bool need_sep = a != 1 && !constant;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (need_sep) os << "*";
      os << "p" << v + 1;
      if (e[v] > 1) os << "^" << e[v];
      need_sep = true;
    }
  }
  return os.str();
}

Int s_number(const ManifoldDescriptor& d, int k) {
  if (k < 1) throw std::domain_error("s_number: k must be >= 1");
  if (d.real_dim() != 4L * k)
    throw std::domain_error("s_number: dimension must equal 4k");
  CharClassVector p = pontryagin_total(d);
  const GradedRing* ring = p.classes.at(0).ring();
  SPolynomial spoly = s_polynomial_in_pontryagin(k);
  // Powers of each class recur across monomials of the s-polynomial; build
  // them once. pows[q][e] is p_q^e.
  std::vector<std::vector<Element>> pows(p.classes.size());
  auto power = [&](std::size_t q, long e) -> const Element& {
    auto& vec = pows[q];
    if (vec.empty()) vec.push_back(Element::one(*ring));
    while (static_cast<long>(vec.size()) <= e)
      vec.push_back(vec.back() * p.classes[q]);
    return vec[static_cast<std::size_t>(e)];
  };
  Element value = Element::zero(*ring);
  for (const auto& [e, c] : spoly) {
    Element term = Element::one(*ring);
    bool dead = false;
    for (std::size_t v = 0; v < e.size() && !dead; ++v) {
      if (e[v] == 0) continue;
      if (v + 1 >= p.classes.size() || p.classes[v + 1].is_zero()) {
        dead = true;
        break;
      }
      term = term * power(v + 1, e[v]);
    }
    if (!dead) value = value + term * c;
  }
  return value.top_coefficient();
}

namespace {

Int pair_rational(const Element& e, long den, const char* what) {
  Rat v = arith::make_rat(e.top_coefficient(), Int(den));
  if (v.get_den() != 1)
    throw std::logic_error(std::string(what) + ": non-integral genus");
  return v.get_num();
}

}  // namespace

Int signature(const ManifoldDescriptor& d) {
  const long dim = d.real_dim();
  if (dim == 0) return 1;
  if (dim != 4 && dim != 8)
    throw std::domain_error("signature: unsupported dimension");
  CharClassVector p = pontryagin_total(d);
  if (dim == 4) {
    // L_1 = p_1 / 3
    return pair_rational(p.classes.at(1), 3, "signature");
  }
  // L_2 = (7 p_2 - p_1^2) / 45
  Element l2 = p.classes.at(2) * Int(7) - p.classes.at(1) * p.classes.at(1);
  return pair_rational(l2, 45, "signature");
}

GeneratorCertificate generator_search(int k) {
  if (k < 2) throw std::domain_error("generator_search: k must be >= 2");
  std::vector<ManifoldDescriptor> pool;
  pool.push_back(ManifoldDescriptor::cp(2 * k));
  for (long i = 2; i <= k && 2 * k + 1 - i >= 4; ++i)
    pool.push_back(ManifoldDescriptor::milnor(i, 2 * k + 1 - i));

  std::vector<Int> values;
  values.reserve(pool.size());
  for (const auto& d : pool) values.push_back(s_number(d, k));

  Int target = 1;
  if (auto pp = arith::prime_power_classify(2 * k + 1)) target = pp->p;

  arith::Bezout bez = arith::extended_gcd_list(values);
  if (bez.g != target)
    throw std::logic_error("generator_search: pool misses the target gcd");

  GeneratorCertificate cert;
  cert.target = target;
  for (std::size_t t = 0; t < pool.size(); ++t)
    if (bez.coeffs[t] != 0)
      cert.combination.emplace_back(bez.coeffs[t], pool[t]);
  return cert;
}

Omega8Report omega8_report() {
  ManifoldDescriptor cp4 = ManifoldDescriptor::cp(4);
  ManifoldDescriptor cp22 = ManifoldDescriptor::product(
      {ManifoldDescriptor::cp(2), ManifoldDescriptor::cp(2)});
  ManifoldDescriptor hp2 = ManifoldDescriptor::hp2();

  const Int sig1 = signature(cp4), s1 = s_number(cp4, 2);
  const Int sig2 = signature(cp22), s2 = s_number(cp22, 2);
  const Int sigh = signature(hp2), sh = s_number(hp2, 2);

  // Solve a*(sig1, s1) + b*(sig2, s2) = (sigh, sh) over Q, then check
  // integrality: HP^2 lies in the lattice spanned by the generators.
  const Int det = sig1 * s2 - sig2 * s1;
  if (det == 0) throw std::logic_error("omega8_report: degenerate basis");
  Rat a = arith::make_rat(sigh * s2 - sig2 * sh, det);
  Rat b = arith::make_rat(sig1 * sh - sigh * s1, det);
  if (a.get_den() != 1 || b.get_den() != 1)
    throw std::logic_error("omega8_report: non-integral coordinates");

  Omega8Report rep;
  rep.a = a.get_num();
  rep.b = b.get_num();
  rep.sig_hp2 = sigh;
  rep.s_hp2 = sh;
  // In coordinates over the basis, [CP4] = (1, 0) and [HP2] = (a, b); the
  // sublattice they span has index |det|.
  rep.index = abs(Int(1) * rep.b - Int(0) * rep.a);
  return rep;
}

}  // namespace psc::charnum
