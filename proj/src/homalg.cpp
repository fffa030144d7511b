#include "psc/homalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace psc::homalg {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw std::domain_error("mul: shape mismatch");
  IntMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += xik * y.at(k, j);
    }
  return r;
}

Int determinant(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::domain_error("determinant: not square");
  const int n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        w.at(i, j) = t;
      }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

namespace {

// Elementary row/column operations on d, mirrored into u (rows) or v (cols)
// so that d == u * a * v stays true throughout.
struct SnfWork {
  IntMatrix d, u, v;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void add_row(int dst, int src, const Int& q) {  // row dst += q * row src
    if (q == 0) return;
    for (int c = 0; c < d.cols; ++c) d.at(dst, c) += q * d.at(src, c);
    for (int c = 0; c < u.cols; ++c) u.at(dst, c) += q * u.at(src, c);
  }
  void add_col(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < d.rows; ++r) d.at(r, dst) += q * d.at(r, src);
    for (int r = 0; r < v.rows; ++r) v.at(r, dst) += q * v.at(r, src);
  }
  void negate_row(int i) {
    for (int c = 0; c < d.cols; ++c) d.at(i, c) = -d.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }
  // rows (i, j) <- (x*row_i + y*row_j, p*row_i + q*row_j), det(x q - y p)=±1
  void transform_rows(int i, int j, const Int& x, const Int& y, const Int& p,
                      const Int& q) {
    for (int c = 0; c < d.cols; ++c) {
      Int ri = d.at(i, c), rj = d.at(j, c);
      d.at(i, c) = x * ri + y * rj;
      d.at(j, c) = p * ri + q * rj;
    }
    for (int c = 0; c < u.cols; ++c) {
      Int ri = u.at(i, c), rj = u.at(j, c);
      u.at(i, c) = x * ri + y * rj;
      u.at(j, c) = p * ri + q * rj;
    }
  }
};

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Replaces a diagonal pair (a, b) with (gcd(a,b), lcm(a,b)) by unimodular
// row/column operations; assumes all off-diagonal entries in rows/cols i, j
// vanish and a, b > 0.
void fold_diagonal_pair(SnfWork& w, int i, int j) {
  Int a = w.d.at(i, i), b = w.d.at(j, j);
  w.add_col(i, j, 1);  // puts b at (j, i)
  Int g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  Int bg = b / g, ag = a / g;
  w.transform_rows(i, j, x, y, -bg, ag);
  // now d(i,i) = g, d(i,j) = y*b, d(j,j) = lcm
  Int q = -w.d.at(i, j) / g;
  w.add_col(j, i, q);
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
  if (a.rows < 0 || a.cols < 0)
    throw std::domain_error("smith_normal_form: bad shape");
  SnfWork w{a, IntMatrix::identity(a.rows), IntMatrix::identity(a.cols)};
  const int r = a.rows, c = a.cols;
  const int steps = std::min(r, c);

  for (int t = 0; t < steps; ++t) {
    // Bring a minimal-magnitude nonzero entry of the trailing block to (t,t).
    int bi = -1, bj = -1;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j) {
        const Int& e = w.d.at(i, j);
        if (e == 0) continue;
        if (bi < 0 || abs_int(e) < abs_int(w.d.at(bi, bj))) {
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) break;  // trailing block is zero
    w.swap_rows(t, bi);
    w.swap_cols(t, bj);

    // Clear row and column t. Every pass either finishes or leaves a
    // remainder strictly smaller than the pivot, which is then promoted.
    for (;;) {
      bool dirty = false;
      for (int i = t + 1; i < r; ++i) {
        if (w.d.at(i, t) == 0) continue;
        Int q = w.d.at(i, t) / w.d.at(t, t);  // truncated quotient
        w.add_row(i, t, Int(-q));
        if (w.d.at(i, t) != 0) {
          w.swap_rows(t, i);
          dirty = true;
        }
      }
      for (int j = t + 1; j < c; ++j) {
        if (w.d.at(t, j) == 0) continue;
        Int q = w.d.at(t, j) / w.d.at(t, t);
        w.add_col(j, t, Int(-q));
        if (w.d.at(t, j) != 0) {
          w.swap_cols(t, j);
          dirty = true;
        }
      }
      if (!dirty) break;
    }
    if (w.d.at(t, t) < 0) w.negate_row(t);
  }

  // Enforce the divisibility chain by gcd/lcm passes on adjacent pairs.
  for (bool changed = true; changed;) {
    changed = false;
    for (int t = 0; t + 1 < steps; ++t) {
      const Int& x = w.d.at(t, t);
      const Int& y = w.d.at(t + 1, t + 1);
      if (x != 0 && y != 0 && y % x != 0) {
        fold_diagonal_pair(w, t, t + 1);
        changed = true;
      }
    }
  }
  return SnfResult{std::move(w.u), std::move(w.d), std::move(w.v)};
}

AbelianGroupInvariants cokernel_invariants(const IntMatrix& a) {
  SnfResult snf = smith_normal_form(a);
  AbelianGroupInvariants inv;
  const int steps = std::min(a.rows, a.cols);
  int rank = 0;
  for (int t = 0; t < steps; ++t) {
    const Int& d = snf.d.at(t, t);
    if (d == 0) continue;
    ++rank;
    if (d > 1) inv.torsion.push_back(d);
  }
  inv.free_rank = a.rows - rank;
  return inv;
}

namespace {

void validate_homology(const IntegralHomology& h) {
  if (h.groups.empty()) throw std::domain_error("homology: empty grading");
  for (const auto& g : h.groups) {
    if (g.free_rank < 0) throw std::domain_error("homology: negative rank");
    for (const Int& t : g.torsion)
      if (t < 2) throw std::domain_error("homology: torsion entry < 2");
  }
}

}  // namespace

std::vector<int> betti_over_field(const IntegralHomology& h,
                                  const HomologyField& field) {
  validate_homology(h);
  if (!field.is_rational && !arith::is_prime(field.p))
    throw std::domain_error("betti_over_field: characteristic must be prime");
  const int n = static_cast<int>(h.groups.size());
  std::vector<int> b(n, 0);
  for (int k = 0; k < n; ++k) b[k] = h.groups[k].free_rank;
  if (field.is_rational) return b;
  // Universal coefficients: torsion contributes in its own degree and one
  // degree up.
  for (int k = 0; k < n; ++k)
    for (const Int& t : h.groups[k].torsion)
      if (t % field.p == 0) {
        ++b[k];
        if (k + 1 < n) ++b[k + 1];
      }
  return b;
}

int semi_characteristic(const IntegralHomology& h, const HomologyField& field,
                        int m) {
  if (m < 0) throw std::domain_error("semi_characteristic: m must be >= 0");
  if (h.top() != 2 * m + 1)
    throw std::domain_error("semi_characteristic: top degree must be 2m+1");
  std::vector<int> b = betti_over_field(h, field);
  int s = 0;
  for (int k = 0; k <= m; ++k) s += b[k];
  return s & 1;
}

int lmp_difference(const IntegralHomology& h) {
  const int top = h.top();
  if (top < 1 || top % 2 == 0)
    throw std::domain_error("lmp_difference: top degree must be odd");
  const int m = (top - 1) / 2;
  int kq = semi_characteristic(h, HomologyField::Q(), m);
  int k2 = semi_characteristic(h, HomologyField::Fp(2), m);
  return (kq - k2) & 1;
}

TruncatedPowerSeries hilbert_series(const std::vector<long>& degrees,
                                    int n_max) {
  if (n_max < 0) throw std::domain_error("hilbert_series: n_max must be >= 0");
  TruncatedPowerSeries s;
  s.coeffs.assign(std::size_t(n_max) + 1, Int(0));
  s.coeffs[0] = 1;
  for (long d : degrees) {
    if (d < 1) throw std::domain_error("hilbert_series: degrees must be >= 1");
    if (d > n_max) continue;
    // Multiply by 1/(1 - t^d): running prefix sums with stride d.
    for (int i = static_cast<int>(d); i <= n_max; ++i)
      s.coeffs[i] += s.coeffs[i - d];
  }
  return s;
}

std::vector<long> wall_generator_degrees(long n_max) {
  if (n_max < 0)
    throw std::domain_error("wall_generator_degrees: n_max must be >= 0");
  std::vector<long> out;
  for (long d = 4; d <= n_max; d *= 2) out.push_back(d);
  auto is_pow2 = [](long k) { return (k & (k - 1)) == 0; };
  for (long k = 3; 2 * k - 1 <= n_max; ++k) {
    if (is_pow2(k)) continue;
    out.push_back(2 * k - 1);
    if (2 * k <= n_max) out.push_back(2 * k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> thom_generator_degrees(long n_max) {
  if (n_max < 0)
    throw std::domain_error("thom_generator_degrees: n_max must be >= 0");
  std::vector<long> out;
  auto is_pow2 = [](long k) { return (k & (k - 1)) == 0; };
  for (long i = 2; i <= n_max; ++i)
    if (!is_pow2(i + 1)) out.push_back(i);
  return out;
}

}  // namespace psc::homalg
