#pragma once

// Intersection cohomology Poincare polynomials I_1 .. I_(r+1) of all strata,
// from H_p = I_p + sum_{q<p} g_pq I_q with g_pq = t^(2 d_pq) f_pq.

#include <cstddef>
#include <string>
#include <vector>

#include "schubert/errors.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/strata.hpp"

namespace schubert {

struct IHTable {
  SchubertParams params;
  /// entries[p - 1] = I_p, ascending in p.
  std::vector<Polynomial> entries;

  const Polynomial& at(int p) const { return entries.at(static_cast<std::size_t>(p - 1)); }
};

/// Square matrix of polynomials, row-major.
class PolynomialMatrix {
 public:
  explicit PolynomialMatrix(std::size_t n) : n_(n), cells_(n * n) {}

  std::size_t size() const { return n_; }
  Polynomial& at(std::size_t row, std::size_t col) { return cells_[row * n_ + col]; }
  const Polynomial& at(std::size_t row, std::size_t col) const { return cells_[row * n_ + col]; }

  std::vector<Polynomial> apply(const std::vector<Polynomial>& v) const {
    std::vector<Polynomial> out(n_);
    for (std::size_t row = 0; row < n_; ++row)
      for (std::size_t col = 0; col < n_; ++col)
        if (!at(row, col).is_zero() && !v[col].is_zero()) out[row] += at(row, col) * v[col];
    return out;
  }

 private:
  std::size_t n_;
  std::vector<Polynomial> cells_;
};

/// g_pq = t^(2 d_pq) f_pq.
inline Polynomial transition_entry(const SchubertParams& s, int p, int q) {
  const StratumPair pq(p, q);
  return shift(fibre_poly_t(s, pq), 2 * static_cast<std::size_t>(small_d(s, pq)));
}

namespace detail {

inline void require_geometric(const SchubertParams& s) {
  if (classify(s) != ParamClass::Geometric)
    throw InvalidParams(to_string(s) + " is not a geometric single-condition Schubert variety");
}

inline void require_betti(const SchubertParams& s, int p, const Polynomial& poly) {
  for (const auto& coeff : poly.coefficients())
    if (coeff < 0)
      throw InternalInconsistency("I_" + std::to_string(p) + " for " + to_string(s) +
                                  " has a negative Betti number");
}

}  // namespace detail

/// Strictly upper-triangular matrix N of the g_pq, rows and columns ordered
/// p = r+1, r, ..., 1 so that row a holds stratum r+1-a.
inline PolynomialMatrix transition_matrix(const SchubertParams& s) {
  const int top = s.r() + 1;
  PolynomialMatrix n(static_cast<std::size_t>(top));
  for (int p = top; p >= 1; --p)
    for (int q = p - 1; q >= 1; --q)
      n.at(static_cast<std::size_t>(top - p), static_cast<std::size_t>(top - q)) = transition_entry(s, p, q);
  return n;
}

/// I_1 = H_1 and I_p = H_p - sum_{q<p} g_pq I_q.
inline IHTable solve_backsub(const SchubertParams& s) {
  detail::require_geometric(s);
  IHTable table{s, {}};
  const int top = s.r() + 1;
  table.entries.reserve(static_cast<std::size_t>(top));
  for (int p = 1; p <= top; ++p) {
    Polynomial ip = resolution_poincare(s, p);
    for (int q = 1; q < p; ++q) {
      const Polynomial& f = fibre_poly_t(s, StratumPair(p, q));
      if (f.is_zero()) continue;
      ip -= shift(f * table.at(q), 2 * static_cast<std::size_t>(small_d(s, StratumPair(p, q))));
    }
    detail::require_betti(s, p, ip);
    table.entries.push_back(std::move(ip));
  }
  return table;
}

/// I = (1 + N)^(-1) H = sum_{e=0}^{r} (-1)^e N^e H, N nilpotent.
inline IHTable solve_neumann(const SchubertParams& s) {
  detail::require_geometric(s);
  const int top = s.r() + 1;
  const auto n = transition_matrix(s);

  std::vector<Polynomial> term(static_cast<std::size_t>(top));
  for (int p = top; p >= 1; --p) term[static_cast<std::size_t>(top - p)] = resolution_poincare(s, p);
  std::vector<Polynomial> sum = term;
  for (int e = 1; e <= s.r(); ++e) {
    term = n.apply(term);
    for (std::size_t a = 0; a < sum.size(); ++a) {
      if (e % 2 == 0)
        sum[a] += term[a];
      else
        sum[a] -= term[a];
    }
  }

  IHTable table{s, {}};
  for (int p = 1; p <= top; ++p) {
    auto& ip = sum[static_cast<std::size_t>(top - p)];
    detail::require_betti(s, p, ip);
    table.entries.push_back(std::move(ip));
  }
  return table;
}

}  // namespace schubert
