#pragma once

// Reference implementations that share no code with the library: Pascal's
// triangle, schoolbook products and the q-Pascal recurrence.

#include <cstddef>
#include <vector>

#include "schubert/polynomial.hpp"

namespace oracle {

using schubert::Integer;
using schubert::Polynomial;
using Coeffs = std::vector<Integer>;

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  std::vector<Integer> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<Integer> next(row.size() + 1);
    next.front() = next.back() = 1;
    for (std::size_t a = 1; a < row.size(); ++a) next[a] = row[a - 1] + row[a];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

inline Coeffs naive_mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1);
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y) out[x + y] += a[x] * b[y];
  return out;
}

inline Polynomial to_poly(const Coeffs& c) { return Polynomial(c); }

inline Coeffs to_coeffs(const Polynomial& p) { return Coeffs(p.coefficients().begin(), p.coefficients().end()); }

/// 1 + t^2 + ... + t^(2a), by hand.
inline Polynomial h(int a) {
  if (a < 0) return {};
  Coeffs c(2 * static_cast<std::size_t>(a) + 1, 0);
  for (int d = 0; d <= a; ++d) c[2 * static_cast<std::size_t>(d)] = 1;
  return Polynomial(c);
}

/// [l choose k]_q at q = t^2 from [l,k] = [l-1,k-1] + q^k [l-1,k].
inline Polynomial gauss(int k, int l) {
  if (k < 0 || k > l) return {};
  std::vector<std::vector<Coeffs>> table(static_cast<std::size_t>(l) + 1);
  for (int n = 0; n <= l; ++n) {
    table[n].resize(static_cast<std::size_t>(n) + 1);
    table[n][0] = Coeffs{1};
    table[n][n] = Coeffs{1};
    for (int m = 1; m < n; ++m) {
      const Coeffs& left = table[n - 1][m - 1];
      const Coeffs& right = table[n - 1][m];
      Coeffs sum(std::max(left.size(), right.size() + 2 * static_cast<std::size_t>(m)));
      for (std::size_t d = 0; d < left.size(); ++d) sum[d] += left[d];
      for (std::size_t d = 0; d < right.size(); ++d) sum[d + 2 * static_cast<std::size_t>(m)] += right[d];
      table[n][m] = std::move(sum);
    }
  }
  return Polynomial(table[l][k]);
}

}  // namespace oracle
