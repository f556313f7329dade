#pragma once

// The q-building blocks with q = t^2:
//   h_a = 1 + t^2 + ... + t^(2a)        (zero for a < 0)
//   P_a = h_0 h_1 ... h_(a-1)            (P_0 = 1, zero for a < 0)
//   gauss(k, l) = P_l / (P_k P_(l-k))    (Poincare polynomial of G_k(C^l))

#include <cstddef>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "schubert/errors.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

/// Raw coefficient vectors in the variable q = t^2. Multiplying or dividing
/// by h_m is linear time here, which is what makes long products of h
/// factors cheap.
namespace qseries {

using Coeffs = std::vector<Integer>;

inline void trim(Coeffs& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

/// v <- v * (1 + q + ... + q^m), m >= 0.
inline void multiply_by_h(Coeffs& v, int m) {
  if (v.empty() || m <= 0) return;
  const std::size_t n = v.size();
  const std::size_t width = static_cast<std::size_t>(m) + 1;
  Coeffs w(n + width - 1);
  Integer run = 0;
  for (std::size_t d = 0; d < w.size(); ++d) {
    if (d < n) run += v[d];
    if (d >= width && d - width < n) run -= v[d - width];
    w[d] = run;
  }
  v = std::move(w);
}

/// v <- v / (1 + q + ... + q^m) when the division is exact. Returns false
/// (leaving v unspecified) when it is not.
inline bool divide_by_h(Coeffs& v, int m) {
  if (v.empty() || m <= 0) return true;
  const std::size_t n = v.size();
  const auto mm = static_cast<std::size_t>(m);
  if (n <= mm) return false;
  const std::size_t len = n - mm;
  Coeffs a(len);
  Integer window = 0;  // a[d-1] + ... + a[d-m]
  for (std::size_t d = 0; d < n; ++d) {
    Integer value = v[d] - window;
    if (d < len) {
      a[d] = value;
      window += a[d];
    } else if (value != 0) {
      return false;
    }
    if (d >= mm && d - mm < len) window -= a[d - mm];
  }
  v = std::move(a);
  return true;
}

/// Substitute q = t^2.
inline Polynomial to_t(const Coeffs& v) {
  std::vector<Integer> t(v.empty() ? 0 : 2 * v.size() - 1);
  for (std::size_t d = 0; d < v.size(); ++d) t[2 * d] = v[d];
  return Polynomial(std::move(t));
}

}  // namespace qseries

namespace detail {

// Insert-only memo table; references to stored values stay valid.
template <class Key, class Value>
class MemoTable {
 public:
  template <class Compute>
  const Value& get(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Value value = compute();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, Value> table_;
};

inline MemoTable<int, Polynomial>& big_p_table() {
  static MemoTable<int, Polynomial> table;
  return table;
}

inline MemoTable<std::pair<int, int>, Polynomial>& gauss_table() {
  static MemoTable<std::pair<int, int>, Polynomial> table;
  return table;
}

}  // namespace detail

inline Polynomial h(int alpha) {
  if (alpha < 0) return {};
  std::vector<Integer> v(2 * static_cast<std::size_t>(alpha) + 1);
  for (std::size_t d = 0; d < v.size(); d += 2) v[d] = 1;
  return Polynomial(std::move(v));
}

inline const Polynomial& big_p(int alpha) {
  static const Polynomial zero;
  if (alpha < 0) return zero;
  return detail::big_p_table().get(alpha, [alpha] {
    qseries::Coeffs v{1};
    for (int m = 1; m < alpha; ++m) qseries::multiply_by_h(v, m);
    return qseries::to_t(v);
  });
}

/// Poincare polynomial of the Grassmannian G_k(C^l); zero when the
/// Grassmannian is empty (k < 0 or k > l).
inline const Polynomial& gauss(int k, int l) {
  static const Polynomial zero;
  if (k < 0 || k > l) return zero;
  if (2 * k > l) k = l - k;
  return detail::gauss_table().get({k, l}, [k, l] {
    // P_l / (P_k P_(l-k)) = h_(l-k) ... h_(l-1) / (h_1 ... h_(k-1))
    qseries::Coeffs v{1};
    for (int m = l - k; m < l; ++m) qseries::multiply_by_h(v, m);
    for (int m = 1; m < k; ++m)
      if (!qseries::divide_by_h(v, m))
        throw InternalInconsistency("Gaussian binomial quotient is not exact");
    return qseries::to_t(v);
  });
}

/// Checks t^(2 alpha) h_beta == h_(alpha+beta) - h_(alpha-1).
inline bool check_shift_identity(int alpha, int beta) {
  if (alpha < 0 || beta < 0) throw InvalidParams("check_shift_identity needs alpha, beta >= 0");
  return shift(h(beta), 2 * static_cast<std::size_t>(alpha)) == h(alpha + beta) - h(alpha - 1);
}

}  // namespace schubert
