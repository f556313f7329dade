#pragma once

// Sums of terms  c * t^(2e) * prod_m h_m^(n_m)  with integer exponents n_m,
// compared exactly by bringing both sides over one common denominator.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "schubert/errors.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/qfactor.hpp"

namespace schubert {

/// How an h factor with negative index enters a rational expression.
///  Zero:       h_a = 0 for every a < 0.
///  Reflection: h_(-1) = 0 and h_(-n) = -t^(-2(n-1)) h_(n-2) for n >= 2, the
///              extension under which t^(2a) h_b = h_(a+b) - h_(a-1) holds
///              for all integers a, b.
enum class NegativeIndexRule { Zero, Reflection };

class HTerm {
 public:
  explicit HTerm(Integer coeff = 1, NegativeIndexRule rule = NegativeIndexRule::Zero)
      : coeff_(std::move(coeff)), rule_(rule) {
    if (coeff_ == 0) vanishes_ = true;
  }

  /// Multiply by t^(2e).
  HTerm& times_q(long e) {
    q_shift_ += e;
    return *this;
  }

  HTerm& times_h(int m, int power = 1) {
    if (power == 0 || m == 0) return *this;
    if (m > 0) {
      bump(m, power);
      return *this;
    }
    if (m == -1 || rule_ == NegativeIndexRule::Zero) {
      zero_factor(power);
      return *this;
    }
    const int n = -m;
    if (power % 2 != 0) coeff_ = -coeff_;
    q_shift_ -= static_cast<long>(n - 1) * power;
    if (n - 2 > 0) bump(n - 2, power);
    return *this;
  }

  HTerm& over_h(int m) { return times_h(m, -1); }

  /// P_n = h_0 ... h_(n-1); P_n = 0 for n < 0.
  HTerm& times_p(int n, int power = 1) {
    if (n < 0) {
      zero_factor(power);
      return *this;
    }
    for (int m = 1; m < n; ++m) times_h(m, power);
    return *this;
  }

  HTerm& over_p(int n) { return times_p(n, -1); }

  /// P_l / (P_k P_(l-k)), read as zero when G_k(C^l) is empty.
  HTerm& times_gauss(int k, int l) {
    if (k < 0 || k > l) {
      vanishes_ = true;
      return *this;
    }
    return times_p(l).over_p(k).over_p(l - k);
  }

  HTerm operator-() const {
    HTerm out = *this;
    out.coeff_ = -out.coeff_;
    return out;
  }

  const Integer& coeff() const { return coeff_; }
  long q_shift() const { return q_shift_; }
  const std::map<int, int>& exponents() const { return exponents_; }
  bool vanishes() const { return vanishes_; }
  bool singular() const { return singular_; }

 private:
  void bump(int m, int power) {
    auto [it, inserted] = exponents_.try_emplace(m, 0);
    it->second += power;
    if (it->second == 0) exponents_.erase(it);
  }

  void zero_factor(int power) {
    if (power > 0)
      vanishes_ = true;
    else
      singular_ = true;
  }

  Integer coeff_;
  NegativeIndexRule rule_;
  long q_shift_ = 0;
  std::map<int, int> exponents_;
  bool vanishes_ = false;
  bool singular_ = false;
};

class FractionSum {
 public:
  FractionSum() = default;
  FractionSum(std::initializer_list<HTerm> terms) : terms_(terms) {}

  FractionSum& operator+=(HTerm term) {
    terms_.push_back(std::move(term));
    return *this;
  }
  FractionSum& operator-=(const HTerm& term) {
    terms_.push_back(-term);
    return *this;
  }

  const std::vector<HTerm>& terms() const { return terms_; }

 private:
  std::vector<HTerm> terms_;
};

/// Result of comparing two fraction sums over a shared denominator D. The
/// numerators have the factors common to every term cancelled, so
/// lhs == rhs exactly when lhs_numerator == rhs_numerator.
struct CrossComparison {
  bool equal = false;
  Polynomial lhs_numerator;
  Polynomial rhs_numerator;
  /// Each side as a polynomial in t, when it is one.
  std::optional<Polynomial> lhs_value;
  std::optional<Polynomial> rhs_value;
};

namespace detail {

inline void accumulate(qseries::Coeffs& acc, const qseries::Coeffs& v, std::size_t offset,
                       const Integer& coeff) {
  if (v.empty()) return;
  if (acc.size() < v.size() + offset) acc.resize(v.size() + offset);
  for (std::size_t d = 0; d < v.size(); ++d) acc[offset + d] += coeff * v[d];
}

inline qseries::Coeffs h_product(const std::map<int, int>& exps) {
  qseries::Coeffs v{1};
  for (const auto& [m, e] : exps)
    for (int n = 0; n < e; ++n) qseries::multiply_by_h(v, m);
  return v;
}

// value * q^shift * prod h_m^(net_m); nullopt when that is not a polynomial.
inline std::optional<Polynomial> rescale(qseries::Coeffs v, long shift, const std::map<int, int>& net) {
  qseries::trim(v);
  for (const auto& [m, e] : net)
    for (int n = 0; n < e; ++n) qseries::multiply_by_h(v, m);
  for (const auto& [m, e] : net)
    for (int n = 0; n < -e; ++n)
      if (!qseries::divide_by_h(v, m)) return std::nullopt;
  if (v.empty()) return Polynomial{};
  if (shift < 0) {
    const auto drop = static_cast<std::size_t>(-shift);
    if (drop > v.size()) return std::nullopt;
    for (std::size_t d = 0; d < drop; ++d)
      if (v[d] != 0) return std::nullopt;
    v.erase(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(drop));
  } else if (shift > 0) {
    v.insert(v.begin(), static_cast<std::size_t>(shift), Integer(0));
  }
  return qseries::to_t(v);
}

}  // namespace detail

/// Compares lhs and rhs by cross-multiplication. Throws InvalidParams when a
/// surviving term has a vanishing denominator.
inline CrossComparison cross_compare(const FractionSum& lhs, const FractionSum& rhs) {
  std::vector<const HTerm*> live;
  std::vector<bool> on_lhs;
  for (const auto* side : {&lhs, &rhs}) {
    for (const auto& term : side->terms()) {
      if (term.singular()) throw InvalidParams("a denominator factor vanishes");
      if (term.vanishes()) continue;
      live.push_back(&term);
      on_lhs.push_back(side == &lhs);
    }
  }

  // Common denominator D = prod h_m^(den_m); numerator exponents are
  // e_m + den_m, and the per-factor minimum over all terms is cancelled.
  std::map<int, int> den;
  long min_shift = 0;
  for (const auto* term : live) {
    min_shift = std::min(min_shift, term->q_shift());
    for (const auto& [m, e] : term->exponents())
      if (e < 0) den[m] = std::max(den[m], -e);
  }
  std::map<int, int> common;
  if (!live.empty()) {
    std::map<int, int> all_factors = den;
    for (const auto* term : live)
      for (const auto& [m, e] : term->exponents()) all_factors.try_emplace(m, 0);
    for (const auto& [m, unused] : all_factors) {
      int lowest = -1;
      for (const auto* term : live) {
        auto it = term->exponents().find(m);
        const int e = (it == term->exponents().end() ? 0 : it->second) + (den.count(m) ? den[m] : 0);
        lowest = lowest < 0 ? e : std::min(lowest, e);
      }
      if (lowest > 0) common[m] = lowest;
    }
  }

  qseries::Coeffs sums[2];
  for (std::size_t t = 0; t < live.size(); ++t) {
    std::map<int, int> residual;
    for (const auto& [m, d] : den) residual[m] = d;
    for (const auto& [m, e] : live[t]->exponents()) residual[m] += e;
    for (const auto& [m, g] : common) residual[m] -= g;
    const auto product = detail::h_product(residual);
    detail::accumulate(sums[on_lhs[t] ? 0 : 1], product,
                       static_cast<std::size_t>(live[t]->q_shift() - min_shift), live[t]->coeff());
  }
  for (auto& s : sums) qseries::trim(s);

  // side = numerator * q^min_shift * prod h^(common - den)
  std::map<int, int> net = common;
  for (const auto& [m, d] : den) net[m] -= d;

  CrossComparison out;
  out.equal = sums[0] == sums[1];
  out.lhs_numerator = qseries::to_t(sums[0]);
  out.rhs_numerator = qseries::to_t(sums[1]);
  out.lhs_value = detail::rescale(sums[0], min_shift, net);
  out.rhs_value = out.equal ? out.lhs_value : detail::rescale(sums[1], min_shift, net);
  return out;
}

/// Exact polynomial value of a fraction sum; InexactDivision when it is not
/// a polynomial.
inline Polynomial evaluate(const FractionSum& sum) {
  auto cmp = cross_compare(sum, FractionSum{});
  if (!cmp.lhs_value) throw InexactDivision("fraction sum is not a polynomial in t");
  return *cmp.lhs_value;
}

}  // namespace schubert
