#pragma once

// Both sides of the local identity, the global identity, and the two
// specializations of the global identity (k - i = 2 and k - c = 2), built as
// sums of h-quotients and compared by cross-multiplication.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "schubert/errors.hpp"
#include "schubert/hfraction.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/strata.hpp"

namespace schubert {

enum class IdentityKind { Local, Global, AppendixKi2, AppendixKc2 };

inline const char* to_string(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::Local: return "local";
    case IdentityKind::Global: return "global";
    case IdentityKind::AppendixKi2: return "appendix-ki2";
    case IdentityKind::AppendixKc2: return "appendix-kc2";
  }
  return "global";
}

/// Free parameters of a specialization: (i, j, c) when k - i = 2,
/// (i, j, r) when k - c = 2.
struct AppendixTriple {
  int i;
  int j;
  int third;
  friend constexpr auto operator<=>(const AppendixTriple&, const AppendixTriple&) = default;
};

struct IdentityVerdict {
  IdentityKind kind;
  /// For the specializations, the (i, j, k, l) tuple they stand for.
  SchubertParams params;
  std::optional<StratumPair> pair;
  std::optional<AppendixTriple> triple;
  Polynomial lhs;
  Polynomial rhs;
  bool holds = false;
  /// Set when a side is not a polynomial; lhs and rhs then hold the two
  /// numerators over the common denominator instead of the side values.
  bool over_common_denominator = false;
};

struct IdentitySides {
  FractionSum lhs;
  FractionSum rhs;
};

namespace detail {

inline void require_symbolic(const SchubertParams& s) {
  if (!is_symbolic(classify(s)))
    throw InvalidParams(to_string(s) + " violates 0<=i<=k<=j, 0<=r<=c<=k");
}

inline IdentityVerdict make_verdict(IdentityKind kind, const SchubertParams& s, const IdentitySides& sides) {
  auto cmp = cross_compare(sides.lhs, sides.rhs);
  IdentityVerdict v{kind, s, std::nullopt, std::nullopt, {}, {}, cmp.equal, false};
  if (cmp.lhs_value && cmp.rhs_value) {
    v.lhs = std::move(*cmp.lhs_value);
    v.rhs = std::move(*cmp.rhs_value);
  } else {
    v.lhs = std::move(cmp.lhs_numerator);
    v.rhs = std::move(cmp.rhs_numerator);
    v.over_common_denominator = true;
  }
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Local identity on the stratum Delta_q^0 inside Delta_p:
//   H(F_pq) = sum_{u=q+1}^{p-1} H(T_pu) H(G_uq) t^(2 d_pu)
//             + H(T_pq) t^(2 d_pq) + H(G_pq)

inline IdentitySides local_sides(const SchubertParams& s, const StratumPair& pq) {
  detail::require_symbolic(s);
  detail::require_stratum(s, pq.p());
  const int p = pq.p(), q = pq.q(), k = s.k(), c = s.c();
  IdentitySides sides;
  sides.lhs += std::move(HTerm().times_gauss(k - p + 1, k - q + 1));
  for (int u = q + 1; u <= p - 1; ++u) {
    sides.rhs += std::move(HTerm()
                               .times_gauss(p - u, k - c)
                               .times_gauss(u - q, c - q + 1)
                               .times_q(small_d(s, StratumPair(p, u))));
  }
  sides.rhs += std::move(HTerm().times_gauss(p - q, k - c).times_q(small_d(s, pq)));
  sides.rhs += std::move(HTerm().times_gauss(p - q, c - q + 1));
  return sides;
}

inline Polynomial local_lhs(const SchubertParams& s, const StratumPair& pq) {
  return evaluate(local_sides(s, pq).lhs);
}

inline Polynomial local_rhs(const SchubertParams& s, const StratumPair& pq) {
  return evaluate(local_sides(s, pq).rhs);
}

inline IdentityVerdict check_local(const SchubertParams& s, const StratumPair& pq) {
  auto v = detail::make_verdict(IdentityKind::Local, s, local_sides(s, pq));
  v.pair = pq;
  return v;
}

// ---------------------------------------------------------------------------
// Global identity for S = Delta_(r+1):
//   P_j P_(l-i) / (P_i P_(j-i) P_(k-i) P_(l-k))
//     = P_(l-j) P_(k+j-i) / (P_(k-i) P_(l+i-j-k) P_k P_(j-i))
//       + sum_{s=1}^{min(k-i, k-c)}
//           P_(k-c) P_(l-j) P_(k+j-i-s)
//           / (P_s P_(k-c-s) P_(k-i-s) P_(l+i-j-k+s) P_k P_(j-i-s)) t^(2s(c-r+s))

inline IdentitySides global_sides(const SchubertParams& s) {
  detail::require_symbolic(s);
  const int i = s.i(), j = s.j(), k = s.k(), l = s.l(), r = s.r(), c = s.c();
  IdentitySides sides;
  sides.lhs += std::move(HTerm().times_p(j).times_p(l - i).over_p(i).over_p(j - i).over_p(k - i).over_p(l - k));
  sides.rhs += std::move(
      HTerm().times_p(l - j).times_p(k + j - i).over_p(k - i).over_p(l + i - j - k).over_p(k).over_p(j - i));
  const int top = std::min(k - i, k - c);
  for (int t = 1; t <= top; ++t) {
    sides.rhs += std::move(HTerm()
                               .times_p(k - c)
                               .times_p(l - j)
                               .times_p(k + j - i - t)
                               .over_p(t)
                               .over_p(k - c - t)
                               .over_p(k - i - t)
                               .over_p(l + i - j - k + t)
                               .over_p(k)
                               .over_p(j - i - t)
                               .times_q(static_cast<long>(t) * (c - r + t)));
  }
  return sides;
}

inline Polynomial global_lhs(const SchubertParams& s) { return evaluate(global_sides(s).lhs); }

inline Polynomial global_rhs(const SchubertParams& s) { return evaluate(global_sides(s).rhs); }

inline IdentityVerdict check_global(const SchubertParams& s) {
  return detail::make_verdict(IdentityKind::Global, s, global_sides(s));
}

// ---------------------------------------------------------------------------
// Specialization k - i = 2, written as F(i, j, c) = 1 with
//   F = h_(j+c-i-2) h_(j+c-i-1) h_i h_(i+1) / (h_j h_(j+1) h_(c-2) h_(c-1))
//     - t^(2(c-1)) h_1 h_(i-c+1) h_(j-i-1) / (h_(j+1) h_(c-2))
//     - t^(4c) h_(i-c) h_(i-c+1) h_(j-i-2) h_(j-i-1) / (h_(c-2) h_(c-1) h_j h_(j+1))

inline IdentitySides appendix_f_sides(int i, int j, int c, NegativeIndexRule rule = NegativeIndexRule::Reflection) {
  if (c < 2 || i < 1 || j < 1)
    throw InvalidParams("F(i,j,c) needs c >= 2 and positive i, j; got (" + std::to_string(i) + "," +
                        std::to_string(j) + "," + std::to_string(c) + ")");
  IdentitySides sides;
  sides.lhs += std::move(HTerm(1, rule)
                             .times_h(j + c - i - 2)
                             .times_h(j + c - i - 1)
                             .times_h(i)
                             .times_h(i + 1)
                             .over_h(j)
                             .over_h(j + 1)
                             .over_h(c - 2)
                             .over_h(c - 1));
  sides.lhs -= HTerm(1, rule).times_q(c - 1).times_h(1).times_h(i - c + 1).times_h(j - i - 1).over_h(j + 1).over_h(c - 2);
  sides.lhs -= HTerm(1, rule)
                   .times_q(2L * c)
                   .times_h(i - c)
                   .times_h(i - c + 1)
                   .times_h(j - i - 2)
                   .times_h(j - i - 1)
                   .over_h(c - 2)
                   .over_h(c - 1)
                   .over_h(j)
                   .over_h(j + 1);
  sides.rhs += HTerm(1, rule);
  return sides;
}

inline IdentityVerdict appendix_f(int i, int j, int c, NegativeIndexRule rule = NegativeIndexRule::Reflection) {
  auto sides = appendix_f_sides(i, j, c, rule);
  auto v = detail::make_verdict(IdentityKind::AppendixKi2, SchubertParams(i, j, i + 2, j + c), sides);
  v.triple = AppendixTriple{i, j, c};
  return v;
}

// Specialization k - c = 2, written as FF(i, j, r) = 1 with
//   FF = h_(j-1) h_(j-2) h_(r+i-1) h_(r+i-2) / (h_(i-1) h_(i-2) h_(r+j-1) h_(r+j-2))
//      - t^(2(i-1)) h_(r-1) h_1 h_(j-i-1) h_(i-1) h_(r+j-2)
//                   / (h_(r+j-1) h_(i-2) h_(i-1) h_(r+j-2))
//      - t^(4i) h_(r-2) h_(r-1) h_(j-i-2) h_(j-i-1) / (h_(r+j-2) h_(r+j-1) h_(i-2) h_(i-1))

inline IdentitySides appendix_ff_sides(int i, int j, int r, NegativeIndexRule rule = NegativeIndexRule::Reflection) {
  if (!(j >= i && i >= 2 && r >= 0))
    throw InvalidParams("FF(i,j,r) needs j >= i >= 2 and r >= 0; got (" + std::to_string(i) + "," +
                        std::to_string(j) + "," + std::to_string(r) + ")");
  IdentitySides sides;
  sides.lhs += std::move(HTerm(1, rule)
                             .times_h(j - 1)
                             .times_h(j - 2)
                             .times_h(r + i - 1)
                             .times_h(r + i - 2)
                             .over_h(i - 1)
                             .over_h(i - 2)
                             .over_h(r + j - 1)
                             .over_h(r + j - 2));
  sides.lhs -= HTerm(1, rule)
                   .times_q(i - 1)
                   .times_h(r - 1)
                   .times_h(1)
                   .times_h(j - i - 1)
                   .times_h(i - 1)
                   .times_h(r + j - 2)
                   .over_h(r + j - 1)
                   .over_h(i - 2)
                   .over_h(i - 1)
                   .over_h(r + j - 2);
  sides.lhs -= HTerm(1, rule)
                   .times_q(2L * i)
                   .times_h(r - 2)
                   .times_h(r - 1)
                   .times_h(j - i - 2)
                   .times_h(j - i - 1)
                   .over_h(r + j - 2)
                   .over_h(r + j - 1)
                   .over_h(i - 2)
                   .over_h(i - 1);
  sides.rhs += HTerm(1, rule);
  return sides;
}

inline IdentityVerdict appendix_ff(int i, int j, int r, NegativeIndexRule rule = NegativeIndexRule::Reflection) {
  auto sides = appendix_ff_sides(i, j, r, rule);
  const int k = r + i;
  auto v = detail::make_verdict(IdentityKind::AppendixKc2, SchubertParams(i, j, k, j + k - 2), sides);
  v.triple = AppendixTriple{i, j, r};
  return v;
}

}  // namespace schubert
