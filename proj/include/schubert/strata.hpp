#pragma once

// Single-condition Schubert varieties
//   S = { V in G_k(C^l) : dim(V cap F) >= i },  dim F = j,
// with strata Delta_1 c ... c Delta_(r+1) = S, where Delta_p asks for
// dim(V cap F) >= i_p = k - p + 1.  Throughout r = k - i and c = l - j.

#include <compare>
#include <string>

#include "schubert/errors.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/qfactor.hpp"

namespace schubert {

enum class ParamClass { Geometric, SymbolicOnly, TrivialEdge, Invalid };

inline const char* to_string(ParamClass cls) {
  switch (cls) {
    case ParamClass::Geometric: return "GEOMETRIC";
    case ParamClass::SymbolicOnly: return "SYMBOLIC_ONLY";
    case ParamClass::TrivialEdge: return "TRIVIAL_EDGE";
    case ParamClass::Invalid: return "INVALID";
  }
  return "INVALID";
}

/// Geometric, symbolic-only and trivial-edge tuples all satisfy the symbolic
/// conditions under which the global identity is defined.
inline bool is_symbolic(ParamClass cls) { return cls != ParamClass::Invalid; }

class SchubertParams {
 public:
  constexpr SchubertParams(int i, int j, int k, int l) : i_(i), j_(j), k_(k), l_(l) {}

  constexpr int i() const { return i_; }
  constexpr int j() const { return j_; }
  constexpr int k() const { return k_; }
  constexpr int l() const { return l_; }
  constexpr int r() const { return k_ - i_; }
  constexpr int c() const { return l_ - j_; }

  friend constexpr auto operator<=>(const SchubertParams&, const SchubertParams&) = default;

 private:
  int i_, j_, k_, l_;
};

inline std::string to_string(const SchubertParams& s) {
  return "(i,j,k,l)=(" + std::to_string(s.i()) + "," + std::to_string(s.j()) + "," +
         std::to_string(s.k()) + "," + std::to_string(s.l()) + ")";
}

/// Index pair 0 < q < p into the stratification.
class StratumPair {
 public:
  constexpr StratumPair(int p, int q) : p_(p), q_(q) {
    if (q <= 0 || p <= q)
      throw IndexOutOfRange("stratum pair needs 0 < q < p, got (p,q)=(" + std::to_string(p) + "," +
                            std::to_string(q) + ")");
  }

  constexpr int p() const { return p_; }
  constexpr int q() const { return q_; }

  friend constexpr auto operator<=>(const StratumPair&, const StratumPair&) = default;

 private:
  int p_, q_;
};

inline ParamClass classify(const SchubertParams& s) {
  const int i = s.i(), j = s.j(), k = s.k(), l = s.l(), r = s.r(), c = s.c();
  if (0 < i && i < k && k <= j && j < l && 0 < r && r < c && c < k) return ParamClass::Geometric;
  if (0 <= i && i <= k && k <= j && 0 <= r && r <= c && c <= k) {
    if (r == 0 || c == r + i || i == 0 || i == j) return ParamClass::TrivialEdge;
    return ParamClass::SymbolicOnly;
  }
  return ParamClass::Invalid;
}

namespace detail {

inline void require_stratum(const SchubertParams& s, int p) {
  if (p < 1 || p > s.r() + 1)
    throw IndexOutOfRange("stratum index p=" + std::to_string(p) + " outside [1, " +
                          std::to_string(s.r() + 1) + "]");
}

}  // namespace detail

/// i_p = k - p + 1, the intersection dimension that defines Delta_p.
constexpr int intersection_dim(const SchubertParams& s, int p) { return s.k() - p + 1; }

/// m_p = dim Delta_p.
inline int dim_stratum(const SchubertParams& s, int p) {
  detail::require_stratum(s, p);
  return (s.k() + 1 - p) * (s.j() + p - s.k() - 1) + (p - 1) * (s.l() - s.k());
}

/// delta_pq = dim G_(p-q)(C^(k-c)); negative when that Grassmannian is empty.
constexpr int delta(const SchubertParams& s, const StratumPair& pq) {
  const int d = pq.p() - pq.q();
  return d * (s.k() - s.c() - d);
}

/// d_pq = (p-q)(c+1-q); the shift exponent is 2 d_pq.
constexpr int small_d(const SchubertParams& s, const StratumPair& pq) {
  return (pq.p() - pq.q()) * (s.c() + 1 - pq.q());
}

/// f_pq: H of T_pq = G_(p-q)(C^(k-c)).
inline const Polynomial& fibre_poly_t(const SchubertParams& s, const StratumPair& pq) {
  return gauss(pq.p() - pq.q(), s.k() - s.c());
}

/// H of F_pq = G_(i_p)(C^(i_q)).
inline const Polynomial& fibre_poly_f(const SchubertParams& s, const StratumPair& pq) {
  return gauss(intersection_dim(s, pq.p()), intersection_dim(s, pq.q()));
}

/// H of G_pq = G_(p-q)(C^(c-q+1)).
inline const Polynomial& fibre_poly_g(const SchubertParams& s, const StratumPair& pq) {
  return gauss(pq.p() - pq.q(), s.c() - pq.q() + 1);
}

/// H_p: Poincare polynomial of the resolution of Delta_p, which has the
/// cohomology of G_(i_p)(F) x G_(k-i_p)(C^(l-i_p)).
inline Polynomial resolution_poincare(const SchubertParams& s, int p) {
  detail::require_stratum(s, p);
  const int ip = intersection_dim(s, p);
  return gauss(ip, s.j()) * gauss(s.k() - ip, s.l() - ip);
}

/// I_p from the small resolution: H of G_(k-i_p)(C^(l-j)) x G_k(C^(k+j-i_p)).
inline Polynomial ih_closed_form(const SchubertParams& s, int p) {
  detail::require_stratum(s, p);
  const int ip = intersection_dim(s, p);
  return gauss(s.k() - ip, s.l() - s.j()) * gauss(s.k(), s.k() + s.j() - ip);
}

}  // namespace schubert
