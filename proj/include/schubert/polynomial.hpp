#pragma once

// Dense univariate polynomials in t with exact integer coefficients.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schubert/errors.hpp"

namespace schubert {

using Integer = boost::multiprecision::cpp_int;

/// Polynomial in one indeterminate t. Coefficients are stored in ascending
/// degree and the sequence never ends in a zero; the zero polynomial is the
/// empty sequence. Values are immutable through the public interface apart
/// from the compound assignment operators.
template <class Coeff>
class BasicPolynomial {
 public:
  using coefficient_type = Coeff;

  BasicPolynomial() = default;

  explicit BasicPolynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  BasicPolynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { normalize(); }

  static BasicPolynomial constant(Coeff c) { return BasicPolynomial(std::vector<Coeff>{std::move(c)}); }

  /// c * t^e
  static BasicPolynomial monomial(Coeff c, std::size_t e) {
    std::vector<Coeff> v(e + 1);
    v[e] = std::move(c);
    return BasicPolynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }

  /// Empty for the zero polynomial (degree minus infinity).
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  const Coeff& leading() const { return coeffs_.back(); }

  /// Coefficient of t^d; zero past the end.
  Coeff coefficient(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Coeff(0); }

  std::span<const Coeff> coefficients() const { return coeffs_; }

  friend bool operator==(const BasicPolynomial&, const BasicPolynomial&) = default;

  BasicPolynomial& operator+=(const BasicPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t d = 0; d < other.coeffs_.size(); ++d) coeffs_[d] += other.coeffs_[d];
    normalize();
    return *this;
  }

  BasicPolynomial& operator-=(const BasicPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t d = 0; d < other.coeffs_.size(); ++d) coeffs_[d] -= other.coeffs_[d];
    normalize();
    return *this;
  }

  BasicPolynomial operator-() const {
    BasicPolynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Poincare polynomials are mostly even, so skipping zeros halves the work.
    std::vector<std::size_t> support;
    support.reserve(b.coeffs_.size());
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (b.coeffs_[j] != 0) support.push_back(j);
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      const Coeff& ai = a.coeffs_[i];
      if (ai == 0) continue;
      for (std::size_t j : support) out[i + j] += ai * b.coeffs_[j];
    }
    return BasicPolynomial(std::move(out));
  }

  BasicPolynomial& operator*=(const BasicPolynomial& other) { return *this = *this * other; }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using Polynomial = BasicPolynomial<Integer>;

template <class Coeff>
BasicPolynomial<Coeff> add(const BasicPolynomial<Coeff>& a, const BasicPolynomial<Coeff>& b) {
  return a + b;
}

template <class Coeff>
BasicPolynomial<Coeff> mul(const BasicPolynomial<Coeff>& a, const BasicPolynomial<Coeff>& b) {
  return a * b;
}

/// a * t^e
template <class Coeff>
BasicPolynomial<Coeff> shift(const BasicPolynomial<Coeff>& a, std::size_t e) {
  if (a.is_zero()) return {};
  std::vector<Coeff> v(e);
  v.insert(v.end(), a.coefficients().begin(), a.coefficients().end());
  return BasicPolynomial<Coeff>(std::move(v));
}

/// Quotient q with a = b*q. Throws DivisionByZero or InexactDivision.
template <class Coeff>
BasicPolynomial<Coeff> exact_div(const BasicPolynomial<Coeff>& a, const BasicPolynomial<Coeff>& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return {};
  const std::size_t db = *b.degree();
  if (*a.degree() < db) throw InexactDivision();

  std::vector<Coeff> rem(a.coefficients().begin(), a.coefficients().end());
  auto divisor = b.coefficients();
  const Coeff& lead = divisor.back();
  std::vector<Coeff> quot(rem.size() - db);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Coeff& top = rem[k + db];
    if (top == 0) continue;
    if (top % lead != 0) throw InexactDivision();
    Coeff factor = top / lead;
    for (std::size_t d = 0; d <= db; ++d) rem[k + d] -= factor * divisor[d];
    quot[k] = std::move(factor);
  }
  for (std::size_t d = 0; d < db; ++d)
    if (rem[d] != 0) throw InexactDivision();
  return BasicPolynomial<Coeff>(std::move(quot));
}

/// Sum of the coefficients, i.e. the value at t = 1.
template <class Coeff>
Coeff eval_at_one(const BasicPolynomial<Coeff>& a) {
  Coeff sum = 0;
  for (const auto& c : a.coefficients()) sum += c;
  return sum;
}

/// t^center * a(1/t). Throws CenterTooSmall when deg a > center.
template <class Coeff>
BasicPolynomial<Coeff> reverse(const BasicPolynomial<Coeff>& a, std::size_t center) {
  if (a.is_zero()) return {};
  if (*a.degree() > center)
    throw CenterTooSmall("reverse: degree " + std::to_string(*a.degree()) + " exceeds center " +
                         std::to_string(center));
  std::vector<Coeff> v(center + 1);
  auto c = a.coefficients();
  for (std::size_t d = 0; d < c.size(); ++d) v[center - d] = c[d];
  return BasicPolynomial<Coeff>(std::move(v));
}

/// True when the coefficient sequence is symmetric about center / 2.
template <class Coeff>
bool is_palindromic(const BasicPolynomial<Coeff>& a, std::size_t center) {
  if (!a.is_zero() && *a.degree() > center) return false;
  return reverse(a, center) == a;
}

/// Canonical text form: ascending terms "c0 + c1*t^e1 + ...", zero terms
/// omitted, unit coefficients omitted before t, "0" for the zero polynomial.
template <class Coeff>
std::ostream& operator<<(std::ostream& os, const BasicPolynomial<Coeff>& a) {
  auto c = a.coefficients();
  bool first = true;
  for (std::size_t d = 0; d < c.size(); ++d) {
    if (c[d] == 0) continue;
    const bool negative = c[d] < 0;
    Coeff mag = negative ? Coeff(-c[d]) : c[d];
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 't';
    if (d > 1) os << '^' << d;
  }
  if (first) os << '0';
  return os;
}

template <class Coeff>
std::string to_string(const BasicPolynomial<Coeff>& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

}  // namespace schubert
