#pragma once

#include <map>
#include <string>
#include <utility>

#include "knotforms/arith.hpp"

namespace knotforms {

/// Finitely supported Laurent polynomial sum c_e t^e. Zero coefficients are
/// never stored, so the zero polynomial has empty support.
template <class T>
class Laurent {
 public:
  using Terms = std::map<int, T>;

  Laurent() = default;
  Laurent(const T& c) { add_term(0, c); }  // NOLINT: constants convert implicitly
  Laurent(int c) : Laurent(T(c)) {}        // NOLINT

  static Laurent monomial(const T& c, int exponent) {
    Laurent p;
    p.add_term(exponent, c);
    return p;
  }
  static Laurent t() { return monomial(T(1), 1); }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  /// Exponent bounds; only meaningful for nonzero polynomials.
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }
  int span() const { return is_zero() ? 0 : max_exponent() - min_exponent(); }

  T coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? T(0) : it->second;
  }
  const T& leading() const { return terms_.rbegin()->second; }
  const T& trailing() const { return terms_.begin()->second; }

  bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_.begin()->first == 0); }

  void add_term(int e, const T& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Multiplication by t^k.
  Laurent shifted(int k) const {
    Laurent p;
    for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + k, c);
    return p;
  }

  /// p(t^{-1}).
  Laurent reciprocal() const {
    Laurent p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
    return p;
  }

  /// Exact evaluation; negative powers require x to be invertible in T.
  T evaluate(const T& x) const {
    T sum(0);
    for (const auto& [e, c] : terms_) sum += c * power(x, e);
    return sum;
  }

  template <class U, class F>
  Laurent<U> map_coefficients(F&& f) const {
    Laurent<U> p;
    for (const auto& [e, c] : terms_) p.add_term(e, f(c));
    return p;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  Laurent& operator+=(const Laurent& b) {
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& b) {
    for (const auto& [e, c] : b.terms_) add_term(e, T(-c));
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(const Laurent& a) {
    Laurent p;
    for (const auto& [e, c] : a.terms_) p.terms_.emplace_hint(p.terms_.end(), e, T(-c));
    return p;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent p;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, T(ca * cb));
    return p;
  }
  Laurent& operator*=(const Laurent& b) { return *this = *this * b; }

 private:
  static T power(const T& x, int e) {
    T base = e < 0 ? T(T(1) / x) : x;
    unsigned n = e < 0 ? static_cast<unsigned>(-e) : static_cast<unsigned>(e);
    T r(1);
    while (n) {
      if (n & 1u) r *= base;
      base *= base;
      n >>= 1u;
    }
    return r;
  }

  Terms terms_;
};

using LaurentPolynomial = Laurent<Integer>;
using RatLaurent = Laurent<Rational>;

RatLaurent to_rational(const LaurentPolynomial& p);

/// Inverse of to_rational; throws DomainError on a fractional coefficient.
LaurentPolynomial to_integer(const RatLaurent& p);

/// Exact quotient a / b in Z[t, t^-1]; throws DomainError if b does not divide a.
LaurentPolynomial divexact(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Euclidean division in Q[t] for ordinary polynomials (min exponent >= 0).
std::pair<RatLaurent, RatLaurent> divmod(const RatLaurent& a, const RatLaurent& b);

/// Monic gcd in Q[t] of ordinary polynomials; gcd(0, 0) = 0.
RatLaurent gcd(const RatLaurent& a, const RatLaurent& b);

/// Representative of p up to units of Q[t, t^-1]: min exponent 0 and monic.
RatLaurent monic_unit_normal(const RatLaurent& p);

/// Representative of p up to +-t^k: min exponent 0, positive leading coefficient.
LaurentPolynomial unit_normal(const LaurentPolynomial& p);

/// Content (positive gcd of coefficients); 0 for the zero polynomial.
Integer content(const LaurentPolynomial& p);

/// Renders in descending exponent order, e.g. "t - 1 + t^-1".
std::string to_string(const LaurentPolynomial& p, const std::string& var = "t");
std::string to_string(const RatLaurent& p, const std::string& var = "t");

}  // namespace knotforms
