#include "knotforms/laurent.hpp"

#include <sstream>

namespace knotforms {

RatLaurent to_rational(const LaurentPolynomial& p) {
  return p.map_coefficients<Rational>([](const Integer& c) { return Rational(c); });
}

LaurentPolynomial to_integer(const RatLaurent& p) {
  return p.map_coefficients<Integer>([](const Rational& c) {
    if (!is_integral(c)) throw DomainError("polynomial has a non-integral coefficient " + c.get_str());
    return Integer(c.get_num());
  });
}

LaurentPolynomial divexact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return {};
  LaurentPolynomial rem = a;
  LaurentPolynomial quot;
  const int db = b.max_exponent();
  const Integer& lb = b.leading();
  while (!rem.is_zero() && rem.span() >= b.span()) {
    const int e = rem.max_exponent() - db;
    if (!mpz_divisible_p(rem.leading().get_mpz_t(), lb.get_mpz_t()))
      throw DomainError("divexact: polynomial division is not exact");
    Integer c = rem.leading() / lb;
    quot.add_term(e, c);
    rem -= LaurentPolynomial::monomial(c, e) * b;
  }
  if (!rem.is_zero()) throw DomainError("divexact: polynomial division is not exact");
  return quot;
}

std::pair<RatLaurent, RatLaurent> divmod(const RatLaurent& a, const RatLaurent& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if ((!a.is_zero() && a.min_exponent() < 0) || b.min_exponent() < 0)
    throw DomainError("divmod expects ordinary polynomials");
  RatLaurent quot;
  RatLaurent rem = a;
  const int db = b.max_exponent();
  while (!rem.is_zero() && rem.max_exponent() >= db) {
    const int e = rem.max_exponent() - db;
    Rational c = rem.leading() / b.leading();
    quot.add_term(e, c);
    rem -= RatLaurent::monomial(c, e) * b;
  }
  return {quot, rem};
}

RatLaurent gcd(const RatLaurent& a, const RatLaurent& b) {
  RatLaurent x = a;
  RatLaurent y = b;
  while (!y.is_zero()) {
    RatLaurent r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  Rational lead = x.leading();
  return x.map_coefficients<Rational>([&](const Rational& c) { return Rational(c / lead); });
}

RatLaurent monic_unit_normal(const RatLaurent& p) {
  if (p.is_zero()) return p;
  Rational lead = p.leading();
  return p.shifted(-p.min_exponent()).map_coefficients<Rational>([&](const Rational& c) {
    return Rational(c / lead);
  });
}

LaurentPolynomial unit_normal(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  LaurentPolynomial q = p.shifted(-p.min_exponent());
  return q.leading() < 0 ? -q : q;
}

Integer content(const LaurentPolynomial& p) {
  Integer g = 0;
  for (const auto& [e, c] : p.terms()) g = gcd(g, c);
  return g;
}

namespace {

template <class T>
std::string render(const Laurent<T>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const int e = it->first;
    T c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = c == 1;
    if (!unit || e == 0) os << c.get_str();
    if (e != 0) {
      if (!unit) os << '*';
      os << var;
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

}  // namespace

std::string to_string(const LaurentPolynomial& p, const std::string& var) { return render(p, var); }
std::string to_string(const RatLaurent& p, const std::string& var) { return render(p, var); }

}  // namespace knotforms
