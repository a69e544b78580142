#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace knotforms {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (bad shape, bad parameter).
class DomainError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

/// Floor-mod into [0, m) for m > 0.
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Bernoulli number in Hirzebruch's indexing: B_k = |B_{2k}| of the usual
/// signed sequence, so B_1 = 1/6, B_2 = 1/30, B_3 = 1/42. Requires k >= 1.
Rational bernoulli(int k);

}  // namespace knotforms
