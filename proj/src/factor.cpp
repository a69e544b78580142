#include "knotforms/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <random>

namespace knotforms {

namespace {

// Dense integer polynomial, lowest degree first, no trailing zeros.
using ZPoly = std::vector<Integer>;
// Dense polynomial over F_p with coefficients in [0, p).
using FpPoly = std::vector<std::int64_t>;

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }
int degree(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly to_dense(const LaurentPolynomial& p) {
  ZPoly f(p.span() + 1);
  for (const auto& [e, c] : p.terms()) f[e - p.min_exponent()] = c;
  return f;
}

LaurentPolynomial to_laurent(const ZPoly& f) {
  LaurentPolynomial p;
  for (std::size_t i = 0; i < f.size(); ++i) p.add_term(static_cast<int>(i), f[i]);
  return p;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

// Exact division over Z; empty optional-like result signalled by `ok`.
bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  ZPoly rem = a;
  const int db = degree(b);
  quotient.assign(std::max(0, degree(a) - db + 1), Integer(0));
  for (int k = degree(rem); k >= db; --k) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer c = rem[k] / b.back();
    quotient[k - db] = c;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= c * b[j];
  }
  trim(rem);
  trim(quotient);
  return rem.empty();
}

Integer content_of(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f) g = gcd(g, c);
  return g;
}

ZPoly primitive_part(ZPoly f) {
  Integer g = content_of(f);
  if (g == 0) return f;
  if (f.back() < 0) g = -g;
  for (auto& c : f) c /= g;
  return f;
}

ZPoly primitive_from_rational(const RatLaurent& p) {
  Integer l = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly f(p.max_exponent() + 1);
  for (const auto& [e, c] : p.terms()) f[e] = Integer(c * l);
  trim(f);
  return primitive_part(std::move(f));
}

RatLaurent derivative(const RatLaurent& p) {
  RatLaurent d;
  for (const auto& [e, c] : p.terms())
    if (e != 0) d.add_term(e - 1, Rational(c * e));
  return d;
}

// Yun's square-free decomposition over Q; input primitive with f(0) != 0.
std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& f) {
  std::vector<std::pair<ZPoly, int>> out;
  RatLaurent p = to_rational(to_laurent(f));
  RatLaurent dp = derivative(p);
  RatLaurent a0 = gcd(p, dp);
  RatLaurent b = divmod(p, a0).first;
  RatLaurent c = divmod(dp, a0).first;
  RatLaurent d = c - derivative(b);
  for (int i = 1; b.span() > 0 || b.max_exponent() > 0; ++i) {
    RatLaurent a = gcd(b, d);
    if (a.max_exponent() > 0) out.emplace_back(primitive_from_rational(a), i);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - derivative(b);
  }
  return out;
}

// ---- arithmetic over F_p -------------------------------------------------

std::int64_t mod_p(const Integer& x, std::int64_t p) {
  return static_cast<std::int64_t>(mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p)));
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  return t < 0 ? t + p : t;
}

FpPoly fp_from(const ZPoly& f, std::int64_t p) {
  FpPoly g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) g[i] = mod_p(f[i], p);
  trim(g);
  return g;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, std::int64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] - b[i] + p) % p;
  trim(a);
  return a;
}

FpPoly fp_add(FpPoly a, const FpPoly& b, std::int64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
  trim(a);
  return a;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  trim(c);
  return c;
}

FpPoly fp_scale(FpPoly a, std::int64_t s, std::int64_t p) {
  for (auto& x : a) x = x * s % p;
  trim(a);
  return a;
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  FpPoly rem = a;
  const int db = degree(b);
  const std::int64_t inv = inv_mod(b.back(), p);
  FpPoly quot(std::max(0, degree(a) - db + 1), 0);
  for (int k = degree(rem); k >= db; --k) {
    if (rem[k] == 0) continue;
    std::int64_t c = rem[k] * inv % p;
    quot[k - db] = c;
    for (int j = 0; j <= db; ++j) rem[k - db + j] = ((rem[k - db + j] - c * b[j]) % p + p) % p;
  }
  trim(rem);
  trim(quot);
  return {quot, rem};
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b, std::int64_t p) { return fp_divmod(a, b, p).second; }

FpPoly fp_monic(const FpPoly& a, std::int64_t p) {
  if (a.empty()) return a;
  return fp_scale(a, inv_mod(a.back(), p), p);
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::int64_t p) {
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
std::pair<FpPoly, FpPoly> fp_bezout(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  FpPoly r0 = a, r1 = b;
  FpPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = fp_divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 is a nonzero constant.
  std::int64_t inv = inv_mod(r0[0], p);
  return {fp_scale(s0, inv, p), fp_scale(t0, inv, p)};
}

FpPoly fp_powmod(FpPoly base, const Integer& exponent, const FpPoly& modulus, std::int64_t p) {
  FpPoly result{1};
  base = fp_mod(base, modulus, p);
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = fp_mod(fp_mul(result, result, p), modulus, p);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = fp_mod(fp_mul(result, base, p), modulus, p);
  }
  return result;
}

FpPoly fp_derivative(const FpPoly& f, std::int64_t p) {
  FpPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<std::int64_t>(i % p) % p);
  trim(d);
  return d;
}

// Distinct-degree factorization of a monic square-free polynomial.
std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly f, std::int64_t p) {
  std::vector<std::pair<FpPoly, int>> out;
  const FpPoly x{0, 1};
  FpPoly h = x;
  for (int i = 1; 2 * i <= degree(f); ++i) {
    h = fp_powmod(h, Integer(p), f, p);
    FpPoly g = fp_gcd(f, fp_sub(h, x, p), p);
    if (degree(g) > 0) {
      out.emplace_back(g, i);
      f = fp_divmod(f, g, p).first;
      h = fp_mod(h, f, p);
    }
  }
  if (degree(f) > 0) out.emplace_back(f, degree(f));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting of a product of degree-d irreducibles.
void equal_degree(const FpPoly& g, int d, std::int64_t p, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (degree(g) == d) {
    out.push_back(g);
    return;
  }
  Integer exponent;
  mpz_ui_pow_ui(exponent.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  exponent = (exponent - 1) / 2;
  std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
  for (;;) {
    FpPoly a(degree(g));
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (degree(a) < 1) continue;
    FpPoly b = fp_sub(fp_powmod(a, exponent, g, p), FpPoly{1}, p);
    FpPoly u = fp_gcd(g, b, p);
    if (degree(u) > 0 && degree(u) < degree(g)) {
      equal_degree(u, d, p, rng, out);
      equal_degree(fp_divmod(g, u, p).first, d, p, rng, out);
      return;
    }
  }
}

// ---- Hensel lifting ------------------------------------------------------

ZPoly z_from_fp(const FpPoly& f) {
  ZPoly g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) g[i] = f[i];
  return g;
}

ZPoly z_mod(ZPoly f, const Integer& m) {
  for (auto& c : f) c = mod_floor(c, m);
  trim(f);
  return f;
}

ZPoly z_add_scaled(ZPoly a, const ZPoly& b, const Integer& s) {
  if (a.size() < b.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
  trim(a);
  return a;
}

// Lifts f = g*h (mod p), g monic, to a factorization modulo `modulus`.
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& f, const FpPoly& g0, const FpPoly& h0, std::int64_t p,
                                    const Integer& modulus) {
  auto [s, t] = fp_bezout(g0, h0, p);
  ZPoly g = z_from_fp(g0);
  ZPoly h = z_from_fp(h0);
  for (Integer m = p; m < modulus; m *= p) {
    ZPoly diff = z_add_scaled(f, mul(g, h), Integer(-1));
    FpPoly e;
    for (const auto& c : diff) e.push_back(mod_p(Integer(c / m), p));
    trim(e);
    if (e.empty()) continue;
    auto [q, r] = fp_divmod(fp_mul(t, e, p), g0, p);
    FpPoly dh = fp_add(fp_mul(s, e, p), fp_mul(q, h0, p), p);
    g = z_add_scaled(g, z_from_fp(r), m);
    h = z_add_scaled(h, z_from_fp(dh), m);
  }
  return {z_mod(g, modulus), z_mod(h, modulus)};
}

// Lifts f = lc(f) * prod(factors) (mod p) to monic factors modulo `modulus`.
void hensel_all(const ZPoly& f, std::vector<FpPoly> factors, std::int64_t p, const Integer& modulus,
                std::vector<ZPoly>& out) {
  if (factors.size() == 1) {
    Integer lc = f.back();
    Integer inv;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
    ZPoly g = f;
    for (auto& c : g) c *= inv;
    out.push_back(z_mod(g, modulus));
    return;
  }
  const std::size_t half = factors.size() / 2;
  std::vector<FpPoly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<FpPoly> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
  FpPoly g{1};
  for (const auto& u : left) g = fp_mul(g, u, p);
  FpPoly h{mod_p(f.back(), p)};
  for (const auto& u : right) h = fp_mul(h, u, p);
  auto [lg, lh] = hensel_pair(f, g, h, p, modulus);
  hensel_all(lg, std::move(left), p, modulus, out);
  hensel_all(lh, std::move(right), p, modulus, out);
}

// ---- Zassenhaus ----------------------------------------------------------

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Factors a primitive square-free polynomial with positive leading
// coefficient and nonzero constant term.
std::vector<ZPoly> factor_squarefree(ZPoly f) {
  if (degree(f) <= 1) return {f};
  // Pick, among a few admissible primes, the one with fewest modular factors.
  std::int64_t best_p = 0;
  std::size_t best_count = 0;
  int tried = 0;
  for (std::int64_t p = 3; tried < 6; p += 2) {
    if (!is_prime(p) || mod_p(f.back(), p) == 0) continue;
    FpPoly fp = fp_monic(fp_from(f, p), p);
    if (degree(fp_gcd(fp, fp_derivative(fp, p), p)) != 0) continue;
    std::size_t count = 0;
    for (const auto& [g, d] : distinct_degree(fp, p)) count += static_cast<std::size_t>(degree(g) / d);
    ++tried;
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_count = count;
    }
    if (count == 1) break;
  }
  if (best_count == 1) return {f};

  const std::int64_t p = best_p;
  std::mt19937_64 rng(0x5eed + static_cast<std::uint64_t>(p));
  std::vector<FpPoly> modular;
  for (const auto& [g, d] : distinct_degree(fp_monic(fp_from(f, p), p), p)) equal_degree(g, d, p, rng, modular);
  std::sort(modular.begin(), modular.end());

  // Landau-Mignotte style bound on the coefficients of lc(f) * (factor).
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm = sqrt(norm2) + 1;
  Integer bound = abs(f.back()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(degree(f)));
  Integer modulus = p;
  while (modulus <= 2 * bound) modulus *= p;

  std::vector<ZPoly> lifted;
  hensel_all(z_mod(f, modulus), modular, p, modulus, lifted);

  std::vector<ZPoly> found;
  const Integer half = modulus / 2;
  std::vector<std::size_t> alive(lifted.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;

  for (std::size_t size = 1; 2 * size <= alive.size();) {
    bool progressed = false;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      ZPoly v{f.back()};
      for (std::size_t i : pick) v = z_mod(mul(v, lifted[alive[i]]), modulus);
      for (auto& c : v)
        if (c > half) c -= modulus;
      trim(v);
      ZPoly w = primitive_part(v);
      ZPoly quotient;
      if (degree(w) > 0 && divide_exact(f, w, quotient)) {
        found.push_back(w);
        f = quotient;
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < alive.size(); ++i)
          if (std::find(pick.begin(), pick.end(), i) == pick.end()) rest.push_back(alive[i]);
        alive = std::move(rest);
        progressed = true;
        break;
      }
      // Next combination in lexicographic order.
      std::size_t k = size;
      while (k > 0 && pick[k - 1] == alive.size() - size + k - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t j = k; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!progressed) ++size;
  }
  if (degree(f) > 0) found.push_back(primitive_part(f));
  return found;
}

bool divides_monic(const ZPoly& f, const ZPoly& phi, ZPoly& quotient) { return divide_exact(f, phi, quotient); }

bool poly_less(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.span() != b.span()) return a.span() < b.span();
  for (int e = a.min_exponent(); e <= a.max_exponent(); ++e) {
    Integer ca = a.coeff(e), cb = b.coeff(e - a.min_exponent() + b.min_exponent());
    if (ca != cb) return ca < cb;
  }
  return false;
}

}  // namespace

LaurentPolynomial Factorization::product() const {
  LaurentPolynomial p = LaurentPolynomial::monomial(Integer(unit_sign) * content, unit_shift);
  for (const auto& [f, m] : factors)
    for (int i = 0; i < m; ++i) p *= f;
  return p;
}

long euler_phi(long n) {
  long result = n;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    while (n % d == 0) n /= d;
    result -= result / d;
  }
  if (n > 1) result -= result / n;
  return result;
}

LaurentPolynomial cyclotomic_polynomial(long n) {
  if (n < 1) throw DomainError("cyclotomic_polynomial: order must be >= 1");
  static std::mutex mutex;
  static std::map<long, LaurentPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // t^n - 1 divided by all proper-divisor cyclotomic factors.
  LaurentPolynomial phi = LaurentPolynomial::monomial(Integer(1), static_cast<int>(n)) - LaurentPolynomial(1);
  for (long d = 1; d < n; ++d)
    if (n % d == 0) phi = divexact(phi, cyclotomic_polynomial(d));
  std::lock_guard lock(mutex);
  cache.emplace(n, phi);
  return phi;
}

CyclotomicSplit split_cyclotomic(const LaurentPolynomial& p) {
  if (p.is_zero()) throw DomainError("split_cyclotomic: zero polynomial");
  CyclotomicSplit out;
  ZPoly f = to_dense(p);
  // phi(n) >= sqrt(n/2), so orders above 2*deg^2 cannot occur.
  const long deg = degree(f);
  for (long n = 1; deg > 0 && n <= 2 * deg * deg + 2; ++n) {
    if (euler_phi(n) > degree(f)) continue;
    ZPoly phi = to_dense(cyclotomic_polynomial(n));
    ZPoly q;
    while (degree(f) >= degree(phi) && divides_monic(f, phi, q)) {
      out.orders.push_back(n);
      f = q;
    }
  }
  out.remainder = to_laurent(f);
  out.complete = degree(f) == 0 && (f[0] == 1 || f[0] == -1);
  return out;
}

Factorization factor_int_poly(const LaurentPolynomial& p) {
  if (p.is_zero()) throw DomainError("factor_int_poly: cannot factor the zero polynomial");
  Factorization out;
  out.unit_shift = p.min_exponent();
  ZPoly f = to_dense(p);
  out.content = content_of(f);
  out.unit_sign = f.back() < 0 ? -1 : 1;
  f = primitive_part(std::move(f));

  std::map<int, std::vector<ZPoly>> by_multiplicity;
  if (degree(f) > 0) {
    for (auto& [g, m] : squarefree_decomposition(f)) {
      ZPoly rest = g;
      // Cyclotomic factors first; they split badly modulo small primes.
      CyclotomicSplit cyc = split_cyclotomic(to_laurent(rest));
      for (long n : cyc.orders) by_multiplicity[m].push_back(to_dense(cyclotomic_polynomial(n)));
      rest = primitive_part(to_dense(cyc.remainder));
      if (degree(rest) > 0)
        for (auto& h : factor_squarefree(rest)) by_multiplicity[m].push_back(primitive_part(h));
    }
  }
  for (auto& [m, list] : by_multiplicity)
    for (auto& g : list) out.factors.emplace_back(to_laurent(g), m);
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (poly_less(a.first, b.first)) return true;
    if (poly_less(b.first, a.first)) return false;
    return a.second < b.second;
  });

  if (out.product() != p) throw Error("factor_int_poly: internal error, factors do not reconstruct the input");
  return out;
}

}  // namespace knotforms
