#include "knotforms/quadratic.hpp"

#include <numeric>

namespace knotforms {

int signature(const IntMatrix& input) {
  if (!input.is_symmetric()) throw DomainError("signature: form is not symmetric");
  RatMatrix m = to_rational(input);
  std::vector<std::size_t> live(m.rows());
  std::iota(live.begin(), live.end(), 0);
  int sig = 0;

  auto drop = [&](std::size_t idx) { live.erase(std::find(live.begin(), live.end(), idx)); };

  while (!live.empty()) {
    std::size_t pivot = m.rows();
    for (std::size_t i : live)
      if (m(i, i) != 0) {
        pivot = i;
        break;
      }
    if (pivot != m.rows()) {
      const Rational d = m(pivot, pivot);
      sig += d > 0 ? 1 : -1;
      drop(pivot);
      for (std::size_t r : live) {
        if (m(r, pivot) == 0) continue;
        const Rational f = m(r, pivot) / d;
        for (std::size_t c : live) m(r, c) -= f * m(pivot, c);
      }
      continue;
    }
    // Zero diagonal: split off a hyperbolic 2x2 block [[0, b], [b, 0]],
    // which has signature zero, and take the Schur complement.
    std::size_t pi = m.rows(), pj = m.rows();
    for (std::size_t i : live) {
      for (std::size_t j : live)
        if (m(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
      if (pi != m.rows()) break;
    }
    if (pi == m.rows()) break;
    const Rational b = m(pi, pj);
    drop(pi);
    drop(pj);
    std::vector<Rational> ci, cj;
    for (std::size_t r : live) {
      ci.push_back(m(r, pi));
      cj.push_back(m(r, pj));
    }
    for (std::size_t x = 0; x < live.size(); ++x)
      for (std::size_t y = 0; y < live.size(); ++y)
        m(live[x], live[y]) -= (ci[x] * cj[y] + cj[x] * ci[y]) / b;
  }
  return sig;
}

bool is_even(const IntMatrix& m) {
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (!mpz_even_p(m(i, i).get_mpz_t())) return false;
  return true;
}

F2Matrix reduce_mod2(const IntMatrix& m) {
  return m.map<int>([](const Integer& x) { return mpz_odd_p(x.get_mpz_t()) ? 1 : 0; });
}

int f2_pair(const F2Matrix& b, const F2Vector& x, const F2Vector& y) {
  int s = 0;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < b.cols(); ++j) s ^= y[j] & b(i, j);
  }
  return s;
}

namespace {

void add_into(F2Vector& v, const F2Vector& w) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] ^= w[i];
}

}  // namespace

std::vector<std::pair<F2Vector, F2Vector>> symplectic_basis_F2(const F2Matrix& b) {
  if (!b.is_square()) throw DomainError("symplectic_basis_F2: form is not square");
  const std::size_t n = b.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (b(i, i) & 1) throw DomainError("symplectic_basis_F2: form is not alternating (nonzero diagonal)");
    for (std::size_t j = 0; j < n; ++j)
      if ((b(i, j) & 1) != (b(j, i) & 1)) throw DomainError("symplectic_basis_F2: form is not symmetric mod 2");
  }
  std::vector<F2Vector> pool;
  for (std::size_t i = 0; i < n; ++i) {
    F2Vector v(n, 0);
    v[i] = 1;
    pool.push_back(std::move(v));
  }
  std::vector<std::pair<F2Vector, F2Vector>> basis;
  while (!pool.empty()) {
    F2Vector e = pool.front();
    pool.erase(pool.begin());
    auto partner = std::find_if(pool.begin(), pool.end(), [&](const F2Vector& v) { return f2_pair(b, e, v) == 1; });
    if (partner == pool.end()) {
      // e is orthogonal to the remaining pool and to every pair already split
      // off, hence to everything.
      std::string text;
      for (auto bit : e) text += bit ? '1' : '0';
      throw DegenerateFormError("degenerate form over F2: radical contains (" + text + ")", e);
    }
    F2Vector f = *partner;
    pool.erase(partner);
    for (auto& v : pool) {
      const int ve = f2_pair(b, v, e), vf = f2_pair(b, v, f);
      if (vf) add_into(v, e);
      if (ve) add_into(v, f);
    }
    basis.emplace_back(std::move(e), std::move(f));
  }
  return basis;
}

QuadraticFormF2::QuadraticFormF2(F2Matrix b, F2Vector v) : bilinear(std::move(b)), values(std::move(v)) {
  if (!bilinear.is_square() || bilinear.rows() != values.size())
    throw DomainError("QuadraticFormF2: bilinear form and values disagree in dimension");
}

int QuadraticFormF2::operator()(const F2Vector& x) const {
  int s = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!x[i]) continue;
    s ^= values[i] & 1;
    for (std::size_t j = i + 1; j < values.size(); ++j) s ^= x[j] & bilinear(i, j) & 1;
  }
  return s;
}

int arf(const QuadraticFormF2& q) {
  int sum = 0;
  for (const auto& [e, f] : symplectic_basis_F2(q.bilinear)) sum ^= q(e) & q(f);
  return sum;
}

int karl(const SeifertMatrix& s) {
  if (s.q() % 2 == 0) throw DomainError("karl: requires odd q, got q = " + std::to_string(s.q()));
  F2Vector values;
  for (std::size_t i = 0; i < s.rank(); ++i) values.push_back(mpz_odd_p(s.matrix()(i, i).get_mpz_t()) ? 1 : 0);
  return arf(QuadraticFormF2(reduce_mod2(intersection_form(s)), std::move(values)));
}

LevineCheck levine_congruence_check(const SeifertMatrix& s) {
  LevineCheck out;
  out.karl = karl(s);
  out.delta_at_minus_one = alexander_polynomial(s, Normalization::conway).evaluate(Integer(-1));
  out.holds = mod_floor(out.delta_at_minus_one - 1 - 4 * out.karl, Integer(8)) == 0;
  return out;
}

}  // namespace knotforms
