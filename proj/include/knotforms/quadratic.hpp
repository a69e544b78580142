#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "knotforms/matrix.hpp"
#include "knotforms/seifert.hpp"

namespace knotforms {

/// Signature p - n of a symmetric integer form, by exact congruence
/// diagonalization over Q. Throws DomainError if m is not symmetric.
int signature(const IntMatrix& m);

/// All diagonal entries even.
bool is_even(const IntMatrix& m);

using F2Vector = std::vector<std::uint8_t>;
/// Entries in {0, 1}.
using F2Matrix = Matrix<int>;

F2Matrix reduce_mod2(const IntMatrix& m);

/// b(x, y) over F_2.
int f2_pair(const F2Matrix& b, const F2Vector& x, const F2Vector& y);

/// Raised for a degenerate form; carries a nonzero vector of the radical.
class DegenerateFormError : public Error {
 public:
  DegenerateFormError(const std::string& what, F2Vector radical) : Error(what), radical_(std::move(radical)) {}
  const F2Vector& radical_vector() const { return radical_; }

 private:
  F2Vector radical_;
};

/// Symplectic basis (e_i, f_i) of a nondegenerate alternating form over F_2,
/// by greedy pairing in index order.
std::vector<std::pair<F2Vector, F2Vector>> symplectic_basis_F2(const F2Matrix& b);

/// Quadratic refinement: q(x + y) = q(x) + q(y) + b(x, y), determined by its
/// values on the standard basis.
struct QuadraticFormF2 {
  F2Matrix bilinear;
  F2Vector values;

  QuadraticFormF2() = default;
  QuadraticFormF2(F2Matrix b, F2Vector v);

  std::size_t dimension() const { return values.size(); }
  int operator()(const F2Vector& x) const;
};

/// Sum of q(e_i) q(f_i) over a symplectic basis.
int arf(const QuadraticFormF2& q);

/// Arf of x -> A(x, x) mod 2 over the intersection form mod 2. Requires q odd.
int karl(const SeifertMatrix& s);

struct LevineCheck {
  Integer delta_at_minus_one;  // Conway-normalized Delta(-1)
  int karl = 0;
  bool holds = false;
};

/// Delta(-1) = 1 + 4 karl (mod 8).
LevineCheck levine_congruence_check(const SeifertMatrix& s);

}  // namespace knotforms
