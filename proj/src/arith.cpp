#include "knotforms/arith.hpp"

#include <vector>

namespace knotforms {

// Akiyama-Tanigawa table; produces the signed B_n with B_1 = +1/2, of which
// we only read even indices.
Rational bernoulli(int k) {
  if (k < 1) throw DomainError("bernoulli: index must be >= 1 (Hirzebruch indexing has no B_0)");
  const int n = 2 * k;
  std::vector<Rational> a(n + 1);
  for (int m = 0; m <= n; ++m) {
    a[m] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) {
      a[j - 1] = j * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
  }
  return abs(a[0]);
}

}  // namespace knotforms
