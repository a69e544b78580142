#include <doctest.h>

#include <functional>
#include <optional>
#include <tuple>

#include "knotforms/even_dim.hpp"
#include "knotforms/links.hpp"
#include "support.hpp"

using namespace knotforms;
using namespace knotforms::testing;

namespace {

TorsionPresentation presentation(std::vector<Integer> d, IntMatrix a, IntMatrix b, int q) {
  TorsionPresentation p;
  p.orders = std::move(d);
  p.a = std::move(a);
  p.b = std::move(b);
  p.q = q;
  return p;
}

// Brute force over all matrices T with entries in [0, d_k) in column k:
// the t-action satisfies A T = B column-wise modulo d_k.
std::vector<IntMatrix> brute_force_t_actions(const TorsionPresentation& p) {
  const std::size_t n = p.alpha();
  std::vector<IntMatrix> out;
  IntMatrix t(n, n);
  std::function<void(std::size_t)> walk = [&](std::size_t cell) {
    if (cell == n * n) {
      IntMatrix at = p.a * t;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
          if (mod_floor(at(i, k) - p.b(i, k), p.orders[k]) != 0) return;
      out.push_back(t);
      return;
    }
    const std::size_t k = cell % n;
    for (Integer v = 0; v < p.orders[k]; ++v) {
      t(cell / n, k) = v;
      walk(cell + 1);
    }
  };
  walk(0);
  return out;
}

std::vector<int> search_order(int bound) {
  std::vector<int> v{0};
  for (int x = 1; x <= bound; ++x) {
    v.push_back(x);
    v.push_back(-x);
  }
  return v;
}

}  // namespace

TEST_CASE("handle data of the worked matrices") {
  HandlePresentation h1 = handle_data(SeifertMatrix(IntMatrix{{-1, 0}, {1, -1}}, 1));
  CHECK(h1.linking(0, 1) == 1);
  CHECK(h1.framing_domain == HandlePresentation::FramingDomain::none);
  CHECK(h1.framings.empty());

  HandlePresentation h2 = handle_data(SeifertMatrix(IntMatrix{{-1, 0}, {1, -1}}, 2));
  CHECK(h2.linking(0, 1) == 1);
  CHECK(h2.framing_domain == HandlePresentation::FramingDomain::integers);
  CHECK(h2.framings == std::vector<Integer>{-2, -2});

  HandlePresentation h5 = handle_data(SeifertMatrix(IntMatrix{{1, 0}, {1, 2}}, 5));
  CHECK(h5.framing_domain == HandlePresentation::FramingDomain::mod2);
  CHECK(h5.framings == std::vector<Integer>{1, 0});
  CHECK(handle_data(SeifertMatrix(IntMatrix{{3}}, 7)).framings.empty());

  HandlePresentation empty = handle_data(SeifertMatrix(IntMatrix(0, 0), 3));
  CHECK(empty.rank == 0);
}

TEST_CASE("handle linking matrices are valid linking matrices of the attaching spheres") {
  Rng rng(501);
  for (int trial = 0; trial < 100; ++trial) {
    int q = uniform(rng, 2, 8);
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 5));
    HandlePresentation h = handle_data(SeifertMatrix(random_matrix(rng, n, n, -3, 3), q));
    IntMatrix full = h.linking;
    const int sign = q % 2 == 0 ? 1 : -1;  // spheres of dimension q - 1
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) full(i, j) = sign * full(j, i);
    LinkingMatrix l = validate_linking_matrix(full, q - 1);
    CHECK(l.symmetry() == sign);
    CHECK(links_isotopic(l, l).kind != IsotopyVerdict::Kind::not_isotopic);
  }
}

TEST_CASE("linking matrix validation") {
  CHECK_NOTHROW(validate_linking_matrix(IntMatrix{{0, 1}, {1, 0}}, 3));
  CHECK_NOTHROW(validate_linking_matrix(IntMatrix{{0, 1}, {-1, 0}}, 2));
  CHECK_THROWS_AS(validate_linking_matrix(IntMatrix{{1, 0}, {0, 0}}, 3), InvalidLinkingMatrixError);
  CHECK_THROWS_AS(validate_linking_matrix(IntMatrix{{0, 1}, {1, 0}}, 2), InvalidLinkingMatrixError);
  try {
    validate_linking_matrix(IntMatrix{{0, 0, 0}, {0, 0, 2}, {0, 2, 0}}, 2);
    FAIL("accepted");
  } catch (const InvalidLinkingMatrixError& e) {
    CHECK(std::string(e.what()).find("(2,3)") != std::string::npos);
  }
}

TEST_CASE("isotopy verdicts") {
  auto m = validate_linking_matrix(IntMatrix{{0, 1}, {-1, 0}}, 2);
  auto n = validate_linking_matrix(IntMatrix{{0, 2}, {-2, 0}}, 2);
  CHECK(links_isotopic(m, m).kind == IsotopyVerdict::Kind::isotopic);
  CHECK(links_isotopic(m, n).kind == IsotopyVerdict::Kind::not_isotopic);
  auto c1 = validate_linking_matrix(IntMatrix{{0, 1}, {1, 0}}, 1);
  auto c2 = validate_linking_matrix(IntMatrix{{0, 2}, {2, 0}}, 1);
  CHECK(links_isotopic(c1, c2).kind == IsotopyVerdict::Kind::necessary_condition_fails);
  CHECK(links_isotopic(c1, c1).kind == IsotopyVerdict::Kind::necessary_condition_holds);
  CHECK_THROWS_AS(links_isotopic(m, validate_linking_matrix(IntMatrix{{0, 1}, {1, 0}}, 3)), DomainError);
}

TEST_CASE("torsion presentation relation") {
  auto ok = presentation({2, 3}, IntMatrix{{0, 3}, {0, 0}}, IntMatrix{{0, 0}, {2, 0}}, 2);
  PresentationValidation v = validate_presentation(ok);
  CHECK(v.relation_holds);
  // The relation alone does not make (1 - t) invertible here: A - B at t = 1
  // leaves Z/2 (+) Z/3.
  CHECK_FALSE(v.type_k);
  CHECK_FALSE(v.cokernel_at_one.empty());

  auto bad = presentation({2, 3}, IntMatrix{{0, 1}, {0, 0}}, IntMatrix{{0, 0}, {1, 0}}, 2);
  PresentationValidation w = validate_presentation(bad);
  CHECK_FALSE(w.relation_holds);
  REQUIRE_FALSE(w.violations.empty());
  CHECK(w.violations[0].i == 0);
  CHECK(w.violations[0].j == 1);
  CHECK(w.violations[0].value == -1);

  auto free = presentation({0, 0}, IntMatrix{{-1, 0}, {1, -1}}, IntMatrix{{-1, 1}, {0, -1}}, 1);
  CHECK(validate_presentation(free).valid());

  CHECK_THROWS_AS(validate_presentation(presentation({2}, IntMatrix(2, 2), IntMatrix(1, 1), 1)), DomainError);
}

TEST_CASE("relation check is consistent in both orders") {
  Rng rng(502);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    std::vector<Integer> d(n);
    for (auto& x : d) x = uniform(rng, 0, 4);
    int q = uniform(rng, 1, 4);
    auto p = presentation(d, random_matrix(rng, n, n, -2, 2), random_matrix(rng, n, n, -2, 2), q);
    PresentationValidation v = validate_presentation(p);
    bool holds = true;
    const int sign = q % 2 == 0 ? -1 : 1;  // (-1)^{q+1}
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i] == 0 && d[j] == 0) continue;
        Integer x = d[i] * p.a(i, j) + sign * d[j] * p.b(j, i);
        Integer y = d[j] * p.a(j, i) + sign * d[i] * p.b(i, j);
        if (x != 0 || y != 0) holds = false;
      }
    CHECK(v.relation_holds == holds);
  }
}

TEST_CASE("torsion form symmetry") {
  CHECK(torsion_symmetry_check(RatMatrix{{Rational(1, 2)}}, RatMatrix{{Rational(1, 2)}}, 2).transpose_relation);
  CHECK(torsion_symmetry_check(RatMatrix{{Rational(1, 3)}}, RatMatrix{{Rational(2, 3)}}, 1).transpose_relation);
  CHECK_FALSE(torsion_symmetry_check(RatMatrix{{Rational(1, 2)}}, RatMatrix{{Rational(0)}}, 2).transpose_relation);
  CHECK(mod_one(Rational(-2, 3)) == Rational(1, 3));
  CHECK(mod_one(Rational(7, 2)) == Rational(1, 2));

  SymmetryCheck s = torsion_symmetry_check(RatMatrix{{Rational(1, 3)}}, RatMatrix{{Rational(2, 3)}}, 1,
                                           RatMatrix{{Rational(-2, 3)}});
  CHECK(s.derived_symmetric);
  CHECK(s.derived_intersection == RatMatrix{{Rational(1, 3)}});  // -(1/3 + 1/3)
  CHECK(s.holds());
  CHECK_THROWS_AS(torsion_symmetry_check(RatMatrix(1, 1), RatMatrix(2, 2), 1), DomainError);
}

TEST_CASE("smallest valid torsion presentation found by bounded search") {
  // One generator, entries in [-3, 3], orders ascending; the first instance
  // with nontrivial torsion that is valid and minimal.
  std::optional<std::tuple<int, int, int, int>> first;
  for (int d = 2; d <= 9 && !first; ++d)
    for (int q : {1, 2})
      for (int a : search_order(3))
        for (int b : search_order(3)) {
          if (first) break;
          auto p = presentation({d}, IntMatrix{{a}}, IntMatrix{{b}}, q);
          PresentationValidation v = validate_presentation(p);
          if (v.valid() && v.minimal) first = std::tuple{d, q, a, b};
        }
  REQUIRE(first);
  CHECK(*first == std::tuple{3, 1, 1, -1});

  auto p = presentation({3}, IntMatrix{{1}}, IntMatrix{{-1}}, 1);
  ModuleStructure m = presented_module_structure(p);
  CHECK(m.torsion_cardinality == 3);
  CHECK(m.torsion_invariants == std::vector<Integer>{3});
  CHECK(m.t_action == IntMatrix{{2}});  // t acts as -1
  auto oracle = brute_force_t_actions(p);
  REQUIRE(oracle.size() == 1);
  CHECK(oracle[0] == m.t_action);
}

TEST_CASE("one-generator presentations with q even are never of type K") {
  for (int d = 1; d <= 9; ++d)
    for (int a : search_order(3))
      for (int b : search_order(3)) {
        auto v = validate_presentation(presentation({d}, IntMatrix{{a}}, IntMatrix{{b}}, 2));
        if (d > 1) CHECK_FALSE(v.valid());
      }
}

TEST_CASE("two-generator torsion module agrees with brute force") {
  auto p = presentation({3, 3}, IntMatrix{{1, 1}, {-1, 1}}, IntMatrix{{-1, 1}, {-1, -1}}, 1);
  PresentationValidation v = validate_presentation(p);
  REQUIRE(v.valid());
  REQUIRE(v.minimal);
  ModuleStructure m = presented_module_structure(p);
  CHECK(m.torsion_cardinality == 9);
  auto oracle = brute_force_t_actions(p);
  REQUIRE(oracle.size() == 1);
  CHECK(oracle[0] == m.t_action);
}

TEST_CASE("module structure of free and empty presentations") {
  auto free = presentation({0, 0}, IntMatrix{{-1, 0}, {1, -1}}, IntMatrix{{-1, 1}, {0, -1}}, 1);
  ModuleStructure m = presented_module_structure(free);
  CHECK(m.torsion_cardinality == 1);
  REQUIRE(m.free_divisors.size() == 1);
  CHECK(to_string(m.free_divisors[0]) == "t^2 - t + 1");

  ModuleStructure e = presented_module_structure(presentation({}, IntMatrix(0, 0), IntMatrix(0, 0), 1));
  CHECK(e.torsion_cardinality == 1);
  CHECK(e.free_divisors.empty());

  auto invalid = presentation({2, 3}, IntMatrix{{0, 1}, {0, 0}}, IntMatrix{{0, 0}, {1, 0}}, 2);
  CHECK_THROWS_AS(presented_module_structure(invalid), DomainError);
}

TEST_CASE("module structure is invariant under permutation of generators") {
  auto p = presentation({3, 3}, IntMatrix{{1, 1}, {-1, 1}}, IntMatrix{{-1, 1}, {-1, -1}}, 1);
  IntMatrix swap{{0, 1}, {1, 0}};
  auto pp = presentation({3, 3}, swap * p.a * swap, swap * p.b * swap, 1);
  ModuleStructure m = presented_module_structure(p), mp = presented_module_structure(pp);
  CHECK(m.torsion_cardinality == mp.torsion_cardinality);
  CHECK(m.torsion_invariants == mp.torsion_invariants);
  CHECK(swap * m.t_action * swap == mp.t_action);
}
