#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "newt/abelian.hpp"

using namespace newt;

TEST_CASE("smith form diagonal") {
  // invariant factors from the gcds of the k x k minors: 2, 4/2, 624/4
  IMat a{{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
  SmithForm s = smith_form(a);
  REQUIRE(s.rank == 3);
  CHECK(s.diag == std::vector<Int>{2, 2, 156});
  for (std::size_t i = 0; i + 1 < s.diag.size(); ++i)
    if (s.diag[i + 1] != 0) CHECK(s.diag[i + 1] % s.diag[i] == 0);
}

TEST_CASE("determinant") {
  CHECK(determinant(IMat{{2, 0}, {0, 3}}) == 6);
  CHECK(determinant(IMat{{1, 2}, {3, 4}}) == -2);
  CHECK(determinant(IMat{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
}

TEST_CASE("quotient group structure") {
  // Z^2 / <(2,0),(0,4)> = Z/2 x Z/4
  auto g = FiniteAbelianGroup::from_relations(2, IMat{{2, 0}, {0, 4}});
  CHECK(g.order() == 8);
  CHECK(g.invariant_factors() == std::vector<long long>{2, 4});
  auto a = g.generator(0), b = g.generator(1);
  CHECK(g.element_order(a) == 2);
  CHECK(g.element_order(b) == 4);
  CHECK(g.add(a, g.neg(a)) == g.identity());
  CHECK(g.mul(b, 4) == g.identity());
  CHECK(g.mul(b, 2) != g.identity());
}

TEST_CASE("identity relations give the trivial group") {
  auto g = FiniteAbelianGroup::from_relations(3, IMat{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(g.order() == 1);
  CHECK(g.trivial());
  CHECK(g.generator(0) == g.identity());
}

TEST_CASE("deficient relations are rejected") {
  CHECK_THROWS_AS(FiniteAbelianGroup::from_relations(2, IMat{{2, 4}}), PrecondError);
}

TEST_CASE("group laws on random elements") {
  auto g = FiniteAbelianGroup::from_relations(
      3, IMat{{6, 0, 0}, {0, 10, 0}, {0, 0, 15}, {3, 5, 0}});
  Rng rng(23);
  std::vector<FiniteAbelianGroup::Elem> pool{g.identity(), g.generator(0), g.generator(1),
                                             g.generator(2)};
  for (int it = 0; it < 200; ++it) {
    auto x = pool[rng.below(pool.size())];
    auto y = pool[rng.below(pool.size())];
    auto z = pool[rng.below(pool.size())];
    CHECK(g.add(x, y) == g.add(y, x));
    CHECK(g.add(g.add(x, y), z) == g.add(x, g.add(y, z)));
    CHECK(g.add(x, g.neg(x)) == g.identity());
    CHECK(g.mul(x, g.element_order(x)) == g.identity());
    pool.push_back(g.add(x, y));
  }
}
