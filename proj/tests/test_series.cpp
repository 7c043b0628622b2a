#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "newt/series.hpp"

using namespace newt;

namespace {
MultiSeries from_terms(const Box& box, std::initializer_list<std::pair<std::vector<long long>, long long>> ts) {
  MultiSeries s;
  s.dim = box.dim();
  s.box = box;
  for (auto& [e, c] : ts) s.add(make_key(e), c);
  return s;
}
}  // namespace

TEST_CASE("expand_rational basics") {
  // (1 - t^2) / (1 - t) = 1 + t
  MultiSeries s = expand_rational(Box{{9}}, {{{0}, 1}, {{2}, -1}}, {{1}});
  CHECK(s == from_terms(Box{{9}}, {{{0}, 1}, {{1}, 1}}));

  // 1/(1 - t^(1,1)) on a box
  MultiSeries d = expand_rational(Box{{5, 5}}, {{{0, 0}, 1}}, {{1, 1}});
  CHECK(d.c.size() == 6);
  for (long long k = 0; k <= 5; ++k) CHECK(d.get(make_key({k, k})) == 1);

  CHECK_THROWS_AS(expand_rational(Box{{3}}, {{{0}, 1}}, {{0}}), PrecondError);
}

TEST_CASE("expansion is multiplicative") {
  Box box{{12, 12}};
  MultiSeries a = expand_rational(box, {{{0, 0}, 1}, {{3, 1}, -2}}, {{1, 2}});
  MultiSeries b = expand_rational(box, {{{1, 0}, 1}, {{0, 2}, 1}}, {{2, 1}});
  std::vector<SignedTerm> prod_num;
  // (1 - 2 t^(3,1)) * (t^(1,0) + t^(0,2)) expanded by hand
  prod_num.push_back({{1, 0}, 1});
  prod_num.push_back({{0, 2}, 1});
  prod_num.push_back({{4, 1}, -2});
  prod_num.push_back({{3, 3}, -2});
  MultiSeries prod = expand_rational(box, prod_num, {{1, 2}, {2, 1}});
  CHECK(ms_multiply(a, b, false) == prod);
}

TEST_CASE("poincare transform in one variable") {
  // h_k = k for k >= 1 gives the constant series 1
  MultiSeries h;
  h.dim = 1;
  h.box = Box{{10}};
  for (long long k = 0; k <= 10; ++k) h.add(make_key({k}), k);
  MultiSeries p = poincare_from_hilbert(h);
  for (long long k = 0; k <= 9; ++k) CHECK(p.get(make_key({k})) == 1);

  MultiSeries zero;
  zero.dim = 1;
  zero.box = Box{{10}};
  CHECK(poincare_from_hilbert(zero).c.empty());
}

TEST_CASE("group ring series and trivial part") {
  auto g = FiniteAbelianGroup::from_relations(1, IMat{{3}});
  Box box{{10}};
  GroupRingSeries a;
  a.dim = 1;
  a.box = box;
  a.grp = &g;
  // geometric series in (h t): trivial part keeps multiples of 3
  for (long long k = 0; k <= 10; ++k) a.add(make_key({k}), g.mul(g.generator(0), k), 1);
  MultiSeries t = trivial_part(a);
  CHECK(t.c.size() == 4);
  for (long long k = 0; k <= 10; k += 3) CHECK(t.get(make_key({k})) == 1);

  // the class-matched product agrees with multiply-then-extract
  GroupRingSeries b = a;
  CHECK(grs_trivial_product(a, b, false) == trivial_part(grs_multiply_serial(a, b)));
}

TEST_CASE("zeta of a one-node star") {
  // single node of degree 3, trivial group: (1 - t^d) / prod (1 - t^(d/alpha))
  auto g = FiniteAbelianGroup::from_relations(3, IMat{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  std::vector<ZetaNode> nodes{{{Rat(30)}, 3, g.identity()}};
  std::vector<ZetaEnd> ends{{0, 2, g.identity()}, {0, 3, g.identity()}, {0, 5, g.identity()}};
  Box box{{60}};
  MultiSeries direct = zeta_reduced(g, nodes, ends, box, false);
  MultiSeries closed = expand_rational(box, {{{0}, 1}, {{30}, -1}}, {{15}, {10}, {6}});
  CHECK(direct == closed);
}

TEST_CASE("zeta discards non-lattice trivial-class exponents consistently") {
  // two ends with classes of order 2 on a half-integral exponent: only even
  // combinations survive, and they are integral
  auto g = FiniteAbelianGroup::from_relations(2, IMat{{2, 0}, {0, 2}, {1, 1}});
  std::vector<ZetaNode> nodes{{{rat(1, 2)}, 2, g.identity()}};
  std::vector<ZetaEnd> ends{{0, 1, g.generator(0)}, {0, 1, g.generator(1)}};
  Box box{{6}};
  MultiSeries direct = zeta_reduced(g, nodes, ends, box, false);
  for (auto& [k, v] : direct.c) CHECK(v != 0);
  // factor exponents are 1/2 and both generators coincide, so the surviving
  // coefficient at the integer m counts pairs j + j' = 2m
  for (long long k = 0; k <= 6; ++k) CHECK(direct.get(make_key({k})) == 2 * k + 1);
}
