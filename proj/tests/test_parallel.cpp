// The OpenMP kernels must agree exactly with their serial references.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "newt/series.hpp"
#include "newt/suspension.hpp"
#include "newt/verify.hpp"

using namespace newt;

namespace {
MultiSeries random_series(Rng& rng, const Box& box, int terms) {
  MultiSeries s;
  s.dim = box.dim();
  s.box = box;
  for (int t = 0; t < terms; ++t) {
    std::vector<long long> e;
    for (int j = 0; j < box.dim(); ++j) e.push_back(rng.range(0, box.hi[static_cast<std::size_t>(j)]));
    s.add(make_key(e), rng.range(-4, 4));
  }
  return s;
}
}  // namespace

TEST_CASE("series multiplication: omp equals serial") {
  Rng rng(71);
  for (int it = 0; it < 10; ++it) {
    Box box{{40, 40, 40}};
    MultiSeries a = random_series(rng, box, 300);
    MultiSeries b = random_series(rng, box, 300);
    CHECK(ms_multiply_serial(a, b) == ms_multiply_omp(a, b));
  }
}

TEST_CASE("group-ring multiplication: omp equals serial") {
  auto g = FiniteAbelianGroup::from_relations(2, IMat{{6, 0}, {0, 4}});
  Rng rng(73);
  Box box{{30, 30}};
  for (int it = 0; it < 6; ++it) {
    GroupRingSeries a, b;
    a.dim = b.dim = 2;
    a.box = b.box = box;
    a.grp = b.grp = &g;
    for (int t = 0; t < 150; ++t) {
      std::vector<long long> e{rng.range(0, 30), rng.range(0, 30)};
      a.add(make_key(e), g.add(g.mul(g.generator(0), rng.range(0, 5)),
                               g.mul(g.generator(1), rng.range(0, 3))),
            rng.range(-3, 3));
      std::vector<long long> e2{rng.range(0, 30), rng.range(0, 30)};
      b.add(make_key(e2), g.mul(g.generator(0), rng.range(0, 5)), rng.range(-3, 3));
    }
    GroupRingSeries ps = grs_multiply_serial(a, b);
    GroupRingSeries po = grs_multiply_omp(a, b);
    CHECK(ps.c == po.c);
    CHECK(grs_trivial_product(a, b, true) == grs_trivial_product(a, b, false));
    CHECK(grs_trivial_product(a, b, false) == trivial_part(ps));
  }
}

TEST_CASE("zeta pipeline: parallel equals serial") {
  LaurentPoly f0 = LaurentPoly::parse("x^9 + x^4*y^2 + x^2*y^4 + y^7");
  SuspensionData sd = analyze_suspension(f0, 7);
  Model m = analyze(suspension_poly(f0, 7));
  Box box{{20, 70, 350}};
  CHECK(zeta_reduced_suspension(m, sd, box, true) == zeta_reduced_suspension(m, sd, box, false));
}

TEST_CASE("hilbert series: parallel loop is deterministic") {
  Model m = analyze(LaurentPoly::parse(kBrieskorn237));
  Box kbox{{60}};
  MultiSeries a = hilbert_ghat_series(m, kbox);
  MultiSeries b = hilbert_ghat_series(m, kbox);
  CHECK(a == b);
}
