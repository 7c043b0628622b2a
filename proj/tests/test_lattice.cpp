#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "newt/model.hpp"

using namespace newt;

namespace {
const char* kFixture = "x^9 + x^4*y^2 + x^2*y^4 + y^7 + z^7";
const char* kNonSusp = "x^7 + y^5 + z^3 + x^2*z + y^3*z";
}  // namespace

TEST_CASE("fixture intersection data") {
  Model m = analyze(LaurentPoly::parse(kFixture));
  CHECK(m.inter.e == std::vector<Rat>{rat(-7, 2), rat(-11, 21), rat(-1, 42)});
  CHECK(m.inter.m[1][2] == rat(1, 21));
  CHECK(m.inter.m[0][1] == 1);
  CHECK(m.inter.m[0][2] == 0);
  CHECK(m.inter.det == rat(-1, 84));

  CHECK(m.inter.dual[0] == Cycle{rat(6, 7), Rat(2), Rat(4)});
  CHECK(m.inter.dual[1] == Cycle{Rat(2), Rat(7), Rat(14)});
  CHECK(m.inter.dual[2] == Cycle{Rat(4), Rat(14), Rat(70)});
}

TEST_CASE("non-suspension fixture intersection data") {
  Model m = analyze(LaurentPoly::parse(kNonSusp));
  REQUIRE(m.nodes() == 3);
  CHECK(m.normal(0) == Weight{3, 2, 3});
  CHECK(m.normal(1) == Weight{3, 2, 4});
  CHECK(m.normal(2) == Weight{5, 7, 25});
  // chain 2 - 1 - 0 in this normal ordering
  CHECK(m.graph.find_edge(1, 2) != nullptr);
  CHECK(m.graph.find_edge(0, 1) != nullptr);
  CHECK(m.graph.find_edge(0, 2) == nullptr);
  CHECK(m.graph.find_edge(1, 2)->alpha == 11);
  CHECK(m.graph.find_edge(0, 1)->alpha == 1);
  std::vector<Rat> want_e{rat(-4, 3), rat(-29, 22), rat(-3, 55)};
  CHECK(m.inter.e == want_e);
  CHECK(m.gate.pass());
}

TEST_CASE("dual cycles solve the defining equations") {
  for (const char* text : {kFixture, kNonSusp}) {
    Model m = analyze(LaurentPoly::parse(text));
    int n = m.nodes();
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        Rat acc(0);
        for (int k = 0; k < n; ++k)
          acc += m.inter.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                 m.inter.dual[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        CHECK(acc == (i == j ? Rat(-1) : Rat(0)));
      }
      for (auto& v : m.inter.dual[static_cast<std::size_t>(j)]) CHECK(v > 0);
    }
  }
}

TEST_CASE("divisor sum checks against the coordinate weight vectors") {
  Model m = analyze(LaurentPoly::parse(kFixture));
  // x: seven legs at node 0 with alpha 2
  Cycle div_x(3, Rat(0)), div_y(3, Rat(0)), div_z(3, Rat(0));
  for (auto& l : m.graph.legs) {
    const Weight& nf = m.np.facet(l.facet).normal;
    Cycle* target = nf == Weight{1, 0, 0}   ? &div_x
                    : nf == Weight{0, 1, 0} ? &div_y
                                            : &div_z;
    for (int k = 0; k < 3; ++k)
      (*target)[static_cast<std::size_t>(k)] +=
          rat(l.t, l.alpha) * m.inter.dual[static_cast<std::size_t>(l.node)][static_cast<std::size_t>(k)];
  }
  auto as_cycle = [&](Exp3 u) {
    Cycle c;
    for (auto v : m.wt_point(u)) c.push_back(rat(v));
    return c;
  };
  CHECK(div_x == as_cycle({1, 0, 0}));
  CHECK(div_y == as_cycle({0, 1, 0}));
  CHECK(div_z == as_cycle({0, 0, 1}));
}

TEST_CASE("negative definiteness") {
  Model m = analyze(LaurentPoly::parse(kFixture));
  CHECK(is_negative_definite(m.inter.m));
  CHECK(!is_negative_definite(QMat{{Rat(0)}}));
  CHECK(is_negative_definite(QMat{{Rat(-2), Rat(1)}, {Rat(1), Rat(-2)}}));
  CHECK(!is_negative_definite(QMat{{Rat(-2), Rat(3)}, {Rat(3), Rat(-2)}}));
  // one-node diagram
  Model one = analyze(LaurentPoly::parse("x^2 + y^3 + z^7"));
  REQUIRE(one.nodes() == 1);
  CHECK(one.inter.e[0] < 0);
}

TEST_CASE("lipman cone membership") {
  Model m = analyze(LaurentPoly::parse(kFixture));
  CHECK(lipman_contains(m.inter, Cycle(3, Rat(0))));
  for (int n = 0; n < 3; ++n) {
    CHECK(lipman_contains(m.inter, m.inter.dual[static_cast<std::size_t>(n)]));
    Cycle neg = m.inter.dual[static_cast<std::size_t>(n)];
    for (auto& v : neg) v = -v;
    CHECK(!lipman_contains(m.inter, neg));
  }
  // nonnegative combinations stay inside
  Rng rng(5);
  for (int it = 0; it < 50; ++it) {
    Cycle z(3, Rat(0));
    for (int n = 0; n < 3; ++n) {
      Rat c(rng.range(0, 5));
      for (int k = 0; k < 3; ++k)
        z[static_cast<std::size_t>(k)] += c * m.inter.dual[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }
    CHECK(lipman_contains(m.inter, z));
  }
}
