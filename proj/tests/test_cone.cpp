#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "newt/cone.hpp"
#include "newt/verify.hpp"

using namespace newt;

namespace {
Model fixture() { return analyze(LaurentPoly::parse(kSuspensionFixture)); }
}  // namespace

TEST_CASE("zero cycle is accepted") {
  Model m = fixture();
  CHECK(cone_contains(m, Cycle(3, Rat(0))).ok);
}

TEST_CASE("nonzero cycles with a nonpositive coordinate are rejected") {
  Model m = fixture();
  CHECK(!cone_contains(m, Cycle{Rat(1), Rat(0), Rat(5)}).ok);
  CHECK(!cone_contains(m, Cycle{Rat(14), Rat(42), Rat(-1)}).ok);
  ConeCertificate c = cone_contains(m, Cycle{Rat(0), Rat(3), Rat(9)});
  CHECK(!c.ok);
  CHECK(c.clause == 1);
}

TEST_CASE("samples validate and scale") {
  Model m = fixture();
  Cycle z = cone_sample(m, rat(1, 64));
  CHECK(z[0] == Rat(14));  // the central value is pinned to the facet level
  CHECK(cone_contains(m, z).ok);
  CHECK(lipman_contains(m.inter, z));
  Cycle dbl = z;
  for (auto& v : dbl) v *= 2;
  CHECK(cone_contains(m, dbl).ok);
}

TEST_CASE("single facet diagram sample") {
  Model m = analyze(LaurentPoly::parse("x^2 + y^3 + z^7"));
  Cycle z = cone_sample(m, rat(1, 4));
  REQUIRE(z.size() == 1);
  CHECK(z[0] == Rat(42));
  CHECK(cone_contains(m, z).ok);
}

TEST_CASE("weight vector of f lies in the cone") {
  for (const char* text : {kSuspensionFixture, kNonSuspensionFixture}) {
    Model m = analyze(LaurentPoly::parse(text));
    Cycle z;
    for (auto v : m.wt_f()) z.push_back(rat(v));
    CHECK(cone_contains(m, z).ok);
  }
}

TEST_CASE("failure certificates replay") {
  Model m = fixture();
  ConeCertificate c = cone_contains(m, Cycle{Rat(1), Rat(0), Rat(5)});
  REQUIRE(!c.ok);
  REQUIRE(c.clause == 1);
  // replay: the local face at the witness node really is empty or different
  std::vector<int> a{c.node};
  CyclePolyhedron local(m.np, Cycle{Rat(1), Rat(0), Rat(5)}, neighborhood(m.graph, a));
  CyclePolyhedron full(m.np, Cycle{Rat(1), Rat(0), Rat(5)});
  CHECK((local.face(c.node).empty() || local.face(c.node) != full.face(c.node)));
}

TEST_CASE("dilation containment") {
  Model m = fixture();
  // rho = 1, u = 0 against the weight vector of f itself
  Cycle wtf{Rat(14), Rat(42), Rat(126)};
  for (int n = 0; n < 3; ++n)
    CHECK(check_dilation_containment(m, wtf, n, Rat(1), RVec3{Rat(0), Rat(0), Rat(0)}));

  // a huge dilation violates the facet-level precondition
  CHECK_THROWS_AS(
      check_dilation_containment(m, wtf, 0, Rat(1000000), RVec3{Rat(0), Rat(0), Rat(0)}),
      PrecondError);

  // parameters harvested from the clause-2 triangles of a sample
  Cycle z = cone_sample(m, rat(1, 8));
  int checked = 0;
  for (int n = 0; n < 3; ++n)
    for (auto& [rho, u] : dilation_params(m, z, n)) {
      CHECK(check_dilation_containment(m, z, n, rho, u));
      ++checked;
    }
  CHECK(checked > 0);
}

TEST_CASE("cone closure under addition") {
  Model m = fixture();
  Cycle a = cone_sample(m, rat(1, 2));
  Cycle b = cone_sample(m, rat(1, 16));
  Cycle sum(3);
  for (int i = 0; i < 3; ++i)
    sum[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
  CHECK(cone_contains(m, sum).ok);
}

TEST_CASE("integral cone points are usable") {
  Model m = fixture();
  auto ks = integral_cone_points(m, 5);
  CHECK(ks.size() >= 5);
  for (auto& k : ks) {
    Cycle z;
    for (auto v : k) z.push_back(rat(v));
    CHECK(cone_contains(m, z).ok);
    CHECK(lipman_contains(m.inter, z));
  }
}
