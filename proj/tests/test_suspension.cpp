#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "newt/suspension.hpp"
#include "newt/verify.hpp"

using namespace newt;

TEST_CASE("golden suspension data") {
  LaurentPoly f0 = LaurentPoly::parse("x^9 + x^4*y^2 + x^2*y^4 + y^7");
  SuspensionData sd = analyze_suspension(f0, 7);
  REQUIRE(sd.r() == 3);
  CHECK(sd.s == std::vector<long long>{1, 2, 1});
  CHECK(sd.m == std::vector<long long>{14, 42, 126});
  CHECK(sd.sx == 7);
  CHECK(sd.ax == 2);
  CHECK(sd.sy == 1);
  CHECK(sd.ay == 2);
  CHECK(sd.sz == 4);
  CHECK(sd.alpha_z == std::vector<long long>{1, 7, 7});
  CHECK(h_order(sd) == 21952);
  CHECK(characteristic_polynomial(sd).value_at_one() == 21952);
  CHECK(suspension_group(sd).order() == 21952);
}

TEST_CASE("small suspensions") {
  SuspensionData e8 = analyze_suspension(LaurentPoly::parse("x^2 + y^3"), 5);
  CHECK(e8.r() == 1);
  CHECK(e8.s == std::vector<long long>{1});
  CHECK(e8.sx == 1);
  CHECK(e8.sy == 1);
  CHECK(e8.ax == 2);
  CHECK(e8.ay == 3);
  CHECK(e8.sz == 1);
  CHECK(h_order(e8) == 1);
  CHECK(characteristic_polynomial(e8).value_at_one() == 1);
  CHECK(suspension_group(e8).trivial());

  SuspensionData half = analyze_suspension(LaurentPoly::parse("x^2 + y^2"), 2);
  CHECK(half.s == std::vector<long long>{2});
  CHECK(half.sx == 2);
  CHECK(half.sy == 2);
  CHECK(!half.minimal);  // sx = N forces redundant legs
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(analyze_suspension(LaurentPoly::parse("x^2 + x*y"), 3), PrecondError);
  CHECK_THROWS_AS(analyze_suspension(LaurentPoly::parse("x^2 + y^3"), 1), PrecondError);
  CHECK_THROWS_AS(analyze_suspension(LaurentPoly::parse("x*z + y^2"), 3), PrecondError);
}

TEST_CASE("characteristic polynomial structure") {
  for (auto [f0, n] : std::initializer_list<std::pair<const char*, long long>>{
           {"x^9 + x^4*y^2 + x^2*y^4 + y^7", 7}, {"x^2 + y^3", 5}, {"x^3 + x*y^2 + y^4", 4}}) {
    SuspensionData sd = analyze_suspension(LaurentPoly::parse(f0), n);
    FactoredCharPoly cp = characteristic_polynomial(sd);
    Rat deg = cp.total_degree();
    CHECK(is_integer(deg));
    CHECK(deg >= 0);
    // the multiplicities cancel at t = 1; value_at_one throws otherwise
    CHECK(cp.value_at_one() > 0);
  }
}

TEST_CASE("top rows have the expected lattice index") {
  LaurentPoly f0 = LaurentPoly::parse("x^9 + x^4*y^2 + x^2*y^4 + y^7");
  SuspensionData sd = analyze_suspension(f0, 7);
  IMat top = relation_matrix_top(sd);
  Int det = determinant(top);
  Int want = 1;
  for (long long i = 0; i < sd.sx; ++i) want *= sd.ax * sd.sx;
  for (long long i = 0; i < sd.sy; ++i) want *= sd.ay * sd.sy;
  for (long long i = 0; i < sd.sz; ++i) want *= sd.n;
  CHECK(abs(det) == want);
}

TEST_CASE("closed form of the golden fixture") {
  Model m = analyze(LaurentPoly::parse(kSuspensionFixture));
  ZetaClosedForm cf = zeta_closed_form(m);
  CHECK(cf.wt_f == std::vector<long long>{14, 42, 126});
  CHECK(cf.wt_xyz[0] == std::vector<long long>{3, 7, 14});
  CHECK(cf.wt_xyz[1] == std::vector<long long>{2, 7, 35});
  CHECK(cf.wt_xyz[2] == std::vector<long long>{2, 6, 18});
  // wt f = N wt z
  for (int n = 0; n < 3; ++n)
    CHECK(cf.wt_f[static_cast<std::size_t>(n)] == 7 * cf.wt_xyz[2][static_cast<std::size_t>(n)]);
}

TEST_CASE("one-node closed form") {
  Model m = analyze(LaurentPoly::parse("x^2 + y^3 + z^5"));
  ZetaClosedForm cf = zeta_closed_form(m);
  CHECK(cf.wt_f == std::vector<long long>{30});
  CHECK(cf.wt_xyz[0] == std::vector<long long>{15});
  CHECK(cf.wt_xyz[1] == std::vector<long long>{10});
  CHECK(cf.wt_xyz[2] == std::vector<long long>{6});
  SuspensionData sd = analyze_suspension(LaurentPoly::parse("x^2 + y^3"), 5);
  Box box{{60}};
  CHECK(zeta_reduced_suspension(m, sd, box, false) == expand_closed_form(cf, box));
}

TEST_CASE("leg data of random diagrams matches the closed formulas") {
  Rng rng(41);
  int tested = 0;
  for (int i = 0; i < 8; ++i) {
    auto rs = random_suspension_diagram(rng);
    REQUIRE(rs.has_value());
    const SuspensionData& sd = rs->sd;
    int r = sd.r();
    for (int j = 0; j < r; ++j) {
      if (r == 1) continue;  // both end rules overlap on a single node
      long long want = sd.n;
      if (j == 0) want = sd.n / sd.sx;
      if (j == r - 1) want = sd.n / sd.sy;
      if (j == 0 && j == r - 1) continue;
      CHECK(sd.alpha_z[static_cast<std::size_t>(j)] == want);
    }
    // first-principles leg indices at the chain ends
    Model m = analyze(suspension_poly(rs->f0, rs->n));
    CHECK(alpha_index(sd.normals.front(), {1, 0, 0}) == sd.ax);
    CHECK(alpha_index(sd.normals.back(), {0, 1, 0}) == sd.ay);
    ++tested;
  }
  CHECK(tested == 8);
}

TEST_CASE("sampler determinism") {
  Rng a(99), b(99);
  auto ra = random_suspension_diagram(a);
  auto rb = random_suspension_diagram(b);
  REQUIRE(ra.has_value());
  REQUIRE(rb.has_value());
  CHECK(ra->f0 == rb->f0);
  CHECK(ra->n == rb->n);
}
