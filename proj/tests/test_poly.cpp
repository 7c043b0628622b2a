#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "newt/laurent.hpp"

using namespace newt;

namespace {
const char* kFixture = "x^9 + x^4*y^2 + x^2*y^4 + y^7 + z^7";

LaurentPoly random_laurent(Rng& rng, int max_terms, long long max_deg, bool allow_negative) {
  LaurentPoly p;
  int terms = static_cast<int>(rng.range(1, max_terms));
  for (int t = 0; t < terms; ++t) {
    Exp3 e{};
    for (int i = 0; i < 3; ++i)
      e[static_cast<std::size_t>(i)] = rng.range(allow_negative ? -max_deg : 0, max_deg);
    p.add_term(e, Rat(rng.range(1, 4) * (rng.below(2) ? 1 : -1)));
  }
  return p;
}
}  // namespace

TEST_CASE("parsing") {
  LaurentPoly f = LaurentPoly::parse(kFixture);
  CHECK(f.size() == 5);
  for (auto& [e, c] : f.terms()) CHECK(c == 1);
  CHECK(LaurentPoly::parse("0").is_zero());
  CHECK(LaurentPoly::parse("2*x - x - x").is_zero());
  CHECK(LaurentPoly::parse("3/2*x*y^2") == LaurentPoly::monomial({1, 2, 0}, rat(3, 2)));
  CHECK(LaurentPoly::parse("x*x*y") == LaurentPoly::monomial({2, 1, 0}, Rat(1)));
  CHECK_THROWS_AS(LaurentPoly::parse("x^-2"), ParseError);
  CHECK_THROWS_AS(LaurentPoly::parse("x + + y"), ParseError);
  CHECK_THROWS_AS(LaurentPoly::parse("w^2"), ParseError);
}

TEST_CASE("support") {
  LaurentPoly f = LaurentPoly::parse(kFixture);
  std::vector<Exp3> want{{9, 0, 0}, {4, 2, 0}, {2, 4, 0}, {0, 7, 0}, {0, 0, 7}};
  std::sort(want.begin(), want.end());
  CHECK(f.support() == want);
  CHECK(LaurentPoly().support().empty());
  CHECK(LaurentPoly::parse("x*y*z").support() == std::vector<Exp3>{{1, 1, 1}});
}

TEST_CASE("weight and principal part") {
  LaurentPoly f = LaurentPoly::parse(kFixture);
  CHECK(f.weight({3, 2, 2}) == 14);
  CHECK(f.weight({1, 0, 0}) == 0);
  CHECK(LaurentPoly::parse("x*y*z").weight({5, 7, 11}) == 23);
  CHECK_THROWS_AS(LaurentPoly().weight({1, 1, 1}), PrecondError);

  CHECK(f.principal_part({3, 2, 2}) == LaurentPoly::parse("x^2*y^4 + y^7 + z^7"));
  CHECK(f.principal_part({7, 7, 6}) == LaurentPoly::parse("x^4*y^2 + x^2*y^4 + z^7"));
  LaurentPoly mono = LaurentPoly::parse("5*x^2*z");
  CHECK(mono.principal_part({1, 1, 1}) == mono);
}

TEST_CASE("laurent division") {
  LaurentPoly fn = LaurentPoly::parse("x^2*y^4 + y^7 + z^7");
  CHECK(*fn.divide_exact(fn) == LaurentPoly::monomial({0, 0, 0}, Rat(1)));

  LaurentPoly shift = LaurentPoly::monomial({-1, 1, 0}, Rat(1));
  CHECK(*(fn * shift).divide_exact(fn) == shift);

  // a two-term principal part is never a multiple of the three-term one
  CHECK(!LaurentPoly::parse("x^2*y^4 + y^7").divide_exact(fn).has_value());
  CHECK_THROWS_AS(fn.divide_exact(LaurentPoly()), PrecondError);
}

TEST_CASE("weight is additive and principal parts are multiplicative") {
  Rng rng(7);
  for (int it = 0; it < 200; ++it) {
    LaurentPoly p = random_laurent(rng, 4, 5, false);
    LaurentPoly q = random_laurent(rng, 4, 5, false);
    if (p.is_zero() || q.is_zero()) continue;
    Weight w{rng.range(0, 6), rng.range(0, 6), rng.range(0, 6)};
    LaurentPoly prod = p * q;
    REQUIRE(!prod.is_zero());  // integral domain
    CHECK(prod.weight(w) == p.weight(w) + q.weight(w));
    CHECK(prod.principal_part(w) == p.principal_part(w) * q.principal_part(w));
  }
}

TEST_CASE("division round-trip") {
  Rng rng(11);
  for (int it = 0; it < 200; ++it) {
    LaurentPoly h = random_laurent(rng, 3, 4, true);
    LaurentPoly f = random_laurent(rng, 3, 4, true);
    if (h.is_zero() || f.is_zero()) continue;
    auto q = (h * f).divide_exact(f);
    REQUIRE(q.has_value());
    CHECK(*q == h);
  }
}

TEST_CASE("parse of print is the identity") {
  Rng rng(13);
  for (int it = 0; it < 100; ++it) {
    LaurentPoly p = random_laurent(rng, 5, 6, false);
    CHECK(LaurentPoly::parse(p.str()) == p);
  }
  CHECK(LaurentPoly::parse(LaurentPoly().str()).is_zero());
}
