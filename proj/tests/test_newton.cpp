#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "newt/model.hpp"

using namespace newt;

namespace {
const char* kFixture = "x^9 + x^4*y^2 + x^2*y^4 + y^7 + z^7";

Model fixture_model() { return analyze(LaurentPoly::parse(kFixture)); }

// brute-force half-space oracle: enumerate every primitive candidate normal
// on a grid large enough to contain all true facet normals, and compare the
// cut-out lattice sets on a test box
bool hull_matches_grid_oracle(const std::vector<Exp3>& support, long long coord_bound) {
  NewtonPolyhedron np = build_polyhedron(support);
  long long nb = 2 * coord_bound * coord_bound + 1;
  // min levels over the support for every grid functional
  std::vector<std::pair<Weight, long long>> grid;
  for (long long a = 0; a <= nb; ++a)
    for (long long b = 0; b <= nb; ++b)
      for (long long c = 0; c <= nb; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        if (std::gcd(a, std::gcd(b, c)) != 1) continue;
        Weight w{a, b, c};
        long long lvl = dot(w, support[0]);
        for (auto& s : support) lvl = std::min(lvl, dot(w, s));
        grid.push_back({w, lvl});
      }
  long long box = coord_bound + 3;
  Exp3 u;
  for (u[0] = 0; u[0] <= box; ++u[0])
    for (u[1] = 0; u[1] <= box; ++u[1])
      for (u[2] = 0; u[2] <= box; ++u[2]) {
        bool in_facets = np.in_polyhedron(u);
        bool in_grid = true;
        for (auto& [w, lvl] : grid)
          if (dot(w, u) < lvl) {
            in_grid = false;
            break;
          }
        if (in_facets != in_grid) return false;
      }
  return true;
}
}  // namespace

TEST_CASE("fixture polyhedron") {
  Model m = fixture_model();
  REQUIRE(m.np.num_compact == 3);
  CHECK(m.normal(0) == Weight{3, 2, 2});
  CHECK(m.normal(1) == Weight{7, 7, 6});
  CHECK(m.normal(2) == Weight{14, 35, 18});
  CHECK(m.level(0) == 14);
  CHECK(m.level(1) == 42);
  CHECK(m.level(2) == 126);
  for (int n = 0; n < 3; ++n) CHECK(all_positive(m.normal(n)));
  CHECK(is_convenient(m.np));
}

TEST_CASE("single facet from three axis points") {
  NewtonPolyhedron np = build_polyhedron(std::vector<Exp3>{{2, 0, 0}, {0, 3, 0}, {0, 0, 7}});
  REQUIRE(np.num_compact == 1);
  CHECK(np.facet(0).normal == Weight{21, 14, 6});
  CHECK(np.facet(0).level == 42);
  CHECK(interior_lattice_points(np.facet(0)) == 1);
}

TEST_CASE("orthant translate has no compact facet") {
  NewtonPolyhedron np = build_polyhedron(std::vector<Exp3>{{1, 1, 1}});
  CHECK(np.num_compact == 0);
  CHECK(!is_convenient(np));
  CHECK(np.vertices == std::vector<Exp3>{{1, 1, 1}});
}

TEST_CASE("fixture dual graph") {
  Model m = fixture_model();
  REQUIRE(m.graph.nodes == 3);
  // path 0 - 1 - 2
  REQUIRE(m.graph.edges.size() == 2);
  CHECK(m.graph.find_edge(0, 1) != nullptr);
  CHECK(m.graph.find_edge(1, 2) != nullptr);
  CHECK(m.graph.find_edge(0, 2) == nullptr);
  CHECK(m.graph.find_edge(0, 1)->t == 1);
  CHECK(m.graph.find_edge(1, 2)->t == 1);
  CHECK(m.graph.find_edge(0, 1)->alpha == 1);
  CHECK(m.graph.find_edge(1, 2)->alpha == 21);
  CHECK(m.graph.is_tree());

  // legs: node 0 carries the seven x-type legs (alpha 2) and one z-type leg
  CHECK(m.graph.leg_total == std::vector<long long>{8, 2, 2});
  CHECK(m.graph.degree == std::vector<long long>{9, 4, 3});
  long long x_legs = 0;
  for (auto& l : m.graph.legs)
    if (l.node == 0 && m.np.facet(l.facet).normal == Weight{1, 0, 0}) {
      x_legs += l.t;
      CHECK(l.alpha == 2);
    }
  CHECK(x_legs == 7);
}

TEST_CASE("lattice length") {
  CHECK(lattice_length({0, 7, 0}, {0, 0, 7}) == 7);
  CHECK(lattice_length({2, 4, 0}, {0, 0, 7}) == 1);
  CHECK(lattice_length({0, 0, 0}, {0, 0, 5}) == 5);
  CHECK_THROWS_AS(lattice_length({1, 2, 3}, {1, 2, 3}), PrecondError);
}

TEST_CASE("alpha index") {
  CHECK(alpha_index({3, 2, 2}, {7, 7, 6}) == 1);
  CHECK(alpha_index({7, 7, 6}, {14, 35, 18}) == 21);
  CHECK(alpha_index({1, 0, 0}, {0, 1, 0}) == 1);
  CHECK(alpha_index({5, 7, 25}, {3, 2, 4}) == 11);
  CHECK_THROWS_AS(alpha_index({2, 4, 6}, {1, 2, 3}), PrecondError);
  // symmetric and invariant under a unimodular change of coordinates
  Rng rng(3);
  for (int it = 0; it < 100; ++it) {
    Weight a{rng.range(0, 9), rng.range(0, 9), rng.range(1, 9)};
    Weight b{rng.range(1, 9), rng.range(0, 9), rng.range(0, 9)};
    if (is_zero(cross(a, b))) continue;
    CHECK(alpha_index(a, b) == alpha_index(b, a));
    // shear (x,y,z) -> (x, y+2x, z-x) acts on functionals unimodularly
    auto shear = [](const Weight& w) { return Weight{w[0] + 2 * w[1] - w[2], w[1], w[2]}; };
    CHECK(alpha_index(a, b) == alpha_index(shear(a), shear(b)));
  }
}

TEST_CASE("interior lattice points") {
  Model m = fixture_model();
  CHECK(interior_lattice_points(m.np.facet(0)) == 0);
  NewtonPolyhedron tri = build_polyhedron(std::vector<Exp3>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(interior_lattice_points(tri.facet(0)) == 0);
}

TEST_CASE("hull against the grid oracle on random supports") {
  Rng rng(17);
  for (int it = 0; it < 12; ++it) {
    std::set<Exp3> pts;
    int count = static_cast<int>(rng.range(1, 6));
    for (int i = 0; i < count; ++i)
      pts.insert({rng.range(0, 4), rng.range(0, 4), rng.range(0, 4)});
    std::vector<Exp3> support(pts.begin(), pts.end());
    CHECK(hull_matches_grid_oracle(support, 4));
  }
}

TEST_CASE("every support point satisfies the facet inequalities") {
  Model m = fixture_model();
  for (auto& s : m.np.support) {
    CHECK(m.np.in_polyhedron(s));
    for (auto& f : m.np.facets) CHECK(dot(f.normal, s) >= f.level);
  }
}

TEST_CASE("cycle polyhedron faces") {
  Model m = fixture_model();

  // zero cycle: the polyhedron is the orthant and every face is the origin
  Cycle zero(3, Rat(0));
  CyclePolyhedron p0(m.np, zero);
  for (int n = 0; n < 3; ++n) {
    auto f = p0.face(n);
    REQUIRE(f.size() == 1);
    CHECK(f[0] == RVec3{Rat(0), Rat(0), Rat(0)});
  }

  // the weight vector of f reproduces the diagram's facets
  Cycle wtf{Rat(14), Rat(42), Rat(126)};
  CyclePolyhedron pf(m.np, wtf);
  for (int n = 0; n < 3; ++n) {
    auto face = pf.face(n);
    std::set<RVec3> got(face.begin(), face.end());
    std::set<RVec3> want;
    for (auto& v : m.np.facet(n).verts) want.insert(to_rvec(v));
    CHECK(got == want);
  }

  // restricting to the middle node's neighborhood changes nothing here
  CyclePolyhedron pa(m.np, wtf, neighborhood(m.graph, std::vector<int>{1}));
  CHECK(pa.vertices() == pf.vertices());
}
