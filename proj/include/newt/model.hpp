#pragma once

#include "newt/lattice.hpp"
#include "newt/laurent.hpp"
#include "newt/newton.hpp"

namespace newt {

// Heuristic stand-in for the rational-homology-sphere link condition: the
// dual graph is a tree, every compact facet is free of interior lattice
// points, and adjacent compact facets meet in a primitive segment.
struct GateReport {
  bool tree = false;
  bool no_interior_points = false;
  bool unit_segments = false;
  bool pass() const { return tree && no_interior_points && unit_segments; }
};

// The polynomial together with everything derived from its diagram.
struct Model {
  LaurentPoly f;
  NewtonPolyhedron np;
  DualGraph graph;
  IntersectionData inter;
  GateReport gate;

  int nodes() const { return graph.nodes; }
  const Weight& normal(int n) const { return np.facet(n).normal; }
  long long level(int n) const { return np.facet(n).level; }

  // (l_n(u))_n
  std::vector<long long> wt_point(const Exp3& u) const {
    std::vector<long long> v;
    for (int n = 0; n < nodes(); ++n) v.push_back(dot(normal(n), u));
    return v;
  }
  // facet levels = weight vector of f itself
  std::vector<long long> wt_f() const {
    std::vector<long long> v;
    for (int n = 0; n < nodes(); ++n) v.push_back(level(n));
    return v;
  }
};

// full pipeline: parse nothing, just assemble from a polynomial
Model analyze(const LaurentPoly& f);

GateReport rhs_gate(const NewtonPolyhedron& np, const DualGraph& g);

}  // namespace newt
