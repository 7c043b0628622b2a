#pragma once

#include "newt/model.hpp"

namespace newt {

// Verdict of the membership test for the equality cone, with a replayable
// witness on failure: clause 1 names the offending node, clause 2 names the
// ordered edge and the (rho, u) dilation that lands the shared segment inside
// the cycle's segment while a facet vertex escapes.
struct ConeCertificate {
  bool ok = false;
  int clause = 0;
  int node = -1;
  int other = -1;
  Rat rho;
  RVec3 u{Rat(0), Rat(0), Rat(0)};
  std::string detail;
};

ConeCertificate cone_contains(const Model& m, const Cycle& z);

// Builds a member of the cone by the outward recursion from a facet meeting
// all three coordinate planes, validating the result and halving eps on
// failure (at most 40 times).
Cycle cone_sample(const Model& m, Rat eps);

// Whether rho*G(f) + u is contained in G(Z); requires the facet-level
// precondition rho*F_n(f) + u inside F_n(Z) and throws if it fails.
bool check_dilation_containment(const Model& m, const Cycle& z, int node, const Rat& rho,
                                const RVec3& u);

// Sampled (rho, u) pairs satisfying the clause-2 hypothesis at edges incident
// to `node` (vertices and edge midpoints of the parameter triangles).
std::vector<std::pair<Rat, RVec3>> dilation_params(const Model& m, const Cycle& z, int node);

// central facet choice: a compact facet whose closure meets all three
// coordinate planes; -1 if none exists
int central_node(const NewtonPolyhedron& np);

// geodesic parents on the tree rooted at n0 (-1 for the root); throws if the
// graph is not a tree
std::vector<int> tree_parents(const DualGraph& g, int n0);

}  // namespace newt
