#pragma once

#include <span>
#include <vector>

#include "newt/newton.hpp"

namespace newt {

// rational cycle in the lattice spanned by the compact facets
using Cycle = std::vector<Rat>;

using QMat = std::vector<std::vector<Rat>>;

// The rational intersection form on the node lattice: diagonal entries are
// solved from the linear relation tying each facet normal to its neighbors'
// normals, off-diagonal entries are t/alpha on edges.  dual[n] is the n-th
// column of -M^{-1}; pairing against the basis gives -delta.
struct IntersectionData {
  QMat m;
  std::vector<Rat> e;                 // diagonal, all negative
  std::vector<Cycle> dual;            // dual[n][k], entries all positive
  Rat det;                            // det(m)
};

IntersectionData build_intersection(const NewtonPolyhedron& np, const DualGraph& g);

bool is_negative_definite(const QMat& m);

// (Z, E_n) <= 0 for every node n
bool lipman_contains(const IntersectionData& d, const Cycle& z);

// pairing (Z, E_n)
Rat intersect_with_node(const IntersectionData& d, const Cycle& z, int n);

Rat det_qmat(QMat m);
// solves m * x = rhs; throws on singular input
Cycle solve_qmat(QMat m, Cycle rhs);

}  // namespace newt
