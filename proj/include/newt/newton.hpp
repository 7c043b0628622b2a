#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "newt/laurent.hpp"
#include "newt/vec.hpp"

namespace newt {

// A facet of the Newton polyhedron conv(support + orthant).  The normal is
// the primitive inward functional; level is its minimum over the polyhedron.
// For compact facets, verts lists the polygon vertices in cyclic order.  For
// noncompact facets, verts lists the vertices of the bounded part and recede
// flags the coordinate directions contained in the facet's recession cone.
struct Facet {
  Weight normal{};
  long long level = 0;
  bool compact = false;
  std::vector<Exp3> verts;
  std::array<bool, 3> recede{false, false, false};
};

struct NewtonPolyhedron {
  std::vector<Exp3> support;
  std::vector<Exp3> vertices;  // vertices of the polyhedron (subset of support)
  std::vector<Facet> facets;   // compact facets first, each group sorted by normal
  int num_compact = 0;

  const Facet& facet(int i) const { return facets[static_cast<std::size_t>(i)]; }
  bool in_polyhedron(const Exp3& u) const;
  bool in_polyhedron(const RVec3& u) const;
};

// conv(support + R^3_{>=0}); support must be nonempty with nonnegative entries
NewtonPolyhedron build_polyhedron(std::span<const Exp3> support);

// the diagram meets all three coordinate axes
bool is_convenient(const NewtonPolyhedron& np);

// content (gcd of coordinate differences) of the segment [a, b]
long long lattice_length(const Exp3& a, const Exp3& b);

// index of the lattice spanned by two independent functionals inside its
// saturation: gcd of the 2x2 minors
long long alpha_index(const Weight& l1, const Weight& l2);

// lattice points strictly inside a compact facet's polygon
long long interior_lattice_points(const Facet& f);

// compact-compact adjacency; a < b are node indices
struct DualEdge {
  int a = 0, b = 0;
  long long t = 0, alpha = 0;
  Exp3 u{}, v{};  // the shared segment
};

// family of legs hanging off node `node` toward noncompact facet `facet`:
// t primitive boundary segments, each a leg with the same alpha
struct LegFamily {
  int node = 0;
  int facet = 0;
  long long t = 0, alpha = 0;
  Exp3 u{}, v{};
};

struct DualGraph {
  int nodes = 0;
  std::vector<DualEdge> edges;
  std::vector<LegFamily> legs;
  std::vector<std::vector<int>> adj;   // node -> adjacent nodes
  std::vector<long long> leg_total;    // |E_n|
  std::vector<long long> degree;       // delta_n = #compact neighbors + |E_n|
  bool is_tree() const;
  const DualEdge* find_edge(int a, int b) const;
};

DualGraph dual_graph(const NewtonPolyhedron& np);

// Polyhedron of a cycle: { u >= 0 : l_n(u) >= m_n for active nodes }, with
// exact vertex enumeration.  `active` restricts the node constraints (the
// orthant constraints always apply); nullopt means all nodes.
class CyclePolyhedron {
 public:
  CyclePolyhedron(const NewtonPolyhedron& np, std::span<const Rat> m,
                  std::optional<std::vector<int>> active = std::nullopt);

  bool contains(const RVec3& p) const;
  // tight set of node n's inequality; empty unless the level is attained
  std::vector<RVec3> face(int node) const;
  const std::vector<RVec3>& vertices() const { return verts_; }

 private:
  std::vector<Weight> normals_;  // node constraints actually used
  std::vector<Rat> levels_;
  std::vector<int> node_of_;     // node index per constraint
  std::vector<RVec3> verts_;
};

// nodes in A plus their neighbors
std::vector<int> neighborhood(const DualGraph& g, std::span<const int> a);

std::string dual_graph_dot(const NewtonPolyhedron& np, const DualGraph& g,
                           const std::vector<Rat>* self_intersections);

}  // namespace newt
