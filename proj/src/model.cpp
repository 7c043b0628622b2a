#include "newt/model.hpp"

namespace newt {

GateReport rhs_gate(const NewtonPolyhedron& np, const DualGraph& g) {
  GateReport r;
  r.tree = g.is_tree();
  r.no_interior_points = true;
  for (int n = 0; n < np.num_compact; ++n)
    if (interior_lattice_points(np.facet(n)) != 0) r.no_interior_points = false;
  r.unit_segments = true;
  for (auto& e : g.edges)
    if (e.t != 1) r.unit_segments = false;
  return r;
}

Model analyze(const LaurentPoly& f) {
  if (f.is_zero()) throw PrecondError("zero polynomial");
  if (f.has_negative_exponent()) throw PrecondError("polynomial with negative exponents");
  Model m;
  m.f = f;
  m.np = build_polyhedron(f.support());
  if (m.np.num_compact == 0) throw PrecondError("diagram has no compact facet");
  m.graph = dual_graph(m.np);
  m.inter = build_intersection(m.np, m.graph);
  m.gate = rhs_gate(m.np, m.graph);
  return m;
}

}  // namespace newt
