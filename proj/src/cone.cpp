#include "newt/cone.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace newt {

int central_node(const NewtonPolyhedron& np) {
  for (int n = 0; n < np.num_compact; ++n) {
    const Facet& f = np.facet(n);
    bool ok = true;
    for (int axis = 0; axis < 3 && ok; ++axis) {
      long long mn = f.verts[0][static_cast<std::size_t>(axis)];
      for (auto& v : f.verts) mn = std::min(mn, v[static_cast<std::size_t>(axis)]);
      if (mn != 0) ok = false;
    }
    if (ok) return n;
  }
  return -1;
}

std::vector<int> tree_parents(const DualGraph& g, int n0) {
  if (!g.is_tree()) throw PrecondError("dual graph is not a tree");
  std::vector<int> parent(static_cast<std::size_t>(g.nodes), -2);
  std::deque<int> q{n0};
  parent[static_cast<std::size_t>(n0)] = -1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.adj[static_cast<std::size_t>(v)])
      if (parent[static_cast<std::size_t>(w)] == -2) {
        parent[static_cast<std::size_t>(w)] = v;
        q.push_back(w);
      }
  }
  return parent;
}

namespace {

Rat rdot(const Exp3& d, const RVec3& p) {
  return gl(d[0]) * p[0] + gl(d[1]) * p[1] + gl(d[2]) * p[2];
}

struct SegmentZ {
  bool empty = true;
  bool point = false;
  RVec3 a{Rat(0), Rat(0), Rat(0)};
  Rat mu;  // b = a + mu*d in units of the reference direction d
};

// F_a(Z) cap F_b(Z): a face cut by two independent equalities, hence a
// segment, a point, or empty; oriented along d
SegmentZ edge_face(const Model& m, const CyclePolyhedron& p, const Cycle& z, int na, int nb,
                   const Exp3& d) {
  SegmentZ s;
  std::vector<RVec3> pts;
  for (auto& v : p.vertices())
    if (dot(m.normal(na), v) == z[static_cast<std::size_t>(na)] &&
        dot(m.normal(nb), v) == z[static_cast<std::size_t>(nb)])
      pts.push_back(v);
  if (pts.empty()) return s;
  s.empty = false;
  RVec3 lo = pts[0], hi = pts[0];
  for (auto& q : pts) {
    if (rdot(d, q) < rdot(d, lo)) lo = q;
    if (rdot(d, q) > rdot(d, hi)) hi = q;
  }
  s.a = lo;
  Rat dd = rdot(d, to_rvec(d));
  s.mu = (rdot(d, hi) - rdot(d, lo)) / dd;
  // collinearity with d is forced by the two equalities
  RVec3 shouldbe = lo + s.mu * to_rvec(d);
  if (shouldbe != hi) throw InternalError("edge face not parallel to the diagram edge");
  s.point = (s.mu == 0);
  return s;
}

bool point_in_face(const Model& m, const CyclePolyhedron& p, const Cycle& z, int node,
                   const RVec3& q) {
  return p.contains(q) && dot(m.normal(node), q) == z[static_cast<std::size_t>(node)];
}

// conclusion of clause 2 at parameters (rho, s): the dilated facet lies in
// the cycle's facet
bool dilated_facet_inside(const Model& m, const CyclePolyhedron& p, const Cycle& z, int node,
                          const Rat& rho, const RVec3& u) {
  for (auto& v : m.np.facet(node).verts) {
    RVec3 q = rho * to_rvec(v) + u;
    if (!point_in_face(m, p, z, node, q)) return false;
  }
  return true;
}

}  // namespace

ConeCertificate cone_contains(const Model& m, const Cycle& z) {
  if (static_cast<int>(z.size()) != m.nodes()) throw PrecondError("cycle dimension mismatch");
  ConeCertificate cert;
  CyclePolyhedron full(m.np, z);

  // clause 1: the locally-cut face is nonempty and already the global face
  for (int n = 0; n < m.nodes(); ++n) {
    std::vector<int> a{n};
    CyclePolyhedron local(m.np, z, neighborhood(m.graph, a));
    auto floc = local.face(n);
    auto fglob = full.face(n);
    if (floc.empty() || floc != fglob) {
      cert.ok = false;
      cert.clause = 1;
      cert.node = n;
      cert.detail = floc.empty() ? "local face empty" : "local face differs from global face";
      return cert;
    }
  }

  // clause 2, both directions of every edge.  The hypothesis set in the
  // (rho, slide) plane is the triangle rho,s >= 0, rho + s <= mu; the
  // conclusion constraints are linear in (rho, s), so checking the triangle's
  // vertices decides containment.  Midpoints are re-checked as a guard.
  for (auto& e : m.graph.edges) {
    Exp3 d = e.v - e.u;
    for (int dir = 0; dir < 2; ++dir) {
      int n = dir == 0 ? e.a : e.b;
      int other = dir == 0 ? e.b : e.a;
      SegmentZ sz = edge_face(m, full, z, n, other, d);
      if (sz.empty || sz.point) continue;
      RVec3 base = to_rvec(e.u);
      auto u_of = [&](const Rat& rho, const Rat& s) { return sz.a + s * to_rvec(d) - rho * base; };
      std::array<std::pair<Rat, Rat>, 3> corners{{{Rat(0), Rat(0)}, {sz.mu, Rat(0)}, {Rat(0), sz.mu}}};
      bool corner_ok[3];
      for (int i = 0; i < 3; ++i) {
        auto [rho, s] = corners[static_cast<std::size_t>(i)];
        corner_ok[i] = dilated_facet_inside(m, full, z, n, rho, u_of(rho, s));
      }
      bool all_ok = corner_ok[0] && corner_ok[1] && corner_ok[2];
      for (int i = 0; i < 3; ++i) {
        auto [r1, s1] = corners[static_cast<std::size_t>(i)];
        auto [r2, s2] = corners[static_cast<std::size_t>((i + 1) % 3)];
        Rat rho = (r1 + r2) / 2, s = (s1 + s2) / 2;
        bool mid_ok = dilated_facet_inside(m, full, z, n, rho, u_of(rho, s));
        if (all_ok && !mid_ok) throw InternalError("clause-2 midpoint disagrees with vertices");
      }
      if (!all_ok) {
        for (int i = 0; i < 3; ++i)
          if (!corner_ok[i]) {
            auto [rho, s] = corners[static_cast<std::size_t>(i)];
            cert.ok = false;
            cert.clause = 2;
            cert.node = n;
            cert.other = other;
            cert.rho = rho;
            cert.u = u_of(rho, s);
            cert.detail = "dilated facet escapes the cycle facet";
            return cert;
          }
      }
    }
  }

  cert.ok = true;
  assert(lipman_contains(m.inter, z));
  return cert;
}

Cycle cone_sample(const Model& m, Rat eps) {
  int n0 = central_node(m.np);
  if (n0 < 0) throw PrecondError("no compact facet meets all three coordinate planes");
  auto parent = tree_parents(m.graph, n0);

  // BFS order
  std::vector<int> order{n0};
  std::vector<int> depth(static_cast<std::size_t>(m.nodes()), -1);
  depth[static_cast<std::size_t>(n0)] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : m.graph.adj[static_cast<std::size_t>(order[i])])
      if (depth[static_cast<std::size_t>(w)] < 0) {
        depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(order[i])] + 1;
        order.push_back(w);
      }

  for (int attempt = 0; attempt < 40; ++attempt, eps /= 2) {
    Cycle z(static_cast<std::size_t>(m.nodes()), Rat(0));
    bool failed = false;
    for (int v : order) {
      std::size_t sv = static_cast<std::size_t>(v);
      if (depth[sv] == 0) {
        z[sv] = rat(m.level(v));
      } else if (depth[sv] == 1) {
        z[sv] = rat(m.level(v)) - eps;
      } else {
        int g = parent[static_cast<std::size_t>(parent[sv])];
        std::vector<int> a{g};
        CyclePolyhedron local(m.np, z, neighborhood(m.graph, a));
        auto face = local.face(g);
        if (face.empty()) {
          failed = true;
          break;
        }
        Rat mn = dot(m.normal(v), face[0]);
        for (auto& p : face) mn = std::min(mn, dot(m.normal(v), p));
        z[sv] = mn - eps;
      }
    }
    if (failed) continue;
    if (cone_contains(m, z).ok) return z;
  }
  throw Error("cone_sample: no valid epsilon found");
}

bool check_dilation_containment(const Model& m, const Cycle& z, int node, const Rat& rho,
                                const RVec3& u) {
  CyclePolyhedron full(m.np, z);
  if (!dilated_facet_inside(m, full, z, node, rho, u))
    throw PrecondError("dilated facet does not lie in the cycle facet");
  for (auto& v : m.np.vertices) {
    RVec3 q = rho * to_rvec(v) + u;
    if (!full.contains(q)) return false;
  }
  return true;
}

std::vector<std::pair<Rat, RVec3>> dilation_params(const Model& m, const Cycle& z, int node) {
  CyclePolyhedron full(m.np, z);
  std::vector<std::pair<Rat, RVec3>> out;
  for (auto& e : m.graph.edges) {
    if (e.a != node && e.b != node) continue;
    int other = e.a == node ? e.b : e.a;
    Exp3 d = e.v - e.u;
    SegmentZ sz = edge_face(m, full, z, node, other, d);
    if (sz.empty || sz.point) continue;
    RVec3 base = to_rvec(e.u);
    std::array<std::pair<Rat, Rat>, 5> params{{{sz.mu, Rat(0)},
                                               {sz.mu / 2, Rat(0)},
                                               {sz.mu / 2, sz.mu / 2},
                                               {sz.mu / 3, sz.mu / 3},
                                               {sz.mu * Rat(2, 3), sz.mu / 4}}};
    for (auto& [rho, s] : params) {
      if (rho <= 0 || rho + s > sz.mu) continue;
      RVec3 u = sz.a + s * to_rvec(d) - rho * base;
      if (dilated_facet_inside(m, full, z, node, rho, u)) out.emplace_back(rho, u);
    }
  }
  return out;
}

}  // namespace newt
