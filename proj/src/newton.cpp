#include "newt/newton.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace newt {

bool NewtonPolyhedron::in_polyhedron(const Exp3& u) const {
  for (auto& f : facets)
    if (dot(f.normal, u) < f.level) return false;
  return true;
}

bool NewtonPolyhedron::in_polyhedron(const RVec3& u) const {
  for (int i = 0; i < 3; ++i)
    if (u[static_cast<std::size_t>(i)] < 0) return false;
  for (auto& f : facets)
    if (dot(f.normal, u) < rat(f.level)) return false;
  return true;
}

long long lattice_length(const Exp3& a, const Exp3& b) {
  if (a == b) throw PrecondError("lattice_length of a degenerate segment");
  return content(b - a);
}

long long alpha_index(const Weight& l1, const Weight& l2) {
  Exp3 minors = cross(l1, l2);
  long long g = content(minors);
  if (g == 0) throw PrecondError("alpha_index of dependent functionals");
  return g;
}

namespace {

// affine dimension of the face cut out by w: span of argmin support points
// plus recession directions e_i with w_i = 0
int face_dimension(std::span<const Exp3> support, const Weight& w, long long level) {
  std::vector<Exp3> dirs;
  Exp3 base{};
  bool have_base = false;
  for (auto& s : support) {
    if (dot(w, s) != level) continue;
    if (!have_base) {
      base = s;
      have_base = true;
    } else {
      dirs.push_back(s - base);
    }
  }
  if (!have_base) return -1;
  for (int i = 0; i < 3; ++i)
    if (w[static_cast<std::size_t>(i)] == 0) {
      Exp3 e{};
      e[static_cast<std::size_t>(i)] = 1;
      dirs.push_back(e);
    }
  // rank of dirs (all orthogonal to w, so rank <= 2)
  int rank = 0;
  Exp3 first{};
  for (auto& d : dirs) {
    if (is_zero(d)) continue;
    if (rank == 0) {
      first = d;
      rank = 1;
    } else if (!is_zero(cross(first, d))) {
      rank = 2;
      break;
    }
  }
  return rank;
}

// cyclic order of coplanar points: 2D hull (monotone chain) after dropping
// the coordinate where |normal| is largest
std::vector<Exp3> polygon_hull(std::vector<Exp3> pts, const Weight& normal) {
  int drop = 0;
  for (int i = 1; i < 3; ++i)
    if (std::llabs(normal[static_cast<std::size_t>(i)]) >
        std::llabs(normal[static_cast<std::size_t>(drop)]))
      drop = i;
  int ax = (drop + 1) % 3, ay = (drop + 2) % 3;
  auto px = [&](const Exp3& p) { return p[static_cast<std::size_t>(ax)]; };
  auto py = [&](const Exp3& p) { return p[static_cast<std::size_t>(ay)]; };
  auto cr = [&](const Exp3& o, const Exp3& a, const Exp3& b) {
    return (px(a) - px(o)) * (py(b) - py(o)) - (py(a) - py(o)) * (px(b) - px(o));
  };
  std::sort(pts.begin(), pts.end(), [&](const Exp3& a, const Exp3& b) {
    if (px(a) != px(b)) return px(a) < px(b);
    return py(a) < py(b);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Exp3> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cr(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cr(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

NewtonPolyhedron build_polyhedron(std::span<const Exp3> support) {
  if (support.empty()) throw PrecondError("empty support");
  for (auto& s : support)
    if (!all_nonneg(s)) throw PrecondError("support point with negative exponent");

  std::vector<Exp3> pts(support.begin(), support.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // Candidate facet normals.  A facet plane is spanned by support differences
  // and/or recession directions, so its normal shows up among:
  //   * cross products of two support differences,
  //   * cross products of a support difference and a coordinate direction,
  //   * the coordinate functionals themselves.
  std::set<Weight> cands;
  auto offer = [&](Exp3 n) {
    if (is_zero(n)) return;
    if (n[0] <= 0 && n[1] <= 0 && n[2] <= 0) n = -n;
    if (!all_nonneg(n)) return;  // mixed signs cannot support conv(S + orthant)
    cands.insert(primitive(n));
  };
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Exp3 d1 = pts[j] - pts[i];
      for (std::size_t k = j + 1; k < pts.size(); ++k) offer(cross(d1, pts[k] - pts[i]));
      for (int a = 0; a < 3; ++a) {
        Exp3 e{};
        e[static_cast<std::size_t>(a)] = 1;
        offer(cross(d1, e));
      }
    }
  offer({1, 0, 0});
  offer({0, 1, 0});
  offer({0, 0, 1});

  NewtonPolyhedron np;
  np.support = pts;
  for (auto& w : cands) {
    long long level = dot(w, pts[0]);
    for (auto& p : pts) level = std::min(level, dot(w, p));
    if (face_dimension(pts, w, level) != 2) continue;
    Facet f;
    f.normal = w;
    f.level = level;
    f.compact = all_positive({w[0], w[1], w[2]});
    std::vector<Exp3> on;
    for (auto& p : pts)
      if (dot(w, p) == level) on.push_back(p);
    f.verts = polygon_hull(std::move(on), w);
    for (int i = 0; i < 3; ++i) f.recede[static_cast<std::size_t>(i)] = (w[static_cast<std::size_t>(i)] == 0);
    np.facets.push_back(std::move(f));
  }

  std::stable_sort(np.facets.begin(), np.facets.end(), [](const Facet& a, const Facet& b) {
    if (a.compact != b.compact) return a.compact;
    return a.normal < b.normal;
  });
  np.num_compact = 0;
  for (auto& f : np.facets)
    if (f.compact) ++np.num_compact;

  // vertices: support points where the active normals span R^3
  for (auto& p : pts) {
    std::vector<Weight> active;
    for (auto& f : np.facets)
      if (dot(f.normal, p) == f.level) active.push_back(f.normal);
    bool rank3 = false;
    for (std::size_t i = 0; i < active.size() && !rank3; ++i)
      for (std::size_t j = i + 1; j < active.size() && !rank3; ++j) {
        Exp3 c = cross(active[i], active[j]);
        if (is_zero(c)) continue;
        for (std::size_t k = 0; k < active.size(); ++k)
          if (dot(active[k], c) != 0) {
            rank3 = true;
            break;
          }
      }
    if (rank3) np.vertices.push_back(p);
  }
  return np;
}

bool is_convenient(const NewtonPolyhedron& np) {
  for (int axis = 0; axis < 3; ++axis) {
    bool found = false;
    for (auto& p : np.support) {
      bool pure = p[static_cast<std::size_t>(axis)] > 0;
      for (int i = 0; i < 3 && pure; ++i)
        if (i != axis && p[static_cast<std::size_t>(i)] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

long long interior_lattice_points(const Facet& f) {
  if (!f.compact) throw PrecondError("interior_lattice_points of a noncompact facet");
  if (f.verts.size() < 3) return 0;
  Exp3 lo = f.verts[0], hi = f.verts[0];
  for (auto& v : f.verts)
    for (int i = 0; i < 3; ++i) {
      lo[static_cast<std::size_t>(i)] = std::min(lo[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i)]);
      hi[static_cast<std::size_t>(i)] = std::max(hi[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i)]);
    }
  // strictly inside the polygon: on the plane, strictly on the inner side of
  // every directed edge
  long long count = 0;
  Exp3 u;
  for (u[0] = lo[0]; u[0] <= hi[0]; ++u[0])
    for (u[1] = lo[1]; u[1] <= hi[1]; ++u[1])
      for (u[2] = lo[2]; u[2] <= hi[2]; ++u[2]) {
        if (dot(f.normal, u) != f.level) continue;
        bool strict = true;
        for (std::size_t i = 0; i < f.verts.size() && strict; ++i) {
          const Exp3& a = f.verts[i];
          const Exp3& b = f.verts[(i + 1) % f.verts.size()];
          // inward side test via the triple product with the facet normal
          Exp3 edge = b - a;
          Exp3 inward = cross(f.normal, edge);
          if (dot({inward[0], inward[1], inward[2]}, u - a) <= 0) strict = false;
        }
        if (strict) ++count;
      }
  return count;
}

bool DualGraph::is_tree() const {
  if (nodes == 0) return false;
  if (static_cast<int>(edges.size()) != nodes - 1) return false;
  std::vector<int> seen(static_cast<std::size_t>(nodes), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++visited;
        stack.push_back(w);
      }
  }
  return visited == nodes;
}

const DualEdge* DualGraph::find_edge(int a, int b) const {
  for (auto& e : edges)
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return &e;
  return nullptr;
}

DualGraph dual_graph(const NewtonPolyhedron& np) {
  if (np.num_compact < 1) throw PrecondError("dual graph needs at least one compact facet");
  DualGraph g;
  g.nodes = np.num_compact;
  g.adj.resize(static_cast<std::size_t>(g.nodes));
  g.leg_total.assign(static_cast<std::size_t>(g.nodes), 0);
  g.degree.assign(static_cast<std::size_t>(g.nodes), 0);

  std::set<std::pair<int, int>> seen;
  for (int n = 0; n < g.nodes; ++n) {
    const Facet& F = np.facet(n);
    std::size_t nv = F.verts.size();
    for (std::size_t i = 0; i < nv; ++i) {
      const Exp3& a = F.verts[i];
      const Exp3& b = F.verts[(i + 1) % nv];
      if (nv == 2 && i == 1) break;  // degenerate polygon (segment)
      // the unique other facet containing this edge
      int other = -1;
      for (int j = 0; j < static_cast<int>(np.facets.size()); ++j) {
        if (j == n) continue;
        const Facet& G = np.facet(j);
        if (dot(G.normal, a) == G.level && dot(G.normal, b) == G.level) {
          if (other != -1) throw InternalError("polyhedron edge on three facets");
          other = j;
        }
      }
      if (other == -1) throw InternalError("polyhedron edge on a single facet");
      long long t = lattice_length(a, b);
      long long alpha = alpha_index(F.normal, np.facet(other).normal);
      if (other < g.nodes) {
        int lo = std::min(n, other), hi = std::max(n, other);
        if (seen.insert({lo, hi}).second) {
          g.edges.push_back({lo, hi, t, alpha, a, b});
          g.adj[static_cast<std::size_t>(lo)].push_back(hi);
          g.adj[static_cast<std::size_t>(hi)].push_back(lo);
        }
      } else {
        g.legs.push_back({n, other, t, alpha, a, b});
        g.leg_total[static_cast<std::size_t>(n)] += t;
      }
    }
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  for (int n = 0; n < g.nodes; ++n)
    g.degree[static_cast<std::size_t>(n)] =
        static_cast<long long>(g.adj[static_cast<std::size_t>(n)].size()) +
        g.leg_total[static_cast<std::size_t>(n)];
  return g;
}

std::vector<int> neighborhood(const DualGraph& g, std::span<const int> a) {
  std::set<int> out(a.begin(), a.end());
  for (int n : a)
    for (int w : g.adj[static_cast<std::size_t>(n)]) out.insert(w);
  return {out.begin(), out.end()};
}

CyclePolyhedron::CyclePolyhedron(const NewtonPolyhedron& np, std::span<const Rat> m,
                                 std::optional<std::vector<int>> active) {
  if (static_cast<int>(m.size()) != np.num_compact)
    throw PrecondError("cycle has wrong number of coordinates");
  std::vector<int> idx;
  if (active) {
    idx = *active;
  } else {
    for (int i = 0; i < np.num_compact; ++i) idx.push_back(i);
  }
  for (int n : idx) {
    normals_.push_back(np.facet(n).normal);
    levels_.push_back(m[static_cast<std::size_t>(n)]);
    node_of_.push_back(n);
  }

  // vertex enumeration: intersect all triples of constraint planes
  // (orthant planes first), keep feasible solutions
  std::vector<std::array<Rat, 4>> planes;  // a.x = b rows
  for (int i = 0; i < 3; ++i) {
    std::array<Rat, 4> row{Rat(0), Rat(0), Rat(0), Rat(0)};
    row[static_cast<std::size_t>(i)] = 1;
    planes.push_back(row);
  }
  for (std::size_t i = 0; i < normals_.size(); ++i)
    planes.push_back({rat(normals_[i][0]), rat(normals_[i][1]), rat(normals_[i][2]), levels_[i]});

  std::set<std::array<std::string, 3>> dedupe;
  std::size_t np_count = planes.size();
  for (std::size_t i = 0; i < np_count; ++i)
    for (std::size_t j = i + 1; j < np_count; ++j)
      for (std::size_t k = j + 1; k < np_count; ++k) {
        const auto &A = planes[i], &B = planes[j], &C = planes[k];
        Rat det = A[0] * (B[1] * C[2] - B[2] * C[1]) - A[1] * (B[0] * C[2] - B[2] * C[0]) +
                  A[2] * (B[0] * C[1] - B[1] * C[0]);
        if (det == 0) continue;
        auto solve = [&](int col) {
          std::array<std::array<Rat, 3>, 3> M{{{A[0], A[1], A[2]}, {B[0], B[1], B[2]}, {C[0], C[1], C[2]}}};
          M[0][static_cast<std::size_t>(col)] = A[3];
          M[1][static_cast<std::size_t>(col)] = B[3];
          M[2][static_cast<std::size_t>(col)] = C[3];
          Rat d = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                  M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                  M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
          return d / det;
        };
        RVec3 p{solve(0), solve(1), solve(2)};
        if (!contains(p)) continue;
        if (dedupe.insert({rat_str(p[0]), rat_str(p[1]), rat_str(p[2])}).second) verts_.push_back(p);
      }
  std::sort(verts_.begin(), verts_.end());
}

bool CyclePolyhedron::contains(const RVec3& p) const {
  for (int i = 0; i < 3; ++i)
    if (p[static_cast<std::size_t>(i)] < 0) return false;
  for (std::size_t i = 0; i < normals_.size(); ++i)
    if (dot(normals_[i], p) < levels_[i]) return false;
  return true;
}

std::vector<RVec3> CyclePolyhedron::face(int node) const {
  std::vector<RVec3> out;
  for (std::size_t i = 0; i < node_of_.size(); ++i) {
    if (node_of_[i] != node) continue;
    for (auto& v : verts_)
      if (dot(normals_[i], v) == levels_[i]) out.push_back(v);
    return out;
  }
  throw PrecondError("face query for an inactive node");
}

std::string dual_graph_dot(const NewtonPolyhedron& np, const DualGraph& g,
                           const std::vector<Rat>* self_intersections) {
  std::ostringstream out;
  out << "graph dual {\n";
  for (int n = 0; n < g.nodes; ++n) {
    const Facet& f = np.facet(n);
    out << "  n" << n << " [label=\"l=" << str(f.normal) << " m=" << f.level;
    if (self_intersections) out << " e=" << rat_str((*self_intersections)[static_cast<std::size_t>(n)]);
    out << " legs=" << g.leg_total[static_cast<std::size_t>(n)] << "\"];\n";
  }
  for (int j = g.nodes; j < static_cast<int>(np.facets.size()); ++j)
    out << "  f" << j << " [shape=box,label=\"l=" << str(np.facet(j).normal) << "\"];\n";
  for (auto& e : g.edges)
    out << "  n" << e.a << " -- n" << e.b << " [label=\"t=" << e.t << " a=" << e.alpha << "\"];\n";
  for (auto& l : g.legs)
    out << "  n" << l.node << " -- f" << l.facet << " [style=dashed,label=\"t=" << l.t
        << " a=" << l.alpha << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace newt
