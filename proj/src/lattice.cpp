#include "newt/lattice.hpp"

#include <algorithm>

namespace newt {

Rat det_qmat(QMat m) {
  std::size_t n = m.size();
  Rat det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rat f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

Cycle solve_qmat(QMat m, Cycle rhs) {
  std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw InternalError("singular matrix in solve");
    std::swap(m[p], m[c]);
    std::swap(rhs[p], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rat f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  Cycle x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

bool is_negative_definite(const QMat& m) {
  // leading principal minors alternate in sign starting negative
  std::size_t n = m.size();
  for (std::size_t k = 1; k <= n; ++k) {
    QMat sub(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[i][j];
    Rat d = det_qmat(std::move(sub));
    if (k % 2 == 1 && d >= 0) return false;
    if (k % 2 == 0 && d <= 0) return false;
  }
  return true;
}

IntersectionData build_intersection(const NewtonPolyhedron& np, const DualGraph& g) {
  int n = g.nodes;
  IntersectionData out;
  out.m.assign(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));

  for (auto& e : g.edges) {
    Rat v = rat(e.t, e.alpha);
    out.m[static_cast<std::size_t>(e.a)][static_cast<std::size_t>(e.b)] = v;
    out.m[static_cast<std::size_t>(e.b)][static_cast<std::size_t>(e.a)] = v;
  }

  // Solve the diagonal from e_n * l_n + sum t/alpha * l_{n'} = 0 (neighbors
  // taken over all facets, noncompact included).  The relation must hold in
  // every coordinate; a mismatch means the hull or the edge data is wrong, so
  // it is a hard error rather than a warning.
  for (int i = 0; i < n; ++i) {
    const Weight& li = np.facet(i).normal;
    RVec3 acc{Rat(0), Rat(0), Rat(0)};
    for (auto& e : g.edges) {
      if (e.a != i && e.b != i) continue;
      const Weight& lo = np.facet(e.a == i ? e.b : e.a).normal;
      Rat f = rat(e.t, e.alpha);
      for (int c = 0; c < 3; ++c) acc[static_cast<std::size_t>(c)] += f * gl(lo[static_cast<std::size_t>(c)]);
    }
    for (auto& l : g.legs) {
      if (l.node != i) continue;
      const Weight& lo = np.facet(l.facet).normal;
      Rat f = rat(l.t, l.alpha);
      for (int c = 0; c < 3; ++c) acc[static_cast<std::size_t>(c)] += f * gl(lo[static_cast<std::size_t>(c)]);
    }
    int pivot = 0;
    for (int c = 1; c < 3; ++c)
      if (std::llabs(li[static_cast<std::size_t>(c)]) > std::llabs(li[static_cast<std::size_t>(pivot)])) pivot = c;
    if (li[static_cast<std::size_t>(pivot)] == 0) throw InternalError("compact facet with zero normal entry");
    Rat ei = -acc[static_cast<std::size_t>(pivot)] / gl(li[static_cast<std::size_t>(pivot)]);
    for (int c = 0; c < 3; ++c)
      if (ei * gl(li[static_cast<std::size_t>(c)]) + acc[static_cast<std::size_t>(c)] != 0)
        throw InternalError("self-intersection relation inconsistent across coordinates");
    out.e.push_back(ei);
    out.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = ei;
  }

  if (!is_negative_definite(out.m)) throw InternalError("intersection form is not negative definite");
  out.det = det_qmat(out.m);

  for (int i = 0; i < n; ++i) {
    Cycle rhs(static_cast<std::size_t>(n), Rat(0));
    rhs[static_cast<std::size_t>(i)] = Rat(-1);
    Cycle d = solve_qmat(out.m, rhs);
    for (auto& v : d)
      if (v <= 0) throw InternalError("dual cycle with nonpositive entry");
    out.dual.push_back(std::move(d));
  }
  return out;
}

Rat intersect_with_node(const IntersectionData& d, const Cycle& z, int n) {
  Rat acc(0);
  for (std::size_t k = 0; k < z.size(); ++k) acc += d.m[static_cast<std::size_t>(n)][k] * z[k];
  return acc;
}

bool lipman_contains(const IntersectionData& d, const Cycle& z) {
  for (int n = 0; n < static_cast<int>(d.m.size()); ++n)
    if (intersect_with_node(d, z, n) > 0) return false;
  return true;
}

}  // namespace newt
