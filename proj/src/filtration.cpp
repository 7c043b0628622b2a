#include "newt/filtration.hpp"

#include <omp.h>

#include <algorithm>
#include <map>

#include "newt/cone.hpp"

namespace newt {

namespace {

NodeWeight reduce_loop(const Model& m, const LaurentPoly& g, int node, long long cap,
                       long long stop_at, bool poly_quotients_only) {
  if (g.is_zero()) throw PrecondError("weight of the zero class");
  const Weight& l = m.normal(node);
  LaurentPoly fn = m.f.principal_part(l);
  LaurentPoly cur = g;
  for (long long step = 0; step < cap; ++step) {
    long long w = cur.weight(l);
    if (stop_at >= 0 && w >= stop_at) return {w, false};
    LaurentPoly gn = cur.principal_part(l);
    auto h = gn.divide_exact(fn);
    if (!h) return {w, true};
    if (poly_quotients_only && h->has_negative_exponent()) return {w, true};
    cur = cur - (*h) * m.f;
    if (cur.is_zero()) throw PrecondError("element is a multiple of f: weight is infinite");
    if (cur.weight(l) <= w) throw InternalError("reduction step failed to raise the weight");
  }
  return {cur.weight(l), false};
}

}  // namespace

NodeWeight div_weight(const Model& m, const LaurentPoly& g, int node, long long cap,
                      long long stop_at) {
  return reduce_loop(m, g, node, cap, stop_at, false);
}

NodeWeight order_weight(const Model& m, const LaurentPoly& g, int node, long long cap,
                        long long stop_at) {
  return reduce_loop(m, g, node, cap, stop_at, true);
}

std::vector<NodeWeight> div_weights(const Model& m, const LaurentPoly& g, long long cap) {
  std::vector<NodeWeight> out;
  for (int n = 0; n < m.nodes(); ++n) out.push_back(div_weight(m, g, n, cap));
  return out;
}

std::vector<NodeWeight> order_weights(const Model& m, const LaurentPoly& g, long long cap) {
  std::vector<NodeWeight> out;
  for (int n = 0; n < m.nodes(); ++n) out.push_back(order_weight(m, g, n, cap));
  return out;
}

namespace {

// all u >= 0 with some active l_n(u) < k_n; optionally capped by total degree
std::vector<Exp3> low_monomials(const Model& m, std::span<const long long> k, long long degcap) {
  Exp3 bound{0, 0, 0};
  bool any = false;
  for (int n = 0; n < m.nodes(); ++n) {
    if (k[static_cast<std::size_t>(n)] < 1) continue;
    any = true;
    for (int i = 0; i < 3; ++i) {
      long long li = m.normal(n)[static_cast<std::size_t>(i)];
      bound[static_cast<std::size_t>(i)] =
          std::max(bound[static_cast<std::size_t>(i)], (k[static_cast<std::size_t>(n)] - 1) / li);
    }
  }
  std::vector<Exp3> out;
  if (!any) return out;
  Exp3 u;
  for (u[0] = 0; u[0] <= bound[0]; ++u[0])
    for (u[1] = 0; u[1] <= bound[1]; ++u[1])
      for (u[2] = 0; u[2] <= bound[2]; ++u[2]) {
        if (degcap >= 0 && u[0] + u[1] + u[2] > degcap) continue;
        bool low = false;
        for (int n = 0; n < m.nodes() && !low; ++n)
          if (k[static_cast<std::size_t>(n)] >= 1 &&
              dot(m.normal(n), u) < k[static_cast<std::size_t>(n)])
            low = true;
        if (low) out.push_back(u);
      }
  return out;
}

// sparse row echelon over Q; rows keyed by their leading column
class Echelon {
 public:
  using Row = std::vector<std::pair<int, Rat>>;  // sorted descending by column

  // reduce against current pivots; returns the remainder
  Row reduce(Row row) const {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) return row;
      row = axpy(row, it->second, -row.front().second);
    }
    return row;
  }

  bool insert(Row row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    Rat lead = row.front().second;
    for (auto& [c, v] : row) v /= lead;
    int col = row.front().first;
    pivots_.emplace(col, std::move(row));
    return true;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  static Row axpy(const Row& a, const Row& b, const Rat& s) {
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first > a[i].first) {
        out.emplace_back(b[j].first, s * b[j].second);
        ++j;
      } else {
        Rat v = a[i].second + s * b[j].second;
        if (v != 0) out.emplace_back(a[i].first, v);
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::map<int, Row> pivots_;
};

struct ImageProblem {
  std::vector<Exp3> low;
  std::map<Exp3, int> col;
  Echelon ech;
};

ImageProblem build_image_problem(const Model& m, std::span<const long long> k, long long degree) {
  ImageProblem p;
  p.low = low_monomials(m, k, degree);
  std::sort(p.low.begin(), p.low.end());
  for (std::size_t i = 0; i < p.low.size(); ++i) p.col[p.low[i]] = static_cast<int>(i);

  long long fdeg = m.f.max_total_degree();
  for (auto& u : p.low) {
    if (u[0] + u[1] + u[2] + fdeg > degree) continue;
    Echelon::Row row;
    for (auto& [w, cf] : m.f.terms()) {
      auto it = p.col.find(u + w);
      if (it != p.col.end()) row.emplace_back(it->second, cf);
    }
    std::sort(row.begin(), row.end(), [](auto& a, auto& b) { return a.first > b.first; });
    if (!row.empty()) p.ech.insert(std::move(row));
  }
  return p;
}

Echelon::Row project_low(const ImageProblem& p, const LaurentPoly& g) {
  Echelon::Row row;
  for (auto& [e, cf] : g.terms()) {
    auto it = p.col.find(e);
    if (it != p.col.end()) row.emplace_back(it->second, cf);
  }
  std::sort(row.begin(), row.end(), [](auto& a, auto& b) { return a.first > b.first; });
  return row;
}

Membership image_verdict_at(const Model& m, const LaurentPoly& g, std::span<const long long> k,
                            long long degree) {
  ImageProblem p = build_image_problem(m, k, degree);
  return p.ech.reduce(project_low(p, g)).empty() ? Membership::In : Membership::Out;
}

}  // namespace

Membership in_filtration(const Model& m, const LaurentPoly& g, std::span<const long long> k,
                         Filtration which, const FiltrationConfig& cfg) {
  if (static_cast<int>(k.size()) != m.nodes()) throw PrecondError("index dimension mismatch");
  bool all_trivial = true;
  for (auto v : k)
    if (v > 0) all_trivial = false;
  if (all_trivial) return Membership::In;
  if (g.is_zero()) return Membership::In;  // the zero class lies in every ideal

  if (which == Filtration::Divisorial || which == Filtration::Order) {
    bool inconclusive = false;
    for (int n = 0; n < m.nodes(); ++n) {
      long long kn = k[static_cast<std::size_t>(n)];
      if (kn <= 0) continue;
      NodeWeight w = which == Filtration::Divisorial ? div_weight(m, g, n, cfg.cap, kn)
                                                     : order_weight(m, g, n, cfg.cap, kn);
      if (w.value >= kn) continue;
      if (w.exact) return Membership::Out;
      inconclusive = true;
    }
    return inconclusive ? Membership::Inconclusive : Membership::In;
  }

  // image filtration: exact linear algebra, stabilized over degree increments
  long long d = std::max(cfg.degree, g.max_total_degree());
  Membership prev = image_verdict_at(m, g, k, d);
  for (d += cfg.degree_step; d <= cfg.degree_max; d += cfg.degree_step) {
    Membership cur = image_verdict_at(m, g, k, d);
    if (cur == prev) return cur;
    prev = cur;
  }
  return Membership::Inconclusive;
}

std::optional<LaurentPoly> lift(const Model& m, const LaurentPoly& g, std::span<const long long> k,
                                const FiltrationConfig& cfg, std::string* diagnostic) {
  auto fail = [&](const std::string& why) -> std::optional<LaurentPoly> {
    if (diagnostic) *diagnostic = why;
    return std::nullopt;
  };
  if (in_filtration(m, g, k, Filtration::Divisorial, cfg) != Membership::In)
    throw PrecondError("lift requires div(g) >= k");
  Cycle z;
  for (auto v : k) z.push_back(rat(v));
  if (!cone_contains(m, z).ok) throw PrecondError("lift requires k in the equality cone");

  int n0 = central_node(m.np);
  if (n0 < 0) throw PrecondError("no compact facet meets all three coordinate planes");
  auto parent = tree_parents(m.graph, n0);
  (void)parent;
  std::vector<int> order{n0};
  std::vector<bool> seen(static_cast<std::size_t>(m.nodes()), false);
  seen[static_cast<std::size_t>(n0)] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : m.graph.adj[static_cast<std::size_t>(order[i])])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        order.push_back(w);
      }

  LaurentPoly cur = g;
  std::vector<int> processed;
  for (int v : order) {
    const Weight& l = m.normal(v);
    LaurentPoly fn = m.f.principal_part(l);
    long long steps = 0;
    while (cur.weight(l) < k[static_cast<std::size_t>(v)]) {
      if (++steps > cfg.cap)
        return fail("reduction cap exhausted at node " + std::to_string(v));
      LaurentPoly gn = cur.principal_part(l);
      auto h = gn.divide_exact(fn);
      if (!h) throw InternalError("lift: principal part stopped dividing though div >= k");
      if (h->has_negative_exponent())
        return fail("quotient left the power-series ring at node " + std::to_string(v) +
                    " (equality-cone counterexample candidate)");
      long long w = cur.weight(l);
      cur = cur - (*h) * m.f;
      if (cur.is_zero()) throw PrecondError("lift of the zero class");
      if (cur.weight(l) <= w) throw InternalError("lift step failed to raise the weight");
      for (int p : processed)
        if (cur.weight(m.normal(p)) < k[static_cast<std::size_t>(p)])
          throw InternalError("lift regressed an achieved weight at node " + std::to_string(p));
    }
    processed.push_back(v);
  }

  // the output differs from the input by a multiple of f
  LaurentPoly diff = cur - g;
  if (!diff.is_zero() && !diff.divide_exact(m.f))
    throw InternalError("lift changed the residue class");
  return cur;
}

long long hilbert_ghat(const Model& m, std::span<const long long> k) {
  return static_cast<long long>(low_monomials(m, k, -1).size());
}

HilbertValue hilbert_image(const Model& m, std::span<const long long> k,
                           const FiltrationConfig& cfg) {
  auto value_at = [&](long long degree) {
    ImageProblem p = build_image_problem(m, k, degree);
    return static_cast<long long>(p.low.size() - p.ech.rank());
  };
  long long d = cfg.degree;
  long long prev = value_at(d);
  for (d += cfg.degree_step; d <= cfg.degree_max; d += cfg.degree_step) {
    long long cur = value_at(d);
    if (cur == prev) return {cur, true};
    prev = cur;
  }
  return {prev, false};
}

namespace {

std::vector<std::vector<long long>> box_grid(const Box& box) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> k(static_cast<std::size_t>(box.dim()), 0);
  for (;;) {
    out.push_back(k);
    int j = 0;
    for (; j < box.dim(); ++j) {
      if (++k[static_cast<std::size_t>(j)] <= box.hi[static_cast<std::size_t>(j)]) break;
      k[static_cast<std::size_t>(j)] = 0;
    }
    if (j == box.dim()) break;
  }
  return out;
}

}  // namespace

MultiSeries hilbert_ghat_series(const Model& m, const Box& box) {
  if (box.dim() != m.nodes()) throw PrecondError("box dimension mismatch");
  auto grid = box_grid(box);
  std::vector<long long> vals(grid.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < static_cast<long long>(grid.size()); ++i)
    vals[static_cast<std::size_t>(i)] = hilbert_ghat(m, grid[static_cast<std::size_t>(i)]);
  MultiSeries s;
  s.dim = box.dim();
  s.box = box;
  for (std::size_t i = 0; i < grid.size(); ++i) s.add(make_key(grid[i]), vals[i]);
  return s;
}

MultiSeries hilbert_image_series(const Model& m, const Box& box, const FiltrationConfig& cfg) {
  if (box.dim() != m.nodes()) throw PrecondError("box dimension mismatch");
  auto grid = box_grid(box);
  std::vector<long long> vals(grid.size());
  std::vector<char> ok(grid.size(), 1);
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < static_cast<long long>(grid.size()); ++i) {
    HilbertValue v = hilbert_image(m, grid[static_cast<std::size_t>(i)], cfg);
    vals[static_cast<std::size_t>(i)] = v.dim;
    ok[static_cast<std::size_t>(i)] = v.certified ? 1 : 0;
  }
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (!ok[i]) throw Error("hilbert value inconclusive at cap inside the requested box");
  MultiSeries s;
  s.dim = box.dim();
  s.box = box;
  for (std::size_t i = 0; i < grid.size(); ++i) s.add(make_key(grid[i]), vals[i]);
  return s;
}

}  // namespace newt
