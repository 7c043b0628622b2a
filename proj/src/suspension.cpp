#include "newt/suspension.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace newt {

LaurentPoly suspension_poly(const LaurentPoly& f0, long long n) {
  LaurentPoly f = f0;
  f.add_term({0, 0, n}, Rat(1));
  return f;
}

SuspensionData analyze_suspension(const LaurentPoly& f0, long long n) {
  if (n <= 1) throw PrecondError("suspension degree must be at least 2");
  if (f0.is_zero()) throw PrecondError("zero plane polynomial");
  for (auto& [e, c] : f0.terms()) {
    if (e[2] != 0) throw PrecondError("plane polynomial involves z");
    if (e[0] < 0 || e[1] < 0) throw PrecondError("plane polynomial with negative exponents");
  }

  // plane diagram: convex chain of conv(supp + orthant) from the y-axis to
  // the x-axis
  std::vector<std::array<long long, 2>> pts;
  for (auto& [e, c] : f0.terms()) pts.push_back({e[0], e[1]});
  std::sort(pts.begin(), pts.end());
  // keep Pareto-minimal points (sorted by a ascending, so keep strict b drops)
  std::vector<std::array<long long, 2>> pareto;
  long long besty = -1;
  for (auto& p : pts) {
    if (besty >= 0 && p[1] >= besty) continue;
    pareto.push_back(p);
    besty = p[1];
  }
  // convex chain: successive edges must turn left
  std::vector<std::array<long long, 2>> chain;
  for (auto& p : pareto) {
    while (chain.size() >= 2) {
      auto& a = chain[chain.size() - 2];
      auto& b = chain[chain.size() - 1];
      long long cr = (b[0] - a[0]) * (p[1] - b[1]) - (b[1] - a[1]) * (p[0] - b[0]);
      if (cr <= 0)
        chain.pop_back();
      else
        break;
    }
    chain.push_back(p);
  }
  if (chain.front()[0] != 0 || chain.back()[1] != 0)
    throw PrecondError("plane polynomial is not convenient: diagram must meet both axes");

  SuspensionData sd;
  sd.n = n;
  sd.chain = chain;
  int r = static_cast<int>(chain.size()) - 1;
  if (r < 1) throw PrecondError("plane diagram has no compact segment");

  for (int i = 1; i <= r; ++i) {
    long long da = chain[static_cast<std::size_t>(i)][0] - chain[static_cast<std::size_t>(i - 1)][0];
    long long db = chain[static_cast<std::size_t>(i - 1)][1] - chain[static_cast<std::size_t>(i)][1];
    long long crossv = chain[static_cast<std::size_t>(i)][0] * chain[static_cast<std::size_t>(i - 1)][1] -
                       chain[static_cast<std::size_t>(i - 1)][0] * chain[static_cast<std::size_t>(i)][1];
    sd.s.push_back(std::gcd(da, db));
    // facet through the segment and (0, 0, N)
    Exp3 raw{n * db, n * da, crossv};
    Exp3 l = primitive(raw);
    sd.normals.push_back(l);
    sd.m.push_back(l[2] * n);
    sd.alpha_z.push_back(std::gcd(l[0], l[1]));
  }
  sd.sx = std::gcd(n, chain.front()[1]);
  sd.sy = std::gcd(n, chain.back()[0]);
  for (auto v : sd.s) sd.sz += v;
  sd.ax = chain[1][0] / sd.s[0];
  sd.ay = chain[static_cast<std::size_t>(r - 1)][1] / sd.s[static_cast<std::size_t>(r - 1)];
  sd.minimal = !(sd.sx == n || sd.sy == n || chain[1][0] == 1 ||
                 chain[static_cast<std::size_t>(r - 1)][1] == 1);
  return sd;
}

Int FactoredCharPoly::value_at_one() const {
  long long order = 0;
  for (auto& [e, mult] : factors) order += mult;
  if (order != 0) throw InternalError("characteristic polynomial has a zero or pole at 1");
  Rat v(1);
  for (auto& [e, mult] : factors) {
    for (long long i = 0; i < std::llabs(mult); ++i) {
      if (mult > 0)
        v *= e;
      else
        v /= e;
    }
  }
  if (!is_integer(v)) throw InternalError("characteristic polynomial value at 1 is not integral");
  return v.get_num();
}

Rat FactoredCharPoly::total_degree() const {
  Rat d(0);
  for (auto& [e, mult] : factors) d += e * gl(mult);
  return d;
}

FactoredCharPoly characteristic_polynomial(const SuspensionData& sd) {
  std::map<Rat, long long> acc;
  auto put = [&](const Rat& e, long long mult) {
    if (e <= 0) throw InternalError("nonpositive exponent in characteristic polynomial");
    acc[e] += mult;
  };
  int r = sd.r();
  for (int i = 0; i < r; ++i) {
    Rat mi(gl(sd.m[static_cast<std::size_t>(i)]));
    put(mi, sd.s[static_cast<std::size_t>(i)]);
    put(mi / gl(sd.alpha_z[static_cast<std::size_t>(i)]), -sd.s[static_cast<std::size_t>(i)]);
  }
  Rat m1(gl(sd.m.front())), mr(gl(sd.m.back()));
  put(m1, sd.sx - 1);
  put(mr, sd.sy - 1);
  put(m1 / gl(sd.ax), -sd.sx);
  put(mr / gl(sd.ay), -sd.sy);
  put(m1 / gl(sd.alpha_z.front() * sd.ax), 1);
  put(mr / gl(sd.alpha_z.back() * sd.ay), 1);
  put(rat(sd.n), 1);
  put(Rat(1), -1);

  FactoredCharPoly out;
  for (auto& [e, mult] : acc)
    if (mult != 0) out.factors.emplace_back(e, mult);
  Rat deg = out.total_degree();
  if (deg < 0 || !is_integer(deg))
    throw InternalError("characteristic polynomial degree is not a nonnegative integer");
  return out;
}

Int h_order(const SuspensionData& sd) {
  Int v = 1;
  for (long long i = 0; i < sd.sz - 1; ++i) v *= gl(sd.n);
  for (long long i = 0; i < sd.sx - 1; ++i) v *= gl(sd.ax);
  for (long long i = 0; i < sd.sy - 1; ++i) v *= gl(sd.ay);
  return v;
}

EndBasis end_basis(const SuspensionData& sd) {
  EndBasis b;
  b.sz = sd.sz;
  b.sx = sd.sx;
  b.sy = sd.sy;
  b.s = sd.s;
  return b;
}

int EndBasis::z_end(int node, int j) const {
  int off = 0;
  for (int i = 0; i < node; ++i) off += static_cast<int>(s[static_cast<std::size_t>(i)]);
  return off + j;
}
int EndBasis::x_end(int j) const { return static_cast<int>(sz) + j; }
int EndBasis::y_end(int j) const { return static_cast<int>(sz + sx) + j; }

IMat relation_matrix_top(const SuspensionData& sd) {
  EndBasis b = end_basis(sd);
  int gens = b.count();
  IMat rows;
  auto row = [&]() { return std::vector<Int>(static_cast<std::size_t>(gens), 0); };
  for (int i = 0; i < b.sz; ++i) {
    auto r = row();
    r[static_cast<std::size_t>(i)] = gl(sd.n);
    rows.push_back(std::move(r));
  }
  for (int i = 0; i < b.sx; ++i) {
    auto r = row();
    r[static_cast<std::size_t>(b.x_end(i))] = gl(sd.ax * sd.sx);
    rows.push_back(std::move(r));
  }
  for (int i = 0; i < b.sy; ++i) {
    auto r = row();
    r[static_cast<std::size_t>(b.y_end(i))] = gl(sd.ay * sd.sy);
    rows.push_back(std::move(r));
  }
  return rows;
}

IMat relation_matrix(const SuspensionData& sd) {
  EndBasis b = end_basis(sd);
  int gens = b.count();
  IMat rows = relation_matrix_top(sd);
  auto row = [&]() { return std::vector<Int>(static_cast<std::size_t>(gens), 0); };

  for (int i = 0; i + 1 < b.sx; ++i) {
    auto r = row();
    r[static_cast<std::size_t>(b.x_end(i))] = gl(sd.ax);
    r[static_cast<std::size_t>(b.x_end(i + 1))] = gl(-sd.ax);
    rows.push_back(std::move(r));
  }
  for (int i = 0; i + 1 < b.sy; ++i) {
    auto r = row();
    r[static_cast<std::size_t>(b.y_end(i))] = gl(sd.ay);
    r[static_cast<std::size_t>(b.y_end(i + 1))] = gl(-sd.ay);
    rows.push_back(std::move(r));
  }

  // divisors of the coordinate functions
  {
    auto r = row();
    for (int i = 0; i < b.sx; ++i) r[static_cast<std::size_t>(b.x_end(i))] = 1;
    rows.push_back(std::move(r));
  }
  {
    auto r = row();
    for (int i = 0; i < b.sy; ++i) r[static_cast<std::size_t>(b.y_end(i))] = 1;
    rows.push_back(std::move(r));
  }
  {
    auto r = row();
    for (int i = 0; i < b.sz; ++i) r[static_cast<std::size_t>(i)] = 1;
    rows.push_back(std::move(r));
  }

  // Cross-type identifications at the chain ends: through the common node,
  // alpha_e * end is the node's dual class for every leg type attached
  // there, so the scaled generators of different types agree modulo the
  // resolution lattice.
  {
    auto r = row();
    r[static_cast<std::size_t>(b.x_end(0))] = gl(sd.ax);
    r[static_cast<std::size_t>(b.z_end(0, 0))] = gl(-sd.alpha_z.front());
    rows.push_back(std::move(r));
  }
  {
    auto r = row();
    r[static_cast<std::size_t>(b.y_end(0))] = gl(sd.ay);
    r[static_cast<std::size_t>(b.z_end(sd.r() - 1, 0))] = gl(-sd.alpha_z.back());
    rows.push_back(std::move(r));
  }
  return rows;
}

FiniteAbelianGroup suspension_group(const SuspensionData& sd) {
  return FiniteAbelianGroup::from_relations(end_basis(sd).count(), relation_matrix(sd));
}

ZetaClosedForm zeta_closed_form(const Model& model, bool bypass_gate) {
  if (!bypass_gate && !model.gate.pass())
    throw PrecondError("rational-homology-sphere gate failed (use the bypass to override)");
  ZetaClosedForm cf;
  cf.wt_f = model.wt_f();
  cf.wt_xyz[0] = model.wt_point({1, 0, 0});
  cf.wt_xyz[1] = model.wt_point({0, 1, 0});
  cf.wt_xyz[2] = model.wt_point({0, 0, 1});
  return cf;
}

MultiSeries expand_closed_form(const ZetaClosedForm& cf, const Box& box) {
  std::vector<SignedTerm> numer;
  numer.push_back({std::vector<long long>(static_cast<std::size_t>(box.dim()), 0), 1});
  numer.push_back({cf.wt_f, -1});
  return expand_rational(box, numer, {cf.wt_xyz[0], cf.wt_xyz[1], cf.wt_xyz[2]});
}

std::vector<int> chain_to_model(const Model& model, const SuspensionData& sd) {
  std::vector<int> map;
  for (int i = 1; i <= sd.r(); ++i) {
    Exp3 p{sd.chain[static_cast<std::size_t>(i - 1)][0], sd.chain[static_cast<std::size_t>(i - 1)][1], 0};
    Exp3 q{sd.chain[static_cast<std::size_t>(i)][0], sd.chain[static_cast<std::size_t>(i)][1], 0};
    int found = -1;
    for (int nidx = 0; nidx < model.nodes(); ++nidx) {
      if (dot(model.normal(nidx), p) == model.level(nidx) &&
          dot(model.normal(nidx), q) == model.level(nidx)) {
        if (found != -1) throw InternalError("chain segment on two compact facets");
        found = nidx;
      }
    }
    if (found < 0) throw InternalError("chain segment not matched by a compact facet");
    map.push_back(found);
  }
  std::set<int> uniq(map.begin(), map.end());
  if (static_cast<int>(uniq.size()) != model.nodes())
    throw InternalError("suspension chain does not exhaust the compact facets");
  return map;
}

MultiSeries zeta_reduced_suspension(const Model& model, const SuspensionData& sd, const Box& box,
                                    bool parallel) {
  FiniteAbelianGroup grp = suspension_group(sd);
  EndBasis basis = end_basis(sd);
  std::vector<int> node_of = chain_to_model(model, sd);
  int r = sd.r();

  // every compact facet passes through (0, 0, N)
  for (int nidx = 0; nidx < model.nodes(); ++nidx)
    if (dot(model.normal(nidx), Exp3{0, 0, sd.n}) != model.level(nidx))
      throw InternalError("compact facet missing the suspension apex");

  // the chain data must account for every leg of the dual graph
  long long leg_sum = 0;
  for (auto& l : model.graph.legs) leg_sum += l.t;
  if (leg_sum != sd.sz + sd.sx + sd.sy)
    throw InternalError("leg count disagrees with chain data");

  // leg families from the dual graph, cross-checked against the chain data
  auto leg_alpha = [&](int model_node, const Weight& coord_normal, long long expect_t) {
    for (auto& leg : model.graph.legs) {
      if (leg.node != model_node) continue;
      if (model.np.facet(leg.facet).normal != coord_normal) continue;
      if (leg.t != expect_t) throw InternalError("leg multiplicity disagrees with chain data");
      return leg.alpha;
    }
    throw InternalError("expected leg family not present");
  };

  std::vector<ZetaNode> nodes(static_cast<std::size_t>(model.nodes()));
  std::vector<ZetaEnd> ends;
  std::vector<FiniteAbelianGroup::Elem> node_cls(static_cast<std::size_t>(model.nodes()));

  for (int i = 0; i < r; ++i) {
    int nd = node_of[static_cast<std::size_t>(i)];
    long long az = leg_alpha(nd, Weight{0, 0, 1}, sd.s[static_cast<std::size_t>(i)]);
    if (az != sd.alpha_z[static_cast<std::size_t>(i)])
      throw InternalError("z-leg index disagrees with chain data");
    auto gen0 = grp.generator(basis.z_end(i, 0));
    node_cls[static_cast<std::size_t>(nd)] = grp.mul(gen0, az);
    for (int j = 0; j < sd.s[static_cast<std::size_t>(i)]; ++j)
      ends.push_back({nd, az, grp.generator(basis.z_end(i, j))});
  }
  {
    int nd = node_of.front();
    long long axg = leg_alpha(nd, Weight{1, 0, 0}, sd.sx);
    if (axg != sd.ax) throw InternalError("x-leg index disagrees with chain data");
    for (int j = 0; j < sd.sx; ++j) ends.push_back({nd, axg, grp.generator(basis.x_end(j))});
  }
  {
    int nd = node_of.back();
    long long ayg = leg_alpha(nd, Weight{0, 1, 0}, sd.sy);
    if (ayg != sd.ay) throw InternalError("y-leg index disagrees with chain data");
    for (int j = 0; j < sd.sy; ++j) ends.push_back({nd, ayg, grp.generator(basis.y_end(j))});
  }

  for (int nd = 0; nd < model.nodes(); ++nd) {
    ZetaNode zn;
    zn.dual = model.inter.dual[static_cast<std::size_t>(nd)];
    zn.delta = model.graph.degree[static_cast<std::size_t>(nd)];
    zn.cls = node_cls[static_cast<std::size_t>(nd)];
    nodes[static_cast<std::size_t>(nd)] = std::move(zn);
  }

  return zeta_reduced(grp, nodes, ends, box, parallel);
}

std::optional<RandomSuspension> random_suspension_diagram(Rng& rng, int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    long long n = rng.range(2, 9);
    int r = static_cast<int>(rng.range(1, 4));

    // distinct primitive edge directions, slopes strictly increasing
    std::set<std::pair<long long, long long>> dirset;
    while (static_cast<int>(dirset.size()) < r) {
      long long dx = rng.range(1, 5), dy = rng.range(1, 5);
      long long g = std::gcd(dx, dy);
      dirset.insert({dx / g, dy / g});
    }
    std::vector<std::pair<long long, long long>> dirs(dirset.begin(), dirset.end());
    std::sort(dirs.begin(), dirs.end(), [](auto& a, auto& b) {
      // slope -a.second/a.first increasing: steeper first
      return a.second * b.first > b.second * a.first;
    });

    std::vector<long long> s;
    for (int i = 0; i < r; ++i) s.push_back(1 + std::min(rng.below(3), rng.below(3)));

    std::vector<std::array<long long, 2>> chain{{0, 0}};
    for (int i = 0; i < r; ++i) {
      auto& prev = chain.back();
      chain.push_back({prev[0] + s[static_cast<std::size_t>(i)] * dirs[static_cast<std::size_t>(i)].first,
                       prev[1] - s[static_cast<std::size_t>(i)] * dirs[static_cast<std::size_t>(i)].second});
    }
    long long b0 = -chain.back()[1];
    for (auto& c : chain) c[1] += b0;
    if (chain.back()[0] > 30 || chain.front()[1] > 30) continue;

    LaurentPoly f0;
    for (auto& c : chain) f0.add_term({c[0], c[1], 0}, Rat(1));

    RandomSuspension out;
    out.f0 = f0;
    out.n = n;
    try {
      out.sd = analyze_suspension(f0, n);
      // keep the verification workload per diagram modest
      if (h_order(out.sd) > 200000) continue;
      if (out.sd.sz > 8) continue;
      if (out.sd.ax * out.sd.sx > 24 || out.sd.ay * out.sd.sy > 24) continue;
      Model model = analyze(suspension_poly(f0, n));
      if (!model.gate.pass()) continue;
    } catch (const Error&) {
      continue;
    }
    return out;
  }
  return std::nullopt;
}

}  // namespace newt
