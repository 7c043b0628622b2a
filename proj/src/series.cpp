#include "newt/series.hpp"

#include <omp.h>

#include <algorithm>
#include <set>

namespace newt {

ExpKey make_key(const std::vector<long long>& e) {
  if (static_cast<int>(e.size()) > kMaxSeriesDim) throw PrecondError("series dimension too large");
  ExpKey k;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > INT32_MAX || e[i] < INT32_MIN) throw Error("series exponent overflow");
    k.v[i] = static_cast<std::int32_t>(e[i]);
  }
  return k;
}

std::vector<long long> key_vec(const ExpKey& k, int dim) {
  std::vector<long long> e(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) e[static_cast<std::size_t>(i)] = k.v[static_cast<std::size_t>(i)];
  return e;
}

MultiSeries ms_multiply_serial(const MultiSeries& a, const MultiSeries& b) {
  if (a.dim != b.dim) throw PrecondError("series dimension mismatch");
  MultiSeries r;
  r.dim = a.dim;
  r.box.hi.resize(static_cast<std::size_t>(a.dim));
  for (int i = 0; i < a.dim; ++i)
    r.box.hi[static_cast<std::size_t>(i)] =
        std::min(a.box.hi[static_cast<std::size_t>(i)], b.box.hi[static_cast<std::size_t>(i)]);
  for (auto& [k1, c1] : a.c)
    for (auto& [k2, c2] : b.c) r.add(key_add(k1, k2), c1 * c2);
  return r;
}

MultiSeries ms_multiply_omp(const MultiSeries& a, const MultiSeries& b) {
  if (a.dim != b.dim) throw PrecondError("series dimension mismatch");
  MultiSeries r;
  r.dim = a.dim;
  r.box.hi.resize(static_cast<std::size_t>(a.dim));
  for (int i = 0; i < a.dim; ++i)
    r.box.hi[static_cast<std::size_t>(i)] =
        std::min(a.box.hi[static_cast<std::size_t>(i)], b.box.hi[static_cast<std::size_t>(i)]);

  std::vector<const std::pair<const ExpKey, long long>*> terms;
  terms.reserve(a.c.size());
  for (auto& t : a.c) terms.push_back(&t);

  int threads = omp_get_max_threads();
  std::vector<std::map<ExpKey, long long>> partial(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
  {
    int tid = omp_get_thread_num();
    auto& local = partial[static_cast<std::size_t>(tid)];
#pragma omp for schedule(static)
    for (long long i = 0; i < static_cast<long long>(terms.size()); ++i) {
      const auto& [k1, c1] = *terms[static_cast<std::size_t>(i)];
      for (auto& [k2, c2] : b.c) {
        ExpKey k = key_add(k1, k2);
        if (!key_in_box(k, r.box)) continue;
        auto [it, fresh] = local.emplace(k, c1 * c2);
        if (!fresh) it->second += c1 * c2;
      }
    }
  }
  for (auto& local : partial)
    for (auto& [k, v] : local) r.add(k, v);
  return r;
}

MultiSeries ms_multiply(const MultiSeries& a, const MultiSeries& b, bool parallel) {
  if (!parallel || a.c.size() * b.c.size() < 1 << 14) return ms_multiply_serial(a, b);
  return ms_multiply_omp(a, b);
}

void geometric_closure(MultiSeries& s, const ExpKey& step, int multiplicity) {
  bool nonzero = false;
  for (int i = 0; i < s.dim; ++i) {
    if (step.v[static_cast<std::size_t>(i)] < 0) throw PrecondError("geometric step with negative entry");
    if (step.v[static_cast<std::size_t>(i)] > 0) nonzero = true;
  }
  if (!nonzero) throw PrecondError("geometric step is zero");

  for (int rep = 0; rep < multiplicity; ++rep) {
    // candidate support: chains k, k+v, k+2v, ... within the box
    std::set<ExpKey> keys;
    for (auto& [k, v] : s.c) {
      ExpKey cur = k;
      while (key_in_box(cur, s.box)) {
        keys.insert(cur);
        cur = key_add(cur, step);
      }
    }
    std::map<ExpKey, long long> out;
    for (auto& k : keys) {
      long long val = s.get(k);
      ExpKey prev;
      bool has_prev = true;
      for (int i = 0; i < kMaxSeriesDim; ++i) {
        prev.v[static_cast<std::size_t>(i)] =
            k.v[static_cast<std::size_t>(i)] - step.v[static_cast<std::size_t>(i)];
        if (prev.v[static_cast<std::size_t>(i)] < 0) has_prev = false;
      }
      if (has_prev) {
        auto it = out.find(prev);
        if (it != out.end()) val += it->second;
      }
      if (val != 0) out[k] = val;
    }
    s.c = std::move(out);
  }
}

MultiSeries expand_rational(const Box& box, const std::vector<SignedTerm>& numerator,
                            const std::vector<std::vector<long long>>& denominators) {
  MultiSeries s;
  s.dim = box.dim();
  s.box = box;
  for (auto& t : numerator) {
    if (static_cast<int>(t.e.size()) != s.dim) throw PrecondError("numerator dimension mismatch");
    s.add(make_key(t.e), t.coeff);
  }
  for (auto& d : denominators) {
    if (static_cast<int>(d.size()) != s.dim) throw PrecondError("denominator dimension mismatch");
    bool nonzero = false;
    for (long long v : d) {
      if (v < 0) throw PrecondError("ill-posed denominator: negative entry");
      if (v > 0) nonzero = true;
    }
    if (!nonzero) throw PrecondError("ill-posed denominator: zero vector");
    geometric_closure(s, make_key(d), 1);
  }
  return s;
}

MultiSeries poincare_from_hilbert(const MultiSeries& h) {
  MultiSeries p;
  p.dim = h.dim;
  p.box.hi.resize(static_cast<std::size_t>(h.dim));
  for (int i = 0; i < h.dim; ++i) {
    if (h.box.hi[static_cast<std::size_t>(i)] < 1)
      throw PrecondError("box too small for the Poincare transform");
    p.box.hi[static_cast<std::size_t>(i)] = h.box.hi[static_cast<std::size_t>(i)] - 1;
  }
  // p_k = -sum_{S subset of coords} (-1)^{|S|} h_{k + 1_S}
  int dim = h.dim;
  std::vector<ExpKey> shifts;
  std::vector<int> sign;
  for (int mask = 0; mask < (1 << dim); ++mask) {
    ExpKey sh;
    int bits = 0;
    for (int i = 0; i < dim; ++i)
      if (mask & (1 << i)) {
        sh.v[static_cast<std::size_t>(i)] = 1;
        ++bits;
      }
    shifts.push_back(sh);
    sign.push_back(bits % 2 ? -1 : 1);
  }
  // iterate over the target box; h is dense on boxes in practice, but missing
  // entries simply read as zero
  std::vector<long long> k(static_cast<std::size_t>(dim), 0);
  for (;;) {
    ExpKey kk = make_key(k);
    long long acc = 0;
    for (std::size_t i = 0; i < shifts.size(); ++i)
      acc -= sign[i] * h.get(key_add(kk, shifts[i]));
    p.add(kk, acc);
    int j = 0;
    for (; j < dim; ++j) {
      if (++k[static_cast<std::size_t>(j)] <= p.box.hi[static_cast<std::size_t>(j)]) break;
      k[static_cast<std::size_t>(j)] = 0;
    }
    if (j == dim) break;
  }
  return p;
}

namespace {

Box merge_box(const GroupRingSeries& a, const GroupRingSeries& b) {
  Box r;
  r.hi.resize(a.box.hi.size());
  for (std::size_t i = 0; i < r.hi.size(); ++i) r.hi[i] = std::min(a.box.hi[i], b.box.hi[i]);
  return r;
}

}  // namespace

GroupRingSeries grs_multiply_serial(const GroupRingSeries& a, const GroupRingSeries& b) {
  if (a.dim != b.dim || a.grp != b.grp) throw PrecondError("group-ring series mismatch");
  GroupRingSeries r;
  r.dim = a.dim;
  r.grp = a.grp;
  r.box = merge_box(a, b);
  for (auto& [k1, cell1] : a.c)
    for (auto& [k2, cell2] : b.c) {
      ExpKey k = key_add(k1, k2);
      if (!key_in_box(k, r.box)) continue;
      auto& cell = r.c[k];
      for (auto& [h1, c1] : cell1)
        for (auto& [h2, c2] : cell2) {
          std::uint64_t h = a.grp->add(h1, h2);
          auto [it, fresh] = cell.emplace(h, c1 * c2);
          if (!fresh && (it->second += c1 * c2) == 0) cell.erase(it);
        }
      if (cell.empty()) r.c.erase(k);
    }
  return r;
}

GroupRingSeries grs_multiply_omp(const GroupRingSeries& a, const GroupRingSeries& b) {
  if (a.dim != b.dim || a.grp != b.grp) throw PrecondError("group-ring series mismatch");
  GroupRingSeries r;
  r.dim = a.dim;
  r.grp = a.grp;
  r.box = merge_box(a, b);

  std::vector<const std::pair<const ExpKey, std::map<std::uint64_t, long long>>*> terms;
  terms.reserve(a.c.size());
  for (auto& t : a.c) terms.push_back(&t);

  int threads = omp_get_max_threads();
  std::vector<std::map<ExpKey, std::map<std::uint64_t, long long>>> partial(
      static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
  {
    int tid = omp_get_thread_num();
    auto& local = partial[static_cast<std::size_t>(tid)];
#pragma omp for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(terms.size()); ++i) {
      const auto& [k1, cell1] = *terms[static_cast<std::size_t>(i)];
      for (auto& [k2, cell2] : b.c) {
        ExpKey k = key_add(k1, k2);
        if (!key_in_box(k, r.box)) continue;
        auto& cell = local[k];
        for (auto& [h1, c1] : cell1)
          for (auto& [h2, c2] : cell2) {
            std::uint64_t h = a.grp->add(h1, h2);
            auto [it, fresh] = cell.emplace(h, c1 * c2);
            if (!fresh) it->second += c1 * c2;
          }
      }
    }
  }
  for (auto& local : partial)
    for (auto& [k, cell] : local)
      for (auto& [h, v] : cell) r.add(k, h, v);
  return r;
}

GroupRingSeries grs_multiply(const GroupRingSeries& a, const GroupRingSeries& b, bool parallel) {
  if (!parallel || a.term_count() * b.term_count() < 1 << 14) return grs_multiply_serial(a, b);
  return grs_multiply_omp(a, b);
}

MultiSeries trivial_part(const GroupRingSeries& s) {
  MultiSeries r;
  r.dim = s.dim;
  r.box = s.box;
  std::uint64_t id = s.grp->identity();
  for (auto& [k, cell] : s.c) {
    auto it = cell.find(id);
    if (it != cell.end()) r.add(k, it->second);
  }
  return r;
}

MultiSeries grs_trivial_product(const GroupRingSeries& a, const GroupRingSeries& b, bool parallel) {
  if (a.dim != b.dim || a.grp != b.grp) throw PrecondError("group-ring series mismatch");
  MultiSeries r;
  r.dim = a.dim;
  {
    Box mb = merge_box(a, b);
    r.box = mb;
  }

  // bucket b's terms by class
  std::map<std::uint64_t, std::vector<std::pair<ExpKey, long long>>> by_class;
  for (auto& [k, cell] : b.c)
    for (auto& [h, v] : cell) by_class[h].emplace_back(k, v);

  std::vector<const std::pair<const ExpKey, std::map<std::uint64_t, long long>>*> terms;
  terms.reserve(a.c.size());
  for (auto& t : a.c) terms.push_back(&t);

  int threads = parallel ? omp_get_max_threads() : 1;
  std::vector<std::map<ExpKey, long long>> partial(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
  {
    int tid = omp_get_thread_num();
    auto& local = partial[static_cast<std::size_t>(tid)];
#pragma omp for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(terms.size()); ++i) {
      const auto& [k1, cell1] = *terms[static_cast<std::size_t>(i)];
      for (auto& [h1, c1] : cell1) {
        auto it = by_class.find(a.grp->neg(h1));
        if (it == by_class.end()) continue;
        for (auto& [k2, c2] : it->second) {
          ExpKey k = key_add(k1, k2);
          if (!key_in_box(k, r.box)) continue;
          auto [lit, fresh] = local.emplace(k, c1 * c2);
          if (!fresh) lit->second += c1 * c2;
        }
      }
    }
  }
  for (auto& local : partial)
    for (auto& [k, v] : local) r.add(k, v);
  return r;
}

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) {
    Int next = Int(gl(r)) * gl(n - k + i) / gl(i);
    r = to_ll(next);
  }
  return r;
}

}  // namespace

MultiSeries zeta_reduced(const FiniteAbelianGroup& grp, const std::vector<ZetaNode>& nodes,
                         const std::vector<ZetaEnd>& ends, const Box& box, bool parallel) {
  int dim = static_cast<int>(nodes.size());
  if (box.dim() != dim) throw PrecondError("box dimension mismatch");

  // per-coordinate common denominator for all factor exponents
  std::vector<Int> scale(static_cast<std::size_t>(dim), 1);
  for (int j = 0; j < dim; ++j) {
    Int s(1);
    for (auto& n : nodes) {
      const Rat& q = n.dual[static_cast<std::size_t>(j)];
      s = s * q.get_den() / gcd(s, Int(q.get_den()));
    }
    for (auto& e : ends) {
      Rat q = nodes[static_cast<std::size_t>(e.node)].dual[static_cast<std::size_t>(j)] / gl(e.alpha);
      s = s * q.get_den() / gcd(s, Int(q.get_den()));
    }
    scale[static_cast<std::size_t>(j)] = s;
  }

  Box sbox;
  sbox.hi.resize(static_cast<std::size_t>(dim));
  for (int j = 0; j < dim; ++j) {
    Int hi = Int(gl(box.hi[static_cast<std::size_t>(j)])) * scale[static_cast<std::size_t>(j)];
    if (hi > INT32_MAX) throw Error("box overflow after exponent scaling");
    sbox.hi[static_cast<std::size_t>(j)] = to_ll(hi);
  }

  auto scaled_exp = [&](const std::vector<Rat>& dual, long long alpha) {
    std::vector<long long> e(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
      Rat q = dual[static_cast<std::size_t>(j)] / gl(alpha) * Rat(scale[static_cast<std::size_t>(j)]);
      if (!is_integer(q)) throw InternalError("scaled exponent not integral");
      if (q <= 0) throw InternalError("zeta factor exponent must be positive");
      e[static_cast<std::size_t>(j)] = to_ll(rat_floor(q));
    }
    return e;
  };

  // classful polynomial factors
  std::vector<GroupRingSeries> factors;
  auto fresh = [&]() {
    GroupRingSeries f;
    f.dim = dim;
    f.box = sbox;
    f.grp = &grp;
    return f;
  };
  std::vector<std::vector<long long>> trivial_steps;  // pulled-out geometric factors

  for (auto& n : nodes) {
    auto e = scaled_exp(n.dual, 1);
    long long p = n.delta - 2;
    GroupRingSeries f = fresh();
    if (p >= 0) {
      for (long long i = 0; i <= p; ++i) {
        ExpKey k;
        bool in = true;
        for (int j = 0; j < dim && in; ++j) {
          long long val = e[static_cast<std::size_t>(j)] * i;
          if (val > sbox.hi[static_cast<std::size_t>(j)]) in = false;
          k.v[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(val);
        }
        if (!in) break;
        f.add(k, grp.mul(n.cls, i), (i % 2 ? -1 : 1) * binom(p, i));
      }
    } else {
      long long m = -p;
      for (long long i = 0;; ++i) {
        ExpKey k;
        bool in = true;
        for (int j = 0; j < dim && in; ++j) {
          long long val = e[static_cast<std::size_t>(j)] * i;
          if (val > sbox.hi[static_cast<std::size_t>(j)]) in = false;
          k.v[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(val);
        }
        if (!in) break;
        f.add(k, grp.mul(n.cls, i), binom(i + m - 1, m - 1));
      }
    }
    factors.push_back(std::move(f));
  }

  for (auto& e : ends) {
    auto ev = scaled_exp(nodes[static_cast<std::size_t>(e.node)].dual, e.alpha);
    long long ord = grp.element_order(e.cls);
    GroupRingSeries f = fresh();
    for (long long j = 0; j < ord; ++j) {
      ExpKey k;
      bool in = true;
      for (int d = 0; d < dim && in; ++d) {
        long long val = ev[static_cast<std::size_t>(d)] * j;
        if (val > sbox.hi[static_cast<std::size_t>(d)]) in = false;
        k.v[static_cast<std::size_t>(d)] = static_cast<std::int32_t>(val);
      }
      if (!in) break;
      f.add(k, grp.mul(e.cls, j), 1);
    }
    factors.push_back(std::move(f));
    std::vector<long long> step(static_cast<std::size_t>(dim));
    for (int d = 0; d < dim; ++d) step[static_cast<std::size_t>(d)] = ev[static_cast<std::size_t>(d)] * ord;
    trivial_steps.push_back(std::move(step));
  }

  // Factors whose coefficients all sit in the identity class are ordinary
  // integer polynomials; they move to the cheap side of the computation.
  std::vector<MultiSeries> integer_factors;
  std::vector<GroupRingSeries> classful;
  for (auto& f : factors) {
    bool all_trivial = true;
    for (auto& [k, cell] : f.c)
      for (auto& [h, v] : cell)
        if (h != grp.identity()) all_trivial = false;
    if (all_trivial)
      integer_factors.push_back(trivial_part(f));
    else
      classful.push_back(std::move(f));
  }

  // multiply collinear classful factors first (their supports stay on one
  // ray), then fold smallest-first; the largest group enters only through
  // the class-matched trivial product
  MultiSeries t;
  if (classful.empty()) {
    t.dim = dim;
    t.box = sbox;
    t.add(ExpKey{}, 1);
  } else {
    auto direction = [&](const GroupRingSeries& f) -> std::vector<long long> {
      for (auto& [k, cell] : f.c) {
        auto v = key_vec(k, dim);
        bool nz = false;
        for (auto x : v) nz |= (x != 0);
        if (!nz) continue;
        long long g = 0;
        for (auto x : v) g = std::gcd(g, std::llabs(x));
        for (auto& x : v) x /= g;
        return v;
      }
      return std::vector<long long>(static_cast<std::size_t>(dim), 0);
    };
    std::map<std::vector<long long>, std::vector<GroupRingSeries>> lines;
    for (auto& f : classful) lines[direction(f)].push_back(std::move(f));
    std::vector<GroupRingSeries> grouped;
    for (auto& [d, fs] : lines) {
      GroupRingSeries acc = std::move(fs[0]);
      for (std::size_t i = 1; i < fs.size(); ++i) acc = grs_multiply(acc, fs[i], parallel);
      grouped.push_back(std::move(acc));
    }
    std::sort(grouped.begin(), grouped.end(), [](const GroupRingSeries& a, const GroupRingSeries& b) {
      return a.term_count() < b.term_count();
    });
    if (grouped.size() == 1) {
      t = trivial_part(grouped[0]);
    } else {
      GroupRingSeries rest = std::move(grouped[0]);
      for (std::size_t i = 1; i + 1 < grouped.size(); ++i) rest = grs_multiply(rest, grouped[i], parallel);
      t = grs_trivial_product(grouped.back(), rest, parallel);
    }
  }

  for (auto& f : integer_factors) t = ms_multiply(t, f, parallel);
  for (auto& step : trivial_steps) geometric_closure(t, make_key(step), 1);

  // unscale; only lattice exponents may carry identity-class coefficients
  MultiSeries out;
  out.dim = dim;
  out.box = box;
  for (auto& [k, v] : t.c) {
    std::vector<long long> e(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
      long long sj = to_ll(scale[static_cast<std::size_t>(j)]);
      long long kj = k.v[static_cast<std::size_t>(j)];
      if (kj % sj != 0)
        throw InternalError("identity-class term with non-lattice exponent survived extraction");
      e[static_cast<std::size_t>(j)] = kj / sj;
    }
    out.add(make_key(e), v);
  }
  return out;
}

}  // namespace newt
