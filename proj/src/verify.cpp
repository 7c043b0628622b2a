#include "newt/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "newt/cone.hpp"

namespace newt {

const char* const kSuspensionFixture = "x^9 + x^4*y^2 + x^2*y^4 + y^7 + z^7";
const char* const kNonSuspensionFixture = "x^7 + y^5 + z^3 + x^2*z + y^3*z";
const char* const kBrieskorn237 = "x^2 + y^3 + z^7";

namespace {

double now_s() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

struct Timer {
  double t0 = now_s();
  double elapsed() const { return now_s() - t0; }
};

Model model_of(const std::string& text) { return analyze(LaurentPoly::parse(text)); }

std::string vec_str(std::span<const long long> v) {
  std::ostringstream o;
  o << "(";
  for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
  o << ")";
  return o.str();
}

LaurentPoly random_poly(Rng& rng, int max_terms, long long max_deg, long long max_coeff) {
  LaurentPoly p;
  int terms = static_cast<int>(rng.range(1, max_terms));
  for (int t = 0; t < terms; ++t) {
    Exp3 e{};
    long long left = max_deg;
    for (int i = 0; i < 3; ++i) {
      e[static_cast<std::size_t>(i)] = rng.range(0, left);
      left -= e[static_cast<std::size_t>(i)];
    }
    long long c = rng.range(1, max_coeff) * (rng.below(2) ? 1 : -1);
    p.add_term(e, rat(c));
  }
  return p;
}

CriterionResult finish(CriterionResult r, const Timer& t, double budget) {
  r.seconds = t.elapsed();
  if (r.pass && r.seconds > budget) {
    r.pass = false;
    r.detail += " [exceeded runtime budget of " + std::to_string(budget) + "s]";
  }
  return r;
}

}  // namespace

Box zeta_box(const Model& m, long long limit) {
  Box b;
  b.hi.assign(static_cast<std::size_t>(m.nodes()), 0);
  b.hi[0] = limit;
  for (int j = 1; j < m.nodes(); ++j) {
    Rat best(0);
    for (int n = 0; n < m.nodes(); ++n) {
      Rat ratio = m.inter.dual[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] /
                  m.inter.dual[static_cast<std::size_t>(n)][0];
      best = std::max(best, ratio);
    }
    b.hi[static_cast<std::size_t>(j)] = to_ll(rat_ceil(best * gl(limit)));
  }
  return b;
}

std::vector<Exp3> high_monomials(const Model& m, std::span<const long long> k, long long degree) {
  std::vector<Exp3> pool;
  Exp3 u;
  for (u[0] = 0; u[0] <= degree; ++u[0])
    for (u[1] = 0; u[0] + u[1] <= degree; ++u[1])
      for (u[2] = 0; u[0] + u[1] + u[2] <= degree; ++u[2]) {
        bool high = true;
        for (int n = 0; n < m.nodes() && high; ++n)
          if (dot(m.normal(n), u) < k[static_cast<std::size_t>(n)]) high = false;
        if (high) pool.push_back(u);
      }
  return pool;
}

LaurentPoly random_high_element(Rng& rng, const Model& m, std::span<const Exp3> pool) {
  if (pool.empty()) throw PrecondError("empty high-monomial pool");
  for (;;) {
    LaurentPoly g = LaurentPoly::monomial(pool[rng.below(pool.size())], Rat(1));
    if (rng.below(2)) g.add_term(pool[rng.below(pool.size())], rat(rng.range(1, 3)));
    LaurentPoly h = rng.below(4) ? random_poly(rng, 3, 8, 2) : LaurentPoly();
    g = g + h * m.f;
    if (!g.is_zero()) return g;
  }
}

std::vector<std::vector<long long>> integral_cone_points(const Model& m, int want) {
  std::vector<std::vector<long long>> out;
  std::set<std::vector<long long>> seen;

  // must admit a monomial witness inside the truncated ring
  FiltrationConfig fc;
  auto usable = [&](const std::vector<long long>& k) {
    for (int axis = 0; axis < 3; ++axis) {
      Exp3 u{};
      long long need = 0;
      for (int n = 0; n < m.nodes(); ++n) {
        long long l = m.normal(n)[static_cast<std::size_t>(axis)];
        need = std::max(need, (k[static_cast<std::size_t>(n)] + l - 1) / l);
      }
      u[static_cast<std::size_t>(axis)] = need;
      if (need <= fc.degree) return true;
    }
    return false;
  };
  auto try_add = [&](const std::vector<long long>& k) {
    if (static_cast<int>(out.size()) >= want) return;
    for (auto v : k)
      if (v <= 0) return;
    if (!usable(k)) return;
    if (seen.count(k)) return;
    Cycle z;
    for (auto v : k) z.push_back(rat(v));
    if (!cone_contains(m, z).ok) return;
    seen.insert(k);
    out.push_back(k);
  };

  std::vector<Rat> epsilons{rat(1, 2), rat(1, 4), rat(1, 3), rat(1, 8), rat(1, 5), rat(1, 16)};
  for (auto& eps : epsilons) {
    if (static_cast<int>(out.size()) >= want) break;
    Cycle z = cone_sample(m, eps);
    std::vector<long long> fl;
    for (auto& v : z) fl.push_back(to_ll(rat_floor(v)));
    try_add(fl);
    std::vector<long long> fl2 = fl;
    for (auto& v : fl2) v *= 2;
    try_add(fl2);
    // primitive integral point on the sample's ray
    Int den(1);
    for (auto& v : z) den = den * v.get_den() / gcd(den, Int(v.get_den()));
    std::vector<Int> scaled;
    Int g(0);
    for (auto& v : z) {
      Int s = v.get_num() * (den / v.get_den());
      g = gcd(g, s);
      scaled.push_back(s);
    }
    std::vector<long long> prim;
    for (auto& s : scaled) prim.push_back(to_ll(s / g));
    try_add(prim);
  }
  // the weight vector of f itself is the limit of the sampler's outputs
  try_add(m.wt_f());
  return out;
}

CriterionResult criterion_golden(const VerifyConfig& cfg) {
  (void)cfg;
  Timer t;
  CriterionResult r{1, "golden fixture: weight vectors, suspension data, |H|", true, "", 0};
  try {
    Model m = model_of(kSuspensionFixture);
    auto expect = [&](const std::string& what, const std::vector<long long>& got,
                      const std::vector<long long>& want) {
      if (got != want) {
        r.pass = false;
        r.detail += what + " = " + vec_str(got) + " expected " + vec_str(want) + "; ";
      }
    };
    expect("wt x", m.wt_point({1, 0, 0}), {3, 7, 14});
    expect("wt y", m.wt_point({0, 1, 0}), {2, 7, 35});
    expect("wt z", m.wt_point({0, 0, 1}), {2, 6, 18});
    expect("wt f", m.wt_f(), {14, 42, 126});

    LaurentPoly f0 = LaurentPoly::parse("x^9 + x^4*y^2 + x^2*y^4 + y^7");
    SuspensionData sd = analyze_suspension(f0, 7);
    expect("(sx,ax,sy,ay,sz)", {sd.sx, sd.ax, sd.sy, sd.ay, sd.sz}, {7, 2, 1, 2, 4});

    Int want_h(21952);
    Int via_formula = h_order(sd);
    Int via_char = characteristic_polynomial(sd).value_at_one();
    Int via_group = suspension_group(sd).order();
    if (via_formula != want_h || via_char != want_h || via_group != want_h) {
      r.pass = false;
      r.detail += "|H| = " + via_formula.get_str() + "/" + via_char.get_str() + "/" +
                  via_group.get_str() + " expected 21952; ";
    }
    if (r.pass) r.detail = "weight vectors, suspension data and |H| = 21952 all exact";
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return finish(r, t, 5.0);
}

CriterionResult criterion_zeta_vs_closed(const VerifyConfig& cfg) {
  Timer t;
  CriterionResult r{2, "reduced zeta expansion equals the closed form", true, "", 0};
  try {
    int checked = 0;
    auto check = [&](const Model& m, const SuspensionData& sd, const std::string& name) {
      Box box = zeta_box(m, 45);
      MultiSeries direct = zeta_reduced_suspension(m, sd, box, cfg.parallel);
      MultiSeries closed = expand_closed_form(zeta_closed_form(m), box);
      if (!(direct == closed)) {
        r.pass = false;
        r.detail += "mismatch on " + name + "; ";
        return;
      }
      ++checked;
    };

    {
      LaurentPoly f0 = LaurentPoly::parse("x^9 + x^4*y^2 + x^2*y^4 + y^7");
      SuspensionData sd = analyze_suspension(f0, 7);
      check(model_of(kSuspensionFixture), sd, "the golden fixture");
    }
    Rng rng(cfg.seed);
    for (int i = 0; i < 20 && r.pass; ++i) {
      auto rs = random_suspension_diagram(rng);
      if (!rs) {
        r.pass = false;
        r.detail += "sampler failed to produce a gate-passing diagram; ";
        break;
      }
      check(analyze(suspension_poly(rs->f0, rs->n)), rs->sd,
            "diagram " + std::to_string(i) + ": " + rs->f0.str() + " (+z^" + std::to_string(rs->n) + ")");
    }
    if (r.pass)
      r.detail = "direct group-ring expansion equals the closed form on " + std::to_string(checked) +
                 " diagrams (first-node exponent <= 45)";
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return finish(r, t, 60.0);
}

CriterionResult criterion_group_orders(const VerifyConfig& cfg) {
  Timer t;
  CriterionResult r{3, "three-way agreement of |H|", true, "", 0};
  try {
    int checked = 0;
    auto check = [&](const SuspensionData& sd, const std::string& name) {
      Int a = h_order(sd);
      Int b = characteristic_polynomial(sd).value_at_one();
      Int c = suspension_group(sd).order();
      if (a != b || b != c) {
        r.pass = false;
        r.detail += name + ": closed form " + a.get_str() + ", char poly " + b.get_str() +
                    ", end-generator quotient " + c.get_str() + "; ";
      } else {
        ++checked;
      }
    };
    check(analyze_suspension(LaurentPoly::parse("x^9 + x^4*y^2 + x^2*y^4 + y^7"), 7), "golden");
    check(analyze_suspension(LaurentPoly::parse("x^2 + y^3"), 5), "E8");
    Rng rng(cfg.seed);
    for (int i = 0; i < 20 && r.pass; ++i) {
      auto rs = random_suspension_diagram(rng);
      if (!rs) {
        r.pass = false;
        r.detail += "sampler failure; ";
        break;
      }
      check(rs->sd, "diagram " + std::to_string(i));
    }
    if (r.pass)
      r.detail = "closed form, characteristic polynomial at 1 and the end-generator quotient agree on " +
                 std::to_string(checked) + " diagrams";
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return finish(r, t, 10.0);
}

CriterionResult criterion_hilbert_oracle(const VerifyConfig& cfg) {
  Timer t;
  CriterionResult r{4, "brute-force image Hilbert data matches the closed form", true, "", 0};
  try {
    auto check = [&](const Model& m, const Box& kbox, const std::string& name) {
      long long pts = 1;
      for (auto h : kbox.hi) pts *= h + 1;
      MultiSeries h = hilbert_image_series(m, kbox, cfg.filt);
      MultiSeries p = poincare_from_hilbert(h);
      MultiSeries closed = expand_closed_form(zeta_closed_form(m, true), p.box);
      if (!(p == closed)) {
        r.pass = false;
        r.detail += "mismatch on " + name + "; ";
      } else {
        r.detail += name + ": " + std::to_string(pts) + " index points agree; ";
      }
    };
    check(model_of(kSuspensionFixture), Box{{4, 10, 20}}, "golden fixture");
    check(model_of(kBrieskorn237), Box{{200}}, "x^2+y^3+z^7");
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return finish(r, t, 120.0);
}

CriterionResult criterion_lift_equality(const VerifyConfig& cfg) {
  Timer t;
  CriterionResult r{5, "lifting succeeds and the filtrations agree on the cone", true, "", 0};
  try {
    for (const char* fixture : {kSuspensionFixture, kNonSuspensionFixture}) {
      Model m = model_of(fixture);
      auto ks = integral_cone_points(m, 5);
      if (static_cast<int>(ks.size()) < 5) {
        r.pass = false;
        r.detail += std::string("only ") + std::to_string(ks.size()) +
                    " integral cone points found for " + fixture + "; ";
        continue;
      }
      for (auto& k : ks) {
        auto pool = high_monomials(m, k, cfg.filt.degree);
        if (pool.empty()) {
          r.pass = false;
          r.detail += "no admissible monomials for k = " + vec_str(k) + "; ";
          continue;
        }
        const int samples = 50;
        std::vector<std::string> bad(samples);
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
        for (int s = 0; s < samples; ++s) {
          Rng rng = Rng(cfg.seed).fork(static_cast<std::uint64_t>(s) + 1000 * k[0]);
          try {
            LaurentPoly g = random_high_element(rng, m, pool);
            std::string diag;
            auto lifted = lift(m, g, k, cfg.filt, &diag);
            if (!lifted) {
              bad[static_cast<std::size_t>(s)] = "lift failed (" + diag + ")";
            } else {
              for (int n = 0; n < m.nodes(); ++n)
                if (lifted->weight(m.normal(n)) < k[static_cast<std::size_t>(n)])
                  bad[static_cast<std::size_t>(s)] = "lift output misses the target weight";
              auto mf = in_filtration(m, g, k, Filtration::Divisorial, cfg.filt);
              auto mg = in_filtration(m, g, k, Filtration::Order, cfg.filt);
              auto mi = in_filtration(m, g, k, Filtration::Image, cfg.filt);
              if (mf != Membership::In || mg != Membership::In || mi != Membership::In)
                bad[static_cast<std::size_t>(s)] =
                    "memberships disagree: div " + std::to_string(static_cast<int>(mf)) + " ord " +
                    std::to_string(static_cast<int>(mg)) + " img " +
                    std::to_string(static_cast<int>(mi)) + " for g = " + g.str();
            }
          } catch (const std::exception& e) {
            bad[static_cast<std::size_t>(s)] = std::string("exception: ") + e.what();
          }
        }
        for (int s = 0; s < samples; ++s)
          if (!bad[static_cast<std::size_t>(s)].empty()) {
            r.pass = false;
            r.detail += "counterexample candidate at f = " + std::string(fixture) +
                        ", k = " + vec_str(k) + ", sample " + std::to_string(s) + ": " +
                        bad[static_cast<std::size_t>(s)] + "; ";
            break;
          }
      }
    }
    if (r.pass) r.detail = "2 fixtures x 5 cone points x 50 elements: lift + triple membership agree";
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return finish(r, t, 120.0);
}

CriterionResult criterion_inclusion_chain(const VerifyConfig& cfg) {
  Timer t;
  CriterionResult r{6, "inclusion chain image => order => divisorial", true, "", 0};
  try {
    std::vector<Model> models;
    models.push_back(model_of(kSuspensionFixture));
    models.push_back(model_of(kNonSuspensionFixture));
    models.push_back(model_of(kBrieskorn237));

    const int total = 510;
    std::vector<std::string> bad(total);
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
    for (int s = 0; s < total; ++s) {
      Rng rng = Rng(cfg.seed ^ 0x5eedULL).fork(static_cast<std::uint64_t>(s));
      const Model& m = models[static_cast<std::size_t>(s) % models.size()];
      try {
        std::vector<long long> k;
        for (int n = 0; n < m.nodes(); ++n) k.push_back(rng.range(0, m.level(n) + 5));
        LaurentPoly g = random_poly(rng, 5, 12, 3);
        auto mi = in_filtration(m, g, k, Filtration::Image, cfg.filt);
        auto mg = in_filtration(m, g, k, Filtration::Order, cfg.filt);
        auto mf = in_filtration(m, g, k, Filtration::Divisorial, cfg.filt);
        if (mi == Membership::Inconclusive || mg == Membership::Inconclusive ||
            mf == Membership::Inconclusive)
          bad[static_cast<std::size_t>(s)] = "inconclusive verdict at k = " + vec_str(k);
        else if ((mi == Membership::In && mg == Membership::Out) ||
                 (mg == Membership::In && mf == Membership::Out))
          bad[static_cast<std::size_t>(s)] =
              "chain violated at k = " + vec_str(k) + ", g = " + g.str();
      } catch (const std::exception& e) {
        bad[static_cast<std::size_t>(s)] = std::string("exception: ") + e.what();
      }
    }
    int violations = 0;
    for (auto& b : bad)
      if (!b.empty()) {
        ++violations;
        if (r.pass) {
          r.pass = false;
          r.detail += b + "; ";
        }
      }
    if (r.pass)
      r.detail = std::to_string(total) + " random (element, index) pairs, zero violations";
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return finish(r, t, 60.0);
}

CriterionResult criterion_structural(const VerifyConfig& cfg) {
  Timer t;
  CriterionResult r{7, "structural invariants of the lattice and the cone", true, "", 0};
  try {
    std::vector<std::pair<std::string, Model>> models;
    models.emplace_back("golden", model_of(kSuspensionFixture));
    models.emplace_back("non-suspension", model_of(kNonSuspensionFixture));
    Rng drng(cfg.seed ^ 0xd1a6ULL);
    for (int i = 0; i < 5; ++i) {
      auto rs = random_suspension_diagram(drng);
      if (!rs) throw Error("sampler failure");
      models.emplace_back("random " + std::to_string(i), analyze(suspension_poly(rs->f0, rs->n)));
    }

    int closure_checked = 0, dilation_checked = 0;
    for (auto& [name, m] : models) {
      // intersection form invariants, re-derived here rather than trusting
      // the constructor
      if (!is_negative_definite(m.inter.m)) {
        r.pass = false;
        r.detail += name + ": intersection form not negative definite; ";
      }
      for (int n = 0; n < m.nodes(); ++n) {
        RVec3 acc{Rat(0), Rat(0), Rat(0)};
        for (auto& e : m.graph.edges)
          if (e.a == n || e.b == n) {
            const Weight& lo = m.normal(e.a == n ? e.b : e.a);
            for (int c = 0; c < 3; ++c)
              acc[static_cast<std::size_t>(c)] += rat(e.t, e.alpha) * gl(lo[static_cast<std::size_t>(c)]);
          }
        for (auto& l : m.graph.legs)
          if (l.node == n) {
            const Weight& lo = m.np.facet(l.facet).normal;
            for (int c = 0; c < 3; ++c)
              acc[static_cast<std::size_t>(c)] += rat(l.t, l.alpha) * gl(lo[static_cast<std::size_t>(c)]);
          }
        for (int c = 0; c < 3; ++c)
          if (m.inter.e[static_cast<std::size_t>(n)] * gl(m.normal(n)[static_cast<std::size_t>(c)]) +
                  acc[static_cast<std::size_t>(c)] !=
              0) {
            r.pass = false;
            r.detail += name + ": self-intersection relation fails at node " + std::to_string(n) + "; ";
          }
      }

      // pool of verified cone members
      std::vector<Cycle> pool;
      for (auto& eps : {rat(1, 2), rat(1, 4), rat(1, 9), rat(1, 32)}) {
        Cycle z = cone_sample(m, eps);
        if (!lipman_contains(m.inter, z)) {
          r.pass = false;
          r.detail += name + ": cone sample escapes the Lipman cone; ";
        }
        pool.push_back(std::move(z));
      }
      auto ip = integral_cone_points(m, 4);
      for (auto& k : ip) {
        Cycle z;
        for (auto v : k) z.push_back(rat(v));
        pool.push_back(std::move(z));
      }

      // closure under scaling and addition
      Rng rng(cfg.seed ^ 0xc105e0ULL);
      for (int i = 0; i < 60; ++i) {
        const Cycle& a = pool[rng.below(pool.size())];
        const Cycle& b = pool[rng.below(pool.size())];
        Rat lambda = rat(rng.range(0, 8), rng.range(1, 4));
        Cycle sum(a.size()), scaled(a.size());
        for (std::size_t j = 0; j < a.size(); ++j) {
          sum[j] = a[j] + b[j];
          scaled[j] = lambda * a[j];
        }
        if (!cone_contains(m, sum).ok || !cone_contains(m, scaled).ok) {
          r.pass = false;
          r.detail += name + ": cone not closed under addition/scaling; ";
          break;
        }
        ++closure_checked;
      }

      // facet dilation forces polyhedron containment
      for (auto& z : pool)
        for (int n = 0; n < m.nodes(); ++n)
          for (auto& [rho, u] : dilation_params(m, z, n)) {
            if (!check_dilation_containment(m, z, n, rho, u)) {
              r.pass = false;
              r.detail += name + ": dilation containment fails at node " + std::to_string(n) + "; ";
            }
            ++dilation_checked;
          }
    }
    if (closure_checked < 100) {
      r.pass = false;
      r.detail += "only " + std::to_string(closure_checked) + " closure pairs checked; ";
    }
    if (dilation_checked < 100) {
      r.pass = false;
      r.detail += "only " + std::to_string(dilation_checked) + " dilation triples checked; ";
    }
    if (r.pass)
      r.detail = "definiteness + normal relation on 7 diagrams, " + std::to_string(closure_checked) +
                 " closure pairs, " + std::to_string(dilation_checked) + " dilation checks";
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return finish(r, t, 60.0);
}

std::vector<CriterionResult> run_criteria(const VerifyConfig& cfg, const std::vector<int>& ids) {
  std::vector<CriterionResult> out;
  for (int id : ids) {
    switch (id) {
      case 1: out.push_back(criterion_golden(cfg)); break;
      case 2: out.push_back(criterion_zeta_vs_closed(cfg)); break;
      case 3: out.push_back(criterion_group_orders(cfg)); break;
      case 4: out.push_back(criterion_hilbert_oracle(cfg)); break;
      case 5: out.push_back(criterion_lift_equality(cfg)); break;
      case 6: out.push_back(criterion_inclusion_chain(cfg)); break;
      case 7: out.push_back(criterion_structural(cfg)); break;
      default: throw PrecondError("unknown criterion id");
    }
  }
  return out;
}

}  // namespace newt
