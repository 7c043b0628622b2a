// Command-line front end: diagram analysis, cone membership and sampling,
// weights, filtration membership, lifting, Hilbert data, series expansion,
// suspension pipeline and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 internal invariant violation.

#include <CLI11.hpp>
#include <iostream>

#include "newt/json_io.hpp"
#include "newt/suspension.hpp"
#include "newt/verify.hpp"

using namespace newt;
using nlohmann::json;

namespace {

struct Options {
  std::string f;          // the polynomial
  std::string g;          // an element of its local ring
  std::string f0;         // plane polynomial for suspensions
  long long n = 0;        // suspension degree
  std::string k;          // comma-separated index vector
  std::string box;        // comma-separated box bounds
  std::string eps = "1/64";
  std::string which;
  std::string suite;
  std::string format = "json";
  std::string cycle;
  long long degree = 60;
  long long cap = 400;
  std::uint64_t seed = 20240801;
  long long count = 20;
  bool no_gate = false;
  bool serial = false;
};

std::vector<long long> parse_ll_list(const std::string& text) {
  std::vector<long long> out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (cur.empty()) throw ParseError("empty entry in list '" + text + "'");
      out.push_back(std::stoll(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (out.empty()) throw ParseError("empty list");
  return out;
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(text));
  return rat(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

Cycle parse_cycle(const std::string& text, int nodes) {
  std::vector<Rat> out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      out.push_back(parse_rat(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (static_cast<int>(out.size()) != nodes)
    throw ParseError("cycle needs exactly " + std::to_string(nodes) + " coordinates");
  return out;
}

FiltrationConfig filt_config(const Options& o) {
  FiltrationConfig c;
  c.degree = o.degree;
  c.degree_max = o.degree + 18;
  c.cap = o.cap;
  return c;
}

void emit(const json& j, const Options& o) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

int cmd_analyze(const Options& o) {
  LaurentPoly f = LaurentPoly::parse(o.f);
  Model m = analyze(f);
  if (o.format == "dot") {
    std::cout << dual_graph_dot(m.np, m.graph, &m.inter.e);
    return 0;
  }
  json j{{"schema", 1},
         {"f", f.str()},
         {"convenient", is_convenient(m.np)},
         {"polyhedron", to_json(m.np)},
         {"dual_graph", to_json(m.graph)},
         {"intersection", to_json(m.inter)},
         {"gate",
          {{"tree", m.gate.tree},
           {"no_interior_points", m.gate.no_interior_points},
           {"unit_segments", m.gate.unit_segments},
           {"pass", m.gate.pass()}}}};
  if (!is_convenient(m.np)) j["warning"] = "diagram is not convenient";
  emit(j, o);
  return 0;
}

int cmd_cone(const Options& o, const std::string& sub) {
  Model m = analyze(LaurentPoly::parse(o.f));
  if (sub == "check") {
    Cycle z = parse_cycle(o.cycle, m.nodes());
    ConeCertificate cert = cone_contains(m, z);
    json j{{"schema", 1}, {"certificate", to_json(cert)}, {"lipman", lipman_contains(m.inter, z)}};
    emit(j, o);
    return cert.ok ? 0 : 1;
  }
  Cycle z = cone_sample(m, parse_rat(o.eps));
  json coords = json::array();
  for (auto& v : z) coords.push_back(to_json(v));
  emit(json{{"schema", 1}, {"sample", coords}}, o);
  return 0;
}

int cmd_weights(const Options& o, bool divisorial) {
  Model m = analyze(LaurentPoly::parse(o.f));
  LaurentPoly g = LaurentPoly::parse(o.g);
  auto ws = divisorial ? div_weights(m, g, o.cap) : order_weights(m, g, o.cap);
  json vals = json::array();
  for (auto& w : ws) vals.push_back({{"value", w.value}, {"status", w.exact ? "exact" : "at-least"}});
  emit(json{{"schema", 1}, {"g", g.str()}, {divisorial ? "div" : "wt", vals}}, o);
  return 0;
}

int cmd_member(const Options& o) {
  Model m = analyze(LaurentPoly::parse(o.f));
  LaurentPoly g = LaurentPoly::parse(o.g);
  auto k = parse_ll_list(o.k);
  Filtration which = o.which == "F"   ? Filtration::Divisorial
                     : o.which == "G" ? Filtration::Order
                     : o.which == "I" ? Filtration::Image
                                      : throw ParseError("--which must be F, G or I");
  Membership r = in_filtration(m, g, k, which, filt_config(o));
  emit(json{{"schema", 1}, {"which", o.which}, {"k", k}, {"member", membership_str(r)}}, o);
  return 0;
}

int cmd_lift(const Options& o) {
  Model m = analyze(LaurentPoly::parse(o.f));
  LaurentPoly g = LaurentPoly::parse(o.g);
  auto k = parse_ll_list(o.k);
  std::string diag;
  auto lifted = lift(m, g, k, filt_config(o), &diag);
  if (!lifted) {
    emit(json{{"schema", 1}, {"lift", nullptr}, {"diagnostic", diag}}, o);
    return 1;
  }
  json wts = json::array();
  for (int n = 0; n < m.nodes(); ++n) wts.push_back(lifted->weight(m.normal(n)));
  emit(json{{"schema", 1}, {"lift", lifted->str()}, {"weights", wts}, {"status", "exact"}}, o);
  return 0;
}

int cmd_hilbert(const Options& o) {
  Model m = analyze(LaurentPoly::parse(o.f));
  auto k = parse_ll_list(o.k);
  json j{{"schema", 1}, {"k", k}};
  if (o.which == "Ghat") {
    j["dim"] = hilbert_ghat(m, k);
    j["status"] = "exact";
  } else {
    HilbertValue v = hilbert_image(m, k, filt_config(o));
    j["dim"] = v.dim;
    j["status"] = v.certified ? "certified-on-box" : "inconclusive-at-cap";
  }
  emit(j, o);
  return 0;
}

int cmd_series(const Options& o) {
  Model m = analyze(LaurentPoly::parse(o.f));
  Box box{parse_ll_list(o.box)};
  MultiSeries s;
  if (o.which == "PGhat") {
    Box kbox = box;
    for (auto& h : kbox.hi) ++h;
    s = poincare_from_hilbert(hilbert_ghat_series(m, kbox));
  } else if (o.which == "PI") {
    Box kbox = box;
    for (auto& h : kbox.hi) ++h;
    s = poincare_from_hilbert(hilbert_image_series(m, kbox, filt_config(o)));
  } else if (o.which == "zeta") {
    if (o.f0.empty() || o.n < 2)
      throw ParseError("zeta needs --f0 and -N describing the suspension");
    SuspensionData sd = analyze_suspension(LaurentPoly::parse(o.f0), o.n);
    if (!o.no_gate && !m.gate.pass()) throw PrecondError("gate failed; pass --no-rhs-gate to override");
    s = zeta_reduced_suspension(m, sd, box, !o.serial);
  } else {
    throw ParseError("--which must be PI, PGhat or zeta");
  }
  json j{{"schema", 1}, {"which", o.which}, {"series", to_json(s)}, {"status", "certified-on-box"}};
  emit(j, o);
  return 0;
}

int cmd_suspension(const Options& o, const std::string& sub) {
  if (sub == "fuzz") {
    Rng rng(o.seed);
    json out = json::array();
    for (long long i = 0; i < o.count; ++i) {
      auto rs = random_suspension_diagram(rng);
      if (!rs) throw Error("sampler failed to find a gate-passing diagram");
      out.push_back({{"f0", rs->f0.str()},
                     {"n", rs->n},
                     {"h_order", h_order(rs->sd).get_str()},
                     {"sx", rs->sd.sx},
                     {"sy", rs->sd.sy},
                     {"sz", rs->sd.sz}});
    }
    emit(json{{"schema", 1}, {"seed", o.seed}, {"diagrams", out}}, o);
    return 0;
  }
  SuspensionData sd = analyze_suspension(LaurentPoly::parse(o.f0), o.n);
  if (sub == "order") {
    emit(json{{"schema", 1},
              {"h_order", h_order(sd).get_str()},
              {"char_poly_at_1", characteristic_polynomial(sd).value_at_one().get_str()},
              {"end_quotient", suspension_group(sd).order().get_str()}},
         o);
    return 0;
  }
  Model m = analyze(suspension_poly(LaurentPoly::parse(o.f0), o.n));
  if (sub == "zeta") {
    ZetaClosedForm cf = zeta_closed_form(m, o.no_gate);
    json j{{"schema", 1},
           {"numerator_exponent", cf.wt_f},
           {"denominator_exponents", {cf.wt_xyz[0], cf.wt_xyz[1], cf.wt_xyz[2]}}};
    if (!o.box.empty()) {
      Box box{parse_ll_list(o.box)};
      j["expansion"] = to_json(expand_closed_form(cf, box));
    }
    emit(j, o);
    return 0;
  }
  // analyze
  json chain = json::array();
  for (auto& c : sd.chain) chain.push_back({c[0], c[1]});
  emit(json{{"schema", 1},
            {"n", sd.n},
            {"chain", chain},
            {"s", sd.s},
            {"levels", sd.m},
            {"alpha_z", sd.alpha_z},
            {"sx", sd.sx},
            {"sy", sd.sy},
            {"sz", sd.sz},
            {"ax", sd.ax},
            {"ay", sd.ay},
            {"minimal_diagram", sd.minimal},
            {"gate_pass", m.gate.pass()}},
       o);
  return 0;
}

int cmd_verify(const Options& o) {
  VerifyConfig cfg;
  cfg.seed = o.seed;
  cfg.parallel = !o.serial;
  cfg.filt = filt_config(o);
  std::vector<int> ids;
  if (o.suite == "intro")
    ids = {5, 6, 7};
  else if (o.suite == "susp")
    ids = {1, 3};
  else if (o.suite == "series")
    ids = {2, 4};
  else if (o.suite == "all")
    ids = {1, 2, 3, 4, 5, 6, 7};
  else
    throw ParseError("--suite must be intro, susp, series or all");
  auto results = run_criteria(cfg, ids);
  json out = json::array();
  bool all = true;
  for (auto& r : results) {
    out.push_back({{"criterion", r.id},
                   {"name", r.name},
                   {"pass", r.pass},
                   {"detail", r.detail},
                   {"seconds", r.seconds}});
    all = all && r.pass;
  }
  emit(json{{"schema", 1}, {"seed", o.seed}, {"suite", o.suite}, {"results", out}, {"pass", all}}, o);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of Newton nondegenerate surface singularities"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--degree", o.degree, "truncation degree of the power-series ring");
    c->add_option("--cap", o.cap, "reduction-loop step cap");
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--format", o.format, "json or text or dot");
    c->add_flag("--no-rhs-gate", o.no_gate, "bypass the rational-homology-sphere gate");
    c->add_flag("--serial", o.serial, "disable the parallel kernels");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "diagram, dual graph, intersection data");
  analyze_cmd->add_option("-f", o.f, "polynomial in x,y,z")->required();
  add_common(analyze_cmd);

  auto* cone_cmd = app.add_subcommand("cone", "equality-cone membership and sampling");
  auto* cone_check = cone_cmd->add_subcommand("check", "membership certificate");
  cone_check->add_option("-f", o.f)->required();
  cone_check->add_option("--cycle", o.cycle, "comma-separated rational coordinates")->required();
  add_common(cone_check);
  auto* cone_sample_cmd = cone_cmd->add_subcommand("sample", "construct a member");
  cone_sample_cmd->add_option("-f", o.f)->required();
  cone_sample_cmd->add_option("--epsilon", o.eps, "starting epsilon (rational)");
  add_common(cone_sample_cmd);

  auto* wt_cmd = app.add_subcommand("wt", "order weights of an element");
  wt_cmd->add_option("-f", o.f)->required();
  wt_cmd->add_option("-g", o.g)->required();
  add_common(wt_cmd);

  auto* div_cmd = app.add_subcommand("div", "divisorial weights of an element");
  div_cmd->add_option("-f", o.f)->required();
  div_cmd->add_option("-g", o.g)->required();
  add_common(div_cmd);

  auto* member_cmd = app.add_subcommand("member", "filtration membership");
  member_cmd->add_option("-f", o.f)->required();
  member_cmd->add_option("-g", o.g)->required();
  member_cmd->add_option("-k", o.k, "index vector")->required();
  member_cmd->add_option("--which", o.which, "F, G or I")->required();
  add_common(member_cmd);

  auto* lift_cmd = app.add_subcommand("lift", "representative with all weights >= k");
  lift_cmd->add_option("-f", o.f)->required();
  lift_cmd->add_option("-g", o.g)->required();
  lift_cmd->add_option("-k", o.k)->required();
  add_common(lift_cmd);

  auto* hilbert_cmd = app.add_subcommand("hilbert", "codimension of a filtration level");
  hilbert_cmd->add_option("-f", o.f)->required();
  hilbert_cmd->add_option("-k", o.k)->required();
  hilbert_cmd->add_option("--which", o.which, "Ghat or I")->required();
  add_common(hilbert_cmd);

  auto* series_cmd = app.add_subcommand("series", "series expansion over a box");
  series_cmd->add_option("-f", o.f)->required();
  series_cmd->add_option("--which", o.which, "PI, PGhat or zeta")->required();
  series_cmd->add_option("--box", o.box, "comma-separated box bounds")->required();
  series_cmd->add_option("--f0", o.f0, "plane polynomial (zeta)");
  series_cmd->add_option("-N", o.n, "suspension degree (zeta)");
  add_common(series_cmd);

  auto* susp_cmd = app.add_subcommand("suspension", "suspension pipeline");
  std::string susp_sub;
  for (const char* sub : {"analyze", "zeta", "order", "fuzz"}) {
    auto* c = susp_cmd->add_subcommand(sub);
    if (std::string(sub) != "fuzz") c->add_option("--f0", o.f0)->required();
    c->add_option("-N", o.n, "suspension degree");
    c->add_option("--box", o.box);
    c->add_option("--count", o.count);
    add_common(c);
  }

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", o.suite, "intro, susp, series or all")->required();
  add_common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(analyze_cmd)) return cmd_analyze(o);
    if (app.got_subcommand(cone_cmd)) {
      if (cone_cmd->got_subcommand("check")) return cmd_cone(o, "check");
      if (cone_cmd->got_subcommand("sample")) return cmd_cone(o, "sample");
      throw ParseError("cone needs a subcommand: check or sample");
    }
    if (app.got_subcommand(wt_cmd)) return cmd_weights(o, false);
    if (app.got_subcommand(div_cmd)) return cmd_weights(o, true);
    if (app.got_subcommand(member_cmd)) return cmd_member(o);
    if (app.got_subcommand(lift_cmd)) return cmd_lift(o);
    if (app.got_subcommand(hilbert_cmd)) return cmd_hilbert(o);
    if (app.got_subcommand(series_cmd)) return cmd_series(o);
    if (app.got_subcommand(susp_cmd)) {
      for (const char* sub : {"analyze", "zeta", "order", "fuzz"})
        if (susp_cmd->got_subcommand(sub)) return cmd_suspension(o, sub);
      throw ParseError("suspension needs a subcommand");
    }
    if (app.got_subcommand(verify_cmd)) return cmd_verify(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
