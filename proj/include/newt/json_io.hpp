#pragma once

#include <json.hpp>

#include "newt/cone.hpp"
#include "newt/filtration.hpp"
#include "newt/model.hpp"
#include "newt/series.hpp"

namespace newt {

// Exact rationals are serialized as {"num": "...", "den": "..."} strings so
// no consumer is tempted to round them.
inline nlohmann::json to_json(const Rat& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

inline nlohmann::json to_json(const Exp3& e) { return {e[0], e[1], e[2]}; }

inline nlohmann::json to_json(const RVec3& v) {
  return {to_json(v[0]), to_json(v[1]), to_json(v[2])};
}

inline nlohmann::json to_json(const NewtonPolyhedron& np) {
  nlohmann::json facets = nlohmann::json::array();
  for (auto& f : np.facets) {
    nlohmann::json verts = nlohmann::json::array();
    for (auto& v : f.verts) verts.push_back(to_json(v));
    facets.push_back({{"normal", to_json(f.normal)},
                      {"level", f.level},
                      {"compact", f.compact},
                      {"vertices", verts}});
  }
  nlohmann::json verts = nlohmann::json::array();
  for (auto& v : np.vertices) verts.push_back(to_json(v));
  return {{"vertices", verts}, {"facets", facets}, {"compact_count", np.num_compact}};
}

inline nlohmann::json to_json(const DualGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto& e : g.edges)
    edges.push_back({{"a", e.a}, {"b", e.b}, {"t", e.t}, {"alpha", e.alpha}});
  nlohmann::json legs = nlohmann::json::array();
  for (auto& l : g.legs)
    legs.push_back({{"node", l.node}, {"facet", l.facet}, {"t", l.t}, {"alpha", l.alpha}});
  return {{"nodes", g.nodes},
          {"edges", edges},
          {"legs", legs},
          {"leg_total", g.leg_total},
          {"degree", g.degree},
          {"tree", g.is_tree()}};
}

inline nlohmann::json to_json(const IntersectionData& d) {
  nlohmann::json m = nlohmann::json::array();
  for (auto& row : d.m) {
    nlohmann::json jr = nlohmann::json::array();
    for (auto& v : row) jr.push_back(to_json(v));
    m.push_back(jr);
  }
  nlohmann::json duals = nlohmann::json::array();
  for (auto& dc : d.dual) {
    nlohmann::json jr = nlohmann::json::array();
    for (auto& v : dc) jr.push_back(to_json(v));
    duals.push_back(jr);
  }
  return {{"matrix", m}, {"dual_cycles", duals}, {"det", to_json(d.det)}};
}

inline nlohmann::json to_json(const MultiSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto& [k, v] : s.c) terms.push_back({{"e", key_vec(k, s.dim)}, {"c", v}});
  return {{"dim", s.dim}, {"box", s.box.hi}, {"terms", terms}};
}

inline nlohmann::json to_json(const ConeCertificate& c) {
  nlohmann::json j{{"ok", c.ok}, {"detail", c.detail}};
  if (!c.ok) {
    j["clause"] = c.clause;
    j["node"] = c.node;
    if (c.clause == 2) {
      j["other"] = c.other;
      j["rho"] = to_json(c.rho);
      j["u"] = to_json(c.u);
    }
  }
  return j;
}

inline const char* membership_str(Membership m) {
  switch (m) {
    case Membership::In: return "in";
    case Membership::Out: return "out";
    default: return "inconclusive-at-cap";
  }
}

}  // namespace newt
