#pragma once

// JSON documents for every value the CLI reads or writes. Each top-level
// document carries "format": 1. Parse errors surface as InvalidInput.

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyhs/apgraphs.hpp"
#include "polyhs/constructions.hpp"
#include "polyhs/core.hpp"
#include "polyhs/embeddings.hpp"
#include "polyhs/geometry.hpp"
#include "polyhs/rational.hpp"
#include "polyhs/solvers.hpp"

namespace polyhs::io {

using json = nlohmann::json;

inline constexpr int kFormat = 1;

inline json versioned(json body) {
  body["format"] = kFormat;
  return body;
}

inline void check_format(const json& j) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  if (j.contains("format") && j.at("format") != kFormat)
    throw InvalidInput("unsupported format version " + j.at("format").dump());
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
}

// --- rationals and points ---------------------------------------------------

inline json to_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.str();
}

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return guarded([&] { return Rational::parse(j.get<std::string>()); });
  throw InvalidInput("coordinate must be an integer or an \"n/d\" string");
}

inline json to_json(const PointSet& p) {
  json pts = json::array();
  for (const auto& pt : p.points) {
    json row = json::array();
    for (const auto& c : pt) row.push_back(to_json(c));
    pts.push_back(std::move(row));
  }
  return {{"dim", p.dim}, {"points", std::move(pts)}};
}

inline PointSet pointset_from_json(const json& j) {
  return guarded([&] {
    check_format(j);
    const auto dim = j.at("dim").get<std::size_t>();
    std::vector<Point> pts;
    for (const auto& row : j.at("points")) {
      Point pt;
      for (const auto& c : row) pt.push_back(rational_from_json(c));
      pts.push_back(std::move(pt));
    }
    return PointSet(dim, std::move(pts));
  });
}

// --- hypergraphs and sets ---------------------------------------------------

inline json to_json(const Hypergraph& h) { return {{"n", h.vertex_count()}, {"edges", h.edges()}}; }

inline Hypergraph hypergraph_from_json(const json& j) {
  return guarded([&] {
    check_format(j);
    const auto n = j.at("n").get<std::size_t>();
    auto edges = j.at("edges").get<std::vector<Edge>>();
    return Hypergraph(n, std::move(edges));
  });
}

inline json to_json(const ColorAssignment& chi) { return {{"k", chi.k}, {"colors", chi.colors}}; }

inline ColorAssignment coloring_from_json(const json& j) {
  return guarded([&] {
    check_format(j);
    return ColorAssignment(j.at("k").get<std::size_t>(), j.at("colors").get<std::vector<std::uint32_t>>());
  });
}

inline json to_json(const VertexSet& s) { return {{"members", s.members()}}; }

inline VertexSet vertexset_from_json(const json& j) {
  return guarded([&] {
    if (j.is_array()) return VertexSet(j.get<std::vector<Vertex>>());
    check_format(j);
    return VertexSet(j.at("members").get<std::vector<Vertex>>());
  });
}

inline json to_json(const ViolationWitness& w) {
  json out{{"edge", w.edge}, {"kind", to_string(w.kind)}};
  if (w.kind != ViolationKind::ZeroHit) out["value"] = w.value;
  return out;
}

inline ViolationKind violation_kind_from_string(const std::string& s) {
  if (s == "missing-color") return ViolationKind::MissingColor;
  if (s == "zero-hit") return ViolationKind::ZeroHit;
  if (s == "overflow") return ViolationKind::Overflow;
  throw InvalidInput("unknown violation kind '" + s + "'");
}

inline ViolationWitness witness_from_json(const json& j) {
  return guarded([&] {
    ViolationWitness w;
    w.edge = j.at("edge").get<Edge>();
    w.kind = violation_kind_from_string(j.at("kind").get<std::string>());
    w.value = j.value("value", std::size_t{0});
    return w;
  });
}

inline json to_json(const Verdict& v) {
  if (v.ok()) return {{"valid", true}};
  return {{"valid", false}, {"witness", to_json(*v.witness)}};
}

// --- families, strips, AP specs ---------------------------------------------

inline json to_json(const RangeFamily& f) {
  json out{{"name", family_name(f)}};
  if (f.tag == FamilyTag::StripUnion) out["s"] = f.s;
  return out;
}

inline RangeFamily family_from_json(const json& j) {
  return guarded([&] {
    if (j.is_string()) return parse_family(j.get<std::string>());
    return parse_family(j.at("name").get<std::string>(), j.value("s", std::size_t{1}));
  });
}

inline json to_json(const std::vector<Strip>& strips) {
  json arr = json::array();
  for (const auto& s : strips)
    arr.push_back({{"axis", s.axis == Axis::X ? "x" : "y"}, {"lo", to_json(s.lo)}, {"hi", to_json(s.hi)}});
  return {{"strips", std::move(arr)}};
}

inline std::vector<Strip> strips_from_json(const json& j) {
  return guarded([&] {
    const json& arr = j.is_array() ? j : (check_format(j), j.at("strips"));
    std::vector<Strip> out;
    for (const auto& s : arr) {
      const auto axis = s.at("axis").get<std::string>();
      if (axis != "x" && axis != "y") throw InvalidInput("strip axis must be \"x\" or \"y\"");
      out.push_back(Strip{axis == "x" ? Axis::X : Axis::Y, rational_from_json(s.at("lo")), rational_from_json(s.at("hi"))});
    }
    return out;
  });
}

inline json to_json(const APSpec& spec) {
  json out{{"generator", {{"kind", generator_name(spec.kind)}, {"params", spec.params}}},
           {"mode", spec.mode == APMode::Finite ? "finite" : "infinite"}};
  if (spec.all_offsets)
    out["M"] = "all";
  else
    out["M"] = spec.offsets;
  return out;
}

inline APSpec apspec_from_json(const json& j) {
  return guarded([&] {
    check_format(j);
    APSpec spec;
    const auto& g = j.at("generator");
    spec.kind = parse_generator(g.at("kind").get<std::string>());
    spec.params = g.at("params").get<std::vector<std::uint64_t>>();
    const auto& m = j.at("M");
    if (m.is_string()) {
      if (m.get<std::string>() != "all") throw InvalidInput("M must be an array or \"all\"");
      spec.all_offsets = true;
    } else {
      spec.offsets = m.get<std::set<std::uint64_t>>();
    }
    const auto mode = j.value("mode", std::string("infinite"));
    if (mode != "finite" && mode != "infinite") throw InvalidInput("mode must be \"finite\" or \"infinite\"");
    spec.mode = mode == "finite" ? APMode::Finite : APMode::Infinite;
    validate(spec);
    return spec;
  });
}

inline json to_json(const APEdgeLabel& l) {
  json out{{"a0", l.a0}, {"d", l.d}};
  if (l.length)
    out["length"] = *l.length;
  else
    out["length"] = "inf";
  return out;
}

inline APEdgeLabel ap_label_from_json(const json& j) {
  APEdgeLabel l;
  l.a0 = j.at("a0").get<std::uint64_t>();
  l.d = j.at("d").get<std::uint64_t>();
  const auto& len = j.at("length");
  if (len.is_string()) {
    if (len.get<std::string>() != "inf") throw InvalidInput("length must be a count or \"inf\"");
  } else {
    l.length = len.get<std::uint64_t>();
  }
  return l;
}

inline json to_json(const APHypergraph& ap) {
  json labels = json::array();
  for (const auto& l : ap.edge_labels) labels.push_back(to_json(l));
  json out = to_json(ap.graph);
  out["labels"] = ap.labels;
  out["edge_labels"] = std::move(labels);
  return out;
}

inline APHypergraph aphypergraph_from_json(const json& j) {
  return guarded([&] {
    APHypergraph ap;
    ap.graph = hypergraph_from_json(j);
    ap.labels = j.at("labels").get<std::vector<std::uint64_t>>();
    for (const auto& l : j.at("edge_labels")) ap.edge_labels.push_back(ap_label_from_json(l));
    if (ap.labels.size() != ap.graph.vertex_count() || ap.edge_labels.size() != ap.graph.edge_count())
      throw InvalidInput("label counts do not match the hypergraph");
    return ap;
  });
}

// --- instances ----------------------------------------------------------------

inline json to_json(const ConstructionInstance& inst) {
  return {{"kind", inst.kind},
          {"params", inst.params},
          {"family", to_json(inst.family)},
          {"theorem_regime", inst.theorem_regime},
          {"points", to_json(inst.points)},
          {"groups", inst.groups}};
}

inline ConstructionInstance instance_from_json(const json& j) {
  return guarded([&] {
    check_format(j);
    ConstructionInstance inst;
    inst.kind = j.at("kind").get<std::string>();
    inst.params = j.at("params").get<std::map<std::string, std::int64_t>>();
    inst.family = family_from_json(j.at("family"));
    inst.theorem_regime = j.value("theorem_regime", true);
    inst.points = pointset_from_json(j.at("points"));
    inst.groups = j.at("groups").get<std::map<std::string, std::vector<Vertex>>>();
    for (const auto& [name, members] : inst.groups)
      for (auto v : members)
        if (v >= inst.points.size()) throw InvalidInput("group '" + name + "' references a missing point");
    return inst;
  });
}

inline json to_json(const DualStripInstance& inst) {
  json out = to_json(inst.strips);
  out["kind"] = "thm3";
  out["params"] = {{"k", inst.k}, {"copies", inst.copies}};
  out["hypergraph"] = to_json(inst.graph);
  return out;
}

inline DualStripInstance dual_instance_from_json(const json& j) {
  return guarded([&] {
    check_format(j);
    DualStripInstance inst;
    inst.strips = strips_from_json(j);
    const auto& params = j.at("params");
    inst.k = params.at("k").get<std::size_t>();
    inst.copies = params.at("copies").get<std::size_t>();
    inst.graph = j.contains("hypergraph") ? hypergraph_from_json(j.at("hypergraph")) : dual_strips_hypergraph(inst.strips);
    return inst;
  });
}

// --- embeddings -----------------------------------------------------------------

inline json to_json(const Correspondence& c) {
  json pairs = json::array();
  for (const auto& [l, i] : c.pairs) pairs.push_back({l, i});
  return {{"direction", direction_name(c.direction)}, {"family", to_json(c.family)}, {"pairs", std::move(pairs)}};
}

inline MapDirection direction_from_string(const std::string& s) {
  for (auto d : {MapDirection::NaturalsToPoints, MapDirection::PointsToNaturals, MapDirection::PointsToPoints})
    if (direction_name(d) == s) return d;
  throw InvalidInput("unknown map direction '" + s + "'");
}

inline Correspondence correspondence_from_json(const json& j) {
  return guarded([&] {
    check_format(j);
    Correspondence c;
    c.direction = direction_from_string(j.at("direction").get<std::string>());
    c.family = family_from_json(j.at("family"));
    for (const auto& pr : j.at("pairs")) c.pairs.emplace_back(pr.at(0).get<std::uint64_t>(), pr.at(1).get<std::size_t>());
    return c;
  });
}

inline json to_json(const PreservationReport& r) {
  json out{{"status", r.preserved ? "all-preserved" : "failed"},
           {"family", to_json(r.family)},
           {"direction", direction_name(r.direction)}};
  if (r.failing_edge) out["failing_edge"] = *r.failing_edge;
  if (r.failing_image) out["failing_image"] = *r.failing_image;
  return out;
}

// --- solver results ---------------------------------------------------------------

/// `with_time` off drops wall-clock fields so deterministic runs serialize identically.
inline json to_json(const SolveResult& r, bool with_time) {
  json out{{"status", to_string(r.status)}, {"nodes", r.nodes}, {"depth", r.depth}};
  if (r.coloring) out["witness"] = {{"coloring", to_json(*r.coloring)}};
  if (r.hitting_set) out["witness"] = {{"hitting_set", r.hitting_set->members()}};
  if (with_time) out["millis"] = r.millis;
  return out;
}

inline json to_json(const MRecord& rec) {
  json out{{"instance", rec.instance_id}, {"k", rec.k}, {"m", rec.m}, {"status", to_string(rec.status)}};
  if (rec.coloring) out["coloring"] = to_json(*rec.coloring);
  if (rec.below) out["below"] = {{"m", rec.m - 1}, {"status", to_string(*rec.below)}, {"nodes", rec.nodes_below}};
  return out;
}

// --- files --------------------------------------------------------------------------

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace polyhs::io
