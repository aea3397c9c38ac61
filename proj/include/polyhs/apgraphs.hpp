#pragma once

// Hypergraphs of arithmetic progressions on a finite set S of naturals.
// Edges are intersections of S with progressions {a0, a0+d, ...} whose
// difference comes from a generator D and whose start is reachable from an
// offset in M by stepping down in multiples of d.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polyhs/core.hpp"

namespace polyhs {

enum class GeneratorKind { Explicit, Powers, BiPowers, TriPowers, DivisorChain };

enum class APMode { Finite, Infinite };

struct APSpec {
  GeneratorKind kind = GeneratorKind::Powers;
  // Explicit: the list. Powers: {t}. BiPowers: {p, q}. TriPowers: {p1, p2, p3}.
  // DivisorChain: d_1 | d_2 | ... (d_0 = 1 implicit).
  std::vector<std::uint64_t> params;
  std::set<std::uint64_t> offsets;
  bool all_offsets = false;  // M = all naturals
  APMode mode = APMode::Infinite;

  friend bool operator==(const APSpec&, const APSpec&) = default;
};

inline std::string generator_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::Explicit: return "explicit";
    case GeneratorKind::Powers: return "powers";
    case GeneratorKind::BiPowers: return "biPowers";
    case GeneratorKind::TriPowers: return "triPowers";
    case GeneratorKind::DivisorChain: return "divisorChain";
  }
  return "unknown";
}

inline GeneratorKind parse_generator(const std::string& name) {
  if (name == "explicit") return GeneratorKind::Explicit;
  if (name == "powers") return GeneratorKind::Powers;
  if (name == "biPowers") return GeneratorKind::BiPowers;
  if (name == "triPowers") return GeneratorKind::TriPowers;
  if (name == "divisorChain") return GeneratorKind::DivisorChain;
  throw InvalidInput("unknown difference generator '" + name + "'");
}

inline void validate(const APSpec& spec) {
  const auto& p = spec.params;
  const auto need = [&](std::size_t count) {
    if (p.size() != count)
      throw InvalidInput(generator_name(spec.kind) + " takes " + std::to_string(count) + " parameter(s)");
  };
  const auto bases_ok = [&] {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < 2) throw InvalidInput("generator bases must be >= 2");
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (std::gcd(p[i], p[j]) != 1) throw InvalidInput("generator bases must be pairwise coprime");
    }
  };
  switch (spec.kind) {
    case GeneratorKind::Explicit:
      for (auto d : p)
        if (d == 0) throw InvalidInput("explicit differences must be positive");
      break;
    case GeneratorKind::Powers: need(1); bases_ok(); break;
    case GeneratorKind::BiPowers: need(2); bases_ok(); break;
    case GeneratorKind::TriPowers: need(3); bases_ok(); break;
    case GeneratorKind::DivisorChain: {
      if (p.empty()) throw InvalidInput("divisor chain needs at least one entry");
      std::uint64_t prev = 1;
      for (auto d : p) {
        if (d <= prev || d % prev != 0)
          throw InvalidInput("divisor chain entries must increase strictly, each dividing the next");
        prev = d;
      }
      break;
    }
  }
}

namespace detail {

inline void products_up_to(const std::vector<std::uint64_t>& bases, std::size_t i, std::uint64_t acc,
                           std::uint64_t bound, std::vector<std::uint64_t>& out) {
  if (i == bases.size()) {
    out.push_back(acc);
    return;
  }
  for (std::uint64_t v = acc;; v *= bases[i]) {
    products_up_to(bases, i + 1, v, bound, out);
    if (v > bound / bases[i]) break;
  }
}

}  // namespace detail

/// Elements of D that are <= bound, ascending and duplicate-free.
inline std::vector<std::uint64_t> enumerate_differences(const APSpec& spec, std::uint64_t bound) {
  validate(spec);
  std::vector<std::uint64_t> out;
  if (bound == 0) return out;
  switch (spec.kind) {
    case GeneratorKind::Explicit:
      for (auto d : spec.params)
        if (d <= bound) out.push_back(d);
      break;
    case GeneratorKind::Powers:
    case GeneratorKind::BiPowers:
    case GeneratorKind::TriPowers: detail::products_up_to(spec.params, 0, 1, bound, out); break;
    case GeneratorKind::DivisorChain:
      out.push_back(1);
      for (auto d : spec.params)
        if (d <= bound) out.push_back(d);
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Some m >= 0 has a0 - m*d in M.
inline bool a0_admissible(std::uint64_t a0, std::uint64_t d, const std::set<std::uint64_t>& offsets,
                          bool all_offsets = false) {
  if (d == 0) throw InvalidInput("difference must be positive");
  if (all_offsets) return true;
  for (auto mu : offsets) {
    if (mu > a0) break;
    if ((a0 - mu) % d == 0) return true;
  }
  return false;
}

struct APEdgeLabel {
  std::uint64_t a0 = 0;
  std::uint64_t d = 1;
  std::optional<std::uint64_t> length;  // number of terms; empty for an infinite tail

  friend bool operator==(const APEdgeLabel&, const APEdgeLabel&) = default;
};

struct APHypergraph {
  Hypergraph graph;
  std::vector<std::uint64_t> labels;       // vertex i is labels[i]
  std::vector<APEdgeLabel> edge_labels;    // aligned with graph.edges()
};

/// Re-expands a label against S (ascending): the vertex indices it hits.
inline Edge expand_label(const APEdgeLabel& label, const std::vector<std::uint64_t>& labels) {
  Edge e;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto s = labels[i];
    if (s < label.a0 || (s - label.a0) % label.d != 0) continue;
    if (label.length && (s - label.a0) / label.d >= *label.length) continue;
    e.push_back(static_cast<Vertex>(i));
  }
  return e;
}

inline APHypergraph build_ap_hypergraph(const std::set<std::uint64_t>& s, const APSpec& spec) {
  validate(spec);
  if (s.empty()) throw InvalidInput("AP hypergraph needs a nonempty vertex set");
  std::vector<std::uint64_t> labels(s.begin(), s.end());
  const auto max_s = labels.back();
  const auto diffs = enumerate_differences(spec, std::max<std::uint64_t>(max_s, 1));

  std::map<Edge, APEdgeLabel> found;
  for (auto d : diffs) {
    for (std::uint64_t a0 = 0; a0 <= max_s; ++a0) {
      if (!a0_admissible(a0, d, spec.offsets, spec.all_offsets)) continue;
      Edge tail;
      std::vector<std::uint64_t> steps;
      for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] >= a0 && (labels[i] - a0) % d == 0) {
          tail.push_back(static_cast<Vertex>(i));
          steps.push_back((labels[i] - a0) / d);
        }
      if (tail.empty()) continue;
      if (spec.mode == APMode::Infinite) {
        found.try_emplace(tail, APEdgeLabel{a0, d, std::nullopt});
      } else {
        Edge prefix;
        for (std::size_t j = 0; j < tail.size(); ++j) {
          prefix.push_back(tail[j]);
          found.try_emplace(prefix, APEdgeLabel{a0, d, steps[j] + 1});
        }
      }
    }
  }
  std::vector<Edge> edges;
  for (const auto& [e, label] : found) edges.push_back(e);
  APHypergraph out{Hypergraph(labels.size(), std::move(edges)), std::move(labels), {}};
  for (const auto& e : out.graph.edges()) out.edge_labels.push_back(found.at(e));
  return out;
}

}  // namespace polyhs
