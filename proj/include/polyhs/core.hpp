#pragma once

// Hypergraph algebra: restrictions, induced subhypergraphs and validity checks
// for polychromatic colorings and shallow hitting sets.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyhs {

using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;

/// Malformed input: out-of-range indices, length mismatches, bad parameters.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A proof-derived procedure failed to produce its guaranteed witness. Either
/// the construction is wrong or the theorem it mechanizes is false.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Finite hypergraph on vertices [0, n). Edges are kept sorted, duplicate-free,
/// nonempty, and the edge list itself is sorted lexicographically and deduplicated.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::size_t n) : n_(n) {}
  Hypergraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) { normalize(); }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool empty() const { return edges_.empty(); }

  std::size_t max_edge_size() const {
    std::size_t best = 0;
    for (const auto& e : edges_) best = std::max(best, e.size());
    return best;
  }

  bool contains(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  void normalize() {
    for (auto& e : edges_) {
      std::sort(e.begin(), e.end());
      e.erase(std::unique(e.begin(), e.end()), e.end());
      if (!e.empty() && e.back() >= n_)
        throw InvalidInput("edge vertex " + std::to_string(e.back()) + " out of range for n=" + std::to_string(n_));
    }
    std::erase_if(edges_, [](const Edge& e) { return e.empty(); });
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// k-coloring of the vertices; colors[v] in [0, k).
struct ColorAssignment {
  std::size_t k = 1;
  std::vector<std::uint32_t> colors;

  ColorAssignment() = default;
  ColorAssignment(std::size_t k_, std::vector<std::uint32_t> colors_) : k(k_), colors(std::move(colors_)) {
    if (k == 0) throw InvalidInput("coloring needs at least one color");
    for (auto c : colors)
      if (c >= k) throw InvalidInput("color " + std::to_string(c) + " out of range for k=" + std::to_string(k));
  }
  friend bool operator==(const ColorAssignment&, const ColorAssignment&) = default;
};

/// Sorted duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }
  VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

  const std::vector<Vertex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

  /// Membership mask of length n; throws if a member is >= n.
  std::vector<char> mask(std::size_t n) const {
    std::vector<char> m(n, 0);
    for (auto v : members_) {
      if (v >= n) throw InvalidInput("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
      m[v] = 1;
    }
    return m;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

enum class ViolationKind { MissingColor, ZeroHit, Overflow };

/// A violating edge. `value` is the missing color for MissingColor and the
/// hit count |e ∩ U| for Overflow; it is 0 for ZeroHit.
struct ViolationWitness {
  Edge edge;
  ViolationKind kind = ViolationKind::ZeroHit;
  std::size_t value = 0;

  friend bool operator==(const ViolationWitness&, const ViolationWitness&) = default;
};

/// Outcome of a check: valid, or a witness naming the first violating edge.
struct Verdict {
  std::optional<ViolationWitness> witness;

  bool ok() const { return !witness.has_value(); }
  explicit operator bool() const { return ok(); }
};

inline std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::MissingColor: return "missing-color";
    case ViolationKind::ZeroHit: return "zero-hit";
    case ViolationKind::Overflow: return "overflow";
  }
  return "unknown";
}

inline Hypergraph restrict_at_least(const Hypergraph& h, std::size_t m) {
  std::vector<Edge> kept;
  for (const auto& e : h.edges())
    if (e.size() >= m) kept.push_back(e);
  return Hypergraph(h.vertex_count(), std::move(kept));
}

inline Hypergraph restrict_exact(const Hypergraph& h, std::size_t m) {
  std::vector<Edge> kept;
  for (const auto& e : h.edges())
    if (e.size() == m) kept.push_back(e);
  return Hypergraph(h.vertex_count(), std::move(kept));
}

/// Induced subhypergraph on `subset`: vertex i of the result is subset.members()[i];
/// edges are the nonempty intersections, deduplicated.
inline Hypergraph induced_subhypergraph(const Hypergraph& h, const VertexSet& subset) {
  const auto n = h.vertex_count();
  std::vector<std::int64_t> position(n, -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const auto v = subset.members()[i];
    if (v >= n) throw InvalidInput("induced subhypergraph: vertex " + std::to_string(v) + " out of range");
    position[v] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> edges;
  for (const auto& e : h.edges()) {
    Edge image;
    for (auto v : e)
      if (position[v] >= 0) image.push_back(static_cast<Vertex>(position[v]));
    if (!image.empty()) edges.push_back(std::move(image));
  }
  return Hypergraph(subset.size(), std::move(edges));
}

inline Verdict is_polychromatic(const Hypergraph& h, const ColorAssignment& chi) {
  if (chi.colors.size() != h.vertex_count())
    throw InvalidInput("coloring has length " + std::to_string(chi.colors.size()) + " but hypergraph has " +
                       std::to_string(h.vertex_count()) + " vertices");
  std::vector<char> seen(chi.k);
  for (const auto& e : h.edges()) {
    std::fill(seen.begin(), seen.end(), 0);
    for (auto v : e) seen[chi.colors[v]] = 1;
    const auto missing = std::find(seen.begin(), seen.end(), 0);
    if (missing != seen.end())
      return {ViolationWitness{e, ViolationKind::MissingColor, static_cast<std::size_t>(missing - seen.begin())}};
  }
  return {};
}

inline std::size_t hit_count(const Edge& e, const std::vector<char>& mask) {
  std::size_t hits = 0;
  for (auto v : e) hits += mask[v] ? 1 : 0;
  return hits;
}

inline Verdict is_shallow_hitting(const Hypergraph& h, const VertexSet& u, std::size_t c) {
  const auto mask = u.mask(h.vertex_count());
  for (const auto& e : h.edges()) {
    const auto hits = hit_count(e, mask);
    if (hits == 0) return {ViolationWitness{e, ViolationKind::ZeroHit, 0}};
    if (hits > c) return {ViolationWitness{e, ViolationKind::Overflow, hits}};
  }
  return {};
}

inline bool is_sperner(const Hypergraph& h) {
  const auto& edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (i == j || edges[i].size() > edges[j].size()) continue;
      if (std::includes(edges[j].begin(), edges[j].end(), edges[i].begin(), edges[i].end())) return false;
    }
  return true;
}

/// Collapses the listed color classes into one. Remaining colors keep their
/// relative order; the merged class takes the slot of its smallest member.
inline ColorAssignment merge_colors(const ColorAssignment& chi, const std::set<std::uint32_t>& classes) {
  if (classes.empty()) throw InvalidInput("merge_colors: empty class set");
  if (*classes.rbegin() >= chi.k) throw InvalidInput("merge_colors: class index out of range");
  std::vector<std::uint32_t> remap(chi.k);
  std::uint32_t next = 0;
  std::optional<std::uint32_t> merged_id;
  for (std::uint32_t c = 0; c < chi.k; ++c) {
    if (classes.count(c)) {
      if (!merged_id) merged_id = next++;
      remap[c] = *merged_id;
    } else {
      remap[c] = next++;
    }
  }
  std::vector<std::uint32_t> colors(chi.colors.size());
  std::transform(chi.colors.begin(), chi.colors.end(), colors.begin(), [&](auto c) { return remap[c]; });
  return ColorAssignment(next, std::move(colors));
}

}  // namespace polyhs
