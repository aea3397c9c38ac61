#pragma once

// Shared generators and brute-force oracles. The oracles work on raw
// coordinates and never touch the rank-space machinery under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <ostream>
#include <set>
#include <vector>

#include "polyhs/polyhs.hpp"

namespace polyhs::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Small integer coordinates so ties are common.
inline PointSet random_points(Rng& rng, std::size_t n, std::size_t dim, std::int64_t spread) {
  std::vector<Point> pts(n);
  std::uniform_int_distribution<std::int64_t> coord(0, spread);
  for (auto& pt : pts)
    for (std::size_t a = 0; a < dim; ++a) pt.push_back(Rational(coord(rng), 1 + static_cast<std::int64_t>(rng() % 2)));
  return PointSet(dim, std::move(pts));
}

inline Hypergraph random_hypergraph(Rng& rng, std::size_t n, std::size_t edges, std::size_t max_size) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges; ++i) {
    const auto size = uniform(rng, 1, std::min(max_size, n));
    std::vector<Vertex> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
    std::shuffle(all.begin(), all.end(), rng);
    out.emplace_back(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
  }
  return Hypergraph(n, std::move(out));
}

/// Every coordinate axis is a random permutation of 0..n-1: no ties.
inline PointSet distinct_points(Rng& rng, std::size_t n, std::size_t dim) {
  std::vector<Point> pts(n);
  for (std::size_t a = 0; a < dim; ++a) {
    std::vector<std::int64_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < n; ++i) pts[i].push_back(Rational(perm[i]));
  }
  return PointSet(dim, pts);
}

inline std::set<std::uint64_t> upto(std::uint64_t hi) {
  std::set<std::uint64_t> s;
  for (std::uint64_t i = 0; i <= hi; ++i) s.insert(i);
  return s;
}

inline APSpec make_spec(GeneratorKind kind, std::vector<std::uint64_t> params, std::set<std::uint64_t> m,
                        APMode mode) {
  APSpec s;
  s.kind = kind;
  s.params = std::move(params);
  s.offsets = std::move(m);
  s.mode = mode;
  return s;
}

/// Differences prod base^e with every exponent >= 1, up to `bound`.
inline std::vector<std::uint64_t> strictly_mixed(const std::vector<std::uint64_t>& bases, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  std::uint64_t core = 1;
  for (auto b : bases) core *= b;
  for (std::uint64_t d = core; d <= bound; d += core) {
    auto r = d;
    for (auto b : bases)
      while (r % b == 0) r /= b;
    if (r == 1) out.push_back(d);
  }
  return out;
}

// --- capture oracle -----------------------------------------------------------

struct Interval {
  bool empty = false;
  std::optional<Rational> lo, hi;
  bool holds(const Rational& v) const { return !empty && (!lo || *lo <= v) && (!hi || v <= *hi); }
};

/// Every closed interval with endpoints drawn from the observed values, plus unbounded sides.
inline std::vector<Interval> candidate_intervals(const std::vector<Rational>& values, bool lower, bool upper) {
  std::vector<std::optional<Rational>> ends{std::nullopt};
  for (const auto& v : values) ends.emplace_back(v);
  std::vector<Interval> out;
  for (const auto& lo : (lower ? ends : std::vector<std::optional<Rational>>{std::nullopt}))
    for (const auto& hi : (upper ? ends : std::vector<std::optional<Rational>>{std::nullopt}))
      out.push_back(Interval{false, lo, hi});
  return out;
}

inline std::vector<Rational> axis_values(const PointSet& p, std::size_t axis) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < p.size(); ++i) v.push_back(p.coord(i, axis));
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

using Mask = std::uint32_t;

inline void boxes(const PointSet& p, const std::vector<std::pair<bool, bool>>& sides, std::set<Mask>& out) {
  std::vector<std::vector<Interval>> per_axis;
  for (std::size_t a = 0; a < sides.size(); ++a)
    per_axis.push_back(candidate_intervals(axis_values(p, a), sides[a].first, sides[a].second));
  std::vector<std::size_t> idx(sides.size(), 0);
  while (true) {
    Mask m = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      bool in = true;
      for (std::size_t a = 0; a < sides.size() && in; ++a) in = per_axis[a][idx[a]].holds(p.coord(i, a));
      if (in) m |= Mask{1} << i;
    }
    if (m) out.insert(m);
    std::size_t a = 0;
    while (a < idx.size() && ++idx[a] == per_axis[a].size()) idx[a++] = 0;
    if (a == idx.size()) break;
  }
}

inline std::set<Mask> strip_masks(const PointSet& p) {
  std::set<Mask> out;
  for (std::size_t axis = 0; axis < 2; ++axis)
    for (const auto& iv : candidate_intervals(axis_values(p, axis), true, true)) {
      Mask m = 0;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (iv.holds(p.coord(i, axis))) m |= Mask{1} << i;
      if (m) out.insert(m);
    }
  return out;
}

/// Nonempty point subsets cut out by some range of the family.
inline std::set<Mask> oracle_captures(const PointSet& p, const RangeFamily& f) {
  std::set<Mask> out;
  switch (f.tag) {
    case FamilyTag::Bottomless: boxes(p, {{true, true}, {false, true}}, out); break;
    case FamilyTag::Rectangles: boxes(p, {{true, true}, {true, true}}, out); break;
    case FamilyTag::Octants: boxes(p, {{true, false}, {false, true}, {false, true}}, out); break;
    case FamilyTag::TFinSlabs: boxes(p, {{true, true}, {false, true}, {false, true}}, out); break;
    case FamilyTag::Hextants: boxes(p, {{true, false}, {false, true}, {false, true}, {false, true}}, out); break;
    case FamilyTag::Strips: out = strip_masks(p); break;
    case FamilyTag::StripUnion: {
      const auto singles = strip_masks(p);
      std::set<Mask> layer = singles;
      out = singles;
      for (std::size_t r = 1; r < f.s; ++r) {
        std::set<Mask> next;
        for (auto a : layer)
          for (auto b : singles) next.insert(a | b);
        layer = next;
        out.insert(next.begin(), next.end());
      }
      break;
    }
    case FamilyTag::CrossUnion: {
      std::vector<Mask> vert{0}, horiz{0};
      for (std::size_t axis = 0; axis < 2; ++axis)
        for (const auto& iv : candidate_intervals(axis_values(p, axis), true, true)) {
          Mask m = 0;
          for (std::size_t i = 0; i < p.size(); ++i)
            if (iv.holds(p.coord(i, axis))) m |= Mask{1} << i;
          (axis == 0 ? vert : horiz).push_back(m);
        }
      for (auto a : vert)
        for (auto b : horiz)
          if (a | b) out.insert(a | b);
      break;
    }
  }
  return out;
}

inline Edge mask_to_edge(Mask m) {
  Edge e;
  for (Vertex v = 0; m; ++v, m >>= 1)
    if (m & 1) e.push_back(v);
  return e;
}

inline Mask edge_to_mask(const Edge& e) {
  Mask m = 0;
  for (auto v : e) m |= Mask{1} << v;
  return m;
}

inline Hypergraph oracle_hypergraph(const PointSet& p, const RangeFamily& f) {
  std::vector<Edge> edges;
  for (auto m : oracle_captures(p, f)) edges.push_back(mask_to_edge(m));
  return Hypergraph(p.size(), std::move(edges));
}

inline std::vector<RangeFamily> all_families() {
  return {RangeFamily::bottomless(), RangeFamily::strips(),     RangeFamily::strip_union(2),
          RangeFamily::cross_union(), RangeFamily::rectangles(), RangeFamily::octants(),
          RangeFamily::tfin_slabs(),  RangeFamily::hextants()};
}

}  // namespace polyhs::testing

namespace polyhs {

inline void PrintTo(const Hypergraph& h, std::ostream* os) {
  *os << "n=" << h.vertex_count() << " {";
  for (const auto& e : h.edges()) {
    *os << "{";
    for (std::size_t i = 0; i < e.size(); ++i) *os << (i ? "," : "") << e[i];
    *os << "}";
  }
  *os << "}";
}

inline void PrintTo(const VertexSet& s, std::ostream* os) {
  *os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) *os << (i ? "," : "") << s.members()[i];
  *os << "}";
}

}  // namespace polyhs
