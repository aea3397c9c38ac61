#pragma once

// Exact-coordinate point sets and range capture for the geometric range
// families (bottomless rectangles, strips and unions of strips, rectangles,
// octants, bounded-x octant slabs, hextants).
//
// Capture enumeration works in rank space: every coordinate is replaced by the
// index of its value among the distinct values on that axis. A range of any
// family captures the same set as some range whose boundaries sit between
// consecutive distinct values, so strict and closed boundaries coincide here.
// Tied coordinates are never separated.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "polyhs/bits.hpp"
#include "polyhs/core.hpp"
#include "polyhs/rational.hpp"

namespace polyhs {

using Point = std::vector<Rational>;

struct PointSet {
  std::size_t dim = 2;
  std::vector<Point> points;

  PointSet() = default;
  PointSet(std::size_t dim_, std::vector<Point> points_) : dim(dim_), points(std::move(points_)) {
    if (dim < 2 || dim > 4) throw InvalidInput("point set dimension must be 2, 3 or 4");
    for (const auto& p : points)
      if (p.size() != dim) throw InvalidInput("point has " + std::to_string(p.size()) + " coordinates, expected " +
                                              std::to_string(dim));
  }

  std::size_t size() const { return points.size(); }
  const Rational& coord(std::size_t i, std::size_t axis) const { return points[i][axis]; }

  friend bool operator==(const PointSet&, const PointSet&) = default;
};

enum class FamilyTag { Bottomless, Strips, StripUnion, CrossUnion, Rectangles, Octants, Hextants, TFinSlabs };

struct RangeFamily {
  FamilyTag tag = FamilyTag::Strips;
  std::size_t s = 1;  // number of strips, StripUnion only

  static RangeFamily bottomless() { return {FamilyTag::Bottomless, 1}; }
  static RangeFamily strips() { return {FamilyTag::Strips, 1}; }
  static RangeFamily strip_union(std::size_t s) { return {FamilyTag::StripUnion, s}; }
  static RangeFamily cross_union() { return {FamilyTag::CrossUnion, 2}; }
  static RangeFamily rectangles() { return {FamilyTag::Rectangles, 1}; }
  static RangeFamily octants() { return {FamilyTag::Octants, 1}; }
  static RangeFamily hextants() { return {FamilyTag::Hextants, 1}; }
  static RangeFamily tfin_slabs() { return {FamilyTag::TFinSlabs, 1}; }

  std::size_t dim() const {
    switch (tag) {
      case FamilyTag::Octants:
      case FamilyTag::TFinSlabs: return 3;
      case FamilyTag::Hextants: return 4;
      default: return 2;
    }
  }

  friend bool operator==(const RangeFamily&, const RangeFamily&) = default;
};

inline std::string family_name(const RangeFamily& f) {
  switch (f.tag) {
    case FamilyTag::Bottomless: return "bottomless";
    case FamilyTag::Strips: return "strips";
    case FamilyTag::StripUnion: return "strip-union";
    case FamilyTag::CrossUnion: return "cross-union";
    case FamilyTag::Rectangles: return "rectangles";
    case FamilyTag::Octants: return "octants";
    case FamilyTag::Hextants: return "hextants";
    case FamilyTag::TFinSlabs: return "tfin-slabs";
  }
  return "unknown";
}

inline RangeFamily parse_family(const std::string& name, std::size_t s = 1) {
  if (name == "bottomless") return RangeFamily::bottomless();
  if (name == "strips") return RangeFamily::strips();
  if (name == "strip-union") return RangeFamily::strip_union(s);
  if (name == "cross-union") return RangeFamily::cross_union();
  if (name == "rectangles") return RangeFamily::rectangles();
  if (name == "octants") return RangeFamily::octants();
  if (name == "hextants") return RangeFamily::hextants();
  if (name == "tfin-slabs") return RangeFamily::tfin_slabs();
  throw InvalidInput("unknown range family '" + name + "'");
}

struct SizeFilter {
  enum class Kind { None, Exact, AtLeast };
  Kind kind = Kind::None;
  std::size_t m = 0;

  static SizeFilter none() { return {}; }
  static SizeFilter exact(std::size_t m) { return {Kind::Exact, m}; }
  static SizeFilter at_least(std::size_t m) { return {Kind::AtLeast, m}; }

  bool accepts(std::size_t size) const {
    switch (kind) {
      case Kind::None: return true;
      case Kind::Exact: return size == m;
      case Kind::AtLeast: return size >= m;
    }
    return false;
  }
};

namespace detail {

inline void check_dims(const PointSet& p, const RangeFamily& f) {
  if (p.dim != f.dim())
    throw InvalidInput("family " + family_name(f) + " needs dimension " + std::to_string(f.dim()) +
                       ", point set has " + std::to_string(p.dim));
  if (f.tag == FamilyTag::StripUnion && f.s == 0) throw InvalidInput("strip union needs s >= 1");
}

/// Dense ranks of the coordinates on one axis, plus the number of distinct values.
struct AxisRanks {
  std::vector<std::size_t> rank;
  std::size_t distinct = 0;
};

inline AxisRanks axis_ranks(const PointSet& p, std::size_t axis) {
  const auto n = p.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p.coord(a, axis) < p.coord(b, axis); });
  AxisRanks r{std::vector<std::size_t>(n), 0};
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && p.coord(order[i], axis) != p.coord(order[i - 1], axis)) ++r.distinct;
    r.rank[order[i]] = r.distinct;
  }
  if (n > 0) ++r.distinct;
  return r;
}

/// Bitsets of points per rank value on one axis.
inline std::vector<Bits> rank_classes(const AxisRanks& r, std::size_t n) {
  std::vector<Bits> classes(r.distinct, Bits(n));
  for (std::size_t i = 0; i < n; ++i) classes[r.rank[i]].set(i);
  return classes;
}

inline std::vector<Bits> prefix_unions(const std::vector<Bits>& classes, std::size_t n) {
  std::vector<Bits> out;
  Bits acc(n);
  for (const auto& c : classes) {
    acc |= c;
    out.push_back(acc);
  }
  return out;
}

inline std::vector<Bits> suffix_unions(const std::vector<Bits>& classes, std::size_t n) {
  std::vector<Bits> out(classes.size(), Bits(n));
  Bits acc(n);
  for (std::size_t i = classes.size(); i-- > 0;) {
    acc |= classes[i];
    out[i] = acc;
  }
  return out;
}

/// All nonempty interval unions classes[i..j].
inline std::vector<Bits> interval_unions(const std::vector<Bits>& classes, std::size_t n) {
  std::vector<Bits> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    Bits acc(n);
    for (std::size_t j = i; j < classes.size(); ++j) {
      acc |= classes[j];
      out.push_back(acc);
    }
  }
  return out;
}

using BitsSet = std::unordered_set<Bits, BitsHash>;

inline void collect(BitsSet& out, const Bits& b) {
  if (b.any()) out.insert(b);
}

inline BitsSet strip_captures(const PointSet& p) {
  const auto n = p.size();
  BitsSet out;
  for (std::size_t axis = 0; axis < 2; ++axis)
    for (auto& b : interval_unions(rank_classes(axis_ranks(p, axis), n), n)) collect(out, b);
  return out;
}

inline BitsSet enumerate_all(const PointSet& p, const RangeFamily& f) {
  const auto n = p.size();
  BitsSet out;
  if (n == 0) return out;
  std::vector<AxisRanks> ranks;
  for (std::size_t a = 0; a < p.dim; ++a) ranks.push_back(axis_ranks(p, a));
  std::vector<std::vector<Bits>> classes;
  for (std::size_t a = 0; a < p.dim; ++a) classes.push_back(rank_classes(ranks[a], n));

  switch (f.tag) {
    case FamilyTag::Bottomless: {
      const auto below = prefix_unions(classes[1], n);
      for (const auto& xs : interval_unions(classes[0], n))
        for (const auto& ys : below) collect(out, xs & ys);
      break;
    }
    case FamilyTag::Strips: out = strip_captures(p); break;
    case FamilyTag::StripUnion: {
      const auto singles = strip_captures(p);
      BitsSet layer = singles;
      out = singles;
      for (std::size_t round = 1; round < f.s; ++round) {
        BitsSet next;
        for (const auto& u : layer)
          for (const auto& s : singles) {
            auto merged = u | s;
            if (!out.count(merged)) next.insert(std::move(merged));
          }
        if (next.empty()) break;
        for (const auto& b : next) out.insert(b);
        layer = std::move(next);
      }
      break;
    }
    case FamilyTag::CrossUnion: {
      auto vertical = interval_unions(classes[0], n);
      auto horizontal = interval_unions(classes[1], n);
      vertical.emplace_back(n);
      horizontal.emplace_back(n);
      for (const auto& v : vertical)
        for (const auto& h : horizontal) collect(out, v | h);
      break;
    }
    case FamilyTag::Rectangles: {
      const auto xs = interval_unions(classes[0], n);
      const auto ys = interval_unions(classes[1], n);
      for (const auto& a : xs)
        for (const auto& b : ys) collect(out, a & b);
      break;
    }
    case FamilyTag::Octants: {
      const auto xge = suffix_unions(classes[0], n);
      const auto yle = prefix_unions(classes[1], n);
      const auto zle = prefix_unions(classes[2], n);
      for (const auto& a : xge)
        for (const auto& b : yle) {
          const auto ab = a & b;
          if (!ab.any()) continue;
          for (const auto& c : zle) collect(out, ab & c);
        }
      break;
    }
    case FamilyTag::TFinSlabs: {
      const auto xs = interval_unions(classes[0], n);
      const auto yle = prefix_unions(classes[1], n);
      const auto zle = prefix_unions(classes[2], n);
      for (const auto& a : xs)
        for (const auto& b : yle) {
          const auto ab = a & b;
          if (!ab.any()) continue;
          for (const auto& c : zle) collect(out, ab & c);
        }
      break;
    }
    case FamilyTag::Hextants: {
      const auto xge = suffix_unions(classes[0], n);
      const auto yle = prefix_unions(classes[1], n);
      const auto zle = prefix_unions(classes[2], n);
      const auto wle = prefix_unions(classes[3], n);
      for (const auto& a : xge)
        for (const auto& b : yle) {
          const auto ab = a & b;
          if (!ab.any()) continue;
          for (const auto& c : zle) {
            const auto abc = ab & c;
            if (!abc.any()) continue;
            for (const auto& d : wle) collect(out, abc & d);
          }
        }
      break;
    }
  }
  return out;
}

/// Indices sorted by one coordinate, ties broken by index.
inline std::vector<Vertex> sorted_by_axis(const PointSet& p, std::size_t axis) {
  std::vector<Vertex> order(p.size());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return p.coord(a, axis) < p.coord(b, axis); });
  return order;
}

/// Window [s, s+m) of `order` that a boundary can isolate: no coordinate tie
/// across either end.
inline bool separable_window(const PointSet& p, const std::vector<Vertex>& order, std::size_t axis, std::size_t s,
                             std::size_t m) {
  if (s > 0 && p.coord(order[s - 1], axis) == p.coord(order[s], axis)) return false;
  if (s + m < order.size() && p.coord(order[s + m - 1], axis) == p.coord(order[s + m], axis)) return false;
  return true;
}

inline void exact_strip_windows(const PointSet& p, std::size_t m, std::vector<Edge>& out) {
  if (m == 0 || m > p.size()) return;
  for (std::size_t axis = 0; axis < 2; ++axis) {
    const auto order = sorted_by_axis(p, axis);
    for (std::size_t s = 0; s + m <= order.size(); ++s) {
      if (!separable_window(p, order, axis, s, m)) continue;
      Edge e(order.begin() + static_cast<std::ptrdiff_t>(s), order.begin() + static_cast<std::ptrdiff_t>(s + m));
      out.push_back(std::move(e));
    }
  }
}

/// Size-m bottomless captures. Points are activated in increasing y (one tie
/// class at a time) into an x-sorted list; every new size-m capture is an
/// m-window of the active list that contains a freshly activated point.
inline void exact_bottomless_windows(const PointSet& p, std::size_t m, std::vector<Edge>& out) {
  const auto n = p.size();
  if (m == 0 || m > n) return;
  const auto by_y = sorted_by_axis(p, 1);
  const auto xr = axis_ranks(p, 0);
  std::vector<Vertex> active;  // sorted by (x, index)
  const auto before = [&](Vertex a, Vertex b) {
    if (xr.rank[a] != xr.rank[b]) return xr.rank[a] < xr.rank[b];
    return a < b;
  };
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && p.coord(by_y[j], 1) == p.coord(by_y[i], 1)) ++j;
    for (std::size_t t = i; t < j; ++t)
      active.insert(std::upper_bound(active.begin(), active.end(), by_y[t], before), by_y[t]);
    std::vector<char> emitted_start(active.size() + 1, 0);
    for (std::size_t t = i; t < j; ++t) {
      const auto pos =
          static_cast<std::size_t>(std::lower_bound(active.begin(), active.end(), by_y[t], before) - active.begin());
      const std::size_t lo = pos + 1 >= m ? pos + 1 - m : 0;
      for (std::size_t s = lo; s <= pos && s + m <= active.size(); ++s) {
        if (emitted_start[s]) continue;
        emitted_start[s] = 1;
        if (s > 0 && xr.rank[active[s - 1]] == xr.rank[active[s]]) continue;
        if (s + m < active.size() && xr.rank[active[s + m - 1]] == xr.rank[active[s + m]]) continue;
        out.emplace_back(active.begin() + static_cast<std::ptrdiff_t>(s),
                         active.begin() + static_cast<std::ptrdiff_t>(s + m));
      }
    }
    i = j;
  }
}

}  // namespace detail

/// All distinct nonempty subsets of P cut out by one range of family F,
/// optionally filtered by size. Exact-size requests for strips and bottomless
/// rectangles use window enumeration and scale to thousands of points; the
/// general path is polynomial in n with degree up to 5 and meant for small inputs.
inline Hypergraph capture_edges(const PointSet& p, const RangeFamily& f, SizeFilter filter = SizeFilter::none()) {
  detail::check_dims(p, f);
  const auto n = p.size();
  std::vector<Edge> edges;
  const bool strip_like = f.tag == FamilyTag::Strips || (f.tag == FamilyTag::StripUnion && f.s == 1);
  if (filter.kind == SizeFilter::Kind::Exact && strip_like) {
    detail::exact_strip_windows(p, filter.m, edges);
  } else if (filter.kind == SizeFilter::Kind::Exact && f.tag == FamilyTag::Bottomless) {
    detail::exact_bottomless_windows(p, filter.m, edges);
  } else {
    for (const auto& b : detail::enumerate_all(p, f)) {
      if (filter.accepts(b.count())) edges.push_back(b.to_edge());
    }
  }
  return Hypergraph(n, std::move(edges));
}

namespace detail {

struct Box {
  std::vector<Rational> lo, hi;
};

inline Box bounding_box(const PointSet& p, const std::vector<Vertex>& members) {
  Box b{p.points[members.front()], p.points[members.front()]};
  for (auto v : members)
    for (std::size_t a = 0; a < p.dim; ++a) {
      b.lo[a] = std::min(b.lo[a], p.coord(v, a));
      b.hi[a] = std::max(b.hi[a], p.coord(v, a));
    }
  return b;
}

/// Points inside the axis-aligned constraints; `use_lo[a]`/`use_hi[a]` switch
/// the lower/upper bound on axis a on or off. Returns false as soon as a point
/// outside `mask` is inside.
inline bool box_capture_equals(const PointSet& p, const std::vector<char>& mask, std::size_t members, const Box& box,
                               const std::vector<char>& use_lo, const std::vector<char>& use_hi) {
  std::size_t inside = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    bool in = true;
    for (std::size_t a = 0; a < p.dim && in; ++a) {
      if (use_lo[a] && p.coord(i, a) < box.lo[a]) in = false;
      if (use_hi[a] && p.coord(i, a) > box.hi[a]) in = false;
    }
    if (!in) continue;
    if (!mask[i]) return false;
    ++inside;
  }
  return inside == members;
}

/// Maximal runs of S along one axis: consecutive tie classes all of whose
/// points lie in S. Each run is a strip capture contained in S.
inline std::vector<std::vector<Vertex>> maximal_runs(const PointSet& p, std::size_t axis, const std::vector<char>& mask) {
  const auto order = sorted_by_axis(p, axis);
  std::vector<std::vector<Vertex>> runs;
  std::vector<Vertex> current;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    bool all_in = true;
    while (j < order.size() && p.coord(order[j], axis) == p.coord(order[i], axis)) {
      all_in = all_in && mask[order[j]];
      ++j;
    }
    if (all_in) {
      current.insert(current.end(), order.begin() + static_cast<std::ptrdiff_t>(i),
                     order.begin() + static_cast<std::ptrdiff_t>(j));
    } else if (!current.empty()) {
      runs.push_back(std::move(current));
      current.clear();
    }
    i = j;
  }
  if (!current.empty()) runs.push_back(std::move(current));
  return runs;
}

inline bool cover_with_runs(const std::vector<std::vector<Vertex>>& runs, const std::vector<Vertex>& members,
                            std::vector<std::size_t>& cover_count, std::size_t budget,
                            const std::vector<std::vector<std::size_t>>& runs_of) {
  const Vertex* first = nullptr;
  for (const auto& v : members)
    if (cover_count[v] == 0) {
      first = &v;
      break;
    }
  if (!first) return true;
  if (budget == 0) return false;
  for (auto r : runs_of[*first]) {
    for (auto v : runs[r]) ++cover_count[v];
    const bool ok = cover_with_runs(runs, members, cover_count, budget - 1, runs_of);
    for (auto v : runs[r]) --cover_count[v];
    if (ok) return true;
  }
  return false;
}

}  // namespace detail

/// True iff S = P ∩ R for some range R of family F. The empty set is never an edge.
inline bool capture_contains(const PointSet& p, const RangeFamily& f, const VertexSet& s) {
  detail::check_dims(p, f);
  if (s.empty()) return false;
  const auto& members = s.members();
  const auto mask = s.mask(p.size());
  const auto box = detail::bounding_box(p, members);
  const auto dim = p.dim;
  const auto flags = [&](std::initializer_list<int> on) {
    std::vector<char> v(dim, 0);
    for (int a : on) v[static_cast<std::size_t>(a)] = 1;
    return v;
  };
  const auto k = members.size();
  switch (f.tag) {
    case FamilyTag::Bottomless: return detail::box_capture_equals(p, mask, k, box, flags({0}), flags({0, 1}));
    case FamilyTag::Rectangles: return detail::box_capture_equals(p, mask, k, box, flags({0, 1}), flags({0, 1}));
    case FamilyTag::Octants: return detail::box_capture_equals(p, mask, k, box, flags({0}), flags({1, 2}));
    case FamilyTag::TFinSlabs: return detail::box_capture_equals(p, mask, k, box, flags({0}), flags({0, 1, 2}));
    case FamilyTag::Hextants: return detail::box_capture_equals(p, mask, k, box, flags({0}), flags({1, 2, 3}));
    case FamilyTag::Strips:
      return detail::box_capture_equals(p, mask, k, box, flags({0}), flags({0})) ||
             detail::box_capture_equals(p, mask, k, box, flags({1}), flags({1}));
    case FamilyTag::CrossUnion: {
      // Vertical part: x-interval spanned by members (or empty); the rest must be
      // exactly one horizontal strip capture.
      std::vector<Rational> xs;
      for (auto v : members) xs.push_back(p.coord(v, 0));
      std::sort(xs.begin(), xs.end());
      xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
      const auto rest_is_horizontal = [&](const std::vector<char>& vertical_mask) {
        std::vector<Vertex> rest;
        for (auto v : members)
          if (!vertical_mask[v]) rest.push_back(v);
        if (rest.empty()) return true;
        const auto rb = detail::bounding_box(p, rest);
        for (std::size_t i = 0; i < p.size(); ++i) {
          if (p.coord(i, 1) < rb.lo[1] || p.coord(i, 1) > rb.hi[1]) continue;
          if (!mask[i]) return false;
        }
        return true;
      };
      if (rest_is_horizontal(std::vector<char>(p.size(), 0))) return true;
      for (std::size_t a = 0; a < xs.size(); ++a)
        for (std::size_t b = a; b < xs.size(); ++b) {
          std::vector<char> vertical(p.size(), 0);
          bool inside_s = true;
          for (std::size_t i = 0; i < p.size() && inside_s; ++i) {
            if (p.coord(i, 0) < xs[a] || p.coord(i, 0) > xs[b]) continue;
            if (!mask[i]) inside_s = false;
            vertical[i] = 1;
          }
          if (!inside_s) break;  // widening b only adds points
          if (rest_is_horizontal(vertical)) return true;
        }
      return false;
    }
    case FamilyTag::StripUnion: {
      auto runs = detail::maximal_runs(p, 0, mask);
      auto yruns = detail::maximal_runs(p, 1, mask);
      runs.insert(runs.end(), yruns.begin(), yruns.end());
      std::vector<std::vector<std::size_t>> runs_of(p.size());
      for (std::size_t r = 0; r < runs.size(); ++r)
        for (auto v : runs[r]) runs_of[v].push_back(r);
      std::vector<std::size_t> cover_count(p.size(), 0);
      return detail::cover_with_runs(runs, members, cover_count, f.s, runs_of);
    }
  }
  return false;
}

/// Largest strip capture contained in e (a maximal run along x or y).
inline VertexSet largest_single_strip_subedge(const PointSet& p, const VertexSet& e) {
  if (p.dim != 2) throw InvalidInput("strip sub-edges need a planar point set");
  const auto mask = e.mask(p.size());
  std::vector<Vertex> best;
  for (std::size_t axis = 0; axis < 2; ++axis)
    for (auto& run : detail::maximal_runs(p, axis, mask))
      if (run.size() > best.size()) best = std::move(run);
  return VertexSet(std::move(best));
}

enum class Axis { X, Y };

struct Strip {
  Axis axis = Axis::X;
  Rational lo, hi;
  friend bool operator==(const Strip&, const Strip&) = default;
};

/// Dual strip hypergraph: vertices are strips, edges are the sets of strips
/// containing a common point. Strips are open, so a point on a boundary line can
/// see a set no open cell sees; samples are every boundary value, the midpoints
/// between them, and one point beyond each end.
inline Hypergraph dual_strips_hypergraph(const std::vector<Strip>& strips) {
  for (const auto& s : strips)
    if (!(s.lo < s.hi)) throw InvalidInput("degenerate strip: lo must be < hi");
  const auto samples = [&](Axis axis) {
    std::vector<Rational> bounds;
    for (const auto& s : strips)
      if (s.axis == axis) {
        bounds.push_back(s.lo);
        bounds.push_back(s.hi);
      }
    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
    std::vector<Rational> out;
    if (bounds.empty()) {
      out.emplace_back(0);
      return out;
    }
    out.push_back(bounds.front() - Rational(1));
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      out.push_back(bounds[i]);
      if (i + 1 < bounds.size()) out.push_back((bounds[i] + bounds[i + 1]) / Rational(2));
    }
    out.push_back(bounds.back() + Rational(1));
    return out;
  };
  const auto xs = samples(Axis::X);
  const auto ys = samples(Axis::Y);
  std::vector<Edge> edges;
  for (const auto& x : xs)
    for (const auto& y : ys) {
      Edge e;
      for (std::size_t i = 0; i < strips.size(); ++i) {
        const auto& v = strips[i].axis == Axis::X ? x : y;
        if (strips[i].lo < v && v < strips[i].hi) e.push_back(static_cast<Vertex>(i));
      }
      if (!e.empty()) edges.push_back(std::move(e));
    }
  return Hypergraph(strips.size(), std::move(edges));
}

/// Thrown when no single vertex can be dropped from a captured edge while
/// keeping it captured.
class ShrinkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Removes one vertex from a captured edge so that the rest is still captured.
/// Candidates are tried in a fixed order: the max-y vertices, min-x, max-x,
/// min-y, then max/min of each further axis, then every vertex by index.
inline VertexSet shrink_edge(const PointSet& p, const RangeFamily& f, const VertexSet& e) {
  detail::check_dims(p, f);
  if (e.size() < 2) throw InvalidInput("shrink_edge needs an edge with at least 2 vertices");
  const auto& members = e.members();
  std::vector<std::pair<std::size_t, bool>> criteria = {{1, true}, {0, false}, {0, true}, {1, false}};
  for (std::size_t a = 2; a < p.dim; ++a) {
    criteria.emplace_back(a, true);
    criteria.emplace_back(a, false);
  }
  std::vector<Vertex> candidates;
  for (auto [axis, want_max] : criteria) {
    Rational best = p.coord(members.front(), axis);
    for (auto v : members) {
      const auto& c = p.coord(v, axis);
      if (want_max ? c > best : c < best) best = c;
    }
    for (auto v : members)
      if (p.coord(v, axis) == best) candidates.push_back(v);
  }
  candidates.insert(candidates.end(), members.begin(), members.end());
  std::vector<char> tried(p.size(), 0);
  for (auto v : candidates) {
    if (tried[v]) continue;
    tried[v] = 1;
    std::vector<Vertex> rest;
    rest.reserve(members.size() - 1);
    for (auto w : members)
      if (w != v) rest.push_back(w);
    VertexSet smaller(std::move(rest));
    if (capture_contains(p, f, smaller)) return smaller;
  }
  throw ShrinkError("no removable vertex: family " + family_name(f) + " cannot shrink this edge");
}

}  // namespace polyhs
