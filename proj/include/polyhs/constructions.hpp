#pragma once

// Lower-bound constructions and the procedures that defeat candidates on them.
//
//   thm2  bottomless rectangles, no 3-shallow hitting set for H_{=m}, m >= 12
//   thm3  dual strips, every k-coloring misses a color on a 2c-edge
//   thm4  strips, no 2-shallow hitting set for H_{=m}, m >= 5b
//   thm5  one horizontal plus one vertical strip, 3c-edge misses a color
//   thm6  diagonal copies of a strip instance for unions of s strips
//
// Falsifiers take any vertex set S and return a size-m edge with 0 hits or too
// many. Witness finders take any coloring and return an edge missing a color.
// Every returned edge is re-checked against the geometry before it leaves; a
// failed re-check throws TheoremViolation.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "polyhs/core.hpp"
#include "polyhs/geometry.hpp"

namespace polyhs {

struct ConstructionInstance {
  std::string kind;  // "thm2", "thm4", "thm5", "thm6"
  std::map<std::string, std::int64_t> params;
  PointSet points;
  RangeFamily family;
  std::map<std::string, std::vector<Vertex>> groups;
  bool theorem_regime = true;  // false for parameters below the theorem's range

  const std::vector<Vertex>& group(const std::string& name) const {
    const auto it = groups.find(name);
    if (it == groups.end()) throw InvalidInput("instance has no group '" + name + "'");
    return it->second;
  }
  std::int64_t param(const std::string& name) const {
    const auto it = params.find(name);
    if (it == params.end()) throw InvalidInput("instance has no parameter '" + name + "'");
    return it->second;
  }
};

struct FalsifierResult {
  ViolationWitness witness;
  std::string step;  // which part of the case analysis produced the edge
};

namespace detail {

inline std::string gname(const std::string& base, std::size_t i) { return base + "_" + std::to_string(i); }
inline std::string gname(const std::string& base, std::size_t i, std::size_t j) {
  return base + "_" + std::to_string(i) + "_" + std::to_string(j);
}

/// Builds a point set from per-vertex integer coordinates.
inline PointSet integer_points(const std::vector<std::int64_t>& xs, const std::vector<std::int64_t>& ys) {
  std::vector<Point> pts;
  pts.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) pts.push_back({Rational(xs[i]), Rational(ys[i])});
  return PointSet(2, std::move(pts));
}

/// Classifies an edge against S (c-shallow window [1, c]) and re-checks it.
inline FalsifierResult certify(const ConstructionInstance& inst, const std::vector<char>& mask, Edge edge,
                               std::size_t m, std::size_t c, std::string step) {
  std::sort(edge.begin(), edge.end());
  edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
  const auto hits = hit_count(edge, mask);
  if (edge.size() != m)
    throw TheoremViolation(step + ": edge has " + std::to_string(edge.size()) + " points, expected " +
                           std::to_string(m));
  if (hits >= 1 && hits <= c)
    throw TheoremViolation(step + ": edge has " + std::to_string(hits) + " hits, inside the allowed window");
  if (!capture_contains(inst.points, inst.family, VertexSet(edge)))
    throw TheoremViolation(step + ": edge is not captured by the range family");
  ViolationWitness w{std::move(edge), hits == 0 ? ViolationKind::ZeroHit : ViolationKind::Overflow,
                     hits == 0 ? 0 : hits};
  return {std::move(w), std::move(step)};
}

inline std::size_t hits_in(const std::vector<Vertex>& vs, const std::vector<char>& mask) {
  std::size_t h = 0;
  for (auto v : vs) h += mask[v] ? 1 : 0;
  return h;
}

inline void append(std::vector<Vertex>& out, const std::vector<Vertex>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Bottomless rectangles.
//
// Per column i: C (m groups of m, rising diagonal) | P_i | rest of A_i (rising)
// | B_m ... B_1 (falling). Vertically: all P below everything; then A; then
// B_1 < C_{i,1} < B_2 < C_{i,2} < ... < B_m < C_{i,m}. A_i has m - 2 points and
// starts at P_i, so each column holds m^2 + 2m - 2 points.

inline std::size_t bottomless_vertex_count(std::size_t m) { return m * (m * m + 2 * m - 2); }

inline ConstructionInstance build_bottomless_no3shs(std::size_t m) {
  if (m < 3) throw InvalidInput("bottomless construction needs m >= 3");
  ConstructionInstance inst;
  inst.kind = "thm2";
  inst.params["m"] = static_cast<std::int64_t>(m);
  inst.family = RangeFamily::bottomless();
  inst.theorem_regime = m >= 12;

  const auto mm = static_cast<std::int64_t>(m);
  const std::int64_t column_width = mm * mm + 2 * mm - 2;
  std::vector<std::int64_t> xs, ys;
  const auto add = [&](std::int64_t x, std::int64_t y) {
    xs.push_back(x);
    ys.push_back(y);
    return static_cast<Vertex>(xs.size() - 1);
  };
  std::vector<Vertex> all_p;
  for (std::size_t i = 1; i <= m; ++i) {
    const auto col = static_cast<std::int64_t>(i - 1);
    const std::int64_t x0 = col * column_width;
    // Heights are local ranks above the P line, interleaved across columns.
    const auto y_of = [&](std::int64_t local) { return mm + local * mm + col; };
    std::int64_t x = x0;

    // local y: A rest 0..m-4, then B_j at m-3 + (j-1)(m+1), C_{i,j} right above B_j.
    const auto y_b = [&](std::int64_t j) { return (mm - 3) + (j - 1) * (mm + 1); };
    for (std::size_t j = 1; j <= m; ++j) {
      std::vector<Vertex> cg;
      for (std::size_t t = 0; t < m; ++t)
        cg.push_back(add(x++, y_of(y_b(static_cast<std::int64_t>(j)) + 1 + static_cast<std::int64_t>(t))));
      inst.groups[detail::gname("C", i, j)] = std::move(cg);
    }
    std::vector<Vertex> a;
    const auto p = add(x++, col);
    a.push_back(p);
    all_p.push_back(p);
    for (std::int64_t t = 0; t < mm - 3; ++t) a.push_back(add(x++, y_of(t)));
    std::vector<Vertex> b(m);
    for (std::size_t j = m; j >= 1; --j) b[j - 1] = add(x++, y_of(y_b(static_cast<std::int64_t>(j))));
    inst.groups[detail::gname("A", i)] = std::move(a);
    inst.groups[detail::gname("B", i)] = std::move(b);
  }
  inst.groups["P"] = std::move(all_p);
  inst.points = detail::integer_points(xs, ys);
  return inst;
}

/// Given any S, returns a size-m bottomless edge with no hit or at least 4.
inline FalsifierResult falsify_bottomless(const ConstructionInstance& inst, const VertexSet& s) {
  if (inst.kind != "thm2") throw InvalidInput("falsify_bottomless needs a thm2 instance");
  const auto m = static_cast<std::size_t>(inst.param("m"));
  const auto mask = s.mask(inst.points.size());
  const auto& p = inst.group("P");
  const auto done = [&](Edge e, std::string step) { return detail::certify(inst, mask, std::move(e), m, 3, step); };

  if (detail::hits_in(p, mask) == 0 || detail::hits_in(p, mask) > 3) return done(p, "P line");
  std::size_t i = 0;
  while (!mask[p[i]]) ++i;
  const auto col = i + 1;
  const auto& a = inst.group(detail::gname("A", col));
  const auto& b = inst.group(detail::gname("B", col));
  const std::vector<Vertex> a_rest(a.begin() + 1, a.end());

  if (detail::hits_in(a_rest, mask) > 0) {
    if (detail::hits_in(b, mask) == 0) return done(b, "column B empty");
    std::size_t j = 0;
    while (!mask[b[j]]) ++j;
    const auto& cg = inst.group(detail::gname("C", col, j + 1));
    if (detail::hits_in(cg, mask) == 0) return done(cg, "C group empty");
    std::size_t t = 0;
    while (!mask[cg[t]]) ++t;
    Edge e = a;
    e.push_back(b[j]);
    e.push_back(cg[t]);
    return done(e, "A with two hits plus B and C corners");
  }

  // Only P_i is hit in A_i: the top m-3 points of A with any three consecutive
  // B points form an edge, so B would need a hit in every such triple.
  for (std::size_t j = 0; j + 3 <= m; ++j) {
    const std::vector<Vertex> triple{b[j], b[j + 1], b[j + 2]};
    if (detail::hits_in(triple, mask) == 0) {
      Edge e = a_rest;
      detail::append(e, triple);
      return done(e, "A top with empty B triple");
    }
  }
  return done(b, "B hit in every triple");
}

// ---------------------------------------------------------------------------
// Dual strips.

struct DualStripInstance {
  std::size_t k = 2;
  std::size_t copies = 1;
  std::vector<Strip> strips;  // base strip b, copy t at index b * copies + t
  Hypergraph graph;
};

inline std::size_t lower_bound_copies(std::size_t k) {
  if (k < 2) throw InvalidInput("k must be >= 2");
  return (3 * k + 3) / 4 - 1;  // ceil(3k/4) - 1
}

inline DualStripInstance build_dual_strip_lb(std::size_t k) {
  DualStripInstance inst;
  inst.k = k;
  inst.copies = lower_bound_copies(k);
  const auto c = static_cast<std::int64_t>(inst.copies);
  const std::pair<Axis, std::int64_t> base[4] = {{Axis::X, 0}, {Axis::X, 1}, {Axis::Y, 0}, {Axis::Y, 1}};
  for (const auto& [axis, lo] : base)
    for (std::int64_t t = 0; t < c; ++t) {
      const Rational shift(t, 100 * c);
      inst.strips.push_back(Strip{axis, Rational(lo) + shift, Rational(lo + 2) + shift});
    }
  inst.graph = dual_strips_hypergraph(inst.strips);
  return inst;
}

struct ColorWitness {
  Edge edge;
  std::uint32_t missing_color = 0;
};

namespace detail {

/// Colors absent from each group, as sorted lists.
inline std::vector<std::vector<std::uint32_t>> absent_colors(const std::vector<std::vector<Vertex>>& groups,
                                                             const ColorAssignment& chi) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& g : groups) {
    std::vector<char> seen(chi.k, 0);
    for (auto v : g) seen[chi.colors[v]] = 1;
    std::vector<std::uint32_t> absent;
    for (std::uint32_t c = 0; c < chi.k; ++c)
      if (!seen[c]) absent.push_back(c);
    out.push_back(std::move(absent));
  }
  return out;
}

inline void check_witness(const Edge& edge, std::uint32_t color, const ColorAssignment& chi) {
  for (auto v : edge)
    if (chi.colors[v] == color) throw TheoremViolation("witness edge contains its supposedly missing color");
}

}  // namespace detail

/// Two base strips share a color absent from all their copies; the cell only
/// those two cover gives the edge.
inline ColorWitness witness_dual_strip(const DualStripInstance& inst, const ColorAssignment& chi) {
  const auto n = inst.strips.size();
  if (chi.colors.size() != n) throw InvalidInput("coloring length does not match the strip count");
  if (chi.k != inst.k) throw InvalidInput("coloring uses a different number of colors");
  const auto c = inst.copies;
  std::vector<std::vector<Vertex>> groups(4);
  for (std::size_t b = 0; b < 4; ++b)
    for (std::size_t t = 0; t < c; ++t) groups[b].push_back(static_cast<Vertex>(b * c + t));
  const auto absent = detail::absent_colors(groups, chi);

  // Private cell of each pair of base strips (V1, V2, H1, H2).
  const Rational half(1, 2);
  const std::pair<Rational, Rational> cell[4][4] = {
      {{}, {Rational(3, 2), -1}, {half, half}, {half, Rational(5, 2)}},
      {{}, {}, {Rational(5, 2), half}, {Rational(5, 2), Rational(5, 2)}},
      {{}, {}, {}, {-1, Rational(3, 2)}},
      {{}, {}, {}, {}},
  };
  for (std::size_t b1 = 0; b1 < 4; ++b1)
    for (std::size_t b2 = b1 + 1; b2 < 4; ++b2) {
      std::vector<std::uint32_t> common;
      std::set_intersection(absent[b1].begin(), absent[b1].end(), absent[b2].begin(), absent[b2].end(),
                            std::back_inserter(common));
      if (common.empty()) continue;
      const auto [qx, qy] = cell[b1][b2];
      Edge e;
      for (std::size_t i = 0; i < n; ++i) {
        const auto& v = inst.strips[i].axis == Axis::X ? qx : qy;
        if (inst.strips[i].lo < v && v < inst.strips[i].hi) e.push_back(static_cast<Vertex>(i));
      }
      if (e.size() != 2 * c || !inst.graph.contains(e))
        throw TheoremViolation("private cell of two base strips does not yield a 2c-edge");
      detail::check_witness(e, common.front(), chi);
      return {std::move(e), common.front()};
    }
  throw TheoremViolation("no two base strips share an absent color");
}

// ---------------------------------------------------------------------------
// Strips.

struct GadgetParams {
  std::size_t m = 0, a = 0, b = 0;
  std::size_t x = 0, bgroup = 0, c = 0, d = 0, e = 0, f = 0, g = 0, h = 0, i = 0, j = 0, k = 0;

  std::size_t gadget_size() const { return bgroup + c + d + e + f + g + h + i + j + k; }
  bool theorem_regime() const { return m >= 5 * b; }
};

/// a = ceil(m/3) - 1, b in {8, 4, 6} by m mod 3, so m = 3a + b/2 - 1.
inline GadgetParams gadget_params(std::size_t m) {
  if (m < 3) throw InvalidInput("strip construction needs m >= 3");
  GadgetParams p;
  p.m = m;
  p.a = (m + 2) / 3 - 1;
  p.b = m % 3 == 0 ? 8 : (m % 3 == 1 ? 4 : 6);
  if (3 * p.a + p.b / 2 - 1 != m) throw InvalidInput("m does not satisfy m = 3a + b/2 - 1");
  if (p.a < p.b / 2 || m < 2 * p.b)
    throw InvalidInput("m = " + std::to_string(m) + " is too small for the strip gadget");
  p.x = 2 * p.a;
  p.bgroup = m - 2 * p.a;
  p.c = p.bgroup;
  p.d = 2 * p.a - 1;
  p.e = p.a - p.b / 2;
  p.f = p.e;
  p.g = p.b;
  p.h = p.b;
  p.i = m - 2 * p.b;
  p.j = 2 * p.b;
  p.k = 2 * p.b;
  return p;
}

inline std::size_t strip_vertex_count(std::size_t m) {
  const auto p = gadget_params(m);
  return m + 3 * m * (p.x + p.gadget_size());
}

/// Diagonal X = x_1..x_m (south-east to north-west) alone in its vertical strip.
/// Each x_i has its own horizontal band holding X_{i,2}, the low half of
/// X_{i,1}, x_i, the high half of X_{i,1}, X_{i,3}. Each X_{i,j} has its own
/// vertical strip, left to right I K J G E D H F B X C, whose other groups sit
/// in a private horizontal band, bottom to top K J I G H F E B D C. B and C are
/// indexed along the rising diagonal. Coordinates are the global ranks.
inline ConstructionInstance build_strip_no2shs(std::size_t m) {
  const auto gp = gadget_params(m);
  ConstructionInstance inst;
  inst.kind = "thm4";
  inst.family = RangeFamily::strips();
  inst.theorem_regime = gp.theorem_regime();
  inst.params["m"] = static_cast<std::int64_t>(m);
  inst.params["a"] = static_cast<std::int64_t>(gp.a);
  inst.params["b"] = static_cast<std::int64_t>(gp.b);

  std::size_t next = 0;
  const auto fresh = [&](std::size_t count) {
    std::vector<Vertex> vs(count);
    std::iota(vs.begin(), vs.end(), static_cast<Vertex>(next));
    next += count;
    return vs;
  };
  auto diag = fresh(m);
  inst.groups["X"] = diag;
  const char* names = "XBCDEFGHIJK";
  const std::size_t sizes[] = {gp.x, gp.bgroup, gp.c, gp.d, gp.e, gp.f, gp.g, gp.h, gp.i, gp.j, gp.k};
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= 3; ++j)
      for (std::size_t g = 0; g < 11; ++g) inst.groups[detail::gname(std::string(1, names[g]), i, j)] = fresh(sizes[g]);

  std::vector<Vertex> x_order, y_order;
  for (std::size_t i = m; i >= 1; --i) x_order.push_back(diag[i - 1]);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= 3; ++j)
      for (const char* g = "IKJGEDHFBXC"; *g; ++g) detail::append(x_order, inst.group(detail::gname(std::string(1, *g), i, j)));

  for (std::size_t i = 1; i <= m; ++i) {
    const auto& x1 = inst.group(detail::gname("X", i, 1));
    detail::append(y_order, inst.group(detail::gname("X", i, 2)));
    y_order.insert(y_order.end(), x1.begin(), x1.begin() + static_cast<std::ptrdiff_t>(gp.a));
    y_order.push_back(diag[i - 1]);
    y_order.insert(y_order.end(), x1.begin() + static_cast<std::ptrdiff_t>(gp.a), x1.end());
    detail::append(y_order, inst.group(detail::gname("X", i, 3)));
  }
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= 3; ++j)
      for (const char* g = "KJIGHFEBDC"; *g; ++g) detail::append(y_order, inst.group(detail::gname(std::string(1, *g), i, j)));

  std::vector<std::int64_t> xs(next), ys(next);
  for (std::size_t r = 0; r < next; ++r) {
    xs[x_order[r]] = static_cast<std::int64_t>(r);
    ys[y_order[r]] = static_cast<std::int64_t>(r);
  }
  inst.points = detail::integer_points(xs, ys);
  return inst;
}

/// Given any S, returns a size-m strip edge with no hit or at least 3.
inline FalsifierResult falsify_strips(const ConstructionInstance& inst, const VertexSet& s) {
  if (inst.kind != "thm4") throw InvalidInput("falsify_strips needs a thm4 instance");
  const auto m = static_cast<std::size_t>(inst.param("m"));
  const auto gp = gadget_params(m);
  const auto n = inst.points.size();
  const auto mask = s.mask(n);

  // Vertices by rank on each axis (coordinates are the ranks).
  std::vector<Vertex> order[2] = {std::vector<Vertex>(n), std::vector<Vertex>(n)};
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t axis = 0; axis < 2; ++axis)
      order[axis][static_cast<std::size_t>(inst.points.coord(v, axis).num())] = v;
  const auto pos = [&](std::size_t axis, Vertex v) { return static_cast<std::size_t>(inst.points.coord(v, axis).num()); };

  // The contiguous range spanned by `core` along an axis, grown to m points
  // upward first, then downward.
  const auto strip_edge = [&](std::size_t axis, const std::vector<Vertex>& core) {
    std::size_t lo = n, hi = 0;
    for (auto v : core) {
      lo = std::min(lo, pos(axis, v));
      hi = std::max(hi, pos(axis, v));
    }
    while (hi + 1 - lo < m && hi + 1 < n) ++hi;
    while (hi + 1 - lo < m && lo > 0) --lo;
    return Edge(order[axis].begin() + static_cast<std::ptrdiff_t>(lo),
                order[axis].begin() + static_cast<std::ptrdiff_t>(hi + 1));
  };
  const auto done = [&](Edge e, std::string step) { return detail::certify(inst, mask, std::move(e), m, 2, step); };
  const auto bad = [&](const Edge& e) {
    const auto h = hit_count(e, mask);
    return h == 0 || h > 2;
  };

  const auto& diag = inst.group("X");
  if (detail::hits_in(diag, mask) == 0 || detail::hits_in(diag, mask) > 2) return done(diag, "diagonal strip");
  std::size_t i = 0;
  while (!mask[diag[i]]) ++i;
  const auto row = i + 1;

  std::size_t clean = 0;
  for (std::size_t j = 1; j <= 3 && !clean; ++j)
    if (detail::hits_in(inst.group(detail::gname("X", row, j)), mask) == 0) clean = j;
  if (!clean) {
    const auto& x1 = inst.group(detail::gname("X", row, 1));
    const std::vector<Vertex> low(x1.begin(), x1.begin() + static_cast<std::ptrdiff_t>(gp.a));
    std::vector<Vertex> core{diag[i]};
    if (detail::hits_in(low, mask) > 0) {
      detail::append(core, inst.group(detail::gname("X", row, 2)));
      detail::append(core, low);
    } else {
      const std::vector<Vertex> high(x1.begin() + static_cast<std::ptrdiff_t>(gp.a), x1.end());
      detail::append(core, high);
      detail::append(core, inst.group(detail::gname("X", row, 3)));
    }
    return done(strip_edge(1, core), "band around the hit diagonal point");
  }

  const auto grp = [&](char g) -> const std::vector<Vertex>& {
    return inst.group(detail::gname(std::string(1, g), row, clean));
  };
  const auto join = [](std::initializer_list<const std::vector<Vertex>*> parts) {
    std::vector<Vertex> out;
    for (auto p : parts) detail::append(out, *p);
    return out;
  };
  const auto &X = grp('X'), &B = grp('B'), &C = grp('C'), &D = grp('D'), &E = grp('E'), &F = grp('F'),
             &G = grp('G'), &H = grp('H'), &I = grp('I'), &J = grp('J'), &K = grp('K');
  const std::size_t vertical = 0, horizontal = 1;

  auto w = strip_edge(vertical, join({&B, &X}));
  if (bad(w)) return done(w, "B with X");
  std::size_t h = 0;
  while (!mask[B[h]]) ++h;  // B[h] is the leftmost hit
  {
    std::vector<Vertex> core(B.begin() + static_cast<std::ptrdiff_t>(h + 1), B.end());
    detail::append(core, X);
    core.insert(core.end(), C.begin(), C.begin() + static_cast<std::ptrdiff_t>(h + 1));
    w = strip_edge(vertical, core);
    if (bad(w)) return done(w, "shifted B-C window with X");
  }
  {
    std::vector<Vertex> core(B.begin() + static_cast<std::ptrdiff_t>(h), B.end());
    detail::append(core, D);
    core.insert(core.end(), C.begin(), C.begin() + static_cast<std::ptrdiff_t>(h + 1));
    w = strip_edge(horizontal, core);
    if (bad(w)) return done(w, "B-C window with D");
  }
  const std::pair<std::size_t, std::vector<Vertex>> chain[] = {
      {vertical, join({&G, &E, &D})},   {vertical, join({&E, &D, &H})},   {vertical, join({&D, &H, &F})},
      {horizontal, join({&H, &F, &E, &B})}, {horizontal, join({&I, &G, &H})}, {horizontal, join({&J, &I})},
      {vertical, join({&I, &K})},       {vertical, join({&K, &J, &G})},
  };
  const char* steps[] = {"G E D", "E D H", "D H F", "H F E B", "I G H", "J I", "I K", "K J G"};
  for (std::size_t t = 0; t < std::size(chain); ++t) {
    w = strip_edge(chain[t].first, chain[t].second);
    if (bad(w)) return done(w, steps[t]);
  }
  throw TheoremViolation("strip falsifier exhausted the gadget chain without a violating edge");
}

// ---------------------------------------------------------------------------
// Cross unions.

/// Eight clusters of ceil(3k/4) - 1 points around fixed centers; each cluster
/// is a short rising diagonal, integer coordinates scaled by 1000.
inline ConstructionInstance build_cross_lb(std::size_t k) {
  const auto c = lower_bound_copies(k);
  if (c >= 1000) throw InvalidInput("k too large for the cluster scale");
  static constexpr std::int64_t centers[8][2] = {{1, 2}, {2, 4}, {3, 1}, {4, 3}, {5, -2}, {6, 0}, {7, -3}, {8, -1}};
  ConstructionInstance inst;
  inst.kind = "thm5";
  inst.family = RangeFamily::cross_union();
  inst.params["k"] = static_cast<std::int64_t>(k);
  std::vector<std::int64_t> xs, ys;
  for (std::size_t g = 0; g < 8; ++g) {
    std::vector<Vertex> members;
    for (std::size_t t = 0; t < c; ++t) {
      members.push_back(static_cast<Vertex>(xs.size()));
      xs.push_back(centers[g][0] * 1000 + static_cast<std::int64_t>(t));
      ys.push_back(centers[g][1] * 1000 + static_cast<std::int64_t>(t));
    }
    inst.groups[detail::gname("cluster", g)] = std::move(members);
  }
  inst.points = detail::integer_points(xs, ys);
  return inst;
}

/// A color absent from three clusters; their union is one cross capture.
inline ColorWitness witness_cross(const ConstructionInstance& inst, const ColorAssignment& chi) {
  if (inst.kind != "thm5") throw InvalidInput("witness_cross needs a thm5 instance");
  if (chi.colors.size() != inst.points.size()) throw InvalidInput("coloring length does not match the point count");
  std::vector<std::vector<Vertex>> groups;
  for (std::size_t g = 0; g < 8; ++g) groups.push_back(inst.group(detail::gname("cluster", g)));
  const auto absent = detail::absent_colors(groups, chi);
  for (std::uint32_t color = 0; color < chi.k; ++color) {
    std::vector<std::size_t> clusters;
    for (std::size_t g = 0; g < 8 && clusters.size() < 3; ++g)
      if (std::binary_search(absent[g].begin(), absent[g].end(), color)) clusters.push_back(g);
    if (clusters.size() < 3) continue;
    Edge e;
    for (auto g : clusters) detail::append(e, groups[g]);
    std::sort(e.begin(), e.end());
    if (!capture_contains(inst.points, inst.family, VertexSet(e)))
      throw TheoremViolation("three clusters are not separable by a cross");
    detail::check_witness(e, color, chi);
    return {std::move(e), color};
  }
  throw TheoremViolation("no color is absent from three clusters");
}

// ---------------------------------------------------------------------------
// Unions of s strips.

/// k(s-1)+1 copies of a planar instance, copy t shifted by t times (extent + 1)
/// on both axes so copies share no row or column. Vertex t*n + i is point i of
/// copy t; groups "copy_t" list each copy.
inline ConstructionInstance build_sstrips_lb(std::size_t s, std::size_t k, const PointSet& base) {
  if (s < 1) throw InvalidInput("s must be >= 1");
  if (k < 2) throw InvalidInput("k must be >= 2");
  if (base.dim != 2) throw InvalidInput("base instance must be planar");
  ConstructionInstance inst;
  inst.kind = "thm6";
  inst.family = RangeFamily::strip_union(s);
  inst.params["s"] = static_cast<std::int64_t>(s);
  inst.params["k"] = static_cast<std::int64_t>(k);
  const auto copies = k * (s - 1) + 1;
  inst.params["copies"] = static_cast<std::int64_t>(copies);
  Rational extent(0);
  if (base.size() > 0) {
    for (std::size_t axis = 0; axis < 2; ++axis) {
      Rational lo = base.coord(0, axis), hi = lo;
      for (std::size_t i = 0; i < base.size(); ++i) {
        lo = std::min(lo, base.coord(i, axis));
        hi = std::max(hi, base.coord(i, axis));
      }
      extent = std::max(extent, hi - lo);
    }
  }
  const Rational step = extent + Rational(1);
  std::vector<Point> pts;
  for (std::size_t t = 0; t < copies; ++t) {
    const Rational shift = step * Rational(static_cast<std::int64_t>(t));
    std::vector<Vertex> members;
    for (std::size_t i = 0; i < base.size(); ++i) {
      members.push_back(static_cast<Vertex>(pts.size()));
      pts.push_back({base.coord(i, 0) + shift, base.coord(i, 1) + shift});
    }
    inst.groups[detail::gname("copy", t)] = std::move(members);
  }
  inst.points = PointSet(2, std::move(pts));
  return inst;
}

/// Original point index of a vertex of an s-strip instance.
inline std::pair<std::size_t, std::size_t> copy_of(const ConstructionInstance& inst, Vertex v) {
  const auto copies = static_cast<std::size_t>(inst.param("copies"));
  const auto n = inst.points.size() / copies;
  return {v / n, v % n};
}

}  // namespace polyhs
