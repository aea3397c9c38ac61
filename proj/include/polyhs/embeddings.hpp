#pragma once

// Maps between arithmetic-progression hypergraphs and geometric ones.
//
// Forward maps place naturals as points so that every progression edge is cut
// out by one range: nested squares for divisor chains, valuation-driven
// coordinates for {p^i q^j} and {t^i}. Reverse maps label points by
// p^e1 q^e2 ... k so that every range edge becomes a progression.
//
// Octants here open toward +x and toward -y, -z: {x >= x0, y <= y0, z <= z0}.
// Coordinates that shrink as divisibility grows therefore use 1/g instead of
// 1 - 1/g, with 2 standing in for "not divisible at all".

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polyhs/apgraphs.hpp"
#include "polyhs/core.hpp"
#include "polyhs/geometry.hpp"
#include "polyhs/rational.hpp"

namespace polyhs {

/// Exponent of p in n (n >= 1).
inline std::uint32_t valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw InvalidInput("valuation of 0 is unbounded");
  if (p < 2) throw InvalidInput("valuation base must be >= 2");
  std::uint32_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

enum class MapDirection { NaturalsToPoints, PointsToNaturals, PointsToPoints };

inline std::string direction_name(MapDirection d) {
  switch (d) {
    case MapDirection::NaturalsToPoints: return "naturals-to-points";
    case MapDirection::PointsToNaturals: return "points-to-naturals";
    case MapDirection::PointsToPoints: return "points-to-points";
  }
  return "unknown";
}

/// (label, point index) pairs. For maps out of the naturals the label is the
/// natural; for maps out of a point set it is the source point index.
struct Correspondence {
  std::vector<std::pair<std::uint64_t, std::size_t>> pairs;
  MapDirection direction = MapDirection::NaturalsToPoints;
  RangeFamily family;

  std::optional<std::size_t> point_of(std::uint64_t label) const {
    for (const auto& [l, i] : pairs)
      if (l == label) return i;
    return std::nullopt;
  }

  bool injective() const {
    std::set<std::uint64_t> labels;
    std::set<std::size_t> points;
    for (const auto& [l, i] : pairs) {
      if (!labels.insert(l).second || !points.insert(i).second) return false;
    }
    return true;
  }

  friend bool operator==(const Correspondence&, const Correspondence&) = default;
};

struct Embedding {
  PointSet points;
  Correspondence corr;
};

// ---------------------------------------------------------------------------
// Divisor chains to octants: nested squares.

/// Digit expansion n = sum c_j d_j over the chain 1 = d_0 | d_1 | ...; returns
/// the nonzero digits as (position, digit) in increasing position.
inline std::vector<std::pair<std::size_t, std::uint64_t>> chain_digits(std::uint64_t n, const APSpec& chain) {
  validate(chain);
  std::vector<std::pair<std::size_t, std::uint64_t>> digits;
  if (chain.kind == GeneratorKind::Powers) {
    const auto t = chain.params[0];
    for (std::size_t pos = 0; n > 0; ++pos, n /= t)
      if (n % t) digits.emplace_back(pos, n % t);
    return digits;
  }
  if (chain.kind != GeneratorKind::DivisorChain) throw InvalidInput("square nesting needs powers or divisorChain");
  std::vector<std::uint64_t> d{1};
  d.insert(d.end(), chain.params.begin(), chain.params.end());
  for (std::size_t pos = 0; pos + 1 < d.size(); ++pos) {
    const auto radix = d[pos + 1] / d[pos];
    const auto c = n % radix;
    if (c) digits.emplace_back(pos, c);
    n /= radix;
  }
  if (n) digits.emplace_back(d.size() - 1, n);
  return digits;
}

struct Square {
  Rational y, z, side;

  bool strictly_inside(const Square& outer) const {
    return outer.y < y && y + side < outer.y + outer.side && outer.z < z && z + side < outer.z + outer.side;
  }
  friend bool operator==(const Square&, const Square&) = default;
};

struct SquareEmbedding {
  PointSet points;
  Correspondence corr;
  std::map<std::uint64_t, Square> squares;         // every node of the digit tree that was laid out
  std::map<std::uint64_t, std::uint64_t> parent;   // node -> parent (root 0 has none)
  std::map<std::uint64_t, std::vector<std::uint64_t>> children;  // in diagonal order
};

/// Each n sits at the south-west corner of its square; the children of a
/// square (n plus one more nonzero digit above its highest one) run along the
/// diagonal from north-west to south-east, ordered by digit position, then
/// digit value. x = n.
inline SquareEmbedding map_powers_to_octants(const std::set<std::uint64_t>& s, const APSpec& chain) {
  validate(chain);
  SquareEmbedding out;
  std::set<std::uint64_t> nodes{0};
  std::map<std::uint64_t, std::pair<std::size_t, std::uint64_t>> top_digit;
  for (auto n : s) {
    auto digits = chain_digits(n, chain);
    auto value = n;
    while (!digits.empty()) {
      nodes.insert(value);
      const auto [pos, c] = digits.back();
      top_digit[value] = {pos, c};
      std::uint64_t dpos = 1;
      if (chain.kind == GeneratorKind::Powers) {
        for (std::size_t i = 0; i < pos; ++i) dpos *= chain.params[0];
      } else if (pos > 0) {
        dpos = chain.params[pos - 1];
      }
      const auto par = value - c * dpos;
      out.parent[value] = par;
      value = par;
      digits.pop_back();
    }
  }
  for (auto n : nodes)
    if (n != 0) out.children[out.parent.at(n)].push_back(n);
  for (auto& [par, kids] : out.children)
    std::sort(kids.begin(), kids.end(), [&](auto a, auto b) { return top_digit.at(a) < top_digit.at(b); });

  out.squares[0] = Square{0, 0, 1};
  std::vector<std::uint64_t> stack{0};
  while (!stack.empty()) {
    const auto n = stack.back();
    stack.pop_back();
    const auto it = out.children.find(n);
    if (it == out.children.end()) continue;
    const auto& sq = out.squares.at(n);
    const auto c = static_cast<std::int64_t>(it->second.size());
    const Rational w = sq.side / Rational(c + 1);
    for (std::int64_t t = 0; t < c; ++t) {
      const auto child = it->second[static_cast<std::size_t>(t)];
      out.squares[child] = Square{sq.y + Rational(t + 1) * w, sq.z + Rational(c - t) * w, w / Rational(2)};
      stack.push_back(child);
    }
  }

  std::vector<Point> pts;
  out.corr.direction = MapDirection::NaturalsToPoints;
  out.corr.family = RangeFamily::octants();
  for (auto n : s) {
    const auto& sq = out.squares.at(n);
    out.corr.pairs.emplace_back(n, pts.size());
    pts.push_back({Rational(static_cast<std::int64_t>(n)), sq.y, sq.z});
  }
  out.points = PointSet(3, std::move(pts));
  return out;
}

// ---------------------------------------------------------------------------
// Valuation maps.

namespace detail {

/// 1/g for g >= 1, 2 for g = 0, 0 for the value 0 (divisible by everything).
inline Rational inverse_valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return Rational(0);
  const auto g = valuation(n, p);
  return g == 0 ? Rational(2) : Rational(1, g);
}

/// For each residue mod `modulus`, the unique offset of M with that residue.
inline std::map<std::uint64_t, std::uint64_t> offsets_by_residue(const std::set<std::uint64_t>& offsets,
                                                                 std::uint64_t modulus) {
  std::map<std::uint64_t, std::uint64_t> by_residue;
  for (auto mu : offsets)
    if (!by_residue.emplace(mu % modulus, mu).second)
      throw InvalidInput("offsets " + std::to_string(by_residue[mu % modulus]) + " and " + std::to_string(mu) +
                         " share a residue mod " + std::to_string(modulus));
  return by_residue;
}

/// n - mu_r where mu_r is the offset in n's residue class, if mu_r <= n.
inline std::optional<std::uint64_t> shifted(std::uint64_t n, const std::map<std::uint64_t, std::uint64_t>& by_residue,
                                            std::uint64_t modulus) {
  const auto it = by_residue.find(n % modulus);
  if (it == by_residue.end() || it->second > n) return std::nullopt;
  return n - it->second;
}

}  // namespace detail

/// M = {0}: n -> (n, 1/g1(n), 1/g2(n)) with g the p- and q-valuations.
/// Otherwise residue r = n mod pq gets its own diagonal cell
/// [r + 1/4, r + 3/4] x [-r + 1/4, -r + 3/4], inside which n - mu_r is placed
/// by the M = {0} rule scaled by 1/4.
inline Embedding map_pq_to_octants(const std::set<std::uint64_t>& s, std::uint64_t p, std::uint64_t q,
                                   const std::set<std::uint64_t>& offsets) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1) throw InvalidInput("p and q must be coprime and >= 2");
  if (offsets.empty()) throw InvalidInput("offset set M must be nonempty");
  const auto pq = p * q;
  const auto by_residue = detail::offsets_by_residue(offsets, pq);
  const bool plain = offsets == std::set<std::uint64_t>{0};
  Embedding out;
  out.corr.direction = MapDirection::NaturalsToPoints;
  out.corr.family = RangeFamily::octants();
  std::vector<Point> pts;
  for (auto n : s) {
    const Rational x(static_cast<std::int64_t>(n));
    Point pt;
    if (plain) {
      pt = {x, detail::inverse_valuation(n, p), detail::inverse_valuation(n, q)};
    } else {
      const auto r = static_cast<std::int64_t>(n % pq);
      const auto base = detail::shifted(n, by_residue, pq);
      const Rational fy = base ? detail::inverse_valuation(*base, p) : Rational(2);
      const Rational fz = base ? detail::inverse_valuation(*base, q) : Rational(2);
      const Rational quarter(1, 4);
      pt = {x, Rational(r) + quarter + fy * quarter, Rational(-r) + quarter + fz * quarter};
    }
    out.corr.pairs.emplace_back(n, pts.size());
    pts.push_back(std::move(pt));
  }
  out.points = PointSet(3, std::move(pts));
  return out;
}

/// M = {0}: n -> (1 - 1/n, 1/t(n)), 0 -> (-1, 0). Otherwise residue r = n mod t
/// occupies x in [2r, 2r + 1): n -> (2r + 1 - 1/n, 1/t(n - mu_r)).
inline Embedding map_powers_to_bottomless(const std::set<std::uint64_t>& s, std::uint64_t t,
                                          const std::set<std::uint64_t>& offsets) {
  if (t < 2) throw InvalidInput("t must be >= 2");
  if (offsets.empty()) throw InvalidInput("offset set M must be nonempty");
  const auto by_residue = detail::offsets_by_residue(offsets, t);
  const bool plain = offsets == std::set<std::uint64_t>{0};
  Embedding out;
  out.corr.direction = MapDirection::NaturalsToPoints;
  out.corr.family = RangeFamily::bottomless();
  std::vector<Point> pts;
  for (auto n : s) {
    Point pt;
    if (n == 0) {
      // 1 - 1/1 = 0 would put 0 and 1 on one vertical line, and {1} is an edge
      // (d = 1); with M = {0}, 0 moves left of everything.
      pt = {Rational(plain ? -1 : 0), Rational(0)};
    } else {
      const auto inv = Rational(1, static_cast<std::int64_t>(n));
      if (plain) {
        pt = {Rational(1) - inv, detail::inverse_valuation(n, t)};
      } else {
        const auto r = static_cast<std::int64_t>(n % t);
        const auto base = detail::shifted(n, by_residue, t);
        pt = {Rational(2 * r + 1) - inv, base ? detail::inverse_valuation(*base, t) : Rational(2)};
      }
    }
    out.corr.pairs.emplace_back(n, pts.size());
    pts.push_back(std::move(pt));
  }
  out.points = PointSet(2, std::move(pts));
  return out;
}

/// (u, v) -> (u, v, -v): rectangle [x1,x2] x [v1,v2] becomes the slab
/// x1 <= x <= x2, y <= v2, z <= -v1.
inline Embedding map_rectangles_to_tfin(const PointSet& p) {
  if (p.dim != 2) throw InvalidInput("rectangle points must be planar");
  Embedding out;
  out.corr.direction = MapDirection::PointsToPoints;
  out.corr.family = RangeFamily::tfin_slabs();
  std::vector<Point> pts;
  for (std::size_t i = 0; i < p.size(); ++i) {
    out.corr.pairs.emplace_back(i, i);
    pts.push_back({p.coord(i, 0), p.coord(i, 1), -p.coord(i, 1)});
  }
  out.points = PointSet(3, std::move(pts));
  return out;
}

// ---------------------------------------------------------------------------
// Points to naturals.

struct Labeling {
  std::vector<std::uint64_t> labels;  // labels[i] for point i
  std::vector<std::uint64_t> bases;
  Correspondence corr;
};

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("label exceeds 64 bits");
  return r;
}

/// 1-based ascending ranks along one axis; ties broken by point index.
inline std::vector<std::size_t> tie_broken_ranks(const PointSet& p, std::size_t axis) {
  const auto order = sorted_by_axis(p, axis);
  std::vector<std::size_t> rank(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i + 1;
  return rank;
}

inline Labeling label_points(const PointSet& p, const std::vector<std::uint64_t>& bases, RangeFamily family) {
  if (p.dim != bases.size() + 1)
    throw InvalidInput("labeling needs dimension " + std::to_string(bases.size() + 1));
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (bases[i] < 2) throw InvalidInput("label bases must be >= 2");
    for (std::size_t j = i + 1; j < bases.size(); ++j)
      if (std::gcd(bases[i], bases[j]) != 1) throw InvalidInput("label bases must be pairwise coprime");
  }
  const auto n = p.size();
  std::vector<std::vector<std::size_t>> ranks;
  for (std::size_t a = 0; a < p.dim; ++a) ranks.push_back(tie_broken_ranks(p, a));
  std::vector<std::size_t> by_x(n);
  for (std::size_t i = 0; i < n; ++i) by_x[ranks[0][i] - 1] = i;

  Labeling out{std::vector<std::uint64_t>(n), bases, {}};
  const auto coprime = [&](std::uint64_t k) {
    for (auto b : bases)
      if (std::gcd(k, b) != 1) return false;
    return true;
  };
  std::uint64_t previous = 0;
  for (auto i : by_x) {
    // Lower thresholds {y <= y0} select the points of small rank, so those get
    // the large exponents: exponent = n + 1 - rank.
    std::uint64_t base = 1;
    for (std::size_t a = 0; a < bases.size(); ++a)
      for (std::size_t e = 0; e < n + 1 - ranks[a + 1][i]; ++e) base = checked_mul(base, bases[a]);
    std::uint64_t k = previous / base + 1;
    while (!coprime(k)) ++k;
    out.labels[i] = checked_mul(base, k);
    previous = out.labels[i];
  }
  out.corr.direction = MapDirection::PointsToNaturals;
  out.corr.family = family;
  for (std::size_t i = 0; i < n; ++i) out.corr.pairs.emplace_back(out.labels[i], i);
  return out;
}

}  // namespace detail

/// gamma(P) = p^ey q^ez k, strictly increasing in the x-order, k the least
/// admissible multiplier coprime to pq.
inline Labeling map_octants_to_pq(const PointSet& pts, std::uint64_t p, std::uint64_t q) {
  return detail::label_points(pts, {p, q}, RangeFamily::octants());
}

inline Labeling map_hextants_to_pqr(const PointSet& pts, std::uint64_t p1, std::uint64_t p2, std::uint64_t p3) {
  return detail::label_points(pts, {p1, p2, p3}, RangeFamily::hextants());
}

struct LabelEdgeCheck {
  bool ok = true;
  std::uint64_t difference = 1;
  std::string reason;
};

/// Checks that the labels of `edge` are exactly the multiples of
/// d = prod base^(min valuation over the edge) among all labels, from the
/// smallest edge label upward (a progression tail with a0 divisible by d), or
/// with `bounded` set, between the smallest and the largest edge label (a
/// contiguous run of multiples of d).
inline LabelEdgeCheck check_label_edge(const Labeling& lab, const Edge& edge, bool bounded) {
  LabelEdgeCheck out;
  if (edge.empty()) return {false, 1, "empty edge"};
  std::uint64_t d = 1;
  for (auto b : lab.bases) {
    std::uint32_t e = UINT32_MAX;
    for (auto v : edge) e = std::min(e, valuation(lab.labels[v], b));
    for (std::uint32_t i = 0; i < e; ++i) d = detail::checked_mul(d, b);
  }
  out.difference = d;
  std::uint64_t lo = UINT64_MAX, hi = 0;
  for (auto v : edge) {
    lo = std::min(lo, lab.labels[v]);
    hi = std::max(hi, lab.labels[v]);
  }
  std::vector<char> in_edge(lab.labels.size(), 0);
  for (auto v : edge) in_edge[v] = 1;
  for (std::size_t i = 0; i < lab.labels.size(); ++i) {
    const auto l = lab.labels[i];
    const bool expected = l % d == 0 && l >= lo && (!bounded || l <= hi);
    if (expected != static_cast<bool>(in_edge[i])) {
      out.ok = false;
      out.reason = "label " + std::to_string(l) + (expected ? " missing from" : " unexpected in") +
                   " progression with difference " + std::to_string(d);
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

struct PreservationReport {
  bool preserved = true;
  std::optional<Edge> failing_edge;  // source edge, in source vertex indices
  std::optional<Edge> failing_image;
  RangeFamily family;
  MapDirection direction = MapDirection::NaturalsToPoints;
};

/// Checks every source edge: the image points must be exactly one range of F.
/// `source_labels[v]` is the label of source vertex v as used by `corr`.
inline PreservationReport verify_edge_preservation(const Hypergraph& source,
                                                   const std::vector<std::uint64_t>& source_labels,
                                                   const PointSet& target, const RangeFamily& family,
                                                   const Correspondence& corr) {
  if (source_labels.size() != source.vertex_count())
    throw InvalidInput("source label count does not match vertex count");
  std::map<std::uint64_t, std::size_t> lookup;
  for (const auto& [l, i] : corr.pairs) lookup[l] = i;
  std::vector<Vertex> image_of(source.vertex_count());
  for (std::size_t v = 0; v < source.vertex_count(); ++v) {
    const auto it = lookup.find(source_labels[v]);
    if (it == lookup.end()) throw InvalidInput("correspondence misses label " + std::to_string(source_labels[v]));
    image_of[v] = static_cast<Vertex>(it->second);
  }
  PreservationReport report;
  report.family = family;
  report.direction = corr.direction;
  for (const auto& e : source.edges()) {
    std::vector<Vertex> image;
    for (auto v : e) image.push_back(image_of[v]);
    VertexSet img(std::move(image));
    if (!capture_contains(target, family, img)) {
      report.preserved = false;
      report.failing_edge = e;
      report.failing_image = img.members();
      return report;
    }
  }
  return report;
}

}  // namespace polyhs
