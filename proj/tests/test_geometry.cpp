#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"

using namespace polyhs;
namespace pt = polyhs::testing;

namespace {

PointSet planar(std::vector<std::pair<std::int64_t, std::int64_t>> xy) {
  std::vector<Point> pts;
  for (auto [x, y] : xy) pts.push_back({Rational(x), Rational(y)});
  return PointSet(2, pts);
}

/// Distinct coordinates on every axis (a random permutation per axis).
PointSet distinct_points(pt::Rng& rng, std::size_t n, std::size_t dim) {
  std::vector<Point> pts(n);
  for (std::size_t a = 0; a < dim; ++a) {
    std::vector<std::int64_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < n; ++i) pts[i].push_back(Rational(perm[i]));
  }
  return PointSet(dim, pts);
}

}  // namespace

TEST(Capture, BottomlessThreePoints) {
  const auto p = planar({{0, 0}, {1, 2}, {2, 1}});
  EXPECT_EQ(capture_edges(p, RangeFamily::bottomless()).edge_count(), 7U);
  EXPECT_TRUE(capture_contains(p, RangeFamily::bottomless(), VertexSet{0, 2}));
  const auto exact = capture_edges(p, RangeFamily::bottomless(), SizeFilter::exact(3));
  EXPECT_EQ(exact.edges(), (std::vector<Edge>{{0, 1, 2}}));
}

TEST(Capture, StripsExample) {
  const auto p = planar({{0, 0}, {1, 1}, {2, 0}});
  const auto h = capture_edges(p, RangeFamily::strips());
  EXPECT_EQ(h, pt::oracle_hypergraph(p, RangeFamily::strips()));
  EXPECT_TRUE(h.contains({0, 2}));
  EXPECT_TRUE(capture_contains(p, RangeFamily::strips(), VertexSet{0, 2}));
  EXPECT_FALSE(capture_contains(p, RangeFamily::strips(), VertexSet{}));
}

TEST(Capture, OctantsTwoPoints) {
  const PointSet p(3, {{0, 0, 0}, {1, 1, 1}});
  EXPECT_EQ(capture_edges(p, RangeFamily::octants()).edges(), (std::vector<Edge>{{0}, {0, 1}, {1}}));
}

TEST(Capture, DimensionMismatch) {
  const auto p = planar({{0, 0}});
  EXPECT_THROW(capture_edges(p, RangeFamily::octants()), InvalidInput);
  EXPECT_THROW(capture_contains(p, RangeFamily::hextants(), VertexSet{0}), InvalidInput);
  EXPECT_THROW(PointSet(5, {}), InvalidInput);
}

TEST(Capture, MatchesOracleAndMembership) {
  pt::Rng rng(2024);
  for (const auto& f : pt::all_families()) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto n = pt::uniform(rng, 1, 8);
      const auto p = pt::random_points(rng, n, f.dim(), 4);
      const auto oracle = pt::oracle_captures(p, f);
      EXPECT_EQ(capture_edges(p, f), pt::oracle_hypergraph(p, f)) << family_name(f);
      for (pt::Mask m = 1; m < (pt::Mask{1} << n); ++m)
        ASSERT_EQ(capture_contains(p, f, VertexSet(pt::mask_to_edge(m))), oracle.count(m) > 0)
            << family_name(f) << " mask " << m;
    }
  }
}

TEST(Capture, SizeFiltersAgree) {
  pt::Rng rng(9);
  for (const auto& f : pt::all_families()) {
    const auto p = pt::random_points(rng, 9, f.dim(), 6);
    const auto all = capture_edges(p, f);
    for (std::size_t m = 1; m <= 9; ++m) {
      EXPECT_EQ(capture_edges(p, f, SizeFilter::exact(m)), restrict_exact(all, m)) << family_name(f) << m;
      EXPECT_EQ(capture_edges(p, f, SizeFilter::at_least(m)), restrict_at_least(all, m)) << family_name(f) << m;
    }
  }
}

TEST(Capture, ExactFastPathsOnLargerSets) {
  pt::Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = pt::random_points(rng, 40, 2, 25);
    for (std::size_t m : {1, 3, 7, 20}) {
      for (const auto& f : {RangeFamily::strips(), RangeFamily::strip_union(1), RangeFamily::bottomless()}) {
        const auto fast = capture_edges(p, f, SizeFilter::exact(m));
        EXPECT_EQ(fast, restrict_exact(capture_edges(p, f), m)) << family_name(f) << m;
      }
    }
  }
}

TEST(Capture, StripUnionOneIsStrips) {
  pt::Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = pt::random_points(rng, 10, 2, 5);
    EXPECT_EQ(capture_edges(p, RangeFamily::strip_union(1)), capture_edges(p, RangeFamily::strips()));
  }
}

TEST(Capture, RectanglesClosedUnderIntersection) {
  pt::Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = pt::random_points(rng, 8, 2, 5);
    const auto h = capture_edges(p, RangeFamily::rectangles());
    for (const auto& a : h.edges())
      for (const auto& b : h.edges()) {
        Edge both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
        if (!both.empty()) {
          EXPECT_TRUE(h.contains(both));
        }
      }
  }
}

TEST(Capture, StripUnionThreeMatchesOracle) {
  pt::Rng rng(77);
  for (int trial = 0; trial < 15; ++trial) {
    const auto p = pt::random_points(rng, 8, 2, 5);
    EXPECT_EQ(capture_edges(p, RangeFamily::strip_union(3)), pt::oracle_hypergraph(p, RangeFamily::strip_union(3)));
  }
}

TEST(DualStrips, Examples) {
  const std::vector<Strip> four = {{Axis::X, 0, 2}, {Axis::X, 1, 3}, {Axis::Y, 0, 2}, {Axis::Y, 1, 3}};
  const auto h = dual_strips_hypergraph(four);
  for (Vertex a = 0; a < 4; ++a)
    for (Vertex b = a + 1; b < 4; ++b) EXPECT_TRUE(h.contains({a, b}));
  EXPECT_TRUE(h.contains({0, 1, 2, 3}));
  EXPECT_EQ(dual_strips_hypergraph({{Axis::X, 0, 1}}).edges(), (std::vector<Edge>{{0}}));
  EXPECT_EQ(dual_strips_hypergraph({{Axis::X, 0, 1}, {Axis::X, 2, 3}}).edges(), (std::vector<Edge>{{0}, {1}}));
  EXPECT_THROW(dual_strips_hypergraph({{Axis::Y, 1, 1}}), InvalidInput);
}

TEST(DualStrips, MatchesDenseSampling) {
  // Oracle: sample a fine grid of quarter-integer points.
  pt::Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Strip> strips;
    const auto n = pt::uniform(rng, 1, 6);
    for (std::size_t i = 0; i < n; ++i) {
      const auto lo = static_cast<std::int64_t>(rng() % 6);
      const auto hi = lo + 1 + static_cast<std::int64_t>(rng() % 4);
      strips.push_back({rng() % 2 ? Axis::X : Axis::Y, lo, hi});
    }
    std::vector<Edge> edges;
    for (std::int64_t xi = -4; xi <= 44; ++xi)
      for (std::int64_t yi = -4; yi <= 44; ++yi) {
        const Rational x(xi, 4), y(yi, 4);
        Edge e;
        for (std::size_t i = 0; i < n; ++i) {
          const auto& v = strips[i].axis == Axis::X ? x : y;
          if (strips[i].lo < v && v < strips[i].hi) e.push_back(static_cast<Vertex>(i));
        }
        edges.push_back(e);
      }
    EXPECT_EQ(dual_strips_hypergraph(strips), Hypergraph(n, edges));
  }
}

TEST(Shrink, Examples) {
  const auto column = planar({{0, 0}, {0, 1}, {0, 2}});
  EXPECT_EQ(shrink_edge(column, RangeFamily::bottomless(), VertexSet{0, 1, 2}), (VertexSet{0, 1}));
  const auto row = planar({{0, 5}, {1, 3}, {2, 4}});
  const auto shrunk = shrink_edge(row, RangeFamily::strips(), VertexSet{0, 1, 2});
  EXPECT_TRUE(shrunk == (VertexSet{1, 2}) || shrunk == (VertexSet{0, 1}));
  EXPECT_THROW(shrink_edge(row, RangeFamily::strips(), VertexSet{1}), InvalidInput);
}

TEST(Shrink, OutputIsCapturedAndOneSmaller) {
  pt::Rng rng(99);
  for (const auto& f : pt::all_families()) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto p = distinct_points(rng, 8, f.dim());
      const auto h = capture_edges(p, f, SizeFilter::at_least(2));
      for (const auto& e : h.edges()) {
        const auto s = shrink_edge(p, f, VertexSet(e));
        ASSERT_EQ(s.size() + 1, e.size());
        ASSERT_TRUE(std::includes(e.begin(), e.end(), s.members().begin(), s.members().end()));
        ASSERT_TRUE(capture_contains(p, f, s)) << family_name(f);
      }
    }
  }
}

TEST(StripUnion, PigeonholeSubEdge) {
  pt::Rng rng(55);
  for (std::size_t s : {2, 3}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto p = pt::random_points(rng, 10, 2, 8);
      const auto h = capture_edges(p, RangeFamily::strip_union(s));
      for (const auto& e : h.edges()) {
        const auto sub = largest_single_strip_subedge(p, VertexSet(e));
        EXPECT_TRUE(capture_contains(p, RangeFamily::strips(), sub));
        EXPECT_GE(sub.size() * s, e.size());
      }
    }
  }
}

TEST(Family, NamesRoundTrip) {
  for (const auto& f : pt::all_families()) EXPECT_EQ(parse_family(family_name(f), f.s), f);
  EXPECT_THROW(parse_family("circles"), InvalidInput);
}
