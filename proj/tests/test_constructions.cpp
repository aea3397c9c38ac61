#include <gtest/gtest.h>

#include "support.hpp"

using namespace polyhs;
namespace pt = polyhs::testing;

namespace {

VertexSet random_subset(pt::Rng& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < n; ++v)
    if (coin(rng)) out.push_back(static_cast<Vertex>(v));
  return VertexSet(std::move(out));
}

void expect_sound(const ConstructionInstance& inst, const VertexSet& s, const FalsifierResult& r, std::size_t c) {
  const auto m = static_cast<std::size_t>(inst.param("m"));
  const auto& e = r.witness.edge;
  EXPECT_EQ(e.size(), m) << r.step;
  const auto hits = hit_count(e, s.mask(inst.points.size()));
  EXPECT_TRUE(hits == 0 || hits > c) << r.step << " hits " << hits;
  EXPECT_TRUE(capture_contains(inst.points, inst.family, VertexSet(e))) << r.step;
}

bool distinct_coordinates(const PointSet& p) {
  for (std::size_t axis = 0; axis < p.dim; ++axis) {
    std::set<Rational> seen;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (!seen.insert(p.coord(i, axis)).second) return false;
  }
  return true;
}

std::vector<Vertex> all_vertices(std::size_t n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST(Bottomless, SizesAndGroups) {
  const auto small = build_bottomless_no3shs(3);
  EXPECT_EQ(small.points.size(), 39U);
  EXPECT_FALSE(small.theorem_regime);
  const auto inst = build_bottomless_no3shs(12);
  EXPECT_EQ(inst.points.size(), bottomless_vertex_count(12));
  EXPECT_EQ(inst.points.size(), 1992U);
  EXPECT_TRUE(inst.theorem_regime);
  EXPECT_TRUE(distinct_coordinates(inst.points));
  EXPECT_EQ(inst.group("P").size(), 12U);
  EXPECT_EQ(inst.group("A_1").size(), 10U);
  EXPECT_EQ(inst.group("B_1").size(), 12U);
  EXPECT_EQ(inst.group("C_1_1").size(), 12U);
  EXPECT_TRUE(capture_contains(inst.points, inst.family, VertexSet(inst.group("P"))));
  EXPECT_THROW(build_bottomless_no3shs(2), InvalidInput);
}

TEST(Bottomless, FalsifierExamples) {
  const auto inst = build_bottomless_no3shs(12);
  const auto n = inst.points.size();
  auto r = falsify_bottomless(inst, VertexSet{});
  EXPECT_EQ(r.witness.edge, inst.group("P"));
  EXPECT_EQ(r.witness.kind, ViolationKind::ZeroHit);
  r = falsify_bottomless(inst, VertexSet(all_vertices(n)));
  EXPECT_EQ(r.witness.edge, inst.group("P"));
  EXPECT_EQ(r.witness.kind, ViolationKind::Overflow);
  EXPECT_EQ(r.witness.value, 12U);
  const VertexSet one{inst.group("P")[0]};
  r = falsify_bottomless(inst, one);
  EXPECT_EQ(r.witness.kind, ViolationKind::ZeroHit);
  expect_sound(inst, one, r, 3);
}

TEST(Bottomless, FalsifierOnRandomSets) {
  const auto inst = build_bottomless_no3shs(12);
  pt::Rng rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = random_subset(rng, inst.points.size(), 0.01 + 0.49 * (trial % 50) / 49.0);
    expect_sound(inst, s, falsify_bottomless(inst, s), 3);
  }
}

TEST(Bottomless, AdversarialSetsReachEveryCase) {
  // Hand-built sets steering into each branch of the case analysis.
  const auto inst = build_bottomless_no3shs(12);
  const auto& p = inst.group("P");
  const auto& a = inst.group("A_2");
  const auto& b = inst.group("B_2");
  std::set<std::string> steps;
  std::vector<std::vector<Vertex>> sets = {
      {p[1], a[3]},
      {p[1], a[3], b[4]},
      {p[1], a[3], b[4], inst.group("C_2_5")[7]},
      {p[1]},
  };
  std::vector<Vertex> every_triple{p[1]};
  for (std::size_t j = 2; j < b.size(); j += 3) every_triple.push_back(b[j]);
  sets.push_back(every_triple);
  for (const auto& raw : sets) {
    const VertexSet s(raw);
    const auto r = falsify_bottomless(inst, s);
    expect_sound(inst, s, r, 3);
    steps.insert(r.step);
  }
  EXPECT_EQ(steps.size(), 5U);
}

TEST(DualStrip, SizesAndPrivateCells) {
  EXPECT_EQ(build_dual_strip_lb(2).strips.size(), 4U);
  EXPECT_EQ(build_dual_strip_lb(4).strips.size(), 8U);
  const auto inst = build_dual_strip_lb(2);
  for (Vertex a = 0; a < 4; ++a)
    for (Vertex b = a + 1; b < 4; ++b) EXPECT_TRUE(inst.graph.contains({a, b}));
  EXPECT_THROW(build_dual_strip_lb(1), InvalidInput);
}

TEST(DualStrip, WitnessExamples) {
  auto inst = build_dual_strip_lb(2);
  auto w = witness_dual_strip(inst, ColorAssignment(2, {0, 0, 0, 0}));
  EXPECT_EQ(w.missing_color, 1U);
  EXPECT_EQ(w.edge.size(), 2U);

  inst = build_dual_strip_lb(4);
  // Copies of V1, V2, H1, H2 carry {0,1}, {2,3}, {0,2}, {1,3}.
  const ColorAssignment chi(4, {0, 1, 2, 3, 0, 2, 1, 3});
  w = witness_dual_strip(inst, chi);
  EXPECT_EQ(w.edge.size(), 4U);
  const auto verdict = is_polychromatic(Hypergraph(8, {w.edge}), chi);
  ASSERT_FALSE(verdict.ok());
  EXPECT_EQ(verdict.witness->value, w.missing_color);
}

TEST(DualStrip, RandomColorings) {
  pt::Rng rng(3);
  for (std::size_t k = 2; k <= 8; ++k) {
    const auto inst = build_dual_strip_lb(k);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::uint32_t> colors(inst.strips.size());
      for (auto& c : colors) c = static_cast<std::uint32_t>(rng() % k);
      const ColorAssignment chi(k, colors);
      const auto w = witness_dual_strip(inst, chi);
      EXPECT_EQ(w.edge.size(), 2 * lower_bound_copies(k));
      EXPECT_TRUE(inst.graph.contains(w.edge));
      for (auto v : w.edge) EXPECT_NE(chi.colors[v], w.missing_color);
    }
  }
}

TEST(Strips, GadgetParams) {
  auto gp = gadget_params(22);
  EXPECT_EQ(gp.a, 7U);
  EXPECT_EQ(gp.b, 4U);
  EXPECT_EQ(gp.x, 14U);
  EXPECT_TRUE(gp.theorem_regime());
  gp = gadget_params(42);
  EXPECT_EQ(gp.a, 13U);
  EXPECT_EQ(gp.b, 8U);
  EXPECT_TRUE(gp.theorem_regime());
  for (std::size_t m : {22, 24, 30, 42, 50}) {
    gp = gadget_params(m);
    EXPECT_EQ(3 * gp.a + gp.b / 2 - 1, m);
    EXPECT_EQ(gp.bgroup, m - 2 * gp.a);
    EXPECT_EQ(gp.e, gp.a - gp.b / 2);
    EXPECT_EQ(gp.e + gp.f + gp.h, 2 * gp.a);
    EXPECT_LE(gp.g + gp.j + gp.k, 5 * gp.b);
  }
  EXPECT_THROW(gadget_params(8), InvalidInput);
}

TEST(Strips, InstanceShape) {
  const auto inst = build_strip_no2shs(22);
  EXPECT_EQ(inst.points.size(), strip_vertex_count(22));
  EXPECT_EQ(inst.points.size(), 6028U);
  EXPECT_TRUE(distinct_coordinates(inst.points));
  EXPECT_TRUE(capture_contains(inst.points, inst.family, VertexSet(inst.group("X"))));
  EXPECT_EQ(inst.group("X_3_2").size(), 14U);
}

TEST(Strips, FalsifierExamples) {
  const auto inst = build_strip_no2shs(22);
  auto r = falsify_strips(inst, VertexSet{});
  EXPECT_EQ(r.witness.edge, inst.group("X"));
  r = falsify_strips(inst, VertexSet(all_vertices(inst.points.size())));
  EXPECT_EQ(r.witness.kind, ViolationKind::Overflow);
  const VertexSet one{inst.group("X")[0]};
  r = falsify_strips(inst, one);
  EXPECT_EQ(r.witness.kind, ViolationKind::ZeroHit);
  expect_sound(inst, one, r, 2);
}

TEST(Strips, FalsifierOnRandomSets) {
  for (std::size_t m : {22, 24}) {
    const auto inst = build_strip_no2shs(m);
    pt::Rng rng(m);
    for (int trial = 0; trial < 200; ++trial) {
      const auto s = random_subset(rng, inst.points.size(), 0.01 + 0.49 * (trial % 50) / 49.0);
      expect_sound(inst, s, falsify_strips(inst, s), 2);
    }
  }
}

TEST(Strips, FalsifierOnSparseStructuredSets) {
  // One hit per X_{i,j} row or per gadget group pushes the falsifier deep
  // into the chain; the chain must still end in a valid witness.
  const auto inst = build_strip_no2shs(22);
  pt::Rng rng(5);
  std::set<std::string> steps;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Vertex> s{inst.group("X")[trial % 22]};
    for (const auto& [name, members] : inst.groups) {
      if (name == "X") continue;
      if (rng() % 4 == 0) s.push_back(members[rng() % members.size()]);
    }
    const VertexSet set(s);
    const auto r = falsify_strips(inst, set);
    expect_sound(inst, set, r, 2);
    steps.insert(r.step);
  }
  EXPECT_GE(steps.size(), 3U);
}

TEST(Cross, SizesAndSeparability) {
  EXPECT_EQ(build_cross_lb(2).points.size(), 8U);
  EXPECT_EQ(build_cross_lb(4).points.size(), 16U);
  for (std::size_t k : {2, 4, 7}) EXPECT_TRUE(distinct_coordinates(build_cross_lb(k).points));
  // All 56 cluster triples against a brute force over strip boundaries.
  for (std::size_t k : {2, 4}) {
    const auto inst = build_cross_lb(k);
    const auto captures = pt::oracle_captures(inst.points, RangeFamily::cross_union());
    std::size_t triples = 0;
    for (std::size_t a = 0; a < 8; ++a)
      for (std::size_t b = a + 1; b < 8; ++b)
        for (std::size_t c = b + 1; c < 8; ++c) {
          pt::Mask mask = 0;
          for (auto g : {a, b, c})
            for (auto v : inst.group("cluster_" + std::to_string(g))) mask |= pt::Mask{1} << v;
          EXPECT_TRUE(captures.count(mask)) << a << b << c;
          ++triples;
        }
    EXPECT_EQ(triples, 56U);
  }
}

TEST(Cross, WitnessOnRandomColorings) {
  pt::Rng rng(8);
  for (std::size_t k = 2; k <= 8; ++k) {
    const auto inst = build_cross_lb(k);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::uint32_t> colors(inst.points.size());
      for (auto& c : colors) c = static_cast<std::uint32_t>(rng() % k);
      const ColorAssignment chi(k, colors);
      const auto w = witness_cross(inst, chi);
      EXPECT_EQ(w.edge.size(), 3 * lower_bound_copies(k));
      EXPECT_TRUE(capture_contains(inst.points, inst.family, VertexSet(w.edge)));
      for (auto v : w.edge) EXPECT_NE(chi.colors[v], w.missing_color);
    }
  }
  const auto inst = build_cross_lb(2);
  const auto w = witness_cross(inst, ColorAssignment(2, std::vector<std::uint32_t>(8, 0)));
  EXPECT_EQ(w.missing_color, 1U);
}

TEST(SStrips, CopiesAndEdges) {
  const PointSet base(2, {{0, 3}, {1, 1}, {2, 2}, {3, 0}});
  EXPECT_EQ(build_sstrips_lb(1, 2, base).points.size(), 4U);
  const auto inst = build_sstrips_lb(2, 2, base);
  EXPECT_EQ(inst.param("copies"), 3);
  EXPECT_EQ(inst.points.size(), 12U);
  const auto base_edges = capture_edges(base, RangeFamily::strips());
  for (std::size_t t = 0; t < 3; ++t) {
    const auto& copy = inst.group("copy_" + std::to_string(t));
    for (const auto& e : base_edges.edges()) {
      std::vector<Vertex> img;
      for (auto v : e) img.push_back(copy[v]);
      EXPECT_TRUE(capture_contains(inst.points, RangeFamily::strips(), VertexSet(img)));
    }
  }
  EXPECT_EQ(copy_of(inst, 6), (std::pair<std::size_t, std::size_t>{1, 2}));
}
