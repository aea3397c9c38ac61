#include <gtest/gtest.h>

#include "support.hpp"

using namespace polyhs;
namespace pt = polyhs::testing;

namespace {

APSpec spec(GeneratorKind kind, std::vector<std::uint64_t> params, std::set<std::uint64_t> m, APMode mode) {
  APSpec s;
  s.kind = kind;
  s.params = std::move(params);
  s.offsets = std::move(m);
  s.mode = mode;
  return s;
}

std::vector<Vertex> as_vertices(const std::vector<std::uint64_t>& labels, std::set<std::uint64_t> values) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (values.count(labels[i])) out.push_back(static_cast<Vertex>(i));
  return out;
}

/// d is a product of powers of the bases (1 included).
bool smooth_over(std::uint64_t d, const std::vector<std::uint64_t>& bases) {
  for (auto b : bases)
    while (d % b == 0) d /= b;
  return d == 1;
}

bool in_generator(const APSpec& s, std::uint64_t d) {
  switch (s.kind) {
    case GeneratorKind::Explicit: return std::find(s.params.begin(), s.params.end(), d) != s.params.end();
    case GeneratorKind::DivisorChain:
      return d == 1 || std::find(s.params.begin(), s.params.end(), d) != s.params.end();
    default: return smooth_over(d, s.params);
  }
}

/// Naive model: every (a0, d, length) with a0 - m d in M for some m >= 0.
Hypergraph naive(const std::set<std::uint64_t>& S, const APSpec& s) {
  const std::vector<std::uint64_t> labels(S.begin(), S.end());
  const auto max_s = labels.back();
  std::vector<Edge> edges;
  for (std::uint64_t d = 1; d <= std::max<std::uint64_t>(max_s, 1); ++d) {
    if (!in_generator(s, d)) continue;
    for (std::uint64_t a0 = 0; a0 <= max_s; ++a0) {
      bool ok = s.all_offsets;
      for (std::uint64_t m = 0; !ok && m * d <= a0; ++m) ok = s.offsets.count(a0 - m * d) > 0;
      if (!ok) continue;
      for (std::uint64_t len = 1; a0 + (len - 1) * d <= max_s + d; ++len) {
        const bool reaches_end = a0 + (len - 1) * d > max_s;
        if (s.mode == APMode::Infinite && !reaches_end) continue;
        Edge e;
        for (std::size_t i = 0; i < labels.size(); ++i) {
          const auto v = labels[i];
          if (v >= a0 && (v - a0) % d == 0 && (v - a0) / d < len) e.push_back(static_cast<Vertex>(i));
        }
        edges.push_back(e);
      }
    }
  }
  return Hypergraph(labels.size(), edges);
}

std::set<std::uint64_t> range_set(std::uint64_t lo, std::uint64_t hi) {
  std::set<std::uint64_t> s;
  for (auto i = lo; i <= hi; ++i) s.insert(i);
  return s;
}

}  // namespace

TEST(Differences, Examples) {
  EXPECT_EQ(enumerate_differences(spec(GeneratorKind::Powers, {2}, {0}, APMode::Infinite), 10),
            (std::vector<std::uint64_t>{1, 2, 4, 8}));
  EXPECT_EQ(enumerate_differences(spec(GeneratorKind::BiPowers, {2, 3}, {0}, APMode::Infinite), 12),
            (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 8, 9, 12}));
  EXPECT_EQ(enumerate_differences(spec(GeneratorKind::Explicit, {5, 3, 3}, {0}, APMode::Infinite), 4),
            (std::vector<std::uint64_t>{3}));
  EXPECT_EQ(enumerate_differences(spec(GeneratorKind::DivisorChain, {2, 6, 30}, {0}, APMode::Infinite), 40),
            (std::vector<std::uint64_t>{1, 2, 6, 30}));
}

TEST(Differences, ValidationRejectsBadGenerators) {
  EXPECT_THROW(validate(spec(GeneratorKind::Powers, {1}, {0}, APMode::Infinite)), InvalidInput);
  EXPECT_THROW(validate(spec(GeneratorKind::BiPowers, {2, 4}, {0}, APMode::Infinite)), InvalidInput);
  EXPECT_THROW(validate(spec(GeneratorKind::TriPowers, {2, 3}, {0}, APMode::Infinite)), InvalidInput);
  EXPECT_THROW(validate(spec(GeneratorKind::DivisorChain, {2, 5}, {0}, APMode::Infinite)), InvalidInput);
  EXPECT_THROW(validate(spec(GeneratorKind::Explicit, {0}, {0}, APMode::Infinite)), InvalidInput);
  EXPECT_THROW(parse_generator("squares"), InvalidInput);
}

TEST(Admissible, Examples) {
  EXPECT_TRUE(a0_admissible(6, 2, {0}));
  EXPECT_FALSE(a0_admissible(3, 2, {0}));
  EXPECT_TRUE(a0_admissible(7, 6, {1}));
  EXPECT_FALSE(a0_admissible(0, 6, {1}));
  EXPECT_TRUE(a0_admissible(5, 4, {}, true));
}

TEST(Build, Examples) {
  const auto S = range_set(1, 6);
  const auto inf = build_ap_hypergraph(S, spec(GeneratorKind::Powers, {2}, {0}, APMode::Infinite));
  EXPECT_TRUE(inf.graph.contains(as_vertices(inf.labels, {2, 4, 6})));
  EXPECT_FALSE(inf.graph.contains(as_vertices(inf.labels, {2, 4})));
  const auto fin = build_ap_hypergraph(S, spec(GeneratorKind::Powers, {2}, {0}, APMode::Finite));
  EXPECT_TRUE(fin.graph.contains(as_vertices(fin.labels, {2, 4})));
  const auto single = build_ap_hypergraph({5}, spec(GeneratorKind::Powers, {3}, {0}, APMode::Infinite));
  EXPECT_EQ(single.graph.edges(), (std::vector<Edge>{{0}}));
  EXPECT_THROW(build_ap_hypergraph({}, spec(GeneratorKind::Powers, {2}, {0}, APMode::Infinite)), InvalidInput);
}

TEST(Build, MatchesNaiveEnumeration) {
  pt::Rng rng(41);
  const std::vector<APSpec> specs = {
      spec(GeneratorKind::Powers, {2}, {0}, APMode::Infinite),
      spec(GeneratorKind::Powers, {3}, {0, 1}, APMode::Finite),
      spec(GeneratorKind::BiPowers, {2, 3}, {0}, APMode::Infinite),
      spec(GeneratorKind::BiPowers, {2, 5}, {1, 4}, APMode::Finite),
      spec(GeneratorKind::TriPowers, {2, 3, 5}, {0}, APMode::Infinite),
      spec(GeneratorKind::DivisorChain, {2, 6, 12}, {0, 3}, APMode::Infinite),
      spec(GeneratorKind::Explicit, {4, 7}, {2}, APMode::Finite),
  };
  for (auto s : specs) {
    for (int trial = 0; trial < 20; ++trial) {
      std::set<std::uint64_t> S;
      while (S.size() < 1 + rng() % 12) S.insert(rng() % 31);
      if (trial % 5 == 0) s.all_offsets = true;
      const auto ap = build_ap_hypergraph(S, s);
      EXPECT_EQ(ap.graph, naive(S, s)) << generator_name(s.kind);
      s.all_offsets = false;
    }
  }
}

TEST(Build, LabelsReexpandAndFiniteContainsInfinite) {
  pt::Rng rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    std::set<std::uint64_t> S;
    while (S.size() < 2 + rng() % 15) S.insert(rng() % 40);
    auto s = spec(GeneratorKind::BiPowers, {2, 3}, {0, rng() % 4}, APMode::Infinite);
    const auto inf = build_ap_hypergraph(S, s);
    ASSERT_EQ(inf.edge_labels.size(), inf.graph.edge_count());
    for (std::size_t i = 0; i < inf.edge_labels.size(); ++i) {
      EXPECT_EQ(expand_label(inf.edge_labels[i], inf.labels), inf.graph.edges()[i]);
      EXPECT_TRUE(a0_admissible(inf.edge_labels[i].a0, inf.edge_labels[i].d, s.offsets));
    }
    s.mode = APMode::Finite;
    const auto fin = build_ap_hypergraph(S, s);
    for (std::size_t i = 0; i < fin.edge_labels.size(); ++i)
      EXPECT_EQ(expand_label(fin.edge_labels[i], fin.labels), fin.graph.edges()[i]);
    for (const auto& e : inf.graph.edges()) EXPECT_TRUE(fin.graph.contains(e));
  }
}
