#pragma once

// Exact backtracking search for polychromatic colorings and c-shallow hitting
// sets, exhaustive oracles to cross-check them, and the shrink-and-hit
// coloring pipeline.
//
// Parallel runs split the top of the search tree into a fixed frontier that
// does not depend on the thread count. Subtrees are searched independently and
// the answer is the first satisfiable subtree in frontier order, so the
// witness and node counts are the same for any number of threads.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "polyhs/core.hpp"
#include "polyhs/geometry.hpp"

namespace polyhs {

enum class SolveStatus { Sat, Unsat, BudgetExhausted };

inline std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Sat: return "SAT";
    case SolveStatus::Unsat: return "UNSAT";
    case SolveStatus::BudgetExhausted: return "BUDGET_EXHAUSTED";
  }
  return "unknown";
}

struct SolveBudget {
  std::uint64_t node_limit = 50'000'000;  // per frontier subtree; 0 = none
  double wall_seconds = 0;                // 0 = none
  bool deterministic = true;
  unsigned threads = 1;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unsat;
  std::optional<ColorAssignment> coloring;
  std::optional<VertexSet> hitting_set;
  std::uint64_t nodes = 0;
  std::size_t depth = 0;
  double millis = 0;
};

namespace detail {

using Clock = std::chrono::steady_clock;

struct Decision {
  Vertex v;
  std::uint32_t value;
};

/// Shared search limits and cancellation for one subtree.
struct SearchControl {
  std::uint64_t node_limit = 0;
  Clock::time_point deadline = Clock::time_point::max();
  const std::atomic<std::size_t>* best_index = nullptr;
  std::size_t my_index = 0;

  std::uint64_t nodes = 0;
  std::size_t depth = 0;
  bool exhausted = false;
  bool cancelled = false;

  bool tick() {
    ++nodes;
    if (node_limit && nodes > node_limit) exhausted = true;
    if ((nodes & 1023) == 0) {
      if (Clock::now() > deadline) exhausted = true;
      if (best_index && best_index->load(std::memory_order_relaxed) < my_index) cancelled = true;
    }
    return !(exhausted || cancelled);
  }
};

/// Incidence lists and degree order shared by both engines.
struct Incidence {
  std::vector<std::vector<std::uint32_t>> of_vertex;
  std::vector<Vertex> by_degree;

  explicit Incidence(const Hypergraph& h) : of_vertex(h.vertex_count()) {
    for (std::uint32_t e = 0; e < h.edge_count(); ++e)
      for (auto v : h.edges()[e]) of_vertex[v].push_back(e);
    by_degree.resize(h.vertex_count());
    std::iota(by_degree.begin(), by_degree.end(), Vertex{0});
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return of_vertex[a].size() > of_vertex[b].size(); });
  }
};

/// Polychromatic coloring state: per edge, the count of each color and of
/// uncolored vertices. An edge fails once it has more missing colors than
/// uncolored vertices; with one of each, the last vertex is forced.
class ColorEngine {
 public:
  ColorEngine(const Hypergraph& h, std::size_t k, const Incidence& inc)
      : h_(&h), inc_(&inc), k_(k), color_(h.vertex_count(), kNone), usage_(k, 0),
        count_(h.edge_count() * k, 0), uncolored_(h.edge_count()), missing_(h.edge_count(), static_cast<std::uint32_t>(k)) {
    for (std::size_t e = 0; e < h.edge_count(); ++e) uncolored_[e] = static_cast<std::uint32_t>(h.edges()[e].size());
  }

  bool init() {
    for (std::size_t e = 0; e < h_->edge_count(); ++e)
      if (missing_[e] > uncolored_[e]) return false;
    return true;
  }

  std::size_t mark() const { return trail_.size(); }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const auto v = trail_.back();
      trail_.pop_back();
      const auto c = color_[v];
      for (auto e : inc_->of_vertex[v]) {
        auto& cnt = count_[e * k_ + c];
        if (--cnt == 0) ++missing_[e];
        ++uncolored_[e];
      }
      --usage_[c];
      color_[v] = kNone;
    }
  }

  /// Next branching vertex in degree order, or nullopt when all are colored.
  std::optional<Vertex> pick() const {
    for (auto v : inc_->by_degree) {
      if (inc_->of_vertex[v].empty()) break;  // isolated vertices take color 0
      if (color_[v] == kNone) return v;
    }
    return std::nullopt;
  }

  /// Colors worth trying: every used color, plus the smallest unused one
  /// (unused colors are interchangeable).
  std::vector<std::uint32_t> options(Vertex) const {
    std::vector<std::uint32_t> out;
    bool fresh_added = false;
    for (std::uint32_t c = 0; c < k_; ++c) {
      if (usage_[c] > 0) {
        out.push_back(c);
      } else if (!fresh_added) {
        out.push_back(c);
        fresh_added = true;
      }
    }
    return out;
  }

  bool apply(Decision d) {
    std::vector<Decision> queue{d};
    while (!queue.empty()) {
      const auto [v, c] = queue.back();
      queue.pop_back();
      if (color_[v] != kNone) {
        if (color_[v] != c) return false;
        continue;
      }
      color_[v] = c;
      ++usage_[c];
      trail_.push_back(v);
      // Update every incident edge before reporting a conflict so undo stays exact.
      bool ok = true;
      for (auto e : inc_->of_vertex[v]) {
        auto& cnt = count_[e * k_ + c];
        if (cnt++ == 0) --missing_[e];
        --uncolored_[e];
        if (missing_[e] > uncolored_[e]) ok = false;
        if (ok && missing_[e] == 1 && uncolored_[e] == 1) queue.push_back({e, kEdgeMark});
      }
      if (!ok) return false;
      resolve_forced(queue);
    }
    return true;
  }

  ColorAssignment extract() const {
    std::vector<std::uint32_t> colors(color_.size());
    for (std::size_t v = 0; v < colors.size(); ++v) colors[v] = color_[v] == kNone ? 0 : color_[v];
    return ColorAssignment(k_, std::move(colors));
  }

 private:
  static constexpr std::uint32_t kNone = UINT32_MAX;

  static constexpr std::uint32_t kEdgeMark = UINT32_MAX - 1;

  /// Turns queued edge markers into the decision they force.
  void resolve_forced(std::vector<Decision>& queue) const {
    for (auto& d : queue)
      if (d.value == kEdgeMark) d = forced(d.v);
  }

  Decision forced(std::uint32_t e) const {
    Vertex free_v = 0;
    for (auto v : h_->edges()[e])
      if (color_[v] == kNone) free_v = v;
    std::uint32_t c = 0;
    while (count_[e * k_ + c] != 0) ++c;
    return {free_v, c};
  }

  const Hypergraph* h_;
  const Incidence* inc_;
  std::size_t k_;
  std::vector<std::uint32_t> color_;
  std::vector<std::uint32_t> usage_;
  std::vector<std::uint32_t> count_;
  std::vector<std::uint32_t> uncolored_;
  std::vector<std::uint32_t> missing_;
  std::vector<Vertex> trail_;
};

/// c-shallow hitting set state: per edge, chosen and undecided counts. An edge
/// with c chosen forces its other vertices out; an edge with nothing chosen
/// and one undecided vertex forces that vertex in.
class HitEngine {
 public:
  HitEngine(const Hypergraph& h, std::size_t c, const Incidence& inc, const std::vector<std::uint32_t>* priority = nullptr,
            bool exclude_first = false)
      : h_(&h), inc_(&inc), c_(static_cast<std::uint32_t>(c)), value_(h.vertex_count(), kNone),
        chosen_(h.edge_count(), 0), undecided_(h.edge_count()), priority_(priority), exclude_first_(exclude_first) {
    for (std::size_t e = 0; e < h.edge_count(); ++e) undecided_[e] = static_cast<std::uint32_t>(h.edges()[e].size());
  }

  bool init() {
    std::vector<Decision> queue;
    for (std::uint32_t e = 0; e < h_->edge_count(); ++e)
      if (undecided_[e] == 1) queue.push_back({h_->edges()[e][0], 1});
    for (const auto& d : queue)
      if (!apply(d)) return false;
    return true;
  }

  std::size_t mark() const { return trail_.size(); }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const auto v = trail_.back();
      trail_.pop_back();
      for (auto e : inc_->of_vertex[v]) {
        ++undecided_[e];
        if (value_[v] == 1) --chosen_[e];
      }
      value_[v] = kNone;
    }
  }

  /// Highest-priority undecided vertex of the unhit edge with the fewest
  /// undecided vertices; nullopt once every edge is hit.
  std::optional<Vertex> pick() const {
    std::uint32_t best_edge = UINT32_MAX, best_free = UINT32_MAX;
    for (std::uint32_t e = 0; e < h_->edge_count(); ++e)
      if (chosen_[e] == 0 && undecided_[e] < best_free) {
        best_free = undecided_[e];
        best_edge = e;
        if (best_free <= 2) break;
      }
    if (best_edge == UINT32_MAX) return std::nullopt;
    std::optional<Vertex> best;
    for (auto v : h_->edges()[best_edge]) {
      if (value_[v] != kNone) continue;
      if (!best || rank(v) > rank(*best)) best = v;
    }
    return best;
  }

  std::vector<std::uint32_t> options(Vertex) const {
    return exclude_first_ ? std::vector<std::uint32_t>{0, 1} : std::vector<std::uint32_t>{1, 0};
  }

  bool apply(Decision d) {
    std::vector<Decision> queue{d};
    while (!queue.empty()) {
      const auto [v, val] = queue.back();
      queue.pop_back();
      if (value_[v] != kNone) {
        if (value_[v] != val) return false;
        continue;
      }
      value_[v] = val;
      trail_.push_back(v);
      bool ok = true;
      for (auto e : inc_->of_vertex[v]) {
        --undecided_[e];
        if (val == 1) ++chosen_[e];
        if (chosen_[e] > c_ || (chosen_[e] == 0 && undecided_[e] == 0)) ok = false;
        if (!ok) continue;
        if (val == 1 && chosen_[e] == c_ && undecided_[e] > 0) {
          for (auto w : h_->edges()[e])
            if (value_[w] == kNone) queue.push_back({w, 0});
        } else if (chosen_[e] == 0 && undecided_[e] == 1) {
          for (auto w : h_->edges()[e])
            if (value_[w] == kNone) queue.push_back({w, 1});
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  VertexSet extract() const {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < value_.size(); ++v)
      if (value_[v] == 1) members.push_back(v);
    return VertexSet(std::move(members));
  }

 private:
  static constexpr std::uint32_t kNone = UINT32_MAX;

  std::size_t rank(Vertex v) const {
    return priority_ ? (*priority_)[v] : inc_->of_vertex[v].size() * h_->vertex_count() + (h_->vertex_count() - v);
  }

  const Hypergraph* h_;
  const Incidence* inc_;
  std::uint32_t c_;
  std::vector<std::uint32_t> value_;
  std::vector<std::uint32_t> chosen_;
  std::vector<std::uint32_t> undecided_;
  std::vector<Vertex> trail_;
  const std::vector<std::uint32_t>* priority_;
  bool exclude_first_;
};

template <class Engine>
bool dfs(Engine& eng, SearchControl& ctl, std::size_t depth) {
  if (!ctl.tick()) return false;
  ctl.depth = std::max(ctl.depth, depth);
  const auto v = eng.pick();
  if (!v) return true;
  for (auto value : eng.options(*v)) {
    const auto m = eng.mark();
    if (eng.apply({*v, value}) && dfs(eng, ctl, depth + 1)) return true;
    eng.undo_to(m);
    if (ctl.exhausted || ctl.cancelled) return false;
  }
  return false;
}

struct SubtreeOutcome {
  SolveStatus status = SolveStatus::Unsat;
  std::uint64_t nodes = 0;
  std::size_t depth = 0;
  bool ran = false;
};

constexpr std::size_t kFrontierTarget = 32;
constexpr std::size_t kFrontierMaxDepth = 10;

/// Runs the frontier-split search. `make` builds a fresh engine; `on_sat`
/// stores the witness of the winning engine.
template <class Engine, class Make, class OnSat>
SolveResult run_search(const Make& make, const SolveBudget& budget, const OnSat& on_sat) {
  const auto start = Clock::now();
  const auto deadline =
      budget.wall_seconds > 0
          ? start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget.wall_seconds))
          : Clock::time_point::max();
  SolveResult result;
  const auto finish = [&](SolveResult r) {
    r.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return r;
  };

  // Frontier: decision sequences in left-to-right search order.
  std::uint64_t frontier_nodes = 0;
  std::vector<std::vector<Decision>> frontier;
  {
    Engine root = make();
    if (!root.init()) {
      result.status = SolveStatus::Unsat;
      result.nodes = 1;
      return finish(result);
    }
    frontier.emplace_back();
    for (std::size_t level = 0; level < kFrontierMaxDepth && frontier.size() < kFrontierTarget; ++level) {
      std::vector<std::vector<Decision>> next;
      bool expanded = false;
      for (const auto& seq : frontier) {
        Engine eng = make();
        eng.init();
        for (const auto& d : seq) eng.apply(d);
        ++frontier_nodes;
        const auto v = eng.pick();
        if (!v) {
          // Already complete: keep it as a leaf; nothing after it matters.
          next.push_back(seq);
          continue;
        }
        expanded = true;
        for (auto value : eng.options(*v)) {
          const auto m = eng.mark();
          if (eng.apply({*v, value})) {
            auto child = seq;
            child.push_back({*v, value});
            next.push_back(std::move(child));
          } else {
            ++frontier_nodes;
          }
          eng.undo_to(m);
        }
      }
      frontier = std::move(next);
      if (!expanded || frontier.empty()) break;
    }
  }
  if (frontier.empty()) {
    result.status = SolveStatus::Unsat;
    result.nodes = frontier_nodes;
    return finish(result);
  }

  const auto count = frontier.size();
  std::vector<SubtreeOutcome> outcomes(count);
  std::vector<std::optional<Engine>> winners(count);
  std::atomic<std::size_t> next_task{0};
  std::atomic<std::size_t> best_index{count};

  const auto worker = [&] {
    for (;;) {
      const auto i = next_task.fetch_add(1);
      if (i >= count) return;
      if (best_index.load() < i) continue;
      Engine eng = make();
      eng.init();
      for (const auto& d : frontier[i]) eng.apply(d);
      SearchControl ctl;
      ctl.node_limit = budget.node_limit;
      ctl.deadline = deadline;
      ctl.best_index = &best_index;
      ctl.my_index = i;
      const bool sat = dfs(eng, ctl, frontier[i].size());
      auto& out = outcomes[i];
      out.nodes = ctl.nodes;
      out.depth = ctl.depth;
      out.ran = !ctl.cancelled;
      if (sat) {
        out.status = SolveStatus::Sat;
        winners[i].emplace(std::move(eng));
        auto cur = best_index.load();
        while (i < cur && !best_index.compare_exchange_weak(cur, i)) {
        }
      } else {
        out.status = ctl.exhausted ? SolveStatus::BudgetExhausted : SolveStatus::Unsat;
      }
    }
  };
  const auto threads = std::max(1u, budget.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // The lowest SAT subtree wins. Subtrees above it may have been cancelled,
  // so statistics only count the prefix up to it, which every schedule runs.
  result.nodes = frontier_nodes;
  result.status = SolveStatus::Unsat;
  std::size_t last = count;
  for (std::size_t i = 0; i < count; ++i)
    if (outcomes[i].status == SolveStatus::Sat) {
      last = i + 1;
      break;
    }
  for (std::size_t i = 0; i < last; ++i) {
    result.nodes += outcomes[i].nodes;
    result.depth = std::max(result.depth, outcomes[i].depth);
    if (outcomes[i].status == SolveStatus::BudgetExhausted) result.status = SolveStatus::BudgetExhausted;
  }
  if (last <= count && last > 0 && outcomes[last - 1].status == SolveStatus::Sat) {
    result.status = SolveStatus::Sat;
    on_sat(*winners[last - 1], result);
  }
  return finish(result);
}

}  // namespace detail

/// Exact search for a polychromatic k-coloring. SAT witnesses are re-checked.
inline SolveResult solve_polychromatic(const Hypergraph& h, std::size_t k, const SolveBudget& budget = {}) {
  if (k == 0) throw InvalidInput("k must be >= 1");
  const detail::Incidence inc(h);
  auto r = detail::run_search<detail::ColorEngine>(
      [&] { return detail::ColorEngine(h, k, inc); }, budget,
      [&](const detail::ColorEngine& eng, SolveResult& res) { res.coloring = eng.extract(); });
  if (r.status == SolveStatus::Sat && !is_polychromatic(h, *r.coloring))
    throw std::logic_error("polychromatic solver produced an invalid coloring");
  return r;
}

/// Exact search for U with 1 <= |e ∩ U| <= c on every edge. SAT witnesses are re-checked.
inline SolveResult solve_shallow_hitting(const Hypergraph& h, std::size_t c, const SolveBudget& budget = {}) {
  if (c == 0) throw InvalidInput("c must be >= 1");
  const detail::Incidence inc(h);
  auto r = detail::run_search<detail::HitEngine>(
      [&] { return detail::HitEngine(h, c, inc); }, budget,
      [&](const detail::HitEngine& eng, SolveResult& res) { res.hitting_set = eng.extract(); });
  if (r.status == SolveStatus::Sat && !is_shallow_hitting(h, *r.hitting_set, c))
    throw std::logic_error("hitting-set solver produced an invalid set");
  return r;
}

/// Randomized bounded search used to produce plausible candidates: returns the
/// chosen set at the deepest point reached (or a full solution).
inline VertexSet probe_shallow_hitting(const Hypergraph& h, std::size_t c, std::uint64_t seed,
                                       std::uint64_t node_limit = 20'000) {
  const detail::Incidence inc(h);
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> priority(h.vertex_count());
  std::iota(priority.begin(), priority.end(), 0u);
  std::shuffle(priority.begin(), priority.end(), rng);
  detail::HitEngine eng(h, c, inc, &priority, (rng() & 1) != 0);
  if (!eng.init()) return VertexSet{};
  VertexSet best;
  std::size_t best_depth = 0;
  std::uint64_t nodes = 0;
  std::function<bool(std::size_t)> go = [&](std::size_t depth) {
    if (++nodes > node_limit) return false;
    if (depth >= best_depth) {
      best_depth = depth;
      best = eng.extract();
    }
    const auto v = eng.pick();
    if (!v) return true;
    for (auto value : eng.options(*v)) {
      const auto m = eng.mark();
      if (eng.apply({*v, value}) && go(depth + 1)) return true;
      eng.undo_to(m);
      if (nodes > node_limit) return false;
    }
    return false;
  };
  if (go(0)) return eng.extract();
  return best;
}

namespace detail {

inline void brute_guard(double space) {
  if (space > 1e7) throw InvalidInput("brute force search space exceeds 10^7");
}

}  // namespace detail

/// Enumerates all k^n colorings in lexicographic order.
inline SolveResult brute_force_polychromatic(const Hypergraph& h, std::size_t k) {
  if (k == 0) throw InvalidInput("k must be >= 1");
  const auto n = h.vertex_count();
  detail::brute_guard(std::pow(static_cast<double>(k), static_cast<double>(n)));
  std::vector<std::uint32_t> colors(n, 0);
  SolveResult r;
  for (;;) {
    ++r.nodes;
    ColorAssignment chi(k, colors);
    if (is_polychromatic(h, chi)) {
      r.status = SolveStatus::Sat;
      r.coloring = std::move(chi);
      return r;
    }
    std::size_t i = n;
    while (i > 0 && colors[i - 1] + 1 == k) colors[--i] = 0;
    if (i == 0) break;
    ++colors[i - 1];
  }
  r.status = SolveStatus::Unsat;
  return r;
}

/// Enumerates all 2^n vertex subsets.
inline SolveResult brute_force_shallow(const Hypergraph& h, std::size_t c) {
  if (c == 0) throw InvalidInput("c must be >= 1");
  const auto n = h.vertex_count();
  detail::brute_guard(std::pow(2.0, static_cast<double>(n)));
  SolveResult r;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    ++r.nodes;
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v)
      if ((bits >> v) & 1) members.push_back(v);
    VertexSet u(std::move(members));
    if (is_shallow_hitting(h, u, c)) {
      r.status = SolveStatus::Sat;
      r.hitting_set = std::move(u);
      return r;
    }
  }
  r.status = SolveStatus::Unsat;
  return r;
}

struct MinCResult {
  SolveStatus status = SolveStatus::Sat;  // BudgetExhausted if the scan stopped early
  std::size_t c = 0;                      // smallest c found, or the c whose search ran out
  std::optional<VertexSet> hitting_set;
};

inline MinCResult min_shallow_c(const Hypergraph& h, const SolveBudget& budget = {}) {
  if (h.empty()) throw InvalidInput("min_shallow_c needs at least one edge");
  MinCResult out;
  for (std::size_t c = 1; c <= h.max_edge_size(); ++c) {
    auto r = solve_shallow_hitting(h, c, budget);
    out.c = c;
    if (r.status == SolveStatus::Sat) {
      out.status = SolveStatus::Sat;
      out.hitting_set = std::move(r.hitting_set);
      return out;
    }
    if (r.status == SolveStatus::BudgetExhausted) {
      out.status = SolveStatus::BudgetExhausted;
      return out;
    }
  }
  throw std::logic_error("no c-shallow hitting set up to the maximum edge size");
}

/// Instance-level analogue of m_H(k): the smallest m with H_{>=m} k-colorable,
/// with a coloring for m and the UNSAT status for m - 1.
struct MRecord {
  std::string instance_id;
  std::size_t k = 1;
  std::size_t m = 1;
  SolveStatus status = SolveStatus::Sat;  // BudgetExhausted if some m could not be decided
  std::optional<ColorAssignment> coloring;
  std::optional<SolveStatus> below;       // status at m - 1 (UNSAT), absent when m = 1
  std::uint64_t nodes_below = 0;
};

inline MRecord min_m_polychromatic(const Hypergraph& h, std::size_t k, const SolveBudget& budget = {},
                                   std::string instance_id = {}) {
  MRecord rec;
  rec.instance_id = std::move(instance_id);
  rec.k = k;
  std::optional<SolveResult> previous;
  for (std::size_t m = 1;; ++m) {
    auto r = solve_polychromatic(restrict_at_least(h, m), k, budget);
    if (r.status == SolveStatus::BudgetExhausted) {
      rec.m = m;
      rec.status = SolveStatus::BudgetExhausted;
      return rec;
    }
    if (r.status == SolveStatus::Sat) {
      rec.m = m;
      rec.coloring = std::move(r.coloring);
      if (previous) {
        rec.below = previous->status;
        rec.nodes_below = previous->nodes;
      }
      return rec;
    }
    previous = std::move(r);
  }
}

// ---------------------------------------------------------------------------

using HittingOracle = std::function<std::optional<VertexSet>(const Hypergraph&, std::size_t)>;

inline HittingOracle exact_hitting_oracle(SolveBudget budget = {}) {
  return [budget](const Hypergraph& h, std::size_t c) -> std::optional<VertexSet> {
    auto r = solve_shallow_hitting(h, c, budget);
    if (r.status != SolveStatus::Sat) return std::nullopt;
    return r.hitting_set;
  };
}

class PipelineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PipelineResult {
  ColorAssignment coloring;
  Hypergraph target;                 // H_{>= c(k-1)+1}
  std::vector<std::size_t> class_sizes;
};

/// Colors H_{>= c(k-1)+1}: in round j every edge is shrunk (inside the
/// surviving points) to c(k-1-j)+1 vertices, a c-shallow hitting set of the
/// shrunk edges takes color j and leaves; what is left gets color k-1.
inline PipelineResult lemma1_pipeline(const PointSet& p, const RangeFamily& f, std::size_t k, std::size_t c,
                                      const HittingOracle& oracle) {
  if (k == 0) throw InvalidInput("k must be >= 1");
  if (c == 0) throw InvalidInput("c must be >= 1");
  const auto n = p.size();
  const auto threshold = c * (k - 1) + 1;
  PipelineResult out{ColorAssignment(k, std::vector<std::uint32_t>(n, static_cast<std::uint32_t>(k - 1))),
                     capture_edges(p, f, SizeFilter::at_least(threshold)),
                     {}};
  std::vector<char> alive(n, 1);
  std::vector<Edge> tracked = out.target.edges();

  for (std::size_t j = 0; j + 1 < k; ++j) {
    const auto size = c * (k - 1 - j) + 1;
    // Surviving points, reindexed.
    std::vector<Vertex> keep, local(n, UINT32_MAX);
    std::vector<Point> pts;
    for (Vertex v = 0; v < n; ++v)
      if (alive[v]) {
        local[v] = static_cast<Vertex>(keep.size());
        keep.push_back(v);
        pts.push_back(p.points[v]);
      }
    const PointSet sub(p.dim, std::move(pts));
    std::map<Edge, Edge> memo;
    std::function<Edge(const Edge&)> shrink_to = [&](const Edge& e) -> Edge {
      if (e.size() <= size) return e;
      const auto it = memo.find(e);
      if (it != memo.end()) return it->second;
      auto smaller = shrink_edge(sub, f, VertexSet(e)).members();
      auto res = shrink_to(smaller);
      memo.emplace(e, res);
      return res;
    };
    std::vector<Edge> shrunk;
    for (auto& e : tracked) {
      Edge le;
      for (auto v : e) le.push_back(local[v]);
      if (le.size() < size) throw PipelineError("edge fell below the round size");
      Edge small = shrink_to(le);
      for (auto& v : small) v = keep[v];
      e = small;
      Edge lsmall;
      for (auto v : small) lsmall.push_back(local[v]);
      shrunk.push_back(std::move(lsmall));
    }
    const Hypergraph round_graph(keep.size(), shrunk);
    const auto hit = oracle(round_graph, c);
    if (!hit) throw PipelineError("hitting oracle found no " + std::to_string(c) + "-shallow hitting set in round " +
                                  std::to_string(j));
    if (!is_shallow_hitting(round_graph, *hit, c)) throw PipelineError("hitting oracle returned an invalid set");
    out.class_sizes.push_back(hit->size());
    for (auto lv : hit->members()) {
      const auto v = keep[lv];
      out.coloring.colors[v] = static_cast<std::uint32_t>(j);
      alive[v] = 0;
    }
    for (auto& e : tracked) std::erase_if(e, [&](Vertex v) { return !alive[v]; });
  }
  std::size_t rest = 0;
  for (Vertex v = 0; v < n; ++v) rest += alive[v] ? 1 : 0;
  out.class_sizes.push_back(rest);
  if (!is_polychromatic(out.target, out.coloring))
    throw PipelineError("pipeline coloring is not polychromatic on the target hypergraph");
  return out;
}

}  // namespace polyhs
