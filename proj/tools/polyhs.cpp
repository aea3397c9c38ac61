// polyhs: generators, capture, solvers, falsifiers and embedding checks over
// JSON documents. Exit codes: 0 ok, 2 invalid input, 3 budget exhausted,
// 4 theorem-contradiction (falsifier/witness/pipeline abort).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "polyhs/io.hpp"
#include "polyhs/polyhs.hpp"

using namespace polyhs;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;
constexpr int kExitContradiction = 4;

unsigned resolve_threads(unsigned flag) {
  if (flag) return flag;
  if (const char* env = std::getenv("POLY_THREADS")) {
    try {
      const auto v = std::stoul(env);
      if (v > 0 && v <= 1024) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw InvalidInput(std::string("POLY_THREADS must be a positive integer, got '") + env + "'");
  }
  return 1;
}

struct Globals {
  std::string out;
  bool pretty = false;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  bool deterministic = false;
  bool timing = false;
  std::uint64_t node_limit = 50'000'000;
  double time_limit = 0;

  SolveBudget budget() const {
    SolveBudget b;
    b.node_limit = node_limit;
    b.wall_seconds = time_limit;
    b.deterministic = true;
    b.threads = resolve_threads(threads);
    return b;
  }
};

void emit(const Globals& g, const json& body) {
  const auto text = io::dump(io::versioned(body), g.pretty) + "\n";
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw InvalidInput("cannot write '" + g.out + "'");
  f << text;
}

// "a..b" inclusive.
std::set<std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw InvalidInput("range must look like a..b");
  try {
    std::size_t used = 0;
    const auto lo = std::stoull(text.substr(0, dots), &used);
    if (used != dots) throw InvalidInput("bad range start");
    const auto tail = text.substr(dots + 2);
    const auto hi = std::stoull(tail, &used);
    if (used != tail.size() || hi < lo) throw InvalidInput("bad range end");
    if (hi - lo > 1'000'000) throw InvalidInput("range too large");
    std::set<std::uint64_t> s;
    for (auto v = lo; v <= hi; ++v) s.insert(v);
    return s;
  } catch (const std::logic_error&) {
    throw InvalidInput("range must look like a..b with naturals");
  }
}

std::set<std::uint64_t> naturals(const std::string& range, const std::string& labels_file) {
  if (!range.empty() && !labels_file.empty()) throw InvalidInput("give either --range or --labels, not both");
  if (!range.empty()) return parse_range(range);
  if (labels_file.empty()) throw InvalidInput("a set of naturals is required (--range or --labels)");
  return io::guarded([&] {
    const auto j = io::read_json_file(labels_file);
    const auto& arr = j.is_array() ? j : j.at("labels");
    return arr.get<std::set<std::uint64_t>>();
  });
}

RangeFamily family_option(const std::string& name, std::size_t s) { return parse_family(name, s); }

ColorAssignment random_coloring(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> colors(n);
  for (auto& c : colors) c = static_cast<std::uint32_t>(rng() % k);
  return ColorAssignment(k, std::move(colors));
}

int status_exit(SolveStatus s) { return s == SolveStatus::BudgetExhausted ? kExitBudget : kExitOk; }

json solve_doc(const Globals& g, const SolveResult& r) { return io::to_json(r, g.timing); }

// --- embeddings -------------------------------------------------------------

struct EmbedArgs {
  std::string map;
  std::string range, labels, points, spec_file;
  std::vector<std::uint64_t> params;
  std::vector<std::uint64_t> offsets;
};

APSpec chain_spec(const EmbedArgs& a) {
  if (!a.spec_file.empty()) return io::apspec_from_json(io::read_json_file(a.spec_file));
  APSpec spec;
  spec.kind = a.params.size() == 1 ? GeneratorKind::Powers : GeneratorKind::DivisorChain;
  spec.params = a.params;
  spec.all_offsets = true;
  validate(spec);
  return spec;
}

std::set<std::uint64_t> offsets_or_zero(const EmbedArgs& a) {
  if (a.offsets.empty()) return {0};
  return {a.offsets.begin(), a.offsets.end()};
}

void need_params(const EmbedArgs& a, std::size_t count, const char* what) {
  if (a.params.size() != count) throw InvalidInput(std::string("--params must list ") + what);
}

bool naturals_map(const std::string& map) {
  return map == "octants-chain" || map == "pq-octants" || map == "bottomless";
}

Embedding natural_embedding(const EmbedArgs& a, const std::set<std::uint64_t>& s) {
  if (a.map == "octants-chain") {
    auto sq = map_powers_to_octants(s, chain_spec(a));
    return Embedding{std::move(sq.points), std::move(sq.corr)};
  }
  if (a.map == "pq-octants") {
    need_params(a, 2, "p,q");
    return map_pq_to_octants(s, a.params[0], a.params[1], offsets_or_zero(a));
  }
  need_params(a, 1, "t");
  return map_powers_to_bottomless(s, a.params[0], offsets_or_zero(a));
}

// Source AP spec for verification: --spec, or the full generator with the given M.
APSpec source_spec(const EmbedArgs& a) {
  if (!a.spec_file.empty()) return io::apspec_from_json(io::read_json_file(a.spec_file));
  APSpec spec;
  spec.offsets = offsets_or_zero(a);
  if (a.map == "octants-chain") return chain_spec(a);
  if (a.map == "pq-octants") {
    spec.kind = GeneratorKind::BiPowers;
    spec.params = a.params;
  } else {
    spec.kind = GeneratorKind::Powers;
    spec.params = a.params;
    spec.mode = APMode::Finite;
  }
  validate(spec);
  return spec;
}

Labeling point_labeling(const EmbedArgs& a, const PointSet& p) {
  if (a.map == "octants-pq") {
    need_params(a, 2, "p,q");
    return map_octants_to_pq(p, a.params[0], a.params[1]);
  }
  need_params(a, 3, "p1,p2,p3");
  return map_hextants_to_pqr(p, a.params[0], a.params[1], a.params[2]);
}

void check_map_name(const std::string& map) {
  static const std::set<std::string> known{"octants-chain", "pq-octants", "bottomless", "tfin", "octants-pq",
                                           "hextants-pqr"};
  if (!known.count(map)) throw InvalidInput("unknown map '" + map + "'");
}

json embed(const EmbedArgs& a) {
  check_map_name(a.map);
  if (naturals_map(a.map)) {
    const auto emb = natural_embedding(a, naturals(a.range, a.labels));
    return {{"points", io::to_json(emb.points)}, {"correspondence", io::to_json(emb.corr)}};
  }
  const auto p = io::pointset_from_json(io::read_json_file(a.points));
  if (a.map == "tfin") {
    const auto emb = map_rectangles_to_tfin(p);
    return {{"points", io::to_json(emb.points)}, {"correspondence", io::to_json(emb.corr)}};
  }
  const auto lab = point_labeling(a, p);
  return {{"labels", lab.labels}, {"bases", lab.bases}, {"correspondence", io::to_json(lab.corr)}};
}

std::pair<json, bool> verify_embedding(const EmbedArgs& a) {
  check_map_name(a.map);
  if (naturals_map(a.map)) {
    const auto s = naturals(a.range, a.labels);
    const auto ap = build_ap_hypergraph(s, source_spec(a));
    const auto emb = natural_embedding(a, s);
    const auto report = verify_edge_preservation(ap.graph, ap.labels, emb.points, emb.corr.family, emb.corr);
    auto out = io::to_json(report);
    out["edges"] = ap.graph.edge_count();
    return {out, report.preserved};
  }
  const auto p = io::pointset_from_json(io::read_json_file(a.points));
  if (a.map == "tfin") {
    const auto h = capture_edges(p, RangeFamily::rectangles());
    std::vector<std::uint64_t> ids(p.size());
    std::iota(ids.begin(), ids.end(), 0);
    const auto emb = map_rectangles_to_tfin(p);
    const auto report = verify_edge_preservation(h, ids, emb.points, emb.corr.family, emb.corr);
    auto out = io::to_json(report);
    out["edges"] = h.edge_count();
    return {out, report.preserved};
  }
  const auto lab = point_labeling(a, p);
  const auto family = a.map == "octants-pq" ? RangeFamily::octants() : RangeFamily::hextants();
  const auto h = capture_edges(p, family);
  json out{{"family", io::to_json(family)}, {"direction", direction_name(lab.corr.direction)}, {"edges", h.edge_count()}};
  for (const auto& e : h.edges()) {
    const auto check = check_label_edge(lab, e, false);
    if (!check.ok) {
      out["status"] = "failed";
      out["failing_edge"] = e;
      out["reason"] = check.reason;
      return {out, false};
    }
  }
  out["status"] = "all-preserved";
  return {out, true};
}

// --- falsifiers ----------------------------------------------------------------

json falsifier_doc(const ConstructionInstance& inst, const VertexSet& s, const FalsifierResult& r) {
  const auto mask = s.mask(inst.points.size());
  return {{"set_size", s.size()},
          {"witness", io::to_json(r.witness)},
          {"step", r.step},
          {"hits", hit_count(r.witness.edge, mask)}};
}

FalsifierResult run_falsifier(const std::string& which, const ConstructionInstance& inst, const VertexSet& s) {
  if (which == "thm2") return falsify_bottomless(inst, s);
  return falsify_strips(inst, s);
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"polychromatic colorings and shallow hitting sets for geometric hypergraphs", "polyhs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--out", g.out, "write the result document here instead of stdout");
  app.add_flag("--pretty", g.pretty, "indent JSON output");
  app.add_option("--seed", g.seed, "seed for randomized campaigns");
  app.add_option("--threads", g.threads, "solver threads (default: POLY_THREADS or 1)")->check(CLI::Range(1u, 1024u));
  app.add_flag("--deterministic", g.deterministic, "identical output for any thread count (always on)");
  app.add_flag("--timing", g.timing, "include wall-clock milliseconds in solver results");
  app.add_option("--node-limit", g.node_limit, "search nodes per frontier subtree, 0 for none");
  app.add_option("--time-limit", g.time_limit, "wall-clock seconds per solve, 0 for none")->check(CLI::NonNegativeNumber);

  int code = kExitOk;

  // generate
  auto* gen = app.add_subcommand("generate", "build a construction instance");
  std::string gen_which;
  std::size_t gen_m = 0, gen_k = 0, gen_s = 0;
  std::string gen_base;
  gen->add_option("which", gen_which, "thm2 | thm3 | thm4 | thm5 | thm6")
      ->required()
      ->check(CLI::IsMember({"thm2", "thm3", "thm4", "thm5", "thm6"}));
  gen->add_option("--m", gen_m, "edge size (thm2, thm4; thm6 base when --base is absent)");
  gen->add_option("--k", gen_k, "number of colors (thm3, thm5, thm6)");
  gen->add_option("--s", gen_s, "strips per union (thm6)");
  gen->add_option("--base", gen_base, "thm6 base: instance or point set document");
  gen->callback([&] {
    const auto need = [](std::size_t v, const char* flag) {
      if (!v) throw InvalidInput(std::string(flag) + " is required");
      return v;
    };
    if (gen_which == "thm2") return emit(g, io::to_json(build_bottomless_no3shs(need(gen_m, "--m"))));
    if (gen_which == "thm3") return emit(g, io::to_json(build_dual_strip_lb(need(gen_k, "--k"))));
    if (gen_which == "thm4") return emit(g, io::to_json(build_strip_no2shs(need(gen_m, "--m"))));
    if (gen_which == "thm5") return emit(g, io::to_json(build_cross_lb(need(gen_k, "--k"))));
    PointSet base;
    if (!gen_base.empty()) {
      const auto j = io::read_json_file(gen_base);
      base = j.contains("kind") ? io::instance_from_json(j).points : io::pointset_from_json(j);
    } else {
      base = build_strip_no2shs(need(gen_m, "--m or --base")).points;
    }
    emit(g, io::to_json(build_sstrips_lb(need(gen_s, "--s"), need(gen_k, "--k"), base)));
  });

  // capture
  auto* cap = app.add_subcommand("capture", "hypergraph of a point set captured by a range family");
  std::string cap_family, cap_points;
  std::size_t cap_s = 1, cap_exact = 0, cap_at_least = 0;
  cap->add_option("--family", cap_family, "range family")->required();
  cap->add_option("--s", cap_s, "strips per union for strip-union");
  cap->add_option("--points", cap_points, "point set document")->required();
  auto* exact_opt = cap->add_option("--exact", cap_exact, "keep edges of exactly this size")->check(CLI::PositiveNumber);
  cap->add_option("--at-least", cap_at_least, "keep edges of at least this size")
      ->check(CLI::PositiveNumber)
      ->excludes(exact_opt);
  cap->callback([&] {
    const auto f = family_option(cap_family, cap_s);
    const auto p = io::pointset_from_json(io::read_json_file(cap_points));
    auto filter = SizeFilter::none();
    if (cap_exact) filter = SizeFilter::exact(cap_exact);
    if (cap_at_least) filter = SizeFilter::at_least(cap_at_least);
    emit(g, io::to_json(capture_edges(p, f, filter)));
  });

  // dual
  auto* dual = app.add_subcommand("dual", "dual hypergraph of axis-parallel strips");
  std::string dual_strips;
  dual->add_option("--strips", dual_strips, "strips document")->required();
  dual->callback([&] { emit(g, io::to_json(dual_strips_hypergraph(io::strips_from_json(io::read_json_file(dual_strips))))); });

  // ap
  auto* apc = app.add_subcommand("ap", "maximal arithmetic-progression hypergraph on a set of naturals");
  std::string ap_spec, ap_range, ap_labels;
  apc->add_option("--spec", ap_spec, "AP spec document")->required();
  apc->add_option("--range", ap_range, "naturals a..b");
  apc->add_option("--labels", ap_labels, "JSON array of naturals");
  apc->callback([&] {
    const auto spec = io::apspec_from_json(io::read_json_file(ap_spec));
    emit(g, io::to_json(build_ap_hypergraph(naturals(ap_range, ap_labels), spec)));
  });

  // embed / verify-embedding
  EmbedArgs ea;
  const auto embed_options = [&](CLI::App* sub) {
    sub->add_option("--map", ea.map, "octants-chain | pq-octants | bottomless | tfin | octants-pq | hextants-pqr")
        ->required();
    sub->add_option("--range", ea.range, "naturals a..b");
    sub->add_option("--labels", ea.labels, "JSON array of naturals");
    sub->add_option("--points", ea.points, "point set document");
    sub->add_option("--spec", ea.spec_file, "AP spec document (chain or source spec)");
    sub->add_option("--params", ea.params, "t | p,q | p1,p2,p3 | chain d1,d2,...")->delimiter(',');
    sub->add_option("--M", ea.offsets, "offset set, comma separated (default 0)")->delimiter(',');
  };
  auto* emb = app.add_subcommand("embed", "map naturals to points or points to naturals");
  embed_options(emb);
  emb->callback([&] { emit(g, embed(ea)); });
  auto* ver = app.add_subcommand("verify-embedding", "check that every source edge maps onto one range");
  embed_options(ver);
  ver->callback([&] {
    const auto [doc, ok] = verify_embedding(ea);
    emit(g, doc);
    if (!ok) {
      std::cerr << "polyhs: embedding does not preserve an edge\n";
      code = kExitContradiction;
    }
  });

  // solvers
  std::string hg_file;
  std::size_t solve_k = 0, solve_c = 0;
  auto* scol = app.add_subcommand("solve-color", "exact polychromatic k-coloring search");
  scol->add_option("--k", solve_k, "colors")->required()->check(CLI::PositiveNumber);
  scol->add_option("--hypergraph", hg_file, "hypergraph document")->required();
  scol->callback([&] {
    const auto r = solve_polychromatic(io::hypergraph_from_json(io::read_json_file(hg_file)), solve_k, g.budget());
    emit(g, solve_doc(g, r));
    code = status_exit(r.status);
  });
  auto* shit = app.add_subcommand("solve-hitting", "exact c-shallow hitting set search");
  shit->add_option("--c", solve_c, "shallowness")->required()->check(CLI::PositiveNumber);
  shit->add_option("--hypergraph", hg_file, "hypergraph document")->required();
  shit->callback([&] {
    const auto r = solve_shallow_hitting(io::hypergraph_from_json(io::read_json_file(hg_file)), solve_c, g.budget());
    emit(g, solve_doc(g, r));
    code = status_exit(r.status);
  });
  auto* minc = app.add_subcommand("min-c", "smallest c with a c-shallow hitting set");
  minc->add_option("--hypergraph", hg_file, "hypergraph document")->required();
  minc->callback([&] {
    const auto r = min_shallow_c(io::hypergraph_from_json(io::read_json_file(hg_file)), g.budget());
    json doc{{"status", to_string(r.status)}, {"c", r.c}};
    if (r.hitting_set) doc["hitting_set"] = r.hitting_set->members();
    emit(g, doc);
    code = status_exit(r.status);
  });
  auto* minm = app.add_subcommand("min-m", "smallest m with H_{>=m} k-colorable");
  std::string minm_id;
  minm->add_option("--k", solve_k, "colors")->required()->check(CLI::PositiveNumber);
  minm->add_option("--hypergraph", hg_file, "hypergraph document")->required();
  minm->add_option("--id", minm_id, "instance id recorded in the output");
  minm->callback([&] {
    const auto rec =
        min_m_polychromatic(io::hypergraph_from_json(io::read_json_file(hg_file)), solve_k, g.budget(), minm_id);
    emit(g, io::to_json(rec));
    code = status_exit(rec.status);
  });

  // falsify
  auto* fal = app.add_subcommand("falsify", "find an m-edge hit 0 or too many times by a given set");
  std::string fal_which, fal_instance, fal_set = "empty";
  std::size_t fal_probes = 10;
  fal->add_option("which", fal_which, "thm2 | thm4")->required()->check(CLI::IsMember({"thm2", "thm4"}));
  fal->add_option("--instance", fal_instance, "instance document")->required();
  fal->add_option("--set", fal_set, "empty | probe | vertex set document");
  fal->add_option("--probes", fal_probes, "number of probe candidates for --set probe")->check(CLI::PositiveNumber);
  fal->callback([&] {
    const auto inst = io::instance_from_json(io::read_json_file(fal_instance));
    if (inst.kind != fal_which) throw InvalidInput("instance is " + inst.kind + ", not " + fal_which);
    if (fal_set != "probe") {
      const VertexSet s = fal_set == "empty" ? VertexSet{} : io::vertexset_from_json(io::read_json_file(fal_set));
      for (auto v : s.members())
        if (v >= inst.points.size()) throw InvalidInput("set contains a vertex outside the instance");
      emit(g, falsifier_doc(inst, s, run_falsifier(fal_which, inst, s)));
      return;
    }
    // Candidates from randomized search for a shallow hitting set of H_{=m}.
    const auto m = static_cast<std::size_t>(inst.param("m"));
    const std::size_t c = fal_which == "thm2" ? 3 : 2;
    const auto h = capture_edges(inst.points, inst.family, SizeFilter::exact(m));
    json results = json::array();
    for (std::size_t i = 0; i < fal_probes; ++i) {
      const auto s = probe_shallow_hitting(h, c, g.seed + i);
      results.push_back(falsifier_doc(inst, s, run_falsifier(fal_which, inst, s)));
    }
    emit(g, {{"probes", std::move(results)}});
  });

  // witness
  auto* wit = app.add_subcommand("witness", "find an edge missing a color under a given coloring");
  std::string wit_which, wit_instance, wit_coloring = "random";
  wit->add_option("which", wit_which, "thm3 | thm5")->required()->check(CLI::IsMember({"thm3", "thm5"}));
  wit->add_option("--instance", wit_instance, "instance document")->required();
  wit->add_option("--coloring", wit_coloring, "coloring document, or random (uses --seed)");
  wit->callback([&] {
    const auto j = io::read_json_file(wit_instance);
    const auto load = [&](std::size_t n, std::size_t k) {
      if (wit_coloring == "random") return random_coloring(n, k, g.seed);
      return io::coloring_from_json(io::read_json_file(wit_coloring));
    };
    ColorWitness w;
    if (wit_which == "thm3") {
      const auto inst = io::dual_instance_from_json(j);
      w = witness_dual_strip(inst, load(inst.strips.size(), inst.k));
    } else {
      const auto inst = io::instance_from_json(j);
      w = witness_cross(inst, load(inst.points.size(), static_cast<std::size_t>(inst.param("k"))));
    }
    emit(g, {{"edge", w.edge}, {"missing_color", w.missing_color}});
  });

  // pipeline
  auto* pipe = app.add_subcommand("pipeline", "color H_{>=c(k-1)+1} from c-shallow hitting sets");
  std::string pipe_points, pipe_family;
  std::size_t pipe_s = 1, pipe_k = 0, pipe_c = 0;
  pipe->add_option("--points", pipe_points, "point set document")->required();
  pipe->add_option("--family", pipe_family, "range family")->required();
  pipe->add_option("--s", pipe_s, "strips per union for strip-union");
  pipe->add_option("--k", pipe_k, "colors")->required()->check(CLI::PositiveNumber);
  pipe->add_option("--c", pipe_c, "shallowness")->required()->check(CLI::PositiveNumber);
  pipe->callback([&] {
    const auto p = io::pointset_from_json(io::read_json_file(pipe_points));
    const auto f = family_option(pipe_family, pipe_s);
    const auto r = lemma1_pipeline(p, f, pipe_k, pipe_c, exact_hitting_oracle(g.budget()));
    const auto verdict = is_polychromatic(r.target, r.coloring);
    if (!verdict.ok()) throw TheoremViolation("pipeline coloring is not polychromatic");
    emit(g, {{"threshold", pipe_c * (pipe_k - 1) + 1},
             {"target_edges", r.target.edge_count()},
             {"coloring", io::to_json(r.coloring)},
             {"class_sizes", r.class_sizes},
             {"verified", true}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "polyhs: " << e.what() << "\n";
    return kExitInvalid;
  }
  return code;
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InvalidInput& e) {
    std::cerr << "polyhs: invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ShrinkError& e) {
    std::cerr << "polyhs: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const TheoremViolation& e) {
    std::cerr << "polyhs: theorem contradiction: " << e.what() << "\n";
    return kExitContradiction;
  } catch (const PipelineError& e) {
    std::cerr << "polyhs: pipeline aborted: " << e.what() << "\n";
    return kExitContradiction;
  } catch (const std::overflow_error& e) {
    std::cerr << "polyhs: arithmetic overflow: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "polyhs: error: " << e.what() << "\n";
    return 1;
  }
}
