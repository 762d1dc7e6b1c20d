#include "hypembed/pipeline.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hypembed/error.hpp"
#include "hypembed/generators.hpp"
#include "hypembed/hyperbolicity.hpp"
#include "hypembed/separation.hpp"

namespace hypembed {

namespace {

std::string first_failure(const PropertyReport& report) {
  for (const auto& c : report.checks)
    if (!c.passed) {
      std::ostringstream os;
      os << c.property << " achieved " << c.achieved << " against bound " << c.bound;
      if (c.worst.level >= 0) os << " at level " << c.worst.level;
      if (c.worst.color >= 0) os << ", color " << c.worst.color;
      if (c.worst.member >= 0) os << ", member " << c.worst.member;
      if (!c.worst.detail.empty()) os << " (" << c.worst.detail << ")";
      return os.str();
    }
  return "no failing check";
}

template <class F>
auto tagged(const char* stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(stage, e.what());
  }
}

}  // namespace

void PipelineConfig::validate() const {
  if (!(r > 0.0 && r < 1.0)) throw Error("r must lie in (0,1)");
  if (depth < 1) throw Error("J must be at least 1");
  if (static_cast<double>(depth) * std::log(1.0 / r) > ConeGrid::kMaxRadius)
    throw Error("J ln(1/r) must not exceed 40");
  if (colors < 1) throw Error("at least one color is required");
  if (!(delta > 0.0 && delta < 1.0)) throw Error("delta must lie in (0,1)");
  if (lambda && !(*lambda >= 1.0)) throw Error("lambda must be at least 1");
  if (product_mode != "l1") throw Error("only the l1 product metric is implemented");
  if (!strategy.empty()) parse_strategy(strategy);
}

PipelineConfig config_from_json(const Json& j, PipelineConfig c) {
  if (!j.is_object()) throw Error("config must be a JSON object");
  if (j.contains("generator") && !j.contains("params")) c.params = default_params(j["generator"].get<std::string>());
  for (const auto& [key, v] : j.items()) {
    if (key == "generator") c.generator = v.get<std::string>();
    else if (key == "params") {
      c.params.clear();
      for (const auto& [pk, pv] : v.items()) c.params[pk] = pv.get<double>();
    } else if (key == "seed") c.seed = v.get<std::uint64_t>();
    else if (key == "r") c.r = v.get<double>();
    else if (key == "J") c.depth = v.get<std::size_t>();
    else if (key == "colors") c.colors = v.get<std::size_t>();
    else if (key == "delta") c.delta = v.get<double>();
    else if (key == "lambda") c.lambda = v.is_null() ? std::nullopt : std::optional<double>(v.get<double>());
    else if (key == "strategy") c.strategy = v.get<std::string>();
    else if (key == "enforce_standing_assumptions") c.enforce_standing_assumptions = v.get<bool>();
    else if (key == "product_mode") c.product_mode = v.get<std::string>();
    else if (key == "output_dir") c.output_dir = v.get<std::string>();
    else if (key == "write_pairs") c.write_pairs = v.get<bool>();
    else throw Error("unknown config key '" + key + "'");
  }
  return c;
}

Json config_to_json(const PipelineConfig& c) {
  Json params = Json::object();
  for (const auto& [k, v] : c.params) params[k] = v;
  return Json{{"generator", c.generator},
              {"params", params},
              {"seed", c.seed},
              {"r", c.r},
              {"J", c.depth},
              {"colors", c.colors},
              {"delta", c.delta},
              {"lambda", c.lambda ? Json(*c.lambda) : Json(nullptr)},
              {"strategy", c.strategy},
              {"enforce_standing_assumptions", c.enforce_standing_assumptions},
              {"product_mode", c.product_mode},
              {"write_pairs", c.write_pairs}};
}

FiniteMetricSpace stage_generate(const PipelineConfig& config) {
  auto space = generate(config.generator, config.params, config.seed);
  if (space.size() <= 64 && space.worst_triangle_violation() > FiniteMetricSpace::kTriangleTolerance)
    throw Error("generated table violates the triangle inequality");
  return space;
}

CharSequence stage_sequence(const FiniteMetricSpace& space, const PipelineConfig& config, PropertyReport* report) {
  const BaseStrategy strategy = config.strategy.empty() ? default_strategy(space) : parse_strategy(config.strategy);
  BaseOptions opts;
  opts.delta = config.delta;
  opts.lambda = config.lambda;
  const BaseSequence base =
      tagged("build_base", [&] { return build_base(space, config.r, config.colors, config.depth, strategy, opts); });
  SeparationOptions sep;
  sep.enforce_standing_assumptions = config.enforce_standing_assumptions;
  sep.require_verification = false;
  CharSequence seq = tagged("separate", [&] { return separate(space, base, sep); });
  PropertyReport rep = tagged("verify_char_seq", [&] { return verify_char_seq(space, seq); });
  if (report) *report = rep;
  return seq;
}

std::vector<TreeSummary> stage_trees(const FiniteMetricSpace& space, const CharSequence& seq, std::vector<RootedTree>* out) {
  const auto rep = verify_char_seq(space, seq);
  if (!rep.passed) throw StageError("build_tree", "input sequence fails verification: " + first_failure(rep));
  std::vector<TreeSummary> summaries;
  for (std::size_t a = 0; a < seq.ladder.color_count; ++a) {
    RootedTree tree = tagged("build_tree", [&] { return build_tree(space, seq, a); });
    TreeSummary s;
    s.color = a;
    s.vertices = tree.size();
    s.audit = audit_tree(seq, tree);
    const auto table = tree_distance_table(tree);
    const std::size_t n = tree.size();
    s.delta_hyperbolicity =
        delta_hyperbolicity(n, [&](std::size_t i, std::size_t k) { return table[i * n + k]; }, std::size_t{0});
    summaries.push_back(std::move(s));
    if (out) out->push_back(std::move(tree));
  }
  return summaries;
}

std::size_t stage_radial(const ConeGrid& grid, const ProductEmbedding& embedding, std::size_t* checks,
                         std::vector<std::string>* failures, std::size_t keep) {
  std::size_t failed = 0;
  std::size_t count = 0;
  for (std::size_t x = 0; x < grid.size(); ++x)
    for (std::size_t i = 0; i <= grid.level(x); ++i) {
      ++count;
      try {
        radial_check(grid, embedding, x, i);
      } catch (const Error& e) {
        ++failed;
        if (failures && failures->size() < keep) failures->push_back(e.what());
      }
    }
  if (checks) *checks = count;
  return failed;
}

QIReport stage_fit(const ConeGrid& grid, const ProductEmbedding& embedding, std::ostream* pairs_csv) {
  const std::size_t n = grid.size();
  const std::size_t colors = embedding.color_count();
  QIFitter product;
  QIFitter reversed;
  std::vector<QIFitter> per_tree(colors);
  std::vector<ConePoint> pts(n);
  for (std::size_t x = 0; x < n; ++x) pts[x] = grid.point(x);
  const auto& metric = grid.metric();
  std::vector<std::size_t> dt(colors);

  auto for_each_pair = [&](auto&& visit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        const double ds = metric(pts[a], pts[b]);
        std::size_t sum = 0;
        for (std::size_t c = 0; c < colors; ++c) {
          dt[c] = embedding.tree_distance(a, b, c);
          sum += dt[c];
        }
        visit(DistancePair{ds, static_cast<double>(sum), a, b});
      }
  };

  if (pairs_csv) write_pairs_csv_header(*pairs_csv);
  for_each_pair([&](const DistancePair& p) {
    product.add(p);
    reversed.add({p.target, p.source, p.a, p.b});
    for (std::size_t c = 0; c < colors; ++c) per_tree[c].add({p.source, static_cast<double>(dt[c]), p.a, p.b});
    if (pairs_csv) write_pairs_csv_row(*pairs_csv, p);
  });

  QIReport rep;
  rep.product_mode = ProductEmbedding::kProductMode;
  rep.pair_count = product.size();
  if (rep.pair_count == 0) {
    rep.notes.push_back("grid has a single point; nothing to fit");
    return rep;
  }
  rep.product = product.fit();
  for (double l : {1.0, 2.0, 3.0, 5.0, 10.0, 20.0, 50.0}) rep.sigma_profile.emplace_back(l, product.sigma_at(l));
  for (std::size_t c = 0; c < colors; ++c) rep.per_tree_upper.push_back(per_tree[c].fit_upper_at(rep.product.lambda));
  rep.lower_direction = reversed.fit_upper_at(rep.product.lambda);

  // Post-check every pair with the same expressions the fitter used.
  QIVerifier both(rep.product.lambda, rep.product.sigma);
  QIVerifier lower(rep.lower_direction.lambda, rep.lower_direction.sigma, true);
  std::vector<QIVerifier> trees;
  for (const auto& u : rep.per_tree_upper) trees.emplace_back(u.lambda, u.sigma, true);
  for_each_pair([&](const DistancePair& p) {
    both.check(p);
    lower.check({p.target, p.source, p.a, p.b});
    for (std::size_t c = 0; c < colors; ++c) trees[c].check({p.source, static_cast<double>(dt[c]), p.a, p.b});
  });
  rep.product.violations = both.violations() + lower.violations();
  for (const auto& t : trees) rep.product.violations += t.violations();
  return rep;
}

PipelineResult run_pipeline(const PipelineConfig& config) {
  PipelineResult res;
  namespace fs = std::filesystem;
  const bool write = !config.output_dir.empty();
  auto log = [&](const std::string& stage, const std::string& msg) { res.log.push_back(stage + ": " + msg); };
  auto fail = [&](const std::string& stage, const std::string& msg) {
    res.passed = false;
    res.failures.push_back("[" + stage + "] " + msg);
    log(stage, "FAIL " + msg);
  };
  auto path = [&](const std::string& name) { return (fs::path(config.output_dir) / name).string(); };
  auto flush_log = [&] {
    if (!write) return;
    std::ofstream out(path("log.txt"), std::ios::binary);
    for (const auto& l : res.log) out << l << '\n';
    out << (res.passed ? "result: PASS" : "result: FAIL") << '\n';
  };

  try {
    tagged("config", [&] {
      config.validate();
      return 0;
    });
    if (write) {
      fs::create_directories(config.output_dir);
      write_json_file(path("config.json"), config_to_json(config));
    }
    log("config", config_to_json(config).dump());

    auto space = std::make_shared<const FiniteMetricSpace>(tagged("generate", [&] { return stage_generate(config); }));
    res.space = space;
    log("generate", config.generator + " with " + std::to_string(space->size()) + " points, diameter " +
                        std::to_string(space->diameter()));
    if (write) write_json_file(path("space.json"), space_to_json(*space));

    PropertyReport report;
    CharSequence seq = stage_sequence(*space, config, &report);
    res.verification = report;
    std::ostringstream summary;
    summary << "declared delta " << seq.delta << ", gamma " << seq.gamma << ", lambda " << seq.lambda << "; achieved delta "
            << report.achieved.delta << ", gamma " << report.achieved.gamma << ", lambda " << report.achieved.lambda;
    log("verify_char_seq", summary.str());
    for (const auto& note : seq.provenance.notes) log("separate", note);
    if (write) write_json_file(path("charseq.json"), charseq_to_json(seq, &report));
    res.seq = seq;
    if (!report.passed) {
      fail("verify_char_seq", first_failure(report));
      throw StageError("verify_char_seq", "sequence fails verification; trees would be meaningless");
    }

    auto grid = std::make_shared<const ConeGrid>(
        tagged("build_grid", [&] { return ConeGrid(*space, config.r, config.depth); }));
    res.grid = grid;
    log("build_grid", std::to_string(grid->size()) + " grid points, R = " + std::to_string(grid->big_r()));

    std::vector<RootedTree> trees;
    res.trees = stage_trees(*space, seq, &trees);
    for (const auto& t : res.trees) {
      log("build_tree", "color " + std::to_string(t.color) + ": " + std::to_string(t.vertices) + " vertices, delta " +
                            std::to_string(t.delta_hyperbolicity));
      if (!t.audit.ok()) fail("build_tree", "tree " + std::to_string(t.color) + ": " + t.audit.problems.front());
      if (t.delta_hyperbolicity != 0.0) fail("build_tree", "tree " + std::to_string(t.color) + " is not 0-hyperbolic");
    }
    if (write)
      for (std::size_t a = 0; a < trees.size(); ++a)
        write_json_file(path("tree_" + std::to_string(a) + ".json"), tree_to_json(trees[a]));

    ProductEmbedding emb = tagged("embed_grid", [&] {
      auto e = embed_grid(*space, *grid, seq);
      for (std::size_t a = 0; a < e.color_count(); ++a)
        if (e.image(0, a) != 0) throw Error("the cone vertex must map to the root");
      return e;
    });
    log("embed_grid", std::to_string(emb.point_count()) + " points mapped into " + std::to_string(emb.color_count()) +
                          " trees (product metric l1)");
    if (write) {
      std::ofstream out(path("embedding.csv"), std::ios::binary);
      write_embedding_csv(out, *grid, emb);
    }

    std::vector<std::string> radial_failures;
    std::size_t radial_checks = 0;
    const std::size_t radial_failed =
        tagged("radial_check", [&] { return stage_radial(*grid, emb, &radial_checks, &radial_failures); });
    log("radial_check", std::to_string(radial_checks) + " checks, " + std::to_string(radial_failed) + " failures");
    for (const auto& f : radial_failures) fail("radial_check", f);

    std::ofstream pairs_out;
    if (write && config.write_pairs) pairs_out.open(path("pairs.csv"), std::ios::binary);
    res.qi = tagged("fit_qi", [&] { return stage_fit(*grid, emb, pairs_out.is_open() ? &pairs_out : nullptr); });
    res.qi.radial_checks = radial_checks;
    res.qi.radial_failures = radial_failed;
    std::ostringstream fit;
    fit << res.qi.pair_count << " pairs, Lambda " << res.qi.product.lambda << ", sigma " << res.qi.product.sigma
        << ", post-check violations " << res.qi.product.violations;
    log("fit_qi", fit.str());
    if (res.qi.product.violations != 0) fail("fit_qi", "fitted constants violated on some pairs");
    if (write) write_json_file(path("qireport.json"), qireport_to_json(res.qi));
    res.embedding = std::move(emb);
  } catch (const StageError& e) {
    res.passed = false;
    log(e.stage(), std::string("ERROR ") + e.what());
    flush_log();
    throw;
  }
  flush_log();
  return res;
}

}  // namespace hypembed
