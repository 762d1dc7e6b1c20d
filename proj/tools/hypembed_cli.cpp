#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypembed/error.hpp"
#include "hypembed/generators.hpp"
#include "hypembed/hyperbolicity.hpp"
#include "hypembed/pipeline.hpp"
#include "hypembed/profile.hpp"
#include "hypembed/serialization.hpp"

namespace {

using namespace hypembed;

// "N=512,b=3" -> {{"N",512},{"b",3}}
std::map<std::string, double> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("parameter '" + item + "' is not key=value");
    try {
      out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error("parameter '" + item + "' has a non-numeric value");
    }
  }
  return out;
}

std::string default_output_dir(const std::string& name) {
  const char* root = std::getenv(kOutputRootEnv);
  return (std::filesystem::path(root && *root ? root : "runs") / name).string();
}

int cmd_generate(const std::string& name, const std::vector<std::string>& params, std::uint64_t seed,
                 const std::string& out, bool matrix) {
  const auto space = generate(name, params.empty() ? default_params(name) : parse_params(params), seed);
  const auto j = space_to_json(space, matrix);
  if (out.empty() || out == "-")
    std::cout << j.dump(2) << '\n';
  else
    write_json_file(out, j);
  return 0;
}

int cmd_profile(const std::string& name, const std::vector<std::string>& params, std::uint64_t seed, double delta,
                std::vector<std::size_t> ms, double ratio, std::size_t levels, std::size_t budget, const std::string& out) {
  const auto space = generate(name, params.empty() ? default_params(name) : parse_params(params), seed);
  const double top = space.diameter() > 0.0 ? space.diameter() : 1.0;
  const auto prof = capacity_profile(space, ms, geometric_ladder(top, ratio, levels), delta, budget);
  const auto j = profile_to_json(prof);
  if (out.empty() || out == "-")
    std::cout << j.dump(2) << '\n';
  else
    write_json_file(out, j);
  return 0;
}

int cmd_pipeline(PipelineConfig config, const std::string& config_file) {
  if (!config_file.empty()) config = config_from_json(read_json_file(config_file), config);
  if (config.output_dir.empty()) {
    std::ostringstream name;
    name << config.generator;
    for (const auto& [k, v] : config.params) name << '_' << k << v;
    name << "_r" << config.r << "_J" << config.depth << "_m" << config.colors << "_s" << config.seed;
    config.output_dir = default_output_dir(name.str());
  }
  try {
    const auto res = run_pipeline(config);
    for (const auto& l : res.log) std::cout << l << '\n';
    std::cout << (res.passed ? "result: PASS" : "result: FAIL") << "\noutput: " << config.output_dir << '\n';
    return res.passed ? 0 : 1;
  } catch (const StageError& e) {
    std::cerr << "error: " << e.what() << "\noutput: " << config.output_dir << '\n';
    return 2;
  }
}

int cmd_verify(const std::string& dir) {
  namespace fs = std::filesystem;
  const auto space = space_from_json(read_json_file((fs::path(dir) / "space.json").string()));
  const auto seq = charseq_from_json(read_json_file((fs::path(dir) / "charseq.json").string()));
  const auto report = verify_char_seq(space, seq);
  bool ok = report.passed;
  for (const auto& c : report.checks)
    std::cout << "charseq " << c.property << ": " << (c.passed ? "pass" : "FAIL") << " (achieved " << c.achieved
              << ", bound " << c.bound << ")\n";
  if (!ok) {
    std::cout << "result: FAIL\n";
    return 1;
  }
  std::vector<RootedTree> trees;
  const auto summaries = stage_trees(space, seq, &trees);
  for (const auto& s : summaries) {
    const auto stored = read_json_file((fs::path(dir) / ("tree_" + std::to_string(s.color) + ".json")).string());
    const bool same = stored == tree_to_json(trees[s.color]);
    const bool good = s.audit.ok() && s.delta_hyperbolicity == 0.0 && same;
    ok = ok && good;
    std::cout << "tree " << s.color << ": " << (good ? "pass" : "FAIL") << " (" << s.vertices << " vertices"
              << (same ? "" : ", differs from stored tree") << ")\n";
  }
  const auto cfg = config_from_json(read_json_file((fs::path(dir) / "config.json").string()));
  const ConeGrid grid(space, cfg.r, cfg.depth);
  const auto emb = embed_grid(space, grid, seq);
  std::ifstream csv((fs::path(dir) / "embedding.csv").string());
  const auto rows = read_embedding_csv(csv);
  bool table_ok = rows.size() == grid.size();
  for (std::size_t x = 0; x < rows.size() && table_ok; ++x)
    for (std::size_t a = 0; a < rows[x].size() && table_ok; ++a) table_ok = rows[x][a] == emb.image(x, a);
  ok = ok && table_ok;
  std::cout << "embedding: " << (table_ok ? "pass" : "FAIL") << '\n';
  std::size_t checks = 0;
  const std::size_t radial = stage_radial(grid, emb, &checks, nullptr);
  ok = ok && radial == 0;
  std::cout << "radial: " << (radial == 0 ? "pass" : "FAIL") << " (" << checks << " checks, " << radial << " failures)\n";
  std::cout << (ok ? "result: PASS" : "result: FAIL") << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperbolic cone to tree-product embedding toolkit"};
  app.require_subcommand(1);

  std::string gen_name = "circle";
  std::vector<std::string> gen_params;
  std::uint64_t seed = 0;
  std::string out;
  bool matrix = false;
  auto* gen = app.add_subcommand("generate", "Write a generated space as JSON");
  gen->add_option("name", gen_name, "circle, interval, cantor, tree_boundary, random_circle, visual_circle, point")
      ->required();
  gen->add_option("-p,--param", gen_params, "Generator parameter key=value (repeatable)");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("-o,--out", out, "Output file (stdout if omitted)");
  gen->add_flag("--matrix", matrix, "Write the full distance matrix even for generated spaces");

  double prof_delta = 0.1;
  std::vector<std::size_t> prof_m{1};
  double prof_ratio = 0.5;
  std::size_t prof_levels = 6;
  std::size_t prof_budget = 8;
  auto* prof = app.add_subcommand("profile", "Finite-scale capacity profile (lower-bound witnesses)");
  prof->add_option("name", gen_name, "Generator name")->required();
  prof->add_option("-p,--param", gen_params, "Generator parameter key=value");
  prof->add_option("--seed", seed, "Random seed");
  prof->add_option("--delta", prof_delta, "Mesh lower bound factor");
  prof->add_option("-m,--m", prof_m, "Values of m (m+1 colors)");
  prof->add_option("--ratio", prof_ratio, "Ladder ratio between consecutive scales");
  prof->add_option("--levels", prof_levels, "Number of ladder scales");
  prof->add_option("--budget", prof_budget, "Candidate scales tried per entry");
  prof->add_option("-o,--out", out, "Output file (stdout if omitted)");

  PipelineConfig cfg;
  std::vector<std::string> pipe_params;
  std::string config_file;
  double lambda = 0.0;
  bool no_standing = false;
  auto* pipe = app.add_subcommand("pipeline", "Run the full construction and verification pipeline");
  pipe->add_option("--generator", cfg.generator, "Generator name");
  pipe->add_option("-p,--param", pipe_params, "Generator parameter key=value");
  pipe->add_option("--seed", cfg.seed, "Random seed");
  pipe->add_option("-r", cfg.r, "Scale ratio r in (0,1)");
  pipe->add_option("-J,--depth", cfg.depth, "Number of levels J");
  pipe->add_option("--colors", cfg.colors, "Requested number of colors");
  pipe->add_option("--delta", cfg.delta, "Requested characteristic constant");
  pipe->add_option("--lambda", lambda, "Requested net constant (default 1 + 2 delta)");
  pipe->add_option("--strategy", cfg.strategy, "Covering strategy (default from the space layout)");
  pipe->add_flag("--no-standing-assumptions", no_standing, "Let the verifier alone certify the separated sequence");
  pipe->add_option("--product-mode", cfg.product_mode, "Product metric (l1)");
  pipe->add_option("-o,--out", cfg.output_dir, "Run directory (default under $HYPEMBED_OUTPUT_ROOT or ./runs)");
  pipe->add_flag("--pairs", cfg.write_pairs, "Also write pairs.csv");
  pipe->add_option("-c,--config", config_file, "JSON config; its fields override flags");

  std::string verify_dir;
  auto* ver = app.add_subcommand("verify", "Re-run checks on a run directory");
  ver->add_option("dir", verify_dir, "Run directory")->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*gen) return cmd_generate(gen_name, gen_params, seed, out, matrix);
    if (*prof) return cmd_profile(gen_name, gen_params, seed, prof_delta, prof_m, prof_ratio, prof_levels, prof_budget, out);
    if (*pipe) {
      if (!pipe_params.empty()) cfg.params = parse_params(pipe_params);
      else if (pipe->count("--generator")) cfg.params = default_params(cfg.generator);
      if (pipe->count("--lambda")) cfg.lambda = lambda;
      cfg.enforce_standing_assumptions = !no_standing;
      return cmd_pipeline(cfg, config_file);
    }
    if (*ver) return cmd_verify(verify_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
