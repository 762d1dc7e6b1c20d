#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "hypembed/error.hpp"
#include "hypembed/generators.hpp"
#include "hypembed/pipeline.hpp"
#include "hypembed/profile.hpp"
#include "hypembed/serialization.hpp"

using namespace hypembed;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("hypembed_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

PipelineConfig cantor_config() {
  PipelineConfig c;
  c.generator = "cantor";
  c.params = {{"depth", 9}};
  c.r = 1.0 / 27.0;
  c.depth = 2;
  c.colors = 2;
  c.delta = 0.6;
  return c;
}

}  // namespace

TEST_CASE("generator examples") {
  const auto c4 = make_circle(4);
  CHECK(c4(0, 1) == doctest::Approx(std::numbers::pi / 2));
  CHECK(c4(0, 2) == doctest::Approx(std::numbers::pi));
  CHECK(c4(0, 3) == doctest::Approx(std::numbers::pi / 2));
  const auto i2 = make_interval(2);
  REQUIRE(i2.size() == 2);
  CHECK(i2(0, 1) == 1.0);
  CHECK(make_interval(1).size() == 1);
  const auto c3 = make_cantor(3);
  CHECK(c3.size() == 8);
  CHECK(c3.worst_triangle_violation() <= 0.0);
  CHECK(c3(0, 1) == doctest::Approx(2.0 / 27.0));
  CHECK(c3(0, 7) == doctest::Approx(1.0 - 1.0 / 27.0));
  const auto tb = make_tree_boundary(3, 2);
  CHECK(tb.size() == 9);
  CHECK(tb(0, 1) == doctest::Approx(1.0 / 3.0));
  CHECK(tb(0, 3) == doctest::Approx(1.0));
  const auto rc = make_random_circle(50, 7);
  CHECK(rc.diameter() <= 2.0);
  CHECK(rc.table() == make_random_circle(50, 7).table());
  CHECK(rc.table() != make_random_circle(50, 8).table());
  CHECK(make_point().size() == 1);
}

TEST_CASE("generator errors") {
  CHECK_THROWS_AS(generate("nope", {}, 0), Error);
  CHECK_THROWS_AS(generate("circle", {{"N", 0}}, 0), Error);
  CHECK_THROWS_AS(generate("circle", {{"N", 2.5}}, 0), Error);
  CHECK_THROWS_AS(generate("circle", {{"N", 4}, {"bogus", 1}}, 0), Error);
  CHECK_THROWS_AS(generate("cantor", {{"depth", 30}}, 0), Error);
  CHECK_THROWS_AS(generate("tree_boundary", {{"b", 1}, {"d", 3}}, 0), Error);
  const auto z = generate("random_circle", {{"N", 30}}, 5);
  REQUIRE(z.generator().has_value());
  CHECK(regenerate(*z.generator()).table() == z.table());
}

TEST_CASE("capacity profile ranges and monotonicity") {
  const auto z = make_circle(256);
  const auto ladder = geometric_ladder(z.diameter(), 0.5, 5);
  const auto loose = capacity_profile(z, {1, 2}, ladder, 0.05);
  const auto strict = capacity_profile(z, {1, 2}, ladder, 0.4);
  REQUIRE(loose.entries.size() == strict.entries.size());
  for (std::size_t i = 0; i < loose.entries.size(); ++i) {
    CHECK(loose.entries[i].capacity >= 0.0);
    CHECK(loose.entries[i].capacity <= 1.0);
    CHECK(strict.entries[i].capacity <= loose.entries[i].capacity);
    if (loose.entries[i].m == 1) CHECK(loose.entries[i].capacity > 0.0);
  }
  CHECK(loose.caveat == kCapacityCaveat);
  const auto pt = capacity_profile(make_point(), {0, 1}, {1.0, 0.5}, 0.1);
  for (const auto& e : pt.entries) CHECK(e.capacity == 1.0);
  CHECK_THROWS_AS(capacity_profile(z, {1}, {10.0}, 0.1), Error);
  CHECK_THROWS_AS(capacity_profile(z, {1}, {1.0}, 1.5), Error);
}

TEST_CASE("config parsing") {
  const auto c = config_from_json(Json::parse(R"({"generator":"interval","params":{"N":64},"r":0.25,"J":3,"colors":3})"));
  CHECK(c.generator == "interval");
  CHECK(c.params.at("N") == 64);
  CHECK(c.depth == 3);
  CHECK(c.colors == 3);
  CHECK(c.delta == 0.1);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"depth_typo":3})")), Error);
  CHECK(config_from_json(Json::parse(R"({"generator":"point"})")).params.empty());
  CHECK(config_from_json(Json::parse(R"({"generator":"cantor"})")).params.at("depth") == 9);
  const auto back = config_from_json(config_to_json(c));
  CHECK(config_to_json(back) == config_to_json(c));
  PipelineConfig bad;
  bad.r = 1.5;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = {};
  bad.depth = 0;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = {};
  bad.r = 0.001;
  bad.depth = 10;  // J ln(1/r) > 40
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = {};
  bad.product_mode = "linf";
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("space serialization round-trips") {
  const auto z = make_cantor(4);
  const auto by_descriptor = space_from_json(space_to_json(z));
  CHECK(by_descriptor.table() == z.table());
  CHECK(by_descriptor.ids() == z.ids());
  const auto by_matrix = space_from_json(space_to_json(z, true));
  CHECK(by_matrix.table() == z.table());
  auto j = space_to_json(z);
  j["ids"][0] = "renamed";
  CHECK_THROWS_AS(space_from_json(j), Error);
}

TEST_CASE("sequence serialization round-trips") {
  const auto cfg = cantor_config();
  const auto z = stage_generate(cfg);
  PropertyReport rep;
  const auto seq = stage_sequence(z, cfg, &rep);
  const auto back = charseq_from_json(charseq_to_json(seq, &rep));
  CHECK(back.ladder.r == seq.ladder.r);
  CHECK(back.delta == seq.delta);
  CHECK(back.gamma == seq.gamma);
  CHECK(back.lambda == seq.lambda);
  REQUIRE(back.ladder.depth() == seq.ladder.depth());
  for (std::size_t j = 1; j <= seq.ladder.depth(); ++j)
    for (std::size_t a = 0; a < 2; ++a) CHECK(back.ladder.members(j, a) == seq.ladder.members(j, a));
  CHECK(verify_char_seq(z, back).passed);
}

TEST_CASE("pipeline on the Cantor set passes and writes the bundle") {
  auto cfg = cantor_config();
  const auto dir = scratch("bundle");
  cfg.output_dir = dir.string();
  cfg.write_pairs = true;
  const auto res = run_pipeline(cfg);
  CHECK(res.passed);
  CHECK(res.qi.radial_failures == 0);
  CHECK(res.qi.product.violations == 0);
  CHECK(res.qi.lower_direction.lambda == res.qi.product.lambda);
  for (const auto& t : res.trees) {
    CHECK(t.audit.ok());
    CHECK(t.delta_hyperbolicity == 0.0);
  }
  for (const char* f : {"config.json", "space.json", "charseq.json", "tree_0.json", "tree_1.json", "embedding.csv",
                        "qireport.json", "pairs.csv", "log.txt"})
    CHECK(fs::exists(dir / f));
  CHECK(slurp(dir / "log.txt").find("result: PASS") != std::string::npos);

  std::ifstream csv(dir / "embedding.csv");
  const auto table = read_embedding_csv(csv);
  REQUIRE(table.size() == res.grid->size());
  for (std::size_t x = 0; x < table.size(); ++x)
    for (std::size_t a = 0; a < 2; ++a) CHECK(table[x][a] == res.embedding->image(x, a));

  const auto q = read_json_file((dir / "qireport.json").string());
  CHECK(q["product_mode"] == "l1");
  fs::remove_all(dir);
}

TEST_CASE("identical configs give byte-identical bundles") {
  auto a = cantor_config();
  auto b = cantor_config();
  const auto da = scratch("det_a"), db = scratch("det_b");
  a.output_dir = da.string();
  b.output_dir = db.string();
  run_pipeline(a);
  run_pipeline(b);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(da)) {
    ++files;
    CHECK_MESSAGE(slurp(e.path()) == slurp(db / e.path().filename()), e.path().filename().string());
  }
  CHECK(files >= 7);
  fs::remove_all(da);
  fs::remove_all(db);
}

TEST_CASE("a corrupted sequence is caught before tree construction") {
  const auto cfg = cantor_config();
  const auto z = stage_generate(cfg);
  auto seq = stage_sequence(z, cfg, nullptr);
  // Merge a far point into a level-2 member: breaks the mesh and nesting.
  auto& fam = seq.ladder.levels[1].colors[0];
  fam[0] = set_union(fam[0], Subset{static_cast<PointIndex>(z.size() - 1)});
  std::vector<RootedTree> trees;
  try {
    stage_trees(z, seq, &trees);
    FAIL("corruption was not detected");
  } catch (const StageError& e) {
    CHECK(e.stage() == "build_tree");
  }
}

TEST_CASE("standing assumptions gate the separation stage") {
  PipelineConfig cfg;
  cfg.generator = "point";
  cfg.params = {};
  cfg.r = 0.5;
  cfg.depth = 3;
  try {
    run_pipeline(cfg);
    FAIL("gate did not fire");
  } catch (const StageError& e) {
    CHECK(e.stage() == "separate");
    CHECK(std::string(e.what()).find("standing assumption") != std::string::npos);
  }
  cfg.enforce_standing_assumptions = false;
  const auto res = run_pipeline(cfg);
  CHECK(res.passed);
  CHECK(res.qi.product.sigma == 0.0);
}

TEST_CASE("the flagship circle stops at the sampling limit") {
  PipelineConfig cfg;  // circle N = 512, r = 1/8, J = 4
  try {
    run_pipeline(cfg);
    FAIL("expected a stage error");
  } catch (const StageError& e) {
    CHECK(e.stage() == "build_base");
    CHECK(std::string(e.what()).find("level 3") != std::string::npos);
  }
}
