#include "hypembed/serialization.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hypembed/error.hpp"
#include "hypembed/generators.hpp"

namespace hypembed {

namespace {

std::string layout_name(Layout::Kind k) {
  switch (k) {
    case Layout::Kind::cyclic: return "cyclic";
    case Layout::Kind::linear: return "linear";
    case Layout::Kind::hierarchical: return "hierarchical";
    case Layout::Kind::unstructured: break;
  }
  return "unstructured";
}

Layout::Kind layout_kind(const std::string& s) {
  if (s == "cyclic") return Layout::Kind::cyclic;
  if (s == "linear") return Layout::Kind::linear;
  if (s == "hierarchical") return Layout::Kind::hierarchical;
  if (s == "unstructured") return Layout::Kind::unstructured;
  throw Error("unknown layout '" + s + "'");
}

void check_format(const Json& j, const char* kind) {
  if (!j.is_object() || j.value("format", std::string()) != kind)
    throw Error(std::string("document is not a ") + kind + " document");
  if (j.value("version", 0) != kFormatVersion) throw Error(std::string("unsupported ") + kind + " version");
}

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json witness_to_json(const Witness& w) {
  Json j = Json::object();
  if (w.level >= 0) j["level"] = w.level;
  if (w.color >= 0) j["color"] = w.color;
  if (w.member >= 0) j["member"] = w.member;
  if (w.other_level >= 0) {
    j["other_level"] = w.other_level;
    j["other_member"] = w.other_member;
  }
  if (w.point >= 0) j["point"] = w.point;
  if (!w.detail.empty()) j["detail"] = w.detail;
  return j;
}

// JSON has no infinity; write it as null.
Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json pair_to_json(const DistancePair& p) {
  return Json{{"a", p.a}, {"b", p.b}, {"d_source", number(p.source)}, {"d_target", number(p.target)}};
}

Json provenance_to_json(const Provenance& p) {
  return Json{{"strategy", p.strategy},
              {"requested_colors", p.requested_colors},
              {"achieved_colors", p.achieved_colors},
              {"requested_delta", p.requested_delta},
              {"requested_lambda", p.requested_lambda},
              {"achieved_delta", number(p.achieved_delta)},
              {"achieved_lambda", number(p.achieved_lambda)},
              {"padded_members", p.padded_members},
              {"notes", p.notes}};
}

Provenance provenance_from_json(const Json& j) {
  Provenance p;
  p.strategy = j.value("strategy", std::string());
  p.requested_colors = j.value("requested_colors", std::size_t{0});
  p.achieved_colors = j.value("achieved_colors", std::size_t{0});
  p.requested_delta = j.value("requested_delta", 0.0);
  p.requested_lambda = j.value("requested_lambda", 0.0);
  if (j.contains("achieved_delta") && j["achieved_delta"].is_number()) p.achieved_delta = j["achieved_delta"];
  if (j.contains("achieved_lambda") && j["achieved_lambda"].is_number()) p.achieved_lambda = j["achieved_lambda"];
  p.padded_members = j.value("padded_members", std::size_t{0});
  p.notes = j.value("notes", std::vector<std::string>{});
  return p;
}

}  // namespace

Json space_to_json(const FiniteMetricSpace& space, bool force_matrix) {
  Json j{{"format", "space"}, {"version", kFormatVersion}, {"size", space.size()}};
  j["layout"] = {{"kind", layout_name(space.layout().kind)}, {"branching", space.layout().branching}};
  if (space.generator() && !force_matrix) {
    const auto& g = *space.generator();
    Json params = Json::object();
    for (const auto& [k, v] : g.params) params[k] = v;
    j["generator"] = {{"name", g.name}, {"params", params}, {"seed", g.seed}};
    j["ids"] = space.ids();
  } else {
    j["ids"] = space.ids();
    Json rows = Json::array();
    for (std::size_t i = 0; i < space.size(); ++i) {
      auto row = space.row(static_cast<PointIndex>(i));
      rows.push_back(std::vector<double>(row.begin(), row.end()));
    }
    j["matrix"] = std::move(rows);
  }
  return j;
}

FiniteMetricSpace space_from_json(const Json& j) {
  check_format(j, "space");
  if (j.contains("generator")) {
    const auto& g = j["generator"];
    GeneratorDescriptor d;
    d.name = g.at("name").get<std::string>();
    for (const auto& [k, v] : g.at("params").items()) d.params[k] = v.get<double>();
    d.seed = g.value("seed", std::uint64_t{0});
    auto space = regenerate(d);
    if (j.contains("ids") && j["ids"].get<std::vector<std::string>>() != space.ids())
      throw Error("space ids do not match the regenerated space");
    return space;
  }
  auto ids = j.at("ids").get<std::vector<std::string>>();
  const std::size_t n = ids.size();
  const auto& rows = j.at("matrix");
  if (rows.size() != n) throw Error("distance matrix has the wrong number of rows");
  std::vector<double> table;
  table.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw Error("distance matrix row has the wrong length");
    for (const auto& v : row) table.push_back(v.get<double>());
  }
  FiniteMetricSpace space(std::move(ids), std::move(table));
  if (j.contains("layout"))
    space.set_layout({layout_kind(j["layout"].value("kind", std::string("unstructured"))),
                      j["layout"].value("branching", std::size_t{0})});
  return space;
}

Json ladder_to_json(const CoveringLadder& ladder) {
  Json levels = Json::array();
  for (std::size_t jj = 1; jj <= ladder.depth(); ++jj) {
    Json colors = Json::array();
    for (const auto& fam : ladder.level(jj).colors) {
      Json members = Json::array();
      for (const auto& u : fam) members.push_back(std::vector<PointIndex>(u.begin(), u.end()));
      colors.push_back(std::move(members));
    }
    levels.push_back(Json{{"j", jj}, {"scale", ladder.scale(jj)}, {"colors", std::move(colors)}});
  }
  return Json{{"r", ladder.r}, {"color_count", ladder.color_count}, {"levels", std::move(levels)}};
}

CoveringLadder ladder_from_json(const Json& j) {
  CoveringLadder ladder;
  ladder.r = j.at("r").get<double>();
  ladder.color_count = j.at("color_count").get<std::size_t>();
  for (const auto& lvl : j.at("levels")) {
    ColoredCovering c;
    c.scale = lvl.at("scale").get<double>();
    for (const auto& fam : lvl.at("colors")) {
      Family f;
      for (const auto& m : fam) f.emplace_back(m.get<std::vector<PointIndex>>());
      c.colors.push_back(std::move(f));
    }
    if (c.colors.size() != ladder.color_count) throw Error("level has the wrong number of colors");
    ladder.levels.push_back(std::move(c));
  }
  return ladder;
}

Json report_to_json(const PropertyReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back(Json{{"property", c.property},
                          {"passed", c.passed},
                          {"achieved", number(c.achieved)},
                          {"bound", number(c.bound)},
                          {"worst", witness_to_json(c.worst)}});
  const auto& a = report.achieved;
  return Json{{"passed", report.passed},
              {"declared", {{"delta", report.declared_delta}, {"gamma", report.declared_gamma}, {"lambda", report.declared_lambda}}},
              {"achieved",
               {{"delta", number(a.delta)},
                {"gamma", number(a.gamma)},
                {"lambda", number(a.lambda)},
                {"mesh_ratio", number(a.mesh_ratio)},
                {"disjointness", number(a.disjointness)},
                {"inner_ball", number(a.inner_ball)}}},
              {"checks", std::move(checks)},
              {"notes", report.notes}};
}

Json charseq_to_json(const CharSequence& seq, const PropertyReport* report) {
  Json trace = Json::array();
  for (const auto& g : seq.gamma_trace) trace.push_back(Json{{"k", g.k}, {"j", g.j}, {"gamma", g.gamma}});
  Json budget = Json::array();
  for (const auto& b : seq.shrink_budget)
    budget.push_back(Json{{"j", b.j}, {"finite_sum", b.finite_sum}, {"closed_form", b.closed_form}});
  Json j{{"format", "charseq"},
         {"version", kFormatVersion},
         {"delta", seq.delta},
         {"gamma", seq.gamma},
         {"lambda", seq.lambda},
         {"base_delta", seq.base_delta},
         {"base_lambda", seq.base_lambda},
         {"provenance", provenance_to_json(seq.provenance)},
         {"gamma_trace", std::move(trace)},
         {"shrink_budget", std::move(budget)},
         {"ladder", ladder_to_json(seq.ladder)}};
  if (report) j["verification"] = report_to_json(*report);
  return j;
}

CharSequence charseq_from_json(const Json& j) {
  check_format(j, "charseq");
  CharSequence seq;
  seq.delta = j.at("delta").get<double>();
  seq.gamma = j.at("gamma").get<double>();
  seq.lambda = j.at("lambda").get<double>();
  seq.base_delta = j.value("base_delta", seq.delta);
  seq.base_lambda = j.value("base_lambda", seq.lambda);
  if (j.contains("provenance")) seq.provenance = provenance_from_json(j["provenance"]);
  for (const auto& g : j.value("gamma_trace", Json::array()))
    seq.gamma_trace.push_back({g.at("k").get<std::size_t>(), g.at("j").get<std::size_t>(), g.at("gamma").get<double>()});
  for (const auto& b : j.value("shrink_budget", Json::array()))
    seq.shrink_budget.push_back(
        {b.at("j").get<std::size_t>(), b.at("finite_sum").get<double>(), b.at("closed_form").get<double>()});
  seq.ladder = ladder_from_json(j.at("ladder"));
  return seq;
}

Json tree_to_json(const RootedTree& tree) {
  Json verts = Json::array();
  for (VertexId v = 0; v < tree.size(); ++v) {
    const auto& x = tree.vertex(v);
    Json e{{"id", v}, {"level", x.level}, {"color", tree.color()}};
    e["member"] = x.member ? Json(*x.member) : Json(nullptr);
    e["parent"] = x.parent ? Json(*x.parent) : Json(nullptr);
    e["children"] = x.children;
    verts.push_back(std::move(e));
  }
  return Json{{"format", "tree"}, {"version", kFormatVersion}, {"color", tree.color()}, {"vertices", std::move(verts)}};
}

Json qireport_to_json(const QIReport& report) {
  const auto& p = report.product;
  Json trees = Json::array();
  for (std::size_t a = 0; a < report.per_tree_upper.size(); ++a) {
    const auto& u = report.per_tree_upper[a];
    trees.push_back(Json{{"color", a}, {"Lambda", u.lambda}, {"sigma", u.sigma}, {"worst", pair_to_json(u.worst)}});
  }
  Json profile = Json::array();
  for (const auto& [l, sg] : report.sigma_profile) profile.push_back(Json{{"Lambda", l}, {"sigma", sg}});
  return Json{{"format", "qireport"},
              {"version", kFormatVersion},
              {"pair_count", report.pair_count},
              {"product_mode", report.product_mode},
              {"Lambda", p.lambda},
              {"sigma", p.sigma},
              {"post_check_violations", p.violations},
              {"worst_upper", pair_to_json(p.worst_upper)},
              {"worst_lower", pair_to_json(p.worst_lower)},
              {"sigma_profile", std::move(profile)},
              {"per_tree_upper", std::move(trees)},
              {"lower_direction",
               {{"Lambda", report.lower_direction.lambda}, {"sigma", report.lower_direction.sigma}}},
              {"radial", {{"checks", report.radial_checks}, {"failures", report.radial_failures}}},
              {"notes", report.notes}};
}

Json profile_to_json(const CapacityProfile& profile) {
  Json entries = Json::array();
  for (const auto& e : profile.entries)
    entries.push_back(Json{{"tau", e.tau},
                           {"m", e.m},
                           {"colors", e.m + 1},
                           {"capacity", e.capacity},
                           {"mesh", e.mesh},
                           {"candidates", e.candidates},
                           {"strategy", e.strategy}});
  return Json{{"format", "capacity_profile"},
              {"version", kFormatVersion},
              {"delta", profile.delta},
              {"budget", profile.budget},
              {"caveat", profile.caveat},
              {"entries", std::move(entries)}};
}

void write_embedding_csv(std::ostream& os, const ConeGrid& grid, const ProductEmbedding& embedding) {
  os << kEmbeddingCsvHeader << '\n' << "index,level,point,t";
  for (std::size_t a = 0; a < embedding.color_count(); ++a) os << ",f_" << a;
  os << '\n';
  for (std::size_t x = 0; x < grid.size(); ++x) {
    const auto p = grid.point(x);
    os << x << ',' << grid.level(x) << ',' << (x == 0 ? std::string("o") : grid.space().id(p.z)) << ',' << shortest(p.t);
    for (std::size_t a = 0; a < embedding.color_count(); ++a) os << ',' << embedding.image(x, a);
    os << '\n';
  }
}

std::vector<std::vector<VertexId>> read_embedding_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kEmbeddingCsvHeader) throw Error("not a version 1 embedding csv");
  if (!std::getline(is, line)) throw Error("embedding csv has no column header");
  std::size_t colors = 0;
  {
    std::istringstream hs(line);
    std::string cell;
    std::size_t col = 0;
    while (std::getline(hs, cell, ',')) {
      if (col >= 4) {
        if (cell != "f_" + std::to_string(colors)) throw Error("unexpected embedding column '" + cell + "'");
        ++colors;
      }
      ++col;
    }
  }
  std::vector<std::vector<VertexId>> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() != 4 + colors) throw Error("embedding row has the wrong number of cells");
    if (std::stoull(cells[0]) != rows.size()) throw Error("embedding rows are out of order");
    std::vector<VertexId> row;
    for (std::size_t a = 0; a < colors; ++a) row.push_back(static_cast<VertexId>(std::stoul(cells[4 + a])));
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_pairs_csv_header(std::ostream& os) { os << kPairsCsvHeader << '\n' << "a,b,d_source,d_target\n"; }

void write_pairs_csv_row(std::ostream& os, const DistancePair& p) {
  os << p.a << ',' << p.b << ',' << shortest(p.source) << ',' << shortest(p.target) << '\n';
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw Error("failed writing " + path);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace hypembed
