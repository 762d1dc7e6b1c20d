#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypembed/cone.hpp"
#include "hypembed/error.hpp"
#include "hypembed/generators.hpp"
#include "hypembed/hyperbolicity.hpp"
#include "hypembed/neighborhood.hpp"
#include "hypembed/pipeline.hpp"
#include "hypembed/profile.hpp"
#include "hypembed/serialization.hpp"

namespace py = pybind11;
using namespace hypembed;

namespace {

Subset to_subset(const std::vector<PointIndex>& pts) { return Subset(pts); }
std::vector<PointIndex> from_subset(const Subset& s) { return {s.begin(), s.end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hyperbolic cone to tree-product embedding toolkit";
  py::register_exception<Error>(m, "HypembedError", PyExc_RuntimeError);

  py::class_<FiniteMetricSpace>(m, "Space")
      .def(py::init([](std::vector<std::string> ids, std::vector<std::vector<double>> rows) {
             std::vector<double> table;
             for (const auto& r : rows) table.insert(table.end(), r.begin(), r.end());
             return FiniteMetricSpace(std::move(ids), std::move(table));
           }),
           py::arg("ids"), py::arg("matrix"))
      .def("__len__", &FiniteMetricSpace::size)
      .def("distance", [](const FiniteMetricSpace& s, PointIndex i, PointIndex j) {
        if (i >= s.size() || j >= s.size()) throw Error("point is not in the space");
        return s(i, j);
      })
      .def_property_readonly("ids", &FiniteMetricSpace::ids)
      .def_property_readonly("diameter", &FiniteMetricSpace::diameter)
      .def("to_json", [](const FiniteMetricSpace& s, bool matrix) { return space_to_json(s, matrix).dump(); },
           py::arg("matrix") = false);

  m.def("generate", &generate, py::arg("name"), py::arg("params") = std::map<std::string, double>{},
        py::arg("seed") = 0, "Build a space by generator name.");
  m.def("space_from_json", [](const std::string& s) { return space_from_json(Json::parse(s)); });
  m.def("visual_metric_circle", &visual_metric_circle, py::arg("n"));

  m.def(
      "neighborhood",
      [](const FiniteMetricSpace& s, const std::vector<PointIndex>& u, double r) {
        return from_subset(neighborhood(s, to_subset(u), r));
      },
      py::arg("space"), py::arg("subset"), py::arg("r"), "Signed open neighborhood B_r(U).");
  m.def(
      "closed_neighborhood",
      [](const FiniteMetricSpace& s, const std::vector<PointIndex>& u, double r) {
        return from_subset(closed_neighborhood(s, to_subset(u), r));
      },
      py::arg("space"), py::arg("subset"), py::arg("r"));

  m.def("hyperbolic_distance", &hyperbolic_distance, py::arg("t"), py::arg("t2"), py::arg("angle"));
  m.def("gromov_product", &gromov_product, py::arg("space"), py::arg("o"), py::arg("x"), py::arg("x2"));
  m.def(
      "delta_hyperbolicity", [](const FiniteMetricSpace& s, PointIndex o) { return delta_hyperbolicity(s, o); },
      py::arg("space"), py::arg("o") = 0);
  m.def(
      "fit_qi",
      [](const std::vector<std::pair<double, double>>& pairs) {
        const auto f = fit_qi(pairs);
        return py::make_tuple(f.lambda, f.sigma);
      },
      py::arg("pairs"), "Fit (Lambda, sigma) to (d_source, d_target) pairs.");

  m.def(
      "capacity_profile",
      [](const FiniteMetricSpace& s, std::vector<std::size_t> ms, std::vector<double> taus, double delta,
         std::size_t budget) { return profile_to_json(capacity_profile(s, ms, taus, delta, budget)).dump(); },
      py::arg("space"), py::arg("m_values"), py::arg("taus"), py::arg("delta"), py::arg("budget") = 8);

  m.def(
      "run_pipeline",
      [](const std::string& config_json) {
        const auto cfg = config_from_json(Json::parse(config_json));
        const auto res = run_pipeline(cfg);
        Json out{{"passed", res.passed}, {"failures", res.failures}, {"log", res.log}};
        if (res.verification) out["verification"] = report_to_json(*res.verification);
        if (res.embedding) out["qireport"] = qireport_to_json(res.qi);
        Json trees = Json::array();
        for (const auto& t : res.trees)
          trees.push_back(Json{{"color", t.color},
                               {"vertices", t.vertices},
                               {"audit_ok", t.audit.ok()},
                               {"delta_hyperbolicity", t.delta_hyperbolicity}});
        out["trees"] = trees;
        return out.dump();
      },
      py::arg("config_json"), "Run the pipeline from a JSON config; returns a JSON summary.");
}
