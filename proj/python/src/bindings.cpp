// Copyright 2026 The hotelling Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hotelling/cost.hpp"
#include "hotelling/density.hpp"
#include "hotelling/efficiency.hpp"
#include "hotelling/equilibrium.hpp"
#include "hotelling/error.hpp"
#include "hotelling/game.hpp"
#include "hotelling/oracle.hpp"

namespace py = pybind11;

namespace hotelling {
namespace {

py::tuple AsTuple(const LocationProfile& p) { return py::make_tuple(p.x1, p.x2); }

py::dict ReportToDict(const EquilibriumReport& r, int samples) {
  py::dict out;
  out["regime"] = std::string(RegimeName(r.regime));
  out["kappa"] = r.kappa;
  out["delta"] = r.delta;
  out["boundary_case"] = r.boundary_case;
  py::list points;
  for (const auto& p : r.point_equilibria) points.append(AsTuple(p));
  out["equilibria"] = points;
  if (!r.continuum) {
    out["continuum"] = py::none();
  } else if (const auto* line = std::get_if<ShiftContinuum>(&*r.continuum)) {
    py::dict c;
    c["form"] = std::string(ContinuumForm(*r.continuum));
    c["m_min"] = -line->half_range;
    c["m_max"] = line->half_range;
    c["delta"] = line->delta;
    out["continuum"] = c;
  } else {
    const auto& box = std::get<GapBoxContinuum>(*r.continuum);
    py::dict c;
    c["form"] = std::string(ContinuumForm(*r.continuum));
    c["lo"] = box.lo;
    c["hi"] = box.hi;
    c["min_gap"] = box.min_gap;
    out["continuum"] = c;
  }
  if (samples > 0) {
    py::list s;
    for (const auto& p : r.SampleContinuum(samples)) s.append(AsTuple(p));
    out["samples"] = s;
  }
  return out;
}

}  // namespace
}  // namespace hotelling

PYBIND11_MODULE(_core, m) {
  using namespace hotelling;
  m.doc() = "Two-firm location game with unit-demand consumers";

  static py::exception<Error> exc(m, "HotellingError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      exc(("[" + std::string(ErrorCodeName(e.code())) + "] " + e.what()).c_str());
    }
  });

  py::class_<Density>(m, "Density")
      .def_static("normal", &Density::Normal, py::arg("sigma") = 1.0)
      .def_static("laplace", &Density::Laplace, py::arg("beta") = 1.0)
      .def_static("logistic", &Density::Logistic, py::arg("scale") = 1.0)
      .def_static("uniform", &Density::Uniform, py::arg("half_width") = 1.0)
      .def_static("tabulated", &Density::Tabulated, py::arg("x"),
                  py::arg("log_density"))
      .def_static("load", &LoadTabulatedDensity, py::arg("path"))
      .def("pdf", &Density::Pdf)
      .def("cdf", &Density::Cdf)
      .def("mass", &Density::Mass)
      .def_property_readonly("support_bound", &Density::support_bound)
      .def("__repr__", &Density::Describe);

  py::class_<CostFunction>(m, "Cost")
      .def_static("linear", &CostFunction::Linear, py::arg("rate") = 1.0)
      .def_static("quadratic", &CostFunction::Quadratic, py::arg("rate") = 1.0)
      .def_static("tabulated", &CostFunction::Tabulated, py::arg("distance"),
                  py::arg("cost"))
      .def("__call__", &CostFunction::operator())
      .def("__repr__", &CostFunction::Describe);

  m.def("kappa", &Kappa, py::arg("density"));
  m.def("alpha", &Alpha, py::arg("density"), py::arg("delta"));
  m.def(
      "reach",
      [](const CostFunction& c, double v, double p) {
        return Reach(c, {v, p});
      },
      py::arg("cost"), py::arg("v"), py::arg("p"));
  m.def(
      "payoff",
      [](const Density& d, double delta, double x1, double x2) {
        const GameConfig g(d, delta);
        return py::make_tuple(Payoff(g, {x1, x2}, Firm::kFirst),
                              Payoff(g, {x1, x2}, Firm::kSecond));
      },
      py::arg("density"), py::arg("delta"), py::arg("x1"), py::arg("x2"));
  m.def(
      "solve",
      [](const Density& d, double delta, int samples) {
        return ReportToDict(Solve(GameConfig(d, delta)), samples);
      },
      py::arg("density"), py::arg("delta"), py::arg("samples") = 0);
  m.def(
      "best_response",
      [](const Density& d, double delta, double opponent, int grid) {
        OracleConfig cfg;
        cfg.grid_points = grid;
        return BestResponse(GameConfig(d, delta), opponent, cfg).location;
      },
      py::arg("density"), py::arg("delta"), py::arg("opponent"),
      py::arg("grid") = 4001);
  m.def(
      "is_epsilon_nash",
      [](const Density& d, double delta, double x1, double x2, int grid) {
        OracleConfig cfg;
        cfg.grid_points = grid;
        return IsEpsilonNash(GameConfig(d, delta), {x1, x2}, cfg).ok;
      },
      py::arg("density"), py::arg("delta"), py::arg("x1"), py::arg("x2"),
      py::arg("grid") = 4001);
  m.def(
      "consumer_surplus",
      [](const Density& d, double x1, double x2, const CostFunction& c,
         double v, double p) {
        const MarketParams market{v, p};
        const GameConfig g(d, Reach(c, market));
        return ConsumerSurplus(g, {x1, x2}, c, market).cs;
      },
      py::arg("density"), py::arg("x1"), py::arg("x2"), py::arg("cost"),
      py::arg("v"), py::arg("p"));
  m.def(
      "figure1",
      [](const Density& d, const CostFunction& c, std::vector<double> deltas) {
        py::list rows;
        for (const auto& r : Figure1Curve(d, c, deltas)) {
          rows.append(
              py::make_tuple(r.delta, r.eq_ratio, r.profit_ratio, r.cs_ratio));
        }
        return rows;
      },
      py::arg("density"), py::arg("cost"), py::arg("deltas"));
}
