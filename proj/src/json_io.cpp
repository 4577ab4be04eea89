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

#include "hotelling/json_io.hpp"

#include <cmath>

#include "hotelling/error.hpp"

namespace hotelling {

using nlohmann::json;

json Number(double value) {
  if (std::isfinite(value)) return value;
  return value > 0 ? "inf" : "-inf";
}

json ToJson(const LocationProfile& profile) {
  return json::array({profile.x1, profile.x2});
}

json ToJson(const EquilibriumReport& report, int sample_count) {
  json out;
  out["regime"] = std::string(RegimeName(report.regime));
  out["kappa"] = Number(report.kappa);
  out["delta"] = Number(report.delta);
  out["boundary_case"] = report.boundary_case;
  out["equilibria"] = json::array();
  for (const auto& p : report.point_equilibria) {
    out["equilibria"].push_back(ToJson(p));
  }
  if (!report.continuum) {
    out["continuum"] = nullptr;
  } else if (const auto* line = std::get_if<ShiftContinuum>(&*report.continuum)) {
    out["continuum"] = {
        {"form", std::string(ContinuumForm(*report.continuum))},
        {"params",
         {{"m_min", -line->half_range},
          {"m_max", line->half_range},
          {"delta", line->delta}}}};
  } else {
    const auto& box = std::get<GapBoxContinuum>(*report.continuum);
    out["continuum"] = {
        {"form", std::string(ContinuumForm(*report.continuum))},
        {"params", {{"lo", box.lo}, {"hi", box.hi}, {"min_gap", box.min_gap}}}};
  }
  if (sample_count > 0) {
    out["samples"] = json::array();
    for (const auto& p : report.SampleContinuum(sample_count)) {
      out["samples"].push_back(ToJson(p));
    }
  }
  return out;
}

json ToJson(const NashCheck& check) {
  return {{"profile", ToJson(check.profile)},
          {"ok", check.ok},
          {"worst_deviation",
           {{"firm", static_cast<int>(check.worst_deviation.firm)},
            {"location", check.worst_deviation.location},
            {"gain", check.worst_deviation.gain}}},
          {"epsilon", check.epsilon}};
}

json ToJson(const BestResponseResult& result) {
  return {{"location", result.location},
          {"value", result.value},
          {"argmax", result.argmax},
          {"epsilon", result.epsilon},
          {"spacing", result.spacing}};
}

json ToJson(const ScanResult& scan) {
  json clusters = json::array();
  for (const auto& c : scan.clusters) {
    clusters.push_back({{"cells", c.cells.size()},
                        {"x1", {c.x1_min, c.x1_max}},
                        {"x2", {c.x2_min, c.x2_max}}});
  }
  return {{"spacing", scan.spacing}, {"clusters", clusters}};
}

json ToJson(const ValidationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry = {{"name", c.name},
                  {"status", std::string(CheckStatusName(c.status))},
                  {"worst_residual", c.worst_residual}};
    if (!c.note.empty()) entry["note"] = c.note;
    checks.push_back(entry);
  }
  return {{"ok", report.ok()}, {"checks", checks}};
}

json ToJson(const SurplusOptimum& optimum) {
  return {{"profile", ToJson(optimum.profile)},
          {"cs", optimum.cs},
          {"stationarity_residual", optimum.stationarity_residual},
          {"grid_best", ToJson(optimum.grid_best)},
          {"grid_best_cs", optimum.grid_best_cs},
          {"symmetric_confirmed", optimum.symmetric_confirmed}};
}

json ToJson(const ProfitOptimum& optimum) {
  return {{"profile", ToJson(optimum.profile)},
          {"grid_best", ToJson(optimum.grid_best)},
          {"grid_spacing", optimum.grid_spacing},
          {"grid_confirms", optimum.grid_confirms}};
}

LocationProfile ProfileFromJson(const json& value) {
  if (!value.is_array() || value.size() != 2 || !value[0].is_number() ||
      !value[1].is_number()) {
    throw Error(ErrorCode::kParse, "profile must be a [x1, x2] number pair");
  }
  return {value[0].get<double>(), value[1].get<double>()};
}

}  // namespace hotelling
