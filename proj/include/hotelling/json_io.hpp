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

// JSON documents for solver results, shared by the CLI and the tests.

#ifndef HOTELLING_JSON_IO_HPP_
#define HOTELLING_JSON_IO_HPP_

#include "json.hpp"

#include "hotelling/density.hpp"
#include "hotelling/efficiency.hpp"
#include "hotelling/equilibrium.hpp"
#include "hotelling/oracle.hpp"

namespace hotelling {

// Non-finite numbers (an unbounded delta) become the string "inf".
nlohmann::json Number(double value);

nlohmann::json ToJson(const LocationProfile& profile);

// {regime, kappa, delta, boundary_case, equilibria: [[x1, x2], ...],
//  continuum: null | {form, params}, samples: [...] when sample_count > 0}
nlohmann::json ToJson(const EquilibriumReport& report, int sample_count = 0);

// {profile: [x1, x2], ok, worst_deviation: {firm, location, gain}, epsilon}
nlohmann::json ToJson(const NashCheck& check);

nlohmann::json ToJson(const BestResponseResult& result);
nlohmann::json ToJson(const ScanResult& scan);
nlohmann::json ToJson(const ValidationReport& report);
nlohmann::json ToJson(const SurplusOptimum& optimum);
nlohmann::json ToJson(const ProfitOptimum& optimum);

// Reads [x1, x2] back.
LocationProfile ProfileFromJson(const nlohmann::json& value);

}  // namespace hotelling

#endif  // HOTELLING_JSON_IO_HPP_
