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

// Brute-force verification of equilibrium claims: grid best responses with
// golden-section refinement, epsilon-Nash certification and an exhaustive
// pairwise grid scan for mutual best responses.

#ifndef HOTELLING_ORACLE_HPP_
#define HOTELLING_ORACLE_HPP_

#include <optional>
#include <vector>

#include "hotelling/game.hpp"

namespace hotelling {

struct OracleConfig {
  int grid_points = 4001;
  // Payoff tolerance; derived from the density and refinement width when
  // unset (see OracleEpsilon).
  std::optional<double> epsilon;
  int golden_iterations = 60;
};

inline constexpr int kMinOracleGridPoints = 101;
inline constexpr int kMaxScanGridPoints = 2001;

// Evenly spaced candidate locations on [-L, L] with
// L = max(2 delta, support bound) + delta. Always symmetric about 0.
struct OracleGrid {
  double half_width;
  double spacing;
  std::vector<double> points;
};

OracleGrid MakeOracleGrid(const GameConfig& game, int grid_points);

// 1e-6 + 2 f(0) * w, where w is the width of the bracket left after
// golden-section refinement of one grid cell: the payoff can move by at most
// max-density times that width inside the final bracket.
double OracleEpsilon(const GameConfig& game, const OracleGrid& grid,
                     const OracleConfig& config);

struct BestResponseResult {
  // Refined maximiser (golden-section) and its payoff.
  double location;
  double value;
  // Sorted grid maximisers within epsilon of `value`, plus `location`.
  std::vector<double> argmax;
  double epsilon;
  double spacing;
};

BestResponseResult BestResponse(const GameConfig& game, double opponent,
                                const OracleConfig& config = {});

struct Deviation {
  Firm firm;
  double location;
  double gain;
};

struct NashCheck {
  LocationProfile profile;
  bool ok;
  Deviation worst_deviation;
  double epsilon;
};

NashCheck IsEpsilonNash(const GameConfig& game, const LocationProfile& profile,
                        const OracleConfig& config = {});

struct ScanCluster {
  std::vector<LocationProfile> cells;
  double x1_min;
  double x1_max;
  double x2_min;
  double x2_max;
};

struct ScanResult {
  double spacing;
  std::vector<ScanCluster> clusters;
};

// Grid cells (x1, x2) where each coordinate is within one grid step of a grid
// best response to the other, grouped into 8-connected components. Throws
// kBudgetExceeded above kMaxScanGridPoints.
ScanResult EquilibriumScan(const GameConfig& game, const OracleConfig& config);

}  // namespace hotelling

#endif  // HOTELLING_ORACLE_HPP_
