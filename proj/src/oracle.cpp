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

#include "hotelling/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "hotelling/error.hpp"
#include "hotelling/numerics.hpp"

namespace hotelling {
namespace {

constexpr double kScanTieTolerance = 1e-9;
// Refined candidates must beat the incumbent by more than rounding noise, so
// a plateau never drags the answer off an exact grid point.
constexpr double kRefineGain = 1e-14;

struct Candidate {
  double location;
  double value;
};

// Strictly better payoff, or an equal payoff at a smaller location.
bool Improves(const Candidate& c, const Candidate& best) {
  return c.value > best.value ||
         (c.value == best.value && c.location < best.location);
}

}  // namespace

OracleGrid MakeOracleGrid(const GameConfig& game, int grid_points) {
  if (game.unbounded()) {
    throw Error(ErrorCode::kInvalidArgument,
                "oracle needs a finite delta");
  }
  if (grid_points < kMinOracleGridPoints) {
    throw Error(ErrorCode::kInvalidArgument,
                "oracle grid needs at least " +
                    std::to_string(kMinOracleGridPoints) + " points");
  }
  const double delta = game.delta();
  const double half =
      std::max(2.0 * delta, game.density().support_bound()) + delta;
  OracleGrid grid{half, 2.0 * half / (grid_points - 1), {}};
  grid.points.resize(static_cast<std::size_t>(grid_points));
  const double denom = grid_points - 1;
  for (int k = 0; k < grid_points; ++k) {
    // Antisymmetric by construction: points[k] == -points[n - 1 - k].
    grid.points[k] = half * ((2.0 * k - denom) / denom);
  }
  return grid;
}

double OracleEpsilon(const GameConfig& game, const OracleGrid& grid,
                     const OracleConfig& config) {
  if (config.epsilon) return *config.epsilon;
  const double bracket =
      grid.spacing * numerics::GoldenBracketFraction(config.golden_iterations);
  return 1e-6 + 2.0 * game.density().Pdf(0.0) * bracket;
}

namespace {

// Best of the grid maximizer, the opponent's own location and golden-section
// refinements of both cells around grid index `top`.
Candidate RefineBestResponse(const GameConfig& game, double opponent,
                             const std::vector<double>& x, std::size_t top,
                             double top_value, int iterations) {
  Candidate best{x[top], top_value};
  const Candidate joined{opponent, PayoffAgainst(game, opponent, opponent)};
  if (Improves(joined, best)) best = joined;

  // The payoff jumps where the responder meets the opponent, so split there.
  auto payoff = [&](double own) { return PayoffAgainst(game, own, opponent); };
  auto refine = [&](double lo, double hi) {
    if (!(hi > lo)) return;
    const auto r = numerics::GoldenSectionMax(payoff, lo, hi, iterations);
    if (r.value > best.value + kRefineGain) best = {r.location, r.value};
  };
  auto refine_split = [&](double lo, double hi) {
    if (opponent > lo && opponent < hi) {
      refine(lo, opponent);
      refine(opponent, hi);
    } else {
      refine(lo, hi);
    }
  };
  if (top > 0) refine_split(x[top - 1], x[top]);
  if (top + 1 < x.size()) refine_split(x[top], x[top + 1]);
  return best;
}

}  // namespace

BestResponseResult BestResponse(const GameConfig& game, double opponent,
                                const OracleConfig& config) {
  const OracleGrid grid = MakeOracleGrid(game, config.grid_points);
  const auto& x = grid.points;
  const std::size_t n = x.size();
  std::vector<double> values(n);
  std::size_t top = 0;
  for (std::size_t k = 0; k < n; ++k) {
    values[k] = PayoffAgainst(game, x[k], opponent);
    if (values[k] > values[top]) top = k;
  }
  const Candidate best = RefineBestResponse(game, opponent, x, top, values[top],
                                            config.golden_iterations);

  BestResponseResult result{best.location, best.value, {},
                            OracleEpsilon(game, grid, config), grid.spacing};
  for (std::size_t k = 0; k < n; ++k) {
    if (values[k] >= best.value - result.epsilon) result.argmax.push_back(x[k]);
  }
  result.argmax.push_back(best.location);
  std::sort(result.argmax.begin(), result.argmax.end());
  result.argmax.erase(std::unique(result.argmax.begin(), result.argmax.end()),
                      result.argmax.end());
  return result;
}

NashCheck IsEpsilonNash(const GameConfig& game, const LocationProfile& profile,
                        const OracleConfig& config) {
  const auto first = BestResponse(game, profile.x2, config);
  const auto second = BestResponse(game, profile.x1, config);
  const Deviation d1{Firm::kFirst, first.location,
                     first.value - Payoff(game, profile, Firm::kFirst)};
  const Deviation d2{Firm::kSecond, second.location,
                     second.value - Payoff(game, profile, Firm::kSecond)};
  const Deviation worst = d1.gain >= d2.gain ? d1 : d2;
  return {profile, worst.gain <= first.epsilon, worst, first.epsilon};
}

ScanResult EquilibriumScan(const GameConfig& game, const OracleConfig& config) {
  if (config.grid_points > kMaxScanGridPoints) {
    throw Error(ErrorCode::kBudgetExceeded,
                "pairwise scan is capped at " +
                    std::to_string(kMaxScanGridPoints) + " grid points");
  }
  const OracleGrid grid = MakeOracleGrid(game, config.grid_points);
  const auto& x = grid.points;
  const std::size_t n = x.size();

  // near[i * n + j]: location j answers an opponent at location i. Either it
  // ties the grid maximum, or it lies within one grid step of the refined best
  // response and loses at most one Lipschitz step of payoff. The payoff slope
  // is bounded by f(0) away from the jump at the opponent, so the payoff
  // condition only removes cells on the wrong side of that jump.
  const double h = grid.spacing;
  const double reach = h * (1.0 + 1e-9);
  const double slack = 1e-6 + game.density().Pdf(0.0) * h;
  std::vector<char> near(n * n, 0);
  std::vector<double> row(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t top = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = PayoffAgainst(game, x[j], x[i]);
      if (row[j] > row[top]) top = j;
    }
    const Candidate best = RefineBestResponse(game, x[i], x, top, row[top],
                                              config.golden_iterations);
    char* near_row = &near[i * n];
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] >= row[top] - kScanTieTolerance ||
          (std::abs(x[j] - best.location) <= reach &&
           row[j] >= best.value - slack)) {
        near_row[j] = 1;
      }
    }
  }

  auto flagged = [&](std::size_t i, std::size_t j) {
    return near[i * n + j] && near[j * n + i];
  };

  ScanResult result{grid.spacing, {}};
  std::vector<char> seen(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[i * n + j] || !flagged(i, j)) continue;
      ScanCluster cluster{{}, x[i], x[i], x[j], x[j]};
      std::deque<std::pair<std::size_t, std::size_t>> queue{{i, j}};
      seen[i * n + j] = 1;
      while (!queue.empty()) {
        const auto [a, b] = queue.front();
        queue.pop_front();
        cluster.cells.push_back({x[a], x[b]});
        cluster.x1_min = std::min(cluster.x1_min, x[a]);
        cluster.x1_max = std::max(cluster.x1_max, x[a]);
        cluster.x2_min = std::min(cluster.x2_min, x[b]);
        cluster.x2_max = std::max(cluster.x2_max, x[b]);
        for (int da = -1; da <= 1; ++da) {
          for (int db = -1; db <= 1; ++db) {
            const auto na = static_cast<std::ptrdiff_t>(a) + da;
            const auto nb = static_cast<std::ptrdiff_t>(b) + db;
            if (na < 0 || nb < 0 || na >= static_cast<std::ptrdiff_t>(n) ||
                nb >= static_cast<std::ptrdiff_t>(n)) {
              continue;
            }
            const auto ua = static_cast<std::size_t>(na);
            const auto ub = static_cast<std::size_t>(nb);
            if (seen[ua * n + ub] || !flagged(ua, ub)) continue;
            seen[ua * n + ub] = 1;
            queue.emplace_back(ua, ub);
          }
        }
      }
      result.clusters.push_back(std::move(cluster));
    }
  }
  return result;
}

}  // namespace hotelling
