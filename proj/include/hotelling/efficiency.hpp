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

// Consumer surplus and aggregate profit benchmarks, their maximisers, and the
// differentiation-ratio sweep comparing them with the equilibrium.

#ifndef HOTELLING_EFFICIENCY_HPP_
#define HOTELLING_EFFICIENCY_HPP_

#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "hotelling/cost.hpp"
#include "hotelling/density.hpp"
#include "hotelling/game.hpp"

namespace hotelling {

inline constexpr double kReachConsistencyTolerance = 1e-9;

struct SurplusReport {
  double cs;
  LocationProfile profile;
  CostFunction cost;
  MarketParams market;
};

// Integral of v - p - c(distance to the chosen firm) over buying consumers.
// Throws kInconsistentReach when Reach(cost, market) differs from the game's
// delta by more than kReachConsistencyTolerance.
SurplusReport ConsumerSurplus(const GameConfig& game,
                              const LocationProfile& profile,
                              const CostFunction& cost,
                              const MarketParams& market,
                              double rel_tol = 1e-9);

// Shorthand returning only the surplus value; skips the reach check.
double SurplusValue(const GameConfig& game, const LocationProfile& profile,
                    const CostFunction& cost, double margin,
                    double rel_tol = 1e-9);

// dCS/dx2 at x1 <= x2, d = x2 - x1:
//   int_0^delta c'(s) f(x2 + s) ds - int_0^{min(d/2, delta)} c'(s) f(x2 - s) ds.
double SurplusSlopeRight(const GameConfig& game, const LocationProfile& profile,
                         const CostFunction& cost);

// Right derivative of CS in x1 for a disjoint profile (|x2 - x1| >= 2 delta):
//   int_0^delta c'(s) [f(x1 + s) - f(x1 - s)] ds.
double DisjointSurplusSlopeLeft(const GameConfig& game, double x1,
                                const CostFunction& cost);

struct SurplusOptimum {
  LocationProfile profile;  // (-x*, x*)
  double cs;
  // d/dx CS(-x, x) at x*, from the analytic slope.
  double stationarity_residual;
  // Coarse asymmetric grid cross-check.
  LocationProfile grid_best;
  double grid_best_cs;
  bool symmetric_confirmed;
};

// Maximises CS over symmetric profiles (-x, x), x in [0, support bound], by a
// dense scan followed by golden-section refinement, then checks no coarse
// asymmetric grid profile beats it.
SurplusOptimum MaximizeSurplus(const GameConfig& game, const CostFunction& cost,
                               const MarketParams& market,
                               double tol = 1e-9);

// Convex increasing production cost gamma with its first two derivatives.
struct ProductionCost {
  std::function<double(double)> value;
  std::function<double(double)> first;
  std::function<double(double)> second;

  // coefficient * x^exponent, exponent >= 1.
  static ProductionCost Power(double coefficient, double exponent);
};

class ProfitParams {
 public:
  // Throws kInvalidArgument unless gamma' >= 0, gamma'' >= 0 on [0, 1] and
  // gamma'(1) < price.
  ProfitParams(ProductionCost gamma, double price);

  const ProductionCost& gamma() const { return gamma_; }
  double price() const { return price_; }

 private:
  ProductionCost gamma_;
  double price_;
};

// p q - gamma(s q) - gamma((1 - s) q). Throws kInvalidShare unless
// s in [0, 1]; q must lie in [0, 1].
double AggregateProfit(const ProfitParams& params, double q_total,
                       double share);

struct ProfitOptimum {
  LocationProfile profile;  // (-delta, delta)
  LocationProfile grid_best;
  double grid_spacing;
  bool grid_confirms;
};

ProfitOptimum MaximizeAggregateProfit(const GameConfig& game);

struct Figure1Row {
  double delta;
  double eq_ratio;
  double profit_ratio;
  double cs_ratio;
};

// Distance between firms over 2 delta at equilibrium, at the aggregate profit
// optimum and at the consumer surplus optimum, for each delta.
std::vector<Figure1Row> Figure1Curve(const Density& density,
                                     const CostFunction& cost,
                                     std::span<const double> deltas);

// Header `delta,eq_ratio,profit_ratio,cs_ratio`, six decimals.
void WriteFigure1Csv(std::ostream& out, std::span<const Figure1Row> rows);

}  // namespace hotelling

#endif  // HOTELLING_EFFICIENCY_HPP_
