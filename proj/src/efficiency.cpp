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

#include "hotelling/efficiency.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "hotelling/equilibrium.hpp"
#include "hotelling/error.hpp"
#include "hotelling/numerics.hpp"

namespace hotelling {
namespace {

constexpr int kSymmetricScanPoints = 401;
constexpr int kAsymmetricGridPoints = 41;
constexpr int kProfitGridPoints = 121;
constexpr double kSlopeTolerance = 1e-12;

// Integral of (margin - c(|center - t|)) f(t) over [a, b], split at the
// centre (kink of the distance) and clipped to the support bound.
double ServedSurplus(const Density& f, const CostFunction& cost, double margin,
                     double center, double a, double b, double rel_tol) {
  const double bound = f.support_bound();
  a = std::max(a, -bound);
  b = std::min(b, bound);
  if (!(b > a)) return 0.0;
  auto integrand = [&](double t) {
    return (margin - cost(std::abs(center - t))) * f.Pdf(t);
  };
  if (center > a && center < b) {
    return numerics::Integrate(integrand, a, center, rel_tol) +
           numerics::Integrate(integrand, center, b, rel_tol);
  }
  return numerics::Integrate(integrand, a, b, rel_tol);
}

// int_0^upper c'(s) f(base + sign * s) ds
double WeightedDensityIntegral(const Density& f, const CostFunction& cost,
                               double base, double sign, double upper) {
  return numerics::Integrate(
      [&](double s) { return cost.Derivative(s) * f.Pdf(base + sign * s); },
      0.0, upper, kSlopeTolerance);
}

void CheckReach(const GameConfig& game, const CostFunction& cost,
                const MarketParams& market) {
  const double reach = Reach(cost, market);
  const bool consistent =
      game.unbounded() ? std::isinf(reach)
                       : std::abs(reach - game.delta()) <=
                             kReachConsistencyTolerance;
  if (!consistent) {
    throw Error(ErrorCode::kInconsistentReach,
                "reach implied by cost and market does not match delta");
  }
}

}  // namespace

double SurplusValue(const GameConfig& game, const LocationProfile& profile,
                    const CostFunction& cost, double margin, double rel_tol) {
  const Density& f = game.density();
  const double delta = game.delta();
  const LocationProfile p = profile.Canonical();
  if (p.x2 - p.x1 <= 2.0 * delta) {
    const double mid = 0.5 * (p.x1 + p.x2);
    return ServedSurplus(f, cost, margin, p.x1, p.x1 - delta, mid, rel_tol) +
           ServedSurplus(f, cost, margin, p.x2, mid, p.x2 + delta, rel_tol);
  }
  return ServedSurplus(f, cost, margin, p.x1, p.x1 - delta, p.x1 + delta,
                       rel_tol) +
         ServedSurplus(f, cost, margin, p.x2, p.x2 - delta, p.x2 + delta,
                       rel_tol);
}

SurplusReport ConsumerSurplus(const GameConfig& game,
                              const LocationProfile& profile,
                              const CostFunction& cost,
                              const MarketParams& market, double rel_tol) {
  CheckReach(game, cost, market);
  return {SurplusValue(game, profile, cost, market.Margin(), rel_tol),
          profile.Canonical(), cost, market};
}

double SurplusSlopeRight(const GameConfig& game, const LocationProfile& profile,
                         const CostFunction& cost) {
  if (game.unbounded()) {
    throw Error(ErrorCode::kInvalidArgument, "surplus slope needs finite delta");
  }
  const LocationProfile p = profile.Canonical();
  const double delta = game.delta();
  const double inner = std::min(0.5 * (p.x2 - p.x1), delta);
  return WeightedDensityIntegral(game.density(), cost, p.x2, 1.0, delta) -
         WeightedDensityIntegral(game.density(), cost, p.x2, -1.0, inner);
}

double DisjointSurplusSlopeLeft(const GameConfig& game, double x1,
                                const CostFunction& cost) {
  const double delta = game.delta();
  return WeightedDensityIntegral(game.density(), cost, x1, 1.0, delta) -
         WeightedDensityIntegral(game.density(), cost, x1, -1.0, delta);
}

SurplusOptimum MaximizeSurplus(const GameConfig& game, const CostFunction& cost,
                               const MarketParams& market, double tol) {
  CheckReach(game, cost, market);
  if (game.unbounded()) {
    throw Error(ErrorCode::kInvalidArgument,
                "surplus maximisation needs finite delta");
  }
  const double margin = market.Margin();
  auto symmetric = [&](double x) {
    return SurplusValue(game, {-x, x}, cost, margin, tol);
  };

  const double upper = game.density().support_bound();
  const double step = upper / (kSymmetricScanPoints - 1);
  int top = 0;
  double top_value = symmetric(0.0);
  for (int k = 1; k < kSymmetricScanPoints; ++k) {
    const double v = symmetric(k * step);
    if (v > top_value) {
      top = k;
      top_value = v;
    }
  }
  const double lo = std::max(0.0, (top - 1) * step);
  const double hi = std::min(upper, (top + 1) * step);
  auto refined = numerics::GoldenSectionMax(symmetric, lo, hi, 60);
  if (refined.value < top_value) refined = {top * step, top_value};

  // Polish on the analytic slope when it changes sign inside the cell.
  auto slope = [&](double x) {
    return SurplusSlopeRight(game, {-x, x}, cost);
  };
  double x_star = refined.location;
  if (slope(lo) > 0.0 && slope(hi) < 0.0) {
    x_star = numerics::BisectRoot(slope, lo, hi);
  }

  SurplusOptimum out{{-x_star, x_star}, symmetric(x_star), slope(x_star),
                     {}, 0.0, false};

  const double box = std::min(upper, 2.0 * game.delta());
  const double grid_step = 2.0 * box / (kAsymmetricGridPoints - 1);
  out.grid_best_cs = -1.0;
  for (int i = 0; i < kAsymmetricGridPoints; ++i) {
    for (int j = i; j < kAsymmetricGridPoints; ++j) {
      const LocationProfile p{-box + i * grid_step, -box + j * grid_step};
      const double v = SurplusValue(game, p, cost, margin, tol);
      if (v > out.grid_best_cs) {
        out.grid_best_cs = v;
        out.grid_best = p;
      }
    }
  }
  out.symmetric_confirmed =
      out.grid_best_cs <= out.cs + 1e-9 * std::max(1.0, std::abs(out.cs));
  return out;
}

ProductionCost ProductionCost::Power(double coefficient, double exponent) {
  if (!(coefficient > 0.0) || !(exponent >= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "power production cost needs coefficient > 0, exponent >= 1");
  }
  const double c = coefficient;
  const double k = exponent;
  return {[c, k](double x) { return c * std::pow(x, k); },
          [c, k](double x) { return c * k * std::pow(x, k - 1.0); },
          [c, k](double x) {
            return k == 1.0 ? 0.0 : c * k * (k - 1.0) * std::pow(x, k - 2.0);
          }};
}

ProfitParams::ProfitParams(ProductionCost gamma, double price)
    : gamma_(std::move(gamma)), price_(price) {
  if (!(price > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "price must be positive");
  }
  for (int k = 0; k <= 100; ++k) {
    const double x = k / 100.0;
    if (gamma_.first(x) < 0.0 || gamma_.second(x) < 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "production cost must be increasing and convex on [0, 1]");
    }
  }
  if (!(gamma_.first(1.0) < price)) {
    throw Error(ErrorCode::kInvalidArgument,
                "production cost needs gamma'(1) < price");
  }
}

double AggregateProfit(const ProfitParams& params, double q_total,
                       double share) {
  if (!(share >= 0.0 && share <= 1.0)) {
    throw Error(ErrorCode::kInvalidShare, "production share must be in [0, 1]");
  }
  if (!(q_total >= 0.0 && q_total <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "total output must be in [0, 1]");
  }
  const auto& gamma = params.gamma().value;
  return params.price() * q_total - gamma(share * q_total) -
         gamma((1.0 - share) * q_total);
}

ProfitOptimum MaximizeAggregateProfit(const GameConfig& game) {
  if (game.unbounded()) {
    throw Error(ErrorCode::kInvalidArgument,
                "profit maximisation needs finite delta");
  }
  const double delta = game.delta();
  const double half = 3.0 * delta;
  const double step = 2.0 * half / (kProfitGridPoints - 1);
  ProfitOptimum out{{-delta, delta}, {}, step, false};
  double best = -1.0;
  for (int i = 0; i < kProfitGridPoints; ++i) {
    for (int j = i; j < kProfitGridPoints; ++j) {
      const LocationProfile p{-half + i * step, -half + j * step};
      const double v = TotalCoverage(game, p);
      if (v > best) {
        best = v;
        out.grid_best = p;
      }
    }
  }
  out.grid_confirms =
      std::max(std::abs(out.grid_best.x1 + delta),
               std::abs(out.grid_best.x2 - delta)) <= step;
  return out;
}

std::vector<Figure1Row> Figure1Curve(const Density& density,
                                     const CostFunction& cost,
                                     std::span<const double> deltas) {
  std::vector<Figure1Row> rows;
  rows.reserve(deltas.size());
  for (const double delta : deltas) {
    const GameConfig game(density, delta);
    const EquilibriumReport eq = Solve(game);
    const LocationProfile& sym = eq.point_equilibria.front();
    const ProfitOptimum profit = MaximizeAggregateProfit(game);
    // Any (v, p) with v - p = c(delta) reproduces this delta.
    const MarketParams market{1.0 + cost(delta), 1.0};
    const SurplusOptimum cs = MaximizeSurplus(game, cost, market);
    const double span = 2.0 * delta;
    rows.push_back({delta, (sym.x2 - sym.x1) / span,
                    (profit.profile.x2 - profit.profile.x1) / span,
                    (cs.profile.x2 - cs.profile.x1) / span});
  }
  return rows;
}

void WriteFigure1Csv(std::ostream& out, std::span<const Figure1Row> rows) {
  out << "delta,eq_ratio,profit_ratio,cs_ratio\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.6f,%.6f\n", r.delta,
                  r.eq_ratio, r.profit_ratio, r.cs_ratio);
    out << buf;
  }
}

}  // namespace hotelling
