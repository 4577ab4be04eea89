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

#include "hotelling/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hotelling/error.hpp"
#include "hotelling/numerics.hpp"

namespace hotelling {
namespace {

// Slack on the log-scale comparison in the definition of alpha, so that
// equality cases (Laplace at delta = kappa / 2) are not lost to rounding.
constexpr double kAlphaSlack = 1e-12;

double MaxNorm(const LocationProfile& a, const LocationProfile& b) {
  return std::max(std::abs(a.x1 - b.x1), std::abs(a.x2 - b.x2));
}

}  // namespace

std::string_view RegimeName(Regime regime) {
  switch (regime) {
    case Regime::kNoDifferentiation:
      return "none";
    case Regime::kPartialDifferentiation:
      return "partial";
    case Regime::kFullDifferentiation:
      return "full";
  }
  return "unknown";
}

double Kappa(const Density& density) {
  if (const auto* u = std::get_if<UniformKind>(&density.kind())) {
    return u->half_width;
  }
  const double log_f0 = density.LogPdf(0.0);
  if (!std::isfinite(log_f0)) {
    throw Error(ErrorCode::kDegenerateDensity, "kappa: f(0) = 0");
  }
  if (const auto* t = std::get_if<TabulatedKind>(&density.kind())) {
    // inf{t >= 0 : f(0) / 2 > f(t)} tolerates flat segments.
    auto below_half = [&](double s) {
      return density.LogPdf(s) < log_f0 - std::numbers::ln2;
    };
    const double edge = t->x().back();
    if (!below_half(edge)) return edge;
    return numerics::BisectThreshold(below_half, 0.0, edge);
  }
  auto gap = [&](double s) {
    return density.LogPdf(s) - log_f0 + std::numbers::ln2;
  };
  double hi = density.support_bound();
  while (gap(hi) > 0.0) hi *= 2.0;
  return numerics::BisectRoot(gap, 0.0, hi);
}

double Alpha(const Density& density, double delta) {
  const double kappa = Kappa(density);
  if (!(delta > 0.0) || delta > 0.5 * kappa) {
    throw Error(ErrorCode::kNotApplicable,
                "alpha is defined only for 0 < delta <= kappa / 2");
  }
  auto holds = [&](double t) {
    return density.LogPdf(t) - std::numbers::ln2 <=
           density.LogPdf(t + 2.0 * delta) + kAlphaSlack;
  };
  if (holds(delta)) return delta;
  if (!holds(0.0)) return 0.0;
  // holds() is true then false on [0, delta] (Psi_{2 delta} is increasing).
  double lo = 0.0;
  double hi = delta;
  for (int step = 0; step < numerics::kMaxBisectionSteps &&
                     hi - lo > numerics::kRootTolerance;
       ++step) {
    const double mid = lo + 0.5 * (hi - lo);
    if (holds(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

RegimeBoundaries ComputeRegimeBoundaries(const Density& density) {
  const double kappa = Kappa(density);
  return {kappa, 0.5 * kappa};
}

Regime RegimeFor(double delta, double kappa) {
  if (delta >= kappa) return Regime::kNoDifferentiation;
  if (delta > 0.5 * kappa) return Regime::kPartialDifferentiation;
  return Regime::kFullDifferentiation;
}

std::string_view ContinuumForm(const Continuum& continuum) {
  if (std::holds_alternative<ShiftContinuum>(continuum)) {
    return "(m-delta, m+delta)";
  }
  return "x1 <= x1+2delta <= x2";
}

EquilibriumReport SolveUniform(double half_width, double delta) {
  if (!(half_width > 0.0) || !(delta > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "uniform solve needs positive half width and delta");
  }
  const double kappa = half_width;
  EquilibriumReport report{RegimeFor(delta, kappa), kappa, delta, {}, {}, false};
  report.boundary_case = delta == kappa || delta == 0.5 * kappa;
  switch (report.regime) {
    case Regime::kNoDifferentiation:
      report.point_equilibria = {{0.0, 0.0}};
      break;
    case Regime::kPartialDifferentiation:
      report.point_equilibria = {{delta - kappa, kappa - delta}};
      break;
    case Regime::kFullDifferentiation: {
      report.point_equilibria = {{-delta, delta}};
      GapBoxContinuum box{-kappa + delta, kappa - delta, 2.0 * delta};
      if (box.hi - box.lo - box.min_gap > kDegenerateAlpha) {
        report.continuum = box;
      }
      break;
    }
  }
  return report;
}

EquilibriumReport Solve(const GameConfig& game) {
  const Density& density = game.density();
  const double delta = game.delta();
  if (const auto* u = std::get_if<UniformKind>(&density.kind())) {
    if (game.unbounded()) {
      return {Regime::kNoDifferentiation, u->half_width, delta, {{0.0, 0.0}},
              {}, false};
    }
    return SolveUniform(u->half_width, delta);
  }
  const double kappa = Kappa(density);
  EquilibriumReport report{RegimeFor(delta, kappa), kappa, delta, {}, {}, false};
  report.boundary_case = delta == kappa || delta == 0.5 * kappa;
  switch (report.regime) {
    case Regime::kNoDifferentiation:
      report.point_equilibria = {{0.0, 0.0}};
      break;
    case Regime::kPartialDifferentiation:
      report.point_equilibria = {{delta - kappa, kappa - delta}};
      break;
    case Regime::kFullDifferentiation: {
      report.point_equilibria = {{-delta, delta}};
      const double alpha = Alpha(density, delta);
      if (alpha > kDegenerateAlpha) {
        report.continuum = ShiftContinuum{delta, alpha};
      }
      break;
    }
  }
  return report;
}

std::vector<LocationProfile> EquilibriumReport::SampleContinuum(
    int count) const {
  std::vector<LocationProfile> out;
  if (!continuum || count <= 0) return out;
  if (const auto* line = std::get_if<ShiftContinuum>(&*continuum)) {
    for (int k = 0; k < count; ++k) {
      const double m =
          count == 1 ? 0.0
                     : -line->half_range + 2.0 * line->half_range * k / (count - 1);
      out.push_back({m - line->delta, m + line->delta});
    }
    return out;
  }
  // Triangular lattice over the box, row by row in x1.
  const auto& box = std::get<GapBoxContinuum>(*continuum);
  const double width = box.hi - box.lo - box.min_gap;
  int levels = 1;
  while (levels * (levels + 1) / 2 < count) ++levels;
  const double step = levels > 1 ? width / (levels - 1) : 0.0;
  for (int i = 0; i < levels && static_cast<int>(out.size()) < count; ++i) {
    for (int j = i; j < levels && static_cast<int>(out.size()) < count; ++j) {
      const double x1 = box.lo + i * step;
      const double x2 = std::min(box.hi, x1 + box.min_gap + (j - i) * step);
      out.push_back({x1, x2});
    }
  }
  return out;
}

double EquilibriumReport::DistanceTo(const LocationProfile& profile) const {
  const LocationProfile p = profile.Canonical();
  double best = std::numeric_limits<double>::infinity();
  for (const auto& eq : point_equilibria) best = std::min(best, MaxNorm(p, eq));
  if (!continuum) return best;
  if (const auto* line = std::get_if<ShiftContinuum>(&*continuum)) {
    const double a = p.x1 + line->delta;
    const double b = p.x2 - line->delta;
    const double m = std::clamp(0.5 * (a + b), -line->half_range,
                                line->half_range);
    return std::min(best, std::max(std::abs(a - m), std::abs(b - m)));
  }
  const auto& box = std::get<GapBoxContinuum>(*continuum);
  const double r = std::max({0.0, box.lo - p.x1, p.x2 - box.hi,
                             box.min_gap - box.hi + p.x1,
                             box.min_gap + box.lo - p.x2,
                             0.5 * (box.min_gap - (p.x2 - p.x1))});
  return std::min(best, r);
}

bool EquilibriumReport::Contains(const LocationProfile& profile,
                                 double tol) const {
  return DistanceTo(profile) <= tol;
}

}  // namespace hotelling
