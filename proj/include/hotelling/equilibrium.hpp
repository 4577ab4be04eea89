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

// Closed-form characterisation of the pure-strategy equilibrium set: the
// half-mode distance kappa, the continuum half-width alpha, the regime
// classification by delta / kappa and the full equilibrium set.

#ifndef HOTELLING_EQUILIBRIUM_HPP_
#define HOTELLING_EQUILIBRIUM_HPP_

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "hotelling/density.hpp"
#include "hotelling/game.hpp"

namespace hotelling {

enum class Regime {
  kNoDifferentiation,
  kPartialDifferentiation,
  kFullDifferentiation,
};

// "none", "partial", "full".
std::string_view RegimeName(Regime regime);

// Distance at which the density falls to half its modal value,
// inf{t >= 0 : f(t) < f(0) / 2}. Exact half width for the uniform.
double Kappa(const Density& density);

// max{t in [0, delta] : f(t) / 2 <= f(t + 2 delta)}. Throws kNotApplicable
// when delta > kappa / 2.
double Alpha(const Density& density, double delta);

struct RegimeBoundaries {
  double kappa;
  double kappa_half;
};

RegimeBoundaries ComputeRegimeBoundaries(const Density& density);

// delta >= kappa -> none; kappa/2 < delta < kappa -> partial; else full.
Regime RegimeFor(double delta, double kappa);

// (m - delta, m + delta) for m in [-half_range, half_range].
struct ShiftContinuum {
  double delta;
  double half_range;
};

// lo <= x1, x1 + min_gap <= x2 <= hi (uniform full differentiation).
struct GapBoxContinuum {
  double lo;
  double hi;
  double min_gap;
};

using Continuum = std::variant<ShiftContinuum, GapBoxContinuum>;

struct EquilibriumReport {
  Regime regime;
  double kappa;
  double delta;
  // Canonical x1 <= x2; the permuted profiles are equilibria too.
  std::vector<LocationProfile> point_equilibria;
  std::optional<Continuum> continuum;
  // Set when delta sits exactly on a regime boundary.
  bool boundary_case = false;

  // Up to `count` deterministic members of the continuum, endpoints first
  // covered; empty when there is no continuum.
  std::vector<LocationProfile> SampleContinuum(int count) const;

  // Whether the profile (either ordering) lies within `tol` (max-norm) of
  // the equilibrium set.
  bool Contains(const LocationProfile& profile, double tol) const;

  // Max-norm distance from the canonical profile to the equilibrium set.
  double DistanceTo(const LocationProfile& profile) const;
};

// Threshold below which alpha is treated as zero (continuum degenerates to
// the symmetric point).
inline constexpr double kDegenerateAlpha = 1e-10;

EquilibriumReport Solve(const GameConfig& game);
EquilibriumReport SolveUniform(double half_width, double delta);

std::string_view ContinuumForm(const Continuum& continuum);

}  // namespace hotelling

#endif  // HOTELLING_EQUILIBRIUM_HPP_
