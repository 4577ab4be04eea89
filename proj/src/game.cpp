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

#include "hotelling/game.hpp"

#include <cmath>

#include "hotelling/cost.hpp"
#include "hotelling/error.hpp"

namespace hotelling {

GameConfig::GameConfig(Density density, double delta)
    : density_(std::move(density)), delta_(delta) {
  if (!(delta > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "delta must be positive");
  }
}

bool GameConfig::unbounded() const { return std::isinf(delta_); }

AttractionZone PotentialAttractionZone(const GameConfig& game,
                                       double location) {
  return {location, location - game.delta(), location + game.delta()};
}

std::string_view DifferentiationName(Differentiation d) {
  switch (d) {
    case Differentiation::kNone:
      return "none";
    case Differentiation::kPartial:
      return "partial";
    case Differentiation::kFull:
      return "full";
  }
  return "unknown";
}

double WindowMass(const GameConfig& game, double location) {
  return game.density().Mass(location - game.delta(),
                             location + game.delta());
}

double PayoffAgainst(const GameConfig& game, double own, double opponent) {
  const Density& f = game.density();
  const double delta = game.delta();
  if (own == opponent) return 0.5 * WindowMass(game, own);
  const double mid = 0.5 * (own + opponent);
  // Consumers strictly on the own side of the midpoint and within reach.
  if (own > opponent) {
    return f.Mass(std::max(own - delta, mid), own + delta);
  }
  return f.Mass(own - delta, std::min(own + delta, mid));
}

double Payoff(const GameConfig& game, const LocationProfile& profile,
              Firm firm) {
  return firm == Firm::kFirst ? PayoffAgainst(game, profile.x1, profile.x2)
                              : PayoffAgainst(game, profile.x2, profile.x1);
}

double TotalCoverage(const GameConfig& game, const LocationProfile& profile) {
  return PayoffAgainst(game, profile.x1, profile.x2) +
         PayoffAgainst(game, profile.x2, profile.x1);
}

Differentiation ClassifyProfile(const GameConfig& game,
                                const LocationProfile& profile) {
  if (profile.x1 == profile.x2) return Differentiation::kNone;
  if (std::abs(profile.x2 - profile.x1) >= 2.0 * game.delta()) {
    return Differentiation::kFull;
  }
  return Differentiation::kPartial;
}

}  // namespace hotelling
