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

// The two-firm location game with unit-demand consumers: payoffs, attraction
// zones and the differentiation class of a location profile.

#ifndef HOTELLING_GAME_HPP_
#define HOTELLING_GAME_HPP_

#include <string_view>

#include "hotelling/density.hpp"

namespace hotelling {

class GameConfig {
 public:
  // `delta` may be kUnboundedReach (perfectly inelastic demand).
  GameConfig(Density density, double delta);

  const Density& density() const { return density_; }
  double delta() const { return delta_; }
  bool unbounded() const;

 private:
  Density density_;
  double delta_;
};

struct LocationProfile {
  double x1;
  double x2;

  // Same profile with x1 <= x2.
  LocationProfile Canonical() const {
    return x1 <= x2 ? *this : LocationProfile{x2, x1};
  }
  friend bool operator==(const LocationProfile&,
                         const LocationProfile&) = default;
};

enum class Firm { kFirst = 1, kSecond = 2 };

struct AttractionZone {
  double center;
  double lo;
  double hi;
};

AttractionZone PotentialAttractionZone(const GameConfig& game, double location);

enum class Differentiation { kNone, kPartial, kFull };

std::string_view DifferentiationName(Differentiation d);

// Share of consumers buying from a firm at `own` when its rival sits at
// `opponent`. Equal locations split the common window in half.
double PayoffAgainst(const GameConfig& game, double own, double opponent);

double Payoff(const GameConfig& game, const LocationProfile& profile,
              Firm firm);

// F-mass of the window [x - delta, x + delta].
double WindowMass(const GameConfig& game, double location);

// Mass of consumers who buy from either firm.
double TotalCoverage(const GameConfig& game, const LocationProfile& profile);

// kNone iff x1 == x2; kFull iff |x2 - x1| >= 2 delta; kPartial otherwise.
Differentiation ClassifyProfile(const GameConfig& game,
                                const LocationProfile& profile);

}  // namespace hotelling

#endif  // HOTELLING_GAME_HPP_
