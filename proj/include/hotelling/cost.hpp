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

// Transportation costs and the consumer reach they induce.

#ifndef HOTELLING_COST_HPP_
#define HOTELLING_COST_HPP_

#include <filesystem>
#include <iosfwd>
#include <limits>
#include <string>
#include <variant>
#include <vector>

namespace hotelling {

inline constexpr double kUnboundedReach =
    std::numeric_limits<double>::infinity();

struct LinearCost {
  double rate;
};

struct QuadraticCost {
  double rate;
};

// Piecewise-linear through (distance, cost) knots starting at (0, 0);
// constant at the last cost beyond the final knot, which makes the last
// cost the supremum of c.
struct TabulatedCost {
  std::vector<double> distance;
  std::vector<double> cost;
};

class CostFunction {
 public:
  using Kind = std::variant<LinearCost, QuadraticCost, TabulatedCost>;

  static CostFunction Linear(double rate = 1.0);
  static CostFunction Quadratic(double rate = 1.0);
  static CostFunction Tabulated(std::vector<double> distance,
                                std::vector<double> cost);

  const Kind& kind() const { return kind_; }
  std::string Describe() const;

  // c(d) for d >= 0.
  double operator()(double d) const;
  // Right derivative c'(d).
  double Derivative(double d) const;
  // lim_{d -> inf} c(d); +inf for the unbounded kinds.
  double Supremum() const;

 private:
  explicit CostFunction(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

struct MarketParams {
  double valuation;
  double price;

  double Margin() const { return valuation - price; }
};

// Maximal distance a consumer travels: c^{-1}(v - p), or kUnboundedReach when
// v - p exceeds sup c. Throws kInvalidMarket unless v > 0, p > 0, v - p > 0.
double Reach(const CostFunction& cost, const MarketParams& market);

// CSV `distance,cost`; first row must be `0,0`, distances and costs strictly
// increasing.
CostFunction ParseTabulatedCost(std::istream& in);
CostFunction LoadTabulatedCost(const std::filesystem::path& path);

}  // namespace hotelling

#endif  // HOTELLING_COST_HPP_
