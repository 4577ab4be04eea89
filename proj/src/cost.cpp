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

#include "hotelling/cost.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "csv.hpp"
#include "hotelling/error.hpp"
#include "hotelling/numerics.hpp"

namespace hotelling {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void RequireRate(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw Error(ErrorCode::kInvalidArgument,
                "cost rate must be a positive finite number");
  }
}

std::size_t Segment(const TabulatedCost& t, double d) {
  auto it = std::upper_bound(t.distance.begin(), t.distance.end(), d);
  return static_cast<std::size_t>(it - t.distance.begin()) - 1;
}

}  // namespace

CostFunction CostFunction::Linear(double rate) {
  RequireRate(rate);
  return CostFunction(LinearCost{rate});
}

CostFunction CostFunction::Quadratic(double rate) {
  RequireRate(rate);
  return CostFunction(QuadraticCost{rate});
}

CostFunction CostFunction::Tabulated(std::vector<double> distance,
                                     std::vector<double> cost) {
  if (distance.size() != cost.size() || distance.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "tabulated cost needs at least 2 matching knots");
  }
  if (distance.front() != 0.0 || cost.front() != 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "tabulated cost must start at (0, 0)");
  }
  for (std::size_t k = 1; k < distance.size(); ++k) {
    if (!(distance[k] > distance[k - 1]) || !(cost[k] > cost[k - 1])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "tabulated cost must be strictly increasing (knot " +
                      std::to_string(k) + ")");
    }
  }
  return CostFunction(TabulatedCost{std::move(distance), std::move(cost)});
}

std::string CostFunction::Describe() const {
  std::ostringstream out;
  out.precision(17);
  std::visit(Overloaded{[&](const LinearCost& c) { out << "linear(rate=" << c.rate << ")"; },
                        [&](const QuadraticCost& c) {
                          out << "quadratic(rate=" << c.rate << ")";
                        },
                        [&](const TabulatedCost& c) {
                          out << "tabulated(knots=" << c.distance.size() << ")";
                        }},
             kind_);
  return out.str();
}

double CostFunction::operator()(double d) const {
  return std::visit(
      Overloaded{[d](const LinearCost& c) { return c.rate * d; },
                 [d](const QuadraticCost& c) { return c.rate * d * d; },
                 [d](const TabulatedCost& t) {
                   if (d <= 0.0) return 0.0;
                   if (d >= t.distance.back()) return t.cost.back();
                   const std::size_t k = Segment(t, d);
                   const double w = (d - t.distance[k]) /
                                    (t.distance[k + 1] - t.distance[k]);
                   return t.cost[k] + w * (t.cost[k + 1] - t.cost[k]);
                 }},
      kind_);
}

double CostFunction::Derivative(double d) const {
  return std::visit(
      Overloaded{[](const LinearCost& c) { return c.rate; },
                 [d](const QuadraticCost& c) { return 2.0 * c.rate * d; },
                 [d](const TabulatedCost& t) {
                   if (d >= t.distance.back()) return 0.0;
                   const std::size_t k = d <= 0.0 ? 0 : Segment(t, d);
                   return (t.cost[k + 1] - t.cost[k]) /
                          (t.distance[k + 1] - t.distance[k]);
                 }},
      kind_);
}

double CostFunction::Supremum() const {
  if (const auto* t = std::get_if<TabulatedCost>(&kind_)) return t->cost.back();
  return kUnboundedReach;
}

double Reach(const CostFunction& cost, const MarketParams& market) {
  if (!(market.valuation > 0.0) || !(market.price > 0.0) ||
      !(market.Margin() > 0.0)) {
    throw Error(ErrorCode::kInvalidMarket,
                "invalid market: need v > 0, p > 0 and v - p > 0");
  }
  const double margin = market.Margin();
  if (margin > cost.Supremum()) return kUnboundedReach;
  double lo = 0.0;
  double hi = 1.0;
  while (cost(hi) < margin) {
    lo = hi;
    hi *= 2.0;
  }
  return numerics::BisectRoot([&](double d) { return cost(d) - margin; }, lo,
                              hi, 1e-14);
}

CostFunction ParseTabulatedCost(std::istream& in) {
  auto cols = internal::ReadTwoColumnCsv(in, "distance,cost");
  if (cols.first.empty()) {
    throw Error(ErrorCode::kParse, "line 1: cost table has no data rows");
  }
  if (cols.first.front() != 0.0 || cols.second.front() != 0.0) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(cols.line.front()) +
                                       ": first row must be 0,0");
  }
  if (cols.first.size() < 2) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(cols.line.back()) +
                                       ": cost table needs at least 2 rows");
  }
  for (std::size_t k = 1; k < cols.first.size(); ++k) {
    if (!(cols.first[k] > cols.first[k - 1]) ||
        !(cols.second[k] > cols.second[k - 1])) {
      throw Error(ErrorCode::kParse,
                  "line " + std::to_string(cols.line[k]) +
                      ": distance and cost must be strictly increasing");
    }
  }
  return CostFunction::Tabulated(std::move(cols.first), std::move(cols.second));
}

CostFunction LoadTabulatedCost(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot open cost table '" + path.string() + "'");
  }
  return ParseTabulatedCost(in);
}

}  // namespace hotelling
