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

#include "hotelling/density.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "csv.hpp"
#include "hotelling/error.hpp"
#include "hotelling/numerics.hpp"

namespace hotelling {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTailMass = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void RequirePositive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " must be a positive finite number");
  }
}

// expm1(u) / u, continuous at 0.
double RelativeExpm1(double u) {
  if (std::abs(u) < 1e-8) return 1.0 + 0.5 * u;
  return std::expm1(u) / u;
}

}  // namespace

// ---------------------------------------------------------------------------
// TabulatedKind

TabulatedKind::TabulatedKind(std::vector<double> x,
                             std::vector<double> log_density)
    : x_(std::move(x)), log_f_(std::move(log_density)) {
  if (x_.size() != log_f_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "tabulated density: x and log_density sizes differ");
  }
  if (x_.size() < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "tabulated density needs at least 3 knots");
  }
  for (std::size_t k = 0; k < x_.size(); ++k) {
    if (!std::isfinite(x_[k]) || !std::isfinite(log_f_[k])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "tabulated density: knot " + std::to_string(k) +
                      " is not finite");
    }
    if (k > 0 && !(x_[k] > x_[k - 1])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "tabulated density: x must be strictly increasing (knot " +
                      std::to_string(k) + ")");
    }
  }
  // Normalise by the exact integral of the interpolant.
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < x_.size(); ++k) {
    total += SegmentMass(k, x_[k + 1]);
  }
  const double log_total = std::log(total);
  for (double& v : log_f_) v -= log_total;

  cum_.assign(x_.size(), 0.0);
  for (std::size_t k = 0; k + 1 < x_.size(); ++k) {
    cum_[k + 1] = cum_[k] + SegmentMass(k, x_[k + 1]);
  }
}

double TabulatedKind::SegmentMass(std::size_t k, double x) const {
  const double width = x_[k + 1] - x_[k];
  const double slope = (log_f_[k + 1] - log_f_[k]) / width;
  const double h = x - x_[k];
  return std::exp(log_f_[k]) * h * RelativeExpm1(slope * h);
}

double TabulatedKind::LogPdf(double x) const {
  if (x < x_.front() || x > x_.back()) return -kInf;
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  std::size_t k = static_cast<std::size_t>(it - x_.begin());
  if (k == x_.size()) return log_f_.back();
  --k;
  const double w = (x - x_[k]) / (x_[k + 1] - x_[k]);
  return log_f_[k] + w * (log_f_[k + 1] - log_f_[k]);
}

double TabulatedKind::Cdf(double x) const {
  if (x <= x_.front()) return 0.0;
  if (x >= x_.back()) return 1.0;
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  const std::size_t k = static_cast<std::size_t>(it - x_.begin()) - 1;
  return std::clamp(cum_[k] + SegmentMass(k, x), 0.0, 1.0);
}

// ---------------------------------------------------------------------------
// Density

Density::Density(Kind kind) : kind_(std::move(kind)) {
  if (const auto* u = std::get_if<UniformKind>(&kind_)) {
    support_bound_ = u->half_width;
    return;
  }
  // Doubling then bisection on the upper tail.
  double hi = 1.0;
  while (UpperTail(hi) > kTailMass) hi *= 2.0;
  const double lo = hi > 1.0 ? 0.5 * hi : 0.0;
  support_bound_ = numerics::BisectThreshold(
      [this](double t) { return UpperTail(t) <= kTailMass; }, lo, hi);
}

Density Density::Normal(double sigma) {
  RequirePositive(sigma, "normal sigma");
  return Density(NormalKind{sigma});
}

Density Density::Laplace(double beta) {
  RequirePositive(beta, "laplace beta");
  return Density(LaplaceKind{beta});
}

Density Density::Logistic(double scale) {
  RequirePositive(scale, "logistic scale");
  return Density(LogisticKind{scale});
}

Density Density::Uniform(double half_width) {
  RequirePositive(half_width, "uniform half width");
  return Density(UniformKind{half_width});
}

Density Density::Tabulated(std::vector<double> x,
                           std::vector<double> log_density) {
  return Density(TabulatedKind(std::move(x), std::move(log_density)));
}

std::string_view Density::name() const {
  return std::visit(
      Overloaded{[](const NormalKind&) { return std::string_view("normal"); },
                 [](const LaplaceKind&) { return std::string_view("laplace"); },
                 [](const LogisticKind&) {
                   return std::string_view("logistic");
                 },
                 [](const UniformKind&) { return std::string_view("uniform"); },
                 [](const TabulatedKind&) {
                   return std::string_view("tabulated");
                 }},
      kind_);
}

std::string Density::Describe() const {
  std::ostringstream out;
  out.precision(17);
  std::visit(Overloaded{
                 [&](const NormalKind& k) { out << "normal(sigma=" << k.sigma << ")"; },
                 [&](const LaplaceKind& k) { out << "laplace(beta=" << k.beta << ")"; },
                 [&](const LogisticKind& k) {
                   out << "logistic(scale=" << k.scale << ")";
                 },
                 [&](const UniformKind& k) {
                   out << "uniform(half_width=" << k.half_width << ")";
                 },
                 [&](const TabulatedKind& k) {
                   out << "tabulated(knots=" << k.x().size() << ")";
                 }},
             kind_);
  return out.str();
}

double Density::LogPdf(double x) const {
  return std::visit(
      Overloaded{
          [x](const NormalKind& k) {
            const double z = x / k.sigma;
            return -0.5 * z * z -
                   std::log(k.sigma * std::sqrt(2.0 * std::numbers::pi));
          },
          [x](const LaplaceKind& k) {
            return -std::abs(x) / k.beta - std::log(2.0 * k.beta);
          },
          [x](const LogisticKind& k) {
            const double u = std::abs(x) / k.scale;
            return -u - std::log(k.scale) - 2.0 * std::log1p(std::exp(-u));
          },
          [x](const UniformKind& k) {
            return std::abs(x) <= k.half_width ? -std::log(2.0 * k.half_width)
                                               : -kInf;
          },
          [x](const TabulatedKind& k) { return k.LogPdf(x); }},
      kind_);
}

double Density::Pdf(double x) const {
  return std::visit(
      Overloaded{
          [x](const NormalKind& k) {
            const double z = x / k.sigma;
            return std::exp(-0.5 * z * z) /
                   (k.sigma * std::sqrt(2.0 * std::numbers::pi));
          },
          [x](const LaplaceKind& k) {
            return std::exp(-std::abs(x) / k.beta) / (2.0 * k.beta);
          },
          [x](const LogisticKind& k) {
            const double e = std::exp(-std::abs(x) / k.scale);
            return e / (k.scale * (1.0 + e) * (1.0 + e));
          },
          [x](const UniformKind& k) {
            return std::abs(x) <= k.half_width ? 1.0 / (2.0 * k.half_width)
                                               : 0.0;
          },
          [x](const TabulatedKind& k) { return std::exp(k.LogPdf(x)); }},
      kind_);
}

double Density::Cdf(double x) const {
  if (std::isnan(x)) {
    throw Error(ErrorCode::kInvalidArgument, "cdf evaluated at NaN");
  }
  return std::visit(
      Overloaded{
          [x](const NormalKind& k) {
            return 0.5 * std::erfc(-x / (k.sigma * std::numbers::sqrt2));
          },
          [x](const LaplaceKind& k) {
            return x < 0.0 ? 0.5 * std::exp(x / k.beta)
                           : 1.0 - 0.5 * std::exp(-x / k.beta);
          },
          [x](const LogisticKind& k) {
            return 1.0 / (1.0 + std::exp(-x / k.scale));
          },
          [x](const UniformKind& k) {
            return std::clamp((x + k.half_width) / (2.0 * k.half_width), 0.0,
                              1.0);
          },
          [x](const TabulatedKind& k) { return k.Cdf(x); }},
      kind_);
}

double Density::UpperTail(double x) const {
  if (const auto* t = std::get_if<TabulatedKind>(&kind_)) {
    return 1.0 - t->Cdf(x);
  }
  return Cdf(-x);
}

double Density::Mass(double a, double b) const {
  if (!(b > a)) return 0.0;
  if (const auto* u = std::get_if<UniformKind>(&kind_)) {
    // Length-based so windows inside the support are exact ratios.
    const double lo = std::clamp(a, -u->half_width, u->half_width);
    const double hi = std::clamp(b, -u->half_width, u->half_width);
    return (hi - lo) / (2.0 * u->half_width);
  }
  const double mass = a >= 0.0 ? UpperTail(a) - UpperTail(b) : Cdf(b) - Cdf(a);
  return std::max(mass, 0.0);
}

double Psi(const Density& density, double z, double t) {
  const double log_den = density.LogPdf(t + z);
  if (log_den == -kInf) {
    throw Error(ErrorCode::kZeroDenominator,
                "psi: density vanishes at t + z = " + std::to_string(t + z));
  }
  return std::exp(density.LogPdf(t) - log_den);
}

// ---------------------------------------------------------------------------
// Validation

std::string_view CheckStatusName(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kExempt:
      return "exempt";
  }
  return "unknown";
}

bool ValidationReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::kFail;
  });
}

const CheckResult* ValidationReport::Find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

double UnitMassIntegral(const Density& density) {
  const double bound = density.support_bound();
  auto pdf = [&density](double t) { return density.Pdf(t); };
  if (const auto* t = std::get_if<TabulatedKind>(&density.kind())) {
    double total = 0.0;
    const auto& x = t->x();
    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
      total += numerics::Integrate(pdf, x[k], x[k + 1], 1e-12);
    }
    return total;
  }
  return numerics::Integrate(pdf, -bound, 0.0, 1e-12) +
         numerics::Integrate(pdf, 0.0, bound, 1e-12);
}

}  // namespace

ValidationReport Validate(const Density& density, int grid_points, double tol) {
  if (grid_points < 16) {
    throw Error(ErrorCode::kInvalidArgument,
                "validate: grid_points must be at least 16");
  }
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "validate: tol must be positive");
  }
  const double bound = density.support_bound();
  const double step = 2.0 * bound / (grid_points - 1);
  std::vector<double> grid(static_cast<std::size_t>(grid_points));
  for (int k = 0; k < grid_points; ++k) grid[k] = -bound + k * step;
  grid.back() = bound;

  ValidationReport report;

  {
    double worst = 0.0;
    for (double x : grid) {
      worst = std::max(worst, std::abs(density.Pdf(x) - density.Pdf(-x)));
    }
    report.checks.push_back({"symmetry",
                             worst <= tol ? CheckStatus::kPass
                                          : CheckStatus::kFail,
                             worst, ""});
  }

  if (density.is_uniform()) {
    report.checks.push_back({"monotone_decreasing", CheckStatus::kExempt, 0.0,
                             "uniform exemption: constant on its support"});
  } else {
    double worst = 0.0;
    bool violated = false;
    double prev = density.Pdf(0.0);
    for (int k = 1; step * k <= bound * (1.0 + 1e-12); ++k) {
      const double cur = density.Pdf(step * k);
      if (prev > 0.0 && cur >= prev) {
        violated = true;
        worst = std::max(worst, cur - prev);
      }
      prev = cur;
    }
    report.checks.push_back({"monotone_decreasing",
                             violated ? CheckStatus::kFail : CheckStatus::kPass,
                             worst, ""});
  }

  {
    double worst = 0.0;
    for (std::size_t k = 1; k + 1 < grid.size(); ++k) {
      const double a = density.LogPdf(grid[k - 1]);
      const double b = density.LogPdf(grid[k]);
      const double c = density.LogPdf(grid[k + 1]);
      if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) continue;
      worst = std::max(worst, a - 2.0 * b + c);
    }
    report.checks.push_back({"log_concavity",
                             worst <= kLogConcavityTolerance
                                 ? CheckStatus::kPass
                                 : CheckStatus::kFail,
                             worst, ""});
  }

  {
    const double residual = std::abs(UnitMassIntegral(density) - 1.0);
    report.checks.push_back({"unit_mass",
                             residual <= tol ? CheckStatus::kPass
                                             : CheckStatus::kFail,
                             residual, ""});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Table loading

Density ParseTabulatedDensity(std::istream& in) {
  auto cols = internal::ReadTwoColumnCsv(in, "x,log_density");
  if (cols.first.size() < 3) {
    const int line = cols.line.empty() ? 1 : cols.line.back();
    throw Error(ErrorCode::kParse, "line " + std::to_string(line) +
                                       ": need at least 3 data rows, got " +
                                       std::to_string(cols.first.size()));
  }
  for (std::size_t k = 1; k < cols.first.size(); ++k) {
    if (!(cols.first[k] > cols.first[k - 1])) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(cols.line[k]) +
                                         ": x must be strictly increasing");
    }
  }
  return Density::Tabulated(std::move(cols.first), std::move(cols.second));
}

Density LoadTabulatedDensity(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot open density table '" + path.string() + "'");
  }
  return ParseTabulatedDensity(in);
}

}  // namespace hotelling
