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

// Consumer distributions: symmetric, log-concave densities centred at 0
// (Normal, Laplace, Logistic, tabulated log-densities) plus the uniform
// special case.

#ifndef HOTELLING_DENSITY_HPP_
#define HOTELLING_DENSITY_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hotelling {

struct NormalKind {
  double sigma;
};

struct LaplaceKind {
  double beta;
};

struct LogisticKind {
  double scale;
};

struct UniformKind {
  double half_width;
};

// Piecewise log-linear density through (x, log f) knots, normalised to unit
// mass at construction. Zero outside the knot hull.
class TabulatedKind {
 public:
  TabulatedKind(std::vector<double> x, std::vector<double> log_density);

  const std::vector<double>& x() const { return x_; }
  const std::vector<double>& log_density() const { return log_f_; }

  double LogPdf(double x) const;
  double Cdf(double x) const;

 private:
  // Integral of the interpolant from knot k to x, for x in [x_k, x_{k+1}].
  double SegmentMass(std::size_t k, double x) const;

  std::vector<double> x_;
  std::vector<double> log_f_;
  std::vector<double> cum_;  // CDF at each knot
};

class Density {
 public:
  using Kind = std::variant<NormalKind, LaplaceKind, LogisticKind, UniformKind,
                            TabulatedKind>;

  static Density Normal(double sigma);
  static Density Laplace(double beta);
  static Density Logistic(double scale);
  static Density Uniform(double half_width);
  static Density Tabulated(std::vector<double> x,
                           std::vector<double> log_density);

  const Kind& kind() const { return kind_; }
  std::string_view name() const;
  std::string Describe() const;

  bool is_uniform() const { return std::holds_alternative<UniformKind>(kind_); }
  bool is_tabulated() const {
    return std::holds_alternative<TabulatedKind>(kind_);
  }

  double Pdf(double x) const;
  double LogPdf(double x) const;
  // Accepts +/-infinity.
  double Cdf(double x) const;
  // 1 - F(x), computed without cancellation (F(-x) by symmetry).
  double UpperTail(double x) const;
  // F(b) - F(a) for a <= b; 0 when b <= a.
  double Mass(double a, double b) const;

  // Smallest L with F(L) >= 1 - 1e-12 (the half width for Uniform).
  double support_bound() const { return support_bound_; }

 private:
  explicit Density(Kind kind);

  Kind kind_;
  double support_bound_ = 0.0;
};

// f(t) / f(t + z). Throws kZeroDenominator when f(t + z) = 0.
double Psi(const Density& density, double z, double t);

enum class CheckStatus { kPass, kFail, kExempt };

struct CheckResult {
  std::string name;
  CheckStatus status;
  double worst_residual;  // largest violation seen (0 when none)
  std::string note;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  const CheckResult* Find(std::string_view name) const;
};

inline constexpr double kLogConcavityTolerance = 1e-8;

// Checks membership in the admissible family on an even grid over
// [-support_bound, support_bound]: symmetry, strict decrease on the positive
// half line (uniform is exempt), log-concavity and unit mass.
ValidationReport Validate(const Density& density, int grid_points = 401,
                          double tol = 1e-9);

// CSV with header `x,log_density`, strictly increasing x and at least three
// rows. Errors carry the offending line number.
Density ParseTabulatedDensity(std::istream& in);
Density LoadTabulatedDensity(const std::filesystem::path& path);

std::string_view CheckStatusName(CheckStatus status);

}  // namespace hotelling

#endif  // HOTELLING_DENSITY_HPP_
