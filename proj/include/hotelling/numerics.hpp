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

// Small one-dimensional numerical kernels shared by the solver modules:
// bracketed bisection, golden-section maximisation and adaptive quadrature.

#ifndef HOTELLING_NUMERICS_HPP_
#define HOTELLING_NUMERICS_HPP_

#include <cmath>
#include <limits>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace hotelling::numerics {

inline constexpr double kRootTolerance = 1e-12;
inline constexpr int kMaxBisectionSteps = 200;

// Root of a continuous function with f(lo) <= 0 <= f(hi) (or the reverse).
// Stops after kMaxBisectionSteps halvings or once the bracket is narrower
// than `tol`; returns the bracket midpoint.
template <typename F>
double BisectRoot(F&& f, double lo, double hi, double tol = kRootTolerance,
                  int max_steps = kMaxBisectionSteps) {
  const bool increasing = f(lo) <= 0.0;
  for (int step = 0; step < max_steps && hi - lo > tol; ++step) {
    const double mid = lo + 0.5 * (hi - lo);
    const double value = f(mid);
    if ((value <= 0.0) == increasing) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

// Smallest t in [lo, hi] where a monotone predicate switches from false to
// true. `pred(hi)` is assumed true. Returns the upper end of the final
// bracket so the predicate holds at the returned point.
template <typename Pred>
double BisectThreshold(Pred&& pred, double lo, double hi,
                       double tol = kRootTolerance,
                       int max_steps = kMaxBisectionSteps) {
  if (pred(lo)) return lo;
  for (int step = 0; step < max_steps && hi - lo > tol; ++step) {
    const double mid = lo + 0.5 * (hi - lo);
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

struct ScalarMaximum {
  double location;
  double value;
};

// Golden-section search for the maximum of f on the open interval (lo, hi).
// Endpoints are never evaluated, so f may jump there.
template <typename F>
ScalarMaximum GoldenSectionMax(F&& f, double lo, double hi, int iterations) {
  static const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < iterations; ++i) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = f(d);
    }
  }
  return fc >= fd ? ScalarMaximum{c, fc} : ScalarMaximum{d, fd};
}

// Width of the bracket left after `iterations` golden-section steps on an
// interval of unit width.
inline double GoldenBracketFraction(int iterations) {
  return std::pow((std::sqrt(5.0) - 1.0) / 2.0, iterations);
}

// Adaptive Gauss-Kronrod (7/15) integral of a smooth integrand on [a, b].
// Callers split at kinks.
template <typename F>
double Integrate(F&& f, double a, double b, double rel_tol = 1e-9) {
  if (!(b > a)) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      std::forward<F>(f), a, b, /*max_depth=*/20, rel_tol);
}

}  // namespace hotelling::numerics

#endif  // HOTELLING_NUMERICS_HPP_
