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

#include <cmath>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "hotelling/error.hpp"
#include "test_oracles.hpp"

namespace hotelling {
namespace {

using testing::DataPath;

TEST(DensityTest, NormalMatchesQuadratureOracle) {
  const Density d = Density::Normal(1.3);
  for (double x = -5.0; x <= 5.0; x += 0.37) {
    EXPECT_NEAR(d.Pdf(x), testing::NormalPdf(x, 1.3), 1e-15) << x;
    EXPECT_NEAR(d.Cdf(x), testing::NormalCdf(x, 1.3), 1e-12) << x;
  }
}

TEST(DensityTest, LaplaceAndLogisticClosedForms) {
  const Density lap = Density::Laplace(0.7);
  const Density logi = Density::Logistic(0.4);
  for (double x = -4.0; x <= 4.0; x += 0.25) {
    EXPECT_NEAR(lap.Cdf(x), testing::LaplaceCdf(x, 0.7), 1e-15);
    EXPECT_NEAR(lap.Pdf(x), testing::LaplacePdf(x, 0.7), 1e-15);
    // The logistic CDF written through tanh.
    EXPECT_NEAR(logi.Cdf(x), 0.5 + 0.5 * std::tanh(x / 0.8), 1e-15);
    const double sech = 1.0 / std::cosh(x / 0.8);
    EXPECT_NEAR(logi.Pdf(x), sech * sech / (4.0 * 0.4), 1e-14);
  }
}

TEST(DensityTest, LogPdfAgreesWithPdf) {
  for (const Density& d : {Density::Normal(1.0), Density::Laplace(2.0),
                           Density::Logistic(1.0)}) {
    for (double x = -6.0; x <= 6.0; x += 0.5) {
      EXPECT_NEAR(std::exp(d.LogPdf(x)), d.Pdf(x), 1e-15 + 1e-13 * d.Pdf(x));
    }
  }
}

TEST(DensityTest, UniformMassIsExactRatio) {
  const Density u = Density::Uniform(2.0);
  EXPECT_EQ(u.Mass(-0.5, 0.5), 0.25);
  EXPECT_EQ(u.Mass(-3.0, 3.0), 1.0);
  EXPECT_EQ(u.Mass(1.5, 9.0), 0.125);
  EXPECT_EQ(u.Pdf(2.5), 0.0);
  EXPECT_EQ(u.support_bound(), 2.0);
}

TEST(DensityTest, FarTailMassKeepsPrecision) {
  const Density d = Density::Normal(1.0);
  const double oracle =
      testing::Simpson([](double t) { return testing::NormalPdf(t); }, 8.0, 9.0);
  EXPECT_NEAR(d.Mass(8.0, 9.0) / oracle, 1.0, 1e-8);
  EXPECT_NEAR(d.Mass(-9.0, -8.0) / oracle, 1.0, 1e-8);
}

TEST(DensityTest, SupportBoundCutsTheTail) {
  for (const Density& d : {Density::Normal(1.0), Density::Laplace(0.5),
                           Density::Logistic(2.0)}) {
    const double b = d.support_bound();
    EXPECT_LE(d.UpperTail(b), 1e-12) << d.Describe();
    EXPECT_GT(d.UpperTail(0.5 * b), 1e-12) << d.Describe();
  }
}

TEST(DensityTest, InvalidParametersRejected) {
  EXPECT_THROW(Density::Normal(0.0), Error);
  EXPECT_THROW(Density::Laplace(-1.0), Error);
  EXPECT_THROW(Density::Uniform(std::nan("")), Error);
  EXPECT_THROW(Density::Normal(1.0).Cdf(std::nan("")), Error);
}

TEST(PsiTest, NormalRatioClosedForm) {
  const Density d = Density::Normal(1.0);
  for (double z : {0.1, 0.5, 2.0}) {
    for (double t = -3.0; t <= 3.0; t += 0.5) {
      EXPECT_NEAR(Psi(d, z, t) / std::exp(z * t + 0.5 * z * z), 1.0, 1e-12);
    }
  }
}

TEST(PsiTest, IncreasingForLogConcaveDensities) {
  for (const Density& d : {Density::Normal(0.8), Density::Laplace(1.0),
                           Density::Logistic(0.5)}) {
    for (double z : {0.2, 1.0}) {
      double prev = Psi(d, z, -4.0);
      for (double t = -3.9; t <= 4.0; t += 0.1) {
        const double cur = Psi(d, z, t);
        EXPECT_GE(cur, prev - 1e-10 * prev) << d.Describe() << " t=" << t;
        prev = cur;
      }
    }
  }
}

TEST(PsiTest, VanishingDenominatorThrows) {
  const Density u = Density::Uniform(1.0);
  try {
    Psi(u, 0.5, 0.8);
    FAIL() << "expected ZeroDenominator";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroDenominator);
  }
}

TEST(TabulatedDensityTest, LoadsAndNormalizes) {
  const Density d = LoadTabulatedDensity(DataPath("normal_like.csv"));
  EXPECT_TRUE(d.is_tabulated());
  EXPECT_NEAR(d.Cdf(0.0), 0.5, 1e-14);
  EXPECT_EQ(d.Cdf(-7.0), 0.0);
  EXPECT_EQ(d.Cdf(7.0), 1.0);
  // Total mass of the log-linear interpolant, integrated piece by piece.
  std::vector<double> knots;
  for (int k = -24; k <= 24; ++k) knots.push_back(0.25 * k);
  const double mass = testing::PiecewiseSimpson(
      [&](double x) { return d.Pdf(x); }, knots, 200);
  EXPECT_NEAR(mass, 1.0, 1e-10);
  // Log-linear between knots: halfway the log density is the average.
  const double mid = d.LogPdf(1.125);
  EXPECT_NEAR(mid, 0.5 * (d.LogPdf(1.0) + d.LogPdf(1.25)), 1e-13);
  EXPECT_NEAR(d.LogPdf(1.0) - d.LogPdf(0.0), -0.5, 1e-12);
}

TEST(TabulatedDensityTest, CdfMatchesQuadrature) {
  const Density d = LoadTabulatedDensity(DataPath("normal_like.csv"));
  std::vector<double> knots;
  for (int k = -24; k <= 24; ++k) knots.push_back(0.25 * k);
  for (double x : {-2.3, -0.1, 0.6, 1.9}) {
    std::vector<double> left;
    for (double k : knots) {
      if (k < x) left.push_back(k);
    }
    left.push_back(x);
    const double oracle = testing::PiecewiseSimpson(
        [&](double t) { return d.Pdf(t); }, left, 200);
    EXPECT_NEAR(d.Cdf(x), oracle, 1e-11) << x;
  }
}

TEST(TabulatedDensityTest, ParseErrorsCarryLineNumbers) {
  auto expect_parse = [](const std::string& file, const std::string& needle) {
    try {
      LoadTabulatedDensity(DataPath(file));
      ADD_FAILURE() << file << " should not load";
    } catch (const Error& e) {
      EXPECT_NE(std::string(e.what()).find(needle), std::string::npos)
          << file << ": " << e.what();
    }
  };
  expect_parse("bad_header.csv", "line 1");
  expect_parse("bad_number.csv", "line 3");
  expect_parse("bad_order.csv", "increasing");
  EXPECT_THROW(LoadTabulatedDensity(DataPath("missing.csv")), Error);
}

TEST(TabulatedDensityTest, TooFewRows) {
  std::istringstream in("x,log_density\n0,0\n1,0\n");
  EXPECT_THROW(ParseTabulatedDensity(in), Error);
}

TEST(ValidateTest, ParametricDensitiesPass) {
  for (const Density& d : {Density::Normal(1.0), Density::Laplace(1.0),
                           Density::Logistic(1.0)}) {
    const ValidationReport r = Validate(d);
    EXPECT_TRUE(r.ok()) << d.Describe();
    for (const auto& c : r.checks) {
      EXPECT_EQ(c.status, CheckStatus::kPass) << d.Describe() << " " << c.name;
    }
  }
}

TEST(ValidateTest, UniformIsExemptFromStrictMonotonicity) {
  const ValidationReport r = Validate(Density::Uniform(1.5));
  EXPECT_TRUE(r.ok());
  const CheckResult* mono = r.Find("monotone_decreasing");
  ASSERT_NE(mono, nullptr);
  EXPECT_EQ(mono->status, CheckStatus::kExempt);
  EXPECT_NE(mono->note.find("uniform"), std::string::npos);
}

TEST(ValidateTest, BimodalTableFails) {
  const ValidationReport r =
      Validate(LoadTabulatedDensity(DataPath("bimodal.csv")));
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.Find("log_concavity")->status, CheckStatus::kFail);
  EXPECT_EQ(r.Find("monotone_decreasing")->status, CheckStatus::kFail);
  EXPECT_EQ(r.Find("symmetry")->status, CheckStatus::kPass);
  EXPECT_EQ(r.Find("unit_mass")->status, CheckStatus::kPass);
}

TEST(ValidateTest, NormalLikeTablePasses) {
  EXPECT_TRUE(Validate(LoadTabulatedDensity(DataPath("normal_like.csv"))).ok());
}

TEST(ValidateTest, AsymmetricTableFailsSymmetry) {
  std::istringstream in("x,log_density\n-1,-2\n0,0\n1,-1\n");
  const ValidationReport r = Validate(ParseTabulatedDensity(in));
  EXPECT_EQ(r.Find("symmetry")->status, CheckStatus::kFail);
}

TEST(ValidateTest, RejectsTinyGrid) {
  EXPECT_THROW(Validate(Density::Normal(1.0), 8), Error);
}

}  // namespace
}  // namespace hotelling
