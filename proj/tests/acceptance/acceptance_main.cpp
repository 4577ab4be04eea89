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

// Acceptance suite. Prints one [PASS]/[FAIL] line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hotelling/cost.hpp"
#include "hotelling/density.hpp"
#include "hotelling/efficiency.hpp"
#include "hotelling/equilibrium.hpp"
#include "hotelling/game.hpp"
#include "hotelling/oracle.hpp"

namespace hotelling {
namespace {

constexpr double kLn2 = std::numbers::ln2;

struct Outcome {
  bool pass = true;
  std::string detail;

  // Records the first failure only, which keeps the summary line short.
  void Require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string Fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;  // 0 means no runtime bound
  std::function<Outcome()> run;
};

// Closed-form kappa per family, used as the reference for regime rules.
struct Family {
  const char* name;
  Density density;
  double kappa;
};

std::vector<Family> Families() {
  return {
      {"normal", Density::Normal(1.0), std::sqrt(2.0 * kLn2)},
      {"laplace", Density::Laplace(1.0), kLn2},
      {"logistic", Density::Logistic(1.0), std::log(3.0 + 2.0 * std::sqrt(2.0))},
      {"uniform", Density::Uniform(1.0), 1.0},
  };
}

Outcome Ac1() {
  Outcome o;
  for (double s : {0.5, 1.0, 2.0}) {
    const double kn = Kappa(Density::Normal(s));
    const double kl = Kappa(Density::Laplace(s));
    o.Require(std::abs(kn - s * std::sqrt(2.0 * kLn2)) <= 1e-9,
              Fmt("normal sigma=%g kappa=%.12f", s, kn));
    o.Require(std::abs(kl - s * kLn2) <= 1e-9,
              Fmt("laplace beta=%g kappa=%.12f", s, kl));
  }
  return o;
}

Outcome Ac2() {
  Outcome o;
  for (double d : {0.3, 0.45, 0.55}) {
    const double a = Alpha(Density::Normal(1.0), d);
    const double expected = std::min(d, kLn2 / (2.0 * d) - d);
    o.Require(std::abs(a - expected) <= 1e-9,
              Fmt("normal delta=%g alpha=%.12f expected %.12f", d, a, expected));
  }
  for (double d : {0.1, 0.3}) {
    const double a = Alpha(Density::Laplace(1.0), d);
    o.Require(a == d, Fmt("laplace delta=%g alpha=%.17g", d, a));
  }
  return o;
}

Regime Dictated(double delta, double kappa) {
  if (delta >= kappa) return Regime::kNoDifferentiation;
  if (delta > 0.5 * kappa) return Regime::kPartialDifferentiation;
  return Regime::kFullDifferentiation;
}

Outcome Ac3() {
  Outcome o;
  int configs = 0;
  for (const Family& fam : Families()) {
    // 13 interior ratios plus the two boundaries, 15 per family.
    std::vector<std::pair<double, bool>> deltas;
    for (int k = 0; k < 13; ++k) {
      const double ratio = 0.1 + 1.9 * k / 12.0;
      if (std::abs(ratio - 0.5) < 1e-9 || std::abs(ratio - 1.0) < 1e-9) {
        continue;
      }
      deltas.push_back({ratio * fam.kappa, false});
    }
    while (deltas.size() < 13) {
      deltas.push_back({(0.1 + 1.9 * (deltas.size() + 0.5) / 13.0) * fam.kappa,
                        false});
    }
    // Boundaries use the solver's own kappa so that equality is exact.
    const double solver_kappa = Kappa(fam.density);
    deltas.push_back({solver_kappa, true});
    deltas.push_back({0.5 * solver_kappa, true});
    for (const auto& [delta, boundary] : deltas) {
      ++configs;
      const EquilibriumReport r = Solve(GameConfig(fam.density, delta));
      const Regime want =
          Dictated(delta, boundary ? solver_kappa : fam.kappa);
      o.Require(r.regime == want,
                std::string(fam.name) + Fmt(" delta=%.6f ratio=%.4f: ", delta,
                                            delta / fam.kappa) +
                    std::string(RegimeName(r.regime)) + " vs " +
                    std::string(RegimeName(want)));
      o.Require(r.boundary_case == boundary,
                std::string(fam.name) + Fmt(" delta=%.6f boundary flag", delta));
      const LocationProfile& p = r.point_equilibria.front();
      switch (want) {
        case Regime::kNoDifferentiation:
          o.Require(p.x1 == 0.0 && p.x2 == 0.0, "none regime not at (0,0)");
          break;
        case Regime::kPartialDifferentiation:
          o.Require(std::abs(p.x2 - (fam.kappa - delta)) <= 1e-9 &&
                        std::abs(p.x1 + (fam.kappa - delta)) <= 1e-9,
                    std::string(fam.name) + " partial point");
          break;
        case Regime::kFullDifferentiation:
          o.Require(p.x1 == -delta && p.x2 == delta,
                    std::string(fam.name) + " full point");
          break;
      }
    }
  }
  o.Require(configs == 60, Fmt("ran %g configurations", configs));
  if (o.pass) o.detail = Fmt("%g configurations", configs);
  return o;
}

Outcome Ac4() {
  Outcome o;
  OracleConfig cfg;
  cfg.grid_points = 4001;
  int certified = 0;
  struct Full {
    Density d;
    double delta;
  };
  for (const Full& c : {Full{Density::Normal(1.0), 0.3},
                        Full{Density::Normal(1.0), 0.5},
                        Full{Density::Laplace(1.0), 0.2},
                        Full{Density::Logistic(1.0), 0.5},
                        Full{Density::Uniform(1.0), 0.3}}) {
    const GameConfig g(c.d, c.delta);
    const EquilibriumReport r = Solve(g);
    o.Require(r.regime == Regime::kFullDifferentiation && r.continuum,
              c.d.Describe() + " not a full continuum");
    std::vector<LocationProfile> profiles = r.point_equilibria;
    for (const auto& p : r.SampleContinuum(9)) profiles.push_back(p);
    for (const auto& p : profiles) {
      const NashCheck n = IsEpsilonNash(g, p, cfg);
      ++certified;
      o.Require(n.ok, c.d.Describe() + Fmt(" (%.6f, %.6f) gain %.3g", p.x1,
                                           p.x2, n.worst_deviation.gain));
    }
  }
  // Point equilibria of the partial and no-differentiation regimes.
  int rejected = 0;
  for (const Full& c : {Full{Density::Normal(1.0), 0.9},
                        Full{Density::Normal(1.0), 1.5},
                        Full{Density::Laplace(1.0), 0.5},
                        Full{Density::Laplace(1.0), 1.0},
                        Full{Density::Logistic(1.0), 1.2},
                        Full{Density::Logistic(1.0), 2.5},
                        Full{Density::Uniform(1.0), 0.7},
                        Full{Density::Uniform(1.0), 1.5}}) {
    const GameConfig g(c.d, c.delta);
    const EquilibriumReport r = Solve(g);
    for (const auto& p : r.point_equilibria) {
      const NashCheck n = IsEpsilonNash(g, p, cfg);
      ++certified;
      o.Require(n.ok, c.d.Describe() + Fmt(" delta=%g point gain %.3g",
                                           c.delta, n.worst_deviation.gain));
      for (double shift : {-0.05, 0.05}) {
        for (const LocationProfile q :
             {LocationProfile{p.x1 + shift, p.x2},
              LocationProfile{p.x1, p.x2 + shift}}) {
          ++rejected;
          o.Require(!IsEpsilonNash(g, q, cfg).ok,
                    c.d.Describe() + Fmt(" delta=%g perturbed (%.4f, %.4f) "
                                         "certified",
                                         c.delta, q.x1, q.x2));
        }
      }
    }
  }
  if (o.pass) {
    o.detail = Fmt("%g profiles certified, %g perturbations rejected",
                   certified, rejected);
  }
  return o;
}

Outcome Ac5() {
  Outcome o;
  OracleConfig cfg;
  cfg.grid_points = 801;
  struct Config {
    Density d;
    double delta;
  };
  const std::vector<Config> configs = {
      {Density::Normal(1.0), 0.3},   {Density::Normal(1.0), 0.5},
      {Density::Normal(1.0), 0.9},   {Density::Normal(1.0), 1.5},
      {Density::Laplace(1.0), 0.2},  {Density::Laplace(1.0), 0.5},
      {Density::Laplace(1.0), 1.0},  {Density::Logistic(1.0), 0.5},
      {Density::Logistic(1.0), 1.2}, {Density::Logistic(1.0), 2.5},
      {Density::Uniform(1.0), 0.3},  {Density::Uniform(1.0), 0.7},
  };
  double worst_ratio = 0.0;
  for (const Config& c : configs) {
    const GameConfig g(c.d, c.delta);
    const EquilibriumReport r = Solve(g);
    const ScanResult scan = EquilibriumScan(g, cfg);
    // Grid coordinates carry rounding, so one step is compared with slack.
    const double h = scan.spacing * (1.0 + 1e-9);
    const std::string tag = c.d.Describe() + Fmt(" delta=%g", c.delta);
    o.Require(!scan.clusters.empty(), tag + ": no clusters");
    std::vector<LocationProfile> cells;
    for (const auto& cl : scan.clusters) {
      double closest = std::numeric_limits<double>::infinity();
      for (const auto& cell : cl.cells) {
        cells.push_back(cell.Canonical());
        closest = std::min(closest, r.DistanceTo(cell));
      }
      // Each cluster holds a solved equilibrium up to grid resolution.
      o.Require(closest <= h, tag + Fmt(": cluster %.2f h from solve()",
                                        closest / h));
    }
    if (c.d.is_uniform() && r.continuum) {
      // Hull of the cells against the gap box.
      const auto& box = std::get<GapBoxContinuum>(*r.continuum);
      double x1_min = std::numeric_limits<double>::infinity();
      double x2_max = -x1_min;
      double gap_min = x1_min;
      for (const auto& p : cells) {
        x1_min = std::min(x1_min, p.x1);
        x2_max = std::max(x2_max, p.x2);
        gap_min = std::min(gap_min, p.x2 - p.x1);
      }
      o.Require(std::abs(x1_min - box.lo) <= h && std::abs(x2_max - box.hi) <= h,
                tag + Fmt(": hull x1_min=%.5f x2_max=%.5f h=%.5f", x1_min,
                          x2_max, h));
      o.Require(gap_min >= box.min_gap - h,
                tag + Fmt(": gap %.5f below %.5f", gap_min, box.min_gap));
    }
    // Every scanned cell lies near the solved set.
    for (const auto& p : cells) {
      const double dist = r.DistanceTo(p);
      worst_ratio = std::max(worst_ratio, dist / h);
      o.Require(dist <= 3.0 * h,
                tag + Fmt(": cell (%.5f, %.5f) at %.2f h", p.x1, p.x2, dist / h));
    }
    // Every solved member has a scanned cell nearby.
    std::vector<LocationProfile> members = r.point_equilibria;
    for (const auto& p : r.SampleContinuum(9)) members.push_back(p);
    for (const auto& m : members) {
      double nearest = std::numeric_limits<double>::infinity();
      for (const auto& p : cells) {
        nearest = std::min(nearest, std::max(std::abs(p.x1 - m.x1),
                                             std::abs(p.x2 - m.x2)));
      }
      o.Require(nearest <= h,
                tag + Fmt(": member (%.5f, %.5f) missed by %.2f h", m.x1, m.x2,
                          nearest / h));
    }
  }
  if (o.pass) {
    o.detail = Fmt("12 configurations, worst cell offset %.2f grid steps",
                   worst_ratio);
  }
  return o;
}

Outcome Ac6() {
  Outcome o;
  for (auto [kappa, delta] : {std::pair{1.0, 0.5}, {2.0, 0.3}, {0.8, 0.6},
                              {1.5, 1.0}, {3.0, 0.25}}) {
    const double q =
        Payoff(GameConfig(Density::Uniform(kappa), delta), {0.0, 0.0},
               Firm::kFirst);
    o.Require(q == delta / (2.0 * kappa),
              Fmt("kappa=%g delta=%g payoff %.17g", kappa, delta, q));
  }
  return o;
}

Outcome Ac7() {
  Outcome o;
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Density f = Density::Normal(1.0);
  double worst_q = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double delta = 0.2 + 1.3 * unit(rng);
    const GameConfig g(f, delta);
    // Interior: firms apart but windows overlapping, away from the kinks.
    const double x1 = -2.0 + 4.0 * unit(rng);
    const double gap = 0.05 + (2.0 * delta - 0.1) * unit(rng);
    const double x2 = x1 + gap;
    const double h = 1e-5;
    const double fd = (Payoff(g, {x1, x2 + h}, Firm::kSecond) -
                       Payoff(g, {x1, x2 - h}, Firm::kSecond)) /
                      (2.0 * h);
    const double formula = f.Pdf(x2 + delta) - 0.5 * f.Pdf(0.5 * (x1 + x2));
    worst_q = std::max(worst_q, std::abs(fd - formula));
    o.Require(std::abs(fd - formula) <= 1e-6,
              Fmt("q2 slope at (%.4f, %.4f) off by %.3g", x1, x2,
                  std::abs(fd - formula)));
  }
  double worst_cs = 0.0;
  const CostFunction costs[] = {CostFunction::Linear(1.0),
                                CostFunction::Quadratic(1.0)};
  for (int i = 0; i < 20; ++i) {
    const CostFunction& cost = costs[i % 2];
    const double delta = 0.2 + 0.6 * unit(rng);
    const GameConfig g(f, delta);
    const double margin = cost(delta);
    const double x1 = -2.5 + 2.0 * unit(rng);
    const double x2 = x1 + 2.0 * delta + 0.05 + unit(rng);
    const double h = 1e-4;
    auto cs = [&](double a, double b) {
      return SurplusValue(g, {a, b}, cost, margin, 1e-12);
    };
    const double fd2 = (cs(x1, x2 + h) - cs(x1, x2 - h)) / (2.0 * h);
    const double fd1 = (cs(x1 + h, x2) - cs(x1 - h, x2)) / (2.0 * h);
    const double e2 = std::abs(fd2 - SurplusSlopeRight(g, {x1, x2}, cost));
    const double e1 = std::abs(fd1 - DisjointSurplusSlopeLeft(g, x1, cost));
    worst_cs = std::max({worst_cs, e1, e2});
    o.Require(e1 <= 1e-5 && e2 <= 1e-5,
              Fmt("CS slope at (%.4f, %.4f) off by %.3g", x1, x2,
                  std::max(e1, e2)));
  }
  if (o.pass) {
    o.detail = Fmt("worst q2 slope error %.2g, worst CS slope error %.2g",
                   worst_q, worst_cs);
  }
  return o;
}

Outcome Ac8() {
  Outcome o;
  const double kappa = std::sqrt(2.0 * kLn2);
  std::vector<double> deltas(100);
  for (int k = 0; k < 100; ++k) deltas[k] = 0.1 + k * (2.0 - 0.1) / 99.0;
  const auto rows =
      Figure1Curve(Density::Normal(1.0), CostFunction::Linear(), deltas);
  int sign_changes = 0;
  int prev_sign = 0;
  for (const auto& r : rows) {
    const double expected = r.delta >= kappa         ? 0.0
                            : r.delta > 0.5 * kappa ? (kappa - r.delta) / r.delta
                                                     : 1.0;
    o.Require(std::abs(r.eq_ratio - expected) <= 1e-6,
              Fmt("eq_ratio at %.4f is %.8f not %.8f", r.delta, r.eq_ratio,
                  expected));
    o.Require(r.profit_ratio == 1.0, Fmt("profit_ratio at %.4f", r.delta));
    o.Require(r.cs_ratio > 0.0 && r.cs_ratio < 1.0,
              Fmt("cs_ratio at %.4f is %.8f", r.delta, r.cs_ratio));
    const double diff = r.eq_ratio - r.cs_ratio;
    const int sign = diff > 0 ? 1 : (diff < 0 ? -1 : 0);
    if (sign != 0) {
      if (prev_sign != 0 && sign != prev_sign) ++sign_changes;
      prev_sign = sign;
    }
  }
  o.Require(sign_changes == 1, Fmt("%g sign changes", sign_changes));
  if (o.pass) o.detail = "100 rows, one crossing of eq_ratio and cs_ratio";
  return o;
}

Outcome Ac9() {
  Outcome o;
  constexpr double kSlack = 1e-10;
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::vector<Density> densities = {Density::Normal(1.0),
                                          Density::Laplace(1.0),
                                          Density::Logistic(1.0)};
  // CDF inequalities.
  for (int i = 0; i < 200; ++i) {
    const Density& f = densities[i % 3];
    const double x = -3.0 + 6.0 * unit(rng);
    const double delta = 0.01 + 2.0 * unit(rng);
    const double up = f.Cdf(x + delta) - f.Cdf(x);
    const double down = f.Cdf(x) - f.Cdf(x - delta);
    if (x < 0) {
      o.Require(up > down - kSlack, f.Describe() + Fmt(" cdf window x=%g d=%g", x, delta));
    } else if (x > 0) {
      o.Require(up < down + kSlack, f.Describe() + Fmt(" cdf window x=%g d=%g", x, delta));
    }
  }
  // Best-response claims on random opponents.
  OracleConfig cfg;
  cfg.grid_points = 4001;
  for (int i = 0; i < 50; ++i) {
    const Density& f = densities[i % 3];
    const double delta = 0.2 + 1.3 * unit(rng);
    const GameConfig g(f, delta);
    const double x1 = i % 10 == 0 ? 0.0 : -3.0 * delta + 6.0 * delta * unit(rng);
    const double br = BestResponse(g, x1, cfg).location;
    const std::string tag =
        f.Describe() + Fmt(" delta=%.4f x1=%.4f br=%.6f", delta, x1, br);
    if (std::abs(x1) >= 2.0 * delta) {
      o.Require(std::abs(br) <= kSlack, "claim 1: " + tag);
    } else if (x1 < 0) {
      o.Require(br > x1 && br <= x1 + 2.0 * delta + kSlack, "claim 2: " + tag);
    } else if (x1 > 0) {
      o.Require(br < x1 && br >= x1 - 2.0 * delta - kSlack, "claim 3: " + tag);
    } else {
      o.Require(std::abs(br) <= 2.0 * delta + kSlack, "claim 4: " + tag);
    }
    const EquilibriumReport r = Solve(g);
    std::vector<LocationProfile> eq = r.point_equilibria;
    for (const auto& p : r.SampleContinuum(5)) eq.push_back(p);
    for (const auto& p : eq) {
      o.Require(p.x1 >= -2.0 * delta - kSlack && p.x1 <= kSlack &&
                    p.x2 >= -kSlack && p.x2 <= 2.0 * delta + kSlack,
                "claim 5: " + tag);
    }
  }
  // Density ratio monotonicity.
  for (int i = 0; i < 200; ++i) {
    const Density& f = densities[i % 3];
    const double z = 0.01 + 3.0 * unit(rng);
    double t1 = -4.0 + 8.0 * unit(rng);
    double t2 = -4.0 + 8.0 * unit(rng);
    if (t1 > t2) std::swap(t1, t2);
    const double p1 = Psi(f, z, t1);
    const double p2 = Psi(f, z, t2);
    o.Require(p1 <= p2 + kSlack * std::max(1.0, p2),
              f.Describe() + Fmt(" psi z=%g t1=%g t2=%g", z, t1, t2));
  }
  return o;
}

Outcome Ac10() {
  Outcome o;
  const ProfitParams params[] = {
      ProfitParams(ProductionCost::Power(0.25, 2.0), 1.0),
      ProfitParams(ProductionCost::Power(1.0 / 6.0, 3.0), 1.0)};
  for (const auto& pp : params) {
    for (int i = 0; i < 50; ++i) {
      const double q = i / 49.0;
      for (int j = 0; j < 50; ++j) {
        const double s = j / 49.0;
        const double v = AggregateProfit(pp, q, s);
        o.Require(v <= AggregateProfit(pp, q, 0.5) + 1e-15,
                  Fmt("share %.4f beats equal split at q=%.4f", s, q));
        if (i > 0) {
          o.Require(v > AggregateProfit(pp, (i - 1) / 49.0, s),
                    Fmt("not increasing in q at q=%.4f s=%.4f", q, s));
        }
      }
    }
  }
  return o;
}

}  // namespace
}  // namespace hotelling

int main() {
  using namespace hotelling;
  const std::vector<Criterion> criteria = {
      {"AC1", "kappa closed forms", 1.0, Ac1},
      {"AC2", "alpha closed forms", 0.0, Ac2},
      {"AC3", "regime partition", 0.0, Ac3},
      {"AC4", "oracle certification", 30.0, Ac4},
      {"AC5", "scan and solve agree", 120.0, Ac5},
      {"AC6", "uniform central payoff", 0.0, Ac6},
      {"AC7", "derivative checks", 0.0, Ac7},
      {"AC8", "efficiency ratio curve", 60.0, Ac8},
      {"AC9", "structural property suites", 0.0, Ac9},
      {"AC10", "aggregate profit properties", 0.0, Ac10},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.budget_seconds > 0.0 && seconds >= c.budget_seconds) {
      out.pass = false;
      out.detail += Fmt(" (runtime %.2f s over %.0f s budget)", seconds,
                        c.budget_seconds);
    }
    if (!out.pass) ++failures;
    std::printf("[%s] %s %s (%.2f s)%s%s\n", out.pass ? "PASS" : "FAIL", c.id,
                c.title, seconds, out.detail.empty() ? "" : ": ",
                out.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
