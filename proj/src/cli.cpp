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

#include "hotelling/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hotelling/cost.hpp"
#include "hotelling/density.hpp"
#include "hotelling/efficiency.hpp"
#include "hotelling/equilibrium.hpp"
#include "hotelling/error.hpp"
#include "hotelling/game.hpp"
#include "hotelling/json_io.hpp"
#include "hotelling/oracle.hpp"

namespace hotelling {
namespace {

using nlohmann::json;

// Raised for flag combinations CLI11 cannot express on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string Fixed(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  // Avoid printing "-0.000000".
  if (std::string_view(buf) == "-0.000000") return "0.000000";
  return buf;
}

struct DensityFlags {
  std::string dist = "normal";
  double sigma = 1.0;
  double beta = 1.0;
  double scale = 1.0;
  double half_width = 1.0;
  std::string table;
};

struct ReachFlags {
  CLI::Option* delta_opt = nullptr;
  CLI::Option* v_opt = nullptr;
  CLI::Option* p_opt = nullptr;
  CLI::Option* cost_opt = nullptr;
  double delta = 0.0;
  double v = 0.0;
  double p = 0.0;
  std::string cost = "linear";
  double cost_rate = 1.0;
  std::string cost_table;
};

struct Options {
  DensityFlags density;
  ReachFlags reach;
  std::string format = "text";
  double x1 = 0.0;
  double x2 = 0.0;
  int firm = 2;
  double opponent = 0.0;
  int grid = 4001;
  std::optional<double> epsilon;
  int sample = 0;
  double delta_min = 0.1;
  double delta_max = 2.0;
  int steps = 100;
  bool maximize = false;
  int grid_points = 401;
  double tol = 1e-9;
};

void AddDensityFlags(CLI::App* cmd, DensityFlags& d) {
  cmd->add_option("--dist", d.dist, "normal|laplace|logistic|uniform|table")
      ->check(CLI::IsMember({"normal", "laplace", "logistic", "uniform",
                             "table"}));
  cmd->add_option("--sigma", d.sigma, "Normal standard deviation");
  cmd->add_option("--beta", d.beta, "Laplace scale");
  cmd->add_option("--scale", d.scale, "Logistic scale");
  cmd->add_option("--half-width", d.half_width, "Uniform half width");
  cmd->add_option("--table", d.table, "CSV with header x,log_density");
}

void AddFormatFlag(CLI::App* cmd, std::string& format,
                   std::vector<std::string> allowed) {
  cmd->add_option("--format", format)->check(CLI::IsMember(allowed));
}

void AddCostFlags(CLI::App* cmd, ReachFlags& r) {
  r.cost_opt = cmd->add_option("--cost", r.cost, "linear|quadratic|table")
                   ->check(CLI::IsMember({"linear", "quadratic", "table"}));
  cmd->add_option("--cost-rate", r.cost_rate, "Cost slope or curvature");
  cmd->add_option("--cost-table", r.cost_table,
                  "CSV with header distance,cost");
}

void AddReachFlags(CLI::App* cmd, ReachFlags& r) {
  r.delta_opt = cmd->add_option("--delta", r.delta, "Reach (may be inf)");
  r.v_opt = cmd->add_option("--v", r.v, "Consumer valuation");
  r.p_opt = cmd->add_option("--p", r.p, "Price");
  AddCostFlags(cmd, r);
}

Density BuildDensity(const DensityFlags& d) {
  if (d.dist == "normal") return Density::Normal(d.sigma);
  if (d.dist == "laplace") return Density::Laplace(d.beta);
  if (d.dist == "logistic") return Density::Logistic(d.scale);
  if (d.dist == "uniform") return Density::Uniform(d.half_width);
  if (d.table.empty()) throw UsageError("--dist table requires --table");
  return LoadTabulatedDensity(d.table);
}

CostFunction BuildCost(const ReachFlags& r) {
  if (r.cost == "linear") return CostFunction::Linear(r.cost_rate);
  if (r.cost == "quadratic") return CostFunction::Quadratic(r.cost_rate);
  if (r.cost_table.empty()) {
    throw UsageError("--cost table requires --cost-table");
  }
  return LoadTabulatedCost(r.cost_table);
}

// Resolved reach plus how it was obtained.
struct ResolvedReach {
  double delta;
  std::optional<CostFunction> cost;
  std::optional<MarketParams> market;

  std::string Header() const {
    if (!market) return {};
    return "delta = reach(" + cost->Describe() + ", v=" + Fixed(market->valuation) +
           ", p=" + Fixed(market->price) + ") = " + Fixed(delta);
  }
};

bool Given(const CLI::Option* opt) {
  return opt != nullptr && opt->count() > 0;
}

ResolvedReach ResolveReach(const ReachFlags& r) {
  const bool direct = Given(r.delta_opt);
  const bool market = Given(r.v_opt) || Given(r.p_opt) || Given(r.cost_opt);
  if (direct && market) {
    throw UsageError("--delta cannot be combined with --v/--p/--cost");
  }
  if (direct) return {r.delta, std::nullopt, std::nullopt};
  if (!market) throw UsageError("either --delta or --v, --p, --cost is required");
  if (!Given(r.v_opt) || !Given(r.p_opt) || !Given(r.cost_opt)) {
    throw UsageError("--v, --p and --cost must be given together");
  }
  CostFunction cost = BuildCost(r);
  MarketParams m{r.v, r.p};
  return {Reach(cost, m), cost, m};
}

void PrintJson(std::ostream& out, json doc, const ResolvedReach* reach) {
  if (reach != nullptr && reach->market) {
    doc["reach"] = {{"cost", reach->cost->Describe()},
                    {"v", reach->market->valuation},
                    {"p", reach->market->price},
                    {"delta", Number(reach->delta)}};
  }
  out << doc.dump(2) << "\n";
}

void PrintHeader(std::ostream& out, const ResolvedReach& reach) {
  if (reach.market) out << "# " << reach.Header() << "\n";
}

OracleConfig MakeOracleConfig(const Options& o) {
  OracleConfig cfg;
  cfg.grid_points = o.grid;
  cfg.epsilon = o.epsilon;
  return cfg;
}

std::string ProfileText(const LocationProfile& p) {
  return Fixed(p.x1) + " " + Fixed(p.x2);
}

// ---------------------------------------------------------------------------
// Subcommands.

void RunKappa(const Options& o, std::ostream& out) {
  const Density d = BuildDensity(o.density);
  const double kappa = Kappa(d);
  if (o.format == "json") {
    PrintJson(out, {{"density", d.Describe()}, {"kappa", kappa}}, nullptr);
  } else {
    out << Fixed(kappa) << "\n";
  }
}

void RunAlpha(const Options& o, std::ostream& out) {
  const Density d = BuildDensity(o.density);
  const ResolvedReach reach = ResolveReach(o.reach);
  const double alpha = Alpha(d, reach.delta);
  if (o.format == "json") {
    PrintJson(out,
              {{"density", d.Describe()},
               {"delta", Number(reach.delta)},
               {"alpha", alpha}},
              &reach);
  } else {
    PrintHeader(out, reach);
    out << Fixed(alpha) << "\n";
  }
}

void RunClassify(const Options& o, std::ostream& out) {
  const Density d = BuildDensity(o.density);
  const ResolvedReach reach = ResolveReach(o.reach);
  const GameConfig game(d, reach.delta);
  const LocationProfile profile{o.x1, o.x2};
  const Differentiation label = ClassifyProfile(game, profile);
  const double kappa = Kappa(d);
  const Regime regime = game.unbounded() ? Regime::kNoDifferentiation
                                         : RegimeFor(reach.delta, kappa);
  if (o.format == "json") {
    PrintJson(out,
              {{"profile", ToJson(profile)},
               {"delta", Number(reach.delta)},
               {"differentiation", std::string(DifferentiationName(label))},
               {"regime", std::string(RegimeName(regime))}},
              &reach);
  } else {
    PrintHeader(out, reach);
    out << "profile: " << DifferentiationName(label) << "\n"
        << "regime: " << RegimeName(regime) << "\n";
  }
}

void RunEquilibria(const Options& o, std::ostream& out) {
  if (o.sample < 0) throw UsageError("--sample must be non-negative");
  const Density d = BuildDensity(o.density);
  const ResolvedReach reach = ResolveReach(o.reach);
  const EquilibriumReport report = Solve(GameConfig(d, reach.delta));
  if (o.format == "json") {
    PrintJson(out, ToJson(report, o.sample), &reach);
    return;
  }
  const std::vector<LocationProfile> samples =
      o.sample > 0 ? report.SampleContinuum(o.sample)
                   : std::vector<LocationProfile>{};
  if (o.format == "csv") {
    PrintHeader(out, reach);
    out << "kind,x1,x2\n";
    for (const auto& p : report.point_equilibria) {
      out << "point," << Fixed(p.x1) << "," << Fixed(p.x2) << "\n";
    }
    for (const auto& p : samples) {
      out << "sample," << Fixed(p.x1) << "," << Fixed(p.x2) << "\n";
    }
    return;
  }
  PrintHeader(out, reach);
  out << "regime: " << RegimeName(report.regime) << "\n"
      << "kappa: " << Fixed(report.kappa) << "\n"
      << "delta: " << Fixed(report.delta) << "\n";
  if (report.boundary_case) out << "boundary_case: true\n";
  for (const auto& p : report.point_equilibria) {
    out << "equilibrium: " << ProfileText(p) << "\n";
  }
  if (report.continuum) {
    out << "continuum: " << ContinuumForm(*report.continuum);
    if (const auto* line = std::get_if<ShiftContinuum>(&*report.continuum)) {
      out << " for m in [" << Fixed(-line->half_range) << ", "
          << Fixed(line->half_range) << "]\n";
    } else {
      const auto& box = std::get<GapBoxContinuum>(*report.continuum);
      out << " with x1 >= " << Fixed(box.lo) << ", x2 <= " << Fixed(box.hi)
          << ", gap >= " << Fixed(box.min_gap) << "\n";
    }
  }
  for (const auto& p : samples) out << "sample: " << ProfileText(p) << "\n";
}

void RunPayoff(const Options& o, std::ostream& out) {
  const Density d = BuildDensity(o.density);
  const ResolvedReach reach = ResolveReach(o.reach);
  const GameConfig game(d, reach.delta);
  const LocationProfile profile{o.x1, o.x2};
  const double q1 = Payoff(game, profile, Firm::kFirst);
  const double q2 = Payoff(game, profile, Firm::kSecond);
  if (o.format == "json") {
    PrintJson(out, {{"profile", ToJson(profile)}, {"q1", q1}, {"q2", q2}},
              &reach);
  } else if (o.format == "csv") {
    PrintHeader(out, reach);
    out << "x1,x2,q1,q2\n"
        << Fixed(o.x1) << "," << Fixed(o.x2) << "," << Fixed(q1) << ","
        << Fixed(q2) << "\n";
  } else {
    PrintHeader(out, reach);
    out << "q1: " << Fixed(q1) << "\nq2: " << Fixed(q2) << "\n";
  }
}

void RunBestResponse(const Options& o, std::ostream& out) {
  const Density d = BuildDensity(o.density);
  const ResolvedReach reach = ResolveReach(o.reach);
  const BestResponseResult br =
      BestResponse(GameConfig(d, reach.delta), o.opponent, MakeOracleConfig(o));
  if (o.format == "json") {
    json doc = ToJson(br);
    doc["opponent"] = o.opponent;
    PrintJson(out, doc, &reach);
  } else {
    PrintHeader(out, reach);
    out << "best_response: " << Fixed(br.location) << "\n"
        << "payoff: " << Fixed(br.value) << "\n";
  }
}

void RunVerify(const Options& o, std::ostream& out) {
  const Density d = BuildDensity(o.density);
  const ResolvedReach reach = ResolveReach(o.reach);
  const NashCheck check = IsEpsilonNash(GameConfig(d, reach.delta),
                                        {o.x1, o.x2}, MakeOracleConfig(o));
  if (o.format == "json") {
    PrintJson(out, ToJson(check), &reach);
  } else {
    PrintHeader(out, reach);
    out << (check.ok ? "ok" : "not_equilibrium") << "\n"
        << "worst_deviation: firm " << static_cast<int>(check.worst_deviation.firm)
        << " to " << Fixed(check.worst_deviation.location) << " gains "
        << check.worst_deviation.gain << "\n";
  }
}

void RunScan(const Options& o, std::ostream& out) {
  const Density d = BuildDensity(o.density);
  const ResolvedReach reach = ResolveReach(o.reach);
  const ScanResult scan =
      EquilibriumScan(GameConfig(d, reach.delta), MakeOracleConfig(o));
  if (o.format == "json") {
    PrintJson(out, ToJson(scan), &reach);
  } else if (o.format == "csv") {
    PrintHeader(out, reach);
    out << "cluster,x1,x2\n";
    for (std::size_t k = 0; k < scan.clusters.size(); ++k) {
      for (const auto& c : scan.clusters[k].cells) {
        out << k << "," << Fixed(c.x1) << "," << Fixed(c.x2) << "\n";
      }
    }
  } else {
    PrintHeader(out, reach);
    out << "clusters: " << scan.clusters.size() << "\n";
    for (const auto& c : scan.clusters) {
      out << "cluster: " << c.cells.size() << " cells, x1 in ["
          << Fixed(c.x1_min) << ", " << Fixed(c.x1_max) << "], x2 in ["
          << Fixed(c.x2_min) << ", " << Fixed(c.x2_max) << "]\n";
    }
  }
}

void RunSurplus(const Options& o, std::ostream& out) {
  const Density d = BuildDensity(o.density);
  const ResolvedReach reach = ResolveReach(o.reach);
  if (!reach.market) {
    throw UsageError("surplus needs --v, --p and --cost rather than --delta");
  }
  const GameConfig game(d, reach.delta);
  if (o.maximize) {
    const SurplusOptimum opt = MaximizeSurplus(game, *reach.cost, *reach.market);
    if (o.format == "json") {
      PrintJson(out, ToJson(opt), &reach);
    } else {
      PrintHeader(out, reach);
      out << "maximizer: " << ProfileText(opt.profile) << "\n"
          << "cs: " << Fixed(opt.cs) << "\n"
          << "symmetric_confirmed: "
          << (opt.symmetric_confirmed ? "true" : "false") << "\n";
    }
    return;
  }
  const SurplusReport report =
      ConsumerSurplus(game, {o.x1, o.x2}, *reach.cost, *reach.market);
  if (o.format == "json") {
    PrintJson(out, {{"profile", ToJson(report.profile)}, {"cs", report.cs}},
              &reach);
  } else {
    PrintHeader(out, reach);
    out << Fixed(report.cs) << "\n";
  }
}

void RunProfitMax(const Options& o, std::ostream& out) {
  const Density d = BuildDensity(o.density);
  const ResolvedReach reach = ResolveReach(o.reach);
  const ProfitOptimum opt = MaximizeAggregateProfit(GameConfig(d, reach.delta));
  if (o.format == "json") {
    PrintJson(out, ToJson(opt), &reach);
  } else {
    PrintHeader(out, reach);
    out << "maximizer: " << ProfileText(opt.profile) << "\n"
        << "grid_confirms: " << (opt.grid_confirms ? "true" : "false") << "\n";
  }
}

void RunFigure1(const Options& o, std::ostream& out) {
  if (o.steps < 2) throw UsageError("--steps must be at least 2");
  if (!(o.delta_min > 0.0) || !(o.delta_max > o.delta_min)) {
    throw UsageError("--delta-min and --delta-max must satisfy 0 < min < max");
  }
  const Density d = BuildDensity(o.density);
  const CostFunction cost = BuildCost(o.reach);
  std::vector<double> deltas(o.steps);
  for (int k = 0; k < o.steps; ++k) {
    deltas[k] = o.delta_min + k * (o.delta_max - o.delta_min) / (o.steps - 1);
  }
  const std::vector<Figure1Row> rows = Figure1Curve(d, cost, deltas);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"delta", r.delta},
                     {"eq_ratio", r.eq_ratio},
                     {"profit_ratio", r.profit_ratio},
                     {"cs_ratio", r.cs_ratio}});
    }
    PrintJson(out, {{"rows", arr}}, nullptr);
  } else {
    WriteFigure1Csv(out, rows);
  }
}

void RunValidateDensity(const Options& o, std::ostream& out, int& exit_code) {
  const Density d = BuildDensity(o.density);
  const ValidationReport report = Validate(d, o.grid_points, o.tol);
  if (o.format == "json") {
    json doc = ToJson(report);
    doc["density"] = d.Describe();
    PrintJson(out, doc, nullptr);
  } else {
    for (const auto& c : report.checks) {
      out << c.name << ": " << CheckStatusName(c.status) << " (residual "
          << c.worst_residual << ")";
      if (!c.note.empty()) out << " " << c.note;
      out << "\n";
    }
  }
  // A density that fails the model assumptions is a domain error.
  if (!report.ok()) exit_code = kExitDomainError;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Two-firm location game with unit-demand consumers",
               "hotelling"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> text_json = {"text", "json"};
  const std::vector<std::string> all_formats = {"text", "json", "csv"};

  auto* kappa = app.add_subcommand("kappa", "Half-height distance of f");
  AddDensityFlags(kappa, o.density);
  AddFormatFlag(kappa, o.format, text_json);

  auto* alpha = app.add_subcommand("alpha", "Continuum half-width");
  AddDensityFlags(alpha, o.density);
  AddReachFlags(alpha, o.reach);
  AddFormatFlag(alpha, o.format, text_json);

  auto* classify = app.add_subcommand("classify", "Label a profile and regime");
  AddDensityFlags(classify, o.density);
  AddReachFlags(classify, o.reach);
  AddFormatFlag(classify, o.format, text_json);
  classify->add_option("--x1", o.x1)->required();
  classify->add_option("--x2", o.x2)->required();

  auto* equilibria = app.add_subcommand("equilibria", "Equilibrium set");
  AddDensityFlags(equilibria, o.density);
  AddReachFlags(equilibria, o.reach);
  AddFormatFlag(equilibria, o.format, all_formats);
  equilibria->add_option("--sample", o.sample, "Continuum members to list");

  auto* payoff = app.add_subcommand("payoff", "Demand of both firms");
  AddDensityFlags(payoff, o.density);
  AddReachFlags(payoff, o.reach);
  AddFormatFlag(payoff, o.format, all_formats);
  payoff->add_option("--x1", o.x1)->required();
  payoff->add_option("--x2", o.x2)->required();

  auto* best = app.add_subcommand("best-response", "Grid best response");
  AddDensityFlags(best, o.density);
  AddReachFlags(best, o.reach);
  AddFormatFlag(best, o.format, text_json);
  best->add_option("--opponent", o.opponent)->required();
  best->add_option("--grid", o.grid);
  best->add_option("--epsilon", o.epsilon);

  auto* verify = app.add_subcommand("verify", "Epsilon-Nash certificate");
  AddDensityFlags(verify, o.density);
  AddReachFlags(verify, o.reach);
  AddFormatFlag(verify, o.format, text_json);
  verify->add_option("--x1", o.x1)->required();
  verify->add_option("--x2", o.x2)->required();
  verify->add_option("--grid", o.grid);
  verify->add_option("--epsilon", o.epsilon);

  auto* scan = app.add_subcommand("scan", "Brute-force equilibrium scan");
  AddDensityFlags(scan, o.density);
  AddReachFlags(scan, o.reach);
  AddFormatFlag(scan, o.format, all_formats);
  scan->add_option("--grid", o.grid)->default_val(801);
  scan->add_option("--epsilon", o.epsilon);

  auto* surplus = app.add_subcommand("surplus", "Consumer surplus");
  AddDensityFlags(surplus, o.density);
  AddReachFlags(surplus, o.reach);
  AddFormatFlag(surplus, o.format, text_json);
  surplus->add_option("--x1", o.x1);
  surplus->add_option("--x2", o.x2);
  surplus->add_flag("--maximize", o.maximize, "Find the surplus maximizer");

  auto* profit = app.add_subcommand("profit-max", "Aggregate profit maximizer");
  AddDensityFlags(profit, o.density);
  AddReachFlags(profit, o.reach);
  AddFormatFlag(profit, o.format, text_json);

  auto* figure = app.add_subcommand("figure1", "Efficiency ratios over delta");
  AddDensityFlags(figure, o.density);
  AddCostFlags(figure, o.reach);
  o.format = "csv";
  AddFormatFlag(figure, o.format, {"csv", "json"});
  figure->add_option("--delta-min", o.delta_min);
  figure->add_option("--delta-max", o.delta_max);
  figure->add_option("--steps", o.steps);

  auto* validate = app.add_subcommand("validate-density", "Check assumptions");
  AddDensityFlags(validate, o.density);
  AddFormatFlag(validate, o.format, text_json);
  validate->add_option("--grid-points", o.grid_points);
  validate->add_option("--tol", o.tol);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  CLI::App* const parsed = app.get_subcommands().front();
  // Every subcommand registers its own copy of the reach flags.
  o.reach.delta_opt = parsed->get_option_no_throw("--delta");
  o.reach.v_opt = parsed->get_option_no_throw("--v");
  o.reach.p_opt = parsed->get_option_no_throw("--p");
  o.reach.cost_opt = parsed->get_option_no_throw("--cost");
  // figure1 alone defaults to csv; everything else to text.
  if (!figure->parsed() && parsed->get_option("--format")->count() == 0) {
    o.format = "text";
  }

  int exit_code = kExitOk;
  std::ostringstream buffer;
  try {
    const std::string name = parsed->get_name();
    if (name == "kappa") RunKappa(o, buffer);
    if (name == "alpha") RunAlpha(o, buffer);
    if (name == "classify") RunClassify(o, buffer);
    if (name == "equilibria") RunEquilibria(o, buffer);
    if (name == "payoff") RunPayoff(o, buffer);
    if (name == "best-response") RunBestResponse(o, buffer);
    if (name == "verify") RunVerify(o, buffer);
    if (name == "scan") RunScan(o, buffer);
    if (name == "surplus") RunSurplus(o, buffer);
    if (name == "profit-max") RunProfitMax(o, buffer);
    if (name == "figure1") RunFigure1(o, buffer);
    if (name == "validate-density") RunValidateDensity(o, buffer, exit_code);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error [" << ErrorCodeName(e.code()) << "]: " << e.what() << "\n";
    return kExitDomainError;
  }
  out << buffer.str();
  return exit_code;
}

}  // namespace hotelling
