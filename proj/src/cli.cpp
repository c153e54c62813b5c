#include "arexit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "arexit/action.hpp"
#include "arexit/closed_forms.hpp"
#include "arexit/errors.hpp"
#include "arexit/json_io.hpp"
#include "arexit/minimizer.hpp"
#include "arexit/montecarlo.hpp"
#include "arexit/stationary.hpp"

namespace arexit {

using nlohmann::json;

namespace {

struct Flags {
  std::string map = "linear";
  std::optional<double> a, b, c, r;
  std::vector<double> knots;
  std::string noise = "gaussian";
  std::optional<double> lambda, noise_b;
  double epsilon = 0.1;
  std::vector<double> epsilons;
  bool epsilons_given = false;
  double half_width = 1.0;
  double start = 0.0;
  int max_length = 50;
  int grid = 401;
  std::int64_t trials = 10000;
  std::int64_t max_steps = 10'000'000;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string format;
  std::string out;
  bool numeric = false;
  std::string config;
};

/// Ten significant digits, the precision of every number the tool prints.
double sig10(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return std::stod(buf);
}

json sig10(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(sig10(x));
  return out;
}

// The run configuration as JSON; flags first, then --config merged over them.
json build_config(const Flags& f) {
  json map{{"family", f.map}};
  if (f.a) map["a"] = *f.a;
  if (f.b) map["b"] = *f.b;
  if (f.c) map["c"] = *f.c;
  if (f.r) map["r"] = *f.r;
  if (!f.knots.empty()) {
    if (f.knots.size() % 2 != 0) throw DomainError("--knots takes x,y pairs");
    json knots = json::array();
    for (std::size_t i = 0; i + 1 < f.knots.size(); i += 2) knots.push_back({f.knots[i], f.knots[i + 1]});
    map["knots"] = knots;
  }
  json noise{{"family", f.noise}};
  if (f.noise == "laplace") noise["b"] = f.noise_b.value_or(1.0);
  if (f.noise == "poisson_diff") noise["lambda"] = f.lambda.value_or(1.0);

  json cfg{{"map", map},
           {"noise", noise},
           {"epsilon", f.epsilon},
           {"half_width", f.half_width},
           {"start", f.start},
           {"minimizer", {{"M", f.max_length}, {"grid", f.grid}}},
           {"mc", {{"trials", f.trials}, {"max_steps", f.max_steps}, {"seed", f.seed}, {"workers", f.workers}}},
           {"numeric", f.numeric}};
  if (f.epsilons_given) cfg["epsilons"] = f.epsilons;

  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw DomainError("cannot open config file " + f.config);
    json file;
    try {
      in >> file;
    } catch (const json::exception& e) {
      throw DomainError("invalid JSON in " + f.config + ": " + e.what());
    }
    // A saved report carries its configuration under "config".
    if (file.contains("config") && file["config"].is_object()) file = file["config"];
    cfg.merge_patch(file);
  }
  return cfg;
}

MinimizerConfig minimizer_config(const json& cfg, const ProcessConfig& proc) {
  MinimizerConfig m;
  const json& mj = cfg.at("minimizer");
  m.max_length = mj.value("M", 50);
  m.grid_points = mj.value("grid", 401);
  m.refine_tol = mj.value("refine_tol", 1e-10);
  m.max_sweeps = mj.value("max_sweeps", 500);
  m.start = proc.start;
  if (const auto* pd = std::get_if<noise::PoissonDiff>(&proc.noise.family())) {
    m.cost = CostKind::l1;
    m.l1_weight = pd->lambda;
  }
  m.validate();
  return m;
}

McConfig mc_config(const json& cfg) {
  McConfig mc;
  const json& mj = cfg.at("mc");
  mc.trials = mj.value("trials", std::int64_t{10000});
  mc.max_steps = mj.value("max_steps", std::int64_t{10'000'000});
  mc.seed = mj.value("seed", std::uint64_t{0});
  mc.workers = mj.value("workers", 1);
  mc.validate();
  return mc;
}

std::vector<double> epsilons_of(const json& cfg) {
  if (!cfg.contains("epsilons")) return {};
  return cfg["epsilons"].get<std::vector<double>>();
}

json map_params(const MapSpec& map) {
  json p = to_json(map);
  p.erase("family");
  return p;
}

struct BoundReport {
  json body;
  std::optional<double> value;
};

BoundReport compute_bound(const json& cfg, const ProcessConfig& proc) {
  const bool numeric = cfg.value("numeric", false);
  const MinimizerConfig mcfg = minimizer_config(cfg, proc);
  json r{{"command", "bound"},
         {"family", std::string(proc.map.name())},
         {"params", map_params(proc.map)},
         {"noise", to_json(proc.noise)},
         {"half_width", proc.half_width},
         {"caveats", json::array()}};

  const bool gaussian = std::holds_alternative<noise::Gaussian>(proc.noise.family());
  const bool poisson = std::holds_alternative<noise::PoissonDiff>(proc.noise.family());
  if (!gaussian && !(poisson && numeric)) {
    auto k = closed_forms::noise_constants(proc.noise);
    r["method"] = "noise_constant";
    r["value"] = sig10(k.value);
    r["scaling"] = k.kind == closed_forms::ConstantKind::log_scaled ? "log" : "linear";
    r["speed"] = k.speed;
    r["equality"] = k.equality;
    if (!k.caveat.empty()) r["caveats"].push_back(k.caveat);
    return {r, k.value};
  }
  if (numeric) {
    ActionResult res = min_action(proc.map, proc.half_width, mcfg);
    r["method"] = "numeric";
    r["value"] = sig10(res.value);
    r["n_star"] = res.n_star;
    if (!res.converged) r["caveats"].push_back("refinement stopped at max_sweeps");
    return {r, res.value};
  }
  auto fb = closed_forms::bound_for(proc.map, proc.half_width, mcfg.max_length);
  r["method"] = "closed_form";
  r["value"] = sig10(fb.value);
  if (fb.n_star > 0) r["n_star"] = fb.n_star;
  for (const auto& c : fb.caveats) r["caveats"].push_back(c);
  return {r, fb.value};
}

std::optional<double> bound_reference(const json& cfg, const ProcessConfig& proc) {
  try {
    return compute_bound(cfg, proc).value;
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

json oracle_report(const json& cfg, const ProcessConfig& proc) {
  const MinimizerConfig mcfg = minimizer_config(cfg, proc);
  ActionResult res = min_action(proc.map, proc.half_width, mcfg);
  const double grid_value = *std::min_element(res.horizon_values.begin(), res.horizon_values.end());

  std::vector<double> increments;
  for (int n = 1; n <= res.path.length(); ++n)
    increments.push_back(res.path.points[n] - proc.map(res.path.points[n - 1]));

  json r{{"command", "oracle"},
         {"family", std::string(proc.map.name())},
         {"params", map_params(proc.map)},
         {"half_width", proc.half_width},
         {"cost", mcfg.cost == CostKind::quadratic ? "quadratic" : "l1"},
         {"value", sig10(res.value)},
         {"grid_value", sig10(grid_value)},
         {"n_star", res.n_star},
         {"converged", res.converged},
         {"path", sig10(res.path.points)},
         {"increments", sig10(increments)}};

  if (mcfg.cost == CostKind::quadratic) {
    double worst = 0.0;
    int skipped = 0;
    for (const auto& v : stationarity_residual(res.path, proc.map)) {
      if (v) worst = std::max(worst, std::abs(*v));
      else ++skipped;
    }
    r["max_stationarity_residual"] = sig10(worst);
    r["kink_points_skipped"] = skipped;
  }
  try {
    r["closed_form"] = sig10(closed_forms::bound_for(proc.map, proc.half_width, mcfg.max_length).value);
  } catch (const DomainError&) {
    r["closed_form"] = nullptr;
  }
  return r;
}

json estimate_json(const McEstimate& e, std::optional<double> ref) {
  json r{{"epsilon", sig10(e.epsilon)}, {"trials", e.trials},   {"censored", e.censored},
         {"mean_tau", sig10(e.mean_tau)}, {"stderr", sig10(e.std_error)}, {"scaled", sig10(e.scaled)},
         {"scaled_stderr", sig10(e.scaled_std_error)}, {"lower_bound", e.lower_bound()}};
  r["bound_reference"] = ref ? json(sig10(*ref)) : json(nullptr);
  return r;
}

void emit_json(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

int dispatch(const std::string& command, const Flags& flags, std::ostream& os) {
  const json cfg = build_config(flags);
  const ProcessConfig proc = process_from_json(cfg);
  const std::string format = flags.format.empty() ? (command == "sweep" ? "csv" : "json") : flags.format;
  if (format != "json" && format != "csv") throw DomainError("--format must be json or csv");

  if (command == "bound") {
    json r = compute_bound(cfg, proc).body;
    r["config"] = cfg;
    emit_json(os, r);
  } else if (command == "oracle" || command == "path") {
    json r = oracle_report(cfg, proc);
    r["command"] = command;
    r["config"] = cfg;
    if (command == "path" && format == "csv") {
      os.precision(10);
      os << "n,y,increment\n";
      for (std::size_t n = 0; n < r["path"].size(); ++n) {
        os << n << ',' << r["path"][n].get<double>() << ',';
        if (n > 0) os << r["increments"][n - 1].get<double>();
        os << '\n';
      }
    } else {
      emit_json(os, r);
    }
  } else if (command == "simulate") {
    McEstimate e = estimate(proc, mc_config(cfg));
    auto ref = bound_reference(cfg, proc);
    if (format == "csv") {
      write_csv_header(os);
      write_csv_row(os, e, ref);
    } else {
      json r = estimate_json(e, ref);
      r["command"] = "simulate";
      r["config"] = cfg;
      emit_json(os, r);
    }
  } else if (command == "sweep") {
    std::vector<double> eps = epsilons_of(cfg);
    if (eps.empty()) throw DomainError("sweep needs a non-empty --epsilons list");
    auto rows = scaling_curve(proc, eps, mc_config(cfg));
    auto ref = bound_reference(cfg, proc);
    if (format == "csv") {
      write_csv_header(os);
      for (const auto& e : rows) write_csv_row(os, e, ref);
    } else {
      json arr = json::array();
      for (const auto& e : rows) arr.push_back(estimate_json(e, ref));
      emit_json(os, json{{"command", "sweep"}, {"rows", arr}, {"config", cfg}});
    }
  } else if (command == "stationary") {
    const auto* av = cfg["map"].contains("a") ? &cfg["map"]["a"] : nullptr;
    if (!av || !av->is_number()) throw DomainError("stationary needs --a");
    const double a = av->get<double>();
    StationaryDensity{a, 1.0}.validate();
    std::vector<double> eps = epsilons_of(cfg);
    if (eps.empty()) eps = {0.1, 0.05, 0.02, 0.01};
    const double x = -proc.half_width;
    const double target = proc.half_width * proc.half_width * (1.0 - a * a) / 2.0;
    auto values = log_limit(a, x, eps);
    if (format == "csv") {
      os.precision(10);
      os << "epsilon,neg_eps2_log_density,target\n";
      for (std::size_t i = 0; i < eps.size(); ++i) os << eps[i] << ',' << values[i] << ',' << target << '\n';
    } else {
      json rows = json::array();
      for (std::size_t i = 0; i < eps.size(); ++i)
        rows.push_back({{"epsilon", sig10(eps[i])}, {"value", sig10(values[i])}});
      emit_json(os, json{{"command", "stationary"},
                         {"a", a},
                         {"x", x},
                         {"rows", rows},
                         {"target", sig10(target)},
                         {"config", cfg}});
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Large-deviation exit-time bounds for nonlinear autoregressive processes", "arexit"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  app.add_option("--map", f.map, "Map family")
      ->check(CLI::IsMember({"linear", "dead_zone", "saturated", "half_line", "two_slope", "abs_value", "quadratic",
                             "ricker", "tabulated"}));
  app.add_option("--a", f.a, "Map parameter a");
  app.add_option("--b", f.b, "Map parameter b");
  app.add_option("--c", f.c, "Map parameter c");
  app.add_option("--r", f.r, "Ricker growth rate r");
  app.add_option("--knots", f.knots, "Tabulated map knots x0,y0,x1,y1,...")->delimiter(',');
  app.add_option("--noise", f.noise, "Innovation family")
      ->check(CLI::IsMember({"gaussian", "laplace", "cauchy", "poisson_diff"}));
  app.add_option("--lambda", f.lambda, "Poisson-difference rate lambda");
  app.add_option("--noise-b", f.noise_b, "Laplace scale b");
  app.add_option("--epsilon", f.epsilon, "Noise scale eps");
  auto* eps_opt = app.add_option("--epsilons", f.epsilons, "Comma-separated eps list (descending)")->delimiter(',');
  app.add_option("--half-width", f.half_width, "Exit half-width h");
  app.add_option("--start", f.start, "Starting point x0");
  app.add_option("--M", f.max_length, "Longest path considered");
  app.add_option("--grid", f.grid, "Grid points on [-h, h]");
  app.add_option("--trials", f.trials, "Monte Carlo trials");
  app.add_option("--max-steps", f.max_steps, "Per-trial step cap");
  app.add_option("--seed", f.seed, "Monte Carlo seed");
  app.add_option("--workers", f.workers, "Monte Carlo worker threads");
  app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", f.out, "Write output to FILE instead of stdout");
  app.add_flag("--numeric", f.numeric, "Use the numerical minimizer instead of a closed form");
  app.add_option("--config", f.config, "JSON configuration file; overrides flags");

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"bound", "Exit-time bound (closed form, or --numeric)"},
      {"oracle", "Grid DP + refinement diagnostics"},
      {"simulate", "Monte Carlo exit-time estimate"},
      {"sweep", "Monte Carlo scaling curve over --epsilons (CSV)"},
      {"path", "Optimal exit path"},
      {"stationary", "Stationary-density limit for f(x) = -|a x|"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitDomain;
  }
  f.epsilons_given = eps_opt->count() > 0;

  std::string command;
  for (auto* sub : app.get_subcommands()) command = sub->get_name();

  try {
    if (f.out.empty()) return dispatch(command, f, out);
    std::ofstream file(f.out);
    if (!file) throw DomainError("cannot open output file " + f.out);
    return dispatch(command, f, file);
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const json::exception& e) {
    err << "error: bad configuration: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace arexit
