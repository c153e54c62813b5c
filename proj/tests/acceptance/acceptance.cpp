// Acceptance checks, one PASS/FAIL line per criterion.
// Usage: arexit_acceptance [criterion...]   (no argument runs 1..9)

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "arexit/action.hpp"
#include "arexit/closed_forms.hpp"
#include "arexit/minimizer.hpp"
#include "arexit/montecarlo.hpp"
#include "arexit/stationary.hpp"

using namespace arexit;
namespace cf = arexit::closed_forms;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 5) failures.push_back(what);
    }
  }
};

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  return v;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(8);
  os << x;
  return os.str();
}

// 1: dead-zone table.
void table_rows(Outcome& o) {
  struct Row {
    double a, b;
    int n;
    double value;
  };
  const std::array<Row, 5> rows{{{0.0, 0.2, 1, 1.0}, {0.4, 0.2, 1, 1.0}, {0.5, 0.2, 2, 0.968},
                                 {0.8, 0.2, 3, 0.8094}, {0.95, 0.2, 4, 0.6888}}};
  for (const auto& r : rows) {
    auto best = cf::deadzone_bound(r.a, r.b, 50);
    const double q = 2.0 * best.value;
    o.require(std::round(q * 1e4) == std::round(r.value * 1e4),
              "a=" + fmt(r.a) + " value " + fmt(q) + " vs " + fmt(r.value));
    o.require(best.n_star == r.n, "a=" + fmt(r.a) + " n_star " + std::to_string(best.n_star));
  }
  o.detail << "5 rows";
}

// 2: DP vs closed forms.
void oracle_equivalence(Outcome& o) {
  MinimizerConfig cfg;  // G = 401, M = 50
  int cases = 0;
  double worst = 0.0;
  auto compare = [&](const MapSpec& m, double expected) {
    const double v = min_action(m, 1.0, cfg).value;
    const double rel = std::abs(v - expected) / expected;
    worst = std::max(worst, rel);
    ++cases;
    o.require(rel <= 0.02, std::string(m.name()) + " dp " + fmt(v) + " vs " + fmt(expected));
  };

  for (double a : linspace(-0.95, 0.95, 20)) compare(MapSpec::linear(a), cf::linear_bound(a));
  for (double a : linspace(0.0, 0.95, 20))
    for (double b : {0.1, 0.2, 0.4}) compare(MapSpec::dead_zone(a, b), cf::deadzone_bound(a, b).value);
  for (double b : {0.1, 0.25, 0.3, 0.5}) compare(MapSpec::dead_zone(1.0, b), cf::deadzone_bound(1.0, b).value);
  for (double a : linspace(0.05, 0.95, 20))
    for (double c : {0.2, 0.5, 0.9}) compare(MapSpec::saturated(a, c), cf::saturated_bound(a, c));
  for (double a : linspace(0.05, 0.95, 20)) compare(MapSpec::half_line(a), cf::halfline_bound(a));
  for (double a : linspace(0.05, 0.95, 20))
    for (double b : {0.1, 0.5, 0.9}) compare(MapSpec::two_slope(a, b), cf::twoslope_bound(a, b));
  for (double a : linspace(-0.95, 0.95, 20)) compare(MapSpec::abs_value(a), cf::absval_bound(a));
  for (double a : linspace(0.025, 0.5, 20)) compare(MapSpec::quadratic(a), cf::quadratic_bound(a));

  int upper_cases = 0;
  for (double a : linspace(0.525, 1.0, 20)) {
    const double v = min_action(MapSpec::quadratic(a), 1.0, cfg).value;
    ++upper_cases;
    o.require(v <= cf::quadratic_bound(a) + 1e-6, "quadratic a=" + fmt(a) + " dp " + fmt(v));
  }
  o.detail << cases << " two-sided cases, worst rel err " << fmt(worst) << ", "
           << upper_cases << " quadratic upper-bound cases";
}

// 3: Ricker.
void ricker(Outcome& o) {
  const double v1 = min_action(MapSpec::ricker(1.5), 0.5).value;
  const double v2 = min_action(MapSpec::ricker(0.6), 0.4).value;
  o.require(v1 >= 0.085 && v1 <= 0.095, "r=1.5: " + fmt(v1));
  o.require(v2 >= 0.050 && v2 <= 0.060, "r=0.6: " + fmt(v2));
  o.require(cf::linear_bound(0.5, 0.5) == 0.09375, "linear_bound(0.5,0.5)");
  o.require(std::abs(cf::linear_bound(0.4, 0.4) - 0.0672) < 1e-15, "linear_bound(0.4,0.4)");
  o.require(v1 < cf::linear_bound(0.5, 0.5) && v2 < cf::linear_bound(0.4, 0.4), "numeric above linear bound");
  o.detail << "r=1.5 h=0.5: " << fmt(v1) << ", r=0.6 h=0.4: " << fmt(v2);
}

// 4: path-shape lemmas, exit-side symmetry, domination.
void lemmas(Outcome& o) {
  MinimizerConfig cfg;
  const double cell = 2.0 / (cfg.grid_points - 1);
  std::vector<MapSpec> maps;
  for (double a : linspace(-0.9, 0.95, 12)) maps.push_back(MapSpec::linear(a));
  for (double a : linspace(0.1, 1.0, 10))
    for (double b : {0.1, 0.3}) maps.push_back(MapSpec::dead_zone(a, b));
  for (double a : linspace(0.1, 0.95, 8))
    for (double c : {0.3, 0.8}) maps.push_back(MapSpec::saturated(a, c));
  for (double a : {0.3, 0.6, 0.9}) {
    maps.push_back(MapSpec::two_slope(a, a));
    maps.push_back(MapSpec::two_slope(a, 0.5));
    maps.push_back(MapSpec::half_line(a));
    maps.push_back(MapSpec::abs_value(a));
    maps.push_back(MapSpec::quadratic(a));
  }

  int sign_checked = 0, mono_checked = 0, odd_checked = 0;
  for (const auto& m : maps) {
    const LemmaFlags flags = lemma_predicates(m);
    if (flags.increasing_fixed0) {
      const auto dp = grid_dp(m, 1.0, cfg);
      const auto& y = dp.path.points;
      const double s = y.back() > 0 ? 1.0 : -1.0;
      ++sign_checked;
      for (std::size_t n = 1; n < y.size(); ++n)
        o.require(s * y[n] >= -cell, std::string(m.name()) + " sign change at n=" + std::to_string(n));
      if (flags.monotone_paths()) {
        ++mono_checked;
        for (std::size_t n = 1; n < y.size(); ++n)
          o.require(s * y[n] >= s * y[n - 1] - cell, std::string(m.name()) + " non-monotone at n=" + std::to_string(n));
      }
    }
    if (flags.odd) {
      MinimizerConfig pos = cfg, neg = cfg;
      pos.exit_side = ExitSide::positive;
      neg.exit_side = ExitSide::negative;
      const double vp = min_action(m, 1.0, pos).value;
      const double vn = min_action(m, 1.0, neg).value;
      ++odd_checked;
      o.require(std::abs(vp - vn) <= 1e-9, std::string(m.name()) + " exit sides differ by " + fmt(vp - vn));
    }
  }

  int pairs = 0, violations = 0;
  for (double a : linspace(0.0, 0.95, 10)) {
    const double lin = min_action(MapSpec::linear(a), 1.0, cfg).value;
    for (double b : {0.05, 0.2, 0.5}) {
      ++pairs;
      const double dz = min_action(MapSpec::dead_zone(a, b), 1.0, cfg).value;
      if (lin > dz + 1e-9) ++violations;
    }
  }
  o.require(violations == 0, std::to_string(violations) + " domination violations");
  o.detail << sign_checked << " sign-constancy, " << mono_checked << " monotone, "
           << odd_checked << " odd-symmetry maps; " << pairs << " domination pairs";
}

// 5: identities.
void identities(Outcome& o) {
  for (double a : linspace(-0.99, 0.99, 41)) {
    o.require(cf::absval_bound(a) == cf::linear_bound(a, 1.0), "absval vs linear at a=" + fmt(a));
  }
  for (double a : linspace(0.01, 0.99, 41)) {
    o.require(std::abs(cf::twoslope_bound(a, a) - 0.5 * (1 - a * a)) <= 1e-12, "twoslope(a,a) a=" + fmt(a));
    o.require(std::abs(cf::saturated_bound(a, a) - cf::saturated_bound(a, std::nextafter(a, 0.0))) <= 1e-12 &&
                  std::abs(cf::saturated_bound(a, a) - cf::saturated_bound(a, std::nextafter(a, 2.0))) <= 1e-12,
              "saturated continuity a=" + fmt(a));
  }
  o.require(std::abs(cf::quadratic_bound(0.5) - cf::quadratic_bound(std::nextafter(0.5, 1.0))) <= 1e-12,
            "quadratic continuity");
  o.detail << "41-point grids";
}

// 6: stationary density.
void stationary(Outcome& o) {
  using boost::math::quadrature::gauss_kronrod;
  const double inf = std::numeric_limits<double>::infinity();
  for (double a : {0.3, 0.5, 0.9}) {
    const double eps = 0.01;
    const double target = 0.5 * (1 - a * a);
    const double v = log_limit(a, -1.0, std::vector<double>{eps})[0];
    o.require(std::abs(v - target) / target <= 0.05, "a=" + fmt(a) + " limit " + fmt(v));
    o.detail << (a == 0.3 ? "" : ", ") << "a=" << a << ": " << fmt(v) << " vs " << fmt(target);
    for (double e : {1.0, 0.1, 0.01}) {
      StationaryDensity d{a, e};
      const double mass =
          gauss_kronrod<double, 61>::integrate([&](double x) { return density(d, x); }, -inf, inf, 15, 1e-12);
      o.require(std::abs(mass - 1.0) <= 1e-6, "mass " + fmt(mass) + " at a=" + fmt(a) + " eps=" + fmt(e));
    }
  }
}

// 7: Monte Carlo.
void monte_carlo(Outcome& o) {
  McConfig mc;
  mc.trials = 10000;
  mc.seed = 20240601;
  mc.workers = 4;

  ProcessConfig gauss{MapSpec::linear(0.5), NoiseSpec::gaussian(), 0.5, 1.0, 0.0};
  const std::vector<double> eps{0.5, 0.4, 0.35};
  const auto rows = scaling_curve(gauss, eps, mc);
  o.detail << "(i) scaled";
  for (const auto& r : rows) {
    o.detail << ' ' << fmt(r.scaled) << "+-" << fmt(r.scaled_std_error);
    o.require(std::isfinite(r.scaled), "(i) non-finite scaled value");
    o.require(r.censored == 0, "(i) censored trials at eps=" + fmt(r.epsilon));
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double slack = 2.0 * std::hypot(rows[i].scaled_std_error, rows[i - 1].scaled_std_error);
    o.require(rows[i].scaled <= rows[i - 1].scaled + slack, "(i) trend increases at eps=" + fmt(rows[i].epsilon));
  }
  o.require(rows.back().scaled <= 0.375 + 0.05, "(i) final scaled " + fmt(rows.back().scaled) + " > 0.425");

  ProcessConfig cauchy{MapSpec::linear(0.5), NoiseSpec::cauchy(), 0.01, 1.0, 0.0};
  const auto c = estimate(cauchy, mc);
  o.detail << "; (ii) eps*E tau " << fmt(c.scaled);
  o.require(c.censored == 0, "(ii) censored trials");
  o.require(c.scaled <= 1.81, "(ii) eps*E tau " + fmt(c.scaled));

  ProcessConfig laplace{MapSpec::linear(0.5), NoiseSpec::laplace(1.0), 0.2, 1.0, 0.0};
  const auto l = estimate(laplace, mc);
  o.detail << "; (iii) eps*log E tau " << fmt(l.scaled);
  o.require(l.censored == 0, "(iii) censored trials");
  o.require(l.scaled >= 0.7 && l.scaled <= 1.3, "(iii) eps*log E tau " + fmt(l.scaled));
}

// 8: the CLI sweep is byte-identical across worker counts.
std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

void reproducibility(Outcome& o) {
  const std::string base = std::string("\"") + AREXIT_TOOL_PATH +
                           "\" sweep --map linear --a 0.5 --epsilons 0.6,0.5,0.45 --trials 4000 --seed 7";
  int s1 = 0, s2 = 0, s3 = 0;
  const std::string one = capture(base + " --workers 1", s1);
  const std::string four = capture(base + " --workers 4", s2);
  const std::string seven = capture(base + " --workers 7", s3);
  o.require(s1 == 0 && s2 == 0 && s3 == 0, "sweep exited with nonzero status");
  o.require(!one.empty() && one == four && one == seven, "CSV differs across worker counts");
  o.detail << "workers 1/4/7, " << one.size() << " bytes";
}

// 9: L1 cost.
void l1_minimizer(Outcome& o) {
  std::vector<MapSpec> maps;
  for (double a : linspace(0.0, 0.95, 8)) {
    maps.push_back(MapSpec::linear(a));
    maps.push_back(MapSpec::dead_zone(a, 0.2));
    maps.push_back(MapSpec::saturated(std::max(a, 0.05), 0.5));
  }
  maps.push_back(MapSpec::tabulated({-1, -0.3, 0.3, 1}, {-0.6, -0.05, 0.05, 0.6}));
  int checked = 0;
  for (const auto& m : maps) {
    if (!lemma_predicates(m).monotone_paths()) continue;
    for (double lambda : {0.5, 1.0, 3.0}) {
      MinimizerConfig cfg;
      cfg.cost = CostKind::l1;
      cfg.l1_weight = lambda;
      const auto r = min_action(m, 1.0, cfg);
      ++checked;
      o.require(std::abs(r.value - lambda) <= 1e-9 && r.n_star == 1,
                std::string(m.name()) + " lambda=" + fmt(lambda) + " -> " + fmt(r.value) + " n=" + std::to_string(r.n_star));
    }
  }
  o.detail << checked << " (map, lambda) cases";
}

}  // namespace

int main(int argc, char** argv) {
  const std::array<std::pair<const char*, std::function<void(Outcome&)>>, 9> criteria{{
      {"dead-zone table reproduction", table_rows},
      {"grid DP vs closed forms", oracle_equivalence},
      {"Ricker numeric bounds", ricker},
      {"path-shape, symmetry and domination properties", lemmas},
      {"closed-form identities", identities},
      {"stationary density limit and mass", stationary},
      {"Monte Carlo scaling", monte_carlo},
      {"sweep reproducibility across workers", reproducibility},
      {"L1 minimizer", l1_minimizer},
  }};

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));
  if (selected.empty())
    for (int i = 1; i <= 9; ++i) selected.push_back(i);

  bool all = true;
  for (int k : selected) {
    if (k < 1 || k > 9) {
      std::cerr << "unknown criterion " << k << '\n';
      return 2;
    }
    const auto& [name, fn] = criteria[k - 1];
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k << " (" << name << "): " << o.detail.str();
    for (std::size_t i = 0; i < o.failures.size(); ++i) std::cout << (i == 0 ? " | failed: " : "; ") << o.failures[i];
    std::cout << " [" << fmt(secs) << " s]" << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
