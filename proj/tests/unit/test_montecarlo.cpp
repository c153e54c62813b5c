#include <doctest.h>

#include <cmath>
#include <sstream>

#include "arexit/errors.hpp"
#include "arexit/montecarlo.hpp"

using namespace arexit;

namespace {
ProcessConfig linear_process(double eps, NoiseSpec noise = NoiseSpec::gaussian()) {
  return ProcessConfig{MapSpec::linear(0.5), noise, eps, 1.0, 0.0};
}
}  // namespace

TEST_CASE("large noise exits in one step") {
  McConfig mc;
  mc.trials = 100000;
  mc.seed = 11;
  auto cfg = linear_process(10.0);
  std::int64_t ones = 0;
  for (std::int64_t i = 0; i < mc.trials; ++i) ones += simulate_exit(cfg, mc, i).tau == 1 ? 1 : 0;
  // P(|10 xi| >= 1) = 2 Phi(-0.1)
  const double p = std::erfc(0.1 / std::sqrt(2.0));
  CHECK(std::abs(static_cast<double>(ones) / mc.trials - p) < 0.005);
  CHECK(estimate(cfg, mc).mean_tau < 1.3);

  mc.trials = 20000;
  CHECK(estimate(linear_process(100.0), mc).mean_tau < 1.02);
}

TEST_CASE("censoring") {
  McConfig mc;
  mc.trials = 50;
  mc.max_steps = 10;
  auto tiny = linear_process(0.01);
  auto s = simulate_exit(tiny, mc, 0);
  CHECK(s.tau == 10);
  CHECK(s.censored);
  CHECK_THROWS_AS(estimate(tiny, mc), NumericalError);

  auto mixed = linear_process(0.5);
  mc.max_steps = 3;
  mc.trials = 2000;
  auto e = estimate(mixed, mc);
  CHECK(e.censored > 0);
  CHECK(e.censored < e.trials);
  CHECK(e.lower_bound());
}

TEST_CASE("configuration errors") {
  McConfig mc;
  mc.trials = 10;
  auto bad = linear_process(0.5);
  bad.half_width = 0.0;
  CHECK_THROWS_AS(estimate(bad, mc), DomainError);
  mc.trials = 0;
  CHECK_THROWS_AS(estimate(linear_process(0.5), mc), DomainError);
  mc.trials = 10;
  mc.workers = 0;
  CHECK_THROWS_AS(estimate(linear_process(0.5), mc), DomainError);
}

TEST_CASE("results do not depend on the worker count") {
  McConfig mc;
  mc.trials = 3000;
  mc.seed = 42;
  auto cfg = linear_process(0.5);
  auto one = estimate(cfg, mc);
  for (int w : {2, 3, 8}) {
    mc.workers = w;
    auto many = estimate(cfg, mc);
    CHECK(many.mean_tau == one.mean_tau);
    CHECK(many.std_error == one.std_error);
    CHECK(many.scaled == one.scaled);
  }
  CHECK(trial_seed(1, 2) != trial_seed(2, 1));
  CHECK(trial_seed(5, 9) == trial_seed(5, 9));
}

TEST_CASE("scaled statistic per noise kind") {
  McConfig mc;
  mc.trials = 500;
  auto g = estimate(linear_process(0.5), mc);
  CHECK(g.scaled == doctest::Approx(0.25 * std::log(g.mean_tau)));
  auto c = estimate(linear_process(0.1, NoiseSpec::cauchy()), mc);
  CHECK(c.scaled == doctest::Approx(0.1 * c.mean_tau));
  auto l = estimate(linear_process(0.3, NoiseSpec::laplace(1.0)), mc);
  CHECK(l.scaled == doctest::Approx(0.3 * std::log(l.mean_tau)));
  for (const auto& e : {g, c, l}) CHECK(e.mean_tau >= 1.0);
}

TEST_CASE("scaling_curve") {
  McConfig mc;
  mc.trials = 200;
  CHECK(scaling_curve(linear_process(1.0), {}, mc).empty());
  std::vector<double> eps{0.6, 0.5};
  auto rows = scaling_curve(linear_process(1.0), eps, mc);
  REQUIRE(rows.size() == 2u);
  CHECK(rows[1].epsilon == 0.5);
  std::vector<double> unsorted{0.5, 0.6};
  CHECK_THROWS_AS(scaling_curve(linear_process(1.0), unsorted, mc), DomainError);
  std::vector<double> nonpos{0.5, 0.0};
  CHECK_THROWS_AS(scaling_curve(linear_process(1.0), nonpos, mc), DomainError);

  std::ostringstream os;
  write_csv_header(os);
  write_csv_row(os, rows[0], 0.375);
  write_csv_row(os, rows[1], std::nullopt);
  std::string text = os.str();
  CHECK(text.rfind("epsilon,trials,censored,mean_tau,stderr,scaled,bound_reference\n", 0) == 0);
  CHECK(text.find(",0.375\n") != std::string::npos);
  CHECK(text.back() == '\n');
  CHECK(text[text.size() - 2] == ',');
}
