#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "arexit/model.hpp"

namespace arexit {

struct McConfig {
  std::int64_t trials = 10000;
  std::int64_t max_steps = 10'000'000;
  std::uint64_t seed = 0;
  int workers = 1;

  void validate() const;
};

struct ExitSample {
  std::int64_t tau;
  bool censored;
};

struct McEstimate {
  double epsilon = 0.0;
  std::int64_t trials = 0;
  std::int64_t censored = 0;
  double mean_tau = 0.0;
  double std_error = 0.0;
  /// q(eps) log(mean_tau) for log-scaled noise, eps * mean_tau for Cauchy.
  double scaled = 0.0;
  /// Delta-method standard error of `scaled`.
  double scaled_std_error = 0.0;

  /// With censored trials the mean (and hence `scaled`) is only a lower bound.
  bool lower_bound() const noexcept { return censored > 0; }
};

/// Seed of the generator used by trial `trial` of a run seeded with `seed`.
/// Depends on nothing else, so results do not change with the worker count.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// First n >= 1 with |X_n| >= h, capped at max_steps.
ExitSample simulate_exit(const ProcessConfig& cfg, const McConfig& mc, std::uint64_t trial);

/// Throws NumericalError when every trial is censored.
McEstimate estimate(const ProcessConfig& cfg, const McConfig& mc);

/// One estimate per epsilon (strictly descending, all positive), each using
/// the same seed.
std::vector<McEstimate> scaling_curve(const ProcessConfig& tmpl, std::span<const double> epsilons,
                                      const McConfig& mc);

// CSV columns: epsilon,trials,censored,mean_tau,stderr,scaled,bound_reference
void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const McEstimate& e, std::optional<double> bound_reference);

}  // namespace arexit
