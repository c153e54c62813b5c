#include "arexit/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <thread>

#include "arexit/errors.hpp"

namespace arexit {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

void McConfig::validate() const {
  if (trials < 1) throw DomainError("trials must be >= 1");
  if (max_steps < 1) throw DomainError("max_steps must be >= 1");
  if (workers < 1) throw DomainError("workers must be >= 1");
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(splitmix64(seed) ^ splitmix64(trial ^ 0x5851f42d4c957f2dULL));
}

ExitSample simulate_exit(const ProcessConfig& cfg, const McConfig& mc, std::uint64_t trial) {
  Rng rng(trial_seed(mc.seed, trial));
  double x = cfg.start;
  for (std::int64_t n = 1; n <= mc.max_steps; ++n) {
    x = step(cfg, x, sample_noise(cfg.noise, rng));
    if (std::abs(x) >= cfg.half_width) return {n, false};
  }
  return {mc.max_steps, true};
}

McEstimate estimate(const ProcessConfig& cfg, const McConfig& mc) {
  cfg.validate();
  mc.validate();

  std::vector<ExitSample> samples(static_cast<std::size_t>(mc.trials));
  auto run_slice = [&](int worker) {
    for (std::int64_t i = worker; i < mc.trials; i += mc.workers) samples[i] = simulate_exit(cfg, mc, i);
  };
  if (mc.workers == 1) {
    run_slice(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(mc.workers);
    for (int w = 0; w < mc.workers; ++w) pool.emplace_back(run_slice, w);
  }

  // Reduce in trial order so the floating-point result is worker-independent.
  McEstimate out;
  out.epsilon = cfg.epsilon;
  out.trials = mc.trials;
  double sum = 0.0;
  for (const auto& s : samples) {
    sum += static_cast<double>(s.tau);
    out.censored += s.censored ? 1 : 0;
  }
  if (out.censored == mc.trials) throw NumericalError("all Monte Carlo trials censored at max_steps");

  const double n = static_cast<double>(mc.trials);
  out.mean_tau = sum / n;
  double ss = 0.0;
  for (const auto& s : samples) {
    double d = static_cast<double>(s.tau) - out.mean_tau;
    ss += d * d;
  }
  out.std_error = mc.trials > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;

  out.scaled = cfg.noise.scaled_statistic(cfg.epsilon, out.mean_tau);
  out.scaled_std_error = cfg.noise.scaled_kind() == ScaledKind::linear_scaled
                             ? cfg.epsilon * out.std_error
                             : cfg.noise.speed(cfg.epsilon) * out.std_error / out.mean_tau;
  return out;
}

std::vector<McEstimate> scaling_curve(const ProcessConfig& tmpl, std::span<const double> epsilons,
                                      const McConfig& mc) {
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0.0)) throw DomainError("epsilons must be positive");
    if (i > 0 && !(epsilons[i] < epsilons[i - 1])) throw DomainError("epsilons must be sorted descending");
  }
  std::vector<McEstimate> out;
  out.reserve(epsilons.size());
  for (double eps : epsilons) {
    ProcessConfig cfg = tmpl;
    cfg.epsilon = eps;
    out.push_back(estimate(cfg, mc));
  }
  return out;
}

void write_csv_header(std::ostream& os) { os << "epsilon,trials,censored,mean_tau,stderr,scaled,bound_reference\n"; }

void write_csv_row(std::ostream& os, const McEstimate& e, std::optional<double> bound_reference) {
  const auto old = os.precision(10);
  os << e.epsilon << ',' << e.trials << ',' << e.censored << ',' << e.mean_tau << ',' << e.std_error << ','
     << e.scaled << ',';
  if (bound_reference) os << *bound_reference;
  os << '\n';
  os.precision(old);
}

}  // namespace arexit
