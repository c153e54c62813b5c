#pragma once

#include <span>
#include <vector>

namespace arexit {

/// Stationary density of X_{n+1} = -|a X_n| + eps xi with Gaussian xi:
///   (1/eps) sqrt(2(1-a^2)/pi) exp(-(1-a^2) x^2 / (2 eps^2)) Phi(-a x / eps).
struct StationaryDensity {
  double a;
  double epsilon;

  /// Throws DomainError unless 0 < a < 1 and eps > 0.
  void validate() const;
};

double std_normal_cdf(double z);

/// log Phi(z), finite for every finite z.
double log_std_normal_cdf(double z);

double density(const StationaryDensity& d, double x);

/// Sum of the logs of the three factors; no underflow for small eps.
double log_density(const StationaryDensity& d, double x);

/// -eps^2 log density(x) for each eps; tends to (1-a^2)/2 at x = -1.
std::vector<double> log_limit(double a, double x, std::span<const double> epsilons);

}  // namespace arexit
