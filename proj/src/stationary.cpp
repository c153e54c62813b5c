#include "arexit/stationary.hpp"

#include <cmath>
#include <numbers>

#include "arexit/errors.hpp"

namespace arexit {

namespace {

// Beyond this |z| the lower tail of Phi is taken from its asymptotic series.
constexpr double kTailSwitch = 8.0;

// log Phi(z) for z <= -kTailSwitch:
//   Phi(z) ~ phi(z)/(-z) * sum_k (-1)^k (2k-1)!! / z^{2k}
double log_lower_tail(double z) {
  const double inv2 = 1.0 / (z * z);
  double term = 1.0;
  double series = 1.0;
  for (int k = 1; k <= 12; ++k) {
    term *= -(2.0 * k - 1.0) * inv2;
    series += term;
  }
  return -0.5 * z * z - 0.5 * std::log(2.0 * std::numbers::pi) - std::log(-z) + std::log(series);
}

}  // namespace

void StationaryDensity::validate() const {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("stationary density requires 0 < a < 1");
  if (!(epsilon > 0.0)) throw DomainError("stationary density requires eps > 0");
}

double std_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double log_std_normal_cdf(double z) {
  if (z <= -kTailSwitch) return log_lower_tail(z);
  if (z > 0.0) return std::log1p(-0.5 * std::erfc(z / std::numbers::sqrt2));
  return std::log(std_normal_cdf(z));
}

double log_density(const StationaryDensity& d, double x) {
  d.validate();
  const double one_minus = 1.0 - d.a * d.a;
  const double u = x / d.epsilon;
  return -std::log(d.epsilon) + 0.5 * std::log(2.0 * one_minus / std::numbers::pi) - 0.5 * one_minus * u * u +
         log_std_normal_cdf(-d.a * u);
}

double density(const StationaryDensity& d, double x) { return std::exp(log_density(d, x)); }

std::vector<double> log_limit(double a, double x, std::span<const double> epsilons) {
  std::vector<double> out;
  out.reserve(epsilons.size());
  for (double eps : epsilons) out.push_back(-eps * eps * log_density(StationaryDensity{a, eps}, x));
  return out;
}

}  // namespace arexit
