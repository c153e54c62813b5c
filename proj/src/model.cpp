#include "arexit/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "arexit/errors.hpp"
#include "overloaded.hpp"

namespace arexit {

namespace {

void require(bool ok, std::string_view family, std::string_view what) {
  if (!ok) {
    std::ostringstream os;
    os << family << ": " << what;
    throw DomainError(os.str());
  }
}

// Index of the tabulated segment used on the given side of x; -1 and n-1
// denote the clamped tails.
std::ptrdiff_t tab_segment(const maps::Tabulated& t, double x, bool from_left) {
  auto it = from_left ? std::lower_bound(t.x.begin(), t.x.end(), x)
                      : std::upper_bound(t.x.begin(), t.x.end(), x);
  return std::distance(t.x.begin(), it) - 1;
}

double tab_slope(const maps::Tabulated& t, std::ptrdiff_t seg) {
  const auto n = static_cast<std::ptrdiff_t>(t.x.size());
  if (seg < 0 || seg >= n - 1) return 0.0;
  return (t.y[seg + 1] - t.y[seg]) / (t.x[seg + 1] - t.x[seg]);
}

}  // namespace

MapSpec MapSpec::linear(double a) {
  require(std::abs(a) < 1.0, "linear", "requires |a| < 1");
  return MapSpec(maps::Linear{a});
}

MapSpec MapSpec::dead_zone(double a, double b) {
  require(std::abs(a) <= 1.0, "dead_zone", "requires |a| <= 1");
  require(b >= 0.0 && b < 1.0, "dead_zone", "requires 0 <= b < 1");
  require(std::abs(a) < 1.0 || b > 0.0, "dead_zone", "|a| = 1 requires b > 0");
  return MapSpec(maps::DeadZone{a, b});
}

MapSpec MapSpec::saturated(double a, double c) {
  require(a > 0.0 && a < 1.0, "saturated", "requires 0 < a < 1");
  require(c > 0.0 && c <= 1.0, "saturated", "requires 0 < c <= 1");
  return MapSpec(maps::Saturated{a, c});
}

MapSpec MapSpec::half_line(double a) {
  require(a > 0.0 && a < 1.0, "half_line", "requires 0 < a < 1");
  return MapSpec(maps::HalfLine{a});
}

MapSpec MapSpec::two_slope(double a, double b) {
  require(a > 0.0 && a < 1.0, "two_slope", "requires 0 < a < 1");
  require(b > 0.0 && b < 1.0, "two_slope", "requires 0 < b < 1");
  return MapSpec(maps::TwoSlope{a, b});
}

MapSpec MapSpec::abs_value(double a) {
  require(std::abs(a) < 1.0, "abs_value", "requires |a| < 1");
  return MapSpec(maps::AbsValue{a});
}

MapSpec MapSpec::quadratic(double a) {
  require(a >= 0.0 && std::isfinite(a), "quadratic", "requires a >= 0");
  return MapSpec(maps::Quadratic{a});
}

MapSpec MapSpec::ricker(double r) {
  require(r > 0.0 && std::isfinite(r), "ricker", "requires r > 0");
  return MapSpec(maps::Ricker{r});
}

MapSpec MapSpec::tabulated(std::vector<double> x, std::vector<double> y) {
  require(x.size() >= 2, "tabulated", "needs at least two knots");
  require(x.size() == y.size(), "tabulated", "x and y must have the same length");
  for (std::size_t i = 0; i < x.size(); ++i) {
    require(std::isfinite(x[i]) && std::isfinite(y[i]), "tabulated", "knots must be finite");
    if (i > 0) require(x[i] > x[i - 1], "tabulated", "knot abscissae must be strictly increasing");
  }
  return MapSpec(maps::Tabulated{std::move(x), std::move(y)});
}

std::string_view MapSpec::name() const noexcept {
  return std::visit(overloaded{
                        [](const maps::Linear&) { return "linear"; },
                        [](const maps::DeadZone&) { return "dead_zone"; },
                        [](const maps::Saturated&) { return "saturated"; },
                        [](const maps::HalfLine&) { return "half_line"; },
                        [](const maps::TwoSlope&) { return "two_slope"; },
                        [](const maps::AbsValue&) { return "abs_value"; },
                        [](const maps::Quadratic&) { return "quadratic"; },
                        [](const maps::Ricker&) { return "ricker"; },
                        [](const maps::Tabulated&) { return "tabulated"; },
                    },
                    family_);
}

double MapSpec::operator()(double x) const {
  return std::visit(
      overloaded{
          [x](const maps::Linear& m) { return m.a * x; },
          [x](const maps::DeadZone& m) {
            if (x <= -m.b) return m.a * (x + m.b);
            if (x >= m.b) return m.a * (x - m.b);
            return 0.0;
          },
          [x](const maps::Saturated& m) { return m.a * std::clamp(x, -m.c, m.c); },
          [x](const maps::HalfLine& m) { return x < 0.0 ? 0.0 : -m.a * x; },
          [x](const maps::TwoSlope& m) { return x < 0.0 ? -m.b * x : -m.a * x; },
          [x](const maps::AbsValue& m) { return m.a * std::abs(x); },
          [x](const maps::Quadratic& m) { return m.a * x * x; },
          [x](const maps::Ricker& m) { return (x + m.r) * std::exp(-x) - m.r; },
          [x](const maps::Tabulated& t) {
            if (x <= t.x.front()) return t.y.front();
            if (x >= t.x.back()) return t.y.back();
            auto seg = tab_segment(t, x, false);
            double w = (x - t.x[seg]) / (t.x[seg + 1] - t.x[seg]);
            return t.y[seg] + w * (t.y[seg + 1] - t.y[seg]);
          },
      },
      family_);
}

std::vector<double> MapSpec::kinks() const {
  return std::visit(overloaded{
                        [](const maps::DeadZone& m) {
                          return m.b > 0.0 ? std::vector<double>{-m.b, m.b} : std::vector<double>{};
                        },
                        [](const maps::Saturated& m) { return std::vector<double>{-m.c, m.c}; },
                        [](const maps::HalfLine&) { return std::vector<double>{0.0}; },
                        [](const maps::TwoSlope& m) {
                          return m.a != m.b ? std::vector<double>{0.0} : std::vector<double>{};
                        },
                        [](const maps::AbsValue& m) {
                          return m.a != 0.0 ? std::vector<double>{0.0} : std::vector<double>{};
                        },
                        [](const maps::Tabulated& t) { return t.x; },
                        [](const auto&) { return std::vector<double>{}; },
                    },
                    family_);
}

bool MapSpec::fixed_point_at_origin() const { return (*this)(0.0) == 0.0; }

bool MapSpec::declared_contractive() const noexcept {
  return std::visit(overloaded{
                        [](const maps::Linear&) { return true; },
                        [](const maps::DeadZone& m) { return std::abs(m.a) < 1.0; },
                        [](const maps::Saturated&) { return true; },
                        [](const maps::HalfLine&) { return true; },
                        [](const maps::TwoSlope&) { return true; },
                        [](const maps::AbsValue&) { return true; },
                        [](const auto&) { return false; },
                    },
                    family_);
}

Parity MapSpec::declared_parity() const noexcept {
  return std::visit(overloaded{
                        [](const maps::Linear&) { return Parity::odd; },
                        [](const maps::DeadZone&) { return Parity::odd; },
                        [](const maps::Saturated&) { return Parity::odd; },
                        [](const maps::TwoSlope& m) { return m.a == m.b ? Parity::odd : Parity::none; },
                        [](const maps::AbsValue&) { return Parity::even; },
                        [](const maps::Quadratic&) { return Parity::even; },
                        [](const auto&) { return Parity::none; },
                    },
                    family_);
}

double eval_map(const MapSpec& map, double x) { return map(x); }

OneSidedSlopes map_slopes(const MapSpec& map, double x) {
  // Slope of the branch that contains x approached from the left/right.
  auto piecewise = [x](double below, double kink, double above) {
    return OneSidedSlopes{x <= kink ? below : above, x < kink ? below : above};
  };
  return std::visit(
      overloaded{
          [](const maps::Linear& m) { return OneSidedSlopes{m.a, m.a}; },
          [x](const maps::DeadZone& m) {
            auto slope = [&](double z, bool left) {
              if (left ? z <= -m.b : z < -m.b) return m.a;
              if (left ? z > m.b : z >= m.b) return m.a;
              return 0.0;
            };
            return OneSidedSlopes{slope(x, true), slope(x, false)};
          },
          [x](const maps::Saturated& m) {
            double left = (x > -m.c && x <= m.c) ? m.a : 0.0;
            double right = (x >= -m.c && x < m.c) ? m.a : 0.0;
            return OneSidedSlopes{left, right};
          },
          [&](const maps::HalfLine& m) { return piecewise(0.0, 0.0, -m.a); },
          [&](const maps::TwoSlope& m) { return piecewise(-m.b, 0.0, -m.a); },
          [&](const maps::AbsValue& m) { return piecewise(-m.a, 0.0, m.a); },
          [x](const maps::Quadratic& m) {
            double s = 2.0 * m.a * x;
            return OneSidedSlopes{s, s};
          },
          [x](const maps::Ricker& m) {
            double s = std::exp(-x) * (1.0 - x - m.r);
            return OneSidedSlopes{s, s};
          },
          [x](const maps::Tabulated& t) {
            return OneSidedSlopes{tab_slope(t, tab_segment(t, x, true)),
                                  tab_slope(t, tab_segment(t, x, false))};
          },
      },
      map.family());
}

std::optional<double> map_derivative(const MapSpec& map, double x, double kink_tol) {
  for (double k : map.kinks()) {
    if (std::abs(x - k) <= kink_tol) return std::nullopt;
  }
  return map_slopes(map, x).right;
}

NoiseSpec NoiseSpec::gaussian() { return NoiseSpec(noise::Gaussian{}); }

NoiseSpec NoiseSpec::laplace(double b) {
  require(b > 0.0 && std::isfinite(b), "laplace", "requires b > 0");
  return NoiseSpec(noise::Laplace{b});
}

NoiseSpec NoiseSpec::cauchy() { return NoiseSpec(noise::Cauchy{}); }

NoiseSpec NoiseSpec::poisson_diff(double lambda) {
  require(lambda > 0.0 && std::isfinite(lambda), "poisson_diff", "requires lambda > 0");
  return NoiseSpec(noise::PoissonDiff{lambda});
}

std::string_view NoiseSpec::name() const noexcept {
  return std::visit(overloaded{
                        [](const noise::Gaussian&) { return "gaussian"; },
                        [](const noise::Laplace&) { return "laplace"; },
                        [](const noise::Cauchy&) { return "cauchy"; },
                        [](const noise::PoissonDiff&) { return "poisson_diff"; },
                    },
                    family_);
}

std::optional<double> NoiseSpec::rate(double z) const {
  return std::visit(overloaded{
                        [z](const noise::Gaussian&) -> std::optional<double> { return 0.5 * z * z; },
                        [z](const noise::Laplace& n) -> std::optional<double> { return std::abs(z) / n.b; },
                        [](const noise::Cauchy&) -> std::optional<double> { return std::nullopt; },
                        [z](const noise::PoissonDiff&) -> std::optional<double> { return std::abs(z); },
                    },
                    family_);
}

double NoiseSpec::speed(double eps) const {
  return std::visit(overloaded{
                        [eps](const noise::Gaussian&) { return eps * eps; },
                        [eps](const noise::PoissonDiff&) { return eps / std::abs(std::log(eps)); },
                        [eps](const auto&) { return eps; },
                    },
                    family_);
}

ScaledKind NoiseSpec::scaled_kind() const noexcept {
  return std::holds_alternative<noise::Cauchy>(family_) ? ScaledKind::linear_scaled
                                                        : ScaledKind::log_scaled;
}

double NoiseSpec::scaled_statistic(double eps, double mean_tau) const {
  if (scaled_kind() == ScaledKind::linear_scaled) return eps * mean_tau;
  return speed(eps) * std::log(mean_tau);
}

double sample_noise(const NoiseSpec& spec, Rng& rng) {
  return std::visit(overloaded{
                        [&rng](const noise::Gaussian&) { return std::normal_distribution<double>{}(rng); },
                        [&rng](const noise::Laplace& n) {
                          double mag = std::exponential_distribution<double>{1.0 / n.b}(rng);
                          return (rng() & 1u) ? mag : -mag;
                        },
                        [&rng](const noise::Cauchy&) { return std::cauchy_distribution<double>{}(rng); },
                        [&rng](const noise::PoissonDiff& n) {
                          std::poisson_distribution<long long> pois(n.lambda);
                          long long first = pois(rng);
                          long long second = pois(rng);
                          return static_cast<double>(first - second);
                        },
                    },
                    spec.family());
}

void ProcessConfig::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw DomainError("epsilon must be positive");
  if (!(half_width > 0.0) || !std::isfinite(half_width)) throw DomainError("half_width must be positive");
  if (!(std::abs(start) < half_width)) throw DomainError("start must satisfy |start| < half_width");
}

double step(const ProcessConfig& cfg, double x, double xi) { return cfg.map(x) + cfg.epsilon * xi; }

}  // namespace arexit
