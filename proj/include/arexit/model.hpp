#pragma once

#include <optional>
#include <random>
#include <string_view>
#include <variant>
#include <vector>

namespace arexit {

// Map families for the autoregression function f in X_{n+1} = f(X_n) + eps*xi.
namespace maps {
struct Linear { double a; };            // a x
struct DeadZone { double a, b; };       // 0 on (-b, b), a(x -/+ b) outside
struct Saturated { double a, c; };      // a x on [-c, c], +/- a c outside
struct HalfLine { double a; };          // 0 for x < 0, -a x for x >= 0
struct TwoSlope { double a, b; };       // -b x for x < 0, -a x for x >= 0
struct AbsValue { double a; };          // a |x|
struct Quadratic { double a; };         // a x^2
struct Ricker { double r; };            // (x + r) e^{-x} - r
struct Tabulated {
  std::vector<double> x;
  std::vector<double> y;
};
}  // namespace maps

using MapFamily = std::variant<maps::Linear, maps::DeadZone, maps::Saturated, maps::HalfLine,
                               maps::TwoSlope, maps::AbsValue, maps::Quadratic, maps::Ricker,
                               maps::Tabulated>;

enum class Parity { none, odd, even };

/// Immutable, validated autoregression function. Construct through the named
/// factories; each one rejects parameters outside the family's domain with
/// DomainError.
class MapSpec {
 public:
  static MapSpec linear(double a);
  static MapSpec dead_zone(double a, double b);
  static MapSpec saturated(double a, double c);
  static MapSpec half_line(double a);
  static MapSpec two_slope(double a, double b);
  static MapSpec abs_value(double a);
  static MapSpec quadratic(double a);
  static MapSpec ricker(double r);
  /// Piecewise-linear interpolation through (x[i], y[i]); clamped to the end
  /// values outside the knot range.
  static MapSpec tabulated(std::vector<double> x, std::vector<double> y);

  const MapFamily& family() const noexcept { return family_; }
  std::string_view name() const noexcept;

  double operator()(double x) const;

  /// Abscissae where f is not differentiable.
  std::vector<double> kinks() const;

  bool fixed_point_at_origin() const;

  /// Families known analytically to satisfy |f(x)| < |x| on [-1,1] \ {0}.
  bool declared_contractive() const noexcept;
  Parity declared_parity() const noexcept;

 private:
  explicit MapSpec(MapFamily f) : family_(std::move(f)) {}
  MapFamily family_;
};

double eval_map(const MapSpec& map, double x);

struct OneSidedSlopes {
  double left;
  double right;
};

OneSidedSlopes map_slopes(const MapSpec& map, double x);

/// f'(x), or nullopt when x lies within kink_tol of a kink.
std::optional<double> map_derivative(const MapSpec& map, double x, double kink_tol = 1e-12);

// Innovation distributions.
namespace noise {
struct Gaussian {};
struct Laplace { double b; };  // density exp(-|x|/b) / (2b)
struct Cauchy {};
struct PoissonDiff { double lambda; };
}  // namespace noise

using NoiseFamily = std::variant<noise::Gaussian, noise::Laplace, noise::Cauchy, noise::PoissonDiff>;

enum class ScaledKind {
  log_scaled,     // q(eps) * log E tau
  linear_scaled,  // eps * E tau
};

class NoiseSpec {
 public:
  static NoiseSpec gaussian();
  static NoiseSpec laplace(double b);
  static NoiseSpec cauchy();
  static NoiseSpec poisson_diff(double lambda);

  const NoiseFamily& family() const noexcept { return family_; }
  std::string_view name() const noexcept;

  /// Rate function of eps*xi. Cauchy innovations have none.
  std::optional<double> rate(double z) const;
  /// Speed q(eps). For Cauchy this is the linear scale eps.
  double speed(double eps) const;
  ScaledKind scaled_kind() const noexcept;
  double scaled_statistic(double eps, double mean_tau) const;

 private:
  explicit NoiseSpec(NoiseFamily f) : family_(f) {}
  NoiseFamily family_;
};

using Rng = std::mt19937_64;

double sample_noise(const NoiseSpec& noise, Rng& rng);

struct ProcessConfig {
  MapSpec map;
  NoiseSpec noise;
  double epsilon;
  double half_width;
  double start = 0.0;

  /// Throws DomainError unless eps > 0, h > 0 and |start| < h.
  void validate() const;
};

double step(const ProcessConfig& cfg, double x, double xi);

}  // namespace arexit
