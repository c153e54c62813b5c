#include "arexit/action.hpp"

#include <cmath>
#include <sstream>

#include "arexit/errors.hpp"
#include "overloaded.hpp"

namespace arexit {

namespace {

constexpr double kFlagTol = 1e-12;

std::string violation(std::string_view what, int n, double y, double h) {
  std::ostringstream os;
  os.precision(10);
  os << "path constraint violated: " << what << " (n = " << n << ", y = " << y << ", h = " << h << ")";
  return os.str();
}

template <class Penalty>
PathCost path_cost(const Path& path, const MapSpec& map, Penalty penalty) {
  path.validate();
  PathCost out;
  out.increments.reserve(path.points.size() - 1);
  for (std::size_t n = 1; n < path.points.size(); ++n) {
    double s = path.points[n] - map(path.points[n - 1]);
    out.increments.push_back(s);
    out.value += penalty(s);
  }
  return out;
}

}  // namespace

void Path::validate() const {
  if (!(half_width > 0.0)) throw ConstraintViolation("path half_width must be positive");
  if (points.size() < 2) throw ConstraintViolation("path needs at least one step");
  const int n_last = length();
  for (int n = 1; n < n_last; ++n) {
    if (!(std::abs(points[n]) < half_width))
      throw ConstraintViolation(violation("interior point outside (-h, h)", n, points[n], half_width));
  }
  if (!(std::abs(points.back()) >= half_width))
    throw ConstraintViolation(violation("final point inside (-h, h)", n_last, points.back(), half_width));
}

Path Path::mirrored() const {
  Path out{points, half_width};
  for (double& y : out.points) y = -y;
  return out;
}

PathCost quad_cost(const Path& path, const MapSpec& map) {
  PathCost c = path_cost(path, map, [](double s) { return s * s; });
  c.value *= 0.5;
  return c;
}

PathCost l1_cost(const Path& path, const MapSpec& map, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("l1 weight must be positive");
  PathCost c = path_cost(path, map, [](double s) { return std::abs(s); });
  c.value *= lambda;
  return c;
}

std::vector<std::optional<double>> stationarity_residual(const Path& path, const MapSpec& map) {
  path.validate();
  const auto& y = path.points;
  std::vector<std::optional<double>> out;
  for (int n = 1; n < path.length(); ++n) {
    auto slope = map_derivative(map, y[n]);
    if (!slope) {
      out.emplace_back(std::nullopt);
      continue;
    }
    out.emplace_back((y[n] - map(y[n - 1])) - *slope * (y[n + 1] - map(y[n])));
  }
  return out;
}

LemmaFlags lemma_predicates(const MapSpec& map) {
  LemmaFlags flags{true, true, true};
  const int mid = kLemmaGridPoints / 2;
  std::vector<double> xs(kLemmaGridPoints), fs(kLemmaGridPoints);
  for (int i = 0; i < kLemmaGridPoints; ++i) {
    // Symmetric by construction so that xs[mid + k] == -xs[mid - k].
    xs[i] = static_cast<double>(i - mid) / mid;
    fs[i] = map(xs[i]);
  }
  const double f0 = fs[mid];
  flags.increasing_fixed0 = std::abs(f0) <= kFlagTol;
  for (int i = 1; i < kLemmaGridPoints && flags.increasing_fixed0; ++i) {
    if (fs[i] < fs[i - 1] - kFlagTol) flags.increasing_fixed0 = false;
  }
  for (int k = 0; k <= mid; ++k) {
    if (std::abs(fs[mid + k] + fs[mid - k]) > kFlagTol) flags.odd = false;
  }
  for (int i = 0; i < kLemmaGridPoints; ++i) {
    if (i != mid && !(std::abs(fs[i]) < std::abs(xs[i]))) flags.strictly_contractive = false;
  }
  return flags;
}

std::optional<LemmaFlags> analytic_lemma_flags(const MapSpec& map) {
  using R = std::optional<LemmaFlags>;
  return std::visit(overloaded{
                        [](const maps::Linear& m) -> R { return LemmaFlags{m.a >= 0.0, true, true}; },
                        [](const maps::DeadZone& m) -> R { return LemmaFlags{m.a >= 0.0, true, true}; },
                        [](const maps::Saturated&) -> R { return LemmaFlags{true, true, true}; },
                        [](const maps::HalfLine&) -> R { return LemmaFlags{false, false, true}; },
                        [](const maps::TwoSlope& m) -> R { return LemmaFlags{false, m.a == m.b, true}; },
                        [](const maps::AbsValue& m) -> R {
                          return LemmaFlags{m.a == 0.0, m.a == 0.0, true};
                        },
                        [](const maps::Quadratic& m) -> R {
                          return LemmaFlags{m.a == 0.0, m.a == 0.0, m.a < 1.0};
                        },
                        [](const auto&) -> R { return std::nullopt; },
                    },
                    map.family());
}

}  // namespace arexit
