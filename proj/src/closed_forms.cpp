#include "arexit/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "arexit/errors.hpp"
#include "overloaded.hpp"

namespace arexit::closed_forms {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

constexpr double kQuotientTie = 1e-12;

}  // namespace

double linear_bound(double a, double h) {
  require(std::abs(a) < 1.0, "linear_bound: requires |a| < 1");
  require(h > 0.0, "linear_bound: requires h > 0");
  return h * h * (1.0 - a * a) / 2.0;
}

double deadzone_quotient(double a, double b, int n) {
  require(std::abs(a) <= 1.0, "deadzone_quotient: requires |a| <= 1");
  require(b >= 0.0 && b < 1.0, "deadzone_quotient: requires 0 <= b < 1");
  require(std::abs(a) < 1.0 || b > 0.0, "deadzone_quotient: |a| = 1 requires b > 0");
  require(n >= 1, "deadzone_quotient: requires N >= 1");
  // Geometric sums written out so a = 0 and |a| = 1 need no special case:
  //   drift = a + ... + a^{N-1} = (a - a^N)/(1 - a)
  //   weight = 1 + a^2 + ... + a^{2(N-1)} = (1 - a^{2N})/(1 - a^2)
  double drift = 0.0;
  double weight = 0.0;
  double p = 1.0;
  for (int k = 0; k < n; ++k) {
    if (k > 0) drift += p;
    weight += p * p;
    p *= a;
  }
  double num = 1.0 + drift * b;
  return num * num / weight;
}

DeadZoneBound deadzone_bound(double a, double b, int max_length) {
  require(max_length >= 1, "deadzone_bound: requires M >= 1");
  // Flipping the sign of every other path point maps the a < 0 problem onto
  // the |a| one at equal cost; the quotient itself assumes a >= 0.
  std::vector<double> q(max_length);
  for (int n = 1; n <= max_length; ++n) q[n - 1] = deadzone_quotient(std::abs(a), b, n);
  double best = *std::min_element(q.begin(), q.end());
  int n_star = 1;
  while (q[n_star - 1] > best * (1.0 + kQuotientTie)) ++n_star;
  return {0.5 * best, n_star};
}

double saturated_bound(double a, double c) {
  require(a > 0.0 && a < 1.0, "saturated_bound: requires 0 < a < 1");
  require(c > 0.0 && c <= 1.0, "saturated_bound: requires 0 < c <= 1");
  if (c >= a) return 0.5 * (1.0 - a * a);
  double jump = 1.0 - a * c;
  return 0.5 * (jump * jump + (1.0 - a * a) * c * c);
}

double halfline_bound(double a) {
  require(a > 0.0 && a <= 1.0, "halfline_bound: requires 0 < a <= 1");
  return 1.0 / (2.0 * (1.0 + a * a));
}

double twoslope_bound(double a, double b) {
  require(a > 0.0 && a < 1.0, "twoslope_bound: requires 0 < a < 1");
  require(b > 0.0 && b < 1.0, "twoslope_bound: requires 0 < b < 1");
  double top = 1.0 - (a * b) * (a * b);
  return 0.5 * std::min(top / (1.0 + a * a), top / (1.0 + b * b));
}

double absval_bound(double a) {
  require(std::abs(a) < 1.0, "absval_bound: requires |a| < 1");
  return (1.0 - a * a) / 2.0;
}

double quadratic_bound(double a) {
  require(a >= 0.0 && std::isfinite(a), "quadratic_bound: requires a >= 0");
  if (a <= 0.5) return 0.5;
  return 0.5 * (1.0 / a - 1.0 / (4.0 * a * a));
}

NoiseConstant noise_constants(const NoiseSpec& noise) {
  return std::visit(
      overloaded{
          [](const noise::Gaussian&) -> NoiseConstant {
            throw DomainError("gaussian innovations: no map-independent constant; use the action bound");
          },
          [](const noise::Laplace& n) {
            return NoiseConstant{ConstantKind::log_scaled, 1.0 / n.b, true, "eps", ""};
          },
          [](const noise::Cauchy&) {
            return NoiseConstant{ConstantKind::linear_scaled, std::numbers::pi / 2.0, false, "eps (eps * E tau)",
                                 ""};
          },
          [](const noise::PoissonDiff& n) {
            return NoiseConstant{ConstantKind::log_scaled, n.lambda, false, "eps/|log eps|",
                                 "valid when f is nondecreasing with f(0) = 0 and |f(x)| < |x| off 0"};
          },
      },
      noise.family());
}

FamilyBound bound_for(const MapSpec& map, double h, int max_length) {
  require(h > 0.0, "bound: requires half_width > 0");
  // Every family with a closed form maps onto itself under x -> x/h with
  // rescaled parameters; the action then scales by h^2.
  const double scale = h * h;
  return std::visit(
      overloaded{
          [&](const maps::Linear& m) { return FamilyBound{linear_bound(m.a, h)}; },
          [&](const maps::DeadZone& m) {
            double b = m.b / h;
            if (b >= 1.0) return FamilyBound{0.5 * scale, 1, {"dead zone covers the whole interval"}};
            auto r = deadzone_bound(m.a, b, max_length);
            return FamilyBound{scale * r.value, r.n_star};
          },
          [&](const maps::Saturated& m) {
            return FamilyBound{scale * saturated_bound(m.a, std::min(m.c / h, 1.0))};
          },
          [&](const maps::HalfLine& m) { return FamilyBound{scale * halfline_bound(m.a)}; },
          [&](const maps::TwoSlope& m) { return FamilyBound{scale * twoslope_bound(m.a, m.b)}; },
          [&](const maps::AbsValue& m) { return FamilyBound{scale * absval_bound(m.a)}; },
          [&](const maps::Quadratic& m) {
            double a = m.a * h;
            FamilyBound out{scale * quadratic_bound(a)};
            if (quadratic_is_two_step_only(a))
              out.caveats.emplace_back("upper bound from N=2 only; not necessarily the best bound");
            return out;
          },
          [&](const auto&) -> FamilyBound {
            throw DomainError(std::string("no closed form for map family '") + std::string(map.name()) +
                              "'; pass --numeric to use the minimizer");
          },
      },
      map.family());
}

}  // namespace arexit::closed_forms
