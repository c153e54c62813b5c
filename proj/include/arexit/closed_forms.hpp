#pragma once

#include <string>
#include <vector>

#include "arexit/model.hpp"

namespace arexit {

/// Exact exit-time bounds for the map families with a known minimal action.
/// Each returns the limit of q(eps) log E tau (Gaussian innovations, q = eps^2)
/// and throws DomainError outside its parameter domain.
namespace closed_forms {

/// h^2 (1 - a^2) / 2 for f(x) = a x on (-h, h).
double linear_bound(double a, double half_width = 1.0);

/// (1 + b (a - a^N)/(1 - a))^2 / ((1 - a^{2N})/(1 - a^2)): the minimal
/// unnormalised action of the dead-zone map over paths of length exactly N.
/// a = 1 gives (1 + (N-1) b)^2 / N, a = 0 gives 1.
double deadzone_quotient(double a, double b, int n);

struct DeadZoneBound {
  double value;
  int n_star;
};

/// Half the minimum of deadzone_quotient over N = 1..max_length, with the
/// smallest attaining N. Negative a is reduced to |a|.
DeadZoneBound deadzone_bound(double a, double b, int max_length = 50);

double saturated_bound(double a, double c);
double halfline_bound(double a);
double twoslope_bound(double a, double b);
double absval_bound(double a);

/// 1/2 for a <= 1/2, otherwise (1/a - 1/(4a^2))/2, which is only the best
/// two-step action (see quadratic_is_two_step_only).
double quadratic_bound(double a);
inline bool quadratic_is_two_step_only(double a) { return a > 0.5; }

enum class ConstantKind { log_scaled, linear_scaled };

struct NoiseConstant {
  ConstantKind kind;
  double value;
  bool equality;        // limit rather than upper bound
  std::string speed;    // human-readable q(eps)
  std::string caveat;   // empty when unconditional
};

/// Limits for non-Gaussian innovations that do not depend on the map.
/// Throws DomainError for Gaussian noise, whose bound comes from the action.
NoiseConstant noise_constants(const NoiseSpec& noise);

/// Closed-form bound for a map when one exists (Gaussian innovations).
struct FamilyBound {
  double value;
  int n_star = 0;                // 0 when not meaningful
  std::vector<std::string> caveats{};
};

/// Throws DomainError when the family has no closed form (Ricker, Tabulated)
/// or the family is not closed under rescaling to half_width != 1.
FamilyBound bound_for(const MapSpec& map, double half_width = 1.0, int max_length = 50);

}  // namespace closed_forms
}  // namespace arexit
