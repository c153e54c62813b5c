#pragma once

#include <vector>

#include "arexit/action.hpp"
#include "arexit/model.hpp"

namespace arexit {

enum class CostKind { quadratic, l1 };

/// Which exit points the minimizer may use. Restricting the side is how the
/// exit-side symmetry of odd maps is checked.
enum class ExitSide { both, positive, negative };

struct MinimizerConfig {
  int max_length = 50;     // M, longest path considered
  int grid_points = 401;   // states on [-h, h] including both ends; step 2h/(G-1)
  double refine_tol = 1e-10;
  int max_sweeps = 500;
  CostKind cost = CostKind::quadratic;
  double l1_weight = 1.0;  // lambda for CostKind::l1
  double start = 0.0;      // y_0
  ExitSide exit_side = ExitSide::both;

  void validate() const;
};

struct ActionResult {
  /// Infimum of the action including its 1/2 or lambda prefactor; this is
  /// also the bound on limsup q(eps) log E tau.
  double value = 0.0;
  /// Smallest path length attaining the infimum within relative 1e-6.
  int n_star = 0;
  Path path;
  /// False when refinement stopped at max_sweeps.
  bool converged = true;
  /// Grid optimum restricted to paths of length exactly N, for N = 1..M.
  /// Empty for results produced by refine() alone.
  std::vector<double> horizon_values;

  double bound() const noexcept { return value; }
};

/// Action of a path under the configured cost kind.
double action_value(const Path& path, const MapSpec& map, const MinimizerConfig& cfg);

/// Exhaustive dynamic program over a uniform grid of interior states,
///   C_1(y) = cost(y - f(y_0)),  C_{n+1}(y) = min_x C_n(x) + cost(y - f(x)),
/// with exit only through y_N = +/-h. Throws MapNotContained if some state x
/// has |f(x)| >= h.
ActionResult grid_dp(const MapSpec& map, double half_width, const MinimizerConfig& cfg);

/// Coordinate descent on the interior points of seed (endpoints fixed).
/// Never increases the action.
ActionResult refine(const MapSpec& map, const Path& seed, const MinimizerConfig& cfg);

/// grid_dp, then refine of the grid argmin and of its mirror image; the
/// cheaper of the two is returned.
ActionResult min_action(const MapSpec& map, double half_width, const MinimizerConfig& cfg = {});

}  // namespace arexit
