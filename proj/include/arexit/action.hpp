#pragma once

#include <optional>
#include <vector>

#include "arexit/model.hpp"

namespace arexit {

/// A finite exit trajectory y_0..y_N from the interval (-h, h).
struct Path {
  std::vector<double> points;
  double half_width = 1.0;

  int length() const noexcept { return static_cast<int>(points.size()) - 1; }

  /// Throws ConstraintViolation unless N >= 1, |y_n| < h for 0 < n < N and
  /// |y_N| >= h.
  void validate() const;

  Path mirrored() const;
};

struct PathCost {
  double value = 0.0;
  /// s_n = y_n - f(y_{n-1}), n = 1..N.
  std::vector<double> increments;
};

/// (1/2) sum (y_n - f(y_{n-1}))^2, the Gaussian-innovation action.
PathCost quad_cost(const Path& path, const MapSpec& map);

/// lambda * sum |y_n - f(y_{n-1})|, the Poisson-difference action.
PathCost l1_cost(const Path& path, const MapSpec& map, double lambda);

/// First-order optimality residuals of the quadratic action at the interior
/// points,
///   r_n = (y_n - f(y_{n-1})) - f'(y_n) (y_{n+1} - f(y_n)),  n = 1..N-1.
/// Entries at kink abscissae of f are nullopt.
std::vector<std::optional<double>> stationarity_residual(const Path& path, const MapSpec& map);

struct LemmaFlags {
  bool increasing_fixed0 = false;    // nondecreasing on [-1,1] with f(0) = 0
  bool odd = false;                  // f(-x) = -f(x)
  bool strictly_contractive = false; // |f(x)| < |x| on [-1,1] \ {0}

  /// Hypotheses under which optimal exit paths are sign-constant and monotone.
  bool monotone_paths() const noexcept { return increasing_fixed0 && strictly_contractive; }

  friend bool operator==(const LemmaFlags&, const LemmaFlags&) = default;
};

inline constexpr int kLemmaGridPoints = 2001;

/// Flags decided by evaluation on a uniform kLemmaGridPoints grid over [-1,1].
LemmaFlags lemma_predicates(const MapSpec& map);

/// The same flags derived from the family formula; nullopt for families
/// without an analytic answer (Ricker, Tabulated).
std::optional<LemmaFlags> analytic_lemma_flags(const MapSpec& map);

}  // namespace arexit
