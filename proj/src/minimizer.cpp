#include "arexit/minimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "arexit/errors.hpp"

namespace arexit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRelTie = 1e-6;
constexpr double kAbsTie = 1e-9;

struct Transition {
  CostKind kind;
  double weight;

  double operator()(double d) const { return kind == CostKind::quadratic ? 0.5 * d * d : weight * std::abs(d); }
};

Transition transition_for(const MinimizerConfig& cfg) { return {cfg.cost, cfg.l1_weight}; }

// Cheapest admissible exit from a state whose image is fx. Returns the cost
// and the exit sign (+1 or -1); ties go to +h.
std::pair<double, int> exit_cost(const Transition& cost, double fx, double h, ExitSide side) {
  double up = side == ExitSide::negative ? kInf : cost(h - fx);
  double down = side == ExitSide::positive ? kInf : cost(-h - fx);
  return down < up ? std::pair{down, -1} : std::pair{up, +1};
}

}  // namespace

void MinimizerConfig::validate() const {
  if (max_length < 1) throw DomainError("max_length must be >= 1");
  if (grid_points < 11) throw DomainError("grid_points must be >= 11");
  if (!(refine_tol > 0.0)) throw DomainError("refine_tol must be positive");
  if (max_sweeps < 1) throw DomainError("max_sweeps must be >= 1");
  if (cost == CostKind::l1 && !(l1_weight > 0.0)) throw DomainError("l1 weight must be positive");
}

double action_value(const Path& path, const MapSpec& map, const MinimizerConfig& cfg) {
  return cfg.cost == CostKind::quadratic ? quad_cost(path, map).value : l1_cost(path, map, cfg.l1_weight).value;
}

ActionResult grid_dp(const MapSpec& map, double h, const MinimizerConfig& cfg) {
  cfg.validate();
  if (!(h > 0.0)) throw DomainError("half_width must be positive");
  if (!(std::abs(cfg.start) < h)) throw DomainError("start must satisfy |start| < half_width");

  const Transition cost = transition_for(cfg);
  const int grid_n = cfg.grid_points;
  const int states = grid_n - 2;
  const int max_len = cfg.max_length;

  std::vector<double> xs(states), fxs(states), exit_val(states);
  std::vector<int> exit_sign(states);
  for (int i = 0; i < states; ++i) {
    xs[i] = h * (2.0 * (i + 1) / (grid_n - 1) - 1.0);
    fxs[i] = map(xs[i]);
    if (!(std::abs(fxs[i]) < h)) throw MapNotContained(xs[i], fxs[i], h);
    std::tie(exit_val[i], exit_sign[i]) = exit_cost(cost, fxs[i], h, cfg.exit_side);
  }
  const double f_start = map(cfg.start);
  if (!(std::abs(f_start) < h)) throw MapNotContained(cfg.start, f_start, h);

  // horizon[N-1] = best exit at exactly N steps; exit_from[N-1] its last interior state.
  std::vector<double> horizon(max_len, kInf);
  std::vector<int> exit_from(max_len, -1);
  // pred[L * states + j] = argmin predecessor of state j at level L (L >= 2).
  std::vector<int> pred(static_cast<std::size_t>(max_len) * states, -1);

  const auto [first_exit, first_sign] = exit_cost(cost, f_start, h, cfg.exit_side);
  horizon[0] = first_exit;

  std::vector<double> level(states), next(states);
  for (int j = 0; j < states; ++j) level[j] = cost(xs[j] - f_start);

  for (int n = 2; n <= max_len; ++n) {
    // `level` holds C_{n-1}.
    double best = kInf;
    int best_i = -1;
    for (int i = 0; i < states; ++i) {
      double v = level[i] + exit_val[i];
      if (v < best) {
        best = v;
        best_i = i;
      }
    }
    horizon[n - 1] = best;
    exit_from[n - 1] = best_i;
    if (n == max_len) break;

    int* pred_row = pred.data() + static_cast<std::size_t>(n) * states;
    for (int j = 0; j < states; ++j) {
      const double xj = xs[j];
      double bj = kInf;
      int arg = -1;
      for (int i = 0; i < states; ++i) {
        double v = level[i] + cost(xj - fxs[i]);
        if (v < bj) {
          bj = v;
          arg = i;
        }
      }
      next[j] = bj;
      pred_row[j] = arg;
    }
    level.swap(next);
  }

  const double c_min = *std::min_element(horizon.begin(), horizon.end());
  int n_star = 1;
  while (horizon[n_star - 1] > c_min * (1.0 + kRelTie) + kAbsTie) ++n_star;

  Path path{std::vector<double>(n_star + 1), h};
  path.points[0] = cfg.start;
  if (n_star == 1) {
    path.points[1] = first_sign * h;
  } else {
    int i = exit_from[n_star - 1];
    path.points[n_star] = exit_sign[i] * h;
    for (int n = n_star - 1; n >= 1; --n) {
      path.points[n] = xs[i];
      if (n >= 2) i = pred[static_cast<std::size_t>(n) * states + i];
    }
  }

  ActionResult out;
  out.value = action_value(path, map, cfg);
  out.n_star = n_star;
  out.path = std::move(path);
  out.horizon_values = std::move(horizon);
  return out;
}

ActionResult refine(const MapSpec& map, const Path& seed, const MinimizerConfig& cfg) {
  cfg.validate();
  seed.validate();
  const Transition cost = transition_for(cfg);
  const double h = seed.half_width;
  const double eta = 1e-12 * h;
  const double lo = -h + eta;
  const double hi = h - eta;
  const double cell = 2.0 * h / (cfg.grid_points - 1);
  const int last = seed.length();
  constexpr double kEps = std::numeric_limits<double>::epsilon();

  std::vector<double> y = seed.points;
  const std::vector<double> kinks = map.kinks();
  std::vector<double> width(y.size(), 2.0 * cell);

  auto total = [&](const std::vector<double>& pts) {
    double s = 0.0;
    for (int n = 1; n <= last; ++n) s += cost(pts[n] - map(pts[n - 1]));
    return s;
  };

  bool converged = false;
  for (int sweep = 0; sweep < cfg.max_sweeps && last >= 2; ++sweep) {
    double max_change = 0.0;

    for (int n = 1; n < last; ++n) {
      const double target = map(y[n - 1]);
      const double after = y[n + 1];
      auto local = [&](double v) { return cost(v - target) + cost(after - map(v)); };

      const double old = y[n];
      double cur = old;
      double f_cur = local(cur);

      const double a = std::max(lo, cur - width[n]);
      const double b = std::min(hi, cur + width[n]);
      auto [v, fv] = boost::math::tools::brent_find_minima(local, a, b, std::numeric_limits<double>::digits);
      if (fv < f_cur - 4.0 * kEps * std::abs(f_cur)) {
        cur = v;
        f_cur = fv;
      }
      // Minima of piecewise maps often sit exactly on a kink, where Brent
      // only gets within its tolerance.
      for (double k : kinks) {
        if (k < a || k > b) continue;
        const double fk = local(k);
        if (fk <= f_cur) {
          cur = k;
          f_cur = fk;
        }
      }

      if (cfg.cost == CostKind::quadratic) {
        // Newton polish with the Gauss-Newton curvature; exact when f is
        // locally affine.
        for (int it = 0; it < 3; ++it) {
          auto slope = map_derivative(map, cur);
          if (!slope) break;
          double grad = (cur - target) - *slope * (after - map(cur));
          double cand = std::clamp(cur - grad / (1.0 + *slope * *slope), lo, hi);
          double f_cand = local(cand);
          if (!(f_cand <= f_cur)) break;
          cur = cand;
          f_cur = f_cand;
        }
      }

      y[n] = cur;
      const double change = std::abs(cur - old);
      max_change = std::max(max_change, change);
      // Next bracket: grow it if the minimum sat on an edge, otherwise track
      // the last move.
      const double edge_tol = 1e-6 * width[n];
      const bool at_edge = (a > lo && cur - a < edge_tol) || (b < hi && b - cur < edge_tol);
      width[n] = at_edge ? 4.0 * width[n] : std::max(4.0 * change, 1e-7 * h);
      width[n] = std::min(width[n], 2.0 * h);
    }

    if (cfg.cost == CostKind::quadratic && last >= 2) {
      // Whole-path Gauss-Newton step; coordinate sweeps alone converge slowly
      // when neighbouring points are strongly coupled (|f'| near 1).
      const int m = last - 1;
      std::vector<double> diag(m), off(m > 1 ? m - 1 : 0), rhs(m), slope(m);
      for (int k = 0; k < m; ++k) slope[k] = map_slopes(map, y[k + 1]).right;
      for (int k = 0; k < m; ++k) {
        double s_here = y[k + 1] - map(y[k]);
        double s_next = y[k + 2] - map(y[k + 1]);
        rhs[k] = -(s_here - slope[k] * s_next);
        diag[k] = 1.0 + slope[k] * slope[k];
        if (k + 1 < m) off[k] = -slope[k];
      }
      // Thomas algorithm for the symmetric tridiagonal system.
      std::vector<double> c_prime(m), d_prime(m);
      c_prime[0] = m > 1 ? off[0] / diag[0] : 0.0;
      d_prime[0] = rhs[0] / diag[0];
      for (int k = 1; k < m; ++k) {
        double denom = diag[k] - off[k - 1] * c_prime[k - 1];
        c_prime[k] = k + 1 < m ? off[k] / denom : 0.0;
        d_prime[k] = (rhs[k] - off[k - 1] * d_prime[k - 1]) / denom;
      }
      std::vector<double> delta(m);
      delta[m - 1] = d_prime[m - 1];
      for (int k = m - 2; k >= 0; --k) delta[k] = d_prime[k] - c_prime[k] * delta[k + 1];

      const double base = total(y);
      std::vector<double> trial = y;
      for (double t = 1.0; t > 1e-4; t *= 0.5) {
        for (int k = 0; k < m; ++k) trial[k + 1] = std::clamp(y[k + 1] + t * delta[k], lo, hi);
        if (total(trial) < base) {
          for (int k = 0; k < m; ++k) max_change = std::max(max_change, std::abs(trial[k + 1] - y[k + 1]));
          y.swap(trial);
          break;
        }
      }
    }

    if (max_change < cfg.refine_tol) {
      converged = true;
      break;
    }
  }
  if (last < 2) converged = true;

  ActionResult out;
  out.path = Path{std::move(y), h};
  out.value = action_value(out.path, map, cfg);
  out.n_star = last;
  out.converged = converged;
  // Guard against a net increase from accumulated rounding.
  double seed_value = action_value(seed, map, cfg);
  if (out.value > seed_value) {
    out.path = seed;
    out.value = seed_value;
  }
  return out;
}

ActionResult min_action(const MapSpec& map, double h, const MinimizerConfig& cfg) {
  ActionResult grid = grid_dp(map, h, cfg);
  ActionResult best = refine(map, grid.path, cfg);
  if (cfg.exit_side == ExitSide::both) {
    ActionResult mirror = refine(map, grid.path.mirrored(), cfg);
    if (mirror.value < best.value) best = std::move(mirror);
  }
  best.n_star = grid.n_star;
  best.horizon_values = std::move(grid.horizon_values);
  return best;
}

}  // namespace arexit
