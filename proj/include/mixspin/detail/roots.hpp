#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace mixspin::detail {

/// `points` values spaced evenly in log between lo and hi, endpoints exact.
inline std::vector<double> log_grid(double lo, double hi, std::size_t points) {
  std::vector<double> grid(points);
  if (points == 0) return grid;
  if (points == 1) {
    grid[0] = lo;
    return grid;
  }
  const double a = std::log(lo);
  const double step = (std::log(hi) - a) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = std::exp(a + static_cast<double>(i) * step);
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

inline std::vector<double> linear_grid(double lo, double hi, std::size_t points) {
  std::vector<double> grid(points);
  if (points == 0) return grid;
  if (points == 1) {
    grid[0] = lo;
    return grid;
  }
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = lo + static_cast<double>(i) * step;
  grid.back() = hi;
  return grid;
}

inline bool sign_differs(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

/// Bisection on [a, b] with f(a), f(b) of opposite sign (or one of them zero).
/// Stops once the bracket is no wider than abs_tol + rel_tol * |a|.
template <class F>
double bisect(F&& f, double a, double b, double fa, double abs_tol, double rel_tol = 0.0) {
  if (fa == 0.0) return a;
  for (int iter = 0; iter < 400; ++iter) {
    if (std::abs(b - a) <= abs_tol + rel_tol * std::abs(a)) break;
    const double mid = 0.5 * (a + b);
    if (mid == a || mid == b) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (sign_differs(fa, fm)) {
      b = mid;
    } else {
      a = mid;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

/// Nearest sign change of f on each side of x = 1, scanning a log grid on
/// [lo, hi] outward from 1, then bisected to abs_tol. Either side is empty
/// when no sign change is found.
template <class F>
std::pair<std::optional<double>, std::optional<double>> roots_around_one(
    F&& f, double lo, double hi, std::size_t points, double abs_tol) {
  const std::vector<double> grid = log_grid(lo, hi, points);
  const double f_one = f(1.0);

  std::optional<double> upper;
  double prev = 1.0;
  double f_prev = f_one;
  for (double x : grid) {
    if (x <= 1.0) continue;
    const double fx = f(x);
    if (f_prev == 0.0 && prev != 1.0) {
      upper = prev;
      break;
    }
    if (sign_differs(f_prev, fx)) {
      upper = bisect(f, prev, x, f_prev, abs_tol);
      break;
    }
    prev = x;
    f_prev = fx;
  }

  std::optional<double> lower;
  prev = 1.0;
  f_prev = f_one;
  for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
    const double x = *it;
    if (x >= 1.0) continue;
    const double fx = f(x);
    if (f_prev == 0.0 && prev != 1.0) {
      lower = prev;
      break;
    }
    if (sign_differs(f_prev, fx)) {
      lower = bisect(f, prev, x, f_prev, abs_tol);
      break;
    }
    prev = x;
    f_prev = fx;
  }
  return {lower, upper};
}

}  // namespace mixspin::detail
