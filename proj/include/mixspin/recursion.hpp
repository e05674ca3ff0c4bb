#pragma once

// Translation-invariant consistency recursion of the mixed spin-(s,1/2)
// Ising model on a Cayley tree of order k, and the scalar map F(Z) obtained
// by substituting the spin-s field equations into the spin-1/2 one.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string_view>
#include <vector>

#include "mixspin/detail/roots.hpp"
#include "mixspin/error.hpp"
#include "mixspin/model.hpp"

namespace mixspin {

enum class Stability { Attracting, Repelling, Neutral };

constexpr std::string_view to_string(Stability s) noexcept {
  switch (s) {
    case Stability::Attracting: return "attracting";
    case Stability::Repelling: return "repelling";
    case Stability::Neutral: return "neutral";
  }
  return "unknown";
}

inline constexpr double kNeutralTol = 1e-9;
inline constexpr std::size_t kDefaultFixedPointGrid = 10000;

struct ScalarFixedPoint {
  double z_star = 1.0;
  double derivative_abs = 0.0;
  Stability stability = Stability::Neutral;
};

inline Stability classify_stability(double derivative_abs) noexcept {
  if (derivative_abs < 1.0 - kNeutralTol) return Stability::Attracting;
  if (derivative_abs > 1.0 + kNeutralTol) return Stability::Repelling;
  return Stability::Neutral;
}

namespace detail {

inline void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw Error(ErrorCode::NumericOverflow, what);
}

/// Spin-s field X_i as a function of the spin-1/2 field Z.
inline double spin_field(double phi, int k, int i, double z) {
  const int n = std::abs(i);
  const double pn = std::pow(phi, n);
  const double ratio = i < 0 ? (pn * pn + z) / (pn * (1.0 + z)) : (1.0 + pn * pn * z) / (pn * (1.0 + z));
  return std::pow(ratio, k);
}

/// Weighted sums N = sum phi^{s+i} X_i and D = sum phi^{s-i} X_i (X_0 = 1).
struct FieldSums {
  double up = 0.0;
  double down = 0.0;
};

template <class XOf>
FieldSums field_sums(double phi, int s, XOf&& x_of) {
  FieldSums sums;
  for (int i = -s; i <= s; ++i) {
    const double xi = x_of(i);
    sums.up += std::pow(phi, s + i) * xi;
    sums.down += std::pow(phi, s - i) * xi;
  }
  return sums;
}

}  // namespace detail

/// One application of the field maps: X' from Z, Z' from X.
inline FieldState evaluate_recursion(const ModelParams& params, const FieldState& state) {
  const int s = params.s();
  if (state.s() != s) throw Error(ErrorCode::InvalidState, "state dimension does not match s");
  const double phi = params.phi();
  const int k = params.k();

  std::vector<double> x(static_cast<std::size_t>(2 * s));
  for (int i = -s; i <= s; ++i) {
    if (i == 0) continue;
    const double v = detail::spin_field(phi, k, i, state.z());
    detail::require_finite(v, "spin-s field overflow");
    x[FieldState::slot(i, s)] = v;
  }

  const auto sums = detail::field_sums(phi, s, [&](int i) { return state.x(i); });
  detail::require_finite(sums.up, "field sum overflow");
  detail::require_finite(sums.down, "field sum overflow");
  const double z = std::pow(sums.up / sums.down, k);
  detail::require_finite(z, "spin-1/2 field overflow");
  if (!(z > 0.0)) throw Error(ErrorCode::NumericOverflow, "spin-1/2 field underflow");
  return FieldState(s, std::move(x), z);
}

/// State whose X_i are the spin-s field equations evaluated at Z = z_star.
inline FieldState lift_scalar_fixed_point(const ModelParams& params, double z_star) {
  if (!(z_star > 0.0)) throw Error(ErrorCode::InvalidState, "z_star must be positive");
  const int s = params.s();
  std::vector<double> x(static_cast<std::size_t>(2 * s));
  for (int i = -s; i <= s; ++i) {
    if (i == 0) continue;
    const double v = detail::spin_field(params.phi(), params.k(), i, z_star);
    detail::require_finite(v, "spin-s field overflow");
    x[FieldState::slot(i, s)] = v;
  }
  return FieldState(s, std::move(x), z_star);
}

/// F(z): the spin-1/2 update after substituting X_i(z).
inline double scalar_map(const ModelParams& params, double z) {
  if (!(z > 0.0)) throw Error(ErrorCode::InvalidState, "z must be positive");
  const double phi = params.phi();
  const int k = params.k();
  const auto sums = detail::field_sums(phi, params.s(), [&](int i) {
    return i == 0 ? 1.0 : detail::spin_field(phi, k, i, z);
  });
  const double v = std::pow(sums.up / sums.down, k);
  detail::require_finite(v, "scalar map overflow");
  return v;
}

/// F'(1) by the chain rule on the scalar composition. At z = 1 the two
/// weighted sums coincide, so F'(1) = k (N' - D') / N.
inline double scalar_map_derivative_at_one(const ModelParams& params) {
  const int s = params.s();
  const int k = params.k();
  const double phi = params.phi();
  const FieldState l0 = symmetric_fixed_point(params);
  const auto sums = detail::field_sums(phi, s, [&](int i) { return l0.x(i); });

  double slope = 0.0;  // N'(1) - D'(1)
  for (int n = 1; n <= s; ++n) {
    const double pn = std::pow(phi, n);
    const double base = (pn * pn + 1.0) / (2.0 * pn);
    // dX_n/dZ at Z = 1; dX_{-n}/dZ is its negative.
    const double dx = k * std::pow(base, k - 1) * (pn * pn - 1.0) / (4.0 * pn);
    const double weight_pos = std::pow(phi, s + n) - std::pow(phi, s - n);
    slope += 2.0 * weight_pos * dx;
  }
  return std::max(0.0, k * slope / sums.up);
}

/// Roots of F(z) = z on a log grid over [z_min, z_max], bisected and
/// classified by |F'(z*)|. z = 1 is always reported.
inline std::vector<ScalarFixedPoint> find_scalar_fixed_points(
    const ModelParams& params, double z_min = 1e-4, double z_max = 1e4,
    std::size_t grid_points = kDefaultFixedPointGrid) {
  if (!(z_min > 0.0) || !(z_max > z_min)) {
    throw Error(ErrorCode::DomainError, "need 0 < z_min < z_max");
  }
  if (grid_points < 2) throw Error(ErrorCode::DomainError, "grid_points must be >= 2");

  auto gap = [&](double z) { return scalar_map(params, z) - z; };

  std::vector<double> grid = detail::log_grid(z_min, z_max, grid_points);
  if (z_min < 1.0 && z_max > 1.0) {
    grid.insert(std::upper_bound(grid.begin(), grid.end(), 1.0), 1.0);
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  }

  std::vector<double> roots{1.0};
  double prev = grid.front();
  double g_prev = gap(prev);
  if (g_prev == 0.0) roots.push_back(prev);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double z = grid[i];
    const double g = gap(z);
    if (g == 0.0) {
      roots.push_back(z);
    } else if (detail::sign_differs(g_prev, g)) {
      roots.push_back(detail::bisect(gap, prev, z, g_prev, 0.0, 1e-12));
    }
    prev = z;
    g_prev = g;
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> merged;
  for (double r : roots) {
    if (!merged.empty() && std::abs(r - merged.back()) <= 1e-8 * std::max(r, merged.back())) {
      if (r == 1.0) merged.back() = 1.0;
      continue;
    }
    merged.push_back(r);
  }

  if (std::abs(gap(1.0)) > 1e-10 && merged.size() <= 1) {
    throw Error(ErrorCode::NoBracketFound, "no fixed point of F located");
  }

  std::vector<ScalarFixedPoint> out;
  out.reserve(merged.size());
  for (double z : merged) {
    const double h = 1e-6 * z;
    const double d = std::abs(scalar_map(params, z + h) - scalar_map(params, z - h)) / (2.0 * h);
    out.push_back({z, d, classify_stability(d)});
  }
  return out;
}

}  // namespace mixspin
