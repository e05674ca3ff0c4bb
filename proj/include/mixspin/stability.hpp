#pragma once

// Linear stability of the symmetric fixed point l0 of the (2s+1)-dimensional
// field recursion. At l0 the Jacobian has the arrow form
//
//   [ 0_{2s x 2s}  g ]
//   [ h^T          0 ]
//
// so its spectrum is {0 (x 2s-1), -sqrt(h.g), +sqrt(h.g)}.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mixspin/detail/roots.hpp"
#include "mixspin/error.hpp"
#include "mixspin/linalg.hpp"
#include "mixspin/model.hpp"
#include "mixspin/recursion.hpp"

namespace mixspin {

inline constexpr std::size_t kThresholdScanPoints = 4096;
inline constexpr double kThresholdTol = 1e-12;

/// Ascending pair of reciprocal thresholds around phi = 1.
struct ThresholdPair {
  double low = 0.0;
  double high = 0.0;
};

struct JacobianAtL0 {
  int s = 0;
  std::vector<double> g;  // dX_i/dZ, ordered i = -s..-1, 1..s
  std::vector<double> h;  // dZ'/dX_i, same order

  double spectral_product() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) acc += g[i] * h[i];
    return acc;
  }

  Eigen::MatrixXd dense() const {
    const auto n = static_cast<Eigen::Index>(2 * s + 1);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n - 1; ++i) {
      m(i, n - 1) = g[static_cast<std::size_t>(i)];
      m(n - 1, i) = h[static_cast<std::size_t>(i)];
    }
    return m;
  }
};

inline JacobianAtL0 jacobian_at_symmetric_point(const ModelParams& params) {
  const int s = params.s();
  const int k = params.k();
  const double phi = params.phi();
  const FieldState l0 = symmetric_fixed_point(params);

  // Weighted sum N = D at l0.
  double norm = 0.0;
  for (int i = -s; i <= s; ++i) norm += std::pow(phi, s + i) * l0.x(i);

  JacobianAtL0 jac;
  jac.s = s;
  jac.g.assign(static_cast<std::size_t>(2 * s), 0.0);
  jac.h.assign(static_cast<std::size_t>(2 * s), 0.0);
  for (int n = 1; n <= s; ++n) {
    const double pn = std::pow(phi, n);
    const double base = (pn * pn + 1.0) / (2.0 * pn);
    const double g = k * std::pow(base, k - 1) * (pn * pn - 1.0) / (4.0 * pn);
    const double h = k * (std::pow(phi, s + n) - std::pow(phi, s - n)) / norm;
    jac.g[FieldState::slot(n, s)] = g;
    jac.g[FieldState::slot(-n, s)] = -g;
    jac.h[FieldState::slot(n, s)] = h;
    jac.h[FieldState::slot(-n, s)] = -h;
  }
  return jac;
}

inline SpectralSummary jacobian_spectrum(const JacobianAtL0& jac) {
  double prod = jac.spectral_product();
  if (prod < -1e-12) throw Error(ErrorCode::NegativeSpectralProduct, "h.g < 0");
  prod = std::max(prod, 0.0);
  const double root = std::sqrt(prod);
  SpectralSummary out;
  out.eigenvalues.reserve(static_cast<std::size_t>(2 * jac.s + 1));
  out.eigenvalues.push_back(root);
  out.eigenvalues.push_back(-root);
  out.eigenvalues.resize(static_cast<std::size_t>(2 * jac.s + 1), 0.0);
  out.lambda1 = root;
  out.lambda2 = -root;
  return out;
}

inline double lambda_max_closed_form(const ModelParams& params) {
  return std::sqrt(std::max(0.0, jacobian_at_symmetric_point(params).spectral_product()));
}

/// Reciprocal pair where lambda_max(phi) = 1.
inline ThresholdPair stability_thresholds(int s, int k, double tol = kThresholdTol) {
  const ModelParams base = make_params(s, k, 1.0);
  auto criterion = [&](double phi) {
    return jacobian_at_symmetric_point(base.with_phi(phi)).spectral_product() - 1.0;
  };
  const auto [low, high] = detail::roots_around_one(criterion, kPhiMin, kPhiMax, kThresholdScanPoints, tol);
  if (!low || !high) {
    throw Error(ErrorCode::RootNotBracketed,
                "stability criterion has no sign change on [1e-2, 1e2] for s=" + std::to_string(s) +
                    ", k=" + std::to_string(k));
  }
  return {*low, *high};
}

/// Fourth-order central-difference Jacobian of evaluate_recursion. Each
/// variable v is perturbed by step * max(1, |v|).
inline Eigen::MatrixXd numeric_jacobian(const ModelParams& params, const FieldState& state, double step = 1e-3) {
  if (!(step > 0.0)) throw Error(ErrorCode::DomainError, "step must be positive");
  const int s = params.s();
  const std::vector<double> base = state.as_vector();
  const auto n = static_cast<Eigen::Index>(base.size());

  auto eval_at = [&](std::size_t var, double value) {
    std::vector<double> v = base;
    v[var] = value;
    const double z = v.back();
    v.pop_back();
    return evaluate_recursion(params, FieldState(s, std::move(v), z)).as_vector();
  };

  Eigen::MatrixXd jac(n, n);
  for (std::size_t var = 0; var < base.size(); ++var) {
    const double h = step * std::max(1.0, std::abs(base[var]));
    if (base[var] - 2.0 * h <= 0.0) throw Error(ErrorCode::DomainError, "step too large for positive state");
    const auto fp2 = eval_at(var, base[var] + 2.0 * h);
    const auto fp1 = eval_at(var, base[var] + h);
    const auto fm1 = eval_at(var, base[var] - h);
    const auto fm2 = eval_at(var, base[var] - 2.0 * h);
    for (Eigen::Index row = 0; row < n; ++row) {
      const auto r = static_cast<std::size_t>(row);
      jac(row, static_cast<Eigen::Index>(var)) = (-fp2[r] + 8.0 * fp1[r] - 8.0 * fm1[r] + fm2[r]) / (12.0 * h);
    }
  }
  return jac;
}

}  // namespace mixspin
