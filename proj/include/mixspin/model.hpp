#pragma once

// Domain types shared by every module: validated model parameters, the
// boundary-field state of the recursion and spectral summaries.
//
// Spin-s states are indexed i = -s..s; the spin-1/2 states are ordered
// (-1/2, +1/2). Field vectors omit i = 0 (X_0 == 1 implicitly) and are
// stored as X_{-s},...,X_{-1},X_1,...,X_s.

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mixspin/error.hpp"

namespace mixspin {

inline constexpr double kPhiMin = 1e-2;
inline constexpr double kPhiMax = 1e2;
inline constexpr int kSpinMax = 10;
inline constexpr int kDefaultBranching = 3;

class ModelParams;
ModelParams make_params(int s, int k, double phi);

/// Spin magnitude s, branching number k and thermal parameter phi = e^{beta J / 2}.
/// Only obtainable through make_params, so every instance is in range.
class ModelParams {
 public:
  int s() const noexcept { return s_; }
  int k() const noexcept { return k_; }
  double phi() const noexcept { return phi_; }
  double beta_j() const noexcept { return 2.0 * std::log(phi_); }
  int spin_states() const noexcept { return 2 * s_ + 1; }

  ModelParams with_phi(double phi) const { return make_params(s_, k_, phi); }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  ModelParams(int s, int k, double phi) : s_(s), k_(k), phi_(phi) {}
  friend ModelParams make_params(int s, int k, double phi);

  int s_;
  int k_;
  double phi_;
};

inline ModelParams make_params(int s, int k, double phi) {
  if (s < 1 || s > kSpinMax) {
    throw Error(ErrorCode::SpinOutOfRange,
                "s=" + std::to_string(s) + " outside [1, " + std::to_string(kSpinMax) + "]");
  }
  if (k < 2) {
    throw Error(ErrorCode::BranchingOutOfRange, "k=" + std::to_string(k) + " must be >= 2");
  }
  if (!(phi >= kPhiMin && phi <= kPhiMax)) {
    throw Error(ErrorCode::PhiOutOfRange, "phi=" + std::to_string(phi) + " outside [1e-2, 1e2]");
  }
  return ModelParams(s, k, phi);
}

/// phi = exp(J / (2T)) with k_B = 1.
inline double phi_from_temperature(double coupling, double temperature) {
  if (!(temperature > 0.0)) {
    throw Error(ErrorCode::NonPositiveTemperature, "T=" + std::to_string(temperature));
  }
  return std::exp(coupling / (2.0 * temperature));
}

/// Boundary fields X_i = e^{U_i} (i != 0) and Z = e^{R} at one recursion step.
class FieldState {
 public:
  FieldState(int s, std::vector<double> x, double z) : s_(s), x_(std::move(x)), z_(z) {
    if (s_ < 1 || x_.size() != static_cast<std::size_t>(2 * s_)) {
      throw Error(ErrorCode::InvalidState, "field vector must have 2s entries");
    }
    for (double v : x_) {
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw Error(ErrorCode::InvalidState, "field components must be positive and finite");
      }
    }
    if (!(z_ > 0.0) || !std::isfinite(z_)) {
      throw Error(ErrorCode::InvalidState, "Z must be positive and finite");
    }
  }

  int s() const noexcept { return s_; }
  double z() const noexcept { return z_; }

  /// X_i for i in {-s..-1, 1..s}; X_0 returns 1.
  double x(int i) const {
    if (i == 0) return 1.0;
    return x_.at(slot(i));
  }

  /// Storage order X_{-s},...,X_{-1},X_1,...,X_s.
  const std::vector<double>& x_values() const noexcept { return x_; }

  /// Flattened (X_{-s},...,X_s, Z), the variable order of the Jacobian.
  std::vector<double> as_vector() const {
    std::vector<double> v = x_;
    v.push_back(z_);
    return v;
  }

  static std::size_t slot(int i, int s) {
    return static_cast<std::size_t>(i < 0 ? i + s : i + s - 1);
  }

  friend bool operator==(const FieldState&, const FieldState&) = default;

 private:
  std::size_t slot(int i) const {
    if (i < -s_ || i > s_) throw Error(ErrorCode::InvalidState, "spin index out of range");
    return slot(i, s_);
  }

  int s_;
  std::vector<double> x_;
  double z_;
};

/// Eigenvalues ordered by descending magnitude.
struct SpectralSummary {
  std::vector<double> eigenvalues;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};

/// Z = 1 and X_i = ((phi^{2|i|} + 1) / (2 phi^{|i|}))^k, i.e. cosh(beta J |i| / 2)^k.
inline FieldState symmetric_fixed_point(const ModelParams& params) {
  const int s = params.s();
  const double phi = params.phi();
  std::vector<double> x(static_cast<std::size_t>(2 * s));
  for (int n = 1; n <= s; ++n) {
    const double pn = std::pow(phi, n);
    const double v = std::pow((pn * pn + 1.0) / (2.0 * pn), params.k());
    x[FieldState::slot(-n, s)] = v;
    x[FieldState::slot(n, s)] = v;
  }
  return FieldState(s, std::move(x), 1.0);
}

}  // namespace mixspin
