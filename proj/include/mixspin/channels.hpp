#pragma once

// One-step kernels at the symmetric fixed point and the induced two-step
// chains:
//   P : spin-s layer  -> spin-1/2 layer, (2s+1) x 2, rows i = -s..s
//   Q : spin-1/2 layer -> spin-s layer,  2 x (2s+1), rows (-1/2, +1/2)
//   QP: 2 x 2 chain on the spin-1/2 layer
//   PQ: (2s+1) x (2s+1) chain on the spin-s layer

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "mixspin/linalg.hpp"
#include "mixspin/model.hpp"

namespace mixspin {

inline TransitionMatrix build_P(const ModelParams& params) {
  const int s = params.s();
  const double phi = params.phi();
  std::vector<double> e;
  e.reserve(static_cast<std::size_t>(2 * (2 * s + 1)));
  for (int i = -s; i <= s; ++i) {
    const double w = std::pow(phi, 2 * i);
    e.push_back(1.0 / (1.0 + w));
    e.push_back(w / (1.0 + w));
  }
  return TransitionMatrix(static_cast<std::size_t>(2 * s + 1), 2, std::move(e));
}

/// Unnormalised weights of row -1/2 are phi^{-j} X_j with X_j the fixed-point
/// fields; row +1/2 is the mirror image. Weights are normalised in log space.
inline TransitionMatrix build_Q(const ModelParams& params) {
  const int s = params.s();
  const int k = params.k();
  const double log_phi = std::log(params.phi());
  const auto width = static_cast<std::size_t>(2 * s + 1);

  std::vector<double> log_w(width);
  for (int j = -s; j <= s; ++j) {
    const int n = std::abs(j);
    // log X_j = k log((phi^{2n} + 1) / (2 phi^n)) = k log cosh(n log phi)
    const double a = n * std::abs(log_phi);
    const double log_x = n == 0 ? 0.0 : k * (a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0));
    log_w[static_cast<std::size_t>(j + s)] = log_x - j * log_phi;
  }
  const double top = *std::max_element(log_w.begin(), log_w.end());
  double total = 0.0;
  std::vector<double> row(width);
  for (std::size_t c = 0; c < width; ++c) {
    row[c] = std::exp(log_w[c] - top);
    total += row[c];
  }
  std::vector<double> e(2 * width);
  for (std::size_t c = 0; c < width; ++c) {
    e[c] = row[c] / total;
    e[width + (width - 1 - c)] = row[c] / total;
  }
  return TransitionMatrix(2, width, std::move(e));
}

/// Normalising factor S_s(phi) = 1 + (1/8) sum (phi^{2n}+1)^4 / phi^{4n} (k = 3).
inline double q_normaliser_k3(int s, double phi) {
  double acc = 1.0;
  for (int n = 1; n <= s; ++n) {
    const double p2 = std::pow(phi, 2 * n);
    acc += std::pow(p2 + 1.0, 4) / (8.0 * p2 * p2);
  }
  return acc;
}

/// Diagonal weight A(phi) = 1/2 + sum (phi^{2n}+1)^2 (phi^{4n}+1) / (8 phi^{4n}) (k = 3).
inline double psi_diagonal_k3(int s, double phi) {
  double acc = 0.5;
  for (int n = 1; n <= s; ++n) {
    const double p2 = std::pow(phi, 2 * n);
    acc += (p2 + 1.0) * (p2 + 1.0) * (p2 * p2 + 1.0) / (8.0 * p2 * p2);
  }
  return acc;
}

/// Off-diagonal weight B(phi) = 1/2 + sum (phi^{2n}+1)^2 / (4 phi^{2n}) (k = 3).
inline double psi_offdiagonal_k3(int s, double phi) {
  double acc = 0.5;
  for (int n = 1; n <= s; ++n) {
    const double p2 = std::pow(phi, 2 * n);
    acc += (p2 + 1.0) * (p2 + 1.0) / (4.0 * p2);
  }
  return acc;
}

/// Symmetric 2 x 2 chain [[p, 1-p], [1-p, p]] on the spin-1/2 layer. At k = 3
/// p = A / S in closed form; other k take p from the product Q P.
inline TransitionMatrix two_step_psi(const ModelParams& params) {
  double p = 0.0;
  if (params.k() == 3) {
    p = psi_diagonal_k3(params.s(), params.phi()) / q_normaliser_k3(params.s(), params.phi());
  } else {
    p = compose(build_Q(params), build_P(params))(0, 0);
  }
  return TransitionMatrix(2, 2, {p, 1.0 - p, 1.0 - p, p});
}

inline TransitionMatrix two_step_phi(const ModelParams& params) {
  return compose(build_P(params), build_Q(params));
}

/// lambda_2 = 2p - 1 of the spin-1/2 chain.
inline double second_eigenvalue_psi(const ModelParams& params) {
  const TransitionMatrix r = two_step_psi(params);
  return r(0, 0) - r(0, 1);
}

}  // namespace mixspin
