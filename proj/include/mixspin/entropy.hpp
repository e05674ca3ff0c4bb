#pragma once

// Markov entropy rates (nats) of the induced chains on the spin-1/2 and
// spin-s layers.

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mixspin/channels.hpp"
#include "mixspin/error.hpp"
#include "mixspin/linalg.hpp"
#include "mixspin/model.hpp"

namespace mixspin {

struct EntropyRecord {
  int s = 0;
  double phi = 0.0;
  double h_psi = 0.0;
  double h_phi = 0.0;
};

namespace detail {

/// Shannon entropy of one distribution, zero entries skipped.
inline double row_entropy(std::span<const double> row) {
  double h = 0.0;
  for (double v : row) {
    if (v > 0.0) h -= v * std::log(v);
  }
  return h;
}

}  // namespace detail

inline double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorCode::DomainError, "binary entropy argument outside [0,1]");
  const double pair[] = {x, 1.0 - x};
  return detail::row_entropy(pair);
}

/// -sum_i pi_i sum_j T_ij log T_ij for a stationary pi.
inline double entropy_rate_general(const TransitionMatrix& t, std::span<const double> pi) {
  if (!t.square() || pi.size() != t.rows()) throw Error(ErrorCode::ShapeMismatch, "pi does not match kernel");
  double drift = 0.0;
  for (std::size_t j = 0; j < t.cols(); ++j) {
    double next = 0.0;
    for (std::size_t i = 0; i < t.rows(); ++i) next += pi[i] * t(i, j);
    drift += std::abs(next - pi[j]);
  }
  if (drift > 1e-8) throw Error(ErrorCode::NotStationary, "||pi T - pi||_1 = " + std::to_string(drift));

  double h = 0.0;
  for (std::size_t i = 0; i < t.rows(); ++i) h += pi[i] * detail::row_entropy(t.row(i));
  return h < 0.0 ? 0.0 : h;
}

/// H_2(p) for the symmetric spin-1/2 chain [[p, 1-p], [1-p, p]].
inline double entropy_rate_psi(const ModelParams& params) {
  return binary_entropy(two_step_psi(params)(0, 0));
}

inline double entropy_rate_phi(const ModelParams& params) {
  const TransitionMatrix chain = two_step_phi(params);
  const std::vector<double> pi = stationary_distribution(chain);
  return entropy_rate_general(chain, pi);
}

inline EntropyRecord entropy_record(const ModelParams& params) {
  return {params.s(), params.phi(), entropy_rate_psi(params), entropy_rate_phi(params)};
}

/// Mean of the stepwise conditional entropies H(X_{t+1} | X_t) of the
/// spin-1/2 chain driven by a phi schedule, starting from (1/2, 1/2).
inline double averaged_inhomogeneous_entropy(int s, int k, std::span<const double> schedule) {
  if (schedule.empty()) throw Error(ErrorCode::DomainError, "schedule must be nonempty");
  std::vector<double> dist{0.5, 0.5};
  double total = 0.0;
  for (double phi : schedule) {
    const TransitionMatrix r = two_step_psi(make_params(s, k, phi));
    double step = 0.0;
    std::vector<double> next(2, 0.0);
    for (std::size_t i = 0; i < 2; ++i) {
      step += dist[i] * detail::row_entropy(r.row(i));
      for (std::size_t j = 0; j < 2; ++j) next[j] += dist[i] * r(i, j);
    }
    total += step;
    dist = next;
  }
  return total / static_cast<double>(schedule.size());
}

}  // namespace mixspin
