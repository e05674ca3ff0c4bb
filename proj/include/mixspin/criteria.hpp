#pragma once

// Sufficient criteria for (non-)extremality of the disordered phase and the
// eight-regime classification built from their thresholds.
//
//   Dobrushin:     D(phi) = k tau_P tau_Q - 1 < 0  certifies extremality
//   Kesten-Stigum: g(phi) = k lambda_2^2 - 1 > 0   certifies non-extremality

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mixspin/channels.hpp"
#include "mixspin/detail/roots.hpp"
#include "mixspin/error.hpp"
#include "mixspin/linalg.hpp"
#include "mixspin/model.hpp"
#include "mixspin/stability.hpp"

namespace mixspin {

inline constexpr double kBoundaryTol = 1e-9;

enum class Criterion { Dobrushin, KestenStigum };

enum class Verdict { CertifiedExtremal, CertifiedNonExtremal, Inconclusive, Boundary };

enum class Regime { F1, F2, F3, F4, AF1, AF2, AF3, AF4, Boundary };

constexpr std::string_view to_string(Criterion c) noexcept {
  return c == Criterion::Dobrushin ? "dobrushin" : "ks";
}

constexpr std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::CertifiedExtremal: return "certified-extremal";
    case Verdict::CertifiedNonExtremal: return "certified-non-extremal";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::Boundary: return "boundary";
  }
  return "unknown";
}

constexpr std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::F1: return "F1";
    case Regime::F2: return "F2";
    case Regime::F3: return "F3";
    case Regime::F4: return "F4";
    case Regime::AF1: return "AF1";
    case Regime::AF2: return "AF2";
    case Regime::AF3: return "AF3";
    case Regime::AF4: return "AF4";
    case Regime::Boundary: return "Boundary";
  }
  return "unknown";
}

struct CriterionResult {
  Criterion criterion = Criterion::Dobrushin;
  double value = 0.0;
  Verdict verdict = Verdict::Inconclusive;
};

struct TauPair {
  double tau_p = 0.0;
  double tau_q = 0.0;
};

struct ThresholdRow {
  int s = 0;
  Criterion criterion = Criterion::Dobrushin;
  double phi_low = 0.0;
  double phi_high = 0.0;
};

struct ThresholdTable {
  std::vector<ThresholdRow> rows;
};

/// Half the largest L1 distance between two rows.
inline double dobrushin_tau(const TransitionMatrix& t) {
  double best = 0.0;
  for (std::size_t a = 0; a < t.rows(); ++a) {
    for (std::size_t b = a + 1; b < t.rows(); ++b) {
      double l1 = 0.0;
      for (std::size_t c = 0; c < t.cols(); ++c) l1 += std::abs(t(a, c) - t(b, c));
      best = std::max(best, 0.5 * l1);
    }
  }
  return best;
}

/// tau_P = |phi^{2s} - 1| / (phi^{2s} + 1) for every k.
/// tau_Q = (1 / (8 S_s)) sum (phi^{2n}+1)^3 |phi^{2n} - 1| / phi^{4n} at k = 3;
/// other k evaluate the coefficient on the built kernel.
inline TauPair tau_closed_forms(const ModelParams& params) {
  const int s = params.s();
  const double phi = params.phi();
  const double p2s = std::pow(phi, 2 * s);
  TauPair out;
  out.tau_p = std::abs(p2s - 1.0) / (p2s + 1.0);
  if (params.k() == 3) {
    double acc = 0.0;
    for (int n = 1; n <= s; ++n) {
      const double p2 = std::pow(phi, 2 * n);
      acc += std::pow(p2 + 1.0, 3) * std::abs(p2 - 1.0) / (p2 * p2);
    }
    out.tau_q = acc / (8.0 * q_normaliser_k3(s, phi));
  } else {
    out.tau_q = dobrushin_tau(build_Q(params));
  }
  return out;
}

inline Verdict dobrushin_verdict(double value) noexcept {
  if (std::abs(value) <= kBoundaryTol) return Verdict::Boundary;
  return value < 0.0 ? Verdict::CertifiedExtremal : Verdict::Inconclusive;
}

inline Verdict ks_verdict(double value) noexcept {
  if (std::abs(value) <= kBoundaryTol) return Verdict::Boundary;
  return value > 0.0 ? Verdict::CertifiedNonExtremal : Verdict::Inconclusive;
}

inline double dobrushin_value(const ModelParams& params) {
  const TauPair tau = tau_closed_forms(params);
  return params.k() * tau.tau_p * tau.tau_q - 1.0;
}

inline double ks_value(const ModelParams& params) {
  const double l2 = second_eigenvalue_psi(params);
  return params.k() * l2 * l2 - 1.0;
}

inline CriterionResult dobrushin_test(const ModelParams& params) {
  const double v = dobrushin_value(params);
  return {Criterion::Dobrushin, v, dobrushin_verdict(v)};
}

inline CriterionResult ks_test(const ModelParams& params) {
  const double v = ks_value(params);
  return {Criterion::KestenStigum, v, ks_verdict(v)};
}

inline ThresholdPair criterion_thresholds(int s, int k, Criterion criterion, double tol = kThresholdTol) {
  const ModelParams base = make_params(s, k, 1.0);
  auto value = [&](double phi) {
    const ModelParams p = base.with_phi(phi);
    return criterion == Criterion::Dobrushin ? dobrushin_value(p) : ks_value(p);
  };
  const auto [low, high] = detail::roots_around_one(value, kPhiMin, kPhiMax, kThresholdScanPoints, tol);
  if (!low || !high) {
    throw Error(ErrorCode::RootNotBracketed, std::string(to_string(criterion)) +
                                                 " criterion has no sign change on [1e-2, 1e2] for s=" +
                                                 std::to_string(s) + ", k=" + std::to_string(k));
  }
  return {*low, *high};
}

/// One Dobrushin row then one KS row per s, in the order given.
inline ThresholdTable threshold_tables(const std::vector<int>& s_list, int k, double tol = kThresholdTol) {
  ThresholdTable table;
  for (int s : s_list) {
    for (Criterion c : {Criterion::Dobrushin, Criterion::KestenStigum}) {
      const ThresholdPair pair = criterion_thresholds(s, k, c, tol);
      if (std::abs(pair.low * pair.high - 1.0) > 1e-6 || !(pair.low < 1.0 && pair.high > 1.0)) {
        throw Error(ErrorCode::ReciprocityViolated,
                    std::string(to_string(c)) + " thresholds for s=" + std::to_string(s) + " are not a reciprocal pair");
      }
      table.rows.push_back({s, c, pair.low, pair.high});
    }
  }
  return table;
}

/// The three threshold pairs delimiting the regimes for one (s, k).
struct RegimeThresholds {
  ThresholdPair stability;
  ThresholdPair dobrushin;
  ThresholdPair ks;
};

inline RegimeThresholds regime_thresholds(int s, int k, double tol = kThresholdTol) {
  RegimeThresholds t{stability_thresholds(s, k, tol), criterion_thresholds(s, k, Criterion::Dobrushin, tol),
                     criterion_thresholds(s, k, Criterion::KestenStigum, tol)};
  const bool ordered = t.stability.high < t.dobrushin.high && t.dobrushin.high < t.ks.high &&
                       t.ks.low < t.dobrushin.low && t.dobrushin.low < t.stability.low;
  if (!ordered) {
    throw Error(ErrorCode::ThresholdOrderViolated,
                "thresholds for s=" + std::to_string(s) + ", k=" + std::to_string(k) + " are not nested");
  }
  return t;
}

inline Regime classify_regime(const RegimeThresholds& t, double phi) {
  const double marks[] = {1.0,           t.stability.low, t.stability.high, t.dobrushin.low,
                          t.dobrushin.high, t.ks.low,     t.ks.high};
  for (double m : marks) {
    if (std::abs(phi - m) <= kBoundaryTol) return Regime::Boundary;
  }
  if (phi > 1.0) {
    if (phi < t.stability.high) return Regime::F1;
    if (phi <= t.dobrushin.high) return Regime::F2;
    if (phi < t.ks.high) return Regime::F3;
    return Regime::F4;
  }
  if (phi > t.stability.low) return Regime::AF1;
  if (phi >= t.dobrushin.low) return Regime::AF2;
  if (phi > t.ks.low) return Regime::AF3;
  return Regime::AF4;
}

inline Regime classify_regime(int s, int k, double phi) {
  const ModelParams params = make_params(s, k, phi);
  return classify_regime(regime_thresholds(params.s(), params.k()), params.phi());
}

}  // namespace mixspin
