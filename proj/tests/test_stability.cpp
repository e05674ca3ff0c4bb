#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

#include "mixspin/linalg.hpp"
#include "mixspin/stability.hpp"
#include "oracles.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("Jacobian vanishes at phi = 1", "[stability]") {
  const auto jac = mixspin::jacobian_at_symmetric_point(mixspin::make_params(5, 3, 1.0));
  for (double v : jac.g) CHECK(v == 0.0);
  for (double v : jac.h) CHECK(v == 0.0);
  const auto eig = mixspin::jacobian_spectrum(jac);
  CHECK(eig.eigenvalues.size() == 11);
  for (double v : eig.eigenvalues) CHECK(v == 0.0);
}

TEST_CASE("Jacobian antisymmetry and arrow structure", "[stability][property]") {
  for (int s = 1; s <= 6; ++s) {
    for (double phi : {0.4, 0.9, 1.3, 2.5}) {
      const auto jac = mixspin::jacobian_at_symmetric_point(mixspin::make_params(s, 3, phi));
      REQUIRE(jac.g.size() == static_cast<std::size_t>(2 * s));
      for (int n = 1; n <= s; ++n) {
        CHECK_THAT(jac.g[mixspin::FieldState::slot(-n, s)], WithinAbs(-jac.g[mixspin::FieldState::slot(n, s)], 1e-12));
        CHECK_THAT(jac.h[mixspin::FieldState::slot(-n, s)], WithinAbs(-jac.h[mixspin::FieldState::slot(n, s)], 1e-12));
      }
      const Eigen::MatrixXd d = jac.dense();
      CHECK(d.topLeftCorner(2 * s, 2 * s).isZero(0.0));
      CHECK(d(2 * s, 2 * s) == 0.0);
    }
  }
}

TEST_CASE("analytic Jacobian matches finite differences", "[stability][oracle]") {
  for (int s = 1; s <= 5; ++s) {
    for (double phi : {0.6, 0.9, 1.1, 1.2, 1.8}) {
      const auto params = mixspin::make_params(s, 3, phi);
      const Eigen::MatrixXd dense = mixspin::jacobian_at_symmetric_point(params).dense();
      const Eigen::MatrixXd numeric = mixspin::numeric_jacobian(params, mixspin::symmetric_fixed_point(params));
      CHECK((dense - numeric).cwiseAbs().maxCoeff() <= 1e-8);
    }
  }
  for (int k : {2, 4}) {
    const auto params = mixspin::make_params(3, k, 1.25);
    const Eigen::MatrixXd dense = mixspin::jacobian_at_symmetric_point(params).dense();
    const Eigen::MatrixXd numeric = mixspin::numeric_jacobian(params, mixspin::symmetric_fixed_point(params));
    CHECK((dense - numeric).cwiseAbs().maxCoeff() <= 1e-8);
  }
  const auto flat = mixspin::make_params(5, 3, 1.0);
  CHECK(mixspin::numeric_jacobian(flat, mixspin::symmetric_fixed_point(flat)).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("dense Jacobian spectrum reduces to plus/minus sqrt(h.g)", "[stability][property]") {
  for (int s = 1; s <= 5; ++s) {
    for (double phi : {0.6, 1.2, 1.9}) {
      const auto params = mixspin::make_params(s, 3, phi);
      const auto jac = mixspin::jacobian_at_symmetric_point(params);
      const auto closed = mixspin::jacobian_spectrum(jac);
      const auto dense = mixspin::spectrum(jac.dense());
      const double lm = mixspin::lambda_max_closed_form(params);
      REQUIRE(dense.eigenvalues.size() == static_cast<std::size_t>(2 * s + 1));
      CHECK_THAT(std::abs(dense.eigenvalues[0]), WithinAbs(lm, 1e-7));
      CHECK_THAT(std::abs(dense.eigenvalues[1]), WithinAbs(lm, 1e-7));
      for (std::size_t i = 2; i < dense.eigenvalues.size(); ++i) CHECK(std::abs(dense.eigenvalues[i]) <= 1e-7);
      CHECK(closed.lambda1 == lm);
      CHECK(closed.lambda2 == -lm);

      // det(lambda I - J) = lambda^{2s-1} (lambda^2 - h.g) for an arrow matrix with zero diagonal.
      const double hg = jac.spectral_product();
      for (double lambda : {0.3, -0.7, 1.1, 2.4}) {
        const Eigen::MatrixXd shifted =
            lambda * Eigen::MatrixXd::Identity(2 * s + 1, 2 * s + 1) - jac.dense();
        const double expected = std::pow(lambda, 2 * s - 1) * (lambda * lambda - hg);
        CHECK_THAT(shifted.determinant(), WithinAbs(expected, 1e-10 * std::max(1.0, std::abs(expected))));
      }
    }
  }
}

TEST_CASE("numeric Jacobian eigenvalues at spin 5", "[stability]") {
  const auto params = mixspin::make_params(5, 3, 1.2);
  const Eigen::MatrixXd numeric = mixspin::numeric_jacobian(params, mixspin::symmetric_fixed_point(params));
  const Eigen::EigenSolver<Eigen::MatrixXd> solver(numeric);
  std::vector<double> mags;
  for (const auto& v : solver.eigenvalues()) mags.push_back(std::abs(v));
  std::sort(mags.begin(), mags.end(), std::greater<>());
  const double lm = mixspin::lambda_max_closed_form(params);
  CHECK_THAT(mags[0], WithinAbs(lm, 1e-7));
  CHECK_THAT(mags[1], WithinAbs(lm, 1e-7));
  for (std::size_t i = 2; i < mags.size(); ++i) CHECK(mags[i] <= 1e-7);
}

TEST_CASE("lambda_max examples", "[stability]") {
  CHECK(mixspin::lambda_max_closed_form(mixspin::make_params(5, 3, 1.0)) == 0.0);
  CHECK_THAT(mixspin::lambda_max_closed_form(mixspin::make_params(5, 3, 0.901258081777163)), WithinAbs(1.0, 1e-8));
  CHECK_THAT(mixspin::lambda_max_closed_form(mixspin::make_params(1, 3, 2.0)),
             WithinAbs(std::sqrt(9.0 * 225.0 / 753.0), 1e-12));
  CHECK_THAT(mixspin::lambda_max_closed_form(mixspin::make_params(5, 3, 100.0)), WithinAbs(3.0, 1e-3));
  CHECK_THAT(mixspin::lambda_max_closed_form(mixspin::make_params(5, 3, 0.01)), WithinAbs(3.0, 1e-3));
}

TEST_CASE("lambda_max matches the spin-5 polynomial ratio", "[stability][oracle]") {
  for (double phi : oracle::log_grid(0.2, 5.0, 200)) {
    const double lm = mixspin::lambda_max_closed_form(mixspin::make_params(5, 3, phi));
    CHECK_THAT(lm * lm, WithinAbs(oracle::s5::lambda_max_sq(phi), 1e-11));
  }
}

TEST_CASE("lambda_max reciprocal symmetry", "[stability][property]") {
  for (int s = 1; s <= 5; ++s) {
    for (double phi : oracle::log_grid(0.2, 5.0, 200)) {
      CHECK_THAT(mixspin::lambda_max_closed_form(mixspin::make_params(s, 3, phi)),
                 WithinAbs(mixspin::lambda_max_closed_form(mixspin::make_params(s, 3, 1.0 / phi)), 1e-10));
    }
  }
}

TEST_CASE("stability thresholds at spin 5", "[stability]") {
  const auto t = mixspin::stability_thresholds(5, 3);
  CHECK_THAT(t.low, WithinAbs(0.901258081777163, 1e-9));
  CHECK_THAT(t.high, WithinAbs(1.10956009185308, 1e-9));
  CHECK_THAT(t.low * t.high, WithinAbs(1.0, 1e-9));
}

TEST_CASE("stability thresholds are reciprocal and roots of lambda_max = 1", "[stability][property]") {
  for (int s = 1; s <= 10; ++s) {
    for (int k : {2, 3, 4}) {
      const auto t = mixspin::stability_thresholds(s, k);
      CHECK(t.low < 1.0);
      CHECK(t.high > 1.0);
      CHECK_THAT(t.low * t.high, WithinAbs(1.0, 1e-9));
      CHECK_THAT(mixspin::lambda_max_closed_form(mixspin::make_params(s, k, t.high)), WithinAbs(1.0, 1e-9));
    }
  }
}

TEST_CASE("numeric Jacobian validates its step", "[stability]") {
  const auto params = mixspin::make_params(1, 3, 1.5);
  const auto l0 = mixspin::symmetric_fixed_point(params);
  CHECK_THROWS_AS(mixspin::numeric_jacobian(params, l0, 0.0), mixspin::Error);
  CHECK_THROWS_AS(mixspin::numeric_jacobian(params, l0, 0.6), mixspin::Error);
}
