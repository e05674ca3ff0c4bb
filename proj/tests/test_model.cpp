#include <catch_amalgamated.hpp>

#include <cmath>

#include "mixspin/model.hpp"
#include "oracles.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

mixspin::ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const mixspin::Error& e) {
    return e.code();
  }
  FAIL("expected mixspin::Error");
  return mixspin::ErrorCode::DomainError;
}

}  // namespace

TEST_CASE("make_params accepts in-range values", "[model]") {
  const auto p = mixspin::make_params(5, 3, 1.0);
  CHECK(p.s() == 5);
  CHECK(p.k() == 3);
  CHECK(p.phi() == 1.0);
  CHECK(p.spin_states() == 11);
  CHECK(p.beta_j() == 0.0);
  CHECK(p.with_phi(2.0).phi() == 2.0);
}

TEST_CASE("make_params rejects out-of-range values", "[model]") {
  using mixspin::ErrorCode;
  CHECK(code_of([] { mixspin::make_params(0, 3, 1.0); }) == ErrorCode::SpinOutOfRange);
  CHECK(code_of([] { mixspin::make_params(11, 3, 1.0); }) == ErrorCode::SpinOutOfRange);
  CHECK(code_of([] { mixspin::make_params(2, 1, 1.0); }) == ErrorCode::BranchingOutOfRange);
  CHECK(code_of([] { mixspin::make_params(2, 3, 1e3); }) == ErrorCode::PhiOutOfRange);
  CHECK(code_of([] { mixspin::make_params(2, 3, 0.0); }) == ErrorCode::PhiOutOfRange);
  CHECK(code_of([] { mixspin::make_params(2, 3, std::nan("")); }) == ErrorCode::PhiOutOfRange);
  CHECK_NOTHROW(mixspin::make_params(2, 3, 1e-2));
  CHECK_NOTHROW(mixspin::make_params(2, 3, 1e2));
}

TEST_CASE("phi_from_temperature", "[model]") {
  CHECK(mixspin::phi_from_temperature(0.0, 1.0) == 1.0);
  CHECK_THAT(mixspin::phi_from_temperature(2.0, 1.0), WithinAbs(2.718281828459045, 1e-15));
  CHECK_THAT(mixspin::phi_from_temperature(-2.0, 1.0), WithinAbs(0.36787944117144233, 1e-15));
  for (double j : {0.3, 1.0, 4.5}) {
    for (double t : {0.5, 1.0, 3.0}) {
      CHECK_THAT(mixspin::phi_from_temperature(j, t) * mixspin::phi_from_temperature(-j, t), WithinAbs(1.0, 1e-15));
    }
  }
  CHECK(code_of([] { mixspin::phi_from_temperature(1.0, 0.0); }) == mixspin::ErrorCode::NonPositiveTemperature);
  CHECK(code_of([] { mixspin::phi_from_temperature(1.0, -1.0); }) == mixspin::ErrorCode::NonPositiveTemperature);
}

TEST_CASE("symmetric fixed point values", "[model]") {
  const auto at_one = mixspin::symmetric_fixed_point(mixspin::make_params(5, 3, 1.0));
  for (int i = -5; i <= 5; ++i) CHECK(at_one.x(i) == 1.0);
  CHECK(at_one.z() == 1.0);

  const auto s1 = mixspin::symmetric_fixed_point(mixspin::make_params(1, 3, 2.0));
  CHECK_THAT(s1.x(1), WithinAbs(1.953125, 1e-15));
  CHECK_THAT(s1.x(-1), WithinAbs(1.953125, 1e-15));
  CHECK(s1.x(0) == 1.0);

  for (double phi : {0.3, 0.9, 1.4, 7.0}) {
    const auto params = mixspin::make_params(5, 3, phi);
    const auto state = mixspin::symmetric_fixed_point(params);
    for (int i = -5; i <= 5; ++i) {
      CHECK_THAT(state.x(i), WithinRel(std::pow(std::cosh(params.beta_j() * std::abs(i) / 2.0), 3), 1e-13));
    }
  }
}

TEST_CASE("symmetric fixed point invariants on a grid", "[model][property]") {
  for (int s = 1; s <= 10; ++s) {
    for (int k : {2, 3, 4}) {
      for (double phi : oracle::log_grid(0.05, 20.0, 41)) {
        const auto state = mixspin::symmetric_fixed_point(mixspin::make_params(s, k, phi));
        CHECK(state.z() == 1.0);
        for (int n = 1; n <= s; ++n) {
          CHECK(state.x(n) == state.x(-n));
          CHECK_THAT(state.x(n), WithinRel(oracle::symmetric_x(phi, k, n), 1e-13));
        }
      }
    }
  }
}

TEST_CASE("FieldState validation and layout", "[model]") {
  using mixspin::FieldState;
  CHECK(code_of([] { FieldState(2, {1.0, 1.0, 1.0}, 1.0); }) == mixspin::ErrorCode::InvalidState);
  CHECK(code_of([] { FieldState(1, {1.0, -1.0}, 1.0); }) == mixspin::ErrorCode::InvalidState);
  CHECK(code_of([] { FieldState(1, {1.0, 1.0}, 0.0); }) == mixspin::ErrorCode::InvalidState);
  CHECK(code_of([] { FieldState(1, {1.0, INFINITY}, 1.0); }) == mixspin::ErrorCode::InvalidState);

  const FieldState st(2, {1.0, 2.0, 3.0, 4.0}, 5.0);
  CHECK(st.x(-2) == 1.0);
  CHECK(st.x(-1) == 2.0);
  CHECK(st.x(0) == 1.0);
  CHECK(st.x(1) == 3.0);
  CHECK(st.x(2) == 4.0);
  CHECK(st.as_vector() == std::vector<double>{1.0, 2.0, 3.0, 4.0, 5.0});
  CHECK(code_of([&] { (void)st.x(3); }) == mixspin::ErrorCode::InvalidState);
}
