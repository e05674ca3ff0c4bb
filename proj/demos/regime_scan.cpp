// Walks phi across both sides of 1 for spin 5 on the ternary tree and prints
// the regime label next to the two criterion values.

#include <cstdio>

#include "mixspin/mixspin.hpp"

int main() {
  const int s = 5;
  const int k = 3;
  const auto thresholds = mixspin::regime_thresholds(s, k);
  std::printf("stability (%.6f, %.6f)  dobrushin (%.6f, %.6f)  ks (%.6f, %.6f)\n", thresholds.stability.low,
              thresholds.stability.high, thresholds.dobrushin.low, thresholds.dobrushin.high, thresholds.ks.low,
              thresholds.ks.high);

  for (double phi : {0.70, 0.80, 0.87, 0.95, 1.05, 1.15, 1.25, 1.50}) {
    const auto params = mixspin::make_params(s, k, phi);
    const auto dob = mixspin::dobrushin_test(params);
    const auto ks = mixspin::ks_test(params);
    std::printf("phi=%.2f  %-4s  D=%+.5f  g=%+.5f  h_psi=%.5f\n", phi,
                mixspin::to_string(mixspin::classify_regime(thresholds, phi)).data(), dob.value, ks.value,
                mixspin::entropy_rate_psi(params));
  }
  return 0;
}
