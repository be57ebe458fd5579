#pragma once

#include <array>
#include <cmath>

namespace fockfringe::detail {

// Exact in double up to 18!.
inline constexpr std::array<double, 19> kFactorial = [] {
  std::array<double, 19> f{};
  f[0] = 1.0;
  for (int i = 1; i < 19; ++i) f[i] = f[i - 1] * i;
  return f;
}();

inline double factorial(int n) { return kFactorial[static_cast<std::size_t>(n)]; }

inline double binomial(int n, int k) {
  return kFactorial[n] / (kFactorial[k] * kFactorial[n - k]);
}

inline double sqrt_factorial(int n) { return std::sqrt(kFactorial[n]); }

}  // namespace fockfringe::detail
