#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace zetalab::detail {

inline constexpr long double kPiL = 3.141592653589793238462643383279502884L;
inline constexpr long double kTwoPiL = 2.0L * kPiL;
inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Reduce an angle carried in extended precision into [-pi, pi].
inline double reduce_angle(long double a) {
  constexpr long double kInvTwoPiL = 1.0L / kTwoPiL;
  const long double x = a * kInvTwoPiL;
  const auto k = static_cast<long long>(x >= 0 ? x + 0.5L : x - 0.5L);
  return static_cast<double>(a - static_cast<long double>(k) * kTwoPiL);
}

/// n^{-s} from an extended-precision log n.
inline std::complex<double> pow_minus_s(long double log_n, double sigma,
                                        double t) {
  const double mag = std::exp(-sigma * static_cast<double>(log_n));
  const double ph = reduce_angle(static_cast<long double>(t) * log_n);
  return {mag * std::cos(ph), -mag * std::sin(ph)};
}

/// log n and n^{-1/2} for 0 <= n < kLogTableSize (entry 0 unused).
inline constexpr std::size_t kLogTableSize = 262144;

struct LogTable {
  std::vector<long double> log_n;
  std::vector<double> inv_sqrt_n;
};

const LogTable& log_table();

/// Riemann-Siegel theta in extended precision.
long double theta_rs_ld(long double t);

}  // namespace zetalab::detail
