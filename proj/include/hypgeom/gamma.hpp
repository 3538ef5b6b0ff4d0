#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "hypgeom/errors.hpp"

namespace hypgeom {

/// Largest argument for which Gamma(x) is representable as a double.
inline constexpr double kGammaOverflowThreshold = 171.6243769563027;

namespace detail {

// Lanczos approximation, g = 7, n = 9. Relative error about 1e-15 for x >= 0.5.
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

inline bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

/// sin(pi x) with argument reduction so that zeros at integers are exact.
inline double sin_pi(double x) {
  double r = std::remainder(x, 2.0);  // r in [-1, 1]
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(std::numbers::pi * r);
}

inline double lanczos(double x) {
  // x >= 0.5
  double z = x - 1.0;
  double sum = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    sum += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  double t = z + kLanczosG + 0.5;
  // t^(z+1/2) overflows well before Gamma does; split the power.
  double half_power = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half_power * (half_power * std::exp(-t)) * sum;
}

}  // namespace detail

/// Gamma function of a real argument.
///
/// Lanczos approximation for x >= 1/2, reflection formula below. About 14
/// significant digits on [-30, 170]; the reflection branch loses a little near
/// the poles where sin(pi x) is small.
inline double gamma_real(double x) {
  if (std::isnan(x)) throw DomainError("gamma of NaN");
  if (detail::is_nonpositive_integer(x)) throw PoleError("gamma has a pole at non-positive integers");
  if (x > kGammaOverflowThreshold) throw OverflowError("gamma overflows for x > 171.62");
  if (x < 0.5) {
    return std::numbers::pi / (detail::sin_pi(x) * detail::lanczos(1.0 - x));
  }
  if (x == std::floor(x) && x <= 30.0) {
    double r = 1.0;
    for (int k = 2; k < static_cast<int>(x); ++k) r *= k;
    return r;
  }
  return detail::lanczos(x);
}

/// 1/Gamma(x), which is entire: zero at the poles of Gamma.
inline double rgamma(double x) {
  if (detail::is_nonpositive_integer(x)) return 0.0;
  if (x > kGammaOverflowThreshold) return 0.0;
  return 1.0 / gamma_real(x);
}

}  // namespace hypgeom
