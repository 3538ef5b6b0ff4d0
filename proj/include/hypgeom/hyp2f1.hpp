#pragma once

// Gauss hypergeometric function 2F1(a,b;c;z) for real parameters on the
// slit plane C \ [1, +inf), plus the shifted maps f(z) = z 2F1(a,b;c;z) and
// g(z) = z 2F1(a,b;c;z^2).

#include <cmath>
#include <complex>
#include <optional>
#include <string>

#include "hypgeom/errors.hpp"
#include "hypgeom/gamma.hpp"
#include "hypgeom/params.hpp"

namespace hypgeom {

using Complex = std::complex<double>;

/// Which evaluation formula a point falls under when parameters are generic.
enum class Region {
  inner_disk,          ///< |z| <= 0.6: direct series
  pfaff_region,        ///< |z/(z-1)| <= 0.6: Pfaff transformation
  near_one,            ///< |1-z| <= 0.4: connection formula
  near_one_reflected,  ///< |1-z| >= 2.5: Pfaff, then connection formula
  transition,          ///< none of the above: Taylor re-expansion along a path
};

enum class Strategy { series, pfaff, connection, pfaff_connection, taylor };

inline const char* to_string(Region r) {
  switch (r) {
    case Region::inner_disk: return "inner-disk";
    case Region::pfaff_region: return "pfaff-region";
    case Region::near_one: return "near-one";
    case Region::near_one_reflected: return "near-one-reflected";
    case Region::transition: return "transition";
  }
  return "?";
}

inline const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::series: return "series";
    case Strategy::pfaff: return "pfaff";
    case Strategy::connection: return "connection";
    case Strategy::pfaff_connection: return "pfaff-connection";
    case Strategy::taylor: return "taylor";
  }
  return "?";
}

inline constexpr double kSeriesRadius = 0.6;
inline constexpr double kConnectionRadius = 0.4;
/// Forced strategies accept points up to this series ratio.
inline constexpr double kForcedRadius = 0.9;
/// Parameter excesses closer than this to an integer avoid the connection formula.
inline constexpr double kExcessGuard = 0.05;

inline bool on_branch_cut(Complex z) { return z.imag() == 0.0 && z.real() >= 1.0; }

inline Region classify(Complex z) {
  if (std::abs(z) <= kSeriesRadius) return Region::inner_disk;
  if (std::abs(z) <= kSeriesRadius * std::abs(z - 1.0)) return Region::pfaff_region;
  double d1 = std::abs(1.0 - z);
  if (d1 <= kConnectionRadius) return Region::near_one;
  if (d1 * kConnectionRadius >= 1.0) return Region::near_one_reflected;
  return Region::transition;
}

/// A point of the slit plane together with its region tag.
struct SlitPoint {
  Complex z;
  Region region;

  SlitPoint(Complex point) : z(point), region(Region::inner_disk) {  // NOLINT(implicit)
    if (!std::isfinite(point.real()) || !std::isfinite(point.imag())) {
      throw DomainError("z must be finite");
    }
    if (on_branch_cut(point)) throw DomainError("z lies on the branch cut [1, +inf)");
    region = classify(point);
  }
  SlitPoint(double x) : SlitPoint(Complex(x, 0.0)) {}  // NOLINT(implicit)
};

/// Value together with how it was obtained.
struct Evaluation {
  Complex value;
  Strategy strategy;
  int terms = 0;          ///< series terms (or Taylor steps) used
  double tail_bound = 0;  ///< estimated truncation error of the last series
};

namespace detail {

inline constexpr double kTermRatio = 1e-18;
inline constexpr int kMaxTerms = 10000;
inline constexpr int kQuietTerms = 3;

struct SeriesSum {
  Complex value;
  int terms;
  double tail_bound;
};

inline bool terminates(double a, double b) {
  return is_nonpositive_integer(a) || is_nonpositive_integer(b);
}

/// Direct power series; stops once |term| <= 1e-18 |sum| three times in a row.
inline SeriesSum gauss_series(double a, double b, double c, Complex z) {
  Complex sum = 1.0;
  Complex term = 1.0;
  int quiet = 0;
  int n = 0;
  for (; n < kMaxTerms; ++n) {
    double cn = c + n;
    if (cn == 0.0) throw PoleError("2F1 series: c + n vanishes");
    double num = (a + n) * (b + n);
    if (num == 0.0) return {sum, n + 1, 0.0};
    term *= z * (num / (cn * (n + 1.0)));
    sum += term;
    if (std::abs(term) <= kTermRatio * std::abs(sum)) {
      if (++quiet >= kQuietTerms) break;
    } else {
      quiet = 0;
    }
  }
  if (n == kMaxTerms) {
    throw EvaluationError("2F1 series did not converge within 10000 terms", z);
  }
  double r = std::abs(z);
  double tail = r < 1.0 ? std::abs(term) * r / (1.0 - r) : std::abs(term);
  return {sum, n + 1, tail};
}

/// Gamma-function coefficients of the connection formula around z = 1.
struct ConnectionCoeffs {
  double A;  ///< Gamma(c)Gamma(delta)/(Gamma(a)Gamma(b))
  double B;  ///< Gamma(c)Gamma(-delta)/(Gamma(c-a)Gamma(c-b))
};

inline ConnectionCoeffs connection_coeffs(double a, double b, double c) {
  double delta = a + b - c;
  if (delta == std::nearbyint(delta)) {
    throw UnsupportedParams("connection formula needs a non-integer a+b-c");
  }
  double gc = gamma_real(c);
  return {gc * gamma_real(delta) * rgamma(a) * rgamma(b),
          gc * gamma_real(-delta) * rgamma(c - a) * rgamma(c - b)};
}

/// 2F1(a,b;c;z) = B 2F1(a,b;delta+1;1-z) + A (1-z)^(-delta) 2F1(c-a,c-b;1-delta;1-z).
inline SeriesSum connection(double a, double b, double c, Complex z) {
  double delta = a + b - c;
  ConnectionCoeffs k = connection_coeffs(a, b, c);
  Complex u = 1.0 - z;
  SeriesSum total{0.0, 0, 0.0};
  if (k.B != 0.0) {
    SeriesSum s = gauss_series(a, b, delta + 1.0, u);
    total.value += k.B * s.value;
    total.terms += s.terms;
    total.tail_bound += std::fabs(k.B) * s.tail_bound;
  }
  if (k.A != 0.0) {
    SeriesSum s = gauss_series(c - a, c - b, 1.0 - delta, u);
    Complex pre = k.A * std::pow(u, -delta);
    total.value += pre * s.value;
    total.terms += s.terms;
    total.tail_bound += std::abs(pre) * s.tail_bound;
  }
  return total;
}

/// One Taylor step of the hypergeometric equation from zk to zk + h given
/// y(zk) and y'(zk). Works with the scaled coefficients y_k h^k so that
/// neither underflow nor overflow occurs close to the singular points.
inline void taylor_step(double a, double b, double c, Complex zk, Complex h, Complex& y, Complex& dy) {
  Complex p0 = zk * (1.0 - zk);
  Complex p1 = 1.0 - 2.0 * zk;
  Complex q0 = c - (a + b + 1.0) * zk;
  Complex hp0 = h / p0;
  Complex t0 = y;       // y_k h^k
  Complex t1 = dy * h;  // y_{k+1} h^{k+1}
  Complex sum = t0 + t1;
  Complex dsum = t1;  // sum of k y_k h^k
  int quiet = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    double kk = k;
    Complex t2 = ((kk + a) * (kk + b) * t0 * h - (kk + 1.0) * (p1 * kk + q0) * t1) * hp0 /
                 ((kk + 1.0) * (kk + 2.0));
    sum += t2;
    dsum += (kk + 2.0) * t2;
    t0 = t1;
    t1 = t2;
    if (std::abs(t2) * (kk + 2.0) <= kTermRatio * std::max(std::abs(sum), std::abs(dsum))) {
      if (++quiet >= kQuietTerms) break;
    } else {
      quiet = 0;
    }
  }
  y = sum;
  dy = dsum / h;
}

/// Analytic continuation by repeated Taylor re-expansion of the
/// hypergeometric differential equation. The path starts at z = 1/2 and
/// spirals around the singular point 1: 1 - z(s) = rho(s) e^{i psi(s)} with
/// log rho and psi linear in s, so it never comes closer to 1 than the
/// endpoints do. Every step stays within half the distance to 0 and 1.
inline SeriesSum taylor_continuation(double a, double b, double c, Complex z) {
  if (std::abs(z) <= 0.5) return gauss_series(a, b, c, z);
  const double rho0 = 0.5;
  Complex target_u = 1.0 - z;
  double log_rho0 = std::log(rho0);
  double log_rho_t = std::log(std::abs(target_u));
  double psi_t = std::arg(target_u);
  double speed = std::abs(Complex(log_rho_t - log_rho0, psi_t));
  auto point = [&](double s) {
    if (s >= 1.0) return z;
    return 1.0 - std::polar(std::exp(log_rho0 + s * (log_rho_t - log_rho0)), s * psi_t);
  };

  // Inside |z| < kReseedRadius the series converges quickly, so the path is
  // skipped there and (y, y') are re-seeded where it leaves that disk.
  constexpr double kReseedRadius = 0.55;
  Complex zk = point(0.0);
  Complex y, dy;
  double s = 0.0;
  int steps = 0;
  auto reseed = [&]() {
    while (s < 1.0 && std::abs(point(s)) < kReseedRadius) s = std::min(1.0, s + 1e-3);
    zk = point(s);
    y = gauss_series(a, b, c, zk).value;
    dy = (a * b / c) * gauss_series(a + 1.0, b + 1.0, c + 1.0, zk).value;
  };
  reseed();
  while (s < 1.0) {
    double hmax = 0.5 * std::min(std::abs(zk), std::abs(1.0 - zk));
    double ds = std::min(1.0 - s, 0.6 * hmax / (std::abs(1.0 - zk) * speed));
    Complex next = point(s + ds);
    while (std::abs(next - zk) > hmax) {
      ds *= 0.5;
      next = point(s + ds);
    }
    taylor_step(a, b, c, zk, next - zk, y, dy);
    zk = next;
    s = (s + ds >= 1.0 || next == z) ? 1.0 : s + ds;
    if (++steps > 100000) throw EvaluationError("Taylor continuation did not reach target", z);
    if (s < 1.0 && std::abs(zk) < kReseedRadius) reseed();
  }
  return {y, steps, 0.0};
}

inline bool near_integer(double x) { return distance_to_integer(x) < kExcessGuard; }

inline Strategy choose_strategy(double a, double b, double c, Complex z) {
  if (terminates(a, b)) return Strategy::series;
  if (terminates(a, c - b) || terminates(b, c - a)) return Strategy::pfaff;
  switch (classify(z)) {
    case Region::inner_disk: return Strategy::series;
    case Region::pfaff_region: return Strategy::pfaff;
    case Region::near_one:
      return near_integer(a + b - c) ? Strategy::taylor : Strategy::connection;
    case Region::near_one_reflected:
      return near_integer(b - a) ? Strategy::taylor : Strategy::pfaff_connection;
    case Region::transition: return Strategy::taylor;
  }
  return Strategy::taylor;
}

inline void require_region(bool ok, Strategy s, Complex z) {
  if (!ok) {
    throw DomainError(std::string("z is outside the validity region of strategy ") + to_string(s) +
                      " at (" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")");
  }
}

inline Evaluation evaluate(double a, double b, double c, Complex z, std::optional<Strategy> forced) {
  if (on_branch_cut(z)) throw DomainError("z lies on the branch cut [1, +inf)");
  if (is_nonpositive_integer(c)) throw PoleError("c must not be a non-positive integer");
  if (z == 0.0) return {1.0, forced.value_or(Strategy::series), 1, 0.0};
  Strategy s = forced ? *forced : choose_strategy(a, b, c, z);
  Complex w = z / (z - 1.0);
  SeriesSum out{};
  switch (s) {
    case Strategy::series:
      require_region(terminates(a, b) || std::abs(z) <= kForcedRadius, s, z);
      out = gauss_series(a, b, c, z);
      break;
    case Strategy::pfaff:
    case Strategy::pfaff_connection: {
      // 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a,c-b;c;w); the mirrored form swaps a and b.
      double lead = a, other = b;
      if (!terminates(a, c - b) && terminates(b, c - a)) std::swap(lead, other);
      Complex pre = std::pow(1.0 - z, -lead);
      SeriesSum inner{};
      if (s == Strategy::pfaff) {
        require_region(terminates(lead, c - other) || std::abs(w) <= kForcedRadius, s, z);
        inner = gauss_series(lead, c - other, c, w);
      } else {
        require_region(std::abs(1.0 - w) <= kForcedRadius, s, z);
        inner = connection(lead, c - other, c, w);
      }
      out = {pre * inner.value, inner.terms, std::abs(pre) * inner.tail_bound};
      break;
    }
    case Strategy::connection:
      require_region(std::abs(1.0 - z) <= kForcedRadius, s, z);
      out = connection(a, b, c, z);
      break;
    case Strategy::taylor:
      if (std::abs(1.0 - z) >= 1.0) {
        // Far from 1 the Pfaff form is better conditioned: the prefactor
        // carries the growth and the inner function stays bounded near w = 1.
        Complex pre = std::pow(1.0 - z, -a);
        SeriesSum inner = taylor_continuation(a, c - b, c, w);
        out = {pre * inner.value, inner.terms, 0.0};
      } else {
        out = taylor_continuation(a, b, c, z);
      }
      break;
  }
  if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag())) {
    throw OverflowError("2F1 value is not finite");
  }
  return {out.value, s, out.terms, out.tail_bound};
}

}  // namespace detail

/// 2F1(a,b;c;z) with strategy details. The strategy is selected from the
/// region of z unless one is forced.
inline Evaluation hyp2f1_eval(const ParamTriple& p, const SlitPoint& z,
                              std::optional<Strategy> strategy = std::nullopt) {
  return detail::evaluate(p.a(), p.b(), p.c(), z.z, strategy);
}

inline Complex hyp2f1(const ParamTriple& p, const SlitPoint& z,
                      std::optional<Strategy> strategy = std::nullopt) {
  return hyp2f1_eval(p, z, strategy).value;
}

/// Derivative of order 0, 1 or 2 via d/dz 2F1(a,b;c;z) = (ab/c) 2F1(a+1,b+1;c+1;z).
inline Complex hyp2f1_derivatives(const ParamTriple& p, const SlitPoint& z, int order) {
  double a = p.a(), b = p.b(), c = p.c();
  switch (order) {
    case 0: return hyp2f1(p, z);
    case 1: return (a * b / c) * detail::evaluate(a + 1, b + 1, c + 1, z.z, std::nullopt).value;
    case 2:
      return (a * (a + 1) * b * (b + 1) / (c * (c + 1))) *
             detail::evaluate(a + 2, b + 2, c + 2, z.z, std::nullopt).value;
    default: throw DomainError("derivative order must be 0, 1 or 2");
  }
}

/// f(z) = z 2F1(a,b;c;z).
inline Complex shifted_f(const ParamTriple& p, const SlitPoint& z) { return z.z * hyp2f1(p, z); }

/// g(z) = z 2F1(a,b;c;z^2); requires z^2 off the cut.
inline Complex shifted_g(const ParamTriple& p, Complex z) {
  Complex z2 = z * z;
  if (z.imag() == 0.0) z2 = Complex(z.real() * z.real(), 0.0);
  return z * hyp2f1(p, SlitPoint(z2));
}

/// Values f'(z) and f''(z) of the shifted map together with F(z).
struct ShiftedDerivatives {
  Complex F, dF, d2F;
  Complex f1, f2;
};

inline ShiftedDerivatives shifted_derivatives(const ParamTriple& p, const SlitPoint& z) {
  ShiftedDerivatives d;
  d.F = hyp2f1_derivatives(p, z, 0);
  d.dF = hyp2f1_derivatives(p, z, 1);
  d.d2F = hyp2f1_derivatives(p, z, 2);
  d.f1 = d.F + z.z * d.dF;
  d.f2 = 2.0 * d.dF + z.z * d.d2F;
  return d;
}

enum class PreschwarzRoute { direct, eqW };

/// z f''(z)/f'(z) for f(z) = z 2F1(a,b;c;z).
///
/// `direct` divides the derivatives; `eqW` goes through h = 2F1(a+1,b;c;z)/2F1(a,b;c;z):
///   zf''/f' = (2-c+(a+b-1)z)/(1-z) + (c-2+(1-a)(1-b)z)/((1-z)(1-a+a h)).
inline Complex preschwarzian(const ParamTriple& p, const SlitPoint& z,
                             PreschwarzRoute route = PreschwarzRoute::direct) {
  if (z.z == 0.0) return 0.0;
  double a = p.a(), b = p.b(), c = p.c();
  if (route == PreschwarzRoute::direct) {
    ShiftedDerivatives d = shifted_derivatives(p, z);
    if (std::abs(d.f1) <= 1e-13 * (std::abs(d.F) + std::abs(z.z * d.dF))) {
      throw NearZeroDerivative("f' vanishes numerically", z.z);
    }
    return z.z * d.f2 / d.f1;
  }
  Complex F = hyp2f1(p, z);
  Complex G = detail::evaluate(a + 1, b, c, z.z, std::nullopt).value;
  Complex h = G / F;
  Complex one_minus_z = 1.0 - z.z;
  Complex denom = one_minus_z * (1.0 - a + a * h);
  if (std::abs(denom) <= 1e-300) throw NearZeroDerivative("eqW denominator vanishes", z.z);
  return (2.0 - c + (a + b - 1.0) * z.z) / one_minus_z + (c - 2.0 + (1.0 - a) * (1.0 - b) * z.z) / denom;
}

/// Raw 2F1 for parameters that need no canonical ordering (shifted families).
inline Complex gauss(double a, double b, double c, Complex z) {
  return detail::evaluate(a, b, c, z, std::nullopt).value;
}

}  // namespace hypgeom
