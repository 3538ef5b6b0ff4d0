#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hypgeom/errors.hpp"
#include "hypgeom/gamma.hpp"
#include "hypgeom/hyp2f1.hpp"
#include "hypgeom/params.hpp"
#include "hypgeom/series.hpp"

namespace hypgeom {

enum class SectorKind { S, S_star, S_eps, S_star_eps, apex_sector };

inline const char* to_string(SectorKind k) {
  switch (k) {
    case SectorKind::S: return "S";
    case SectorKind::S_star: return "S*";
    case SectorKind::S_eps: return "S_eps";
    case SectorKind::S_star_eps: return "S*_eps";
    case SectorKind::apex_sector: return "apex";
  }
  return "?";
}

/// {|arg(z - apex)| < phi} with phi = pi delta / 2, optionally fattened by eps,
/// optionally united with its negative (the starred kinds, apex 0).
struct SectorSpec {
  SectorKind kind = SectorKind::S;
  double delta = 0.5;
  double eps = 0.0;
  double apex = 0.0;
  double phi = std::numbers::pi / 4;

  static SectorSpec make(SectorKind kind, double delta, double eps = 0.0, double apex = 0.0) {
    if (!(delta > 0.0 && delta < 1.0)) throw DomainError("sector opening delta must lie in (0,1)");
    if (eps < 0.0) throw DomainError("sector fattening must be non-negative");
    return {kind, delta, eps, apex, std::numbers::pi * delta / 2.0};
  }
};

struct Membership {
  bool inside = false;
  double distance = 0.0;  // distance to the un-fattened sector, 0 inside
};

/// Distance from w to the closed sector {|arg w| <= phi} with apex 0.
inline double sector_distance(Complex w, double phi) {
  double x = w.real(), y = std::fabs(w.imag());
  if (x == 0.0 && y == 0.0) return 0.0;
  if (std::atan2(y, x) <= phi) return 0.0;
  double t = x * std::cos(phi) + y * std::sin(phi);
  if (t <= 0.0) return std::hypot(x, y);
  return std::fabs(x * std::sin(phi) - y * std::cos(phi));
}

/// Distance from a point inside {|arg w| < phi} to the sector boundary.
inline double distance_to_sector_boundary(Complex w, double phi) {
  double ang = std::fabs(std::arg(w));
  double gap = phi - ang;
  if (gap <= 0.0) return 0.0;
  return gap >= std::numbers::pi / 2 ? std::abs(w) : std::abs(w) * std::sin(gap);
}

inline Membership sector_contains(const SectorSpec& s, Complex z) {
  Membership m;
  switch (s.kind) {
    case SectorKind::S:
    case SectorKind::S_eps:
    case SectorKind::apex_sector: {
      Complex w = z - s.apex;
      m.distance = sector_distance(w, s.phi);
      if (s.kind == SectorKind::S_eps) {
        m.inside = m.distance < s.eps || (s.eps == 0.0 && m.distance == 0.0);
      } else {
        m.inside = w != 0.0 && std::fabs(std::arg(w)) < s.phi;
      }
      break;
    }
    case SectorKind::S_star:
    case SectorKind::S_star_eps: {
      m.distance = std::min(sector_distance(z, s.phi), sector_distance(-z, s.phi));
      if (s.kind == SectorKind::S_star_eps) {
        m.inside = m.distance < s.eps || (s.eps == 0.0 && m.distance == 0.0);
      } else {
        double ang = std::fabs(std::arg(z));
        m.inside = z != 0.0 && (ang < s.phi || std::numbers::pi - ang < s.phi);
      }
      break;
    }
  }
  return m;
}

/// A = Gamma(c)Gamma(delta)/(Gamma(a)Gamma(b)) and
/// B = Gamma(c)Gamma(-delta)/(Gamma(c-a)Gamma(c-b)) for delta in (0,1).
struct AsymptoticConstants {
  double A = 0.0;
  double B = 0.0;
};

inline void require_delta_unit(const ParamTriple& p) {
  ExactTriple e = p.exact();
  Rational d = e.delta();
  if (!(sgn(d) > 0 && d < 1)) throw DomainError("delta = a+b-c must lie in (0,1)");
}

inline AsymptoticConstants asymptotic_constants(const ParamTriple& p) {
  require_delta_unit(p);
  double a = p.a(), b = p.b(), c = p.c(), d = p.delta();
  double gc = gamma_real(c);
  return {gc * gamma_real(d) * rgamma(a) * rgamma(b), gc * gamma_real(-d) * rgamma(c - a) * rgamma(c - b)};
}

/// eps = |B| + 2^(1-delta) A, read as 2^(1-delta) when c = a or c = b.
inline double epsilon_of(const ParamTriple& p) {
  require_delta_unit(p);
  double d = p.delta();
  if (p.c() == p.a() || p.c() == p.b()) return std::pow(2.0, 1.0 - d);
  AsymptoticConstants k = asymptotic_constants(p);
  return std::fabs(k.B) + std::pow(2.0, 1.0 - d) * k.A;
}

/// Deterministic points of the unit disk: a Halton(2,3) sequence with a
/// seed-dependent Cranley-Patterson shift mapped by area, followed by
/// equally spaced points on the circle |z| = ring_radius.
inline std::vector<Complex> disk_samples(int n, std::uint64_t seed, int n_ring, double ring_radius = 1.0 - 1e-4) {
  if (n < 0 || n_ring < 0 || n_ring > n) throw DomainError("invalid sample counts");
  std::mt19937_64 rng(seed);
  auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  double shift_u = unit(), shift_v = unit(), shift_ring = unit();
  auto radical_inverse = [](std::uint64_t i, std::uint64_t base) {
    double inv = 1.0 / static_cast<double>(base), f = inv, r = 0.0;
    while (i > 0) {
      r += f * static_cast<double>(i % base);
      i /= base;
      f *= inv;
    }
    return r;
  };
  std::vector<Complex> zs;
  zs.reserve(static_cast<std::size_t>(n));
  int n_fill = n - n_ring;
  for (int i = 0; i < n_fill; ++i) {
    double u = std::fmod(radical_inverse(static_cast<std::uint64_t>(i) + 1, 2) + shift_u, 1.0);
    double v = std::fmod(radical_inverse(static_cast<std::uint64_t>(i) + 1, 3) + shift_v, 1.0);
    zs.push_back(std::polar(std::sqrt(u), 2.0 * std::numbers::pi * v));
  }
  for (int i = 0; i < n_ring; ++i) {
    zs.push_back(std::polar(ring_radius, 2.0 * std::numbers::pi * (i + shift_ring) / n_ring));
  }
  return zs;
}

struct SampleWitness {
  Complex z;
  Complex image;
  double distance = 0.0;
};

struct Theorem1Report {
  double a = 0, b = 0, c = 0;
  double delta = 0.0;
  double eps = 0.0;
  double A = 0.0, B = 0.0;
  int n_samples = 0;
  std::uint64_t seed = 0;
  double max_distance_f = 0.0;  // largest distance of f(z) to S(delta)
  double max_distance_g = 0.0;  // largest distance of g(z) to S*(delta)
  double max_remainder = 0.0;   // largest |f(z) - A (1-z)^(-delta)|
  bool main_term_in_sector = true;
  std::vector<SampleWitness> violations_f, violations_g;
  bool remainder_ok = true;
  bool pass = false;
};

/// Samples f(z) = z F(z) and g(z) = z F(z^2) over the disk and checks
/// f in S_eps(delta), g in S*_eps(delta) with slack 1e-8 (1 + |image|).
inline Theorem1Report check_theorem1(const ParamTriple& p, int n_samples = 10000, std::uint64_t seed = 1,
                                     int n_ring = -1) {
  Theorem1Report r;
  r.a = p.a();
  r.b = p.b();
  r.c = p.c();
  r.delta = p.delta();
  r.eps = epsilon_of(p);
  AsymptoticConstants k = asymptotic_constants(p);
  r.A = k.A;
  r.B = k.B;
  r.n_samples = n_samples;
  r.seed = seed;
  if (n_ring < 0) n_ring = n_samples / 8;
  double phi = std::numbers::pi * r.delta / 2.0;
  for (Complex z : disk_samples(n_samples, seed, n_ring)) {
    Complex fz = shifted_f(p, z);
    Complex gz = shifted_g(p, z);
    double df = sector_distance(fz, phi);
    double dg = std::min(sector_distance(gz, phi), sector_distance(-gz, phi));
    r.max_distance_f = std::max(r.max_distance_f, df);
    r.max_distance_g = std::max(r.max_distance_g, dg);
    if (df >= r.eps + 1e-8 * (1.0 + std::abs(fz))) r.violations_f.push_back({z, fz, df});
    if (dg >= r.eps + 1e-8 * (1.0 + std::abs(gz))) r.violations_g.push_back({z, gz, dg});
    Complex main = k.A * std::pow(1.0 - z, -r.delta);
    if (sector_distance(main, phi) > 1e-12 * std::abs(main)) r.main_term_in_sector = false;
    double rem = std::abs(fz - main);
    r.max_remainder = std::max(r.max_remainder, rem);
  }
  r.remainder_ok = r.max_remainder <= r.eps + 1e-8;
  r.pass = r.violations_f.empty() && r.violations_g.empty();
  return r;
}

/// Exact check of 0 < a < 1 < b <= c < min{a+b, 1+a+b-ab}.
inline bool theorem_a_hypotheses(const ParamTriple& p) {
  ExactTriple e = p.exact();
  Rational lim = std::min<Rational>(e.a + e.b, 1 + e.a + e.b - e.a * e.b);
  return sgn(e.a) > 0 && e.a < 1 && 1 < e.b && e.b <= e.c && e.c < lim;
}

/// kappa = (c^2 - a^2 - b^2 + 3(a+b-c) - 2) / (2(a+b-c)).
inline double kappa_closed_form(const ParamTriple& p) {
  if (!theorem_a_hypotheses(p)) throw HypothesisError("closed-form kappa needs 0<a<1<b<=c<min{a+b,1+a+b-ab}");
  double a = p.a(), b = p.b(), c = p.c(), d = a + b - c;
  return (c * c - a * a - b * b + 3.0 * d - 2.0) / (2.0 * d);
}

struct RadiusMinimum {
  double r = 0.0;
  double min_value = 0.0;
  double theta = 0.0;
};

struct ConvexityReport {
  double a = 0, b = 0, c = 0;
  std::optional<double> kappa_closed;
  double kappa_numeric = 0.0;
  double argmin_r = 0.0;
  double argmin_theta = 0.0;
  std::vector<RadiusMinimum> radii_trace;
  std::vector<RadiusMinimum> interior_trace;
  RadiusMinimum circle;                  // minimum on |z| = 1, theta >= theta_min
  std::optional<double> corner_estimate; // extrapolated limit at z -> 1 along |z| = 1
  std::vector<Complex> near_zero_derivative;
  double tolerance = 1e-3;
  bool consistent = true;
};

struct KappaOptions {
  std::vector<double> radii = {0.9, 0.99, 0.999, 0.9999};
  std::vector<double> interior = {0.3, 0.6};
  int n_theta = 4096;
  double theta_min = 1e-6;
  double tolerance = 1e-3;
};

namespace detail {
inline double re_psi(const ParamTriple& p, Complex z) { return 1.0 + preschwarzian(p, z).real(); }

// Re(1 + z f''/f') at z = e^{i theta}. In the eqW form the term
// (2-c+(a+b-1)z)/(1-z) has real part (2-c)/2 - (a+b-1)/2 on |z| = 1, so only
// the bounded remainder is evaluated; near theta = 0 the direct quotient is
// of size 1/theta and loses its real part to rounding.
inline double re_psi_unit_circle(const ParamTriple& p, double theta) {
  double a = p.a(), b = p.b(), c = p.c();
  Complex z = std::polar(1.0, theta);
  Complex h = gauss(a + 1, b, c, z) / hyp2f1(p, z);
  Complex den = (1.0 - z) * (1.0 - a + a * h);
  if (std::abs(den) < 1e-300) throw NearZeroDerivative("f' vanishes on the unit circle", z);
  Complex rest = (c - 2.0 + (1.0 - a) * (1.0 - b) * z) / den;
  return 1.0 + 0.5 * (2.0 - c) - 0.5 * (a + b - 1.0) + rest.real();
}
}  // namespace detail

/// kappa = inf over the disk of Re(1 + z f''/f').
///
/// Minima are taken on circles |z| = r over theta in [0, pi] (the values at
/// -theta are conjugate), on the unit circle itself with a geometric theta grid
/// from theta_min, and, for delta in (0,1), at the corner z -> 1 by linear
/// extrapolation in |1 - e^{i theta}|^delta from theta_min and theta_min/10.
inline ConvexityReport kappa_numeric(const ParamTriple& p, const KappaOptions& opt = {}) {
  ConvexityReport r;
  r.a = p.a();
  r.b = p.b();
  r.c = p.c();
  r.tolerance = opt.tolerance;
  if (theorem_a_hypotheses(p)) r.kappa_closed = kappa_closed_form(p);

  double best = std::numeric_limits<double>::infinity();
  auto visit = [&](double rad, double th, RadiusMinimum& rm) {
    Complex z = std::polar(rad, th);
    double v;
    try {
      v = rad == 1.0 ? detail::re_psi_unit_circle(p, th) : detail::re_psi(p, z);
    } catch (const NearZeroDerivative& e) {
      r.near_zero_derivative.push_back(e.point());
      return;
    }
    if (v < rm.min_value) rm = {rad, v, th};
    if (v < best) {
      best = v;
      r.argmin_r = rad;
      r.argmin_theta = th;
    }
  };
  auto circle_min = [&](double rad) {
    RadiusMinimum rm{rad, std::numeric_limits<double>::infinity(), 0.0};
    int n = std::max(2, opt.n_theta);
    for (int j = 0; j < n; ++j) visit(rad, std::numbers::pi * j / (n - 1), rm);
    return rm;
  };
  for (double rad : opt.interior) r.interior_trace.push_back(circle_min(rad));
  for (double rad : opt.radii) r.radii_trace.push_back(circle_min(rad));

  r.circle = {1.0, std::numeric_limits<double>::infinity(), 0.0};
  {
    int n = std::max(2, opt.n_theta);
    double l0 = std::log(opt.theta_min), l1 = std::log(std::numbers::pi);
    for (int j = 0; j < n; ++j) visit(1.0, std::exp(l0 + (l1 - l0) * j / (n - 1)), r.circle);
    for (int j = 1; j < n; ++j) visit(1.0, std::numbers::pi * j / (n - 1), r.circle);
  }

  double d = p.delta();
  if (d > 0.0 && d < 1.0) {
    try {
      double t1 = opt.theta_min, t2 = opt.theta_min / 10.0;
      double v1 = detail::re_psi_unit_circle(p, t1);
      double v2 = detail::re_psi_unit_circle(p, t2);
      double s1 = std::pow(2.0 * std::sin(t1 / 2.0), d), s2 = std::pow(2.0 * std::sin(t2 / 2.0), d);
      double est = (v2 * s1 - v1 * s2) / (s1 - s2);
      r.corner_estimate = est;
      if (est < best) {
        best = est;
        r.argmin_r = 1.0;
        r.argmin_theta = 0.0;
      }
    } catch (const NearZeroDerivative& e) {
      r.near_zero_derivative.push_back(e.point());
    }
  }
  r.kappa_numeric = std::min(best, 1.0);
  if (r.kappa_closed) r.consistent = std::fabs(*r.kappa_closed - r.kappa_numeric) <= opt.tolerance;
  return r;
}

struct CurveSample {
  double delta = 0.0;
  double A = 0.0, B = 0.0;
  std::vector<double> theta;
  std::vector<Complex> gamma, gamma1, gamma2;
  std::vector<bool> gamma2_independent;  // gamma2 from the connection formula rather than gamma - gamma1
  double decomposition_residual = 0.0;    // max |gamma - gamma1 - gamma2| / (1 + |gamma|)
  double max_abs_gamma2 = 0.0;

  std::vector<double> x() const { return part(gamma, true); }
  std::vector<double> y() const { return part(gamma, false); }
  std::vector<double> x1() const { return part(gamma1, true); }
  std::vector<double> y1() const { return part(gamma1, false); }
  std::vector<double> x2() const { return part(gamma2, true); }
  std::vector<double> y2() const { return part(gamma2, false); }

 private:
  static std::vector<double> part(const std::vector<Complex>& v, bool re) {
    std::vector<double> out;
    out.reserve(v.size());
    for (Complex z : v) out.push_back(re ? z.real() : z.imag());
    return out;
  }
};

/// R(z) = F(z) - A(1-z)^(-delta) from the connection formula:
///   B 2F1(a,b;delta+1;1-z) + A (1-z)^(-delta) (2F1(c-a,c-b;1-delta;1-z) - 1).
inline Complex remainder_via_connection(const ParamTriple& p, const AsymptoticConstants& k, Complex z) {
  double a = p.a(), b = p.b(), c = p.c(), d = p.delta();
  Complex u = 1.0 - z;
  Complex first = k.B == 0.0 ? Complex(0.0) : k.B * detail::gauss_series(a, b, d + 1.0, u).value;
  Complex second = detail::gauss_series(c - a, c - b, 1.0 - d, u).value - 1.0;
  return first + k.A * std::pow(u, -d) * second;
}

/// The boundary curve gamma(theta) = f(e^{i theta}) on a geometric theta
/// grid in [theta_min, pi], split as gamma1 = A e^{i theta}(1-e^{i theta})^(-delta)
/// plus gamma2 = e^{i theta} R(e^{i theta}).
inline CurveSample boundary_curve(const ParamTriple& p, int n_theta = 512, double theta_min = 1e-6) {
  AsymptoticConstants k = asymptotic_constants(p);
  if (n_theta < 2) throw DomainError("boundary curve needs at least two points");
  CurveSample cs;
  cs.delta = p.delta();
  cs.A = k.A;
  cs.B = k.B;
  double l0 = std::log(theta_min), l1 = std::log(std::numbers::pi);
  for (int j = 0; j < n_theta; ++j) {
    double th = j == n_theta - 1 ? std::numbers::pi : std::exp(l0 + (l1 - l0) * j / (n_theta - 1));
    Complex e = std::polar(1.0, th);
    if (j == n_theta - 1) e = Complex(-1.0, 0.0);
    Complex g = shifted_f(p, e);
    Complex g1 = k.A * e * std::pow(1.0 - e, -cs.delta);
    bool indep = std::abs(1.0 - e) <= 0.9;
    Complex g2 = indep ? e * remainder_via_connection(p, k, e) : g - g1;
    cs.theta.push_back(th);
    cs.gamma.push_back(g);
    cs.gamma1.push_back(g1);
    cs.gamma2.push_back(g2);
    cs.gamma2_independent.push_back(indep);
    cs.decomposition_residual = std::max(cs.decomposition_residual, std::abs(g - g1 - g2) / (1.0 + std::abs(g)));
    cs.max_abs_gamma2 = std::max(cs.max_abs_gamma2, std::abs(g2));
  }
  return cs;
}

struct SectorTheoremReport {
  double a = 0, b = 0, c = 0;
  double delta = 0.0;
  double B = 0.0;
  double kappa = 0.0;
  std::string kappa_source;  // "closed" or "numeric"
  int n_samples = 0;
  std::uint64_t seed = 0;
  bool apex_negative = false;
  std::vector<SampleWitness> violations;
  double min_boundary_distance = 0.0;  // tightness: closest sample to the sector boundary
  std::vector<double> line_theta;
  std::vector<double> line_residual;   // |y - tan(phi)(x - B)|
  double residual_small = 0.0;         // residual at the smallest theta
  double residual_ref = 0.0;           // residual at theta = 1e-3
  double monotone_below = 0.0;         // residual decreases as theta decreases for all theta below this
  double slope_ratio = 0.0;            // y/(x - B) at the smallest theta
  double tan_phi = 0.0;
  bool line_converges = false;
  bool pass = false;
};

/// Containment of f(D) in {|arg(z - B)| < pi delta/2} and the approach of
/// the boundary curve to the line y = tan(phi)(x - B) as theta -> 0.
inline SectorTheoremReport check_sector_theorem(const ParamTriple& p, int n_samples = 10000, std::uint64_t seed = 1,
                                                double theta_min = 1e-6) {
  AsymptoticConstants k = asymptotic_constants(p);
  SectorTheoremReport r;
  r.a = p.a();
  r.b = p.b();
  r.c = p.c();
  r.delta = p.delta();
  r.B = k.B;
  r.n_samples = n_samples;
  r.seed = seed;
  if (theorem_a_hypotheses(p)) {
    r.kappa = kappa_closed_form(p);
    r.kappa_source = "closed";
  } else {
    r.kappa = kappa_numeric(p).kappa_numeric;
    r.kappa_source = "numeric";
  }
  if (r.kappa < (r.kappa_source == "closed" ? 0.0 : -1e-6)) {
    throw HypothesisError("sector theorem needs a convex f (kappa >= 0)");
  }
  r.apex_negative = k.B < 0.0;
  double phi = std::numbers::pi * r.delta / 2.0;
  r.tan_phi = std::tan(phi);

  r.min_boundary_distance = std::numeric_limits<double>::infinity();
  for (Complex z : disk_samples(n_samples, seed, n_samples / 8)) {
    Complex fz = shifted_f(p, z);
    Complex w = fz - k.B;
    double out = sector_distance(w, phi);
    bool inside = w != 0.0 && std::fabs(std::arg(w)) < phi;
    if (!inside && out > 1e-8 * (1.0 + std::abs(fz))) {
      r.violations.push_back({z, fz, out});
    } else if (inside) {
      r.min_boundary_distance = std::min(r.min_boundary_distance, distance_to_sector_boundary(w, phi));
    }
  }

  // Decades from theta_min up to 1e-1.
  for (double th = theta_min; th <= 0.1 * (1 + 1e-12); th *= 10.0) {
    Complex g = shifted_f(p, std::polar(1.0, th));
    r.line_theta.push_back(th);
    r.line_residual.push_back(std::fabs(g.imag() - r.tan_phi * (g.real() - k.B)));
    if (r.line_theta.size() == 1) r.slope_ratio = g.imag() / (g.real() - r.B);
  }
  r.residual_small = r.line_residual.front();
  Complex g3 = shifted_f(p, std::polar(1.0, 1e-3));
  r.residual_ref = std::fabs(g3.imag() - r.tan_phi * (g3.real() - k.B));
  std::size_t j = 1;
  while (j < r.line_residual.size() && r.line_residual[j] >= r.line_residual[j - 1]) ++j;
  r.monotone_below = r.line_theta[j - 1];
  r.line_converges = r.residual_small < r.residual_ref;
  r.pass = r.apex_negative && r.violations.empty() && r.line_converges;
  return r;
}

struct SigmaReport {
  CoeffSeries<double> sigma;
  CoeffSeries<Rational> Q;
  double A = 0.0;
  double B = 0.0;
  int expected_sign = 0;       // +1 when a<c<b, -1 when c<a or c>b, 0 when c = a or c = b
  int sign_certified = 0;      // count of n whose sign of Q_n - A is resolved beyond the error of A
  bool signs_match = false;    // every sigma_n has the expected sign
  bool q_monotone = false;     // Q_n strictly monotone in the direction of A
  bool ratio_identity = false; // Q_{n+1}/Q_n - 1 = (a-c)(b-c)/((c+n)(delta+n)), exact, n <= 50
  std::vector<long> sum_n;
  std::vector<double> partial_sums;
  std::vector<double> partial_errors;  // |S_N - B|
};

/// sigma_n = (delta)_n/n! (Q_n - A), Q_n = (a)_n (b)_n/((c)_n (delta)_n), whose sum is B.
inline SigmaReport sigma_series(const ParamTriple& p, int N = 200,
                                const std::vector<long>& sum_points = {10, 100, 1000, 10000}) {
  require_delta_unit(p);
  AsymptoticConstants k = asymptotic_constants(p);
  SigmaReport r;
  r.A = k.A;
  r.B = k.B;
  ExactTriple e = p.exact();
  Rational d = e.delta();
  if (e.a < e.c && e.c < e.b) {
    r.expected_sign = 1;
  } else if (e.c < e.a || e.c > e.b) {
    r.expected_sign = -1;
  }

  r.Q.resize(static_cast<std::size_t>(N) + 1);
  r.sigma.resize(static_cast<std::size_t>(N) + 1);
  r.Q.entries[0] = 1;
  Rational weight = 1;  // (delta)_n / n!
  // Gamma values carry about 1e-13 relative error.
  double a_err = 1e-12 * std::fabs(k.A);
  r.signs_match = true;
  r.ratio_identity = true;
  r.q_monotone = true;
  for (int n = 0; n <= N; ++n) {
    if (n > 0) {
      Rational ratio = (e.a + n - 1) * (e.b + n - 1) / ((e.c + n - 1) * (d + n - 1));
      r.Q.entries[n] = r.Q.entries[n - 1] * ratio;
      weight *= (d + n - 1) / Rational(n);
      if (n - 1 <= 50) {
        Rational lhs = ratio - 1;
        Rational rhs = (e.a - e.c) * (e.b - e.c) / ((e.c + n - 1) * (d + n - 1));
        if (lhs != rhs) r.ratio_identity = false;
      }
      int dir = r.expected_sign == 1 ? -1 : 1;  // Q decreases when sigma > 0
      int cmp_q = cmp(r.Q.entries[n], r.Q.entries[n - 1]);
      if (r.expected_sign != 0 && cmp_q != dir) r.q_monotone = false;
    }
    double diff = r.Q.entries[n].get_d() - k.A;
    double s = weight.get_d() * diff;
    r.sigma.entries[n] = s;
    r.sigma.error[n] = weight.get_d() * (a_err + 1e-16 * std::fabs(k.A));
    int sign = std::fabs(diff) > a_err ? (diff > 0 ? 1 : -1) : 0;
    if (sign != 0) ++r.sign_certified;
    if (sign != r.expected_sign) r.signs_match = false;
  }

  // Partial sums in floating point with the ratio recurrences.
  long nmax = sum_points.empty() ? 0 : *std::max_element(sum_points.begin(), sum_points.end());
  double a = p.a(), b = p.b(), c = p.c(), dd = p.delta();
  double q = 1.0, wgt = 1.0, sum = 0.0;
  std::size_t next = 0;
  std::vector<long> pts = sum_points;
  std::sort(pts.begin(), pts.end());
  for (long n = 0; n <= nmax && next < pts.size(); ++n) {
    if (n > 0) {
      q *= (a + n - 1) * (b + n - 1) / ((c + n - 1) * (dd + n - 1));
      wgt *= (dd + n - 1) / static_cast<double>(n);
    }
    sum += wgt * (q - k.A);
    while (next < pts.size() && pts[next] == n + 1) {
      r.sum_n.push_back(n + 1);
      r.partial_sums.push_back(sum);
      r.partial_errors.push_back(std::fabs(sum - k.B));
      ++next;
    }
  }
  return r;
}

}  // namespace hypgeom
