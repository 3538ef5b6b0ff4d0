#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypgeom/errors.hpp"
#include "hypgeom/hyp2f1.hpp"
#include "hypgeom/params.hpp"

namespace hypgeom {

enum class Rate { inv_x, inv_x_log_x, x_pow_a_minus_b, inv_log_x, x_pow_b_minus_a_minus_1, none };

inline const char* to_string(Rate r) {
  switch (r) {
    case Rate::inv_x: return "x^-1";
    case Rate::inv_x_log_x: return "x^-1 log x";
    case Rate::x_pow_a_minus_b: return "x^(a-b)";
    case Rate::inv_log_x: return "1/log x";
    case Rate::x_pow_b_minus_a_minus_1: return "x^(b-a-1)";
    case Rate::none: return "none";
  }
  return "?";
}

/// Values of a quantity along a grid heading to a limit point.
struct LimitProbe {
  std::string label;
  std::vector<double> xs;
  std::vector<double> values;
  double claimed_limit = 0.0;
  bool limit_infinite = false;
  Rate rate = Rate::none;
  double tolerance = 0.0;
  double final_error = 0.0;
  bool monotone_tail = false;  // last three values move monotonically toward the limit
  bool converged = false;
  std::optional<double> fitted_slope;   // log-log slope of |value - limit| for power rates
  std::optional<double> expected_slope;
  std::optional<double> halving_ratio;  // for 1/log rates: err(x_last)/err(x_mid) against log(mid)/log(last)
  std::optional<double> halving_target;
};

inline std::vector<double> default_probe_grid() { return {1e1, 1e2, 1e3, 1e4, 1e5, 1e6}; }

namespace detail {

inline void finish_probe(LimitProbe& pr) {
  if (pr.values.empty()) return;
  std::size_t n = pr.values.size();
  if (pr.limit_infinite) {
    pr.final_error = std::numeric_limits<double>::infinity();
    pr.monotone_tail = n >= 3 && pr.values[n - 1] > pr.values[n - 2] && pr.values[n - 2] > pr.values[n - 3];
    pr.converged = pr.monotone_tail;
    return;
  }
  auto err = [&](std::size_t i) { return std::fabs(pr.values[i] - pr.claimed_limit); };
  pr.final_error = err(n - 1);
  pr.monotone_tail = n >= 3 && err(n - 1) < err(n - 2) && err(n - 2) < err(n - 3);
  pr.converged = pr.monotone_tail && pr.final_error <= pr.tolerance;
}

/// Log-log slope of |value - limit| over the last two grid points.
inline double tail_slope(const LimitProbe& pr) {
  std::size_t n = pr.values.size();
  double e1 = std::fabs(pr.values[n - 2] - pr.claimed_limit), e2 = std::fabs(pr.values[n - 1] - pr.claimed_limit);
  return std::log(e2 / e1) / std::log(pr.xs[n - 1] / pr.xs[n - 2]);
}

/// err(x_last)/err(x_mid) and log(x_mid)/log(x_last), x_mid the geometric middle.
inline std::pair<double, double> halving(const LimitProbe& pr, std::size_t mid) {
  std::size_t n = pr.values.size();
  double e_mid = std::fabs(pr.values[mid] - pr.claimed_limit), e_last = std::fabs(pr.values[n - 1] - pr.claimed_limit);
  return {e_last / e_mid, std::log(pr.xs[mid]) / std::log(pr.xs[n - 1])};
}

inline std::size_t mid_index(const std::vector<double>& xs) {
  // grid point whose log is closest to half of the last one
  double target = 0.5 * std::log(xs.back());
  std::size_t best = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (std::fabs(std::log(xs[i]) - target) < std::fabs(std::log(xs[best]) - target)) best = i;
  }
  return best;
}

inline void annotate_rate(LimitProbe& pr, double power) {
  if (pr.values.size() < 2) return;
  if (pr.rate == Rate::inv_log_x || pr.rate == Rate::inv_x_log_x) {
    auto [ratio, target] = halving(pr, mid_index(pr.xs));
    if (pr.rate == Rate::inv_log_x) {
      pr.halving_ratio = ratio;
      pr.halving_target = target;
    }
    return;
  }
  if (pr.rate == Rate::none) return;
  pr.expected_slope = power;
  pr.fitted_slope = tail_slope(pr);
}

inline void require_ordered(const ParamTriple& p) {
  if (!(p.a() > 0.0 && p.b() <= p.c())) throw HypothesisError("probe needs 0 < a <= b <= c");
}

}  // namespace detail

/// Rate of phi(x) = 2F1(a+1,b;c;-x)/2F1(a,b;c;-x) -> 0 by the size of b - a (b < c).
inline Rate phi_rate(const ParamTriple& p) {
  ExactTriple e = p.exact();
  Rational d = e.b - e.a;
  if (e.b == e.c) return Rate::inv_x;
  if (d > 1) return Rate::inv_x;
  if (d == 1) return Rate::inv_x_log_x;
  if (sgn(d) > 0) return Rate::x_pow_a_minus_b;
  return Rate::inv_log_x;
}

/// phi(x) = 2F1(a+1,b;c;-x)/2F1(a,b;c;-x) on x in xs; limit 0.
inline LimitProbe phi_probe(const ParamTriple& p, std::vector<double> xs = default_probe_grid(), double tol = 1e-2) {
  detail::require_ordered(p);
  LimitProbe pr;
  pr.label = "phi";
  pr.xs = xs;
  pr.rate = phi_rate(p);
  pr.tolerance = tol;
  for (double x : xs) pr.values.push_back((gauss(p.a() + 1, p.b(), p.c(), -x) / hyp2f1(p, -x)).real());
  detail::finish_probe(pr);
  double power = pr.rate == Rate::inv_x ? -1.0 : p.a() - p.b();
  detail::annotate_rate(pr, power);
  return pr;
}

/// Largest |phi(x) (1+x) - 1| over xs; zero up to rounding when b = c.
inline double phi_identity_residual(const ParamTriple& p, const std::vector<double>& xs) {
  double worst = 0.0;
  for (double x : xs) {
    double v = (gauss(p.a() + 1, p.b(), p.c(), -x) / hyp2f1(p, -x)).real();
    worst = std::max(worst, std::fabs(v * (1.0 + x) - 1.0));
  }
  return worst;
}

/// Rate of psi(x) = 2F1(a+1,b+1;c+1;-x)/2F1(a+1,b;c;-x) by the size of b - a (b < c).
inline Rate psi_rate(const ParamTriple& p) {
  ExactTriple e = p.exact();
  Rational d = e.b - e.a;
  if (d > 1) return Rate::none;  // psi tends to a positive constant
  if (d == 1) return Rate::inv_log_x;
  if (sgn(d) > 0) return Rate::x_pow_b_minus_a_minus_1;
  return Rate::inv_x_log_x;
}

/// psi and x psi on xs. psi -> 0 needs b < c and b <= a+1; x psi -> +inf needs b < c.
inline std::pair<LimitProbe, LimitProbe> psi_probe(const ParamTriple& p, std::vector<double> xs = default_probe_grid(),
                                                   double tol = 1e-1) {
  detail::require_ordered(p);
  if (!(p.b() < p.c())) throw HypothesisError("psi limits need b < c");
  LimitProbe psi, xpsi;
  psi.label = "psi";
  xpsi.label = "x*psi";
  psi.xs = xpsi.xs = xs;
  psi.rate = psi_rate(p);
  psi.tolerance = tol;
  xpsi.limit_infinite = true;
  double a = p.a(), b = p.b(), c = p.c();
  for (double x : xs) {
    double v = (gauss(a + 1, b + 1, c + 1, -x) / gauss(a + 1, b, c, -x)).real();
    psi.values.push_back(v);
    xpsi.values.push_back(x * v);
  }
  ExactTriple e = p.exact();
  if (e.b - e.a > 1) {
    psi.claimed_limit = std::numeric_limits<double>::quiet_NaN();  // nonzero constant, not claimed
    psi.converged = false;
  } else {
    detail::finish_probe(psi);
    detail::annotate_rate(psi, b - a - 1.0);
  }
  detail::finish_probe(xpsi);
  return {psi, xpsi};
}

/// x w(-x) with w = H/F; limit c/b.
inline LimitProbe xw_probe(const ParamTriple& p, std::vector<double> xs = default_probe_grid(), double tol = 2e-2) {
  detail::require_ordered(p);
  if (!(p.b() < p.c())) throw HypothesisError("x w(-x) -> c/b needs b < c");
  LimitProbe pr;
  pr.label = "x*w(-x)";
  pr.xs = xs;
  pr.claimed_limit = p.c() / p.b();
  pr.tolerance = tol * pr.claimed_limit;
  for (double x : xs) {
    pr.values.push_back((x * gauss(p.a() + 1, p.b() + 1, p.c() + 1, -x) / hyp2f1(p, -x)).real());
  }
  detail::finish_probe(pr);
  return pr;
}

/// z f''(z)/f'(z) at z = -x; limit -a.
inline LimitProbe preschwarz_limit_probe(const ParamTriple& p, std::vector<double> xs = default_probe_grid(),
                                         std::optional<double> tol = std::nullopt) {
  detail::require_ordered(p);
  LimitProbe pr;
  pr.label = "xf''/f'";
  pr.xs = xs;
  pr.claimed_limit = -p.a();
  pr.tolerance = tol.value_or(1e-2 * (1.0 + p.a()));
  for (double x : xs) pr.values.push_back(preschwarzian(p, -x).real());
  detail::finish_probe(pr);
  return pr;
}

/// Limit c/max{b, c-a-1} of H/G at 1-; the branch is the sign of c-a-b-1.
inline double hg_ratio_limit(const ParamTriple& p) { return p.c() / std::max(p.b(), p.c() - p.a() - 1.0); }

inline int hg_branch(const ParamTriple& p) {
  ExactTriple e = p.exact();
  return sgn(e.c - e.a - e.b - 1);
}

/// H/G at x = 1 - 10^-k for k = 1..k_max. The probe variable is 1/(1-x).
inline LimitProbe hg_ratio_limit_probe(const ParamTriple& p, int k_max = 8, double rel_tol = 2e-2) {
  detail::require_ordered(p);
  LimitProbe pr;
  pr.label = "H/G";
  pr.claimed_limit = hg_ratio_limit(p);
  pr.tolerance = rel_tol * pr.claimed_limit;
  pr.rate = hg_branch(p) == 0 ? Rate::inv_log_x : Rate::none;
  double a = p.a(), b = p.b(), c = p.c();
  for (int k = 1; k <= k_max; ++k) {
    double h = std::pow(10.0, -k);
    double x = 1.0 - h;
    pr.xs.push_back(1.0 / h);
    pr.values.push_back((gauss(a + 1, b + 1, c + 1, x) / gauss(a + 1, b, c, x)).real());
  }
  detail::finish_probe(pr);
  detail::annotate_rate(pr, 0.0);
  return pr;
}

/// H/G at a single point x < 1.
inline double hg_ratio_at(const ParamTriple& p, double x) {
  return (gauss(p.a() + 1, p.b() + 1, p.c() + 1, x) / gauss(p.a() + 1, p.b(), p.c(), x)).real();
}

/// 10x10 grid on [-1.5, 2.5] x ({-2..-0.1} u {0.1..2}), off both real rays.
inline std::vector<Complex> default_connection_grid() {
  std::vector<Complex> zs;
  for (int i = 0; i < 10; ++i) {
    double x = -1.5 + 4.0 * i / 9.0;
    for (int j = 0; j < 5; ++j) {
      double y = 0.1 + 1.9 * j / 4.0;
      zs.emplace_back(x, y);
      zs.emplace_back(x, -y);
    }
  }
  return zs;
}

struct ConnectionCheck {
  double max_residual = 0.0;
  Complex worst_z;
  int n_points = 0;
};

/// Compares 2F1 continued along the Taylor path against
///   B 2F1(a,b;delta+1;1-z) + A (1-z)^(-delta) 2F1(c-a,c-b;1-delta;1-z).
inline ConnectionCheck connection_identity_check(const ParamTriple& p,
                                                 const std::vector<Complex>& grid = default_connection_grid()) {
  double a = p.a(), b = p.b(), c = p.c(), d = p.delta();
  detail::ConnectionCoeffs k = detail::connection_coeffs(a, b, c);
  ConnectionCheck out;
  for (Complex z : grid) {
    if (z.imag() == 0.0 && (z.real() <= 0.0 || z.real() >= 1.0)) {
      throw DomainError("connection identity grid must avoid (-inf,0] and [1,+inf)");
    }
    Complex lhs = hyp2f1(p, z, Strategy::taylor);
    Complex u = 1.0 - z;
    Complex rhs = k.B * gauss(a, b, d + 1.0, u) + k.A * std::pow(u, -d) * gauss(c - a, c - b, 1.0 - d, u);
    double res = std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
    if (res >= out.max_residual) {
      out.max_residual = res;
      out.worst_z = z;
    }
    ++out.n_points;
  }
  return out;
}

}  // namespace hypgeom
