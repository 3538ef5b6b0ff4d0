#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

#include "hypgeom/errors.hpp"
#include "hypgeom/gamma.hpp"
#include "hypgeom/rational.hpp"

namespace hypgeom {

/// Exact rational view of a parameter triple.
struct ExactTriple {
  Rational a, b, c;

  Rational delta() const { return a + b - c; }
  Rational alpha() const { return a * b / c; }
  Rational beta() const { return (a + 1) * (b + 1) / (2 * (c + 1)); }
};

/// Real parameters (a, b, c) of 2F1(a,b;c;z), stored with a <= b.
///
/// The derived constants are fixed at construction:
///   delta = a+b-c,  alpha = tau = ab/c,  beta = (a+1)(b+1)/(2(c+1)),
///   sigma = (a-1)b/c,  sigma' = (c-a-1)b/c.
class ParamTriple {
 public:
  ParamTriple(double a, double b, double c) : a_(a), b_(b), c_(c) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
      throw DomainError("hypergeometric parameters must be finite");
    }
    if (detail::is_nonpositive_integer(c)) {
      throw DomainError("c must not be a non-positive integer");
    }
    if (a_ > b_) std::swap(a_, b_);
    derive();
  }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }

  double delta() const noexcept { return delta_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double tau() const noexcept { return tau_; }
  double sigma() const noexcept { return sigma_; }
  double sigma_prime() const noexcept { return sigma_prime_; }

  /// Parameters of 2F1(a+da, b+db; c+dc; z), reordered if needed.
  ParamTriple shifted(double da, double db, double dc) const { return {a_ + da, b_ + db, c_ + dc}; }

  /// Each parameter as the rational given by its shortest decimal form.
  ExactTriple exact() const {
    return {rational_from_double(a_), rational_from_double(b_), rational_from_double(c_)};
  }

  std::string to_string() const {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "(%.17g, %.17g, %.17g)", a_, b_, c_);
    return buf;
  }

  friend bool operator==(const ParamTriple& l, const ParamTriple& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_;
  }

 private:
  void derive() {
    delta_ = a_ + b_ - c_;
    alpha_ = a_ * b_ / c_;
    beta_ = (a_ + 1.0) * (b_ + 1.0) / (2.0 * (c_ + 1.0));
    tau_ = a_ * b_ / c_;
    sigma_ = (a_ - 1.0) * b_ / c_;
    sigma_prime_ = (c_ - a_ - 1.0) * b_ / c_;
  }

  double a_, b_, c_;
  double delta_ = 0, alpha_ = 0, beta_ = 0, tau_ = 0, sigma_ = 0, sigma_prime_ = 0;
};

/// Distance from x to the nearest integer.
inline double distance_to_integer(double x) { return std::fabs(x - std::nearbyint(x)); }

}  // namespace hypgeom
