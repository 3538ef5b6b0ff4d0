#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "hypgeom/errors.hpp"
#include "hypgeom/params.hpp"
#include "hypgeom/rational.hpp"

namespace hypgeom {

enum class SeriesMode { exact, floating };

inline const char* to_string(SeriesMode m) { return m == SeriesMode::exact ? "exact" : "float"; }

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

template <class T>
T scalar_from_double(double x) {
  if constexpr (is_exact_v<T>) {
    return rational_from_double(x);
  } else {
    return x;
  }
}

template <class T>
double scalar_to_double(const T& x) {
  if constexpr (is_exact_v<T>) {
    return x.get_d();
  } else {
    return x;
  }
}

template <class T>
bool scalar_is_zero(const T& x) {
  if constexpr (is_exact_v<T>) {
    return sgn(x) == 0;
  } else {
    return x == 0.0;
  }
}

namespace detail {
inline constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

// Rounding budget for an entry that took `ops` floating operations.
inline double gamma_n(int ops) { return ops * kUnitRoundoff / (1.0 - ops * kUnitRoundoff); }
}  // namespace detail

/// Truncated power series c_0 + c_1 z + ... + c_depth z^depth.
///
/// With T = double each entry also carries a majorant m_n (the same
/// recurrence run on absolute values) and a rounding error bound; m_n/|c_n|
/// is the condition estimate. With T = Rational both are zero.
template <class T>
struct CoeffSeries {
  std::vector<T> entries;
  std::vector<double> majorant;
  std::vector<double> error;

  static constexpr SeriesMode mode = is_exact_v<T> ? SeriesMode::exact : SeriesMode::floating;

  int depth() const { return static_cast<int>(entries.size()) - 1; }
  const T& operator[](std::size_t n) const { return entries[n]; }

  double condition(std::size_t n) const {
    if constexpr (is_exact_v<T>) {
      return 1.0;
    } else {
      double v = std::fabs(entries[n]);
      return v == 0.0 ? std::numeric_limits<double>::infinity() : majorant[n] / v;
    }
  }

  std::vector<double> to_doubles() const {
    std::vector<double> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(scalar_to_double(e));
    return out;
  }

  void resize(std::size_t n) {
    entries.resize(n);
    majorant.assign(n, 0.0);
    error.assign(n, 0.0);
  }
};

/// Taylor coefficients (a)_n (b)_n / ((c)_n n!) of 2F1(a,b;c;z) for raw
/// parameters, through the ratio recurrence.
template <class T>
CoeffSeries<T> taylor_coeffs(const T& a, const T& b, const T& c, int depth) {
  if (depth < 0) throw DomainError("series depth must be non-negative");
  CoeffSeries<T> s;
  s.resize(static_cast<std::size_t>(depth) + 1);
  s.entries[0] = T(1);
  s.majorant[0] = 1.0;
  for (int n = 0; n < depth; ++n) {
    T cn = c + T(n);
    if (scalar_is_zero(cn)) throw PoleError("c + n = 0 inside the requested depth");
    T next = s.entries[n] * (a + T(n)) * (b + T(n)) / (cn * T(n + 1));
    s.entries[n + 1] = next;
    if constexpr (!is_exact_v<T>) {
      s.majorant[n + 1] = std::fabs(next);
      s.error[n + 1] = detail::gamma_n(6 * (n + 1)) * std::fabs(next);
    }
  }
  return s;
}

/// Taylor coefficients of 2F1(a,b;c;z) for a parameter triple.
template <class T>
CoeffSeries<T> taylor_2f1(const ParamTriple& p, int depth) {
  return taylor_coeffs(scalar_from_double<T>(p.a()), scalar_from_double<T>(p.b()),
                       scalar_from_double<T>(p.c()), depth);
}

/// Product truncated at the smaller depth.
template <class T>
CoeffSeries<T> series_multiply(const CoeffSeries<T>& x, const CoeffSeries<T>& y) {
  int d = std::min(x.depth(), y.depth());
  CoeffSeries<T> out;
  out.resize(static_cast<std::size_t>(d) + 1);
  for (int n = 0; n <= d; ++n) {
    T acc(0);
    double m = 0.0, e = 0.0;
    for (int j = 0; j <= n; ++j) {
      acc += x.entries[j] * y.entries[n - j];
      if constexpr (!is_exact_v<T>) {
        m += x.majorant[j] * y.majorant[n - j];
        e += x.error[j] * y.majorant[n - j] + x.majorant[j] * y.error[n - j];
      }
    }
    out.entries[n] = acc;
    if constexpr (!is_exact_v<T>) {
      out.majorant[n] = m;
      out.error[n] = e + detail::gamma_n(2 * (n + 1)) * m;
    }
  }
  return out;
}

/// Quotient num/den truncated at the smaller depth.
template <class T>
CoeffSeries<T> series_divide(const CoeffSeries<T>& num, const CoeffSeries<T>& den) {
  if (den.entries.empty() || scalar_is_zero(den.entries[0])) {
    throw DivisionBreakdown("leading coefficient of the divisor is zero");
  }
  int d = std::min(num.depth(), den.depth());
  CoeffSeries<T> q;
  q.resize(static_cast<std::size_t>(d) + 1);
  const T& d0 = den.entries[0];
  double ad0 = std::fabs(scalar_to_double(d0));
  for (int n = 0; n <= d; ++n) {
    T acc = num.entries[n];
    double m = 0.0, e = 0.0;
    if constexpr (!is_exact_v<T>) {
      m = num.majorant[n];
      e = num.error[n];
    }
    for (int j = 1; j <= n; ++j) {
      acc -= den.entries[j] * q.entries[n - j];
      if constexpr (!is_exact_v<T>) {
        m += den.majorant[j] * q.majorant[n - j];
        e += den.error[j] * q.majorant[n - j] + den.majorant[j] * q.error[n - j];
      }
    }
    q.entries[n] = acc / d0;
    if constexpr (!is_exact_v<T>) {
      q.majorant[n] = m / ad0;
      q.error[n] = (e + den.error[0] * std::fabs(q.entries[n])) / ad0 +
                   detail::gamma_n(2 * (n + 2)) * q.majorant[n];
    }
  }
  return q;
}

/// Coefficients of 1 + z f''/(2 f') (half) or 1 + z f''/f' for f(z) = z 2F1(a,b;c;z).
///
/// With f = sum t_n z^(n+1): f' = sum (n+1) t_n z^n and z f'' = sum n (n+1) t_n z^n.
template <class T>
CoeffSeries<T> preschwarzian_series(const ParamTriple& p, int depth, bool half) {
  if (depth < 1) throw DomainError("pre-Schwarzian series needs depth >= 1");
  CoeffSeries<T> t = taylor_2f1<T>(p, depth);
  CoeffSeries<T> fp = t, zfpp = t;
  for (int n = 0; n <= depth; ++n) {
    T k1(n + 1), k2(n * (n + 1));
    fp.entries[n] = t.entries[n] * k1;
    zfpp.entries[n] = t.entries[n] * k2;
    if (half) zfpp.entries[n] /= T(2);
    if constexpr (!is_exact_v<T>) {
      double s1 = n + 1.0, s2 = n * (n + 1.0) * (half ? 0.5 : 1.0);
      fp.majorant[n] = t.majorant[n] * s1;
      fp.error[n] = t.error[n] * s1;
      zfpp.majorant[n] = t.majorant[n] * s2;
      zfpp.error[n] = t.error[n] * s2;
    }
  }
  CoeffSeries<T> out = series_divide(zfpp, fp);
  out.entries[0] += T(1);
  if constexpr (!is_exact_v<T>) out.majorant[0] += 1.0;
  return out;
}

/// Coefficients of 2F1(a1,b1;c1;z)/2F1(a2,b2;c2;z) for raw parameters.
template <class T>
CoeffSeries<T> ratio_series(double a1, double b1, double c1, double a2, double b2, double c2, int depth) {
  auto num = taylor_coeffs(scalar_from_double<T>(a1), scalar_from_double<T>(b1), scalar_from_double<T>(c1), depth);
  auto den = taylor_coeffs(scalar_from_double<T>(a2), scalar_from_double<T>(b2), scalar_from_double<T>(c2), depth);
  return series_divide(num, den);
}

struct DeltaWitness {
  int k = 0;
  int n = 0;
  double value = 0.0;
  std::string exact;  // exact value when computed in exact mode
};

/// Triangular table rows[k][n] = Delta^k c_n for k + n <= depth of the series.
template <class T>
struct DeltaTable {
  std::vector<std::vector<T>> rows;
  std::vector<std::vector<double>> error;  // float mode only
  int max_k = 0;
  int max_n = 0;
  int max_diag = 0;
  double tol = 0.0;
  SeriesMode mode = CoeffSeries<T>::mode;
  std::vector<DeltaWitness> witnesses;
  std::vector<DeltaWitness> indeterminate;

  bool clean() const { return witnesses.empty() && indeterminate.empty(); }
};

/// Default witness tolerance for a float table: max(1e-12, 1e-10 |c_0|).
inline double default_delta_tol(double c0) { return std::max(1e-12, 1e-10 * std::fabs(c0)); }

/// Forward differences Delta^{k+1} c_n = Delta^k c_n - Delta^k c_{n+1}.
///
/// Entries are scanned for k <= max_k and k + n <= max_diag (default: the
/// series depth). Exact mode reports a witness for every strictly negative
/// entry. Float mode reports a witness only below -(tol + error bound) and
/// files entries in [-(tol + bound), -tol) as indeterminate.
template <class T>
DeltaTable<T> delta_table(const CoeffSeries<T>& s, int max_k, std::optional<int> max_diag = std::nullopt,
                          std::optional<double> tol = std::nullopt) {
  DeltaTable<T> t;
  int depth = s.depth();
  if (max_k < 0) throw DomainError("max_k must be non-negative");
  if (max_k > depth) throw DomainError("max_k exceeds the series depth");
  t.max_k = max_k;
  t.max_n = depth;
  t.max_diag = std::min(max_diag.value_or(depth), depth);
  if constexpr (is_exact_v<T>) {
    t.tol = tol.value_or(0.0);
  } else {
    t.tol = tol.value_or(default_delta_tol(s.entries.at(0)));
  }
  t.rows.resize(static_cast<std::size_t>(max_k) + 1);
  t.rows[0] = s.entries;
  if constexpr (!is_exact_v<T>) {
    t.error.resize(static_cast<std::size_t>(max_k) + 1);
    t.error[0] = s.error;
  }
  for (int k = 1; k <= max_k; ++k) {
    const auto& prev = t.rows[k - 1];
    auto& row = t.rows[k];
    row.resize(prev.size() - 1);
    for (std::size_t n = 0; n + 1 < prev.size(); ++n) row[n] = prev[n] - prev[n + 1];
    if constexpr (!is_exact_v<T>) {
      const auto& pe = t.error[k - 1];
      auto& er = t.error[k];
      er.resize(row.size());
      for (std::size_t n = 0; n < row.size(); ++n) {
        er[n] = pe[n] + pe[n + 1] + detail::kUnitRoundoff * std::fabs(row[n]);
      }
    }
  }
  Rational exact_tol = rational_from_double(t.tol);
  for (int k = 0; k <= max_k; ++k) {
    for (int n = 0; k + n <= t.max_diag; ++n) {
      const T& v = t.rows[k][n];
      if constexpr (is_exact_v<T>) {
        if (v < -exact_tol) t.witnesses.push_back({k, n, v.get_d(), v.get_str()});
      } else {
        double bound = t.tol + t.error[k][n];
        if (v < -bound) {
          t.witnesses.push_back({k, n, v, {}});
        } else if (v < -t.tol) {
          t.indeterminate.push_back({k, n, v, {}});
        }
      }
    }
  }
  auto order = [](const DeltaWitness& l, const DeltaWitness& r) {
    if (l.k + l.n != r.k + r.n) return l.k + l.n < r.k + r.n;
    return l.k < r.k;
  };
  std::sort(t.witnesses.begin(), t.witnesses.end(), order);
  std::sort(t.indeterminate.begin(), t.indeterminate.end(), order);
  return t;
}

/// The three necessary conditions for universal convexity, evaluated exactly:
///   0 <= alpha <= 1,  3 beta <= 1 + 2 alpha,  alpha (2 + 2 alpha - 3 beta) <= 1.
struct NecessaryConditions {
  double alpha = 0.0;
  double beta = 0.0;
  std::string alpha_exact, beta_exact;
  bool alpha_range = false;
  bool beta_bound = false;
  bool cubic_bound = false;
  double beta_slack = 0.0;   // 1 + 2 alpha - 3 beta
  double cubic_slack = 0.0;  // 1 - alpha (2 + 2 alpha - 3 beta)

  bool all() const { return alpha_range && beta_bound && cubic_bound; }
};

inline NecessaryConditions necessary_conditions(const ParamTriple& p) {
  ExactTriple e = p.exact();
  Rational alpha = e.alpha(), beta = e.beta();
  Rational bs = 1 + 2 * alpha - 3 * beta;
  Rational cs = 1 - alpha * (2 + 2 * alpha - 3 * beta);
  NecessaryConditions nc;
  nc.alpha = alpha.get_d();
  nc.beta = beta.get_d();
  nc.alpha_exact = alpha.get_str();
  nc.beta_exact = beta.get_str();
  nc.alpha_range = alpha >= 0 && alpha <= 1;
  nc.beta_bound = sgn(bs) >= 0;
  nc.cubic_bound = sgn(cs) >= 0;
  nc.beta_slack = bs.get_d();
  nc.cubic_slack = cs.get_d();
  return nc;
}

}  // namespace hypgeom
