#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hypgeom/asymptotics.hpp"
#include "hypgeom/class_t.hpp"
#include "hypgeom/figure.hpp"
#include "hypgeom/geometry.hpp"
#include "hypgeom/hyp2f1.hpp"
#include "hypgeom/json_io.hpp"
#include "hypgeom/series.hpp"

namespace hypgeom {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

struct Check {
  std::string name;
  double value = 0.0;
  double limit = 0.0;
  bool pass = false;
  bool counted = true;  // supplementary checks are reported but do not decide the criterion
  std::string note;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  double budget_seconds = 0.0;
  std::vector<Check> checks;
  bool pass = false;
  double seconds = 0.0;
  std::string error;
};

struct SuiteOptions {
  std::uint64_t seed = 20240611;
  bool quick = false;  // reduced sample counts, used for the determinism re-run
};

struct SuiteReport {
  SuiteOptions options;
  std::vector<CriterionResult> criteria;
  bool pass = false;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Check, name, value, limit, pass, counted, note)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SuiteOptions, seed, quick)

inline json criterion_json(const CriterionResult& c, bool timing) {
  json j{{"id", c.id}, {"title", c.title}, {"checks", c.checks}, {"pass", c.pass}, {"error", c.error}};
  if (timing) {
    j["seconds"] = c.seconds;
    j["budget_seconds"] = c.budget_seconds;
  }
  return j;
}

inline json suite_json(const SuiteReport& r, bool timing) {
  json crit = json::array();
  for (const auto& c : r.criteria) crit.push_back(criterion_json(c, timing));
  return json{{"tool", "hypgeom"},
              {"version", kToolVersion},
              {"schema", kSchemaVersion},
              {"command", "suite"},
              {"config", r.options},
              {"criteria", crit},
              {"pass", r.pass}};
}

namespace detail {

class TripleSource {
 public:
  explicit TripleSource(std::uint64_t seed) : rng_(seed) {}

  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  // uniform in [lo, hi], rounded to three decimals so the exact triple is a short decimal
  double draw(double lo, double hi) {
    double v = lo + (hi - lo) * unit();
    return std::round(v * 1000.0) / 1000.0;
  }

 private:
  std::mt19937_64 rng_;
};

inline Check check_le(std::string name, double value, double limit, std::string note = {}) {
  return {std::move(name), value, limit, value <= limit, true, std::move(note)};
}
inline Check check_true(std::string name, bool ok, std::string note = {}) {
  return {std::move(name), ok ? 1.0 : 0.0, 1.0, ok, true, std::move(note)};
}
inline Check supplementary(Check c) {
  c.counted = false;
  return c;
}

inline double rel_diff(double x, double ref) { return std::fabs(x - ref) / std::fabs(ref); }

inline bool near_nonpositive_integer(double x) { return x <= 1e-9 && std::fabs(x - std::round(x)) < 1e-9; }

inline std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / (n - 1));
  return v;
}

// 1: G - F = (b/c) z H
inline std::vector<Check> criterion_contiguous(TripleSource& src, bool quick) {
  int n_triples = quick ? 5 : 50, n_grid = quick ? 6 : 20;
  auto axis = linspace(-4.0, 4.0, n_grid);
  double worst = 0.0;
  std::string worst_note;
  for (int t = 0; t < n_triples; ++t) {
    double v[3] = {src.draw(0.05, 5.0), src.draw(0.05, 5.0), src.draw(0.05, 5.0)};
    std::sort(v, v + 3);
    double a = v[0], b = v[1], c = v[2];
    for (double x : axis) {
      for (double y : axis) {
        Complex z(x, y);
        Complex F = gauss(a, b, c, z), G = gauss(a + 1, b, c, z), H = gauss(a + 1, b + 1, c + 1, z);
        Complex zH = (b / c) * z * H;
        double scale = std::max({std::abs(F), std::abs(G), std::abs(zH)});
        double r = std::abs(G - F - zH) / scale;
        if (r > worst) {
          worst = r;
          worst_note = ParamTriple(a, b, c).to_string();
        }
      }
    }
  }
  return {check_le("max relative residual over " + std::to_string(n_triples) + " triples", worst, 1e-10, worst_note)};
}

// 2: connection formula on a 10x10 grid
inline std::vector<Check> criterion_connection(TripleSource& src, bool quick) {
  int n_triples = quick ? 4 : 20;
  double worst = 0.0;
  std::string worst_note;
  for (int t = 0; t < n_triples;) {
    double c = src.draw(0.2, 4.0), d = src.draw(0.05, 0.95);
    double a = src.draw(0.05, c + d - 0.05);
    double b = std::round((c + d - a) * 1000.0) / 1000.0;
    if (b <= 0.0 || near_nonpositive_integer(c - a) || near_nonpositive_integer(c - b)) continue;
    ++t;
    ParamTriple p(a, b, c);
    auto r = connection_identity_check(p);
    if (r.max_residual > worst) {
      worst = r.max_residual;
      worst_note = p.to_string();
    }
  }
  return {check_le("max residual over " + std::to_string(n_triples) + " triples", worst, 1e-8, worst_note)};
}

// 3: sign of the remainder coefficients and the partial-sum rate
inline std::vector<Check> criterion_sigma() {
  std::vector<Check> out;
  struct Case {
    ParamTriple p;
    int sign;
  };
  for (const Case& cs : {Case{{0.5, 1.2, 1.0}, +1}, Case{{0.5, 0.9, 1.0}, -1}}) {
    auto r = sigma_series(cs.p, 200);
    std::string tag = cs.p.to_string();
    out.push_back(check_true(tag + " sigma_n sign " + (cs.sign > 0 ? "> 0" : "< 0") + " for n <= 200",
                             r.signs_match && r.expected_sign == cs.sign));
    out.push_back(check_true(tag + " Q_n strictly monotone (exact)", r.q_monotone));
    // partial errors are recorded at N = 10, 100, 1000, 10000
    double e3 = r.partial_errors.at(2), e4 = r.partial_errors.at(3);
    double slope = std::log10(e4 / e3);
    double target = cs.p.delta() - 1.0;
    out.push_back(check_le(tag + " log-log slope of |S_N - B| vs delta-1, relative gap", rel_diff(slope, target), 0.2,
                           "slope " + format_g17(slope)));
    double c3 = e3 * std::pow(1e3, 1.0 - cs.p.delta()), c4 = e4 * std::pow(1e4, 1.0 - cs.p.delta());
    out.push_back(supplementary(check_le(tag + " fitted C drift between N=1e3 and 1e4", rel_diff(c4, c3), 0.2,
                                         "C = " + format_g17(c3) + ", " + format_g17(c4))));
  }
  return out;
}

// 4: f in S_eps(delta), g in S*_eps(delta)
inline std::vector<Check> criterion_theorem1(std::uint64_t seed, bool quick) {
  ParamTriple p(0.5, 0.9, 1.0);
  int n = quick ? 500 : 10000;
  auto r = check_theorem1(p, n, seed, n / 8);
  return {check_le("f violations", static_cast<double>(r.violations_f.size()), 0.0),
          check_le("g violations", static_cast<double>(r.violations_g.size()), 0.0),
          check_le("max distance of f(z) beyond S_eps", r.max_distance_f - r.eps, 1e-8),
          check_true("remainder bounded by eps", r.remainder_ok)};
}

// 5: closed-form kappa vs numeric
inline std::vector<Check> criterion_kappa(bool quick) {
  std::vector<Check> out;
  KappaOptions opt;
  if (quick) opt.n_theta = 512;
  struct Case {
    ParamTriple p;
    double tol;
  };
  for (const Case& cs : {Case{{0.9, 1.2, 2.0}, 1e-3}, Case{{0.5, 1.2, 1.69}, 1e-2}}) {
    opt.tolerance = cs.tol;
    auto r = kappa_numeric(cs.p, opt);
    double closed = r.kappa_closed.value_or(std::nan(""));
    out.push_back(check_le(cs.p.to_string() + " |kappa_closed - kappa_numeric|", std::fabs(closed - r.kappa_numeric),
                           cs.tol, "closed " + format_g17(closed) + ", numeric " + format_g17(r.kappa_numeric)));
  }
  return out;
}

// 6: sector with apex B and the asymptotic line
inline std::vector<Check> criterion_sector(std::uint64_t seed, bool quick) {
  ParamTriple p(0.9, 1.2, 2.0);
  int n = quick ? 500 : 10000;
  auto r = check_sector_theorem(p, n, seed);
  return {check_true("B < 0", r.apex_negative, "B = " + format_g17(r.B)),
          check_le("samples outside |arg(z - B)| < pi delta / 2", static_cast<double>(r.violations.size()), 0.0),
          check_le("line residual at theta=1e-6 over residual at 1e-3", r.residual_small / r.residual_ref, 1.0),
          check_true("residual decreases monotonically as theta -> 0", r.monotone_below >= 1e-3,
                     "monotone below theta = " + format_g17(r.monotone_below))};
}

inline std::vector<Check> cert_checks(const ParamTriple& p, const std::string& label) {
  auto r = certify_universal_convexity(p);
  std::string tag = p.to_string();
  return {check_true(tag + " verdict " + label, r.verdict_label() == label, r.verdict_label()),
          check_true(tag + " numerically consistent", r.numeric_consistent),
          check_le(tag + " delta-table witnesses, k+n <= 40 (exact)", static_cast<double>(r.delta.witnesses.size()),
                   0.0)};
}

// 7: certification verdicts
inline std::vector<Check> criterion_certify() {
  auto out = cert_checks({0.5, 0.8, 1.9}, "PaperCertified(I)");
  auto more = cert_checks({0.5, 0.9, 2.5}, "PaperCertified(II)");
  out.insert(out.end(), more.begin(), more.end());
  auto f = certify_universal_convexity({1.5, 1.5, 1.5});
  bool w = f.witness && f.witness->k == 1 && f.witness->n == 0;
  out.push_back(check_true("(1.5, 1.5, 1.5) verdict Falsified", f.verdict == Verdict::falsified, f.verdict_label()));
  out.push_back(check_true("(1.5, 1.5, 1.5) witness (k, n) = (1, 0)", w,
                           f.witness ? "value " + f.witness->exact : "no witness"));
  return out;
}

// 8: b = 1 range
inline std::vector<Check> criterion_b_one() {
  ParamTriple p(0.7, 1.0, 2.3);
  auto r = certify_universal_convexity(p);
  return {check_le("delta-table witnesses, k+n <= 40", static_cast<double>(r.delta.witnesses.size()), 0.0),
          check_true("Liu-Pego consistent", r.liu_pego && r.liu_pego->consistent,
                     r.liu_pego ? r.liu_pego->violated : r.liu_pego_error)};
}

// 9: G/F, H/F, H/G in class T
inline std::vector<Check> criterion_ratios(TripleSource& src, bool quick) {
  int n_triples = quick ? 3 : 25;
  GridSpec grid;
  if (quick) grid.n_radius = grid.n_angle = 16, grid.n_real = 50;
  int delta_fail = 0, exact_fallbacks = 0, lp_fail = 0;
  std::string first_fail;
  for (int t = 0; t < n_triples; ++t) {
    double c = src.draw(0.1, 4.0);
    double a = src.draw(-1.0, c), b = src.draw(0.0, c);
    ParamTriple p(a, b, c);
    if (!kustner_admissible(p)) {
      --t;
      continue;
    }
    auto params = kustner_ratio_params(p);
    auto handles = kustner_ratios(p);
    for (std::size_t i = 0; i < params.size(); ++i) {
      const auto& q = params[i];
      auto s = ratio_series<double>(q[0], q[1], q[2], q[3], q[4], q[5], 30);
      auto tab = delta_table(s, 30, 30, 1e-10);
      bool bad = !tab.witnesses.empty();
      if (!tab.clean()) {
        ++exact_fallbacks;
        auto se = ratio_series<Rational>(q[0], q[1], q[2], q[3], q[4], q[5], 30);
        bad = !delta_table(se, 30, 30, 0.0).witnesses.empty();
      }
      if (bad) {
        ++delta_fail;
        if (first_fail.empty()) first_fail = handles[i].label + " at " + p.to_string();
      }
      auto lp = check_liu_pego(handles[i], grid);
      if (!lp.consistent) {
        ++lp_fail;
        if (first_fail.empty()) first_fail = handles[i].label + " (" + lp.violated + ") at " + p.to_string();
      }
    }
  }
  return {check_le("ratios with a delta-table witness, k+n <= 30", delta_fail, 0.0, first_fail),
          check_le("ratios failing Liu-Pego", lp_fail, 0.0, first_fail),
          supplementary(check_le("float tables re-run in exact mode", exact_fallbacks, 3.0 * n_triples))};
}

// 10: limit lemmas
inline std::vector<Check> criterion_limits(TripleSource& src, bool quick) {
  std::vector<Check> out;
  int n_triples = quick ? 3 : 10;
  double worst = 0.0, worst_tol = 0.0;
  std::string worst_note;
  for (int t = 0; t < n_triples; ++t) {
    double a = src.draw(0.1, 0.9);
    double b = src.draw(a + 0.6, 3.0);
    double c = src.draw(b, 4.0);
    ParamTriple p(a, b, c);
    auto pr = preschwarz_limit_probe(p);
    double gap = std::fabs(pr.values.back() + a) / (1e-2 * (1.0 + a));
    if (gap >= worst) {
      worst = gap;
      worst_tol = 1e-2 * (1.0 + a);
      worst_note = p.to_string() + ": value " + format_g17(pr.values.back());
    }
  }
  out.push_back(check_le("x f''/f' at x=-1e6 vs -a, gap over tolerance (worst of " + std::to_string(n_triples) + ")",
                         worst, 1.0, worst_note + ", tolerance " + format_g17(worst_tol)));
  for (ParamTriple p : {ParamTriple(0.5, 0.9, 3.0), ParamTriple(0.5, 0.9, 1.2), ParamTriple(0.5, 0.9, 2.4)}) {
    double lim = hg_ratio_limit(p);
    double v = hg_ratio_at(p, 1.0 - 1e-6);
    out.push_back(check_le(p.to_string() + " H/G at 1-1e-6 vs c/max{b, c-a-1}, relative gap", rel_diff(v, lim), 2e-2,
                           "value " + format_g17(v) + ", limit " + format_g17(lim)));
    if (hg_branch(p) == 0) {
      // 1/log rate: the error should halve between 1-1e-3 and 1-1e-6
      double e3 = std::fabs(hg_ratio_at(p, 1.0 - 1e-3) - lim), e6 = std::fabs(v - lim);
      out.push_back(supplementary(check_le(p.to_string() + " log-rate error halving, |ratio/0.5 - 1|",
                                           std::fabs(e6 / e3 / 0.5 - 1.0), 0.25, "ratio " + format_g17(e6 / e3))));
    }
  }
  ParamTriple q(0.5, 0.9, 1.2);
  auto xw = xw_probe(q);
  out.push_back(check_le("x w(-x) at x=1e6 vs c/b, relative gap", rel_diff(xw.values.back(), q.c() / q.b()), 2e-2,
                         "value " + format_g17(xw.values.back())));
  return out;
}

// 11: the M-functions
inline std::vector<Check> criterion_m_functions(bool quick) {
  std::vector<Check> out;
  ParamTriple p31(0.5, 0.8, 1.9), p32(0.5, 0.9, 2.5);
  GridSpec grid;
  if (quick) grid.n_radius = grid.n_angle = 16, grid.n_real = 50;
  Complex m0a = m_function_p31(p31, 0.0), m0b = m_function_p32(p32, 0.0);
  out.push_back(check_true("M(0) = 1 exactly, both constructions", m0a == Complex(1.0) && m0b == Complex(1.0)));
  double target = (1.0 - p31.a() - p31.b() + 2.0 * p31.tau()) / (1.0 - p31.b());
  double v = m_function_p31(p31, -1e6).real();
  out.push_back(check_le("M(-1e6) vs (1-a-b+2tau)/(1-b), relative gap", rel_diff(v, target), 2e-2,
                         "value " + format_g17(v) + ", limit " + format_g17(target)));
  auto r31 = check_liu_pego(handle_m_p31(p31), grid);
  auto r32 = check_liu_pego(handle_m_p32(p32), grid);
  out.push_back(check_le("min Im M on the upper grid, negated (first construction)", -r31.min_im, 1e-9));
  out.push_back(check_le("min Im M on the upper grid, negated (second construction)", -r32.min_im, 1e-9));
  double m2 = m_pair_p32(p32, 1.0 - 1e-6).m2.real();
  double m2_lim = std::max(1.0 + p32.a() + p32.b() - p32.c(), 0.0);
  out.push_back(check_le("M2(1-1e-6) vs max{1+a+b-c, 0}", std::fabs(m2 - m2_lim), 1e-2, "value " + format_g17(m2)));
  return out;
}

inline void finish(CriterionResult& c) {
  c.pass = c.error.empty() && !c.checks.empty();
  for (const auto& k : c.checks) {
    if (k.counted && !k.pass) c.pass = false;
  }
}

}  // namespace detail

struct CriterionSpec {
  int id;
  const char* title;
  double budget_seconds;
};

inline const std::vector<CriterionSpec>& criterion_specs() {
  static const std::vector<CriterionSpec> specs = {
      {1, "contiguous relation", 10},          {2, "connection formula", 10},
      {3, "remainder coefficients", 5},        {4, "sector containment of f and g", 30},
      {5, "order of convexity", 30},           {6, "sector with apex B", 30},
      {7, "universal convexity verdicts", 60}, {8, "b = 1 range", 20},
      {9, "hypergeometric ratios in T", 60},   {10, "limit lemmas", 30},
      {11, "M-functions", 30},                 {12, "determinism", 5},
  };
  return specs;
}

/// Runs one criterion. Random triples for criterion k come from seed + k so
/// each line is reproducible on its own.
inline CriterionResult run_criterion(int id, const SuiteOptions& opt);

inline SuiteReport run_suite(const SuiteOptions& opt, const std::function<void(const CriterionResult&)>& on_done = {},
                             int last = 11) {
  SuiteReport rep;
  rep.options = opt;
  rep.pass = true;
  for (const auto& s : criterion_specs()) {
    if (s.id > last) break;
    CriterionResult c = run_criterion(s.id, opt);
    rep.pass = rep.pass && c.pass;
    if (on_done) on_done(c);
    rep.criteria.push_back(std::move(c));
  }
  return rep;
}

inline CriterionResult run_criterion(int id, const SuiteOptions& opt) {
  CriterionResult c;
  const auto& spec = criterion_specs().at(static_cast<std::size_t>(id - 1));
  c.id = id;
  c.title = spec.title;
  c.budget_seconds = spec.budget_seconds;
  detail::TripleSource src(opt.seed + static_cast<std::uint64_t>(id));
  auto t0 = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: c.checks = detail::criterion_contiguous(src, opt.quick); break;
      case 2: c.checks = detail::criterion_connection(src, opt.quick); break;
      case 3: c.checks = detail::criterion_sigma(); break;
      case 4: c.checks = detail::criterion_theorem1(opt.seed, opt.quick); break;
      case 5: c.checks = detail::criterion_kappa(opt.quick); break;
      case 6: c.checks = detail::criterion_sector(opt.seed, opt.quick); break;
      case 7: c.checks = detail::criterion_certify(); break;
      case 8: c.checks = detail::criterion_b_one(); break;
      case 9: c.checks = detail::criterion_ratios(src, opt.quick); break;
      case 10: c.checks = detail::criterion_limits(src, opt.quick); break;
      case 11: c.checks = detail::criterion_m_functions(opt.quick); break;
      case 12: {
        // the reduced suite twice, compared byte for byte
        SuiteOptions q = opt;
        q.quick = true;
        std::string first = suite_json(run_suite(q), false).dump(2);
        std::string second = suite_json(run_suite(q), false).dump(2);
        c.checks = {detail::check_true("two runs with seed " + std::to_string(opt.seed) + " give identical JSON",
                                       first == second, std::to_string(first.size()) + " bytes")};
        break;
      }
      default: throw DomainError("no criterion " + std::to_string(id));
    }
  } catch (const Error& e) {
    c.error = e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  detail::finish(c);
  return c;
}

}  // namespace hypgeom
