#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hypgeom/asymptotics.hpp"
#include "hypgeom/class_t.hpp"
#include "hypgeom/geometry.hpp"
#include "hypgeom/hyp2f1.hpp"
#include "hypgeom/params.hpp"
#include "hypgeom/series.hpp"

// Reports serialize to JSON and parse back into the same structs. Doubles
// are written in shortest round-trip form, complex numbers as [re, im].

namespace nlohmann {

template <class T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& v) {
    if (v) {
      j = *v;
    } else {
      j = nullptr;
    }
  }
  static void from_json(const json& j, std::optional<T>& v) {
    if (j.is_null()) {
      v = std::nullopt;
    } else {
      v = j.get<T>();
    }
  }
};

template <>
struct adl_serializer<std::complex<double>> {
  static void to_json(json& j, const std::complex<double>& z) { j = json::array({z.real(), z.imag()}); }
  static void from_json(const json& j, std::complex<double>& z) { z = {j.at(0).get<double>(), j.at(1).get<double>()}; }
};

template <>
struct adl_serializer<hypgeom::ParamTriple> {
  static void to_json(json& j, const hypgeom::ParamTriple& p) {
    j = json{{"a", p.a()},
             {"b", p.b()},
             {"c", p.c()},
             {"delta", p.delta()},
             {"alpha", p.alpha()},
             {"beta", p.beta()},
             {"tau", p.tau()},
             {"sigma", p.sigma()},
             {"sigma_prime", p.sigma_prime()}};
  }
  static hypgeom::ParamTriple from_json(const json& j) {
    return {j.at("a").get<double>(), j.at("b").get<double>(), j.at("c").get<double>()};
  }
};

}  // namespace nlohmann

namespace hypgeom {

using json = nlohmann::json;

NLOHMANN_JSON_SERIALIZE_ENUM(Strategy, {{Strategy::series, "series"},
                                        {Strategy::pfaff, "pfaff"},
                                        {Strategy::connection, "connection"},
                                        {Strategy::pfaff_connection, "pfaff-connection"},
                                        {Strategy::taylor, "taylor"}})

NLOHMANN_JSON_SERIALIZE_ENUM(Region, {{Region::inner_disk, "inner-disk"},
                                      {Region::pfaff_region, "pfaff-region"},
                                      {Region::near_one, "near-one"},
                                      {Region::near_one_reflected, "near-one-reflected"},
                                      {Region::transition, "transition"}})

NLOHMANN_JSON_SERIALIZE_ENUM(SeriesMode, {{SeriesMode::exact, "exact"}, {SeriesMode::floating, "float"}})

NLOHMANN_JSON_SERIALIZE_ENUM(Verdict, {{Verdict::paper_certified, "PaperCertified"},
                                       {Verdict::numerically_consistent, "NumericallyConsistent"},
                                       {Verdict::falsified, "Falsified"},
                                       {Verdict::inconclusive, "Inconclusive"}})

NLOHMANN_JSON_SERIALIZE_ENUM(SectorKind, {{SectorKind::S, "S"},
                                          {SectorKind::S_star, "S*"},
                                          {SectorKind::S_eps, "S_eps"},
                                          {SectorKind::S_star_eps, "S*_eps"},
                                          {SectorKind::apex_sector, "apex"}})

NLOHMANN_JSON_SERIALIZE_ENUM(Rate, {{Rate::inv_x, "x^-1"},
                                    {Rate::inv_x_log_x, "x^-1 log x"},
                                    {Rate::x_pow_a_minus_b, "x^(a-b)"},
                                    {Rate::inv_log_x, "1/log x"},
                                    {Rate::x_pow_b_minus_a_minus_1, "x^(b-a-1)"},
                                    {Rate::none, "none"}})

inline void to_json(json& j, const Evaluation& e) {
  j = json{{"value", e.value}, {"strategy", e.strategy}, {"terms", e.terms}, {"tail_bound", e.tail_bound}};
}
inline void from_json(const json& j, Evaluation& e) {
  j.at("value").get_to(e.value);
  j.at("strategy").get_to(e.strategy);
  j.at("terms").get_to(e.terms);
  j.at("tail_bound").get_to(e.tail_bound);
}

template <class T>
void to_json(json& j, const CoeffSeries<T>& s) {
  j["mode"] = CoeffSeries<T>::mode;
  j["depth"] = s.depth();
  if constexpr (is_exact_v<T>) {
    std::vector<std::string> e;
    for (const auto& q : s.entries) e.push_back(q.get_str());
    j["entries"] = e;
  } else {
    j["entries"] = s.entries;
    j["majorant"] = s.majorant;
    j["error"] = s.error;
  }
}
template <class T>
void from_json(const json& j, CoeffSeries<T>& s) {
  if constexpr (is_exact_v<T>) {
    auto e = j.at("entries").get<std::vector<std::string>>();
    s.resize(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) s.entries[i] = parse_rational(e[i]);
  } else {
    j.at("entries").get_to(s.entries);
    j.at("majorant").get_to(s.majorant);
    j.at("error").get_to(s.error);
  }
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DeltaWitness, k, n, value, exact)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(NecessaryConditions, alpha, beta, alpha_exact, beta_exact, alpha_range, beta_bound,
                                   cubic_bound, beta_slack, cubic_slack)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DeltaSummary, mode, depth, max_k, max_diag, tol, entries_scanned, witnesses,
                                   indeterminate, min_value, coefficients)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(GridWitness, z, value)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(GridSpec, x_min, x_max, n_real, n_radius, n_angle, r_min, r_max, iv_points)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TCheckReport, label, value_at_zero, cond_i, max_abs_im_real, min_real_value,
                                   real_on_axis, positive, nondecreasing, witness_ii, min_im, min_im_scaled,
                                   min_im_zf_scaled, cond_iii, witness_iii, iv_x, iv_values, cond_iv, iv_monotone,
                                   iv_expected, iv_gap, n_real, n_upper, tol, consistent, violated)

inline void to_json(json& j, const PaperConditions& p) {
  j = json{{"route_I", p.route_I}, {"route_II", p.route_II}, {"route_C", p.route_C}, {"route", p.route()}};
}
inline void from_json(const json& j, PaperConditions& p) {
  j.at("route_I").get_to(p.route_I);
  j.at("route_II").get_to(p.route_II);
  j.at("route_C").get_to(p.route_C);
}

inline void to_json(json& j, const CertReport& r) {
  j = json{{"a", r.a},
           {"b", r.b},
           {"c", r.c},
           {"paper", r.paper},
           {"screen", r.screen},
           {"delta", r.delta},
           {"liu_pego", r.liu_pego},
           {"liu_pego_error", r.liu_pego_error},
           {"numeric_consistent", r.numeric_consistent},
           {"verdict", r.verdict},
           {"verdict_label", r.verdict_label()},
           {"witness", r.witness}};
}
inline void from_json(const json& j, CertReport& r) {
  j.at("a").get_to(r.a);
  j.at("b").get_to(r.b);
  j.at("c").get_to(r.c);
  j.at("paper").get_to(r.paper);
  j.at("screen").get_to(r.screen);
  j.at("delta").get_to(r.delta);
  j.at("liu_pego").get_to(r.liu_pego);
  j.at("liu_pego_error").get_to(r.liu_pego_error);
  j.at("numeric_consistent").get_to(r.numeric_consistent);
  j.at("verdict").get_to(r.verdict);
  j.at("witness").get_to(r.witness);
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SectorSpec, kind, delta, eps, apex, phi)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Membership, inside, distance)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SampleWitness, z, image, distance)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Theorem1Report, a, b, c, delta, eps, A, B, n_samples, seed, max_distance_f,
                                   max_distance_g, max_remainder, main_term_in_sector, violations_f, violations_g,
                                   remainder_ok, pass)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RadiusMinimum, r, min_value, theta)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ConvexityReport, a, b, c, kappa_closed, kappa_numeric, argmin_r, argmin_theta,
                                   radii_trace, interior_trace, circle, corner_estimate, near_zero_derivative,
                                   tolerance, consistent)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SectorTheoremReport, a, b, c, delta, B, kappa, kappa_source, n_samples, seed,
                                   apex_negative, violations, min_boundary_distance, line_theta, line_residual,
                                   residual_small, residual_ref, monotone_below, slope_ratio, tan_phi,
                                   line_converges, pass)

inline void to_json(json& j, const CurveSample& c) {
  j = json{{"delta", c.delta},
           {"A", c.A},
           {"B", c.B},
           {"theta", c.theta},
           {"gamma", c.gamma},
           {"gamma1", c.gamma1},
           {"gamma2", c.gamma2},
           {"gamma2_independent", c.gamma2_independent},
           {"decomposition_residual", c.decomposition_residual},
           {"max_abs_gamma2", c.max_abs_gamma2}};
}
inline void from_json(const json& j, CurveSample& c) {
  j.at("delta").get_to(c.delta);
  j.at("A").get_to(c.A);
  j.at("B").get_to(c.B);
  j.at("theta").get_to(c.theta);
  j.at("gamma").get_to(c.gamma);
  j.at("gamma1").get_to(c.gamma1);
  j.at("gamma2").get_to(c.gamma2);
  j.at("gamma2_independent").get_to(c.gamma2_independent);
  j.at("decomposition_residual").get_to(c.decomposition_residual);
  j.at("max_abs_gamma2").get_to(c.max_abs_gamma2);
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SigmaReport, sigma, Q, A, B, expected_sign, sign_certified, signs_match, q_monotone,
                                   ratio_identity, sum_n, partial_sums, partial_errors)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LimitProbe, label, xs, values, claimed_limit, limit_infinite, rate,
                                   tolerance, final_error, monotone_tail, converged, fitted_slope, expected_slope,
                                   halving_ratio, halving_target)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ConnectionCheck, max_residual, worst_z, n_points)

}  // namespace hypgeom
