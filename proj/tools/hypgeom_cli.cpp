// hypgeom: evaluation, convexity and certification front end.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypgeom/hypgeom.hpp"
#include "hypgeom/json_io.hpp"
#include "hypgeom/suite.hpp"

using namespace hypgeom;

namespace {

struct RunConfig {
  std::string command;
  double a = 0.5, b = 0.9, c = 1.0;
  int depth = 64;
  int max_k = 40;
  int grid = 0;  // command-specific size; 0 keeps the default
  std::vector<double> radii;
  double theta_min = 1e-6;
  std::uint64_t seed = 20240611;
  int samples = 10000;
  std::string format = "text";
  std::string out;
  std::string svg;
  bool exact = true;
  bool timing = false;
  bool quick = false;
  std::vector<std::string> points = {"0"};
  std::string what = "all";
};

json config_json(const RunConfig& c) {
  json j{{"command", c.command}, {"format", c.format}};
  if (c.command != "suite") {
    j["a"] = c.a;
    j["b"] = c.b;
    j["c"] = c.c;
  }
  if (c.command == "eval") j["points"] = c.points, j["what"] = c.what;
  if (c.command == "kappa" || c.command == "image" || c.command == "sector") j["theta_min"] = c.theta_min;
  if (c.command == "kappa" || c.command == "image" || c.command == "certify") j["grid"] = c.grid;
  if (c.command == "kappa") j["radii"] = c.radii;
  if (c.command == "sector" || c.command == "suite") j["seed"] = c.seed;
  if (c.command == "sector") j["samples"] = c.samples;
  if (c.command == "certify") j["depth"] = c.depth, j["max_k"] = c.max_k, j["exact"] = c.exact;
  if (c.command == "suite") j["quick"] = c.quick;
  return j;
}

json envelope(const RunConfig& c, json report, double seconds) {
  json j{{"tool", "hypgeom"}, {"version", kToolVersion}, {"schema", kSchemaVersion}, {"config", config_json(c)},
         {"report", std::move(report)}};
  if (c.timing) j["timing"] = {{"seconds", seconds}};
  return j;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}
std::string g17(double x) { return format_g17(x); }
std::string cplx(Complex z) {
  return g17(z.real()) + (std::signbit(z.imag()) ? " - " : " + ") + g17(std::fabs(z.imag())) + "i";
}

Complex parse_point(const std::string& s) {
  std::istringstream in(s);
  double re = 0, im = 0;
  char sep = 0;
  if (!(in >> re)) throw DomainError("cannot parse point '" + s + "', expected re or re,im");
  if (in >> sep) {
    if (sep != ',' || !(in >> im)) throw DomainError("cannot parse point '" + s + "', expected re or re,im");
  }
  return {re, im};
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + c.out);
  f << text;
}

void emit_json(const RunConfig& c, json report, double seconds) { emit(c, envelope(c, std::move(report), seconds).dump(2) + "\n"); }

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (c.format == f) return;
  }
  throw DomainError("format '" + c.format + "' is not available for " + c.command);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string pass_word(bool ok) { return ok ? "pass" : "FAIL"; }

int cmd_eval(const RunConfig& c) {
  require_format(c, {"text", "json", "csv"});
  auto t0 = std::chrono::steady_clock::now();
  ParamTriple p(c.a, c.b, c.c);
  bool all = c.what == "all";
  json rows = json::array();
  std::ostringstream text, csv;
  csv << "z_re,z_im,F_re,F_im,f_re,f_im,g_re,g_im,pre_re,pre_im\n";
  for (const auto& s : c.points) {
    SlitPoint z(parse_point(s));
    Evaluation e = hyp2f1_eval(p, z);
    Complex f = z.z * e.value;
    Complex g = shifted_g(p, z.z);
    Complex pre = preschwarzian(p, z);
    json row{{"z", z.z}, {"region", to_string(z.region)}, {"strategy", e.strategy}, {"terms", e.terms}};
    if (all || c.what == "F") row["F"] = e.value;
    if (all || c.what == "f") row["f"] = f;
    if (all || c.what == "g") row["g"] = g;
    if (all || c.what == "pre") row["z_pre"] = pre;
    rows.push_back(row);
    text << "z = " << cplx(z.z) << "  [" << to_string(z.region) << ", " << to_string(e.strategy) << "]\n";
    if (all || c.what == "F") text << "  2F1        " << cplx(e.value) << "\n";
    if (all || c.what == "f") text << "  f = z F    " << cplx(f) << "\n";
    if (all || c.what == "g") text << "  g          " << cplx(g) << "\n";
    if (all || c.what == "pre") text << "  z f''/f'   " << cplx(pre) << "\n";
    csv << g17(z.z.real()) << ',' << g17(z.z.imag()) << ',' << g17(e.value.real()) << ',' << g17(e.value.imag()) << ','
        << g17(f.real()) << ',' << g17(f.imag()) << ',' << g17(g.real()) << ',' << g17(g.imag()) << ','
        << g17(pre.real()) << ',' << g17(pre.imag()) << '\n';
  }
  if (c.format == "json") {
    emit_json(c, json{{"params", p}, {"values", rows}}, seconds_since(t0));
  } else if (c.format == "csv") {
    emit(c, csv.str());
  } else {
    emit(c, "params " + p.to_string() + "\n" + text.str());
  }
  return 0;
}

int cmd_kappa(const RunConfig& c) {
  require_format(c, {"text", "json"});
  auto t0 = std::chrono::steady_clock::now();
  ParamTriple p(c.a, c.b, c.c);
  KappaOptions opt;
  if (!c.radii.empty()) opt.radii = c.radii;
  if (c.grid > 0) opt.n_theta = c.grid;
  opt.theta_min = c.theta_min;
  auto r = kappa_numeric(p, opt);
  if (c.format == "json") {
    emit_json(c, r, seconds_since(t0));
  } else {
    std::ostringstream o;
    o << "params " << p.to_string() << "\n";
    o << "kappa (closed form)  " << (r.kappa_closed ? g17(*r.kappa_closed) : std::string("n/a")) << "\n";
    o << "kappa (numeric)      " << g17(r.kappa_numeric) << "  at r=" << g17(r.argmin_r)
      << " theta=" << g17(r.argmin_theta) << "\n";
    if (r.corner_estimate) o << "corner limit z->1    " << g17(*r.corner_estimate) << "\n";
    o << "radius trace:\n";
    for (const auto& m : r.radii_trace) o << "  r=" << fmt("%-8g", m.r) << " min " << g17(m.min_value) << "\n";
    o << "  |z|=1    min " << g17(r.circle.min_value) << "\n";
    if (!r.near_zero_derivative.empty()) o << "near-zero f' points: " << r.near_zero_derivative.size() << "\n";
    o << "consistent (tol " << g17(r.tolerance) << "): " << (r.consistent ? "yes" : "no") << "\n";
    emit(c, o.str());
  }
  return r.consistent ? 0 : 1;
}

int cmd_sector(const RunConfig& c) {
  require_format(c, {"text", "json"});
  auto t0 = std::chrono::steady_clock::now();
  ParamTriple p(c.a, c.b, c.c);
  auto t1 = check_theorem1(p, c.samples, c.seed, c.samples / 8);
  std::optional<SectorTheoremReport> t2;
  std::string skipped;
  try {
    t2 = check_sector_theorem(p, c.samples, c.seed, c.theta_min);
  } catch (const HypothesisError& e) {
    skipped = e.what();
  }
  bool ok = t1.pass && (!t2 || t2->pass);
  if (c.format == "json") {
    emit_json(c, json{{"containment", t1}, {"apex_sector", t2}, {"apex_sector_skipped", skipped}, {"pass", ok}},
              seconds_since(t0));
  } else {
    std::ostringstream o;
    o << "params " << p.to_string() << "  delta=" << g17(t1.delta) << " eps=" << g17(t1.eps) << "\n";
    o << "A=" << g17(t1.A) << " B=" << g17(t1.B) << "\n";
    o << "f in S_eps: " << t1.violations_f.size() << " violations of " << t1.n_samples
      << ", max distance to S " << g17(t1.max_distance_f) << "\n";
    o << "g in S*_eps: " << t1.violations_g.size() << " violations, max distance " << g17(t1.max_distance_g) << "\n";
    o << "max |f - A(1-z)^-delta| " << g17(t1.max_remainder) << "  -> " << pass_word(t1.pass) << "\n";
    if (t2) {
      o << "kappa=" << g17(t2->kappa) << " (" << t2->kappa_source << ")\n";
      o << "apex sector at B: " << t2->violations.size() << " violations, closest sample to boundary "
        << g17(t2->min_boundary_distance) << "\n";
      o << "line residual at theta=1e-3 " << g17(t2->residual_ref) << ", at smallest theta " << g17(t2->residual_small)
        << "\n";
      o << "y/x at smallest theta " << g17(t2->slope_ratio) << " vs tan(pi delta/2) " << g17(t2->tan_phi) << "  -> "
        << pass_word(t2->pass) << "\n";
    } else {
      o << "apex sector skipped: " << skipped << "\n";
    }
    emit(c, o.str());
  }
  return ok ? 0 : 1;
}

int cmd_certify(const RunConfig& c) {
  require_format(c, {"text", "json"});
  auto t0 = std::chrono::steady_clock::now();
  ParamTriple p(c.a, c.b, c.c);
  CertOptions opt;
  opt.depth = c.depth;
  opt.max_k = c.max_k;
  opt.max_diag = std::min(c.max_k, c.depth);
  opt.exact = c.exact;
  if (c.grid > 0) opt.grid.n_radius = opt.grid.n_angle = c.grid;
  auto r = certify_universal_convexity(p, opt);
  if (c.format == "json") {
    emit_json(c, r, seconds_since(t0));
  } else {
    std::ostringstream o;
    o << "params " << p.to_string() << "\n";
    o << "verdict " << r.verdict_label() << "\n";
    o << "paper conditions: I=" << r.paper.route_I << " II=" << r.paper.route_II << " b=1=" << r.paper.route_C << "\n";
    o << "necessary conditions: alpha=" << r.screen.alpha_exact << " beta=" << r.screen.beta_exact
      << "  range=" << r.screen.alpha_range << " beta=" << r.screen.beta_bound << " cubic=" << r.screen.cubic_bound
      << "\n";
    o << "delta table (" << to_string(r.delta.mode) << ", k<=" << r.delta.max_k << ", k+n<=" << r.delta.max_diag
      << "): " << r.delta.entries_scanned << " entries, " << r.delta.witnesses.size() << " witnesses, min "
      << g17(r.delta.min_value) << "\n";
    if (r.witness) {
      o << "witness k=" << r.witness->k << " n=" << r.witness->n << " value "
        << (r.witness->exact.empty() ? g17(r.witness->value) : r.witness->exact) << "\n";
    }
    if (r.liu_pego) {
      o << "Liu-Pego: " << (r.liu_pego->consistent ? "consistent" : "violates " + r.liu_pego->violated)
        << ", min Im/(1+|.|) " << g17(r.liu_pego->min_im_scaled) << "\n";
    } else if (!r.liu_pego_error.empty()) {
      o << "Liu-Pego: " << r.liu_pego_error << "\n";
    }
    emit(c, o.str());
  }
  return 0;
}

int cmd_image(const RunConfig& c) {
  require_format(c, {"csv", "json", "svg"});
  auto t0 = std::chrono::steady_clock::now();
  ParamTriple p(c.a, c.b, c.c);
  auto s = boundary_curve(p, c.grid > 0 ? c.grid : 512, c.theta_min);
  if (c.format == "json") {
    emit_json(c, s, seconds_since(t0));
  } else if (c.format == "svg") {
    emit(c, curve_svg(s));
  } else {
    emit(c, curve_csv(s));
  }
  if (!c.svg.empty()) {
    std::ofstream f(c.svg, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + c.svg);
    f << curve_svg(s);
  }
  return 0;
}

std::string probe_table(const LimitProbe& pr) {
  std::ostringstream o;
  o << pr.label << "  (limit " << (pr.limit_infinite ? std::string("+inf") : g17(pr.claimed_limit)) << ", rate "
    << to_string(pr.rate) << ")\n";
  for (std::size_t i = 0; i < pr.xs.size(); ++i) {
    o << "  x=" << fmt("%-8.0e", pr.xs[i]) << " " << fmt("%-24.16g", pr.values[i]);
    if (!pr.limit_infinite) o << " err " << fmt("%.3e", std::fabs(pr.values[i] - pr.claimed_limit));
    o << "\n";
  }
  if (pr.fitted_slope) o << "  slope " << g17(*pr.fitted_slope) << " expected " << g17(pr.expected_slope.value_or(0)) << "\n";
  if (pr.halving_ratio) o << "  halving ratio " << g17(*pr.halving_ratio) << " target " << g17(pr.halving_target.value_or(0)) << "\n";
  o << "  converged " << (pr.converged ? "yes" : "no") << "\n";
  return o.str();
}

int cmd_asym(const RunConfig& c) {
  require_format(c, {"text", "json"});
  auto t0 = std::chrono::steady_clock::now();
  ParamTriple p(c.a, c.b, c.c);
  json probes = json::object(), skipped = json::object();
  std::ostringstream o;
  o << "params " << p.to_string() << "\n";
  auto attempt = [&](const std::string& name, auto&& fn) {
    try {
      fn();
    } catch (const HypothesisError& e) {
      skipped[name] = e.what();
      o << name << ": skipped, " << e.what() << "\n";
    } catch (const UnsupportedParams& e) {
      skipped[name] = e.what();
      o << name << ": skipped, " << e.what() << "\n";
    }
  };
  attempt("phi", [&] {
    auto pr = phi_probe(p);
    probes["phi"] = pr;
    o << probe_table(pr);
  });
  attempt("psi", [&] {
    auto [psi, xpsi] = psi_probe(p);
    probes["psi"] = psi;
    probes["x_psi"] = xpsi;
    o << probe_table(psi) << probe_table(xpsi);
  });
  attempt("x_w", [&] {
    auto pr = xw_probe(p);
    probes["x_w"] = pr;
    o << probe_table(pr);
  });
  attempt("preschwarz", [&] {
    auto pr = preschwarz_limit_probe(p);
    probes["preschwarz"] = pr;
    o << probe_table(pr);
  });
  attempt("hg_ratio", [&] {
    auto pr = hg_ratio_limit_probe(p);
    probes["hg_ratio"] = pr;
    o << probe_table(pr);
  });
  attempt("connection", [&] {
    auto r = connection_identity_check(p);
    probes["connection"] = r;
    o << "connection identity: max residual " << g17(r.max_residual) << " over " << r.n_points << " points\n";
  });
  if (c.format == "json") {
    emit_json(c, json{{"probes", probes}, {"skipped", skipped}}, seconds_since(t0));
  } else {
    emit(c, o.str());
  }
  return 0;
}

int cmd_suite(const RunConfig& c) {
  require_format(c, {"text", "json"});
  SuiteOptions opt;
  opt.seed = c.seed;
  opt.quick = c.quick;
  bool text = c.format == "text";
  auto report = run_suite(opt, [&](const CriterionResult& r) {
    if (!text) return;
    std::cerr << "[" << (r.pass ? "PASS" : "FAIL") << "] " << r.id << " " << r.title << "\n";
  }, 12);
  if (text) {
    std::ostringstream o;
    for (const auto& r : report.criteria) {
      o << "[" << (r.pass ? "PASS" : "FAIL") << "] " << r.id << ". " << r.title;
      if (c.timing) o << " (" << fmt("%.2f", r.seconds) << " s)";
      o << "\n";
      if (!r.error.empty()) o << "    error: " << r.error << "\n";
      for (const auto& k : r.checks) {
        o << "    " << (k.pass ? "ok  " : "NO  ") << (k.counted ? "" : "(supplementary) ") << k.name << ": "
          << fmt("%.6g", k.value) << " vs " << fmt("%.3g", k.limit);
        if (!k.note.empty()) o << "  [" << k.note << "]";
        o << "\n";
      }
    }
    o << (report.pass ? "all criteria pass\n" : "some criteria fail\n");
    emit(c, o.str());
  } else {
    emit(c, suite_json(report, c.timing).dump(2) + "\n");
  }
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss hypergeometric maps: evaluation, convexity and certification"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_params = [&](CLI::App* s) {
    s->add_option("--a", cfg.a, "parameter a")->capture_default_str();
    s->add_option("--b", cfg.b, "parameter b")->capture_default_str();
    s->add_option("--c", cfg.c, "parameter c")->capture_default_str();
  };
  auto* eval = app.add_subcommand("eval", "2F1, f, g and z f''/f' at points");
  add_params(eval);
  eval->add_option("--z", cfg.points, "point re or re,im (repeatable; use --z=-2,1 for negative parts)");
  eval->add_option("--what", cfg.what, "F, f, g, pre or all")->check(CLI::IsMember({"F", "f", "g", "pre", "all"}));

  auto* kappa = app.add_subcommand("kappa", "order of convexity, closed form and numeric");
  add_params(kappa);
  kappa->add_option("--radii", cfg.radii, "circle radii for the trace")->delimiter(',');
  kappa->add_option("--grid", cfg.grid, "angular samples per circle");
  kappa->add_option("--theta-min", cfg.theta_min, "smallest angle on |z|=1")->capture_default_str();

  auto* sector = app.add_subcommand("sector", "sector containment and the apex sector at B");
  add_params(sector);
  sector->add_option("--seed", cfg.seed, "sample seed")->capture_default_str();
  sector->add_option("--grid,--samples", cfg.samples, "number of disk samples")->capture_default_str();
  sector->add_option("--theta-min", cfg.theta_min, "smallest angle for the asymptotic line")->capture_default_str();

  auto* certify = app.add_subcommand("certify", "universal convexity verdict");
  add_params(certify);
  certify->add_option("--depth", cfg.depth, "series depth")->capture_default_str();
  certify->add_option("--max-k", cfg.max_k, "largest difference order, also the k+n bound")->capture_default_str();
  certify->add_option("--grid", cfg.grid, "radial and angular grid size for Liu-Pego");
  certify->add_flag("--exact,!--no-exact", cfg.exact, "exact rational delta table (default)");

  auto* image = app.add_subcommand("image", "boundary curve of f(D) as CSV, JSON or SVG");
  add_params(image);
  image->add_option("--grid", cfg.grid, "number of angles (default 512)");
  image->add_option("--theta-min", cfg.theta_min, "smallest angle")->capture_default_str();
  image->add_option("--svg", cfg.svg, "also write an SVG figure here");

  auto* asym = app.add_subcommand("asym", "convergence tables for the limit probes");
  add_params(asym);

  auto* suite = app.add_subcommand("suite", "acceptance suite");
  suite->add_option("--seed", cfg.seed, "seed for random triples and samples")->capture_default_str();
  suite->add_flag("--quick", cfg.quick, "reduced sample counts");

  for (auto* s : {eval, kappa, sector, certify, image, asym, suite}) {
    std::string def = s == image ? "csv" : "text";
    s->add_option("--format", cfg.format, "output format (default " + def + ")")
        ->check(CLI::IsMember({"text", "json", "csv", "svg"}));
    s->add_option("--out", cfg.out, "write output to this file instead of stdout");
    s->add_flag("--timing", cfg.timing, "include wall-clock timing in JSON output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  if (cfg.command == "image" && chosen->count("--format") == 0) cfg.format = "csv";

  try {
    if (cfg.command == "eval") return cmd_eval(cfg);
    if (cfg.command == "kappa") return cmd_kappa(cfg);
    if (cfg.command == "sector") return cmd_sector(cfg);
    if (cfg.command == "certify") return cmd_certify(cfg);
    if (cfg.command == "image") return cmd_image(cfg);
    if (cfg.command == "asym") return cmd_asym(cfg);
    return cmd_suite(cfg);
  } catch (const DomainError& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
  } catch (const HypothesisError& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
  } catch (const UnsupportedParams& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
  } catch (const PoleError& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
  } catch (const DegenerateError& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
