#include "mollify/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mollify/characters.hpp"
#include "mollify/errors.hpp"
#include "mollify/kernels.hpp"
#include "mollify/kloosterman.hpp"
#include "mollify/lfunctions.hpp"
#include "mollify/moments.hpp"
#include "mollify/optimizer.hpp"
#include "mollify/parallel.hpp"

namespace mollify {

namespace {

using nlohmann::ordered_json;

// Rounded to 15 significant digits; the JSON writer then prints the shortest
// round-trip form, which is at most 15 digits.
double sig15(double v) { return std::strtod(format_double(v, 15).c_str(), nullptr); }

ordered_json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return sig15(v);
}

ordered_json cnum(std::complex<double> z) { return ordered_json{{"re", num(z.real())}, {"im", num(z.imag())}}; }

ordered_json poly_json(const Polynomial& p) {
  ordered_json a = ordered_json::array();
  for (double c : p.coeffs()) a.push_back(num(c));
  return a;
}

ordered_json spec_json(const MollifierSpec& s) {
  return {{"theta1", num(s.theta1)}, {"theta2", num(s.theta2)}, {"theta3", num(s.theta3)},
          {"P1", poly_json(s.P1)},   {"P2", poly_json(s.P2)},   {"P3", poly_json(s.P3)}};
}

ordered_json optimized_json(const OptimizationResult& r, std::array<int, 3> degrees) {
  ordered_json c = ordered_json::array();
  for (Eigen::Index i = 0; i < r.coefficients.size(); ++i) c.push_back(num(r.coefficients[i]));
  return {{"degrees", degrees},
          {"value", num(r.value)},
          {"min_eigenvalue", num(r.condition_diagnostic)},
          {"coefficients", c},
          {"spec", spec_json(r.spec)}};
}

std::string csv_field(double v) { return std::isfinite(v) ? format_double(v, 15) : ""; }

struct Artifacts {
  ordered_json result;
  std::string csv;    // empty when the mode has no table
  std::string plain;  // plain-text primary output, if the mode has one
};

Artifacts run_reproduce() {
  const auto r = reproduce_reference();
  Artifacts a;
  a.result = {{"spec", spec_json(r.spec)},
              {"s1", num(r.s1)},
              {"s2", num(r.s2)},
              {"kappa", num(r.kappa)},
              {"lambda", num(r.lambda)},
              {"proportion", num(r.fixed_value)},
              {"claimed_bound", num(ReproductionReport::kClaimedBound)},
              {"meets_claimed_bound", r.meets_claimed_bound()},
              {"optimized", optimized_json(r.optimized, r.degrees)}};
  return a;
}

ThetaDomain parse_domain(const std::string& s) {
  if (s == "second_moment") return ThetaDomain::kSecondMoment;
  if (s == "formal") return ThetaDomain::kFormal;
  throw UsageError("domain must be 'second_moment' or 'formal', got '" + s + "'");
}

int as_int(const RunConfig& cfg, const std::string& key, long lo, long hi) {
  const long v = cfg.get_int(key);
  if (v < lo || v > hi) {
    throw UsageError("key '" + key + "' must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<int>(v);
}

Artifacts run_optimize(const RunConfig& cfg) {
  const std::array<int, 3> d{as_int(cfg, "d1", 0, 20), as_int(cfg, "d2", 0, 20), as_int(cfg, "d3", 0, 20)};
  const std::array<double, 3> th{cfg.get_double("theta1"), cfg.get_double("theta2"), cfg.get_double("theta3")};
  const auto model = assemble_quadratic_model(d[0], d[1], d[2], th, parse_domain(cfg.get("domain")));
  const auto r = maximize_rayleigh(model);
  Artifacts a;
  a.result = optimized_json(r, d);
  a.result["is_benchmark"] = num(is_proportion(th[0]));
  a.result["mv_benchmark"] = num(mv_proportion(th[0]));
  return a;
}

Artifacts run_scan(const RunConfig& cfg, unsigned workers) {
  const double lo = cfg.get_double("theta2_lo");
  const double hi = cfg.get_double("theta2_hi");
  const int steps = as_int(cfg, "theta2_steps", 1, 100000);
  const std::array<int, 3> d{as_int(cfg, "d1", 0, 20), as_int(cfg, "d2", 0, 20), as_int(cfg, "d3", 0, 20)};
  if (!(lo <= hi)) throw UsageError("theta2_lo must not exceed theta2_hi");
  std::vector<double> grid;
  for (int i = 0; i < steps; ++i) grid.push_back(steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1));
  const auto table = scan_theta2(grid, d, workers);

  Artifacts a;
  ordered_json rows = ordered_json::array();
  std::ostringstream csv;
  csv << "theta2,value,min_eigenvalue,error\n";
  for (const auto& r : table.rows) {
    rows.push_back({{"theta2", num(r.theta2)},
                    {"value", r.value ? num(*r.value) : ordered_json(nullptr)},
                    {"min_eigenvalue", r.condition_diagnostic ? num(*r.condition_diagnostic) : ordered_json(nullptr)},
                    {"error", r.error}});
    csv << csv_field(r.theta2) << ',' << (r.value ? csv_field(*r.value) : "") << ','
        << (r.condition_diagnostic ? csv_field(*r.condition_diagnostic) : "") << ',' << r.error << '\n';
  }
  a.result = {{"degrees", d}, {"rows", rows}};
  if (table.argmax) {
    a.result["argmax"] = {{"theta2", num(table.rows[*table.argmax].theta2)},
                          {"value", num(*table.rows[*table.argmax].value)}};
  } else {
    a.result["argmax"] = nullptr;
  }
  a.csv = csv.str();
  return a;
}

Artifacts run_sweep(const RunConfig& cfg, unsigned workers) {
  MollifierSpec spec;
  spec.theta1 = cfg.get_double("theta1");
  spec.theta2 = cfg.get_double("theta2");
  spec.theta3 = cfg.get_double("theta3");
  spec.P1 = cfg.get_polynomial("P1");
  spec.P2 = cfg.get_polynomial("P2");
  spec.P3 = cfg.get_polynomial("P3");
  SweepOptions opts;
  opts.stride = as_int(cfg, "stride", 1, 1000000);
  opts.workers = workers;
  opts.vanishing_threshold = cfg.get_double("threshold");
  opts.lfun.kernel = KernelConfig::with_pole_kill_count(as_int(cfg, "pole_kill_count", 0, 8));
  const auto rep = compute_moments(cfg.get_double("Q"), spec, default_psi(), opts);

  Artifacts a;
  a.result = {{"Q", num(rep.Q)},
              {"S1", cnum(rep.S1)},
              {"S2", num(rep.S2)},
              {"norm", num(rep.norm)},
              {"S1_over_norm", num(rep.norm > 0 ? rep.S1.real() / rep.norm : 0.0)},
              {"S2_over_norm", num(rep.norm > 0 ? rep.S2 / rep.norm : 0.0)},
              {"predicted_s1", num(rep.predicted_s1)},
              {"predicted_s2", num(rep.predicted_s2)},
              {"lower_bound", num(rep.lower_bound)},
              {"lower_bound_over_norm", num(rep.norm > 0 ? rep.lower_bound / rep.norm : 0.0)},
              {"weighted_nonzero", num(rep.weighted_nonzero)},
              {"census_total", rep.census_total},
              {"census_nonzero", rep.census_nonzero},
              {"moduli", rep.partials.size()}};
  std::ostringstream csv;
  csv << "q,weight,phi_plus,nonzero,s1_re,s1_im,s2\n";
  for (const auto& p : rep.partials) {
    csv << p.q << ',' << csv_field(p.weight) << ',' << p.phi_plus << ',' << p.nonzero << ','
        << csv_field(p.s1.real()) << ',' << csv_field(p.s1.imag()) << ',' << csv_field(p.s2) << '\n';
  }
  a.csv = csv.str();
  return a;
}

Artifacts run_kernels(const RunConfig& cfg) {
  const auto kind = parse_kernel_kind(cfg.get("kernel"));
  const double x = cfg.get_double("x");
  if (!(x > 0)) throw PreconditionError("kernel argument x must be positive");
  const Kernel k(kind, KernelConfig::with_pole_kill_count(as_int(cfg, "pole_kill_count", 0, 8)));
  double v = 0.0;
  const std::string sigma = cfg.get("sigma");
  if (sigma == "auto") {
    v = k.eval(x);
  } else {
    char* end = nullptr;
    const double s = std::strtod(sigma.c_str(), &end);
    if (end != sigma.c_str() + sigma.size()) throw UsageError("sigma must be 'auto' or a real number");
    v = k.eval_on_line(x, s);
  }
  Artifacts a;
  a.result = {{"kernel", to_string(kind)}, {"x", num(x)}, {"value", num(v)}};
  a.plain = format_double(v, 15) + "\n";
  return a;
}

Artifacts run_characters(const RunConfig& cfg) {
  const int q = as_int(cfg, "q", 1, 100000);
  const CharacterGroup group(q);
  ordered_json chars = ordered_json::array();
  std::ostringstream csv;
  csv << "index,conductor,order,even,primitive\n";
  for (int i = 0; i < group.size(); ++i) {
    const auto chi = group.character(i);
    ordered_json values = ordered_json::array();
    for (const auto& z : chi.values()) values.push_back({num(z.real()), num(z.imag())});
    ordered_json c = {{"index", i},
                      {"conductor", chi.conductor()},
                      {"order", chi.order()},
                      {"even", chi.is_even()},
                      {"primitive", chi.is_primitive()},
                      {"exponents", chi.exponents()},
                      {"conjugate_index", chi.conjugate_index()},
                      {"values", values}};
    if (chi.is_primitive()) {
      c["gauss_sum"] = cnum(gauss_sum(chi));
      c["root_number"] = cnum(root_number(chi));
    }
    chars.push_back(std::move(c));
    csv << i << ',' << chi.conductor() << ',' << chi.order() << ',' << chi.is_even() << ','
        << chi.is_primitive() << '\n';
  }
  Artifacts a;
  a.result = {{"q", q},
              {"phi", group.size()},
              {"phi_star", phi_star(q)},
              {"phi_plus", phi_plus(q)},
              {"even_primitive", group.even_primitive_indices()},
              {"characters", chars}};
  a.csv = csv.str();
  return a;
}

Artifacts run_lfun(const RunConfig& cfg) {
  const int q = as_int(cfg, "q", 1, 1000000);
  const int index = as_int(cfg, "index", 0, 1000000);
  const CharacterGroup group(q);
  if (index >= group.size()) {
    throw PreconditionError("character index " + std::to_string(index) + " out of range for q = " +
                            std::to_string(q));
  }
  LFunctionOptions opts;
  opts.kernel = KernelConfig::with_pole_kill_count(as_int(cfg, "pole_kill_count", 0, 8));
  const LFunctionEngine engine(opts);
  const auto chi = group.character(index);
  const auto d = central_data(chi, engine);
  Artifacts a;
  a.result = {{"q", q},
              {"index", index},
              {"conductor", chi.conductor()},
              {"L_half", cnum(d.L_half)},
              {"abs_L_half_sq", num(std::norm(d.L_half))},
              {"L_half_sq_expansion", num(d.L_half_sq)},
              {"root_number", cnum(d.epsilon)}};
  if (opts.kernel.pole_kill_count >= 2) {
    ordered_json res = ordered_json::object();
    for (double T : {1.0, 2.0, 5.0}) res[format_double(T, 15)] = num(vf_identity_residual(chi, T, engine));
    a.result["identity_residual"] = res;
  }
  return a;
}

Artifacts run_kloosterman(const RunConfig& cfg, unsigned workers) {
  const int scale = as_int(cfg, "scale", 1, 64);
  const auto rows = kloosterman_bench(scale, cfg.seed, workers);
  Artifacts a;
  ordered_json jr = ordered_json::array();
  std::ostringstream csv;
  csv << "C,D,N,R,S,form_abs,bound,ratio\n";
  for (const auto& r : rows) {
    jr.push_back({{"C", num(r.C)},
                  {"D", num(r.D)},
                  {"N", num(r.N)},
                  {"R", num(r.R)},
                  {"S", num(r.S)},
                  {"form_abs", num(r.form_abs)},
                  {"bound", num(r.bound)},
                  {"ratio", num(r.ratio)}});
    for (double v : {r.C, r.D, r.N, r.R, r.S, r.form_abs, r.bound}) csv << csv_field(v) << ',';
    csv << csv_field(r.ratio) << '\n';
  }
  a.result = {{"rows", jr}};
  a.csv = csv.str();
  a.plain = a.csv;
  return a;
}

Artifacts dispatch(const RunConfig& cfg, unsigned workers) {
  const auto& m = cfg.mode;
  if (m == "reproduce") return run_reproduce();
  if (m == "optimize") return run_optimize(cfg);
  if (m == "scan") return run_scan(cfg, workers);
  if (m == "sweep") return run_sweep(cfg, workers);
  if (m == "kernels") return run_kernels(cfg);
  if (m == "characters") return run_characters(cfg);
  if (m == "lfun") return run_lfun(cfg);
  if (m == "kloosterman") return run_kloosterman(cfg, workers);
  throw UsageError("unknown mode '" + m + "'");
}

ordered_json config_json(const RunConfig& cfg) {
  ordered_json c = {{"mode", cfg.mode}};
  for (const auto& [k, v] : cfg.params) c[k] = v;
  c["seed"] = cfg.seed;
  c["workers"] = cfg.workers;
  return c;
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(p);
  if (!f) throw UsageError("cannot write '" + p.string() + "'");
  f << content;
}

}  // namespace

int run(const RunConfig& cfg, OutputFormat format, std::ostream& out, std::ostream& err) {
  try {
    const unsigned workers = cfg.workers == 0 ? default_workers() : cfg.workers;
    Artifacts a = dispatch(cfg, workers);
    ordered_json report = {{"mode", cfg.mode}, {"config", config_json(cfg)}, {"result", a.result}};
    const std::string json_text = report.dump(2) + "\n";

    if (format == OutputFormat::kCsv) {
      if (a.csv.empty()) throw UsageError("mode '" + cfg.mode + "' has no table output");
      out << a.csv;
    } else if (format == OutputFormat::kJson || a.plain.empty()) {
      out << json_text;
    } else {
      out << a.plain;
    }

    std::optional<std::filesystem::path> path;
    if (cfg.output_path) {
      path = *cfg.output_path;
    } else if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
      path = std::filesystem::path(dir) / (cfg.mode + ".json");
    }
    if (path) {
      write_file(*path, json_text);
      auto stem = *path;
      stem.replace_extension();
      if (!a.csv.empty()) write_file(stem.string() + ".csv", a.csv);
      write_file(stem.string() + ".cfg", to_text(cfg));
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  }
}

namespace {

constexpr const char* kFooter = R"(Exit status: 0 ok, 1 usage, 2 precondition, 3 conditioning, 4 accuracy, 5 budget.
Default output directory: $MOLLIFY_OUTPUT_DIR (JSON report, CSV table, resolved config).

Acceptance checks (each also runs as `mollify_acceptance --criterion N`):
  1  mollify reproduce
  2  mollify optimize --d2 0 --d3 0 --theta1 0.3 --d1 4
     mollify optimize --d2 0 --theta1 0.3 --theta3 0.3 --d1 3 --d3 3
     mollify optimize --d2 0 --d3 0 --theta1 1 --domain formal
  3  mollify optimize --d1 5 --d2 5 --d3 2
  4  mollify kernels eval --kernel F --x 1
  5  mollify_acceptance --criterion 5
  6  mollify lfun eval --q 13 --index 2
  7  mollify characters dump --q 60
  8  mollify moments sweep --Q 100
  9  mollify kloosterman bench --scale 2
  10 mollify moments sweep --Q 300
)";

struct Overrides {
  std::map<std::string, std::string> values;
};

void add_key(CLI::App* app, Overrides& ov, const std::string& flag, const std::string& key, const std::string& help) {
  app->add_option_function<std::string>(
         flag, [&ov, key](const std::string& v) { ov.values[key] = v; }, help)
      ->allow_extra_args(false);
}

void add_sweep_keys(CLI::App* app, Overrides& ov) {
  add_key(app, ov, "--Q", "Q", "moduli range parameter, q in (Q/2, 2Q)");
  add_key(app, ov, "--stride", "stride", "take every stride-th modulus");
  add_key(app, ov, "--theta1", "theta1", "IS length exponent");
  add_key(app, ov, "--theta2", "theta2", "B length exponent");
  add_key(app, ov, "--theta3", "theta3", "MV length exponent");
  add_key(app, ov, "--P1", "P1", "IS polynomial coefficients, x^0 first");
  add_key(app, ov, "--P2", "P2", "B polynomial coefficients");
  add_key(app, ov, "--P3", "P3", "MV polynomial coefficients");
  add_key(app, ov, "--threshold", "threshold", "|L| above this counts as nonzero");
  add_key(app, ov, "--pole-kill-count", "pole_kill_count", "K in the kernel polynomial G");
}

}  // namespace

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mollified moments of Dirichlet L-functions"};
  app.footer(kFooter);
  app.require_subcommand(0, 1);

  std::string config_path;
  std::string output_path;
  std::optional<long> workers;
  std::optional<long> seed;
  bool json = false;
  bool csv = false;
  app.add_option("--config", config_path, "key=value config file");
  app.add_option("--output", output_path, "JSON report path (CSV and config written alongside)");
  app.add_option("--workers", workers, "worker threads (default: available parallelism)");
  app.add_option("--seed", seed, "seed for randomized instances");
  auto* jflag = app.add_flag("--json", json, "print the JSON report");
  app.add_flag("--csv", csv, "print the CSV table")->excludes(jflag);

  Overrides ov;
  std::map<CLI::App*, std::string> mode_of;
  auto sub = [&](const std::string& name, const std::string& help, const std::string& mode) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    mode_of[s] = mode;
    return s;
  };

  sub("reproduce", "evaluate the quoted three-piece configuration", "reproduce");

  auto* opt = sub("optimize", "maximize the proportion over polynomial coefficients", "optimize");
  for (const char* k : {"theta1", "theta2", "theta3", "d1", "d2", "d3", "domain"}) {
    add_key(opt, ov, std::string("--") + k, k, "");
  }

  auto* scan = sub("scan", "optimize over a grid of theta2", "scan");
  add_key(scan, ov, "--theta2-lo", "theta2_lo", "grid start");
  add_key(scan, ov, "--theta2-hi", "theta2_hi", "grid end");
  add_key(scan, ov, "--theta2-steps", "theta2_steps", "grid points");
  for (const char* k : {"d1", "d2", "d3"}) add_key(scan, ov, std::string("--") + k, k, "");

  auto* sweep = sub("sweep", "mollified first and second moments over moduli", "sweep");
  add_sweep_keys(sweep, ov);
  auto* moments = sub("moments", "moment sweeps", "sweep");
  add_sweep_keys(moments, ov);
  auto* moments_sweep = moments->add_subcommand("sweep", "mollified moments over moduli");
  moments_sweep->fallthrough();

  auto* kernels = sub("kernels", "contour-quadrature kernels V, V1, F", "kernels");
  add_key(kernels, ov, "--kernel", "kernel", "V, V1 or F");
  add_key(kernels, ov, "--x", "x", "positive argument");
  add_key(kernels, ov, "--sigma", "sigma", "integration line, or auto");
  add_key(kernels, ov, "--pole-kill-count", "pole_kill_count", "K in the kernel polynomial G");
  kernels->add_subcommand("eval", "evaluate one kernel value")->fallthrough();

  auto* chars = sub("characters", "Dirichlet characters of a modulus", "characters");
  add_key(chars, ov, "--q", "q", "modulus");
  chars->add_subcommand("dump", "dump the character table")->fallthrough();

  auto* lfun = sub("lfun", "central values L(1/2, chi)", "lfun");
  add_key(lfun, ov, "--q", "q", "modulus");
  add_key(lfun, ov, "--index", "index", "character index in group order");
  add_key(lfun, ov, "--pole-kill-count", "pole_kill_count", "K in the kernel polynomial G");
  lfun->add_subcommand("eval", "evaluate one central value")->fallthrough();

  auto* kl = sub("kloosterman", "Kloosterman sums and trilinear forms", "kloosterman");
  add_key(kl, ov, "--scale", "scale", "number of range doublings");
  kl->add_subcommand("bench", "ratio table of trilinear forms against the bound")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ErrorKind::kUsage);
  }

  try {
    std::vector<ConfigEntry> entries;
    if (!config_path.empty()) entries = load_config_file(config_path);
    std::string mode;
    for (const auto& [s, m] : mode_of) {
      if (s->parsed()) mode = m;
    }
    if (mode.empty()) {
      for (const auto& e : entries) {
        if (e.key == "mode") mode = e.value;
      }
    }
    if (mode.empty()) {
      out << app.help();
      return static_cast<int>(ErrorKind::kUsage);
    }
    const std::string origin = config_path.empty() ? "<config>" : config_path;
    RunConfig cfg = resolve_config(mode, entries, ov.values, origin);
    if (!output_path.empty()) cfg.output_path = output_path;
    if (workers) {
      if (*workers < 0) throw UsageError("--workers must be nonnegative");
      cfg.workers = static_cast<unsigned>(*workers);
    }
    if (seed) {
      if (*seed < 0) throw UsageError("--seed must be nonnegative");
      cfg.seed = static_cast<std::uint64_t>(*seed);
    }
    const auto format = json ? OutputFormat::kJson : csv ? OutputFormat::kCsv : OutputFormat::kDefault;
    return run(cfg, format, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  }
}

}  // namespace mollify
