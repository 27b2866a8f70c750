#pragma once

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <cherednik/io.hpp>

namespace cherednik::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, bad_input = 2, numerical_error = 3 };

enum class Format { json, csv };

/// Raised for --help: carries the help text, exits 0.
struct help_requested {
  std::string text;
};

struct RunPlan {
  std::string command;
  std::string action;
  /// Raw flag values after merging the config file (flags win).
  std::map<std::string, std::string> given;

  double k = 0.0;
  int N = 0;
  double p = 2.0;
  double delta = kDefaultDelta;
  WeightSpec weight = WeightSpec::power(0.5);
  Pairing pairing = Pairing::lebesgue;
  double alpha_min = 0.0, alpha_max = 0.0;
  int steps = 20;
  int grid_x = 101, grid_y = 101;
  double x = 0.0, y = 0.0;
  KernelForm form = KernelForm::spectral_sum;
  double guard = kDiagonalGuard;
  double tol = kDefaultMomentTol;
  int samples = 10000;
  std::string out;
  Format format = Format::json;
};

namespace detail {

inline const std::map<std::string, std::vector<std::string>>& command_flags() {
  static const std::map<std::string, std::vector<std::string>> flags = {
      {"basis", {"k", "N"}},
      {"verify", {"k", "N"}},
      {"kernel eval", {"k", "N", "x", "y", "form", "guard"}},
      {"kernel compare", {"k", "N", "grid", "guard"}},
      {"kernel export-grid", {"k", "N", "grid", "guard"}},
      {"localize", {"k", "N", "delta"}},
      {"weight criterion", {"p", "delta", "weight", "alpha", "beta", "gamma"}},
      {"weight dualnorm", {"p", "delta", "weight", "alpha", "beta", "gamma", "pairing"}},
      {"weight scan", {"p", "delta", "alpha-min", "alpha-max", "steps"}},
      {"weight envelope", {"p", "alpha", "beta", "gamma", "samples"}},
      {"report", {"k", "N", "p", "delta"}},
  };
  return flags;
}

inline const std::map<std::string, std::string>& command_help() {
  static const std::map<std::string, std::string> help = {
      {"basis", "Build and check the eigenfunction basis"},
      {"verify", "Run the identity checks"},
      {"kernel", "Truncated kernel tools"},
      {"kernel eval", "Evaluate the kernel in one form at (x, y)"},
      {"kernel compare", "Compare spectral and boundary forms on a grid"},
      {"kernel export-grid", "Dump kernel values on a grid"},
      {"localize", "Local decomposition of the weighted operator"},
      {"weight", "Weight integrability tools"},
      {"weight criterion", "Classify the critical integral for one weight"},
      {"weight dualnorm", "Dual norm with truncated extremizers"},
      {"weight scan", "Locate the power-weight threshold"},
      {"weight envelope", "Check the L^p / L^p' envelope inequality"},
      {"report", "Summary of basis, kernel and threshold checks"},
  };
  return help;
}

inline const std::vector<std::string>& common_flags() {
  static const std::vector<std::string> flags = {"tol", "out", "format"};
  return flags;
}

[[noreturn]] inline void bad_flag(const std::string& flag, const std::string& why) {
  throw invalid_input("--" + flag + ": " + why);
}

inline double to_double(const std::string& flag, const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::logic_error&) {
    bad_flag(flag, "expected a number, got '" + v + "'");
  }
}

inline int to_int(const std::string& flag, const std::string& v) {
  try {
    std::size_t used = 0;
    const long i = std::stol(v, &used);
    if (used != v.size() || i < std::numeric_limits<int>::min() || i > std::numeric_limits<int>::max())
      throw std::invalid_argument(v);
    return static_cast<int>(i);
  } catch (const std::logic_error&) {
    bad_flag(flag, "expected an integer, got '" + v + "'");
  }
}

inline std::string config_value(const std::string& key, const io::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return io::format_double(v.get<double>());
  throw invalid_input("config: key '" + key + "' must be a string or a number");
}

inline void merge_config(RunPlan& plan, const std::vector<std::string>& allowed) {
  auto it = plan.given.find("config");
  if (it == plan.given.end()) return;
  const std::string path = it->second;
  plan.given.erase(it);
  std::ifstream in(path);
  if (!in) bad_flag("config", "cannot open '" + path + "'");
  io::json cfg;
  try {
    cfg = io::json::parse(in);
  } catch (const io::json::exception& e) {
    bad_flag("config", std::string("invalid JSON: ") + e.what());
  }
  if (!cfg.is_object()) bad_flag("config", "top level must be an object");
  for (const auto& [key, val] : cfg.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw invalid_input("config: key '" + key + "' does not apply to '" + plan.command +
                          (plan.action.empty() ? "" : " " + plan.action) + "'");
    plan.given.emplace(key, config_value(key, val)); // flags already present win
  }
}

inline WeightSpec weight_from(const RunPlan& plan) {
  const auto& g = plan.given;
  WeightSpec spec;
  if (auto it = g.find("weight"); it != g.end()) {
    spec = io::parse_weight(it->second);
  } else if (g.count("gamma")) {
    spec = WeightSpec::example_a(0.0, 0.0, 1.0);
  } else if (g.count("beta")) {
    spec = WeightSpec::power_log(0.0, 0.0);
  } else {
    spec = WeightSpec::power(0.0);
  }
  if (auto it = g.find("alpha"); it != g.end()) spec.alpha = to_double("alpha", it->second);
  if (auto it = g.find("beta"); it != g.end()) {
    if (spec.family == WeightFamily::power) bad_flag("beta", "not a parameter of the power family");
    spec.beta = to_double("beta", it->second);
  }
  if (auto it = g.find("gamma"); it != g.end()) {
    if (spec.family != WeightFamily::example_a) bad_flag("gamma", "only the examplea family takes gamma");
    spec.gamma = to_double("gamma", it->second);
    if (!(spec.gamma > 0.0)) bad_flag("gamma", "must be positive");
  }
  if (!std::isfinite(spec.alpha) || !std::isfinite(spec.beta)) bad_flag("weight", "parameters must be finite");
  return spec;
}

inline void resolve(RunPlan& plan) {
  const auto& g = plan.given;
  auto get = [&](const char* key) -> const std::string* {
    auto it = g.find(key);
    return it == g.end() ? nullptr : &it->second;
  };
  const double pi = std::numbers::pi;

  if (auto v = get("k")) {
    plan.k = to_double("k", *v);
    if (!(plan.k >= 0.0) || !std::isfinite(plan.k)) bad_flag("k", "must be a finite number >= 0");
  }
  if (auto v = get("N")) {
    plan.N = to_int("N", *v);
    if (plan.N < 0 || plan.N > kMaxTruncation) bad_flag("N", "must lie in [0, " + std::to_string(kMaxTruncation) + "]");
  }
  if (auto v = get("p")) {
    plan.p = to_double("p", *v);
    if (!(plan.p > 1.0) || !std::isfinite(plan.p)) bad_flag("p", "must be a finite number > 1");
  }
  if (auto v = get("delta")) {
    plan.delta = to_double("delta", *v);
    if (!(plan.delta > 0.0 && plan.delta < pi / 4)) bad_flag("delta", "must lie in (0, pi/4)");
  }
  if (auto v = get("tol")) {
    plan.tol = to_double("tol", *v);
    if (!(plan.tol > 0.0 && plan.tol < 1e-3)) bad_flag("tol", "must lie in (0, 1e-3)");
  }
  if (auto v = get("x")) plan.x = to_double("x", *v);
  if (auto v = get("y")) plan.y = to_double("y", *v);
  if (!std::isfinite(plan.x) || !std::isfinite(plan.y)) bad_flag("x", "coordinates must be finite");
  if (auto v = get("guard")) {
    plan.guard = to_double("guard", *v);
    if (!(plan.guard > 0.0 && plan.guard < pi)) bad_flag("guard", "must lie in (0, pi)");
  }
  if (auto v = get("form")) {
    if (*v == "spectral")
      plan.form = KernelForm::spectral_sum;
    else if (*v == "boundary")
      plan.form = KernelForm::boundary_closed;
    else
      bad_flag("form", "expected spectral or boundary");
  }
  if (auto v = get("grid")) {
    const auto xpos = v->find_first_of("xX");
    if (xpos == std::string::npos) bad_flag("grid", "expected NxM");
    plan.grid_x = to_int("grid", v->substr(0, xpos));
    plan.grid_y = to_int("grid", v->substr(xpos + 1));
    if (plan.grid_x < 1 || plan.grid_y < 1 || plan.grid_x > 4001 || plan.grid_y > 4001)
      bad_flag("grid", "dimensions must lie in [1, 4001]");
  }
  if (auto v = get("pairing")) {
    if (*v == "lebesgue")
      plan.pairing = Pairing::lebesgue;
    else if (*v == "weighted")
      plan.pairing = Pairing::weighted_measure;
    else
      bad_flag("pairing", "expected lebesgue or weighted");
  }
  if (auto v = get("steps")) {
    plan.steps = to_int("steps", *v);
    if (plan.steps < 0 || plan.steps > 200) bad_flag("steps", "must lie in [0, 200]");
  }
  if (auto v = get("samples")) {
    plan.samples = to_int("samples", *v);
    if (plan.samples < 2 || plan.samples > 10000000) bad_flag("samples", "must lie in [2, 1e7]");
  }
  if (plan.command == "weight" && plan.action == "scan") {
    plan.alpha_min = 0.0;
    plan.alpha_max = 2.0 * plan.p;
    if (auto v = get("alpha-min")) plan.alpha_min = to_double("alpha-min", *v);
    if (auto v = get("alpha-max")) plan.alpha_max = to_double("alpha-max", *v);
    if (!(plan.alpha_min < plan.alpha_max) || !std::isfinite(plan.alpha_min) || !std::isfinite(plan.alpha_max))
      bad_flag("alpha-max", "must be finite and exceed --alpha-min");
  }
  if (plan.command == "weight" && plan.action != "scan") plan.weight = weight_from(plan);
  if (plan.command == "weight" && plan.action == "envelope" && plan.weight.family != WeightFamily::example_a)
    plan.weight = WeightSpec::example_a(plan.weight.alpha, plan.weight.beta, 1.0);
  if (auto v = get("out")) plan.out = *v;
  if (auto v = get("format")) {
    if (*v == "json")
      plan.format = Format::json;
    else if (*v == "csv")
      plan.format = Format::csv;
    else
      bad_flag("format", "expected json or csv");
  }
  const bool csv_ok = (plan.command == "kernel" && plan.action != "eval") || (plan.command == "weight" && plan.action == "scan");
  if (plan.format == Format::csv && !csv_ok) bad_flag("format", "csv output is only available for kernel compare/export-grid and weight scan");
}

} // namespace detail

/// Parses arguments (without the program name). Throws invalid_input for
/// usage errors and help_requested for --help.
inline RunPlan parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Heckman-Opdam basis, kernel and weight diagnostics", "cherednik"};
  app.require_subcommand(1);
  RunPlan plan;

  auto add_flags = [&](CLI::App* sub, const std::string& key) {
    std::vector<std::string> names = detail::command_flags().at(key);
    for (const auto& c : detail::common_flags()) names.push_back(c);
    names.push_back("config");
    for (const auto& name : names) {
      sub->add_option_function<std::string>(
          "--" + name, [&plan, name](const std::string& v) { plan.given[name] = v; }, name);
    }
    sub->callback([&plan, key] {
      const auto space = key.find(' ');
      plan.command = key.substr(0, space);
      plan.action = space == std::string::npos ? "" : key.substr(space + 1);
    });
  };

  std::map<std::string, CLI::App*> groups;
  for (const auto& [key, flags] : detail::command_flags()) {
    const auto space = key.find(' ');
    if (space == std::string::npos) {
      add_flags(app.add_subcommand(key, detail::command_help().at(key)), key);
      continue;
    }
    const std::string group = key.substr(0, space);
    if (!groups.count(group)) {
      groups[group] = app.add_subcommand(group, detail::command_help().at(group));
      groups[group]->require_subcommand(1);
    }
    add_flags(groups[group]->add_subcommand(key.substr(space + 1), detail::command_help().at(key)), key);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw help_requested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw help_requested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw invalid_input(std::string("usage: ") + e.what());
  }

  const std::string key = plan.command + (plan.action.empty() ? "" : " " + plan.action);
  auto allowed = detail::command_flags().at(key);
  for (const auto& c : detail::common_flags()) allowed.push_back(c);
  detail::merge_config(plan, allowed);
  detail::resolve(plan);
  return plan;
}

// --- verify ------------------------------------------------------------------

struct VerifyRecord {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifySummary {
  double k = 0.0;
  int N = 0;
  std::vector<VerifyRecord> records;
  bool pass() const {
    return std::all_of(records.begin(), records.end(), [](const VerifyRecord& r) { return r.pass; });
  }
};

inline VerifySummary run_verify(double k, int N, double tol = kDefaultMomentTol) {
  VerifySummary s;
  s.k = k;
  s.N = N;
  auto add = [&](std::string name, double residual, double tolerance) {
    s.records.push_back({std::move(name), residual, tolerance, residual <= tolerance});
  };
  // -(N+1) is needed by the reproducing check; everything else lives in [-N, N+1].
  const Basis wide = build_basis_range(-(N + 1), N + 1, k, N, tol);
  const auto check = check_basis(wide);

  double reflection = 0.0;
  for (int n = -N; n <= N + 1; ++n) reflection = std::max(reflection, reflection_check(n, wide));
  add("reflection", reflection, 1e-10);

  double negindex = 0.0;
  for (int n = 1; n <= N + 1; ++n) {
    const auto fit = negindex_check(n, wide);
    negindex = std::max({negindex, std::abs(fit.B - fit.expected_B), fit.residual});
  }
  add("negindex", negindex, 1e-9);
  add("eigen", check.max_eigen_residual, 1e-9);
  add("orthogonality", check.max_orthogonality, 1e-9);
  const double g_lo = wide.gamma_sq(-N), g_hi = wide.gamma_sq(N + 1);
  add("gamma_symmetry", std::abs(g_lo - g_hi) / g_hi, 1e-10);

  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> idx(-20, 20), len(1, 8);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  double pi_defect = 0.0;
  for (int t = 0; t < 100; ++t) {
    ExpSum e;
    for (int i = len(rng); i > 0; --i) e.add(idx(rng), coef(rng));
    for (PiMode mode : {PiMode::unit, PiMode::preserve_dominant}) {
      const ExpSum once = project_pi(e, mode);
      pi_defect = std::max(pi_defect, coefficient_distance(project_pi(once, mode), once));
    }
  }
  add("pi_idempotence", pi_defect, 0.0);

  {
    const Basis small = build_basis_range(-1, 1, k, 1, tol);
    const double e1 = coefficient_distance(small.poly(1), TrigPoly::monomial(1));
    TrigPoly em1 = TrigPoly::monomial(-1);
    em1.set(1, k / (1.0 + k));
    add("closed_E1", e1, 0.0);
    add("closed_Em1", coefficient_distance(small.poly(-1), em1), 1e-10);
  }

  double repro = 0.0;
  for (int m = -(N + 1); m <= N + 1; ++m) {
    const TrigPoly r = reconstruct(wide.poly(m), wide);
    const double scale = std::max(1.0, wide.poly(m).max_abs_coefficient());
    repro = std::max(repro, (std::abs(m) <= N ? coefficient_distance(r, wide.poly(m)) : r.max_abs_coefficient()) / scale);
  }
  add("reproducing", repro, 1e-9);

  const int pts = 33;
  const double pi = std::numbers::pi;
  double diag = 0.0, factor = 0.0, branch = 0.0;
  for (int i = 0; i < pts; ++i) {
    const double x = -pi + 2.0 * pi * i / (pts - 1);
    diag = std::max(diag, std::abs(numerator_N(wide, x, x)));
    for (double h : {0.5, 1e-2, 2e-3, 1.1e-3}) {
      const double y = x + h;
      factor = std::max(factor, std::abs(numerator_N(wide, x, y) - (x - y) * c_factor(wide, x, y)));
      branch = std::max(branch, std::abs(c_factor_quotient(wide, x, y) - c_factor_integral(wide, x, y)));
    }
  }
  add("diagonal_vanishing", diag, 1e-12);
  add("factorization", factor, 1e-10);
  add("c_factor_branches", branch, 1e-8);
  return s;
}

inline io::json to_json(const VerifySummary& s) {
  io::json rows = io::json::array();
  for (const auto& r : s.records)
    rows.push_back(io::json{{"name", r.name}, {"max_residual", r.max_residual}, {"tolerance", r.tolerance}, {"pass", r.pass}});
  return io::json{{"k", s.k}, {"N", s.N}, {"records", rows}, {"pass", s.pass()}};
}

// --- execute -----------------------------------------------------------------

namespace detail {

inline void emit(const RunPlan& plan, const std::string& text) {
  if (plan.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(plan.out, std::ios::binary);
  if (!f) throw invalid_input("--out: cannot write '" + plan.out + "'");
  f << text;
  if (!f) throw invalid_input("--out: write to '" + plan.out + "' failed");
}

inline std::string markdown_report(const RunPlan& plan, bool& verify_ok) {
  std::ostringstream md;
  const auto fmt = [](double v) { return io::format_double(v); };
  md << "# Report: k = " << fmt(plan.k) << ", N = " << plan.N << "\n\n";

  const auto summary = run_verify(plan.k, plan.N, plan.tol);
  verify_ok = summary.pass();
  md << "## Identity suite\n\n| identity | max residual | tolerance | pass |\n|---|---|---|---|\n";
  for (const auto& r : summary.records)
    md << "| " << r.name << " | " << fmt(r.max_residual) << " | " << fmt(r.tolerance) << " | " << (r.pass ? "yes" : "no") << " |\n";

  const Basis basis = build_basis(plan.N, plan.k, plan.tol);
  const auto cmp = compare_forms(basis, uniform_grid(101, 101));
  md << "\n## Kernel forms\n\nspectral vs boundary, 101x101 grid, " << cmp.evaluated_points
     << " guarded points: max |difference| = " << fmt(cmp.max_abs_difference) << " at (" << fmt(cmp.argmax_x) << ", "
     << fmt(cmp.argmax_y) << ")\n";

  const auto local = local_decompose(basis, plan.delta);
  md << "\n## Local decomposition\n\n- delta used: " << fmt(local.delta) << " (" << local.shrink_steps << " halvings)\n"
     << "- established: " << (local.established ? "yes" : "no") << "\n"
     << "- inf |A_N| = " << fmt(local.A_inf) << ", sup |A_N| = " << fmt(local.A_sup) << "\n"
     << "- sup |R_N| on patch = " << fmt(local.R_bound) << "\n"
     << "- inf |1 - e^{-i(x-y)}| on supp(1 - chi x chi) = " << fmt(local.remainder_denominator_inf) << "\n";

  const auto scan = threshold_scan(plan.p, plan.delta, 0.0, 2.0 * plan.p);
  md << "\n## Threshold scan (power weights, p = " << fmt(plan.p) << ")\n\nalpha* = " << fmt(scan.alpha_star)
     << ", bracket [" << fmt(scan.bracket_lo) << ", " << fmt(scan.bracket_hi) << "], p - 1 = " << fmt(plan.p - 1.0) << "\n";
  return md.str();
}

inline int run(const RunPlan& plan) {
  const auto& cmd = plan.command;
  const auto& act = plan.action;

  if (cmd == "basis") {
    emit(plan, io::dump(io::to_json(build_basis(plan.N, plan.k, plan.tol))));
    return ok;
  }
  if (cmd == "verify") {
    const auto s = run_verify(plan.k, plan.N, plan.tol);
    emit(plan, io::dump(to_json(s)));
    return s.pass() ? ok : verification_failed;
  }
  if (cmd == "kernel") {
    const Basis basis = build_basis(plan.N, plan.k, plan.tol);
    if (act == "eval") {
      const KernelEvalConfig cfg{plan.N, plan.k, plan.form, plan.guard};
      const cplx v = evaluate_kernel(basis, plan.x, plan.y, cfg);
      emit(plan, io::dump(io::json{{"N", plan.N},
                                   {"k", plan.k},
                                   {"x", plan.x},
                                   {"y", plan.y},
                                   {"form", plan.form == KernelForm::spectral_sum ? "spectral" : "boundary"},
                                   {"value", io::complex_pair(v)}}));
      return ok;
    }
    const bool keep = act == "export-grid" || plan.format == Format::csv;
    const auto r = compare_forms(basis, uniform_grid(plan.grid_x, plan.grid_y), plan.guard, keep);
    if (plan.format == Format::csv) {
      std::ostringstream os;
      io::write_grid_csv(os, r);
      emit(plan, os.str());
    } else {
      emit(plan, io::dump(io::to_json(r)));
    }
    return ok; // comparison reports, never asserts
  }
  if (cmd == "localize") {
    const auto d = local_decompose(build_basis(plan.N, plan.k, plan.tol), plan.delta);
    emit(plan, io::dump(io::to_json(d)));
    if (!d.established) {
      std::cerr << "localize: inf |A_N| vanished on every tried patch\n";
      return numerical_error;
    }
    return ok;
  }
  if (cmd == "weight") {
    MirrorOptions opt;
    if (act == "criterion") {
      emit(plan, io::dump(io::to_json(criterion_integral(plan.weight, plan.p, plan.delta, opt))));
      return ok;
    }
    if (act == "dualnorm") {
      emit(plan, io::dump(io::to_json(dual_norm(plan.weight, plan.p, plan.delta, plan.pairing, opt))));
      return ok;
    }
    if (act == "scan") {
      const auto s = threshold_scan(plan.p, plan.delta, plan.alpha_min, plan.alpha_max, plan.steps, opt);
      if (plan.format == Format::csv) {
        std::ostringstream os;
        io::write_scan_csv(os, s);
        emit(plan, os.str());
      } else {
        emit(plan, io::dump(io::to_json(s)));
      }
      return std::abs(s.alpha_star - (plan.p - 1.0)) <= s.bracket_width() ? ok : verification_failed;
    }
    if (act == "envelope") {
      const auto ys = log_spaced(1e-12, plan.delta, static_cast<std::size_t>(plan.samples));
      const auto c = envelope_check_example_a(plan.weight.alpha, plan.weight.beta, plan.weight.gamma, plan.p, ys);
      emit(plan, io::dump(io::to_json(c)));
      return c.max_violation <= 0.0 ? ok : verification_failed;
    }
  }
  if (cmd == "report") {
    bool verify_ok = true;
    emit(plan, markdown_report(plan, verify_ok));
    return verify_ok ? ok : verification_failed;
  }
  throw invalid_input("unknown command '" + cmd + " " + act + "'");
}

} // namespace detail

/// Runs the plan; maps failures onto the exit-code contract.
inline int execute(const RunPlan& plan) {
  try {
    return detail::run(plan);
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bad_input;
  } catch (const numerical_failure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return numerical_error;
  }
}

/// parse_args + execute with the exit-code contract applied to parse errors.
inline int main_with_args(const std::vector<std::string>& args) {
  try {
    return execute(parse_args(args));
  } catch (const help_requested& h) {
    std::cout << h.text;
    return ok;
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bad_input;
  } catch (const numerical_failure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return numerical_error;
  }
}

} // namespace cherednik::cli
