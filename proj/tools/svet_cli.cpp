// Command line front end: single-point bound queries, parameter sweeps,
// numerical optimization, the self-check suites, and the coefficient table.
// Exit codes: 0 success, 1 verification failure, 2 usage or parameter error,
// 3 I/O error.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "svet/maximizer.hpp"
#include "svet/states.hpp"
#include "svet/svetlichny.hpp"
#include "svet/verify.hpp"

namespace {

using nlohmann::json;
using namespace svet;

constexpr double kHalfPi = std::numbers::pi / 2.0;

enum class VariantPolicy { plus, minus, both };

const char* to_string(VariantPolicy policy) {
  switch (policy) {
    case VariantPolicy::plus: return "plus";
    case VariantPolicy::minus: return "minus";
    default: return "both";
  }
}

// Shortest representation that round-trips; locale independent.
std::string format_double(double v) {
  std::array<char, 40> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

double alpha_from_tau(Family family, int num_qubits, double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw std::invalid_argument("tau outside [0, 1]");
  }
  if (family == Family::gghz) {
    // tau = sin^2 2a, resolved on the branch a in [0, pi/4].
    return 0.5 * std::asin(std::sqrt(tau));
  }
  if (num_qubits != 3 && num_qubits % 2 != 0) {
    throw std::invalid_argument(
        "tau is undefined for maximal-slice states with odd N > 3; pass alpha");
  }
  return std::asin(std::sqrt(tau));
}

json report_to_json(const BoundReport& r) {
  json j;
  j["family"] = {{"family", to_string(r.family.family)},
                 {"num_qubits", r.family.num_qubits},
                 {"alpha", r.family.alpha}};
  j["variant_best"] = to_string(r.variant_best);
  j["lhv_bound"] = r.lhv_bound;
  j["algebraic_cap"] = r.algebraic_cap;
  j["analytic_max"] = r.analytic_max;
  j["numeric_max"] = r.numeric_max ? json(*r.numeric_max) : json(nullptr);
  j["tangle"] = r.tangle ? json(*r.tangle) : json(nullptr);
  j["violates"] = r.violates;
  return j;
}

struct SweepRow {
  std::string family;
  int n = 0;
  double alpha = 0.0;
  std::optional<double> tau;
  std::string variant;
  double lhv;
  double analytic_max = 0.0;
  std::optional<double> numeric_max;
  bool violates = false;
  std::optional<int> restarts_converged;
};

constexpr const char* kSweepHeader =
    "family,N,alpha,tau,variant,lhv_bound,analytic_max,numeric_max,violates,"
    "optimizer_restarts_converged";

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  for (const SweepRow& r : rows) {
    out << r.family << ',' << r.n << ',' << format_double(r.alpha) << ','
        << (r.tau ? format_double(*r.tau) : std::string()) << ',' << r.variant
        << ',' << format_double(r.lhv) << ',' << format_double(r.analytic_max)
        << ','
        << (r.numeric_max ? format_double(*r.numeric_max) : std::string())
        << ',' << (r.violates ? "true" : "false") << ','
        << (r.restarts_converged ? std::to_string(*r.restarts_converged)
                                 : std::string())
        << '\n';
  }
}

json rows_to_json(const std::vector<SweepRow>& rows) {
  json arr = json::array();
  for (const SweepRow& r : rows) {
    json j;
    j["family"] = r.family;
    j["N"] = r.n;
    j["alpha"] = r.alpha;
    j["tau"] = r.tau ? json(*r.tau) : json(nullptr);
    j["variant"] = r.variant;
    j["lhv_bound"] = r.lhv;
    j["analytic_max"] = r.analytic_max;
    j["numeric_max"] = r.numeric_max ? json(*r.numeric_max) : json(nullptr);
    j["violates"] = r.violates;
    j["optimizer_restarts_converged"] =
        r.restarts_converged ? json(*r.restarts_converged) : json(nullptr);
    arr.push_back(std::move(j));
  }
  return arr;
}

// Writes `text` to the path or, when the path is empty, to standard output.
int emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return std::cout.good() ? 0 : 3;
  }
  std::ofstream file(out_path);
  if (!file) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return 3;
  }
  file << text;
  file.flush();
  if (!file) {
    std::cerr << "error: writing '" << out_path << "' failed\n";
    return 3;
  }
  return 0;
}

struct GridSpec {
  double start = 0.0;
  double stop = kHalfPi;
  int points = 25;
  bool in_tau = false;
};

struct SweepArgs {
  Family family = Family::gghz;
  int n = 3;
  int n_max = 0;  // 0 means "same as n"
  GridSpec grid;
  VariantPolicy policy = VariantPolicy::both;
  bool optimize = false;
  OptimizerConfig config;
  std::string format = "csv";
  std::string out_path;
};

int run_sweep(const SweepArgs& args) {
  const int n_hi = args.n_max == 0 ? args.n : args.n_max;
  if (n_hi < args.n) {
    throw std::invalid_argument("--n-max is smaller than --n");
  }
  std::vector<SweepRow> rows;
  for (int n = args.n; n <= n_hi; ++n) {
    for (int i = 0; i < args.grid.points; ++i) {
      const double g = args.grid.start + (args.grid.stop - args.grid.start) *
                                             static_cast<double>(i) /
                                             (args.grid.points - 1);
      const double alpha =
          args.grid.in_tau ? alpha_from_tau(args.family, n, g) : g;
      const FamilyParameter p(args.family, n, alpha);
      const BoundReport report = violation_report(p);
      SweepRow row;
      row.family = to_string(p.family);
      row.n = n;
      row.alpha = alpha;
      row.tau = report.tangle;
      row.variant = to_string(args.policy);
      row.lhv = report.lhv_bound;
      row.analytic_max = report.analytic_max;
      row.violates = report.violates;
      if (args.optimize) {
        const StateVector state = make_state(p);
        MaximizationResult res;
        switch (args.policy) {
          case VariantPolicy::plus:
            res = maximize(state, Variant::plus, args.config);
            break;
          case VariantPolicy::minus:
            res = maximize(state, Variant::minus, args.config);
            break;
          default:
            res = maximize_both(state, args.config);
            row.variant = to_string(res.best_variant);
            break;
        }
        row.numeric_max = res.best_value;
        row.restarts_converged = res.restarts_converged;
      }
      rows.push_back(std::move(row));
    }
  }
  std::string text;
  if (args.format == "json") {
    text = rows_to_json(rows).dump(2) + "\n";
  } else {
    std::ostringstream stream;
    write_csv(stream, rows);
    text = stream.str();
  }
  return emit(args.out_path, text);
}

int run_optimize(Family family, int n, double alpha, VariantPolicy policy,
                 const OptimizerConfig& config, const std::string& out_path) {
  const FamilyParameter p(family, n, alpha);
  const StateVector state = make_state(p);
  MaximizationResult res;
  switch (policy) {
    case VariantPolicy::plus:
      res = maximize(state, Variant::plus, config);
      break;
    case VariantPolicy::minus:
      res = maximize(state, Variant::minus, config);
      break;
    default:
      res = maximize_both(state, config);
      break;
  }
  json j;
  j["family"] = {{"family", to_string(p.family)},
                 {"num_qubits", p.num_qubits},
                 {"alpha", p.alpha}};
  j["best_value"] = res.best_value;
  json settings = json::array();
  for (int q = 1; q <= res.best_settings.num_qubits(); ++q) {
    const QubitSettings& s = res.best_settings.qubit(q);
    settings.push_back({{"theta0", s.setting0.theta},
                        {"phi0", s.setting0.phi},
                        {"theta1", s.setting1.theta},
                        {"phi1", s.setting1.phi}});
  }
  j["best_settings"] = std::move(settings);
  j["best_variant"] = to_string(res.best_variant);
  j["restarts_converged"] = res.restarts_converged;
  j["stationarity_residual"] = res.stationarity_residual;
  return emit(out_path, j.dump(2) + "\n");
}

int run_verify(const std::string& level_name) {
  const auto level = level_name == "full" ? checks::Level::full
                                          : checks::Level::quick;
  const auto results = checks::run_all(level, [](const checks::CheckResult& r) {
    std::printf("%s  %-34s %8.2fs  %s\n", r.passed ? "PASS" : "FAIL",
                r.name.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
  });
  const bool ok = checks::all_passed(results);
  std::printf("%zu/%zu checks passed\n",
              results.size() - static_cast<std::size_t>(std::count_if(
                                   results.begin(), results.end(),
                                   [](const auto& r) { return !r.passed; })),
              results.size());
  return ok ? 0 : 1;
}

int run_nu_table(const std::string& out_path) {
  std::string text = "w,nu_plus,nu_minus\n";
  for (unsigned w = 0; w <= 15; ++w) {
    text += std::to_string(w) + ',' + std::to_string(nu(w, Variant::plus)) +
            ',' + std::to_string(nu(w, Variant::minus)) + '\n';
  }
  return emit(out_path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Svetlichny-inequality bounds for generalized-GHZ and maximal-slice "
      "states: closed-form maxima, numerical certification, sweeps.\n"
      "Set SVET_THREADS to pin the optimizer worker count."};
  app.require_subcommand(1);

  const std::map<std::string, Family> family_names{{"gghz", Family::gghz},
                                                   {"ms", Family::ms}};
  const std::map<std::string, VariantPolicy> policy_names{
      {"plus", VariantPolicy::plus},
      {"minus", VariantPolicy::minus},
      {"both", VariantPolicy::both}};

  int exit_code = 0;

  // bound: analytic report for a single state.
  Family bound_family = Family::gghz;
  int bound_n = 3;
  double bound_alpha = std::nan("");
  double bound_tau = std::nan("");
  std::string bound_out;
  CLI::App* bound = app.add_subcommand(
      "bound", "Print the analytic bound report for one state as JSON");
  bound->add_option("--family", bound_family, "State family")
      ->required()
      ->transform(CLI::CheckedTransformer(family_names, CLI::ignore_case));
  bound->add_option("--n", bound_n, "Qubit count")->required();
  CLI::Option* bound_alpha_opt =
      bound->add_option("--alpha", bound_alpha, "State parameter in radians");
  CLI::Option* bound_tau_opt =
      bound->add_option("--tau", bound_tau, "State tangle in [0, 1]");
  bound_alpha_opt->excludes(bound_tau_opt);
  bound_tau_opt->excludes(bound_alpha_opt);
  bound->add_option("--out", bound_out, "Write to file instead of stdout");
  bound->callback([&] {
    if (bound_alpha_opt->empty() && bound_tau_opt->empty()) {
      throw std::invalid_argument("pass exactly one of --alpha or --tau");
    }
    const double alpha = bound_tau_opt->empty()
                             ? bound_alpha
                             : alpha_from_tau(bound_family, bound_n, bound_tau);
    const BoundReport report =
        violation_report(FamilyParameter(bound_family, bound_n, alpha));
    exit_code = emit(bound_out, report_to_json(report).dump(2) + "\n");
  });

  // sweep: one row per grid point.
  SweepArgs sweep_args;
  double sweep_alpha_start = 0.0, sweep_alpha_stop = kHalfPi;
  double sweep_tau_start = std::nan(""), sweep_tau_stop = std::nan("");
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Tabulate bounds over a parameter grid (CSV or JSON)");
  sweep->add_option("--family", sweep_args.family, "State family")
      ->required()
      ->transform(CLI::CheckedTransformer(family_names, CLI::ignore_case));
  sweep->add_option("--n", sweep_args.n, "Qubit count (range start)")
      ->required();
  sweep->add_option("--n-max", sweep_args.n_max,
                    "Last qubit count of the range (default: --n)");
  sweep->add_option("--alpha-start", sweep_alpha_start,
                    "First alpha of the grid (radians, default 0)");
  sweep->add_option("--alpha-stop", sweep_alpha_stop,
                    "Last alpha of the grid (radians, default pi/2)");
  CLI::Option* tau_start_opt = sweep->add_option(
      "--tau-start", sweep_tau_start, "First tangle value (grid in tau)");
  CLI::Option* tau_stop_opt = sweep->add_option(
      "--tau-stop", sweep_tau_stop, "Last tangle value (grid in tau)");
  sweep->add_option("--points", sweep_args.grid.points, "Grid size (>= 2)")
      ->check(CLI::Range(2, 1000000));
  sweep->add_option("--variant", sweep_args.policy,
                    "Operator sign variant policy")
      ->transform(CLI::CheckedTransformer(policy_names, CLI::ignore_case));
  sweep->add_flag("--optimize", sweep_args.optimize,
                  "Also run the numerical maximizer per row");
  sweep->add_option("--restarts", sweep_args.config.restarts,
                    "Optimizer restarts per row")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sweep_args.config.seed, "Optimizer seed");
  sweep->add_option("--format", sweep_args.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", sweep_args.out_path,
                    "Write to file instead of stdout");
  sweep->callback([&] {
    const bool tau_mode = !tau_start_opt->empty() || !tau_stop_opt->empty();
    if (tau_mode) {
      sweep_args.grid.in_tau = true;
      sweep_args.grid.start = tau_start_opt->empty() ? 0.0 : sweep_tau_start;
      sweep_args.grid.stop = tau_stop_opt->empty() ? 1.0 : sweep_tau_stop;
    } else {
      sweep_args.grid.start = sweep_alpha_start;
      sweep_args.grid.stop = sweep_alpha_stop;
    }
    exit_code = run_sweep(sweep_args);
  });

  // optimize: numerical maximization for a single state.
  Family opt_family = Family::gghz;
  int opt_n = 3;
  double opt_alpha = std::nan("");
  double opt_tau = std::nan("");
  VariantPolicy opt_policy = VariantPolicy::both;
  OptimizerConfig opt_config;
  std::string opt_out;
  CLI::App* optimize = app.add_subcommand(
      "optimize", "Numerically maximize |<S_N>| for one state, print JSON");
  optimize->add_option("--family", opt_family, "State family")
      ->required()
      ->transform(CLI::CheckedTransformer(family_names, CLI::ignore_case));
  optimize->add_option("--n", opt_n, "Qubit count")->required();
  CLI::Option* opt_alpha_opt =
      optimize->add_option("--alpha", opt_alpha, "State parameter in radians");
  CLI::Option* opt_tau_opt =
      optimize->add_option("--tau", opt_tau, "State tangle in [0, 1]");
  opt_alpha_opt->excludes(opt_tau_opt);
  opt_tau_opt->excludes(opt_alpha_opt);
  optimize->add_option("--variant", opt_policy, "Operator sign variant policy")
      ->transform(CLI::CheckedTransformer(policy_names, CLI::ignore_case));
  optimize->add_option("--restarts", opt_config.restarts, "Optimizer restarts")
      ->check(CLI::PositiveNumber);
  optimize->add_option("--seed", opt_config.seed, "Optimizer seed");
  optimize->add_option("--out", opt_out, "Write to file instead of stdout");
  optimize->callback([&] {
    if (opt_alpha_opt->empty() && opt_tau_opt->empty()) {
      throw std::invalid_argument("pass exactly one of --alpha or --tau");
    }
    const double alpha = opt_tau_opt->empty()
                             ? opt_alpha
                             : alpha_from_tau(opt_family, opt_n, opt_tau);
    exit_code =
        run_optimize(opt_family, opt_n, alpha, opt_policy, opt_config, opt_out);
  });

  // verify: self-check suites.
  std::string verify_level = "quick";
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the certification and invariant suites");
  verify->add_option("--level", verify_level, "Suite scale")
      ->check(CLI::IsMember({"quick", "full"}));
  verify->callback([&] { exit_code = run_verify(verify_level); });

  // nu-table: the sign table as CSV.
  std::string nu_out;
  CLI::App* nu_cmd = app.add_subcommand(
      "nu-table", "Print the coefficient signs nu(w) for w = 0..15 as CSV");
  nu_cmd->add_option("--out", nu_out, "Write to file instead of stdout");
  nu_cmd->callback([&] { exit_code = run_nu_table(nu_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
