#include "svet/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <random>
#include <utility>

#include "svet/maximizer.hpp"
#include "svet/states.hpp"
#include "svet/svetlichny.hpp"

namespace svet::checks {

namespace {

constexpr double kPi = std::numbers::pi;

// Scales that differ between the quick smoke pass and the full run. Grid
// densities and tolerances are fixed; quick only shrinks qubit counts and
// the restart budget.
struct Scales {
  int opt_max_n;    // maximizer-backed sweeps
  int state_max_n;  // random-state engine comparisons
  int grad_max_n;   // gradient checks
  int restarts;
  int draws;        // random-settings sampling per qubit count
  int instances;    // engine-equivalence triples
  int recon_draws;  // coefficient-block reconstructions
  int fd_points;    // finite-difference gradient spots
};

Scales scales_for(Level level) {
  if (level == Level::quick) {
    return Scales{6, 6, 6, 16, 2000, 80, 40, 25};
  }
  return Scales{10, 10, 8, 64, 10000, 200, 100, 50};
}

std::vector<double> grid(double lo, double hi, int count) {
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
  }
  return out;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", v);
  return buf;
}

StateVector random_state(int num_qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<Complex> amps(std::size_t{1} << num_qubits);
  double norm2 = 0.0;
  for (auto& a : amps) {
    a = Complex{gauss(rng), gauss(rng)};
    norm2 += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& a : amps) a *= scale;
  return StateVector(num_qubits, std::move(amps));
}

// Dense-matrix oracle: assembles every correlator's full Kronecker product.
double expectation_dense(const StateVector& state,
                         const MeasurementSettings& settings, Variant variant) {
  const int n = state.num_qubits();
  const std::size_t dim = state.dim();
  Complex total{0.0, 0.0};
  for (std::size_t x = 0; x < dim; ++x) {
    std::vector<SingleQubitOperator> ops;
    ops.reserve(n);
    for (int i = 1; i <= n; ++i) {
      const int which = static_cast<int>((x >> (n - i)) & 1u);
      ops.push_back(bloch_operator(settings.qubit(i).get(which)));
    }
    const DenseMatrix m = dense_operator(ops);
    Complex corr{0.0, 0.0};
    for (std::size_t r = 0; r < dim; ++r) {
      Complex row{0.0, 0.0};
      for (std::size_t c = 0; c < dim; ++c) row += m(r, c) * state[c];
      corr += std::conj(state[r]) * row;
    }
    const unsigned w = static_cast<unsigned>(std::popcount(x));
    total += static_cast<double>(nu(w, variant)) * corr;
  }
  return total.real();
}

double closed_form_fd_theta(int num_qubits, double alpha,
                            MeasurementSettings settings, Variant variant,
                            int qubit, int which, double step) {
  BlochDirection& dir = settings.qubit(qubit).get(which);
  const double theta = dir.theta;
  const double phi = dir.phi;
  dir = BlochDirection::canonical(theta + step, phi);
  const double up = gghz_expectation_closed(num_qubits, alpha, settings, variant);
  dir = BlochDirection::canonical(theta - step, phi);
  const double down =
      gghz_expectation_closed(num_qubits, alpha, settings, variant);
  return (up - down) / (2.0 * step);
}

// 1. Maximizer reproduces the GGHZ closed-form maximum across N and alpha,
//    matching from below and never exceeding. Real amplitudes make the two
//    sign variants share one maximum, so the plus variant suffices.
CheckResult check_gghz_certification(const Scales& s) {
  CheckResult r;
  r.name = "gghz bound certification";
  OptimizerConfig config;
  config.restarts = s.restarts;
  config.seed = 1;
  double worst_deficit = 0.0;
  double worst_excess = 0.0;
  int points = 0;
  for (int n = 3; n <= s.opt_max_n; ++n) {
    for (const double alpha : grid(0.0, kPi / 2, 25)) {
      const double bound = gghz_bound_alpha(n, alpha);
      const MaximizationResult best =
          maximize(gghz(n, alpha), Variant::plus, config);
      worst_deficit = std::max(worst_deficit, bound - best.best_value);
      worst_excess = std::max(worst_excess, best.best_value - bound);
      ++points;
    }
  }
  r.passed = worst_deficit <= 1e-5 && worst_excess <= 1e-9;
  r.detail = std::to_string(points) + " points, worst deficit " +
             sci(worst_deficit) + ", worst excess " + sci(worst_excess);
  return r;
}

// 2. The tangle form of the bound stays at or below the hidden-variable
//    ceiling for tau <= 1/2 and crosses it immediately above.
CheckResult check_tangle_threshold() {
  CheckResult r;
  r.name = "tangle threshold";
  double worst_over = -1e300;
  bool crosses = true;
  for (int n = 3; n <= 10; ++n) {
    const double ceiling = lhv_bound(n);
    for (const double tau : grid(0.0, 0.5, 101)) {
      worst_over = std::max(worst_over, gghz_bound_tangle(n, tau) - ceiling);
    }
    if (!(gghz_bound_tangle(n, 0.5 + 1e-6) > ceiling)) crosses = false;
  }
  r.passed = worst_over <= 1e-12 && crosses;
  r.detail = "max excess below 1/2: " + sci(worst_over) +
             (crosses ? ", crosses above 1/2" : ", fails to cross above 1/2");
  return r;
}

// 3. Maximizer attains the maximal-slice bound and random sampling never
//    exceeds it.
CheckResult check_ms_certification(const Scales& s) {
  CheckResult r;
  r.name = "ms bound certification";
  OptimizerConfig config;
  config.restarts = s.restarts;
  config.seed = 1;
  double worst_deficit = 0.0;
  double worst_excess = 0.0;
  double worst_sample = -1e300;
  for (int n = 3; n <= s.opt_max_n; ++n) {
    for (const double alpha : grid(0.0, kPi / 2, 25)) {
      const double bound = ms_bound(n, alpha);
      const MaximizationResult best =
          maximize(ms(n, alpha), Variant::plus, config);
      worst_deficit = std::max(worst_deficit, bound - best.best_value);
      worst_excess = std::max(worst_excess, best.best_value - bound);
    }
    // Sampling sweep: random settings at random alpha, checked against the
    // bound at that alpha.
    std::mt19937_64 rng(0x5c3aull + static_cast<std::uint64_t>(n));
    std::uniform_real_distribution<double> alpha_draw(0.0, kPi / 2);
    for (int d = 0; d < s.draws; ++d) {
      const double alpha = alpha_draw(rng);
      const StateVector state = ms(n, alpha);
      const MeasurementSettings settings = random_settings(n, rng);
      const Variant variant = (d % 2 == 0) ? Variant::plus : Variant::minus;
      const double value = std::abs(expectation_fast(state, settings, variant));
      worst_sample = std::max(worst_sample, value - ms_bound(n, alpha));
    }
  }
  r.passed =
      worst_deficit <= 1e-5 && worst_excess <= 1e-9 && worst_sample <= 1e-9;
  r.detail = "worst deficit " + sci(worst_deficit) + ", worst excess " +
             sci(worst_excess) + ", worst sample margin " + sci(worst_sample);
  return r;
}

// 4. Three-qubit bounds agree with the standalone expressions
//    max(4|cos 2a|, 4 sqrt(2) sin 2a) and 4 sqrt(1 + sin^2 a).
CheckResult check_three_qubit_crosscheck() {
  CheckResult r;
  r.name = "three-qubit cross-check";
  double worst = 0.0;
  for (const double alpha : grid(0.0, kPi / 2, 101)) {
    const double gghz_expected = std::max(4.0 * std::abs(std::cos(2 * alpha)),
                                          4.0 * std::sqrt(2.0) * std::sin(2 * alpha));
    const double ms_expected =
        4.0 * std::sqrt(1.0 + std::sin(alpha) * std::sin(alpha));
    worst = std::max(worst, std::abs(gghz_bound_alpha(3, alpha) - gghz_expected));
    worst = std::max(worst, std::abs(ms_bound(3, alpha) - ms_expected));
  }
  r.passed = worst <= 1e-12;
  r.detail = "max deviation " + sci(worst);
  return r;
}

// 5. The fast engine, the correlator-by-correlator sum, and the dense
//    Kronecker oracle agree on random states and settings.
CheckResult check_engine_equivalence(const Scales& s) {
  CheckResult r;
  r.name = "engine equivalence";
  std::mt19937_64 rng(0xe9e5ull);
  std::uniform_int_distribution<int> qubits(2, s.state_max_n);
  double worst = 0.0;
  for (int k = 0; k < s.instances; ++k) {
    const int n = qubits(rng);
    const StateVector state = random_state(n, rng);
    const MeasurementSettings settings = random_settings(n, rng);
    const Variant variant = (rng() & 1u) ? Variant::plus : Variant::minus;
    const double fast = expectation_fast(state, settings, variant);
    const double brute = expectation_bruteforce(state, settings, variant);
    worst = std::max(worst, std::abs(fast - brute));
    if (n <= 6) {
      const double dense = expectation_dense(state, settings, variant);
      worst = std::max(worst, std::abs(fast - dense));
      worst = std::max(worst, std::abs(brute - dense));
    }
  }
  r.passed = worst <= 1e-10;
  r.detail = std::to_string(s.instances) + " instances, max spread " + sci(worst);
  return r;
}

// 6. The coefficient table matches both generating formulas exactly.
CheckResult check_nu_table() {
  CheckResult r;
  r.name = "nu decomposition";
  bool ok = true;
  for (unsigned w = 0; w <= 31 && ok; ++w) {
    for (const Variant variant : {Variant::plus, Variant::minus}) {
      const long long shifted =
          variant == Variant::plus ? static_cast<long long>(w) + 1
                                   : static_cast<long long>(w) - 1;
      const long long exponent = static_cast<long long>(w) * shifted / 2;
      const int from_parity = (exponent % 2 == 0) ? 1 : -1;
      // i^w cycles (1, i, -1, -i); Re[(1 +- i) i^w] = re -+ im of i^w.
      static constexpr int re[4] = {1, 0, -1, 0};
      static constexpr int im[4] = {0, 1, 0, -1};
      const int from_complex = variant == Variant::plus ? re[w % 4] - im[w % 4]
                                                        : re[w % 4] + im[w % 4];
      if (nu(w, variant) != from_parity || nu(w, variant) != from_complex) {
        ok = false;
        r.detail = "mismatch at weight " + std::to_string(w);
        break;
      }
    }
  }
  r.passed = ok;
  if (ok) r.detail = "weights 0..31, both variants, exact";
  return r;
}

// 7. Tangle values computed from the state match the closed forms
//    sin^2 2a and sin^2 a.
CheckResult check_tangle_identities() {
  CheckResult r;
  r.name = "n-tangle identities";
  double worst = 0.0;
  for (const double alpha : grid(0.0, kPi / 2, 25)) {
    const double s2 = std::sin(2 * alpha) * std::sin(2 * alpha);
    const double sa = std::sin(alpha) * std::sin(alpha);
    for (const int n : {2, 3, 4, 6, 8, 10}) {
      worst = std::max(worst, std::abs(n_tangle_even(gghz(n, alpha)) - s2));
    }
    for (const int n : {3, 4, 6, 8, 10}) {
      worst = std::max(worst, std::abs(n_tangle_even(ms(n, alpha)) - sa));
    }
  }
  r.passed = worst <= 1e-12;
  r.detail = "max deviation " + sci(worst);
  return r;
}

// 8. Isolating the last two qubits closes back onto the full bound: twice
//    the isolated maximum equals the closed-form maximum, the stationarity
//    relations hold at the analytic optima, and the coefficient blocks
//    rebuild the closed-form expectation pointwise.
CheckResult check_block_closure(const Scales& s) {
  CheckResult r;
  r.name = "two-qubit isolation closure";
  double worst_closure = 0.0;
  for (int n = 4; n <= 10; ++n) {
    for (const double alpha : grid(0.0, kPi / 2, 101)) {
      const HkBounds hk = hk_bounds(n, alpha);
      worst_closure =
          std::max(worst_closure, std::abs(2.0 * hk.max_h - gghz_bound_alpha(n, alpha)));
      worst_closure = std::max(worst_closure, std::abs(hk.max_h - hk.max_k));
    }
  }

  const auto coefficients_for = [](int n, double alpha,
                                   const MeasurementSettings& settings,
                                   Variant variant) {
    std::vector<QubitSettings> sub(settings.qubits().begin(),
                                   settings.qubits().end() - 2);
    const QubitSettings& second_last = settings.qubit(n - 1);
    const QubitSettings& last = settings.qubit(n);
    return isolation_coefficients(
        n, alpha, MeasurementSettings(std::move(sub)),
        {second_last.setting0.phi, second_last.setting1.phi},
        {last.setting0.phi, last.setting1.phi}, variant);
  };

  bool consistent = true;
  for (int n = 4; n <= s.opt_max_n; ++n) {
    for (const Variant variant : {Variant::plus, Variant::minus}) {
      for (const double alpha : grid(0.0, kPi / 2, 25)) {
        const MeasurementSettings settings =
            optimal_settings_gghz(n, alpha, variant);
        const IsolationCoefficients coeffs =
            coefficients_for(n, alpha, settings, variant);
        if (!consistency_check(settings, coeffs, 1e-9)) consistent = false;
      }
    }
  }

  std::mt19937_64 rng(0xab10ull);
  std::uniform_int_distribution<int> qubits(4, std::max(4, s.opt_max_n));
  std::uniform_real_distribution<double> alpha_draw(0.0, kPi / 2);
  double worst_recon = 0.0;
  for (int k = 0; k < s.recon_draws; ++k) {
    const int n = qubits(rng);
    const double alpha = alpha_draw(rng);
    const MeasurementSettings settings = random_settings(n, rng);
    const Variant variant = (rng() & 1u) ? Variant::plus : Variant::minus;
    const IsolationCoefficients coeffs =
        coefficients_for(n, alpha, settings, variant);
    const QubitSettings& second_last = settings.qubit(n - 1);
    const QubitSettings& last = settings.qubit(n);
    const double rebuilt = isolation_reconstruct(
        coeffs, {second_last.setting0.theta, second_last.setting1.theta},
        {last.setting0.theta, last.setting1.theta});
    const double direct =
        gghz_expectation_closed(n, alpha, settings, variant);
    worst_recon = std::max(worst_recon, std::abs(rebuilt - direct));
  }

  r.passed = worst_closure <= 1e-12 && consistent && worst_recon <= 1e-10;
  r.detail = "closure " + sci(worst_closure) + ", reconstruction " +
             sci(worst_recon) +
             (consistent ? ", stationarity relations hold at optima"
                         : ", stationarity relations FAIL at optima");
  return r;
}

// 9. Both bound parameterizations are continuous at their branch crossovers.
CheckResult check_branch_continuity() {
  CheckResult r;
  r.name = "branch continuity";
  double worst = 0.0;
  for (int n = 3; n <= 12; ++n) {
    const double product_peak =
        n % 2 ? std::exp2((n + 1) / 2.0) : std::exp2(n / 2.0);
    const double tau_star = n % 2 ? 1.0 / (std::exp2(n - 2) + 1.0)
                                  : std::exp2(1.0 - n);
    const double tangle_product = n % 2
                                      ? product_peak * std::sqrt(1.0 - tau_star)
                                      : product_peak;
    const double tangle_ghz = std::exp2(n - 1.0) * std::sqrt(2.0 * tau_star);
    worst = std::max(worst, std::abs(tangle_product - tangle_ghz));

    const double alpha_star =
        n % 2 ? 0.5 * std::atan(std::exp2(1.0 - n / 2.0))
              : 0.5 * std::asin(std::sqrt(2.0) * std::exp2(-n / 2.0));
    const double alpha_product =
        product_peak * (n % 2 ? std::abs(std::cos(2 * alpha_star)) : 1.0);
    const double alpha_ghz =
        std::sqrt(2.0) * std::exp2(n - 1.0) * std::sin(2 * alpha_star);
    worst = std::max(worst, std::abs(alpha_product - alpha_ghz));
  }
  r.passed = worst <= 1e-12;
  r.detail = "max branch gap " + sci(worst);
  return r;
}

// 10. The analytic theta-gradient vanishes at both analytic optimum
//     patterns for every alpha, and matches finite differences at random
//     points.
CheckResult check_stationarity(const Scales& s) {
  CheckResult r;
  r.name = "stationarity";
  double worst_at_optima = 0.0;
  for (int n = 3; n <= s.grad_max_n; ++n) {
    for (const Variant variant : {Variant::plus, Variant::minus}) {
      // alpha = 0 selects the product-branch pattern, alpha = pi/4 the
      // equatorial pattern; both patterns are alpha-independent, so each is
      // then tested across the whole grid.
      const MeasurementSettings product_pattern =
          optimal_settings_gghz(n, 0.0, variant);
      const MeasurementSettings equator_pattern =
          optimal_settings_gghz(n, kPi / 4, variant);
      for (const double alpha : grid(0.0, kPi / 2, 25)) {
        for (const auto* pattern : {&product_pattern, &equator_pattern}) {
          for (int q = 1; q <= n; ++q) {
            for (int which = 0; which < 2; ++which) {
              const double g = gghz_gradient_theta(n, alpha, *pattern, variant,
                                                   q, which);
              worst_at_optima = std::max(worst_at_optima, std::abs(g));
            }
          }
        }
      }
    }
  }

  std::mt19937_64 rng(0x57a7ull);
  std::uniform_int_distribution<int> qubits(3, s.grad_max_n);
  std::uniform_real_distribution<double> alpha_draw(0.0, kPi / 2);
  double worst_fd = 0.0;
  for (int k = 0; k < s.fd_points; ++k) {
    const int n = qubits(rng);
    const double alpha = alpha_draw(rng);
    const MeasurementSettings settings = random_settings(n, rng);
    const Variant variant = (rng() & 1u) ? Variant::plus : Variant::minus;
    for (int q = 1; q <= n; ++q) {
      for (int which = 0; which < 2; ++which) {
        const double analytic =
            gghz_gradient_theta(n, alpha, settings, variant, q, which);
        const double numeric = closed_form_fd_theta(n, alpha, settings,
                                                    variant, q, which, 1e-5);
        worst_fd = std::max(worst_fd, std::abs(analytic - numeric));
      }
    }
  }

  r.passed = worst_at_optima <= 1e-9 && worst_fd <= 1e-6;
  r.detail = "max gradient at optima " + sci(worst_at_optima) +
             ", max finite-difference gap " + sci(worst_fd);
  return r;
}

// ---- auxiliary invariants beyond the ten certification checks ----

CheckResult check_closed_form_engine(const Scales& s) {
  CheckResult r;
  r.name = "closed form vs fast engine";
  std::mt19937_64 rng(0xc105edull);
  std::uniform_int_distribution<int> qubits(2, s.state_max_n);
  std::uniform_real_distribution<double> alpha_draw(0.0, kPi / 2);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int n = qubits(rng);
    const double alpha = alpha_draw(rng);
    const MeasurementSettings settings = random_settings(n, rng);
    const Variant variant = (rng() & 1u) ? Variant::plus : Variant::minus;
    const double closed = gghz_expectation_closed(n, alpha, settings, variant);
    const double fast = expectation_fast(gghz(n, alpha), settings, variant);
    worst = std::max(worst, std::abs(closed - fast));
  }
  r.passed = worst <= 1e-10;
  r.detail = "max deviation " + sci(worst);
  return r;
}

CheckResult check_attainment(const Scales& s) {
  CheckResult r;
  r.name = "analytic settings attainment";
  double worst = 0.0;
  for (int n = 3; n <= s.opt_max_n; ++n) {
    for (const Variant variant : {Variant::plus, Variant::minus}) {
      for (const double alpha : grid(0.0, kPi / 2, 25)) {
        const MeasurementSettings settings =
            optimal_settings_gghz(n, alpha, variant);
        const double achieved =
            std::abs(expectation_fast(gghz(n, alpha), settings, variant));
        worst = std::max(worst, std::abs(achieved - gghz_bound_alpha(n, alpha)));
      }
    }
  }
  r.passed = worst <= 1e-9;
  r.detail = "max gap " + sci(worst);
  return r;
}

CheckResult check_tau_alpha_consistency() {
  CheckResult r;
  r.name = "tau/alpha consistency";
  double worst = 0.0;
  for (int n = 3; n <= 10; ++n) {
    for (const double alpha : grid(0.0, kPi / 4, 25)) {
      const double tau = std::sin(2 * alpha) * std::sin(2 * alpha);
      worst = std::max(worst, std::abs(gghz_bound_tangle(n, tau) -
                                       gghz_bound_alpha(n, alpha)));
    }
  }
  r.passed = worst <= 1e-12;
  r.detail = "max deviation " + sci(worst);
  return r;
}

CheckResult check_variant_symmetry() {
  CheckResult r;
  r.name = "plus/minus symmetry";
  OptimizerConfig config;
  config.restarts = 16;
  config.seed = 7;
  double worst = 0.0;
  for (int n = 3; n <= 5; ++n) {
    for (const double alpha : {0.2, kPi / 4, 1.3}) {
      for (const Family family : {Family::gghz, Family::ms}) {
        const StateVector state = make_state(FamilyParameter(family, n, alpha));
        const double plus = maximize(state, Variant::plus, config).best_value;
        const double minus = maximize(state, Variant::minus, config).best_value;
        worst = std::max(worst, std::abs(plus - minus));
      }
    }
  }
  r.passed = worst <= 1e-6;
  r.detail = "max variant gap " + sci(worst);
  return r;
}

CheckResult check_sampling_caps(const Scales& s) {
  CheckResult r;
  r.name = "sampling caps";
  double worst_bound = -1e300;
  double worst_cap = -1e300;
  const int max_n = std::min(8, s.state_max_n);
  for (int n = 3; n <= max_n; ++n) {
    std::mt19937_64 rng(0xcafull + static_cast<std::uint64_t>(n));
    std::uniform_real_distribution<double> alpha_draw(0.0, kPi / 2);
    const double cap = algebraic_cap(n);
    for (int d = 0; d < s.draws; ++d) {
      const double alpha = alpha_draw(rng);
      const StateVector state = gghz(n, alpha);
      const MeasurementSettings settings = random_settings(n, rng);
      const Variant variant = (d % 2 == 0) ? Variant::plus : Variant::minus;
      const double value = std::abs(expectation_fast(state, settings, variant));
      worst_bound = std::max(worst_bound, value - gghz_bound_alpha(n, alpha));
      worst_cap = std::max(worst_cap, value - cap);
    }
  }
  r.passed = worst_bound <= 1e-9 && worst_cap <= 1e-9;
  r.detail = "margin to bound " + sci(worst_bound) + ", to cap " + sci(worst_cap);
  return r;
}

CheckResult check_determinism() {
  CheckResult r;
  r.name = "optimizer determinism";
  OptimizerConfig config;
  config.restarts = 8;
  config.seed = 42;
  const StateVector state = gghz(4, 0.5);
  const double first = maximize(state, Variant::plus, config).best_value;
  const double second = maximize(state, Variant::plus, config).best_value;
  ::setenv("SVET_THREADS", "1", 1);
  const double serial = maximize(state, Variant::plus, config).best_value;
  ::unsetenv("SVET_THREADS");
  r.passed = first == second && first == serial;
  r.detail = r.passed ? "bit-identical across runs and thread counts"
                      : "results differ between runs";
  return r;
}

std::vector<CheckResult> execute(
    const std::vector<std::function<CheckResult()>>& checks,
    const Reporter& report) {
  std::vector<CheckResult> results;
  results.reserve(checks.size());
  for (const auto& fn : checks) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult result = fn();
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (report) report(result);
    results.push_back(std::move(result));
  }
  return results;
}

std::vector<std::function<CheckResult()>> acceptance_checks(const Scales& s) {
  return {
      [s] { return check_gghz_certification(s); },
      [] { return check_tangle_threshold(); },
      [s] { return check_ms_certification(s); },
      [] { return check_three_qubit_crosscheck(); },
      [s] { return check_engine_equivalence(s); },
      [] { return check_nu_table(); },
      [] { return check_tangle_identities(); },
      [s] { return check_block_closure(s); },
      [] { return check_branch_continuity(); },
      [s] { return check_stationarity(s); },
  };
}

}  // namespace

std::vector<CheckResult> run_acceptance(Level level, const Reporter& report) {
  return execute(acceptance_checks(scales_for(level)), report);
}

std::vector<CheckResult> run_all(Level level, const Reporter& report) {
  const Scales s = scales_for(level);
  auto checks = acceptance_checks(s);
  checks.emplace_back([s] { return check_closed_form_engine(s); });
  checks.emplace_back([s] { return check_attainment(s); });
  checks.emplace_back([] { return check_tau_alpha_consistency(); });
  checks.emplace_back([] { return check_variant_symmetry(); });
  checks.emplace_back([s] { return check_sampling_caps(s); });
  checks.emplace_back([] { return check_determinism(); });
  return execute(checks, report);
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace svet::checks

