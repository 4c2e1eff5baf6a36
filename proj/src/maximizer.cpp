#include "svet/maximizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace svet {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double length(const Vec3& v) { return std::sqrt(dot(v, v)); }

// A(v0) + i A(v1) with A(v) = v . sigma.
SingleQubitOperator pair_operator(const Vec3& v0, const Vec3& v1) {
  SingleQubitOperator m;
  m(0, 0) = Complex{v0[2], v1[2]};
  m(0, 1) = Complex{v0[0] + v1[1], v1[0] - v0[1]};
  m(1, 0) = Complex{v0[0] - v1[1], v0[1] + v1[0]};
  m(1, 1) = Complex{-v0[2], -v1[2]};
  return m;
}

BlochDirection to_direction(const Vec3& v) {
  const double z = std::clamp(v[2], -1.0, 1.0);
  return BlochDirection::canonical(std::acos(z), std::atan2(v[1], v[0]));
}

Vec3 to_vector(const BlochDirection& d) { return d.unit_vector(); }

// Per-restart state: one direction pair per qubit.
struct DirectionSet {
  std::vector<Vec3> v0;
  std::vector<Vec3> v1;
};

MeasurementSettings to_settings(const DirectionSet& dirs) {
  std::vector<QubitSettings> qubits(dirs.v0.size());
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    qubits[i].setting0 = to_direction(dirs.v0[i]);
    qubits[i].setting1 = to_direction(dirs.v1[i]);
  }
  return MeasurementSettings(std::move(qubits));
}

// Re[(1 +- i) z].
double collapse(Complex z, Variant variant) {
  return variant == Variant::plus ? z.real() - z.imag() : z.real() + z.imag();
}

struct RestartOutcome {
  double signed_value = 0.0;
  DirectionSet dirs;
  bool converged = false;
};

// One ascent pass over all qubits. For qubit k the objective is linear in
// both of its direction vectors,
//   value = u0 . v0 + u1 . v1,
// with u0, u1 read off the partial expectation over the other qubits, so the
// exact block maximizer is v_l = u_l / |u_l|. Returns the objective after
// the last update.
double sweep(const StateVector& state, DirectionSet& dirs, Variant variant,
             std::vector<Complex>& work) {
  const int n = state.num_qubits();
  const std::size_t dim = state.dim();
  double value = 0.0;
  for (int k = 1; k <= n; ++k) {
    work = state.amplitudes();
    for (int i = 1; i <= n; ++i) {
      if (i == k) continue;
      apply_single_qubit_inplace(work, n, i,
                                 pair_operator(dirs.v0[i - 1], dirs.v1[i - 1]));
    }
    const std::size_t stride = std::size_t{1} << (n - k);
    Complex c00{0, 0}, c01{0, 0}, c10{0, 0}, c11{0, 0};
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
      for (std::size_t idx = base; idx < base + stride; ++idx) {
        const Complex p0 = std::conj(state[idx]);
        const Complex p1 = std::conj(state[idx + stride]);
        const Complex w0 = work[idx];
        const Complex w1 = work[idx + stride];
        c00 += p0 * w0;
        c01 += p0 * w1;
        c10 += p1 * w0;
        c11 += p1 * w1;
      }
    }
    const Complex sx = c01 + c10;
    const Complex sy = Complex{0, 1} * (c10 - c01);
    const Complex sz = c00 - c11;
    const Vec3 u0 = {collapse(sx, variant), collapse(sy, variant),
                     collapse(sz, variant)};
    const Complex isx = Complex{0, 1} * sx;
    const Complex isy = Complex{0, 1} * sy;
    const Complex isz = Complex{0, 1} * sz;
    const Vec3 u1 = {collapse(isx, variant), collapse(isy, variant),
                     collapse(isz, variant)};
    const double n0 = length(u0);
    const double n1 = length(u1);
    if (n0 > 1e-300) {
      dirs.v0[k - 1] = {u0[0] / n0, u0[1] / n0, u0[2] / n0};
    }
    if (n1 > 1e-300) {
      dirs.v1[k - 1] = {u1[0] / n1, u1[1] / n1, u1[2] / n1};
    }
    value = dot(u0, dirs.v0[k - 1]) + dot(u1, dirs.v1[k - 1]);
  }
  return value;
}

std::vector<double> pack(const DirectionSet& dirs) {
  std::vector<double> flat;
  flat.reserve(dirs.v0.size() * 6);
  for (std::size_t q = 0; q < dirs.v0.size(); ++q) {
    flat.insert(flat.end(), dirs.v0[q].begin(), dirs.v0[q].end());
    flat.insert(flat.end(), dirs.v1[q].begin(), dirs.v1[q].end());
  }
  return flat;
}

bool set_from_flat(const std::vector<double>& flat, DirectionSet& dirs) {
  for (std::size_t q = 0; q < dirs.v0.size(); ++q) {
    for (int l = 0; l < 2; ++l) {
      const std::size_t at = 6 * q + 3 * static_cast<std::size_t>(l);
      Vec3 v = {flat[at], flat[at + 1], flat[at + 2]};
      const double n = length(v);
      if (!std::isfinite(n) || n <= 1e-12) return false;
      (l == 0 ? dirs.v0 : dirs.v1)[q] = {v[0] / n, v[1] / n, v[2] / n};
    }
  }
  return true;
}

struct AscentResult {
  double value = 0.0;
  bool converged = false;
};

// Ascends from the given directions in place and returns the signed
// objective. Plain sweeps converge linearly and the rate collapses when the
// maximum sits on a nearly flat ridge, so every third sweep the iteration is
// extrapolated to its estimated fixed point: with d1, d2 the displacements of
// the stacked direction vectors over the last two sweeps, the contraction
// factor rho = <d2, d1> / <d1, d1> predicts the limit at
// s2 + d2 * rho / (1 - rho). A stabilizing sweep is run from the jump and the
// result kept only when it does not lose objective value, which preserves
// the ascent guarantee. Converged means the improvement stayed below tol for
// three consecutive cycles within the sweep budget.
AscentResult accelerated_ascent(const StateVector& state, DirectionSet& dirs,
                                Variant variant, int sweep_budget, double tol,
                                std::vector<Complex>& work) {
  AscentResult res;
  double value = sweep(state, dirs, variant, work);
  const int cycles = std::max(1, sweep_budget / 3);
  int flat_cycles = 0;
  DirectionSet candidate = dirs;
  std::vector<double> s0, s1, s2, jump;
  for (int cycle = 0; cycle < cycles; ++cycle) {
    s0 = pack(dirs);
    sweep(state, dirs, variant, work);
    s1 = pack(dirs);
    double best = sweep(state, dirs, variant, work);
    s2 = pack(dirs);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < s0.size(); ++i) {
      const double d1 = s1[i] - s0[i];
      const double d2 = s2[i] - s1[i];
      num += d2 * d1;
      den += d1 * d1;
    }
    if (den > 0.0) {
      const double rho = num / den;
      if (rho > 0.0 && rho < 1.0) {
        const double gain = rho / (1.0 - rho);
        jump = s2;
        for (std::size_t i = 0; i < jump.size(); ++i) {
          jump[i] += (s2[i] - s1[i]) * gain;
        }
        if (set_from_flat(jump, candidate)) {
          const double jumped = sweep(state, candidate, variant, work);
          if (jumped >= best) {
            dirs = candidate;
            best = jumped;
          }
        }
      }
    }
    const double improvement = best - value;
    value = best;
    if (improvement < tol) {
      if (++flat_cycles >= 3) {
        res.converged = true;
        break;
      }
    } else {
      flat_cycles = 0;
    }
  }
  res.value = value;
  return res;
}

RestartOutcome run_restart(const StateVector& state, Variant variant,
                           const OptimizerConfig& config, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const MeasurementSettings start = random_settings(state.num_qubits(), rng);
  RestartOutcome out;
  out.dirs.v0.reserve(start.num_qubits());
  out.dirs.v1.reserve(start.num_qubits());
  for (int i = 1; i <= start.num_qubits(); ++i) {
    out.dirs.v0.push_back(to_vector(start.qubit(i).setting0));
    out.dirs.v1.push_back(to_vector(start.qubit(i).setting1));
  }
  std::vector<Complex> work;
  const AscentResult ascent =
      accelerated_ascent(state, out.dirs, variant, config.max_iterations,
                         config.convergence_tol, work);
  out.signed_value = ascent.value;
  out.converged = ascent.converged;
  return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over seed + golden-ratio stream offset.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d4a2ca9c6f118bULL;
  return z ^ (z >> 31);
}

void validate_config(const OptimizerConfig& config) {
  if (config.restarts < 1) {
    throw std::invalid_argument("OptimizerConfig: restarts must be >= 1");
  }
  if (config.max_iterations < 1) {
    throw std::invalid_argument("OptimizerConfig: max_iterations must be >= 1");
  }
  if (!(config.convergence_tol > 0.0)) {
    throw std::invalid_argument("OptimizerConfig: convergence_tol must be > 0");
  }
  if (!(config.fd_step > 0.0)) {
    throw std::invalid_argument("OptimizerConfig: fd_step must be > 0");
  }
}

void validate_state(const StateVector& state) {
  if (state.num_qubits() < 2 || state.num_qubits() > 14) {
    throw std::invalid_argument("maximize: qubit count outside [2, 14]");
  }
  if (!state.is_normalized(1e-9)) {
    throw std::invalid_argument("maximize: state is not normalized");
  }
}

double fd_partial(const StateVector& state, MeasurementSettings settings,
                  Variant variant, int qubit, int which, bool is_theta,
                  double step) {
  BlochDirection& dir = settings.qubit(qubit).get(which);
  const double theta = dir.theta;
  const double phi = dir.phi;
  const auto probe = [&](double offset) {
    dir = is_theta ? BlochDirection::canonical(theta + offset, phi)
                   : BlochDirection::canonical(theta, phi + offset);
    return expectation_fast(state, settings, variant);
  };
  const double forward = probe(step);
  const double backward = probe(-step);
  return (forward - backward) / (2.0 * step);
}

}  // namespace

MeasurementSettings random_settings(int num_qubits, std::mt19937_64& rng) {
  if (num_qubits < 1) {
    throw std::invalid_argument("random_settings: need at least one qubit");
  }
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::vector<QubitSettings> qubits(num_qubits);
  for (auto& q : qubits) {
    for (int l = 0; l < 2; ++l) {
      const double theta = std::acos(std::clamp(unit(rng), -1.0, 1.0));
      double phi = angle(rng);
      if (phi >= kTwoPi) phi = 0.0;
      q.get(l) = BlochDirection(theta, phi);
    }
  }
  return MeasurementSettings(std::move(qubits));
}

int thread_count() {
  if (const char* env = std::getenv("SVET_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

MaximizationResult maximize(const StateVector& state, Variant variant,
                            const OptimizerConfig& config) {
  validate_config(config);
  validate_state(state);

  std::vector<RestartOutcome> outcomes(config.restarts);
  const int workers = std::min(thread_count(), config.restarts);
  if (workers <= 1) {
    for (int r = 0; r < config.restarts; ++r) {
      outcomes[r] = run_restart(state, variant, config, mix_seed(config.seed, r));
    }
  } else {
    std::atomic<int> next{0};
    auto worker = [&]() {
      for (int r = next.fetch_add(1); r < config.restarts;
           r = next.fetch_add(1)) {
        outcomes[r] =
            run_restart(state, variant, config, mix_seed(config.seed, r));
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  int converged = 0;
  for (const RestartOutcome& out : outcomes) {
    if (out.converged) ++converged;
  }

  // The leading restarts get a refinement pass at a much tighter tolerance:
  // a restart can stop within ~1e-9 of its limit, and refining more than one
  // leader protects the selection against such stops reordering near-ties.
  // Runs after the parallel phase, so the result is independent of the
  // worker count.
  std::vector<int> order(outcomes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(outcomes[a].signed_value) >
           std::abs(outcomes[b].signed_value);
  });
  const int leaders = std::min<int>(3, config.restarts);
  std::vector<Complex> work;
  for (int j = 0; j < leaders; ++j) {
    RestartOutcome& out = outcomes[order[j]];
    const double tol = 1e-13 * std::max(1.0, std::abs(out.signed_value));
    out.signed_value =
        accelerated_ascent(state, out.dirs, variant, config.max_iterations,
                           tol, work)
            .value;
  }

  // Deterministic reduction: best |value|, earliest restart on exact ties.
  int best_index = 0;
  double best_abs = std::abs(outcomes[0].signed_value);
  for (int r = 1; r < config.restarts; ++r) {
    const double v = std::abs(outcomes[r].signed_value);
    if (v > best_abs) {
      best_abs = v;
      best_index = r;
    }
  }

  MaximizationResult result;
  result.best_value = best_abs;
  result.best_settings = to_settings(outcomes[best_index].dirs);
  result.best_variant = variant;
  result.restarts_converged = converged;
  result.stationarity_residual = stationarity_residual(
      state, result.best_settings, variant, config.fd_step);
  return result;
}

MaximizationResult maximize_both(const StateVector& state,
                                 const OptimizerConfig& config) {
  MaximizationResult plus = maximize(state, Variant::plus, config);
  MaximizationResult minus = maximize(state, Variant::minus, config);
  return plus.best_value >= minus.best_value ? plus : minus;
}

double stationarity_residual(const StateVector& state,
                             const MeasurementSettings& settings,
                             Variant variant, double fd_step) {
  if (settings.num_qubits() != state.num_qubits()) {
    throw std::invalid_argument("settings/state qubit count mismatch");
  }
  if (!(fd_step > 0.0)) {
    throw std::invalid_argument("stationarity_residual: step must be > 0");
  }
  double worst = 0.0;
  for (int q = 1; q <= state.num_qubits(); ++q) {
    for (int which = 0; which < 2; ++which) {
      for (const bool is_theta : {true, false}) {
        const double g =
            fd_partial(state, settings, variant, q, which, is_theta, fd_step);
        worst = std::max(worst, std::abs(g));
      }
    }
  }
  return worst;
}

bool certify_stationarity(const StateVector& state,
                          const MeasurementSettings& settings, Variant variant,
                          double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("certify_stationarity: tol must be positive");
  }
  return stationarity_residual(state, settings, variant) <= tol;
}

}  // namespace svet
