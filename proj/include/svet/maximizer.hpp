// Multi-start maximizer for |<S_N>| over measurement settings. Each restart
// runs block-coordinate ascent: for one qubit at a time, both measurement
// directions are set to the exact maximizer of the objective given the other
// qubits, which is available in closed form because the expectation is linear
// in every direction vector. Sweeps repeat until the improvement stays below
// a tolerance, and the leading restarts then get a refinement pass that
// accelerates the linear convergence with fixed-point extrapolation. Restarts
// are independent and deterministic in (seed, index), so results do not
// depend on the worker thread count.

#pragma once

#include <cstdint>
#include <random>

#include "svet/svetlichny.hpp"

namespace svet {

struct OptimizerConfig {
  int restarts = 64;
  int max_iterations = 2000;      // ascent sweep budget per restart
  double convergence_tol = 1e-10; // improvement threshold per ascent cycle
  double fd_step = 1e-6;          // step for the stationarity residual
  std::uint64_t seed = 0;
};

struct MaximizationResult {
  double best_value = 0.0;
  MeasurementSettings best_settings;
  Variant best_variant = Variant::plus;
  int restarts_converged = 0;
  double stationarity_residual = 0.0;
};

// Area-uniform random settings: theta = acos(U[-1,1]), phi = U[0, 2*pi).
MeasurementSettings random_settings(int num_qubits, std::mt19937_64& rng);

// max |<S_N^variant>| on `state`. The signed expectation is optimized from
// each restart and the absolute value taken at the end. N <= 14.
MaximizationResult maximize(const StateVector& state, Variant variant,
                            const OptimizerConfig& config = {});

// Runs both variants with the same config and returns the larger optimum
// (ties go to plus).
MaximizationResult maximize_both(const StateVector& state,
                                 const OptimizerConfig& config = {});

// Largest |partial derivative| of the signed expectation over all 4N angles,
// by central differences with the given step.
double stationarity_residual(const StateVector& state,
                             const MeasurementSettings& settings,
                             Variant variant, double fd_step = 1e-6);

// True iff every one of the 4N partial derivatives has magnitude <= tol.
bool certify_stationarity(const StateVector& state,
                          const MeasurementSettings& settings, Variant variant,
                          double tol);

// Worker count for restart batches: SVET_THREADS when set and positive,
// otherwise the hardware concurrency.
int thread_count();

}  // namespace svet
