// Minimal n-qubit statevector kernel: Bloch-sphere observables, single-qubit
// operator application, inner products, and a dense Kronecker-product oracle
// for cross-checking the in-place kernels at small N.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace svet {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;

// Direction on the Bloch sphere, theta in [0, pi], phi in [0, 2*pi).
struct BlochDirection {
  double theta = 0.0;
  double phi = 0.0;

  BlochDirection() = default;
  BlochDirection(double theta_in, double phi_in);

  // Wraps arbitrary finite angles onto the canonical chart. The map folds
  // theta outside [0, pi] back by reflecting through the pole and shifting
  // phi by pi, so the underlying unit vector is preserved.
  static BlochDirection canonical(double theta_in, double phi_in);

  // (sin t cos p, sin t sin p, cos t)
  std::array<double, 3> unit_vector() const;
};

// Dense 2x2 complex matrix acting on one qubit, row-major.
struct SingleQubitOperator {
  std::array<Complex, 4> entries{};

  Complex operator()(int row, int col) const { return entries[2 * row + col]; }
  Complex& operator()(int row, int col) { return entries[2 * row + col]; }

  static SingleQubitOperator identity();
  static SingleQubitOperator sigma_x();
  static SingleQubitOperator sigma_y();
  static SingleQubitOperator sigma_z();
};

// v . sigma for the unit vector of `dir`: Hermitian, traceless, involutory.
SingleQubitOperator bloch_operator(const BlochDirection& dir);

// Pure state of num_qubits qubits. Qubit 1 is the most significant bit of
// the basis index: |0...0> is amplitude 0, |1...1> is amplitude 2^N - 1.
class StateVector {
 public:
  StateVector(int num_qubits, std::vector<Complex> amplitudes);

  static StateVector basis(int num_qubits, std::size_t index);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm() const;
  bool is_normalized(double tol = kNormTolerance) const;

 private:
  int num_qubits_;
  std::vector<Complex> amplitudes_;
};

// (I x ... x op x ... x I)|psi> with op at 1-based `qubit_index`. The
// operator need not be unitary, so the result need not stay normalized.
StateVector apply_single_qubit(const StateVector& state, int qubit_index,
                               const SingleQubitOperator& op);

// In-place kernel behind apply_single_qubit; amps holds 2^num_qubits entries.
void apply_single_qubit_inplace(std::vector<Complex>& amps, int num_qubits,
                                int qubit_index, const SingleQubitOperator& op);

// <a|b> = sum_k conj(a_k) b_k. Dimensions must match.
Complex inner_product(const StateVector& a, const StateVector& b);

// Row-major dense matrix, used as the small-N oracle.
struct DenseMatrix {
  std::size_t dim = 0;
  std::vector<Complex> data;

  Complex operator()(std::size_t r, std::size_t c) const { return data[r * dim + c]; }
  Complex& operator()(std::size_t r, std::size_t c) { return data[r * dim + c]; }
};

// Kronecker product op_1 x op_2 x ... x op_N (qubit 1 leftmost). Dense cost
// grows as 4^N, so this rejects more than 8 qubits; it exists for oracle
// comparisons, not production evaluation.
DenseMatrix dense_operator(const std::vector<SingleQubitOperator>& ops);

}  // namespace svet
