#include "svet/qcore.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace svet {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phi(double phi) {
  double p = std::fmod(phi, kTwoPi);
  if (p < 0.0) p += kTwoPi;
  // fmod can land exactly on 2*pi after the correction when phi is a tiny
  // negative number; fold that back to zero.
  if (p >= kTwoPi) p = 0.0;
  return p;
}

}  // namespace

BlochDirection::BlochDirection(double theta_in, double phi_in)
    : theta(theta_in), phi(phi_in) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::invalid_argument("BlochDirection: theta outside [0, pi]");
  }
  if (!(phi >= 0.0 && phi < kTwoPi)) {
    throw std::invalid_argument("BlochDirection: phi outside [0, 2*pi)");
  }
}

BlochDirection BlochDirection::canonical(double theta_in, double phi_in) {
  if (!std::isfinite(theta_in) || !std::isfinite(phi_in)) {
    throw std::invalid_argument("BlochDirection: non-finite angle");
  }
  double t = std::fmod(theta_in, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  double p = phi_in;
  if (t > std::numbers::pi) {
    t = kTwoPi - t;
    p += std::numbers::pi;
  }
  BlochDirection d;
  d.theta = t;
  d.phi = wrap_phi(p);
  return d;
}

std::array<double, 3> BlochDirection::unit_vector() const {
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

SingleQubitOperator SingleQubitOperator::identity() {
  return {{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}}};
}

SingleQubitOperator SingleQubitOperator::sigma_x() {
  return {{Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}}};
}

SingleQubitOperator SingleQubitOperator::sigma_y() {
  return {{Complex{0, 0}, Complex{0, -1}, Complex{0, 1}, Complex{0, 0}}};
}

SingleQubitOperator SingleQubitOperator::sigma_z() {
  return {{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{-1, 0}}};
}

SingleQubitOperator bloch_operator(const BlochDirection& dir) {
  const auto v = dir.unit_vector();
  SingleQubitOperator op;
  op(0, 0) = Complex{v[2], 0.0};
  op(0, 1) = Complex{v[0], -v[1]};
  op(1, 0) = Complex{v[0], v[1]};
  op(1, 1) = Complex{-v[2], 0.0};
  return op;
}

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  if (num_qubits_ < 1) {
    throw std::invalid_argument("StateVector: need at least one qubit");
  }
  if (num_qubits_ > 30) {
    throw std::invalid_argument("StateVector: more than 30 qubits");
  }
  if (amplitudes_.size() != (std::size_t{1} << num_qubits_)) {
    throw std::invalid_argument("StateVector: amplitude count is not 2^N");
  }
}

StateVector StateVector::basis(int num_qubits, std::size_t index) {
  if (num_qubits < 1 || num_qubits > 30) {
    throw std::invalid_argument("StateVector::basis: qubit count out of range");
  }
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (index >= dim) {
    throw std::out_of_range("StateVector::basis: index out of range");
  }
  std::vector<Complex> amps(dim, Complex{0, 0});
  amps[index] = Complex{1, 0};
  return StateVector(num_qubits, std::move(amps));
}

double StateVector::norm() const {
  double s = 0.0;
  for (const Complex& a : amplitudes_) s += std::norm(a);
  return std::sqrt(s);
}

bool StateVector::is_normalized(double tol) const {
  double s = 0.0;
  for (const Complex& a : amplitudes_) s += std::norm(a);
  return std::abs(s - 1.0) <= tol;
}

void apply_single_qubit_inplace(std::vector<Complex>& amps, int num_qubits,
                                int qubit_index, const SingleQubitOperator& op) {
  if (qubit_index < 1 || qubit_index > num_qubits) {
    throw std::out_of_range("apply_single_qubit: qubit index out of range");
  }
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (amps.size() != dim) {
    throw std::invalid_argument("apply_single_qubit: dimension mismatch");
  }
  // Qubit 1 is the most significant bit, so its stride is 2^(N-1).
  const std::size_t stride = std::size_t{1} << (num_qubits - qubit_index);
  const Complex m00 = op(0, 0), m01 = op(0, 1), m10 = op(1, 0), m11 = op(1, 1);
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t k = base; k < base + stride; ++k) {
      const Complex a0 = amps[k];
      const Complex a1 = amps[k + stride];
      amps[k] = m00 * a0 + m01 * a1;
      amps[k + stride] = m10 * a0 + m11 * a1;
    }
  }
}

StateVector apply_single_qubit(const StateVector& state, int qubit_index,
                               const SingleQubitOperator& op) {
  std::vector<Complex> amps = state.amplitudes();
  apply_single_qubit_inplace(amps, state.num_qubits(), qubit_index, op);
  return StateVector(state.num_qubits(), std::move(amps));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("inner_product: dimension mismatch");
  }
  Complex s{0, 0};
  for (std::size_t k = 0; k < a.dim(); ++k) {
    s += std::conj(a[k]) * b[k];
  }
  return s;
}

DenseMatrix dense_operator(const std::vector<SingleQubitOperator>& ops) {
  if (ops.empty()) {
    throw std::invalid_argument("dense_operator: empty operator list");
  }
  if (ops.size() > 8) {
    throw std::invalid_argument("dense_operator: more than 8 qubits");
  }
  DenseMatrix m;
  m.dim = 2;
  m.data = {ops[0](0, 0), ops[0](0, 1), ops[0](1, 0), ops[0](1, 1)};
  for (std::size_t q = 1; q < ops.size(); ++q) {
    const SingleQubitOperator& b = ops[q];
    DenseMatrix next;
    next.dim = 2 * m.dim;
    next.data.resize(next.dim * next.dim);
    for (std::size_t r = 0; r < m.dim; ++r) {
      for (std::size_t c = 0; c < m.dim; ++c) {
        const Complex factor = m(r, c);
        for (int br = 0; br < 2; ++br) {
          for (int bc = 0; bc < 2; ++bc) {
            next(2 * r + br, 2 * c + bc) = factor * b(br, bc);
          }
        }
      }
    }
    m = std::move(next);
  }
  return m;
}

}  // namespace svet
