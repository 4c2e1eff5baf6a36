#include "svet/states.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace svet {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= kHalfPi)) {
    throw std::invalid_argument("alpha outside [0, pi/2]");
  }
}

// Residual three-tangle of a pure three-qubit state, 4|Det(psi)| with Det
// the 2x2x2 hyperdeterminant.
double three_tangle(const StateVector& state) {
  const auto& a = state.amplitudes();
  auto amp = [&](int b1, int b2, int b3) { return a[4 * b1 + 2 * b2 + b3]; };
  const Complex d1 = amp(0, 0, 0) * amp(0, 0, 0) * amp(1, 1, 1) * amp(1, 1, 1) +
                     amp(0, 0, 1) * amp(0, 0, 1) * amp(1, 1, 0) * amp(1, 1, 0) +
                     amp(0, 1, 0) * amp(0, 1, 0) * amp(1, 0, 1) * amp(1, 0, 1) +
                     amp(1, 0, 0) * amp(1, 0, 0) * amp(0, 1, 1) * amp(0, 1, 1);
  const Complex d2 = amp(0, 0, 0) * amp(1, 1, 1) * amp(0, 1, 1) * amp(1, 0, 0) +
                     amp(0, 0, 0) * amp(1, 1, 1) * amp(1, 0, 1) * amp(0, 1, 0) +
                     amp(0, 0, 0) * amp(1, 1, 1) * amp(1, 1, 0) * amp(0, 0, 1) +
                     amp(0, 1, 1) * amp(1, 0, 0) * amp(1, 0, 1) * amp(0, 1, 0) +
                     amp(0, 1, 1) * amp(1, 0, 0) * amp(1, 1, 0) * amp(0, 0, 1) +
                     amp(1, 0, 1) * amp(0, 1, 0) * amp(1, 1, 0) * amp(0, 0, 1);
  const Complex d3 = amp(0, 0, 0) * amp(1, 1, 0) * amp(1, 0, 1) * amp(0, 1, 1) +
                     amp(1, 1, 1) * amp(0, 0, 1) * amp(0, 1, 0) * amp(1, 0, 0);
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

}  // namespace

const char* to_string(Family family) {
  return family == Family::gghz ? "gghz" : "ms";
}

FamilyParameter::FamilyParameter(Family family_in, int num_qubits_in,
                                 double alpha_in)
    : family(family_in), num_qubits(num_qubits_in), alpha(alpha_in) {
  const int min_qubits = family == Family::gghz ? 2 : 3;
  if (num_qubits < min_qubits) {
    throw std::invalid_argument("FamilyParameter: too few qubits for family");
  }
  if (num_qubits > 30) {
    throw std::invalid_argument("FamilyParameter: more than 30 qubits");
  }
  check_alpha(alpha);
}

StateVector gghz(int num_qubits, double alpha) {
  if (num_qubits < 2 || num_qubits > 30) {
    throw std::invalid_argument("gghz: qubit count out of range");
  }
  check_alpha(alpha);
  const std::size_t dim = std::size_t{1} << num_qubits;
  std::vector<Complex> amps(dim, Complex{0, 0});
  amps[0] = Complex{std::cos(alpha), 0.0};
  amps[dim - 1] = Complex{std::sin(alpha), 0.0};
  return StateVector(num_qubits, std::move(amps));
}

StateVector ms(int num_qubits, double alpha) {
  if (num_qubits < 3 || num_qubits > 30) {
    throw std::invalid_argument("ms: qubit count out of range");
  }
  check_alpha(alpha);
  const std::size_t dim = std::size_t{1} << num_qubits;
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  std::vector<Complex> amps(dim, Complex{0, 0});
  amps[0] = Complex{inv_sqrt2, 0.0};
  amps[dim - 2] = Complex{std::cos(alpha) * inv_sqrt2, 0.0};
  amps[dim - 1] = Complex{std::sin(alpha) * inv_sqrt2, 0.0};
  return StateVector(num_qubits, std::move(amps));
}

StateVector make_state(const FamilyParameter& p) {
  return p.family == Family::gghz ? gghz(p.num_qubits, p.alpha)
                                  : ms(p.num_qubits, p.alpha);
}

double n_tangle_even(const StateVector& state) {
  const int n = state.num_qubits();
  if (n == 3) return three_tangle(state);
  if (n % 2 != 0) {
    throw std::invalid_argument("n_tangle_even: undefined for odd N > 3");
  }
  // sigma_y^(xN)|k> = i^N (-1)^{w(k)} |~k>, so the overlap with the
  // conjugated state is a single pass over complemented index pairs.
  const std::size_t dim = state.dim();
  const std::size_t mask = dim - 1;
  // i^N for even N is +-1.
  const double in_sign = (n % 4 == 0) ? 1.0 : -1.0;
  Complex overlap{0, 0};
  for (std::size_t k = 0; k < dim; ++k) {
    const double parity = (std::popcount(k) % 2 == 0) ? 1.0 : -1.0;
    overlap += std::conj(state[k ^ mask]) * std::conj(state[k]) * (in_sign * parity);
  }
  return std::norm(overlap);
}

double gghz_tangle(double alpha) {
  const double s = std::sin(2.0 * alpha);
  return s * s;
}

double ms_tangle(int num_qubits, double alpha) {
  if (num_qubits != 3 && num_qubits % 2 != 0) {
    throw std::invalid_argument("ms_tangle: undefined for odd N > 3");
  }
  if (num_qubits < 3) {
    throw std::invalid_argument("ms_tangle: qubit count out of range");
  }
  const double s = std::sin(alpha);
  return s * s;
}

std::optional<double> family_tangle(const FamilyParameter& p) {
  if (p.family == Family::gghz) return gghz_tangle(p.alpha);
  if (p.num_qubits == 3 || p.num_qubits % 2 == 0) {
    return ms_tangle(p.num_qubits, p.alpha);
  }
  return std::nullopt;
}

}  // namespace svet
