#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "svet/qcore.hpp"

using namespace svet;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("BlochDirection constructor validates the canonical chart") {
  CHECK_NOTHROW(BlochDirection(0.0, 0.0));
  CHECK_NOTHROW(BlochDirection(kPi, 6.28));
  CHECK_THROWS_AS(BlochDirection(-0.1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(BlochDirection(kPi + 0.1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(BlochDirection(0.5, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(BlochDirection(0.5, 2 * kPi), std::invalid_argument);
  CHECK_THROWS_AS(BlochDirection(std::nan(""), 0.0), std::invalid_argument);
}

TEST_CASE("canonical wrapping keeps the direction fixed") {
  const BlochDirection folded = BlochDirection::canonical(3 * kPi / 2, 0.0);
  CHECK(folded.theta == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(folded.phi == doctest::Approx(kPi).epsilon(1e-15));

  const BlochDirection negative = BlochDirection::canonical(-kPi / 2, 0.0);
  CHECK(negative.theta == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(negative.phi == doctest::Approx(kPi).epsilon(1e-15));

  CHECK_THROWS_AS(BlochDirection::canonical(std::nan(""), 0.0),
                  std::invalid_argument);

  // Property: the unit vector is invariant under the chart folding.
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> wide(-20.0, 20.0);
  for (int k = 0; k < 200; ++k) {
    const double theta = wide(rng);
    const double phi = wide(rng);
    const auto wrapped = BlochDirection::canonical(theta, phi).unit_vector();
    const std::array<double, 3> raw = {std::sin(theta) * std::cos(phi),
                                       std::sin(theta) * std::sin(phi),
                                       std::cos(theta)};
    for (int i = 0; i < 3; ++i) {
      CHECK(wrapped[i] == doctest::Approx(raw[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("unit vectors hit the coordinate axes") {
  const auto z = BlochDirection(0.0, 0.0).unit_vector();
  CHECK(z[0] == doctest::Approx(0.0));
  CHECK(z[2] == doctest::Approx(1.0));
  const auto x = BlochDirection(kPi / 2, 0.0).unit_vector();
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[2] == doctest::Approx(0.0).epsilon(1e-15));
  const auto y = BlochDirection(kPi / 2, kPi / 2).unit_vector();
  CHECK(y[1] == doctest::Approx(1.0));
}

TEST_CASE("bloch_operator reproduces the Pauli matrices on the axes") {
  const auto close = [](const SingleQubitOperator& a,
                        const SingleQubitOperator& b) {
    for (int i = 0; i < 4; ++i) {
      if (std::abs(a.entries[i] - b.entries[i]) > 1e-15) return false;
    }
    return true;
  };
  CHECK(close(bloch_operator(BlochDirection(0.0, 0.0)),
              SingleQubitOperator::sigma_z()));
  CHECK(close(bloch_operator(BlochDirection(kPi / 2, 0.0)),
              SingleQubitOperator::sigma_x()));
  CHECK(close(bloch_operator(BlochDirection(kPi / 2, kPi / 2)),
              SingleQubitOperator::sigma_y()));
}

TEST_CASE("bloch operators are Hermitian involutions") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    const BlochDirection dir(std::acos(2 * u01(rng) - 1), u01(rng) * 6.28);
    const SingleQubitOperator a = bloch_operator(dir);
    CHECK(std::abs(a(0, 0) - std::conj(a(0, 0))) < 1e-15);
    CHECK(std::abs(a(0, 1) - std::conj(a(1, 0))) < 1e-15);
    // a^2 = identity
    Complex sq00 = a(0, 0) * a(0, 0) + a(0, 1) * a(1, 0);
    Complex sq01 = a(0, 0) * a(0, 1) + a(0, 1) * a(1, 1);
    CHECK(std::abs(sq00 - Complex{1, 0}) < 1e-14);
    CHECK(std::abs(sq01) < 1e-14);
  }
}

TEST_CASE("StateVector validates shape and exposes basis states") {
  CHECK_THROWS_AS(StateVector(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(StateVector(2, {Complex{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(StateVector(31, {Complex{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(StateVector::basis(2, 4), std::out_of_range);

  const StateVector e2 = StateVector::basis(2, 2);
  CHECK(e2.num_qubits() == 2);
  CHECK(e2.dim() == 4);
  CHECK(e2[2] == Complex{1, 0});
  CHECK(e2[0] == Complex{0, 0});
  CHECK(e2.norm() == doctest::Approx(1.0));
  CHECK(e2.is_normalized());
  CHECK_FALSE(StateVector(1, {Complex{2, 0}, Complex{0, 0}}).is_normalized());
}

TEST_CASE("apply_single_qubit follows the qubit-1-is-MSB convention") {
  // sigma_x on qubit 1 of |000> flips the leading bit: index 0 -> 4.
  const StateVector zero3 = StateVector::basis(3, 0);
  const StateVector flipped1 =
      apply_single_qubit(zero3, 1, SingleQubitOperator::sigma_x());
  CHECK(std::abs(flipped1[4] - Complex{1, 0}) < 1e-15);

  // sigma_x on qubit 3 flips the trailing bit: index 0 -> 1.
  const StateVector flipped3 =
      apply_single_qubit(zero3, 3, SingleQubitOperator::sigma_x());
  CHECK(std::abs(flipped3[1] - Complex{1, 0}) < 1e-15);

  // sigma_z leaves |0> and negates |1>.
  const StateVector one = StateVector::basis(1, 1);
  const StateVector negated =
      apply_single_qubit(one, 1, SingleQubitOperator::sigma_z());
  CHECK(std::abs(negated[1] - Complex{-1, 0}) < 1e-15);

  CHECK_THROWS_AS(apply_single_qubit(zero3, 0, SingleQubitOperator::identity()),
                  std::out_of_range);
  CHECK_THROWS_AS(apply_single_qubit(zero3, 4, SingleQubitOperator::identity()),
                  std::out_of_range);
}

TEST_CASE("single-qubit kernel agrees with the dense Kronecker oracle") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> gauss;
  const int n = 3;
  const std::size_t dim = 8;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Complex> amps(dim);
    double norm2 = 0;
    for (auto& a : amps) {
      a = Complex{gauss(rng), gauss(rng)};
      norm2 += std::norm(a);
    }
    for (auto& a : amps) a /= std::sqrt(norm2);
    const StateVector state(n, amps);

    std::vector<SingleQubitOperator> ops;
    for (int q = 0; q < n; ++q) {
      const BlochDirection dir(std::acos(std::clamp(gauss(rng), -1.0, 1.0)),
                               std::abs(gauss(rng)) * 0.9);
      ops.push_back(bloch_operator(dir));
    }

    StateVector chained = state;
    for (int q = 1; q <= n; ++q) chained = apply_single_qubit(chained, q, ops[q - 1]);

    const DenseMatrix m = dense_operator(ops);
    for (std::size_t r = 0; r < dim; ++r) {
      Complex row{0, 0};
      for (std::size_t c = 0; c < dim; ++c) row += m(r, c) * state[c];
      CHECK(std::abs(row - chained[r]) < 1e-12);
    }
  }
}

TEST_CASE("inner_product is the conjugate-linear pairing") {
  const StateVector a = StateVector::basis(2, 1);
  const StateVector b = StateVector::basis(2, 1);
  CHECK(std::abs(inner_product(a, b) - Complex{1, 0}) < 1e-15);
  const StateVector c = StateVector::basis(2, 2);
  CHECK(std::abs(inner_product(a, c)) < 1e-15);
  CHECK_THROWS_AS(inner_product(a, StateVector::basis(1, 0)),
                  std::invalid_argument);

  const StateVector phase(1, {Complex{0, 1}, Complex{0, 0}});
  const StateVector plain = StateVector::basis(1, 0);
  // <i psi | psi> = -i
  CHECK(std::abs(inner_product(phase, plain) - Complex{0, -1}) < 1e-15);
}

TEST_CASE("dense_operator rejects bad input and builds small products") {
  CHECK_THROWS_AS(dense_operator({}), std::invalid_argument);
  CHECK_THROWS_AS(
      dense_operator(std::vector<SingleQubitOperator>(
          9, SingleQubitOperator::identity())),
      std::invalid_argument);

  const DenseMatrix xz = dense_operator(
      {SingleQubitOperator::sigma_x(), SingleQubitOperator::sigma_z()});
  // X x Z has (row, col) blocks: off-diagonal identity blocks carrying Z.
  CHECK(std::abs(xz(0, 2) - Complex{1, 0}) < 1e-15);
  CHECK(std::abs(xz(1, 3) - Complex{-1, 0}) < 1e-15);
  CHECK(std::abs(xz(2, 0) - Complex{1, 0}) < 1e-15);
  CHECK(std::abs(xz(3, 1) - Complex{-1, 0}) < 1e-15);
  CHECK(std::abs(xz(0, 0)) < 1e-15);
}
