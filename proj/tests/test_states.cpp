#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "svet/states.hpp"

using namespace svet;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("gghz amplitudes and validation") {
  const StateVector s = gghz(4, 0.3);
  CHECK(s.dim() == 16);
  CHECK(s[0].real() == doctest::Approx(std::cos(0.3)).epsilon(1e-15));
  CHECK(s[15].real() == doctest::Approx(std::sin(0.3)).epsilon(1e-15));
  CHECK(s[1] == Complex{0, 0});
  CHECK(s.is_normalized());

  CHECK_NOTHROW(gghz(2, 0.0));
  CHECK_THROWS_AS(gghz(1, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(gghz(3, -0.01), std::invalid_argument);
  CHECK_THROWS_AS(gghz(3, kPi / 2 + 0.01), std::invalid_argument);
}

TEST_CASE("ms amplitudes and validation") {
  const StateVector s = ms(3, 0.7);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(s[0].real() == doctest::Approx(r).epsilon(1e-15));
  CHECK(s[6].real() == doctest::Approx(r * std::cos(0.7)).epsilon(1e-15));
  CHECK(s[7].real() == doctest::Approx(r * std::sin(0.7)).epsilon(1e-15));
  CHECK(s.is_normalized());

  // alpha = pi/2 recovers the plain GHZ state.
  const StateVector ghz = ms(3, kPi / 2);
  CHECK(std::abs(ghz[6]) < 1e-15);
  CHECK(ghz[7].real() == doctest::Approx(r).epsilon(1e-15));

  CHECK_THROWS_AS(ms(2, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(ms(4, -0.2), std::invalid_argument);
}

TEST_CASE("FamilyParameter validates per family") {
  CHECK_NOTHROW(FamilyParameter(Family::gghz, 2, 0.1));
  CHECK_THROWS_AS(FamilyParameter(Family::gghz, 1, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(FamilyParameter(Family::ms, 2, 0.1), std::invalid_argument);
  CHECK_NOTHROW(FamilyParameter(Family::ms, 3, 0.1));
  CHECK_THROWS_AS(FamilyParameter(Family::gghz, 3, 2.0), std::invalid_argument);

  const FamilyParameter p(Family::ms, 5, 0.4);
  const StateVector s = make_state(p);
  CHECK(s.num_qubits() == 5);
  CHECK(s[30].real() == doctest::Approx(std::cos(0.4) / std::sqrt(2.0)));
}

TEST_CASE("to_string names the families") {
  CHECK(std::string(to_string(Family::gghz)) == "gghz");
  CHECK(std::string(to_string(Family::ms)) == "ms");
}

TEST_CASE("n-tangle matches sin^2 2a on the gghz family") {
  for (const int n : {2, 4, 6, 8}) {
    for (const double alpha : {0.0, 0.3, kPi / 4, 1.1, kPi / 2}) {
      const double expected = std::sin(2 * alpha) * std::sin(2 * alpha);
      CHECK(n_tangle_even(gghz(n, alpha)) ==
            doctest::Approx(expected).epsilon(1e-13));
    }
  }
  // Three qubits go through the residual-tangle path.
  for (const double alpha : {0.0, 0.3, kPi / 4, 1.2}) {
    const double expected = std::sin(2 * alpha) * std::sin(2 * alpha);
    CHECK(n_tangle_even(gghz(3, alpha)) ==
          doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("n-tangle matches sin^2 a on the ms family") {
  for (const int n : {4, 6, 8}) {
    for (const double alpha : {0.0, 0.5, 1.0, kPi / 2}) {
      const double expected = std::sin(alpha) * std::sin(alpha);
      CHECK(n_tangle_even(ms(n, alpha)) ==
            doctest::Approx(expected).epsilon(1e-13));
    }
  }
  CHECK(n_tangle_even(ms(3, 0.8)) ==
        doctest::Approx(std::sin(0.8) * std::sin(0.8)).epsilon(1e-13));
}

TEST_CASE("n-tangle rejects odd N > 3 and kills separable states") {
  CHECK_THROWS_AS(n_tangle_even(gghz(5, 0.3)), std::invalid_argument);
  CHECK(n_tangle_even(StateVector::basis(4, 0)) == doctest::Approx(0.0));
  // The three-qubit W state famously has zero residual tangle.
  const double r = 1.0 / std::sqrt(3.0);
  const StateVector w(3, {Complex{0, 0}, Complex{r, 0}, Complex{r, 0},
                          Complex{0, 0}, Complex{r, 0}, Complex{0, 0},
                          Complex{0, 0}, Complex{0, 0}});
  CHECK(n_tangle_even(w) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("parameter-level tangle helpers") {
  CHECK(gghz_tangle(kPi / 4) == doctest::Approx(1.0));
  CHECK(gghz_tangle(0.0) == doctest::Approx(0.0));
  CHECK(ms_tangle(4, 0.6) == doctest::Approx(std::sin(0.6) * std::sin(0.6)));
  CHECK(ms_tangle(3, 0.6) == doctest::Approx(std::sin(0.6) * std::sin(0.6)));
  CHECK_THROWS_AS(ms_tangle(5, 0.6), std::invalid_argument);

  CHECK(family_tangle(FamilyParameter(Family::gghz, 5, 0.3)).value() ==
        doctest::Approx(std::sin(0.6) * std::sin(0.6)));
  CHECK(family_tangle(FamilyParameter(Family::ms, 4, 0.3)).has_value());
  CHECK_FALSE(family_tangle(FamilyParameter(Family::ms, 5, 0.3)).has_value());
  CHECK(family_tangle(FamilyParameter(Family::ms, 3, 0.3)).has_value());
}
