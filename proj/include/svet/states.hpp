// The two state families under study and their entanglement measures.

#pragma once

#include <optional>

#include "svet/qcore.hpp"

namespace svet {

enum class Family { gghz, ms };

const char* to_string(Family family);

// Parameter triple selecting one state from either family.
struct FamilyParameter {
  Family family;
  int num_qubits;
  double alpha;  // radians, in [0, pi/2]

  FamilyParameter(Family family_in, int num_qubits_in, double alpha_in);
};

// Generalized GHZ state cos(a)|0...0> + sin(a)|1...1>, N >= 2.
StateVector gghz(int num_qubits, double alpha);

// Maximal-slice state
//   (1/sqrt(2)) [ |0...0> + |1...1>(cos(a)|0> + sin(a)|1>) ],
// i.e. amplitude 1/sqrt(2) at index 0, cos(a)/sqrt(2) at 2^N - 2 and
// sin(a)/sqrt(2) at 2^N - 1. N >= 3.
StateVector ms(int num_qubits, double alpha);

StateVector make_state(const FamilyParameter& p);

// n-tangle |<psi|sigma_y^(xN)|psi*>|^2 for even N; for N = 3 the residual
// three-tangle (Cayley hyperdeterminant). Undefined, hence rejected, for
// odd N > 3.
double n_tangle_even(const StateVector& state);

// sin^2(2a): tangle of gghz(N, a) as a function of the parameter, used for
// every N including odd N.
double gghz_tangle(double alpha);

// sin^2(a): tangle of ms(N, a); defined for N = 3 and even N.
double ms_tangle(int num_qubits, double alpha);

// Tangle of a family state when it is defined (MS with odd N > 3 has none).
std::optional<double> family_tangle(const FamilyParameter& p);

}  // namespace svet
