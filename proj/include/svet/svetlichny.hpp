// Svetlichny operators: expectation engines, closed-form values for the GGHZ
// family, the analytic maxima in alpha and in the tangle, and the two-qubit
// isolation identities used to certify those maxima.
//
// The operator pair is
//   S_N^{+-} = sum_x nu_{+-}(x) A_1^{x(1)} x ... x A_N^{x(N)},
// where x runs over all 2^N choices of one of two dichotomic observables per
// qubit, and nu_{+-}(x) = (-1)^{w(w +- 1)/2} depends only on the Hamming
// weight w of x. Local hidden-variable models obey |<S>| <= 2^{N-1}; quantum
// mechanics caps it at sqrt(2) 2^{N-1}.

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "svet/qcore.hpp"
#include "svet/states.hpp"

namespace svet {

enum class Variant { plus, minus };

const char* to_string(Variant variant);

// One qubit's pair of measurement directions.
struct QubitSettings {
  BlochDirection setting0;
  BlochDirection setting1;

  const BlochDirection& get(int which) const { return which ? setting1 : setting0; }
  BlochDirection& get(int which) { return which ? setting1 : setting0; }
};

// Measurement directions for every qubit, addressed 1-based like the qubits.
class MeasurementSettings {
 public:
  MeasurementSettings() = default;
  explicit MeasurementSettings(std::vector<QubitSettings> qubits);

  int num_qubits() const { return static_cast<int>(qubits_.size()); }
  const QubitSettings& qubit(int index) const;
  QubitSettings& qubit(int index);
  const std::vector<QubitSettings>& qubits() const { return qubits_; }

 private:
  std::vector<QubitSettings> qubits_;
};

// nu_{+-}(w) = (-1)^{w(w +- 1)/2}; periodic in w with period 4.
int nu(unsigned weight, Variant variant);

double lhv_bound(int num_qubits);      // 2^{N-1}
double algebraic_cap(int num_qubits);  // sqrt(2) 2^{N-1}

// <S_N> summed correlator by correlator: 2^N dense terms, each evaluated by
// applying the chosen observable to every qubit. Each correlator must come
// out real; an imaginary residue above 1e-9 aborts. N <= 16.
double expectation_bruteforce(const StateVector& state,
                              const MeasurementSettings& settings,
                              Variant variant);

// Same value through the collapsed form
//   <S_N^{+-}> = Re[(1 +- i) <psi| prod_k (A_k^0 + i A_k^1) |psi>],
// which follows from nu_{+-}(w) = Re[(1 +- i) i^w]. Cost O(N 2^N).
double expectation_fast(const StateVector& state,
                        const MeasurementSettings& settings, Variant variant);

// F_N = sum_x nu(x) prod_i cos(theta_i^{x(i)}).
double svetlichny_f(const MeasurementSettings& settings, Variant variant);

// G_N = sum_x nu(x) cos(phase_offset + sum_i phi_i^{x(i)}) prod_i sin(theta_i^{x(i)}).
// The offset argument serves the two-qubit isolation sums below.
double svetlichny_g(const MeasurementSettings& settings, Variant variant,
                    double phase_offset = 0.0);

// <S_N> on gghz(N, alpha) evaluated directly from the angles:
//   c1 F_N + c2 G_N,  c1 = cos^2 a + (-1)^N sin^2 a,  c2 = sin 2a.
double gghz_expectation_closed(int num_qubits, double alpha,
                               const MeasurementSettings& settings,
                               Variant variant);

// Analytic d<S_N>/d(theta_k^l) on gghz(N, alpha): the closed form above with
// the restricted sums over bit strings having x(k) = l,
//   -c1 sin(theta_k^l) sum_{x(k)=l} nu prod_{i!=k} cos(theta_i)
//   +c2 cos(theta_k^l) sum_{x(k)=l} nu cos(sum phi) prod_{i!=k} sin(theta_i).
double gghz_gradient_theta(int num_qubits, double alpha,
                           const MeasurementSettings& settings, Variant variant,
                           int qubit_index, int setting);

// Settings maxima of the two structure sums: |F_N| peaks at 2^{(N+1)/2} for
// odd N and 2^{N/2} for even N (all-Z settings); |G_N| peaks at sqrt(2) 2^{N-1}.
double fmax(int num_qubits);
double gmax(int num_qubits);

// max |<S_N>| over all settings on gghz(N, alpha), N >= 3:
//   odd N:  2^{(N+1)/2} |cos 2a|   while 2^{N/2} |tan 2a| <= 2, else sqrt(2) 2^{N-1} sin 2a
//   even N: 2^{N/2}                while 2^{N/2} sin 2a <= sqrt(2), else sqrt(2) 2^{N-1} sin 2a
// Both branch expressions are evaluated and the larger returned, which meets
// the branch conditions exactly and is well defined at the crossover.
double gghz_bound_alpha(int num_qubits, double alpha);

// The same maximum as a function of the tangle tau = sin^2 2a:
//   odd N:  2^{(N+1)/2} sqrt(1 - tau)  for tau <= 1/(2^{N-2} + 1), else 2^{N-1} sqrt(2 tau)
//   even N: 2^{N/2}                    for tau <= 2^{1-N},         else 2^{N-1} sqrt(2 tau)
// In particular the value stays at or below 2^{N-1} whenever tau <= 1/2.
double gghz_bound_tangle(int num_qubits, double tau);

// max |<S_N>| over all settings on ms(N, alpha): 2^{N-1} sqrt(1 + sin^2 a).
// In terms of the slice tangle tau = sin^2 a this is 2^{N-1} sqrt(1 + tau).
double ms_bound(int num_qubits, double alpha);

// Settings that attain gghz_bound_alpha(N, alpha) exactly. On the product
// branch every qubit measures along Z, with the 0/pi pattern of qubit 1
// chosen so the weight-alternating sum does not cancel. On the GHZ branch
// every theta is pi/2 and the phases climb by pi/2 between the two settings
// of each qubit, anchored at phi_1^0 = +-pi/4 per variant, which aligns
// cos(sum phi) with nu(x) for every x.
MeasurementSettings optimal_settings_gghz(int num_qubits, double alpha,
                                          Variant variant);

// Coefficients of <S_N> on gghz(N, alpha) after isolating qubits N-1 and N:
//   <S_N> = sum over the four setting blocks (i, j) of
//           f cos(theta_{N-1}^i) cos(theta_N^j) + g sin(theta_{N-1}^i) sin(theta_N^j)
// with f, g built from F and G sums over the first N-2 qubits; the g sums
// carry phi_{N-1}^i + phi_N^j inside the cosine. Requires N >= 4.
struct IsolationCoefficients {
  double f1, f2, f3, f4;
  double g1, g2, g3, g4;
};

IsolationCoefficients isolation_coefficients(
    int num_qubits, double alpha, const MeasurementSettings& sub_settings,
    const std::array<double, 2>& phi_second_last,
    const std::array<double, 2>& phi_last, Variant variant);

// Evaluates the four-block form at the given theta pairs for qubits N-1, N.
double isolation_reconstruct(const IsolationCoefficients& coeffs,
                            const std::array<double, 2>& theta_second_last,
                            const std::array<double, 2>& theta_last);

// Branch-wise maxima of the two isolated single-angle functions; they agree,
// and twice their value reproduces gghz_bound_alpha. Requires N >= 4.
struct HkBounds {
  double max_h;
  double max_k;
};

HkBounds hk_bounds(int num_qubits, double alpha);

// The four stationarity relations tan(theta_N^j) = tan(theta_{N-1}^i) g/f of
// the isolated form, checked in the cross-multiplied shape
//   f sin(theta_N^j) cos(theta_{N-1}^i) = g sin(theta_{N-1}^i) cos(theta_N^j)
// so poles of the tangent are handled without special cases. Residues are
// compared against tol scaled by max(1, |f|, |g|).
bool consistency_check(const MeasurementSettings& settings,
                       const IsolationCoefficients& coeffs, double tol);

// Certified summary for one family state.
struct BoundReport {
  FamilyParameter family;
  Variant variant_best;
  double lhv_bound;
  double algebraic_cap;
  double analytic_max;
  std::optional<double> numeric_max;  // filled by callers that ran the optimizer
  std::optional<double> tangle;       // absent when the family tangle is undefined
  bool violates;
};

// Analytic report: bounds, tangle, and the violation verdict
// analytic_max > lhv_bound + 1e-12. numeric_max is left empty.
BoundReport violation_report(const FamilyParameter& p);

}  // namespace svet
