#include "svet/svetlichny.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace svet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kImagResidueTol = 1e-9;

// 2^k as an exact double.
double pow2(int k) { return std::ldexp(1.0, k); }

void check_pair(const StateVector& state, const MeasurementSettings& settings) {
  if (settings.num_qubits() != state.num_qubits()) {
    throw std::invalid_argument("settings/state qubit count mismatch");
  }
}

void check_bound_args(int num_qubits, double alpha) {
  if (num_qubits < 3) {
    throw std::invalid_argument("bound defined for N >= 3");
  }
  if (!(alpha >= 0.0 && alpha <= kPi / 2.0)) {
    throw std::invalid_argument("alpha outside [0, pi/2]");
  }
}

// c1 = cos^2 a + (-1)^N sin^2 a; equal to cos 2a for odd N and 1 for even N.
double coeff_c1(int num_qubits, double alpha) {
  const double c = std::cos(alpha), s = std::sin(alpha);
  return num_qubits % 2 == 0 ? c * c + s * s : c * c - s * s;
}

double coeff_c2(double alpha) { return std::sin(2.0 * alpha); }

int bit_of(unsigned long long x, int num_qubits, int qubit_index) {
  return static_cast<int>((x >> (num_qubits - qubit_index)) & 1ULL);
}

// Shared table layout for the angle sums: per qubit the cos/sin of both
// thetas and both phis, indexed [qubit][setting].
struct AngleTables {
  std::vector<std::array<double, 2>> cos_theta;
  std::vector<std::array<double, 2>> sin_theta;
  std::vector<std::array<double, 2>> phi;

  explicit AngleTables(const MeasurementSettings& settings) {
    const int n = settings.num_qubits();
    cos_theta.resize(n);
    sin_theta.resize(n);
    phi.resize(n);
    for (int i = 0; i < n; ++i) {
      const QubitSettings& q = settings.qubit(i + 1);
      for (int l = 0; l < 2; ++l) {
        cos_theta[i][l] = std::cos(q.get(l).theta);
        sin_theta[i][l] = std::sin(q.get(l).theta);
        phi[i][l] = q.get(l).phi;
      }
    }
  }
};

}  // namespace

const char* to_string(Variant variant) {
  return variant == Variant::plus ? "plus" : "minus";
}

MeasurementSettings::MeasurementSettings(std::vector<QubitSettings> qubits)
    : qubits_(std::move(qubits)) {
  if (qubits_.empty()) {
    throw std::invalid_argument("MeasurementSettings: no qubits");
  }
}

const QubitSettings& MeasurementSettings::qubit(int index) const {
  if (index < 1 || index > num_qubits()) {
    throw std::out_of_range("MeasurementSettings: qubit index out of range");
  }
  return qubits_[index - 1];
}

QubitSettings& MeasurementSettings::qubit(int index) {
  if (index < 1 || index > num_qubits()) {
    throw std::out_of_range("MeasurementSettings: qubit index out of range");
  }
  return qubits_[index - 1];
}

int nu(unsigned weight, Variant variant) {
  // (-1)^{w(w +- 1)/2} repeats with period 4; the residues give the signs
  // (+ - - +) for plus and (+ + - -) for minus.
  static constexpr int plus_signs[4] = {1, -1, -1, 1};
  static constexpr int minus_signs[4] = {1, 1, -1, -1};
  const unsigned r = weight % 4;
  return variant == Variant::plus ? plus_signs[r] : minus_signs[r];
}

double lhv_bound(int num_qubits) {
  if (num_qubits < 2) throw std::invalid_argument("lhv_bound: N >= 2");
  return pow2(num_qubits - 1);
}

double algebraic_cap(int num_qubits) {
  if (num_qubits < 2) throw std::invalid_argument("algebraic_cap: N >= 2");
  return kSqrt2 * pow2(num_qubits - 1);
}

double expectation_bruteforce(const StateVector& state,
                              const MeasurementSettings& settings,
                              Variant variant) {
  check_pair(state, settings);
  const int n = state.num_qubits();
  if (n > 16) {
    throw std::invalid_argument("expectation_bruteforce: N > 16");
  }
  std::vector<std::array<SingleQubitOperator, 2>> ops(n);
  for (int i = 0; i < n; ++i) {
    ops[i][0] = bloch_operator(settings.qubit(i + 1).setting0);
    ops[i][1] = bloch_operator(settings.qubit(i + 1).setting1);
  }
  const unsigned long long count = 1ULL << n;
  std::vector<Complex> work;
  double total = 0.0;
  for (unsigned long long x = 0; x < count; ++x) {
    work = state.amplitudes();
    for (int i = 1; i <= n; ++i) {
      apply_single_qubit_inplace(work, n, i, ops[i - 1][bit_of(x, n, i)]);
    }
    Complex corr{0, 0};
    for (std::size_t k = 0; k < work.size(); ++k) {
      corr += std::conj(state[k]) * work[k];
    }
    if (std::abs(corr.imag()) > kImagResidueTol) {
      throw std::runtime_error(
          "expectation_bruteforce: correlator imaginary residue above 1e-9");
    }
    total += nu(static_cast<unsigned>(std::popcount(x)), variant) * corr.real();
  }
  return total;
}

double expectation_fast(const StateVector& state,
                        const MeasurementSettings& settings, Variant variant) {
  check_pair(state, settings);
  const int n = state.num_qubits();
  std::vector<Complex> work = state.amplitudes();
  for (int i = 1; i <= n; ++i) {
    const QubitSettings& q = settings.qubit(i);
    const SingleQubitOperator a0 = bloch_operator(q.setting0);
    const SingleQubitOperator a1 = bloch_operator(q.setting1);
    SingleQubitOperator m;
    for (int e = 0; e < 4; ++e) {
      m.entries[e] = a0.entries[e] + Complex{0, 1} * a1.entries[e];
    }
    apply_single_qubit_inplace(work, n, i, m);
  }
  Complex t{0, 0};
  for (std::size_t k = 0; k < work.size(); ++k) {
    t += std::conj(state[k]) * work[k];
  }
  // Re[(1 + i) t] = Re t - Im t; Re[(1 - i) t] = Re t + Im t.
  return variant == Variant::plus ? t.real() - t.imag() : t.real() + t.imag();
}

double svetlichny_f(const MeasurementSettings& settings, Variant variant) {
  const int n = settings.num_qubits();
  const AngleTables tab(settings);
  const unsigned long long count = 1ULL << n;
  double total = 0.0;
  for (unsigned long long x = 0; x < count; ++x) {
    double prod = 1.0;
    for (int i = 0; i < n; ++i) {
      prod *= tab.cos_theta[i][bit_of(x, n, i + 1)];
    }
    total += nu(static_cast<unsigned>(std::popcount(x)), variant) * prod;
  }
  return total;
}

double svetlichny_g(const MeasurementSettings& settings, Variant variant,
                    double phase_offset) {
  const int n = settings.num_qubits();
  const AngleTables tab(settings);
  const unsigned long long count = 1ULL << n;
  double total = 0.0;
  for (unsigned long long x = 0; x < count; ++x) {
    double prod = 1.0;
    double phase = phase_offset;
    for (int i = 0; i < n; ++i) {
      const int b = bit_of(x, n, i + 1);
      prod *= tab.sin_theta[i][b];
      phase += tab.phi[i][b];
    }
    total += nu(static_cast<unsigned>(std::popcount(x)), variant) *
             std::cos(phase) * prod;
  }
  return total;
}

double gghz_expectation_closed(int num_qubits, double alpha,
                               const MeasurementSettings& settings,
                               Variant variant) {
  if (settings.num_qubits() != num_qubits) {
    throw std::invalid_argument("settings qubit count mismatch");
  }
  if (num_qubits < 2) {
    throw std::invalid_argument("gghz_expectation_closed: N >= 2");
  }
  return coeff_c1(num_qubits, alpha) * svetlichny_f(settings, variant) +
         coeff_c2(alpha) * svetlichny_g(settings, variant);
}

double gghz_gradient_theta(int num_qubits, double alpha,
                           const MeasurementSettings& settings, Variant variant,
                           int qubit_index, int setting) {
  if (settings.num_qubits() != num_qubits) {
    throw std::invalid_argument("settings qubit count mismatch");
  }
  if (qubit_index < 1 || qubit_index > num_qubits) {
    throw std::out_of_range("gghz_gradient_theta: qubit index out of range");
  }
  if (setting != 0 && setting != 1) {
    throw std::invalid_argument("gghz_gradient_theta: setting must be 0 or 1");
  }
  const int n = num_qubits;
  const AngleTables tab(settings);
  const unsigned long long count = 1ULL << n;
  double f_part = 0.0, g_part = 0.0;
  for (unsigned long long x = 0; x < count; ++x) {
    if (bit_of(x, n, qubit_index) != setting) continue;
    const int sign = nu(static_cast<unsigned>(std::popcount(x)), variant);
    double cos_prod = 1.0, sin_prod = 1.0, phase = 0.0;
    for (int i = 0; i < n; ++i) {
      const int b = bit_of(x, n, i + 1);
      phase += tab.phi[i][b];
      if (i + 1 == qubit_index) continue;
      cos_prod *= tab.cos_theta[i][b];
      sin_prod *= tab.sin_theta[i][b];
    }
    f_part += sign * cos_prod;
    g_part += sign * std::cos(phase) * sin_prod;
  }
  const double theta = settings.qubit(qubit_index).get(setting).theta;
  return -coeff_c1(n, alpha) * std::sin(theta) * f_part +
         coeff_c2(alpha) * std::cos(theta) * g_part;
}

double fmax(int num_qubits) {
  if (num_qubits < 2) throw std::invalid_argument("fmax: N >= 2");
  return num_qubits % 2 == 1 ? pow2((num_qubits + 1) / 2)
                             : pow2(num_qubits / 2);
}

double gmax(int num_qubits) {
  if (num_qubits < 2) throw std::invalid_argument("gmax: N >= 2");
  return kSqrt2 * pow2(num_qubits - 1);
}

double gghz_bound_alpha(int num_qubits, double alpha) {
  check_bound_args(num_qubits, alpha);
  const double product_branch =
      std::abs(coeff_c1(num_qubits, alpha)) * fmax(num_qubits);
  const double ghz_branch = coeff_c2(alpha) * gmax(num_qubits);
  return std::max(product_branch, ghz_branch);
}

double gghz_bound_tangle(int num_qubits, double tau) {
  if (num_qubits < 3) {
    throw std::invalid_argument("gghz_bound_tangle: N >= 3");
  }
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw std::invalid_argument("gghz_bound_tangle: tau outside [0, 1]");
  }
  const double product_branch = num_qubits % 2 == 1
                                    ? pow2((num_qubits + 1) / 2) * std::sqrt(1.0 - tau)
                                    : pow2(num_qubits / 2);
  const double ghz_branch = pow2(num_qubits - 1) * std::sqrt(2.0 * tau);
  return std::max(product_branch, ghz_branch);
}

double ms_bound(int num_qubits, double alpha) {
  check_bound_args(num_qubits, alpha);
  const double s = std::sin(alpha);
  return pow2(num_qubits - 1) * std::sqrt(1.0 + s * s);
}

MeasurementSettings optimal_settings_gghz(int num_qubits, double alpha,
                                          Variant variant) {
  check_bound_args(num_qubits, alpha);
  const double product_branch =
      std::abs(coeff_c1(num_qubits, alpha)) * fmax(num_qubits);
  const double ghz_branch = coeff_c2(alpha) * gmax(num_qubits);

  if (product_branch >= ghz_branch) {
    // All-Z settings. With every theta at 0 the weight-alternating sum can
    // cancel for some N, so scan the four 0/pi choices for qubit 1 and keep
    // the one with the largest |F|.
    std::vector<QubitSettings> qubits(num_qubits);
    for (auto& q : qubits) {
      q.setting0 = BlochDirection(0.0, 0.0);
      q.setting1 = BlochDirection(0.0, 0.0);
    }
    MeasurementSettings best;
    double best_f = -1.0;
    for (int pattern = 0; pattern < 4; ++pattern) {
      qubits[0].setting0 = BlochDirection(pattern & 1 ? kPi : 0.0, 0.0);
      qubits[0].setting1 = BlochDirection(pattern & 2 ? kPi : 0.0, 0.0);
      MeasurementSettings candidate(qubits);
      const double f = std::abs(svetlichny_f(candidate, variant));
      if (f > best_f) {
        best_f = f;
        best = candidate;
      }
    }
    return best;
  }

  // GHZ branch: every theta pi/2, phases stepping by pi/2 from setting 0 to
  // setting 1 on every qubit, with the anchor phi_1^0 = +-pi/4 chosen so
  // cos(sum phi) reproduces nu(x)/sqrt(2) term by term.
  const double anchor = variant == Variant::plus ? kPi / 4.0 : -kPi / 4.0;
  std::vector<QubitSettings> qubits(num_qubits);
  for (int i = 0; i < num_qubits; ++i) {
    const double base = i == 0 ? anchor : 0.0;
    qubits[i].setting0 = BlochDirection::canonical(kPi / 2.0, base);
    qubits[i].setting1 = BlochDirection::canonical(kPi / 2.0, base + kPi / 2.0);
  }
  return MeasurementSettings(std::move(qubits));
}

IsolationCoefficients isolation_coefficients(
    int num_qubits, double alpha, const MeasurementSettings& sub_settings,
    const std::array<double, 2>& phi_second_last,
    const std::array<double, 2>& phi_last, Variant variant) {
  if (num_qubits < 4) {
    throw std::invalid_argument("isolation_coefficients: N >= 4");
  }
  if (sub_settings.num_qubits() != num_qubits - 2) {
    throw std::invalid_argument(
        "isolation_coefficients: sub settings must cover N - 2 qubits");
  }
  const double c1 = coeff_c1(num_qubits, alpha);
  const double c2 = coeff_c2(alpha);
  const Variant other =
      variant == Variant::plus ? Variant::minus : Variant::plus;

  // Shifting the Hamming weight by the bits of the isolated qubits maps the
  // sub-sums into each other: nu_+(w+1) = -nu_-(w), nu_-(w+1) = +nu_+(w),
  // nu(w+2) = -nu(w). The mixed blocks therefore carry the opposite variant
  // and a sign that depends on the variant.
  const double mixed_sign = variant == Variant::plus ? -1.0 : 1.0;

  const double f_same = svetlichny_f(sub_settings, variant);
  const double f_other = svetlichny_f(sub_settings, other);
  auto g_same = [&](int i, int j) {
    return svetlichny_g(sub_settings, variant, phi_second_last[i] + phi_last[j]);
  };
  auto g_other = [&](int i, int j) {
    return svetlichny_g(sub_settings, other, phi_second_last[i] + phi_last[j]);
  };

  IsolationCoefficients coeffs{};
  coeffs.f1 = c1 * f_same;
  coeffs.g1 = c2 * g_same(0, 0);
  coeffs.f2 = mixed_sign * c1 * f_other;
  coeffs.g2 = mixed_sign * c2 * g_other(0, 1);
  coeffs.f3 = mixed_sign * c1 * f_other;
  coeffs.g3 = mixed_sign * c2 * g_other(1, 0);
  coeffs.f4 = -c1 * f_same;
  coeffs.g4 = -c2 * g_same(1, 1);
  return coeffs;
}

double isolation_reconstruct(const IsolationCoefficients& coeffs,
                            const std::array<double, 2>& theta_second_last,
                            const std::array<double, 2>& theta_last) {
  const double c[2] = {std::cos(theta_second_last[0]), std::cos(theta_second_last[1])};
  const double s[2] = {std::sin(theta_second_last[0]), std::sin(theta_second_last[1])};
  const double cn[2] = {std::cos(theta_last[0]), std::cos(theta_last[1])};
  const double sn[2] = {std::sin(theta_last[0]), std::sin(theta_last[1])};
  return coeffs.f1 * c[0] * cn[0] + coeffs.g1 * s[0] * sn[0] +
         coeffs.f2 * c[0] * cn[1] + coeffs.g2 * s[0] * sn[1] +
         coeffs.f3 * c[1] * cn[0] + coeffs.g3 * s[1] * sn[0] +
         coeffs.f4 * c[1] * cn[1] + coeffs.g4 * s[1] * sn[1];
}

HkBounds hk_bounds(int num_qubits, double alpha) {
  if (num_qubits < 4) {
    throw std::invalid_argument("hk_bounds: N >= 4");
  }
  if (!(alpha >= 0.0 && alpha <= kPi / 2.0)) {
    throw std::invalid_argument("alpha outside [0, pi/2]");
  }
  // Largest |f| over sub-settings is |c1| 2^{(N-1)/2} (odd N) or
  // |c1| 2^{(N-2)/2} (even N); largest |g| is c2 sqrt(2) 2^{N-2}. The
  // isolated functions H and K share the branch-wise maximum.
  const double f_peak = std::abs(coeff_c1(num_qubits, alpha)) *
                        (num_qubits % 2 == 1 ? pow2((num_qubits - 1) / 2)
                                             : pow2((num_qubits - 2) / 2));
  const double g_peak = coeff_c2(alpha) * kSqrt2 * pow2(num_qubits - 2);
  const double peak = std::max(f_peak, g_peak);
  return {peak, peak};
}

bool consistency_check(const MeasurementSettings& settings,
                       const IsolationCoefficients& coeffs, double tol) {
  const int n = settings.num_qubits();
  if (n < 2) {
    throw std::invalid_argument("consistency_check: need the last two qubits");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("consistency_check: tol must be positive");
  }
  const QubitSettings& second_last = settings.qubit(n - 1);
  const QubitSettings& last = settings.qubit(n);
  const double f[4] = {coeffs.f1, coeffs.f2, coeffs.f3, coeffs.f4};
  const double g[4] = {coeffs.g1, coeffs.g2, coeffs.g3, coeffs.g4};
  static constexpr int block_i[4] = {0, 0, 1, 1};
  static constexpr int block_j[4] = {0, 1, 0, 1};
  for (int k = 0; k < 4; ++k) {
    const double ti = second_last.get(block_i[k]).theta;
    const double tj = last.get(block_j[k]).theta;
    const double residue =
        f[k] * std::sin(tj) * std::cos(ti) - g[k] * std::sin(ti) * std::cos(tj);
    const double scale = std::max({1.0, std::abs(f[k]), std::abs(g[k])});
    if (std::abs(residue) > tol * scale) return false;
  }
  return true;
}

BoundReport violation_report(const FamilyParameter& p) {
  const double analytic = p.family == Family::gghz
                              ? gghz_bound_alpha(p.num_qubits, p.alpha)
                              : ms_bound(p.num_qubits, p.alpha);
  BoundReport report{
      p,
      Variant::plus,  // both variants share the analytic maximum
      lhv_bound(p.num_qubits),
      algebraic_cap(p.num_qubits),
      analytic,
      std::nullopt,
      family_tangle(p),
      false,
  };
  report.violates = report.analytic_max > report.lhv_bound + 1e-12;
  return report;
}

}  // namespace svet
