#pragma once

#include <complex>
#include <optional>
#include <span>

#include "landen/landen.hpp"

namespace landen {

// Constants for shifts in units of w = K(m) + iK'(m).
struct ComplexShiftData {
  Order p{2};
  ModulusParameter m;
  double K = 0, K_prime = 0;
  std::complex<double> w;
  std::complex<double> delta;
  // Unset when the defining sum vanishes (delta1 at even p).
  std::optional<std::complex<double>> delta1, delta2;
  std::optional<std::complex<double>> D0;  // even p
  // m delta1^2 / delta^2 (odd p), delta2^2 / delta^2 (even p); complex in general.
  std::complex<double> m_tilde;
};

ComplexShiftData make_complex_shift_data(Order p, const ModulusParameter& m);

// Sum or product over the complex lattice. dn and sn use the parity-specific
// forms; cn is valid for any p.
std::complex<double> complex_landen_sum(FunctionKind kind, const ComplexShiftData& d, double x);
std::complex<double> complex_landen_sum(FunctionKind kind, Order p, const ModulusParameter& m,
                                        double x);
// Constants and argument scales exactly as printed.
std::complex<double> complex_landen_sum_printed(FunctionKind kind, const ComplexShiftData& d,
                                                double x);
std::complex<double> printed_m_tilde(const ComplexShiftData& d);

// Transformed parameter reached through m -> 1/m applied to the real-shift
// formulas: 1 / m~(1/m).
std::complex<double> duality_m_tilde(const ComplexShiftData& d);
// The same function of (x, m~) rebuilt through the duality route.
std::complex<double> duality_sum(FunctionKind kind, const ComplexShiftData& d, double x);

// (k - ik')^2 / (k + ik')^2
std::complex<double> classical_m_tilde(const ModulusParameter& m);
// The p = 2 closed forms with u = x / (k + ik').
std::complex<double> classical_complex(FunctionKind kind, const ModulusParameter& m, double x);

ResidualReport verify_complex_p2(const ModulusParameter& m, std::span<const double> xs);
ResidualReport verify_complex_duality(Order p, const ModulusParameter& m,
                                      std::span<const double> xs);
// f'^2 against the first-order equation of the function at m~.
ResidualReport verify_complex_first_integral(Order p, const ModulusParameter& m,
                                             std::span<const double> xs);

}  // namespace landen
