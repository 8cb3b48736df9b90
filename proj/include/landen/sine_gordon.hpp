#pragma once

#include <functional>
#include <span>
#include <vector>

#include "landen/landen.hpp"

namespace landen {

enum class SgForm { eq22, eq31, eq36, eq50, eq54 };
const char* to_string(SgForm f);
inline constexpr SgForm all_sg_forms[] = {SgForm::eq22, SgForm::eq31, SgForm::eq36,
                                          SgForm::eq50, SgForm::eq54};

// static: phi_xx = sin phi. traveling: phi_etaeta = -sin phi.
enum class SgBranch { static_field, traveling };

// psi = sin(phi / 2) as a function of x (static) or eta (traveling).
struct FieldProfile {
  SgBranch branch = SgBranch::static_field;
  std::function<Quad(const Quad&)> psi;
  std::function<Quad(const Quad&)> dpsi;
  Quad scale = 1;   // natural argument scale of the profile
  Quad length = 1;  // default sampling interval [0, length]
};

// eta = (x - v t) / sqrt(v^2 - 1), v > 1.
struct TravelingWaveFrame {
  double v;
  explicit TravelingWaveFrame(double speed);
  double eta(double x, double t) const;
};

// p = 1 is accepted for the forms that allow odd p.
FieldProfile build_superposition(SgForm form, int p, const QuadModulus& m);
SgBranch branch_of(SgForm form);

enum class SgFamily { sech, tanh, dn_type, cn_type, sn_type, sn_inverse };
const char* to_string(SgFamily f);

struct IntegrationConstant {
  double C = 0;
  double spread = 0;  // standard deviation, relative once |C| > 1
  SgFamily family = SgFamily::dn_type;
  std::vector<double> values;
};

// 50 points uniform on [0.05 L, 0.95 L].
std::vector<double> default_sg_samples(const FieldProfile& f, int n = 50);

IntegrationConstant compute_C(const FieldProfile& f, std::span<const double> xs);
// Closed forms of C for the superpositions, from the lattice sums.
double closed_form_C(SgForm form, int p, const QuadModulus& m);
// (C + 2)/4 for dn_type and sn_type, 4/(C + 2) for cn_type and sn_inverse.
double infer_m_tilde_from_C(const IntegrationConstant& c, SgFamily branch);
SgFamily inference_family(SgForm form);

// Second differences of the reconstructed phi; step 1e-4 in the natural
// argument.
ResidualReport verify_ode_residual(const FieldProfile& f, std::span<const double> xs);

// ODE residual, C constancy and the m~ inferred from C against the Landen
// parameter, for one form.
ResidualReport verify_superposition(SgForm form, Order p, const QuadModulus& m);

}  // namespace landen
