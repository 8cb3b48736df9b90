#pragma once

#include <complex>
#include <optional>
#include <span>

#include "landen/landen.hpp"

namespace landen {

// Constants for shifts along the imaginary axis. They are the Landen
// constants at the complementary parameter 1 - m.
struct GaussData {
  Order p{2};
  QuadModulus m;
  Quad K_prime;
  Quad beta;
  std::optional<Quad> beta1;  // odd p
  std::optional<Quad> beta2;  // even p
  std::optional<Quad> B0;     // even p
  QuadModulus m_tilde;
  TransformData complement;  // Landen data at 1 - m
};

GaussData make_gauss_data(Order p, const QuadModulus& m);

enum class GaussKind { dc, nc, sc };
const char* to_string(GaussKind k);

// dc: any p. nc, sc: odd p sums; even p uses the alternating dc sum and the
// sc product.
enum class GaussFormula { dc_sum, nc_sum, sc_sum, nc_alternating, sc_product };
const char* to_string(GaussFormula f);

std::complex<double> gauss_formula(GaussFormula f, const GaussData& g, double x);
std::complex<double> gauss_sum(GaussKind kind, const GaussData& g, double x);
std::complex<double> gauss_sum(GaussKind kind, Order p, const QuadModulus& m, double x);
// Minor function of (x, m~) from the real-argument core.
double gauss_target(GaussKind kind, const GaussData& g, double x);
// Largest magnitude among the terms of the sum or product at x.
double gauss_term_magnitude(GaussKind kind, const GaussData& g, double x);

// Transformed parameters of the two families at an arbitrary order.
QuadModulus landen_m_tilde(Order p, const QuadModulus& m);
QuadModulus gauss_m_tilde(Order p, const QuadModulus& m);

ResidualReport verify_gauss_landen_inverse(Order p, const QuadModulus& m);
// Formula check against the core at m~ over the given samples; the even-p
// sc product also reports the reading with sc(beta x, m~) on the left.
ResidualReport verify_gauss_formula(GaussKind kind, Order p, const QuadModulus& m,
                                    std::span<const double> xs);

}  // namespace landen
