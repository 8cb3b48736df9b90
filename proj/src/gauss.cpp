#include "landen/gauss.hpp"

#include <algorithm>
#include <cmath>

namespace landen {

namespace {

using Cx = std::complex<double>;

ModulusParameter as_double(const QuadModulus& m) { return ModulusParameter(m); }

// Term at u + i step (j - 1) K' / p. A shift of exactly iK' uses the
// half-period identities, since sn, cn and dn all have poles there.
Cx term(MinorKind kind, double u, int j, int step, const GaussData& g) {
  const int n = g.p.value();
  const ModulusParameter m = as_double(g.m);
  if (step * (j - 1) == n) {
    const auto t = jacobi_real(u, m);
    const double k = m.k();
    switch (kind) {
      case MinorKind::dc: return k * t.cn / t.dn;
      case MinorKind::nc: return Cx(0, k * t.sn / t.dn);
      case MinorKind::sc: return Cx(0, 1 / t.dn);
      default: break;
    }
  }
  const double im = step * (j - 1) * to_double(g.K_prime) / n;
  return jacobi_minor_complex(kind, {u, im}, m);
}

}  // namespace

const char* to_string(GaussKind k) {
  switch (k) {
    case GaussKind::dc: return "dc";
    case GaussKind::nc: return "nc";
    case GaussKind::sc: return "sc";
  }
  return "?";
}

const char* to_string(GaussFormula f) {
  switch (f) {
    case GaussFormula::dc_sum: return "dc_sum";
    case GaussFormula::nc_sum: return "nc_sum";
    case GaussFormula::sc_sum: return "sc_sum";
    case GaussFormula::nc_alternating: return "nc_alternating";
    case GaussFormula::sc_product: return "sc_product";
  }
  return "?";
}

QuadModulus landen_m_tilde(Order p, const QuadModulus& m) {
  return make_transform_data(p, m).m_tilde;
}

QuadModulus gauss_m_tilde(Order p, const QuadModulus& m) {
  if (m.m() == 0) throw DomainError("K'(m) diverges at m = 0");
  return landen_m_tilde(p, m.complementary()).complementary();
}

GaussData make_gauss_data(Order p, const QuadModulus& m) {
  if (m.m() == 0) throw DomainError("K'(m) diverges at m = 0");
  GaussData g;
  g.p = p;
  g.m = m;
  g.complement = make_transform_data(p, m.complementary());
  g.K_prime = g.complement.ke.K;
  g.beta = g.complement.alpha;
  g.beta1 = g.complement.alpha1;
  g.beta2 = g.complement.alpha2;
  g.B0 = g.complement.A0;
  g.m_tilde = g.complement.m_tilde.complementary();
  return g;
}

std::complex<double> gauss_formula(GaussFormula f, const GaussData& g, double x) {
  const int n = g.p.value();
  const bool odd = g.p.odd();
  if ((f == GaussFormula::nc_sum || f == GaussFormula::sc_sum) && !odd)
    throw ParityError(std::string(to_string(f)) + " needs odd p");
  if ((f == GaussFormula::nc_alternating || f == GaussFormula::sc_product) && odd)
    throw ParityError(std::string(to_string(f)) + " needs even p");
  const double u = to_double(g.beta) * x, beta = to_double(g.beta);
  Cx s = 0;
  switch (f) {
    case GaussFormula::dc_sum:
      for (int j = 1; j <= n; ++j) s += term(MinorKind::dc, u, j, 2, g);
      return beta * s;
    case GaussFormula::nc_sum:
    case GaussFormula::sc_sum: {
      double b1 = to_double(*g.beta1);
      if (!std::isfinite(b1)) throw DomainError("the odd-p normalizer diverges at m = 1");
      MinorKind k = f == GaussFormula::nc_sum ? MinorKind::nc : MinorKind::sc;
      for (int j = 1; j <= n; ++j) s += term(k, u, j, 4, g);
      return b1 * s;
    }
    case GaussFormula::nc_alternating: {
      double b2 = to_double(*g.beta2);
      if (!std::isfinite(b2)) throw DomainError("the even-p normalizer diverges at m = 1");
      for (int j = 1; j <= n; ++j) s += (j % 2 ? 1.0 : -1.0) * term(MinorKind::dc, u, j, 2, g);
      return b2 * s;
    }
    case GaussFormula::sc_product: {
      Cx prod = 1;
      for (int j = 1; j <= n; ++j) prod *= term(MinorKind::sc, u, j, 2, g);
      return std::pow(Cx(0, -1), n - 1) * prod / (beta * to_double(*g.B0));
    }
  }
  return 0;
}

std::complex<double> gauss_sum(GaussKind kind, const GaussData& g, double x) {
  switch (kind) {
    case GaussKind::dc: return gauss_formula(GaussFormula::dc_sum, g, x);
    case GaussKind::nc:
      return gauss_formula(g.p.odd() ? GaussFormula::nc_sum : GaussFormula::nc_alternating, g, x);
    case GaussKind::sc:
      return gauss_formula(g.p.odd() ? GaussFormula::sc_sum : GaussFormula::sc_product, g, x);
  }
  return 0;
}

std::complex<double> gauss_sum(GaussKind kind, Order p, const QuadModulus& m, double x) {
  return gauss_sum(kind, make_gauss_data(p, m), x);
}

double gauss_target(GaussKind kind, const GaussData& g, double x) {
  MinorKind k = kind == GaussKind::dc ? MinorKind::dc : kind == GaussKind::nc ? MinorKind::nc : MinorKind::sc;
  return jacobi_minor(k, x, as_double(g.m_tilde));
}

double gauss_term_magnitude(GaussKind kind, const GaussData& g, double x) {
  const int step = (kind != GaussKind::dc && g.p.odd()) ? 4 : 2;
  // even p: nc goes through dc terms
  MinorKind k = kind == GaussKind::sc ? MinorKind::sc
                : kind == GaussKind::nc && g.p.odd() ? MinorKind::nc
                                                     : MinorKind::dc;
  const double u = to_double(g.beta) * x;
  double worst = 0;
  for (int j = 1; j <= g.p.value(); ++j) {
    try {
      worst = std::max(worst, std::abs(term(k, u, j, step, g)));
    } catch (const PoleError&) {
      return INFINITY;
    }
  }
  return worst;
}

ResidualReport verify_gauss_landen_inverse(Order p, const QuadModulus& m) {
  ResidualReport rep;
  rep.id = "gauss_landen_inverse";
  rep.add_param("p", p.value());
  rep.add_param("m", to_double(m.m()));
  rep.tolerance = 1e-10;
  QuadModulus lg = gauss_m_tilde(p, landen_m_tilde(p, m));
  QuadModulus gl = landen_m_tilde(p, gauss_m_tilde(p, m));
  double r1 = deviation(lg.m(), m.m()), r2 = deviation(gl.m(), m.m());
  rep.record(r1);
  rep.record(r2);
  rep.readings.push_back({"gauss(landen(m))", r1, r1 <= rep.tolerance});
  rep.readings.push_back({"landen(gauss(m))", r2, r2 <= rep.tolerance});
  rep.finish();
  return rep;
}

ResidualReport verify_gauss_formula(GaussKind kind, Order p, const QuadModulus& m,
                                    std::span<const double> xs) {
  ResidualReport rep;
  rep.id = std::string("gauss_") + to_string(kind);
  rep.add_param("p", p.value());
  rep.add_param("m", to_double(m.m()));
  rep.tolerance = 1e-9;
  GaussData g = make_gauss_data(p, m);
  const bool product = kind == GaussKind::sc && p.even();
  double imag = 0, printed = 0;
  for (double x : xs) {
    try {
      if (gauss_term_magnitude(kind, g, x) > 1e8) {
        ++rep.pole_skips;
        continue;
      }
      Cx v = gauss_sum(kind, g, x);
      double t = gauss_target(kind, g, x);
      rep.record(deviation(v.real(), t));
      imag = std::max(imag, deviation(v.imag(), 0.0));
      if (product)
        printed = std::max(printed, deviation(v.real(), gauss_target(kind, g, to_double(g.beta) * x)));
    } catch (const PoleError&) {
      ++rep.pole_skips;
    }
  }
  double real_part = rep.max_residual;
  rep.readings.push_back({"imaginary part", imag, imag <= 1e-10});
  if (product) {
    rep.readings.push_back({"sc(x, m~) on the left", real_part, real_part <= rep.tolerance});
    rep.readings.push_back({"sc(beta x, m~) on the left (as printed)", printed, printed <= rep.tolerance});
    rep.resolved = real_part <= rep.tolerance ? rep.readings[1].label : "";
  }
  rep.finish();
  if (rep.status == Status::pass && imag > 1e-10) rep.status = Status::fail;
  return rep;
}

}  // namespace landen
