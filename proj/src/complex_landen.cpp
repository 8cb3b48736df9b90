#include "landen/complex_landen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace landen {

namespace {

using Cx = std::complex<double>;

// norm * sum_j s_j f(lambda x + step (j-1) w / p), or the product when
// product is set.
struct Form {
  FunctionKind base;
  Cx lambda;
  int step;
  Cx norm;
  bool alternate = false;
  bool product = false;
};

constexpr double term_limit = 1e8;

struct Eval {
  Cx value, derivative;
  double largest = 0;
};

Eval evaluate(const Form& f, const ComplexShiftData& d, double x) {
  const int n = d.p.value();
  const double m = d.m.m();
  Eval e;
  Cx sum = 0, dsum = 0, prod = 1, log_deriv = 0;
  for (int j = 1; j <= n; ++j) {
    Cx z = f.lambda * x + Cx(f.step * (j - 1)) * d.w / Cx(n);
    auto t = jacobi_complex({z.real(), z.imag()}, d.m);
    Cx v, dv;
    switch (f.base) {
      case FunctionKind::sn: v = t.sn; dv = t.cn * t.dn; break;
      case FunctionKind::cn: v = t.cn; dv = -t.sn * t.dn; break;
      case FunctionKind::dn: v = t.dn; dv = -m * t.sn * t.cn; break;
    }
    e.largest = std::max({e.largest, std::abs(t.sn), std::abs(t.cn), std::abs(t.dn)});
    double s = f.alternate && j % 2 == 0 ? -1.0 : 1.0;
    sum += s * v;
    dsum += s * dv;
    prod *= v;
    if (f.product) {
      if (std::abs(v) <= pole_guard) throw PoleError("vanishing factor in the product");
      log_deriv += dv / v;
    }
  }
  if (f.product) {
    e.value = f.norm * prod;
    e.derivative = e.value * f.lambda * log_deriv;
  } else {
    e.value = f.norm * sum;
    e.derivative = f.norm * f.lambda * dsum;
  }
  return e;
}

Cx need(const std::optional<Cx>& v, const char* what) {
  if (!v) throw DomainError(std::string(what) + " is undefined at this p (its defining sum vanishes)");
  return *v;
}

Form corrected_form(FunctionKind kind, const ComplexShiftData& d) {
  const double k = d.m.k();
  if (d.p.odd()) {
    Cx d1 = need(d.delta1, "delta1");
    switch (kind) {
      case FunctionKind::cn: return {FunctionKind::cn, d1, 2, d.delta};
      case FunctionKind::dn: return {FunctionKind::dn, d1, 4, d1};
      case FunctionKind::sn: return {FunctionKind::sn, d1, 4, d.delta};
    }
  }
  Cx d2 = need(d.delta2, "delta2");
  switch (kind) {
    case FunctionKind::cn: return {FunctionKind::cn, d2 / k, 2, d.delta};
    case FunctionKind::dn: return {FunctionKind::cn, d2 / k, 2, d2, true};
    case FunctionKind::sn: return {FunctionKind::sn, d2 / k, 2, k / (d2 * *d.D0), false, true};
  }
  return {};
}

Form printed_form(FunctionKind kind, const ComplexShiftData& d) {
  if (kind == FunctionKind::cn)
    return {FunctionKind::cn, need(d.delta1, "delta1"), 2, d.delta};
  if (d.p.even()) return corrected_form(kind, d);
  Cx d1 = need(d.delta1, "delta1"), d2 = need(d.delta2, "delta2");
  if (kind == FunctionKind::dn) return {FunctionKind::dn, d2, 4, d2};
  return {FunctionKind::sn, d2, 4, d1};
}

Form dual_form(FunctionKind kind, const ComplexShiftData& d) {
  const double k = d.m.k();
  Cx kt = std::sqrt(duality_m_tilde(d));
  Cx lambda = d.delta * kt / k;
  switch (kind) {
    case FunctionKind::cn: return {FunctionKind::cn, lambda, 2, d.delta};
    case FunctionKind::dn:
      if (d.p.odd()) return {FunctionKind::dn, lambda, 4, need(d.delta1, "delta1")};
      return {FunctionKind::cn, lambda, 2, need(d.delta2, "delta2"), true};
    case FunctionKind::sn:
      if (d.p.odd()) return {FunctionKind::sn, lambda, 4, need(d.delta1, "delta1") * k / kt};
      return {FunctionKind::sn, lambda, 2, k / (*d.D0 * d.delta * kt), false, true};
  }
  return {};
}

// f'^2 for the target function at parameter mt, given f.
Cx first_integral(FunctionKind kind, Cx f, Cx mt) {
  switch (kind) {
    case FunctionKind::cn: return (1. - f * f) * (1. - mt + mt * f * f);
    case FunctionKind::dn: return (1. - f * f) * (f * f - 1. + mt);
    case FunctionKind::sn: return (1. - f * f) * (1. - mt * f * f);
  }
  return 0;
}

double cdev(Cx v, Cx ref) { return std::abs(v - ref) / std::max(1.0, std::abs(ref)); }

constexpr FunctionKind kinds[] = {FunctionKind::dn, FunctionKind::cn, FunctionKind::sn};

}  // namespace

ComplexShiftData make_complex_shift_data(Order p, const ModulusParameter& m) {
  if (m.m() == 0 || m.complement() == 0)
    throw DomainError("complex shifts need 0 < m < 1");
  ComplexShiftData d;
  d.p = p;
  d.m = m;
  d.K = complete_K(m);
  d.K_prime = complete_K(m.complementary());
  d.w = Cx(d.K, d.K_prime);
  const int n = p.value();
  Cx scn = 0, sdn = 0, salt = 0, d0 = 1;
  for (int j = 0; j < n; ++j) {
    Cx z2 = Cx(2 * j) * d.w / Cx(n), z4 = Cx(4 * j) * d.w / Cx(n);
    auto t2 = jacobi_complex({z2.real(), z2.imag()}, m);
    auto t4 = jacobi_complex({z4.real(), z4.imag()}, m);
    scn += t2.cn;
    salt += (j % 2 ? -1.0 : 1.0) * t2.cn;
    sdn += t4.dn;
    if (j > 0) d0 *= t2.sn;
  }
  if (std::abs(scn) <= pole_guard) throw DomainError("delta normalizing sum vanishes");
  d.delta = 1. / scn;
  if (std::abs(sdn) > pole_guard) d.delta1 = 1. / sdn;
  if (std::abs(salt) > pole_guard) d.delta2 = 1. / salt;
  if (p.odd()) {
    d.m_tilde = m.m() * need(d.delta1, "delta1") * *d.delta1 / (d.delta * d.delta);
  } else {
    d.D0 = d0;
    d.m_tilde = need(d.delta2, "delta2") * *d.delta2 / (d.delta * d.delta);
  }
  return d;
}

std::complex<double> complex_landen_sum(FunctionKind kind, const ComplexShiftData& d, double x) {
  return evaluate(corrected_form(kind, d), d, x).value;
}

std::complex<double> complex_landen_sum(FunctionKind kind, Order p, const ModulusParameter& m,
                                        double x) {
  return complex_landen_sum(kind, make_complex_shift_data(p, m), x);
}

std::complex<double> complex_landen_sum_printed(FunctionKind kind, const ComplexShiftData& d,
                                                double x) {
  return evaluate(printed_form(kind, d), d, x).value;
}

std::complex<double> printed_m_tilde(const ComplexShiftData& d) {
  if (d.p.odd()) {
    Cx d1 = need(d.delta1, "delta1");
    return d1 * d1 / (d.delta * d.delta);
  }
  return d.m_tilde;
}

std::complex<double> duality_m_tilde(const ComplexShiftData& d) {
  // At mu = 1/m: K(mu) = k w and dn(v, mu) = cn(v / k, m), so alpha(mu) = delta.
  const int n = d.p.value();
  Cx s3 = 0;
  for (int j = 0; j < n; ++j) {
    Cx z = Cx(2 * j) * d.w / Cx(n);
    Cx c = jacobi_complex({z.real(), z.imag()}, d.m).cn;
    s3 += c * c * c;
  }
  const Cx a = d.delta;
  Cx mt_mu = (1 / d.m.m() - 2) * a * a + 2. * a * a * a * s3;
  return 1. / mt_mu;
}

std::complex<double> duality_sum(FunctionKind kind, const ComplexShiftData& d, double x) {
  return evaluate(dual_form(kind, d), d, x).value;
}

std::complex<double> classical_m_tilde(const ModulusParameter& m) {
  Cx a(m.k(), -m.k_prime()), b(m.k(), m.k_prime());
  return (a * a) / (b * b);
}

std::complex<double> classical_complex(FunctionKind kind, const ModulusParameter& m, double x) {
  const double k = m.k(), kp = m.k_prime();
  Cx u = x / Cx(k, kp);
  auto t = jacobi_complex({u.real(), u.imag()}, m);
  if (std::abs(t.cn) <= pole_guard) throw PoleError("cn(u) vanishes");
  switch (kind) {
    case FunctionKind::dn: return (1. - k * Cx(k, -kp) * t.sn * t.sn) / t.cn;
    case FunctionKind::cn: return (1. - k * Cx(k, kp) * t.sn * t.sn) / t.cn;
    case FunctionKind::sn: return Cx(k, kp) * t.sn * t.dn / t.cn;
  }
  return 0;
}

ResidualReport verify_complex_p2(const ModulusParameter& m, std::span<const double> xs) {
  ResidualReport rep;
  rep.id = "complex_p2_classical";
  rep.add_param("p", 2);
  rep.add_param("m", m.m());
  rep.tolerance = 1e-10;
  ComplexShiftData d = make_complex_shift_data(Order(2), m);
  rep.record(cdev(d.m_tilde, classical_m_tilde(m)));
  double printed_cn = -1;
  for (double x : xs) {
    for (FunctionKind kind : kinds) {
      try {
        Eval e = evaluate(corrected_form(kind, d), d, x);
        if (e.largest > term_limit) {
          ++rep.pole_skips;
          continue;
        }
        rep.record(cdev(e.value, classical_complex(kind, m, x)));
        if (kind == FunctionKind::cn && d.delta1)
          printed_cn = std::max(printed_cn, cdev(complex_landen_sum_printed(kind, d, x),
                                                  classical_complex(kind, m, x)));
      } catch (const PoleError&) {
        ++rep.pole_skips;
      }
    }
  }
  rep.readings.push_back({"cn argument scale delta2/sqrt(m)", rep.max_residual,
                          rep.max_residual <= rep.tolerance});
  if (printed_cn >= 0)
    rep.readings.push_back({"cn argument scale delta1 (as printed)", printed_cn,
                            printed_cn <= rep.tolerance});
  else
    rep.readings.push_back({"cn argument scale delta1 (as printed): delta1 undefined", INFINITY,
                            false});
  rep.finish();
  if (rep.passed()) rep.resolved = rep.readings[0].label;
  return rep;
}

ResidualReport verify_complex_duality(Order p, const ModulusParameter& m,
                                      std::span<const double> xs) {
  ResidualReport rep;
  rep.id = "complex_duality";
  rep.add_param("p", p.value());
  rep.add_param("m", m.m());
  rep.tolerance = 1e-9;
  ComplexShiftData d = make_complex_shift_data(p, m);
  const Cx mt_dual = duality_m_tilde(d);
  rep.record(cdev(d.m_tilde, mt_dual));
  double printed_mt = -1, printed = -1;
  try {
    printed_mt = cdev(printed_m_tilde(d), mt_dual);
  } catch (const DomainError&) {
  }
  for (double x : xs) {
    for (FunctionKind kind : kinds) {
      try {
        Eval a = evaluate(corrected_form(kind, d), d, x);
        Eval b = evaluate(dual_form(kind, d), d, x);
        if (a.largest > term_limit || b.largest > term_limit) {
          ++rep.pole_skips;
          continue;
        }
        rep.record(cdev(a.value, b.value));
        try {
          printed = std::max(printed, cdev(complex_landen_sum_printed(kind, d, x), b.value));
        } catch (const DomainError&) {
        }
      } catch (const PoleError&) {
        ++rep.pole_skips;
      }
    }
  }
  rep.readings.push_back({"rescaled constants", rep.max_residual, rep.max_residual <= rep.tolerance});
  if (printed >= 0)
    rep.readings.push_back({"constants as printed (forms with defined constants)", printed, printed <= rep.tolerance});
  if (printed_mt >= 0)
    rep.readings.push_back({"m~ as printed", printed_mt, printed_mt <= rep.tolerance});
  rep.finish();
  if (rep.passed()) rep.resolved = rep.readings[0].label;
  return rep;
}

ResidualReport verify_complex_first_integral(Order p, const ModulusParameter& m,
                                             std::span<const double> xs) {
  ResidualReport rep;
  rep.id = "complex_first_integral";
  rep.add_param("p", p.value());
  rep.add_param("m", m.m());
  rep.tolerance = 1e-9;
  ComplexShiftData d = make_complex_shift_data(p, m);
  for (double x : xs) {
    for (FunctionKind kind : kinds) {
      try {
        Eval e = evaluate(corrected_form(kind, d), d, x);
        if (e.largest > term_limit) {
          ++rep.pole_skips;
          continue;
        }
        Cx rhs = first_integral(kind, e.value, d.m_tilde);
        rep.record(cdev(e.derivative * e.derivative, rhs));
      } catch (const PoleError&) {
        ++rep.pole_skips;
      }
    }
  }
  rep.finish();
  return rep;
}

}  // namespace landen
