#include "landen/landen.hpp"

#include <cmath>
#include <limits>

namespace landen {

const char* to_string(FunctionKind k) {
  switch (k) {
    case FunctionKind::dn: return "dn";
    case FunctionKind::cn: return "cn";
    case FunctionKind::sn: return "sn";
  }
  return "?";
}

ShiftLattice make_shift_lattice(LatticeKind kind, Order p, const QuadModulus& m) {
  ShiftLattice l{kind, p.value(), m, {}};
  Quad K = complete_K(m);
  Quad step = (kind == LatticeKind::real_2K ? 2 : 4) * K / p.value();
  for (int j = 0; j < p.value(); ++j) l.points.push_back(step * j);
  return l;
}

Quad TransformData::step(LatticeKind kind) const {
  return (kind == LatticeKind::real_2K ? 2 : 4) * ke.K / p.value();
}

Quad TransformData::point(LatticeKind kind, long j, const Quad& x) const {
  return alpha * x + step(kind) * (j - 1);
}

TransformData make_transform_data(Order p, const QuadModulus& m) {
  using std::pow;
  if (m.complement() == 0) throw DomainError("K(m) diverges at m = 1; transforms need m < 1");
  TransformData td;
  td.p = p;
  td.m = m;
  td.ke = complete_integrals(m);
  const int n = p.value();
  const Quad inf = std::numeric_limits<Quad>::infinity();
  if (m.m() == 0) {
    td.alpha = Quad(1) / n;
    if (p.odd()) {
      td.alpha1 = inf;
    } else {
      td.alpha2 = inf;
      td.A0 = Quad(n) / pow(Quad(2), n - 1);
    }
    td.m_tilde = QuadModulus(Quad(0));
    return td;
  }
  Quad sdn = 0, sdn3 = 0, scn = 0, salt = 0, a0 = 1;
  for (int j = 0; j < n; ++j) {
    auto t2 = jacobi_real(2 * td.ke.K * j / n, m);
    auto t4 = jacobi_real(4 * td.ke.K * j / n, m);
    sdn += t2.dn;
    sdn3 += t2.dn * t2.dn * t2.dn;
    scn += t4.cn;
    salt += (j % 2 ? -1 : 1) * t2.dn;
    if (j > 0) a0 *= t2.sn;
  }
  td.alpha = 1 / sdn;
  if (p.odd()) {
    td.alpha1 = 1 / scn;
  } else {
    td.alpha2 = 1 / salt;
    td.A0 = a0;
  }
  const Quad& a = td.alpha;
  Quad mt = (m.m() - 2) * a * a + 2 * a * a * a * sdn3;
  if (mt < 0) mt = 0;
  td.m_tilde = QuadModulus(mt);
  return td;
}

ClosedFormAux closed_form_aux(const QuadModulus& m) {
  using std::sqrt;
  ClosedFormAux aux;
  if (m.complement() == 0) throw DomainError("K(m) diverges at m = 1");
  aux.q = jacobi_real(2 * complete_K(m) / 3, m).dn;
  aux.t = sqrt(sqrt(m.complement()));
  return aux;
}

Quad m_tilde_closed_form(Order p, const QuadModulus& m) {
  switch (p.value()) {
    case 2: {
      Quad kp = m.k_prime();
      Quad r = (1 - kp) / (1 + kp);
      return r * r;
    }
    case 3: {
      Quad q = closed_form_aux(m).q;
      Quad d = (1 + q) * (1 + 2 * q);
      return m.m() * (1 - q) * (1 - q) / (d * d);
    }
    case 4: {
      Quad t = closed_form_aux(m).t;
      Quad r = (1 - t) / (1 + t);
      return r * r * r * r;
    }
    default:
      throw UnsupportedOrder("closed-form m~ is only available for p = 2, 3, 4");
  }
}

MTildeAliases m_tilde_aliases(const TransformData& td) {
  using std::pow;
  MTildeAliases r;
  r.m_tilde = td.m_tilde.m();
  const int n = td.p.value();
  const Quad& m = td.m.m();
  const Quad& a = td.alpha;
  if (m == 0) return r;
  if (td.p.odd()) {
    Quad a1 = *td.alpha1, scn3 = 0;
    for (int j = 0; j < n; ++j) {
      Quad c = jacobi_real(td.step(LatticeKind::real_4K) * j, td.m).cn;
      scn3 += c * c * c;
    }
    r.m1 = m / (a1 * a1 * ((1 - 2 * m) + 2 * m * a1 * scn3));
    r.m3 = m * a * a / (a1 * a1);
  } else {
    Quad a2 = *td.alpha2, sdn3 = 0;
    for (int j = 0; j < n; ++j) {
      Quad d = jacobi_real(td.step(LatticeKind::real_2K) * j, td.m).dn;
      sdn3 += (j % 2 ? -1 : 1) * d * d * d;
    }
    r.m2 = 1 / (a2 * a2 * ((m - 2) + 2 * a2 * sdn3));
    Quad A0 = *td.A0;
    r.m4 = pow(m, n) * a * a * a * a * A0 * A0 * A0 * A0;
  }
  return r;
}

namespace {

void require_interior(const TransformData& td, FunctionKind kind) {
  if (td.m.m() == 0 && kind != FunctionKind::dn)
    throw DomainError("the cn/sn normalizer diverges at m = 0");
}

}  // namespace

Quad landen_sum(FunctionKind kind, const TransformData& td, const Quad& x) {
  const int n = td.p.value();
  Quad s = 0;
  if (kind == FunctionKind::dn) {
    for (int j = 1; j <= n; ++j) s += jacobi_real(td.point(LatticeKind::real_2K, j, x), td.m).dn;
    return td.alpha * s;
  }
  require_interior(td, kind);
  if (td.p.odd()) {
    for (int j = 1; j <= n; ++j) {
      auto t = jacobi_real(td.point(LatticeKind::real_4K, j, x), td.m);
      s += kind == FunctionKind::cn ? t.cn : t.sn;
    }
    return *td.alpha1 * s;
  }
  for (int j = 1; j <= n; ++j) {
    Quad u = td.point(LatticeKind::real_2K, j, x);
    Quad v = kind == FunctionKind::cn ? jacobi_real(u, td.m).dn : jacobi_zeta(u, td.m, td.ke);
    s += (j % 2 ? 1 : -1) * v;
  }
  return *td.alpha2 * s;
}

Quad landen_sum(FunctionKind kind, Order p, const QuadModulus& m, const Quad& x) {
  return landen_sum(kind, make_transform_data(p, m), x);
}

Quad landen_product(FunctionKind kind, const TransformData& td, const Quad& x) {
  using std::abs;
  if (!td.p.odd()) throw ParityError("product forms of all three functions need odd p");
  const int n = td.p.value();
  auto pick = [kind](const Triple<Quad>& t) {
    return kind == FunctionKind::dn ? t.dn : kind == FunctionKind::cn ? t.cn : t.sn;
  };
  LatticeKind lk = kind == FunctionKind::dn ? LatticeKind::real_2K : LatticeKind::real_4K;
  Quad num = 1, den = 1;
  for (int j = 1; j <= n; ++j) num *= pick(jacobi_real(td.point(lk, j, x), td.m));
  for (int j = 1; j < n; ++j) den *= pick(jacobi_real(td.step(lk) * j, td.m));
  if (kind == FunctionKind::sn) den *= td.alpha;
  if (abs(den) <= Quad(pole_guard)) throw PoleError("product denominator within pole guard");
  return num / den;
}

Quad landen_product(FunctionKind kind, Order p, const QuadModulus& m, const Quad& x) {
  return landen_product(kind, make_transform_data(p, m), x);
}

Quad landen_sn_even_product(const TransformData& td, const Quad& x) {
  if (!td.p.even()) throw ParityError("the sn product form needs even p");
  Quad num = 1;
  for (int j = 1; j <= td.p.value(); ++j)
    num *= jacobi_real(td.point(LatticeKind::real_2K, j, x), td.m).sn;
  return num / (*td.A0 * td.alpha);
}

Quad landen_sn_even_product(Order p, const QuadModulus& m, const Quad& x) {
  return landen_sn_even_product(make_transform_data(p, m), x);
}

Quad landen_target(FunctionKind kind, const TransformData& td, const Quad& x) {
  auto t = jacobi_real(x, td.m_tilde);
  return kind == FunctionKind::dn ? t.dn : kind == FunctionKind::cn ? t.cn : t.sn;
}

Quad identity81_residual(const TransformData& td) {
  using std::pow;
  if (!td.p.even()) throw ParityError("identity needs even p");
  const int n = td.p.value();
  Quad lhs = pow(td.m.m(), Quad(n) / 2) * td.alpha * *td.alpha2;
  for (int j = 1; j < n; ++j) lhs *= jacobi_real(td.step(LatticeKind::real_2K) * j, td.m).sn;
  Quad rhs = 1;
  for (int j = 1; j < n / 2; ++j) {
    Quad s = jacobi_real(td.step(LatticeKind::real_2K) * j, td.m).sn;
    rhs /= s * s;
  }
  return lhs - rhs;
}

ResidualReport verify_period_relation(Order p, const QuadModulus& m) {
  ResidualReport rep;
  rep.id = "period_relation";
  rep.add_param("p", p.value());
  rep.add_param("m", to_double(m.m()));
  TransformData td = make_transform_data(p, m);
  Quad lhs = complete_K(td.m_tilde) * p.value() * td.alpha;
  rep.tolerance = 1e-10;
  rep.record(to_double(abs(lhs - td.ke.K) / td.ke.K));
  rep.finish();
  return rep;
}

ResidualReport verify_m_tilde_equivalence(Order p, const QuadModulus& m) {
  using std::abs;
  ResidualReport rep;
  rep.id = "m_tilde_equivalence";
  rep.add_param("p", p.value());
  rep.add_param("m", to_double(m.m()));
  rep.tolerance = 1e-10;
  TransformData td = make_transform_data(p, m);
  MTildeAliases al = m_tilde_aliases(td);
  auto check = [&](const char* label, const std::optional<Quad>& v) {
    if (!v) return;
    double r = deviation(*v, al.m_tilde);
    rep.record(r);
    rep.readings.push_back({label, r, r <= rep.tolerance});
  };
  check("m1", al.m1);
  check("m2", al.m2);
  check("m3", al.m3);
  check("m4", al.m4);
  if (al.m1 && al.m3) rep.record(deviation(*al.m1, *al.m3));
  if (al.m2 && al.m4) rep.record(deviation(*al.m2, *al.m4));
  if (rep.samples == 0) rep.record(0);
  rep.finish();
  return rep;
}

}  // namespace landen
