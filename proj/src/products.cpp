#include "landen/products.hpp"

#include <cmath>
#include <vector>

namespace landen {

namespace {

struct Samples {
  std::vector<Triple<Quad>> t;
  int sign(int j) const { return j % 2 ? -1 : 1; }  // (-1)^(j-1), j zero-based
};

Samples sample(const TransformData& td, LatticeKind kind, const Quad& x) {
  Samples s;
  for (int j = 1; j <= td.p.value(); ++j) s.t.push_back(jacobi_real(td.point(kind, j, x), td.m));
  return s;
}

// p * sum over half the lattice of f(2jK/p), the shape shared by the closed forms.
template <class F>
Quad half_sum(const TransformData& td, LatticeKind kind, int count, F f) {
  Quad s = 0;
  for (int j = 1; j <= count; ++j) {
    Quad u = td.step(kind) * j;
    s += f(jacobi_real(u, td.m), jacobi_zeta(u, td.m, td.ke));
  }
  return td.p.value() * s;
}

void require_interior(const QuadModulus& m) {
  if (m.m() == 0 || m.complement() == 0) throw DomainError("m must lie in (0, 1)");
}

}  // namespace

const char* to_string(ProductKind k) {
  switch (k) {
    case ProductKind::sn_cn: return "sn_cn";
    case ProductKind::sn_dn: return "sn_dn";
    case ProductKind::cn_dn: return "cn_dn";
    case ProductKind::dn2: return "dn2";
    case ProductKind::sn_cn_dn: return "sn_cn_dn";
    case ProductKind::dn3: return "dn3";
    case ProductKind::cn3: return "cn3";
    case ProductKind::sn3: return "sn3";
  }
  return "?";
}

const char* to_string(RemarkableIdentity id) {
  switch (id) {
    case RemarkableIdentity::eq99: return "eq99";
    case RemarkableIdentity::eq100: return "eq100";
    case RemarkableIdentity::eq101: return "eq101";
    case RemarkableIdentity::eq108: return "eq108";
    case RemarkableIdentity::eq109: return "eq109";
  }
  return "?";
}

LatticeSums lattice_sums(const TransformData& td) {
  require_interior(td.m);
  using std::sqrt;
  const int p = td.p.value();
  LatticeSums s;
  auto dn_term = [](const Triple<Quad>& t, const Quad& z) { return t.dn - t.cn / t.sn * z; };
  if (td.p.odd()) {
    s.A_d = half_sum(td, LatticeKind::real_2K, (p - 1) / 2, dn_term);
    s.A_s = half_sum(td, LatticeKind::real_4K, (p - 1) / 2,
                     [](const Triple<Quad>& t, const Quad& z) { return z / t.sn; });
    const Quad m = td.m.m();
    s.A_c = half_sum(td, LatticeKind::real_4K, (p - 1) / 2,
                     [m](const Triple<Quad>& t, const Quad& z) { return m * t.cn - t.dn / t.sn * z; });
  } else {
    s.A_d = Quad(p) / 2 * td.m.k_prime() + half_sum(td, LatticeKind::real_2K, (p - 2) / 2, dn_term);
  }
  return s;
}

LatticeSums lattice_sums(Order p, const QuadModulus& m) {
  return lattice_sums(make_transform_data(p, m));
}

LatticeSums lattice_sums_direct(const TransformData& td, const Quad& x) {
  const int p = td.p.value();
  Samples a = sample(td, LatticeKind::real_2K, x);
  LatticeSums s;
  s.A_d = 0;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) s.A_d += a.t[i].dn * a.t[j].dn;
  if (td.p.odd()) {
    Samples b = sample(td, LatticeKind::real_4K, x);
    Quad ss = 0, cc = 0;
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j) {
        ss += b.t[i].sn * b.t[j].sn;
        cc += b.t[i].cn * b.t[j].cn;
      }
    s.A_s = td.m.m() * ss;
    s.A_c = td.m.m() * cc;
  }
  return s;
}

namespace {

Quad product_impl(ProductKind kind, const TransformData& td, const LatticeSums& s, const Quad& x,
                  bool printed) {
  require_interior(td.m);
  const Quad m = td.m.m(), mt = td.m_tilde.m(), a = td.alpha;
  Samples v = sample(td, LatticeKind::real_2K, x);
  const int p = td.p.value();
  auto sum = [&](const Samples& w, bool alternate, auto f) {
    Quad r = 0;
    for (int j = 0; j < p; ++j) r += (alternate ? w.sign(j) : 1) * f(w.t[j]);
    return r;
  };
  switch (kind) {
    case ProductKind::sn_cn:
      return m * a * a / mt * sum(v, false, [](auto& t) { return t.sn * t.cn; });
    case ProductKind::dn2:
      return a * a * (sum(v, false, [](auto& t) { return t.dn * t.dn; }) + 2 * s.A_d);
    case ProductKind::sn_cn_dn: {
      Quad c = printed ? m * a * a / mt : m * a * a * a / mt;
      return c * sum(v, false, [](auto& t) { return t.sn * t.cn * t.dn; });
    }
    case ProductKind::dn3: {
      Quad c = a * (2 - mt - (2 - m) * a * a);
      if (!printed) c /= 2;
      return a * a * a * sum(v, false, [](auto& t) { return t.dn * t.dn * t.dn; }) +
             c * sum(v, false, [](auto& t) { return t.dn; });
    }
    default:
      break;
  }
  if (td.p.odd()) {
    const Quad a1 = *td.alpha1;
    Samples w = sample(td, LatticeKind::real_4K, x);
    switch (kind) {
      case ProductKind::sn_dn:
        return a * a1 * sum(w, false, [](auto& t) { return t.sn * t.dn; });
      case ProductKind::cn_dn:
        return a * a1 * sum(w, false, [](auto& t) { return t.cn * t.dn; });
      case ProductKind::cn3: {
        Quad c = (1 - a1 * a1) / (a1 * a1) - (1 - a * a) / (2 * m * a * a);
        return a1 * a1 * a1 *
               (sum(w, false, [](auto& t) { return t.cn * t.cn * t.cn; }) +
                c * sum(w, false, [](auto& t) { return t.cn; }));
      }
      case ProductKind::sn3: {
        Quad c = (1 - a * a) / (2 * m * a * a) + (1 - a1 * a1) / (2 * a1 * a1);
        return a1 * a1 * a1 *
               (sum(w, false, [](auto& t) { return t.sn * t.sn * t.sn; }) +
                c * sum(w, false, [](auto& t) { return t.sn; }));
      }
      default:
        break;
    }
  } else {
    const Quad a2 = *td.alpha2;
    switch (kind) {
      case ProductKind::sn_dn:
        return m * a * a2 * sum(v, true, [](auto& t) { return t.sn * t.cn; });
      case ProductKind::cn_dn:
        return a * a2 * sum(v, true, [](auto& t) { return t.dn * t.dn; });
      case ProductKind::cn3: {
        Quad c = (2 * a * a - a2 * a2) / (2 * a * a * a2 * a2) + (m - 2) / 2;
        return a2 * a2 * a2 *
               (sum(v, true, [](auto& t) { return t.dn * t.dn * t.dn; }) +
                c * sum(v, true, [](auto& t) { return t.dn; }));
      }
      case ProductKind::sn3: {
        Quad z = 0;
        for (int j = 1; j <= p; ++j)
          z += (j % 2 ? 1 : -1) *
               jacobi_zeta(td.point(LatticeKind::real_2K, j, x), td.m, td.ke);
        return a2 * (a * a + a2 * a2) / (2 * a * a) * z -
               m * a2 * a2 * a2 * sum(v, true, [](auto& t) { return t.sn * t.cn * t.dn; });
      }
      default:
        break;
    }
  }
  throw DomainError("unknown product kind");
}

}  // namespace

Quad product_transform(ProductKind kind, const TransformData& td, const LatticeSums& s,
                       const Quad& x) {
  return product_impl(kind, td, s, x, false);
}

Quad product_transform(ProductKind kind, Order p, const QuadModulus& m, const Quad& x) {
  TransformData td = make_transform_data(p, m);
  return product_transform(kind, td, lattice_sums(td), x);
}

Quad product_transform_printed(ProductKind kind, const TransformData& td, const LatticeSums& s,
                               const Quad& x) {
  return product_impl(kind, td, s, x, true);
}

Quad product_target(ProductKind kind, const TransformData& td, const Quad& x) {
  auto t = jacobi_real(x, td.m_tilde);
  switch (kind) {
    case ProductKind::sn_cn: return t.sn * t.cn;
    case ProductKind::sn_dn: return t.sn * t.dn;
    case ProductKind::cn_dn: return t.cn * t.dn;
    case ProductKind::dn2: return t.dn * t.dn;
    case ProductKind::sn_cn_dn: return t.sn * t.cn * t.dn;
    case ProductKind::dn3: return t.dn * t.dn * t.dn;
    case ProductKind::cn3: return t.cn * t.cn * t.cn;
    case ProductKind::sn3: return t.sn * t.sn * t.sn;
  }
  return 0;
}

Quad zeta_transform(const TransformData& td, const Quad& x) {
  if (td.m.complement() == 0) throw DomainError("Z is undefined at m = 1");
  Quad s = 0;
  for (int j = 1; j <= td.p.value(); ++j)
    s += jacobi_zeta(td.point(LatticeKind::real_2K, j, x), td.m, td.ke);
  return td.alpha * s;
}

Quad zeta_transform(Order p, const QuadModulus& m, const Quad& x) {
  return zeta_transform(make_transform_data(p, m), x);
}

Quad E_transform(const TransformData& td, const LatticeSums& s) {
  return td.alpha * (td.ke.E + 2 * s.A_d * td.ke.K / td.p.value());
}

Quad E_transform(Order p, const QuadModulus& m) {
  TransformData td = make_transform_data(p, m);
  return E_transform(td, lattice_sums(td));
}

ResidualReport verify_remarkable_identities(RemarkableIdentity which, Order p,
                                            const QuadModulus& m, std::span<const double> xs) {
  if (!p.even()) throw ParityError(std::string(to_string(which)) + " needs even p");
  require_interior(m);
  ResidualReport rep;
  rep.id = to_string(which);
  rep.add_param("p", p.value());
  rep.add_param("m", to_double(m.m()));
  rep.tolerance = 1e-9;
  TransformData td = make_transform_data(p, m);
  LatticeSums ls = lattice_sums(td);
  const int n = p.value();
  double single = 0;
  for (double xd : xs) {
    Quad x = xd;
    Samples v = sample(td, LatticeKind::real_2K, x);
    Quad sd = 0, sda = 0, sd2 = 0, sd2a = 0, sza = 0, sca = 0, sc = 0;
    for (int j = 0; j < n; ++j) {
      const auto& t = v.t[j];
      int g = v.sign(j);
      sd += t.dn;
      sda += g * t.dn;
      sd2 += t.dn * t.dn;
      sd2a += g * t.dn * t.dn;
      sca += g * t.sn * t.cn;
      sc += t.sn * t.cn;
      sza += g * jacobi_zeta(td.point(LatticeKind::real_2K, j + 1, x), td.m, td.ke);
    }
    const Quad mm = m.m();
    switch (which) {
      case RemarkableIdentity::eq99: rep.record(deviation(sd * sda, sd2a)); break;
      case RemarkableIdentity::eq100: rep.record(deviation(mm * sca, sza * sd)); break;
      case RemarkableIdentity::eq101: rep.record(deviation(mm * sc, sza * sda)); break;
      case RemarkableIdentity::eq108: {
        Quad target = 1 / (td.alpha * td.alpha);
        rep.record(deviation(sd2 + 2 * ls.A_d + sza * sza, target));
        Quad d0 = v.t[0].dn;
        single = std::max(single, deviation(d0 * d0 + 2 * ls.A_d + sza * sza, target));
        break;
      }
      case RemarkableIdentity::eq109: {
        Quad target = 1 / (*td.alpha2 * *td.alpha2);
        rep.record(deviation(sda * sda + sza * sza, target));
        break;
      }
    }
  }
  if (which == RemarkableIdentity::eq108) {
    rep.readings.push_back({"sum over j of dn^2(x_j)", rep.max_residual, rep.max_residual <= rep.tolerance});
    rep.readings.push_back({"single term dn^2(x_1)", single, single <= rep.tolerance});
    rep.resolved = rep.readings[0].holds ? rep.readings[0].label : "";
  }
  rep.finish();
  return rep;
}

ResidualReport verify_consistency_conditions(Order p, const QuadModulus& m) {
  if (!p.odd()) throw ParityError("these consistency conditions need odd p");
  require_interior(m);
  ResidualReport rep;
  rep.id = "eq93";
  rep.add_param("p", p.value());
  rep.add_param("m", to_double(m.m()));
  rep.tolerance = 1e-9;
  TransformData td = make_transform_data(p, m);
  LatticeSums s = lattice_sums(td);
  const Quad mm = m.m(), a = td.alpha, a1 = *td.alpha1;
  const int n = p.value();
  auto residual = [&](const Quad& As, const Quad& Ac) {
    return std::max(deviation(n + 2 * (s.A_d + As), 1 / (a * a)),
                    deviation(mm * n + 2 * (As + Ac), mm / (a1 * a1)));
  };
  double r = residual(*s.A_s, *s.A_c);
  rep.record(r);
  // Closed forms at 2jK/p, as printed.
  Quad As2 = half_sum(td, LatticeKind::real_2K, (n - 1) / 2,
                      [](const Triple<Quad>& t, const Quad& z) { return z / t.sn; });
  Quad Ac2 = half_sum(td, LatticeKind::real_2K, (n - 1) / 2,
                      [](const Triple<Quad>& t, const Quad& z) { return t.cn - t.dn / t.sn * z; });
  double rp = residual(As2, Ac2);
  rep.readings.push_back({"x~ lattice, closed forms at 4jK/p", r, r <= rep.tolerance});
  rep.readings.push_back({"x lattice, closed forms at 2jK/p (as printed)", rp, rp <= rep.tolerance});
  rep.resolved = rep.readings[0].label;
  rep.finish();
  return rep;
}

}  // namespace landen
