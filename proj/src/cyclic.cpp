#include "landen/cyclic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "landen/products.hpp"

namespace landen {

namespace {

using FK = FunctionKind;

enum class Rule { any, odd_p, even_p, even_p_odd_r, odd_p_low_r };

// f(lattice point j + offset * r) ^ power
struct Factor {
  FK f;
  int offset;
  int power;
};

struct Term {
  int sign;
  std::vector<Factor> factors;
};

class LatticeCache {
 public:
  LatticeCache(const TransformData& td, LatticeKind kind, const Quad& x)
      : td_(td), kind_(kind), x_(x) {}

  Quad value(FK f, long j) {
    auto it = cache_.find(j);
    if (it == cache_.end())
      it = cache_.emplace(j, jacobi_real(td_.point(kind_, j, x_), td_.m)).first;
    const auto& t = it->second;
    return f == FK::sn ? t.sn : f == FK::cn ? t.cn : t.dn;
  }

 private:
  const TransformData& td_;
  LatticeKind kind_;
  Quad x_;
  std::map<long, Triple<Quad>> cache_;
};

struct Ctx {
  const TransformData& td;
  const CyclicShift& s;
  Quad x;

  int p() const { return td.p.value(); }
  Quad m() const { return td.m.m(); }
  Quad alpha() const { return td.alpha; }
  Quad a1() const { return *td.alpha1; }
  Quad a2() const { return *td.alpha2; }
  Quad cs(const Quad& u) const { return jacobi_minor(MinorKind::cs, u, td.m); }
  Quad ds(const Quad& u) const { return jacobi_minor(MinorKind::ds, u, td.m); }
  Quad ns(const Quad& u) const { return jacobi_minor(MinorKind::ns, u, td.m); }
  Quad dn(const Quad& u) const { return jacobi_real(u, td.m).dn; }
  Quad Z(const Quad& u) const { return jacobi_zeta(u, td.m, td.ke); }
  // Function of (y, m~).
  Quad at_mt(FK f, const Quad& y) const {
    auto t = jacobi_real(y, td.m_tilde);
    return f == FK::sn ? t.sn : f == FK::cn ? t.cn : t.dn;
  }
  Quad lattice_sum(LatticeKind k, FK f) const {
    Quad s = 0;
    for (int j = 1; j <= p(); ++j) {
      auto t = jacobi_real(td.point(k, j, x), td.m);
      s += f == FK::sn ? t.sn : f == FK::cn ? t.cn : t.dn;
    }
    return s;
  }
  Quad alternating_zeta() const {
    Quad s = 0;
    for (int j = 1; j <= p(); ++j)
      s += (j % 2 ? 1 : -1) * Z(td.point(LatticeKind::real_2K, j, x));
    return s;
  }
  Quad K() const { return td.ke.K; }
};

// Right-hand side evaluated at argument y of the m~ functions; nullopt when
// the reading does not apply to this p.
using Rhs = std::function<std::optional<Quad>(const Ctx&, const Quad& y)>;

struct RhsReading {
  const char* label;
  bool scaled_arg;  // y = x / alpha instead of x
  Rhs rhs;
};

struct IdentityDef {
  IdentityId id;
  const char* name;
  Rule rule;
  LatticeKind lattice;
  bool product = false;      // product over j instead of sum
  bool alternating = false;  // (-1)^(j-1)
  int m_power = 0;
  bool m_half_p = false;     // extra m^(p/2)
  std::vector<Term> terms;
  std::vector<RhsReading> readings;
};

constexpr LatticeKind X = LatticeKind::real_2K;
constexpr LatticeKind XT = LatticeKind::real_4K;

Quad ipow(Quad v, int n) {
  Quad r = 1;
  for (int i = 0; i < n; ++i) r *= v;
  return r;
}

std::vector<Term> dn2_pm(int sign) {
  return {{1, {{FK::dn, 0, 2}, {FK::dn, 1, 1}}}, {sign, {{FK::dn, 0, 2}, {FK::dn, -1, 1}}}};
}

std::vector<Term> dn3_pm(int sign) {
  return {{1, {{FK::dn, 0, 3}, {FK::dn, 1, 1}}}, {sign, {{FK::dn, 0, 3}, {FK::dn, -1, 1}}}};
}

Quad f1_prefactor(const Ctx& c) {
  const Quad& a = c.s.a;
  return 2 * (c.ds(a) * c.ns(a) - c.cs(a) * c.cs(a));
}

const std::vector<IdentityDef>& table() {
  static const std::vector<IdentityDef> defs = [] {
    std::vector<IdentityDef> t;
    t.push_back({IdentityId::f1, "f1", Rule::any, X, false, false, 0, false, dn2_pm(1),
                 {{"as printed", false, [](const Ctx& c, const Quad&) -> std::optional<Quad> {
                    return f1_prefactor(c) * c.lattice_sum(X, FK::dn);
                  }}}});
    t.push_back({IdentityId::eq19, "eq19", Rule::any, X, false, false, 0, false, dn2_pm(1),
                 {{"as printed: 2[ds(a) - ns(a)]", false,
                   [](const Ctx& c, const Quad&) -> std::optional<Quad> {
                     return 2 * (c.ds(c.s.a) - c.ns(c.s.a)) * c.lattice_sum(X, FK::dn);
                   }},
                  {"prefactor 2[ds(a)ns(a) - cs^2(a)]", false,
                   [](const Ctx& c, const Quad&) -> std::optional<Quad> {
                     return f1_prefactor(c) * c.lattice_sum(X, FK::dn);
                   }}}});
    t.push_back({IdentityId::f2, "f2", Rule::any, X, false, false, 0, false, dn2_pm(1),
                 {{"as printed", false, [](const Ctx& c, const Quad& y) -> std::optional<Quad> {
                    return f1_prefactor(c) / c.alpha() * c.at_mt(FK::dn, y);
                  }}}});
    t.push_back({IdentityId::f3, "f3", Rule::any, X, false, false, 1, false,
                 {{1, {{FK::cn, 0, 1}, {FK::sn, 1, 1}}}, {-1, {{FK::cn, 0, 1}, {FK::sn, -1, 1}}}},
                 {{"as printed", false, [](const Ctx& c, const Quad& y) -> std::optional<Quad> {
                    const Quad& a = c.s.a;
                    return 2 / c.alpha() * (c.ns(a) - c.ds(a)) * c.at_mt(FK::dn, y);
                  }}}});
    auto f4 = [](const Ctx& c, const Quad& y, const Quad& A) {
      return -2 * c.m() / A * c.cs(c.s.a) * c.at_mt(FK::cn, y) * c.at_mt(FK::sn, y);
    };
    t.push_back({IdentityId::f4, "f4", Rule::any, X, false, false, 0, false, dn2_pm(-1),
                 {{"as printed: A = alpha1^2 (odd p), alpha2^2 (even p)", false,
                   [f4](const Ctx& c, const Quad& y) -> std::optional<Quad> {
                     return f4(c, y, c.td.p.odd() ? c.a1() * c.a1() : c.a2() * c.a2());
                   }},
                  {"A = m alpha2^2 (even p)", false,
                   [f4](const Ctx& c, const Quad& y) -> std::optional<Quad> {
                     if (c.td.p.odd()) return std::nullopt;
                     return f4(c, y, c.m() * c.a2() * c.a2());
                   }}}});
    t.push_back({IdentityId::f5, "f5", Rule::any, X, false, false, 0, false,
                 {{1, {{FK::dn, 0, 2}, {FK::dn, 1, 2}}}},
                 {{"as printed", false, [](const Ctx& c, const Quad& y) -> std::optional<Quad> {
                    const Quad& a = c.s.a;
                    Quad cs = c.cs(a), ds = c.ds(a), ns = c.ns(a), d = c.at_mt(FK::dn, y);
                    Quad Ad = lattice_sums(c.td).A_d;
                    return -2 / (c.alpha() * c.alpha()) * cs * cs * d * d + 4 * Ad * cs * cs +
                           c.p() * (cs * cs + ds * ds - 2 * cs * ds * ns * c.Z(a));
                  }}}});
    t.push_back({IdentityId::f6, "f6", Rule::any, X, false, false, 0, false, dn3_pm(-1),
                 {{"as printed", false, [](const Ctx& c, const Quad& y) -> std::optional<Quad> {
                    Quad A = c.td.p.odd() ? c.alpha() * c.a1() * c.a1()
                                          : c.m() * c.alpha() * c.a2() * c.a2();
                    return -2 * c.m() / A * c.cs(c.s.a) * c.at_mt(FK::cn, y) *
                           c.at_mt(FK::sn, y) * c.at_mt(FK::dn, y);
                  }}}});
    t.push_back({IdentityId::f7, "f7", Rule::odd_p, XT, false, false, 1, false,
                 {{1, {{FK::sn, 0, 2}, {FK::sn, 1, 1}}}, {1, {{FK::sn, 0, 2}, {FK::sn, -1, 1}}}},
                 {{"as printed", false, [](const Ctx& c, const Quad& y) -> std::optional<Quad> {
                    const Quad& b = c.s.b;
                    Quad ns = c.ns(b);
                    return -2 / c.a1() * (c.ds(b) * c.cs(b) - ns * ns) * c.at_mt(FK::sn, y);
                  }}}});
    t.push_back({IdentityId::f8, "f8", Rule::odd_p, XT, false, false, 2, false,
                 {{1, {{FK::sn, 0, 3}, {FK::sn, 1, 2}}}, {-1, {{FK::sn, 0, 3}, {FK::sn, -1, 2}}}},
                 {{"as printed", false, [](const Ctx& c, const Quad& y) -> std::optional<Quad> {
                    const Quad& b = c.s.b;
                    Quad ns = c.ns(b);
                    return 2 / (c.alpha() * c.a1()) * ns * (2 * c.ds(b) * c.cs(b) + ns * ns) *
                           c.at_mt(FK::cn, y) * c.at_mt(FK::dn, y);
                  }}}});
    t.push_back({IdentityId::f9, "f9", Rule::odd_p, XT, false, false, 1, false,
                 {{1, {{FK::cn, 0, 2}, {FK::cn, 1, 1}}}, {1, {{FK::cn, 0, 2}, {FK::cn, -1, 1}}}},
                 {{"as printed", false, [](const Ctx& c, const Quad& y) -> std::optional<Quad> {
                    const Quad& b = c.s.b;
                    Quad ds = c.ds(b);
                    return 2 / c.a1() * (c.ns(b) * c.cs(b) - ds * ds) * c.at_mt(FK::cn, y);
                  }}}});
    t.push_back({IdentityId::f10, "f10", Rule::odd_p, XT, false, false, 1, false,
                 {{1, {{FK::cn, 0, 1}, {FK::sn, 0, 1}, {FK::dn, 0, 1}, {FK::sn, 1, 1}, {FK::dn, 1, 1}}},
                  {-1, {{FK::cn, 0, 1}, {FK::sn, 0, 1}, {FK::dn, 0, 1}, {FK::sn, -1, 1}, {FK::dn, -1, 1}}}},
                 {{"as printed", false, [](const Ctx& c, const Quad& y) -> std::optional<Quad> {
                    const Quad& b = c.s.b;
                    Quad ns = c.ns(b), cs = c.cs(b);
                    return 2 / (c.alpha() * c.a1()) * c.ds(b) * (ns * cs + ns * ns + cs * cs) *
                           c.at_mt(FK::sn, y) * c.at_mt(FK::dn, y);
                  }}}});

    // Even p, odd r: the printed right-hand sides take x/alpha; the bare x
    // reading is carried alongside.
    auto both = [](Rhs rhs) {
      return std::vector<RhsReading>{{"argument x/alpha (as printed)", true, rhs},
                                     {"argument x", false, rhs}};
    };
    t.push_back({IdentityId::f11, "f11", Rule::even_p_odd_r, X, false, true, 1, false,
                 {{1, {{FK::sn, 0, 1}, {FK::cn, 1, 1}}}, {-1, {{FK::sn, 0, 1}, {FK::cn, -1, 1}}}},
                 both([](const Ctx& c, const Quad& y) -> std::optional<Quad> {
                   const Quad& a = c.s.a;
                   return 2 / c.a2() * (c.ns(a) + c.ds(a)) * c.at_mt(FK::cn, y);
                 })});
    t.push_back({IdentityId::f12, "f12", Rule::even_p_odd_r, X, false, true, 1, false,
                 {{1, {{FK::sn, 0, 1}, {FK::dn, 0, 1}, {FK::cn, 1, 1}, {FK::dn, 1, 1}}},
                  {1, {{FK::sn, 0, 1}, {FK::dn, 0, 1}, {FK::cn, -1, 1}, {FK::dn, -1, 1}}}},
                 both([](const Ctx& c, const Quad& y) -> std::optional<Quad> {
                   const Quad& a = c.s.a;
                   return -2 / (c.alpha() * c.a2()) * c.cs(a) * (c.ds(a) - c.ns(a)) *
                          c.at_mt(FK::sn, y) * c.at_mt(FK::dn, y);
                 })});
    t.push_back({IdentityId::f13, "f13", Rule::even_p_odd_r, X, false, true, 0, false,
                 {{1, {{FK::dn, 0, 1}, {FK::dn, 1, 1}}}},
                 both([](const Ctx& c, const Quad& y) -> std::optional<Quad> {
                   return -2 / c.a2() * c.cs(c.s.a) * c.at_mt(FK::sn, y);
                 })});
    t.push_back({IdentityId::f14, "f14", Rule::even_p_odd_r, X, false, true, 0, false,
                 {{1, {{FK::dn, 0, 1}, {FK::dn, 1, 1}, {FK::dn, 2, 1}, {FK::dn, 3, 1}}}},
                 both([](const Ctx& c, const Quad& y) -> std::optional<Quad> {
                   const Quad& a = c.s.a;
                   Quad c1 = c.cs(a), c2 = c.cs(2 * a), c3 = c.cs(3 * a);
                   return 2 / c.a2() * (c1 * c2 * c3 + c1 * c1 * c2) * c.at_mt(FK::sn, y);
                 })});
    t.push_back({IdentityId::f15, "f15", Rule::even_p_odd_r, X, false, true, 0, false, dn3_pm(1),
                 both([](const Ctx& c, const Quad& y) -> std::optional<Quad> {
                   const Quad& a = c.s.a;
                   return 2 / (c.alpha() * c.a2()) * c.ns(a) * c.ds(a) * c.at_mt(FK::cn, y) *
                          c.at_mt(FK::dn, y);
                 })});

    t.push_back({IdentityId::eq71, "eq71", Rule::odd_p, X, true, false, 0, false,
                 {{1, {{FK::dn, 0, 1}}}},
                 {{"as printed", false, [](const Ctx& c, const Quad&) -> std::optional<Quad> {
                    Quad pr = 1;
                    for (int n = 1; n <= (c.p() - 1) / 2; ++n) {
                      Quad v = c.cs(2 * n * c.K() / c.p());
                      pr *= v * v;
                    }
                    return pr * c.lattice_sum(X, FK::dn);
                  }}}});
    t.push_back({IdentityId::eq72, "eq72", Rule::odd_p, XT, true, false, 0, false,
                 {{1, {{FK::sn, 0, 1}}}},
                 {{"as printed", false, [](const Ctx& c, const Quad&) -> std::optional<Quad> {
                    const int h = (c.p() - 1) / 2;
                    Quad pr = ipow(-1 / c.m(), h);
                    for (int n = 1; n <= h; ++n) {
                      Quad v = c.ns(4 * n * c.K() / c.p());
                      pr *= v * v;
                    }
                    return pr * c.lattice_sum(XT, FK::sn);
                  }}}});
    t.push_back({IdentityId::eq73, "eq73", Rule::odd_p, XT, true, false, 0, false,
                 {{1, {{FK::cn, 0, 1}}}},
                 {{"as printed", false, [](const Ctx& c, const Quad&) -> std::optional<Quad> {
                    const int h = (c.p() - 1) / 2;
                    Quad pr = ipow(1 / c.m(), h);
                    for (int n = 1; n <= h; ++n) {
                      Quad v = c.ds(4 * n * c.K() / c.p());
                      pr *= v * v;
                    }
                    return pr * c.lattice_sum(XT, FK::cn);
                  }}}});
    t.push_back({IdentityId::eq79, "eq79", Rule::even_p, X, true, false, 0, true,
                 {{1, {{FK::sn, 0, 1}}}},
                 {{"as printed", false, [](const Ctx& c, const Quad&) -> std::optional<Quad> {
                    Quad pr = 1;
                    for (int n = 1; n <= c.p() / 2 - 1; ++n) {
                      Quad v = c.ns(2 * n * c.K() / c.p());
                      pr *= v * v;
                    }
                    return pr * c.alternating_zeta();
                  }}}});
    t.push_back({IdentityId::eq85, "eq85", Rule::odd_p_low_r, X, false, false, 0, false,
                 {{1, {{FK::sn, 0, 1}, {FK::cn, 1, 1}}}, {1, {{FK::sn, 0, 1}, {FK::cn, -1, 1}}}},
                 {{"as printed", false, [](const Ctx&, const Quad&) -> std::optional<Quad> {
                    return Quad(0);
                  }}}});
    t.push_back({IdentityId::eq86, "eq86", Rule::any, X, false, false, 0, false,
                 {{1, {{FK::dn, 0, 1}, {FK::dn, 1, 1}}}},
                 {{"as printed", false, [](const Ctx& c, const Quad&) -> std::optional<Quad> {
                    const Quad& a = c.s.a;
                    return c.p() * (c.dn(a) - c.cs(a) * c.Z(a));
                  }}}});
    return t;
  }();
  return defs;
}

const IdentityDef& def_of(IdentityId id) {
  for (const auto& s : table())
    if (s.id == id) return s;
  throw Error("unknown identity");
}

Quad lhs_value(const IdentityDef& s, const TransformData& td, int r, const Quad& x, int start) {
  LatticeCache lat(td, s.lattice, x);
  const int n = td.p.value();
  Quad acc = s.product ? Quad(1) : Quad(0);
  for (int j = start; j < start + n; ++j) {
    // Products carry no offsets; a literal index past p would flip sn and cn.
    const long base = s.product ? (j - 1) % n + 1 : j;
    Quad v = 0;
    for (const auto& term : s.terms) {
      Quad f = term.sign;
      for (const auto& fac : term.factors) f *= ipow(lat.value(fac.f, base + long(fac.offset) * r), fac.power);
      v += f;
    }
    if (s.alternating && (j - 1) % 2 != 0) v = -v;
    if (s.product)
      acc *= v;
    else
      acc += v;
  }
  Quad scale = ipow(td.m.m(), s.m_power);
  if (s.m_half_p) scale *= ipow(td.m.m(), n / 2);
  return scale * acc;
}

// Residual per reading at one sample; nullopt where a reading does not apply.
std::vector<std::optional<double>> sample(const IdentityDef& s, const TransformData& td,
                                          const CyclicShift& shift, double x, int start) {
  Ctx c{td, shift, Quad(x)};
  Quad lhs = lhs_value(s, td, shift.r, Quad(x), start);
  std::vector<std::optional<double>> out;
  for (const auto& rd : s.readings) {
    Quad y = rd.scaled_arg ? Quad(x) / td.alpha : Quad(x);
    auto rhs = rd.rhs(c, y);
    if (rhs)
      out.push_back(deviation(lhs, *rhs));
    else
      out.push_back(std::nullopt);
  }
  return out;
}

const char* rule_text(Rule r) {
  switch (r) {
    case Rule::any: return "any p";
    case Rule::odd_p: return "odd p";
    case Rule::even_p: return "even p";
    case Rule::even_p_odd_r: return "even p and odd r";
    case Rule::odd_p_low_r: return "odd p and r <= (p-1)/2";
  }
  return "?";
}

constexpr double identity_tolerance = 1e-9;

}  // namespace

const char* to_string(IdentityId id) { return def_of(id).name; }

std::optional<IdentityId> identity_from_string(std::string_view name) {
  for (const auto& s : table())
    if (name == s.name) return s.id;
  return std::nullopt;
}

CyclicShift make_cyclic_shift(Order p, int r, const QuadModulus& m) {
  if (r < 1 || r >= p.value()) throw RangeError("shift r must satisfy 1 <= r < p");
  Quad K = complete_K(m);
  return {r, 2 * r * K / p.value(), 4 * r * K / p.value()};
}

bool uses_shift(IdentityId id) {
  return !def_of(id).product;
}

bool applicable(IdentityId id, Order p, int r) {
  if (uses_shift(id) && (r < 1 || r >= p.value())) return false;
  switch (def_of(id).rule) {
    case Rule::any: return true;
    case Rule::odd_p: return p.odd();
    case Rule::even_p: return p.even();
    case Rule::even_p_odd_r: return p.even() && r % 2 == 1;
    case Rule::odd_p_low_r: return p.odd() && r <= (p.value() - 1) / 2;
  }
  return false;
}

ResidualReport evaluate_identity(IdentityId id, Order p, int r, const QuadModulus& m,
                                 std::span<const double> xs, int start) {
  const IdentityDef& s = def_of(id);
  if (!applicable(id, p, r))
    throw ApplicabilityError(std::string(s.name) + " needs " + rule_text(s.rule) +
                             (uses_shift(id) ? " with 1 <= r < p" : ""));
  if (m.m() == 0 || m.complement() == 0)
    throw DomainError("cyclic identities need 0 < m < 1");
  ResidualReport rep;
  rep.id = s.name;
  rep.add_param("p", p.value());
  if (uses_shift(id)) rep.add_param("r", r);
  rep.add_param("m", to_double(m.m()));
  rep.tolerance = identity_tolerance;
  TransformData td = make_transform_data(p, m);
  CyclicShift shift = make_cyclic_shift(p, uses_shift(id) ? r : 1, m);
  std::vector<double> worst(s.readings.size(), 0);
  std::vector<bool> used(s.readings.size(), false);
  for (double x : xs) {
    try {
      auto res = sample(s, td, shift, x, start);
      ++rep.samples;
      for (std::size_t i = 0; i < res.size(); ++i) {
        if (!res[i]) continue;
        used[i] = true;
        worst[i] = std::max(worst[i], std::isnan(*res[i]) ? INFINITY : *res[i]);
      }
    } catch (const PoleError& e) {
      ++rep.pole_skips;
      rep.note = e.what();
    }
  }
  double best = INFINITY;
  for (std::size_t i = 0; i < worst.size(); ++i) {
    if (!used[i]) continue;
    bool holds = worst[i] <= rep.tolerance;
    rep.readings.push_back({s.readings[i].label, worst[i], holds});
    if (holds && rep.resolved.empty()) rep.resolved = s.readings[i].label;
    best = std::min(best, worst[i]);
  }
  if (rep.samples == 0) {
    rep.status = rep.pole_skips > 0 ? Status::skipped_pole : Status::pass;
    rep.max_residual = 0;
    return rep;
  }
  rep.max_residual = best;
  rep.status = best <= rep.tolerance ? Status::pass : Status::fail;
  return rep;
}

ResidualReport evaluate_identity(IdentityId id, Order p, const CyclicShift& shift,
                                 const QuadModulus& m, double x, int start) {
  double xs[] = {x};
  return evaluate_identity(id, p, shift.r, m, xs, start);
}

std::vector<ResidualReport> catalog_sweep(std::span<const int> ps, std::span<const double> ms,
                                          std::span<const double> xs) {
  std::vector<ResidualReport> out;
  if (xs.empty()) return out;
  for (IdentityId id : all_identities) {
    for (int pv : ps) {
      Order p(pv);
      const int r_max = uses_shift(id) ? pv - 1 : 1;
      for (int r = 1; r <= r_max; ++r) {
        for (double mv : ms) {
          QuadModulus m{Quad(mv)};
          try {
            out.push_back(evaluate_identity(id, p, r, m, xs));
          } catch (const Error& e) {
            ResidualReport rep;
            rep.id = to_string(id);
            rep.add_param("p", pv);
            if (uses_shift(id)) rep.add_param("r", r);
            rep.add_param("m", mv);
            rep.status = Status::not_applicable;
            rep.note = e.what();
            out.push_back(std::move(rep));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace landen
