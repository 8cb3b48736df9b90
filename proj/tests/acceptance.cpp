// Acceptance criteria, one PASS/FAIL line each. Exit status is the number of
// failed criteria.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "landen/complex_landen.hpp"
#include "landen/cyclic.hpp"
#include "landen/gauss.hpp"
#include "landen/products.hpp"
#include "landen/sine_gordon.hpp"
#include "landen/suites.hpp"

using namespace landen;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

QuadModulus qm(double m) { return QuadModulus(Quad(m)); }

std::vector<double> table_default_m_all() {
  return {std::begin(table1_default_m), std::end(table1_default_m)};
}

std::vector<double> m_grid() {
  std::vector<double> v;
  for (int i = 1; i <= 9; ++i) v.push_back(i / 10.0);
  return v;
}

struct Outcome {
  bool pass;
  std::string detail;
};

struct Worst {
  double value = 0;
  std::string where;
  void take(double v, const std::string& at) {
    if (std::isnan(v)) v = INFINITY;
    if (v > value || where.empty()) {
      value = std::max(value, v);
      if (v >= value) where = at;
    }
  }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::mt19937_64 rng(20240601);
double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

// ---- 1 -------------------------------------------------------------------

// Interior entries as printed: 8 rows m = 0.25 .. 0.99999, columns p = 2..7.
const double table_ms[] = {0.25, 0.5, 0.75, 0.9, 0.99, 0.999, 0.9999, 0.99999};
const double table_printed[8][6] = {
    {5.155e-3, 9.288e-5, 1.669e-6, 3.000e-8, 5.392e-10, 9.693e-12},
    {2.944e-2, 1.290e-3, 5.580e-5, 2.411e-6, 1.042e-7, 4.503e-9},
    {1.111e-1, 1.005e-2, 8.666e-4, 7.438e-5, 6.381e-6, 5.475e-7},
    {2.699e-1, 4.311e-2, 6.158e-3, 8.655e-4, 1.213e-4, 1.701e-5},
    {6.694e-1, 2.506e-1, 7.283e-2, 1.963e-2, 5.185e-3, 1.362e-3},
    {8.811e-1, 5.292e-1, 2.374e-1, 9.312e-2, 3.464e-2, 1.264e-2},
    {9.608e-1, 7.446e-1, 4.481e-1, 2.293e-1, 1.080e-1, 4.891e-2},
    {9.874e-1, 8.721e-1, 6.374e-1, 3.973e-1, 2.239e-1, 1.193e-1},
};

double round4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return std::stod(buf);
}

Outcome criterion1() {
  auto t0 = Clock::now();
  std::vector<std::vector<double>> got;
  for (double m : table_default_m_all()) {
    std::vector<double> row;
    for (int p = 2; p <= 7; ++p) row.push_back(table1_entry(p, m));
    got.push_back(row);
  }
  const double dt = seconds_since(t0);
  int matched = 0, total = 0;
  std::string misses;
  bool ends_exact = true;
  for (std::size_t r = 0; r < got.size(); ++r) {
    const double m = table1_default_m[r];
    for (int p = 2; p <= 7; ++p) {
      const double v = got[r][p - 2];
      if (m == 0 || m == 1) {
        ends_exact = ends_exact && v == m;
        continue;
      }
      int i = 0;
      while (table_ms[i] != m) ++i;
      const double printed = table_printed[i][p - 2];
      ++total;
      if (std::abs(round4(v) - printed) <= 1e-9 * printed) {
        ++matched;
      } else {
        misses += fmt(" [m=%g p=%d printed %.4g computed %.6g]", m, p, printed, v);
      }
    }
  }
  const bool pass = matched == total && ends_exact && dt < 1.0;
  return {pass, fmt("%d/%d interior entries match at 4 significant figures, end rows %s, %.3f s", matched,
                    total, ends_exact ? "exact" : "wrong", dt) +
                    misses};
}

// ---- 2 -------------------------------------------------------------------

Outcome criterion2() {
  Worst w;
  for (int i = 0; i < 200; ++i) {
    const double u = uniform(-5, 5), m = uniform(0.01, 0.99);
    ModulusParameter mp(m);
    auto t = jacobi_real(u, mp);
    const std::string at = fmt("u=%.6g m=%.6g", u, m);
    {
      const double kp = mp.k_prime(), r = (1 - kp) / (1 + kp), x = (1 + kp) * u;
      const double dn = (1 - (1 - kp) * t.sn * t.sn) / t.dn;
      const double cn = (1 - (1 + kp) * t.sn * t.sn) / t.dn;
      const double sn = (1 + kp) * t.sn * t.cn / t.dn;
      auto l = jacobi_real(x, ModulusParameter(r * r));
      w.take(std::max({deviation(l.dn, dn), deviation(l.cn, cn), deviation(l.sn, sn)}), "Landen core " + at);
      TransformData td = make_transform_data(Order(2), qm(m));
      w.take(std::max({deviation(to_double(landen_sum(FunctionKind::dn, td, Quad(x))), dn),
                       deviation(to_double(landen_sum(FunctionKind::cn, td, Quad(x))), cn),
                       deviation(to_double(landen_sum(FunctionKind::sn, td, Quad(x))), sn)}),
             "Landen sums " + at);
    }
    {
      const double k = mp.k(), x = (1 + k) * u, den = 1 + k * t.sn * t.sn;
      const double dn = (1 - k * t.sn * t.sn) / den, cn = t.cn * t.dn / den, sn = (1 + k) * t.sn / den;
      auto g = jacobi_real(x, ModulusParameter(4 * k / ((1 + k) * (1 + k))));
      w.take(std::max({deviation(g.dn, dn), deviation(g.cn, cn), deviation(g.sn, sn)}), "Gauss core " + at);
      GaussData gd = make_gauss_data(Order(2), qm(m));
      // The ratio forms are compared after multiplying back by cn(x, m~).
      w.take(std::max({deviation(std::real(gauss_sum(GaussKind::dc, gd, x)) * cn, dn),
                       deviation(std::real(gauss_sum(GaussKind::nc, gd, x)) * cn, 1.0),
                       deviation(std::real(gauss_sum(GaussKind::sc, gd, x)) * cn, sn)}),
             "Gauss sums " + at);
    }
  }
  return {w.value < 1e-11, fmt("max residual %.3e (%s), limit 1e-11", w.value, w.where.c_str())};
}

// ---- 3 -------------------------------------------------------------------

Outcome criterion3() {
  Worst w;
  for (int p = 2; p <= 7; ++p)
    for (double m : m_grid()) {
      TransformData td = make_transform_data(Order(p), qm(m));
      for (int i = 0; i < 50; ++i) {
        const double x = uniform(-5, 5);
        for (FunctionKind k : {FunctionKind::dn, FunctionKind::cn, FunctionKind::sn})
          w.take(deviation(landen_sum(k, td, Quad(x)), landen_target(k, td, Quad(x))),
                 fmt("%s p=%d m=%g x=%.6g", to_string(k), p, m, x));
      }
    }
  return {w.value < 1e-10, fmt("max residual %.3e (%s), limit 1e-10", w.value, w.where.c_str())};
}

// ---- 4 -------------------------------------------------------------------

Outcome criterion4() {
  Worst alias, closed;
  for (int p = 2; p <= 7; ++p)
    for (double m : m_grid()) {
      TransformData td = make_transform_data(Order(p), qm(m));
      MTildeAliases al = m_tilde_aliases(td);
      const std::string at = fmt("p=%d m=%g", p, m);
      for (const auto* v : {&al.m1, &al.m2, &al.m3, &al.m4})
        if (*v) alias.take(deviation(**v, al.m_tilde), at);
      if (p <= 4) closed.take(deviation(m_tilde_closed_form(Order(p), qm(m)), al.m_tilde), at);
    }
  return {alias.value < 1e-10 && closed.value < 1e-11,
          fmt("aliases %.3e (limit 1e-10), closed forms p=2,3,4 %.3e (limit 1e-11)", alias.value, closed.value)};
}

// ---- 5 -------------------------------------------------------------------

Outcome criterion5() {
  Worst w;
  for (int p = 2; p <= 7; ++p)
    for (double m : m_grid()) {
      w.take(verify_period_relation(Order(p), qm(m)).max_residual, fmt("p=%d m=%g", p, m));
    }
  return {w.value < 1e-10, fmt("max relative residual %.3e (%s), limit 1e-10", w.value, w.where.c_str())};
}

// ---- 6 -------------------------------------------------------------------

Outcome criterion6() {
  Worst w;
  for (int p = 2; p <= 6; ++p)
    for (double m : {0.01, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99}) {
      const double a = to_double(gauss_m_tilde(Order(p), landen_m_tilde(Order(p), qm(m))).m());
      const double b = to_double(landen_m_tilde(Order(p), gauss_m_tilde(Order(p), qm(m))).m());
      w.take(std::max(std::abs(a - m), std::abs(b - m)), fmt("p=%d m=%g", p, m));
    }
  return {w.value < 1e-10, fmt("max roundtrip error %.3e (%s), limit 1e-10", w.value, w.where.c_str())};
}

// ---- 7 -------------------------------------------------------------------

Outcome criterion7() {
  Worst sp, id81;
  std::size_t poles = 0;
  for (int p : {3, 5, 7})
    for (int i = 0; i < 50; ++i) {
      const double m = uniform(0.05, 0.95), x = uniform(-5, 5);
      TransformData td = make_transform_data(Order(p), qm(m));
      for (FunctionKind k : {FunctionKind::dn, FunctionKind::cn, FunctionKind::sn}) {
        try {
          sp.take(deviation(landen_sum(k, td, Quad(x)), landen_product(k, td, Quad(x))),
                  fmt("%s p=%d m=%.6g x=%.6g", to_string(k), p, m, x));
        } catch (const PoleError&) {
          ++poles;
        }
      }
    }
  for (int p : {2, 4, 6})
    for (double m : m_grid()) {
      TransformData td = make_transform_data(Order(p), qm(m));
      Quad rhs = 1;
      for (int n = 1; n < p / 2; ++n) {
        Quad s = jacobi_real(td.step(LatticeKind::real_2K) * n, td.m).sn;
        rhs /= s * s;
      }
      id81.take(deviation(identity81_residual(td) + rhs, rhs), fmt("p=%d m=%g", p, m));
    }
  return {sp.value < 1e-9 && id81.value < 1e-9,
          fmt("sum = product %.3e (%zu pole skips), even-p identity %.3e, limit 1e-9", sp.value, poles, id81.value)};
}

// ---- 8 -------------------------------------------------------------------

Outcome criterion8() {
  Worst prod, zeta, E, cons;
  for (int p = 2; p <= 7; ++p)
    for (double m : m_grid()) {
      TransformData td = make_transform_data(Order(p), qm(m));
      LatticeSums ls = lattice_sums(td);
      const std::string at = fmt("p=%d m=%g", p, m);
      std::vector<double> xs = {0.0};
      for (int i = 0; i < 19; ++i) xs.push_back(uniform(-5, 5));
      for (double x : xs) {
        for (ProductKind k : all_product_kinds)
          prod.take(deviation(product_transform(k, td, ls, Quad(x)), product_target(k, td, Quad(x))),
                    std::string(to_string(k)) + " " + at);
        zeta.take(deviation(zeta_transform(td, Quad(x)), jacobi_zeta(Quad(x), td.m_tilde)), at);
      }
      E.take(deviation(E_transform(td, ls), complete_E(td.m_tilde)), at);
      std::vector<double> five(xs.begin() + 1, xs.begin() + 6);
      if (p % 2) {
        cons.take(verify_consistency_conditions(Order(p), qm(m)).max_residual, "eq93 " + at);
      } else {
        for (RemarkableIdentity id : {RemarkableIdentity::eq108, RemarkableIdentity::eq109}) {
          auto rep = verify_remarkable_identities(id, Order(p), qm(m), five);
          cons.take(rep.max_residual, std::string(to_string(id)) + " " + at);
        }
      }
    }
  const bool pass = prod.value < 1e-9 && zeta.value < 1e-9 && E.value < 1e-9 && cons.value < 1e-9;
  return {pass, fmt("products %.3e (%s), zeta %.3e, E %.3e, consistency %.3e, limit 1e-9", prod.value,
                    prod.where.c_str(), zeta.value, E.value, cons.value)};
}

// ---- 9 -------------------------------------------------------------------

Outcome criterion9() {
  const int ps[] = {2, 3, 4, 5, 6};
  const auto ms = m_grid();
  std::vector<double> xs;
  for (int i = 0; i < 10; ++i) xs.push_back(uniform(-3, 3));
  auto reps = catalog_sweep(ps, ms, xs);
  Worst w;
  std::size_t samples = 0, skips = 0, failed = 0;
  std::vector<std::string> seen;
  for (const auto& r : reps) {
    if (r.status == Status::not_applicable) continue;
    samples += r.samples;
    skips += r.pole_skips;
    if (r.samples > 0) w.take(r.max_residual, r.id);
    if (r.status == Status::fail) ++failed;
    if (r.samples > 0 && std::find(seen.begin(), seen.end(), r.id) == seen.end()) seen.push_back(r.id);
  }
  const double frac = double(skips) / double(samples + skips);
  const bool pass = w.value < 1e-8 && failed == 0 && frac < 0.05 && seen.size() == 22;
  return {pass, fmt("%zu identities evaluated, max residual %.3e (%s), %zu failed cells, pole skips %.2f%% of "
                    "%zu samples, limits 1e-8 and 5%%",
                    seen.size(), w.value, w.where.c_str(), failed, 100 * frac, samples + skips)};
}

// ---- 10 ------------------------------------------------------------------

Outcome criterion10() {
  Worst ode, spread, mt;
  int cells = 0;
  for (SgForm form : all_sg_forms)
    for (int p = 2; p <= 7; ++p) {
      if ((form == SgForm::eq31 || form == SgForm::eq50) && p % 2 == 0) continue;
      if ((form == SgForm::eq36 || form == SgForm::eq54) && p % 2 == 1) continue;
      for (double m : m_grid()) {
        ++cells;
        auto rep = verify_superposition(form, Order(p), qm(m));
        const std::string at = fmt("%s p=%d m=%g", to_string(form), p, m);
        ode.take(rep.readings[0].residual, at);
        spread.take(rep.readings[1].residual, at);
        mt.take(rep.readings[2].residual, at);
      }
    }
  const bool pass = ode.value < 1e-5 && spread.value < 1e-8 && mt.value < 1e-9;
  return {pass, fmt("%d cells: ODE %.3e (%s, limit 1e-5), C spread %.3e (limit 1e-8), m~ from C %.3e (limit 1e-9)",
                    cells, ode.value, ode.where.c_str(), spread.value, mt.value)};
}

// ---- 11 ------------------------------------------------------------------

Outcome criterion11() {
  Worst p2, dual;
  for (int i = 0; i < 30; ++i) {
    const double m = uniform(0.02, 0.98);
    const double xs[] = {uniform(-3, 3)};
    auto rep = verify_complex_p2(ModulusParameter(m), xs);
    p2.take(rep.max_residual, fmt("m=%.6g", m));
  }
  for (int p : {3, 4})
    for (double m : m_grid()) {
      std::vector<double> xs;
      for (int i = 0; i < 10; ++i) xs.push_back(uniform(-3, 3));
      auto rep = verify_complex_duality(Order(p), ModulusParameter(m), xs);
      dual.take(rep.max_residual, fmt("p=%d m=%g", p, m));
    }
  return {p2.value < 1e-10 && dual.value < 1e-9,
          fmt("p=2 reductions %.3e (limit 1e-10), duality p=3,4 %.3e (%s, limit 1e-9)", p2.value, dual.value,
              dual.where.c_str())};
}

// ---- 12 ------------------------------------------------------------------

Outcome criterion12() {
  auto t0 = Clock::now();
  SuiteResult all = run_suite("all", {42, std::nullopt});
  const double dt = seconds_since(t0);
  std::string failed;
  for (const auto& c : all.cases)
    if (c.status == Status::fail) failed += " " + c.id;
  const bool pass = all.pass && dt < 60;
  return {pass, fmt("verify --suite all: %zu cases, %zu failed, %.2f s (limit 60 s)", all.cases.size(),
                    all.failures(), dt) +
                    failed};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"table of m~ to 4 significant figures", criterion1},
      {"classical p=2 Landen and Gauss forms", criterion2},
      {"generalized transforms, p = 2..7", criterion3},
      {"m~ aliases and closed forms", criterion4},
      {"period relation", criterion5},
      {"Gauss and Landen roundtrips", criterion6},
      {"sum = product and the even-p identity", criterion7},
      {"products, zeta, E and consistency conditions", criterion8},
      {"cyclic identity catalog", criterion9},
      {"sine-Gordon oracle", criterion10},
      {"complex shifts", criterion11},
      {"property batteries and full verify run", criterion12},
  };
  int failed = 0, n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", n - failed, n);
  return failed;
}
