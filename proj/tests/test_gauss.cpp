#include <doctest.h>

#include <cmath>

#include "landen/gauss.hpp"

using namespace landen;

namespace {

QuadModulus qm(double m) { return QuadModulus(Quad(m)); }

// 1 - m~ and dc(0.6, m~) from the nome relation q~ = q^(1/p).
struct Ref {
  int p;
  double m, complement, dc;
};
const Ref refs[] = {
    {3, 0.2, 0.01553203485563434764632, 1.0031498725861533303},
    {4, 0.5, 0.00005579592104994237345185, 1.0000113078454643751},
    {6, 0.8, 1.175521761544987642937e-10, 1.0000000000238235815},
    {2, 0.25, 0.1111111111111111111111, 1.0226255119538112898},
};

}  // namespace

TEST_CASE("m~ agrees with the nome oracle") {
  for (const auto& r : refs) {
    CAPTURE(r.p);
    QuadModulus mt = gauss_m_tilde(Order(r.p), qm(r.m));
    CHECK(std::abs(to_double(mt.complement()) / r.complement - 1) < 1e-12);
    GaussData g = make_gauss_data(Order(r.p), qm(r.m));
    CHECK(std::abs(gauss_sum(GaussKind::dc, g, 0.6).real() - r.dc) < 1e-12);
  }
}

TEST_CASE("classical example p = 2, m = 0.75") {
  QuadModulus l = landen_m_tilde(Order(2), qm(0.75));
  CHECK(to_double(l.m()) == doctest::Approx(1.0 / 9).epsilon(1e-15));
  CHECK(to_double(gauss_m_tilde(Order(2), l).m()) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("sc at p = 2 matches the quadratic Gauss transformation") {
  ModulusParameter m(0.25);
  const double k = m.k(), x = 0.5, u = x / (1 + k);
  auto t = jacobi_real(u, m);
  const double den = 1 + k * t.sn * t.sn;
  const double sc = ((1 + k) * t.sn / den) / (t.cn * t.dn / den);
  auto v = gauss_sum(GaussKind::sc, Order(2), qm(0.25), x);
  CHECK(std::abs(v.real() - sc) < 1e-14);
  CHECK(std::abs(v.imag()) < 1e-14);
}

TEST_CASE("roundtrips") {
  for (int p = 2; p <= 6; ++p)
    for (double m : {0.05, 0.5, 0.95}) {
      CAPTURE(p);
      CAPTURE(m);
      auto rep = verify_gauss_landen_inverse(Order(p), qm(m));
      CHECK(rep.passed());
      CHECK(rep.max_residual < 1e-15);
    }
}

TEST_CASE("ascending and end points") {
  for (int p = 2; p <= 7; ++p)
    for (double m : {0.01, 0.3, 0.7, 0.99}) CHECK(to_double(gauss_m_tilde(Order(p), qm(m)).m()) > m);
  CHECK(gauss_m_tilde(Order(3), qm(1)).m() == 1);
  CHECK_THROWS_AS(make_gauss_data(Order(3), qm(0)), DomainError);
}

TEST_CASE("constants equal the Landen constants at 1 - m") {
  GaussData g = make_gauss_data(Order(5), qm(0.25));
  TransformData td = make_transform_data(Order(5), qm(0.75));
  CHECK(deviation(g.beta, td.alpha) < 1e-30);
  CHECK(deviation(*g.beta1, *td.alpha1) < 1e-30);
  CHECK(!g.beta2.has_value());
}

TEST_CASE("formula dispatch by parity") {
  GaussData odd = make_gauss_data(Order(3), qm(0.5));
  GaussData even = make_gauss_data(Order(4), qm(0.5));
  CHECK_THROWS_AS(gauss_formula(GaussFormula::sc_product, odd, 0.2), ParityError);
  CHECK_THROWS_AS(gauss_formula(GaussFormula::nc_sum, even, 0.2), ParityError);
  CHECK_NOTHROW(gauss_formula(GaussFormula::dc_sum, even, 0.2));
  for (GaussKind kind : {GaussKind::dc, GaussKind::nc, GaussKind::sc})
    for (const GaussData* g : {&odd, &even}) {
      auto v = gauss_sum(kind, *g, 0.7);
      CHECK(std::abs(v.real() - gauss_target(kind, *g, 0.7)) < 1e-9);
      CHECK(std::abs(v.imag()) < 1e-10);
    }
}

TEST_CASE("even-p sc product reports both left sides") {
  double xs[] = {0.1, 0.4, 0.9};
  auto rep = verify_gauss_formula(GaussKind::sc, Order(4), qm(0.5), xs);
  CHECK(rep.passed());
  REQUIRE(rep.readings.size() == 3);
  CHECK(rep.readings[1].holds);
  CHECK_FALSE(rep.readings[2].holds);
}

TEST_CASE("even p at x = 0 puts a term at iK'") {
  for (int p : {2, 4, 6})
    for (double m : {0.2, 0.5, 0.9})
      for (double x : {0.0, 1e-6, 0.4}) {
        CAPTURE(p);
        CAPTURE(m);
        CAPTURE(x);
        GaussData g = make_gauss_data(Order(p), qm(m));
        for (GaussKind k : {GaussKind::dc, GaussKind::nc, GaussKind::sc}) {
          CHECK(gauss_term_magnitude(k, g, x) < 1e8);
          auto v = gauss_sum(k, g, x);
          CHECK(deviation(v.real(), gauss_target(k, g, x)) < 1e-10);
          CHECK(std::abs(v.imag()) < 1e-10);
        }
      }
}
