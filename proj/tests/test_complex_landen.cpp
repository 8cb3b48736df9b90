#include <doctest.h>

#include <cmath>

#include "landen/complex_landen.hpp"

using namespace landen;
using Cx = std::complex<double>;

namespace {

// dn, cn, sn(0.7, m~) at the complex parameter, from an arbitrary-precision
// library that accepts complex m.
struct Ref {
  int p;
  Cx dn, cn, sn;
};
const Ref refs[] = {
    {3, {0.66611883564013838, -1.480562709718886}, {0.85817623769257621, 0.21749138429334332},
     {0.63110982929814473, -0.29574240368111521}},
    {4, {-0.61246450932464672, 0}, {0.99075982840929678, 0}, {-0.1356280295896862, 0}},
};

}  // namespace

TEST_CASE("sums agree with the functions at the complex parameter") {
  ModulusParameter m(0.5);
  for (const auto& r : refs) {
    CAPTURE(r.p);
    ComplexShiftData d = make_complex_shift_data(Order(r.p), m);
    CHECK(std::abs(complex_landen_sum(FunctionKind::dn, d, 0.7) - r.dn) < 1e-12);
    CHECK(std::abs(complex_landen_sum(FunctionKind::cn, d, 0.7) - r.cn) < 1e-12);
    CHECK(std::abs(complex_landen_sum(FunctionKind::sn, d, 0.7) - r.sn) < 1e-12);
  }
}

TEST_CASE("p = 2 reduces to the classical complex formulas") {
  for (double m : {0.2, 0.5, 0.9}) {
    ModulusParameter mp(m);
    ComplexShiftData d = make_complex_shift_data(Order(2), mp);
    CHECK(std::abs(d.m_tilde - classical_m_tilde(mp)) < 1e-12);
    for (double x : {-1.3, 0.4, 2.2})
      for (FunctionKind k : {FunctionKind::dn, FunctionKind::cn, FunctionKind::sn})
        CHECK(std::abs(complex_landen_sum(k, d, x) - classical_complex(k, mp, x)) < 1e-12);
  }
  // k = k' gives m~ = ((1 - i)/(1 + i))^2 = -1.
  CHECK(std::abs(make_complex_shift_data(Order(2), ModulusParameter(0.5)).m_tilde - Cx(-1, 0)) < 1e-14);
  double xs[] = {0.3, 1.1};
  CHECK(verify_complex_p2(ModulusParameter(0.35), xs).passed());
}

TEST_CASE("duality route") {
  double xs[] = {0.2, 0.7, 1.9};
  for (int p : {3, 4}) {
    auto rep = verify_complex_duality(Order(p), ModulusParameter(0.5), xs);
    CHECK(rep.passed());
    CHECK(rep.max_residual < 1e-9);
    CHECK(rep.resolved == "rescaled constants");
  }
  ComplexShiftData d = make_complex_shift_data(Order(3), ModulusParameter(0.5));
  CHECK(std::abs(d.m_tilde - duality_m_tilde(d)) < 1e-12);
  CHECK(std::abs(complex_landen_sum(FunctionKind::dn, d, 0.7) - duality_sum(FunctionKind::dn, d, 0.7)) < 1e-12);
}

TEST_CASE("first-order equation at m~") {
  double xs[] = {0.25, 0.8};
  for (int p = 2; p <= 6; ++p) CHECK(verify_complex_first_integral(Order(p), ModulusParameter(0.4), xs).passed());
}

TEST_CASE("constants and errors") {
  ComplexShiftData even = make_complex_shift_data(Order(4), ModulusParameter(0.5));
  CHECK(!even.delta1.has_value());
  CHECK(even.D0.has_value());
  ComplexShiftData odd = make_complex_shift_data(Order(5), ModulusParameter(0.5));
  CHECK(odd.delta1.has_value());
  CHECK(!odd.D0.has_value());
  CHECK_THROWS_AS(make_complex_shift_data(Order(3), ModulusParameter(0.0)), DomainError);
  CHECK_THROWS_AS(make_complex_shift_data(Order(3), ModulusParameter(1.0)), DomainError);
  CHECK_THROWS_AS(complex_landen_sum_printed(FunctionKind::cn, even, 0.3), DomainError);
}
