#include <doctest.h>

#include <cmath>
#include <random>

#include "landen/elliptic.hpp"

using namespace landen;

namespace {

struct JacobiRef {
  double x, m, sn, cn, dn;
};

// 30-digit values from an independent arbitrary-precision library.
const JacobiRef jacobi_refs[] = {
    {0.3, 0.5, 0.29341273316845537748, 0.95598586182778707744, 0.97824050417436120533},
    {2.7, 0.9, 0.99925369830369450195, -0.038627016793807513024, 0.31834390489492673292},
    {-4.1, 0.2, 0.693805013382306524, -0.7201629006034519862, 0.95064552840746875712},
    {1.0, 0.999999, 0.76159424136071365579, 0.6480541732958742648, 0.64805462080907001549},
    {7.5, 0.05, 0.90294102022548918185, 0.42976448666002259176, 0.97940536842499879905},
};

struct CompleteRef {
  double m, K, E;
};
const CompleteRef complete_refs[] = {
    {0.1, 1.6124413487202194007, 1.5307576368977632002},
    {0.5, 1.8540746773013719184, 1.3506438810476755025},
    {0.9, 2.5780921133481732927, 1.1047747327040733079},
    {0.999999, 8.2940514636010622019, 1.000003897026172166},
};

double simpson(auto f, double a, double b, int n) {
  double h = (b - a) / n, s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4 : 2) * f(a + i * h);
  return s * h / 3;
}

}  // namespace

TEST_CASE("jacobi_real matches reference values") {
  for (const auto& r : jacobi_refs) {
    CAPTURE(r.x);
    CAPTURE(r.m);
    auto t = jacobi_real(r.x, ModulusParameter(r.m));
    CHECK(std::abs(t.sn - r.sn) < 1e-13);
    CHECK(std::abs(t.cn - r.cn) < 1e-13);
    CHECK(std::abs(t.dn - r.dn) < 1e-13);
    auto q = jacobi_real(Quad(r.x), QuadModulus(Quad(r.m)));
    CHECK(std::abs(to_double(q.sn) - r.sn) < 1e-15);
    CHECK(std::abs(to_double(q.dn) - r.dn) < 1e-15);
  }
}

TEST_CASE("complete integrals match reference values") {
  for (const auto& r : complete_refs) {
    ModulusParameter m(r.m);
    CHECK(std::abs(complete_K(m) - r.K) / r.K < 1e-14);
    CHECK(std::abs(complete_E(m) - r.E) < 1e-14);
  }
  CHECK(complete_K(ModulusParameter(0.0)) == doctest::Approx(std::acos(-1.0) / 2).epsilon(1e-15));
  CHECK(complete_E(ModulusParameter(1.0)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(complete_K(ModulusParameter(1.0)), DomainError);
}

TEST_CASE("complementary parameter keeps its accuracy") {
  auto m = ModulusParameter::from_complement(1e-12);
  CHECK(m.complement() == 1e-12);
  CHECK(m.complementary().m() == 1e-12);
  CHECK(complete_K(m) > 14);
}

TEST_CASE("Carlson integrals") {
  CHECK(carlson_rf(1.0, 2.0, 0.0) == doctest::Approx(1.3110287771461).epsilon(1e-12));
  CHECK(carlson_rd(0.0, 2.0, 1.0) == doctest::Approx(1.7972103521034).epsilon(1e-12));
  CHECK(carlson_rf(0.5, 0.5, 0.5) == doctest::Approx(1 / std::sqrt(0.5)).epsilon(1e-14));
}

TEST_CASE("Jacobi zeta") {
  ModulusParameter m(0.3);
  CHECK(std::abs(jacobi_zeta(0.0, m)) < 1e-15);
  CHECK(std::abs(jacobi_zeta(complete_K(m), m)) < 1e-13);
  // Z(x) = integral of dn^2 minus (E/K) x, by quadrature.
  const double E = complete_E(m), K = complete_K(m);
  double q = simpson([&](double t) { double d = jacobi_real(t, m).dn; return d * d; }, 0, 0.8, 400) - E / K * 0.8;
  CHECK(std::abs(jacobi_zeta(0.8, m) - q) < 1e-11);
  CHECK(std::abs(jacobi_zeta(0.8, m) - 0.081603928483900072949) < 1e-14);
  CHECK_THROWS_AS(jacobi_zeta(0.5, ModulusParameter(1.0)), DomainError);
}

TEST_CASE("minor functions are ratios of the triple") {
  ModulusParameter m(0.4);
  auto t = jacobi_real(0.9, m);
  CHECK(jacobi_minor(MinorKind::cs, 0.9, m) == doctest::Approx(t.cn / t.sn));
  CHECK(jacobi_minor(MinorKind::nd, 0.9, m) == doctest::Approx(1 / t.dn));
  CHECK(jacobi_minor(MinorKind::sd, 0.9, m) == doctest::Approx(t.sn / t.dn));
}

TEST_CASE("complex argument") {
  auto t = jacobi_complex({0.7, 0.4}, ModulusParameter(0.3));
  CHECK(std::abs(t.sn - std::complex<double>(0.68767508143693019201, 0.29505376827002253847)) < 1e-14);
  CHECK(std::abs(t.cn - std::complex<double>(0.82166790242055707023, -0.24693811639183309351)) < 1e-14);
  CHECK(std::abs(t.dn - std::complex<double>(0.94255952990802611113, -0.064579833215359797743)) < 1e-14);
  // ns has a pole at the origin.
  ModulusParameter m(0.5);
  CHECK_THROWS_AS(jacobi_minor_complex(MinorKind::ns, {0, 0}, m), PoleError);
}

TEST_CASE("limits at m = 0 and m = 1") {
  for (double x : {-3.0, 0.2, 5.5}) {
    auto a = jacobi_real(x, ModulusParameter(0.0));
    CHECK(std::abs(a.sn - std::sin(x)) < 1e-15);
    auto b = jacobi_real(x, ModulusParameter(1.0));
    CHECK(std::abs(b.dn - 1 / std::cosh(x)) < 1e-15);
  }
}

TEST_CASE("modulus rejects values outside [0, 1]") {
  CHECK_THROWS_AS(ModulusParameter(-0.1), DomainError);
  CHECK_THROWS_AS(ModulusParameter(1.5), DomainError);
  CHECK_THROWS_AS(ModulusParameter(std::nan("")), DomainError);
  CHECK_THROWS_AS(jacobi_real(double(INFINITY), ModulusParameter(0.5)), DomainError);
}
