#include <doctest.h>

#include <cmath>

#include "landen/products.hpp"

using namespace landen;

namespace {

QuadModulus qm(double m) { return QuadModulus(Quad(m)); }

// Z(x, m~) and E(m~), with m~ from the nome relation.
struct ZetaRef {
  int p;
  double m, x, Z, E;
};
const ZetaRef zeta_refs[] = {
    {2, 0.5, 0.6, 0.0068957267855332310153, 1.5591717445722428881},
    {3, 0.5, 1.7, -0.000082106369622269854772, 1.570289481312440663},
    {4, 0.8, -0.9, -0.00037824282260666038016, 1.5701863606040616254},
};

}  // namespace

TEST_CASE("zeta and E transforms against the oracle") {
  for (const auto& r : zeta_refs) {
    CAPTURE(r.p);
    CHECK(std::abs(to_double(zeta_transform(Order(r.p), qm(r.m), Quad(r.x))) - r.Z) < 1e-15);
    CHECK(std::abs(to_double(E_transform(Order(r.p), qm(r.m))) - r.E) < 1e-15);
  }
}

TEST_CASE("every product kind matches the product at m~") {
  for (int p : {3, 4, 5}) {
    TransformData td = make_transform_data(Order(p), qm(0.6));
    LatticeSums ls = lattice_sums(td);
    for (ProductKind k : all_product_kinds)
      for (double x : {0.0, -1.2, 0.35, 2.9}) {
        CAPTURE(p);
        CAPTURE(to_string(k));
        Quad t = product_target(k, td, Quad(x));
        CHECK(deviation(product_transform(k, td, ls, Quad(x)), t) < 1e-9);
      }
  }
}

TEST_CASE("printed coefficients of two formulas do not hold") {
  TransformData td = make_transform_data(Order(3), qm(0.8));
  LatticeSums ls = lattice_sums(td);
  const Quad x = Quad(0.7);
  for (ProductKind k : {ProductKind::sn_cn_dn, ProductKind::dn3}) {
    Quad t = product_target(k, td, x);
    CHECK(deviation(product_transform(k, td, ls, x), t) < 1e-20);
    CHECK(deviation(product_transform_printed(k, td, ls, x), t) > 1e-4);
  }
  CHECK(product_transform_printed(ProductKind::dn2, td, ls, x) == product_transform(ProductKind::dn2, td, ls, x));
}

TEST_CASE("dn^2 transform at x = 0 fixes the additive constant") {
  for (int p = 2; p <= 7; ++p) {
    TransformData td = make_transform_data(Order(p), qm(0.45));
    CHECK(to_double(abs(product_transform(ProductKind::dn2, td, lattice_sums(td), Quad(0)) - 1)) < 1e-25);
  }
}

TEST_CASE("lattice sums: closed forms against direct double sums") {
  for (int p : {3, 4, 7}) {
    TransformData td = make_transform_data(Order(p), qm(0.55));
    LatticeSums a = lattice_sums(td), b = lattice_sums_direct(td, Quad(0.37));
    CHECK(to_double(abs(a.A_d - b.A_d)) < 1e-25);
    CHECK(a.A_s.has_value() == (p % 2 == 1));
    if (a.A_s) {
      CHECK(to_double(abs(*a.A_s - *b.A_s)) < 1e-25);
      CHECK(to_double(abs(*a.A_c - *b.A_c)) < 1e-25);
    }
  }
}

TEST_CASE("remarkable identities") {
  double x0[] = {0.0};
  CHECK(verify_remarkable_identities(RemarkableIdentity::eq99, Order(2), qm(0.5), x0).max_residual < 1e-30);
  double x1[] = {0.3};
  CHECK(verify_remarkable_identities(RemarkableIdentity::eq100, Order(4), qm(0.5), x1).passed());
  double x5[] = {-1.0, -0.2, 0.4, 1.3, 2.5};
  auto r108 = verify_remarkable_identities(RemarkableIdentity::eq108, Order(4), qm(0.7), x5);
  CHECK(r108.passed());
  CHECK(r108.resolved == "sum over j of dn^2(x_j)");
  CHECK_FALSE(r108.readings[1].holds);
  CHECK(verify_remarkable_identities(RemarkableIdentity::eq109, Order(4), qm(0.7), x5).passed());
  CHECK(verify_remarkable_identities(RemarkableIdentity::eq101, Order(6), qm(0.2), x5).passed());
  CHECK_THROWS_AS(verify_remarkable_identities(RemarkableIdentity::eq99, Order(3), qm(0.5), x1), ParityError);
}

TEST_CASE("odd-p consistency conditions") {
  for (int p : {3, 5, 7})
    for (double m : {0.1, 0.5, 0.9}) {
      auto rep = verify_consistency_conditions(Order(p), qm(m));
      CHECK(rep.passed());
      CHECK_FALSE(rep.readings[1].holds);
    }
  CHECK_THROWS_AS(verify_consistency_conditions(Order(4), qm(0.5)), ParityError);
}

TEST_CASE("derivative of the dn transform") {
  TransformData td = make_transform_data(Order(5), qm(0.3));
  LatticeSums ls = lattice_sums(td);
  const Quad h = Quad(1e-5);
  for (double xd : {-0.8, 0.1, 1.6}) {
    Quad x = xd;
    Quad fd = (landen_sum(FunctionKind::dn, td, x + h) - landen_sum(FunctionKind::dn, td, x - h)) / (2 * h);
    CHECK(to_double(abs(fd + td.m_tilde.m() * product_transform(ProductKind::sn_cn, td, ls, x))) < 1e-6);
  }
}

TEST_CASE("interior parameter required") {
  CHECK_THROWS_AS(product_transform(ProductKind::dn2, Order(3), qm(0), Quad(0.2)), DomainError);
}
