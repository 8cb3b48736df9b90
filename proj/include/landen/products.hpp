#pragma once

#include <optional>
#include <span>

#include "landen/landen.hpp"

namespace landen {

// Pair sums over the lattice. A_d uses x_j; A_s and A_c use x~_j (odd p).
struct LatticeSums {
  Quad A_d;
  std::optional<Quad> A_s, A_c;
};

LatticeSums lattice_sums(const TransformData& td);
LatticeSums lattice_sums(Order p, const QuadModulus& m);
// Brute-force double sums at the lattice shifted by alpha x.
LatticeSums lattice_sums_direct(const TransformData& td, const Quad& x);

enum class ProductKind { sn_cn, sn_dn, cn_dn, dn2, sn_cn_dn, dn3, cn3, sn3 };
const char* to_string(ProductKind k);
inline constexpr ProductKind all_product_kinds[] = {
    ProductKind::sn_cn, ProductKind::sn_dn,    ProductKind::cn_dn, ProductKind::dn2,
    ProductKind::sn_cn_dn, ProductKind::dn3, ProductKind::cn3,   ProductKind::sn3};

Quad product_transform(ProductKind kind, const TransformData& td, const LatticeSums& s,
                       const Quad& x);
Quad product_transform(ProductKind kind, Order p, const QuadModulus& m, const Quad& x);
// Same sums with the coefficients exactly as printed; differs from
// product_transform only for sn_cn_dn and dn3.
Quad product_transform_printed(ProductKind kind, const TransformData& td,
                               const LatticeSums& s, const Quad& x);
// The product itself at the transformed parameter.
Quad product_target(ProductKind kind, const TransformData& td, const Quad& x);

Quad zeta_transform(const TransformData& td, const Quad& x);
Quad zeta_transform(Order p, const QuadModulus& m, const Quad& x);
Quad E_transform(const TransformData& td, const LatticeSums& s);
Quad E_transform(Order p, const QuadModulus& m);

enum class RemarkableIdentity { eq99, eq100, eq101, eq108, eq109 };
const char* to_string(RemarkableIdentity id);

ResidualReport verify_remarkable_identities(RemarkableIdentity which, Order p,
                                            const QuadModulus& m,
                                            std::span<const double> xs);
// 1/alpha^2 = p + 2(A_d + A_s) and m/alpha1^2 = mp + 2(A_s + A_c), odd p.
ResidualReport verify_consistency_conditions(Order p, const QuadModulus& m);

}  // namespace landen
