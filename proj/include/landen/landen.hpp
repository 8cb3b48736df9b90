#pragma once

#include <optional>
#include <vector>

#include "landen/elliptic.hpp"
#include "landen/report.hpp"

namespace landen {

enum class FunctionKind { dn, cn, sn };
const char* to_string(FunctionKind k);

class Order {
 public:
  explicit Order(int p) : p_(p) {
    if (p < 2) throw DomainError("order p must be an integer >= 2");
  }
  int value() const { return p_; }
  bool odd() const { return p_ % 2 != 0; }
  bool even() const { return p_ % 2 == 0; }

 private:
  int p_;
};

// real_2K: x_j = alpha x + 2(j-1)K/p; real_4K: x~_j = alpha x + 4(j-1)K/p.
enum class LatticeKind { real_2K, real_4K };

struct ShiftLattice {
  LatticeKind kind;
  int p;
  QuadModulus m;
  std::vector<Quad> points;  // offsets without the alpha x term
};

ShiftLattice make_shift_lattice(LatticeKind kind, Order p, const QuadModulus& m);

struct TransformData {
  Order p{2};
  QuadModulus m;
  CompleteIntegrals<Quad> ke{};
  Quad alpha;
  std::optional<Quad> alpha1;  // odd p
  std::optional<Quad> alpha2;  // even p
  std::optional<Quad> A0;      // even p
  QuadModulus m_tilde;

  Quad step(LatticeKind kind) const;
  // Lattice point with a literal (unreduced) index j.
  Quad point(LatticeKind kind, long j, const Quad& x) const;
};

TransformData make_transform_data(Order p, const QuadModulus& m);

struct ClosedFormAux {
  Quad q;  // dn(2K/3, m)
  Quad t;  // (1 - m)^(1/4)
};
ClosedFormAux closed_form_aux(const QuadModulus& m);
Quad m_tilde_closed_form(Order p, const QuadModulus& m);

// The m~ aliases obtained from the different formula families.
struct MTildeAliases {
  Quad m_tilde;
  std::optional<Quad> m1, m3;  // odd p
  std::optional<Quad> m2, m4;  // even p
};
MTildeAliases m_tilde_aliases(const TransformData& td);

Quad landen_sum(FunctionKind kind, const TransformData& td, const Quad& x);
Quad landen_sum(FunctionKind kind, Order p, const QuadModulus& m, const Quad& x);
Quad landen_product(FunctionKind kind, const TransformData& td, const Quad& x);
Quad landen_product(FunctionKind kind, Order p, const QuadModulus& m, const Quad& x);
Quad landen_sn_even_product(const TransformData& td, const Quad& x);
Quad landen_sn_even_product(Order p, const QuadModulus& m, const Quad& x);
// The function itself at the transformed parameter.
Quad landen_target(FunctionKind kind, const TransformData& td, const Quad& x);

// m^(p/2) alpha alpha2 prod sn(2jK/p) against prod ns^2(2nK/p), even p.
Quad identity81_residual(const TransformData& td);

ResidualReport verify_period_relation(Order p, const QuadModulus& m);
ResidualReport verify_m_tilde_equivalence(Order p, const QuadModulus& m);

}  // namespace landen
