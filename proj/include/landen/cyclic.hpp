#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "landen/landen.hpp"

namespace landen {

enum class IdentityId {
  f1, f2, f3, f4, f5, f6, f7, f8, f9, f10, f11, f12, f13, f14, f15,
  eq19, eq71, eq72, eq73, eq79, eq85, eq86
};

inline constexpr IdentityId all_identities[] = {
    IdentityId::f1,   IdentityId::f2,   IdentityId::f3,   IdentityId::f4,   IdentityId::f5,
    IdentityId::f6,   IdentityId::f7,   IdentityId::f8,   IdentityId::f9,   IdentityId::f10,
    IdentityId::f11,  IdentityId::f12,  IdentityId::f13,  IdentityId::f14,  IdentityId::f15,
    IdentityId::eq19, IdentityId::eq71, IdentityId::eq72, IdentityId::eq73, IdentityId::eq79,
    IdentityId::eq85, IdentityId::eq86};

const char* to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(std::string_view name);

// a = 2rK/p, b = 4rK/p.
struct CyclicShift {
  int r = 1;
  Quad a, b;
};

CyclicShift make_cyclic_shift(Order p, int r, const QuadModulus& m);

// Parity of p, parity and range of r.
bool applicable(IdentityId id, Order p, int r);
// Product identities do not involve r.
bool uses_shift(IdentityId id);

// One sample. The j-sum runs over j = start .. start + p - 1 with literal
// lattice indices; every start gives the same value.
ResidualReport evaluate_identity(IdentityId id, Order p, const CyclicShift& shift,
                                 const QuadModulus& m, double x, int start = 1);
// All samples for one (id, p, r, m) cell.
ResidualReport evaluate_identity(IdentityId id, Order p, int r, const QuadModulus& m,
                                 std::span<const double> xs, int start = 1);

// Every (id, p, r, m) combination; inapplicable ones are reported as
// not_applicable with the reason in the note.
std::vector<ResidualReport> catalog_sweep(std::span<const int> ps, std::span<const double> ms,
                                          std::span<const double> xs);

}  // namespace landen
