#pragma once

#include <complex>

#include "landen/modulus.hpp"

namespace landen {

template <class T>
struct Triple {
  T sn, cn, dn;
};
using EllipticTriple = Triple<double>;

enum class MinorKind { cs, ds, ns, sc, dc, nc, cd, sd, nd };

struct ComplexPoint {
  double re = 0, im = 0;
};

struct ComplexTriple {
  std::complex<double> sn, cn, dn;
};

// Complete integrals at one parameter, for callers that evaluate Z repeatedly.
template <class T>
struct CompleteIntegrals {
  T K, E;
};

template <class T>
T complete_K(const BasicModulus<T>& m);
template <class T>
T complete_E(const BasicModulus<T>& m);
template <class T>
CompleteIntegrals<T> complete_integrals(const BasicModulus<T>& m);

// Carlson symmetric integrals.
template <class T>
T carlson_rf(T x, T y, T z);
template <class T>
T carlson_rd(T x, T y, T z);

template <class T>
Triple<T> jacobi_real(T x, const BasicModulus<T>& m);

template <class T>
T minor_of(MinorKind kind, const Triple<T>& t);
template <class T>
T jacobi_minor(MinorKind kind, T x, const BasicModulus<T>& m);

template <class T>
T jacobi_zeta(T x, const BasicModulus<T>& m);
template <class T>
T jacobi_zeta(T x, const BasicModulus<T>& m, const CompleteIntegrals<T>& ke);

ComplexTriple jacobi_complex(ComplexPoint z, const ModulusParameter& m);
std::complex<double> minor_of(MinorKind kind, const ComplexTriple& t);
std::complex<double> jacobi_minor_complex(MinorKind kind, ComplexPoint z,
                                          const ModulusParameter& m);

const char* to_string(MinorKind kind);

}  // namespace landen
