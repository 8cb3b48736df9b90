#include "landen/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace landen {

namespace {

template <class T>
T tol() {
  return std::numeric_limits<T>::epsilon() * T(0.01);
}

template <class T>
T agm_K(const BasicModulus<T>& m) {
  using std::abs;
  using std::sqrt;
  T a = 1, b = sqrt(m.complement());
  // Quadratic convergence: one pass after |a - b| ~ sqrt(eps) finishes it.
  bool last = false;
  for (int i = 0; i < 64 && !last; ++i) {
    last = abs(a - b) <= sqrt(tol<T>()) * a;
    T t = (a + b) / 2;
    b = sqrt(a * b);
    a = t;
  }
  return pi<T>() / (a + b);
}

}  // namespace

template <class T>
T complete_K(const BasicModulus<T>& m) {
  if (m.complement() == 0)
    throw DomainError("K(m) diverges at m = 1");
  return agm_K(m);
}

template <class T>
T complete_E(const BasicModulus<T>& m) {
  using std::abs;
  using std::sqrt;
  if (m.complement() == 0) return T(1);
  if (m.m() == 0) return pi<T>() / 2;
  // E = K (1 - sum 2^(n-1) c_n^2)
  T a = 1, b = sqrt(m.complement()), c = sqrt(m.m());
  T sum = c * c / 2, w = 1;
  bool last = false;
  for (int i = 0; i < 64 && !last; ++i) {
    last = abs(a - b) <= sqrt(tol<T>()) * a;
    T an = (a + b) / 2;
    c = (a - b) / 2;
    b = sqrt(a * b);
    a = an;
    sum += w * c * c;
    w *= 2;
  }
  return pi<T>() / (2 * a) * (1 - sum);
}

template <class T>
CompleteIntegrals<T> complete_integrals(const BasicModulus<T>& m) {
  return {complete_K(m), complete_E(m)};
}

template <class T>
T carlson_rf(T x, T y, T z) {
  using std::abs;
  using std::max;
  using std::pow;
  using std::sqrt;
  static const T tolRF = pow(3 * tol<T>(), 1 / T(6));
  T a0 = (x + y + z) / 3, an = a0;
  T q = max(max(abs(a0 - x), abs(a0 - y)), abs(a0 - z)) / tolRF;
  T x0 = x, y0 = y, z0 = z, mul = 1;
  while (q >= mul * abs(an)) {
    T ln = sqrt(x0) * sqrt(y0) + sqrt(y0) * sqrt(z0) + sqrt(z0) * sqrt(x0);
    an = (an + ln) / 4;
    x0 = (x0 + ln) / 4;
    y0 = (y0 + ln) / 4;
    z0 = (z0 + ln) / 4;
    mul *= 4;
  }
  T xx = (a0 - x) / (mul * an), yy = (a0 - y) / (mul * an), zz = -xx - yy;
  T e2 = xx * yy - zz * zz, e3 = xx * yy * zz;
  return (1 - e2 / 10 + e3 / 14 + e2 * e2 / 24 - 3 * e2 * e3 / 44) / sqrt(an);
}

template <class T>
T carlson_rd(T x, T y, T z) {
  using std::abs;
  using std::max;
  using std::pow;
  using std::sqrt;
  static const T tolRD = pow(T(0.25) * tol<T>(), 1 / T(6));
  T a0 = (x + y + 3 * z) / 5, an = a0;
  T q = max(max(abs(a0 - x), abs(a0 - y)), abs(a0 - z)) / tolRD;
  T x0 = x, y0 = y, z0 = z, mul = 1, s = 0;
  while (q >= mul * abs(an)) {
    T ln = sqrt(x0) * sqrt(y0) + sqrt(y0) * sqrt(z0) + sqrt(z0) * sqrt(x0);
    s += 1 / (mul * sqrt(z0) * (z0 + ln));
    an = (an + ln) / 4;
    x0 = (x0 + ln) / 4;
    y0 = (y0 + ln) / 4;
    z0 = (z0 + ln) / 4;
    mul *= 4;
  }
  T xx = (a0 - x) / (mul * an), yy = (a0 - y) / (mul * an), zz = -(xx + yy) / 3;
  T e2 = xx * yy - 6 * zz * zz, e3 = (3 * xx * yy - 8 * zz * zz) * zz,
    e4 = 3 * (xx * yy - zz * zz) * zz * zz, e5 = xx * yy * zz * zz * zz;
  return (1 - 3 * e2 / 14 + e3 / 6 + 9 * e2 * e2 / 88 - 3 * e4 / 22 -
          9 * e2 * e3 / 52 + 3 * e5 / 26) /
             (mul * an * sqrt(an)) +
         3 * s;
}

// Bulirsch's descending AGM recursion (Numer. Math. 7, 1965).
template <class T>
Triple<T> jacobi_real(T x, const BasicModulus<T>& m) {
  using std::abs;
  using std::cos;
  using std::cosh;
  using std::isfinite;
  using std::sin;
  using std::sqrt;
  using std::tanh;
  if (!isfinite(x)) throw DomainError("argument must be finite");
  Triple<T> r;
  T mc = m.complement();
  if (mc == 0) {
    r.sn = tanh(x);
    r.cn = r.dn = 1 / cosh(x);
    return r;
  }
  constexpr int num = 16;
  static const T tolJAC = sqrt(tol<T>());
  T ms[num], ns[num], c = 1;
  int l = 0;
  for (T a = 1; l < num; ++l) {
    ms[l] = a;
    ns[l] = mc = sqrt(mc);
    c = (a + mc) / 2;
    if (abs(a - mc) <= tolJAC * a) {
      ++l;
      break;
    }
    mc = a * mc;
    a = c;
  }
  x = c * x;
  r.sn = sin(x);
  r.cn = cos(x);
  r.dn = 1;
  if (r.sn != 0) {
    T a = r.cn / r.sn;
    c = a * c;
    while (l--) {
      T b = ms[l];
      a = c * a;
      c = r.dn * c;
      r.dn = (ns[l] + a) / (b + a);
      a = c / b;
    }
    a = 1 / sqrt(c * c + 1);
    r.sn = r.sn < 0 ? -a : a;
    r.cn = c * r.sn;
  }
  return r;
}

template <class T>
T minor_of(MinorKind kind, const Triple<T>& t) {
  using std::abs;
  T num = 1, den = 1;
  switch (kind) {
    case MinorKind::cs: num = t.cn; den = t.sn; break;
    case MinorKind::ds: num = t.dn; den = t.sn; break;
    case MinorKind::ns: den = t.sn; break;
    case MinorKind::sc: num = t.sn; den = t.cn; break;
    case MinorKind::dc: num = t.dn; den = t.cn; break;
    case MinorKind::nc: den = t.cn; break;
    case MinorKind::cd: num = t.cn; den = t.dn; break;
    case MinorKind::sd: num = t.sn; den = t.dn; break;
    case MinorKind::nd: den = t.dn; break;
  }
  if (abs(den) <= T(pole_guard))
    throw PoleError(std::string(to_string(kind)) + ": denominator within pole guard");
  return num / den;
}

template <class T>
T jacobi_minor(MinorKind kind, T x, const BasicModulus<T>& m) {
  return minor_of(kind, jacobi_real(x, m));
}

template <class T>
T jacobi_zeta(T x, const BasicModulus<T>& m, const CompleteIntegrals<T>& ke) {
  using std::round;
  // Z has period 2K; reduce to [-K, K] where the amplitude stays in
  // [-pi/2, pi/2] and the Carlson form applies directly.
  T n = round(x / (2 * ke.K));
  T x0 = x - 2 * ke.K * n;
  Triple<T> t = jacobi_real(x0, m);
  T s2 = t.sn * t.sn, c2 = t.cn * t.cn, d2 = t.dn * t.dn;
  T einc = t.sn * carlson_rf(c2, d2, T(1)) -
           m.m() / 3 * t.sn * s2 * carlson_rd(c2, d2, T(1));
  return einc - ke.E / ke.K * x0;
}

template <class T>
T jacobi_zeta(T x, const BasicModulus<T>& m) {
  if (m.complement() == 0) throw DomainError("Z(x, m) is undefined at m = 1");
  return jacobi_zeta(x, m, complete_integrals(m));
}

ComplexTriple jacobi_complex(ComplexPoint z, const ModulusParameter& m) {
  using C = std::complex<double>;
  if (!std::isfinite(z.re) || !std::isfinite(z.im))
    throw DomainError("complex argument must be finite");
  auto a = jacobi_real(z.re, m);
  auto b = jacobi_real(z.im, m.complementary());
  double den = b.cn * b.cn + m.m() * a.sn * a.sn * b.sn * b.sn;
  if (den <= pole_guard * pole_guard)
    throw PoleError("complex argument within pole guard of a lattice pole");
  ComplexTriple r;
  r.sn = C(a.sn * b.dn, a.cn * a.dn * b.sn * b.cn) / den;
  r.cn = C(a.cn * b.cn, -a.sn * a.dn * b.sn * b.dn) / den;
  r.dn = C(a.dn * b.cn * b.dn, -m.m() * a.sn * a.cn * b.sn) / den;
  return r;
}

std::complex<double> minor_of(MinorKind kind, const ComplexTriple& t) {
  using C = std::complex<double>;
  C num = 1, den = 1;
  switch (kind) {
    case MinorKind::cs: num = t.cn; den = t.sn; break;
    case MinorKind::ds: num = t.dn; den = t.sn; break;
    case MinorKind::ns: den = t.sn; break;
    case MinorKind::sc: num = t.sn; den = t.cn; break;
    case MinorKind::dc: num = t.dn; den = t.cn; break;
    case MinorKind::nc: den = t.cn; break;
    case MinorKind::cd: num = t.cn; den = t.dn; break;
    case MinorKind::sd: num = t.sn; den = t.dn; break;
    case MinorKind::nd: den = t.dn; break;
  }
  if (std::abs(den) <= pole_guard)
    throw PoleError(std::string(to_string(kind)) + ": denominator within pole guard");
  return num / den;
}

std::complex<double> jacobi_minor_complex(MinorKind kind, ComplexPoint z,
                                          const ModulusParameter& m) {
  return minor_of(kind, jacobi_complex(z, m));
}

const char* to_string(MinorKind kind) {
  switch (kind) {
    case MinorKind::cs: return "cs";
    case MinorKind::ds: return "ds";
    case MinorKind::ns: return "ns";
    case MinorKind::sc: return "sc";
    case MinorKind::dc: return "dc";
    case MinorKind::nc: return "nc";
    case MinorKind::cd: return "cd";
    case MinorKind::sd: return "sd";
    case MinorKind::nd: return "nd";
  }
  return "?";
}

#define LANDEN_INSTANTIATE(T)                                                  \
  template T complete_K<T>(const BasicModulus<T>&);                            \
  template T complete_E<T>(const BasicModulus<T>&);                            \
  template CompleteIntegrals<T> complete_integrals<T>(const BasicModulus<T>&); \
  template T carlson_rf<T>(T, T, T);                                           \
  template T carlson_rd<T>(T, T, T);                                           \
  template Triple<T> jacobi_real<T>(T, const BasicModulus<T>&);                \
  template T minor_of<T>(MinorKind, const Triple<T>&);                         \
  template T jacobi_minor<T>(MinorKind, T, const BasicModulus<T>&);            \
  template T jacobi_zeta<T>(T, const BasicModulus<T>&);                        \
  template T jacobi_zeta<T>(T, const BasicModulus<T>&, const CompleteIntegrals<T>&);

LANDEN_INSTANTIATE(double)
LANDEN_INSTANTIATE(Quad)

#undef LANDEN_INSTANTIATE

}  // namespace landen
