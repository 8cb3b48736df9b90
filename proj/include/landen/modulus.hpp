#pragma once

#include <cmath>
#include <string>

#include "landen/errors.hpp"
#include "landen/precision.hpp"

namespace landen {

// Parameter m = k^2 in [0, 1]. The complement 1 - m is stored on its own so
// that values close to 1 keep their relative accuracy.
template <class T>
class BasicModulus {
 public:
  BasicModulus() : m_(0), mc_(1) {}
  explicit BasicModulus(T m) : m_(m), mc_(1 - m) { check(m_, "m"); }

  template <class U>
  explicit BasicModulus(const BasicModulus<U>& other)
      : m_(T(other.m())), mc_(T(other.complement())) {}

  static BasicModulus from_complement(T mc) {
    check(mc, "1 - m");
    BasicModulus r;
    r.m_ = 1 - mc;
    r.mc_ = mc;
    return r;
  }

  const T& m() const { return m_; }
  const T& complement() const { return mc_; }
  T k() const {
    using std::sqrt;
    return sqrt(m_);
  }
  T k_prime() const {
    using std::sqrt;
    return sqrt(mc_);
  }
  // Parameter 1 - m.
  BasicModulus complementary() const {
    BasicModulus r;
    r.m_ = mc_;
    r.mc_ = m_;
    return r;
  }

 private:
  static void check(const T& v, const char* what) {
    using std::isfinite;
    if (!isfinite(v) || v < 0 || v > 1)
      throw DomainError(std::string(what) + " must be a finite value in [0, 1]");
  }

  T m_, mc_;
};

using ModulusParameter = BasicModulus<double>;
using QuadModulus = BasicModulus<Quad>;

}  // namespace landen
