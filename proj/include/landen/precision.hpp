#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/float128.hpp>

namespace landen {

// Working type of the transform layer.
using Quad = boost::multiprecision::float128;

template <class T>
inline T pi() {
  return boost::math::constants::pi<T>();
}

inline double to_double(double v) { return v; }
inline double to_double(const Quad& v) { return static_cast<double>(v); }

// Ratio functions whose denominator falls below this are treated as poles.
inline constexpr double pole_guard = 1e-9;

}  // namespace landen
