#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/lambert_w.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using Float50 = boost::multiprecision::cpp_bin_float_50;

// Integral of W over [0, x] in 50-digit floats: tanh-sinh on [0, 1],
// adaptive Gauss-Kronrod beyond.
inline Float50 w_integral_quadrature(double x) {
  auto w = [](Float50 t) { return boost::math::lambert_w0(t); };
  Float50 total = 0;
  Float50 split = x < 1 ? Float50(x) : Float50(1);
  boost::math::quadrature::tanh_sinh<Float50> ts;
  total += ts.integrate(w, Float50(0), split);
  if (x > 1) {
    total += boost::math::quadrature::gauss_kronrod<Float50, 31>::integrate(
        w, split, Float50(x), 15, Float50(1e-30));
  }
  return total;
}

}  // namespace oracle
