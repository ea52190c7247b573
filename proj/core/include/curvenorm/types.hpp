#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace curvenorm {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Numerical failure at run time: pole on the curve, solver breakdown,
/// disconnected grid mask, on-curve query, and similar.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed configuration or request schema.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File system failure while reading inputs or writing reports.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double sq(double x) { return x * x; }

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace curvenorm
