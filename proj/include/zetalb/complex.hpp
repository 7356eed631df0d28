#pragma once

#include <cmath>
#include <complex>
#include <string_view>

#include "zetalb/errors.hpp"

namespace zetalb {

using ComplexValue = std::complex<double>;

inline bool is_finite(ComplexValue z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Rejects NaN/Inf components at an API boundary.
inline ComplexValue require_finite(ComplexValue z, std::string_view what) {
  if (!is_finite(z)) {
    throw InvalidArgument(std::string(what) + ": non-finite complex value");
  }
  return z;
}

inline double require_finite(double x, std::string_view what) {
  if (!std::isfinite(x)) {
    throw InvalidArgument(std::string(what) + ": non-finite real value");
  }
  return x;
}

}  // namespace zetalb
