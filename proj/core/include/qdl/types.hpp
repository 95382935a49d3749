#pragma once

#include <complex>

namespace qdl {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 6.283185307179586476925286766559005768;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

// A value together with an estimated bound on its absolute error
// (truncation plus accumulated rounding of the producing algorithm).
struct EvalResult {
  Complex value{};
  double abs_error_bound = 0.0;
};

}  // namespace qdl
