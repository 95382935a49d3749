#pragma once

// Complex special functions: Riemann and Hurwitz zeta, log-gamma, the
// incomplete gamma function and a few helpers shared by the L-function code.
//
// All functions are pure and safe to call concurrently.

#include "qdl/types.hpp"

namespace qdl::numkit {

// Euler-Maclaurin summation parameters. The shift is a floor: it is raised
// automatically when |s| is large so the remainder bound stays below 1e-12.
inline constexpr int kEulerMaclaurinShift = 20;
inline constexpr int kEulerMaclaurinDepth = 15;
inline constexpr double kMaxImaginaryPart = 1e6;

/// Riemann zeta function. Throws PoleError within 1e-12 of s = 1 and
/// RangeError for |Im s| > 1e6.
EvalResult zeta(Complex s);

/// Hurwitz zeta ζ(s, x) = Σ_{k≥0} (k+x)^{-s} for x in (0, 1].
EvalResult hurwitz_zeta(Complex s, double x);

/// ζ(s, x) − 1/(s − 1). Entire in s; equals −ψ(x) at s = 1. Character sums
/// whose values add up to zero use this to stay stable near s = 1.
EvalResult hurwitz_zeta_regularized(Complex s, double x);

/// Principal value of log Γ(s): imaginary part in (−π, π].
EvalResult log_gamma(Complex s);

/// Γ(s). Throws PoleError at nonpositive integers.
Complex gamma(Complex s);

/// 1/Γ(s); zero at the poles of Γ instead of throwing.
Complex reciprocal_gamma(Complex s);

/// Upper incomplete gamma Γ(a, x) for real x > 0.
EvalResult upper_incomplete_gamma(Complex a, double x);

// The two algorithms behind upper_incomplete_gamma, exposed so their overlap
// can be tested: continued fraction for Γ(a, x) and the power series for
// the lower function γ(a, x).
EvalResult upper_incomplete_gamma_cf(Complex a, Complex x);
EvalResult lower_incomplete_gamma_series(Complex a, double x);

/// Exponential integral E1(z) for Re z > 0.
Complex exp_integral_e1(Complex z);

/// base^exponent for real base > 0, principal branch.
inline Complex real_pow(double base, Complex exponent) {
  return std::exp(exponent * std::log(base));
}

/// expm1(z)/z, continuous at z = 0.
Complex expm1_over(Complex z);

/// log(1+z)/z, continuous at z = 0.
Complex log1p_over(Complex z);

}  // namespace qdl::numkit
