#pragma once

// Quadratic Dirichlet L-functions: primitive L(s, χ^{(d)}) by the smoothed
// approximate functional equation (AFE) and by Hurwitz zeta, the completed
// Λ(s), and the imprimitive L^{(2)}(s, χ_n).

#include <cstdint>

#include "qdl/types.hpp"

namespace qdl::lfunc {

inline constexpr std::int64_t kMaxHurwitzModulus = 10000;
// The AFE itself is exact for any s; this is the range where its rounding
// stays below 1e-10 (the 1/Γ factor amplifies cancellation as |Im s| grows).
inline constexpr double kAfeMinReal = -3.0;
inline constexpr double kAfeMaxReal = 4.0;
inline constexpr double kAfeMaxImag = 20.0;

enum class Method { afe, hurwitz, decomposition };

// χ^{(d)} for a fundamental discriminant d; a = 0 for d > 0, 1 for d < 0.
struct PrimitiveQuadChar {
  std::int64_t d = 1;
  int a = 0;
};

/// Validates that d is fundamental. Throws DomainError otherwise.
PrimitiveQuadChar primitive_character(std::int64_t d);

struct LValue {
  std::int64_t d = 1;       // discriminant, or n for L^{(2)}(s, χ_n)
  bool imprimitive = false;  // true for L^{(2)}(s, χ_n)
  Complex s{};
  Complex value{};
  Method method = Method::afe;
  double abs_error_bound = 0.0;
};

/// L(s, χ^{(d)}) = |d|^{-s} Σ_r χ(r) ζ(s, r/|d|). |d| ≤ 10^4.
LValue l_primitive_hurwitz(std::int64_t d, Complex s);

/// L(s, χ^{(d)}) by the incomplete-gamma AFE with N = ⌈√(|d|(40+|s|)/π)⌉.
LValue l_primitive_afe(std::int64_t d, Complex s);

/// Λ(s) = (|d|/π)^{(s+a)/2} Γ((s+a)/2) L(s, χ^{(d)}).
EvalResult completed_lambda(std::int64_t d, Complex s);

/// L(s, χ^{(D)}) for any D ≡ 0, 1 mod 4: primitive value times the Euler
/// factors at primes dividing D but not the conductor.
EvalResult l_kronecker(std::int64_t D, Complex s, Method method = Method::afe);

/// L^{(2)}(s, χ_n) = Σ_{(k,2)=1} χ_n(k) k^{-s} for odd n.
LValue l2_chi_n(std::uint64_t n, Complex s, Method method = Method::afe);

/// Relative residual of L(s, χ^{(4m)}) = π^{s−1/2}(4m)^{−s} Γ((1−s)/2)/Γ(s/2)
/// · K(1−s), K(u) = Σ_{q≤qmax} τ(χ^{(4m)}, q) q^{−u}.
double k_series_check(std::uint64_t m, Complex s, std::uint64_t qmax);

}  // namespace qdl::lfunc
