#pragma once

// Quadratic Gauss sums τ(χ, q) = Σ_{j mod n} χ(j) e(jq/n) and the
// normalized sums G(χ_n, q), which are multiplicative in n.

#include <cstdint>
#include <span>
#include <vector>

#include "qdl/arith.hpp"
#include "qdl/types.hpp"

namespace qdl::gauss {

inline constexpr std::uint64_t kMaxBruteForceModulus = 100000;

struct GaussSumValue {
  Complex value{};
  std::uint64_t modulus = 1;
  std::int64_t shift = 0;
  double abs_error_bound = 0.0;
};

/// e(r/n) = exp(2πi r/n) with r reduced mod n first.
Complex unit_root(std::int64_t r, std::uint64_t n);

/// Direct summation over the period of chi: n for χ_n, |d| for χ^{(d)}.
/// Throws RangeError when the modulus exceeds 10^5.
GaussSumValue tau_bruteforce(const arith::QuadraticCharacter& chi, std::int64_t q);

/// Direct summation for an explicit value table chi[j], j = 0..n-1.
GaussSumValue tau_bruteforce(std::span<const int> chi, std::int64_t q);

/// τ(χ, r) for every r = 0..n-1, where n = chi.size().
std::vector<Complex> tau_all_shifts(std::span<const int> chi);

/// Value table of chi over one period of length `modulus`.
std::vector<int> character_table(const arith::QuadraticCharacter& chi,
                                 std::uint64_t modulus);

/// G(χ_{p^k}, q) where a = v_p(q) (a < 0 encodes q = 0) and unit_symbol is
/// the Legendre symbol of q/p^a modulo p.
double g_prime_power(std::uint64_t p, int k, int a, int unit_symbol);

/// G(χ_n, q) from the prime-power table and multiplicativity in n.
GaussSumValue g_sum(std::uint64_t n, std::int64_t q);

/// G(χ_n, q) = ((1−i)/2 + (−1/n)(1+i)/2) · τ(χ_n, q), τ by brute force.
GaussSumValue g_from_tau(std::uint64_t n, std::int64_t q);

/// τ(χ^{(4l)}, q) for odd l, derived from τ(χ_l, q) = G or iG.
GaussSumValue tau_4l(std::uint64_t l, std::int64_t q);

}  // namespace qdl::gauss
