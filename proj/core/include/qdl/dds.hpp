#pragma once

// Double Dirichlet series A(s, w) = Σ_{n odd} L^{(2)}(w, χ_n) n^{-s}, its
// square part A₁, the dual Gauss-sum series C₁, C₂ with their twisted
// pieces and D-factors, and the residues at s = 1, s = 1 − α and w = 3/2.
//
// Everything here is evaluated inside regions of absolute convergence.

#include <cstdint>

#include "qdl/types.hpp"

namespace qdl::dds {

enum class RegionTag { S0, S1, dual_K, other };

struct RegionPoint {
  Complex s{};
  Complex w{};
  RegionTag tag = RegionTag::other;
};

/// S0: Re s > 1, Re(s+w) > 3/2. S1: Re w > 1, Re(s+w) ≥ 3/2,
/// Re(2s+w) > 3/2. dual_K: Re s < −1/2 (where K(1−s) converges).
RegionPoint classify(Complex s, Complex w);

// ψ_j = χ^{(4j)} for j = ±1, ±2; ψ0 is the constant character 1.
enum class Twist { psi0, psi1, psi_minus1, psi2, psi_minus2 };

struct TwistLabel {
  Twist psi = Twist::psi1;
  Twist psi_prime = Twist::psi0;
};

int twist_value(Twist t, std::int64_t n);
const char* twist_name(Twist t);

// How the truncated A-series accounts for the terms beyond the cutoff.
enum class Tail {
  none,        // plain partial sum
  mean_field,  // add mean value × Σ n^{-s} over the tail, squares exactly
};

/// Σ_{odd n ≤ N} L^{(2)}(w, χ_n) n^{-s}. Requires S0 with margin 0.1.
EvalResult a_series_nsum(Complex s, Complex w, std::uint64_t N, Tail tail = Tail::none,
                         unsigned threads = 1);

/// Σ_{odd m ≤ M} L(s, χ^{(4m)}) m^{-w}. Requires S1, or Re s > 1 and Re w > 1.
EvalResult a_series_msum(Complex s, Complex w, std::uint64_t M, Tail tail = Tail::none,
                         unsigned threads = 1);

/// P(s, w) = (1−2^{−s})(1−2^{−2w}) Π_{p>2} (1 − p^{−s−2w}).
Complex p_factor(Complex s, Complex w);

/// A₁(s, w) = ζ(s) ζ(2w) P(s, w).
EvalResult a1_closed_form(Complex s, Complex w);

/// Res_{s=1} A(s, 1/2+α) = ζ(1+2α) P(1, 1/2+α).
Complex residue_s1(Complex alpha);

/// The first main-term coefficient as displayed in the moment asymptotic:
/// ζ(1+2α)/ζ(2+2α) · (1−2^{−1−2α}) / (2(1−2^{−2−2α})).
Complex residue_s1_theorem_form(Complex alpha);

struct ResidueForms {
  Complex reflected;       // π^α Γ(1/2−α)Γ(α/2)/(Γ((1−α)/2)Γ(α)) ζ(1−2α)/ζ(2) 2^{2α}/6
  Complex pre_reflection;  // 2^{2α−1} π^{1/2−α} Γ(α/2)/(3Γ((1−α)/2)) ζ(2α)/ζ(2)
};

/// Residue of A(s, 1/2+α) at s = 1 − α, in both forms.
ResidueForms residue_s_1_minus_alpha_forms(Complex alpha);
Complex residue_s_1_minus_alpha(Complex alpha);

/// D_{1,p}(s, w; q1, ψ, ψ') for odd p, k ≤ K:
/// Σ_{l,k} ψ(p^l) ψ'(p^{2k}) G(χ_{p^l}, q1 p^{2k}) p^{−lw−2ks}.
EvalResult d1_euler_factor(std::uint64_t p, std::uint64_t q1, TwistLabel twist, Complex s,
                           Complex w, int K);

/// Same with l doubled: the local factor of D₂.
EvalResult d2_euler_factor(std::uint64_t p, std::uint64_t q1, TwistLabel twist, Complex s,
                           Complex w, int K);

/// The k = 0 slice Σ_l ψ(p^l) G(χ_{p^l}, q1) p^{−lw}, summed directly.
Complex k0_slice(std::uint64_t p, std::uint64_t q1, Twist psi, Complex w);

/// Closed form of the k = 0 slice: 1 + ψ(p)(q1/p) p^{1/2−w} when p ∤ q1,
/// 1 − ψ(p²) p^{1−2w} when p | q1.
Complex k0_slice_closed_form(std::uint64_t p, std::uint64_t q1, Twist psi, Complex w);

/// |Σ_{l≥0, 1≤k≤K} G(χ_{p^l}, p^{2k}) p^{−3l/2−2ks} − (1+1/p) p^{−2s}/(1−p^{−2s})|.
double dk1_psi1_identity(std::uint64_t p, Complex s, int K);

/// Res_{w=3/2} C(s, w) = (2/3) ζ(2s)/ζ(2).
Complex residue_w_3_2_C(Complex s);

/// The same residue from the local factors:
/// (1/2)(1 + 4^{−s}/(1 − 4^{−s})) Π_{odd p ≤ P} D_{1,p}(s, 3/2; 1, ψ1, ψ0)(1 − 1/p).
/// With tail_correction the primes above P are accounted for by the
/// logarithmic-integral estimate Σ_{p>P} p^{−β} ≈ E1((β−1) log P).
EvalResult residue_w_3_2_C_product(Complex s, std::uint32_t P, bool tail_correction = true);

/// C₁(s, w; ψ, ψ') = Σ_{l ≤ L, q ≤ Q} G(χ_l, q) ψ(l) ψ'(q) l^{−w} q^{−s}, ψ ≠ ψ0.
Complex c1_twisted_direct(Complex s, Complex w, TwistLabel twist, std::uint64_t L,
                          std::uint64_t Q);

/// C₂(s, w; ψ, ψ') = Σ_{l ≤ L, q ≤ Q} G(χ_{l²}, q) ψ(l) ψ'(q) l^{−2w} q^{−s}, ψ ≠ ψ0.
Complex c2_twisted_direct(Complex s, Complex w, TwistLabel twist, std::uint64_t L,
                          std::uint64_t Q);

/// C₁(s, w; ψ, ψ') = Σ*_{q1 ≤ q1_max} ψ'(q1) q1^{−s} D₁(s, w; q1, ψ, ψ'), with
/// D₁ as an Euler product over p ≤ P. Requires ψ ≠ ψ0.
EvalResult c1_from_d_factors(Complex s, Complex w, TwistLabel twist, std::uint64_t q1_max,
                             std::uint32_t P);

/// Untwisted C₁ and C₂ by brute-force τ(χ^{(4m)}, q) over odd m ≤ M, q ≤ Q.
Complex c1_untwisted_direct(Complex s, Complex w, std::uint64_t M, std::uint64_t Q);
Complex c2_untwisted_direct(Complex s, Complex w, std::uint64_t M, std::uint64_t Q);

/// Untwisted C₁, C₂ rebuilt from the twisted sums with matching truncation.
Complex c1_from_twists(Complex s, Complex w, std::uint64_t M, std::uint64_t Q);
Complex c2_from_twists(Complex s, Complex w, std::uint64_t M, std::uint64_t Q);

}  // namespace qdl::dds
