#pragma once

// The smoothed first moment S(X; α) = Σ_{odd n} L^{(2)}(1/2+α, χ_n) w(n/X),
// its two main terms, the error-exponent scan, the α → 0 limit of the main
// terms, and a large-sieve diagnostic.

#include <cstdint>
#include <functional>
#include <vector>

#include "qdl/types.hpp"

namespace qdl::moment {

/// Largest X accepted by compute_moment and the scans.
inline constexpr double kMaxX = 1048576.0;  // 2^20
/// Largest X accepted by large_sieve_scan.
inline constexpr double kMaxSieveX = 10000.0;

struct WeightSpec {
  enum class Kind { gaussian, custom };

  Kind kind = Kind::gaussian;
  std::function<double(double)> w;
  std::function<Complex(Complex)> mellin;
  double support_cut = 6.1;  // w(t) < 1e-16 beyond this

  /// w(t) = e^{−t²}, ŵ(s) = Γ(s/2)/2.
  static WeightSpec gaussian();

  /// Arbitrary nonnegative weight; ŵ(s) by adaptive Gauss-Kronrod
  /// quadrature of ∫ w(e^u) e^{us} du. Requires Re s > 0 at evaluation.
  static WeightSpec custom(std::function<double(double)> w, double support_cut);

  /// c·w with ŵ scaled to match.
  WeightSpec scaled(double c) const;
};

struct MomentParams {
  double X = 1.0;
  Complex alpha{0.25, 0.0};
  WeightSpec weight = WeightSpec::gaussian();
};

struct MomentRow {
  double X = 0.0;
  Complex alpha{};
  Complex S{};
  Complex M1{};
  Complex M2{};
  Complex E{};        // S − M1 − M2
  double E_norm = 0;  // |E| / X^{1/4}
};

struct ScanSummary {
  std::vector<MomentRow> rows;
  double fitted_slope = 0.0;  // least squares of log|E| on log X
  double slope_stderr = 0.0;
};

struct MainTerms {
  Complex M1{};
  Complex M2{};
};

/// Σ_{odd n ≤ T·X} L^{(2)}(1/2+α, χ_n) w(n/X) with a fixed summation tree:
/// the result does not depend on the thread count.
Complex compute_moment(const MomentParams& params, unsigned threads = 1);

/// M1 = X ŵ(1) ζ(1+2α)/ζ(2+2α) (1−2^{−1−2α}) / (2(1−2^{−2−2α})),
/// M2 = X^{1−α} ŵ(1−α) π^α Γ(1/2−α)Γ(α/2)/(Γ((1−α)/2)Γ(α)) ζ(1−2α)/ζ(2) 2^{2α}/6.
MainTerms main_terms(const MomentParams& params);

/// Geometric grid of `points` values from x_min to x_max inclusive.
std::vector<double> geometric_grid(double x_min, double x_max, int points);

/// One MomentRow per X, sharing a single table of L-values.
ScanSummary error_scan(Complex alpha, const WeightSpec& weight, const std::vector<double>& grid,
                       unsigned threads = 1);

struct QRecovery {
  double q0 = 0.0;
  double q1 = 0.0;
  std::vector<double> X;
  std::vector<double> limit;             // lim_{α→0⁺} (M1 + M2) at each X
  std::vector<double> relative_residual; // |X(q1 log X + q0) − limit| / |limit|
};

/// Richardson limit of M1 + M2 from α = 10⁻³, 5·10⁻⁴, 2.5·10⁻⁴ at each X and a
/// least-squares fit of limit/X = q1 log X + q0. Throws ExtrapolationError
/// when the two first-order estimates differ by more than 10⁻⁴ relative.
QRecovery central_limit_Q(const std::vector<double>& grid, const WeightSpec& weight);

struct SieveRow {
  double X = 0.0;
  std::uint64_t count = 0;  // real primitive non-principal characters with conductor ≤ X
  double sum = 0.0;         // Σ |L(s, χ)|
};

/// Σ_{χ ∈ S(X)} |L(s, χ)| over fundamental discriminants d ≠ 1, |d| ≤ X.
std::vector<SieveRow> large_sieve_scan(const std::vector<double>& grid, Complex s,
                                       unsigned threads = 1);

}  // namespace qdl::moment
