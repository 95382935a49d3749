#pragma once

// Fast AFE evaluation for many characters at one point s.
//
// For fixed s every term of the AFE is χ(n) n^a e^{-x} h_a(x) with
// x = πn²/q and h_a(x) = e^x [F((s+a)/2, x) + F((1−s+a)/2, x)],
// F(b, x) = x^{-b} Γ(b, x). h_a is smooth on (0, ∞), so it is tabulated
// once as piecewise Chebyshev series and reused for every modulus.

#include <cstdint>
#include <vector>

#include "qdl/types.hpp"

namespace qdl::lfunc {

class AfeKernel {
 public:
  static constexpr int kDegree = 16;
  static constexpr double kMinX = 0x1p-24;

  AfeKernel(Complex s, int a);

  Complex operator()(double x) const;

  /// Value at x plus the fit's absolute error estimate there.
  Complex evaluate(double x, double& error) const;
  double evaluate_real(double x, double& error) const;  // only when s is real

  bool is_real() const { return real_; }
  double x_max() const { return x_max_; }
  int pieces_per_binade() const { return pieces_per_binade_; }

  /// Largest x the AFE for modulus q at this s ever needs.
  static double required_x_max(Complex s);

 private:
  int piece_index(double x, double& t) const;

  Complex s_;
  int a_;
  bool real_;
  int pieces_per_binade_;
  int min_exponent_;
  int max_exponent_;
  double x_max_;
  std::vector<Complex> coeffs_;      // (kDegree + 1) per piece
  std::vector<double> real_coeffs_;  // filled when real_
  std::vector<double> piece_error_;
};

// L(s, χ^{(d)}) for many fundamental discriminants d at one s. Thread-safe:
// evaluate() only reads shared state; scratch tables live per thread.
class AfeEvaluator {
 public:
  explicit AfeEvaluator(Complex s);

  /// d must be a fundamental discriminant (not re-checked here).
  EvalResult evaluate(std::int64_t d) const;

  /// Λ(s) for the same d, without the conductor and gamma factors.
  EvalResult completed(std::int64_t d) const;

  Complex s() const { return s_; }

 private:
  Complex s_;
  AfeKernel even_;
  AfeKernel odd_;
  Complex rgamma_even_;
  Complex rgamma_odd_;
};

}  // namespace qdl::lfunc
