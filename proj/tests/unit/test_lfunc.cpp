#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qdl/afe_kernel.hpp"
#include "qdl/arith.hpp"
#include "qdl/errors.hpp"
#include "qdl/lfunc.hpp"
#include "qdl/ltable.hpp"
#include "qdl/numkit.hpp"
#include "qdl/summation.hpp"

namespace {

using qdl::Complex;
using qdl::kPi;
namespace ar = qdl::arith;
namespace lf = qdl::lfunc;

// Σ_{k ≤ K} χ(k) k^{−s}, with χ given as a callable. For Re s ≥ 3 and
// K = 2·10^5 the tail is below 10^{−10}.
template <typename Chi>
Complex dirichlet_oracle(Chi chi, Complex s, int K = 200000) {
  qdl::CompensatedComplexSum sum;
  for (int k = K; k >= 1; --k) {
    const int c = chi(k);
    if (c != 0) sum.add(static_cast<double>(c) * std::exp(-s * std::log(static_cast<double>(k))));
  }
  return sum.result();
}

TEST(LValues, ClassicalClosedForms) {
  for (const lf::Method m : {lf::Method::afe, lf::Method::hurwitz}) {
    auto L = [m](std::int64_t d, Complex s) { return lf::l_kronecker(d, s, m).value; };
    EXPECT_NEAR(L(-4, 1.0).real(), kPi / 4.0, 1e-12);
    EXPECT_NEAR(L(-4, 3.0).real(), std::pow(kPi, 3) / 32.0, 1e-12);
    EXPECT_NEAR(L(-3, 1.0).real(), kPi / (3.0 * std::sqrt(3.0)), 1e-12);
    EXPECT_NEAR(L(-3, 0.0).real(), 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(L(-4, 0.0).real(), 0.5, 1e-12);
    EXPECT_NEAR(L(5, 2.0).real(), 4.0 * kPi * kPi / (25.0 * std::sqrt(5.0)), 1e-12);
    EXPECT_NEAR(L(5, 1.0).real(), 2.0 * std::log(0.5 * (1.0 + std::sqrt(5.0))) / std::sqrt(5.0), 1e-12);
    EXPECT_NEAR(L(8, 1.0).real(), std::log(1.0 + std::sqrt(2.0)) / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(L(5, -1.0).real(), -0.4, 1e-12);
    // Class number formula: h(−23) = 3, h(−7) = 1.
    EXPECT_NEAR(L(-23, 1.0).real(), 3.0 * kPi / std::sqrt(23.0), 1e-12);
    EXPECT_NEAR(L(-7, 1.0).real(), kPi / std::sqrt(7.0), 1e-12);
  }
}

TEST(LValues, PrimitiveMatchesDirichletSeries) {
  for (const std::int64_t d : {-3, -4, 5, 8, -8, 12, -7, 13, -84, 105}) {
    const auto chi = ar::kronecker_character(d);
    for (const Complex s : {Complex(3.0, 0.0), Complex(3.5, 2.0), Complex(4.0, -6.0)}) {
      const Complex oracle = dirichlet_oracle([&](int k) { return chi(k); }, s);
      EXPECT_LT(std::abs(lf::l_primitive_afe(d, s).value - oracle), 1e-10) << d << ' ' << s;
      EXPECT_LT(std::abs(lf::l_primitive_hurwitz(d, s).value - oracle), 1e-10) << d << ' ' << s;
    }
  }
}

TEST(LValues, AfeAgreesWithHurwitz) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> sigma(-2.5, 3.5);
  std::uniform_real_distribution<double> tau(-20.0, 20.0);
  std::vector<std::int64_t> discs;
  for (std::int64_t d = -500; d <= 500; ++d) {
    if (d != 1 && ar::is_fundamental_discriminant(d)) discs.push_back(d);
  }
  std::uniform_int_distribution<std::size_t> pick(0, discs.size() - 1);
  for (int i = 0; i < 150; ++i) {
    const std::int64_t d = discs[pick(rng)];
    const Complex s(sigma(rng), tau(rng));
    const auto a = lf::l_primitive_afe(d, s);
    const auto h = lf::l_primitive_hurwitz(d, s);
    const double scale = std::max(1.0, std::abs(h.value));
    EXPECT_LT(std::abs(a.value - h.value), 1e-9 * scale) << d << ' ' << s;
    EXPECT_LE(std::abs(a.value - h.value), a.abs_error_bound + h.abs_error_bound + 1e-12 * scale)
        << d << ' ' << s;
  }
}

TEST(LValues, CompletedFunctionalEquation) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> sigma(-1.0, 2.0);
  std::uniform_real_distribution<double> tau(-20.0, 20.0);
  for (const std::int64_t d : {1, -3, -4, 5, 8, -8, 12, -15, 21, -120, 229, -299}) {
    for (int i = 0; i < 8; ++i) {
      const Complex s(sigma(rng), tau(rng));
      const Complex a = lf::completed_lambda(d, s).value;
      const Complex b = lf::completed_lambda(d, 1.0 - s).value;
      EXPECT_LT(std::abs(a - b), 1e-10 * std::max(1.0, std::abs(a))) << d << ' ' << s;
    }
  }
}

TEST(LValues, ImprimitiveDecompositionMatchesDefinition) {
  // L^{(2)}(s, χ_n) = Σ_{k odd} (k/n) k^{−s}
  for (const std::uint64_t n : {1, 3, 9, 15, 45, 75, 105, 121, 675}) {
    const auto jac = ar::jacobi_character(n);
    const Complex s(3.0, 1.0);
    const Complex oracle = dirichlet_oracle([&](int k) { return k % 2 == 0 ? 0 : jac(k); }, s);
    const lf::LValue v = lf::l2_chi_n(n, s);
    EXPECT_LT(std::abs(v.value - oracle), 1e-10) << n;
    EXPECT_EQ(v.method, lf::Method::decomposition);
    EXPECT_TRUE(v.imprimitive);
  }
}

TEST(LValues, KroneckerImprimitiveMatchesDefinition) {
  for (const std::int64_t D : {12, -36, 20, 60, -96, 180}) {
    const auto chi = ar::kronecker_character(D);
    const Complex s(3.0, -2.0);
    const Complex oracle = dirichlet_oracle([&](int k) { return chi(k); }, s);
    EXPECT_LT(std::abs(lf::l_kronecker(D, s).value - oracle), 1e-10) << D;
  }
}

TEST(LValues, FunctionalEquationWithGaussSumSeries) {
  for (const std::uint64_t m : {3, 5, 15}) {
    EXPECT_LT(lf::k_series_check(m, -0.75, 100000), 1e-2) << m;
  }
  EXPECT_LT(lf::k_series_check(7, Complex(-1.5, 2.0), 20000), 1e-4);
}

TEST(LValues, FastEvaluatorMatchesReference) {
  for (const Complex s : {Complex(0.6, 0.0), Complex(0.5, 7.0), Complex(2.0, -3.0), Complex(-0.5, 0.0)}) {
    const lf::AfeEvaluator fast(s);
    for (const std::int64_t d : {1, -3, 5, -4, 8, -8, 12, 1001, -1003, 40001, -39995}) {
      if (!ar::is_fundamental_discriminant(d)) continue;
      const auto ref = lf::l_primitive_afe(d, s);
      const auto got = fast.evaluate(d);
      EXPECT_LT(std::abs(got.value - ref.value), 1e-11 * std::max(1.0, std::abs(ref.value)))
          << d << ' ' << s;
    }
  }
}

TEST(LValues, SquarefreeTableLifts) {
  const Complex s(0.6, 0.0);
  const lf::SquarefreeLTable inducing(s, 400, lf::OddPartLift::inducing, 2);
  const lf::SquarefreeLTable four(s, 400, lf::OddPartLift::times_four, 2);
  for (std::uint64_t n = 1; n <= 400; n += 2) {
    EXPECT_LT(std::abs(inducing.lifted(n).value - lf::l2_chi_n(n, s).value), 1e-11) << n;
    const Complex direct = lf::l_kronecker(4 * static_cast<std::int64_t>(n), s).value;
    EXPECT_LT(std::abs(four.lifted(n).value - direct), 1e-11) << n;
  }
  EXPECT_THROW(inducing.lifted(402), qdl::DomainError);
  EXPECT_THROW(inducing.lifted(401), qdl::DomainError);
}

TEST(LValues, SquarefreeTableIndependentOfThreads) {
  const Complex s(0.6, 0.2);
  const lf::SquarefreeLTable one(s, 3000, lf::OddPartLift::inducing, 1);
  const lf::SquarefreeLTable many(s, 3000, lf::OddPartLift::inducing, 8);
  for (std::uint64_t n = 1; n <= 3000; n += 2) {
    ASSERT_EQ(one.lifted(n).value, many.lifted(n).value) << n;
  }
}

TEST(LValues, Errors) {
  EXPECT_THROW(lf::primitive_character(12 * 4), qdl::DomainError);
  EXPECT_THROW(lf::l_primitive_afe(9, 2.0), qdl::DomainError);
  EXPECT_THROW(lf::l_kronecker(2, 2.0), qdl::DomainError);
  EXPECT_THROW(lf::l_primitive_hurwitz(10009, 2.0), qdl::RangeError);
  EXPECT_THROW(lf::l_primitive_afe(1, 1.0), qdl::PoleError);
  EXPECT_THROW(lf::AfeEvaluator(Complex(0.5, 100.0)), qdl::RangeError);
  EXPECT_THROW(lf::l_primitive_afe(5, Complex(0.5, 25.0)), qdl::RangeError);
  EXPECT_THROW(lf::k_series_check(9, -0.75, 1000), qdl::DomainError);
  EXPECT_THROW(lf::k_series_check(3, 0.5, 1000), qdl::RegionError);
  EXPECT_THROW(lf::l2_chi_n(10, 2.0), qdl::DomainError);
}

}  // namespace
