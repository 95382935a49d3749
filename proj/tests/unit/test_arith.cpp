#include <gtest/gtest.h>

#include <cstdint>
#include <numeric>
#include <random>

#include "qdl/arith.hpp"
#include "qdl/errors.hpp"

namespace {

namespace ar = qdl::arith;

// Legendre symbol by Euler's criterion.
int legendre_oracle(std::int64_t a, std::uint64_t p) {
  const auto m = static_cast<std::int64_t>(p);
  std::uint64_t x = static_cast<std::uint64_t>(((a % m) + m) % m);
  if (x == 0) return 0;
  std::uint64_t r = 1;
  std::uint64_t e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

// Kronecker symbol from its definition: multiplicative in b, with the
// special values at −1 and 2.
int kronecker_oracle(std::int64_t a, std::int64_t b) {
  if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (b < 0) {
    if (a < 0) result = -1;
    b = -b;
  }
  while (b % 2 == 0) {
    b /= 2;
    if (a % 2 == 0) return 0;
    const int r = static_cast<int>(((a % 8) + 8) % 8);
    result *= (r == 1 || r == 7) ? 1 : -1;
  }
  for (std::int64_t p = 3; p * p <= b; p += 2) {
    while (b % p == 0) {
      b /= p;
      result *= legendre_oracle(a, static_cast<std::uint64_t>(p));
    }
  }
  if (b > 1) result *= legendre_oracle(a, static_cast<std::uint64_t>(b));
  return result;
}

TEST(Kronecker, MatchesDefinitionOnGrid) {
  for (std::int64_t a = -60; a <= 60; ++a) {
    for (std::int64_t b = -60; b <= 60; ++b) {
      if (a == 0 && b == 0) continue;
      ASSERT_EQ(ar::kronecker(a, b), kronecker_oracle(a, b)) << a << ' ' << b;
    }
  }
}

TEST(Kronecker, MatchesDefinitionRandomLarge) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> dist(-2000000, 2000000);
  for (int i = 0; i < 3000; ++i) {
    const std::int64_t a = dist(rng);
    const std::int64_t b = dist(rng);
    if (a == 0 && b == 0) continue;
    ASSERT_EQ(ar::kronecker(a, b), kronecker_oracle(a, b)) << a << ' ' << b;
  }
}

TEST(Kronecker, MultiplicativeInBothArguments) {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<std::int64_t> dist(-5000, 5000);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t a = dist(rng), b = dist(rng), c = dist(rng);
    if (b != 0 && c != 0 && a != 0) {
      EXPECT_EQ(ar::kronecker(a, b * c), ar::kronecker(a, b) * ar::kronecker(a, c));
      EXPECT_EQ(ar::kronecker(b * c, a), ar::kronecker(b, a) * ar::kronecker(c, a));
    }
  }
}

TEST(Kronecker, QuadraticReciprocity) {
  for (std::int64_t m = 1; m < 200; m += 2) {
    for (std::int64_t n = 1; n < 200; n += 2) {
      if (ar::kronecker(m, n) == 0) continue;
      const int sign = ((m % 4 == 3) && (n % 4 == 3)) ? -1 : 1;
      EXPECT_EQ(ar::kronecker(m, n), sign * ar::kronecker(n, m));
    }
  }
}

TEST(Kronecker, ZeroOverZeroThrows) { EXPECT_THROW(ar::kronecker(0, 0), qdl::DomainError); }

TEST(Primes, IsPrimeMatchesSieve) {
  const auto primes = ar::primes_up_to(200000);
  std::vector<bool> flag(200001, false);
  for (auto p : primes) flag[p] = true;
  for (std::uint64_t n = 0; n <= 200000; ++n) ASSERT_EQ(ar::is_prime(n), flag[n]) << n;
  EXPECT_EQ(primes.size(), 17984u);
}

TEST(Primes, LargeKnownCases) {
  EXPECT_TRUE(ar::is_prime(2305843009213693951ULL));   // 2^61 − 1
  EXPECT_FALSE(ar::is_prime(2305843009213693953ULL));  // 2^61 + 1
  EXPECT_TRUE(ar::is_prime(18446744073709551557ULL));  // largest 64-bit prime
  EXPECT_FALSE(ar::is_prime(561));                     // Carmichael
  EXPECT_FALSE(ar::is_prime(3215031751ULL));           // strong pseudoprime to 2, 3, 5, 7
  EXPECT_FALSE(ar::is_prime(3825123056546413051ULL));  // strong pseudoprime to the first 9 primes
}

TEST(Factorize, ReconstructsAndIsPrime) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t n = (rng() >> 4) | 1;
    const ar::Factorization f = ar::factorize(n);
    std::uint64_t prod = 1;
    std::uint64_t last = 0;
    for (const auto& pe : f.factors) {
      EXPECT_TRUE(ar::is_prime(pe.prime));
      EXPECT_GT(pe.prime, last);
      last = pe.prime;
      for (int e = 0; e < pe.exponent; ++e) prod *= pe.prime;
    }
    EXPECT_EQ(prod, n);
  }
}

TEST(Factorize, Semiprimes) {
  const ar::Factorization f = ar::factorize(1000000007ULL * 998244353ULL);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].prime, 998244353ULL);
  EXPECT_EQ(f.factors[1].prime, 1000000007ULL);
  EXPECT_THROW(ar::factorize(0), qdl::DomainError);
}

TEST(Factorize, SquarefreeDecomposition) {
  const auto sd = ar::squarefree_decompose(2 * 2 * 2 * 3 * 5 * 5 * 7);
  EXPECT_EQ(sd.n0, 2u * 3u * 7u);
  EXPECT_EQ(sd.m, 2u * 5u);
  EXPECT_EQ(ar::euler_phi(ar::factorize(36)), 12u);
  EXPECT_EQ(ar::omega(ar::factorize(30)), 3);
  EXPECT_EQ(ar::valuation(48, 2), 4);
  EXPECT_TRUE(ar::is_squarefree(30));
  EXPECT_FALSE(ar::is_squarefree(12));
  EXPECT_TRUE(ar::is_perfect_square(1u << 30));
  EXPECT_FALSE(ar::is_perfect_square(99));
}

TEST(Discriminants, FundamentalClassification) {
  const std::int64_t fundamentals[] = {1, -3, -4, 5, -7, 8, -8, 12, 13, -15, 17, -19, -20, 21, -24};
  for (auto d : fundamentals) EXPECT_TRUE(ar::is_fundamental_discriminant(d)) << d;
  const std::int64_t others[] = {0, 2, 3, -1, 4, 9, -12, 16, 20, 25, 28 * 4};
  for (auto d : others) EXPECT_FALSE(ar::is_fundamental_discriminant(d)) << d;
  for (auto d : fundamentals) {
    for (std::int64_t k : {1, 2, 3, 5, 6}) EXPECT_EQ(ar::fundamental_discriminant_of(d * k * k), d);
  }
  EXPECT_THROW(ar::fundamental_discriminant_of(3), qdl::DomainError);
}

TEST(Characters, InducingCharacterAgreesWithJacobiOnCoprimeArguments) {
  for (std::uint64_t n = 1; n < 400; n += 2) {
    const auto jac = ar::jacobi_character(n);
    const auto ind = ar::inducing_character(n);
    EXPECT_EQ(ind.conductor, ar::squarefree_decompose(n).n0) << n;
    EXPECT_EQ(ind.parity, jac.parity) << n;
    for (std::int64_t k = 1; k < 300; ++k) {
      if (std::gcd(static_cast<std::uint64_t>(k), 2 * n) != 1) continue;
      ASSERT_EQ(ind(k), jac(k)) << n << ' ' << k;
    }
  }
}

TEST(Characters, KroneckerTopParityAndConductor) {
  const auto chi = ar::kronecker_character(-4 * 9);
  EXPECT_EQ(chi.conductor, 4u);
  EXPECT_EQ(chi.parity, ar::Parity::odd);
  EXPECT_EQ(chi(3), 0);
  EXPECT_EQ(chi(5), 1);
  EXPECT_EQ(chi(7), -1);
  EXPECT_THROW(ar::jacobi_character(4), qdl::DomainError);
}

}  // namespace
