#pragma once

// Integer arithmetic for quadratic characters: factorization, Kronecker
// symbols, square-free parts and the conductor of the characters χ_n and
// χ^{(d)}.

#include <cstdint>
#include <vector>

namespace qdl::arith {

struct PrimePower {
  std::uint64_t prime = 0;
  int exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

struct Factorization {
  std::uint64_t value = 1;
  std::vector<PrimePower> factors;  // primes strictly increasing
};

// n = n0 · m², n0 squarefree.
struct SquarefreeDecomposition {
  std::uint64_t n0 = 1;
  std::uint64_t m = 1;
};

enum class Parity { even, odd };

// Either χ^{(d)} = (d/·) with d ≡ 0, 1 mod 4 ("kronecker top"), or
// χ_n = (·/n) for odd n > 0 ("jacobi bottom"). The conductor is that of the
// primitive character inducing it.
struct QuadraticCharacter {
  enum class Kind { kronecker_top, jacobi_bottom };

  Kind kind = Kind::kronecker_top;
  std::int64_t top = 1;  // d for kronecker_top, n for jacobi_bottom
  std::uint64_t conductor = 1;
  Parity parity = Parity::even;

  int operator()(std::int64_t k) const;
  bool is_principal() const { return conductor == 1; }
};

/// Kronecker symbol (a/b). Throws DomainError for (0/0).
int kronecker(std::int64_t a, std::int64_t b);

/// Deterministic Miller-Rabin, exact for all 64-bit n.
bool is_prime(std::uint64_t n);

/// Complete factorization. factorize(1) has no factors.
Factorization factorize(std::uint64_t n);

SquarefreeDecomposition squarefree_decompose(std::uint64_t n);

/// Primitive character inducing χ_n for odd n: χ^{(n0)} when n0 ≡ 1 mod 4,
/// χ^{(−n0)} when n0 ≡ 3 mod 4, principal when n0 = 1. Throws DomainError
/// for even n.
QuadraticCharacter inducing_character(std::uint64_t n);

/// χ^{(d)} for d ≡ 0, 1 mod 4, d ≠ 0.
QuadraticCharacter kronecker_character(std::int64_t d);

/// χ_n = (·/n) for odd n ≥ 1.
QuadraticCharacter jacobi_character(std::uint64_t n);

std::uint64_t euler_phi(const Factorization& f);
int omega(const Factorization& f);

bool is_squarefree(std::uint64_t n);
bool is_perfect_square(std::uint64_t n);

/// d ≡ 1 mod 4 squarefree, or d = 4k with k ≡ 2, 3 mod 4 squarefree.
/// d = 1 counts (the principal character).
bool is_fundamental_discriminant(std::int64_t d);

/// Discriminant of the primitive character inducing χ^{(d)}.
std::int64_t fundamental_discriminant_of(std::int64_t d);

/// Largest e with p^e | n (n > 0, p ≥ 2).
int valuation(std::uint64_t n, std::uint64_t p);

/// Primes ≤ limit by the sieve of Eratosthenes.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

/// Shared read-only table of primes below 10^6.
const std::vector<std::uint32_t>& small_primes();

}  // namespace qdl::arith
