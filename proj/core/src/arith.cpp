#include "qdl/arith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "qdl/errors.hpp"

namespace qdl::arith {
namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

// (2/n) for odd n, indexed by n & 7; zero for even n.
constexpr int kTwoTable[8] = {0, 1, 0, -1, 0, -1, 0, 1};

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 abs_diff(u64 a, u64 b) { return a > b ? a - b : b - a; }

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 y) { return (mul_mod(y, y, n) + c) % n; };
    constexpr u64 kBlock = 128;
    u64 y = 2, x = 2, ys = 2, g = 1, q = 1;
    u64 r = 1;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(kBlock, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, abs_diff(x, y), n);
        }
        g = std::gcd(q, n);
        k += kBlock;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(abs_diff(x, ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const u64 d = pollard_brent(n);
  factor_large(d, out);
  factor_large(n / d, out);
}

u64 integer_sqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::int64_t mod4(std::int64_t x) { return ((x % 4) + 4) % 4; }

}  // namespace

int kronecker(std::int64_t a, std::int64_t b) {
  if (b == 0) {
    if (a == 0) throw DomainError("kronecker: (0/0) is undefined");
    return (a == 1 || a == -1) ? 1 : 0;
  }
  if ((a & 1) == 0 && (b & 1) == 0) return 0;

  int sign = 1;
  u64 bb = b < 0 ? static_cast<u64>(0) - static_cast<u64>(b) : static_cast<u64>(b);
  if (b < 0 && a < 0) sign = -1;
  const int v = std::countr_zero(bb);
  bb >>= v;
  if (v & 1) sign *= kTwoTable[a & 7];
  if (sign == 0) return 0;

  // Jacobi symbol (a/bb) with bb odd.
  u64 aa;
  if (a >= 0) {
    aa = static_cast<u64>(a) % bb;
  } else {
    const u64 mag = (static_cast<u64>(0) - static_cast<u64>(a)) % bb;
    aa = mag == 0 ? 0 : bb - mag;
  }
  while (aa != 0) {
    const int t = std::countr_zero(aa);
    aa >>= t;
    if (t & 1) sign *= kTwoTable[bb & 7];
    if (aa & bb & 2) sign = -sign;
    const u64 r = aa;
    aa = bb % r;
    bb = r;
  }
  return bb == 1 ? sign : 0;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  const int s = std::countr_zero(d);
  d >>= s;
  for (u64 base : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    const u64 a = base % n;
    if (a == 0) continue;
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> table = primes_up_to(1000000);
  return table;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: n must be positive");
  Factorization result;
  result.value = n;
  u64 rest = n;
  for (const std::uint32_t p : small_primes()) {
    if (static_cast<u64>(p) * p > rest) break;
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    result.factors.push_back({p, e});
  }
  if (rest > 1) {
    std::vector<u64> big;
    factor_large(rest, big);
    std::sort(big.begin(), big.end());
    for (const u64 p : big) {
      if (!result.factors.empty() && result.factors.back().prime == p) {
        ++result.factors.back().exponent;
      } else {
        result.factors.push_back({p, 1});
      }
    }
  }
  return result;
}

SquarefreeDecomposition squarefree_decompose(std::uint64_t n) {
  SquarefreeDecomposition out;
  for (const auto& [p, e] : factorize(n).factors) {
    if (e & 1) out.n0 *= p;
    for (int i = 0; i < e / 2; ++i) out.m *= p;
  }
  return out;
}

std::uint64_t euler_phi(const Factorization& f) {
  u64 phi = 1;
  for (const auto& [p, e] : f.factors) {
    phi *= p - 1;
    for (int i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

int omega(const Factorization& f) { return static_cast<int>(f.factors.size()); }

bool is_squarefree(std::uint64_t n) {
  for (const auto& pe : factorize(n).factors) {
    if (pe.exponent > 1) return false;
  }
  return true;
}

bool is_perfect_square(std::uint64_t n) {
  const u64 r = integer_sqrt(n);
  return r * r == n;
}

int valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw DomainError("valuation: n must be positive");
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::int64_t fundamental_discriminant_of(std::int64_t d) {
  if (d == 0 || (mod4(d) != 0 && mod4(d) != 1)) {
    throw DomainError("fundamental_discriminant_of: d must be nonzero and 0 or 1 mod 4");
  }
  std::int64_t core = d < 0 ? -1 : 1;
  const u64 mag = d < 0 ? static_cast<u64>(-d) : static_cast<u64>(d);
  for (const auto& [p, e] : factorize(mag).factors) {
    if (e & 1) core *= static_cast<std::int64_t>(p);
  }
  return mod4(core) == 1 ? core : 4 * core;
}

bool is_fundamental_discriminant(std::int64_t d) {
  if (d == 0 || (mod4(d) != 0 && mod4(d) != 1)) return false;
  return fundamental_discriminant_of(d) == d;
}

QuadraticCharacter kronecker_character(std::int64_t d) {
  const std::int64_t fd = fundamental_discriminant_of(d);
  QuadraticCharacter chi;
  chi.kind = QuadraticCharacter::Kind::kronecker_top;
  chi.top = d;
  chi.conductor = static_cast<u64>(fd < 0 ? -fd : fd);
  chi.parity = d > 0 ? Parity::even : Parity::odd;
  return chi;
}

QuadraticCharacter jacobi_character(std::uint64_t n) {
  if (n == 0 || n % 2 == 0) throw DomainError("jacobi_character: n must be odd and positive");
  const SquarefreeDecomposition sd = squarefree_decompose(n);
  QuadraticCharacter chi;
  chi.kind = QuadraticCharacter::Kind::jacobi_bottom;
  chi.top = static_cast<std::int64_t>(n);
  chi.conductor = sd.n0;
  chi.parity = sd.n0 % 4 == 1 ? Parity::even : Parity::odd;
  return chi;
}

QuadraticCharacter inducing_character(std::uint64_t n) {
  if (n == 0 || n % 2 == 0) throw DomainError("inducing_character: n must be odd and positive");
  const u64 n0 = squarefree_decompose(n).n0;
  const auto signed_n0 = static_cast<std::int64_t>(n0);
  return kronecker_character(n0 % 4 == 1 ? signed_n0 : -signed_n0);
}

int QuadraticCharacter::operator()(std::int64_t k) const {
  if (kind == Kind::kronecker_top) return kronecker(top, k);
  return kronecker(k, top);
}

}  // namespace qdl::arith
