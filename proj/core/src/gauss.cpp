#include "qdl/gauss.hpp"

#include <cmath>
#include <limits>

#include "qdl/errors.hpp"

namespace qdl::gauss {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::uint64_t reduce(std::int64_t r, std::uint64_t n) {
  const auto m = static_cast<std::int64_t>(n);
  const std::int64_t v = r % m;
  return static_cast<std::uint64_t>(v < 0 ? v + m : v);
}

std::uint64_t period_of(const arith::QuadraticCharacter& chi) {
  const std::int64_t t = chi.top;
  return static_cast<std::uint64_t>(t < 0 ? -t : t);
}

void check_modulus(std::uint64_t n) {
  if (n == 0) throw DomainError("Gauss sum: modulus must be positive");
  if (n > kMaxBruteForceModulus) {
    throw RangeError("Gauss sum: brute-force modulus exceeds 1e5");
  }
}

void check_odd(std::uint64_t n, const char* what) {
  if (n == 0 || n % 2 == 0) throw DomainError(what);
}

}  // namespace

Complex unit_root(std::int64_t r, std::uint64_t n) {
  const std::uint64_t k = reduce(r, n);
  return std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(n));
}

std::vector<int> character_table(const arith::QuadraticCharacter& chi,
                                 std::uint64_t modulus) {
  std::vector<int> table(modulus);
  for (std::uint64_t j = 0; j < modulus; ++j) table[j] = chi(static_cast<std::int64_t>(j));
  return table;
}

GaussSumValue tau_bruteforce(std::span<const int> chi, std::int64_t q) {
  const std::uint64_t n = chi.size();
  check_modulus(n);
  const std::uint64_t qr = reduce(q, n);
  Complex sum = 0.0;
  for (std::uint64_t j = 0; j < n; ++j) {
    if (chi[j] == 0) continue;
    const std::uint64_t r = (j * qr) % n;
    const Complex root = std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(n));
    sum += static_cast<double>(chi[j]) * root;
  }
  GaussSumValue out;
  out.value = sum;
  out.modulus = n;
  out.shift = q;
  out.abs_error_bound = 4.0 * kEps * static_cast<double>(n);
  return out;
}

GaussSumValue tau_bruteforce(const arith::QuadraticCharacter& chi, std::int64_t q) {
  const std::uint64_t n = period_of(chi);
  check_modulus(n);
  const std::vector<int> table = character_table(chi, n);
  return tau_bruteforce(std::span<const int>(table), q);
}

std::vector<Complex> tau_all_shifts(std::span<const int> chi) {
  const std::uint64_t n = chi.size();
  check_modulus(n);
  std::vector<Complex> roots(n);
  for (std::uint64_t r = 0; r < n; ++r) {
    roots[r] = std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(n));
  }
  std::vector<Complex> out(n);
  for (std::uint64_t shift = 0; shift < n; ++shift) {
    Complex sum = 0.0;
    std::uint64_t r = 0;  // j·shift mod n
    for (std::uint64_t j = 0; j < n; ++j) {
      if (chi[j] != 0) sum += static_cast<double>(chi[j]) * roots[r];
      r += shift;
      if (r >= n) r -= n;
    }
    out[shift] = sum;
  }
  return out;
}

double g_prime_power(std::uint64_t p, int k, int a, int unit_symbol) {
  if (k == 0) return 1.0;
  const double pd = static_cast<double>(p);
  const bool q_zero = a < 0;
  if (q_zero || k <= a) {
    if (k % 2 == 1) return 0.0;
    return std::pow(pd, k - 1) * (pd - 1.0);  // φ(p^k)
  }
  if (k == a + 1) {
    const double pa = std::pow(pd, a);
    if (k % 2 == 0) return -pa;
    return unit_symbol * pa * std::sqrt(pd);
  }
  return 0.0;
}

GaussSumValue g_sum(std::uint64_t n, std::int64_t q) {
  check_odd(n, "g_sum: n must be odd and positive");
  double value = 1.0;
  for (const auto& [p, k] : arith::factorize(n).factors) {
    int a = -1;
    int unit_symbol = 0;
    if (q != 0) {
      std::int64_t unit = q;
      a = 0;
      while (unit % static_cast<std::int64_t>(p) == 0) {
        unit /= static_cast<std::int64_t>(p);
        ++a;
      }
      unit_symbol = arith::kronecker(unit, static_cast<std::int64_t>(p));
    }
    value *= g_prime_power(p, k, a, unit_symbol);
    if (value == 0.0) break;
  }
  GaussSumValue out;
  out.value = value;
  out.modulus = n;
  out.shift = q;
  out.abs_error_bound = 4.0 * kEps * std::abs(value);
  return out;
}

GaussSumValue g_from_tau(std::uint64_t n, std::int64_t q) {
  check_odd(n, "g_from_tau: n must be odd and positive");
  const GaussSumValue tau = tau_bruteforce(arith::jacobi_character(n), q);
  const double minus_one = arith::kronecker(-1, static_cast<std::int64_t>(n));
  const Complex factor = Complex(0.5, -0.5) + minus_one * Complex(0.5, 0.5);
  GaussSumValue out = tau;
  out.value = factor * tau.value;
  return out;
}

GaussSumValue tau_4l(std::uint64_t l, std::int64_t q) {
  check_odd(l, "tau_4l: l must be odd and positive");
  const GaussSumValue g = g_sum(l, q);
  // τ(χ_l, q) = G for l ≡ 1 mod 4 and iG for l ≡ 3 mod 4.
  const bool l_one = l % 4 == 1;
  const Complex tau_l = l_one ? g.value : Complex(0.0, 1.0) * g.value;
  const std::int64_t q4 = ((q % 4) + 4) % 4;
  Complex value = 0.0;
  if (l_one) {
    if (q4 == 2) value = -2.0 * tau_l;
    if (q4 == 0) value = 2.0 * tau_l;
  } else {
    if (q4 == 1) value = Complex(0.0, -2.0) * tau_l;
    if (q4 == 3) value = Complex(0.0, 2.0) * tau_l;
  }
  GaussSumValue out;
  out.value = value;
  out.modulus = 4 * l;
  out.shift = q;
  out.abs_error_bound = 2.0 * g.abs_error_bound;
  return out;
}

}  // namespace qdl::gauss
