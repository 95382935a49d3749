#include "qdl/ltable.hpp"

#include <cmath>

#include "qdl/arith.hpp"
#include "qdl/errors.hpp"
#include "qdl/numkit.hpp"
#include "qdl/parallel.hpp"

namespace qdl::lfunc {
namespace {

std::vector<std::uint32_t> smallest_prime_factors(std::uint64_t limit) {
  std::vector<std::uint32_t> spf(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= limit; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  return spf;
}

}  // namespace

SquarefreeLTable::SquarefreeLTable(Complex s, std::uint64_t n_max, OddPartLift lift,
                                   unsigned threads)
    : s_(s), n_max_(n_max), lift_(lift), spf_(smallest_prime_factors(n_max)) {
  if (n_max < 1) throw DomainError("SquarefreeLTable: n_max must be positive");
  const AfeEvaluator evaluator(s);
  const std::size_t slots = (n_max + 1) / 2;
  values_.assign(slots, EvalResult{});
  std::vector<std::uint64_t> squarefree;
  for (std::uint64_t n = 1; n <= n_max; n += 2) {
    bool ok = true;
    for (std::uint64_t r = n; r > 1;) {
      const std::uint32_t p = spf_[r];
      r /= p;
      if (r % p == 0) {
        ok = false;
        break;
      }
    }
    if (ok) squarefree.push_back(n);
  }
  parallel_for(squarefree.size(), threads, [&](std::size_t i) {
    const std::uint64_t n0 = squarefree[i];
    values_[(n0 - 1) / 2] = evaluator.evaluate(discriminant(n0));
  });
}

std::int64_t SquarefreeLTable::discriminant(std::uint64_t n0) const {
  const auto v = static_cast<std::int64_t>(n0);
  if (n0 % 4 == 1) return v;
  return lift_ == OddPartLift::inducing ? -v : 4 * v;
}

EvalResult SquarefreeLTable::primitive(std::uint64_t n0) const {
  if (n0 == 0 || n0 % 2 == 0 || n0 > n_max_) {
    throw DomainError("SquarefreeLTable: n0 must be odd and within the table");
  }
  return values_[(n0 - 1) / 2];
}

EvalResult SquarefreeLTable::lifted(std::uint64_t n) const {
  if (n == 0 || n % 2 == 0 || n > n_max_) {
    throw DomainError("SquarefreeLTable: n must be odd and within the table");
  }
  std::uint64_t n0 = 1;
  std::uint64_t m = 1;
  std::uint32_t primes[24];
  int prime_count = 0;
  for (std::uint64_t r = n; r > 1;) {
    const std::uint32_t p = spf_[r];
    int e = 0;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    if (e & 1) n0 *= p;
    if (e >= 2) {
      for (int i = 0; i < e / 2; ++i) m *= p;
      primes[prime_count++] = p;
    }
  }
  const std::int64_t d = discriminant(n0);
  const EvalResult base = values_[(n0 - 1) / 2];
  Complex factor = 1.0;
  const int chi2 = arith::kronecker(d, 2);
  if (chi2 != 0) factor *= 1.0 - static_cast<double>(chi2) * numkit::real_pow(2.0, -s_);
  for (int i = 0; i < prime_count; ++i) {
    const int c = arith::kronecker(d, primes[i]);
    if (c == 0) continue;
    factor *= 1.0 - static_cast<double>(c) * numkit::real_pow(primes[i], -s_);
  }
  return {base.value * factor, base.abs_error_bound * std::abs(factor)};
}

}  // namespace qdl::lfunc
