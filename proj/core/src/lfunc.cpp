#include "qdl/lfunc.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "qdl/arith.hpp"
#include "qdl/errors.hpp"
#include "qdl/gauss.hpp"
#include "qdl/numkit.hpp"
#include "qdl/summation.hpp"

namespace qdl::lfunc {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

void check_afe_range(Complex s) {
  if (s.real() < kAfeMinReal || s.real() > kAfeMaxReal || std::abs(s.imag()) > kAfeMaxImag) {
    throw RangeError("l_primitive_afe: s outside the supported range");
  }
}

bool is_gamma_pole(Complex z) {
  if (z.imag() != 0.0 || z.real() > 0.0) return false;
  return std::abs(z.real() - std::round(z.real())) < 1e-14;
}

struct AfeSum {
  EvalResult lambda;
  Complex a1;
  double q;
};

// Λ(s) by the two-sided incomplete-gamma sum, every term computed directly.
AfeSum afe_lambda(std::int64_t d, Complex s) {
  const PrimitiveQuadChar chi = primitive_character(d);
  check_afe_range(s);
  const double q = static_cast<double>(abs64(d));
  const double a = chi.a;
  const Complex a1 = 0.5 * (s + a);
  const Complex a2 = 0.5 * (1.0 - s + a);
  if (is_gamma_pole(a1)) {
    throw PoleError("l_primitive_afe: s is a pole of Γ((s+a)/2)");
  }
  if (d == 1 && (s == 1.0 || s == 0.0)) {
    throw PoleError("l_primitive_afe: pole of the completed zeta function");
  }
  const auto terms = static_cast<std::int64_t>(std::ceil(std::sqrt(q * (40.0 + std::abs(s)) / kPi)));
  CompensatedComplexSum sum;
  double magnitude = 0.0;
  double errors = 0.0;
  for (std::int64_t n = 1; n <= terms; ++n) {
    const int c = arith::kronecker(d, n);
    if (c == 0) continue;
    const double nd = static_cast<double>(n);
    const double x = kPi * nd * nd / q;
    const double log_x = std::log(x);
    const EvalResult g1 = numkit::upper_incomplete_gamma(a1, x);
    const EvalResult g2 = numkit::upper_incomplete_gamma(a2, x);
    const Complex p1 = std::exp(-a1 * log_x);
    const Complex p2 = std::exp(-a2 * log_x);
    const double na = a == 0.0 ? 1.0 : nd;
    const Complex term = na * (g1.value * p1 + g2.value * p2);
    sum.add(static_cast<double>(c) * term);
    magnitude += std::abs(term);
    errors += na * (g1.abs_error_bound * std::abs(p1) + g2.abs_error_bound * std::abs(p2));
  }
  Complex lambda = sum.result();
  if (d == 1) lambda += -1.0 / s - 1.0 / (1.0 - s);
  const double next = static_cast<double>(terms + 1);
  const double x_next = kPi * next * next / q;
  const double tail = 8.0 * std::exp(-x_next) * (a == 0.0 ? 1.0 : next);
  return {{lambda, errors + 8.0 * kEps * magnitude + tail}, a1, q};
}

// Π (1 − χ(p) p^{-s}) over the given primes.
Complex euler_correction(std::int64_t d, const std::vector<std::uint64_t>& primes, Complex s) {
  Complex factor = 1.0;
  for (const std::uint64_t p : primes) {
    const int c = arith::kronecker(d, static_cast<std::int64_t>(p));
    if (c == 0) continue;
    factor *= 1.0 - static_cast<double>(c) * numkit::real_pow(static_cast<double>(p), -s);
  }
  return factor;
}

EvalResult primitive_value(std::int64_t d, Complex s, Method method) {
  if (method == Method::hurwitz) {
    const LValue v = l_primitive_hurwitz(d, s);
    return {v.value, v.abs_error_bound};
  }
  const LValue v = l_primitive_afe(d, s);
  return {v.value, v.abs_error_bound};
}

}  // namespace

PrimitiveQuadChar primitive_character(std::int64_t d) {
  if (!arith::is_fundamental_discriminant(d)) {
    throw DomainError("primitive_character: d is not a fundamental discriminant");
  }
  return {d, d < 0 ? 1 : 0};
}

LValue l_primitive_hurwitz(std::int64_t d, Complex s) {
  primitive_character(d);
  const std::int64_t q = abs64(d);
  if (q > kMaxHurwitzModulus) {
    throw RangeError("l_primitive_hurwitz: modulus exceeds 1e4");
  }
  LValue out;
  out.d = d;
  out.s = s;
  out.method = Method::hurwitz;
  if (d == 1) {
    const EvalResult z = numkit::zeta(s);
    out.value = z.value;
    out.abs_error_bound = z.abs_error_bound;
    return out;
  }
  // Σ_r χ(r) = 0, so the regularized Hurwitz values give the same sum and
  // stay finite at s = 1.
  CompensatedComplexSum sum;
  double errors = 0.0;
  double magnitude = 0.0;
  const double qd = static_cast<double>(q);
  for (std::int64_t r = 1; r <= q; ++r) {
    const int c = arith::kronecker(d, r);
    if (c == 0) continue;
    const EvalResult h = numkit::hurwitz_zeta_regularized(s, static_cast<double>(r) / qd);
    sum.add(static_cast<double>(c) * h.value);
    errors += h.abs_error_bound;
    magnitude += std::abs(h.value);
  }
  const Complex scale = numkit::real_pow(qd, -s);
  out.value = scale * sum.result();
  out.abs_error_bound =
      std::abs(scale) * (errors + 8.0 * kEps * magnitude) +
      8.0 * kEps * (1.0 + std::abs(s) * std::log(qd)) * std::abs(out.value);
  return out;
}

LValue l_primitive_afe(std::int64_t d, Complex s) {
  const AfeSum afe = afe_lambda(d, s);
  const Complex factor =
      std::exp(-afe.a1 * std::log(afe.q / kPi)) * numkit::reciprocal_gamma(afe.a1);
  LValue out;
  out.d = d;
  out.s = s;
  out.method = Method::afe;
  out.value = afe.lambda.value * factor;
  out.abs_error_bound = afe.lambda.abs_error_bound * std::abs(factor) +
                        8.0 * kEps * (1.0 + std::abs(s)) * std::abs(out.value);
  return out;
}

EvalResult completed_lambda(std::int64_t d, Complex s) { return afe_lambda(d, s).lambda; }

EvalResult l_kronecker(std::int64_t D, Complex s, Method method) {
  const std::int64_t d0 = arith::fundamental_discriminant_of(D);
  const EvalResult base = primitive_value(d0, s, method);
  std::vector<std::uint64_t> extra;
  for (const auto& pe : arith::factorize(static_cast<std::uint64_t>(abs64(D))).factors) {
    if (abs64(d0) % static_cast<std::int64_t>(pe.prime) != 0) extra.push_back(pe.prime);
  }
  const Complex factor = euler_correction(d0, extra, s);
  return {base.value * factor, base.abs_error_bound * std::abs(factor)};
}

LValue l2_chi_n(std::uint64_t n, Complex s, Method method) {
  const arith::QuadraticCharacter chi = arith::inducing_character(n);
  const arith::SquarefreeDecomposition sd = arith::squarefree_decompose(n);
  const EvalResult base = primitive_value(chi.top, s, method);
  std::vector<std::uint64_t> primes{2};
  for (const auto& pe : arith::factorize(sd.m).factors) {
    if (pe.prime != 2) primes.push_back(pe.prime);
  }
  const Complex factor = euler_correction(chi.top, primes, s);
  LValue out;
  out.d = static_cast<std::int64_t>(n);
  out.imprimitive = true;
  out.s = s;
  out.method = Method::decomposition;
  out.value = base.value * factor;
  out.abs_error_bound = base.abs_error_bound * std::abs(factor);
  return out;
}

double k_series_check(std::uint64_t m, Complex s, std::uint64_t qmax) {
  if (m == 0 || m % 2 == 0) throw DomainError("k_series_check: m must be odd and positive");
  if (arith::is_perfect_square(m)) {
    throw DomainError("k_series_check: m must not be a perfect square");
  }
  if (!(1.0 - s.real() > 1.5)) {
    throw RegionError("k_series_check: K(1-s) needs Re(1-s) > 3/2");
  }
  const std::uint64_t modulus = 4 * m;
  const std::vector<int> table =
      gauss::character_table(arith::kronecker_character(static_cast<std::int64_t>(modulus)), modulus);
  const std::vector<Complex> taus = gauss::tau_all_shifts(table);
  CompensatedComplexSum k_sum;
  const Complex exponent = s - 1.0;
  for (std::uint64_t q = 1; q <= qmax; ++q) {
    const Complex tau = taus[q % modulus];
    if (tau == 0.0) continue;
    k_sum.add(tau * std::exp(exponent * std::log(static_cast<double>(q))));
  }
  const double md = static_cast<double>(modulus);
  const Complex rhs = std::exp((s - 0.5) * std::log(kPi) - s * std::log(md)) *
                      numkit::gamma(0.5 * (1.0 - s)) * numkit::reciprocal_gamma(0.5 * s) *
                      k_sum.result();
  const Complex lhs = l_kronecker(static_cast<std::int64_t>(modulus), s).value;
  return std::abs(lhs - rhs) / std::abs(lhs);
}

}  // namespace qdl::lfunc
