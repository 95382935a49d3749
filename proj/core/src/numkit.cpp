#include "qdl/numkit.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "qdl/errors.hpp"
#include "qdl/summation.hpp"

namespace qdl::numkit {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

constexpr double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// B_{2j} / (2j)! for j = 0..16 (index 0 unused).
constexpr std::array<double, 17> kBernoulliOverFactorial = [] {
  constexpr std::array<double, 17> b = {
      0.0,
      1.0 / 6.0,
      -1.0 / 30.0,
      1.0 / 42.0,
      -1.0 / 30.0,
      5.0 / 66.0,
      -691.0 / 2730.0,
      7.0 / 6.0,
      -3617.0 / 510.0,
      43867.0 / 798.0,
      -174611.0 / 330.0,
      854513.0 / 138.0,
      -236364091.0 / 2730.0,
      8553103.0 / 6.0,
      -23749461029.0 / 870.0,
      8615841276005.0 / 14322.0,
      -7709321041217.0 / 510.0,
  };
  std::array<double, 17> out{};
  for (int j = 1; j <= 16; ++j) out[j] = b[j] / factorial(2 * j);
  return out;
}();

// Raw Bernoulli numbers for the Stirling series, B_{2k} for k = 1..12.
constexpr std::array<double, 13> kBernoulli = {
    0.0,
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
};

int shift_for(Complex s) {
  // Remainder after depth J behaves like (|s| + 2J + 1)/(2πM) to the power
  // 2J + 2; keep that ratio at or below 0.35.
  const double reach = std::abs(s) + 2.0 * kEulerMaclaurinDepth + 1.0;
  const double needed = std::ceil(reach / (kTwoPi * 0.35));
  return std::max(kEulerMaclaurinShift, static_cast<int>(needed));
}

struct EulerMaclaurinTail {
  Complex value;
  double bound;
};

// Σ_{k≥0} (base + k)^{-s} minus its first term block, i.e. the integral,
// the half term and the Bernoulli corrections anchored at `base`. With
// `regularized` the pole term base^{1-s}/(s-1) is replaced by
// (base^{1-s} - 1)/(s-1).
EulerMaclaurinTail euler_maclaurin_tail(Complex s, double base,
                                        bool regularized) {
  const double log_base = std::log(base);
  const Complex pow_neg_s = std::exp(-s * log_base);
  Complex pole;
  if (regularized) {
    pole = -log_base * expm1_over((1.0 - s) * log_base);
  } else {
    pole = pow_neg_s * base / (s - 1.0);
  }
  Complex acc = pole + 0.5 * pow_neg_s;
  double magnitude = std::abs(pole) + std::abs(0.5 * pow_neg_s);

  Complex rising = s;
  Complex power = pow_neg_s / base;
  const double inv_base_sq = 1.0 / (base * base);
  for (int j = 1; j <= kEulerMaclaurinDepth; ++j) {
    const Complex term = kBernoulliOverFactorial[j] * rising * power;
    acc += term;
    magnitude += std::abs(term);
    rising *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
    power *= inv_base_sq;
  }
  const double order = s.real() + 2.0 * kEulerMaclaurinDepth + 1.0;
  const Complex next = kBernoulliOverFactorial[kEulerMaclaurinDepth + 1] *
                       rising * (s + 2.0 * kEulerMaclaurinDepth + 1.0) * power;
  double remainder = std::abs(next);
  if (order > 0.0) remainder /= order;
  return {acc, remainder + 8.0 * kEps * magnitude};
}

// Direct part Σ_{k=0}^{M-1} (k + x)^{-s}, with a rounding estimate that
// accounts for the phase error of exp(-s log(k+x)).
EvalResult direct_block(Complex s, double x, int count) {
  CompensatedComplexSum sum;
  double magnitude = 0.0;
  for (int k = 0; k < count; ++k) {
    const double base = k + x;
    const Complex term = std::exp(-s * std::log(base));
    sum.add(term);
    magnitude += std::abs(term);
  }
  const double phase = 2.0 + std::abs(s) * std::log(count + x + 1.0);
  return {sum.result(), 4.0 * kEps * phase * magnitude};
}

void check_imaginary_range(Complex s) {
  if (std::abs(s.imag()) > kMaxImaginaryPart) {
    throw RangeError("zeta: |Im s| exceeds the supported range 1e6");
  }
}

// log sin(πz) on some branch; accurate far from the real axis where sin
// itself would overflow.
Complex log_sin_pi(Complex z) {
  const double n = std::round(z.real());
  const Complex f = z - n;
  const bool odd = std::fmod(std::abs(n), 2.0) == 1.0;
  const Complex sign_log = odd ? Complex(0.0, kPi) : Complex(0.0, 0.0);
  const double y = f.imag();
  if (std::abs(y) < 15.0) {
    return std::log(std::sin(kPi * f)) + sign_log;
  }
  const Complex i(0.0, 1.0);
  if (y > 0.0) {
    return std::log(0.5 * i) - i * kPi * f +
           std::log(1.0 - std::exp(2.0 * i * kPi * f)) + sign_log;
  }
  return std::log(-0.5 * i) + i * kPi * f +
         std::log(1.0 - std::exp(-2.0 * i * kPi * f)) + sign_log;
}

bool at_gamma_pole(Complex z) {
  if (z.real() > 0.5) return false;
  const double n = std::round(z.real());
  return std::abs(z - n) <= 1e-14 * std::max(1.0, std::abs(n));
}

struct LogGammaRaw {
  Complex value;
  double magnitude;  // scale of the quantities summed, for error estimates
};

LogGammaRaw log_gamma_raw(Complex z) {
  if (at_gamma_pole(z)) {
    throw PoleError("log_gamma: pole at a nonpositive integer");
  }
  if (z.real() < 0.5) {
    const LogGammaRaw reflected = log_gamma_raw(1.0 - z);
    const Complex ls = log_sin_pi(z);
    return {std::log(kPi) - ls - reflected.value,
            reflected.magnitude + std::abs(ls) + 2.0};
  }
  int shift = 0;
  if (std::abs(z.imag()) < 15.0) {
    shift = std::max(0, static_cast<int>(std::ceil(15.0 - z.real())));
  }
  Complex log_product = 0.0;
  for (int k = 0; k < shift; ++k) log_product += std::log(z + static_cast<double>(k));
  const Complex w = z + static_cast<double>(shift);
  const Complex inv_w = 1.0 / w;
  const Complex inv_w_sq = inv_w * inv_w;
  Complex series = 0.0;
  Complex power = inv_w;
  for (int k = 1; k <= 12; ++k) {
    series += kBernoulli[k] / (2.0 * k * (2.0 * k - 1.0)) * power;
    power *= inv_w_sq;
  }
  const Complex stirling =
      (w - 0.5) * std::log(w) - w + 0.5 * std::log(kTwoPi) + series;
  return {stirling - log_product,
          std::abs(stirling) + std::abs(log_product) + shift};
}

}  // namespace

Complex expm1_over(Complex z) {
  const double r = std::abs(z);
  if (r < 1e-8) return 1.0 + 0.5 * z;
  if (r > 0.5) return (std::exp(z) - 1.0) / z;
  const double x = z.real();
  const double y = z.imag();
  const double half_sin = std::sin(0.5 * y);
  const Complex em1(std::expm1(x) * std::cos(y) - 2.0 * half_sin * half_sin,
                    std::exp(x) * std::sin(y));
  return em1 / z;
}

Complex log1p_over(Complex z) {
  if (std::abs(z) >= 0.25) return std::log(1.0 + z) / z;
  Complex sum = 0.0;
  Complex power = 1.0;
  for (int k = 0; k < 40; ++k) {
    sum += power / static_cast<double>(k + 1);
    power *= -z;
    if (std::abs(power) < 1e-18) break;
  }
  return sum;
}

EvalResult zeta(Complex s) {
  check_imaginary_range(s);
  if (std::abs(s - 1.0) < 1e-12) {
    throw PoleError("zeta: pole at s = 1");
  }
  if (s.real() < -2.5) {
    // ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s)
    const EvalResult reflected = zeta(1.0 - s);
    const Complex factor = std::exp(s * std::log(2.0) + (s - 1.0) * std::log(kPi) +
                                    log_sin_pi(0.5 * s) + log_gamma_raw(1.0 - s).value);
    const Complex value = factor * reflected.value;
    const double bound = std::abs(factor) * reflected.abs_error_bound +
                         16.0 * kEps * (1.0 + std::abs(s)) * std::abs(value);
    return {value, bound};
  }
  const int shift = shift_for(s);
  // Σ_{k=1}^{M-1} k^{-s} is the Hurwitz block at x = 1 with M-1 terms.
  const EvalResult head = direct_block(s, 1.0, shift - 1);
  const EulerMaclaurinTail tail = euler_maclaurin_tail(s, shift, false);
  return {head.value + tail.value, head.abs_error_bound + tail.bound};
}

namespace {

EvalResult hurwitz_impl(Complex s, double x, bool regularized) {
  if (!(x > 0.0 && x <= 1.0)) {
    throw DomainError("hurwitz_zeta: x must lie in (0, 1]");
  }
  check_imaginary_range(s);
  if (!regularized && std::abs(s - 1.0) < 1e-12) {
    throw PoleError("hurwitz_zeta: pole at s = 1");
  }
  const int shift = shift_for(s);
  const EvalResult head = direct_block(s, x, shift);
  const EulerMaclaurinTail tail = euler_maclaurin_tail(s, shift + x, regularized);
  return {head.value + tail.value, head.abs_error_bound + tail.bound};
}

}  // namespace

EvalResult hurwitz_zeta(Complex s, double x) { return hurwitz_impl(s, x, false); }

EvalResult hurwitz_zeta_regularized(Complex s, double x) {
  return hurwitz_impl(s, x, true);
}

EvalResult log_gamma(Complex s) {
  const LogGammaRaw raw = log_gamma_raw(s);
  double im = std::remainder(raw.value.imag(), kTwoPi);
  if (im <= -kPi) im += kTwoPi;
  const double bound = 16.0 * kEps * (raw.magnitude + std::abs(raw.value));
  return {Complex(raw.value.real(), im), bound};
}

Complex gamma(Complex s) { return std::exp(log_gamma_raw(s).value); }

Complex reciprocal_gamma(Complex s) {
  if (at_gamma_pole(s)) return 0.0;
  return std::exp(-log_gamma_raw(s).value);
}

}  // namespace qdl::numkit
