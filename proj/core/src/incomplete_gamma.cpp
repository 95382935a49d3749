#include <array>
#include <cmath>
#include <limits>

#include "qdl/errors.hpp"
#include "qdl/numkit.hpp"

namespace qdl::numkit {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIterations = 20000;

// ζ(k) for k = 2..40, for the Taylor series of log Γ(1+ε).
const std::array<double, 41>& integer_zeta_values() {
  static const std::array<double, 41> table = [] {
    std::array<double, 41> t{};
    for (int k = 2; k <= 40; ++k) t[k] = zeta(Complex(k, 0.0)).value.real();
    return t;
  }();
  return table;
}

// log Γ(1+ε)/ε for |ε| ≤ 1/4.
Complex log_gamma_1p_over(Complex eps) {
  const auto& z = integer_zeta_values();
  Complex sum = -kEulerGamma;
  Complex power = eps;
  for (int k = 2; k <= 40; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * z[k] / k * power;
    power *= eps;
  }
  return sum;
}

// Γ(a, x) for a within 1/4 of the nonpositive integer -m. The pole of Γ(a)
// at -m cancels against the n = m term of the lower series; both are folded
// into expressions that stay finite as ε = a + m → 0.
EvalResult near_pole_upper(Complex a, int m, double x) {
  const Complex eps = a + static_cast<double>(m);
  const double log_x = std::log(x);

  Complex log_product_over = 0.0;  // Σ_j log(1 - ε/j)/ε
  for (int j = 1; j <= m; ++j) {
    log_product_over -= log1p_over(-eps / static_cast<double>(j)) / static_cast<double>(j);
  }
  const Complex log_f_over = log_gamma_1p_over(eps) - log_product_over;
  const Complex f_minus_one_over = expm1_over(log_f_over * eps) * log_f_over;

  double m_factorial = 1.0;
  for (int j = 2; j <= m; ++j) m_factorial *= j;
  const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
  const Complex regular = sign_m / m_factorial * f_minus_one_over;
  const Complex pole_part = sign_m / m_factorial * (-log_x * expm1_over(eps * log_x));

  // Σ_{n≠m} (-1)^n x^{a+n} / (n! (a+n))
  const Complex x_pow_a = std::exp(a * log_x);
  Complex rest = 0.0;
  double magnitude = 0.0;
  double coeff = 1.0;  // (-x)^n / n!
  for (int n = 0; n < kMaxIterations; ++n) {
    if (n > 0) coeff *= -x / n;
    if (n != m) {
      const Complex term = coeff / (a + static_cast<double>(n));
      rest += term;
      magnitude += std::abs(term);
      if (n > m && std::abs(term) < 1e-18 * std::abs(rest)) break;
    }
  }
  rest *= x_pow_a;
  magnitude *= std::abs(x_pow_a);

  const Complex value = regular + pole_part - rest;
  const double bound =
      16.0 * kEps * (std::abs(regular) + std::abs(pole_part) + magnitude);
  return {value, bound};
}

}  // namespace

EvalResult upper_incomplete_gamma_cf(Complex a, Complex x) {
  // Modified Lentz evaluation of the Legendre continued fraction.
  constexpr double kTiny = 1e-300;
  Complex b = x + 1.0 - a;
  Complex c = 1.0 / kTiny;
  Complex d = 1.0 / b;
  Complex h = d;
  bool converged = false;
  for (int i = 1; i <= kMaxIterations; ++i) {
    const Complex an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const Complex delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 2.0 * kEps) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw ConvergenceError("upper_incomplete_gamma_cf: no convergence");
  }
  const Complex value = std::exp(a * std::log(x) - x) * h;
  return {value, 64.0 * kEps * std::abs(value)};
}

EvalResult lower_incomplete_gamma_series(Complex a, double x) {
  if (!(x > 0.0)) throw DomainError("lower_incomplete_gamma_series: x must be positive");
  Complex term = 1.0 / a;
  Complex sum = term;
  double magnitude = std::abs(term);
  bool converged = false;
  for (int n = 1; n < kMaxIterations; ++n) {
    term *= x / (a + static_cast<double>(n));
    sum += term;
    magnitude += std::abs(term);
    if (std::abs(term) < 1e-17 * std::abs(sum)) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw ConvergenceError("lower_incomplete_gamma_series: no convergence");
  }
  const Complex prefactor = std::exp(a * std::log(x) - x);
  return {prefactor * sum, 8.0 * kEps * std::abs(prefactor) * magnitude};
}

EvalResult upper_incomplete_gamma(Complex a, double x) {
  if (!(x > 0.0)) throw DomainError("upper_incomplete_gamma: x must be positive");
  if (x >= std::abs(a) + 1.0) return upper_incomplete_gamma_cf(a, Complex(x, 0.0));
  const long m = std::lround(-a.real());
  if (m >= 0 && std::abs(a + static_cast<double>(m)) < 0.25) {
    return near_pole_upper(a, static_cast<int>(m), x);
  }
  const Complex full = gamma(a);
  const EvalResult lower = lower_incomplete_gamma_series(a, x);
  return {full - lower.value,
          lower.abs_error_bound + 16.0 * kEps * (1.0 + std::abs(a)) * std::abs(full)};
}

Complex exp_integral_e1(Complex z) {
  if (!(z.real() > 0.0)) throw DomainError("exp_integral_e1: requires Re z > 0");
  if (std::abs(z) >= 1.0) return upper_incomplete_gamma_cf(0.0, z).value;
  // Small |z|: -γ - log z - Σ_{n≥1} (-z)^n/(n·n!)
  Complex sum = 0.0;
  Complex coeff = 1.0;
  for (int n = 1; n < 60; ++n) {
    coeff *= -z / static_cast<double>(n);
    sum += coeff / static_cast<double>(n);
    if (std::abs(coeff) < 1e-18) break;
  }
  return -kEulerGamma - std::log(z) - sum;
}

}  // namespace qdl::numkit
