#include "qdl/afe_kernel.hpp"

#include <cmath>
#include <limits>

#include "qdl/arith.hpp"
#include "qdl/errors.hpp"
#include "qdl/lfunc.hpp"
#include "qdl/numkit.hpp"

namespace qdl::lfunc {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::uint32_t kSieveLimit = 1u << 20;

// Smallest prime factor of every n < 2^20.
const std::vector<std::uint32_t>& spf_table() {
  static const std::vector<std::uint32_t> table = [] {
    std::vector<std::uint32_t> spf(kSieveLimit, 0);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t i = 2; i < kSieveLimit; ++i) {
      if (spf[i] == 0) {
        spf[i] = i;
        primes.push_back(i);
      }
      for (const std::uint32_t p : primes) {
        const std::uint64_t ip = static_cast<std::uint64_t>(i) * p;
        if (p > spf[i] || ip >= kSieveLimit) break;
        spf[ip] = p;
      }
    }
    return spf;
  }();
  return table;
}

struct CharacterScratch {
  std::int64_t d = 0;
  std::vector<signed char> values;
};

// χ^{(d)}(n) for n = 0..count-1, using complete multiplicativity so the
// Kronecker symbol is only evaluated at primes.
const std::vector<signed char>& character_values(std::int64_t d, std::size_t count) {
  thread_local CharacterScratch scratch;
  if (scratch.d == d && scratch.values.size() >= count) return scratch.values;
  const auto& spf = spf_table();
  auto& chi = scratch.values;
  chi.assign(count, 0);
  if (count > 1) chi[1] = 1;
  for (std::size_t n = 2; n < count; ++n) {
    if (n < spf.size()) {
      const std::uint32_t p = spf[n];
      chi[n] = (p == n) ? static_cast<signed char>(arith::kronecker(d, static_cast<std::int64_t>(n)))
                        : static_cast<signed char>(chi[p] * chi[n / p]);
    } else {
      chi[n] = static_cast<signed char>(arith::kronecker(d, static_cast<std::int64_t>(n)));
    }
  }
  scratch.d = d;
  return chi;
}

Complex kernel_direct(Complex a1, Complex a2, double x) {
  const double log_x = std::log(x);
  const Complex f1 = numkit::upper_incomplete_gamma(a1, x).value * std::exp(x - a1 * log_x);
  const Complex f2 = numkit::upper_incomplete_gamma(a2, x).value * std::exp(x - a2 * log_x);
  return f1 + f2;
}

template <typename T>
T clenshaw(const T* c, double t) {
  T b1{};
  T b2{};
  for (int k = AfeKernel::kDegree; k >= 1; --k) {
    const T b0 = 2.0 * t * b1 - b2 + c[k];
    b2 = b1;
    b1 = b0;
  }
  return t * b1 - b2 + c[0];
}

int next_power_of_two_at_least(double v) {
  int p = 1;
  while (p < v) p *= 2;
  return p;
}

}  // namespace

double AfeKernel::required_x_max(Complex s) {
  const double reach = 40.0 + std::abs(s);
  return reach + 2.0 * std::sqrt(reach * kPi) + kPi + 1.0;
}

AfeKernel::AfeKernel(Complex s, int a)
    : s_(s), a_(a), real_(s.imag() == 0.0), x_max_(required_x_max(s)) {
  pieces_per_binade_ = std::max(4, next_power_of_two_at_least(std::abs(s.imag())));
  std::frexp(kMinX, &min_exponent_);
  std::frexp(x_max_, &max_exponent_);
  const int binades = max_exponent_ - min_exponent_ + 1;
  const int pieces = binades * pieces_per_binade_;
  constexpr int kNodes = kDegree + 1;
  coeffs_.assign(static_cast<std::size_t>(pieces) * kNodes, 0.0);
  piece_error_.assign(pieces, 0.0);

  const Complex a1 = 0.5 * (s + static_cast<double>(a));
  const Complex a2 = 0.5 * (1.0 - s + static_cast<double>(a));
  const double S = pieces_per_binade_;

  double cos_table[kNodes][kNodes];
  for (int k = 0; k < kNodes; ++k) {
    const double theta = kPi * (k + 0.5) / kNodes;
    for (int m = 0; m < kNodes; ++m) cos_table[m][k] = std::cos(m * theta);
  }

  for (int e = min_exponent_; e <= max_exponent_; ++e) {
    const double base = std::ldexp(1.0, e - 1);
    for (int j = 0; j < pieces_per_binade_; ++j) {
      const int index = (e - min_exponent_) * pieces_per_binade_ + j;
      const double lo = base * (1.0 + j / S);
      const double hi = base * (1.0 + (j + 1) / S);
      const double mid = 0.5 * (lo + hi);
      const double half = 0.5 * (hi - lo);
      Complex values[kNodes];
      double scale = 0.0;
      for (int k = 0; k < kNodes; ++k) {
        values[k] = kernel_direct(a1, a2, mid + half * cos_table[1][k]);
        scale = std::max(scale, std::abs(values[k]));
      }
      Complex* c = &coeffs_[static_cast<std::size_t>(index) * kNodes];
      for (int m = 0; m < kNodes; ++m) {
        Complex acc = 0.0;
        for (int k = 0; k < kNodes; ++k) acc += values[k] * cos_table[m][k];
        c[m] = acc * (2.0 / kNodes);
      }
      c[0] *= 0.5;
      // Error estimate: trailing coefficients plus a check between nodes.
      const double t_check = 0.3711;
      const Complex check = kernel_direct(a1, a2, mid + half * t_check);
      const double miss = std::abs(clenshaw(c, t_check) - check);
      const double tail = std::abs(c[kDegree]) + std::abs(c[kDegree - 1]);
      piece_error_[index] = 2.0 * std::max(miss, tail) + 16.0 * kEps * scale;
    }
  }
  if (real_) {
    real_coeffs_.resize(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) real_coeffs_[i] = coeffs_[i].real();
  }
}

int AfeKernel::piece_index(double x, double& t) const {
  int e = 0;
  const double f = std::frexp(x, &e);
  if (x < kMinX || e > max_exponent_) {
    throw RangeError("AfeKernel: x outside the tabulated range");
  }
  const double us = (2.0 * f - 1.0) * pieces_per_binade_;
  const int j = std::min(static_cast<int>(us), pieces_per_binade_ - 1);
  t = 2.0 * (us - j) - 1.0;
  return (e - min_exponent_) * pieces_per_binade_ + j;
}

Complex AfeKernel::evaluate(double x, double& error) const {
  double t = 0.0;
  const int index = piece_index(x, t);
  error = piece_error_[index];
  return clenshaw(&coeffs_[static_cast<std::size_t>(index) * (kDegree + 1)], t);
}

double AfeKernel::evaluate_real(double x, double& error) const {
  double t = 0.0;
  const int index = piece_index(x, t);
  error = piece_error_[index];
  return clenshaw(&real_coeffs_[static_cast<std::size_t>(index) * (kDegree + 1)], t);
}

Complex AfeKernel::operator()(double x) const {
  double error = 0.0;
  return evaluate(x, error);
}

AfeEvaluator::AfeEvaluator(Complex s) : s_(s), even_(s, 0), odd_(s, 1) {
  if (s.real() < kAfeMinReal || s.real() > kAfeMaxReal || std::abs(s.imag()) > kAfeMaxImag) {
    throw RangeError("AfeEvaluator: s outside the supported AFE range");
  }
  rgamma_even_ = numkit::reciprocal_gamma(0.5 * s);
  rgamma_odd_ = numkit::reciprocal_gamma(0.5 * (s + 1.0));
}

EvalResult AfeEvaluator::completed(std::int64_t d) const {
  const double q = static_cast<double>(d < 0 ? -d : d);
  const bool odd = d < 0;
  if (kPi / q < AfeKernel::kMinX) {
    throw RangeError("AfeEvaluator: modulus too large for the kernel table");
  }
  const auto terms = static_cast<std::size_t>(std::ceil(std::sqrt(q * (40.0 + std::abs(s_)) / kPi)));
  const std::vector<signed char>& chi = character_values(d, terms + 1);
  const AfeKernel& kernel = odd ? odd_ : even_;

  Complex sum = 0.0;
  double magnitude = 0.0;
  double fit_error = 0.0;
  if (kernel.is_real()) {
    double real_sum = 0.0;
    for (std::size_t n = 1; n <= terms; ++n) {
      const int c = chi[n];
      if (c == 0) continue;
      const double nd = static_cast<double>(n);
      const double x = kPi * nd * nd / q;
      const double weight = std::exp(-x) * (odd ? nd : 1.0);
      double err = 0.0;
      const double term = weight * kernel.evaluate_real(x, err);
      real_sum += c * term;
      magnitude += std::abs(term);
      fit_error += weight * err;
    }
    sum = real_sum;
  } else {
    for (std::size_t n = 1; n <= terms; ++n) {
      const int c = chi[n];
      if (c == 0) continue;
      const double nd = static_cast<double>(n);
      const double x = kPi * nd * nd / q;
      const double weight = std::exp(-x) * (odd ? nd : 1.0);
      double err = 0.0;
      const Complex term = weight * kernel.evaluate(x, err);
      sum += static_cast<double>(c) * term;
      magnitude += std::abs(term);
      fit_error += weight * err;
    }
  }
  if (d == 1) {
    if (s_ == 0.0 || s_ == 1.0) throw PoleError("AfeEvaluator: pole of the completed zeta");
    sum += -1.0 / s_ - 1.0 / (1.0 - s_);
  }
  const double next = static_cast<double>(terms + 1);
  const double x_next = kPi * next * next / q;
  const double tail = 8.0 * std::exp(-x_next) * (odd ? next : 1.0);
  return {sum, fit_error + 8.0 * kEps * magnitude + tail};
}

EvalResult AfeEvaluator::evaluate(std::int64_t d) const {
  const bool odd = d < 0;
  const Complex rgamma = odd ? rgamma_odd_ : rgamma_even_;
  if (rgamma == 0.0) throw PoleError("AfeEvaluator: s is a pole of the gamma factor");
  const double q = static_cast<double>(d < 0 ? -d : d);
  const Complex a1 = 0.5 * (s_ + (odd ? 1.0 : 0.0));
  const Complex factor = std::exp(-a1 * std::log(q / kPi)) * rgamma;
  const EvalResult lambda = completed(d);
  return {lambda.value * factor, lambda.abs_error_bound * std::abs(factor)};
}

}  // namespace qdl::lfunc
