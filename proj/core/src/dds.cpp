#include "qdl/dds.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "qdl/arith.hpp"
#include "qdl/errors.hpp"
#include "qdl/gauss.hpp"
#include "qdl/ltable.hpp"
#include "qdl/numkit.hpp"
#include "qdl/summation.hpp"

namespace qdl::dds {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

Complex ppow(double base, Complex exponent) { return numkit::real_pow(base, exponent); }

Complex zeta_value(Complex s) { return numkit::zeta(s).value; }

// ζ^{(2)}(u) = ζ(u)(1 − 2^{−u}).
Complex zeta_odd(Complex u) { return zeta_value(u) * (1.0 - ppow(2.0, -u)); }

// Average of L(z, χ) over the odd moduli of the family: ζ^{(2)}(2z)/ζ^{(2)}(2z+1).
Complex family_mean(Complex z) { return zeta_odd(2.0 * z) / zeta_odd(2.0 * z + 1.0); }

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(std::uint64_t n) {
  const std::uint64_t r = isqrt(n);
  return r * r == n;
}

struct SeriesPieces {
  Complex partial;
  Complex block_fluctuation;  // Σ over the last dyadic block of (L − mean) n^{−t}
  double l_errors;
};

// Truncated A-series from a table of lifted L-values at z, weights n^{−t}.
SeriesPieces sum_series(const lfunc::SquarefreeLTable& table, Complex t, std::uint64_t N) {
  const Complex mean = family_mean(table.s());
  CompensatedComplexSum sum;
  CompensatedComplexSum block;
  double errors = 0.0;
  for (std::uint64_t n = 1; n <= N; n += 2) {
    const EvalResult l = table.lifted(n);
    const Complex weight = ppow(static_cast<double>(n), -t);
    sum.add(l.value * weight);
    errors += l.abs_error_bound * std::abs(weight);
    if (2 * n > N && !is_square(n)) block.add((l.value - mean) * weight);
  }
  return {sum.result(), block.result(), errors};
}

// Mean-field estimate of the terms beyond N: the non-square terms are
// replaced by their average, the square terms are summed exactly.
Complex mean_field_tail(Complex z, Complex t, std::uint64_t N) {
  const Complex mean = family_mean(z);
  CompensatedComplexSum head;
  for (std::uint64_t n = 1; n <= N; n += 2) head.add(ppow(static_cast<double>(n), -t));
  const Complex all_tail = zeta_odd(t) - head.result();
  const Complex zeta_z = zeta_value(z);
  const std::uint64_t j_start = isqrt(N) + 1;
  const std::uint64_t j_end = std::max<std::uint64_t>(200000, 50 * j_start);
  // Odd prime factors of every j ≤ j_end, for L(z, χ_{j²}) = ζ(z) Π_{p | 2j} (1 − p^{−z}).
  std::vector<std::uint32_t> spf(j_end + 1, 0);
  for (std::uint64_t i = 2; i <= j_end; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t k = i; k <= j_end; k += i) {
      if (spf[k] == 0) spf[k] = static_cast<std::uint32_t>(i);
    }
  }
  const Complex two_factor = zeta_z * (1.0 - ppow(2.0, -z));
  CompensatedComplexSum squares;
  for (std::uint64_t j = j_start | 1; j <= j_end; j += 2) {
    Complex value = two_factor;
    for (std::uint64_t r = j; r > 1;) {
      const std::uint32_t p = spf[r];
      while (r % p == 0) r /= p;
      value *= 1.0 - ppow(static_cast<double>(p), -z);
    }
    squares.add((value - mean) * ppow(static_cast<double>(j), -2.0 * t));
  }
  return mean * all_tail + squares.result();
}

EvalResult finish_series(const SeriesPieces& pieces, Complex z, Complex t, std::uint64_t N,
                         Tail tail) {
  // The fluctuation of later dyadic blocks shrinks by about 2^{1/2 − Re t}
  // per block under square-root cancellation.
  const double ratio = std::pow(2.0, 0.5 - t.real());
  const double fluctuation = std::abs(pieces.block_fluctuation) * ratio / (1.0 - ratio);
  const Complex estimate = mean_field_tail(z, t, N);
  const double rounding = 16.0 * kEps * std::abs(pieces.partial);
  if (tail == Tail::mean_field) {
    return {pieces.partial + estimate, fluctuation + pieces.l_errors + rounding};
  }
  return {pieces.partial, std::abs(estimate) + fluctuation + pieces.l_errors + rounding};
}

void check_alpha(Complex alpha) {
  if (!(alpha.real() > 0.0 && alpha.real() < 0.5)) {
    throw DomainError("residue: requires 0 < Re α < 1/2");
  }
}

struct LocalData {
  int a0;      // v_p(q1)
  int unit;    // (q1 p^{−a0} / p)
  int psi_p;   // ψ(p)
  int psip_p;  // ψ'(p)
};

LocalData local_data(std::uint64_t p, std::uint64_t q1, TwistLabel twist) {
  if (p < 3 || !arith::is_prime(p)) throw DomainError("Euler factor: p must be an odd prime");
  if (q1 == 0) throw DomainError("Euler factor: q1 must be positive");
  LocalData d{};
  std::uint64_t u = q1;
  while (u % p == 0) {
    u /= p;
    ++d.a0;
  }
  d.unit = arith::kronecker(static_cast<std::int64_t>(u), static_cast<std::int64_t>(p));
  d.psi_p = twist_value(twist.psi, static_cast<std::int64_t>(p));
  d.psip_p = twist_value(twist.psi_prime, static_cast<std::int64_t>(p));
  return d;
}

// Σ_k ψ'(p^{2k}) p^{−2ks} Σ_l ψ(p^l) G(χ_{p^{step·l}}, q1 p^{2k}) p^{−step·l·w}.
EvalResult euler_factor(std::uint64_t p, std::uint64_t q1, TwistLabel twist, Complex s,
                        Complex w, int K, int step) {
  const LocalData d = local_data(p, q1, twist);
  const double pd = static_cast<double>(p);
  const Complex p_w = ppow(pd, -static_cast<double>(step) * w);
  const Complex p_2s = ppow(pd, -2.0 * s);
  Complex total = 0.0;
  Complex k_power = 1.0;  // p^{−2ks}
  Complex last_block = 0.0;
  const double psip_sq = static_cast<double>(d.psip_p * d.psip_p);
  double psip_k = 1.0;
  for (int k = 0; k <= K; ++k) {
    const int a = d.a0 + 2 * k;
    Complex block = 0.0;
    Complex l_power = 1.0;
    double psi_l = 1.0;
    for (int l = 0; step * l <= a + 1; ++l) {
      const double g = gauss::g_prime_power(p, step * l, a, d.unit);
      block += psi_l * g * l_power;
      l_power *= p_w;
      psi_l *= d.psi_p;
    }
    last_block = psip_k * block * k_power;
    total += last_block;
    k_power *= p_2s;
    psip_k *= psip_sq;
  }
  double ratio = std::pow(pd, -2.0 * s.real()) *
                 std::max(1.0, std::pow(pd, 2.0 * (1.0 - step * w.real())));
  double tail = 0.0;
  if (ratio < 1.0) {
    tail = 2.0 * std::abs(last_block) * ratio / (1.0 - ratio);
  } else {
    tail = std::numeric_limits<double>::infinity();
  }
  return {total, tail + 8.0 * kEps * (1.0 + std::abs(total))};
}

int truncation_for(std::uint64_t p, Complex s) {
  const double per_k = 2.0 * s.real() * std::log(static_cast<double>(p));
  return std::max(2, static_cast<int>(std::ceil(42.0 / per_k)) + 1);
}

// D₁(s, w; q1, ψ, ψ') = D_{1,2} Π_{odd p ≤ P} D_{1,p}.
Complex d1_product(std::uint64_t q1, TwistLabel twist, Complex s, Complex w, std::uint32_t P) {
  Complex value = twist.psi_prime == Twist::psi0 ? 1.0 / (1.0 - ppow(4.0, -s)) : Complex(1.0);
  for (const std::uint32_t p : arith::small_primes()) {
    if (p > P) break;
    if (p == 2) continue;
    value *= euler_factor(p, q1, twist, s, w, truncation_for(p, s), 1).value;
  }
  return value;
}

// Tables of G(χ_{p^{k·step}}, q) for q ≤ Q and each odd prime power p^k ≤ L.
class PrimePowerGaussTable {
 public:
  PrimePowerGaussTable(std::uint64_t L, std::uint64_t Q, int step)
      : Q_(Q), spf_(L + 1, 0), index_(L + 1, -1) {
    for (std::uint64_t i = 2; i <= L; ++i) {
      if (spf_[i] != 0) continue;
      for (std::uint64_t j = i; j <= L; j += i) {
        if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
      }
    }
    for (std::uint64_t p = 3; p <= L; p += 2) {
      if (spf_[p] != p) continue;
      int k = 1;
      for (std::uint64_t pk = p; pk <= L; pk *= p, ++k) {
        index_[pk] = static_cast<int>(rows_.size() / (Q + 1));
        rows_.resize(rows_.size() + Q + 1, 0.0);
        double* row = &rows_[rows_.size() - (Q + 1)];
        for (std::uint64_t q = 1; q <= Q; ++q) {
          std::uint64_t u = q;
          int a = 0;
          while (u % p == 0) {
            u /= p;
            ++a;
          }
          const int unit = arith::kronecker(static_cast<std::int64_t>(u), static_cast<std::int64_t>(p));
          row[q] = gauss::g_prime_power(p, step * k, a, unit);
        }
        if (pk > L / p) break;
      }
    }
  }

  // Fills parts with the row pointers of the prime powers exactly dividing l.
  int split(std::uint64_t l, const double** parts) const {
    int count = 0;
    while (l > 1) {
      const std::uint32_t p = spf_[l];
      std::uint64_t pk = 1;
      while (l % p == 0) {
        l /= p;
        pk *= p;
      }
      parts[count++] = &rows_[static_cast<std::size_t>(index_[pk]) * (Q_ + 1)];
    }
    return count;
  }

 private:
  std::uint64_t Q_;
  std::vector<std::uint32_t> spf_;
  std::vector<int> index_;
  std::vector<double> rows_;
};

Complex twisted_direct(Complex s, Complex w, TwistLabel twist, std::uint64_t L,
                       std::uint64_t Q, int step) {
  if (twist.psi == Twist::psi0) {
    throw DomainError("twisted C-series: ψ must be non-principal");
  }
  if (L == 0 || Q == 0) return 0.0;
  const PrimePowerGaussTable table(L, Q, step);
  std::vector<Complex> q_weight(Q + 1, 0.0);
  for (std::uint64_t q = 1; q <= Q; ++q) {
    const int c = twist_value(twist.psi_prime, static_cast<std::int64_t>(q));
    if (c != 0) q_weight[q] = static_cast<double>(c) * ppow(static_cast<double>(q), -s);
  }
  CompensatedComplexSum total;
  std::vector<double> g(Q + 1);
  const double* parts[24];
  for (std::uint64_t l = 1; l <= L; l += 2) {
    const int c = twist_value(twist.psi, static_cast<std::int64_t>(l));
    if (c == 0) continue;
    const int count = table.split(l, parts);
    Complex inner = 0.0;
    for (std::uint64_t q = 1; q <= Q; ++q) {
      double v = 1.0;
      for (int i = 0; i < count && v != 0.0; ++i) v *= parts[i][q];
      if (v != 0.0) inner += v * q_weight[q];
    }
    total.add(static_cast<double>(c) * inner * ppow(static_cast<double>(l), -static_cast<double>(step) * w));
  }
  return total.result();
}

Complex untwisted_direct(Complex s, Complex w, std::uint64_t M, std::uint64_t Q, bool squares) {
  CompensatedComplexSum total;
  for (std::uint64_t m = 1; m <= M; m += 2) {
    if (squares && !is_square(m)) continue;
    const std::uint64_t modulus = 4 * m;
    const std::vector<int> chi = gauss::character_table(
        arith::kronecker_character(static_cast<std::int64_t>(modulus)), modulus);
    const std::vector<Complex> taus = gauss::tau_all_shifts(chi);
    Complex inner = 0.0;
    for (std::uint64_t q = 1; q <= Q; ++q) {
      inner += taus[q % modulus] * ppow(static_cast<double>(q), -s);
    }
    total.add(inner * ppow(static_cast<double>(m), -w));
  }
  return total.result();
}

}  // namespace

RegionPoint classify(Complex s, Complex w) {
  RegionPoint pt{s, w, RegionTag::other};
  const double rs = s.real();
  const double rw = w.real();
  if (rs > 1.0 && rs + rw > 1.5) {
    pt.tag = RegionTag::S0;
  } else if (rw > 1.0 && rs + rw >= 1.5 && 2.0 * rs + rw > 1.5) {
    pt.tag = RegionTag::S1;
  } else if (rs < -0.5) {
    pt.tag = RegionTag::dual_K;
  }
  return pt;
}

int twist_value(Twist t, std::int64_t n) {
  switch (t) {
    case Twist::psi0:
      return 1;
    case Twist::psi1:
      return arith::kronecker(4, n);
    case Twist::psi_minus1:
      return arith::kronecker(-4, n);
    case Twist::psi2:
      return arith::kronecker(8, n);
    case Twist::psi_minus2:
      return arith::kronecker(-8, n);
  }
  return 0;
}

const char* twist_name(Twist t) {
  switch (t) {
    case Twist::psi0:
      return "psi0";
    case Twist::psi1:
      return "psi1";
    case Twist::psi_minus1:
      return "psi-1";
    case Twist::psi2:
      return "psi2";
    case Twist::psi_minus2:
      return "psi-2";
  }
  return "?";
}

EvalResult a_series_nsum(Complex s, Complex w, std::uint64_t N, Tail tail, unsigned threads) {
  if (!(s.real() > 1.1 && s.real() + w.real() > 1.6)) {
    throw RegionError("a_series_nsum: (s, w) must lie in S0 with margin 0.1");
  }
  if (N < 1) throw DomainError("a_series_nsum: N must be positive");
  const lfunc::SquarefreeLTable table(w, N, lfunc::OddPartLift::inducing, threads);
  return finish_series(sum_series(table, s, N), w, s, N, tail);
}

EvalResult a_series_msum(Complex s, Complex w, std::uint64_t M, Tail tail, unsigned threads) {
  const RegionPoint pt = classify(s, w);
  const bool allowed = pt.tag == RegionTag::S1 || (s.real() > 1.0 && w.real() > 1.0);
  if (!allowed) {
    throw RegionError("a_series_msum: (s, w) must lie in S1 or have Re s, Re w > 1");
  }
  if (M < 1) throw DomainError("a_series_msum: M must be positive");
  const lfunc::SquarefreeLTable table(s, M, lfunc::OddPartLift::times_four, threads);
  return finish_series(sum_series(table, w, M), s, w, M, tail);
}

Complex p_factor(Complex s, Complex w) {
  const Complex u = s + 2.0 * w;
  return (1.0 - ppow(2.0, -s)) * (1.0 - ppow(2.0, -2.0 * w)) /
         (zeta_value(u) * (1.0 - ppow(2.0, -u)));
}

EvalResult a1_closed_form(Complex s, Complex w) {
  if (!((s + 2.0 * w).real() > 1.0 && w.real() > 0.5)) {
    throw RegionError("a1_closed_form: requires Re(s+2w) > 1 and Re w > 1/2");
  }
  const EvalResult zs = numkit::zeta(s);
  const EvalResult zw = numkit::zeta(2.0 * w);
  const Complex p = p_factor(s, w);
  const Complex value = zs.value * zw.value * p;
  const double bound = std::abs(p) * (zs.abs_error_bound * std::abs(zw.value) +
                                      zw.abs_error_bound * std::abs(zs.value)) +
                       32.0 * kEps * std::abs(value);
  return {value, bound};
}

Complex residue_s1(Complex alpha) {
  check_alpha(alpha);
  return zeta_value(1.0 + 2.0 * alpha) * p_factor(1.0, 0.5 + alpha);
}

Complex residue_s1_theorem_form(Complex alpha) {
  check_alpha(alpha);
  const Complex a2 = 2.0 * alpha;
  return zeta_value(1.0 + a2) / zeta_value(2.0 + a2) * (1.0 - ppow(2.0, -1.0 - a2)) /
         (2.0 * (1.0 - ppow(2.0, -2.0 - a2)));
}

ResidueForms residue_s_1_minus_alpha_forms(Complex alpha) {
  check_alpha(alpha);
  using numkit::gamma;
  using numkit::reciprocal_gamma;
  const double zeta2 = kPi * kPi / 6.0;
  ResidueForms forms;
  forms.reflected = ppow(kPi, alpha) * gamma(0.5 - alpha) * gamma(0.5 * alpha) *
                    reciprocal_gamma(0.5 * (1.0 - alpha)) * reciprocal_gamma(alpha) *
                    zeta_value(1.0 - 2.0 * alpha) / zeta2 * ppow(2.0, 2.0 * alpha) / 6.0;
  forms.pre_reflection = ppow(2.0, 2.0 * alpha - 1.0) * ppow(kPi, 0.5 - alpha) *
                         gamma(0.5 * alpha) * reciprocal_gamma(0.5 * (1.0 - alpha)) / 3.0 *
                         zeta_value(2.0 * alpha) / zeta2;
  return forms;
}

Complex residue_s_1_minus_alpha(Complex alpha) {
  return residue_s_1_minus_alpha_forms(alpha).reflected;
}

EvalResult d1_euler_factor(std::uint64_t p, std::uint64_t q1, TwistLabel twist, Complex s,
                           Complex w, int K) {
  return euler_factor(p, q1, twist, s, w, K, 1);
}

EvalResult d2_euler_factor(std::uint64_t p, std::uint64_t q1, TwistLabel twist, Complex s,
                           Complex w, int K) {
  return euler_factor(p, q1, twist, s, w, K, 2);
}

Complex k0_slice(std::uint64_t p, std::uint64_t q1, Twist psi, Complex w) {
  const LocalData d = local_data(p, q1, {psi, Twist::psi0});
  const Complex p_w = ppow(static_cast<double>(p), -w);
  Complex sum = 0.0;
  Complex l_power = 1.0;
  double psi_l = 1.0;
  for (int l = 0; l <= d.a0 + 4; ++l) {
    sum += psi_l * gauss::g_prime_power(p, l, d.a0, d.unit) * l_power;
    l_power *= p_w;
    psi_l *= d.psi_p;
  }
  return sum;
}

Complex k0_slice_closed_form(std::uint64_t p, std::uint64_t q1, Twist psi, Complex w) {
  const double pd = static_cast<double>(p);
  const int psi_p = twist_value(psi, static_cast<std::int64_t>(p));
  if (q1 % p == 0) {
    return 1.0 - static_cast<double>(psi_p * psi_p) * ppow(pd, 1.0 - 2.0 * w);
  }
  const int symbol = arith::kronecker(static_cast<std::int64_t>(q1), static_cast<std::int64_t>(p));
  return 1.0 + static_cast<double>(psi_p * symbol) * ppow(pd, 0.5 - w);
}

double dk1_psi1_identity(std::uint64_t p, Complex s, int K) {
  if (p < 3 || !arith::is_prime(p)) throw DomainError("dk1_psi1_identity: p must be an odd prime");
  if (!(s.real() > 0.5)) throw RegionError("dk1_psi1_identity: requires Re s > 1/2");
  const double pd = static_cast<double>(p);
  const double p_w = std::pow(pd, -1.5);
  const Complex p_2s = ppow(pd, -2.0 * s);
  Complex sum = 0.0;
  Complex k_power = p_2s;
  for (int k = 1; k <= K; ++k) {
    Complex block = 0.0;
    double l_power = 1.0;
    for (int l = 0; l <= 2 * k + 1; ++l) {
      block += gauss::g_prime_power(p, l, 2 * k, 1) * l_power;
      l_power *= p_w;
    }
    sum += block * k_power;
    k_power *= p_2s;
  }
  const Complex closed = (1.0 + 1.0 / pd) * p_2s / (1.0 - p_2s);
  return std::abs(sum - closed);
}

Complex residue_w_3_2_C(Complex s) {
  if (!(s.real() > 1.0)) throw RegionError("residue_w_3_2_C: requires Re s > 1");
  return 2.0 / 3.0 * zeta_value(2.0 * s) / (kPi * kPi / 6.0);
}

EvalResult residue_w_3_2_C_product(Complex s, std::uint32_t P, bool tail_correction) {
  if (!(s.real() > 1.0)) throw RegionError("residue_w_3_2_C_product: requires Re s > 1");
  const TwistLabel twist{Twist::psi1, Twist::psi0};
  const Complex w = 1.5;
  Complex log_product = 0.0;
  double error = 0.0;
  for (const std::uint32_t p : arith::small_primes()) {
    if (p > P) break;
    if (p == 2) continue;
    const EvalResult f = euler_factor(p, 1, twist, s, w, truncation_for(p, s), 1);
    const Complex local = f.value * (1.0 - 1.0 / p);
    log_product += std::log(local);
    error += f.abs_error_bound / std::abs(f.value);
  }
  double tail_error = 0.0;
  if (tail_correction) {
    const double log_p = std::log(static_cast<double>(P));
    const Complex correction = -numkit::exp_integral_e1(log_p) +
                               numkit::exp_integral_e1((2.0 * s - 1.0) * log_p);
    log_product += correction;
    tail_error = 0.05 * std::abs(correction);
  } else {
    tail_error = 1.0 / (static_cast<double>(P) * std::log(static_cast<double>(P)));
  }
  const Complex four_s = ppow(4.0, -s);
  // Only ψ = ψ1 with q1 = 1 has a pole. The ψ' = ψ0 piece enters with
  // 4^{−s} D_{1,2} = 4^{−s}/(1 − 4^{−s}), the ψ' = ψ−1 piece with 1, and the
  // residue of ζ^{(2)}(w − 1/2) at w = 3/2 is 1/2.
  const Complex weight = four_s / (1.0 - four_s) + 1.0;
  const Complex value = 0.5 * weight * std::exp(log_product);
  return {value, std::abs(value) * (error + tail_error + 64.0 * kEps)};
}

Complex c1_twisted_direct(Complex s, Complex w, TwistLabel twist, std::uint64_t L,
                          std::uint64_t Q) {
  return twisted_direct(s, w, twist, L, Q, 1);
}

Complex c2_twisted_direct(Complex s, Complex w, TwistLabel twist, std::uint64_t L,
                          std::uint64_t Q) {
  return twisted_direct(s, w, twist, L, Q, 2);
}

EvalResult c1_from_d_factors(Complex s, Complex w, TwistLabel twist, std::uint64_t q1_max,
                             std::uint32_t P) {
  if (twist.psi == Twist::psi0) throw DomainError("c1_from_d_factors: ψ must be non-principal");
  if (!(s.real() > 1.0 && w.real() > 0.75)) {
    throw RegionError("c1_from_d_factors: requires Re s > 1 and Re w > 3/4");
  }
  CompensatedComplexSum total;
  for (std::uint64_t q1 = 1; q1 <= q1_max; ++q1) {
    const int c = twist_value(twist.psi_prime, static_cast<std::int64_t>(q1));
    if (c == 0 || !arith::is_squarefree(q1)) continue;
    total.add(static_cast<double>(c) * ppow(static_cast<double>(q1), -s) *
              d1_product(q1, twist, s, w, P));
  }
  // Tail beyond q1_max, with D₁ bounded by its typical size 1.
  const double tail = std::pow(static_cast<double>(q1_max), 1.0 - s.real()) / (s.real() - 1.0);
  return {total.result(), tail};
}

Complex c1_untwisted_direct(Complex s, Complex w, std::uint64_t M, std::uint64_t Q) {
  return untwisted_direct(s, w, M, Q, false);
}

Complex c2_untwisted_direct(Complex s, Complex w, std::uint64_t M, std::uint64_t Q) {
  return untwisted_direct(s, w, M, Q, true);
}

Complex c1_from_twists(Complex s, Complex w, std::uint64_t M, std::uint64_t Q) {
  auto c1 = [&](Twist a, Twist b, std::uint64_t q_cut) {
    return c1_twisted_direct(s, w, {a, b}, M, q_cut);
  };
  return -ppow(2.0, -s) * (c1(Twist::psi2, Twist::psi1, Q / 2) +
                           c1(Twist::psi_minus2, Twist::psi1, Q / 2)) +
         ppow(4.0, -s) * (c1(Twist::psi1, Twist::psi0, Q / 4) +
                          c1(Twist::psi_minus1, Twist::psi0, Q / 4)) +
         c1(Twist::psi1, Twist::psi_minus1, Q) - c1(Twist::psi_minus1, Twist::psi_minus1, Q);
}

Complex c2_from_twists(Complex s, Complex w, std::uint64_t M, std::uint64_t Q) {
  const std::uint64_t L = isqrt(M);
  return -ppow(2.0, 1.0 - s) * c2_twisted_direct(s, w, {Twist::psi1, Twist::psi1}, L, Q / 2) +
         ppow(2.0, 1.0 - 2.0 * s) * c2_twisted_direct(s, w, {Twist::psi1, Twist::psi0}, L, Q / 4);
}

}  // namespace qdl::dds
