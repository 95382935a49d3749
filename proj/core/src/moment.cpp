#include "qdl/moment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qdl/arith.hpp"
#include "qdl/dds.hpp"
#include "qdl/errors.hpp"
#include "qdl/ltable.hpp"
#include "qdl/numkit.hpp"
#include "qdl/parallel.hpp"
#include "qdl/summation.hpp"

namespace qdl::moment {
namespace {

void check_params(const MomentParams& p) {
  if (!(p.X > 0.0)) throw DomainError("moment: X must be positive");
  if (p.X > kMaxX) throw RangeError("moment: X beyond 2^20");
  if (!(p.alpha.real() > 0.0 && p.alpha.real() < 0.5)) {
    throw DomainError("moment: requires 0 < Re α < 1/2");
  }
  if (!p.weight.w || !p.weight.mellin) throw DomainError("moment: weight is not set");
  if (!(p.weight.support_cut > 0.0) || !std::isfinite(p.weight.support_cut)) {
    throw DomainError("moment: weight support cut must be finite and positive");
  }
}

std::uint64_t cutoff(double X, double T) { return static_cast<std::uint64_t>(std::floor(T * X)); }

// Σ_{odd n ≤ T·X} table.lifted(n) w(n/X), summed pairwise in ascending n.
Complex weighted_sum(const lfunc::SquarefreeLTable& table, const WeightSpec& weight, double X) {
  const std::uint64_t n_max = cutoff(X, weight.support_cut);
  std::vector<Complex> terms;
  terms.reserve(n_max / 2 + 1);
  for (std::uint64_t n = 1; n <= n_max; n += 2) {
    terms.push_back(table.lifted(n).value * weight.w(static_cast<double>(n) / X));
  }
  return pairwise_sum(terms);
}

MomentRow make_row(double X, Complex alpha, Complex S, const MainTerms& mt) {
  MomentRow row;
  row.X = X;
  row.alpha = alpha;
  row.S = S;
  row.M1 = mt.M1;
  row.M2 = mt.M2;
  row.E = S - mt.M1 - mt.M2;
  row.E_norm = std::abs(row.E) / std::pow(X, 0.25);
  return row;
}

std::vector<double> checked_grid(const std::vector<double>& grid, double limit) {
  if (grid.empty()) throw DomainError("moment: empty X grid");
  for (const double X : grid) {
    if (!(X > 0.0)) throw DomainError("moment: grid values must be positive");
    if (X > limit) throw RangeError("moment: grid value beyond the supported scale");
  }
  return grid;
}

}  // namespace

WeightSpec WeightSpec::gaussian() {
  WeightSpec spec;
  spec.kind = Kind::gaussian;
  spec.w = [](double t) { return std::exp(-t * t); };
  spec.mellin = [](Complex s) { return 0.5 * numkit::gamma(0.5 * s); };
  spec.support_cut = 6.1;
  return spec;
}

WeightSpec WeightSpec::custom(std::function<double(double)> w, double support_cut) {
  WeightSpec spec;
  spec.kind = Kind::custom;
  spec.w = w;
  spec.support_cut = support_cut;
  const double upper = std::log(support_cut);
  spec.mellin = [w, upper](Complex s) {
    if (!(s.real() > 0.0)) throw DomainError("custom weight: Mellin transform needs Re s > 0");
    using Quad = boost::math::quadrature::gauss_kronrod<double, 31>;
    const double lower = -std::numeric_limits<double>::infinity();
    auto part = [&](bool imag) {
      return Quad::integrate(
          [&](double u) {
            const double mag = w(std::exp(u)) * std::exp(u * s.real());
            return mag * (imag ? std::sin(u * s.imag()) : std::cos(u * s.imag()));
          },
          lower, upper, 20, 1e-13);
    };
    return Complex(part(false), part(true));
  };
  return spec;
}

WeightSpec WeightSpec::scaled(double c) const {
  WeightSpec spec = *this;
  const auto w0 = w;
  const auto m0 = mellin;
  spec.w = [w0, c](double t) { return c * w0(t); };
  spec.mellin = [m0, c](Complex s) { return c * m0(s); };
  return spec;
}

Complex compute_moment(const MomentParams& params, unsigned threads) {
  check_params(params);
  const std::uint64_t n_max = std::max<std::uint64_t>(1, cutoff(params.X, params.weight.support_cut));
  const lfunc::SquarefreeLTable table(0.5 + params.alpha, n_max, lfunc::OddPartLift::inducing,
                                      threads);
  return weighted_sum(table, params.weight, params.X);
}

MainTerms main_terms(const MomentParams& params) {
  check_params(params);
  const Complex alpha = params.alpha;
  const double X = params.X;
  MainTerms mt;
  mt.M1 = X * params.weight.mellin(1.0) * dds::residue_s1_theorem_form(alpha);
  mt.M2 = numkit::real_pow(X, 1.0 - alpha) * params.weight.mellin(1.0 - alpha) *
          dds::residue_s_1_minus_alpha(alpha);
  return mt;
}

std::vector<double> geometric_grid(double x_min, double x_max, int points) {
  if (points < 2 || !(x_min > 0.0) || !(x_max > x_min)) {
    throw DomainError("geometric_grid: need 0 < x_min < x_max and at least 2 points");
  }
  // Interpolating in log2 keeps dyadic grids exact.
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double lo = std::log2(x_min);
  const double step = (std::log2(x_max) - lo) / (points - 1);
  for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = std::exp2(lo + step * i);
  grid.front() = x_min;
  grid.back() = x_max;
  return grid;
}

ScanSummary error_scan(Complex alpha, const WeightSpec& weight, const std::vector<double>& grid,
                       unsigned threads) {
  const std::vector<double> xs = checked_grid(grid, kMaxX);
  const double x_top = *std::max_element(xs.begin(), xs.end());
  check_params({x_top, alpha, weight});
  const std::uint64_t n_max = std::max<std::uint64_t>(1, cutoff(x_top, weight.support_cut));
  const lfunc::SquarefreeLTable table(0.5 + alpha, n_max, lfunc::OddPartLift::inducing, threads);

  ScanSummary summary;
  std::vector<double> lx;
  std::vector<double> le;
  for (const double X : xs) {
    const MomentParams p{X, alpha, weight};
    summary.rows.push_back(make_row(X, alpha, weighted_sum(table, weight, X), main_terms(p)));
    const double e = std::abs(summary.rows.back().E);
    if (e > 1e-12) {
      lx.push_back(std::log(X));
      le.push_back(std::log(e));
    }
  }
  const std::size_t n = lx.size();
  if (n >= 2) {
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      mx += lx[i];
      my += le[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sxx += (lx[i] - mx) * (lx[i] - mx);
      sxy += (lx[i] - mx) * (le[i] - my);
    }
    if (sxx > 0.0) {
      summary.fitted_slope = sxy / sxx;
      if (n > 2) {
        double ssr = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          const double r = le[i] - my - summary.fitted_slope * (lx[i] - mx);
          ssr += r * r;
        }
        summary.slope_stderr = std::sqrt(ssr / static_cast<double>(n - 2) / sxx);
      }
    }
  }
  return summary;
}

QRecovery central_limit_Q(const std::vector<double>& grid, const WeightSpec& weight) {
  const std::vector<double> xs = checked_grid(grid, kMaxX);
  if (xs.size() < 2) throw DomainError("central_limit_Q: need at least two grid points");
  constexpr double kH = 1e-3;
  QRecovery out;
  for (const double X : xs) {
    auto total = [&](double a) {
      const MainTerms mt = main_terms({X, Complex(a, 0.0), weight});
      return (mt.M1 + mt.M2).real();
    };
    const double f1 = total(kH);
    const double f2 = total(kH / 2);
    const double f4 = total(kH / 4);
    const double r1 = 2.0 * f2 - f1;
    const double r2 = 2.0 * f4 - f2;
    if (std::abs(r1 - r2) > 1e-4 * std::abs(r2)) {
      throw ExtrapolationError("central_limit_Q: Richardson estimates did not settle");
    }
    out.X.push_back(X);
    out.limit.push_back((4.0 * r2 - r1) / 3.0);
  }
  // Least squares of limit/X on log X.
  const std::size_t n = xs.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += std::log(out.X[i]);
    my += out.limit[i] / out.X[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(out.X[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (out.limit[i] / out.X[i] - my);
  }
  if (!(sxx > 0.0)) throw DomainError("central_limit_Q: grid needs distinct X values");
  out.q1 = sxy / sxx;
  out.q0 = my - out.q1 * mx;
  for (std::size_t i = 0; i < n; ++i) {
    const double fit = out.X[i] * (out.q1 * std::log(out.X[i]) + out.q0);
    out.relative_residual.push_back(std::abs(fit - out.limit[i]) / std::abs(out.limit[i]));
  }
  return out;
}

std::vector<SieveRow> large_sieve_scan(const std::vector<double>& grid, Complex s,
                                       unsigned threads) {
  const std::vector<double> xs = checked_grid(grid, kMaxSieveX);
  if (!(s.real() >= 0.5)) throw DomainError("large_sieve_scan: requires Re s ≥ 1/2");
  const double x_top = *std::max_element(xs.begin(), xs.end());
  const auto limit = static_cast<std::int64_t>(std::floor(x_top));

  // Discriminants ordered by |d|, positive first on ties.
  std::vector<std::int64_t> discs;
  for (std::int64_t m = 3; m <= limit; ++m) {
    if (arith::is_fundamental_discriminant(m)) discs.push_back(m);
    if (arith::is_fundamental_discriminant(-m)) discs.push_back(-m);
  }
  const lfunc::AfeEvaluator evaluator(s);
  std::vector<double> values(discs.size());
  parallel_for(discs.size(), threads,
               [&](std::size_t i) { values[i] = std::abs(evaluator.evaluate(discs[i]).value); });

  std::vector<SieveRow> rows;
  for (const double X : xs) {
    SieveRow row;
    row.X = X;
    std::vector<double> picked;
    for (std::size_t i = 0; i < discs.size(); ++i) {
      if (static_cast<double>(discs[i] < 0 ? -discs[i] : discs[i]) <= X) picked.push_back(values[i]);
    }
    row.count = picked.size();
    row.sum = pairwise_sum(picked);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qdl::moment
