#include "qdl_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "qdl/arith.hpp"
#include "qdl/dds.hpp"
#include "qdl/errors.hpp"
#include "qdl/gauss.hpp"
#include "qdl/lfunc.hpp"
#include "qdl/moment.hpp"
#include "qdl/parallel.hpp"

namespace qdl::cli {
namespace {

using json = nlohmann::ordered_json;

// Thrown for parameter combinations CLI11 cannot validate on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double tol_or(const RunConfig& c, double fallback) { return c.tolerance > 0.0 ? c.tolerance : fallback; }

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::vector<std::int64_t> fundamental_discriminants(std::uint64_t limit) {
  std::vector<std::int64_t> out;
  for (std::int64_t m = 1; m <= static_cast<std::int64_t>(limit); ++m) {
    if (arith::is_fundamental_discriminant(m)) out.push_back(m);
    if (arith::is_fundamental_discriminant(-m)) out.push_back(-m);
  }
  return out;
}

int emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + c.output);
  file << text;
  return 0;
}

int finish_check(const RunConfig& c, json report, bool pass, std::ostream& out) {
  report["pass"] = pass;
  emit(c, report.dump(2) + "\n", out);
  return pass ? 0 : 1;
}

int gauss_check(const RunConfig& c, std::ostream& out) {
  const double tol = tol_or(c, 1e-8);
  double worst_g = 0.0;
  for (std::uint64_t n = 1; n <= c.n_max; n += 2) {
    for (std::uint64_t q = 1; q <= c.q_max; ++q) {
      const auto q64 = static_cast<std::int64_t>(q);
      const double diff = std::abs(gauss::g_sum(n, q64).value - gauss::g_from_tau(n, q64).value);
      worst_g = std::max(worst_g, diff / static_cast<double>(n));
    }
  }
  double worst_tau = 0.0;
  for (std::uint64_t l = 1; l <= c.l_max; l += 2) {
    const auto chi = arith::kronecker_character(4 * static_cast<std::int64_t>(l));
    for (std::uint64_t q = 1; q <= c.q4_max; ++q) {
      const auto q64 = static_cast<std::int64_t>(q);
      const double diff =
          std::abs(gauss::tau_4l(l, q64).value - gauss::tau_bruteforce(chi, q64).value);
      worst_tau = std::max(worst_tau, diff / static_cast<double>(4 * l));
    }
  }
  json report{{"n_max", c.n_max},
              {"q_max", c.q_max},
              {"max_g_error_over_n", worst_g},
              {"l_max", c.l_max},
              {"q4_max", c.q4_max},
              {"max_tau4l_error_over_4l", worst_tau},
              {"tolerance", tol}};
  return finish_check(c, report, worst_g <= tol && worst_tau <= tol, out);
}

int lvalue(const RunConfig& c, std::ostream& out) {
  const Complex s(c.s_re, c.s_im);
  lfunc::Method method = lfunc::Method::afe;
  if (c.method == "hurwitz") {
    method = lfunc::Method::hurwitz;
  } else if (c.method != "afe") {
    throw UsageError("--method must be afe or hurwitz");
  }
  const EvalResult v = lfunc::l_kronecker(c.d, s, method);
  if (c.format == Format::json) {
    json report{{"d", c.d},       {"s", complex_json(s)}, {"method", c.method},
                {"value", complex_json(v.value)}, {"abs_error_bound", v.abs_error_bound}};
    return emit(c, report.dump(2) + "\n", out);
  }
  std::ostringstream text;
  text << "d,s_re,s_im,L_re,L_im,abs_error_bound\n"
       << c.d << ',' << format_double(s.real()) << ',' << format_double(s.imag()) << ','
       << format_double(v.value.real()) << ',' << format_double(v.value.imag()) << ','
       << format_double(v.abs_error_bound) << '\n';
  return emit(c, text.str(), out);
}

int fe_check(const RunConfig& c, std::ostream& out) {
  const double tol_l = tol_or(c, 1e-9);
  const double tol_fe = tol_or(c, 1e-10);
  const std::vector<Complex> points = {{0.5, 0.0}, {0.5, 14.134725}, {2.0, 0.0}, {0.75, -5.0},
                                       {-0.5, 2.0}};
  const std::vector<std::int64_t> discs = fundamental_discriminants(c.d_max);
  double worst_l = 0.0;
  for (const std::int64_t d : discs) {
    for (const Complex& s : points) {
      const Complex a = lfunc::l_primitive_afe(d, s).value;
      const Complex h = lfunc::l_primitive_hurwitz(d, s).value;
      worst_l = std::max(worst_l, std::abs(a - h));
    }
  }
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<std::size_t> pick(0, discs.size() - 1);
  std::uniform_real_distribution<double> sigma(-0.5, 1.5);
  std::uniform_real_distribution<double> tau(-20.0, 20.0);
  double worst_fe = 0.0;
  for (int i = 0; i < c.samples; ++i) {
    const std::int64_t d = discs[pick(rng)];
    const Complex s(sigma(rng), tau(rng));
    const Complex left = lfunc::completed_lambda(d, s).value;
    const Complex right = lfunc::completed_lambda(d, 1.0 - s).value;
    worst_fe = std::max(worst_fe, std::abs(left - right) / std::max(1.0, std::abs(left)));
  }
  json report{{"d_max", c.d_max},
              {"discriminants", discs.size()},
              {"max_afe_vs_hurwitz", worst_l},
              {"symmetry_samples", c.samples},
              {"max_symmetry_residual", worst_fe}};
  return finish_check(c, report, worst_l <= tol_l && worst_fe <= tol_fe, out);
}

int k_series_check(const RunConfig& c, std::ostream& out) {
  const double tol = tol_or(c, 1e-2);
  const Complex s(c.s_re, c.s_im);
  const double residual = lfunc::k_series_check(c.m, s, c.q_max);
  json report{{"m", c.m}, {"s", complex_json(s)}, {"q_max", c.q_max},
              {"relative_residual", residual}, {"tolerance", tol}};
  return finish_check(c, report, residual <= tol, out);
}

int dds_check(const RunConfig& c, std::ostream& out) {
  const unsigned threads = c.threads;
  json report;
  bool pass = true;

  // Both representations of A(s, w).
  const std::vector<std::pair<Complex, Complex>> points = {
      {{2.5, 0.0}, {2.0, 0.0}}, {{2.0, 0.0}, {2.5, 0.0}}, {{3.0, 0.0}, {3.0, 0.0}},
      {{2.2, 1.0}, {2.0, 0.0}}, {{2.0, 0.0}, {2.2, -1.5}}, {{1.8, 0.5}, {2.4, 0.5}},
      {{2.6, -2.0}, {1.9, 3.0}}, {{3.5, 0.0}, {1.8, 0.0}}, {{1.9, 0.0}, {3.5, 1.0}},
      {{2.4, 4.0}, {2.4, -4.0}}};
  double worst_rep = 0.0;
  for (const auto& [s, w] : points) {
    const Complex a = dds::a_series_nsum(s, w, c.cutoff, dds::Tail::mean_field, threads).value;
    const Complex b = dds::a_series_msum(s, w, c.cutoff, dds::Tail::mean_field, threads).value;
    worst_rep = std::max(worst_rep, std::abs(a - b));
  }
  report["representation_max_diff"] = worst_rep;
  pass = pass && worst_rep <= 1e-5;

  // Finite k = 0 slices.
  double worst_slice = 0.0;
  for (const std::uint32_t p : arith::primes_up_to(100)) {
    if (p == 2) continue;
    for (std::uint64_t q1 = 1; q1 <= 50; ++q1) {
      if (!arith::is_squarefree(q1)) continue;
      for (const dds::Twist psi : {dds::Twist::psi0, dds::Twist::psi1, dds::Twist::psi_minus1,
                                   dds::Twist::psi2, dds::Twist::psi_minus2}) {
        const Complex w(1.3, 0.7);
        worst_slice = std::max(worst_slice, std::abs(dds::k0_slice(p, q1, psi, w) -
                                                     dds::k0_slice_closed_form(p, q1, psi, w)));
      }
    }
  }
  report["k0_slice_max_diff"] = worst_slice;
  pass = pass && worst_slice <= 1e-10;

  double worst_dk1 = 0.0;
  for (const std::uint64_t p : {3, 5, 7}) {
    for (const Complex s : {Complex(1.5, 0.0), Complex(1.1, 0.0), Complex(2.0, 1.0)}) {
      worst_dk1 = std::max(worst_dk1, dds::dk1_psi1_identity(p, s, 60));
    }
  }
  report["dk1_max_residual"] = worst_dk1;
  pass = pass && worst_dk1 <= 1e-10;

  double worst_res = 0.0;
  for (const Complex s : {Complex(2.0, 0.0), Complex(1.5, 0.0)}) {
    const Complex a = dds::residue_w_3_2_C_product(s, 10000).value;
    worst_res = std::max(worst_res, std::abs(a - dds::residue_w_3_2_C(s)));
  }
  report["residue_w_3_2_max_diff"] = worst_res;
  pass = pass && worst_res <= 1e-6;

  report["pass"] = pass;
  emit(c, report.dump(2) + "\n", out);
  return pass ? 0 : 1;
}

int residue_check(const RunConfig& c, std::ostream& out) {
  const double tol = tol_or(c, 1e-10);
  const Complex alpha(c.alpha_re, c.alpha_im);
  const Complex r1 = dds::residue_s1(alpha);
  const Complex r1t = dds::residue_s1_theorem_form(alpha);
  const dds::ResidueForms forms = dds::residue_s_1_minus_alpha_forms(alpha);
  const double d1 = std::abs(r1 - r1t);
  const double d2 = std::abs(forms.reflected - forms.pre_reflection);
  json report{{"alpha", complex_json(alpha)},
              {"residue_s1", complex_json(r1)},
              {"residue_s1_theorem_form", complex_json(r1t)},
              {"residue_s1_diff", d1},
              {"residue_1_minus_alpha_reflected", complex_json(forms.reflected)},
              {"residue_1_minus_alpha_pre_reflection", complex_json(forms.pre_reflection)},
              {"residue_1_minus_alpha_diff", d2},
              {"tolerance", tol}};
  return finish_check(c, report, d1 <= tol && d2 <= tol, out);
}

std::vector<double> grid_of(const RunConfig& c) {
  if (c.grid == 1) {
    if (c.x_min != c.x_max) throw UsageError("--grid 1 needs --x-min equal to --x-max");
    return {c.x_min};
  }
  return moment::geometric_grid(c.x_min, c.x_max, c.grid);
}

int moment_scan(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Complex alpha(c.alpha_re, c.alpha_im);
  const moment::ScanSummary scan =
      moment::error_scan(alpha, moment::WeightSpec::gaussian(), grid_of(c), c.threads);

  double worst_rel = 0.0;
  json rows = json::array();
  std::ostringstream csv;
  csv << "X,alpha_re,alpha_im,S_re,S_im,M1_re,M1_im,M2_re,M2_im,E_re,E_im,E_norm\n";
  for (const auto& r : scan.rows) {
    const double rel = std::abs(r.E) / (std::abs(r.M1) + std::abs(r.M2));
    worst_rel = std::max(worst_rel, rel);
    for (const double v : {r.X, r.alpha.real(), r.alpha.imag(), r.S.real(), r.S.imag(),
                           r.M1.real(), r.M1.imag(), r.M2.real(), r.M2.imag(), r.E.real(),
                           r.E.imag()}) {
      csv << format_double(v) << ',';
    }
    csv << format_double(r.E_norm) << '\n';
    rows.push_back(json{{"X", r.X},
                        {"S", complex_json(r.S)},
                        {"M1", complex_json(r.M1)},
                        {"M2", complex_json(r.M2)},
                        {"E", complex_json(r.E)},
                        {"E_norm", r.E_norm},
                        {"relative_error", rel}});
  }
  json summary{{"alpha", complex_json(alpha)},
               {"x_min", c.x_min},
               {"x_max", c.x_max},
               {"grid", c.grid},
               {"weight", "gaussian"},
               {"fitted_slope", scan.fitted_slope},
               {"slope_stderr", scan.slope_stderr},
               {"max_relative_error", worst_rel},
               {"final_relative_error",
                scan.rows.empty() ? 0.0
                                  : std::abs(scan.rows.back().E) /
                                        (std::abs(scan.rows.back().M1) + std::abs(scan.rows.back().M2))}};
  if (c.format == Format::json) {
    summary["rows"] = rows;
    return emit(c, summary.dump(2) + "\n", out);
  }
  emit(c, csv.str(), out);
  const std::string text = summary.dump(2) + "\n";
  std::string path = c.summary;
  if (path.empty() && !c.output.empty()) path = c.output + ".summary.json";
  if (path.empty()) {
    err << text;
  } else {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open summary file " + path);
    file << text;
  }
  return 0;
}

int q_recover(const RunConfig& c, std::ostream& out) {
  const double tol = tol_or(c, 1e-2);
  const moment::QRecovery q = moment::central_limit_Q(grid_of(c), moment::WeightSpec::gaussian());
  json rows = json::array();
  double worst = 0.0;
  for (std::size_t i = 0; i < q.X.size(); ++i) {
    rows.push_back(json{{"X", q.X[i]}, {"limit", q.limit[i]}, {"relative_residual", q.relative_residual[i]}});
    worst = std::max(worst, q.relative_residual[i]);
  }
  json report{{"q0", q.q0}, {"q1", q.q1}, {"max_relative_residual", worst}, {"rows", rows}};
  return finish_check(c, report, worst <= tol, out);
}

int sieve_scan(const RunConfig& c, std::ostream& out) {
  const Complex s(c.s_re, c.s_im);
  const auto rows = moment::large_sieve_scan(grid_of(c), s, c.threads);
  if (c.format == Format::json) {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(json{{"X", r.X}, {"count", r.count}, {"sum", r.sum}});
    return emit(c, json{{"s", complex_json(s)}, {"rows", arr}}.dump(2) + "\n", out);
  }
  std::ostringstream csv;
  csv << "X,count,sum\n";
  for (const auto& r : rows) {
    csv << format_double(r.X) << ',' << r.count << ',' << format_double(r.sum) << '\n';
  }
  return emit(c, csv.str(), out);
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int parse_command_line(int argc, const char* const* argv, RunConfig& config, std::ostream& out,
                       std::ostream& err) {
  CLI::App app{"Quadratic Dirichlet L-function toolkit: verification suites and moment scans", "qdl"};
  app.require_subcommand(1, 1);
  config.threads = default_thread_count();

  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--threads", config.threads, "Worker threads (default: QDL_THREADS or 1)")
        ->check(CLI::Range(1u, 1024u));
    sub->add_option("-o,--output", config.output, "Output file (default: standard output)");
    sub->add_option("--format", config.format, "csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--tolerance", config.tolerance, "Override the suite tolerance")
        ->check(CLI::PositiveNumber);
  };
  auto alpha = [&](CLI::App* sub) {
    sub->add_option("--alpha", config.alpha_re, "Re α, in (0, 1/2)");
    sub->add_option("--alpha-im", config.alpha_im, "Im α");
  };
  auto point = [&](CLI::App* sub) {
    sub->add_option("--s-re", config.s_re, "Re s");
    sub->add_option("--s-im", config.s_im, "Im s");
  };
  auto scan = [&](CLI::App* sub) {
    sub->add_option("--x-min", config.x_min, "Smallest X")->check(CLI::PositiveNumber);
    sub->add_option("--x-max", config.x_max, "Largest X")->check(CLI::PositiveNumber);
    sub->add_option("--grid", config.grid, "Number of geometric grid points")
        ->check(CLI::Range(1, 64));
  };

  struct Entry {
    const char* name;
    const char* help;
    Subcommand kind;
  };
  const Entry entries[] = {
      {"gauss-check", "Fast G(χ_n, q) and the four-l table against brute force", Subcommand::gauss_check},
      {"lvalue", "L(s, χ^{(d)}) for any discriminant d", Subcommand::lvalue},
      {"fe-check", "AFE against Hurwitz, and Λ(s) = Λ(1 − s)", Subcommand::fe_check},
      {"k-series-check", "Functional equation with the Gauss-sum series K", Subcommand::k_series_check},
      {"dds-check", "Double Dirichlet series identities", Subcommand::dds_check},
      {"residue-check", "Both residue formulas at s = 1 and s = 1 − α", Subcommand::residue_check},
      {"moment-scan", "S(X; α) against the two main terms over a geometric X grid", Subcommand::moment_scan},
      {"q-recover", "α → 0 limit of the main terms and its X log X fit", Subcommand::q_recover},
      {"sieve-scan", "Σ |L(s, χ)| over real primitive characters of conductor ≤ X", Subcommand::sieve_scan},
  };
  std::map<CLI::App*, Subcommand> kinds;
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    kinds[sub] = e.kind;
    common(sub);
    switch (e.kind) {
      case Subcommand::gauss_check:
        sub->add_option("--n-max", config.n_max, "Largest odd n")->check(CLI::Range(1, 20000));
        sub->add_option("--q-max", config.q_max, "Largest q")->check(CLI::Range(1, 100000));
        sub->add_option("--l-max", config.l_max, "Largest odd l for the four-l table")
            ->check(CLI::Range(1, 20000));
        sub->add_option("--q4-max", config.q4_max, "Largest q for the four-l table")
            ->check(CLI::Range(1, 100000));
        break;
      case Subcommand::lvalue:
        sub->add_option("-d,--d", config.d, "Discriminant, 0 or 1 mod 4")->required();
        point(sub);
        sub->add_option("--method", config.method, "afe or hurwitz");
        break;
      case Subcommand::fe_check:
        sub->add_option("--d-max", config.d_max, "Largest |d|")->check(CLI::Range(1, 10000));
        sub->add_option("--samples", config.samples, "Random symmetry points")->check(CLI::Range(0, 100000));
        sub->add_option("--seed", config.seed, "Random seed");
        break;
      case Subcommand::k_series_check:
        sub->add_option("--m", config.m, "Odd non-square m")->check(CLI::PositiveNumber);
        point(sub);
        sub->add_option("--q-max", config.q_max, "Truncation of K")->check(CLI::Range(1, 10000000));
        break;
      case Subcommand::dds_check:
        sub->add_option("--cutoff", config.cutoff, "Cutoff N = M of the two A-series")
            ->check(CLI::Range(100, 1000000));
        break;
      case Subcommand::residue_check:
        alpha(sub);
        break;
      case Subcommand::moment_scan:
        alpha(sub);
        scan(sub);
        sub->add_option("--summary", config.summary, "Summary JSON path");
        break;
      case Subcommand::q_recover:
        scan(sub);
        break;
      case Subcommand::sieve_scan:
        point(sub);
        scan(sub);
        break;
    }
  }

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  for (const auto& [sub, kind] : kinds) {
    if (!sub->parsed()) continue;
    config.subcommand = kind;
    if (kind == Subcommand::sieve_scan) {
      // The moment-scale defaults are beyond what the sieve accepts.
      if (sub->count("--x-min") == 0) config.x_min = 1000.0;
      if (sub->count("--x-max") == 0) config.x_max = 8000.0;
      if (sub->count("--grid") == 0) config.grid = 4;
    }
  }
  return -1;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.subcommand) {
      case Subcommand::gauss_check:
        return gauss_check(config, out);
      case Subcommand::lvalue:
        return lvalue(config, out);
      case Subcommand::fe_check:
        return fe_check(config, out);
      case Subcommand::k_series_check:
        return k_series_check(config, out);
      case Subcommand::dds_check:
        return dds_check(config, out);
      case Subcommand::residue_check:
        return residue_check(config, out);
      case Subcommand::moment_scan:
        return moment_scan(config, out, err);
      case Subcommand::q_recover:
        return q_recover(config, out);
      case Subcommand::sieve_scan:
        return sieve_scan(config, out);
    }
  } catch (const UsageError& e) {
    err << "qdl: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "qdl: " << e.what() << '\n';
    return 2;
  } catch (const RangeError& e) {
    err << "qdl: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "qdl: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace qdl::cli
