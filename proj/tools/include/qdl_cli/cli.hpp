#pragma once

// Command-line front end. Parsing and execution are split so the suites can
// be driven from tests without spawning a process.

#include <cstdint>
#include <iosfwd>
#include <string>

namespace qdl::cli {

enum class Subcommand {
  gauss_check,
  lvalue,
  fe_check,
  k_series_check,
  dds_check,
  residue_check,
  moment_scan,
  q_recover,
  sieve_scan,
};

enum class Format { csv, json };

struct RunConfig {
  Subcommand subcommand = Subcommand::residue_check;

  double alpha_re = 0.1;
  double alpha_im = 0.0;
  double s_re = 0.5;
  double s_im = 0.0;

  double x_min = 512.0;
  double x_max = 32768.0;
  int grid = 7;

  std::int64_t d = 5;          // lvalue
  std::string method = "afe";  // lvalue: afe | hurwitz
  std::uint64_t m = 3;         // k-series-check

  std::uint64_t n_max = 500;   // gauss-check
  std::uint64_t q_max = 200;   // gauss-check, k-series-check
  std::uint64_t l_max = 300;   // gauss-check (four-l table)
  std::uint64_t q4_max = 60;   // gauss-check (four-l table)
  std::uint64_t d_max = 300;   // fe-check
  std::uint64_t cutoff = 20000;  // dds-check series cutoffs
  int samples = 100;           // fe-check random symmetry points
  std::uint64_t seed = 1;
  double tolerance = 0.0;      // 0 = suite default

  unsigned threads = 1;
  std::string output;          // empty = standard output
  std::string summary;         // moment-scan summary JSON path
  Format format = Format::csv;
};

/// Parses argv into config. Returns -1 when the caller should go on to
/// run(), otherwise the exit status (0 after --help, 2 on usage errors).
int parse_command_line(int argc, const char* const* argv, RunConfig& config, std::ostream& out,
                       std::ostream& err);

/// Executes the configured suite. 0 on success, 1 when a tolerance is
/// violated, 2 on invalid parameters.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// "%.17g" rendering used for every number written by the tool.
std::string format_double(double x);

}  // namespace qdl::cli
