#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace awroots::cli {

enum class Mode { bounds, iterate, approx1, solve, certify, table1, table2, table3, table4 };
enum class OutputFormat { text, json, csv };

struct RunConfig {
  Mode mode = Mode::bounds;
  std::array<std::complex<double>, 4> a{};
  double q = 0.0;
  std::vector<int> degrees{5};  // one entry, or a list for table2/table4
  int max_iters = 200;
  double tol = 1e-13;
  OutputFormat format = OutputFormat::text;
  int decimals = 4;
};

struct TableRow {
  std::string label;
  std::vector<double> values;
  std::vector<bool> boxed;  // populated for bound rows only
};

/// Malformed flags or flag values; maps to exit status 1.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseOutcome {
  bool help = false;
  std::string help_text;
  RunConfig config;
};

/// Parses command-line arguments (without the program name). Parameter
/// admissibility is not checked here; it is delegated to validate() when the
/// mode runs, so hypothesis violations surface as domain errors.
ParseOutcome parse_args(const std::vector<std::string>& args);

/// Executes the configured mode, writing the serialized report to out and
/// diagnostics to err. Returns the exit status: 0 success, 2 domain error
/// (also a certify run without a contraction certificate), 3 solver failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full program: parse, run, and map errors to exit statuses.
int main_impl(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Rounds half-to-even at the given number of decimal places.
double round_half_even(double x, int decimals);

/// Fixed-point decimal rendering of round_half_even(x, decimals).
std::string format_fixed(double x, int decimals);

/// Shortest decimal form that parses back to exactly the same double.
std::string shortest_repr(double x);

/// Parses "re", "re+imi" or "re-imi".
std::complex<double> parse_complex(const std::string& text);

}  // namespace awroots::cli
