#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dmimo/schemes.hpp"

namespace dmimo::cli {

/// Bad command-line or grid parameters (exit code 2).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Output could not be written (exit code 3).
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepGrid {
  std::vector<double> alpha2_values;
  std::vector<double> p_db_values;
  std::vector<double> c_values;
  std::vector<double> cprime_values;
  std::vector<Scheme> schemes;
  /// Set by "--scheme all": one-sided schemes are skipped at grid points where
  /// they are undefined instead of failing validation.
  bool skip_inapplicable = false;
};

struct SweepRow {
  double alpha2 = 0.0;
  double p_db = 0.0;
  double c = 0.0;
  double cprime = 0.0;
  Scheme scheme = Scheme::UB;
  double rate = 0.0;
  std::optional<double> printed_bound;
  std::optional<bool> bound_tight;
  std::optional<double> fixed_point;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

inline constexpr std::string_view kCsvHeader =
    "alpha2,p_db,c,cprime,scheme,rate,printed_bound,bound_tight,fixed_point";

double db_to_linear(double db);

/// A real number, or "inf" when `allow_inf`.
double parse_value(std::string_view text, bool allow_inf);

/// Comma list "a,b,c" or inclusive range "start:step:stop".
std::vector<double> parse_axis(std::string_view text, bool allow_inf);

/// Comma list of scheme names, or "all".
std::vector<Scheme> parse_scheme_list(std::string_view text, bool* is_all = nullptr);

/// Sorts and dedupes each axis; throws ValidationError naming the violated constraint.
void normalize(SweepGrid& grid);

/// Evaluates every grid point x scheme, in parallel, returning rows in
/// lexicographic (alpha2, p_db, c, cprime, scheme) order.
std::vector<SweepRow> run_sweep(const SweepGrid& grid, unsigned threads = 0);

/// 12 significant digits; "inf" for +infinity.
std::string format_number(double x);

void write_csv(std::ostream& os, std::span<const SweepRow> rows);
void write_json(std::ostream& os, std::span<const SweepRow> rows);
std::vector<SweepRow> read_json(std::istream& is);

/// The canonical rate-vs-SNR dataset: alpha^2 = 0.6,
/// P = 0..40 dB in 1 dB steps; IM, QW at (C=4, C'=inf); EC, DC at (C=inf, C'=4);
/// UB and the four combined schemes at C = C' = 4.
std::vector<SweepRow> figure2_rows(unsigned threads = 0);

/// Notes written next to the figure dataset.
std::string figure2_readme();

}  // namespace dmimo::cli
