#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "harmlog/factorial.hpp"
#include "harmlog/harmonic_log.hpp"

// Regenerated error tables and parameter sweeps.
//
// Every report row carries the recomputed value, an oracle reference, the
// signed percentage error, and (for the published tables) the value printed
// in the original, verbatim as text. A printed cell "matches" when
//
//     |calculated - printed| <= max(unit, unit_k, absolute)
//
// where `unit` is one unit in the printed last place, unit_k one unit in the
// k-th significant digit of the printed value (k from the table's MatchRule,
// 0 = unused) and `absolute` an optional floor. Cells the original
// got wrong are listed in errata(); a mismatch on a listed cell gives the
// row status `erratum` instead of `mismatch`.
//
// CSV columns, in order:
//
//   table, input, quantity, calculated, reference, abs_error, percent_error,
//   paper_calculated, paper_reference, paper_percent_error, status, note
//
// abs_error = calculated - reference. JSON output is an array with one
// object per row using the same keys (numbers at full precision, null when
// absent); Markdown output is a GitHub pipe table with the same columns.

namespace harmlog::tables {

enum class TableId { t2_1, t2_2, t2_3, t2_4, t2_5, t2_6, nr_gamma, sweep };
enum class Format { csv, markdown, json };
enum class Status { match, mismatch, erratum, singular, unchecked };
enum class Column { calculated, reference };

std::string_view to_string(TableId id) noexcept;
std::string_view to_string(Status s) noexcept;
std::string_view to_string(Format f) noexcept;

/// Accepts "2.1".."2.6", "T2_1".."T2_6" and "nr-gamma".
std::optional<TableId> parse_table_id(std::string_view text);
std::optional<Format> parse_format(std::string_view text);

/// A number exactly as it was printed, e.g. "-.1836402026" or "1.19622221e56".
/// "inf" stands for a printed ∞.
struct PrintedCell {
  std::string text;
  double value = 0.0;
  double unit = 0.0;  // one unit in the last printed place
  int significant_digits = 0;

  static PrintedCell parse(std::string_view text);
  bool infinite() const noexcept;
};

struct MatchRule {
  int significant_digits = 0;
  double absolute = 0.0;
};

double match_tolerance(const PrintedCell& printed, const MatchRule& rule);
bool cell_matches(double computed, const PrintedCell& printed, const MatchRule& rule);

struct Row {
  std::string input;
  std::string quantity;
  std::optional<double> calculated;
  std::optional<double> reference;
  std::optional<double> percent_error;
  std::optional<PrintedCell> paper_calculated;
  std::optional<PrintedCell> paper_reference;
  std::optional<PrintedCell> paper_percent_error;
  Status status = Status::unchecked;
  std::string note;

  bool match_flag() const noexcept { return status != Status::mismatch; }
};

struct TableReport {
  TableId id = TableId::t2_1;
  std::string title;
  MatchRule rule;
  std::vector<Row> rows;

  const Row* find(std::string_view input, std::string_view quantity) const;
};

struct Erratum {
  TableId table;
  std::string_view input;
  std::string_view quantity;
  Column column;
  std::string_view note;
};

/// Known defects in the published tables.
std::span<const Erratum> errata();

/// Recomputes one of the published tables (or the N_r/γ comparison).
/// TableId::sweep is rejected; use sweep().
TableReport build(TableId id);

std::string serialize(const TableReport& report, Format format);

std::string generate(TableId id, Format format);

/// Writes `text` to `path`; failures raise ErrorKind::io.
void write_report(std::string_view text, const std::filesystem::path& path);

/// Grid specs: "lo:hi:double" (lo, 2lo, 4lo, ... <= hi), "lo:hi:step"
/// (arithmetic), or a comma list "2,3,5". All values must be >= 1.
std::vector<std::int64_t> parse_grid(std::string_view spec);

enum class SweepOp { ln_rational, factorial, nr };

std::optional<SweepOp> parse_sweep_op(std::string_view text);

struct SweepSpec {
  SweepOp op = SweepOp::ln_rational;
  std::vector<std::int64_t> grid;
  std::int64_t p = 1;  // ln_rational only
  std::int64_t q = 2;
  harmonic::LogVariant variant = harmonic::LogVariant::truncated;
  factorial::FactorialMethod method = factorial::FactorialMethod::corrected;
};

/// Rows per grid point:
///   ln_rational: input "m=<m>", ln(p/q) estimate vs oracle.
///   factorial:   input "n=<n>", ln n! vs the exact value; percent_error is
///                the error of n! itself, expm1(Δln)·100.
///   nr:          input "n=<n>", one row per N_r variant against the value
///                2 - 2·ln 2 - γ implied by the true constant.
TableReport sweep(const SweepSpec& spec);

}  // namespace harmlog::tables
