#include "harmlog/tables.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>

#include <fmt/format.h>
#include <json.hpp>

#include "harmlog/cnr.hpp"
#include "harmlog/constants.hpp"
#include "harmlog/error.hpp"
#include "harmlog/oracle.hpp"

namespace harmlog::tables {
namespace {

using harmonic::LogVariant;

constexpr int kDefaultDigits = 10;
constexpr int kDefaultErrorDigits = 6;
constexpr std::int64_t kNrLimitN = 10'000'000;

constexpr std::array kErrata{
    Erratum{TableId::t2_2, "2", "exp_full", Column::calculated,
            "printed 2.00591; the formula gives 2.00502 (2.00501 in the CNR table)"},
    Erratum{TableId::t2_4, "30", "ln", Column::reference, "printed 3.49119 for ln 30 = 3.40120"},
    Erratum{TableId::t2_4, "30", "ln", Column::calculated,
            "printed 3.40119 (ln 30 itself); the series gives 3.39648"},
    Erratum{TableId::t2_5, "(10)19/(10)10", "ln", Column::calculated,
            "printed 0.6418508407; the exact finite sum is 0.6418508738"},
    Erratum{TableId::t2_6, "10", "factorial", Column::reference,
            "printed 362880 for 10! = 3628800"},
    Erratum{TableId::t2_6, "25", "factorial", Column::calculated,
            "calculated and actual columns are swapped"},
    Erratum{TableId::t2_6, "25", "factorial", Column::reference,
            "calculated and actual columns are swapped"},
    Erratum{TableId::t2_6, "60", "factorial", Column::calculated,
            "calculated and actual columns are swapped"},
    Erratum{TableId::t2_6, "60", "factorial", Column::reference,
            "calculated and actual columns are swapped"},
    Erratum{TableId::nr_gamma, "series", "N_r", Column::calculated,
            "asserted equal to 0.0400747; the series itself converges to 0.0317305"},
    Erratum{TableId::nr_gamma, "limit", "N_r", Column::calculated,
            "asserted equal to 0.0400747; the limit itself is 0.0364900"},
    Erratum{TableId::nr_gamma, "series", "gamma", Column::calculated,
            "claimed 0.577215664901; the series variant gives 0.5819752"},
};

const Erratum* find_erratum(TableId id, std::string_view input, std::string_view quantity,
                            Column column) {
  for (const auto& e : kErrata) {
    if (e.table == id && e.input == input && e.quantity == quantity && e.column == column) {
      return &e;
    }
  }
  return nullptr;
}

std::optional<PrintedCell> printed(std::string_view text) {
  if (text.empty()) return std::nullopt;
  return PrintedCell::parse(text);
}

MatchRule rule_for(TableId id) {
  switch (id) {
    case TableId::t2_1: return {9, 0.0};
    case TableId::t2_2: return {8, 0.0};
    case TableId::t2_5: return {8, 0.0};
    case TableId::nr_gamma: return {0, 1e-9};
    default: return {};
  }
}

void append_note(Row& row, std::string_view text) {
  if (row.note.find(text) != std::string::npos) return;
  if (!row.note.empty()) row.note += "; ";
  row.note += text;
}

void judge(Row& row, TableId id, const MatchRule& rule) {
  if (row.status == Status::singular) return;
  bool checked = false;
  bool unlisted = false;
  bool listed = false;
  auto check = [&](const std::optional<double>& value, const std::optional<PrintedCell>& cell,
                   Column column) {
    if (!value || !cell || cell->infinite()) return;
    checked = true;
    if (cell_matches(*value, *cell, rule)) return;
    if (const Erratum* e = find_erratum(id, row.input, row.quantity, column)) {
      listed = true;
      append_note(row, e->note);
    } else {
      unlisted = true;
    }
  };
  check(row.calculated, row.paper_calculated, Column::calculated);
  check(row.reference, row.paper_reference, Column::reference);
  if (unlisted) {
    row.status = Status::mismatch;
  } else if (listed) {
    row.status = Status::erratum;
  } else {
    row.status = checked ? Status::match : Status::unchecked;
  }
}

Row make_row(std::string input, std::string quantity, double calculated, double reference,
             std::string_view paper_calc = {}, std::string_view paper_ref = {},
             std::string_view paper_pe = {}) {
  Row row;
  row.input = std::move(input);
  row.quantity = std::move(quantity);
  row.calculated = calculated;
  row.reference = reference;
  row.percent_error = oracle::percent_error(calculated, reference);
  row.paper_calculated = printed(paper_calc);
  row.paper_reference = printed(paper_ref);
  row.paper_percent_error = printed(paper_pe);
  return row;
}

Row singular_row(std::string input, std::string quantity, std::string_view why,
                 std::string_view paper_calc = {}, std::string_view paper_ref = {},
                 std::string_view paper_pe = {}) {
  Row row;
  row.input = std::move(input);
  row.quantity = std::move(quantity);
  row.paper_calculated = printed(paper_calc);
  row.paper_reference = printed(paper_ref);
  row.paper_percent_error = printed(paper_pe);
  row.status = Status::singular;
  row.note = std::string(why);
  return row;
}

double ln(double x) { return oracle::ln_ref(x).value; }

double parse_double(std::string_view text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorKind::domain, fmt::format("cannot parse '{}' as a number", text));
  }
  return v;
}

// ---------------------------------------------------------------- tables --

TableReport table_2_1() {
  struct Entry {
    std::string_view x, calc, pe;
  };
  constexpr std::array entries{
      Entry{"3.5", "3.493572593", "-.1836402026"},
      Entry{"5.8", "5.797266055", "-.0471369806"},
      Entry{"-15.9", "-15.9002932", "-.001844063542"},
      Entry{"-50.1", "-50.1000321", "-6.41716299e-5"},
      Entry{"-100.1", "-100.100008", "-8.18031141e-6"},
      Entry{"-125", "-125.0000053", "-4.21428842e-6"},
      Entry{"-175", "-175.0000027", "-1.54136032e-6"},
      Entry{"750", "749.9999999", "-1.97924237e-8"},
      Entry{"1500", "1500", "0"},
      Entry{"2500", "2500", "0"},
  };
  TableReport r{TableId::t2_1, "Approximation of numbers by the exponential form", {}, {}};
  for (const auto& e : entries) {
    const double x = parse_double(e.x);
    r.rows.push_back(make_row(std::string(e.x), "x", cnr::approx_number_exp(x), x, e.calc, {}, e.pe));
  }
  return r;
}

TableReport table_2_2() {
  struct Entry {
    std::string_view x, full, scaled;
  };
  constexpr std::array entries{
      Entry{"2", "2.00591", "1.999999979"},     Entry{"1.8", "1.82285", "1.799999974"},
      Entry{"1.6", "1.66819", "1.599999967"},   Entry{"1.4", "1.61105", "1.399999957"},
      Entry{"1.2", "2.28356", "1.199999941"},   Entry{"1.0", "0.00000", "0.9999999154"},
      Entry{"0.7", "-.13546", "0.6999998263"},  Entry{"0.3", "-.66358", "0.2999990268"},
  };
  TableReport r{TableId::t2_2, "Exponential form near |x| < 2, unscaled and with m = 100", {}, {}};
  for (const auto& e : entries) {
    const double x = parse_double(e.x);
    if (x == 1.0) {
      r.rows.push_back(singular_row(std::string(e.x), "exp_full",
                                    "exponent denominator vanishes at x = 1", e.full));
    } else {
      r.rows.push_back(make_row(std::string(e.x), "exp_full", cnr::approx_number_exp(x), x, e.full));
    }
    r.rows.push_back(make_row(std::string(e.x), "exp_scaled_m100",
                              cnr::approx_number_scaled(x, cnr::kDefaultScale), x, e.scaled));
  }
  return r;
}

TableReport table_2_3() {
  struct Entry {
    std::string_view x, cnr_actual, cnr_calc, cnr_pe, log_actual, log_calc, log_pe;
  };
  constexpr std::array entries{
      Entry{"1", "inf", "inf", "0.00000", "inf", "inf", "0.0000"},
      Entry{"2", "2.00000", "2.00501", "0.25081", "0.69315", "0.69565", ".36067"},
      Entry{"6", "1.20000", "1.19949", "0.04250", "0.18232", "0.18189", ".23584"},
      Entry{"20", "1.0526", "1.05262", ".00110", ".05129", ".05128", ".01949"},
      Entry{"100", "1.0101010", "1.0101009", "1.089991e-5", ".010050335", ".01005025",
            "7.9582e-4"},
  };
  TableReport r{TableId::t2_3, "Consecutive number ratios and their logarithms", {}, {}};
  for (const auto& e : entries) {
    const double x = parse_double(e.x);
    if (x == 1.0) {
      constexpr std::string_view why = "x/(x-1) is singular at x = 1";
      r.rows.push_back(singular_row("1", "cnr", why, e.cnr_calc, e.cnr_actual, e.cnr_pe));
      r.rows.push_back(singular_row("1", "log_cnr", why, e.log_calc, e.log_actual, e.log_pe));
      continue;
    }
    const double ratio = x / (x - 1.0);
    r.rows.push_back(make_row(std::string(e.x), "cnr", cnr::cnr_exp(x), ratio, e.cnr_calc,
                              e.cnr_actual, e.cnr_pe));
    r.rows.push_back(make_row(std::string(e.x), "log_cnr", cnr::log_cnr_exp(x), ln(ratio),
                              e.log_calc, e.log_actual, e.log_pe));
  }
  return r;
}

TableReport table_2_4() {
  struct Entry {
    std::int64_t n;
    std::string_view calc, actual, pe;
  };
  constexpr std::array entries{
      Entry{2, "0.69444", ".69315", ".18715"},    Entry{3, "1.09740", "1.09861", "-.10967"},
      Entry{5, "1.60618", "1.60944", "-.20242"},  Entry{7, "1.94195", "1.94591", "-.20328"},
      Entry{9, "2.19296", "2.19722", "-.19409"},  Entry{10, "2.29823", "2.30258", "-.18912"},
      Entry{11, "2.39347", "2.39789", "-.18455"}, Entry{13, "2.56043", "2.56495", "-.17611"},
      Entry{15, "2.70347", "2.70805", "-.16900"}, Entry{30, "3.40119", "3.49119", "-.13243"},
  };
  TableReport r{TableId::t2_4, "Integer logarithms from odd harmonic and correction sums", {}, {}};
  for (const auto& e : entries) {
    r.rows.push_back(make_row(std::to_string(e.n), "ln", harmonic::ln_integer(e.n, LogVariant::full),
                              ln(static_cast<double>(e.n)), e.calc, e.actual, e.pe));
  }
  return r;
}

TableReport table_2_5() {
  struct Entry {
    std::int64_t m, p, q;
    std::string_view calc, actual, pe;
  };
  constexpr std::array entries{
      Entry{25, 1, 4, "-1.38623188", "-1.386294361", "0.004507060091"},
      Entry{25, 1, 2, "-0.693097198", "-.6931471806", ".00778721778"},
      Entry{40, 3, 4, "-0.2876808066", "-0.2876820725", "4.4001761e-4"},
      Entry{15, 9, 10, "-0.1053600813", "-0.1053605157", "4.12258637e-4"},
      Entry{30, 5, 4, "0.2231425097", "0.2231435513", "-4.66791087e-4"},
      Entry{50, 3, 2, "0.4054627934", "0.4054651081", "-5.70877276e-4"},
      Entry{22, 7, 4, "0.5596121685", "0.5596157879", "-7.33170063e-4"},
      Entry{10, 19, 10, "0.6418508407", "0.6418538862", "-4.74480635e-4"},
  };
  TableReport r{TableId::t2_5, "Scaled-rational logarithms, truncated series", {}, {}};
  for (const auto& e : entries) {
    const harmonic::ScaledRational sr{e.p, e.q, e.m};
    const double reference = ln(static_cast<double>(e.p) / static_cast<double>(e.q));
    r.rows.push_back(make_row(fmt::format("({}){}/({}){}", e.m, e.p, e.m, e.q), "ln",
                              harmonic::ln_rational(sr, LogVariant::truncated), reference, e.calc,
                              e.actual, e.pe));
  }
  return r;
}

TableReport table_2_6() {
  struct Entry {
    std::int64_t n;
    std::string_view actual, calc, pe;
  };
  constexpr std::array entries{
      Entry{2, "2", "2.00584", ".29198"},
      Entry{3, "6", "5.96749", "-.54182"},
      Entry{4, "24", "23.87311", "-.52869"},
      Entry{5, "120", "119.46289", "-.44759"},
      Entry{10, "362880", "3621048", "-.21360"},
      Entry{15, "1.30767e12", "1.305926e12", "-.13371"},
      Entry{25, "1.54996e25", "1.55112e25", "-.074715"},
      Entry{35, "1.03331e40", "1.03278e40", "-.05141"},
      Entry{45, "1.19622221e56", "1.19575474e56", "-.039078"},
      Entry{60, "8.31860099e81", "8.32098711e81", "-.02867"},
      Entry{75, "2.48091408e109", "2.48035295e109", "-.02262"},
      Entry{95, "1.03299785e148", "1.03281577e148", "-.01763"},
      Entry{110, "1.58824554e178", "1.58800549e178", "-.01511"},
      Entry{125, "1.88267718e209", "1.88242823e209", "-.01322"},
      Entry{140, "1.34620125e241", "1.34604309e241", "-.01175"},
      Entry{160, "4.71472364e284", "4.71424166e284", "-.01022"},
  };
  TableReport r{TableId::t2_6, "Corrected factorial approximation", {}, {}};
  for (const auto& e : entries) {
    r.rows.push_back(make_row(std::to_string(e.n), "factorial",
                              factorial::factorial_corrected(e.n).value,
                              oracle::factorial_exact(e.n), e.calc, e.actual, e.pe));
  }
  return r;
}

TableReport nr_gamma_table() {
  TableReport r{TableId::nr_gamma, "Number Constant variants and the Euler-Mascheroni estimate", {}, {}};
  const double implied = 2.0 - 2.0 * oracle::ln2() - constants::kEulerGamma;
  const std::array variants{constants::integral_variant(),
                            constants::converged_direct_series_variant(),
                            constants::empirical_limit_variant(kNrLimitN)};
  for (const auto& v : variants) {
    const std::string label(constants::to_string(v.tag));
    const bool integral = v.tag == constants::NrTag::integral_closed_form;
    const bool series = v.tag == constants::NrTag::direct_series;
    // The series and the limit are both asserted to equal the integral value.
    Row nr = make_row(label, "N_r", v.value, implied, ".040074705601703");
    Row gamma = make_row(label, "gamma", constants::euler_gamma(v), constants::kEulerGamma,
                         integral ? "0.5736309333" : (series ? "0.577215664901" : ""));
    if (!integral) {
      append_note(nr, fmt::format("{}={}", series ? "terms" : "n", v.parameter));
      append_note(gamma, fmt::format("{}={}", series ? "terms" : "n", v.parameter));
    }
    r.rows.push_back(std::move(nr));
    r.rows.push_back(std::move(gamma));
  }
  return r;
}

// ------------------------------------------------------------ formatting --

std::string format_number(double v, int digits) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  return fmt::format("{:.{}g}", v, std::max(digits, 1));
}

int digits_for(const std::optional<PrintedCell>& cell, int fallback) {
  if (!cell || cell->infinite() || cell->significant_digits == 0) return fallback;
  return cell->significant_digits;
}

constexpr std::array kHeader{"table",          "input",           "quantity",
                             "calculated",     "reference",       "abs_error",
                             "percent_error",  "paper_calculated", "paper_reference",
                             "paper_percent_error", "status",     "note"};

std::vector<std::string> text_fields(const TableReport& report, const Row& row) {
  const int calc_digits = digits_for(row.paper_calculated, kDefaultDigits);
  const int ref_digits = digits_for(row.paper_reference, kDefaultDigits);
  const int pe_digits = digits_for(row.paper_percent_error, kDefaultErrorDigits);
  auto num = [](const std::optional<double>& v, int digits) {
    return v ? format_number(*v, digits) : std::string();
  };
  auto cell = [](const std::optional<PrintedCell>& c) { return c ? c->text : std::string(); };
  std::optional<double> abs_error;
  if (row.calculated && row.reference) abs_error = *row.calculated - *row.reference;
  return {std::string(to_string(report.id)),
          row.input,
          row.quantity,
          num(row.calculated, calc_digits),
          num(row.reference, ref_digits),
          num(abs_error, kDefaultErrorDigits),
          num(row.percent_error, pe_digits),
          cell(row.paper_calculated),
          cell(row.paper_reference),
          cell(row.paper_percent_error),
          std::string(to_string(row.status)),
          row.note};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_csv(const TableReport& report) {
  std::string out;
  for (std::size_t i = 0; i < kHeader.size(); ++i) {
    if (i) out += ',';
    out += kHeader[i];
  }
  out += '\n';
  for (const auto& row : report.rows) {
    const auto fields = text_fields(report, row);
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += csv_field(fields[i]);
    }
    out += '\n';
  }
  return out;
}

std::string md_field(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string to_markdown(const TableReport& report) {
  std::string out = fmt::format("### {}: {}\n\n", to_string(report.id), report.title);
  out += '|';
  for (const char* h : kHeader) out += fmt::format(" {} |", h);
  out += "\n|";
  for (std::size_t i = 0; i < kHeader.size(); ++i) out += " --- |";
  out += '\n';
  for (const auto& row : report.rows) {
    out += '|';
    for (const auto& f : text_fields(report, row)) out += fmt::format(" {} |", md_field(f));
    out += '\n';
  }
  return out;
}

std::string to_json(const TableReport& report) {
  using nlohmann::json;
  json rows = json::array();
  auto num = [](const std::optional<double>& v) -> json {
    if (!v || !std::isfinite(*v)) return nullptr;
    return *v;
  };
  auto cell = [](const std::optional<PrintedCell>& c) -> json {
    if (!c) return nullptr;
    return c->text;
  };
  for (const auto& row : report.rows) {
    std::optional<double> abs_error;
    if (row.calculated && row.reference) abs_error = *row.calculated - *row.reference;
    json j = json::object();
    j["table"] = to_string(report.id);
    j["input"] = row.input;
    j["quantity"] = row.quantity;
    j["calculated"] = num(row.calculated);
    j["reference"] = num(row.reference);
    j["abs_error"] = num(abs_error);
    j["percent_error"] = num(row.percent_error);
    j["paper_calculated"] = cell(row.paper_calculated);
    j["paper_reference"] = cell(row.paper_reference);
    j["paper_percent_error"] = cell(row.paper_percent_error);
    j["status"] = to_string(row.status);
    j["note"] = row.note;
    rows.push_back(std::move(j));
  }
  return rows.dump(2) + "\n";
}

std::int64_t parse_int(std::string_view text, std::string_view spec) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorKind::invalid_grid, fmt::format("grid '{}': '{}' is not an integer", spec, text));
  }
  return v;
}

}  // namespace

std::string_view to_string(TableId id) noexcept {
  switch (id) {
    case TableId::t2_1: return "T2_1";
    case TableId::t2_2: return "T2_2";
    case TableId::t2_3: return "T2_3";
    case TableId::t2_4: return "T2_4";
    case TableId::t2_5: return "T2_5";
    case TableId::t2_6: return "T2_6";
    case TableId::nr_gamma: return "NR_GAMMA";
    case TableId::sweep: return "SWEEP";
  }
  return "unknown";
}

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::match: return "match";
    case Status::mismatch: return "mismatch";
    case Status::erratum: return "erratum";
    case Status::singular: return "singular";
    case Status::unchecked: return "unchecked";
  }
  return "unknown";
}

std::string_view to_string(Format f) noexcept {
  switch (f) {
    case Format::csv: return "csv";
    case Format::markdown: return "markdown";
    case Format::json: return "json";
  }
  return "unknown";
}

std::optional<TableId> parse_table_id(std::string_view text) {
  constexpr std::array<std::pair<std::string_view, TableId>, 15> names{{
      {"2.1", TableId::t2_1},       {"2.2", TableId::t2_2},     {"2.3", TableId::t2_3},
      {"2.4", TableId::t2_4},       {"2.5", TableId::t2_5},     {"2.6", TableId::t2_6},
      {"T2_1", TableId::t2_1},      {"T2_2", TableId::t2_2},    {"T2_3", TableId::t2_3},
      {"T2_4", TableId::t2_4},      {"T2_5", TableId::t2_5},    {"T2_6", TableId::t2_6},
      {"nr-gamma", TableId::nr_gamma}, {"NR_GAMMA", TableId::nr_gamma}, {"nr", TableId::nr_gamma},
  }};
  for (const auto& [name, id] : names) {
    if (name == text) return id;
  }
  return std::nullopt;
}

std::optional<Format> parse_format(std::string_view text) {
  if (text == "csv") return Format::csv;
  if (text == "markdown" || text == "md") return Format::markdown;
  if (text == "json") return Format::json;
  return std::nullopt;
}

PrintedCell PrintedCell::parse(std::string_view text) {
  PrintedCell cell;
  cell.text = std::string(text);
  if (text == "inf" || text == "-inf") {
    cell.value = text.front() == '-' ? -HUGE_VAL : HUGE_VAL;
    return cell;
  }
  std::string_view mantissa = text;
  int exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    const auto exp_text = text.substr(e + 1);
    const auto [ptr, ec] = std::from_chars(
        exp_text.data() + (exp_text.starts_with('+') ? 1 : 0), exp_text.data() + exp_text.size(),
        exponent);
    if (ec != std::errc()) fail(ErrorKind::domain, fmt::format("bad exponent in '{}'", text));
  }
  int decimals = 0;
  int digits = 0;
  bool seen_point = false;
  bool leading = true;
  for (char c : mantissa) {
    if (c == '.') {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      if (seen_point) ++decimals;
      if (c != '0') leading = false;
      if (!leading) ++digits;
    } else if (c != '-' && c != '+') {
      fail(ErrorKind::domain, fmt::format("'{}' is not a printed number", text));
    }
  }
  // "from_chars" rejects a leading '+' and a bare ".5"; normalise both.
  std::string normal(text);
  if (!normal.empty() && normal.front() == '+') normal.erase(0, 1);
  const bool negative = !normal.empty() && normal.front() == '-';
  if (normal.size() > (negative ? 1u : 0u) && normal[negative ? 1 : 0] == '.') {
    normal.insert(negative ? 1 : 0, "0");
  }
  cell.value = parse_double(normal);
  cell.unit = std::pow(10.0, exponent - decimals);
  cell.significant_digits = digits;
  return cell;
}

bool PrintedCell::infinite() const noexcept { return std::isinf(value); }

double match_tolerance(const PrintedCell& printed, const MatchRule& rule) {
  double tol = std::max(printed.unit, rule.absolute);
  if (rule.significant_digits > 0 && printed.value != 0.0) {
    const int lead = static_cast<int>(std::floor(std::log10(std::fabs(printed.value))));
    tol = std::max(tol, std::pow(10.0, lead - rule.significant_digits + 1));
  }
  return tol;
}

bool cell_matches(double computed, const PrintedCell& printed, const MatchRule& rule) {
  if (printed.infinite()) return std::isinf(computed) && (computed > 0) == (printed.value > 0);
  return std::fabs(computed - printed.value) <= match_tolerance(printed, rule);
}

const Row* TableReport::find(std::string_view input, std::string_view quantity) const {
  for (const auto& row : rows) {
    if (row.input == input && row.quantity == quantity) return &row;
  }
  return nullptr;
}

std::span<const Erratum> errata() { return kErrata; }

TableReport build(TableId id) {
  TableReport report;
  switch (id) {
    case TableId::t2_1: report = table_2_1(); break;
    case TableId::t2_2: report = table_2_2(); break;
    case TableId::t2_3: report = table_2_3(); break;
    case TableId::t2_4: report = table_2_4(); break;
    case TableId::t2_5: report = table_2_5(); break;
    case TableId::t2_6: report = table_2_6(); break;
    case TableId::nr_gamma: report = nr_gamma_table(); break;
    case TableId::sweep: fail(ErrorKind::domain, "sweeps are built with sweep()");
  }
  report.rule = rule_for(id);
  for (auto& row : report.rows) judge(row, id, report.rule);
  return report;
}

std::string serialize(const TableReport& report, Format format) {
  switch (format) {
    case Format::csv: return to_csv(report);
    case Format::markdown: return to_markdown(report);
    case Format::json: return to_json(report);
  }
  return {};
}

std::string generate(TableId id, Format format) { return serialize(build(id), format); }

void write_report(std::string_view text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::io, fmt::format("cannot open '{}' for writing", path.string()));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) fail(ErrorKind::io, fmt::format("write to '{}' failed", path.string()));
}

std::vector<std::int64_t> parse_grid(std::string_view spec) {
  if (spec.empty()) fail(ErrorKind::invalid_grid, "empty grid spec");
  std::vector<std::int64_t> out;
  if (spec.find(':') == std::string_view::npos) {
    std::size_t start = 0;
    while (start <= spec.size()) {
      const auto comma = spec.find(',', start);
      const auto item = spec.substr(start, comma == std::string_view::npos ? spec.npos : comma - start);
      out.push_back(parse_int(item, spec));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    const auto c1 = spec.find(':');
    const auto c2 = spec.find(':', c1 + 1);
    if (c2 == std::string_view::npos || spec.find(':', c2 + 1) != std::string_view::npos) {
      fail(ErrorKind::invalid_grid, fmt::format("grid '{}': expected lo:hi:step", spec));
    }
    const std::int64_t lo = parse_int(spec.substr(0, c1), spec);
    const std::int64_t hi = parse_int(spec.substr(c1 + 1, c2 - c1 - 1), spec);
    const auto step = spec.substr(c2 + 1);
    if (lo < 1 || hi < lo) fail(ErrorKind::invalid_grid, fmt::format("grid '{}': need 1 <= lo <= hi", spec));
    if (step == "double") {
      for (std::int64_t v = lo; v <= hi; v *= 2) {
        out.push_back(v);
        if (v > hi / 2) break;
      }
    } else {
      const std::int64_t s = parse_int(step, spec);
      if (s < 1) fail(ErrorKind::invalid_grid, fmt::format("grid '{}': step must be >= 1", spec));
      for (std::int64_t v = lo; v <= hi; v += s) {
        out.push_back(v);
        if (v > hi - s) break;
      }
    }
  }
  for (auto v : out) {
    if (v < 1) fail(ErrorKind::invalid_grid, fmt::format("grid '{}': values must be >= 1", spec));
  }
  if (out.size() > 1'000'000) fail(ErrorKind::invalid_grid, "grid has more than 10^6 points");
  return out;
}

std::optional<SweepOp> parse_sweep_op(std::string_view text) {
  if (text == "ln" || text == "ln_rational") return SweepOp::ln_rational;
  if (text == "factorial") return SweepOp::factorial;
  if (text == "nr") return SweepOp::nr;
  return std::nullopt;
}

TableReport sweep(const SweepSpec& spec) {
  if (spec.grid.empty()) fail(ErrorKind::invalid_grid, "sweep needs a non-empty grid");
  TableReport r;
  r.id = TableId::sweep;
  switch (spec.op) {
    case SweepOp::ln_rational: {
      r.title = fmt::format("ln({}/{}) against the multiplier m ({})", spec.p, spec.q,
                            harmonic::to_string(spec.variant));
      if (spec.p <= 0 || spec.q <= 0) fail(ErrorKind::domain, "sweep ln needs positive p and q");
      const double reference = ln(static_cast<double>(spec.p) / static_cast<double>(spec.q));
      const std::string quantity = fmt::format("ln({}/{})", spec.p, spec.q);
      for (auto m : spec.grid) {
        const double v = harmonic::ln_rational({spec.p, spec.q, m}, spec.variant);
        r.rows.push_back(make_row(fmt::format("m={}", m), quantity, v, reference));
      }
      break;
    }
    case SweepOp::factorial: {
      r.title = fmt::format("ln n! ({}) against n", factorial::to_string(spec.method));
      for (auto n : spec.grid) {
        const auto est = factorial::estimate(n, spec.method);
        const double exact = oracle::factorial_exact_ln(n).value;
        Row row;
        row.input = fmt::format("n={}", n);
        row.quantity = "ln n!";
        row.calculated = est.ln_value;
        row.reference = exact;
        row.percent_error = std::expm1(est.ln_value - exact) * 100.0;
        r.rows.push_back(std::move(row));
      }
      break;
    }
    case SweepOp::nr: {
      r.title = "Number Constant variants against n";
      const double implied = 2.0 - 2.0 * oracle::ln2() - constants::kEulerGamma;
      const double integral = constants::nr_integral();
      for (auto n : spec.grid) {
        const std::string input = fmt::format("n={}", n);
        r.rows.push_back(make_row(input, "series", constants::nr_direct_series(n), implied));
        if (n >= 2) {
          r.rows.push_back(make_row(input, "limit", constants::nr_empirical_limit(n), implied));
        }
        r.rows.push_back(make_row(input, "integral", integral, implied));
      }
      break;
    }
  }
  return r;
}

}  // namespace harmlog::tables
