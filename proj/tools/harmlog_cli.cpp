// harmlog: logarithms, factorials and the Euler-Mascheroni constant from odd
// harmonic sums, checked against an independent oracle.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "harmlog/cnr.hpp"
#include "harmlog/constants.hpp"
#include "harmlog/error.hpp"
#include "harmlog/factorial.hpp"
#include "harmlog/harmonic_log.hpp"
#include "harmlog/oracle.hpp"
#include "harmlog/tables.hpp"

namespace {

using namespace harmlog;
using json = nlohmann::ordered_json;

enum class OutFormat { plain, json, csv, markdown };

struct Config {
  std::int64_t threshold = harmonic::kDefaultThreshold;
  OutFormat format = OutFormat::plain;
  Summation mode = Summation::compensated;
  std::string out;
};

using Value = std::variant<std::monostate, std::int64_t, double, std::string>;
using Record = std::vector<std::pair<std::string, Value>>;

std::string plain_value(const Value& v) {
  struct {
    std::string operator()(std::monostate) const { return "n/a"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const {
      if (std::isinf(d)) return d > 0 ? "overflow" : "-overflow";
      return fmt::format("{:.10g}", d);
    }
    std::string operator()(const std::string& s) const { return s; }
  } visitor;
  return std::visit(visitor, v);
}

std::string csv_value(const Value& v) {
  if (const auto* d = std::get_if<double>(&v)) {
    if (!std::isfinite(*d)) return "";
    return fmt::format("{}", *d);  // shortest round-trip form
  }
  if (std::holds_alternative<std::monostate>(v)) return "";
  return plain_value(v);
}

json json_value(const Value& v) {
  if (const auto* d = std::get_if<double>(&v)) {
    if (!std::isfinite(*d)) return nullptr;
    return *d;
  }
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  return nullptr;
}

std::string render(const Record& rec, OutFormat format) {
  switch (format) {
    case OutFormat::json: {
      json j = json::object();
      for (const auto& [k, v] : rec) j[k] = json_value(v);
      return j.dump(2) + "\n";
    }
    case OutFormat::csv: {
      std::string head, row;
      for (const auto& [k, v] : rec) {
        head += (head.empty() ? "" : ",") + k;
        row += (row.empty() ? "" : ",") + csv_value(v);
      }
      return head + "\n" + row + "\n";
    }
    case OutFormat::plain: {
      std::size_t width = 0;
      for (const auto& [k, v] : rec) width = std::max(width, k.size());
      std::string out;
      for (const auto& [k, v] : rec) out += fmt::format("{:<{}}  {}\n", k, width, plain_value(v));
      return out;
    }
    case OutFormat::markdown: break;
  }
  fail(ErrorKind::domain, "markdown output is only available for table and sweep");
}

void emit(const std::string& text, const Config& cfg) {
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    tables::write_report(text, cfg.out);
  }
}

// ------------------------------------------------------------------- ln --

struct LnArgs {
  std::vector<std::int64_t> operands;
  std::string m = "auto";
  std::optional<std::string> variant;
  std::optional<double> real;
  std::int64_t denominator = 100;
};

harmonic::LogVariant parse_variant(const std::string& s) {
  return s == "full" ? harmonic::LogVariant::full : harmonic::LogVariant::truncated;
}

Record cmd_ln(const LnArgs& a, const Config& cfg) {
  std::int64_t p = 0;
  std::int64_t q = 1;
  if (a.real) {
    if (!a.operands.empty()) fail(ErrorKind::domain, "give either p [q] or --real, not both");
    const auto r = harmonic::rationalize(*a.real, a.denominator);
    p = r.p;
    q = r.q;
  } else if (a.operands.size() == 1) {
    // Integer logarithm: the whole range 2..n, Full by default.
    const std::int64_t n = a.operands[0];
    if (n <= 0) {
      fail(n == 0 ? ErrorKind::zero_or_infinite : ErrorKind::negative_input,
           "no logarithm in real quantities for a non-positive integer");
    }
    const auto variant = a.variant ? parse_variant(*a.variant) : harmonic::LogVariant::full;
    const double value = harmonic::ln_integer(n, variant, cfg.mode);
    const double reference = oracle::ln_ref(static_cast<double>(n)).value;
    return {{"n", n},
            {"variant", std::string(harmonic::to_string(variant))},
            {"value", value},
            {"reference", reference},
            {"percent_error", n == 1 ? Value{} : Value{oracle::percent_error(value, reference)}}};
  } else if (a.operands.size() == 2) {
    p = a.operands[0];
    q = a.operands[1];
  } else {
    fail(ErrorKind::domain, "ln expects p [q] or --real X");
  }

  const auto variant = a.variant ? parse_variant(*a.variant) : harmonic::LogVariant::truncated;
  harmonic::AutoLog r;
  if (a.m == "auto") {
    r = harmonic::ln_auto(p, q, cfg.threshold, variant, cfg.mode);
  } else {
    std::int64_t m = 0;
    try {
      std::size_t used = 0;
      m = std::stoll(a.m, &used);
      if (used != a.m.size()) throw std::invalid_argument(a.m);
    } catch (const std::exception&) {
      fail(ErrorKind::domain, fmt::format("--m must be a positive integer or 'auto', got '{}'", a.m));
    }
    if (m < 1) fail(ErrorKind::domain, fmt::format("--m must be >= 1, got {}", m));
    r = harmonic::ln_signed(p, q, m, variant, cfg.mode);
  }
  const double reference =
      oracle::ln_ref(static_cast<double>(r.p) / static_cast<double>(r.q)).value;
  Value pe;
  if (reference != 0.0) pe = oracle::percent_error(r.value, reference);
  return {{"p", r.p},
          {"q", r.q},
          {"m", r.m},
          {"variant", std::string(harmonic::to_string(variant))},
          {"value", r.value},
          {"reference", reference},
          {"percent_error", pe}};
}

// ------------------------------------------------------------ factorial --

Record cmd_factorial(std::int64_t n, const std::string& method_name) {
  factorial::FactorialMethod method = factorial::FactorialMethod::corrected;
  if (method_name == "raw") method = factorial::FactorialMethod::raw;
  if (method_name == "series") method = factorial::FactorialMethod::series_exact;
  const auto est = factorial::estimate(n, method);
  const double ln_reference = oracle::factorial_exact_ln(n).value;
  const double reference = oracle::factorial_exact(n);
  double pe = 0.0;
  if (std::isfinite(est.value) && std::isfinite(reference)) {
    pe = oracle::percent_error(est.value, reference);
  } else {
    pe = std::expm1(est.ln_value - ln_reference) * 100.0;
  }
  return {{"n", n},
          {"method", std::string(factorial::to_string(method))},
          {"ln_value", est.ln_value},
          {"value", est.value},
          {"ln_reference", ln_reference},
          {"reference", reference},
          {"percent_error", pe}};
}

// ---------------------------------------------------------------- gamma --

Record cmd_gamma(const std::string& nr, std::optional<std::int64_t> n) {
  constants::NrVariant v;
  if (nr == "integral") {
    v = constants::integral_variant();
  } else if (nr == "series") {
    v = n ? constants::direct_series_variant(*n) : constants::converged_direct_series_variant();
  } else {
    v = constants::empirical_limit_variant(n.value_or(10'000'000));
  }
  const double gamma = constants::euler_gamma(v);
  Record rec{{"variant", std::string(constants::to_string(v.tag))}};
  if (v.tag != constants::NrTag::integral_closed_form) rec.emplace_back("n", v.parameter);
  rec.emplace_back("nr", v.value);
  rec.emplace_back("gamma", gamma);
  rec.emplace_back("reference", constants::kEulerGamma);
  rec.emplace_back("percent_error", oracle::percent_error(gamma, constants::kEulerGamma));
  return rec;
}

// ------------------------------------------------------------------ cnr --

Record cmd_cnr(double x, const std::string& method_name, std::int64_t m) {
  cnr::CnrMethod method;
  if (method_name == "lemma11") method.tag = cnr::CnrTag::lemma11;
  if (method_name == "pow2") method.tag = cnr::CnrTag::pow2;
  if (method_name == "exp") method.tag = cnr::CnrTag::exp_full;
  if (method_name == "large") method.tag = cnr::CnrTag::exp_large;
  if (method_name == "scaled") method = cnr::CnrMethod::scaled(m);
  const auto r = cnr::evaluate(x, method);
  Record rec{{"x", r.input}, {"method", std::string(cnr::to_string(r.method.tag))}};
  if (r.method.tag == cnr::CnrTag::exp_scaled) rec.emplace_back("m", r.method.m);
  rec.emplace_back("value", r.value);
  rec.emplace_back("reference", r.reference);
  rec.emplace_back("percent_error", r.percent_error);
  return rec;
}

std::string cmd_nbb(std::int64_t n, const Config& cfg) {
  const auto blocks = cnr::nbb_decompose(n);
  switch (cfg.format) {
    case OutFormat::json: {
      json arr = json::array();
      for (const auto& b : blocks) arr.push_back(json::array({b.num, b.den}));
      json j = json::object();
      j["n"] = n;
      j["blocks"] = std::move(arr);
      return j.dump(2) + "\n";
    }
    case OutFormat::csv: {
      std::string out = "num,den\n";
      for (const auto& b : blocks) out += fmt::format("{},{}\n", b.num, b.den);
      return out;
    }
    case OutFormat::plain: {
      std::string out = fmt::format("{} =", n);
      if (blocks.empty()) out += " 1";
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        out += fmt::format("{} {}/{}", i ? " ·" : "", blocks[i].num, blocks[i].den);
      }
      return out + "\n";
    }
    case OutFormat::markdown: break;
  }
  fail(ErrorKind::domain, "markdown output is only available for table and sweep");
}

tables::Format table_format(OutFormat f) {
  switch (f) {
    case OutFormat::csv: return tables::Format::csv;
    case OutFormat::json: return tables::Format::json;
    default: return tables::Format::markdown;
  }
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain:
    case ErrorKind::negative_input:
    case ErrorKind::zero_or_infinite: return 2;
    case ErrorKind::overflow: return 3;
    case ErrorKind::io: return 4;
    case ErrorKind::integrity: return 5;
    case ErrorKind::invalid_grid: return 1;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Odd-harmonic logarithms, factorials and N_r, checked against an oracle"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::string format = "plain";
  std::string precision = "compensated";
  app.add_option("--format", format, "plain, json, csv (table/sweep also: markdown)")
      ->check(CLI::IsMember({"plain", "json", "csv", "markdown"}));
  app.add_option("--threshold", cfg.threshold, "m·p and m·q must exceed this (ln --m auto)")
      ->envname("HARMLOG_THRESHOLD")
      ->check(CLI::PositiveNumber);
  app.add_option("--precision", precision, "summation: standard or compensated")
      ->check(CLI::IsMember({"standard", "compensated"}));
  app.add_option("--out", cfg.out, "write output to PATH instead of stdout");

  LnArgs ln;
  auto* ln_cmd = app.add_subcommand("ln", "ln(p/q), or ln(n) for a single integer");
  ln_cmd->add_option("operands", ln.operands, "p [q]")->expected(0, 2);
  ln_cmd->add_option("--m", ln.m, "multiplier, or 'auto'");
  ln_cmd->add_option("--variant", ln.variant, "truncated or full")
      ->check(CLI::IsMember({"truncated", "full"}));
  ln_cmd->add_option("--real", ln.real, "approximate a real x by round(x·D)/D");
  ln_cmd->add_option("--denominator", ln.denominator, "D for --real")->check(CLI::PositiveNumber);

  std::int64_t fact_n = 0;
  std::string fact_method = "corrected";
  auto* fact_cmd = app.add_subcommand("factorial", "estimate n!");
  fact_cmd->add_option("n", fact_n)->required();
  fact_cmd->add_option("--method", fact_method)
      ->check(CLI::IsMember({"raw", "corrected", "series"}));

  std::string nr = "integral";
  std::optional<std::int64_t> gamma_n;
  auto* gamma_cmd = app.add_subcommand("gamma", "N_r and the Euler-Mascheroni estimate");
  gamma_cmd->add_option("--nr", nr)->check(CLI::IsMember({"integral", "series", "limit"}));
  gamma_cmd->add_option("--n", gamma_n, "series terms or limit index");

  double cnr_x = 0.0;
  std::string cnr_method = "exp";
  std::int64_t cnr_m = cnr::kDefaultScale;
  auto* cnr_cmd = app.add_subcommand("cnr", "exponential forms of x and x/(x-1)");
  cnr_cmd->add_option("x", cnr_x)->required();
  cnr_cmd->add_option("--method", cnr_method)
      ->check(CLI::IsMember({"lemma11", "pow2", "exp", "scaled", "large"}));
  cnr_cmd->add_option("--m", cnr_m, "scale for --method scaled");

  std::int64_t nbb_n = 0;
  auto* nbb_cmd = app.add_subcommand("nbb", "n as a product of consecutive ratios");
  nbb_cmd->add_option("n", nbb_n)->required();

  std::string table_id;
  auto* table_cmd = app.add_subcommand("table", "regenerate a published table");
  table_cmd->add_option("id", table_id, "2.1 .. 2.6 or nr-gamma")->required();

  std::string sweep_op;
  tables::SweepSpec spec;
  std::string sweep_m, sweep_n, sweep_variant = "truncated", sweep_method = "corrected";
  auto* sweep_cmd = app.add_subcommand("sweep", "error against a parameter grid");
  sweep_cmd->add_option("op", sweep_op, "ln, factorial or nr")
      ->required()
      ->check(CLI::IsMember({"ln", "factorial", "nr"}));
  sweep_cmd->add_option("--p", spec.p);
  sweep_cmd->add_option("--q", spec.q);
  sweep_cmd->add_option("--m", sweep_m, "grid for ln: lo:hi:double, lo:hi:step or a,b,c");
  sweep_cmd->add_option("--n", sweep_n, "grid for factorial and nr");
  sweep_cmd->add_option("--variant", sweep_variant)->check(CLI::IsMember({"truncated", "full"}));
  sweep_cmd->add_option("--method", sweep_method)
      ->check(CLI::IsMember({"raw", "corrected", "series"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (format == "json") cfg.format = OutFormat::json;
  if (format == "csv") cfg.format = OutFormat::csv;
  if (format == "markdown") cfg.format = OutFormat::markdown;
  if (precision == "standard") cfg.mode = Summation::naive;

  try {
    std::string text;
    if (*ln_cmd) {
      text = render(cmd_ln(ln, cfg), cfg.format);
    } else if (*fact_cmd) {
      text = render(cmd_factorial(fact_n, fact_method), cfg.format);
    } else if (*gamma_cmd) {
      text = render(cmd_gamma(nr, gamma_n), cfg.format);
    } else if (*cnr_cmd) {
      text = render(cmd_cnr(cnr_x, cnr_method, cnr_m), cfg.format);
    } else if (*nbb_cmd) {
      text = cmd_nbb(nbb_n, cfg);
    } else if (*table_cmd) {
      const auto id = tables::parse_table_id(table_id);
      if (!id) {
        std::cerr << "error: unknown table '" << table_id << "'\n";
        return 1;
      }
      text = tables::generate(*id, table_format(cfg.format));
    } else if (*sweep_cmd) {
      spec.op = *tables::parse_sweep_op(sweep_op);
      const std::string& grid = spec.op == tables::SweepOp::ln_rational ? sweep_m : sweep_n;
      if (grid.empty()) {
        std::cerr << "error: sweep " << sweep_op << " needs "
                  << (spec.op == tables::SweepOp::ln_rational ? "--m" : "--n") << " GRID\n";
        return 1;
      }
      spec.grid = tables::parse_grid(grid);
      spec.variant = parse_variant(sweep_variant);
      if (sweep_method == "raw") spec.method = factorial::FactorialMethod::raw;
      if (sweep_method == "series") spec.method = factorial::FactorialMethod::series_exact;
      text = tables::serialize(tables::sweep(spec), table_format(cfg.format));
    }
    emit(text, cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return 0;
}
