#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "harmlog/cnr.hpp"
#include "harmlog/constants.hpp"
#include "harmlog/factorial.hpp"
#include "harmlog/harmonic_log.hpp"
#include "harmlog/tables.hpp"
#include "reference_forms.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + HARMLOG_CLI + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  Run r;
  if (!pipe) return r;
  std::array<char, 4096> buf;
  while (const std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

using ojson = nlohmann::ordered_json;

ojson json_of(const std::string& args) {
  const auto r = run(args + " --format json");
  EXPECT_EQ(r.code, 0) << args << "\n" << r.out;
  return ojson::parse(r.out);
}

double number(const ojson& j, const char* key) { return j.at(key).get<double>(); }

}  // namespace

using testsupport::bits;

TEST(Cli, LnWorkedExampleIsBitIdentical) {
  const auto j = json_of("ln 1 2 --m 25 --variant truncated");
  EXPECT_EQ(bits(number(j, "value")),
            bits(harmlog::harmonic::ln_rational({1, 2, 25}, harmlog::harmonic::LogVariant::truncated)));
  EXPECT_EQ(j["m"], 25);
  const auto plain = run("ln 1 2 --m 25 --variant truncated");
  EXPECT_NE(plain.out.find("-0.693097198"), std::string::npos);
}

TEST(Cli, LnAutoAndThresholdEnv) {
  EXPECT_EQ(json_of("ln 1 2")["m"], 151);
  const auto r = run("ln 1 2 --format json", "HARMLOG_THRESHOLD=100");
  EXPECT_EQ(ojson::parse(r.out)["m"], 101);
  EXPECT_EQ(json_of("ln 1 2 --threshold 10")["m"], 11);
  EXPECT_EQ(number(json_of("ln 5 5"), "value"), 0.0);
}

TEST(Cli, LnIntegerDefaultsToFull) {
  const auto j = json_of("ln 30");
  EXPECT_EQ(j["variant"], "full");
  EXPECT_EQ(bits(number(j, "value")),
            bits(harmlog::harmonic::ln_integer(30, harmlog::harmonic::LogVariant::full)));
}

TEST(Cli, LnReal) {
  const auto j = json_of("ln --real 1.37 --denominator 100");
  EXPECT_EQ(j["p"], 137);
  EXPECT_EQ(j["q"], 100);
}

TEST(Cli, JsonRoundTrips) {
  for (const char* args : {"ln 1 2 --m 25", "factorial 160", "gamma --nr integral", "cnr 3.5",
                           "nbb 6", "ln 30", "table 2.5"}) {
    const auto r = run(std::string(args) + " --format json");
    ASSERT_EQ(r.code, 0) << args;
    EXPECT_EQ(ojson::parse(r.out).dump(2) + "\n", r.out) << args;
  }
}

TEST(Cli, Rejections) {
  auto r = run("ln -3 2 2>&1");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("no logarithm in real quantities"), std::string::npos);
  r = run("ln 0 2 2>&1");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("no logarithm in real quantities"), std::string::npos);
  EXPECT_EQ(run("cnr 1 2>/dev/null").code, 2);
  EXPECT_EQ(run("ln 9000000000000000000 1 --m 10 2>/dev/null").code, 3);
  EXPECT_EQ(run("ln 1 2 --bogus 2>/dev/null").code, 1);
  EXPECT_EQ(run("frobnicate 2>/dev/null").code, 1);
  EXPECT_EQ(run("sweep ln --m 5:1:1 2>/dev/null").code, 1);
  EXPECT_EQ(run("table 2.4 --out /nonexistent-dir/t.csv 2>/dev/null").code, 4);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, Factorial) {
  auto j = json_of("factorial 5 --method corrected");
  EXPECT_EQ(bits(number(j, "value")), bits(harmlog::factorial::factorial_corrected(5).value));
  EXPECT_NEAR(number(j, "percent_error"), -0.44759, 1e-5);
  j = json_of("factorial 160");
  EXPECT_NEAR(number(j, "value") / 4.71424166e284, 1.0, 1e-9);
  EXPECT_EQ(number(json_of("factorial 1 --method series"), "value"), 1.0);
  j = json_of("factorial 500");
  EXPECT_TRUE(j["value"].is_null());
  EXPECT_EQ(bits(number(j, "ln_value")), bits(harmlog::factorial::factorial_corrected(500).ln_value));
}

TEST(Cli, Gamma) {
  auto j = json_of("gamma --nr integral");
  EXPECT_NEAR(number(j, "gamma"), 0.5736309333, 1e-9);
  EXPECT_NEAR(number(j, "percent_error"), -0.62, 0.01);
  j = json_of("gamma --nr limit --n 10000000");
  EXPECT_NEAR(number(j, "gamma"), harmlog::constants::kEulerGamma, 1e-6);
  j = json_of("gamma --nr series --n 1000000");
  EXPECT_EQ(bits(number(j, "nr")), bits(harmlog::constants::nr_direct_series(1000000)));
}

TEST(Cli, CnrAndNbb) {
  auto j = json_of("cnr 3.5");
  EXPECT_EQ(bits(number(j, "value")), bits(harmlog::cnr::approx_number_exp(3.5)));
  j = json_of("cnr 2 --method scaled --m 100");
  EXPECT_EQ(bits(number(j, "value")), bits(harmlog::cnr::approx_number_scaled(2.0, 100)));
  j = json_of("nbb 4");
  EXPECT_EQ(j["blocks"].dump(), "[[2,1],[3,2],[4,3]]");
}

TEST(Cli, TablesMatchLibraryBytes) {
  using namespace harmlog::tables;
  EXPECT_EQ(run("table 2.4 --format csv").out, generate(TableId::t2_4, Format::csv));
  const auto md = run("table 2.6 --format markdown").out;
  EXPECT_EQ(md, generate(TableId::t2_6, Format::markdown));
  EXPECT_NE(md.find("erratum"), std::string::npos);
  SweepSpec spec;
  spec.grid = parse_grid("25:400:double");
  EXPECT_EQ(run("sweep ln --p 1 --q 2 --m 25:400:double --format csv").out,
            serialize(sweep(spec), Format::csv));
}

TEST(Cli, OutWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "harmlog_cli_out.csv";
  ASSERT_EQ(run("table 2.1 --format csv --out " + path.string()).code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), harmlog::tables::generate(harmlog::tables::TableId::t2_1,
                                                harmlog::tables::Format::csv));
  std::filesystem::remove(path);
}
