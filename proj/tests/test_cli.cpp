#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cli_golden_cases.hpp"
#include "polydc_cli.hpp"

using namespace polydc;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "polydc");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(CliGolden, OutputsMatchRecordedFiles) {
  const std::filesystem::path dir = POLYDC_GOLDEN_DIR;
  for (const auto& c : cli_golden::cases()) {
    std::vector<std::string> args{"--deterministic"};
    args.insert(args.end(), c.args.begin(), c.args.end());
    const auto got = run_cli(args);
    EXPECT_EQ(got.code, c.code) << c.file << ": " << got.err;
    EXPECT_EQ(got.out, slurp(dir / c.file)) << c.file;
  }
}

TEST(CliGolden, RepeatedRunsAreByteIdentical) {
  for (const auto& c : cli_golden::cases()) {
    std::vector<std::string> args{"--deterministic"};
    args.insert(args.end(), c.args.begin(), c.args.end());
    EXPECT_EQ(run_cli(args).out, run_cli(args).out) << c.file;
  }
}

TEST(Cli, TableValues) {
  const auto got = run_cli({"table", "euler", "max_n=5"});
  ASSERT_EQ(got.code, 0);
  const auto j = nlohmann::json::parse(got.out);
  std::vector<std::string> values;
  for (const auto& row : j.at("rows")) values.push_back(row.at("value"));
  EXPECT_EQ(values, (std::vector<std::string>{"1", "-1/2", "0", "1/4", "0", "-1/2"}));
  const auto g = nlohmann::json::parse(run_cli({"table", "genocchi", "max_n=6"}).out);
  EXPECT_EQ(g.at("rows").back().at("value"), "-3");
}

TEST(Cli, ReportSchema) {
  const auto got = run_cli({"verify", "thm1", "n=3", "k=2"});
  ASSERT_EQ(got.code, 0) << got.err;
  const auto j = nlohmann::ordered_json::parse(got.out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"verifier", "params", "lhs", "rhs", "holds", "elapsed_ms"}));
  EXPECT_TRUE(j.at("lhs").is_string());
  EXPECT_TRUE(j.at("elapsed_ms").is_number());
}

TEST(Cli, PolyIndexOneMatchesClassicalValue) {
  const auto a = nlohmann::json::parse(run_cli({"dcsum", "p=2", "h=3", "m=5"}).out);
  const auto b = nlohmann::json::parse(run_cli({"dcsum", "p=2", "h=3", "m=5", "k=1"}).out);
  EXPECT_EQ(a.at("value"), b.at("value"));
  EXPECT_EQ(a.at("value"), "-28/125");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"verify", "thm14", "k=1", "p=3", "h=1", "m=3"}).code, 0);
  EXPECT_EQ(run_cli({"verify", "thm11", "p=4", "m=3", "k=1"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "thm13", "k=1", "p=4", "h=3", "m=5"}).code, 1);
  EXPECT_EQ(run_cli({"verify", "sawtooth_t1_exploratory", "h=1", "m=3"}).code, 0);
  EXPECT_EQ(run_cli({"sweep", "sawtooth_t1_exploratory", "h=odd1..9", "m=odd1..9"}).code, 0);
  EXPECT_EQ(run_cli({"sweep", "thm11", "k=1", "p=2,4", "m=3"}).code, 2);
  EXPECT_EQ(run_cli({"table", "poly-euler", "max_n=3"}).code, 2);
  EXPECT_EQ(run_cli({"table", "nonsense", "max_n=3"}).code, 2);
  EXPECT_EQ(run_cli({"eval", "euler-poly", "n=1", "x=1/0"}).code, 2);
  EXPECT_EQ(run_cli({"eval", "euler-poly", "n=1", "x=0.5"}).code, 2);
  EXPECT_EQ(run_cli({"dcsum", "p=0", "h=1", "m=3"}).code, 2);
  EXPECT_EQ(run_cli({"dcsum", "p=1", "h=1", "m=3", "q=1"}).code, 2);
  EXPECT_EQ(run_cli({"--bogus", "table", "euler", "max_n=2"}).code, 2);
  EXPECT_EQ(run_cli({"--format", "xml", "table", "euler", "max_n=2"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
}

TEST(Cli, UnknownVerifierListsValidIds) {
  const auto got = run_cli({"verify", "thm99"});
  EXPECT_EQ(got.code, 2);
  for (const char* id : {"eq4", "thm14", "cor15", "oracle_equivalence", "sawtooth_t1_exploratory"}) {
    EXPECT_NE(got.err.find(id), std::string::npos) << id;
  }
  EXPECT_TRUE(got.out.empty());
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "polydc_cli_output_test.json";
  std::filesystem::remove(path);
  const auto got = run_cli({"--deterministic", "--output", path.string(), "dcsum", "p=1", "h=1", "m=3"});
  EXPECT_EQ(got.code, 0);
  EXPECT_TRUE(got.out.empty());
  EXPECT_EQ(slurp(path), slurp(std::filesystem::path(POLYDC_GOLDEN_DIR) / "dcsum_classical.json"));
  std::filesystem::remove(path);
}

TEST(Cli, SweepAggregate) {
  const auto got = run_cli({"--deterministic", "sweep", "thm14", "k=1", "p=1..2", "h=odd1..3", "m=1,3"});
  const auto j = nlohmann::json::parse(got.out);
  EXPECT_EQ(j.at("total"), 8);
  EXPECT_EQ(j.at("passed").get<int>() + j.at("failed").get<int>(), 8);
  EXPECT_EQ(j.at("failures").size(), j.at("failed").get<std::size_t>());
  EXPECT_EQ(got.code, j.at("failed").get<int>() > 0 ? 1 : 0);
}

TEST(CliParsing, RangeGrammar) {
  using cli::parse_range;
  EXPECT_EQ(parse_range("1..4", "p"), (std::vector<std::int64_t>{1, 2, 3, 4}));
  EXPECT_EQ(parse_range("odd1..9", "h"), (std::vector<std::int64_t>{1, 3, 5, 7, 9}));
  EXPECT_EQ(parse_range("even-3..3", "k"), (std::vector<std::int64_t>{-2, 0, 2}));
  EXPECT_EQ(parse_range("1,3,9", "m"), (std::vector<std::int64_t>{1, 3, 9}));
  EXPECT_EQ(parse_range("-2..3", "k"), (std::vector<std::int64_t>{-2, -1, 0, 1, 2, 3}));
  EXPECT_EQ(parse_range("0..10:5,7", "n"), (std::vector<std::int64_t>{0, 5, 10, 7}));
  for (const char* bad : {"", "a", "1..", "..3", "5..1", "1..3:0", "1,,2", "odd"}) {
    EXPECT_THROW(parse_range(bad, "x"), UsageError) << bad;
  }
}

TEST(CliParsing, RationalWireRoundTrip) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> num(-1'000'000'000, 1'000'000'000);
  std::uniform_int_distribution<long> den(1, 1'000'000'000);
  for (int i = 0; i < 1000; ++i) {
    const Rational r = make_rational(num(rng), den(rng));
    const auto got = run_cli({"--deterministic", "eval", "sawtooth", "x=" + to_string(r)});
    ASSERT_EQ(got.code, 0) << got.err;
    const auto j = nlohmann::json::parse(got.out);
    const Rational x = parse_rational(j.at("x").get<std::string>());
    EXPECT_EQ(x, r);
    EXPECT_EQ(to_string(x), j.at("x").get<std::string>());
    EXPECT_EQ(parse_rational(j.at("value").get<std::string>()), sawtooth(r));
  }
}
