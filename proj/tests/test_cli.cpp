#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qkseidel/cli.hpp"

using namespace qkseidel;
using cli::Json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "qkseidel");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, A2TableJson) {
  CliResult r = run({"table", "--type", "A", "--rank", "2", "--node", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  ASSERT_EQ(j.size(), 5u);
  EXPECT_EQ(j[0]["w_word"], Json({1}));
  EXPECT_EQ(j[0]["product_word"], Json({1, 2, 1}));
  EXPECT_EQ(j[4]["q_exponent"], Json({1, 1}));
  EXPECT_EQ(j[4]["product_word"], Json({2}));
  for (const auto& rec : j) EXPECT_TRUE(rec["verified"].get<bool>());
}

TEST(Cli, RecordSchema) {
  CliResult r = run({"verify", "--type", "D", "--rank", "5", "--node", "4", "--word", "2,4,3,5,3,1,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j[0].items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"type", "rank", "node", "w_word", "q_exponent", "product_word", "verified", "details"}));
  EXPECT_EQ(j[0]["q_exponent"], Json({0, 1, 1, 1, 1}));
  EXPECT_EQ(j[0]["type"], "D");
  EXPECT_EQ(j[0]["rank"], 5);
  EXPECT_EQ(j[0]["node"], 4);
}

TEST(Cli, JsonRoundTripIsByteIdentical) {
  for (auto args : std::vector<std::vector<std::string>>{{"table", "--type", "C", "--rank", "2", "--node", "2"},
                                                         {"element", "--type", "D", "--rank", "5", "--word", "2,4,3,5,3,1,2", "--node", "4"},
                                                         {"verify", "--type", "A", "--rank", "3", "--checks", "key,pushforward"}}) {
    CliResult r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(Json::parse(r.out).dump(2) + "\n", r.out);
  }
}

TEST(Cli, C2LatexTable) {
  CliResult r = run({"table", "--type", "C", "--rank", "2", "--node", "2", "--format", "latex"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\\begin{tabular}{c|c|c|c|c|c|c}"), std::string::npos);
  EXPECT_NE(r.out.find("& $Q_1Q_2^2$\n& $Q_1Q_2^2\\,\\mathbb{O}^{s_1}$"), std::string::npos);
  EXPECT_NE(r.out.find("$\\mathbb{O}^{w_\\circ}$\n& $Q_2\\,\\mathbb{O}^{s_2s_1}$"), std::string::npos);
}

TEST(Cli, ElementDetails) {
  CliResult r = run({"element", "--type", "D", "--rank", "5", "--word", "2,4,3,5,3,1,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_TRUE(j.is_object());
  EXPECT_TRUE(j["node"].is_null());
  EXPECT_EQ(j["details"]["descents"], Json({2, 5}));
  EXPECT_EQ(j["details"]["gamma"], Json({0, -1, 0, 0, -1}));
  EXPECT_EQ(j["details"]["inversions"].size(), 7u);
}

TEST(Cli, ParabolicTable) {
  CliResult r = run({"table", "--type", "D", "--rank", "4", "--node", "1", "--parabolic", "2,3,4"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  // W^P for the quadric has 8 elements, 7 besides e
  EXPECT_EQ(j.size(), 7u);
}

TEST(Cli, SweepPasses) {
  CliResult r = run({"sweep", "--type", "C", "--rank", "2", "--format", "text", "--jobs", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, OutputFile) {
  std::string path = ::testing::TempDir() + "qkseidel_cli_out.json";
  CliResult r = run({"table", "--type", "A", "--rank", "2", "--node", "1", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(Json::parse(ss.str()).size(), 5u);
  std::remove(path.c_str());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"table", "--type", "B", "--rank", "3", "--node", "2"}).code, cli::invalid_input);
  EXPECT_EQ(run({"table", "--type", "Q", "--rank", "3", "--node", "1"}).code, cli::invalid_input);
  EXPECT_EQ(run({"verify", "--type", "A", "--rank", "2", "--word", "1,5"}).code, cli::invalid_input);
  EXPECT_EQ(run({"verify", "--type", "A", "--rank", "2", "--word", "1,x"}).code, cli::invalid_input);
  EXPECT_EQ(run({"verify", "--type", "A", "--rank", "2", "--checks", "bogus"}).code, cli::invalid_input);
  EXPECT_EQ(run({"element", "--type", "A", "--rank", "2"}).code, cli::invalid_input);
  EXPECT_EQ(run({"frobnicate"}).code, cli::invalid_input);
  EXPECT_EQ(run({"table", "--type", "A", "--rank", "2", "--node", "1", "--format", "latex"}).code, cli::pass);
  EXPECT_EQ(run({"element", "--type", "A", "--rank", "2", "--word", "1", "--format", "latex"}).code, cli::invalid_input);
  EXPECT_EQ(run({"verify", "--type", "E", "--rank", "6", "--node", "1", "--word", "1,3,4,2", "--term-budget", "3"}).code,
            cli::budget_exceeded);
  EXPECT_EQ(run({"--help"}).code, cli::pass);
}

TEST(Cli, BudgetIsRestoredAfterRun) {
  std::size_t before = term_budget().load();
  run({"verify", "--type", "A", "--rank", "2", "--term-budget", "7"});
  EXPECT_EQ(term_budget().load(), before);
}

TEST(Cli, ParseWord) {
  EXPECT_EQ(cli::parse_word("2,4,3", 5), (Word{2, 4, 3}));
  EXPECT_TRUE(cli::parse_word("", 5).empty());
  EXPECT_THROW(cli::parse_word("0", 5), InvalidInput);
  EXPECT_THROW(cli::parse_word("2,,3", 5), InvalidInput);
}
