#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include "json.hpp"

#include "commands.hpp"

namespace {

gks::cli::CommandResult run(std::vector<std::string> args) { return gks::cli::run_cli(args); }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("gks_cli_test_" + name);
}

}  // namespace

TEST(Cli, VerifyExitCodes) {
  auto ok = run({"verify", "--spec", "blocksq(2)", "--json"});
  EXPECT_EQ(ok.exit_code, 0);
  auto doc = nlohmann::json::parse(ok.out);
  EXPECT_EQ(doc["report"]["valid"], true);
  EXPECT_EQ(doc["report"]["runs_checked"], 48);

  auto bad = run({"verify", "--spec", "tau(hamming3,1,--no-flip)", "--mode", "structured", "--json"});
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_EQ(nlohmann::json::parse(bad.out)["report"]["failure"]["clause"], "answer-exceeds-k-alice");

  EXPECT_EQ(run({"verify", "--spec", "nonsense"}).exit_code, 2);
  EXPECT_EQ(run({"verify"}).exit_code, 2);
  EXPECT_EQ(run({"verify", "--spec", "blocksq(4)", "--mode", "exhaustive"}).exit_code, 2);
  EXPECT_EQ(run({"verify", "--spec", "prod(blocksq(2),trivial(2))", "--mode", "structured"}).exit_code, 2);
  EXPECT_EQ(run({"verify", "--spec", "tau(hamming3,2)"}).exit_code, 1);
  EXPECT_EQ(run({"frobnicate"}).exit_code, 2);
}

TEST(Cli, AutoModePicksStructuredForLargeN) {
  auto r = run({"verify", "--spec", "amc(code6)", "--json"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["report"]["mode"], "structured");
}

TEST(Cli, SampledIsSeeded) {
  std::vector<std::string> args = {"verify", "--spec", "prod(blocksq(2),blocksq(2))", "--mode", "sampled",
                                   "--samples", "2000", "--seed", "7", "--json"};
  auto a = run(args);
  auto b = run(args);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, TableCsvAndJson) {
  auto csv = run({"table", "--n-max", "9", "--csv"});
  EXPECT_EQ(csv.exit_code, 0);
  EXPECT_EQ(csv.out.rfind("n,k,spec\n1,1,trivial(1)\n", 0), 0u);
  auto json = nlohmann::json::parse(run({"table", "--n-max", "9", "--json"}).out);
  ASSERT_TRUE(json.is_object() || json.is_array());
}

TEST(Cli, SubgraphCommands) {
  EXPECT_EQ(run({"subgraph", "solve", "--edges", "*0,0*"}).exit_code, 0);
  EXPECT_EQ(run({"subgraph", "solve", "--edges", "*0"}).exit_code, 1);
  EXPECT_EQ(run({"subgraph", "solve", "--edges", "1**"}).exit_code, 2);
  EXPECT_EQ(run({"subgraph", "solve"}).exit_code, 2);

  auto minimal = run({"subgraph", "minimal", "--n", "4", "--k", "2", "--json"});
  EXPECT_EQ(minimal.exit_code, 0);
  EXPECT_NE(minimal.out.find("*000"), std::string::npos);
  EXPECT_EQ(run({"subgraph", "minimal", "--n", "6", "--k", "2"}).exit_code, 2);

  auto shapes = run({"subgraph", "shapes", "--edges", "10*,*00,0*0,01*"});
  EXPECT_EQ(shapes.exit_code, 0);

  EXPECT_EQ(run({"subgraph", "to-strategy", "--edges", "*000,0*00,01*0,011*,0*11,*011,101*,10*0"}).exit_code, 0);
  EXPECT_EQ(run({"subgraph", "to-strategy", "--edges", "*0"}).exit_code, 1);
}

TEST(Cli, CertificateBuildAndCheck) {
  const auto path = temp_file("cert.txt");
  auto built = run({"subgraph", "certify-no25", "--out", path.string()});
  EXPECT_EQ(built.exit_code, 0);
  EXPECT_EQ(run({"subgraph", "certify-no25", "--check", path.string()}).exit_code, 0);

  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  auto pos = text.find("cube_vertices=32");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 16, "cube_vertices=64");
  std::ofstream(path) << text;
  EXPECT_EQ(run({"subgraph", "certify-no25", "--check", path.string()}).exit_code, 1);
  std::filesystem::remove(path);
}

TEST(Cli, CodeCommands) {
  const auto path = temp_file("h3.txt");
  EXPECT_EQ(run({"code", "gen-hamming", "--r", "3", "--out", path.string()}).exit_code, 0);
  auto dist = run({"code", "distance", "--code", path.string(), "--json"});
  EXPECT_EQ(dist.exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(dist.out)["distance"], 3);
  EXPECT_EQ(run({"code", "puncture", "--code", path.string(), "--position", "8"}).exit_code, 2);
  EXPECT_EQ(run({"code", "tau-match", "--code", "hamming3", "--m", "2"}).exit_code, 1);
  EXPECT_EQ(run({"code", "tau-match", "--code", "hamming4", "--m", "4"}).exit_code, 0);
  EXPECT_EQ(run({"code", "distance", "--code", "/no/such/code"}).exit_code, 2);
  std::filesystem::remove(path);
}
