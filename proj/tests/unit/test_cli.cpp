#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "irrbase/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "irrbase");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = irrbase::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("irrbase_test_" + name)).string();
}

}  // namespace

TEST(Cli, RealizeInstantiate) {
  auto r = run({"realize", "--min", "2", "--max", "4", "--instantiate"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["lengths"], json::parse("[2,3,4]"));
  EXPECT_EQ(j["group_order"], "87360");
  EXPECT_FALSE(j.contains("timings"));
}

TEST(Cli, RealizeRefused) {
  auto r = run({"realize", "--min", "2", "--max", "9"});
  EXPECT_EQ(r.code, 3);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["spec"]["params"]["f"], 255255);
  EXPECT_EQ(j["instantiated"], false);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, RealizeSpecOnly) {
  auto r = run({"realize", "--min", "3", "--max", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["spec"]["family"], "affine");
}

TEST(Cli, RealizeMismatchIsVerificationFailure) {
  // The semilinear witness has lengths {4} rather than {3,4}.
  auto r = run({"realize", "--min", "3", "--max", "4", "--instantiate"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out)["matches_expected"], false);
}

TEST(Cli, InvalidInput) {
  EXPECT_EQ(run({"realize", "--min", "1", "--max", "3"}).code, 2);
  EXPECT_EQ(run({"realize", "--min", "4", "--max", "3"}).code, 2);
  EXPECT_EQ(run({"realize", "--min", "3", "--max", "5", "--explicit-f", "12"}).code, 2);
  EXPECT_EQ(run({"realize"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"analyze", "--spec", "/nonexistent/spec.json"}).code, 2);
  EXPECT_EQ(run({"verify-paper", "--level", "medium"}).code, 2);
}

TEST(Cli, EmitSpecThenAnalyze) {
  const auto path = temp_path("s23.json");
  auto r = run({"realize", "--min", "2", "--max", "3", "--emit-spec", path});
  ASSERT_EQ(r.code, 0) << r.err;
  auto a = run({"analyze", "--spec", path});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(json::parse(a.out)["lengths"], json::parse("[2,3]"));

  auto b = run({"analyze", "--spec", path, "--min-base"});
  EXPECT_EQ(json::parse(b.out)["b"], 2);
  auto i = run({"analyze", "--spec", path, "--max-irredundant"});
  EXPECT_EQ(json::parse(i.out)["I"], 3);
  EXPECT_EQ(run({"analyze", "--spec", path, "--min-base", "--lengths"}).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, Chain) {
  const auto path = temp_path("delta.json");
  std::ofstream(path) << R"({"family":"suzuki","params":{"m":1},"extended":false,"action":"delta"})";
  auto r = run({"analyze", "--spec", path, "--chain", R"j(["inf", "(0,0,0)", 5])j"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["chain"]["orders"], json::parse(R"(["29120","448","7","1"])"));
  EXPECT_EQ(run({"analyze", "--spec", path, "--chain", R"(["nowhere"])"}).code, 2);
  EXPECT_EQ(run({"analyze", "--spec", path, "--chain", "not json"}).code, 2);
  EXPECT_EQ(run({"analyze", "--spec", path, "--chain", "[65]"}).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, BadSpecFile) {
  const auto path = temp_path("bad.json");
  std::ofstream(path) << "{ not json";
  EXPECT_EQ(run({"analyze", "--spec", path}).code, 2);
  std::ofstream(path) << R"({"family":"symmetric","params":{"n":5000000}})";
  EXPECT_EQ(run({"analyze", "--spec", path}).code, 3);
  std::filesystem::remove(path);
}

TEST(Cli, GuardFromEnvironment) {
  ::setenv("IRRBASE_MAX_POINTS", "100", 1);
  EXPECT_EQ(run({"realize", "--min", "2", "--max", "3", "--instantiate"}).code, 3);
  ::unsetenv("IRRBASE_MAX_POINTS");
}

TEST(Cli, ByteStable) {
  auto a = run({"realize", "--min", "2", "--max", "4", "--instantiate"});
  auto b = run({"realize", "--min", "2", "--max", "4", "--instantiate"});
  EXPECT_EQ(a.out, b.out);
  auto c = run({"verify-paper", "--json"});
  auto d = run({"verify-paper", "--json"});
  EXPECT_EQ(c.out, d.out);
  auto j = json::parse(c.out);
  EXPECT_EQ(j["level"], "quick");
  EXPECT_GE(j["checks"].size(), 10u);
}

TEST(Cli, Timings) {
  auto r = run({"realize", "--min", "2", "--max", "3", "--instantiate", "--timings"});
  EXPECT_TRUE(json::parse(r.out).contains("timings"));
}
