#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hyperlift/serialize.hpp"

using namespace hyperlift;
using hyperlift::cli::cmd_run;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cmd_run(args, out, err);
  return {code, out.str(), err.str()};
}

Json json_of(const CliRun& r) { return Json::parse(r.out); }

}  // namespace

TEST(Cli, AutgroupReport) {
  const CliRun r = run({"autgroup", "--p", "3", "--f", "1,0,1,0,1,0,1"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const Json j = json_of(r);
  EXPECT_EQ(j["tool"], "hyperlift");
  EXPECT_EQ(j["command"], "autgroup");
  EXPECT_FALSE(j.contains("timing_ms"));
  EXPECT_EQ(j["result"]["order"], 48);
  EXPECT_EQ(j["result"]["type"], "GL2(3)");
  EXPECT_EQ(j["result"]["liftable"], true);
  EXPECT_EQ(j["result"]["full_group"]["cayley"].size(), 48u);
  for (const auto& c : j.at("result").at("checks")) EXPECT_EQ(c["passed"], true) << c.dump();
}

TEST(Cli, CurveJsonInput) {
  const CliRun a = run({"autgroup", "--curve", R"({"p": 7, "f": [-1, 0, 0, 0, 0, 0, 1]})"});
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(json_of(a)["result"]["order"], 24);
  const std::string path = ::testing::TempDir() + "/hyperlift_curve.json";
  std::ofstream(path) << R"({"p": 7, "f": [-1, 0, 0, 0, 0, 0, 1]})";
  const CliRun b = run({"autgroup", "--curve", "@" + path});
  ASSERT_EQ(b.code, 0) << b.out;
  EXPECT_EQ(json_of(b)["result"], json_of(a)["result"]);
  std::remove(path.c_str());
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"autgroup", "--p", "7", "--f", "0,1,0,0,0,1"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> v{"verify-paper", "--p", "5"};
  EXPECT_EQ(run(v).out, run(v).out);
}

TEST(Cli, Liftable) {
  CliRun r = run({"liftable", "--group", "D(14)", "--p", "7"});
  ASSERT_EQ(r.code, 0);
  Json j = json_of(r);
  EXPECT_EQ(j["result"]["verdict"]["liftable"], true);
  EXPECT_EQ(j["result"]["verdict"]["rule"], "liftable-list: D_2p");
  r = run({"liftable", "--group", "W2", "--p", "3"});
  j = json_of(r);
  EXPECT_EQ(j["result"]["verdict"]["liftable"], false);
  EXPECT_EQ(j["result"]["verdict"]["oort"], "NOT_OORT");
  r = run({"liftable", "--g", "2", "--order", "48", "--p", "7"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(json_of(r)["result"]["verdict"]["liftable"], true);
  r = run({"liftable", "--g", "2", "--order", "48", "--p", "5"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, Oort) {
  CliRun r = run({"oort", "--group", "D(9)", "--p", "3"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(json_of(r)["result"]["oort"], "CONJECTURAL_Dpn");
  r = run({"oort", "--group", "Q8", "--p", "2"});
  EXPECT_EQ(json_of(r)["result"]["oort"], "NOT_OORT");
}

TEST(Cli, VerifyClaimsModFive) {
  const CliRun r = run({"verify-paper", "--p", "5"});
  ASSERT_EQ(r.code, 0);
  bool classical_r = false;
  const Json j = json_of(r);
  for (const auto& c : j["result"]) {
    const std::string claim = c["claim"];
    if (claim.rfind("A5: R", 0) == 0 && (c["source"] == "classical" || c["source"] == "both"))
      classical_r = c["status"] == "pass";
  }
  EXPECT_TRUE(classical_r);
}

TEST(Cli, ReduceAndFamilies) {
  CliRun r = run({"reduce", "--p", "3", "--f", "1,0,-5,0,-5,0,1"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(json_of(r)["result"]["report"]["good_reduction"], true);
  r = run({"reduce", "--p", "3", "--case", "A4", "--word", "TRL"});
  ASSERT_EQ(r.code, 0) << r.out;
  r = run({"families", "--case", "A4", "--p", "3"});
  ASSERT_EQ(r.code, 0) << r.out;
  r = run({"families", "--cyclic", "cyclic-n", "--p", "3", "--g", "4", "--n", "3", "--t", "1", "--text"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("genus constraint: 2 4"), std::string::npos) << r.out;
}

TEST(Cli, TextAndTiming) {
  CliRun r = run({"liftable", "--group", "A5", "--p", "5", "--text"});
  ASSERT_EQ(r.code, 0);
  EXPECT_THROW(Json::parse(r.out), Json::parse_error);
  r = run({"liftable", "--group", "A5", "--p", "5", "--timing"});
  EXPECT_TRUE(json_of(r).contains("timing_ms"));
  r = run({"liftable", "--group", "A5", "--p", "5", "--text", "--json"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  CliRun r = run({"autgroup", "--p", "2", "--f", "1,1,0,0,0,1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json_of(r)["error"]["kind"], "input");
  EXPECT_FALSE(r.err.empty());
  r = run({"autgroup", "--p", "3", "--f", "1,0,0,1,0,0,1"});
  EXPECT_EQ(r.code, 2);
  r = run({"autgroup", "--p", "5", "--f", "2,0,1,0,0,0,1", "--max-ext", "1"});
  EXPECT_EQ(r.code, 3) << r.out;
  EXPECT_EQ(json_of(r)["error"]["kind"], "bound");
  r = run({"liftable", "--group", "Blah(3)", "--p", "3"});
  EXPECT_EQ(r.code, 2);
  r = run({"autgroup", "--curve", "{not json"});
  EXPECT_EQ(r.code, 2);
}
