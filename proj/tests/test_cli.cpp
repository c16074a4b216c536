#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fsrel/cli.hpp"
#include "fsrel/decider.hpp"
#include "fsrel/json_io.hpp"

using namespace fsrel;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string &name, const std::string &text) {
  auto path = std::filesystem::temp_directory_path() / ("fsrel_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

} // namespace

TEST(Cli, DecideSufficiency) {
  Outcome r = run({"decide", "--form1", "FS(3, 1)", "--form2", "FS(8, 2)"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "Relatives");
  EXPECT_EQ(j["rule"], "R5");
  EXPECT_EQ(j["certificate"]["check"]["lhs"], 12);
  EXPECT_EQ(j["certificate"]["check"]["rhs"], 10);
}

TEST(Cli, DecideFlatVersusCurved) {
  Outcome r = run({"decide", "--form1", "CE(4, 1)", "--form2", "CP(5, 1, 2)"});
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "NotRelatives");
  EXPECT_EQ(j["rule"], "R0");
}

TEST(Cli, Expand) {
  Outcome r = run({"expand", "--n", "2", "--b", "1", "--r", "3"});
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  std::vector<std::string> got;
  for (const auto &t : j["terms"])
    got.push_back(t["c"]);
  EXPECT_EQ(got, (std::vector<std::string>{"3/1", "3/1", "3/1", "6/1", "3/1", "1/1", "3/1", "3/1", "1/1"}));
  EXPECT_EQ(j["embedding_dimension"], 9);
  EXPECT_EQ(run({"expand", "--n", "1", "--b", "-1", "--r", "2"}).code, 2);
}

TEST(Cli, Reduce) {
  std::string path = write_temp("reduce.json",
                                R"({"num_vars":1,"max_degree":2,"entries":[)"
                                R"({"alpha":[1],"beta":[2],"re":"-1","im":"0"},{"alpha":[2],"beta":[1],"re":"-1","im":"0"}]})");
  Outcome r = run({"reduce", "--input", path});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["inertia"]["positive"], 1);
  EXPECT_EQ(j["inertia"]["negative"], 1);
  EXPECT_EQ(j["system"]["germs"].size(), 2u);
  EXPECT_EQ(j["reconstructs"], true);
}

TEST(Cli, Rank) {
  std::string path = write_temp("rank.json",
                                R"([{"num_vars":1,"max_degree":2,"coefficients":[{"index":[1],"re":"1","im":"0"},{"index":[2],"re":"1","im":"0"}]},)"
                                R"({"num_vars":1,"max_degree":2,"coefficients":[{"index":[1],"re":"1","im":"0"},{"index":[2],"re":"-1","im":"0"}]},)"
                                R"({"num_vars":1,"max_degree":2,"coefficients":[{"index":[1],"re":"1","im":"0"}]}])");
  Outcome r = run({"rank", "--input", path, "--degree", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(j["independent"], false);
}

TEST(Cli, VerifyWitnessFromDecider) {
  Verdict v = decide_relatives(parse_form("FS(2, 2)"), parse_form("FS(2, 1)"));
  std::string path = write_temp("witness.json", to_json(std::get<WitnessCert>(v.certificate).witness).dump());
  Outcome r = run({"verify", "--form1", "FS(2, 2)", "--form2", "FS(2, 1)", "--witness", path});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["ok"], true);
}

TEST(Cli, SearchIsByteStable) {
  std::vector<std::string> args{"search", "--form1", "FS(2, 2)", "--form2", "FS(2, 1)", "--degree", "2",
                                "--restarts", "5", "--seed", "42", "--tol", "1e-10"};
  Outcome a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  Json j = Json::parse(a.out);
  EXPECT_EQ(j["converged"], true);
  EXPECT_FALSE(j["witness"].is_null());
  EXPECT_EQ(j["evidence_only"], false);
}

TEST(Cli, DecideIsByteStableAndPretty) {
  std::vector<std::string> args{"decide", "--form1", "FS(2, 2)", "--form2", "FS(2, 1)"};
  EXPECT_EQ(run(args).out, run(args).out);
  args.insert(args.begin(), "--pretty");
  Outcome p = run(args);
  ASSERT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("\n  "), std::string::npos);
}

TEST(Cli, ValidationErrorsExitTwo) {
  for (const auto &args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"decide", "--form1", "FS(2, 1)"},
           {"decide", "--form1", "CP(3, 4, 1)", "--form2", "FS(2, 1)"},
           {"decide", "--form1", "FS(2, 1)", "--form2", "FS(2, 1)", "--bogus"},
           {"reduce", "--input", "/nonexistent/file.json"},
           {"search", "--form1", "FS(2, 1)", "--form2", "FS(2, -1)"},
           {"rank", "--input", "/nonexistent/file.json", "--degree", "2"}}) {
    Outcome r = run(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "" : args[0]);
    EXPECT_TRUE(r.out.empty());
    if (!r.err.empty())
      EXPECT_TRUE(Json::parse(r.err).contains("error")) << r.err;
  }
}

TEST(Cli, ParseErrorNamesToken) {
  Outcome r = run({"decide", "--form1", "CP(3, 4, 1)", "--form2", "FS(2, 1)"});
  ASSERT_EQ(r.code, 2);
  std::string msg = Json::parse(r.err)["error"];
  EXPECT_NE(msg.find('4'), std::string::npos);
}
