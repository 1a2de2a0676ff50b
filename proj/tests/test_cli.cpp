#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "ordvec_cli/cli.hpp"

namespace fs = std::filesystem;
using ordvec::cli::run_cli;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto* test = ::testing::UnitTest::GetInstance()->current_test_info();
  fs::path p = fs::temp_directory_path() / ("ordvec_" + std::string(test->name()) + "_" + std::to_string(getpid()) + "_" + name);
  std::ofstream(p) << text;
  return p.string();
}

std::string emit(const std::string& name) {
  Outcome r = cli({"gallery", "emit", name});
  EXPECT_EQ(r.code, 0);
  return write_file(name + ".json", r.out);
}

}  // namespace

TEST(Cli, Norm) {
  std::string f = emit("delta-2");
  Outcome r = cli({"norm", f, "1,-2", "[\"1/2\", 1]"});
  EXPECT_EQ(r.code, ordvec::cli::kSuccess);
  EXPECT_EQ(r.out, "3\n3/2\n");
  Outcome w = cli({"norm", f, "1,-2", "--witness", "--json"});
  Json j = Json::parse(w.out);
  EXPECT_EQ(j[0]["value"], "3");
  EXPECT_TRUE(j[0].contains("witness"));
  Outcome lex = cli({"norm", emit("lex-single"), "0,1"});
  EXPECT_EQ(lex.out, "0 (not attained)\n");
}

TEST(Cli, MemberAndUnitNorm) {
  std::string f = write_file("line.json",
                             R"({"dimension":2,"cone":{"kind":"halfspace","matrix":[[1,0],[0,1]]},"M":[[1,0]]})");
  Outcome r = cli({"member", f, "1,0", "0,1", "-1,0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "cone yes  ideal yes\ncone yes  ideal no\ncone no  ideal yes\n");
  Outcome u = cli({"unitnorm", emit("delta-2"), "3,-1", "--unit", "1,2"});
  EXPECT_EQ(u.out, "3\n");
}

TEST(Cli, CoherentExitCodes) {
  Outcome d = cli({"coherent", emit("delta-2")});
  EXPECT_EQ(d.code, ordvec::cli::kSuccess);
  EXPECT_EQ(d.out.rfind("coherent", 0), 0U);
  Outcome c = cli({"coherent", emit("delta-2"), "--emit-certificate"});
  Json cj = Json::parse(c.out);
  EXPECT_EQ(cj["verdict"], "coherent");
  EXPECT_TRUE(cj.contains("multipliers"));
  Outcome lex = cli({"coherent", emit("lex-pair"), "--json"});
  EXPECT_EQ(lex.code, ordvec::cli::kIncoherent);
  EXPECT_EQ(Json::parse(lex.out)["verdict"], "incoherent");
  Outcome f2 = cli({"coherent", emit("f2-ball-2")});
  EXPECT_EQ(f2.code, ordvec::cli::kIncoherent);
}

TEST(Cli, OpNorm) {
  Outcome r = cli({"opnorm", emit("delta-2"), "1,1", "0,0", "2,3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n0\n3\n");
  Outcome lex = cli({"opnorm", emit("lex-single"), "1,0"});
  EXPECT_EQ(lex.code, ordvec::cli::kInputError);
}

TEST(Cli, InputErrors) {
  std::string f = emit("delta-2");
  EXPECT_EQ(cli({"norm", f, "1,2,3"}).code, ordvec::cli::kInputError);
  EXPECT_EQ(cli({"norm", f, "1,x"}).code, ordvec::cli::kInputError);
  EXPECT_EQ(cli({"norm", "/nonexistent/file.json", "1,2"}).code, ordvec::cli::kInputError);
  EXPECT_EQ(cli({"norm", write_file("bad.json", "{\"dimension\":")}).code, ordvec::cli::kInputError);
  EXPECT_EQ(cli({"frobnicate"}).code, ordvec::cli::kInputError);
  EXPECT_EQ(cli({"gallery", "emit", "nope"}).code, ordvec::cli::kInputError);
  EXPECT_EQ(cli({"suite", "--mutant", "bogus"}).code, ordvec::cli::kInputError);
}

TEST(Cli, Gallery) {
  Outcome r = cli({"gallery", "list"});
  EXPECT_NE(r.out.find("f2-ball-3\n"), std::string::npos);
  Json j = Json::parse(cli({"gallery", "emit", "f2-ball-2"}).out);
  EXPECT_EQ(j["dimension"], 17);
  EXPECT_EQ(j["labels"][0], "e");
}

TEST(Cli, Suite) {
  Outcome ok = cli({"suite", "--check", "lex.counterexample", "--json", "--seed", "5"});
  EXPECT_EQ(ok.code, ordvec::cli::kSuccess);
  EXPECT_TRUE(Json::parse(ok.out)["passed"].get<bool>());
  EXPECT_NE(ok.err.find("wall time"), std::string::npos);
  Outcome bad = cli({"suite", "--check", "p_M.witness", "--mutant", "flip-witness"});
  EXPECT_EQ(bad.code, ordvec::cli::kPropertyViolation);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
  Outcome list = cli({"suite", "--list"});
  EXPECT_NE(list.out.find("coherence.duality"), std::string::npos);
}
