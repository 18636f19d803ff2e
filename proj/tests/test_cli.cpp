#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using frobcov::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "frobcov");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, Frobenius) {
  EXPECT_EQ(call({"frobenius", "6", "9", "20"}).out, "43\n");
  EXPECT_EQ(call({"frobenius", "2", "3"}).out, "1\n");
  auto t = call({"frobenius", "3", "4", "5", "--table"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("r,N_r\n0,3\n1,4\n2,5\n"), std::string::npos);
  EXPECT_NE(t.out.find("# frobcov "), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({"frobenius", "4", "6"}).code, 2);
  EXPECT_EQ(call({"frobenius", "1", "6"}).code, 2);
  EXPECT_EQ(call({"nonsense"}).code, 64);
  EXPECT_EQ(call({}).code, 64);
  EXPECT_EQ(call({"psi", "--bogus"}).code, 64);
  EXPECT_EQ(call({"psi", "--source", "elsewhere"}).code, 64);
  EXPECT_EQ(call({"rho", "--basis", "1,2;2,4"}).code, 2);
  EXPECT_EQ(call({"rho", "--basis", "1,0,0;0,1,0;0,0,1"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, PsiDeterministic) {
  auto a = call({"psi", "--source", "haar2d", "--count", "100", "--seed", "7"});
  auto b = call({"psi", "--source", "haar2d", "--count", "100", "--seed", "7"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("# seed: 7\n"), std::string::npos);
  EXPECT_NE(a.out.find("R,survival\n"), std::string::npos);
  auto c = call({"psi", "--source", "haar2d", "--count", "100", "--seed", "8"});
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, OutputFileCarriesMetadata) {
  const std::string path = ::testing::TempDir() + "frobcov_cli_test.csv";
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"sample-lattice", "--dim", "2", "--method", "haar2d", "--count", "5", "--seed", "3", "--out", path},
           {"farey", "--Q", "5", "--dim", "3", "--out", path},
           {"count-primitive", "--T", "20", "--dim", "3", "--out", path},
           {"bridge", "--T", "10", "--dim", "3", "--out", path},
           {"psi", "--source", "frobenius", "--T", "20", "--out", path}}) {
    auto r = call(args);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    const std::string text = slurp(path);
    EXPECT_EQ(text.rfind("# frobcov 1.0.0\n", 0), 0u) << args[0];
    EXPECT_NE(text.find("# seed: "), std::string::npos) << args[0];
    auto again = call(args);
    EXPECT_EQ(slurp(path), text) << args[0];
  }
  std::remove(path.c_str());
}

TEST(Cli, JsonOutputs) {
  auto b = call({"bridge", "3", "4", "5"});
  ASSERT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("\"rho_w\": 14"), std::string::npos);
  EXPECT_NE(b.out.find("\"F\": 2"), std::string::npos);
  EXPECT_NE(b.out.find("\"seed\""), std::string::npos);
  auto r = call({"rho", "--basis", "1,0;0,1", "--exact"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"rho\": \"2\""), std::string::npos);
  EXPECT_NE(r.out.find("\"verified\": true"), std::string::npos);
  auto one = call({"rho", "--basis", "3"});
  EXPECT_NE(one.out.find("\"rho_value\": 3.0"), std::string::npos);
  auto p = call({"psi", "--source", "haar2d", "--count", "50", "--format", "json", "--r-steps", "3"});
  EXPECT_NE(p.out.find("\"curve\""), std::string::npos);
  auto c = call({"compare", "--source", "haar2d", "--against", "haar2d", "--count", "200"});
  EXPECT_EQ(c.out, "0\n");
}

TEST(Cli, BridgeBatchColumns) {
  auto r = call({"bridge", "--T", "6", "--dim", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("a1,a2,a3,F,rho_w,scaled\n2,2,3,1,8,"), std::string::npos);
}
