#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "schubert");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = schubert::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

schubert::Polynomial from_json(const nlohmann::json& arr) {
  std::vector<schubert::Integer> c;
  for (const auto& x : arr) c.emplace_back(x.get<long long>());
  return schubert::Polynomial(c);
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, Poincare) {
  EXPECT_EQ(run({"poincare", "--k", "1", "--l", "2"}).out, "1 + t^2\n");
  EXPECT_EQ(run({"poincare", "--k", "2", "--l", "4"}).out, "1 + t^2 + 2*t^4 + t^6 + t^8\n");
  const auto empty = run({"poincare", "--k", "3", "--l", "2"});
  EXPECT_EQ(empty.out, "0\n");
  EXPECT_EQ(empty.code, 0);
}

TEST(Cli, PoincareJsonRoundTrip) {
  for (int l = 0; l <= 9; ++l)
    for (int k = 0; k <= l + 1; ++k) {
      const auto text = run({"poincare", "--k", std::to_string(k), "--l", std::to_string(l)});
      const auto json = run({"poincare", "--k", std::to_string(k), "--l", std::to_string(l), "--format", "json"});
      const auto doc = nlohmann::json::parse(json.out);
      EXPECT_EQ(to_string(from_json(doc["poincare"])) + "\n", text.out);
    }
}

TEST(Cli, IhTable) {
  const auto r = run({"ih", "--i", "2", "--j", "4", "--k", "4", "--l", "7"});
  EXPECT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 3u);
  EXPECT_EQ(ls[0].rfind("I_1 = 1 ", 0), 0u) << ls[0];
  EXPECT_NE(ls[2].find("m_3 = 10"), std::string::npos);
  for (const auto& line : ls) EXPECT_NE(line.find("closed form agrees"), std::string::npos);
}

TEST(Cli, IhSingleEntry) {
  const auto r = run({"ih", "--i", "2", "--j", "4", "--k", "4", "--l", "7", "--p", "3"});
  EXPECT_EQ(r.code, 0);
  const auto expected = to_string(schubert::gauss(2, 3) * schubert::gauss(4, 6));
  EXPECT_EQ(r.out.rfind("I_3 = " + expected + " ", 0), 0u) << r.out;
  EXPECT_EQ(lines(r.out).size(), 1u);
}

TEST(Cli, IhJsonRoundTrip) {
  const auto text = lines(run({"ih", "--i", "2", "--j", "5", "--k", "5", "--l", "9"}).out);
  const auto doc = nlohmann::json::parse(run({"ih", "--i", "2", "--j", "5", "--k", "5", "--l", "9", "--format", "json"}).out);
  ASSERT_EQ(doc["entries"].size(), text.size());
  for (std::size_t a = 0; a < text.size(); ++a) {
    const auto& e = doc["entries"][a];
    const std::string prefix = "I_" + std::to_string(e["p"].get<int>()) + " = " + to_string(from_json(e["ih"])) + " ";
    EXPECT_EQ(text[a].rfind(prefix, 0), 0u);
    EXPECT_TRUE(e["closed_form_match"].get<bool>());
  }
}

TEST(Cli, IhRejectsNonGeometric) {
  EXPECT_EQ(run({"ih", "--i", "3", "--j", "2", "--k", "4", "--l", "9"}).code, 2);
  EXPECT_EQ(run({"ih", "--i", "0", "--j", "5", "--k", "3", "--l", "8"}).code, 2);
  EXPECT_EQ(run({"ih", "--i", "2", "--j", "4", "--k", "4", "--l", "7", "--p", "4"}).code, 2);
}

TEST(Cli, VerifyGlobal) {
  const auto r = run({"verify-global", "--i", "2", "--j", "4", "--k", "4", "--l", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("holds"), std::string::npos);
  EXPECT_EQ(run({"verify-global", "--i", "3", "--j", "2", "--k", "4", "--l", "9"}).code, 2);
}

TEST(Cli, VerifyLocalAllPairs) {
  const auto r = run({"verify-local", "--i", "2", "--j", "4", "--k", "4", "--l", "7", "--all-pairs", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["verdicts"].size(), 3u);
  for (const auto& v : doc["verdicts"]) EXPECT_TRUE(v["holds"].get<bool>());
  EXPECT_TRUE(doc["all_hold"].get<bool>());
}

TEST(Cli, VerifyLocalFlags) {
  EXPECT_EQ(run({"verify-local", "--i", "2", "--j", "4", "--k", "4", "--l", "7", "--p", "3", "--q", "2"}).code, 0);
  EXPECT_EQ(run({"verify-local", "--i", "2", "--j", "4", "--k", "4", "--l", "7"}).code, 2);
  EXPECT_EQ(run({"verify-local", "--i", "2", "--j", "4", "--k", "4", "--l", "7", "--p", "3"}).code, 2);
  EXPECT_EQ(run({"verify-local", "--i", "2", "--j", "4", "--k", "4", "--l", "7", "--p", "2", "--q", "3"}).code, 2);
  EXPECT_EQ(run({"verify-local", "--i", "2", "--j", "4", "--k", "4", "--l", "7", "--p", "5", "--q", "1"}).code, 2);
}

TEST(Cli, VerifyAppendix) {
  EXPECT_EQ(run({"verify-appendix-ki2", "--i", "2", "--j", "5", "--c", "3"}).code, 0);
  EXPECT_EQ(run({"verify-appendix-kc2", "--i", "3", "--j", "5", "--r", "0"}).code, 0);
  const auto zero = run({"verify-appendix-ki2", "--i", "1", "--j", "2", "--c", "4", "--h-rule", "zero"});
  EXPECT_EQ(zero.code, 1);
  EXPECT_NE(zero.out.find("FAILS"), std::string::npos);
  EXPECT_EQ(run({"verify-appendix-ki2", "--i", "1", "--j", "2", "--c", "1"}).code, 2);
  EXPECT_EQ(run({"verify-appendix-kc2", "--i", "1", "--j", "2", "--r", "1"}).code, 2);
}

TEST(Cli, SweepGlobalJson) {
  const auto r = run({"sweep", "--identity", "global", "--i", "1:4", "--r", "2:4", "--j-max", "10", "--format", "json",
                      "--jobs", "2"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["summary"]["failed"], 0);
  EXPECT_GT(doc["summary"]["examined"].get<int>(), 0);
  EXPECT_TRUE(doc["summary"]["wall_ms"].is_number());
  EXPECT_NE(r.err.find("0 failed"), std::string::npos);
}

TEST(Cli, SweepAppendixCsv) {
  const auto r = run({"sweep", "--identity", "appendix-ki2", "--c", "2:6", "--i", "1:8", "--j", "1:12"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 1u + 5u * 8u * 12u);
}

TEST(Cli, SweepFailureExitsOne) {
  const auto r = run({"sweep", "--identity", "appendix-ki2", "--c", "2:6", "--i", "1:8", "--j", "1:12", "--h-rule",
                      "zero", "--cap", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("counterexample"), std::string::npos);
  EXPECT_NE(r.err.find("more counterexamples not shown"), std::string::npos);
}

TEST(Cli, SweepCEqualsR) {
  const auto r = run({"sweep", "--identity", "global", "--r", "2:5", "--c-equals-r", "--i", "1:5", "--j-max", "12"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(run({"sweep", "--identity", "global", "--r", "2:5", "--c-equals-r", "--mode", "geometric", "--i", "1:5",
                 "--j-max", "12"})
                .code,
            2);
}

TEST(Cli, SweepWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "schubert_cli_test.csv";
  const auto r = run({"sweep", "--identity", "local", "--i", "2:3", "--r", "2:3", "--j-max", "8", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "identity,i,j,k,l,r,c,p,q,class,holds,lhs_degree,rhs_degree,lhs_at_1,rhs_at_1");
  std::filesystem::remove(path);
  EXPECT_EQ(run({"sweep", "--identity", "global", "--i", "1:2", "--r", "2:2", "--j-max", "6", "--out",
                 "/nonexistent/dir/report.csv"})
                .code,
            2);
}

TEST(Cli, SweepRejectsBadRanges) {
  EXPECT_EQ(run({"sweep", "--identity", "global", "--i", "3:2", "--r", "2:4", "--j-max", "10"}).code, 2);
  EXPECT_EQ(run({"sweep", "--identity", "global", "--i", "a:2", "--r", "2:4", "--j-max", "10"}).code, 2);
  EXPECT_EQ(run({"sweep", "--identity", "global", "--i", "1:2", "--j-max", "10"}).code, 2);
  EXPECT_EQ(run({"sweep", "--identity", "global", "--i", "1:2", "--r", "2:3"}).code, 2);
  EXPECT_EQ(run({"sweep", "--identity", "appendix-ki2", "--i", "1:2", "--j", "1:3"}).code, 2);
  EXPECT_EQ(run({"sweep", "--identity", "appendix-ki2", "--i", "1:2", "--j", "1:3", "--c", "2:3", "--r", "1:2"}).code, 2);
  EXPECT_EQ(run({"sweep", "--identity", "global", "--i", "1:2", "--r", "2:3", "--j-max", "8", "--jobs", "0"}).code, 2);
  EXPECT_EQ(run({"sweep", "--identity", "nope", "--i", "1:2", "--r", "2:3", "--j-max", "8"}).code, 2);
}

TEST(Cli, JobsEnvironmentFallback) {
  ::setenv("SCHUBERT_JOBS", "3", 1);
  EXPECT_EQ(schubert::cli::resolve_jobs(std::nullopt), 3u);
  EXPECT_EQ(schubert::cli::resolve_jobs(5), 5u);
  ::setenv("SCHUBERT_JOBS", "many", 1);
  EXPECT_THROW(schubert::cli::resolve_jobs(std::nullopt), schubert::cli::UsageError);
  ::unsetenv("SCHUBERT_JOBS");
  EXPECT_GE(schubert::cli::resolve_jobs(std::nullopt), 1u);
}

TEST(Cli, ExitCodeContract) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"sweep", "--help"}).code, 0);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"poincare", "--k", "x", "--l", "2"}).code, 2);
  EXPECT_EQ(run({"poincare", "--k", "1"}).code, 2);
  EXPECT_EQ(run({"poincare", "--k", "1", "--l", "2", "--format", "xml"}).code, 2);
}
