#include "slopes/commands.hpp"

#include "slopes/report.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace slopes;
using namespace slopes::cli;

TEST_CASE("report serialization") {
  VerificationReport rep;
  rep.claim = "demo";
  rep.add_param("k", 12L);
  rep.elapsed_ms = 5;
  CHECK(rep.passed());

  auto j = nlohmann::json::parse(to_json_line(rep));
  CHECK(j["claim"] == "demo");
  CHECK(j["params"]["k"] == "12");
  CHECK(j["outcome"] == "pass");

  rep.add_mismatch({{"what", "x"}});
  CHECK_FALSE(rep.passed());
  auto j2 = nlohmann::json::parse(to_json_line(rep));
  CHECK(j2["outcome"] == "fail");
  CHECK(j2["details"]["mismatches"].size() == 1);

  std::string csv = to_csv_line(rep);
  CHECK(csv.find("demo,fail") == 0);
}

TEST_CASE("default parallelism honors SLOPES_JOBS") {
  setenv("SLOPES_JOBS", "3", 1);
  CHECK(default_jobs() == 3);
  unsetenv("SLOPES_JOBS");
  CHECK(default_jobs() >= 1);
}

TEST_CASE("verify-classical command") {
  std::ostringstream out, err;

  VerifyClassicalOptions bad;
  bad.weights = {13};
  CHECK(cmd_verify_classical(bad, out, err) == kExitUsage);

  VerifyClassicalOptions one;
  one.weights = {12};
  one.jobs = 1;
  out.str("");
  CHECK(cmd_verify_classical(one, out, err) == kExitPass);
  auto j = nlohmann::json::parse(out.str());
  CHECK(j["claim"] == "classical-t2-polygon");
  CHECK(j["outcome"] == "pass");

  VerifyClassicalOptions range;
  range.from = 12;
  range.to = 40;
  range.jobs = 2;
  range.ordered = true;
  range.format = ReportFormat::csv;
  out.str("");
  CHECK(cmd_verify_classical(range, out, err) == kExitPass);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == csv_header());
  long rows = 0;
  long last_k = 0;
  while (std::getline(lines, line)) {
    ++rows;
    auto kpos = line.find("k=");
    REQUIRE(kpos != std::string::npos);
    long k = std::stol(line.substr(kpos + 2));
    CHECK(k > last_k);  // --ordered emits by weight
    last_k = k;
  }
  CHECK(rows == 15);

  VerifyClassicalOptions badstep;
  badstep.step = 3;
  CHECK(cmd_verify_classical(badstep, out, err) == kExitUsage);
}

TEST_CASE("slopes command") {
  std::ostringstream out, err;

  SlopesOptions zero;
  zero.count = 0;
  CHECK(cmd_slopes(zero, out, err) == kExitUsage);

  SlopesOptions w0;
  w0.weight = SlopesOptions::Weight::w0;
  w0.count = 4;
  out.str("");
  CHECK(cmd_slopes(w0, out, err) == kExitPass);
  std::string text = out.str();
  CHECK(text.find("1\t3\t3") != std::string::npos);
  CHECK(text.find("4\t15\t15") != std::string::npos);
  CHECK(text.find("stabilized at truncation") != std::string::npos);

  SlopesOptions p11;
  p11.weight = SlopesOptions::Weight::p11;
  p11.count = 3;
  out.str("");
  CHECK(cmd_slopes(p11, out, err) == kExitPass);
  text = out.str();
  CHECK(text.find("1\t1") != std::string::npos);
  CHECK(text.find("2\t2") != std::string::npos);
  CHECK(text.find("3\t3") != std::string::npos);

  SlopesOptions capped;
  capped.count = 4;
  capped.truncation_cap = 20;
  out.str("");
  CHECK(cmd_slopes(capped, out, err) == kExitFail);
}

TEST_CASE("suite command") {
  std::ostringstream out, err;

  SuiteOptions bogus;
  bogus.names = {"bogus"};
  CHECK(cmd_suite(bogus, out, err) == kExitUsage);

  SuiteOptions small;
  small.names = {"adb", "integrality", "minors", "selfadjoint", "nplemma", "appendix",
                 "ufcross"};
  small.adb_nmax = 10;
  small.integrality_nmax = 10;
  small.minors_nmax = 10;
  small.selfadjoint_nmax = 10;
  small.nplemma_nmax = 3;
  small.nplemma_seeds = 2;
  small.appendix_prec = 30;
  small.ufcross_kmax = 4;
  small.jobs = 2;
  out.str("");
  CHECK(cmd_suite(small, out, err) == kExitPass);
  std::istringstream lines(out.str());
  std::string line;
  long rows = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["outcome"] == "pass");
    ++rows;
  }
  CHECK(rows == 7);
}

TEST_CASE("qexp command") {
  std::ostringstream out, err;

  QexpOptions f;
  f.series = "f";
  f.terms = 6;
  CHECK(cmd_qexp(f, out, err) == kExitPass);
  std::string text = out.str();
  CHECK(text.find("0\t0\n") == 0);
  CHECK(text.find("6\t105504\n") != std::string::npos);

  QexpOptions theta;
  theta.series = "theta";
  theta.terms = 4;
  out.str("");
  CHECK(cmd_qexp(theta, out, err) == kExitPass);
  CHECK(out.str() == "0\t1\n1\t6\n2\t0\n3\t6\n4\t6\n");

  QexpOptions nope;
  nope.series = "nope";
  nope.terms = 3;
  CHECK(cmd_qexp(nope, out, err) == kExitUsage);

  QexpOptions to_file;
  to_file.series = "delta";
  to_file.terms = 3;
  to_file.output = "qexp_test_dump.txt";
  CHECK(cmd_qexp(to_file, out, err) == kExitPass);
  std::ifstream in(to_file.output);
  REQUIRE(in.good());
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == "0\t0\n1\t1\n2\t-24\n3\t252\n");
  in.close();
  std::remove(to_file.output.c_str());
}
