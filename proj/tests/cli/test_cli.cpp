#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "dioph");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = dioph::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("cf of sqrt(11)-3") {
  const auto r = invoke({"cf", "--x", "sqrt(11)-3", "--n", "4"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 6);
  CHECK(l[0] == "k,a_k,p_k,q_k,error,lower_bound,upper_bound");
  CHECK(l[2].rfind("1,3,1,3,", 0) == 0);
  CHECK(l[3].rfind("2,6,6,19,", 0) == 0);
  CHECK(l[4].rfind("3,3,19,60,", 0) == 0);
  CHECK(l[5].rfind("4,6,120,379,", 0) == 0);
}

TEST_CASE("fracpart sum of golden at 10^6") {
  const auto r = invoke({"sum", "--kind", "fracpart", "--x", "golden", "--m", "1000000", "--digits", "12"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).at(1).rfind("1000000,0.941799", 0) == 0);
}

TEST_CASE("output is byte-identical across runs and job counts") {
  const std::vector<std::string> a{"sum", "--x", "pi", "--sweep", "1000:20000:1000", "--normalize", "mlogm"};
  auto b = a;
  b.insert(b.end(), {"--jobs", "3"});
  const auto r1 = invoke(a), r2 = invoke(a), r3 = invoke(b);
  CHECK(r1.out == r2.out);
  CHECK(r1.out == r3.out);
  CHECK(lines(r1.out).size() == 21);
}

TEST_CASE("json output") {
  const auto r = invoke({"partition", "100", "--out", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j[0]["p"] == "190569292");
  CHECK(invoke({"partition", "100", "--format", "json"}).out == r.out);
}

TEST_CASE("--out to a file") {
  const auto path = std::filesystem::temp_directory_path() / "dioph_cli_out.csv";
  const auto r = invoke({"farey", "--N", "5", "--summary", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  std::filesystem::remove(path);
  CHECK(header == "N,Phi,franel_landau,franel_landau_decimal,mertens_ratio");
  CHECK(row.rfind("5,10,11/30,", 0) == 0);
}

TEST_CASE("'A as B' must agree") {
  CHECK(invoke({"cf", "--x", "golden as (sqrt(5)-1)/2", "--n", "3"}).code == 0);
  const auto bad = invoke({"cf", "--x", "pi as 355/113", "--n", "3"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("differ") != std::string::npos);
}

TEST_CASE("errors exit 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"nosuch"}).code == 2);
  CHECK(invoke({"cf", "--x", "sqrt("}).code == 2);
  CHECK(invoke({"cf"}).code == 2);
  CHECK(invoke({"--precision", "8", "cf", "--x", "pi"}).code == 2);
  CHECK(invoke({"sum", "--x", "1/7", "--m", "100"}).code == 2);
  CHECK(invoke({"goldbach", "--n", "10"}).code == 2);
  CHECK(invoke({"sum", "--x", "pi", "--sweep", "10:1:1"}).code == 2);
}

TEST_CASE("help exits 0") { CHECK(invoke({"--help"}).code == 0); }

TEST_CASE("every subcommand runs") {
  const std::vector<std::vector<std::string>> cmds{
      {"bern", "--k", "4", "--x", "golden"},
      {"watson", "--n", "1000"},
      {"disc", "--x", "golden", "--N", "100", "--et-bracket", "100"},
      {"disc", "--x", "golden", "--N", "100", "--star"},
      {"prod", "--x", "golden", "--n", "1000"},
      {"prod", "--kind", "twosin", "--x", "golden", "--sweep", "10:30:10"},
      {"prod", "--kind", "fibonacci", "--n", "20"},
      {"radius", "--x", "golden", "--n", "20"},
      {"radius", "--constructed", "1", "--n", "8"},
      {"farey", "--N", "7"},
      {"reciprocity", "--p", "5", "--q", "13"},
      {"reciprocity", "--upto", "30"},
      {"goldbach", "--n", "1001", "--n", "1003", "--P", "1000"},
      {"divisor", "--n", "10000"},
  };
  for (const auto& c : cmds) {
    const auto r = invoke(c);
    CAPTURE(c[0]);
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() >= 2);
  }
}

TEST_CASE("watson S_1000 digits") {
  const auto r = invoke({"watson", "--n", "1000", "--digits", "10"});
  CHECK(lines(r.out).at(1) == "1000,0,4477.593932,4477.594019,-8.726645255e-05");
}

TEST_CASE("verify paper-values exits 0") {
  const auto r = invoke({"verify", "--suite", "paper-values"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify with a bad suite name exits 2") { CHECK(invoke({"verify", "--suite", "nope"}).code == 2); }
