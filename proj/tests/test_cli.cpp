#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using trace_census::cli::run_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("census csv") {
  const auto r = run({"census", "--n-max", "4"});
  CHECK(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 3);
  CHECK(l[0] == "N,psi_ev,psi_odd,psi,phi,main_term,residual,residual_over_N175");
  CHECK(l[1].rfind("3,1,0,2,2,", 0) == 0);
  CHECK(l[2].rfind("4,3,1,8,6,", 0) == 0);
  CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("census json") {
  const auto r = run({"census", "--n-max", "3", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["psi"] == 2);
  CHECK(j[0]["N"] == 3);
  CHECK(j[0].contains("residual_over_N175"));
}

TEST_CASE("usage errors exit 2") {
  auto r = run({"census", "--n-max", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("n-max must be ≥ 3") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"census"}).code == 2);
  CHECK(run({"census", "--n-max", "ten"}).code == 2);
  CHECK(run({"census", "--n-max", "5", "--format", "xml"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"figures", "--n-max", "2"}).code == 2);
  CHECK(run({"quadratics"}).code == 2);
  CHECK(run({"quadratics", "--trace-bound", "5", "--x-bound", "2"}).code == 2);
  CHECK(run({"verify", "--tol", "0"}).code == 2);
  CHECK(run({"census", "--n-max", "5", "--threads", "0"}).code == 2);
}

TEST_CASE("runtime errors exit 1") {
  const auto r = run({"census", "--n-max", "5", "--out", "/nonexistent-dir/x.csv"});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("census") != std::string::npos);
}

TEST_CASE("figures") {
  const auto r = run({"figures", "--n-max", "5"});
  CHECK(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 4);
  CHECK(l[0] == "N,s_n,c_n,s_minus_c,fig2");
  CHECK(l[2].rfind("4,2,", 0) == 0);
  const auto j = nlohmann::json::parse(run({"figures", "--n-max", "3", "--format", "json"}).out);
  CHECK(j[0]["fig2"].get<double>() == doctest::Approx(-0.36784).epsilon(1e-4));
}

TEST_CASE("quadratics") {
  auto r = run({"quadratics", "--trace-bound", "3"});
  CHECK(r.code == 0);
  auto l = lines(r.out);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == "period,per,eper,Delta,u0,v0,rho");
  CHECK(l[1].rfind("1,1,2,5,3,1,1.924", 0) == 0);

  r = run({"quadratics", "--trace-bound", "4"});
  CHECK(lines(r.out).size() == 4);

  r = run({"quadratics", "--trace-bound", "2"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 1);

  r = run({"quadratics", "--x-bound", "2.7"});  // traces < 2 cosh(1.35) = 4.1
  CHECK(lines(r.out).size() == 4);
}

TEST_CASE("output is byte-identical across thread counts and goes to --out") {
  const auto one = run({"census", "--n-max", "700"});
  const auto four = run({"census", "--n-max", "700", "--threads", "4"});
  CHECK(one.out == four.out);

  const std::string path = "cli_test_out.csv";
  CHECK(run({"census", "--n-max", "700", "--out", path}).code == 0);
  std::ifstream f(path, std::ios::binary);
  const std::string body((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(body == one.out);
  std::remove(path.c_str());
}

TEST_CASE("verify passes at small scale and fails with an injected fault") {
  auto r = run({"verify", "--n-max", "600", "--strict"});
  CHECK(r.code == 0);
  CHECK(r.out.find("census.brute_force") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  r = run({"verify", "--n-max", "600", "--inject-c2-offset", "0.2"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL  asymptotic.psi_ratio ") != std::string::npos);

  r = run({"verify", "--n-max", "600", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.size() > 10);
}
