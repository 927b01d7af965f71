#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "bsq/cli.hpp"
#include "bsq/transforms.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace bsq;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) {
    if (!l.empty()) v.push_back(l);
  }
  return v;
}

}  // namespace

TEST_CASE("eval prints a CSV header and one row") {
  const Run r = run({"eval", "--nu", "0.5", "--s", "1", "--format", "csv"});
  CHECK(r.code == kExitOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0].rfind("nu,s,value", 0) == 0);
}

TEST_CASE("JSON values round trip bit-exactly") {
  for (const char* route : {"auto", "direct"}) {
    const Run r = run({"eval", "--nu", "0.3", "--s", "1.7", "--weight", "invquad", "--route", route, "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const double v = nlohmann::json::parse(r.out).at("value").get<double>();
    const Route rt = std::string(route) == "auto" ? Route::automatic : Route::direct_quadrature;
    CHECK(v == t_transform(0.3, RadialFunction::inverse_quadratic(), 1.7, QuadSpec{}, rt).value);
  }
}

TEST_CASE("CSV values round trip bit-exactly") {
  const Run r = run({"hankel", "--nu", "0.7", "--rho", "2.25", "--weight", "invquad", "--format", "csv"});
  REQUIRE(r.code == kExitOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  std::vector<std::string> head, row;
  for (auto [src, dst] : {std::pair{&ls[0], &head}, std::pair{&ls[1], &row}}) {
    std::istringstream in(*src);
    for (std::string cell; std::getline(in, cell, ',');) dst->push_back(cell);
  }
  std::size_t col = 0;
  while (col < head.size() && head[col] != "value") ++col;
  REQUIRE(col < row.size());
  CHECK(std::stod(row[col]) == hankel(0.7, RadialFunction::inverse_quadratic(), 2.25).value);
}

TEST_CASE("sweeps produce one row per point") {
  const Run r = run({"sweep", "--over", "s", "--from", "0.1", "--to", "10", "--points", "50", "--log", "--nu", "1",
                     "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out).size() == 51);
  const Run j = run({"sweep", "--over", "nu", "--from", "0", "--to", "3", "--points", "7", "--s", "1", "--quantity",
                     "I", "--format", "json"});
  REQUIRE(j.code == kExitOk);
  const auto arr = nlohmann::json::parse(j.out);
  REQUIRE(arr.size() == 7);
  for (std::size_t i = 1; i < arr.size(); ++i) CHECK(arr[i].at("value").get<double>() < arr[i - 1].at("value").get<double>());
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"verify", "--suite", "identity", "--seed", "3", "--format", "json"};
  const Run a = run(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == run(args).out);
}

TEST_CASE("constant reports the closed form and its relative error") {
  const Run r = run({"constant", "--family", "A", "--d", "3", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::fabs(j.at("value").get<double>() - std::numbers::pi) < 1e-9);
  CHECK(j.at("rel_error").get<double>() < 1e-9);
}

TEST_CASE("the kernel subcommand evaluates K and U") {
  CHECK(run({"kernel", "--mu", "1", "--nu", "0.5", "--s", "1", "--r", "3"}).code == kExitOk);
  CHECK(run({"kernel", "--mu", "0.5", "--nu", "0.5", "--s", "1"}).code == kExitOk);
  CHECK(run({"kernel", "--mu", "1", "--nu", "-0.5", "--s", "1"}).code == kExitOk);
}

TEST_CASE("usage and domain errors exit with code 1") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"eval", "--nu", "0.5"}).code == kExitUsage);
  CHECK(run({"eval", "--nu", "-3", "--s", "1"}).code == kExitUsage);
  CHECK(run({"eval", "--nu", "0.5", "--s", "1", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"verify", "--suite", "nope"}).code == kExitUsage);
  const Run e = run({"eval", "--nu", "-3", "--s", "1"});
  CHECK(e.err.find("error:") != std::string::npos);
  CHECK(run({"eval", "--help"}).code == kExitOk);
}

TEST_CASE("--out writes the table to a file") {
  const std::string path = "test_cli_out.csv";
  const Run r = run({"eval", "--nu", "1", "--s", "2", "--format", "csv", "--out", path});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("nu,s,value", 0) == 0);
  std::remove(path.c_str());
  CHECK(run({"eval", "--nu", "1", "--s", "2", "--out", "/nonexistent/dir/x.csv"}).code == kExitUsage);
}

TEST_CASE("weights are read from table files") {
  const std::string path = "test_cli_table.txt";
  {
    std::ofstream f(path);
    f << "# integrability 1 -2\n";
    for (int i = 0; i <= 400; ++i) {
      const double r = 0.025 * i;
      f << r << ' ' << std::exp(-0.5 * r * r) << '\n';
    }
  }
  const Run r = run({"eval", "--nu", "0.5", "--s", "1", "--weight", "table:" + path, "--format", "json"});
  std::remove(path.c_str());
  REQUIRE(r.code == kExitOk);
  const double v = nlohmann::json::parse(r.out).at("value").get<double>();
  CHECK(std::fabs(v - 1.0836965135574559) < 1e-3);
}
