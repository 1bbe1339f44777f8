#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "leroy/leroy_series.hpp"

using namespace leroy;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "leroy");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

double cell(const std::vector<std::string>& row, std::size_t i) { return std::stod(row.at(i)); }

}  // namespace

TEST_CASE("eval: e to thirty digits") {
  Run r = run({"eval", "--alpha", "1", "--beta", "1", "--gamma", "1", "--z-re", "1", "--digits", "30", "--method", "series"});
  REQUIRE(r.code == 0);
  CHECK(r.err.empty());
  json j = json::parse(r.out);
  CHECK(j["schema"] == "leroy-report/1");
  std::string re = j["value"]["re"];
  CHECK(re.rfind("2.71828182845904523536", 0) == 0);
  CHECK(j["value"]["im"] == "0");
  CHECK(j["input"]["method"] == "series");
  CHECK(j["abs_err_estimate"].is_string());
}

TEST_CASE("eval: 1/pi at the origin") {
  Run r = run({"eval", "--beta", "0.5", "--gamma", "2", "--z-re", "0"});
  REQUIRE(r.code == 0);
  std::string re = json::parse(r.out)["value"]["re"];
  CHECK(re.rfind("3.18309886183790671", 0) == 0);
}

TEST_CASE("eval: series and asymptotic agree far out on the negative axis") {
  Run s = run({"eval", "--alpha", "0.6", "--beta", "0.8", "--gamma", "3", "--z-re", "-640", "--digits", "30"});
  Run a = run({"eval", "--alpha", "0.6", "--beta", "0.8", "--gamma", "3", "--z-re", "-640", "--digits", "30", "--method",
               "asym", "--K", "10"});
  REQUIRE(s.code == 0);
  REQUIRE(a.code == 0);
  double fs = std::stod(json::parse(s.out)["value"]["re"].get<std::string>());
  double fa = std::stod(json::parse(a.out)["value"]["re"].get<std::string>());
  CHECK(std::abs(fs - fa) / std::abs(fs) <= 1e-2);
  CHECK(json::parse(a.out)["diagnostics"]["regime"] == "algebraic");
}

TEST_CASE("eval: contour methods") {
  Run r = run({"eval", "--alpha", "0.6", "--beta", "0.8", "--gamma", "3", "--z-re", "2", "--z-im", "1", "--digits", "12",
               "--method", "contour-plus"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["diagnostics"]["method"] == "contour");
  CHECK(j["diagnostics"]["branch"] == "principal");
  Run bad = run({"eval", "--z-re", "3", "--method", "contour-minus"});
  CHECK(bad.code == 3);
  CHECK(bad.out.empty());
}

TEST_CASE("eval: records round-trip bit for bit") {
  std::vector<std::string> args{"eval", "--alpha", "0.7", "--beta", "0.9", "--gamma", "2.5", "--z-re", "-3.25", "--z-im",
                                "1.5", "--digits", "25"};
  Run r = run(args);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  PrecisionConfig pc;
  pc.target_digits = 25;
  const Precision wp = pc.working();
  BigReal re = BigReal::parse(j["value"]["re"].get<std::string>(), wp);
  BigReal im = BigReal::parse(j["value"]["im"].get<std::string>(), wp);
  Precision zp = pc.working(10);
  BigComplex z(BigReal::parse("-3.25", zp), BigReal::parse("1.5", zp));
  EvalResult again = eval_series(Params::parse("0.7", "0.9", "2.5"), z, pc);
  CHECK(again.value.re() == re);
  CHECK(again.value.im() == im);
  CHECK(run(args).out == r.out);
}

TEST_CASE("exit codes for bad input") {
  CHECK(run({}).code == 2);
  CHECK(run({"eval", "--alpha", "-1"}).code == 2);
  CHECK(run({"eval", "--alpha", "abc"}).code == 2);
  CHECK(run({"eval", "--method", "magic"}).code == 2);
  CHECK(run({"eval", "--digits", "0"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"eval", "--max-terms", "5", "--z-re", "30"}).code == 3);
  CHECK(run({"eval", "--z-re", "2", "--method", "asym"}).code == 3);
  CHECK(run({"eval", "--gamma", "2.5", "--z-re", "-2", "--method", "asym"}).code == 3);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("LEROY_DIGITS sets the default, the flag wins") {
  setenv("LEROY_DIGITS", "12", 1);
  json a = json::parse(run({"eval", "--z-re", "1"}).out);
  json b = json::parse(run({"eval", "--z-re", "1", "--digits", "20"}).out);
  unsetenv("LEROY_DIGITS");
  CHECK(a["input"]["digits"] == 12);
  CHECK(b["input"]["digits"] == 20);
}

TEST_CASE("figure 1: header, row count, shrinking error envelope") {
  Run r = run({"figure", "--figure", "1", "--t-min", "5", "--t-max", "100", "--points", "50", "--digits", "12"});
  REQUIRE(r.code == 0);
  auto rows = csv(r.out);
  REQUIRE(rows.size() == 51);
  CHECK(r.out.rfind("t,F_series,F_asym,rel_diff\n", 0) == 0);
  double near = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) near = std::max(near, cell(rows[i], 3));
  // the oscillating pair dies out only beyond t ~ 150 for this preset
  auto window_max = [](const std::string& lo, const std::string& hi) {
    Run w = run({"figure", "--figure", "1", "--t-min", lo, "--t-max", hi, "--points", "15", "--digits", "12"});
    double m = 0;
    auto rs = csv(w.out);
    for (std::size_t i = 1; i < rs.size(); ++i) m = std::max(m, cell(rs[i], 3));
    return m;
  };
  double mid = window_max("150", "500"), far = window_max("500", "1000");
  CHECK(mid < near);
  CHECK(far < mid);
  CHECK(far < 1e-3);
}

TEST_CASE("figure 3: oscillation amplitude grows") {
  // m + 1 - 2 m beta = 1: the envelope grows like t^{1/4}; windows span several periods (~ pi sqrt t)
  auto amplitude = [](const std::string& lo, const std::string& hi) {
    Run r = run({"figure", "--figure", "3", "--t-min", lo, "--t-max", hi, "--points", "60", "--digits", "12"});
    REQUIRE(r.code == 0);
    double m = 0;
    auto rows = csv(r.out);
    for (std::size_t i = 1; i < rows.size(); ++i) m = std::max(m, std::abs(cell(rows[i], 1)));
    return m;
  };
  double early = amplitude("100", "200"), late = amplitude("1500", "1900");
  CHECK(late > 1.4 * early);
}

TEST_CASE("figure 5: exponential envelope growth") {
  Run r = run({"figure", "--figure", "5", "--t-min", "100", "--t-max", "100000", "--points", "4", "--digits", "12"});
  REQUIRE(r.code == 0);
  auto rows = csv(r.out);
  REQUIRE(rows.size() == 5);
  // log-spaced t = 1e2 .. 1e5
  CHECK(std::abs(cell(rows[4], 1)) > 1e12 * std::abs(cell(rows[2], 1)));
  for (std::size_t i = 2; i < rows.size(); ++i) CHECK(cell(rows[i], 3) < 1e-2);
}

TEST_CASE("figure: bad range") {
  CHECK(run({"figure", "--figure", "1", "--t-min", "10", "--t-max", "5"}).code == 2);
  CHECK(run({"figure", "--figure", "1", "--t-min", "-1"}).code == 2);
  CHECK(run({"figure", "--figure", "9"}).code == 2);
  CHECK(run({"figure", "--gamma", "2.5"}).code == 2);
}

TEST_CASE("selftest: extension suite") {
  Run r = run({"selftest", "--suite", "extension"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["schema"] == "leroy-report/1");
  REQUIRE(j["suites"].size() == 1);
  CHECK(j["suites"][0]["name"] == "extension");
  CHECK(j["suites"][0]["points"].size() == 10);
  CHECK(std::stod(j["suites"][0]["max_residual"].get<std::string>()) <= 1e-12);
  CHECK(run({"selftest", "--suite", "bogus"}).code == 2);
}

TEST_CASE("order-type") {
  Run r = run({"order-type", "--alpha", "0.5", "--gamma", "4", "--n-max", "2000"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(std::abs(std::stod(j["rho_est"].get<std::string>()) - 0.5) < 0.025);
  CHECK(j["rho_target"] == "0.5");
  CHECK(j["convergence_table"].size() == 4);
  CHECK(run({"order-type", "--n-max", "3"}).code == 2);
}

TEST_CASE("laplace-verify single point") {
  Run r = run({"laplace-verify", "--alpha", "1", "--beta", "1", "--gamma", "2", "--lambda", "-1", "--s-re", "1",
               "--digits", "12"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(std::stod(j["checks"][0]["relative_residual"].get<std::string>()) < 1e-8);
  std::string rhs = j["checks"][0]["rhs"]["re"];
  CHECK(rhs.rfind("3.67879441171", 0) == 0);
  CHECK(run({"laplace-verify", "--gamma", "2", "--s-re", "-1"}).code == 3);
}

TEST_CASE("conjecture-probe window") {
  CHECK(run({"conjecture-probe", "--beta", "2", "--gamma", "1"}).code == 2);
  Run ok = run({"conjecture-probe", "--beta", "1.5", "--gamma", "0.5", "--t-min", "2", "--t-max", "4", "--points", "2"});
  CHECK(ok.code == 0);
  Run r = run({"conjecture-probe", "--alpha", "0.7", "--beta", "0.9", "--gamma", "1.5", "--t-min", "100", "--t-max",
               "1000", "--points", "3", "--digits", "10"});
  REQUIRE(r.code == 0);
  auto rows = csv(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"t", "F", "ratio"});
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][1] != "NA");
}
