#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oplus/cli.hpp"
#include "oplus/exact.hpp"
#include "oplus/format.hpp"
#include "oplus/quadext.hpp"

using json = nlohmann::json;
using namespace oplus;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args) {
  Run r = run_cli(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("solve 11 5 machine output carries the exact laws") {
  json doc = run_json({"solve", "11", "5", "--json"});
  CHECK(doc["command"] == "solve");
  CHECK(doc["inputs"]["u"] == "11");
  CHECK(doc["result"]["discriminant"] == "121");
  CHECK(doc["result"]["true_over_Q"] == true);
  CHECK(doc["result"]["field_radicand"].is_null());

  auto laws = doc["result"]["laws"];
  REQUIRE(laws.size() == 2);
  CHECK(laws[0]["kind"] == "bilinear");
  CHECK(laws[0]["a"] == "24");
  CHECK(laws[0]["b"] == "-39");
  CHECK(laws[0]["c"] == "65");
  CHECK(laws[0]["polynomial"] == "24*x*y - 39*x - 39*y + 65");
  CHECK(laws[0]["identity"] == "5/3");
  CHECK(laws[0]["annihilator"] == "13/8");
  CHECK(laws[1]["a"] == "2");
}

TEST_CASE("solve 11 22 round-trips quadratic coefficients exactly") {
  json doc = run_json({"solve", "11", "22", "--json"});
  CHECK(doc["result"]["true_over_Q"] == false);
  CHECK(doc["result"]["field_radicand"] == "89");

  auto laws = doc["result"]["laws"];
  REQUIRE(laws.size() == 2);
  Int d(89);
  QuadExt a_plus = parse_quadext(laws[0]["a"].get<std::string>(), d);
  CHECK(a_plus == QuadExt(30, 3, 89));
  QuadExt b_plus = parse_quadext(laws[0]["b"].get<std::string>(), d);
  CHECK(b_plus == QuadExt(make_rational(-79, 2), make_rational(-9, 2), 89));
  QuadExt a_minus = parse_quadext(laws[1]["a"].get<std::string>(), d);
  CHECK(a_minus == QuadExt(30, -3, 89));
  // parsed coefficients still satisfy b = (11 - 3a)/2
  CHECK(b_plus * Rational(2) == QuadExt(11, 0, 89) - Rational(3) * a_plus);
}

TEST_CASE("solve 2 4 text output mentions both laws and the annihilator") {
  Run r = run_cli({"solve", "2", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("x + y\n") != std::string::npos);
  CHECK(r.out.find("6*x*y - 8*x - 8*y + 12") != std::string::npos);
  CHECK(r.out.find("annihilator = 4/3") != std::string::npos);
  CHECK(r.out.find("identity = 3/2") != std::string::npos);
}

TEST_CASE("machine output is byte-stable across runs") {
  Run first = run_cli({"solve", "11", "22", "--json"});
  Run second = run_cli({"solve", "11", "22", "--json"});
  CHECK(first.out == second.out);
  CHECK(!first.out.empty());
}

TEST_CASE("text and machine modes agree on numeric content") {
  Run text = run_cli({"classify", "4", "4"});
  json doc = run_json({"classify", "4", "4", "--json"});
  CHECK(text.out.find("case = " + doc["result"]["case"].get<std::string>()) !=
        std::string::npos);
  CHECK(text.out.find("n = " + doc["result"]["witness"]["n"].get<std::string>()) !=
        std::string::npos);
}

TEST_CASE("bilinear-only flag switches the truth mode") {
  json any_law = run_json({"solve", "1/2", "5/2", "--json"});
  CHECK(any_law["result"]["true_over_Q"] == true);
  json bilinear = run_json({"solve", "1/2", "5/2", "--json", "--bilinear-only"});
  CHECK(bilinear["result"]["true_over_Q"] == false);
}

TEST_CASE("enumerate supports the negative-divisors flag") {
  json doc = run_json({"enumerate", "3", "--json"});
  CHECK(doc["result"]["pairs"].size() == 2);
  CHECK(doc["result"]["sigma0"] == "2");
  json more = run_json({"enumerate", "3", "--json", "--include-negative-divisors"});
  REQUIRE(more["result"]["pairs"].size() == 4);
  CHECK(more["result"]["pairs"][2][0] == "0");
  CHECK(more["result"]["pairs"][2][1] == "0");
}

TEST_CASE("pell and chakravala-trace emit Bhaskara's value") {
  Run r = run_cli({"pell", "61"});
  CHECK(r.code == 0);
  CHECK(r.out == "1766319049^2 - 61*226153980^2 = 1\n");

  json trace = run_json({"chakravala-trace", "61", "--json"});
  CHECK(trace["result"]["x"] == "1766319049");
  CHECK(!trace["result"]["steps"].empty());
}

TEST_CASE("mordell respects --bound and rn lists the Nagell set") {
  json mordell = run_json({"mordell", "1", "--bound", "50", "--json"});
  CHECK(mordell["result"]["count"] == 5);
  CHECK(mordell["inputs"]["bound"] == 50);

  json rn = run_json({"rn", "40", "--json"});
  REQUIRE(rn["result"]["solutions"].size() == 5);
  CHECK(rn["result"]["solutions"][4][0] == "181");
  CHECK(rn["result"]["solutions"][4][1] == "15");
}

TEST_CASE("tseq lists the sequence") {
  json doc = run_json({"tseq", "1", "3", "--json"});
  auto terms = doc["result"]["terms"];
  REQUIRE(terms.size() == 3);
  CHECK(terms[2]["t"] == "35");
  CHECK(terms[2]["n"] == "99");
}

TEST_CASE("exit codes: 0 success, 1 usage, 2 domain") {
  CHECK(run_cli({"solve", "11", "5"}).code == 0);

  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({"solve", "11"}).code == 1);
  CHECK(run_cli({"solve", "eleven", "5"}).code == 1);
  CHECK(run_cli({"solve", "1/0", "5"}).code == 1);
  CHECK(run_cli({"classify", "3/2", "4"}).code == 1);

  CHECK(run_cli({"pell", "49"}).code == 2);
  CHECK(run_cli({"enumerate", "4"}).code == 2);
  CHECK(run_cli({"rn", "2"}).code == 2);
  CHECK(run_cli({"tseq", "2", "3"}).code == 2);
  CHECK(run_cli({"mordell", "1", "--bound", "0"}).code == 2);

  Run usage = run_cli({"solve", "eleven", "5"});
  CHECK(!usage.err.empty());
  Run domain = run_cli({"pell", "49"});
  CHECK(!domain.err.empty());
}

TEST_CASE("help exits zero") {
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"solve", "--help"}).code == 0);
}
