#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "symclass/cli.hpp"
#include "symclass/decider.hpp"
#include "symclass/json_io.hpp"
#include "symclass/parser.hpp"

using namespace symclass;
using symclass::io::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "symclass");
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify the d'Alembertian") {
  Run r = run({"classify", "--space", "minkowski", "--dim", "2", "--expr", "dt^2 - dx1^2 - dx2^2"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["poincare"] == "yes");
  CHECK(j["translation"] == "yes");
  CHECK(j["dilation"]["invariant"] == true);
  CHECK(j["lorentz"]["invariant"] == true);
  REQUIRE(j["lorentz"]["b"].size() == 2);
  CHECK(io::scalar_from_json(j["lorentz"]["b"][0]) == Scalar(0));
  CHECK(io::scalar_from_json(j["lorentz"]["b"][1]) == Scalar(1));
}

TEST_CASE("classify reports a boost witness") {
  Run r = run({"classify", "--space", "minkowski", "--dim", "1", "--expr", "dt^2 + dx1^2"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["lorentz"]["invariant"] == false);
  const Json& w = j["lorentz"]["witness"];
  CHECK(w["kind"] == "group");
  CHECK(w["element"]["label"] == "boost(1,1/2)");
  CHECK(io::scalar_from_json(w["lhs"]) == Scalar(make_rational(41, 9)));
  CHECK(io::scalar_from_json(w["rhs"]) == Scalar(1));
  GroupElement g = io::element_from_json(w["element"]);
  CHECK(g == rational_boost(1, 1, make_rational(1, 2)));
  CHECK(j["poincare"] == "no");
  CHECK(j["dilation"] == "not_checked");
}

TEST_CASE("act applies a boost") {
  Run r = run({"act", "--dim", "1", "--boost", "1", "1/2", "--symbol", "tau^2 - xi1^2"});
  CHECK(r.code == 0);
  CHECK(r.out == "tau^2 - xi1^2\n");
  Run s = run({"act", "--dim", "1", "--boost", "1", "1/2", "--symbol", "tau^2 + xi1^2"});
  CHECK(s.out == "41/9*tau^2 + 80/9*tau*xi1 + 41/9*xi1^2\n");
  Run t = run({"act", "--dim", "2", "--reflect", "0", "--symbol", "tau*xi1"});
  CHECK(t.out == "-tau*xi1\n");
  Run e = run({"act", "--space", "euclidean", "--dim", "2", "--swap", "1", "2", "--symbol", "xi1^3"});
  CHECK(e.out == "xi2^3\n");
}

TEST_CASE("act with a matrix file") {
  const std::string path = "act_matrix_test.json";
  {
    std::ofstream f(path);
    f << R"({"tag": "minkowski", "entries": [[[5,3],[4,3]],[[4,3],[5,3]]]})";
  }
  Run r = run({"act", "--dim", "1", "--matrix", path, "--symbol", "tau^2 - xi1^2"});
  CHECK(r.code == 0);
  CHECK(r.out == "tau^2 - xi1^2\n");
  {
    std::ofstream f(path);
    f << R"({"tag": "minkowski", "entries": [[[1,1],[1,1]],[[0,1],[1,1]]]})";
  }
  Run bad = run({"act", "--dim", "1", "--matrix", path, "--symbol", "tau"});
  CHECK(bad.code == 2);
  std::remove(path.c_str());
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({"classify", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  Run r = run({"classify", "--dim", "3", "--expr", "dx5"});
  CHECK(r.code == 2);
  CHECK(r.err.find("offset") != std::string::npos);
  CHECK(run({"classify", "--space", "euclidean", "--dim", "1", "--expr", "dt"}).code == 2);
  CHECK(run({"act", "--dim", "1", "--boost", "1", "1", "--symbol", "tau"}).code == 2);
  CHECK(run({"gen", "--kind", "perturbed", "--order", "0"}).code == 2);
  CHECK(run({"classify", "--dim", "1"}).code == 2);
  CHECK(run({"classify", "--help"}).code == 0);
}

TEST_CASE("verdicts never change the exit code") {
  CHECK(run({"classify", "--dim", "1", "--expr", "t*dx1"}).code == 0);
  CHECK(run({"witness", "--dim", "1", "--expr", "dt^2 + dx1^2"}).code == 0);
  CHECK(run({"canonicalize", "--dim", "1", "--expr", "dt"}).code == 0);
}

TEST_CASE("canonicalize and witness subcommands") {
  Run c = run({"canonicalize", "--dim", "3", "--expr", "(dt^2 - dx1^2 - dx2^2 - dx3^2)^2 + 2", "--format", "human"});
  CHECK(c.out == "b = [2, 0, 1]\nL = box^2 + 2\n");
  Run w = run({"witness", "--dim", "1", "--expr", "dt", "--format", "human"});
  CHECK(w.out == "negate_all at covector (1, 0): -1 != 1\n");
  Run inv = run({"witness", "--dim", "1", "--expr", "dt^2 - dx1^2"});
  CHECK(Json::parse(inv.out)["invariant"] == true);
  Run lap = run({"canonicalize", "--space", "euclidean", "--dim", "2", "--expr", "dx1^2 + dx2^2"});
  CHECK(Json::parse(lap.out)["canonical"] == "lap");
}

TEST_CASE("parse echoes operator JSON that reloads") {
  Run r = run({"parse", "--dim", "2", "--expr", "t*dx1 + (1/2)*dt^2"});
  REQUIRE(r.code == 0);
  OperatorSpec op = io::operator_from_json(Json::parse(r.out));
  CHECK(op == parse_operator("t*dx1 + 1/2*dt^2", 2));

  const std::string path = "parse_op_test.json";
  {
    std::ofstream f(path);
    f << r.out;
  }
  Run again = run({"classify", "--file", path});
  CHECK(again.code == 0);
  CHECK(Json::parse(again.out)["translation"] == "no");
  std::remove(path.c_str());
}

TEST_CASE("gen is deterministic and round-trips through classify") {
  std::vector<std::string> args{"gen", "--seed", "1", "--kind", "invariant", "--order", "4", "--dim", "2", "--count", "3"};
  Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  Json arr = Json::parse(a.out);
  REQUIRE(arr.size() == 3);
  for (const auto& inst : arr) {
    OperatorSpec op = io::operator_from_json(inst["operator"]);
    CHECK(parse_operator(inst["expr"].get<std::string>(), 2) == op);
    CHECK(is_invariant(classify_lorentz(constant_symbol(op))));
  }
  Run p = run({"gen", "--seed", "1", "--kind", "perturbed", "--order", "4", "--dim", "2"});
  OperatorSpec op = io::operator_from_json(Json::parse(p.out)[0]["operator"]);
  CHECK_FALSE(is_invariant(classify_lorentz(constant_symbol(op))));
  CHECK(Json::parse(run({"gen", "--count", "0"}).out).empty());
}

TEST_CASE("classify output is byte-identical across runs") {
  std::vector<std::string> args{"classify", "--dim", "3", "--expr", "dt^3*dx1 + x2*dx3 - dx2^2"};
  CHECK(run(args).out == run(args).out);
  std::vector<std::string> human{"classify", "--dim", "2", "--expr", "dt*dx1 + dx2^2", "--format", "human"};
  CHECK(run(human).out == run(human).out);
}
