#include "helpers.hpp"

using namespace iet;
using namespace testing;

TEST_CASE("empty report is a valid JSON object") {
  const Json j = report_json(CheckReport{});
  CHECK(j.is_object());
  CHECK(j["passed"] == true);
  CHECK(Json::parse(j.dump()) == j);
}

TEST_CASE("Example 1 connections JSON") {
  const Iet T = data("example1.json");
  const Json j = connections_json(T, connection_scan(T, 200));
  CHECK(j["N"]["2"] == 2);
  CHECK(j["M"]["4"] == 2);
  CHECK(j.dump().find("\"N\":{\"4\":1,\"3\":2,\"2\":2") != std::string::npos);
}

TEST_CASE("golden towers CSV") {
  const Iet T = data("golden.json");
  const TowerDecomposition D = induce(T, SubintervalSpec::explicit_interval(T.lo(), g5(T, "3/2", "-1/2")));
  const std::string csv = towers_csv(D, 6);
  CHECK(csv.rfind("gamma,height,width\n", 0) == 0);
  CHECK(csv.find("\nA,3,0.236068") != std::string::npos);
  CHECK(csv.find("\nB,2,0.145898") != std::string::npos);
}

TEST_CASE("IET round trip") {
  const Iet T = data("golden.json");
  const Iet U = parse_iet(iet_json(T));
  CHECK(U.lambda() == T.lambda());
  CHECK(U.pi0() == T.pi0());
  CHECK(U.pi1() == T.pi1());
  CHECK(U.alphabet() == T.alphabet());
}

TEST_CASE("scalar parsing") {
  const Iet T = data("golden.json");
  CHECK(parse_scalar(Json("1/4"), T.basis()) == q(T, Rational(1, 4)));
  CHECK(parse_scalar(Json(3), T.basis()) == q(T, 3));
  CHECK(parse_scalar(Json::array({"1/2", "-1/2"}), T.basis()) == g5(T, "1/2", "-1/2"));
  CHECK(parse_scalar(scalar_json(g5(T, "1/3", "2")), T.basis()) == g5(T, "1/3", "2"));
  CHECK_THROWS_KIND(parse_scalar(Json::array({"1"}), T.basis()), ErrorKind::BasisMismatch);
}

TEST_CASE("subinterval forms") {
  const Iet T = data("golden.json");
  CHECK(parse_subinterval(T, Json{{"label", "B"}}).lo == T.left(L(T, "B")));
  const SubintervalSpec d = parse_subinterval(T, Json::parse(R"({"dynamic":{"alpha":"A","m0":0,"beta":"B","n0":-1}})"));
  CHECK(d.dynamic);
  const SubintervalSpec e = parse_subinterval(T, Json::parse(R"({"lo":"1/10","hi":"1/5"})"));
  CHECK(e.hi == q(T, Rational(1, 5)));
}

TEST_CASE("report formats") {
  CheckReport r;
  r.pass("a", "fine");
  r.fail("b", "with, comma");
  r.skip("c");
  CHECK(report_json(r)["passed"] == false);
  CHECK(report_csv(r).find("\"with, comma\"") != std::string::npos);
  CHECK(report_table(r).find("FAIL") != std::string::npos);
}
