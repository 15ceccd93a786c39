#include "helpers.hpp"

using namespace iet;
using namespace testing;

TEST_CASE("Example 2 induced on I_2") {
  const Iet T = data("example2.json");
  const auto J = SubintervalSpec::explicit_interval(T.left(L(T, "2")), T.right(L(T, "2")));
  const TowerDecomposition D = induce(T, J);
  CHECK(D.heights == std::vector<long>{6, 8, 4});
  CHECK(D.induced.lambda() == std::vector<ExactScalar>{q(T, Rational(1, 20)), q(T, Rational(1, 40)), q(T, Rational(1, 8))});
  CHECK(D.induced.is_symmetric());
  CHECK(check_towers(T, D).passed());
  const ExactScalar x = (D.induced.left(2) + D.induced.right(2)) / Rational(2);
  CHECK(return_time(T, J.lo, J.hi, x) == 4);
  CHECK(dJ_check(T, D, connection_scan(T, 200)).passed());
}

TEST_CASE("inducing on the whole interval gives T back") {
  const Iet T = data("example1.json");
  const TowerDecomposition D = induce(T, SubintervalSpec::explicit_interval(T.lo(), T.hi()));
  CHECK(D.induced.lambda() == T.lambda());
  for (long h : D.heights) CHECK(h == 1);
  CHECK(return_time(T, T.lo(), T.hi(), q(T, Rational(1, 2))) == 1);
}

TEST_CASE("golden towers of heights 3 and 2") {
  const Iet T = data("golden.json");
  const ExactScalar hi = g5(T, "3/2", "-1/2");
  const TowerDecomposition D = induce(T, SubintervalSpec::explicit_interval(T.lo(), hi));
  CHECK(D.heights == std::vector<long>{3, 2});
  ExactScalar mass = ExactScalar::zero(T.basis());
  for (std::size_t g = 0; g < 2; ++g) mass += D.induced.lambda(g) * Rational(D.heights[g]);
  CHECK(mass == T.length());
  CHECK(D.induced.lambda(0).approx() == doctest::Approx(0.236068).epsilon(1e-5));
  CHECK(D.induced.lambda(1).approx() == doctest::Approx(0.145898).epsilon(1e-5));
  CHECK(return_time(T, T.lo(), hi, q(T, Rational(3, 10))) == 2);
  CHECK(D.floors.size() == 5);
  CHECK(check_towers(T, D).passed());
}

TEST_CASE("dynamic endpoints") {
  const Iet T = data("golden.json");
  const SubintervalSpec J = SubintervalSpec::dynamic_interval(T, {L(T, "A"), 0, L(T, "B"), -1});
  REQUIRE(J.dynamic);
  const TowerDecomposition D = induce(T, J);
  CHECK(D.induced.size() == 2);
  CHECK(dJ_check(T, D, connection_scan(T)).passed());
}

TEST_CASE("empty interval is rejected") {
  const Iet T = data("golden.json");
  CHECK_THROWS_KIND(induce(T, SubintervalSpec::explicit_interval(T.hi(), T.lo())), ErrorKind::EmptyInterval);
}
