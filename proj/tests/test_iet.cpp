#include "helpers.hpp"

using namespace iet;
using namespace testing;

TEST_CASE("Example 1 map and orbit") {
  const Iet T = data("example1.json");
  CHECK(T.is_symmetric());
  CHECK(T.apply(q(T, Rational(1, 10))) == q(T, Rational(3, 4)));
  const auto o = orbit(T, T.left(L(T, "2")), 2);
  REQUIRE(o.size() == 3);
  CHECK(o[1].value == q(T, Rational(3, 4)));
  CHECK(o[2].value == q(T, Rational(3, 8)));
  CHECK(o[2].endpoint == L(T, "4"));
  CHECK(orbit(T, q(T, Rational(1, 3)), 0).size() == 1);
}

TEST_CASE("golden map") {
  const Iet T = data("golden.json");
  CHECK(T.apply(q(T, 0)) == g5(T, "3/2", "-1/2"));
  CHECK(T.left(L(T, "B")) == g5(T, "-1/2", "1/2"));
  CHECK(T.center(L(T, "A")) == g5(T, "-1/4", "1/4"));
  CHECK(T.center(L(T, "B")) == g5(T, "1/4", "1/4"));
  CHECK(T.half() == q(T, Rational(1, 2)));
  const ExactScalar x = q(T, Rational(1, 2));
  CHECK(T.apply(T.apply_inverse(x)) == x);
  const auto back = orbit(T, x, -2);
  CHECK(back[1].value.approx() == doctest::Approx(0.118034).epsilon(1e-5));
  CHECK(back[2].value.approx() == doctest::Approx(0.736068).epsilon(1e-5));
}

TEST_CASE("identity 1-IET") {
  const Iet T = rational_iet({1}, {1}, {1});
  CHECK(T.apply(q(T, Rational(2, 7))) == q(T, Rational(2, 7)));
  CHECK(T.is_symmetric());
  CHECK(T.center(0) == T.half());
}

TEST_CASE("validation") {
  CHECK_THROWS_KIND(rational_iet({1, 2, 3}, {1, 3, 2}, {Rational(1, 3), Rational(1, 3), Rational(1, 3)}),
                    ErrorKind::Reducible);
  CHECK_THROWS_KIND(load_iet(std::string(IET_TEST_DATA_DIR) + "/reducible.json"), ErrorKind::Reducible);
  CHECK_THROWS_KIND(rational_iet({1, 2}, {2, 1}, {Rational(1, 2), Rational(0)}), ErrorKind::NonPositiveLength);
  CHECK_THROWS_KIND(rational_iet({1, 1}, {2, 1}, {Rational(1, 2), Rational(1, 2)}), ErrorKind::InvalidInput);
}

TEST_CASE("Example 2 marked points") {
  const Iet T = data("example2.json");
  CHECK(T.left(L(T, "2")) == q(T, Rational(1, 40)));
  CHECK(T.left(L(T, "3")) == q(T, Rational(9, 40)));
  CHECK(T.reflect(T.apply(T.left(L(T, "1")))) == T.left(L(T, "2")));
  CHECK(marked_points(T).size() == 9);
}

TEST_CASE("conjugacy identity") {
  const Iet G = data("golden.json");
  CHECK(verify_conjugacy(G, separating_sample(G)).passed());
  std::vector<ExactScalar> sample;
  for (int k = 0; k < 100; ++k) {
    const ExactScalar x = q(G, Rational(2 * k + 1, 200));
    if (!G.endpoint_at(x)) sample.push_back(x);
  }
  CHECK(verify_conjugacy(G, sample).passed());

  const Iet C = rational_iet({1, 2, 3}, {2, 3, 1}, {Rational(1, 2), Rational(1, 3), Rational(1, 6)});
  CHECK_FALSE(C.is_symmetric());
  CHECK_FALSE(verify_conjugacy(C, separating_sample(C)).passed());
}
