#include "helpers.hpp"

#include "iet/cocycle.hpp"

using namespace iet;
using namespace testing;

TEST_CASE("Birkhoff sums of the central cocycle") {
  const Iet T = data("golden.json");
  const Cocycle f = Cocycle::central(T, 1);
  CHECK(f.is_antisymmetric(T));
  const ExactScalar x = q(T, Rational(3, 10));
  CHECK(birkhoff_sum(T, f, x, 0).is_zero());
  CHECK(birkhoff_sum(T, f, T.apply_inverse(T.half()), 3).is_zero());
  const ExactScalar cA = T.center(L(T, "A"));
  CHECK(birkhoff_sum(T, f, cA, 2).is_zero());
  CHECK(birkhoff_sum(T, f, x, -4) == -birkhoff_sum(T, f, T.iterate(x, -4), 4));
  CHECK(derivative_sum(T, f, x, 17) == 17);
  CHECK(derivative_sum(T, Cocycle::central(T, Rational(-3, 2)), x, 10) == -15);
  CHECK(derivative_sum(T, f, x, 0) == 0);
  CHECK(f.integral(T) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("piecewise slopes count visits") {
  const Iet T = data("golden.json");
  const Cocycle f = Cocycle::piecewise(T, {1, -1}, {ExactScalar::zero(T.basis()), ExactScalar::zero(T.basis())});
  const ExactScalar x = q(T, Rational(3, 10));
  long visits_a = 0;
  ExactScalar y = x;
  for (int k = 0; k < 5; ++k) {
    visits_a += T.locate(y) == L(T, "A");
    y = T.apply(y);
  }
  CHECK(derivative_sum(T, f, x, 5) == 2 * visits_a - 5);
}

TEST_CASE("skew product fibers") {
  const Iet T = data("golden.json");
  const Cocycle f = Cocycle::central(T, 1);
  const ExactScalar a = q(T, Rational(3, 10)), b = q(T, Rational(2, 5));
  const SkewState start{{a, b}, {ExactScalar::zero(T.basis()), ExactScalar::zero(T.basis())}};
  const auto states = skew_orbit(T, f, start, 10);
  REQUIRE(states.size() == 11);
  CHECK(states.back().x[0] == T.iterate(a, 10));
  CHECK(states.back().r[0] == birkhoff_sum(T, f, a, 10));
  CHECK(states.back().r[1] == birkhoff_sum(T, f, b, 10));
  const SkewState one{{a}, {ExactScalar::zero(T.basis())}};
  CHECK(std::abs(skew_orbit(T, f, one, 5).back().r[0].approx()) < 1.0);
}

TEST_CASE("Berk-Trujillo on the golden IET") {
  const Iet T = data("golden.json");
  const Cocycle f = Cocycle::central(T, 1);
  const ConnectionReport r = connection_scan(T);
  const BerkTrujilloResult half = berktrujillo_check(T, f, std::nullopt, 1000, r);
  CHECK(half.checks.passed());
  for (const auto& row : half.rows) CHECK(row.literal.is_zero());

  const BerkTrujilloResult a = berktrujillo_check(T, f, L(T, "A"), 200, r);
  CHECK(a.checks.passed());
  for (const auto& row : a.rows) {
    CHECK(row.pairing.is_zero());
    CHECK(row.literal == row.residual);
  }
  CHECK(a.rows[1].literal.approx() == doctest::Approx(0.236068).epsilon(1e-5));
}

TEST_CASE("Berk-Trujillo refuses a center inside a connection") {
  const Iet G = data("example2_generic.json");
  CHECK_THROWS_KIND(berktrujillo_check(G, Cocycle::central(G, 1), std::nullopt, 10, connection_scan(G)),
                    ErrorKind::InConnection);
}
