#include "helpers.hpp"

using namespace iet;

TEST_CASE("sign over {1, sqrt5}") {
  const auto b = Basis::sqrt_basis({5});
  CHECK(sign(ExactScalar::zero(Basis::rationals())) == 0);
  CHECK(sign(ExactScalar(b, {-2, 1})) == 1);
  CHECK(sign(ExactScalar(b, {9, -4})) == 1);
  CHECK(sign(ExactScalar(b, {2, Rational(-1)})) == -1);
}

TEST_CASE("compare golden lengths") {
  const auto b = Basis::sqrt_basis({5});
  const ExactScalar lb(b, {Rational(3, 2), Rational(-1, 2)});
  const ExactScalar la(b, {Rational(-1, 2), Rational(1, 2)});
  CHECK(compare(lb, la) == std::strong_ordering::less);
  CHECK(compare(la, la) == std::strong_ordering::equal);
  CHECK(ExactScalar(b, {1, 0}) > ExactScalar::zero(b));
}

TEST_CASE("decimal output is correctly rounded") {
  const auto b = Basis::sqrt_basis({5});
  CHECK(to_float(ExactScalar(b, {Rational(1, 2), 0}), 3) == "0.500");
  CHECK(to_float(ExactScalar(b, {Rational(-1, 2), Rational(1, 2)}), 6) == "0.618034");
  CHECK(to_float(ExactScalar::zero(b), 4) == "0.0000");
}

TEST_CASE("arithmetic stays in the basis") {
  const auto b = Basis::sqrt_basis({2, 3});
  const ExactScalar x(b, {1, Rational(1, 3), 0});
  const ExactScalar y(b, {0, 0, Rational(-2)});
  CHECK((x + y - y) == x);
  CHECK((x * Rational(3)).coeffs()[1] == 1);
  CHECK((x / Rational(2)).coeffs()[0] == Rational(1, 2));
  CHECK(sign(x - x) == 0);
}

TEST_CASE("mixing bases is rejected") {
  const ExactScalar x = ExactScalar::rational(Basis::sqrt_basis({2}), 1);
  const ExactScalar y = ExactScalar::rational(Basis::sqrt_basis({3}), 1);
  CHECK_THROWS_KIND(compare(x, y), ErrorKind::BasisMismatch);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(format_rational(Rational(10, 4)) == "5/2");
  CHECK_THROWS_KIND(parse_rational("1/0"), ErrorKind::InvalidInput);
  CHECK_THROWS_KIND(parse_rational("abc"), ErrorKind::InvalidInput);
}
