#include "helpers.hpp"

#include "iet/unwinding.hpp"

using namespace iet;
using namespace testing;

namespace {

TowerDecomposition golden_towers(const Iet& T) {
  return induce(T, SubintervalSpec::explicit_interval(T.lo(), g5(T, "3/2", "-1/2")));
}

}  // namespace

TEST_CASE("unwinding with v = lambda^J gives lambda") {
  const Iet T = data("golden.json");
  const TowerDecomposition D = golden_towers(T);
  CHECK(unwound_lengths(T, D, D.induced.lambda()) == T.lambda());
}

TEST_CASE("unwinding to the rotation by 2/5") {
  const Iet T = data("golden.json");
  const TowerDecomposition D = golden_towers(T);
  const std::vector<ExactScalar> v{q(T, Rational(1, 5)), q(T, Rational(1, 5))};
  const UnwindResult u = unwind(T, D, v, connection_scan(T));
  CHECK(u.lambda == std::vector<ExactScalar>{q(T, Rational(3, 5)), q(T, Rational(2, 5))});
  CHECK(u.jhi == q(T, Rational(2, 5)));
  CHECK(u.reinduced.heights == std::vector<long>{3, 2});
  CHECK(u.reinduced.induced.lambda() == v);
  CHECK(u.new_connections);
  CHECK(u.checks.passed());
}

TEST_CASE("unwinding with v = (1/10, 7/20)") {
  const Iet T = data("golden.json");
  const TowerDecomposition D = golden_towers(T);
  const std::vector<ExactScalar> v{q(T, Rational(1, 10)), q(T, Rational(7, 20))};
  const UnwindResult u = unwind(T, D, v, connection_scan(T));
  CHECK(u.checks.passed());
  CHECK(u.reinduced.induced.lambda() == v);
  CHECK(check_affinity(T, D, v, D.induced.lambda(), Rational(1, 3)).passed());
}

TEST_CASE("mass must match") {
  const Iet T = data("golden.json");
  const TowerDecomposition D = golden_towers(T);
  CHECK_THROWS_KIND(unwound_lengths(T, D, {q(T, Rational(1, 5)), q(T, Rational(1, 10))}), ErrorKind::MassMismatch);
}

TEST_CASE("simplex dimension") {
  const Iet golden = data("golden.json");
  CHECK(simplex_dim(golden, connection_scan(golden)) == 1);
  const Iet e2 = data("example2_generic.json");
  CHECK(simplex_dim(e2, connection_scan(e2)) == 2);
  const Iet e1 = data("example1_generic.json");
  CHECK(simplex_dim(e1, connection_scan(e1)) == 1);
}
