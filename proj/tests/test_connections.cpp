#include "helpers.hpp"

using namespace iet;
using namespace testing;

TEST_CASE("Example 1 connection of length 2") {
  const Iet T = data("example1.json");
  const ConnectionReport r = connection_scan(T, 200);
  CHECK(r.N[L(T, "2")] == 2);
  CHECK(r.N_target[L(T, "2")] == L(T, "4"));
  CHECK(r.M[L(T, "4")] == 2);
  CHECK(r.M_target[L(T, "4")] == L(T, "2"));
  CHECK(check_sym_endpoints(T, r).passed());
  const ObstructionReport ob = ergodicity_obstructions(T, r);
  CHECK(ob.not_ergodic);
}

TEST_CASE("Example 2 connection through 1/2") {
  const Iet T = data("example2.json");
  const ConnectionReport r = connection_scan(T, 200);
  CHECK(r.N[L(T, "2")] == 3);
  CHECK(r.N_target[L(T, "2")] == L(T, "3"));
  CHECK(r.contains_point(T.half()));

  const Iet G = data("example2_generic.json");
  const ConnectionReport rg = connection_scan(G);
  CHECK(rg.d_prime() == 1);
  CHECK(rg.contains_point(G.half()));
  CHECK_FALSE(ergodicity_obstructions(G, rg).not_ergodic);
}

TEST_CASE("golden IET has no connections") {
  const Iet T = data("golden.json");
  const ConnectionReport r = connection_scan(T);
  CHECK(r.d_prime() == 0);
  CHECK_FALSE(ergodicity_obstructions(T, r).not_ergodic);
  CHECK(check_symmetric_connection(T, 500).passed());
}

TEST_CASE("periodic decompositions") {
  SUBCASE("rotation by 2/3") {
    const Iet T = rational_iet({1, 2}, {2, 1}, {Rational(1, 3), Rational(2, 3)});
    const auto parts = periodic_decomposition(T, connection_scan(T, 50));
    REQUIRE_FALSE(parts.empty());
    for (const auto& p : parts) CHECK(p.period == 3);
  }
  SUBCASE("half rotation") {
    const Iet T = rational_iet({1, 2}, {2, 1}, {Rational(1, 2), Rational(1, 2)});
    for (const auto& p : periodic_decomposition(T, connection_scan(T, 50))) CHECK(p.period == 2);
  }
  SUBCASE("symmetric 3-IET") {
    const Iet T = rational_iet({1, 2, 3}, {3, 2, 1}, {Rational(1, 4), Rational(1, 2), Rational(1, 4)});
    for (const auto& p : periodic_decomposition(T, connection_scan(T, 50))) {
      const bool middle = p.lo == q(T, Rational(1, 4)) && p.hi == q(T, Rational(3, 4));
      CHECK(p.period == (middle ? 1 : 2));
    }
  }
}
