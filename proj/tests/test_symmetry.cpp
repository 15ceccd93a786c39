#include "helpers.hpp"

#include "iet/random.hpp"

using namespace iet;
using namespace testing;

TEST_CASE("golden symmetric intervals") {
  const Iet T = data("golden.json");
  const ConnectionReport r = connection_scan(T);
  const SymmetricInterval S = symmetric_interval(T, L(T, "B"), 1, SymmetricVariant::Beta, r);
  CHECK(S.center == L(T, "A"));
  CHECK(S.lo.approx() == doctest::Approx(0.236068).epsilon(1e-5));
  CHECK(S.hi.approx() == doctest::Approx(0.381966).epsilon(1e-5));
  CHECK((S.lo + S.hi) / Rational(2) == T.center(L(T, "A")));
  CHECK(T.reflect(T.apply(S.lo)) == S.hi);

  const SymmetricInterval H = symmetric_interval(T, L(T, "B"), 1, SymmetricVariant::Half, r);
  CHECK_FALSE(H.center);
  CHECK((H.lo + H.hi) / Rational(2) == T.half());
  CHECK(H.lo.approx() == doctest::Approx(0.381966).epsilon(1e-5));

  CHECK(check_local_reflection(T, S).passed());
  CHECK(check_inverse_iterates(T, std::nullopt, 50).passed());
  CHECK(check_inverse_iterates(T, L(T, "A"), 50).passed());
}

TEST_CASE("golden symmetric induction and center map") {
  const Iet T = data("golden.json");
  const ConnectionReport r = connection_scan(T);
  const SymmetricInterval S = symmetric_interval(T, L(T, "B"), 1, SymmetricVariant::Beta, r);
  const SymmetricInduction si = symmetric_induce(T, S, r);
  CHECK(si.checks.passed());
  CHECK(si.towers.induced.size() == 2);
  CHECK(si.towers.induced.is_symmetric());
  REQUIRE(si.centers.entries.size() == 2);
  for (const auto& e : si.centers.entries) {
    REQUIRE(e.gamma);
    CHECK(si.towers.heights[*e.gamma] == 2 * e.ell - delta_half(e.sigma));
  }
  CHECK(center_name(T, si.centers.entries[0].sigma) == "B");
  CHECK(center_name(T, si.centers.entries[1].sigma) == "1/2");
}

TEST_CASE("half-symmetric induction") {
  const Iet T = data("golden.json");
  const ConnectionReport r = connection_scan(T);
  const SymmetricInterval H = symmetric_interval(T, L(T, "B"), 4, SymmetricVariant::Half, r);
  REQUIRE(H.spec(T).dynamic);
  const SymmetricInduction si = symmetric_induce(T, H, r);
  CHECK(si.checks.passed());
  for (const auto& e : si.centers.entries) {
    if (e.gamma) CHECK(si.towers.heights[*e.gamma] == 2 * e.ell + 1 - delta_half(e.sigma));
  }
}

TEST_CASE("an endpoint revisiting J adds induced intervals") {
  const Iet T = data("golden.json");
  const ConnectionReport r = connection_scan(T);
  const SymmetricInterval H = symmetric_interval(T, L(T, "B"), 2, SymmetricVariant::Half, r);
  CHECK_FALSE(H.spec(T).dynamic);
  const SymmetricInduction si = symmetric_induce(T, H, r);
  CHECK(si.towers.induced.size() == 4);
  CHECK_FALSE(si.checks.passed());
}

TEST_CASE("random symmetric IETs induce to symmetric IETs") {
  Rng rng(7);
  for (int i = 0; i < 5; ++i) {
    const Iet T = random_symmetric_iet(rng, static_cast<std::size_t>(uniform_int(rng, 2, 5)));
    const ConnectionReport r = connection_scan(T, 2000);
    const SymmetricInterval S = random_symmetric_interval(rng, T, r, 4);
    const SymmetricInduction si = symmetric_induce(T, S, r);
    CHECK_MESSAGE(si.checks.passed(), report_table(si.checks));
  }
}

TEST_CASE("connection too short") {
  const Iet T = data("example1.json");
  const ConnectionReport r = connection_scan(T, 200);
  CHECK_THROWS_KIND(symmetric_interval(T, L(T, "4"), 2, SymmetricVariant::Beta, r), ErrorKind::ConnectionTooShort);
}

TEST_CASE("not symmetric") {
  const Iet C = rational_iet({1, 2, 3}, {2, 3, 1}, {Rational(1, 2), Rational(1, 3), Rational(1, 6)});
  CHECK_THROWS_KIND(symmetric_interval(C, 1, 1, SymmetricVariant::Beta, connection_scan(C, 20)),
                    ErrorKind::NotSymmetric);
}

TEST_CASE("eigenfunction of -1") {
  const Iet T = data("example2.json");
  const ConnectionReport r = connection_scan(T, 200);
  const auto J = SubintervalSpec::explicit_interval(T.left(L(T, "2")), T.right(L(T, "2")));
  const EigenfunctionTable E = build_eigenfunction(T, r, kDefaultBudget, J);
  CHECK(E.checks.passed());
  CHECK(E.towers.heights == std::vector<long>{6, 8, 4});
  CHECK(E.floors.size() == 18);

  const Iet G = data("example2_generic.json");
  const EigenfunctionTable EG = build_eigenfunction(G, connection_scan(G));
  CHECK(EG.checks.passed());
  for (long h : EG.towers.heights) CHECK(h % 2 == 0);

  const Iet golden = data("golden.json");
  CHECK_THROWS_KIND(build_eigenfunction(golden, connection_scan(golden)), ErrorKind::NotApplicable);
}
