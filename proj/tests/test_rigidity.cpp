#include "helpers.hpp"

#include "iet/rigidity.hpp"

using namespace iet;
using namespace testing;

TEST_CASE("golden partially rigid towers") {
  const Iet T = data("golden.json");
  const ConnectionReport r = connection_scan(T);
  const auto towers = build_rigidity_towers(T, r, 3);
  REQUIRE(towers.size() == 3);
  const std::vector<long> q_expected{13, 55, 233};
  const Cocycle f = Cocycle::central(T, 1);
  for (std::size_t n = 0; n < 3; ++n) {
    const RigidityTower& X = towers[n];
    CHECK(X.checks.passed());
    CHECK(X.q == q_expected[n]);
    CHECK(X.measure().approx() > 1.0 / 12);
    const EffCriterionResult e = verify_effcriterion(T, f, 1, X);
    CHECK_MESSAGE(e.checks.passed(), report_table(e.checks));
    CHECK(e.sup_displacement.approx() <= 2.0 / static_cast<double>(X.q));
    CHECK(e.sup_abs_sum.approx() <= 4.0);
    const FloorSums s = floor_birkhoff_sums(T, f, X);
    for (const auto& slope : s.slope) CHECK(slope == X.q);
  }
}

TEST_CASE("zero cocycle fails the slope clause") {
  const Iet T = data("golden.json");
  const auto towers = build_rigidity_towers(T, connection_scan(T), 1);
  const EffCriterionResult e = verify_effcriterion(T, Cocycle::central(T, 0), 0, towers[0]);
  CHECK_FALSE(e.checks.passed());
}

TEST_CASE("essential value witness") {
  const Iet T = data("golden.json");
  const auto towers = build_rigidity_towers(T, connection_scan(T), 3);
  const EssentialValueWitness w1 = essential_value_witness(T, Cocycle::central(T, 1), 1, towers);
  CHECK(w1.checks.passed());
  CHECK_FALSE(w1.empty);
  for (double m : w1.image_measure) CHECK(m > 0);

  const EssentialValueWitness w2 = essential_value_witness(T, Cocycle::central(T, 2), 2, towers);
  for (std::size_t n = 0; n < towers.size(); ++n) {
    CHECK(w2.image_measure[n] == doctest::Approx(2 * w1.image_measure[n]).epsilon(1e-9));
  }

  const std::vector<RigidityTower> single{towers[0]};
  const EssentialValueWitness ws = essential_value_witness(T, Cocycle::central(T, 1), 1, single);
  double total = 0;
  for (const auto& s : ws.intersection) total += (s.hi - s.lo).approx();
  CHECK(total == doctest::Approx(ws.image_measure[0]).epsilon(1e-9));
}

TEST_CASE("Example 1 has no free endpoint orbit") {
  const Iet T = data("example1.json");
  CHECK_THROWS_KIND(build_rigidity_towers(T, connection_scan(T, 500), 1), ErrorKind::HypothesisNotMet);
}
