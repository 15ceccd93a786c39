#pragma once

#include <string>
#include <vector>

#include "iet/cocycle.hpp"
#include "iet/connections.hpp"
#include "iet/induction.hpp"
#include "iet/symmetry.hpp"

namespace iet {

struct RigidityTower {
  int depth = 0;
  Label beta = 0;   // c_β outside every connection
  Label alpha = 0;  // no connection through ∂I_α found
  long m = 0;
  SymmetricInterval J;
  TowerDecomposition first;  // towers over J
  std::size_t gamma = 0;     // widest-measure tower X_n
  long central_level = 0;    // level of X_n holding a center
  CenterLabel central_sigma; // σ with c_σ at the middle of the central level
  ExactScalar clo;           // central level [clo, chi)
  ExactScalar chi;
  TowerDecomposition second;  // towers over the central level
  std::size_t Gamma = 0;      // largest interval of the second induction
  long q = 0;
  long xi_floors = 0;         // Ξ_n = T^i(base), i < xi_floors
  ExactScalar width;          // |base|
  CenterLabel frak_sigma;     // center at the middle of the Γ tower
  long frak_ell = 0;          // its first backward visit time
  std::vector<ExactScalar> orbit;  // T^i(left end of base), i <= q + xi_floors
  CheckReport checks;              // construction checks

  ExactScalar measure() const { return width * Rational(xi_floors); }
  /// T^{q}(x) - x on floor i.
  ExactScalar displacement(long i) const { return orbit[q + i] - orbit[i]; }
};

/// Nested β-symmetric J_n with radii below ε_n (ε_1 = |I_β|/2, ε_{n+1} = radius_n / 2),
/// double induction and Ξ_n. Candidates whose q does not exceed the previous q are
/// dropped in favour of smaller intervals. Throws NoFreeCenter, HypothesisNotMet, BudgetExhausted.
std::vector<RigidityTower> build_rigidity_towers(const Iet& T, const ConnectionReport& report, int depth,
                                                 long budget = kDefaultBudget);

struct FloorSums {
  std::vector<ExactScalar> at_left;  // S_q f at the left end of floor i
  std::vector<Rational> slope;       // S_q f' on floor i
};

FloorSums floor_birkhoff_sums(const Iet& T, const Cocycle& f, const RigidityTower& X);

struct EffCriterionResult {
  CheckReport checks;
  ExactScalar sup_abs_sum;       // sup over Ξ_n of |S_q f|
  ExactScalar sup_displacement;  // sup over Ξ_n of |T^q x - x|
  double E = 0;                  // 1 / (q |base|)
  double D = 0;                  // q sup |T^q x - x|
};

/// Clauses 1-6 for f = central(a), plus the vanishing of S_q f at the centre of the Γ tower.
EffCriterionResult verify_effcriterion(const Iet& T, const Cocycle& f, const Rational& a, const RigidityTower& X);

struct Segment {
  ExactScalar lo;
  ExactScalar hi;
};

struct EssentialValueWitness {
  std::vector<std::vector<Segment>> images;  // S_q f(Ξ_n), merged
  std::vector<double> image_measure;
  std::vector<Segment> intersection;
  bool empty = true;
  double C = 0, D = 0, E = 0;
  double candidate_lo = 0;  // [y, y + 1 / (2 C max(C, D, E))]
  double candidate_hi = 0;
  CheckReport checks;
};

EssentialValueWitness essential_value_witness(const Iet& T, const Cocycle& f, const Rational& a,
                                              const std::vector<RigidityTower>& towers);

}  // namespace iet
