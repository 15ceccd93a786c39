#pragma once

#include <optional>
#include <vector>

#include "iet/connections.hpp"
#include "iet/induction.hpp"

namespace iet {

/// λ̃(v): every floor of tower γ gets width v_γ, floors keep their order, and
/// λ̃_α collects the floors lying in I_α. Throws MassMismatch, BasisMismatch.
std::vector<ExactScalar> unwound_lengths(const Iet& T, const TowerDecomposition& D, const std::vector<ExactScalar>& v);

struct UnwindResult {
  std::vector<ExactScalar> lambda;  // λ̃
  Iet unwound;                      // T̃ = (π, λ̃)
  ExactScalar jlo;                  // J̃
  ExactScalar jhi;
  std::optional<DynamicEndpoints> dynamic;  // same expressions as J, now for T̃
  std::vector<ExactScalar> floor_lo;        // new left end of every floor, in D.floors order
  TowerDecomposition reinduced;
  ConnectionReport connections;  // scan of T̃
  bool new_connections = false;  // T̃ has connections T does not (rational v makes T̃ periodic)
  CheckReport checks;
};

/// Rebuilds an IET from D with tower widths v and certifies it by re-induction
/// on J̃ and a connection comparison. Throws MassMismatch, ConnectionIntersectsJ,
/// CertificationFailed (re-induction disagrees).
UnwindResult unwind(const Iet& T, const TowerDecomposition& D, const std::vector<ExactScalar>& v,
                    const ConnectionReport& report, long budget = kDefaultBudget);

/// d - d' - 1. Throws HypothesisNotMet when d' >= d.
std::size_t simplex_dim(const Iet& T, const ConnectionReport& report);

/// λ̃(t v + (1 - t) w) = t λ̃(v) + (1 - t) λ̃(w).
CheckReport check_affinity(const Iet& T, const TowerDecomposition& D, const std::vector<ExactScalar>& v,
                           const std::vector<ExactScalar>& w, const Rational& t);

}  // namespace iet
