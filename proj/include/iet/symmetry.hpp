#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iet/connections.hpp"
#include "iet/induction.hpp"

namespace iet {

/// An element of A ∪ {1/2}; empty means 1/2.
using CenterLabel = std::optional<Label>;

std::string center_name(const Iet& T, const CenterLabel& s);
ExactScalar center_point(const Iet& T, const CenterLabel& s);
inline int delta_half(const CenterLabel& s) { return s ? 0 : 1; }

enum class SymmetricVariant { Beta, Half };

struct SymmetricInterval {
  ExactScalar lo;
  ExactScalar hi;
  CenterLabel center;  // β for the Beta variant, empty for Half
  Label alpha;
  Label alpha_hat;
  long m;
  SymmetricVariant variant;

  ExactScalar radius() const { return (hi - lo) / Rational(2); }
  /// Subinterval spec carrying the dynamic endpoints when they satisfy the non-revisit conditions.
  SubintervalSpec spec(const Iet& T) const;
};

/// Endpoints T^{-m}(∂I_α), T^m(∂I_α̂) (Beta) or T^{-m+1}(∂I_α), T^m(∂I_α̂) (Half),
/// pi0(α̂) = pi0(α) - 1. Throws ConnectionTooShort when m >= M(α), NotSymmetric
/// when the interval is not centred where it should be.
SymmetricInterval symmetric_interval(const Iet& T, Label alpha, long m, SymmetricVariant variant,
                                     const ConnectionReport& report);

struct CenterEntry {
  CenterLabel sigma;
  long ell = 0;          // b_J(c_σ); 0 when c_σ lies in a 1/2-symmetric J
  bool clean = false;    // orbit c_σ .. T^{ℓ-δ}(c_σ) avoids every ∂I_a
  bool in_connection = false;
  std::optional<std::size_t> gamma;  // induced label whose center (clean) or left end is p_J(c_σ)
};

struct CenterMap {
  std::vector<CenterEntry> entries;
  /// Source σ for each induced label, when one was found.
  std::vector<std::optional<std::size_t>> source;  // index into entries
};

struct SymmetricInduction {
  TowerDecomposition towers;
  CenterMap centers;
  CheckReport checks;
};

/// Throws ConnectionIntersectsJ and NotSymmetric; clause violations are recorded in checks.
SymmetricInduction symmetric_induce(const Iet& T, const SymmetricInterval& S, const ConnectionReport& report,
                                    long budget = kDefaultBudget);

/// I_I∘T restricted to the interior of an α-symmetric J is the reflection of J.
CheckReport check_local_reflection(const Iet& T, const SymmetricInterval& S);

/// T^{-m}(c_σ) = T^{-1}∘I_I(T^{m-δ}(c_σ)) for each m up to m_max with a clean forward orbit.
CheckReport check_inverse_iterates(const Iet& T, const CenterLabel& sigma, long m_max);

/// Search a β-symmetric interval disjoint from the known connections, m = 1..m_max.
std::optional<SymmetricInterval> find_free_symmetric_interval(const Iet& T, const ConnectionReport& report,
                                                              long m_max);

struct EigenFloor {
  std::size_t tower;
  long level;
  ExactScalar lo;
  ExactScalar hi;
  int value;  // +1 on even level index, -1 on odd
};

struct EigenfunctionTable {
  TowerDecomposition towers;
  std::optional<SymmetricInterval> interval;
  std::vector<EigenFloor> floors;  // in position order
  CheckReport checks;
};

/// Requires c_{1/2} to lie in a known connection (NotApplicable otherwise).
/// Uses J when given, else searches a symmetric interval. Throws OddHeight.
EigenfunctionTable build_eigenfunction(const Iet& T, const ConnectionReport& report, long budget = kDefaultBudget,
                                       const std::optional<SubintervalSpec>& J = std::nullopt);

}  // namespace iet
