#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "iet/connections.hpp"
#include "iet/induction.hpp"
#include "iet/symmetry.hpp"

namespace iet {

using Rng = std::mt19937_64;

/// Integer in [lo, hi]; modulo reduction keeps draws identical across standard libraries.
long uniform_int(Rng& rng, long lo, long hi);
/// Rational k / den with k uniform in [lo * den, hi * den].
Rational uniform_rational(Rng& rng, const Rational& lo, const Rational& hi, long den);

/// Symmetric d-IET on [0, 1) over {1, √2, √3, √5, √6, √7} with λ_i = s_i + r_i √p_i
/// for i < d and λ_d = 1 - Σ: the lengths are rationally independent. d <= 6.
Iet random_symmetric_iet(Rng& rng, std::size_t d);

/// Irreducible d-IET on [0, 1) with lengths over {1, √2, √3}.
Iet random_iet(Rng& rng, std::size_t d);

/// [x, x + w) with rational x, w.
SubintervalSpec random_explicit_interval(Rng& rng, const Iet& T);

/// [T^{m0} ∂I_a, T^{n0} ∂I_b) satisfying the non-revisit conditions, of length at
/// least min_length and avoiding the known connections.
std::optional<SubintervalSpec> random_dynamic_interval(Rng& rng, const Iet& T, const ConnectionReport& report,
                                                       double min_length, int tries = 400);

/// v = λ^J + w with w rational, Σ w_γ h_γ = 0 and v > 0.
std::vector<ExactScalar> random_tower_widths(Rng& rng, const TowerDecomposition& D);

/// Rational point of [lo, hi) at least 1/1000 away from every ∂I_a.
ExactScalar random_point(Rng& rng, const Iet& T);

/// α with pi0(α) != 1, m in [1, m_max], variant Beta or Half; retried until the interval
/// avoids the connections and its endpoints satisfy the non-revisit conditions.
/// Draws rejected only for a revisit are counted in *revisits.
SymmetricInterval random_symmetric_interval(Rng& rng, const Iet& T, const ConnectionReport& report, long m_max,
                                            int* revisits = nullptr);

}  // namespace iet
