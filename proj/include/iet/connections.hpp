#pragma once

#include <optional>
#include <vector>

#include "iet/iet.hpp"

namespace iet {

inline constexpr long kDefaultNmax = 10000;

/// One non-trivial connection T^{-n}(∂I_end) = ∂I_start, stored forward:
/// points[0] = ∂I_start, points[n] = ∂I_end.
struct Connection {
  Label start;
  Label end;
  long length;
  std::vector<ExactScalar> points;
};

struct ConnectionReport {
  long n_max = kDefaultNmax;
  // Empty optional means "none found up to n_max", never infinity.
  std::vector<std::optional<long>> M;
  std::vector<std::optional<long>> N;
  std::vector<std::optional<Label>> M_target;  // α with T^{-M(β)}∂I_β = ∂I_α
  std::vector<std::optional<Label>> N_target;  // β with T^{N(α)}∂I_α = ∂I_β
  Label trivial_M;                             // pi0^{-1}(1)
  Label trivial_N;                             // pi1^{-1}(1)
  std::vector<Connection> connections;         // indexed by end label order

  /// d', the number of non-trivial connections found.
  std::size_t d_prime() const { return connections.size(); }
  bool contains_point(const ExactScalar& x) const;
  /// True when some connection point lies in [lo, hi).
  bool meets(const ExactScalar& lo, const ExactScalar& hi) const;
};

ConnectionReport connection_scan(const Iet& T, long n_max = kDefaultNmax);

struct PeriodicComponent {
  ExactScalar lo;
  ExactScalar hi;
  long period;
};

/// Requires every β other than pi0^{-1}(1) to have M(β) resolved.
std::vector<PeriodicComponent> periodic_decomposition(const Iet& T, const ConnectionReport& report);

struct ObstructionReport {
  CheckReport checks;
  bool not_ergodic = false;
  // Per connection: number of points c_α / c_{1/2} it contains.
  std::vector<int> marked_counts;
};

ObstructionReport ergodicity_obstructions(const Iet& T, const ConnectionReport& report);

/// M(α) = N(α̂) with pi0(α̂) = pi0(α) - 1, for symmetric T.
CheckReport check_sym_endpoints(const Iet& T, const ConnectionReport& report);

/// Whenever T^m(c_β) = ∂I_α is seen within the scan range with a clean
/// intermediate orbit, checks T^{-m-δ}(c_β) = ∂I_α̂.
CheckReport check_symmetric_connection(const Iet& T, long n_max);

}  // namespace iet
