#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "iet/connections.hpp"
#include "iet/iet.hpp"

namespace iet {

inline constexpr long kDefaultBudget = 1000000;

/// J = [T^{m0}(∂I_alpha), T^{n0}(∂I_beta)).
struct DynamicEndpoints {
  Label alpha;
  long m0;
  Label beta;
  long n0;
};

struct SubintervalSpec {
  std::optional<DynamicEndpoints> dynamic;
  ExactScalar lo;
  ExactScalar hi;

  static SubintervalSpec explicit_interval(ExactScalar lo, ExactScalar hi);
  /// Resolves the endpoints and checks that neither dynamic endpoint
  /// visits J before the chosen power. Throws InvalidInput / EmptyInterval.
  static SubintervalSpec dynamic_interval(const Iet& T, DynamicEndpoints e);
};

struct Floor {
  std::size_t tower;  // induced label
  long level;
  ExactScalar lo;
  ExactScalar hi;
};

struct TowerDecomposition {
  Iet induced;
  std::vector<long> heights;
  std::vector<Floor> floors;  // sorted by position in I
  SubintervalSpec spec;

  const ExactScalar& lo() const { return induced.lo(); }
  const ExactScalar& hi() const { return induced.hi(); }
  /// Index into floors of floor (tower, level).
  std::size_t floor_index(std::size_t tower, long level) const;
  /// Floor containing x.
  std::size_t floor_at(const ExactScalar& x) const;

  std::vector<std::vector<std::size_t>> level_index;  // [tower][level] -> position in floors
};

TowerDecomposition induce(const Iet& T, const SubintervalSpec& J, long budget = kDefaultBudget);

/// Kac identity, exact floor tiling and T_J = T^{h} on a sample of each induced interval.
CheckReport check_towers(const Iet& T, const TowerDecomposition& D);

long return_time(const Iet& T, const ExactScalar& lo, const ExactScalar& hi, const ExactScalar& x,
                 long budget = kDefaultBudget);
/// (p_J(x), b_J(x)).
std::pair<ExactScalar, long> backward_return(const Iet& T, const ExactScalar& lo, const ExactScalar& hi,
                                             const ExactScalar& x, long budget = kDefaultBudget);

/// m_{J,a} = inf{n >= 0 : T^{-n}(∂I_a) in the interior of J}; empty if not found within budget.
std::optional<long> first_backward_entry(const Iet& T, const ExactScalar& lo, const ExactScalar& hi, Label a,
                                         long budget = kDefaultBudget);

/// Induced letter count d_J = d - #{a : m_{J,a} >= M(a)}, and d - d_J = d' when J avoids connections.
CheckReport dJ_check(const Iet& T, const TowerDecomposition& D, const ConnectionReport& report,
                     long budget = kDefaultBudget);

}  // namespace iet
