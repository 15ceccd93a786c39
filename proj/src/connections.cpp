#include "iet/connections.hpp"

#include <algorithm>

namespace iet {

namespace {

// ∂I_a that may terminate a backward scan: pi1(a) != 1.
std::optional<Label> backward_target(const Iet& T, const ExactScalar& x) {
  auto a = T.endpoint_at(x);
  if (a && T.pi1(*a) != 1) return a;
  return std::nullopt;
}

std::optional<Label> forward_target(const Iet& T, const ExactScalar& x) {
  auto a = T.endpoint_at(x);
  if (a && T.pi0(*a) != 1) return a;
  return std::nullopt;
}

}  // namespace

bool ConnectionReport::contains_point(const ExactScalar& x) const {
  for (const auto& c : connections) {
    for (const auto& p : c.points) {
      if (p == x) return true;
    }
  }
  return false;
}

bool ConnectionReport::meets(const ExactScalar& lo, const ExactScalar& hi) const {
  for (const auto& c : connections) {
    for (const auto& p : c.points) {
      if (!(p < lo) && p < hi) return true;
    }
  }
  return false;
}

ConnectionReport connection_scan(const Iet& T, long n_max) {
  if (n_max < 1) throw Error(ErrorKind::InvalidInput, "n_max must be at least 1");
  const std::size_t d = T.size();
  ConnectionReport r;
  r.n_max = n_max;
  r.M.assign(d, std::nullopt);
  r.N.assign(d, std::nullopt);
  r.M_target.assign(d, std::nullopt);
  r.N_target.assign(d, std::nullopt);
  r.trivial_M = T.top(1);
  r.trivial_N = T.bottom(1);
  r.M[r.trivial_M] = 1;
  r.N[r.trivial_N] = 1;
  r.M_target[r.trivial_M] = r.trivial_N;
  r.N_target[r.trivial_N] = r.trivial_M;

  for (int k = 2; k <= static_cast<int>(d); ++k) {
    const Label beta = T.top(k);
    std::vector<ExactScalar> path{T.left(beta)};
    ExactScalar x = T.left(beta);
    for (long n = 1; n <= n_max; ++n) {
      x = T.apply_inverse(x);
      path.push_back(x);
      if (auto alpha = backward_target(T, x)) {
        r.M[beta] = n;
        r.M_target[beta] = *alpha;
        std::reverse(path.begin(), path.end());
        r.connections.push_back({*alpha, beta, n, std::move(path)});
        break;
      }
    }
  }
  for (int k = 2; k <= static_cast<int>(d); ++k) {
    const Label alpha = T.bottom(k);
    ExactScalar x = T.left(alpha);
    for (long n = 1; n <= n_max; ++n) {
      x = T.apply(x);
      if (auto beta = forward_target(T, x)) {
        r.N[alpha] = n;
        r.N_target[alpha] = *beta;
        break;
      }
    }
  }
  return r;
}

std::vector<PeriodicComponent> periodic_decomposition(const Iet& T, const ConnectionReport& report) {
  std::vector<ExactScalar> cuts{T.lo(), T.hi()};
  for (Label a = 0; a < T.size(); ++a) {
    if (!report.M[a]) {
      throw Error(ErrorKind::HypothesisNotMet,
                  "M(" + T.name(a) + ") unresolved up to n_max = " + std::to_string(report.n_max));
    }
    ExactScalar x = T.left(a);
    cuts.push_back(x);
    for (long n = 1; n <= *report.M[a]; ++n) {
      x = T.apply_inverse(x);
      cuts.push_back(x);
    }
  }
  sort_unique(cuts);

  std::vector<PeriodicComponent> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const ExactScalar& u = cuts[i];
    const ExactScalar width = cuts[i + 1] - u;
    ExactScalar y = u;
    long period = 0;
    for (long n = 1; n <= report.n_max; ++n) {
      y = T.apply(y);
      if (y == u) {
        period = n;
        break;
      }
    }
    if (period == 0) {
      throw Error(ErrorKind::BudgetExhausted, "no return of " + to_string(u) + " within n_max");
    }
    if (!iterate_interval(T, u, width, period)) {
      throw Error(ErrorKind::CheckFailed, "T^N is not continuous on the component at " + to_string(u));
    }
    out.push_back({u, cuts[i + 1], period});
  }
  return out;
}

ObstructionReport ergodicity_obstructions(const Iet& T, const ConnectionReport& report) {
  if (!T.is_symmetric()) throw Error(ErrorKind::HypothesisNotMet, "permutation is not symmetric");
  ObstructionReport out;
  std::vector<std::pair<std::string, ExactScalar>> marked;
  for (Label a = 0; a < T.size(); ++a) marked.emplace_back("c_" + T.name(a), T.center(a));
  marked.emplace_back("c_1/2", T.half());

  for (const auto& c : report.connections) {
    int count = 0;
    std::string names;
    for (const auto& [name, value] : marked) {
      if (std::any_of(c.points.begin(), c.points.end(), [&](const ExactScalar& p) { return p == value; })) {
        ++count;
        names += (names.empty() ? "" : ",") + name;
      }
    }
    out.marked_counts.push_back(count);
    const std::string id = "connection:" + T.name(c.start) + "->" + T.name(c.end);
    out.checks.expect(count <= 1, id + ":at_most_one_center",
                      std::to_string(count) + " marked points" + (names.empty() ? "" : " (" + names + ")"));
    if (count == 0) {
      out.not_ergodic = true;
      out.checks.pass(id + ":NotErgodic", "connection of length " + std::to_string(c.length) +
                                              " contains no center and not c_1/2");
    }
  }
  return out;
}

CheckReport check_sym_endpoints(const Iet& T, const ConnectionReport& report) {
  CheckReport out;
  for (int k = 2; k <= static_cast<int>(T.size()); ++k) {
    const Label a = T.top(k);
    const Label ahat = T.top(k - 1);
    if (!report.M[a] && !report.N[ahat]) continue;
    const bool ok = report.M[a] && report.N[ahat] && *report.M[a] == *report.N[ahat];
    auto show = [](const std::optional<long>& v) { return v ? std::to_string(*v) : std::string("unknown"); };
    out.expect(ok, "M=N:" + T.name(a),
               "M(" + T.name(a) + ")=" + show(report.M[a]) + ", N(" + T.name(ahat) + ")=" + show(report.N[ahat]));
  }
  return out;
}

CheckReport check_symmetric_connection(const Iet& T, long n_max) {
  CheckReport out;
  const int d = static_cast<int>(T.size());
  std::vector<std::pair<std::string, ExactScalar>> sources;
  for (Label a = 0; a < T.size(); ++a) sources.emplace_back(T.name(a), T.center(a));
  sources.emplace_back("1/2", T.half());

  for (std::size_t s = 0; s < sources.size(); ++s) {
    const bool is_half = s + 1 == sources.size();
    const int delta = is_half ? 1 : 0;
    const ExactScalar& c = sources[s].second;
    ExactScalar fwd = c;
    ExactScalar bwd = c;
    for (long j = 0; j <= n_max; ++j) {
      if (j > 0) {
        fwd = T.apply(fwd);
        bwd = T.apply_inverse(bwd);
      }
      auto hit_f = T.endpoint_at(fwd);
      auto hit_b = j > 0 ? T.endpoint_at(bwd) : std::nullopt;
      if (!hit_f && !hit_b) continue;
      if (hit_f) {
        const Label a = *hit_f;
        const bool first_ok = T.pi0(a) != 1;
        bool ok = first_ok;
        if (first_ok) {
          const Label ahat = T.top(T.pi0(a) - 1);
          ok = T.iterate(c, -j - delta) == T.left(ahat);
        }
        out.expect(ok, "sym_connection:c_" + sources[s].first + ":+" + std::to_string(j));
      }
      if (hit_b) {
        const Label a = *hit_b;
        bool ok = T.pi1(a) != 1 && T.pi0(a) != d;
        if (ok) {
          const Label ahat = T.top(T.pi0(a) + 1);
          ok = T.iterate(c, j - delta) == T.left(ahat);
        }
        out.expect(ok, "sym_connection:c_" + sources[s].first + ":-" + std::to_string(j));
      }
      break;
    }
  }
  return out;
}

}  // namespace iet
