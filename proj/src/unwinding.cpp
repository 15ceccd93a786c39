#include "iet/unwinding.hpp"

namespace iet {

namespace {

void require_mass(const Iet& T, const TowerDecomposition& D, const std::vector<ExactScalar>& v) {
  if (v.size() != D.induced.size()) {
    throw Error(ErrorKind::InvalidInput, "v has " + std::to_string(v.size()) + " entries, expected " +
                                             std::to_string(D.induced.size()));
  }
  ExactScalar mass = ExactScalar::zero(T.basis());
  for (std::size_t g = 0; g < v.size(); ++g) {
    require_same_basis(v[g], T.lo());
    if (sign(v[g]) <= 0) throw Error(ErrorKind::NonPositiveLength, "v_" + D.induced.name(g) + " <= 0");
    mass += v[g] * Rational(D.heights[g]);
  }
  if (!(mass == T.length())) {
    throw Error(ErrorKind::MassMismatch, "sum v_g h_g = " + to_float(mass, 20) + " != |I|");
  }
}

}  // namespace

std::vector<ExactScalar> unwound_lengths(const Iet& T, const TowerDecomposition& D, const std::vector<ExactScalar>& v) {
  require_mass(T, D, v);
  std::vector<ExactScalar> out(T.size(), ExactScalar::zero(T.basis()));
  for (const auto& f : D.floors) out[T.locate(f.lo)] += v[f.tower];
  return out;
}

UnwindResult unwind(const Iet& T, const TowerDecomposition& D, const std::vector<ExactScalar>& v,
                    const ConnectionReport& report, long budget) {
  if (report.meets(D.lo(), D.hi())) {
    throw Error(ErrorKind::ConnectionIntersectsJ, "J contains a connection point");
  }
  std::vector<ExactScalar> lambda = unwound_lengths(T, D, v);
  Iet U = Iet::make(T.alphabet(), T.pi0(), T.pi1(), lambda, T.lo(), T.hi());

  std::vector<ExactScalar> floor_lo;
  ExactScalar pos = T.lo();
  std::optional<ExactScalar> jlo;
  ExactScalar width_j = ExactScalar::zero(T.basis());
  for (const auto& f : D.floors) {
    floor_lo.push_back(pos);
    if (f.level == 0) {
      if (!jlo) jlo = pos;
      width_j += v[f.tower];
    }
    pos += v[f.tower];
  }
  const ExactScalar jhi = *jlo + width_j;

  UnwindResult out{lambda, U, *jlo, jhi, D.spec.dynamic, floor_lo, {}, {}, false, {}};
  CheckReport& chk = out.checks;

  bool endpoints = true;
  for (Label a = 0; a < T.size(); ++a) {
    const std::size_t k = D.floor_at(T.left(a));
    endpoints = endpoints && D.floors[k].lo == T.left(a) && U.left(a) == floor_lo[k];
  }
  chk.expect(endpoints, "endpoint_floors", "dI~_a starts the floor that dI_a starts");

  if (D.spec.dynamic) {
    const DynamicEndpoints& e = *D.spec.dynamic;
    const bool ok = U.iterate(U.left(e.alpha), e.m0) == out.jlo && U.iterate(U.left(e.beta), e.n0) == out.jhi;
    chk.expect(ok, "dynamic_endpoints", "J~ = [T~^m0 dI~_a, T~^n0 dI~_b)");
  } else {
    chk.skip("dynamic_endpoints", "J given explicitly");
  }

  try {
    out.reinduced = induce(U, SubintervalSpec::explicit_interval(out.jlo, out.jhi), budget);
  } catch (const Error& e) {
    throw Error(ErrorKind::CertificationFailed, std::string("re-induction failed: ") + e.what());
  }
  const TowerDecomposition& R = out.reinduced;
  std::string why;
  if (R.induced.size() != D.induced.size()) {
    why = "letter count";
  } else if (R.induced.pi0() != D.induced.pi0() || R.induced.pi1() != D.induced.pi1()) {
    why = "permutation";
  } else if (R.heights != D.heights) {
    why = "heights";
  } else if (R.floors.size() != D.floors.size()) {
    why = "floor count";
  } else {
    for (std::size_t g = 0; g < v.size() && why.empty(); ++g) {
      if (!(R.induced.lambda(g) == v[g])) why = "lengths";
    }
    for (std::size_t k = 0; k < R.floors.size() && why.empty(); ++k) {
      if (R.floors[k].tower != D.floors[k].tower || R.floors[k].level != D.floors[k].level ||
          !(R.floors[k].lo == floor_lo[k])) {
        why = "floor order";
      }
    }
  }
  if (!why.empty()) throw Error(ErrorKind::CertificationFailed, "re-induction differs in " + why);
  chk.pass("reinduction", "permutation, lengths v, heights and floor order agree");

  out.connections = connection_scan(U, report.n_max);
  const ConnectionReport& C = out.connections;
  bool same = true;
  for (Label a = 0; a < T.size(); ++a) {
    if (report.M[a] && (C.M[a] != report.M[a] || C.M_target[a] != report.M_target[a])) same = false;
    if (report.N[a] && (C.N[a] != report.N[a] || C.N_target[a] != report.N_target[a])) same = false;
    if ((!report.M[a] && C.M[a]) || (!report.N[a] && C.N[a])) out.new_connections = true;
  }
  chk.expect(same, "connection_pattern", "every connection of T persists with the same length and ends");
  if (out.new_connections) chk.skip("new_connections", "T~ has connections that T lacks up to n_max");
  return out;
}

std::size_t simplex_dim(const Iet& T, const ConnectionReport& report) {
  if (report.d_prime() >= T.size()) {
    throw Error(ErrorKind::HypothesisNotMet, "d' = " + std::to_string(report.d_prime()) + " >= d");
  }
  return T.size() - report.d_prime() - 1;
}

CheckReport check_affinity(const Iet& T, const TowerDecomposition& D, const std::vector<ExactScalar>& v,
                           const std::vector<ExactScalar>& w, const Rational& t) {
  CheckReport out;
  std::vector<ExactScalar> mix;
  for (std::size_t g = 0; g < v.size(); ++g) mix.push_back(v[g] * t + w[g] * (Rational(1) - t));
  const auto lv = unwound_lengths(T, D, v);
  const auto lw = unwound_lengths(T, D, w);
  const auto lm = unwound_lengths(T, D, mix);
  bool ok = true;
  for (std::size_t a = 0; a < lm.size(); ++a) ok = ok && lm[a] == lv[a] * t + lw[a] * (Rational(1) - t);
  out.expect(ok, "affinity", "t = " + format_rational(t));
  return out;
}

}  // namespace iet
