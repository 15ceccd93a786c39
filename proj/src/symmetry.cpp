#include "iet/symmetry.hpp"

#include <algorithm>
#include <set>

namespace iet {

std::string center_name(const Iet& T, const CenterLabel& s) { return s ? T.name(*s) : std::string("1/2"); }

ExactScalar center_point(const Iet& T, const CenterLabel& s) { return s ? T.center(*s) : T.half(); }

SubintervalSpec SymmetricInterval::spec(const Iet& T) const {
  const long back = variant == SymmetricVariant::Beta ? -m : -m + 1;
  const ExactScalar a = T.iterate(T.left(alpha), back);
  DynamicEndpoints e = a == lo ? DynamicEndpoints{alpha, back, alpha_hat, m} : DynamicEndpoints{alpha_hat, m, alpha, back};
  try {
    return SubintervalSpec::dynamic_interval(T, e);
  } catch (const Error&) {
    return SubintervalSpec::explicit_interval(lo, hi);
  }
}

SymmetricInterval symmetric_interval(const Iet& T, Label alpha, long m, SymmetricVariant variant,
                                     const ConnectionReport& report) {
  if (!T.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "permutation is not symmetric");
  if (alpha >= T.size()) throw Error(ErrorKind::InvalidInput, "unknown label");
  if (T.pi0(alpha) == 1) throw Error(ErrorKind::InvalidInput, "pi0(" + T.name(alpha) + ") = 1");
  if (m < 1) throw Error(ErrorKind::InvalidInput, "m must be at least 1");
  if (report.M[alpha] && m >= *report.M[alpha]) {
    throw Error(ErrorKind::ConnectionTooShort, "m = " + std::to_string(m) + " but M(" + T.name(alpha) +
                                                   ") = " + std::to_string(*report.M[alpha]));
  }
  const Label ahat = T.top(T.pi0(alpha) - 1);
  const ExactScalar back = T.iterate(T.left(alpha), -m);
  const ExactScalar fwd = T.iterate(T.left(ahat), m);
  if (!(T.reflect(T.apply(back)) == fwd)) {
    throw Error(ErrorKind::NotSymmetric, "I(T(T^-m dI_" + T.name(alpha) + ")) != T^m dI_" + T.name(ahat));
  }
  const ExactScalar other = variant == SymmetricVariant::Beta ? back : T.apply(back);
  if (other == fwd) throw Error(ErrorKind::EmptyInterval, "symmetric interval endpoints coincide");

  SymmetricInterval S{min(other, fwd), max(other, fwd), std::nullopt, alpha, ahat, m, variant};
  const ExactScalar mid = (S.lo + S.hi) / Rational(2);
  if (variant == SymmetricVariant::Half) {
    if (!(mid == T.half())) throw Error(ErrorKind::NotSymmetric, "midpoint " + to_string(mid) + " is not c_1/2");
    return S;
  }
  const Label b = T.locate(mid);
  if (!(mid == T.center(b)) || S.lo < T.left(b) || T.right(b) < S.hi) {
    throw Error(ErrorKind::NotSymmetric, "midpoint " + to_string(mid) + " is not the center of the interval it meets");
  }
  S.center = b;
  return S;
}

CheckReport check_local_reflection(const Iet& T, const SymmetricInterval& S) {
  CheckReport out;
  if (S.variant != SymmetricVariant::Beta) {
    out.skip("local_reflection", "half-symmetric interval");
    return out;
  }
  const Label b = *S.center;
  out.expect(T.lo() + T.hi() - T.translation(b) == S.lo + S.hi, "local_reflection:endpoints",
             "I(T(x)) = I_J(x) on J as affine maps");
  bool ok = true;
  for (int k = 1; k < 4 && ok; ++k) {
    const ExactScalar x = S.lo + (S.hi - S.lo) * ratio(k, 4);
    ok = T.reflect(T.apply(x)) == S.lo + S.hi - x;
  }
  out.expect(ok, "local_reflection:samples", "quarter points of J");
  return out;
}

CheckReport check_inverse_iterates(const Iet& T, const CenterLabel& sigma, long m_max) {
  CheckReport out;
  const int delta = delta_half(sigma);
  const ExactScalar c = center_point(T, sigma);
  ExactScalar fwd = c;
  ExactScalar bwd = c;
  std::size_t tested = 0;
  bool ok = true;
  long first_bad = -1;
  for (long m = 0; m <= m_max; ++m) {
    if (m > 0) {
      fwd = T.apply(fwd);
      bwd = T.apply_inverse(bwd);
    }
    if (T.endpoint_at(fwd)) break;
    if (m - delta < 0 || m == 0) continue;
    // fwd = T^m c; the identity needs T^{m-δ} c.
    const ExactScalar base = delta ? T.apply_inverse(fwd) : fwd;
    ++tested;
    if (!(bwd == T.apply_inverse(T.reflect(base)))) {
      ok = false;
      first_bad = m;
      break;
    }
  }
  out.expect(ok, "inverse_iterates:c_" + center_name(T, sigma),
             ok ? std::to_string(tested) + " powers" : "fails at m = " + std::to_string(first_bad));
  return out;
}

std::optional<SymmetricInterval> find_free_symmetric_interval(const Iet& T, const ConnectionReport& report,
                                                              long m_max) {
  for (long m = 1; m <= m_max; ++m) {
    for (int k = 2; k <= static_cast<int>(T.size()); ++k) {
      const Label a = T.top(k);
      if (report.M[a] && m >= *report.M[a]) continue;
      try {
        auto S = symmetric_interval(T, a, m, SymmetricVariant::Beta, report);
        if (!report.meets(S.lo, S.hi)) return S;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotSymmetric && e.kind() != ErrorKind::EmptyInterval) throw;
      }
    }
  }
  return std::nullopt;
}

SymmetricInduction symmetric_induce(const Iet& T, const SymmetricInterval& S, const ConnectionReport& report,
                                    long budget) {
  if (!T.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "permutation is not symmetric");
  if (report.meets(S.lo, S.hi)) {
    throw Error(ErrorKind::ConnectionIntersectsJ, "J = [" + to_float(S.lo, 12) + ", " + to_float(S.hi, 12) +
                                                      ") contains a connection point");
  }
  SymmetricInduction out{induce(T, S.spec(T), budget), {}, {}};
  const TowerDecomposition& D = out.towers;
  const Iet& TJ = D.induced;
  CheckReport& chk = out.checks;

  chk.merge(check_towers(T, D), "towers:");
  chk.merge(check_local_reflection(T, S));
  try {
    chk.merge(verify_conjugacy(TJ, separating_sample(TJ)), "induced:");
  } catch (const Error& e) {
    chk.fail("induced:conjugacy", e.what());
  }
  const std::size_t expected = T.size() - report.d_prime();
  chk.expect(TJ.size() == expected, "induced:size",
             std::to_string(TJ.size()) + " letters, d - d' = " + std::to_string(expected));
  chk.expect(TJ.is_symmetric(), "induced:symmetric");

  std::vector<CenterLabel> sources;
  for (Label a = 0; a < T.size(); ++a) {
    if (S.center && *S.center == a) continue;
    sources.emplace_back(a);
  }
  if (S.variant == SymmetricVariant::Beta) sources.emplace_back(std::nullopt);

  CenterMap& cm = out.centers;
  cm.source.assign(TJ.size(), std::nullopt);
  bool injective = true;
  bool parity = true;
  bool relation = true;
  bool free_clean = true;
  bool dichotomy = true;
  std::string detail;
  for (const auto& sigma : sources) {
    CenterEntry e;
    e.sigma = sigma;
    const ExactScalar c = center_point(T, sigma);
    const int delta = delta_half(sigma) - (S.variant == SymmetricVariant::Half ? 1 : 0);
    e.in_connection = report.contains_point(c);
    const bool inside = S.variant == SymmetricVariant::Half && D.lo() <= c && c < D.hi();
    auto [p, ell] = inside ? std::pair<ExactScalar, long>{c, 0} : backward_return(T, D.lo(), D.hi(), c, budget);
    e.ell = ell;
    e.clean = true;
    ExactScalar y = c;
    for (long i = 0; i <= ell - delta && e.clean; ++i) {
      if (T.endpoint_at(y)) e.clean = false;
      y = T.apply(y);
    }
    const std::string name = center_name(T, sigma);
    if (e.clean) {
      for (Label g = 0; g < TJ.size(); ++g) {
        if (TJ.center(g) == p) e.gamma = g;
      }
      if (!e.gamma) {
        relation = false;
        detail += " p_J(c_" + name + ") is not an induced center;";
      } else {
        const Label g = *e.gamma;
        if (!(TJ.apply(p) == T.iterate(c, ell - delta))) {
          relation = false;
          detail += " T_J(c_" + TJ.name(g) + ") != T^(l-d)(c_" + name + ");";
        }
        if (D.heights[g] != 2 * ell - delta) {
          parity = false;
          detail += " h_" + TJ.name(g) + " = " + std::to_string(D.heights[g]) + " vs 2l-d = " +
                    std::to_string(2 * ell - delta) + ";";
        }
        if (cm.source[g]) {
          injective = false;
          detail += " " + TJ.name(g) + " hit twice;";
        } else {
          cm.source[g] = cm.entries.size();
        }
      }
    } else {
      for (Label g = 0; g < TJ.size(); ++g) {
        if (TJ.left(g) == p) e.gamma = g;
      }
      if (!e.in_connection || !e.gamma) {
        dichotomy = false;
        detail += " c_" + name + " has a dirty orbit" + (e.in_connection ? "" : " outside connections") + ";";
      }
    }
    if (!e.in_connection && !e.clean) free_clean = false;
    cm.entries.push_back(std::move(e));
  }
  const bool surjective =
      std::all_of(cm.source.begin(), cm.source.end(), [](const auto& s) { return s.has_value(); });
  chk.expect(relation, "centers:relation", "c_g = p_J(c_s), T_J(c_g) = T^(l-d)(c_s)");
  chk.expect(parity, "centers:parity", "h_g = 2l - d");
  chk.expect(injective, "centers:injective");
  chk.expect(surjective, "centers:surjective");
  chk.expect(free_clean, "centers:free_clean", "centers outside connections have clean orbits");
  chk.expect(dichotomy, "centers:dichotomy", "p_J(c_s) = dI_g only for c_s in a connection");
  if (!detail.empty()) chk.add("centers:detail", Status::Skipped, detail.substr(1));
  return out;
}

EigenfunctionTable build_eigenfunction(const Iet& T, const ConnectionReport& report, long budget,
                                       const std::optional<SubintervalSpec>& J) {
  if (!T.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "permutation is not symmetric");
  if (!report.contains_point(T.half())) {
    throw Error(ErrorKind::NotApplicable, "c_1/2 does not lie in a known connection");
  }
  EigenfunctionTable out;
  SubintervalSpec spec;
  if (J) {
    spec = *J;
  } else {
    out.interval = find_free_symmetric_interval(T, report, 64);
    if (!out.interval) throw Error(ErrorKind::HypothesisNotMet, "no symmetric interval avoids the connections");
    spec = out.interval->spec(T);
  }
  out.towers = induce(T, spec, budget);
  const TowerDecomposition& D = out.towers;
  out.checks.merge(check_towers(T, D), "towers:");
  for (std::size_t g = 0; g < D.heights.size(); ++g) {
    if (D.heights[g] % 2 != 0) {
      throw Error(ErrorKind::OddHeight,
                  "tower " + D.induced.name(g) + " has height " + std::to_string(D.heights[g]));
    }
  }
  out.checks.pass("even_heights");
  for (const auto& f : D.floors) out.floors.push_back({f.tower, f.level, f.lo, f.hi, f.level % 2 == 0 ? 1 : -1});

  bool ok = true;
  std::string where;
  for (std::size_t k = 0; k < out.floors.size() && ok; ++k) {
    const EigenFloor& f = out.floors[k];
    const Label a = T.locate(f.lo);
    if (T.right(a) < f.hi) {
      ok = false;
      where = "floor " + std::to_string(k) + " straddles a discontinuity";
      break;
    }
    const ExactScalar img = T.apply(f.lo);
    const ExactScalar img_hi = img + (f.hi - f.lo);
    for (std::size_t j = D.floor_at(img); ok; ++j) {
      if (out.floors[j].value != -f.value) {
        ok = false;
        where = "floor " + std::to_string(k) + " maps onto floor " + std::to_string(j) + " with the same sign";
      }
      if (!(out.floors[j].hi < img_hi)) break;
    }
  }
  out.checks.expect(ok, "f(T(x)) = -f(x)", ok ? std::to_string(out.floors.size()) + " floors" : where);
  return out;
}

}  // namespace iet
