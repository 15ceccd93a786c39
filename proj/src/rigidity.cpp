#include "iet/rigidity.hpp"

#include <algorithm>

namespace iet {

namespace {

std::size_t widest(const std::vector<ExactScalar>& measures) {
  std::size_t best = 0;
  for (std::size_t g = 1; g < measures.size(); ++g) {
    if (measures[best] < measures[g]) best = g;
  }
  return best;
}

CenterLabel center_at(const Iet& T, const ExactScalar& x, bool& found) {
  found = true;
  if (x == T.half()) return std::nullopt;
  for (Label a = 0; a < T.size(); ++a) {
    if (T.center(a) == x) return a;
  }
  found = false;
  return std::nullopt;
}

long ceil_half(long h) { return (h + 1) / 2; }

}  // namespace

std::vector<RigidityTower> build_rigidity_towers(const Iet& T, const ConnectionReport& report, int depth,
                                                 long budget) {
  if (!T.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "permutation is not symmetric");
  if (depth < 1) throw Error(ErrorKind::InvalidInput, "depth must be at least 1");
  std::optional<Label> beta;
  for (Label a = 0; a < T.size() && !beta; ++a) {
    if (!report.contains_point(T.center(a))) beta = a;
  }
  if (!beta) throw Error(ErrorKind::NoFreeCenter, "every c_a lies in a connection");
  std::optional<Label> alpha;
  for (Label a = 0; a < T.size() && !alpha; ++a) {
    if (T.pi0(a) != 1 && !report.M[a]) alpha = a;
  }
  if (!alpha) {
    throw Error(ErrorKind::HypothesisNotMet, "every dI_a with pi0(a) != 1 starts a connection of length <= " +
                                                 std::to_string(report.n_max) + "; T has no free endpoint orbit");
  }
  const std::size_t d = T.size();
  const ExactScalar cb = T.center(*beta);
  ExactScalar eps = T.lambda(*beta) / Rational(2);
  ExactScalar x = T.left(*alpha);
  long m = 0;

  std::vector<RigidityTower> out;
  int discarded = 0;
  for (int n = 1; n <= depth;) {
    RigidityTower X;
    X.depth = n;
    X.beta = *beta;
    X.alpha = *alpha;
    for (;;) {
      if (++m > budget) {
        throw Error(ErrorKind::BudgetExhausted, "no close return of dI_" + T.name(*alpha) + " to c_" +
                                                    T.name(*beta) + " within " + std::to_string(budget) + " steps");
      }
      x = T.apply_inverse(x);
      if (!(abs(x - cb) < eps) || x == cb) continue;
      SymmetricInterval S = symmetric_interval(T, *alpha, m, SymmetricVariant::Beta, report);
      if (report.meets(S.lo, S.hi)) continue;
      X.J = S;
      break;
    }
    X.m = m;
    eps = X.J.radius() / Rational(2);

    SymmetricInduction first = symmetric_induce(T, X.J, report, budget);
    X.checks.merge(first.checks, "J:");
    X.first = std::move(first.towers);
    const TowerDecomposition& D1 = X.first;
    std::vector<ExactScalar> mass;
    for (std::size_t g = 0; g < D1.induced.size(); ++g) mass.push_back(D1.induced.lambda(g) * Rational(D1.heights[g]));
    X.gamma = widest(mass);
    const long h = D1.heights[X.gamma];
    X.central_level = ceil_half(h);
    if (X.central_level >= h) X.central_level = h - 1;
    const Floor& level = D1.floors[D1.floor_index(X.gamma, X.central_level)];
    X.clo = level.lo;
    X.chi = level.hi;
    bool found = false;
    X.central_sigma = center_at(T, (X.clo + X.chi) / Rational(2), found);
    X.checks.expect(found, "central_level:center", "level " + std::to_string(X.central_level) + " of tower " +
                                                       D1.induced.name(X.gamma) + " is centred at c_" +
                                                       (found ? center_name(T, X.central_sigma) : "?"));
    if (report.meets(X.clo, X.chi)) {
      X.checks.skip("central_level:disjoint", "the central level contains a connection point");
    } else {
      X.checks.pass("central_level:disjoint");
    }

    X.second = induce(T, SubintervalSpec::explicit_interval(X.clo, X.chi), budget);
    const TowerDecomposition& D2 = X.second;
    X.checks.merge(check_towers(T, D2), "central:");
    X.checks.expect(D2.induced.is_symmetric(), "central:symmetric");
    X.checks.expect(D2.induced.size() == d - report.d_prime(), "central:size",
                    std::to_string(D2.induced.size()) + " letters");
    X.Gamma = widest(D2.induced.lambda());
    X.q = D2.heights[X.Gamma];
    X.width = D2.induced.lambda(X.Gamma);
    X.xi_floors = h / 2;
    const ExactScalar frak = T.iterate(D2.induced.center(X.Gamma), ceil_half(X.q));
    X.frak_sigma = center_at(T, frak, found);
    X.frak_ell = ceil_half(X.q);
    X.checks.expect(found, "gamma_tower:center", "T^(ceil(q/2)) c_Gamma = c_" + (found ? center_name(T, X.frak_sigma) : "?"));

    const long steps = X.q + X.xi_floors;
    X.checks.expect(iterate_interval(T, D2.induced.left(X.Gamma), X.width, steps), "xi:continuity",
                    "T^k continuous on the base for k <= q + h/2");
    X.orbit.reserve(static_cast<std::size_t>(steps) + 1);
    X.orbit.push_back(D2.induced.left(X.Gamma));
    for (long i = 0; i < steps; ++i) X.orbit.push_back(T.apply(X.orbit.back()));
    if (!out.empty()) {
      if (X.q <= out.back().q) {
        if (++discarded > 64) {
          throw Error(ErrorKind::BudgetExhausted, "q_n did not increase after 64 smaller intervals");
        }
        continue;
      }
      X.checks.expect(out.back().q < X.q, "q_increasing",
                      std::to_string(out.back().q) + " < " + std::to_string(X.q) +
                          (discarded ? ", " + std::to_string(discarded) + " intervals discarded" : ""));
    }
    discarded = 0;
    out.push_back(std::move(X));
    ++n;
  }
  return out;
}

FloorSums floor_birkhoff_sums(const Iet& T, const Cocycle& f, const RigidityTower& X) {
  FloorSums s;
  ExactScalar value = birkhoff_sum(T, f, X.orbit[0], X.q);
  Rational slope = derivative_sum(T, f, X.orbit[0], X.q);
  for (long i = 0; i < X.xi_floors; ++i) {
    s.at_left.push_back(value);
    s.slope.push_back(slope);
    const ExactScalar& u = X.orbit[i];
    const ExactScalar& w = X.orbit[X.q + i];
    value += f.eval(T, w) - f.eval(T, u);
    slope += f.slope_at(T, w) - f.slope_at(T, u);
  }
  return s;
}

EffCriterionResult verify_effcriterion(const Iet& T, const Cocycle& f, const Rational& a, const RigidityTower& X) {
  EffCriterionResult r;
  CheckReport& c = r.checks;
  const long d = static_cast<long>(T.size());
  const ExactScalar leb = X.measure();
  const Rational bound(1, 3 * d * d);
  c.expect(ExactScalar::rational(T.basis(), bound) < leb, "1:measure",
           "Leb(Xi) = " + to_float(leb, 12) + " > 1/(3d^2) = " + format_rational(bound));

  const ExactScalar qw = X.width * Rational(X.q);
  r.E = 1.0 / qw.approx();
  c.expect(X.xi_floors <= X.q, "2:height", "h = " + std::to_string(X.xi_floors) + ", q = " + std::to_string(X.q));
  c.expect(!(ExactScalar::rational(T.basis(), 1) < qw), "2:width", "q |I_n| = " + to_float(qw, 12));

  r.sup_displacement = ExactScalar::zero(T.basis());
  for (long i = 0; i < X.xi_floors; ++i) r.sup_displacement = max(r.sup_displacement, abs(X.displacement(i)));
  const ExactScalar qdisp = r.sup_displacement * Rational(X.q);
  r.D = qdisp.approx();
  c.expect(!(ExactScalar::rational(T.basis(), d) < qdisp), "3:displacement",
           "q sup|T^q x - x| = " + to_float(qdisp, 12) + " <= d");

  bool continuity = true;
  bool same_level = true;
  for (long i = 0; i < X.xi_floors; ++i) {
    const ExactScalar& u = X.orbit[i];
    const ExactScalar& v = X.orbit[X.q + i];
    const ExactScalar lo = min(u, v);
    const ExactScalar hi = max(u, v) + X.width;
    const Label piece = T.locate(lo);
    continuity = continuity && !(T.right(piece) < hi);
    const std::size_t k = X.first.floor_at(u);
    const Floor& fl = X.first.floors[k];
    same_level = same_level && k == X.first.floor_at(v) && !(fl.hi < hi) && fl.tower == X.gamma;
  }
  c.expect(continuity, "4:continuity", "[x, T^q x] inside one exchanged interval on every floor");
  c.expect(same_level, "4:same_level", "x and T^q x on one level of X_n");

  const FloorSums sums = floor_birkhoff_sums(T, f, X);
  const Rational aq = a * X.q;
  bool slope_ok = a != 0;
  for (const auto& s : sums.slope) slope_ok = slope_ok && s == aq;
  c.expect(slope_ok, "5:derivative", "S_q f' = a q = " + format_rational(aq) + (a == 0 ? " with a = 0" : ""));

  r.sup_abs_sum = ExactScalar::zero(T.basis());
  for (long i = 0; i < X.xi_floors; ++i) {
    const ExactScalar& left = sums.at_left[i];
    r.sup_abs_sum = max(r.sup_abs_sum, max(abs(left), abs(left + X.width * sums.slope[i])));
  }
  const Rational cap = abs(a) * (d + 2);
  c.expect(!(ExactScalar::rational(T.basis(), cap) < r.sup_abs_sum), "6:birkhoff_bound",
           "sup|S_q f| = " + to_float(r.sup_abs_sum, 12) + " <= |a|(d+2) = " + format_rational(cap));

  // The centre of the Γ tower: S_q f vanishes at T^{-floor((q-1)/2)}.
  const ExactScalar cf = center_point(T, X.frak_sigma);
  const long ell = X.frak_ell;
  const int delta = delta_half(X.frak_sigma);
  const std::string parity = X.q % 2 == 0 ? "q even" : "q odd";
  c.expect(X.q == 2 * ell - delta, "parity", parity + ", sigma = " + center_name(T, X.frak_sigma));
  const ExactScalar vanishing = birkhoff_sum(T, f, T.iterate(cf, -(ell - 1)), X.q);
  c.expect(vanishing.is_zero(), "parity:vanishing", "S_q f(T^-(ceil(q/2)-1) c) = " + to_float(vanishing, 12));
  const ExactScalar literal = birkhoff_sum(T, f, T.iterate(cf, -ell), X.q);
  const ExactScalar residual = f.eval(T, T.iterate(cf, -ell)) - f.eval(T, T.iterate(cf, ell - delta));
  c.expect(literal == residual, "parity:literal_residual",
           "S_q f(T^-(ceil(q/2)) c) = " + to_float(literal, 12) + " = f(T^-l c) - f(T^(l-d) c)");
  return r;
}

namespace {

std::vector<Segment> merge_segments(std::vector<Segment> s) {
  std::sort(s.begin(), s.end(), [](const Segment& x, const Segment& y) { return x.lo < y.lo; });
  std::vector<Segment> out;
  for (auto& seg : s) {
    if (!out.empty() && !(out.back().hi < seg.lo)) {
      out.back().hi = max(out.back().hi, seg.hi);
    } else {
      out.push_back(std::move(seg));
    }
  }
  return out;
}

std::vector<Segment> intersect(const std::vector<Segment>& x, const std::vector<Segment>& y) {
  std::vector<Segment> out;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    const ExactScalar& lo = max(x[i].lo, y[j].lo);
    const ExactScalar& hi = min(x[i].hi, y[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (x[i].hi < y[j].hi) ++i;
    else ++j;
  }
  return out;
}

}  // namespace

EssentialValueWitness essential_value_witness(const Iet& T, const Cocycle& f, const Rational& a,
                                              const std::vector<RigidityTower>& towers) {
  if (towers.empty()) throw Error(ErrorKind::InvalidInput, "no towers");
  EssentialValueWitness w;
  w.C = std::max(std::abs(a.get_d()), 1.0 / std::abs(a.get_d()));
  for (const auto& X : towers) {
    const FloorSums sums = floor_birkhoff_sums(T, f, X);
    std::vector<Segment> segs;
    for (long i = 0; i < X.xi_floors; ++i) {
      const ExactScalar& v = sums.at_left[i];
      const ExactScalar end = v + X.width * sums.slope[i];
      segs.push_back({min(v, end), max(v, end)});
      w.C = std::max({w.C, std::abs(v.approx()), std::abs(end.approx())});
    }
    segs = merge_segments(std::move(segs));
    ExactScalar measure = ExactScalar::zero(T.basis());
    for (const auto& s : segs) measure += s.hi - s.lo;
    w.image_measure.push_back(measure.approx());
    w.checks.expect(sign(measure) > 0, "image_measure:" + std::to_string(X.depth), to_float(measure, 12));
    ExactScalar disp = ExactScalar::zero(T.basis());
    for (long i = 0; i < X.xi_floors; ++i) disp = max(disp, abs(X.displacement(i)));
    w.D = std::max(w.D, (disp * Rational(X.q)).approx());
    w.E = std::max(w.E, 1.0 / (X.width * Rational(X.q)).approx());
    w.intersection = w.images.empty() ? segs : intersect(w.intersection, segs);
    w.images.push_back(std::move(segs));
  }
  w.empty = w.intersection.empty();
  if (w.empty) {
    w.checks.fail("intersection", "EmptyIntersection at depth " + std::to_string(towers.size()));
  } else {
    ExactScalar total = ExactScalar::zero(T.basis());
    for (const auto& s : w.intersection) total += s.hi - s.lo;
    w.checks.pass("intersection", std::to_string(w.intersection.size()) + " intervals, measure " + to_float(total, 12));
    w.candidate_lo = w.intersection.front().lo.approx();
    w.candidate_hi = w.candidate_lo + 1.0 / (2 * w.C * std::max({w.C, w.D, w.E}));
  }
  return w;
}

}  // namespace iet
