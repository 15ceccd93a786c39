#include "iet/cocycle.hpp"

namespace iet {

Cocycle Cocycle::central(const Iet& T, const Rational& a) {
  std::vector<AffinePiece> pieces(T.size(), AffinePiece{a, -(T.half() * a)});
  return Cocycle(std::move(pieces));
}

Cocycle Cocycle::piecewise(const Iet& T, const std::vector<Rational>& slopes, const std::vector<ExactScalar>& offsets) {
  if (slopes.size() != T.size() || offsets.size() != T.size()) {
    throw Error(ErrorKind::InvalidInput, "cocycle needs one piece per label");
  }
  std::vector<AffinePiece> pieces;
  for (Label a = 0; a < T.size(); ++a) {
    require_same_basis(offsets[a], T.lo());
    pieces.push_back({slopes[a], offsets[a]});
  }
  return Cocycle(std::move(pieces));
}

ExactScalar Cocycle::eval(const Iet& T, const ExactScalar& x) const { return eval_on(T.locate(x), x); }

bool Cocycle::is_antisymmetric(const Iet& T) const {
  std::vector<ExactScalar> cuts{T.lo(), T.hi()};
  for (Label a = 0; a < T.size(); ++a) {
    cuts.push_back(T.left(a));
    cuts.push_back(T.reflect(T.left(a)));
  }
  sort_unique(cuts);
  const ExactScalar L = T.lo() + T.hi();
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const ExactScalar mid = (cuts[i] + cuts[i + 1]) / Rational(2);
    const AffinePiece& p = pieces_[T.locate(mid)];
    const AffinePiece& q = pieces_[T.locate(T.reflect(mid))];
    // p.s x + p.o = -(q.s (L - x) + q.o) for all x in the cell.
    if (p.slope != q.slope || !(p.offset == -(L * q.slope) - q.offset)) return false;
  }
  return true;
}

double Cocycle::integral(const Iet& T) const {
  double total = 0;
  for (Label a = 0; a < T.size(); ++a) {
    const ExactScalar mid = (T.left(a) + T.right(a)) / Rational(2);
    total += T.lambda(a).approx() * eval_on(a, mid).approx();
  }
  return total;
}

ExactScalar birkhoff_sum(const Iet& T, const Cocycle& f, const ExactScalar& x, long n) {
  ExactScalar total = ExactScalar::zero(T.basis());
  if (!T.contains(x)) throw Error(ErrorKind::OutOfDomain, to_string(x) + " is not in I");
  ExactScalar y = x;
  if (n > 0) {
    for (long k = 0; k < n; ++k) {
      const Label a = T.locate(y);
      total += f.eval_on(a, y);
      y += T.translation(a);
    }
  } else {
    for (long k = 0; k < -n; ++k) {
      y = T.apply_inverse(y);
      total -= f.eval(T, y);
    }
  }
  return total;
}

Rational derivative_sum(const Iet& T, const Cocycle& f, const ExactScalar& x, long n) {
  if (!T.contains(x)) throw Error(ErrorKind::OutOfDomain, to_string(x) + " is not in I");
  Rational total = 0;
  ExactScalar y = x;
  if (n > 0) {
    for (long k = 0; k < n; ++k) {
      const Label a = T.locate(y);
      total += f.piece(a).slope;
      y += T.translation(a);
    }
  } else {
    for (long k = 0; k < -n; ++k) {
      y = T.apply_inverse(y);
      total -= f.slope_at(T, y);
    }
  }
  return total;
}

std::vector<SkewState> skew_orbit(const Iet& T, const Cocycle& f, const SkewState& start, long n) {
  if (start.x.empty() || start.x.size() > 2 || start.r.size() != start.x.size()) {
    throw Error(ErrorKind::InvalidInput, "skew state needs one or two coordinates with matching fibers");
  }
  if (n < 0) throw Error(ErrorKind::InvalidInput, "n must be non-negative");
  for (const auto& x : start.x) {
    if (!T.contains(x)) throw Error(ErrorKind::OutOfDomain, to_string(x) + " is not in I");
  }
  std::vector<SkewState> out{start};
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k < n; ++k) {
    SkewState next = out.back();
    for (std::size_t j = 0; j < next.x.size(); ++j) {
      const Label a = T.locate(next.x[j]);
      next.r[j] += f.eval_on(a, next.x[j]);
      next.x[j] += T.translation(a);
    }
    out.push_back(std::move(next));
  }
  return out;
}

BerkTrujilloResult berktrujillo_check(const Iet& T, const Cocycle& f, const CenterLabel& sigma, long N,
                                      const ConnectionReport& report) {
  if (!T.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "permutation is not symmetric");
  if (!f.is_antisymmetric(T)) throw Error(ErrorKind::NotAntisymmetric, "f o I != -f");
  const ExactScalar c = center_point(T, sigma);
  const std::string name = center_name(T, sigma);
  if (report.contains_point(c)) throw Error(ErrorKind::InConnection, "c_" + name + " lies in a connection");
  const int delta = delta_half(sigma);

  // fwd[i] = f(T^i c), bwd[i] = f(T^{-i} c); dirty_* marks the first endpoint hit.
  std::vector<ExactScalar> fwd, bwd;
  long dirty_f = N + 1, dirty_b = N + 1;
  ExactScalar y = c;
  for (long i = 0; i <= N; ++i) {
    if (i > 0) y = T.apply(y);
    if (dirty_f > N && i > 0 && T.endpoint_at(y)) dirty_f = i;
    fwd.push_back(f.eval(T, y));
  }
  y = c;
  bwd.push_back(fwd[0]);
  for (long i = 1; i <= N; ++i) {
    y = T.apply_inverse(y);
    if (dirty_b > N && T.endpoint_at(y)) dirty_b = i;
    bwd.push_back(f.eval(T, y));
  }
  if (T.endpoint_at(c)) dirty_f = dirty_b = 0;

  BerkTrujilloResult out;
  out.sigma = sigma;
  const ExactScalar zero = ExactScalar::zero(T.basis());
  // core = Σ_{i=-n+1}^{n-1} f(T^i c)
  ExactScalar core = zero;
  long literal_zero = 0, pairing_zero = 0, residual_ok = 0, skipped = 0;
  for (long n = 0; n <= N; ++n) {
    if (n == 1) core = fwd[0];
    else if (n > 1) core += fwd[n - 1] + bwd[n - 1];
    BerkTrujilloRow row{n, false, zero, zero, zero};
    const ExactScalar with_back = n > 0 ? core + bwd[n] : zero;  // Σ_{-n}^{n-1}
    if (delta) {
      row.literal = n == 0 ? fwd[0] : with_back + fwd[n];
      row.pairing = row.literal;
    } else {
      row.literal = with_back;
      row.pairing = n == 0 ? zero : core + fwd[n];
      row.residual = bwd[n] - fwd[n];
    }
    row.skipped = n >= dirty_f || n >= dirty_b;
    if (row.skipped) {
      ++skipped;
    } else {
      literal_zero += row.literal.is_zero();
      pairing_zero += row.pairing.is_zero();
      residual_ok += row.literal == row.residual;
    }
    out.rows.push_back(std::move(row));
  }
  const long tested = N + 1 - skipped;
  const std::string of = " of " + std::to_string(tested);
  if (delta) {
    out.checks.expect(literal_zero == tested, "literal_zero:c_1/2", std::to_string(literal_zero) + of);
  } else {
    out.checks.expect(pairing_zero == tested, "pairing_zero:c_" + name, std::to_string(pairing_zero) + of);
    out.checks.expect(residual_ok == tested, "literal_residual:c_" + name,
                      "S_2n f(T^-n c) = f(T^-n c) - f(T^n c) for " + std::to_string(residual_ok) + of);
    out.checks.add("literal_zero:c_" + name, Status::Skipped,
                   std::to_string(literal_zero) + of + " literal sums vanish");
  }
  if (skipped > 0) out.checks.skip("endpoint_windows", std::to_string(skipped) + " values of n hit an endpoint");
  return out;
}

}  // namespace iet
