#pragma once

#include <vector>

#include "iet/connections.hpp"
#include "iet/symmetry.hpp"

namespace iet {

/// slope * x + offset on one exchanged interval.
struct AffinePiece {
  Rational slope;
  ExactScalar offset;
};

class Cocycle {
 public:
  explicit Cocycle(std::vector<AffinePiece> pieces) : pieces_(std::move(pieces)) {}
  /// f(x) = a (x - c_{1/2}).
  static Cocycle central(const Iet& T, const Rational& a);
  /// slopes[α] x + offsets[α] on I_α.
  static Cocycle piecewise(const Iet& T, const std::vector<Rational>& slopes, const std::vector<ExactScalar>& offsets);

  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  const AffinePiece& piece(Label a) const { return pieces_[a]; }

  ExactScalar eval(const Iet& T, const ExactScalar& x) const;
  ExactScalar eval_on(Label a, const ExactScalar& x) const { return x * pieces_[a].slope + pieces_[a].offset; }
  const Rational& slope_at(const Iet& T, const ExactScalar& x) const { return pieces_[T.locate(x)].slope; }

  /// f∘I_I = -f off the endpoints, decided cell by cell.
  bool is_antisymmetric(const Iet& T) const;
  /// Σ_α ∫_{I_α} f in double precision; products of basis elements leave the basis.
  double integral(const Iet& T) const;

 private:
  std::vector<AffinePiece> pieces_;
};

/// S_n f(x) for signed n: Σ_{k<n} f(T^k x), 0, or -Σ_{n<=k<0} f(T^k x).
ExactScalar birkhoff_sum(const Iet& T, const Cocycle& f, const ExactScalar& x, long n);
/// Birkhoff sum of the piecewise slope.
Rational derivative_sum(const Iet& T, const Cocycle& f, const ExactScalar& x, long n);

struct SkewState {
  std::vector<ExactScalar> x;  // one coordinate, or two for the product
  std::vector<ExactScalar> r;
};

/// (x, r) -> (T x, r + f(x)) componentwise; returns n + 1 states.
std::vector<SkewState> skew_orbit(const Iet& T, const Cocycle& f, const SkewState& start, long n);

struct BerkTrujilloRow {
  long n;
  bool skipped;     // some orbit point in the window is an endpoint
  ExactScalar literal;   // S_{2n+δ} f(T^{-n} c)
  ExactScalar pairing;   // Σ_{i=-n+1}^{n} f(T^i c) for σ in A; equals literal for 1/2
  ExactScalar residual;  // f(T^{-n} c) - f(T^n c); zero for 1/2
};

struct BerkTrujilloResult {
  CenterLabel sigma;
  std::vector<BerkTrujilloRow> rows;
  CheckReport checks;
};

/// Throws InConnection, NotAntisymmetric, NotSymmetric.
BerkTrujilloResult berktrujillo_check(const Iet& T, const Cocycle& f, const CenterLabel& sigma, long N,
                                      const ConnectionReport& report);

}  // namespace iet
