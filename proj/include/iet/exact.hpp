#pragma once

// Exact scalars: rational linear combinations over a declared basis of reals
// that is assumed to be linearly independent over Q.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "iet/error.hpp"

namespace iet {

using Rational = mpq_class;

/// Number of rungs on the precision ladder: 64, 128, ..., 4096 bits.
inline constexpr int kPrecisionRungs = 7;
inline constexpr int precision_bits(int rung) { return 64 << rung; }

/// Parses "p/q", "p" or "-p/q". Throws InvalidInput on malformed text or q == 0.
Rational parse_rational(const std::string& text);
/// num / den in canonical form; mpq_class(num, den) alone is not reduced.
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}
std::string format_rational(const Rational& q);

/// A rational enclosure [lo, hi] of a basis element.
struct Enclosure {
  Rational lo;
  Rational hi;
  bool exhausted = false;  // the provider could not reach the requested width
};

class Basis {
 public:
  enum class Kind { One, SqrtInt, Decimal };

  struct ElementSpec {
    std::string name;
    std::optional<std::string> decimal;
  };

  /// Element names "1" (the constant), "sqrtN" (square root of the integer N,
  /// recomputed to any precision) or any other name with a supplied decimal
  /// expansion of at least 50 significant digits. Element 0 must be "1".
  static std::shared_ptr<const Basis> make(const std::vector<ElementSpec>& elements);

  /// Convenience: {1, sqrt(n_1), sqrt(n_2), ...}.
  static std::shared_ptr<const Basis> sqrt_basis(const std::vector<unsigned>& radicands);
  static std::shared_ptr<const Basis> rationals();

  std::size_t size() const { return elements_.size(); }
  const std::string& name(std::size_t i) const { return elements_[i].name; }
  Kind kind(std::size_t i) const { return elements_[i].kind; }
  const std::optional<std::string>& supplied_decimal(std::size_t i) const {
    return elements_[i].supplied;
  }

  const Enclosure& enclosure(std::size_t i, int rung) const { return elements_[i].ladder[rung]; }
  double approx(std::size_t i) const { return elements_[i].approx; }
  double approx_error(std::size_t i) const { return elements_[i].approx_err; }

  /// Decimal expansion of element i truncated to `digits` fractional digits.
  /// Deterministic; throws PrecisionExhausted if a supplied expansion is too short.
  std::string decimal(std::size_t i, int digits) const;

  bool same_as(const Basis& other) const;

 private:
  struct Element {
    std::string name;
    Kind kind = Kind::One;
    unsigned long radicand = 1;
    std::optional<std::string> supplied;
    Rational supplied_value;  // truncated value of `supplied`
    int supplied_digits = 0;  // fractional digits in `supplied`
    Enclosure ladder[kPrecisionRungs];
    double approx = 1.0;
    double approx_err = 0.0;
  };

  std::vector<Element> elements_;
};

using BasisPtr = std::shared_ptr<const Basis>;

class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(BasisPtr basis, std::vector<Rational> coeffs);

  static ExactScalar zero(const BasisPtr& basis);
  static ExactScalar rational(const BasisPtr& basis, const Rational& q);
  /// The i-th basis element itself.
  static ExactScalar unit(const BasisPtr& basis, std::size_t i);

  const BasisPtr& basis() const { return basis_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  /// True when only the coefficient of the constant 1 may be nonzero.
  bool is_rational() const;

  /// Double approximation and a rigorous bound on its absolute error.
  double approx() const { return approx_; }
  double approx_error() const { return approx_err_; }

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& rhs);
  ExactScalar& operator-=(const ExactScalar& rhs);
  ExactScalar& operator*=(const Rational& q);

  friend ExactScalar operator+(ExactScalar lhs, const ExactScalar& rhs) { return lhs += rhs; }
  friend ExactScalar operator-(ExactScalar lhs, const ExactScalar& rhs) { return lhs -= rhs; }
  friend ExactScalar operator*(ExactScalar lhs, const Rational& q) { return lhs *= q; }
  friend ExactScalar operator*(const Rational& q, ExactScalar rhs) { return rhs *= q; }
  friend ExactScalar operator/(ExactScalar lhs, const Rational& q);

  /// Exact equality: coefficientwise (basis independence is assumed).
  friend bool operator==(const ExactScalar& x, const ExactScalar& y);
  friend std::strong_ordering operator<=>(const ExactScalar& x, const ExactScalar& y);

 private:
  void refresh_approx();

  BasisPtr basis_;
  std::vector<Rational> coeffs_;
  double approx_ = 0.0;
  double approx_err_ = 0.0;
};

/// -1, 0 or +1. Escalates precision 64 -> 4096 bits; throws PrecisionExhausted.
int sign(const ExactScalar& x);
/// Throws BasisMismatch when the operands live over different bases.
std::strong_ordering compare(const ExactScalar& x, const ExactScalar& y);
void require_same_basis(const ExactScalar& x, const ExactScalar& y);

/// Correctly rounded (half away from zero) decimal with `digits` fractional digits.
std::string to_float(const ExactScalar& x, int digits);
/// Rational enclosure of the value at the given ladder rung.
Enclosure enclose(const ExactScalar& x, int rung);

inline const ExactScalar& min(const ExactScalar& x, const ExactScalar& y) { return y < x ? y : x; }
inline const ExactScalar& max(const ExactScalar& x, const ExactScalar& y) { return x < y ? y : x; }
inline ExactScalar abs(const ExactScalar& x) { return sign(x) < 0 ? -x : x; }

/// Coefficient list rendering, e.g. ["-1/2", "1/2"].
std::vector<std::string> coeff_strings(const ExactScalar& x);
std::string to_string(const ExactScalar& x);

}  // namespace iet
