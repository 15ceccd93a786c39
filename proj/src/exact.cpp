#include "iet/exact.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <regex>
#include <sstream>

namespace iet {

namespace {

constexpr double kEps = 0x1p-52;
constexpr int kMinSuppliedDigits = 50;

mpz_class pow10(int k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return r;
}

mpz_class pow2(int k) {
  mpz_class r = 1;
  r <<= k;
  return r;
}

// floor(sqrt(n) * scale) for scale = 2^k or 10^k given as scale^2.
mpz_class isqrt_scaled(unsigned long n, const mpz_class& scale_sq) {
  mpz_class v = scale_sq * n;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses a decimal string like "-2.2360679...", ignoring a trailing "...".
// Returns the truncated value and the number of fractional digits.
std::pair<Rational, int> parse_decimal(const std::string& raw) {
  std::string s = raw;
  while (!s.empty() && (s.back() == '.' || std::isspace(static_cast<unsigned char>(s.back())))) {
    s.pop_back();
  }
  static const std::regex pattern(R"(^(-?)(\d+)(?:\.(\d+))?$)");
  std::smatch m;
  if (!std::regex_match(s, m, pattern)) {
    throw Error(ErrorKind::InvalidInput, "malformed decimal expansion '" + raw + "'");
  }
  std::string frac = m[3].str();
  mpz_class num(m[2].str() + frac, 10);
  if (m[1].str() == "-") num = -num;
  return {make_rational(num, pow10(static_cast<int>(frac.size()))), static_cast<int>(frac.size())};
}

int significant_digits(const std::string& raw) {
  int count = 0;
  bool leading = true;
  for (char c : raw) {
    if (!std::isdigit(static_cast<unsigned char>(c))) continue;
    if (leading && c == '0') continue;
    leading = false;
    ++count;
  }
  return count;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw Error(ErrorKind::InvalidInput, "malformed rational '" + text + "'");
  }
  mpz_class num(m[1].str(), 10);
  mpz_class den = m[2].matched ? mpz_class(m[2].str(), 10) : mpz_class(1);
  if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + text + "'");
  return make_rational(num, den);
}

std::string format_rational(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ---------------------------------------------------------------------------
// Basis

BasisPtr Basis::make(const std::vector<ElementSpec>& specs) {
  if (specs.empty()) throw Error(ErrorKind::InvalidInput, "basis must contain the constant 1");
  auto basis = std::make_shared<Basis>();
  static const std::regex sqrt_name(R"(^sqrt(\d+)$)");
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& spec = specs[i];
    Element e;
    e.name = spec.name;
    e.supplied = spec.decimal;
    std::smatch m;
    if (spec.name == "1") {
      e.kind = Kind::One;
    } else if (std::regex_match(spec.name, m, sqrt_name)) {
      e.kind = Kind::SqrtInt;
      e.radicand = std::stoul(m[1].str());
      if (e.radicand == 0) throw Error(ErrorKind::InvalidInput, "sqrt0 is not a valid basis element");
    } else {
      e.kind = Kind::Decimal;
      if (!spec.decimal) {
        throw Error(ErrorKind::InvalidInput, "basis element '" + spec.name + "' needs a decimal expansion");
      }
    }
    if (i == 0 && e.kind != Kind::One) {
      throw Error(ErrorKind::InvalidInput, "basis element 0 must be the constant 1");
    }
    if (i > 0 && e.kind == Kind::One) {
      throw Error(ErrorKind::InvalidInput, "the constant 1 may only appear as element 0");
    }
    if (spec.decimal) {
      if (e.kind != Kind::One && significant_digits(*spec.decimal) < kMinSuppliedDigits) {
        throw Error(ErrorKind::InvalidInput,
                    "decimal expansion of '" + spec.name + "' must carry at least 50 digits");
      }
      auto [value, digits] = parse_decimal(*spec.decimal);
      e.supplied_value = value;
      e.supplied_digits = digits;
    }

    for (int rung = 0; rung < kPrecisionRungs; ++rung) {
      const int bits = precision_bits(rung);
      Enclosure& enc = e.ladder[rung];
      switch (e.kind) {
        case Kind::One:
          enc.lo = 1;
          enc.hi = 1;
          break;
        case Kind::SqrtInt: {
          mpz_class s = isqrt_scaled(e.radicand, pow2(2 * bits));
          enc.lo = make_rational(s, pow2(bits));
          enc.hi = make_rational(s + 1, pow2(bits));
          break;
        }
        case Kind::Decimal: {
          // Supplied digits may be truncated or rounded: widen by one unit.
          const int wanted = static_cast<int>(std::ceil(bits * 0.30103)) + 2;
          const int used = std::min(wanted, e.supplied_digits);
          mpz_class scale = pow10(used);
          Rational scaled = e.supplied_value * scale;
          mpz_class t = scaled.get_num() / scaled.get_den();  // truncation toward zero
          enc.lo = make_rational(t - 1, scale);
          enc.hi = make_rational(t + 1, scale);
          enc.exhausted = used < wanted;
          break;
        }
      }
    }
    if (e.kind == Kind::SqrtInt && spec.decimal) {
      const Enclosure& enc = e.ladder[kPrecisionRungs - 1];
      Rational unit = make_rational(1, pow10(e.supplied_digits));
      if (e.supplied_value + unit < enc.lo || e.supplied_value - unit > enc.hi) {
        throw Error(ErrorKind::InvalidInput, "supplied decimal for '" + spec.name + "' is inconsistent");
      }
    }
    const Enclosure& top = e.ladder[0];
    Rational mid = (top.lo + top.hi) / 2;
    e.approx = mid.get_d();
    e.approx_err = std::abs(e.approx) * kEps + Rational(top.hi - top.lo).get_d();
    basis->elements_.push_back(std::move(e));
  }
  return basis;
}

BasisPtr Basis::sqrt_basis(const std::vector<unsigned>& radicands) {
  std::vector<ElementSpec> specs{{"1", std::nullopt}};
  for (unsigned n : radicands) specs.push_back({"sqrt" + std::to_string(n), std::nullopt});
  return make(specs);
}

BasisPtr Basis::rationals() {
  static const BasisPtr basis = make({{"1", std::nullopt}});
  return basis;
}

std::string Basis::decimal(std::size_t i, int digits) const {
  const Element& e = elements_.at(i);
  if (digits < 0) digits = 0;
  mpz_class truncated;
  switch (e.kind) {
    case Kind::One:
      truncated = pow10(digits);
      break;
    case Kind::SqrtInt:
      truncated = isqrt_scaled(e.radicand, pow10(2 * digits));
      break;
    case Kind::Decimal: {
      if (digits > e.supplied_digits) {
        throw Error(ErrorKind::PrecisionExhausted,
                    "basis element '" + e.name + "' only carries " + std::to_string(e.supplied_digits) +
                        " digits");
      }
      Rational scaled = e.supplied_value * pow10(digits);
      truncated = scaled.get_num() / scaled.get_den();
      break;
    }
  }
  bool negative = truncated < 0;
  if (negative) truncated = -truncated;
  std::string s = truncated.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out = s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  return negative ? "-" + out : out;
}

bool Basis::same_as(const Basis& other) const {
  if (this == &other) return true;
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (elements_[i].name != other.elements_[i].name) return false;
    if (elements_[i].kind == Kind::Decimal &&
        elements_[i].supplied_value != other.elements_[i].supplied_value) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// ExactScalar

ExactScalar::ExactScalar(BasisPtr basis, std::vector<Rational> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  if (!basis_) throw Error(ErrorKind::BasisMismatch, "scalar without a basis");
  if (coeffs_.size() != basis_->size()) {
    throw Error(ErrorKind::BasisMismatch, "coefficient count " + std::to_string(coeffs_.size()) +
                                              " does not match basis size " +
                                              std::to_string(basis_->size()));
  }
  for (auto& c : coeffs_) c.canonicalize();
  refresh_approx();
}

ExactScalar ExactScalar::zero(const BasisPtr& basis) {
  return ExactScalar(basis, std::vector<Rational>(basis->size(), Rational(0)));
}

ExactScalar ExactScalar::rational(const BasisPtr& basis, const Rational& q) {
  std::vector<Rational> c(basis->size(), Rational(0));
  c[0] = q;
  return ExactScalar(basis, std::move(c));
}

ExactScalar ExactScalar::unit(const BasisPtr& basis, std::size_t i) {
  std::vector<Rational> c(basis->size(), Rational(0));
  c.at(i) = 1;
  return ExactScalar(basis, std::move(c));
}

bool ExactScalar::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool ExactScalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

void ExactScalar::refresh_approx() {
  double sum = 0.0;
  double magnitude = 0.0;
  double err = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    const double c = coeffs_[i].get_d();
    const double b = basis_->approx(i);
    const double term = c * b;
    sum += term;
    magnitude += std::abs(term);
    err += std::abs(c) * (basis_->approx_error(i) + std::abs(b) * 4 * kEps);
  }
  err += magnitude * (static_cast<double>(coeffs_.size()) + 2) * kEps;
  err = 2 * err + std::numeric_limits<double>::denorm_min();
  approx_ = sum;
  approx_err_ = std::isfinite(sum) && std::isfinite(err) ? err : std::numeric_limits<double>::infinity();
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  r.approx_ = -approx_;
  return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& rhs) {
  require_same_basis(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(rhs.coeffs_[i]) != 0) coeffs_[i] += rhs.coeffs_[i];
  }
  refresh_approx();
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& rhs) {
  require_same_basis(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(rhs.coeffs_[i]) != 0) coeffs_[i] -= rhs.coeffs_[i];
  }
  refresh_approx();
  return *this;
}

ExactScalar& ExactScalar::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  refresh_approx();
  return *this;
}

ExactScalar operator/(ExactScalar lhs, const Rational& q) {
  if (sgn(q) == 0) throw Error(ErrorKind::InvalidInput, "division of a scalar by zero");
  return lhs *= Rational(1) / q;
}

bool operator==(const ExactScalar& x, const ExactScalar& y) {
  require_same_basis(x, y);
  if (std::abs(x.approx_ - y.approx_) > x.approx_err_ + y.approx_err_) return false;
  return x.coeffs_ == y.coeffs_;
}

std::strong_ordering operator<=>(const ExactScalar& x, const ExactScalar& y) { return compare(x, y); }

void require_same_basis(const ExactScalar& x, const ExactScalar& y) {
  if (!x.basis() || !y.basis()) throw Error(ErrorKind::BasisMismatch, "scalar without a basis");
  if (x.basis() != y.basis() && !x.basis()->same_as(*y.basis())) {
    throw Error(ErrorKind::BasisMismatch, "scalars live over different bases");
  }
}

Enclosure enclose(const ExactScalar& x, int rung) {
  Enclosure out;
  out.lo = 0;
  out.hi = 0;
  const auto& basis = *x.basis();
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    const Rational& c = x.coeffs()[i];
    if (sgn(c) == 0) continue;
    const Enclosure& e = basis.enclosure(i, rung);
    out.exhausted = out.exhausted || e.exhausted;
    if (sgn(c) > 0) {
      out.lo += c * e.lo;
      out.hi += c * e.hi;
    } else {
      out.lo += c * e.hi;
      out.hi += c * e.lo;
    }
  }
  return out;
}

namespace {

int ladder_sign(const ExactScalar& x) {
  for (int rung = 0; rung < kPrecisionRungs; ++rung) {
    Enclosure e = enclose(x, rung);
    if (sgn(e.lo) > 0) return 1;
    if (sgn(e.hi) < 0) return -1;
  }
  throw Error(ErrorKind::PrecisionExhausted,
              "sign of " + to_string(x) + " unresolved at 4096 bits; basis is probably Q-dependent");
}

std::strong_ordering from_sign(int s) {
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace

int sign(const ExactScalar& x) {
  if (x.approx() > x.approx_error()) return 1;
  if (x.approx() < -x.approx_error()) return -1;
  if (x.is_zero()) return 0;
  if (x.is_rational()) return sgn(x.coeffs()[0]);
  return ladder_sign(x);
}

std::strong_ordering compare(const ExactScalar& x, const ExactScalar& y) {
  require_same_basis(x, y);
  const double diff = x.approx() - y.approx();
  const double err = x.approx_error() + y.approx_error() + std::abs(diff) * kEps;
  if (diff > err) return std::strong_ordering::greater;
  if (diff < -err) return std::strong_ordering::less;
  if (x.coeffs() == y.coeffs()) return std::strong_ordering::equal;
  return from_sign(sign(x - y));
}

std::string to_float(const ExactScalar& x, int digits) {
  if (digits < 1) digits = 1;
  const mpz_class scale = pow10(digits);
  auto round_half_away = [](const Rational& v) {
    Rational a = abs(v) + Rational(1, 2);
    mpz_class n = a.get_num() / a.get_den();
    return sgn(v) < 0 ? mpz_class(-n) : n;
  };

  std::optional<mpz_class> scaled;
  if (x.is_rational()) {
    scaled = round_half_away(x.coeffs()[0] * scale);
  } else {
    for (int rung = 0; rung < kPrecisionRungs && !scaled; ++rung) {
      Enclosure e = enclose(x, rung);
      mpz_class lo = round_half_away(e.lo * scale);
      mpz_class hi = round_half_away(e.hi * scale);
      if (lo == hi) scaled = lo;
    }
    if (!scaled) {
      throw Error(ErrorKind::PrecisionExhausted,
                  "cannot round " + to_string(x) + " to " + std::to_string(digits) + " digits");
    }
  }

  mpz_class n = *scaled;
  const bool negative = n < 0;
  if (negative) n = -n;
  std::string s = n.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out = s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
  return negative ? "-" + out : out;
}

std::vector<std::string> coeff_strings(const ExactScalar& x) {
  std::vector<std::string> out;
  out.reserve(x.coeffs().size());
  for (const auto& c : x.coeffs()) out.push_back(format_rational(c));
  return out;
}

std::string to_string(const ExactScalar& x) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    const Rational& c = x.coeffs()[i];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rational a = abs(c);
    const std::string& name = x.basis()->name(i);
    if (name == "1") {
      os << format_rational(a);
    } else if (a == 1) {
      os << name;
    } else {
      os << "(" << format_rational(a) << ")*" << name;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace iet
