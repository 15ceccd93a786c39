#include "iet/iet.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace iet {

namespace {

std::vector<Label> order_by(const std::vector<int>& pi, const char* which) {
  const std::size_t d = pi.size();
  std::vector<Label> order(d, d);
  for (Label a = 0; a < d; ++a) {
    const int k = pi[a];
    if (k < 1 || static_cast<std::size_t>(k) > d || order[k - 1] != d) {
      throw Error(ErrorKind::InvalidInput, std::string(which) + " is not a bijection onto 1..d");
    }
    order[k - 1] = a;
  }
  return order;
}

}  // namespace

Iet Iet::make(std::vector<std::string> alphabet, std::vector<int> pi0, std::vector<int> pi1,
              std::vector<ExactScalar> lambda, ExactScalar lo, ExactScalar hi) {
  return make(std::move(alphabet), std::move(pi0), std::move(pi1), std::move(lambda), std::move(lo),
              std::move(hi), Options{});
}

Iet Iet::make(std::vector<std::string> alphabet, std::vector<int> pi0, std::vector<int> pi1,
              std::vector<ExactScalar> lambda, ExactScalar lo, ExactScalar hi, Options options) {
  const std::size_t d = alphabet.size();
  if (d == 0) throw Error(ErrorKind::InvalidInput, "empty alphabet");
  if (pi0.size() != d || pi1.size() != d || lambda.size() != d) {
    throw Error(ErrorKind::InvalidInput, "pi0, pi1 and lambda must have one entry per label");
  }
  {
    std::set<std::string> seen(alphabet.begin(), alphabet.end());
    if (seen.size() != d) throw Error(ErrorKind::InvalidInput, "duplicate labels in alphabet");
  }
  for (const auto& l : lambda) {
    require_same_basis(l, lo);
  }
  require_same_basis(lo, hi);

  Iet T;
  T.alphabet_ = std::move(alphabet);
  T.pi0_ = std::move(pi0);
  T.pi1_ = std::move(pi1);
  T.top_ = order_by(T.pi0_, "pi0");
  T.bottom_ = order_by(T.pi1_, "pi1");
  T.lambda_ = std::move(lambda);
  T.lo_ = std::move(lo);
  T.hi_ = std::move(hi);

  for (Label a = 0; a < d; ++a) {
    if (sign(T.lambda_[a]) <= 0) {
      throw Error(ErrorKind::NonPositiveLength, "length of '" + T.alphabet_[a] + "' is not positive");
    }
  }
  ExactScalar total = ExactScalar::zero(T.lo_.basis());
  for (const auto& l : T.lambda_) total += l;
  if (!(total == T.hi_ - T.lo_)) {
    throw Error(ErrorKind::LengthSumMismatch, "lengths sum to " + to_string(total) + " but |I| = " +
                                                  to_string(T.hi_ - T.lo_));
  }
  if (!options.allow_reducible) {
    int reach = 0;
    for (std::size_t k = 1; k < d; ++k) {
      reach = std::max(reach, T.pi1_[T.top_[k - 1]]);
      if (reach == static_cast<int>(k)) {
        throw Error(ErrorKind::Reducible,
                    "slots 1.." + std::to_string(k) + " form an invariant block");
      }
    }
  }

  T.left_.assign(d, T.lo_);
  T.image_left_.assign(d, T.lo_);
  T.shift_.assign(d, ExactScalar::zero(T.lo_.basis()));
  ExactScalar acc = T.lo_;
  for (std::size_t k = 0; k < d; ++k) {
    T.left_[T.top_[k]] = acc;
    acc += T.lambda_[T.top_[k]];
  }
  acc = T.lo_;
  for (std::size_t k = 0; k < d; ++k) {
    T.image_left_[T.bottom_[k]] = acc;
    acc += T.lambda_[T.bottom_[k]];
  }
  for (Label a = 0; a < d; ++a) T.shift_[a] = T.image_left_[a] - T.left_[a];
  return T;
}

std::optional<Label> Iet::find(const std::string& name) const {
  for (Label a = 0; a < alphabet_.size(); ++a) {
    if (alphabet_[a] == name) return a;
  }
  return std::nullopt;
}

ExactScalar Iet::center(Label a) const { return left_[a] + lambda_[a] / Rational(2); }

ExactScalar Iet::half() const { return (lo_ + hi_) / Rational(2); }

ExactScalar Iet::reflect(const ExactScalar& x) const { return lo_ + hi_ - x; }

bool Iet::contains(const ExactScalar& x) const { return !(x < lo_) && x < hi_; }

Label Iet::locate(const ExactScalar& x) const {
  if (!contains(x)) throw Error(ErrorKind::OutOfDomain, to_string(x) + " is outside the base interval");
  std::size_t lo = 0, hi = top_.size();
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (x < left_[top_[mid]]) hi = mid;
    else lo = mid;
  }
  return top_[lo];
}

Label Iet::locate_image(const ExactScalar& x) const {
  if (!contains(x)) throw Error(ErrorKind::OutOfDomain, to_string(x) + " is outside the base interval");
  std::size_t lo = 0, hi = bottom_.size();
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (x < image_left_[bottom_[mid]]) hi = mid;
    else lo = mid;
  }
  return bottom_[lo];
}

std::optional<Label> Iet::endpoint_at(const ExactScalar& x) const {
  if (!contains(x)) return std::nullopt;
  const Label a = locate(x);
  if (left_[a] == x) return a;
  return std::nullopt;
}

ExactScalar Iet::apply(const ExactScalar& x) const { return x + shift_[locate(x)]; }

ExactScalar Iet::apply_inverse(const ExactScalar& x) const { return x - shift_[locate_image(x)]; }

ExactScalar Iet::iterate(const ExactScalar& x, long n) const {
  ExactScalar y = x;
  if (n >= 0) {
    for (long i = 0; i < n; ++i) y = apply(y);
  } else {
    for (long i = 0; i < -n; ++i) y = apply_inverse(y);
  }
  return y;
}

bool Iet::is_symmetric() const {
  const int d = static_cast<int>(size());
  for (int i = 1; i <= d; ++i) {
    if (pi1_[top(i)] != d + 1 - i) return false;
  }
  return true;
}

bool Iet::is_nondegenerate() const {
  for (int k = 2; k <= static_cast<int>(size()); ++k) {
    if (pi1_[top(k - 1)] + 1 == pi1_[top(k)]) return false;
  }
  return true;
}

std::vector<OrbitPoint> orbit(const Iet& T, const ExactScalar& x, long n) {
  if (!T.contains(x)) throw Error(ErrorKind::OutOfDomain, to_string(x) + " is outside the base interval");
  std::vector<OrbitPoint> out;
  out.reserve(static_cast<std::size_t>(std::abs(n)) + 1);
  ExactScalar y = x;
  out.push_back({y, T.endpoint_at(y)});
  const long steps = std::abs(n);
  for (long i = 0; i < steps; ++i) {
    y = n > 0 ? T.apply(y) : T.apply_inverse(y);
    out.push_back({y, T.endpoint_at(y)});
  }
  return out;
}

std::vector<MarkedPoint> marked_points(const Iet& T) {
  std::vector<MarkedPoint> out;
  for (Label a = 0; a < T.size(); ++a) out.push_back({MarkedPoint::Kind::Endpoint, a, T.left(a)});
  for (Label a = 0; a < T.size(); ++a) out.push_back({MarkedPoint::Kind::Center, a, T.center(a)});
  out.push_back({MarkedPoint::Kind::Half, std::nullopt, T.half()});
  return out;
}

CheckReport verify_conjugacy(const Iet& T, const std::vector<ExactScalar>& sample) {
  for (const auto& x : sample) {
    if (T.endpoint_at(x)) {
      throw Error(ErrorKind::SampleOnEndpoint, to_string(x) + " is an endpoint of an exchanged interval");
    }
  }
  CheckReport report;
  std::size_t bad = 0;
  std::string first_bad;
  for (const auto& x : sample) {
    const ExactScalar lhs = T.reflect(T.apply(x));
    const ExactScalar rhs = T.apply_inverse(T.reflect(x));
    if (!(lhs == rhs)) {
      if (bad == 0) first_bad = to_float(x, 12);
      ++bad;
    }
  }
  report.expect(bad == 0, "conjugacy",
                std::to_string(sample.size() - bad) + "/" + std::to_string(sample.size()) + " points agree" +
                    (bad ? ", first failure at x = " + first_bad : ""));

  const int d = static_cast<int>(T.size());
  for (int k = 1; k < d; ++k) {
    const Label a = T.top(k);
    const Label ahat = T.top(k + 1);
    const ExactScalar image = T.apply(T.left(a));
    const bool ok = !(image == T.lo()) && T.reflect(image) == T.left(ahat);
    report.expect(ok, "endpoint_identity:" + T.name(a), "I(T(dI_" + T.name(a) + ")) = dI_" + T.name(ahat));
  }
  return report;
}

void sort_unique(std::vector<ExactScalar>& points) {
  std::sort(points.begin(), points.end(), [](const ExactScalar& x, const ExactScalar& y) { return x < y; });
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

std::vector<ExactScalar> separating_sample(const Iet& T) {
  std::vector<ExactScalar> cuts{T.lo(), T.hi()};
  for (Label a = 0; a < T.size(); ++a) {
    cuts.push_back(T.left(a));
    const ExactScalar image = T.apply(T.left(a));
    cuts.push_back(image);
    if (T.lo() < image) cuts.push_back(T.reflect(image));
  }
  sort_unique(cuts);
  std::vector<ExactScalar> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) out.push_back((cuts[i] + cuts[i + 1]) / Rational(2));
  return out;
}

bool iterate_interval(const Iet& T, const ExactScalar& lo, const ExactScalar& width, long n,
                      ExactScalar* image_lo) {
  ExactScalar u = lo;
  for (long k = 0; k < n; ++k) {
    const Label a = T.locate(u);
    if (T.right(a) < u + width) return false;
    u += T.translation(a);
  }
  if (image_lo) *image_lo = u;
  return true;
}

}  // namespace iet
