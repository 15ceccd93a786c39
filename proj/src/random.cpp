#include "iet/random.hpp"

#include <cmath>
#include <numeric>

namespace iet {

namespace {

std::vector<int> random_permutation(Rng& rng, std::size_t d) {
  std::vector<int> p(d);
  std::iota(p.begin(), p.end(), 1);
  for (std::size_t i = d; i > 1; --i) std::swap(p[i - 1], p[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(i) - 1))]);
  return p;
}

std::vector<std::string> letters(std::size_t d) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < d; ++i) out.emplace_back(1, static_cast<char>('A' + i));
  return out;
}

Rational nearest(double x, long den) { return ratio(std::lround(x * static_cast<double>(den)), den); }

// Lengths near targets t_i (Σ t_i < 1) with irrational parts drawn by `irrational`, last one closing the sum.
template <class F>
std::vector<ExactScalar> lengths_near(Rng& rng, const BasisPtr& basis, std::size_t d, F irrational) {
  std::vector<ExactScalar> out;
  ExactScalar total = ExactScalar::zero(basis);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    const double t = static_cast<double>(uniform_int(rng, 700, 1100)) / 1000.0 / static_cast<double>(d);
    std::vector<Rational> c(basis->size(), 0);
    irrational(i, c);
    ExactScalar part(basis, c);
    c[0] = nearest(t - part.approx(), 10000);
    out.emplace_back(basis, c);
    total += out.back();
  }
  out.push_back(ExactScalar::rational(basis, 1) - total);
  return out;
}

}  // namespace

long uniform_int(Rng& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

Rational uniform_rational(Rng& rng, const Rational& lo, const Rational& hi, long den) {
  const Rational a = lo * den, b = hi * den;
  const mpz_class ka = a.get_num() / a.get_den();
  const mpz_class kb = b.get_num() / b.get_den();
  const long k = uniform_int(rng, ka.get_si(), kb.get_si());
  return ratio(k, den);
}

Iet random_symmetric_iet(Rng& rng, std::size_t d) {
  if (d < 1 || d > 6) throw Error(ErrorKind::InvalidInput, "random symmetric IETs need 1 <= d <= 6");
  static const BasisPtr basis = Basis::sqrt_basis({2, 3, 5, 6, 7});
  auto lambda = lengths_near(rng, basis, d, [&](std::size_t i, std::vector<Rational>& c) {
    long r = uniform_int(rng, 1, 30);
    if (uniform_int(rng, 0, 1)) r = -r;
    c[i + 1] = ratio(r, 1000);
  });
  const std::vector<int> pi0 = random_permutation(rng, d);
  std::vector<int> pi1(d);
  for (std::size_t a = 0; a < d; ++a) pi1[a] = static_cast<int>(d) + 1 - pi0[a];
  return Iet::make(letters(d), pi0, pi1, lambda, ExactScalar::zero(basis), ExactScalar::rational(basis, 1));
}

Iet random_iet(Rng& rng, std::size_t d) {
  if (d < 1 || d > 26) throw Error(ErrorKind::InvalidInput, "random IETs need 1 <= d <= 26");
  static const BasisPtr basis = Basis::sqrt_basis({2, 3});
  for (;;) {
    const std::vector<int> pi0 = random_permutation(rng, d);
    const std::vector<int> pi1 = random_permutation(rng, d);
    auto lambda = lengths_near(rng, basis, d, [&](std::size_t, std::vector<Rational>& c) {
      c[1] = ratio(uniform_int(rng, -20, 20), 400);
      c[2] = ratio(uniform_int(rng, -20, 20), 400);
    });
    try {
      return Iet::make(letters(d), pi0, pi1, lambda, ExactScalar::zero(basis), ExactScalar::rational(basis, 1));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Reducible) throw;
    }
  }
}

SubintervalSpec random_explicit_interval(Rng& rng, const Iet& T) {
  const BasisPtr& b = T.basis();
  const Rational w = uniform_rational(rng, Rational(1, 20), Rational(1, 5), 1000);
  const double room = (T.length().approx() - w.get_d()) * 0.999;
  const Rational x = ratio(uniform_int(rng, 0, static_cast<long>(room * 1000)), 1000);
  return SubintervalSpec::explicit_interval(T.lo() + ExactScalar::rational(b, x), T.lo() + ExactScalar::rational(b, x + w));
}

std::optional<SubintervalSpec> random_dynamic_interval(Rng& rng, const Iet& T, const ConnectionReport& report,
                                                       double min_length, int tries) {
  const long d = static_cast<long>(T.size());
  for (int t = 0; t < tries; ++t) {
    DynamicEndpoints e{static_cast<Label>(uniform_int(rng, 0, d - 1)), uniform_int(rng, -4, 4),
                       static_cast<Label>(uniform_int(rng, 0, d - 1)), uniform_int(rng, -4, 4)};
    const ExactScalar lo = T.iterate(T.left(e.alpha), e.m0);
    const ExactScalar hi = T.iterate(T.left(e.beta), e.n0);
    if (!(lo < hi) || (hi - lo).approx() < min_length) continue;
    if (report.meets(lo, hi)) continue;
    try {
      return SubintervalSpec::dynamic_interval(T, e);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::InvalidInput) throw;
    }
  }
  return std::nullopt;
}

std::vector<ExactScalar> random_tower_widths(Rng& rng, const TowerDecomposition& D) {
  const std::size_t n = D.induced.size();
  std::vector<ExactScalar> v = D.induced.lambda();
  if (n < 2) return v;
  double smallest = v[0].approx();
  long tallest = 1;
  for (std::size_t g = 0; g < n; ++g) {
    smallest = std::min(smallest, v[g].approx());
    tallest = std::max(tallest, D.heights[g]);
  }
  const int moves = static_cast<int>(uniform_int(rng, 1, 3));
  for (int k = 0; k < moves; ++k) {
    const auto a = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 1));
    auto b = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 2));
    if (b >= a) ++b;
    // eps (h_b e_a - h_a e_b) keeps Σ v_γ h_γ; each entry moves by at most smallest / 4 / moves.
    const double cap = smallest / 4.0 / 3.0 / static_cast<double>(tallest);
    long den = 1L << 20;
    while (cap * static_cast<double>(den) < 16.0 && den < (1L << 60)) den <<= 4;
    const long top = std::max(1L, static_cast<long>(std::min(cap * static_cast<double>(den), 1e15)));
    Rational eps = ratio(uniform_int(rng, 1, top), den);
    if (uniform_int(rng, 0, 1)) eps = -eps;
    v[a] += ExactScalar::rational(v[a].basis(), eps * D.heights[b]);
    v[b] -= ExactScalar::rational(v[b].basis(), eps * D.heights[a]);
  }
  return v;
}

ExactScalar random_point(Rng& rng, const Iet& T) {
  const double lo = T.lo().approx(), hi = T.hi().approx();
  for (;;) {
    const Rational x = nearest(lo + (hi - lo) * static_cast<double>(uniform_int(rng, 0, 999999)) / 1e6, 1000000);
    const ExactScalar p = ExactScalar::rational(T.basis(), x);
    if (p < T.lo() || !(p < T.hi())) continue;
    bool clear = true;
    for (Label a = 0; a < T.size() && clear; ++a) clear = std::abs(T.left(a).approx() - x.get_d()) > 1e-3;
    if (clear) return p;
  }
}

SymmetricInterval random_symmetric_interval(Rng& rng, const Iet& T, const ConnectionReport& report, long m_max,
                                            int* revisits) {
  const long d = static_cast<long>(T.size());
  if (d < 2) throw Error(ErrorKind::InvalidInput, "symmetric intervals need d >= 2");
  for (;;) {
    const Label a = T.top(static_cast<int>(uniform_int(rng, 2, d)));
    const long m = uniform_int(rng, 1, m_max);
    const auto variant = uniform_int(rng, 0, 1) ? SymmetricVariant::Half : SymmetricVariant::Beta;
    if (report.M[a] && m >= *report.M[a]) continue;
    try {
      auto S = symmetric_interval(T, a, m, variant, report);
      if (report.meets(S.lo, S.hi)) continue;
      if (S.spec(T).dynamic) return S;
      if (revisits) ++*revisits;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotSymmetric && e.kind() != ErrorKind::EmptyInterval) throw;
    }
  }
}

}  // namespace iet
