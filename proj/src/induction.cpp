#include "iet/induction.hpp"

#include <algorithm>
#include <numeric>

namespace iet {

namespace {

bool in_half_open(const ExactScalar& x, const ExactScalar& lo, const ExactScalar& hi) {
  return !(x < lo) && x < hi;
}

bool in_open(const ExactScalar& x, const ExactScalar& lo, const ExactScalar& hi) {
  return lo < x && x < hi;
}

struct Piece {
  ExactScalar origin;
  ExactScalar pos;
  ExactScalar width;
};

}  // namespace

SubintervalSpec SubintervalSpec::explicit_interval(ExactScalar lo, ExactScalar hi) {
  if (!(lo < hi)) throw Error(ErrorKind::EmptyInterval, "[" + to_string(lo) + ", " + to_string(hi) + ") is empty");
  SubintervalSpec s;
  s.lo = std::move(lo);
  s.hi = std::move(hi);
  return s;
}

SubintervalSpec SubintervalSpec::dynamic_interval(const Iet& T, DynamicEndpoints e) {
  if (e.alpha >= T.size() || e.beta >= T.size()) throw Error(ErrorKind::InvalidInput, "unknown label");
  SubintervalSpec s;
  s.dynamic = e;
  s.lo = T.iterate(T.left(e.alpha), e.m0);
  s.hi = T.iterate(T.left(e.beta), e.n0);
  if (!(s.lo < s.hi)) {
    throw Error(ErrorKind::EmptyInterval, "dynamic endpoints give an empty interval");
  }
  auto check = [&](Label a, long power, const char* which) {
    const long step = power >= 0 ? 1 : -1;
    ExactScalar x = T.left(a);
    for (long m = 0; m != power; m += step) {
      if (in_half_open(x, s.lo, s.hi)) {
        throw Error(ErrorKind::InvalidInput, std::string(which) + " endpoint orbit enters J at power " +
                                                 std::to_string(m) + " before reaching it");
      }
      x = step > 0 ? T.apply(x) : T.apply_inverse(x);
    }
  };
  check(e.alpha, e.m0, "left");
  check(e.beta, e.n0, "right");
  return s;
}

std::size_t TowerDecomposition::floor_index(std::size_t tower, long level) const {
  return level_index.at(tower).at(static_cast<std::size_t>(level));
}

std::size_t TowerDecomposition::floor_at(const ExactScalar& x) const {
  std::size_t lo = 0, hi = floors.size();
  if (hi == 0 || x < floors.front().lo || !(x < floors.back().hi)) {
    throw Error(ErrorKind::OutOfDomain, to_string(x) + " is not covered by the towers");
  }
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (x < floors[mid].lo) hi = mid;
    else lo = mid;
  }
  return lo;
}

TowerDecomposition induce(const Iet& T, const SubintervalSpec& J, long budget) {
  const ExactScalar& jlo = J.lo;
  const ExactScalar& jhi = J.hi;
  if (!(jlo < jhi)) throw Error(ErrorKind::EmptyInterval, "J is empty");
  if (jlo < T.lo() || T.hi() < jhi) throw Error(ErrorKind::OutOfDomain, "J is not contained in I");

  struct Returned {
    Piece piece;
    long time;
  };
  std::vector<Piece> active{{jlo, jlo, jhi - jlo}};
  std::vector<Returned> done;
  long steps = 0;
  for (long time = 1; !active.empty(); ++time) {
    std::vector<Piece> moved;
    for (const auto& p : active) {
      ExactScalar u = p.pos;
      ExactScalar o = p.origin;
      ExactScalar w = p.width;
      while (sign(w) > 0) {
        const Label a = T.locate(u);
        const ExactScalar room = T.right(a) - u;
        const ExactScalar take = room < w ? room : w;
        moved.push_back({o, u + T.translation(a), take});
        u += take;
        o += take;
        w -= take;
      }
    }
    active.clear();
    for (auto& q : moved) {
      if (++steps > budget) {
        throw Error(ErrorKind::BudgetExhausted, "first return not found within " + std::to_string(budget) +
                                                    " piece iterations");
      }
      // Split at the endpoints of J.
      std::vector<ExactScalar> cuts{q.pos, q.pos + q.width};
      if (in_open(jlo, cuts[0], cuts[1])) cuts.insert(cuts.begin() + 1, jlo);
      if (in_open(jhi, cuts.front(), cuts.back())) cuts.insert(cuts.end() - 1, jhi);
      for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Piece part{q.origin + (cuts[i] - q.pos), cuts[i], cuts[i + 1] - cuts[i]};
        if (in_half_open(cuts[i], jlo, jhi)) done.push_back({std::move(part), time});
        else active.push_back(std::move(part));
      }
    }
  }

  std::sort(done.begin(), done.end(),
            [](const Returned& x, const Returned& y) { return x.piece.origin < y.piece.origin; });

  // Merge neighbours that share return time and translation and stay
  // continuous together up to the return.
  std::vector<Returned> merged;
  for (auto& r : done) {
    if (!merged.empty()) {
      Returned& last = merged.back();
      const bool adjacent = last.piece.origin + last.piece.width == r.piece.origin;
      const bool same = last.time == r.time &&
                        last.piece.pos - last.piece.origin == r.piece.pos - r.piece.origin;
      if (adjacent && same &&
          iterate_interval(T, last.piece.origin, last.piece.width + r.piece.width, last.time)) {
        last.piece.width += r.piece.width;
        continue;
      }
    }
    merged.push_back(std::move(r));
  }

  const std::size_t dj = merged.size();
  std::vector<std::string> names;
  if (dj <= T.size()) {
    for (std::size_t k = 1; k <= dj; ++k) names.push_back(T.name(T.top(static_cast<int>(k))));
  } else {
    for (std::size_t k = 1; k <= dj; ++k) names.push_back("J" + std::to_string(k));
  }
  std::vector<int> pi0(dj), pi1(dj);
  std::vector<ExactScalar> lengths;
  std::iota(pi0.begin(), pi0.end(), 1);
  std::vector<std::size_t> by_image(dj);
  std::iota(by_image.begin(), by_image.end(), 0);
  std::sort(by_image.begin(), by_image.end(),
            [&](std::size_t x, std::size_t y) { return merged[x].piece.pos < merged[y].piece.pos; });
  for (std::size_t k = 0; k < dj; ++k) pi1[by_image[k]] = static_cast<int>(k) + 1;
  for (const auto& r : merged) lengths.push_back(r.piece.width);

  TowerDecomposition D;
  D.spec = J;
  D.induced = Iet::make(names, pi0, pi1, lengths, jlo, jhi, Iet::Options{true});
  for (std::size_t g = 0; g < dj; ++g) {
    if (!(D.induced.image_left(g) == merged[g].piece.pos)) {
      throw Error(ErrorKind::CheckFailed, "returned pieces do not tile J");
    }
    D.heights.push_back(merged[g].time);
  }

  for (std::size_t g = 0; g < dj; ++g) {
    ExactScalar u = D.induced.left(g);
    const ExactScalar& w = D.induced.lambda(g);
    for (long i = 0; i < D.heights[g]; ++i) {
      D.floors.push_back({g, i, u, u + w});
      if (i + 1 < D.heights[g]) u = T.apply(u);
    }
  }
  std::sort(D.floors.begin(), D.floors.end(), [](const Floor& x, const Floor& y) { return x.lo < y.lo; });
  D.level_index.assign(dj, {});
  for (std::size_t g = 0; g < dj; ++g) D.level_index[g].assign(static_cast<std::size_t>(D.heights[g]), 0);
  for (std::size_t k = 0; k < D.floors.size(); ++k) {
    D.level_index[D.floors[k].tower][static_cast<std::size_t>(D.floors[k].level)] = k;
  }
  return D;
}

CheckReport check_towers(const Iet& T, const TowerDecomposition& D) {
  CheckReport out;
  ExactScalar mass = ExactScalar::zero(T.basis());
  for (std::size_t g = 0; g < D.induced.size(); ++g) mass += D.induced.lambda(g) * Rational(D.heights[g]);
  out.expect(mass == T.length(), "kac", "sum h*|I^J| = " + to_float(mass, 20));

  bool tiles = !D.floors.empty() && D.floors.front().lo == T.lo() && D.floors.back().hi == T.hi();
  for (std::size_t k = 0; tiles && k + 1 < D.floors.size(); ++k) tiles = D.floors[k].hi == D.floors[k + 1].lo;
  out.expect(tiles, "tiling", std::to_string(D.floors.size()) + " floors");

  bool composition = true;
  for (std::size_t g = 0; g < D.induced.size() && composition; ++g) {
    const ExactScalar x = D.induced.center(g);
    composition = D.induced.apply(x) == T.iterate(x, D.heights[g]) &&
                  D.induced.apply(D.induced.left(g)) == T.iterate(D.induced.left(g), D.heights[g]);
  }
  out.expect(composition, "composition", "T_J = T^h on each induced interval");
  return out;
}

long return_time(const Iet& T, const ExactScalar& lo, const ExactScalar& hi, const ExactScalar& x, long budget) {
  ExactScalar y = x;
  for (long n = 1; n <= budget; ++n) {
    y = T.apply(y);
    if (in_half_open(y, lo, hi)) return n;
  }
  throw Error(ErrorKind::BudgetExhausted, "no return to J within " + std::to_string(budget) + " steps");
}

std::pair<ExactScalar, long> backward_return(const Iet& T, const ExactScalar& lo, const ExactScalar& hi,
                                             const ExactScalar& x, long budget) {
  ExactScalar y = x;
  for (long n = 1; n <= budget; ++n) {
    y = T.apply_inverse(y);
    if (in_half_open(y, lo, hi)) return {y, n};
  }
  throw Error(ErrorKind::BudgetExhausted, "no backward return to J within " + std::to_string(budget) + " steps");
}

std::optional<long> first_backward_entry(const Iet& T, const ExactScalar& lo, const ExactScalar& hi, Label a,
                                         long budget) {
  ExactScalar y = T.left(a);
  for (long n = 0; n <= budget; ++n) {
    if (in_open(y, lo, hi)) return n;
    y = T.apply_inverse(y);
  }
  return std::nullopt;
}

CheckReport dJ_check(const Iet& T, const TowerDecomposition& D, const ConnectionReport& report, long budget) {
  CheckReport out;
  const std::size_t d = T.size();
  std::size_t absorbed = 0;
  for (int k = 2; k <= static_cast<int>(d); ++k) {
    const Label a = T.top(k);
    auto m = first_backward_entry(T, D.lo(), D.hi(), a, budget);
    if (!m) {
      throw Error(ErrorKind::HypothesisNotMet,
                  "backward orbit of dI_" + T.name(a) + " does not enter J within budget");
    }
    if (report.M[a] && *m >= *report.M[a]) ++absorbed;
  }
  const std::size_t expected = d - absorbed;
  out.expect(D.induced.size() == expected, "d_J",
             "induced letters " + std::to_string(D.induced.size()) + ", formula " + std::to_string(expected));
  if (!report.meets(D.lo(), D.hi())) {
    out.expect(d - D.induced.size() == report.d_prime(), "d-d_J=d'",
               "d' = " + std::to_string(report.d_prime()));
  } else {
    out.skip("d-d_J=d'", "J contains a connection point");
  }
  return out;
}

}  // namespace iet
