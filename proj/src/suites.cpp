#include "iet/suites.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <thread>

#include "iet/cocycle.hpp"
#include "iet/float_oracle.hpp"
#include "iet/random.hpp"
#include "iet/rigidity.hpp"
#include "iet/unwinding.hpp"

#ifndef IET_DATA_DIR
#define IET_DATA_DIR "data"
#endif

namespace iet {

namespace {

using CaseFn = std::function<CheckReport(std::size_t)>;

// Runs cases on up to `jobs` threads; reports come back in case order.
std::vector<CheckReport> run_cases(std::size_t n, int jobs, const CaseFn& fn) {
  std::vector<CheckReport> out(n);
  auto guarded = [&](std::size_t i) {
    try {
      out[i] = fn(i);
    } catch (const std::exception& e) {
      out[i].fail("error", e.what());
    }
  };
  const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) guarded(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) guarded(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

void merge_cases(CheckReport& into, const std::vector<CheckReport>& cases, const std::string& tag) {
  for (std::size_t i = 0; i < cases.size(); ++i) into.merge(cases[i], tag + std::to_string(i) + ":");
}

Rng case_rng(const SuiteOptions& o, const std::string& suite, std::size_t i) {
  std::uint64_t h = o.seed;
  for (char c : suite) h = h * 1099511628211ULL + static_cast<unsigned char>(c);
  std::seed_seq seq{static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32), static_cast<std::uint32_t>(i)};
  return Rng(seq);
}

Iet load(const SuiteOptions& o, const std::string& file) {
  return load_iet((std::filesystem::path(o.data_dir) / file).string());
}

ExactScalar Q(const Iet& T, const Rational& q) { return ExactScalar::rational(T.basis(), q); }

template <class F>
bool throws_kind(ErrorKind kind, F&& f, std::string* what = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (what) *what = e.what();
    return e.kind() == kind;
  }
  return false;
}

std::string show_heights(const std::vector<long>& h) {
  std::string s = "(";
  for (std::size_t i = 0; i < h.size(); ++i) s += (i ? ", " : "") + std::to_string(h[i]);
  return s + ")";
}

CheckReport example1_suite(const SuiteOptions& o) {
  CheckReport c;
  const Iet T = load(o, "example1.json");
  const auto l = [&](const char* name) { return *T.find(name); };
  c.expect(T.is_symmetric(), "symmetric");
  c.expect(T.apply(Q(T, Rational(1, 10))) == Q(T, Rational(3, 4)), "apply(1/10)=3/4");
  const auto orb = orbit(T, T.left(l("2")), 2);
  c.expect(orb.size() == 3 && orb[1].value == Q(T, Rational(3, 4)) && orb[2].value == Q(T, Rational(3, 8)) &&
               orb[2].endpoint == l("4"),
           "orbit(dI_2, 2)", "[1/10, 3/4, 3/8], last = dI_4");

  const ConnectionReport r = connection_scan(T, o.n_max);
  c.expect(r.N[l("2")] == 2 && r.N_target[l("2")] == l("4"), "N(2)=2", "T^2(dI_2) = dI_4");
  c.expect(r.M[l("4")] == 2 && r.M_target[l("4")] == l("2"), "M(4)=2");
  ExactScalar image;
  const bool cont = iterate_interval(T, T.left(l("3")), T.lambda(l("3")), 2, &image);
  c.expect(cont && image == T.left(l("3")), "T^2(I_3)=I_3");
  const ObstructionReport ob = ergodicity_obstructions(T, r);
  bool empty_2_4 = false;
  for (std::size_t i = 0; i < r.connections.size(); ++i) {
    const auto& con = r.connections[i];
    if (con.start == l("2") && con.end == l("4") && ob.marked_counts[i] == 0) empty_2_4 = true;
  }
  c.expect(ob.not_ergodic && empty_2_4, "NotErgodic", "connection dI_2 -> dI_4 holds no center and not c_1/2");
  c.merge(verify_conjugacy(T, separating_sample(T)), "conjugacy:");

  std::string what;
  c.expect(throws_kind(ErrorKind::ConnectionTooShort,
                       [&] { symmetric_interval(T, l("4"), 2, SymmetricVariant::Beta, r); }, &what),
           "symmetric_interval(4,2)", what);

  const Iet G = load(o, "example1_generic.json");
  const ConnectionReport rg = connection_scan(G, o.n_max);
  const Label g2 = *G.find("2"), g3 = *G.find("3"), g4 = *G.find("4");
  c.expect(rg.N[g2] == 2 && rg.M[g4] == 2, "generic:N(2)=M(4)=2");
  c.expect(iterate_interval(G, G.left(g3), G.lambda(g3), 2, &image) && image == G.left(g3), "generic:T^2(I_3)=I_3");
  c.expect(rg.d_prime() == 2, "generic:d'", "d' = " + std::to_string(rg.d_prime()));
  c.expect(simplex_dim(G, rg) == 1, "generic:simplex_dim", std::to_string(simplex_dim(G, rg)));
  c.expect(ergodicity_obstructions(G, rg).not_ergodic, "generic:NotErgodic");
  c.merge(check_sym_endpoints(G, rg), "generic:");
  if (auto S = find_free_symmetric_interval(G, rg, 64)) {
    try {
      const SymmetricInduction si = symmetric_induce(G, *S, rg, std::min(o.budget, 100000L));
      const CheckItem* bad = si.checks.first_failure();
      c.skip("generic:symmetric_induce", bad ? "clause fails as expected: " + bad->id + " " + bad->detail
                                             : "all clauses hold on this J although T is not ergodic");
    } catch (const Error& e) {
      c.skip("generic:symmetric_induce", std::string("not applicable: ") + e.what());
    }
  } else {
    c.skip("generic:symmetric_induce", "no symmetric interval avoids the connections");
  }
  return c;
}

CheckReport example2_suite(const SuiteOptions& o) {
  CheckReport c;
  const Iet T = load(o, "example2.json");
  const Label l1 = *T.find("1"), l2 = *T.find("2"), l3 = *T.find("3");
  c.expect(T.left(l2) == Q(T, Rational(1, 40)) && T.left(l3) == Q(T, Rational(9, 40)) &&
               T.half() == Q(T, Rational(1, 2)),
           "marked_points", "dI_2 = 1/40, dI_3 = 9/40, c_1/2 = 1/2");
  c.expect(T.reflect(T.apply(T.left(l1))) == T.left(l2), "I(T(dI_1))=dI_2");

  const ConnectionReport r = connection_scan(T, o.n_max);
  const auto J = SubintervalSpec::explicit_interval(T.left(l2), T.right(l2));
  const TowerDecomposition D = induce(T, J, o.budget);
  c.merge(check_towers(T, D), "I_2:");
  c.expect(D.heights == std::vector<long>{6, 8, 4}, "I_2:heights", show_heights(D.heights));
  const std::vector<ExactScalar> want{T.lambda(l3), T.lambda(l1), T.lambda(l2) - T.lambda(l1) - T.lambda(l3)};
  c.expect(D.induced.lambda() == want, "I_2:lengths", "(l3, l1, l2 - l1 - l3)");
  c.expect(D.induced.size() == 3 && D.induced.is_symmetric(), "I_2:symmetric_3iet");
  const EigenfunctionTable E = build_eigenfunction(T, r, o.budget, J);
  c.merge(E.checks, "eigenfunction:");

  const Iet G = load(o, "example2_generic.json");
  const ConnectionReport rg = connection_scan(G, o.n_max);
  c.expect(rg.d_prime() == 1 && rg.contains_point(G.half()), "generic:connection", "one connection, through 1/2");
  c.expect(!ergodicity_obstructions(G, rg).not_ergodic, "generic:no_obstruction");
  c.expect(simplex_dim(G, rg) == 2, "generic:simplex_dim", std::to_string(simplex_dim(G, rg)));
  const Label g2 = *G.find("2");
  const auto JG = SubintervalSpec::explicit_interval(G.left(g2), G.right(g2));
  const TowerDecomposition DG = induce(G, JG, o.budget);
  c.expect(DG.heights == std::vector<long>{6, 8, 4}, "generic:I_2:heights", show_heights(DG.heights));
  c.merge(build_eigenfunction(G, rg, o.budget, JG).checks, "generic:eigenfunction:I_2:");
  const EigenfunctionTable EG = build_eigenfunction(G, rg, o.budget);
  c.merge(EG.checks, "generic:eigenfunction:searched:");
  c.pass("generic:eigenfunction:searched:heights", show_heights(EG.towers.heights));
  if (EG.interval) {
    const SymmetricInduction si = symmetric_induce(G, *EG.interval, rg, o.budget);
    c.merge(si.checks, "generic:symmetric_induce:");
  }
  std::string what;
  c.expect(throws_kind(ErrorKind::InConnection,
                       [&] { berktrujillo_check(G, Cocycle::central(G, 1), std::nullopt, 10, rg); }, &what),
           "generic:berk_trujillo:c_1/2", what);
  return c;
}

CheckReport kac_suite(const SuiteOptions& o) {
  CheckReport c;
  auto cases = run_cases(500, o.jobs, [&](std::size_t i) {
    Rng rng = case_rng(o, "kac", i);
    const Iet T = random_iet(rng, static_cast<std::size_t>(uniform_int(rng, 2, 6)));
    const TowerDecomposition D = induce(T, random_explicit_interval(rng, T), o.budget);
    CheckReport k = check_towers(T, D);
    return k;
  });
  merge_cases(c, cases, "case");
  return c;
}

CheckReport unwinding_suite(const SuiteOptions& o) {
  CheckReport c;
  auto cases = run_cases(200, o.jobs, [&](std::size_t i) {
    Rng rng = case_rng(o, "unwinding", i);
    CheckReport k;
    for (;;) {
      const Iet T = random_iet(rng, static_cast<std::size_t>(uniform_int(rng, 2, 5)));
      const ConnectionReport r = connection_scan(T, o.n_max);
      auto J = random_dynamic_interval(rng, T, r, 0.05);
      if (!J) continue;
      const TowerDecomposition D = induce(T, *J, o.budget);
      const auto v = random_tower_widths(rng, D);
      const UnwindResult u = unwind(T, D, v, r, o.budget);
      k.merge(u.checks);
      k.expect(unwound_lengths(T, D, D.induced.lambda()) == T.lambda(), "identity", "lambda~(lambda^J) = lambda");
      k.expect((v == D.induced.lambda()) == (u.lambda == T.lambda()), "injective", "v != lambda^J gives lambda~ != lambda");
      if (i < 50) {
        const auto w = random_tower_widths(rng, D);
        k.merge(check_affinity(T, D, v, w, uniform_rational(rng, Rational(-1), Rational(2), 97)));
      }
      return k;
    }
  });
  merge_cases(c, cases, "case");
  return c;
}

CheckReport symmetric_induction_suite(const SuiteOptions& o) {
  CheckReport c;
  auto cases = run_cases(100, o.jobs, [&](std::size_t i) {
    Rng rng = case_rng(o, "symmetric-induction", i);
    const std::size_t d = static_cast<std::size_t>(uniform_int(rng, 2, 6));
    const Iet T = random_symmetric_iet(rng, d);
    const ConnectionReport r = connection_scan(T, o.n_max);
    CheckReport k;
    k.expect(r.d_prime() == 0, "d'=0", std::to_string(r.d_prime()));
    int revisits = 0;
    const SymmetricInterval S = random_symmetric_interval(rng, T, r, 6, &revisits);
    if (revisits) k.skip("revisits", std::to_string(revisits) + " draws rejected: an endpoint orbit enters J early");
    const SymmetricInduction si = symmetric_induce(T, S, r, o.budget);
    k.merge(si.checks);
    k.expect(si.towers.induced.size() == d, "induced_d", std::to_string(si.towers.induced.size()) + " intervals");
    const CenterLabel probe = uniform_int(rng, 0, 1) ? CenterLabel(std::nullopt) : CenterLabel(0);
    k.merge(check_inverse_iterates(T, probe, 200));
    return k;
  });
  merge_cases(c, cases, "case");
  return c;
}

CheckReport berk_trujillo_for(const Iet& T, const SuiteOptions& o) {
  const ConnectionReport r = connection_scan(T, o.n_max);
  const Cocycle f = Cocycle::central(T, 1);
  CheckReport k;
  k.expect(f.is_antisymmetric(T), "antisymmetric");
  k.expect(f.eval(T, T.half()).is_zero(), "f(c_1/2)=0");
  k.expect(std::abs(f.integral(T)) < 1e-12, "mean_zero");
  std::vector<CenterLabel> sigmas;
  for (Label a = 0; a < T.size(); ++a) sigmas.emplace_back(a);
  sigmas.emplace_back(std::nullopt);
  for (const auto& s : sigmas) {
    if (r.contains_point(center_point(T, s))) {
      k.skip("c_" + center_name(T, s), "in a connection");
      continue;
    }
    k.merge(berktrujillo_check(T, f, s, 1000, r).checks);
  }
  return k;
}

CheckReport berk_trujillo_suite(const SuiteOptions& o) {
  CheckReport c;
  const Iet golden = load(o, "golden.json");
  CheckReport g = berk_trujillo_for(golden, o);
  const Cocycle f = Cocycle::central(golden, 1);
  const ConnectionReport r = connection_scan(golden, o.n_max);
  const BerkTrujilloResult a = berktrujillo_check(golden, f, *golden.find("A"), 1, r);
  g.expect(!a.rows[1].literal.is_zero() && a.rows[1].literal == a.rows[1].residual, "literal_n1:c_A",
           "S_2 f(T^-1 c_A) = " + to_float(a.rows[1].literal, 12));
  c.merge(g, "golden:");
  auto cases = run_cases(20, o.jobs, [&](std::size_t i) {
    Rng rng = case_rng(o, "berk-trujillo", i);
    const Iet T = random_symmetric_iet(rng, static_cast<std::size_t>(uniform_int(rng, 2, 6)));
    return berk_trujillo_for(T, o);
  });
  merge_cases(c, cases, "case");
  return c;
}

CheckReport rigidity_for(const Iet& T, const SuiteOptions& o) {
  CheckReport k;
  const ConnectionReport r = connection_scan(T, o.n_max);
  const Cocycle f = Cocycle::central(T, 1);
  const auto towers = build_rigidity_towers(T, r, 3, o.budget);
  for (const auto& X : towers) {
    const std::string tag = "n" + std::to_string(X.depth) + ":";
    k.merge(X.checks, tag);
    const EffCriterionResult e = verify_effcriterion(T, f, 1, X);
    k.merge(e.checks, tag);
    k.pass(tag + "measured", "q = " + std::to_string(X.q) + ", Leb = " + to_float(X.measure(), 12) +
                                 ", sup|S_q f| = " + to_float(e.sup_abs_sum, 12));
  }
  k.merge(essential_value_witness(T, f, 1, towers).checks, "witness:");
  return k;
}

CheckReport effcriterion_suite(const SuiteOptions& o) {
  CheckReport c;
  c.merge(rigidity_for(load(o, "golden.json"), o), "golden:");
  Rng rng = case_rng(o, "effcriterion", 0);
  c.merge(rigidity_for(random_symmetric_iet(rng, 4), o), "random4:");
  return c;
}

CheckReport float_oracle_suite(const SuiteOptions& o) {
  CheckReport c;
  auto cases = run_cases(100, o.jobs, [&](std::size_t i) {
    Rng rng = case_rng(o, "float-oracle", i);
    const std::size_t d = static_cast<std::size_t>(uniform_int(rng, 2, 6));
    const Iet T = i % 2 ? random_iet(rng, d) : random_symmetric_iet(rng, d);
    const FloatIet F(T);
    ExactScalar x = random_point(rng, T);
    double y = x.approx();
    double worst = 0;
    for (int s = 0; s < 1000; ++s) {
      x = T.apply(x);
      y = F.apply(y);
      worst = std::max(worst, std::abs(x.approx() - y));
    }
    CheckReport k;
    char buf[64];
    std::snprintf(buf, sizeof buf, "max deviation %.3e over 1000 steps", worst);
    k.expect(worst <= 1e-9, "agree", buf);
    return k;
  });
  merge_cases(c, cases, "case");
  return c;
}

}  // namespace

std::string default_data_dir() { return IET_DATA_DIR; }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"example1",      "example2",      "kac",
                                              "unwinding",     "symmetric-induction",
                                              "berk-trujillo", "effcriterion",  "float-oracle"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  SuiteOptions o = options;
  if (o.data_dir.empty()) o.data_dir = default_data_dir();
  SuiteResult out;
  out.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  auto guard = [&](auto&& fn) {
    try {
      out.checks = fn(o);
    } catch (const std::exception& e) {
      out.checks.fail("error", e.what());
    }
  };
  if (name == "example1") guard(example1_suite);
  else if (name == "example2") guard(example2_suite);
  else if (name == "kac") guard(kac_suite);
  else if (name == "unwinding") guard(unwinding_suite);
  else if (name == "symmetric-induction") guard(symmetric_induction_suite);
  else if (name == "berk-trujillo") guard(berk_trujillo_suite);
  else if (name == "effcriterion") guard(effcriterion_suite);
  else if (name == "float-oracle") guard(float_oracle_suite);
  else throw Error(ErrorKind::InvalidInput, "unknown suite " + name);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

Json suite_json(const SuiteResult& r) {
  Json j;
  j["suite"] = r.name;
  const Json rep = report_json(r.checks);
  for (auto it = rep.begin(); it != rep.end(); ++it) j[it.key()] = it.value();
  return j;
}

}  // namespace iet
