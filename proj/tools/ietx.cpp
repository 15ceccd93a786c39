#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "iet/cocycle.hpp"
#include "iet/float_oracle.hpp"
#include "iet/io.hpp"
#include "iet/rigidity.hpp"
#include "iet/suites.hpp"
#include "iet/unwinding.hpp"

using namespace iet;

namespace {

struct Common {
  long budget = kDefaultBudget;
  long nmax = kDefaultNmax;
  int depth = 3;
  int digits = kDefaultDigits;
  std::string format = "json";
  int jobs = 1;
  bool float_fallback = false;
  std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--budget", c.budget, "iteration budget for returns")->check(CLI::PositiveNumber);
  cmd->add_option("--nmax", c.nmax, "connection search range")->check(CLI::PositiveNumber);
  cmd->add_option("--depth", c.depth, "rigidity depth")->check(CLI::PositiveNumber);
  cmd->add_option("--digits", c.digits, "decimal digits in output")->check(CLI::Range(1, 1000));
  cmd->add_option("--format", c.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--jobs", c.jobs, "worker threads for suites")->check(CLI::PositiveNumber);
  cmd->add_flag("--float-fallback", c.float_fallback, "also run a double-precision cross-check (tolerance 1e-12)");
  cmd->add_option("--out", c.out, "write the result here instead of stdout");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) std::cout << text;
  else write_text_file(c.out, text);
}

// JSON reports go out as JSON; csv and table fall back to the check list when the
// command has no native tabular form.
int finish(const Common& c, Json j, const CheckReport& checks, const std::string& csv = {}) {
  if (c.format == "json") {
    j["report"] = report_json(checks);
    emit(c, j.dump(2) + "\n");
  } else if (c.format == "csv") {
    emit(c, csv.empty() ? report_csv(checks) : csv);
  } else {
    emit(c, report_table(checks));
  }
  return checks.passed() ? 0 : 1;
}

ExactScalar scalar_arg(const std::string& text, const BasisPtr& basis) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception&) {
    j = text;
  }
  if (j.is_number_float()) throw Error(ErrorKind::InvalidInput, "give points as \"p/q\" or coefficient lists");
  return parse_scalar(j, basis);
}

Json json_arg(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, "not JSON: " + text);
  }
}

CenterLabel sigma_arg(const Iet& T, const std::string& s) {
  if (s == "1/2") return std::nullopt;
  auto a = T.find(s);
  if (!a) throw Error(ErrorKind::InvalidInput, "unknown label " + s);
  return *a;
}

Label label_arg(const Iet& T, const std::string& s) {
  auto a = T.find(s);
  if (!a) throw Error(ErrorKind::InvalidInput, "unknown label " + s);
  return *a;
}

SubintervalSpec interval_arg(const Iet& T, const std::string& label, const std::string& J) {
  if (!label.empty()) return parse_subinterval(T, Json{{"label", label}});
  if (J.empty()) throw Error(ErrorKind::InvalidInput, "give --label or --J");
  return parse_subinterval(T, json_arg(J));
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact interval exchange toolkit"};
  app.require_subcommand(1);
  Common c;
  std::string file, x_text, label, J_text, v_text, sigma = "1/2", variant = "beta", suite = "all", data_dir;
  std::string floors_csv;
  long n = 10, N = 1000, m = 1;
  std::string a_text = "1";
  std::vector<std::string> xs;
  bool trajectory = false;

  auto* check = app.add_subcommand("check", "validate an IET file and test the symmetry identities");
  auto* orbit_cmd = app.add_subcommand("orbit", "exact orbit of a point");
  auto* conn = app.add_subcommand("connections", "connection scan and ergodicity obstructions");
  auto* ind = app.add_subcommand("induce", "first return map and Rokhlin towers");
  auto* sym = app.add_subcommand("symmetric-induce", "induce on a symmetric interval and track centers");
  auto* eig = app.add_subcommand("eigenfunction", "eigenfunction of eigenvalue -1");
  auto* unw = app.add_subcommand("unwind", "rebuild an IET from towers with new widths");
  auto* bir = app.add_subcommand("birkhoff", "Birkhoff sums of f(x) = a (x - c_1/2)");
  auto* btr = app.add_subcommand("berk-trujillo", "vanishing of symmetric Birkhoff sums around a center");
  auto* skw = app.add_subcommand("skew", "orbit of the skew product (x, r) -> (T x, r + f(x))");
  auto* rig = app.add_subcommand("rigidity", "partially rigid towers and the ergodicity criterion");
  auto* ver = app.add_subcommand("verify", "run a verification suite");

  for (auto* cmd : {check, orbit_cmd, conn, ind, sym, eig, unw, bir, btr, skw, rig}) {
    cmd->add_option("file", file, "IET description (JSON)")->required();
    add_common(cmd, c);
  }
  add_common(ver, c);
  orbit_cmd->add_option("--x", x_text, "start point, \"p/q\" or coefficient list")->required();
  orbit_cmd->add_option("--n", n, "signed number of steps");
  ind->add_option("--label", label, "induce on I_label");
  ind->add_option("--J", J_text, "interval as JSON {lo, hi} or {dynamic: ...}");
  sym->add_option("--alpha", label, "label alpha with pi0(alpha) != 1")->required();
  sym->add_option("--m", m, "power m >= 1");
  sym->add_option("--variant", variant, "beta or half")->check(CLI::IsMember({"beta", "half"}));
  eig->add_option("--label", label, "induce on I_label instead of searching");
  eig->add_option("--J", J_text, "interval JSON instead of searching");
  unw->add_option("--label", label, "J = I_label");
  unw->add_option("--J", J_text, "interval JSON");
  unw->add_option("--v", v_text, "tower widths as a JSON list of scalars")->required();
  for (auto* cmd : {bir, btr, skw, rig}) cmd->add_option("--a", a_text, "slope a of f (rational)");
  bir->add_option("--x", x_text, "start point")->required();
  bir->add_option("--n", n, "signed time");
  bir->add_flag("--trajectory", trajectory, "emit (n, S_n f) for 0..n as CSV rows");
  btr->add_option("--sigma", sigma, "label or 1/2");
  btr->add_option("--N", N, "largest n");
  skw->add_option("--x", xs, "one or two start points")->required()->expected(1, 2);
  skw->add_option("--n", n, "steps");
  rig->add_option("--floors-csv", floors_csv, "write the floors of every Xi_n here");
  ver->add_option("--suite", suite, "suite name or all");
  ver->add_option("--data", data_dir, "directory with the bundled examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : 2;
  }

  try {
    if (*ver) {
      std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      for (const auto& s : names) {
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
          std::cerr << "unknown suite " << s << "\n";
          return 2;
        }
      }
      SuiteOptions o;
      o.n_max = c.nmax;
      o.budget = c.budget;
      o.jobs = c.jobs;
      o.data_dir = data_dir;
      Json all = Json::array();
      std::string text;
      bool ok = true;
      for (const auto& s : names) {
        const SuiteResult r = run_suite(s, o);
        ok = ok && r.passed();
        std::cerr << s << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << fmt_double(r.seconds) << " s)\n";
        all.push_back(suite_json(r));
        if (c.format == "csv") text += report_csv(r.checks);
        else if (c.format == "table") text += "== " + s + "\n" + report_table(r.checks);
      }
      emit(c, c.format == "json" ? (names.size() == 1 ? all[0] : all).dump(2) + "\n" : text);
      return ok ? 0 : 1;
    }

    const Iet T = load_iet(file);
    const int dg = c.digits;

    if (*check) {
      CheckReport r;
      r.pass("valid", std::to_string(T.size()) + " intervals");
      const bool symmetric = T.is_symmetric();
      r.pass("symmetric", symmetric ? "yes" : "no");
      r.pass("nondegenerate", T.is_nondegenerate() ? "yes" : "no");
      if (symmetric) r.merge(verify_conjugacy(T, separating_sample(T)), "conjugacy:");
      Json j;
      j["iet"] = iet_json(T, dg);
      j["symmetric"] = symmetric;
      j["nondegenerate"] = T.is_nondegenerate();
      return finish(c, j, r);
    }

    if (*orbit_cmd) {
      const ExactScalar x = scalar_arg(x_text, T.basis());
      const auto pts = orbit(T, x, n);
      CheckReport r;
      Json list = Json::array();
      std::string csv = "k,value,endpoint\n";
      for (std::size_t k = 0; k < pts.size(); ++k) {
        Json p = scalar_json(pts[k].value, dg);
        if (pts[k].endpoint) p["endpoint"] = T.name(*pts[k].endpoint);
        list.push_back(p);
        csv += std::to_string(n < 0 ? -static_cast<long>(k) : static_cast<long>(k)) + "," + to_float(pts[k].value, dg) +
               "," + (pts[k].endpoint ? T.name(*pts[k].endpoint) : "") + "\n";
      }
      if (c.float_fallback) {
        const FloatIet F(T);
        double y = x.approx(), worst = 0;
        for (std::size_t k = 1; k < pts.size(); ++k) {
          y = n < 0 ? F.apply_inverse(y) : F.apply(y);
          worst = std::max(worst, std::abs(y - pts[k].value.approx()));
        }
        r.expect(worst <= 1e-12, "float_agreement", "max deviation " + fmt_double(worst));
      }
      Json j;
      j["orbit"] = list;
      return finish(c, j, r, csv);
    }

    if (*conn) {
      const ConnectionReport cr = connection_scan(T, c.nmax);
      CheckReport r;
      Json j = connections_json(T, cr, dg);
      if (T.is_symmetric()) {
        const ObstructionReport ob = ergodicity_obstructions(T, cr);
        r.merge(ob.checks);
        r.merge(check_sym_endpoints(T, cr));
        r.merge(check_symmetric_connection(T, std::min(c.nmax, 2000L)));
        j["not_ergodic"] = ob.not_ergodic;
      }
      return finish(c, j, r);
    }

    if (*ind) {
      const TowerDecomposition D = induce(T, interval_arg(T, label, J_text), c.budget);
      CheckReport r = check_towers(T, D);
      if (D.spec.dynamic) r.merge(dJ_check(T, D, connection_scan(T, c.nmax), c.budget));
      return finish(c, towers_json(D, dg), r, towers_csv(D, dg));
    }

    if (*sym) {
      const ConnectionReport cr = connection_scan(T, c.nmax);
      const SymmetricInterval S = symmetric_interval(T, label_arg(T, label), m,
                                                     variant == "half" ? SymmetricVariant::Half : SymmetricVariant::Beta, cr);
      const SymmetricInduction si = symmetric_induce(T, S, cr, c.budget);
      Json j;
      j["interval"] = symmetric_interval_json(T, S, dg);
      j["towers"] = towers_json(si.towers, dg);
      Json centers = Json::array();
      for (const auto& e : si.centers.entries) {
        Json ce{{"sigma", center_name(T, e.sigma)}, {"ell", e.ell}, {"clean", e.clean}, {"in_connection", e.in_connection}};
        if (e.gamma) ce["gamma"] = si.towers.induced.name(*e.gamma);
        centers.push_back(ce);
      }
      j["centers"] = centers;
      return finish(c, j, si.checks, towers_csv(si.towers, dg));
    }

    if (*eig) {
      const ConnectionReport cr = connection_scan(T, c.nmax);
      std::optional<SubintervalSpec> J;
      if (!label.empty() || !J_text.empty()) J = interval_arg(T, label, J_text);
      const EigenfunctionTable E = build_eigenfunction(T, cr, c.budget, J);
      std::string csv = "lo,hi,tower,level,value\n";
      Json floors = Json::array();
      for (const auto& f : E.floors) {
        csv += to_float(f.lo, dg) + "," + to_float(f.hi, dg) + "," + E.towers.induced.name(f.tower) + "," +
               std::to_string(f.level) + "," + std::to_string(f.value) + "\n";
        floors.push_back({{"lo", scalar_json(f.lo, dg)}, {"hi", scalar_json(f.hi, dg)},
                          {"tower", E.towers.induced.name(f.tower)}, {"level", f.level}, {"value", f.value}});
      }
      Json j;
      if (E.interval) j["interval"] = symmetric_interval_json(T, *E.interval, dg);
      j["towers"] = towers_json(E.towers, dg);
      j["floors"] = floors;
      return finish(c, j, E.checks, csv);
    }

    if (*unw) {
      const ConnectionReport cr = connection_scan(T, c.nmax);
      const TowerDecomposition D = induce(T, interval_arg(T, label, J_text), c.budget);
      std::vector<ExactScalar> v;
      for (const auto& e : json_arg(v_text)) v.push_back(parse_scalar(e, T.basis()));
      const UnwindResult u = unwind(T, D, v, cr, c.budget);
      Json j;
      Json lam = Json::array();
      for (const auto& l : u.lambda) lam.push_back(scalar_json(l, dg));
      j["lambda"] = lam;
      j["J"] = {scalar_json(u.jlo, dg), scalar_json(u.jhi, dg)};
      j["unwound"] = iet_json(u.unwound, dg);
      j["new_connections"] = u.new_connections;
      std::string csv = "label,lambda\n";
      for (Label a = 0; a < T.size(); ++a) csv += T.name(a) + "," + to_float(u.lambda[a], dg) + "\n";
      return finish(c, j, u.checks, csv);
    }

    const Rational a = parse_rational(a_text);
    const Cocycle f = Cocycle::central(T, a);

    if (*bir) {
      const ExactScalar x = scalar_arg(x_text, T.basis());
      CheckReport r;
      Json j;
      const ExactScalar s = birkhoff_sum(T, f, x, n);
      j["S_n"] = scalar_json(s, dg);
      j["derivative"] = format_rational(derivative_sum(T, f, x, n));
      std::string csv = "n,S_n\n";
      if (trajectory) {
        const long step = n < 0 ? -1 : 1;
        for (long k = 0; k != n + step; k += step) csv += std::to_string(k) + "," + to_float(birkhoff_sum(T, f, x, k), dg) + "\n";
      } else {
        csv += std::to_string(n) + "," + to_float(s, dg) + "\n";
      }
      if (c.float_fallback) {
        const FloatIet F(T);
        double y = x.approx(), total = 0;
        const double half = T.half().approx(), ad = a.get_d();
        for (long k = 0; k < std::abs(n); ++k) {
          if (n > 0) {
            total += ad * (y - half);
            y = F.apply(y);
          } else {
            y = F.apply_inverse(y);
            total -= ad * (y - half);
          }
        }
        r.expect(std::abs(total - s.approx()) <= 1e-12 * std::max(1.0, static_cast<double>(std::abs(n))),
                 "float_agreement", "deviation " + fmt_double(std::abs(total - s.approx())));
      }
      return finish(c, j, r, csv);
    }

    if (*btr) {
      const ConnectionReport cr = connection_scan(T, c.nmax);
      const BerkTrujilloResult b = berktrujillo_check(T, f, sigma_arg(T, sigma), N, cr);
      std::string csv = "n,literal,pairing,residual,skipped\n";
      for (const auto& row : b.rows) {
        csv += std::to_string(row.n) + "," + to_float(row.literal, dg) + "," + to_float(row.pairing, dg) + "," +
               to_float(row.residual, dg) + "," + (row.skipped ? "1" : "0") + "\n";
      }
      Json j;
      j["sigma"] = center_name(T, b.sigma);
      j["N"] = N;
      const std::size_t shown = std::min<std::size_t>(b.rows.size(), 5);
      Json first = Json::array();
      for (std::size_t k = 0; k < shown; ++k) {
        first.push_back({{"n", b.rows[k].n}, {"literal", scalar_json(b.rows[k].literal, dg)},
                         {"pairing", scalar_json(b.rows[k].pairing, dg)}, {"residual", scalar_json(b.rows[k].residual, dg)}});
      }
      j["rows"] = first;
      return finish(c, j, b.checks, csv);
    }

    if (*skw) {
      SkewState s;
      for (const auto& t : xs) {
        s.x.push_back(scalar_arg(t, T.basis()));
        s.r.push_back(ExactScalar::zero(T.basis()));
      }
      const auto states = skew_orbit(T, f, s, n);
      CheckReport r;
      bool ok = true;
      for (std::size_t j = 0; j < s.x.size(); ++j) ok = ok && states.back().r[j] == birkhoff_sum(T, f, s.x[j], n);
      r.expect(ok, "fiber=S_n f", "final fibers equal the Birkhoff sums");
      std::string csv = s.x.size() == 1 ? "n,x,r\n" : "n,x1,x2,r1,r2\n";
      for (std::size_t k = 0; k < states.size(); ++k) {
        csv += std::to_string(k);
        for (const auto& v : states[k].x) csv += "," + to_float(v, dg);
        for (const auto& v : states[k].r) csv += "," + to_float(v, dg);
        csv += "\n";
      }
      Json j;
      Json last = Json::object();
      Json xs_json = Json::array(), rs_json = Json::array();
      for (const auto& v : states.back().x) xs_json.push_back(scalar_json(v, dg));
      for (const auto& v : states.back().r) rs_json.push_back(scalar_json(v, dg));
      j["n"] = n;
      j["x"] = xs_json;
      j["r"] = rs_json;
      return finish(c, j, r, csv);
    }

    if (*rig) {
      const ConnectionReport cr = connection_scan(T, c.nmax);
      const auto towers = build_rigidity_towers(T, cr, c.depth, c.budget);
      CheckReport r;
      Json levels = Json::array();
      std::string csv = "n,floor,lo,hi,S_q_left\n";
      for (const auto& X : towers) {
        const EffCriterionResult e = verify_effcriterion(T, f, a, X);
        const std::string tag = "n" + std::to_string(X.depth) + ":";
        r.merge(X.checks, tag);
        r.merge(e.checks, tag);
        const FloorSums sums = floor_birkhoff_sums(T, f, X);
        for (long i = 0; i < X.xi_floors; ++i) {
          csv += std::to_string(X.depth) + "," + std::to_string(i) + "," + to_float(X.orbit[i], dg) + "," +
                 to_float(X.orbit[i] + X.width, dg) + "," + to_float(sums.at_left[i], dg) + "\n";
        }
        levels.push_back({{"n", X.depth},
                          {"q", X.q},
                          {"m", X.m},
                          {"Gamma", X.second.induced.name(X.Gamma)},
                          {"center", center_name(T, X.frak_sigma)},
                          {"floors", X.xi_floors},
                          {"leb", scalar_json(X.measure(), dg)},
                          {"sup_displacement", scalar_json(e.sup_displacement, dg)},
                          {"sup_abs_S", scalar_json(e.sup_abs_sum, dg)}});
      }
      Json j;
      j["beta"] = T.name(towers.front().beta);
      j["alpha"] = T.name(towers.front().alpha);
      if (towers.size() >= 1) {
        const EssentialValueWitness w = essential_value_witness(T, f, a, towers);
        r.merge(w.checks, "witness:");
        for (std::size_t k = 0; k < towers.size(); ++k) levels[k]["image_measure"] = fmt_double(w.image_measure[k]);
        Json inter = Json::array();
        for (const auto& s : w.intersection) inter.push_back({to_float(s.lo, dg), to_float(s.hi, dg)});
        j["intersection"] = inter;
        if (!w.empty) j["candidate"] = {fmt_double(w.candidate_lo), fmt_double(w.candidate_hi)};
      }
      j["levels"] = levels;
      if (!floors_csv.empty()) write_text_file(floors_csv, csv);
      return finish(c, j, r);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
