#include "iet/io.hpp"

#include <fstream>
#include <sstream>

namespace iet {

namespace {

Rational parse_coefficient(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorKind::InvalidInput, "coefficient must be a \"p/q\" string or an integer, got " + j.dump());
}

std::string quote_csv(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json scalar_json(const ExactScalar& x, int digits) {
  Json j;
  j["exact"] = coeff_strings(x);
  j["decimal"] = to_float(x, digits);
  return j;
}

ExactScalar parse_scalar(const Json& j, const BasisPtr& basis) {
  if (j.is_object()) {
    if (!j.contains("exact")) throw Error(ErrorKind::InvalidInput, "scalar object needs \"exact\"");
    return parse_scalar(j.at("exact"), basis);
  }
  if (j.is_array()) {
    if (j.size() != basis->size()) {
      throw Error(ErrorKind::BasisMismatch, "scalar has " + std::to_string(j.size()) + " coefficients, basis has " +
                                                std::to_string(basis->size()));
    }
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(parse_coefficient(e));
    return ExactScalar(basis, std::move(c));
  }
  return ExactScalar::rational(basis, parse_coefficient(j));
}

Json basis_json(const Basis& b) {
  Json out = Json::array();
  for (std::size_t i = 0; i < b.size(); ++i) {
    Json e;
    e["name"] = b.name(i);
    if (b.supplied_decimal(i)) e["decimal"] = *b.supplied_decimal(i);
    out.push_back(e);
  }
  return out;
}

BasisPtr parse_basis(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "\"basis\" must be an array");
  std::vector<Basis::ElementSpec> specs;
  for (const auto& e : j) {
    Basis::ElementSpec s;
    if (e.is_string()) {
      s.name = e.get<std::string>();
    } else {
      s.name = e.at("name").get<std::string>();
      if (e.contains("decimal")) s.decimal = e.at("decimal").get<std::string>();
    }
    specs.push_back(std::move(s));
  }
  return Basis::make(specs);
}

Iet parse_iet(const Json& j) {
  try {
    const BasisPtr basis = j.contains("basis") ? parse_basis(j.at("basis")) : Basis::rationals();
    auto alphabet = j.at("alphabet").get<std::vector<std::string>>();
    auto pi0 = j.at("pi0").get<std::vector<int>>();
    auto pi1 = j.at("pi1").get<std::vector<int>>();
    std::vector<ExactScalar> lambda;
    for (const auto& l : j.at("lambda")) lambda.push_back(parse_scalar(l, basis));
    ExactScalar lo = ExactScalar::zero(basis);
    ExactScalar hi = ExactScalar::rational(basis, 1);
    if (j.contains("base")) {
      const Json& b = j.at("base");
      if (!b.is_array() || b.size() != 2) throw Error(ErrorKind::InvalidInput, "\"base\" must be [lo, hi]");
      lo = parse_scalar(b[0], basis);
      hi = parse_scalar(b[1], basis);
    }
    return Iet::make(std::move(alphabet), std::move(pi0), std::move(pi1), std::move(lambda), std::move(lo),
                     std::move(hi));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed IET description: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorKind::IoError, "write to " + path + " failed");
}

Iet load_iet(const std::string& path) { return parse_iet(read_json_file(path)); }

Json iet_json(const Iet& T, int digits) {
  Json j;
  j["basis"] = basis_json(*T.basis());
  j["alphabet"] = T.alphabet();
  j["pi0"] = T.pi0();
  j["pi1"] = T.pi1();
  Json lambda = Json::array();
  for (const auto& l : T.lambda()) lambda.push_back(coeff_strings(l));
  j["lambda"] = lambda;
  j["base"] = Json::array({coeff_strings(T.lo()), coeff_strings(T.hi())});
  Json dec = Json::array();
  for (const auto& l : T.lambda()) dec.push_back(to_float(l, digits));
  j["lambda_decimal"] = dec;
  return j;
}

SubintervalSpec parse_subinterval(const Iet& T, const Json& j) {
  auto label = [&](const Json& v) {
    auto a = T.find(v.get<std::string>());
    if (!a) throw Error(ErrorKind::InvalidInput, "unknown label " + v.dump());
    return *a;
  };
  try {
    if (j.contains("label")) {
      const Label a = label(j.at("label"));
      return SubintervalSpec::explicit_interval(T.left(a), T.right(a));
    }
    if (j.contains("dynamic")) {
      const Json& d = j.at("dynamic");
      return SubintervalSpec::dynamic_interval(
          T, {label(d.at("alpha")), d.at("m0").get<long>(), label(d.at("beta")), d.at("n0").get<long>()});
    }
    return SubintervalSpec::explicit_interval(parse_scalar(j.at("lo"), T.basis()), parse_scalar(j.at("hi"), T.basis()));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed interval: ") + e.what());
  }
}

Json report_json(const CheckReport& r) {
  Json j;
  j["passed"] = r.passed();
  j["counts"] = {{"pass", r.count(Status::Pass)}, {"fail", r.count(Status::Fail)}, {"skipped", r.count(Status::Skipped)}};
  Json items = Json::array();
  for (const auto& it : r.items()) {
    items.push_back({{"id", it.id}, {"status", to_string(it.status)}, {"detail", it.detail}});
  }
  j["checks"] = items;
  return j;
}

std::string report_table(const CheckReport& r) {
  std::size_t width = 0;
  for (const auto& it : r.items()) width = std::max(width, it.id.size());
  std::ostringstream out;
  for (const auto& it : r.items()) {
    out << it.id << std::string(width - it.id.size() + 2, ' ') << to_string(it.status);
    if (!it.detail.empty()) out << "  " << it.detail;
    out << '\n';
  }
  out << (r.passed() ? "PASS" : "FAIL") << " (" << r.count(Status::Pass) << " pass, " << r.count(Status::Fail)
      << " fail, " << r.count(Status::Skipped) << " skipped)\n";
  return out.str();
}

std::string report_csv(const CheckReport& r) {
  std::string out = "id,status,detail\n";
  for (const auto& it : r.items()) {
    out += quote_csv(it.id) + "," + to_string(it.status) + "," + quote_csv(it.detail) + "\n";
  }
  return out;
}

Json connections_json(const Iet& T, const ConnectionReport& r, int digits) {
  Json j;
  j["n_max"] = r.n_max;
  Json M = Json::object(), N = Json::object();
  for (int k = 1; k <= static_cast<int>(T.size()); ++k) {
    const Label a = T.top(k);
    if (r.M[a]) M[T.name(a)] = *r.M[a];
  }
  for (int k = 1; k <= static_cast<int>(T.size()); ++k) {
    const Label a = T.bottom(k);
    if (r.N[a]) N[T.name(a)] = *r.N[a];
  }
  j["M"] = M;
  j["N"] = N;
  j["d_prime"] = r.d_prime();
  Json cs = Json::array();
  for (const auto& c : r.connections) {
    Json e;
    e["start"] = T.name(c.start);
    e["end"] = T.name(c.end);
    e["length"] = c.length;
    Json pts = Json::array();
    for (const auto& p : c.points) pts.push_back(scalar_json(p, digits));
    e["points"] = pts;
    cs.push_back(e);
  }
  j["connections"] = cs;
  return j;
}

Json towers_json(const TowerDecomposition& D, int digits) {
  Json j;
  j["J"] = {scalar_json(D.lo(), digits), scalar_json(D.hi(), digits)};
  j["induced"] = iet_json(D.induced, digits);
  Json towers = Json::array();
  for (std::size_t g = 0; g < D.induced.size(); ++g) {
    towers.push_back({{"label", D.induced.name(g)},
                      {"height", D.heights[g]},
                      {"width", scalar_json(D.induced.lambda(g), digits)}});
  }
  j["towers"] = towers;
  j["floors"] = D.floors.size();
  return j;
}

std::string towers_csv(const TowerDecomposition& D, int digits) {
  std::string out = "gamma,height,width\n";
  for (std::size_t g = 0; g < D.induced.size(); ++g) {
    out += quote_csv(D.induced.name(g)) + "," + std::to_string(D.heights[g]) + "," +
           to_float(D.induced.lambda(g), digits) + "\n";
  }
  return out;
}

Json symmetric_interval_json(const Iet& T, const SymmetricInterval& S, int digits) {
  Json j;
  j["lo"] = scalar_json(S.lo, digits);
  j["hi"] = scalar_json(S.hi, digits);
  j["variant"] = S.variant == SymmetricVariant::Beta ? "beta" : "half";
  j["center"] = center_name(T, S.center);
  j["alpha"] = T.name(S.alpha);
  j["alpha_hat"] = T.name(S.alpha_hat);
  j["m"] = S.m;
  return j;
}

}  // namespace iet
