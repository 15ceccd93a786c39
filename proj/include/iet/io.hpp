#pragma once

#include <string>

#include "json.hpp"

#include "iet/connections.hpp"
#include "iet/induction.hpp"
#include "iet/symmetry.hpp"

namespace iet {

using Json = nlohmann::ordered_json;

inline constexpr int kDefaultDigits = 30;

/// {"exact": [coefficients], "decimal": "..."}.
Json scalar_json(const ExactScalar& x, int digits = kDefaultDigits);
/// Accepts "p/q", an integer, an array of coefficient strings, or {"exact": [...]}.
ExactScalar parse_scalar(const Json& j, const BasisPtr& basis);

Json basis_json(const Basis& b);
BasisPtr parse_basis(const Json& j);

/// {"basis", "alphabet", "pi0", "pi1", "lambda", "base"}; pi0/pi1 give slots 1..d per label.
Iet parse_iet(const Json& j);
Iet load_iet(const std::string& path);
Json iet_json(const Iet& T, int digits = kDefaultDigits);

/// {"lo", "hi"}, {"label": name} (J = I_label) or
/// {"dynamic": {"alpha", "m0", "beta", "n0"}}.
SubintervalSpec parse_subinterval(const Iet& T, const Json& j);

Json report_json(const CheckReport& r);
std::string report_table(const CheckReport& r);
std::string report_csv(const CheckReport& r);

Json connections_json(const Iet& T, const ConnectionReport& r, int digits = kDefaultDigits);
Json towers_json(const TowerDecomposition& D, int digits = kDefaultDigits);
/// Rows (gamma, height, width).
std::string towers_csv(const TowerDecomposition& D, int digits = kDefaultDigits);

Json symmetric_interval_json(const Iet& T, const SymmetricInterval& S, int digits = kDefaultDigits);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace iet
