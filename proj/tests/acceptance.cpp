#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "iet/suites.hpp"

using namespace iet;

namespace {

struct Criterion {
  int number;
  std::string suite;
  double limit;  // seconds
  std::string what;
  std::vector<std::string> required;  // check ids (or id prefixes ending in ':') that must be present
};

bool has(const CheckReport& r, const std::string& id) {
  const bool prefix = !id.empty() && id.back() == ':';
  for (const auto& item : r.items()) {
    if (prefix ? item.id.rfind(id, 0) == 0 : item.id == id) return true;
  }
  return false;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "example1", 1, "Example 1 connections, T^2(I_3) = I_3, NotErgodic",
       {"N(2)=2", "M(4)=2", "T^2(I_3)=I_3", "NotErgodic"}},
      {2, "example2", 1, "Example 2 induced 3-IET and eigenfunction of -1",
       {"I_2:heights", "I_2:lengths", "I_2:symmetric_3iet", "eigenfunction:f(T(x)) = -f(x)"}},
      {3, "kac", 60, "Kac formula and tiling on 500 random (T, J)", {"case499:kac"}},
      {4, "unwinding", 60, "unwinding on 200 random (T, J, v), affinity on 50", {"case199:reinduction", "case49:affinity"}},
      {5, "symmetric-induction", 120, "symmetric induction on 100 random symmetric IETs",
       {"case99:induced:symmetric", "case99:centers:parity"}},
      {6, "berk-trujillo", 60, "Berk-Trujillo vanishing, golden plus 20 random, N = 1000",
       {"golden:pairing_zero:c_A", "golden:literal_zero:c_1/2", "golden:literal_residual:c_A", "case19:"}},
      {7, "effcriterion", 300, "partially rigid towers, golden and random 4-IET, depth 3",
       {"golden:n3:1:measure", "random4:n3:3:displacement", "golden:witness:intersection", "random4:witness:intersection"}},
      {8, "float-oracle", 10, "10^5 exact steps against double precision", {"case99:agree"}},
  };

  SuiteOptions options;
  std::map<std::string, std::string> first_run;
  bool all = true;
  for (const auto& c : criteria) {
    const SuiteResult r = run_suite(c.suite, options);
    first_run[c.suite] = suite_json(r).dump();
    std::string why;
    if (!r.passed()) {
      const CheckItem* bad = r.checks.first_failure();
      why = "first failure " + bad->id + (bad->detail.empty() ? "" : " (" + bad->detail + ")");
    }
    for (const auto& id : c.required) {
      if (why.empty() && !has(r.checks, id)) why = "missing check " + id;
    }
    if (why.empty() && r.seconds >= c.limit) why = "over the time limit";
    const bool ok = why.empty();
    all = all && ok;
    std::printf("criterion %d: %s  %s [%s, %zu checks, %.2f s, limit %.0f s]%s%s\n", c.number, ok ? "PASS" : "FAIL",
                c.what.c_str(), c.suite.c_str(), r.checks.items().size(), r.seconds, c.limit, ok ? "" : ": ",
                why.c_str());
    std::fflush(stdout);
  }

  std::string differ;
  for (const auto& name : suite_names()) {
    const std::string again = suite_json(run_suite(name, options)).dump();
    auto it = first_run.find(name);
    const std::string before = it != first_run.end() ? it->second : suite_json(run_suite(name, options)).dump();
    if (again != before) differ += " " + name;
  }
  all = all && differ.empty();
  std::printf("criterion 9: %s  every suite twice, byte-identical JSON reports%s%s\n", differ.empty() ? "PASS" : "FAIL",
              differ.empty() ? "" : ": differs in", differ.c_str());
  return all ? 0 : 1;
}
