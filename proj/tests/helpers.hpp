#pragma once

#include <string>

#include "doctest.h"

#include "iet/io.hpp"

namespace testing {

inline iet::Iet data(const std::string& name) { return iet::load_iet(std::string(IET_TEST_DATA_DIR) + "/" + name); }

inline iet::ExactScalar q(const iet::Iet& T, const iet::Rational& r) { return iet::ExactScalar::rational(T.basis(), r); }

/// a + b √5 over the golden basis.
inline iet::ExactScalar g5(const iet::Iet& T, const char* a, const char* b) {
  return iet::ExactScalar(T.basis(), {iet::parse_rational(a), iet::parse_rational(b)});
}

inline iet::Label L(const iet::Iet& T, const std::string& name) { return *T.find(name); }

inline iet::Iet rational_iet(std::vector<int> pi0, std::vector<int> pi1, std::vector<iet::Rational> lengths) {
  const auto basis = iet::Basis::rationals();
  std::vector<std::string> names;
  std::vector<iet::ExactScalar> lambda;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    names.push_back(std::string(1, static_cast<char>('A' + i)));
    lambda.push_back(iet::ExactScalar::rational(basis, lengths[i]));
  }
  return iet::Iet::make(names, pi0, pi1, lambda, iet::ExactScalar::zero(basis), iet::ExactScalar::rational(basis, 1));
}

}  // namespace testing

#define CHECK_THROWS_KIND(expr, k)                          \
  do {                                                      \
    bool thrown_ = false;                                   \
    try {                                                   \
      (void)(expr);                                         \
    } catch (const iet::Error& e_) {                        \
      thrown_ = true;                                       \
      CHECK_MESSAGE(e_.kind() == (k), e_.what());           \
    }                                                       \
    CHECK_MESSAGE(thrown_, "expected an iet::Error");       \
  } while (0)
