#pragma once

#include <vector>

#include "iet/iet.hpp"

namespace iet {

/// Double-precision copy of an IET, used only to cross-check exact results.
class FloatIet {
 public:
  explicit FloatIet(const Iet& T) {
    for (int k = 1; k <= static_cast<int>(T.size()); ++k) {
      const Label a = T.top(k);
      left_.push_back(T.left(a).approx());
      shift_.push_back(T.translation(a).approx());
    }
    for (int k = 1; k <= static_cast<int>(T.size()); ++k) {
      const Label a = T.bottom(k);
      image_left_.push_back(T.image_left(a).approx());
      back_.push_back(-T.translation(a).approx());
    }
  }

  double apply(double x) const { return x + shift_[slot(left_, x)]; }
  double apply_inverse(double x) const { return x + back_[slot(image_left_, x)]; }

 private:
  static std::size_t slot(const std::vector<double>& lefts, double x) {
    std::size_t k = 0;
    while (k + 1 < lefts.size() && lefts[k + 1] <= x) ++k;
    return k;
  }

  std::vector<double> left_;
  std::vector<double> shift_;
  std::vector<double> image_left_;
  std::vector<double> back_;
};

}  // namespace iet
