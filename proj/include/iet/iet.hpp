#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "iet/exact.hpp"
#include "iet/report.hpp"

namespace iet {

using Label = std::size_t;  // index into Iet::alphabet()

struct MarkedPoint {
  enum class Kind { Endpoint, Center, Half };
  Kind kind;
  std::optional<Label> label;  // empty for Half
  ExactScalar value;
};

struct OrbitPoint {
  ExactScalar value;
  std::optional<Label> endpoint;  // set when value == ∂I_label
};

class Iet {
 public:
  struct Options {
    bool allow_reducible = false;
  };

  /// Permutations are given as positions: pi0[i] is the slot of alphabet[i]
  /// before the exchange, pi1[i] after. Both take values in 1..d.
  static Iet make(std::vector<std::string> alphabet, std::vector<int> pi0, std::vector<int> pi1,
                  std::vector<ExactScalar> lambda, ExactScalar lo, ExactScalar hi);
  static Iet make(std::vector<std::string> alphabet, std::vector<int> pi0, std::vector<int> pi1,
                  std::vector<ExactScalar> lambda, ExactScalar lo, ExactScalar hi, Options options);

  std::size_t size() const { return alphabet_.size(); }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::string& name(Label a) const { return alphabet_[a]; }
  std::optional<Label> find(const std::string& name) const;

  const BasisPtr& basis() const { return lo_.basis(); }
  const std::vector<int>& pi0() const { return pi0_; }
  const std::vector<int>& pi1() const { return pi1_; }
  int pi0(Label a) const { return pi0_[a]; }
  int pi1(Label a) const { return pi1_[a]; }
  /// Label occupying slot k (1-based) before / after the exchange.
  Label top(int k) const { return top_[k - 1]; }
  Label bottom(int k) const { return bottom_[k - 1]; }

  const std::vector<ExactScalar>& lambda() const { return lambda_; }
  const ExactScalar& lambda(Label a) const { return lambda_[a]; }
  const ExactScalar& lo() const { return lo_; }
  const ExactScalar& hi() const { return hi_; }
  ExactScalar length() const { return hi_ - lo_; }

  /// ∂I_a, the left endpoint of I_a.
  const ExactScalar& left(Label a) const { return left_[a]; }
  ExactScalar right(Label a) const { return left_[a] + lambda_[a]; }
  /// Left endpoint of T(I_a).
  const ExactScalar& image_left(Label a) const { return image_left_[a]; }
  const ExactScalar& translation(Label a) const { return shift_[a]; }
  /// c_a and c_{1/2}.
  ExactScalar center(Label a) const;
  ExactScalar half() const;
  /// I_I(x) = lo + hi - x.
  ExactScalar reflect(const ExactScalar& x) const;

  bool contains(const ExactScalar& x) const;
  /// Label a with x in I_a. Throws OutOfDomain.
  Label locate(const ExactScalar& x) const;
  /// Label a with x in T(I_a). Throws OutOfDomain.
  Label locate_image(const ExactScalar& x) const;
  /// Label a with x == ∂I_a, if any.
  std::optional<Label> endpoint_at(const ExactScalar& x) const;

  ExactScalar apply(const ExactScalar& x) const;
  ExactScalar apply_inverse(const ExactScalar& x) const;
  /// T^n for signed n.
  ExactScalar iterate(const ExactScalar& x, long n) const;

  bool is_symmetric() const;
  /// Every ∂I_a other than the left end of I is a real discontinuity.
  bool is_nondegenerate() const;

 private:
  std::vector<std::string> alphabet_;
  std::vector<int> pi0_;
  std::vector<int> pi1_;
  std::vector<Label> top_;
  std::vector<Label> bottom_;
  std::vector<ExactScalar> lambda_;
  ExactScalar lo_;
  ExactScalar hi_;
  std::vector<ExactScalar> left_;
  std::vector<ExactScalar> image_left_;
  std::vector<ExactScalar> shift_;
};

/// x, T^{±1}x, ..., T^n x with endpoint flags.
std::vector<OrbitPoint> orbit(const Iet& T, const ExactScalar& x, long n);

std::vector<MarkedPoint> marked_points(const Iet& T);

/// Checks I_I∘T = T^{-1}∘I_I on the sample and the endpoint identity
/// I_I∘T(∂I_a) = ∂I_b with pi0(b) = pi0(a) + 1. Throws SampleOnEndpoint.
CheckReport verify_conjugacy(const Iet& T, const std::vector<ExactScalar>& sample);

/// Midpoints of the refinement of I by ∂I_a and I_I(T(∂I_a)).
std::vector<ExactScalar> separating_sample(const Iet& T);

/// True when T^k acts continuously on [lo, lo + width) for 0 <= k < n,
/// i.e. no ∂I_a falls strictly inside any of the first n images.
bool iterate_interval(const Iet& T, const ExactScalar& lo, const ExactScalar& width, long n,
                      ExactScalar* image_lo = nullptr);

/// Sorts and removes exact duplicates.
void sort_unique(std::vector<ExactScalar>& points);

}  // namespace iet
