#pragma once

#include <optional>
#include <string>

#include "tautring/rational.hpp"

namespace tautring {

/// Numerical profile of the variety model: dimension n (even), degree
/// d = ∫h^n, middle Betti number b, and the loop value delta produced by a
/// closed τ-cycle (b - 1 unless overridden for contrast tests).
class ModelParams {
 public:
  /// Throws StructuralError for odd or non-positive n, d < 1 or b < 1.
  ModelParams(int n, int d, int b, std::optional<Rational> delta = std::nullopt);

  int n() const { return n_; }
  int d() const { return d_; }
  int b() const { return b_; }
  const Rational& delta() const { return delta_; }
  bool delta_overridden() const { return delta_ != Rational(b_ - 1); }

  ModelParams with_delta(const Rational& delta) const { return ModelParams(n_, d_, b_, delta); }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  int n_;
  int d_;
  int b_;
  Rational delta_;
};

std::string to_string(const ModelParams& p);

}  // namespace tautring
