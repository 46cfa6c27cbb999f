#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "tautring/calculus.hpp"

namespace tautring {

/// A class on Y^{source + target}; the first `source` factors form the
/// source block.
class Correspondence {
 public:
  /// Throws StructuralError unless cls.factors() == source + target.
  Correspondence(TautClass cls, int source, int target);

  const TautClass& cls() const { return cls_; }
  int source() const { return source_; }
  int target() const { return target_; }

  friend bool operator==(const Correspondence&, const Correspondence&) = default;

 private:
  TautClass cls_;
  int source_;
  int target_;
};

Correspondence operator+(const Correspondence& f, const Correspondence& g);
Correspondence operator-(const Correspondence& f, const Correspondence& g);
Correspondence operator*(const Rational& scalar, const Correspondence& f);

/// Δ = τ_12 + (1/d) Σ_j h_1^j h_2^{n-j} as a correspondence Y -> Y.
Correspondence diagonal(const ModelParams& params);

/// f ∘ g: pull both to the triple product, multiply, integrate out the
/// middle block. Throws StructuralError unless g.target() == f.source().
Correspondence compose(const Correspondence& f, const Correspondence& g, const ModelParams& params);

/// Swaps the source and target blocks.
Correspondence transpose(const Correspondence& f);

/// f × g : (f.source, g.source) -> (f.target, g.target).
Correspondence product(const Correspondence& f, const Correspondence& g, const ModelParams& params);

struct ProjectorSet {
  ModelParams params;
  /// Keyed by the even cohomological degree 2j, 0 <= 2j <= 2n.
  std::map<int, Correspondence> projectors;
};

/// π^{2j} = (1/d) h^{n-j} × h^j for 2j != n, and π^n = Δ minus the others.
ProjectorSet ck_projectors(const ModelParams& params);

struct CheckItem {
  std::string identity;
  bool passed = false;
  /// Canonical text of the nonzero difference when the check fails.
  std::string offending;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool passed() const;
};

/// Idempotence, mutual orthogonality and Σ π = Δ, each checked exactly.
CheckReport verify_ck(const ProjectorSet& ps);

/// Δ^{sm} = Δ_12 · Δ_13 on Y^3.
TautClass small_diagonal(const ModelParams& params);

/// π^k ∘ Δ^{sm} ∘ (π^i × π^j) = 0 for every i + j != k, plus
/// Σ_k π^k ∘ Δ^{sm} ∘ (π^i × π^j) = Δ^{sm} ∘ (π^i × π^j) for every (i, j).
/// Items are listed in (i, j, k) grid order.
CheckReport verify_mck(const ModelParams& params);

/// f_*(x) for f : Y -> Y and x on Y.
TautClass act(const Correspondence& f, const TautClass& x, const ModelParams& params);

struct DiagonalTimesH {
  TautClass lhs;  ///< Δ · h_factor
  TautClass rhs;  ///< (1/d) Σ_k h_1^k h_2^{n+1-k}
  bool equal() const { return lhs == rhs; }
};

/// Δ · h on the given factor (0 or 1) against the closed form.
DiagonalTimesH expand_diagonal_times_h(const ModelParams& params, int factor);

struct Gamma3Solution {
  /// a_{ijk} keyed by the exponent triple, i + j + k = 2n, each at most n.
  std::map<std::array<int, 3>, Rational> coefficients;
  TautClass residual{3};
  bool symmetric() const;
};

/// Solves Δ^{sm} - (Δ_12 o_3 + Δ_13 o_2 + Δ_23 o_1) + Σ a_{ijk} h_1^i h_2^j h_3^k = 0
/// for the a_{ijk}. Throws InconsistentSystemError when no solution exists.
Gamma3Solution solve_gamma3(const ModelParams& params);

/// ∫ Δ · Δ on Y^2.
Rational euler_char(const ModelParams& params);

}  // namespace tautring
