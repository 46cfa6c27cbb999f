#pragma once

#include <string>
#include <vector>

#include "tautring/calculus.hpp"

namespace tautring {

struct KimuraLimits {
  /// Largest b for which S_b is enumerated.
  int max_b = 7;
  GramOptions gram;
};

/// Σ_{σ ∈ S_b} sign(σ) Π_i τ_{i, b+σ(i)} on Y^{2b}.
struct KimuraElement {
  int b = 0;
  TautClass cls{0};
};

/// Throws ResourceLimitError when params.b() exceeds limits.max_b.
KimuraElement kimura_element(const ModelParams& params, const KimuraLimits& limits = {});

/// Σ_{σ ∈ S_b} sign(σ) delta^{cycles(σ)} by brute force over S_b. Throws
/// ResourceLimitError when b exceeds max_b.
Rational falling_factorial_pairing(int b, const Rational& delta, int max_b = KimuraLimits{}.max_b);

struct KimuraReport {
  KimuraElement element;
  /// Kimura element pairs to zero with every complementary monomial.
  bool vanishing = false;
  /// Every perfect-matching dual monomial Π τ_{i, b+ρ(i)} pairs to
  /// sign(ρ) · falling_factorial_pairing(b, delta).
  bool cross_check = false;
  Rational falling_factorial;
  std::size_t dual_monomials = 0;
};

KimuraReport verify_kimura_vanishing(const ModelParams& params, const KimuraLimits& limits = {});

struct ScanRow {
  int m = 0;
  int codim = 0;
  std::size_t basis_size = 0;
  std::size_t rank = 0;
  std::size_t deficiency = 0;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  /// Set when a resource cap stopped the scan; rows holds what was finished.
  bool truncated = false;
  std::string limit_message;
};

/// Gram rank deficiency for every m in 1..m_max and every codim.
ScanResult scan_injectivity(const ModelParams& params, int m_max, const GramOptions& options = {});

}  // namespace tautring
