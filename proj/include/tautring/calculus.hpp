#pragma once

#include <cstddef>
#include <vector>

#include "tautring/algebra.hpp"
#include "tautring/linalg.hpp"

namespace tautring {

/// Coefficient of o_1···o_m in x; lower-codimension components integrate to 0.
Rational integrate(const TautClass& x, const ModelParams& params);

/// Relabels factor i of x to embedding[i] on Y^{m_target}. Throws
/// StructuralError unless the embedding is injective, in range and has one
/// entry per factor of x.
TautClass pullback(const TautClass& x, int m_target, const std::vector<int>& embedding);

/// Integrates out every factor not in `kept`; the surviving factors are
/// renumbered in ascending order of their old index. Only an unmatched o
/// survives integration (with weight 1); units, h-powers and τ's touching an
/// integrated factor contribute 0.
TautClass pushforward(const TautClass& x, const std::vector<int>& kept);

/// ∫ x·y. Throws StructuralError on a factor-count mismatch.
Rational pair(const TautClass& x, const TautClass& y, const ModelParams& params);

struct GramOptions {
  /// Worker threads for entry evaluation; 0 picks the hardware concurrency.
  unsigned threads = 1;
  /// Largest allowed basis (or dual basis) size; ResourceLimitError above it.
  std::size_t max_dimension = 5000;
};

struct GramReport {
  ModelParams params;
  int m = 0;
  int codim = 0;
  std::vector<TautMonomial> basis;
  std::vector<TautMonomial> dual_basis;
  /// gram(i, j) = pair(basis[i], dual_basis[j]).
  RationalMatrix gram;
  std::size_t rank = 0;
  std::vector<TautClass> kernel_basis;

  std::size_t deficiency() const { return kernel_basis.size(); }
};

/// Pairing matrix of the codim basis against the full complementary basis,
/// with its rank and radical. Entries are assembled identically for any
/// thread count.
GramReport gram(const ModelParams& params, int m, int codim, const GramOptions& options = {});

/// True iff x pairs to zero with every monomial of complementary codimension.
/// Throws StructuralError for inhomogeneous x; the zero class is zero.
bool is_zero_in_cohomology(const TautClass& x, const ModelParams& params, const GramOptions& options = {});

}  // namespace tautring
