#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tautring/rational.hpp"

namespace tautring {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  /// Throws StructuralError unless entries.size() == rows * cols.
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Throws StructuralError if the rows have different lengths.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  RationalVector apply(const RationalVector& x) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RankKernel {
  std::size_t rank = 0;
  /// Basis of the null space in reduced echelon form: one vector per free
  /// column (ascending), with a 1 in that column and 0 in the other free
  /// columns.
  std::vector<RationalVector> kernel_basis;
};

/// Rank and null space by fraction-free elimination, pivoting on the first
/// nonzero entry in column order.
RankKernel rank_kernel(const RationalMatrix& m);

/// Some x with m * x = rhs, with every free variable set to zero, or nullopt
/// if the system is inconsistent. Throws StructuralError if rhs.size() differs
/// from m.rows().
std::optional<RationalVector> solve_linear(const RationalMatrix& m, const RationalVector& rhs);

}  // namespace tautring
