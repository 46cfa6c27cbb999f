#include "tautring/linalg.hpp"

#include <utility>

#include "tautring/errors.hpp"

namespace tautring {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw StructuralError("matrix entry count " + std::to_string(entries_.size()) + " != " +
                          std::to_string(rows_) + " x " + std::to_string(cols_));
  }
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Rational> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) throw StructuralError("non-rectangular matrix");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return RationalMatrix(rows.size(), cols, std::move(entries));
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalVector RationalMatrix::apply(const RationalVector& x) const {
  if (x.size() != cols_) throw StructuralError("vector length does not match matrix columns");
  RationalVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!x[c].is_zero()) y[r] += (*this)(r, c) * x[c];
  return y;
}

namespace {

using IntRow = std::vector<mpz_class>;

// Clears denominators row by row; row scaling preserves rank and null space.
std::vector<IntRow> integer_rows(const RationalMatrix& m, const RationalVector* rhs) {
  const std::size_t width = m.cols() + (rhs ? 1 : 0);
  std::vector<IntRow> out(m.rows(), IntRow(width));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
    if (rhs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), (*rhs)[r].raw().get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).numerator() * (lcm / m(r, c).denominator());
    if (rhs) out[r][m.cols()] = (*rhs)[r].numerator() * (lcm / (*rhs)[r].denominator());
  }
  return out;
}

struct Echelon {
  std::vector<IntRow> rows;
  std::vector<std::size_t> pivot_cols;
};

// Bareiss forward elimination. Every intermediate entry is a minor of the
// input, so the division by the previous pivot is exact.
Echelon bareiss(std::vector<IntRow> a, std::size_t width) {
  Echelon e;
  std::size_t r = 0;
  mpz_class prev = 1;
  mpz_class tmp;
  for (std::size_t c = 0; c < width && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    const mpz_class& pivot = a[r][c];
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      const mpz_class factor = a[i][c];
      for (std::size_t j = c + 1; j < width; ++j) {
        tmp = pivot * a[i][j];
        tmp -= factor * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = pivot;
    e.pivot_cols.push_back(c);
    ++r;
  }
  a.resize(r);
  e.rows = std::move(a);
  return e;
}

// Reduced row echelon form of the echelon rows, over the rationals.
std::vector<RationalVector> reduce(const Echelon& e, std::size_t width) {
  std::vector<RationalVector> rref(e.rows.size(), RationalVector(width));
  for (std::size_t k = 0; k < e.rows.size(); ++k)
    for (std::size_t j = 0; j < width; ++j) rref[k][j] = Rational(e.rows[k][j], mpz_class(1));
  for (std::size_t k = e.rows.size(); k-- > 0;) {
    const std::size_t pc = e.pivot_cols[k];
    const Rational inv = Rational(1) / rref[k][pc];
    for (std::size_t j = pc; j < width; ++j)
      if (!rref[k][j].is_zero()) rref[k][j] *= inv;
    for (std::size_t above = 0; above < k; ++above) {
      const Rational f = rref[above][pc];
      if (f.is_zero()) continue;
      for (std::size_t j = pc; j < width; ++j)
        if (!rref[k][j].is_zero()) rref[above][j] -= f * rref[k][j];
    }
  }
  return rref;
}

}  // namespace

RankKernel rank_kernel(const RationalMatrix& m) {
  const Echelon e = bareiss(integer_rows(m, nullptr), m.cols());
  const auto rref = reduce(e, m.cols());

  RankKernel out;
  out.rank = e.pivot_cols.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < rref.size(); ++k) v[e.pivot_cols[k]] = -rref[k][f];
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

std::optional<RationalVector> solve_linear(const RationalMatrix& m, const RationalVector& rhs) {
  if (rhs.size() != m.rows()) {
    throw StructuralError("right-hand side has " + std::to_string(rhs.size()) + " entries, matrix has " +
                          std::to_string(m.rows()) + " rows");
  }
  const std::size_t width = m.cols() + 1;
  const Echelon e = bareiss(integer_rows(m, &rhs), width);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  const auto rref = reduce(e, width);
  RationalVector x(m.cols());
  for (std::size_t k = 0; k < rref.size(); ++k) x[e.pivot_cols[k]] = rref[k][m.cols()];
  return x;
}

}  // namespace tautring
