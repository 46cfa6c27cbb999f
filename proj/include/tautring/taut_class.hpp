#pragma once

#include <map>
#include <optional>

#include "tautring/monomial.hpp"
#include "tautring/rational.hpp"

namespace tautring {

/// Finite rational combination of normal-form monomials on Y^m. Zero
/// coefficients are never stored, so equality is structural.
class TautClass {
 public:
  using Terms = std::map<TautMonomial, Rational>;

  explicit TautClass(int m) : m_(m) {}
  static TautClass of(const TautMonomial& mono, const Rational& coefficient = Rational(1));

  int factors() const { return m_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const TautMonomial& mono) const;

  /// Throws StructuralError if mono lives on a different power.
  void add_term(const TautMonomial& mono, const Rational& coefficient);

  TautClass& operator+=(const TautClass& rhs);
  TautClass& operator-=(const TautClass& rhs);
  TautClass& operator*=(const Rational& scalar);

  friend TautClass operator+(TautClass lhs, const TautClass& rhs) { return lhs += rhs; }
  friend TautClass operator-(TautClass lhs, const TautClass& rhs) { return lhs -= rhs; }
  friend TautClass operator*(const Rational& scalar, TautClass x) { return x *= scalar; }
  friend TautClass operator-(TautClass x) { return x *= Rational(-1); }

  friend bool operator==(const TautClass&, const TautClass&) = default;

 private:
  void check_same_power(int m) const;

  int m_;
  Terms terms_;
};

}  // namespace tautring
