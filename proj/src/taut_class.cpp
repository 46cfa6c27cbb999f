#include "tautring/taut_class.hpp"

#include "tautring/errors.hpp"

namespace tautring {

TautClass TautClass::of(const TautMonomial& mono, const Rational& coefficient) {
  TautClass x(mono.factors());
  x.add_term(mono, coefficient);
  return x;
}

Rational TautClass::coefficient(const TautMonomial& mono) const {
  const auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TautClass::check_same_power(int m) const {
  if (m != m_) {
    throw StructuralError("factor-count mismatch: " + std::to_string(m_) + " vs " + std::to_string(m));
  }
}

void TautClass::add_term(const TautMonomial& mono, const Rational& coefficient) {
  check_same_power(mono.factors());
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

TautClass& TautClass::operator+=(const TautClass& rhs) {
  check_same_power(rhs.m_);
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
  return *this;
}

TautClass& TautClass::operator-=(const TautClass& rhs) {
  check_same_power(rhs.m_);
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
  return *this;
}

TautClass& TautClass::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= scalar;
  return *this;
}

}  // namespace tautring
