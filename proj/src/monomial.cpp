#include "tautring/monomial.hpp"

#include <algorithm>

#include "tautring/errors.hpp"

namespace tautring {

TautMonomial::TautMonomial(int m) {
  if (m < 0 || m > kMaxFactors) throw StructuralError("factor count out of range: " + std::to_string(m));
  partner_.assign(m, -1);
  local_.assign(m, 0);
}

void TautMonomial::check_index(int i) const {
  if (i < 0 || i >= factors()) {
    throw StructuralError("factor index " + std::to_string(i + 1) + " out of range 1.." + std::to_string(factors()));
  }
}

std::optional<int> TautMonomial::partner(int i) const {
  check_index(i);
  if (partner_[i] < 0) return std::nullopt;
  return partner_[i];
}

bool TautMonomial::is_unit() const {
  return std::all_of(partner_.begin(), partner_.end(), [](auto p) { return p < 0; }) &&
         std::all_of(local_.begin(), local_.end(), [](auto c) { return c == 0; });
}

bool TautMonomial::is_top() const {
  return std::all_of(local_.begin(), local_.end(), [](auto c) { return c == LocalClass::kPoint; });
}

int TautMonomial::pair_count() const {
  return static_cast<int>(std::count_if(partner_.begin(), partner_.end(), [](auto p) { return p >= 0; })) / 2;
}

std::vector<std::pair<int, int>> TautMonomial::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < factors(); ++i)
    if (partner_[i] > i) out.emplace_back(i, partner_[i]);
  return out;
}

TautMonomial& TautMonomial::add_pair(int i, int j) {
  check_index(i);
  check_index(j);
  if (i == j) throw StructuralError("τ needs two distinct factors");
  for (int k : {i, j}) {
    if (partner_[k] >= 0) throw StructuralError("factor " + std::to_string(k + 1) + " is already matched");
    if (local_[k] != 0) throw StructuralError("factor " + std::to_string(k + 1) + " carries a local class");
  }
  partner_[i] = static_cast<std::int8_t>(j);
  partner_[j] = static_cast<std::int8_t>(i);
  return *this;
}

TautMonomial& TautMonomial::set_local(int i, LocalClass c) {
  check_index(i);
  if (!c.is_unit() && partner_[i] >= 0) {
    throw StructuralError("factor " + std::to_string(i + 1) + " is matched and cannot carry a local class");
  }
  if (!c.is_point() && c.h_exponent() < 0) throw StructuralError("negative h exponent");
  local_[i] = c.code_;
  return *this;
}

std::string TautMonomial::to_string() const {
  std::string out;
  auto append = [&out](const std::string& s) {
    if (!out.empty()) out += '*';
    out += s;
  };
  for (const auto& [i, j] : pairs()) append("t(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  for (int i = 0; i < factors(); ++i) {
    const LocalClass c = local(i);
    if (c.is_unit()) continue;
    if (c.is_point()) {
      append("o" + std::to_string(i + 1));
    } else if (c.h_exponent() == 1) {
      append("h" + std::to_string(i + 1));
    } else {
      append("h" + std::to_string(i + 1) + "^" + std::to_string(c.h_exponent()));
    }
  }
  return out.empty() ? "1" : out;
}

}  // namespace tautring
