#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tautring {

/// Class carried by an unmatched factor: h^a with 0 <= a < n, or the point
/// class o. h^0 is the unit.
class LocalClass {
 public:
  static constexpr LocalClass unit() { return LocalClass(0); }
  static constexpr LocalClass h_power(int exponent) { return LocalClass(static_cast<std::int8_t>(exponent)); }
  static constexpr LocalClass point() { return LocalClass(kPoint); }

  constexpr bool is_unit() const { return code_ == 0; }
  constexpr bool is_point() const { return code_ == kPoint; }
  /// Exponent of h; meaningless for the point class.
  constexpr int h_exponent() const { return code_; }
  constexpr int degree(int n) const { return is_point() ? n : code_; }

  friend constexpr auto operator<=>(LocalClass, LocalClass) = default;

 private:
  friend class TautMonomial;
  static constexpr std::int8_t kPoint = -1;
  constexpr explicit LocalClass(std::int8_t code) : code_(code) {}
  std::int8_t code_;
};

/// Normal-form monomial on Y^m: a partial matching of factors by τ's plus a
/// local class on each unmatched factor. Factor indices are 0-based; the
/// text form is 1-based.
///
/// Invariant: matched factors carry the unit local class.
class TautMonomial {
 public:
  static constexpr int kMaxFactors = 64;

  /// The unit monomial on Y^m. Throws StructuralError unless 0 <= m <= kMaxFactors.
  explicit TautMonomial(int m);

  int factors() const { return static_cast<int>(partner_.size()); }
  std::optional<int> partner(int i) const;
  LocalClass local(int i) const { return LocalClass(local_.at(i)); }
  bool is_unit() const;
  /// True when every factor carries the point class.
  bool is_top() const;
  int pair_count() const;
  /// Pairs (i, j) with i < j, ascending.
  std::vector<std::pair<int, int>> pairs() const;

  /// Throws StructuralError for out-of-range or equal indices, or if either
  /// factor is already matched or carries a non-unit local class.
  TautMonomial& add_pair(int i, int j);
  /// Throws StructuralError for an out-of-range index or a matched factor.
  TautMonomial& set_local(int i, LocalClass c);

  /// Canonical text: τ-pairs `t(i,j)` ascending, then `hK^a` / `oK` by factor;
  /// `1` for the unit.
  std::string to_string() const;

  friend auto operator<=>(const TautMonomial&, const TautMonomial&) = default;
  friend bool operator==(const TautMonomial&, const TautMonomial&) = default;

 private:
  void check_index(int i) const;

  std::vector<std::int8_t> partner_;  // -1 when unmatched
  std::vector<std::int8_t> local_;    // LocalClass code
};

}  // namespace tautring
