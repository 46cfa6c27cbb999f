#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tautring/params.hpp"
#include "tautring/taut_class.hpp"

namespace tautring {

/// Codimension: Σ local degrees (h^a -> a, o -> n) + n per τ-pair. Throws
/// StructuralError if a local exponent is not below n.
int monomial_codim(const TautMonomial& mono, const ModelParams& params);

/// Codimension shared by every term, or nullopt for the zero class or an
/// inhomogeneous one.
std::optional<int> homogeneous_codim(const TautClass& x, const ModelParams& params);

/// Normal form of the product of two monomials, as (coefficient, monomial),
/// or nullopt when the product vanishes.
///
/// Local classes multiply factorwise with h^n -> d·o and h^{>n}, o·h, o·o -> 0.
/// The union of the two matchings is a disjoint union of paths and cycles:
/// a path collapses to τ between its endpoints with o on every interior
/// factor (τ_ij·τ_ik = τ_jk·o_i), a cycle collapses to delta times o on all
/// of its factors (τ_ij·τ_ij = delta·o_i·o_j). A τ touching a factor with a
/// non-unit local class kills the product.
std::optional<std::pair<Rational, TautMonomial>> multiply(const TautMonomial& x, const TautMonomial& y,
                                                          const ModelParams& params);

/// Throws StructuralError on a factor-count mismatch.
TautClass multiply(const TautClass& x, const TautClass& y, const ModelParams& params);

/// All normal-form monomials on Y^m of the given codimension, in canonical
/// order. Empty when codim is negative or exceeds m·n.
std::vector<TautMonomial> enumerate_basis(const ModelParams& params, int m, int codim);

/// Orders monomials by codimension, then by canonical string.
bool canonical_less(const TautMonomial& a, const TautMonomial& b, const ModelParams& params);

// Generators on Y^m (0-based factor indices).
TautClass unit_class(int m);
/// h_i^e in normal form: d·o_i when e = n, zero when e > n.
TautClass h_class(const ModelParams& params, int m, int i, int exponent = 1);
TautClass point_class(int m, int i);
TautClass tau_class(int m, int i, int j);

struct ParseOptions {
  /// When false, every monomial must already be in normal form (no repeated
  /// factor, h-exponents below n).
  bool normalize = true;
};

/// Parses the class grammar, e.g. "3/2*t(1,2)*o3 - h1^2*h2 + 1". Factor
/// indices are 1-based. Throws ParseError with the offending position.
TautClass parse_class(std::string_view text, int m, const ModelParams& params, ParseOptions options = {});

/// Canonical text: terms in canonical order joined by " + " / " - ",
/// coefficients as "p/q*" (omitted when 1), "0" for the zero class.
std::string format_class(const TautClass& x, const ModelParams& params);

}  // namespace tautring
