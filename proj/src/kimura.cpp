#include "tautring/kimura.hpp"

#include <algorithm>
#include <numeric>

#include "tautring/errors.hpp"

namespace tautring {

namespace {

void check_b(int b, int max_b) {
  if (b < 1) throw StructuralError("b must be >= 1");
  if (b > max_b) {
    throw ResourceLimitError("b = " + std::to_string(b) + " exceeds the permutation cap " + std::to_string(max_b));
  }
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

int cycle_count(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

std::vector<int> identity_permutation(int b) {
  std::vector<int> perm(b);
  std::iota(perm.begin(), perm.end(), 0);
  return perm;
}

// Π_i τ_{i, b+σ(i)} on Y^{2b}.
TautMonomial matching_monomial(const std::vector<int>& sigma) {
  const int b = static_cast<int>(sigma.size());
  TautMonomial mono(2 * b);
  for (int i = 0; i < b; ++i) mono.add_pair(i, b + sigma[i]);
  return mono;
}

}  // namespace

KimuraElement kimura_element(const ModelParams& params, const KimuraLimits& limits) {
  const int b = params.b();
  check_b(b, limits.max_b);
  KimuraElement out{b, TautClass(2 * b)};
  std::vector<int> sigma = identity_permutation(b);
  do {
    out.cls.add_term(matching_monomial(sigma), Rational(permutation_sign(sigma)));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

Rational falling_factorial_pairing(int b, const Rational& delta, int max_b) {
  check_b(b, max_b);
  Rational total(0);
  std::vector<int> sigma = identity_permutation(b);
  do {
    const Rational term = pow(delta, static_cast<unsigned>(cycle_count(sigma)));
    total += permutation_sign(sigma) > 0 ? term : -term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

KimuraReport verify_kimura_vanishing(const ModelParams& params, const KimuraLimits& limits) {
  KimuraReport report;
  report.element = kimura_element(params, limits);
  const int b = params.b();
  const int m = 2 * b;
  const int dual_codim = m * params.n() - b * params.n();
  report.dual_monomials = enumerate_basis(params, m, dual_codim).size();
  report.vanishing = is_zero_in_cohomology(report.element.cls, params, limits.gram);

  report.falling_factorial = falling_factorial_pairing(b, params.delta(), limits.max_b);
  report.cross_check = true;
  std::vector<int> rho = identity_permutation(b);
  do {
    const Rational expected = permutation_sign(rho) > 0 ? report.falling_factorial : -report.falling_factorial;
    if (pair(report.element.cls, TautClass::of(matching_monomial(rho)), params) != expected) {
      report.cross_check = false;
      break;
    }
  } while (std::next_permutation(rho.begin(), rho.end()));
  return report;
}

ScanResult scan_injectivity(const ModelParams& params, int m_max, const GramOptions& options) {
  ScanResult result;
  for (int m = 1; m <= m_max; ++m) {
    for (int codim = 0; codim <= m * params.n(); ++codim) {
      try {
        const GramReport g = gram(params, m, codim, options);
        result.rows.push_back({m, codim, g.basis.size(), g.rank, g.deficiency()});
      } catch (const ResourceLimitError& e) {
        result.truncated = true;
        result.limit_message = e.what();
        return result;
      }
    }
  }
  return result;
}

}  // namespace tautring
