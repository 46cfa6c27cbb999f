#include "tautring/calculus.hpp"

#include <algorithm>
#include <thread>

#include "tautring/errors.hpp"

namespace tautring {

Rational integrate(const TautClass& x, const ModelParams& /*params*/) {
  TautMonomial top(x.factors());
  for (int i = 0; i < x.factors(); ++i) top.set_local(i, LocalClass::point());
  return x.coefficient(top);
}

TautClass pullback(const TautClass& x, int m_target, const std::vector<int>& embedding) {
  if (static_cast<int>(embedding.size()) != x.factors()) {
    throw StructuralError("embedding has " + std::to_string(embedding.size()) + " entries for " +
                          std::to_string(x.factors()) + " factors");
  }
  std::vector<bool> used(std::max(m_target, 0), false);
  for (int target : embedding) {
    if (target < 0 || target >= m_target) throw StructuralError("embedding target out of range");
    if (used[target]) throw StructuralError("embedding is not injective");
    used[target] = true;
  }
  TautClass out(m_target);
  for (const auto& [mono, c] : x.terms()) {
    TautMonomial moved(m_target);
    for (const auto& [i, j] : mono.pairs()) moved.add_pair(embedding[i], embedding[j]);
    for (int i = 0; i < mono.factors(); ++i) moved.set_local(embedding[i], mono.local(i));
    out.add_term(moved, c);
  }
  return out;
}

TautClass pushforward(const TautClass& x, const std::vector<int>& kept) {
  const int m = x.factors();
  std::vector<int> new_index(m, -1);
  std::vector<int> sorted = kept;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw StructuralError("kept factors must be distinct");
  }
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] < 0 || sorted[k] >= m) throw StructuralError("kept factor out of range");
    new_index[sorted[k]] = static_cast<int>(k);
  }
  if (sorted.size() == static_cast<std::size_t>(m)) return x;

  TautClass out(static_cast<int>(sorted.size()));
  for (const auto& [mono, c] : x.terms()) {
    bool survives = true;
    for (int i = 0; i < m && survives; ++i) {
      if (new_index[i] >= 0) continue;
      survives = !mono.partner(i) && mono.local(i).is_point();
    }
    if (!survives) continue;
    TautMonomial reduced(static_cast<int>(sorted.size()));
    for (const auto& [i, j] : mono.pairs()) {
      if (new_index[i] < 0 || new_index[j] < 0) {
        survives = false;
        break;
      }
      reduced.add_pair(new_index[i], new_index[j]);
    }
    if (!survives) continue;
    for (int i = 0; i < m; ++i)
      if (new_index[i] >= 0) reduced.set_local(new_index[i], mono.local(i));
    out.add_term(reduced, c);
  }
  return out;
}

Rational pair(const TautClass& x, const TautClass& y, const ModelParams& params) {
  if (x.factors() != y.factors()) {
    throw StructuralError("factor-count mismatch: " + std::to_string(x.factors()) + " vs " +
                          std::to_string(y.factors()));
  }
  Rational total(0);
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      const auto prod = multiply(a, b, params);
      if (prod && prod->second.is_top()) total += prod->first * ca * cb;
    }
  }
  return total;
}

namespace {

Rational pair_monomials(const TautMonomial& a, const TautMonomial& b, const ModelParams& params) {
  const auto prod = multiply(a, b, params);
  if (prod && prod->second.is_top()) return prod->first;
  return Rational(0);
}

unsigned resolve_threads(unsigned requested, std::size_t work) {
  unsigned t = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work, 1)));
}

void check_dimension(std::size_t size, const GramOptions& options, int m, int codim) {
  if (size > options.max_dimension) {
    throw ResourceLimitError("basis of size " + std::to_string(size) + " at m=" + std::to_string(m) +
                             ", codim=" + std::to_string(codim) + " exceeds the Gram cap " +
                             std::to_string(options.max_dimension));
  }
}

}  // namespace

GramReport gram(const ModelParams& params, int m, int codim, const GramOptions& options) {
  if (codim < 0 || codim > m * params.n()) {
    throw StructuralError("codim " + std::to_string(codim) + " outside 0.." + std::to_string(m * params.n()));
  }
  GramReport report{params, m, codim, enumerate_basis(params, m, codim), {}, {}, 0, {}};
  check_dimension(report.basis.size(), options, m, codim);
  report.dual_basis = enumerate_basis(params, m, m * params.n() - codim);
  check_dimension(report.dual_basis.size(), options, m, m * params.n() - codim);

  const std::size_t rows = report.basis.size();
  const std::size_t cols = report.dual_basis.size();
  RationalMatrix g(rows, cols);
  const unsigned workers = resolve_threads(options.threads, rows);
  auto fill = [&](unsigned worker) {
    for (std::size_t i = worker; i < rows; i += workers)
      for (std::size_t j = 0; j < cols; ++j) g(i, j) = pair_monomials(report.basis[i], report.dual_basis[j], params);
  };
  if (workers <= 1) {
    fill(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(fill, w);
  }

  // Kernel vectors live in the codim space: null space of the transpose.
  const RankKernel rk = rank_kernel(g.transpose());
  report.rank = rk.rank;
  for (const auto& v : rk.kernel_basis) {
    TautClass k(m);
    for (std::size_t i = 0; i < rows; ++i) k.add_term(report.basis[i], v[i]);
    report.kernel_basis.push_back(std::move(k));
  }
  report.gram = std::move(g);
  return report;
}

bool is_zero_in_cohomology(const TautClass& x, const ModelParams& params, const GramOptions& options) {
  if (x.is_zero()) return true;
  const auto codim = homogeneous_codim(x, params);
  if (!codim) throw StructuralError("is_zero_in_cohomology needs a homogeneous class");
  const int m = x.factors();
  const auto dual = enumerate_basis(params, m, m * params.n() - *codim);
  check_dimension(dual.size(), options, m, m * params.n() - *codim);
  for (const auto& mono : dual) {
    if (!pair(x, TautClass::of(mono), params).is_zero()) return false;
  }
  return true;
}

}  // namespace tautring
