#include "tautring/motives.hpp"

#include <algorithm>
#include <numeric>

#include "tautring/errors.hpp"

namespace tautring {

Correspondence::Correspondence(TautClass cls, int source, int target)
    : cls_(std::move(cls)), source_(source), target_(target) {
  if (source < 0 || target < 0 || cls_.factors() != source + target) {
    throw StructuralError("correspondence blocks " + std::to_string(source) + "+" + std::to_string(target) +
                          " do not match a class on " + std::to_string(cls_.factors()) + " factors");
  }
}

namespace {

void check_same_blocks(const Correspondence& f, const Correspondence& g) {
  if (f.source() != g.source() || f.target() != g.target()) throw StructuralError("correspondence block mismatch");
}

std::vector<int> iota_from(int start, int count) {
  std::vector<int> v(count);
  std::iota(v.begin(), v.end(), start);
  return v;
}

std::string degree_name(int i) { return "pi^" + std::to_string(i); }

}  // namespace

Correspondence operator+(const Correspondence& f, const Correspondence& g) {
  check_same_blocks(f, g);
  return Correspondence(f.cls() + g.cls(), f.source(), f.target());
}

Correspondence operator-(const Correspondence& f, const Correspondence& g) {
  check_same_blocks(f, g);
  return Correspondence(f.cls() - g.cls(), f.source(), f.target());
}

Correspondence operator*(const Rational& scalar, const Correspondence& f) {
  return Correspondence(scalar * f.cls(), f.source(), f.target());
}

Correspondence diagonal(const ModelParams& params) {
  const int n = params.n();
  TautClass delta = tau_class(2, 0, 1);
  const Rational inv_d = Rational(1) / Rational(params.d());
  for (int j = 0; j <= n; ++j) {
    delta += inv_d * multiply(h_class(params, 2, 0, j), h_class(params, 2, 1, n - j), params);
  }
  return Correspondence(std::move(delta), 1, 1);
}

Correspondence compose(const Correspondence& f, const Correspondence& g, const ModelParams& params) {
  if (g.target() != f.source()) {
    throw StructuralError("cannot compose: inner target " + std::to_string(g.target()) + " != outer source " +
                          std::to_string(f.source()));
  }
  const int a = g.source();
  const int b = g.target();
  const int c = f.target();
  const int total = a + b + c;
  const TautClass inner = pullback(g.cls(), total, iota_from(0, a + b));
  const TautClass outer = pullback(f.cls(), total, iota_from(a, b + c));
  std::vector<int> kept = iota_from(0, a);
  for (int k = a + b; k < total; ++k) kept.push_back(k);
  return Correspondence(pushforward(multiply(inner, outer, params), kept), a, c);
}

Correspondence transpose(const Correspondence& f) {
  const int s = f.source();
  const int t = f.target();
  std::vector<int> embedding(s + t);
  for (int i = 0; i < s; ++i) embedding[i] = t + i;
  for (int k = 0; k < t; ++k) embedding[s + k] = k;
  return Correspondence(pullback(f.cls(), s + t, embedding), t, s);
}

Correspondence product(const Correspondence& f, const Correspondence& g, const ModelParams& params) {
  const int fs = f.source(), ft = f.target(), gs = g.source(), gt = g.target();
  const int total = fs + ft + gs + gt;
  std::vector<int> f_embed, g_embed;
  for (int i = 0; i < fs; ++i) f_embed.push_back(i);
  for (int k = 0; k < ft; ++k) f_embed.push_back(fs + gs + k);
  for (int i = 0; i < gs; ++i) g_embed.push_back(fs + i);
  for (int k = 0; k < gt; ++k) g_embed.push_back(fs + gs + ft + k);
  TautClass cls = multiply(pullback(f.cls(), total, f_embed), pullback(g.cls(), total, g_embed), params);
  return Correspondence(std::move(cls), fs + gs, ft + gt);
}

ProjectorSet ck_projectors(const ModelParams& params) {
  const int n = params.n();
  const Rational inv_d = Rational(1) / Rational(params.d());
  ProjectorSet ps{params, {}};
  Correspondence middle = diagonal(params);
  for (int j = 0; j <= n; ++j) {
    if (2 * j == n) continue;
    Correspondence pi(inv_d * multiply(h_class(params, 2, 0, n - j), h_class(params, 2, 1, j), params), 1, 1);
    middle = middle - pi;
    ps.projectors.emplace(2 * j, std::move(pi));
  }
  ps.projectors.emplace(n, std::move(middle));
  return ps;
}

bool CheckReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.passed; });
}

namespace {

CheckItem check_equal(std::string identity, const TautClass& lhs, const TautClass& rhs, const ModelParams& params) {
  const TautClass diff = lhs - rhs;
  return {std::move(identity), diff.is_zero(), diff.is_zero() ? std::string() : format_class(diff, params)};
}

}  // namespace

CheckReport verify_ck(const ProjectorSet& ps) {
  const ModelParams& params = ps.params;
  CheckReport report;
  TautClass sum(2);
  for (const auto& [i, pi] : ps.projectors) {
    sum += pi.cls();
    for (const auto& [j, pj] : ps.projectors) {
      const TautClass composed = compose(pi, pj, params).cls();
      if (i == j) {
        report.items.push_back(check_equal(degree_name(i) + " o " + degree_name(i) + " = " + degree_name(i), composed,
                                           pi.cls(), params));
      } else {
        report.items.push_back(
            check_equal(degree_name(i) + " o " + degree_name(j) + " = 0", composed, TautClass(2), params));
      }
    }
  }
  report.items.push_back(check_equal("sum of pi = Delta", sum, diagonal(params).cls(), params));
  return report;
}

TautClass small_diagonal(const ModelParams& params) {
  const TautClass delta = diagonal(params).cls();
  return multiply(pullback(delta, 3, {0, 1}), pullback(delta, 3, {0, 2}), params);
}

CheckReport verify_mck(const ModelParams& params) {
  const ProjectorSet ps = ck_projectors(params);
  const Correspondence product_map(small_diagonal(params), 2, 1);
  CheckReport report;
  for (const auto& [i, pi] : ps.projectors) {
    for (const auto& [j, pj] : ps.projectors) {
      const Correspondence restricted = compose(product_map, product(pi, pj, params), params);
      TautClass total(3);
      const std::string tail = " o Dsm o (" + degree_name(i) + " x " + degree_name(j) + ")";
      for (const auto& [k, pk] : ps.projectors) {
        const TautClass component = compose(pk, restricted, params).cls();
        total += component;
        if (i + j == k) {
          report.items.push_back(check_equal(degree_name(k) + tail + " = Dsm o (" + degree_name(i) + " x " +
                                                 degree_name(j) + ")",
                                             component, restricted.cls(), params));
        } else {
          report.items.push_back(check_equal(degree_name(k) + tail + " = 0", component, TautClass(3), params));
        }
      }
      report.items.push_back(check_equal("sum_k pi^k" + tail + " = Dsm o (" + degree_name(i) + " x " +
                                             degree_name(j) + ")",
                                         total, restricted.cls(), params));
    }
  }
  return report;
}

TautClass act(const Correspondence& f, const TautClass& x, const ModelParams& params) {
  if (f.source() != 1 || f.target() != 1) throw StructuralError("act needs a correspondence Y -> Y");
  if (x.factors() != 1) throw StructuralError("act needs a class on Y");
  return pushforward(multiply(f.cls(), pullback(x, 2, {0}), params), {1});
}

DiagonalTimesH expand_diagonal_times_h(const ModelParams& params, int factor) {
  if (factor != 0 && factor != 1) throw StructuralError("factor must be 0 or 1");
  const int n = params.n();
  DiagonalTimesH out{multiply(diagonal(params).cls(), h_class(params, 2, factor), params), TautClass(2)};
  const Rational inv_d = Rational(1) / Rational(params.d());
  for (int k = 0; k <= n + 1; ++k) {
    out.rhs += inv_d * multiply(h_class(params, 2, 0, k), h_class(params, 2, 1, n + 1 - k), params);
  }
  return out;
}

bool Gamma3Solution::symmetric() const {
  for (const auto& [key, a] : coefficients) {
    std::array<int, 3> perm = key;
    std::sort(perm.begin(), perm.end());
    do {
      const auto it = coefficients.find(perm);
      if (it == coefficients.end() || it->second != a) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

Gamma3Solution solve_gamma3(const ModelParams& params) {
  const int n = params.n();
  const TautClass delta = diagonal(params).cls();
  TautClass base = small_diagonal(params);
  const std::array<std::array<int, 3>, 3> corrections{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  for (const auto& [i, j, k] : corrections) {
    base -= multiply(pullback(delta, 3, {i, j}), point_class(3, k), params);
  }

  std::vector<std::array<int, 3>> unknowns;
  std::vector<TautClass> columns;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const int k = 2 * n - i - j;
      if (k < 0 || k > n) continue;
      unknowns.push_back({i, j, k});
      columns.push_back(multiply(multiply(h_class(params, 3, 0, i), h_class(params, 3, 1, j), params),
                                 h_class(params, 3, 2, k), params));
    }
  }

  const auto rows = enumerate_basis(params, 3, 2 * n);
  RationalMatrix system(rows.size(), unknowns.size());
  RationalVector rhs(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    rhs[r] = -base.coefficient(rows[r]);
    for (std::size_t c = 0; c < columns.size(); ++c) system(r, c) = columns[c].coefficient(rows[r]);
  }
  const auto solution = solve_linear(system, rhs);
  if (!solution) throw InconsistentSystemError("no a_ijk make the modified small diagonal vanish");

  Gamma3Solution out;
  out.residual = base;
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    out.coefficients.emplace(unknowns[c], (*solution)[c]);
    out.residual += (*solution)[c] * columns[c];
  }
  return out;
}

Rational euler_char(const ModelParams& params) {
  const TautClass delta = diagonal(params).cls();
  return integrate(multiply(delta, delta, params), params);
}

}  // namespace tautring
