#include "tautring/algebra.hpp"

#include <algorithm>
#include <cctype>

#include "tautring/errors.hpp"

namespace tautring {

int monomial_codim(const TautMonomial& mono, const ModelParams& params) {
  int codim = params.n() * mono.pair_count();
  for (int i = 0; i < mono.factors(); ++i) {
    const LocalClass c = mono.local(i);
    if (!c.is_point() && c.h_exponent() >= params.n()) {
      throw StructuralError("h exponent " + std::to_string(c.h_exponent()) + " on factor " + std::to_string(i + 1) +
                            " is not below n = " + std::to_string(params.n()));
    }
    codim += c.degree(params.n());
  }
  return codim;
}

std::optional<int> homogeneous_codim(const TautClass& x, const ModelParams& params) {
  std::optional<int> codim;
  for (const auto& [mono, c] : x.terms()) {
    const int k = monomial_codim(mono, params);
    if (codim && *codim != k) return std::nullopt;
    codim = k;
  }
  return codim;
}

std::optional<std::pair<Rational, TautMonomial>> multiply(const TautMonomial& x, const TautMonomial& y,
                                                          const ModelParams& params) {
  const int m = x.factors();
  if (y.factors() != m) {
    throw StructuralError("factor-count mismatch: " + std::to_string(m) + " vs " + std::to_string(y.factors()));
  }
  const int n = params.n();
  Rational coefficient(1);
  std::vector<LocalClass> local(m, LocalClass::unit());

  for (int i = 0; i < m; ++i) {
    const LocalClass a = x.local(i);
    const LocalClass b = y.local(i);
    if (a.is_point() || b.is_point()) {
      if (!(a.is_unit() || b.is_unit())) return std::nullopt;
      local[i] = LocalClass::point();
      continue;
    }
    const int e = a.h_exponent() + b.h_exponent();
    if (e < n) {
      local[i] = LocalClass::h_power(e);
    } else if (e == n) {
      local[i] = LocalClass::point();
      coefficient *= Rational(params.d());
    } else {
      return std::nullopt;
    }
  }

  std::vector<std::optional<int>> px(m), py(m);
  for (int i = 0; i < m; ++i) {
    px[i] = x.partner(i);
    py[i] = y.partner(i);
    if ((px[i] || py[i]) && !local[i].is_unit()) return std::nullopt;
  }

  // Each factor has at most one edge from x and one from y, so components
  // alternate between the two matchings.
  TautMonomial out(m);
  std::vector<bool> seen(m, false);
  std::vector<std::pair<int, int>> new_pairs;
  for (int start = 0; start < m; ++start) {
    if (seen[start] || (px[start].has_value() == py[start].has_value())) continue;
    bool from_x = px[start].has_value();
    int cur = start;
    seen[cur] = true;
    while (true) {
      const int next = from_x ? *px[cur] : *py[cur];
      seen[next] = true;
      const auto& onward = from_x ? py[next] : px[next];
      if (!onward) {
        new_pairs.emplace_back(start, next);
        break;
      }
      local[next] = LocalClass::point();
      cur = next;
      from_x = !from_x;
    }
  }
  for (int start = 0; start < m; ++start) {
    if (seen[start] || !px[start]) continue;
    coefficient *= params.delta();
    int cur = start;
    bool from_x = true;
    do {
      seen[cur] = true;
      local[cur] = LocalClass::point();
      cur = from_x ? *px[cur] : *py[cur];
      from_x = !from_x;
    } while (cur != start);
  }
  if (coefficient.is_zero()) return std::nullopt;

  for (const auto& [i, j] : new_pairs) out.add_pair(i, j);
  for (int i = 0; i < m; ++i) out.set_local(i, local[i]);
  return std::make_pair(std::move(coefficient), std::move(out));
}

TautClass multiply(const TautClass& x, const TautClass& y, const ModelParams& params) {
  if (x.factors() != y.factors()) {
    throw StructuralError("factor-count mismatch: " + std::to_string(x.factors()) + " vs " +
                          std::to_string(y.factors()));
  }
  TautClass out(x.factors());
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      if (auto prod = multiply(a, b, params)) out.add_term(prod->second, prod->first * ca * cb);
    }
  }
  return out;
}

namespace {

void enumerate_from(int i, int remaining, int unmatched_ahead, TautMonomial& cur, const ModelParams& params,
                    std::vector<TautMonomial>& out) {
  const int m = cur.factors();
  const int n = params.n();
  while (i < m && cur.partner(i)) ++i;
  if (i == m) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  if (remaining > n * unmatched_ahead) return;

  for (int k = 0; k <= std::min(n, remaining); ++k) {
    cur.set_local(i, k == n ? LocalClass::point() : LocalClass::h_power(k));
    enumerate_from(i + 1, remaining - k, unmatched_ahead - 1, cur, params, out);
  }
  cur.set_local(i, LocalClass::unit());

  if (remaining < n) return;
  for (int j = i + 1; j < m; ++j) {
    if (cur.partner(j)) continue;
    TautMonomial next = cur;
    next.add_pair(i, j);
    enumerate_from(i + 1, remaining - n, unmatched_ahead - 2, next, params, out);
  }
}

}  // namespace

bool canonical_less(const TautMonomial& a, const TautMonomial& b, const ModelParams& params) {
  const int ca = monomial_codim(a, params);
  const int cb = monomial_codim(b, params);
  if (ca != cb) return ca < cb;
  return a.to_string() < b.to_string();
}

std::vector<TautMonomial> enumerate_basis(const ModelParams& params, int m, int codim) {
  if (m < 1) throw StructuralError("enumerate_basis needs m >= 1");
  std::vector<TautMonomial> out;
  if (codim < 0 || codim > m * params.n()) return out;
  TautMonomial cur(m);
  enumerate_from(0, codim, m, cur, params, out);
  std::vector<std::pair<std::string, TautMonomial>> keyed;
  keyed.reserve(out.size());
  for (auto& mono : out) keyed.emplace_back(mono.to_string(), std::move(mono));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  out.clear();
  for (auto& [key, mono] : keyed) out.push_back(std::move(mono));
  return out;
}

TautClass unit_class(int m) { return TautClass::of(TautMonomial(m)); }

TautClass h_class(const ModelParams& params, int m, int i, int exponent) {
  if (exponent < 0) throw StructuralError("negative h exponent");
  TautMonomial mono(m);
  if (exponent > params.n()) {
    mono.partner(i);  // index check
    return TautClass(m);
  }
  if (exponent == params.n()) return TautClass::of(mono.set_local(i, LocalClass::point()), Rational(params.d()));
  return TautClass::of(mono.set_local(i, LocalClass::h_power(exponent)));
}

TautClass point_class(int m, int i) { return TautClass::of(TautMonomial(m).set_local(i, LocalClass::point())); }

TautClass tau_class(int m, int i, int j) { return TautClass::of(TautMonomial(m).add_pair(i, j)); }

namespace {

class ClassParser {
 public:
  ClassParser(std::string_view text, int m, const ModelParams& params, ParseOptions options)
      : text_(text), m_(m), params_(params), options_(options) {}

  TautClass parse() {
    TautClass result(m_);
    skip_ws();
    if (at_end()) fail("empty class");
    Rational sign(1);
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? Rational(-1) : Rational(1);
      ++pos_;
    }
    while (true) {
      skip_ws();
      TautClass term = parse_term();
      term *= sign;
      result += term;
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      sign = peek() == '-' ? Rational(-1) : Rational(1);
      ++pos_;
    }
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  mpz_class parse_digits() {
    skip_ws();
    const std::size_t begin = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (begin == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(begin, pos_ - begin)), 10);
  }

  int parse_small(int lo, int hi, const char* what) {
    const std::size_t begin = pos_;
    const mpz_class v = parse_digits();
    if (v < lo || v > hi) {
      pos_ = begin;
      fail(std::string(what) + " " + v.get_str() + " out of range " + std::to_string(lo) + ".." +
           std::to_string(hi));
    }
    return static_cast<int>(v.get_si());
  }

  static void require_unit_local(const TautMonomial& mono, int i) {
    if (!mono.local(i).is_unit()) throw StructuralError("factor " + std::to_string(i + 1) + " already has a local class");
  }

  int parse_factor_index() { return parse_small(1, m_, "factor index") - 1; }

  TautClass parse_term() {
    Rational coefficient(1);
    TautClass normalized = unit_class(m_);
    TautMonomial strict(m_);
    while (true) {
      skip_ws();
      const std::size_t atom_start = pos_;
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        const mpz_class num = parse_digits();
        mpz_class den = 1;
        skip_ws();
        if (peek() == '/') {
          ++pos_;
          const std::size_t at = pos_;
          den = parse_digits();
          if (den == 0) {
            pos_ = at;
            fail("zero denominator");
          }
        }
        coefficient *= Rational(num, den);
      } else if (c == 't') {
        ++pos_;
        expect('(');
        const int i = parse_factor_index();
        expect(',');
        const int j = parse_factor_index();
        expect(')');
        if (i == j) {
          pos_ = atom_start;
          fail("τ needs two distinct factors");
        }
        apply(normalized, strict, tau_class(m_, i, j), atom_start,
              [&](TautMonomial& mono) { mono.add_pair(i, j); });
      } else if (c == 'h') {
        ++pos_;
        const int i = parse_factor_index();
        int exponent = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          exponent = parse_small(0, 1 << 20, "exponent");
        }
        if (!options_.normalize && exponent >= params_.n()) {
          pos_ = atom_start;
          fail("h exponent " + std::to_string(exponent) + " is not below n = " + std::to_string(params_.n()));
        }
        apply(normalized, strict, h_class(params_, m_, i, exponent), atom_start,
              [&](TautMonomial& mono) {
                if (exponent == 0) return;
                require_unit_local(mono, i);
                mono.set_local(i, LocalClass::h_power(exponent));
              });
      } else if (c == 'o') {
        ++pos_;
        const int i = parse_factor_index();
        apply(normalized, strict, point_class(m_, i), atom_start,
              [&](TautMonomial& mono) {
                require_unit_local(mono, i);
                mono.set_local(i, LocalClass::point());
              });
      } else {
        fail("expected a coefficient, t(i,j), hK or oK");
      }
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    if (options_.normalize) return coefficient * normalized;
    return TautClass::of(strict, coefficient);
  }

  template <typename StrictStep>
  void apply(TautClass& normalized, TautMonomial& strict, const TautClass& generator, std::size_t atom_start,
             StrictStep step) {
    if (options_.normalize) {
      normalized = multiply(normalized, generator, params_);
      return;
    }
    try {
      step(strict);
    } catch (const StructuralError& e) {
      pos_ = atom_start;
      fail(std::string("not in normal form: ") + e.what());
    }
  }

  std::string_view text_;
  int m_;
  const ModelParams& params_;
  ParseOptions options_;
  std::size_t pos_ = 0;
};

}  // namespace

TautClass parse_class(std::string_view text, int m, const ModelParams& params, ParseOptions options) {
  if (m < 1) throw StructuralError("parse_class needs m >= 1");
  return ClassParser(text, m, params, options).parse();
}

std::string format_class(const TautClass& x, const ModelParams& params) {
  if (x.is_zero()) return "0";
  struct Entry {
    int codim;
    std::string text;
    const Rational* coefficient;
  };
  std::vector<Entry> entries;
  entries.reserve(x.size());
  for (const auto& [mono, c] : x.terms()) entries.push_back({monomial_codim(mono, params), mono.to_string(), &c});
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.codim != b.codim ? a.codim < b.codim : a.text < b.text; });

  std::string out;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const Rational& c = *entries[k].coefficient;
    const bool negative = c.sign() < 0;
    if (k == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = negative ? -c : c;
    if (entries[k].text == "1") {
      out += magnitude.to_string();
    } else if (magnitude.is_one()) {
      out += entries[k].text;
    } else {
      out += magnitude.to_string() + "*" + entries[k].text;
    }
  }
  return out;
}

}  // namespace tautring
