#include <doctest.h>

#include <set>

#include "explicit_cohomology.hpp"
#include "random_classes.hpp"
#include "tautring/errors.hpp"

using namespace tautring;
using testing_support::random_class;
using testing_support::random_monomial;
using testing_support::random_word;

namespace {

TautClass parse(const std::string& text, int m, const ModelParams& p) { return parse_class(text, m, p); }

// Brute-force basis oracle: every assignment of each factor to a local degree
// 0..n or to a partner, filtered for symmetric matchings.
std::set<std::string> brute_force_basis(const ModelParams& params, int m, int codim) {
  const int n = params.n();
  const int choices = (n + 1) + m;
  std::set<std::string> out;
  std::vector<int> pick(m, 0);
  while (true) {
    bool ok = true;
    int total = 0;
    for (int i = 0; i < m && ok; ++i) {
      if (pick[i] <= n) {
        total += pick[i];
      } else {
        const int j = pick[i] - n - 1;
        ok = j != i && pick[j] == n + 1 + i;
        if (ok && i < j) total += n;
      }
    }
    if (ok && total == codim) {
      TautMonomial mono(m);
      for (int i = 0; i < m; ++i) {
        if (pick[i] > n) {
          const int j = pick[i] - n - 1;
          if (i < j) mono.add_pair(i, j);
        }
      }
      for (int i = 0; i < m; ++i) {
        if (pick[i] <= n) mono.set_local(i, pick[i] == n ? LocalClass::point() : LocalClass::h_power(pick[i]));
      }
      out.insert(mono.to_string());
    }
    int k = 0;
    while (k < m && ++pick[k] == choices) pick[k++] = 0;
    if (k == m) break;
  }
  return out;
}

}  // namespace

TEST_CASE("model parameters") {
  const ModelParams p(2, 8, 22);
  CHECK(p.delta() == Rational(21));
  CHECK_FALSE(p.delta_overridden());
  CHECK(p.with_delta(Rational(2)).delta_overridden());
  CHECK_THROWS_AS(ModelParams(3, 8, 2), StructuralError);
  CHECK_THROWS_AS(ModelParams(0, 8, 2), StructuralError);
  CHECK_THROWS_AS(ModelParams(2, 0, 2), StructuralError);
  CHECK_THROWS_AS(ModelParams(2, 8, 0), StructuralError);
}

TEST_CASE("monomial_codim") {
  const ModelParams n4(4, 8, 5);
  CHECK(monomial_codim(TautMonomial(3), n4) == 0);
  CHECK(monomial_codim(TautMonomial(2).add_pair(0, 1), n4) == 4);
  TautMonomial h2o(3);
  h2o.set_local(0, LocalClass::h_power(2)).set_local(2, LocalClass::point());
  CHECK(monomial_codim(h2o, n4) == 6);
  CHECK_THROWS_AS(TautMonomial(3).set_local(3, LocalClass::point()), StructuralError);
  CHECK_THROWS_AS(TautMonomial(3).add_pair(0, 3), StructuralError);
  TautMonomial too_high(1);
  too_high.set_local(0, LocalClass::h_power(2));
  CHECK_THROWS_AS(monomial_codim(too_high, ModelParams(2, 8, 3)), StructuralError);
}

TEST_CASE("matched factors cannot carry local classes") {
  TautMonomial mono(3);
  mono.add_pair(0, 1);
  CHECK_THROWS_AS(mono.set_local(0, LocalClass::point()), StructuralError);
  CHECK_THROWS_AS(mono.add_pair(1, 2), StructuralError);
  mono.set_local(2, LocalClass::h_power(1));
  CHECK_THROWS_AS(TautMonomial(mono).add_pair(2, 0), StructuralError);
}

TEST_CASE("multiply: the defining relations") {
  const ModelParams p(2, 8, 3);
  CHECK(multiply(parse("h1", 1, p), parse("o1", 1, p), p).is_zero());
  CHECK(multiply(parse("o1", 1, p), parse("o1", 1, p), p).is_zero());
  CHECK(multiply(parse("t(1,2)", 2, p), parse("t(1,2)", 2, p), p) == parse("2*o1*o2", 2, p));
  CHECK(format_class(multiply(parse("t(1,2)", 3, p), parse("t(1,3)", 3, p), p), p) == "t(2,3)*o1");
  CHECK(format_class(multiply(parse("h1", 1, p), parse("h1", 1, p), p), p) == "8*o1");
  CHECK(multiply(parse("t(1,2)", 2, p), parse("h1", 2, p), p).is_zero());
  CHECK(multiply(parse("t(1,2)", 2, p), parse("o2", 2, p), p).is_zero());
  CHECK(multiply(parse("h1", 1, p), parse("h1*8", 1, p), p) == parse("64*o1", 1, p));
  CHECK_THROWS_AS(multiply(unit_class(2), unit_class(3), p), StructuralError);

  const ModelParams n4(4, 8, 5);
  CHECK(format_class(multiply(parse("h1^3", 1, n4), parse("h1", 1, n4), n4), n4) == "8*o1");
  CHECK(multiply(parse("h1^3", 1, n4), parse("h1^2", 1, n4), n4).is_zero());
}

TEST_CASE("triple τ closes to delta times the point class") {
  for (int b : {2, 3, 22}) {
    const ModelParams p(2, 8, b);
    const TautClass t12 = tau_class(3, 0, 1), t13 = tau_class(3, 0, 2), t23 = tau_class(3, 1, 2);
    const TautClass expected = p.delta() * parse("o1*o2*o3", 3, p);
    CHECK(multiply(multiply(t12, t13, p), t23, p) == expected);
    CHECK(multiply(t12, multiply(t13, t23, p), p) == expected);
    CHECK(multiply(multiply(t23, t12, p), t13, p) == expected);
  }
}

TEST_CASE("enumerate_basis") {
  const ModelParams p(2, 8, 3);
  const auto one = enumerate_basis(p, 1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].to_string() == "h1");
  CHECK(enumerate_basis(p, 1, 3).empty());
  CHECK(enumerate_basis(p, 2, -1).empty());

  std::vector<std::string> two;
  for (const auto& mono : enumerate_basis(p, 2, 2)) two.push_back(mono.to_string());
  CHECK(two == std::vector<std::string>{"h1*h2", "o1", "o2", "t(1,2)"});
}

TEST_CASE("enumerate_basis agrees with brute-force enumeration") {
  for (int n : {2, 4}) {
    const ModelParams p(n, 8, 3);
    for (int m = 1; m <= 4; ++m) {
      for (int codim = 0; codim <= m * n; ++codim) {
        const auto basis = enumerate_basis(p, m, codim);
        std::set<std::string> got;
        for (const auto& mono : basis) {
          got.insert(mono.to_string());
          CHECK(monomial_codim(mono, p) == codim);
        }
        CHECK(got.size() == basis.size());
        CHECK(got == brute_force_basis(p, m, codim));
        for (std::size_t k = 1; k < basis.size(); ++k) CHECK(canonical_less(basis[k - 1], basis[k], p));
      }
    }
  }
}

TEST_CASE("parse_class and format_class") {
  const ModelParams p(2, 8, 3);
  const TautClass x = parse("t(1,2)*o3", 3, p);
  REQUIRE(x.size() == 1);
  const TautMonomial& mono = x.terms().begin()->first;
  CHECK(mono.partner(0) == 1);
  CHECK(mono.local(2).is_point());

  CHECK(format_class(parse("h1^2", 1, p), p) == "8*o1");
  CHECK_THROWS_AS(parse_class("h1^2", 1, p, ParseOptions{false}), ParseError);
  CHECK_THROWS_AS(parse_class("h1*h1", 1, p, ParseOptions{false}), ParseError);
  CHECK_THROWS_AS(parse_class("t(1,2)*h1", 2, p, ParseOptions{false}), ParseError);
  CHECK(parse_class("t(2,1)*h3", 3, p, ParseOptions{false}) == parse("h3*t(1,2)", 3, p));
  CHECK(parse("1", 2, p) == unit_class(2));
  CHECK(format_class(parse("1", 2, p), p) == "1");
  CHECK(format_class(parse("0", 2, p), p) == "0");
  CHECK(format_class(parse("h2 - 1/2*h1 + 3", 2, p), p) == "3 - 1/2*h1 + h2");
  CHECK(format_class(parse("-t(1,2) + 2*o1*o2", 2, p), p) == "-t(1,2) + 2*o1*o2");
  CHECK(format_class(parse("h1 - h1", 2, p), p) == "0");
  CHECK(format_class(parse("2/4 * h1 * 3", 1, p), p) == "3/2*h1");

  try {
    parse("h1 + h4", 3, p);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(parse("", 2, p), ParseError);
  CHECK_THROWS_AS(parse("h1 +", 2, p), ParseError);
  CHECK_THROWS_AS(parse("t(1,1)", 2, p), ParseError);
  CHECK_THROWS_AS(parse("x1", 2, p), ParseError);
  CHECK_THROWS_AS(parse("h1 h2", 2, p), ParseError);
  CHECK_THROWS_AS(parse("1/0*h1", 2, p), ParseError);
  CHECK_THROWS_AS(parse("t(1,2", 2, p), ParseError);
}

TEST_CASE("property: format/parse round trip in both parse modes") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = trial % 2 ? 2 : 4;
    const ModelParams p(n, 8, 3);
    const int m = 1 + trial % 5;
    const TautClass x = random_class(rng, m, n);
    const std::string text = format_class(x, p);
    CHECK(parse_class(text, m, p) == x);
    CHECK(parse_class(text, m, p, ParseOptions{false}) == x);
  }
}

TEST_CASE("property: commutative, associative, unital, graded") {
  std::mt19937 rng(1234);
  int nonzero_products = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const int n = trial % 2 ? 2 : 4;
    const int b = std::array<int, 3>{2, 3, 22}[trial % 3];
    const ModelParams p(n, 8, b);
    const int m = 1 + trial % 4;
    const TautClass x = TautClass::of(random_monomial(rng, m, n));
    const TautClass y = TautClass::of(random_monomial(rng, m, n));
    const TautClass z = TautClass::of(random_monomial(rng, m, n));
    const TautClass xy = multiply(x, y, p);
    CHECK(xy == multiply(y, x, p));
    CHECK(multiply(xy, z, p) == multiply(x, multiply(y, z, p), p));
    CHECK(multiply(unit_class(m), x, p) == x);
    if (!xy.is_zero()) {
      ++nonzero_products;
      CHECK(homogeneous_codim(xy, p) == *homogeneous_codim(x, p) + *homogeneous_codim(y, p));
    }
    // Re-normalizing a normal form is the identity.
    CHECK(parse_class(format_class(xy, p), m, p) == xy);
  }
  CHECK(nonzero_products > 100);
}

TEST_CASE("oracle: products agree with the explicit cohomology model") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = trial % 2 ? 2 : 4;
    const int delta = 1 + trial % 3;
    const ModelParams p(n, 8, delta + 1);
    const oracle::ExplicitModel model(n, 8, delta);
    const int m = 1 + trial % 4;
    const TautClass x = random_word(rng, m, p);
    const TautClass y = random_word(rng, m, p);
    CHECK(model.from_class(multiply(x, y, p)) == model.mul(model.from_class(x), model.from_class(y)));
  }
}

TEST_CASE("oracle: generator words reduce as in the explicit model") {
  std::mt19937 rng(5);
  const ModelParams p(2, 8, 3);
  const oracle::ExplicitModel model(2, 8, 2);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 2 + trial % 3;
    std::uniform_int_distribution<int> factor(0, m - 1);
    TautClass x = unit_class(m);
    auto t = model.unit(m);
    for (int k = 0; k < 5; ++k) {
      const int i = factor(rng);
      int j = factor(rng);
      while (j == i) j = factor(rng);
      x = multiply(x, tau_class(m, i, j), p);
      t = model.mul(t, model.tau(m, i, j));
    }
    CHECK(model.from_class(x) == t);
  }
}
