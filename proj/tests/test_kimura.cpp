#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "tautring/errors.hpp"
#include "tautring/kimura.hpp"

using namespace tautring;

namespace {

// δ(δ-1)...(δ-b+1)
Rational falling_factorial(int b, const Rational& delta) {
  Rational out(1);
  for (int k = 0; k < b; ++k) out *= delta - Rational(k);
  return out;
}

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

TautClass matching_monomial(int b, const std::vector<int>& rho) {
  TautMonomial mono(2 * b);
  for (int i = 0; i < b; ++i) mono.add_pair(i, b + rho[i]);
  return TautClass::of(mono);
}

}  // namespace

TEST_CASE("kimura element") {
  const ModelParams p2(2, 8, 2);
  const KimuraElement k2 = kimura_element(p2);
  CHECK(k2.b == 2);
  CHECK(format_class(k2.cls, p2) == "t(1,3)*t(2,4) - t(1,4)*t(2,3)");

  const ModelParams p3(2, 8, 3);
  const KimuraElement k3 = kimura_element(p3);
  CHECK(k3.cls.factors() == 6);
  CHECK(k3.cls.size() == 6);
  CHECK(homogeneous_codim(k3.cls, p3) == 3 * 2);
  for (const auto& [mono, c] : k3.cls.terms()) CHECK((c == Rational(1) || c == Rational(-1)));

  KimuraLimits small;
  small.max_b = 2;
  CHECK_THROWS_AS(kimura_element(p3, small), ResourceLimitError);
}

TEST_CASE("kimura element changes sign under a transposition of factors") {
  for (int b = 2; b <= 4; ++b) {
    const ModelParams p(2, 8, b);
    const TautClass k = kimura_element(p).cls;
    std::vector<int> swap01(2 * b);
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    CHECK(pullback(k, 2 * b, swap01) == Rational(-1) * k);
  }
}

TEST_CASE("falling factorial pairing on named cases") {
  CHECK(falling_factorial_pairing(2, Rational(1)) == Rational(0));
  CHECK(falling_factorial_pairing(3, Rational(2)) == Rational(0));
  CHECK(falling_factorial_pairing(3, Rational(3)) == Rational(6));
  CHECK(falling_factorial_pairing(1, Rational(5)) == Rational(5));
  CHECK_THROWS_AS(falling_factorial_pairing(8, Rational(1)), ResourceLimitError);
}

TEST_CASE("property: falling factorial pairing equals the closed form") {
  for (int b = 1; b <= 6; ++b) {
    for (const Rational& delta : {Rational(0), Rational(1), Rational(2), Rational(3), Rational(7, 2), Rational(-1, 3)}) {
      CHECK(falling_factorial_pairing(b, delta) == falling_factorial(b, delta));
    }
    CHECK(falling_factorial_pairing(b, Rational(b - 1)) == Rational(0));
  }
}

TEST_CASE("property: every matching monomial pairs to sign times the falling factorial") {
  for (int b = 2; b <= 4; ++b) {
    for (const Rational& delta : {Rational(b - 1), Rational(b), Rational(5, 2)}) {
      const ModelParams p(2, 8, b, delta);
      const TautClass k = kimura_element(p).cls;
      std::vector<int> rho(b);
      std::iota(rho.begin(), rho.end(), 0);
      do {
        CHECK(pair(k, matching_monomial(b, rho), p) ==
              Rational(permutation_sign(rho)) * falling_factorial(b, delta));
      } while (std::next_permutation(rho.begin(), rho.end()));
    }
  }
}

TEST_CASE("verify_kimura_vanishing") {
  {
    const KimuraReport r = verify_kimura_vanishing(ModelParams(2, 8, 2));
    CHECK(r.vanishing);
    CHECK(r.cross_check);
    CHECK(r.falling_factorial == Rational(0));
    CHECK(r.dual_monomials == enumerate_basis(ModelParams(2, 8, 2), 4, 4).size());
  }
  {
    const KimuraReport r = verify_kimura_vanishing(ModelParams(2, 8, 2, Rational(2)));
    CHECK_FALSE(r.vanishing);
    CHECK(r.cross_check);
    CHECK(r.falling_factorial == Rational(2));
  }
  {
    const KimuraReport r = verify_kimura_vanishing(ModelParams(2, 8, 3));
    CHECK(r.vanishing);
    CHECK(r.cross_check);
  }
}

TEST_CASE("scan_injectivity below and at the threshold") {
  {
    const ScanResult scan = scan_injectivity(ModelParams(2, 8, 2), 3);
    CHECK_FALSE(scan.truncated);
    CHECK(scan.rows.size() == 3 + 5 + 7);
    for (const auto& row : scan.rows) CHECK(row.deficiency == 0);
  }
  {
    const ScanResult scan = scan_injectivity(ModelParams(2, 8, 2), 4);
    const ScanRow* first = nullptr;
    for (const auto& row : scan.rows) {
      if (row.deficiency > 0) {
        first = &row;
        break;
      }
    }
    REQUIRE(first != nullptr);
    CHECK(first->m == 4);
    CHECK(first->codim == 4);
    for (const auto& row : scan.rows) {
      CHECK(row.rank + row.deficiency == row.basis_size);
    }
  }
}

TEST_CASE("scan_injectivity returns a partial table at the resource cap") {
  GramOptions tight;
  tight.max_dimension = 10;
  const ScanResult scan = scan_injectivity(ModelParams(2, 8, 3), 4, tight);
  CHECK(scan.truncated);
  CHECK_FALSE(scan.limit_message.empty());
  CHECK_FALSE(scan.rows.empty());
  CHECK(scan.rows.back().m <= 4);
}
