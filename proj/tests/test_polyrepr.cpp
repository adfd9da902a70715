#include <doctest.h>

#include <random>

#include "braidkit/burau.hpp"
#include "braidkit/error.hpp"
#include "braidkit/laurent.hpp"
#include "support.hpp"

using namespace braidkit;
using testsupport::random_word;

namespace {

LaurentPoly L(long lowest, std::vector<long> c) { return LaurentPoly::from_ints(lowest, c); }

// Shift to lowest degree 0 with a positive leading coefficient.
LaurentPoly normalize_unit(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly q = shift(p, -p.lowest());
  if (sgn(q.coeffs().back()) < 0) q = -q;
  return q;
}

// Gaussian elimination over the rationals.
Rational rational_det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

}  // namespace

TEST_CASE("Laurent arithmetic") {
  const LaurentPoly one_minus_t = L(0, {1, -1});
  CHECK(one_minus_t * L(0, {1, 1}) == L(0, {1, 0, -1}));
  CHECK(exact_div(L(0, {1, 0, 0, -1}), one_minus_t) == L(0, {1, 1, 1}));
  CHECK_THROWS_AS(exact_div(L(0, {1, 0, 1}), one_minus_t), Error);
  CHECK(eval_at(L(0, {1, -1, 1}), Rational(-1)) == 3);
  CHECK(eval_at(L(-2, {-1, 3, -1}), 2.0) == doctest::Approx(-0.25 + 1.5 - 1));
  CHECK((one_minus_t - one_minus_t).is_zero());
  CHECK(L(-1, {0, 0, 2, 0}) == LaurentPoly::monomial(2, 1));
  CHECK(shift(one_minus_t, -3).lowest() == -3);
  CHECK(to_string(L(0, {1, -1, 1})) == "+ z^(+2) - z^(+1) + 1");
  CHECK(to_string(L(-2, {-1, 3, -1})) == "- 1 + 3*z^(-1) - z^(-2)");
  CHECK(to_string(LaurentPoly{}) == "0");

  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    auto rnd = [&] {
      std::vector<long> c(1 + rng() % 5);
      for (auto& x : c) x = d(rng);
      return L(d(rng), c);
    };
    const LaurentPoly p = rnd(), q = rnd(), r = rnd();
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    if (!q.is_zero()) CHECK(exact_div(p * q, q) == p);
    CHECK(eval_at(p * q, Rational(3, 2)) == eval_at(p, Rational(3, 2)) * eval_at(q, Rational(3, 2)));
  }
}

TEST_CASE("Burau fixtures") {
  const Braid b({1, -2});
  const RationalMatrix at = burau_at(b, Rational(-1));
  CHECK(at.dim == 2);
  CHECK(at.entries == std::vector<Rational>{1, -1, -1, 2});
  const LaurentMatrix s = burau(b);
  CHECK(s(0, 0) == L(1, {-1}));
  CHECK(s(0, 1) == L(1, {1}));
  CHECK(s(1, 0) == L(0, {-1}));
  CHECK(s(1, 1) == L(-1, {-1, 1}));
  CHECK(burau(Braid::identity(4)) == LaurentMatrix::identity(3));
  CHECK(evaluate(s, Rational(-1)) == at);
}

TEST_CASE("Burau is multiplicative with determinant (-t)^writhe") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Braid a(random_word(rng, n, rng() % 7), n);
    const Braid b(random_word(rng, n, rng() % 7), n);
    CHECK(burau(a * b) == burau(a) * burau(b));
    const long w = writhe(a);
    const LaurentPoly expect = LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, w);
    CHECK(determinant(burau(a)) == expect);
    CHECK(burau(a) * burau(inverse(a)) == LaurentMatrix::identity(static_cast<std::size_t>(n - 1)));
  }
}

TEST_CASE("Alexander fixtures") {
  CHECK(alexander(Braid({1, 1, 1})) == L(0, {1, -1, 1}));
  CHECK(alexander(Braid({1, -2, 1, -2})) == L(-2, {-1, 3, -1}));
  CHECK(alexander(Braid({1, -2, 1, -2}), true) == L(-1, {-1, 3, -1}));
  CHECK(alexander(Braid({1, 1})) == L(0, {1, -1}));
  try {
    alexander(Braid({1, 1}), true);
    FAIL("expected an error");
  } catch (const FractionalPowerError& e) {
    CHECK(std::string(e.what()) ==
          "Polynomial with fractional powers.  Remove the centering option.");
  }
}

TEST_CASE("Alexander polynomials of standard closures") {
  struct Case {
    std::vector<int> w;
    int n;
    LaurentPoly known;
  };
  const std::vector<Case> cases{
      {{1, 1, 1, 1, 1}, 2, L(0, {1, -1, 1, -1, 1})},                       // 5_1
      {{1, 2}, 3, L(0, {1})},                                              // unknot
      {{1, 2, 1, 2, 1, 2, 1, 2}, 3, L(0, {1, -1, 0, 1, 0, -1, 1})},        // T(3,4)
      {{1, 1, 1, 2, -1, 2}, 3, L(0, {2, -3, 2})},                          // 5_2
      {{1, 2, 3}, 4, L(0, {1})},
      {{1}, 3, L(0, {})},                                                  // split link
  };
  for (const auto& c : cases)
    CHECK(normalize_unit(alexander(Braid(c.w, c.n))) == normalize_unit(c.known));
}

TEST_CASE("Alexander agrees with a rational evaluation") {
  // det(I - B(t)) (1 - t) / (1 - t^n) computed independently at sample t.
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Braid b(random_word(rng, n, 1 + rng() % 8), n);
    const LaurentPoly p = alexander(b);
    for (const Rational& t : {Rational(2), Rational(1, 3), Rational(-3, 2)}) {
      const RationalMatrix m = burau_at(b, t);
      std::vector<std::vector<Rational>> a(m.dim, std::vector<Rational>(m.dim));
      for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j) a[i][j] = (i == j ? 1 : 0) - m(i, j);
      Rational tn = 1;
      for (int k = 0; k < n; ++k) tn *= t;
      CHECK(eval_at(p, t) == rational_det(a) * (1 - t) / (1 - tn));
    }
  }
}

TEST_CASE("Alexander invariances") {
  CHECK(eval_at(alexander(Braid({1, 1, 1})), Rational(1)) == 1);
  CHECK(eval_at(alexander(Braid({1, -2, 1, -2})), Rational(1)) == 1);
  CHECK(eval_at(alexander(Braid({1, 1})), Rational(1)) == 0);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Braid b(random_word(rng, n, 1 + rng() % 8), n);
    const Braid c(random_word(rng, n, 1 + rng() % 4), n);
    CHECK(alexander(c * b * inverse(c)) == alexander(b));
    try {
      const LaurentPoly p = alexander(b, true);
      if (p.is_zero()) continue;
      const auto& k = p.coeffs();
      CHECK(p.lowest() == -p.highest());
      const bool sym = std::equal(k.begin(), k.end(), k.rbegin());
      bool anti = true;
      for (std::size_t i = 0; i < k.size(); ++i) anti = anti && k[i] == -k[k.size() - 1 - i];
      CHECK((sym || anti));
    } catch (const FractionalPowerError&) {
      const LaurentPoly p = alexander(b);
      CHECK((p.lowest() + p.highest()) % 2 != 0);
    }
  }
}
