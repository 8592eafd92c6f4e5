// Laurent polynomials and rational functions.
#include <random>

#include "doctest.h"
#include "ht/laurent.h"

using namespace ht;

namespace {

const LaurentPoly v = LaurentPoly::v(1);
const LaurentPoly vi = LaurentPoly::v(-1);

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 5), lo(-4, 4), co(-3, 3);
  std::vector<Integer> c(len(rng));
  for (auto& a : c) a = co(rng);
  return LaurentPoly::from_coeffs(lo(rng), c);
}

// Long division oracle: coefficients of num/den at v = 0 where num and den are
// given coefficient-wise (index = exponent, den[0] != 0), computed term by
// term without any normalization.
std::vector<Rational> long_division(std::vector<Rational> num, const std::vector<Rational>& den, int terms) {
  std::vector<Rational> out;
  num.resize(terms + den.size(), 0);
  for (int i = 0; i < terms; ++i) {
    Rational q = num[i] / den[0];
    out.push_back(q);
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q * den[j];
  }
  return out;
}

}  // namespace

TEST_CASE("lp_mul examples") {
  CHECK(lp_mul(v + vi, v - vi) == LaurentPoly::v(2) - LaurentPoly::v(-2));
  LaurentPoly p = LaurentPoly::parse("3*v^2-v^-1+7");
  CHECK(lp_mul(p, 1) == p);
  CHECK((vi + v) * (vi + v) == LaurentPoly::parse("v^-2+2+v^2"));
}

TEST_CASE("lp_bar examples") {
  CHECK(lp_bar(LaurentPoly::parse("3*v^2-v^-1")) == LaurentPoly::parse("3*v^-2-v"));
  CHECK(lp_bar(5) == LaurentPoly(5));
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto a = random_poly(rng);
    CHECK(a.bar().bar() == a);
  }
}

TEST_CASE("canonical text form and parsing") {
  LaurentPoly p = LaurentPoly::from_terms({{-2, -1}, {0, 3}, {3, 2}});
  CHECK(p.str() == "-v^-2+3+2*v^3");
  CHECK(LaurentPoly::parse(p.str()) == p);
  CHECK((v + vi).str() == "v^-1+v");
  CHECK(LaurentPoly().str() == "0");
  CHECK(LaurentPoly::parse("1+q", "q").str("q") == "1+q");
}

TEST_CASE("no stored zero at either end") {
  LaurentPoly a = v + vi;
  a -= v;
  CHECK(a.low() == -1);
  CHECK(a.high() == -1);
  a -= vi;
  CHECK(a.is_zero());
  CHECK(a.coeffs().empty());
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK(a - a == LaurentPoly());
  }
}

TEST_CASE("series_coeff examples against long division") {
  RationalFunction f(-v, 1 + LaurentPoly::v(2));
  CHECK(series_coeff(f, 1) == -1);
  CHECK(series_coeff(f, 3) == 1);
  auto oracle = long_division({0, -1}, {1, 0, 1}, 8);
  for (int k = 1; k < 8; ++k) CHECK(f.series_coeff(k) == oracle[k]);
  CHECK(series_coeff(RationalFunction(1), 0) == 1);
  // (v + v^-1)^-1 = v / (1 + v^2)
  RationalFunction g = RationalFunction(1) / RationalFunction(v + vi);
  CHECK(series_coeff(g, 1) == 1);
  CHECK(series_coeff(g, 2) == 0);
  auto og = long_division({0, 1}, {1, 0, 1}, 10);
  for (int k = 1; k < 10; ++k) CHECK(g.series_coeff(k) == og[k]);
}

TEST_CASE("series_coeff below the valuation reports it") {
  RationalFunction f(-v, 1 + LaurentPoly::v(2));
  try {
    (void)f.series_coeff(0);
    FAIL("expected BelowValuation");
  } catch (const BelowValuation& e) {
    CHECK(e.valuation() == 1);
    CHECK(e.requested() == 0);
  }
  RationalFunction h(LaurentPoly::v(-3), 2 + v);
  CHECK(h.valuation() == -3);
  CHECK(h.series_coeff(-3) == Rational(1, 2));
  CHECK_THROWS_AS((void)h.series_coeff(-4), BelowValuation);
}

TEST_CASE("reduce is canonical and idempotent") {
  RationalFunction a(LaurentPoly::parse("2+2*v"), LaurentPoly::parse("4+4*v^2"));
  RationalFunction b(LaurentPoly::parse("-1-v"), LaurentPoly::parse("-2-2*v^2"));
  CHECK(a == b);
  CHECK(a.den().coeff(0) > 0);
  CHECK(RationalFunction(a.num(), a.den()) == a);
  RationalFunction c(LaurentPoly::parse("1-v^2"), LaurentPoly::parse("1+v"));
  CHECK(c.is_laurent());
  CHECK(c.as_laurent() == 1 - v);
  CHECK(RationalFunction(LaurentPoly::v(2), LaurentPoly::v(5)) == RationalFunction(LaurentPoly::v(-3)));
}

TEST_CASE("series of a product is the convolution of series") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> co(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    LaurentPoly n1 = LaurentPoly::from_coeffs(0, {Integer(co(rng)), Integer(co(rng)), 1});
    LaurentPoly d1 = LaurentPoly::from_coeffs(0, {1, Integer(co(rng)), Integer(co(rng))});
    LaurentPoly n2 = LaurentPoly::from_coeffs(0, {1, Integer(co(rng))});
    LaurentPoly d2 = LaurentPoly::from_coeffs(0, {Integer(1 + (trial % 3)), Integer(co(rng))});
    RationalFunction f(n1, d1), g(n2, d2);
    auto sf = f.series(0, 20), sg = g.series(0, 20), sfg = (f * g).series(0, 20);
    for (int k = 0; k <= 20; ++k) {
      Rational conv = 0;
      for (int i = 0; i <= k; ++i) conv += sf[i] * sg[k - i];
      CHECK(sfg[k] == conv);
    }
  }
}

TEST_CASE("field operations") {
  RationalFunction f(1 + v, 1 - v), g(v, 1 + LaurentPoly::v(2));
  CHECK((f / g) * g == f);
  CHECK(f - f == RationalFunction());
  CHECK((f + g) - g == f);
  CHECK(f.bar().bar() == f);
  CHECK(to_string(Rational(1, 2)) == "1/2");
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
}
