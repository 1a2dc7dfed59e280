#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "lll/polynomial.hpp"
#include "lll/rational.hpp"

using lll::Integer;
using lll::IntPolynomial;
using lll::Rational;
using lll::RationalFunction;

namespace {

IntPolynomial poly(std::vector<long> ascending) {
  std::vector<Integer> coeffs(ascending.begin(), ascending.end());
  return IntPolynomial(std::move(coeffs));
}

Rational rq(const std::string& s) { return lll::parse_rational(s); }

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(rq("1/8") == lll::make_rational(1, 8));
  CHECK(rq("0.125") == lll::make_rational(1, 8));
  CHECK(rq("25088/77841") == lll::make_rational(25088, 77841));
  CHECK(rq("-3") == lll::make_rational(-3));
  CHECK(rq("-0.5") == lll::make_rational(-1, 2));
  CHECK(rq("2/4") == lll::make_rational(1, 2));
  CHECK(rq("102/800") == lll::make_rational(51, 400));
  CHECK(rq(".5") == lll::make_rational(1, 2));
  CHECK(rq("7.") == lll::make_rational(7));

  CHECK_THROWS_AS(rq(""), std::invalid_argument);
  CHECK_THROWS_AS(rq("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rq("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(rq("a"), std::invalid_argument);
  CHECK_THROWS_AS(rq("1e-6"), std::invalid_argument);
  CHECK_THROWS_AS(rq("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(rq("1 /2"), std::invalid_argument);
}

TEST_CASE("rational canonical form") {
  Rational q = rq("-6/4");
  CHECK(q.get_den() == 2);
  CHECK(q.get_num() == -3);
  Integer g;
  mpz_gcd(g.get_mpz_t(), Integer(abs(q.get_num())).get_mpz_t(),
          Integer(q.get_den()).get_mpz_t());
  CHECK(g == 1);
  CHECK(lll::to_fraction_string(q) == "-3/2");
  CHECK(lll::to_fraction_string(rq("4/2")) == "2");
}

TEST_CASE("rational arithmetic matches cross-multiplied comparison") {
  std::mt19937_64 rng(20240501);
  auto rand_rat = [&] {
    long num = static_cast<long>(rng() % 41) - 20;
    long den = 1 + static_cast<long>(rng() % 20);
    return lll::make_rational(num, den);
  };
  for (int trial = 0; trial < 500; ++trial) {
    Rational a = rand_rat(), b = rand_rat(), c = rand_rat();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    bool lt = a < b;
    Integer lhs = a.get_num() * b.get_den();
    Integer rhs = b.get_num() * a.get_den();
    CHECK(lt == (lhs < rhs));
  }
}

TEST_CASE("decimal rendering") {
  CHECK(lll::to_decimal_string(rq("1/2"), 12) == "0.5");
  CHECK(lll::to_decimal_string(rq("0"), 12) == "0");
  CHECK(lll::to_decimal_string(rq("2577/262144"), 6).substr(0, 8) ==
        std::string("0.009830"));
}

TEST_CASE("polynomial arithmetic") {
  IntPolynomial one_minus_2p = poly({1, -2});
  IntPolynomial two_p = poly({0, 2});
  CHECK(one_minus_2p + two_p == poly({1}));

  IntPolynomial one_minus_p = poly({1, -1});
  CHECK(one_minus_p * one_minus_p == poly({1, -2, 1}));
  CHECK(one_minus_p * one_minus_p * one_minus_p == poly({1, -3, 3, -1}));

  CHECK(poly({1, 2}) - poly({1, 2}) == IntPolynomial());
  CHECK((poly({1, 2}) * IntPolynomial()).is_zero());
  CHECK(IntPolynomial().degree() == -1);
  CHECK(poly({5}).degree() == 0);
}

TEST_CASE("polynomial evaluation is a ring homomorphism") {
  std::mt19937_64 rng(987);
  auto rand_poly = [&] {
    std::vector<Integer> c(rng() % 5);
    for (auto& x : c) x = static_cast<long>(rng() % 21) - 10;
    return IntPolynomial(std::move(c));
  };
  for (int trial = 0; trial < 200; ++trial) {
    IntPolynomial a = rand_poly(), b = rand_poly();
    Rational r = lll::make_rational(static_cast<long>(rng() % 19) - 9,
                                    1 + static_cast<long>(rng() % 7));
    CHECK((a + b).eval(r) == a.eval(r) + b.eval(r));
    CHECK((a - b).eval(r) == a.eval(r) - b.eval(r));
    CHECK((a * b).eval(r) == a.eval(r) * b.eval(r));
  }
}

TEST_CASE("primitive part") {
  CHECK(poly({2, -4}).primitive_part() == poly({1, -2}));
  CHECK(poly({-1, 2}).primitive_part() == poly({1, -2}));
  CHECK(poly({6, 0, -6}).primitive_part() == poly({1, 0, -1}));
  // Zero constant term: the lowest nonzero coefficient decides the sign.
  CHECK(poly({0, -3, 6}).primitive_part() == poly({0, 1, -2}));
  CHECK_THROWS_WITH_AS(IntPolynomial().primitive_part(),
                       "zero polynomial has no primitive part",
                       std::invalid_argument);
}

TEST_CASE("polynomial gcd and exact division") {
  IntPolynomial a = poly({1, -1}) * poly({1, 0, 1}) * poly({3});
  IntPolynomial b = poly({1, -1}) * poly({2, 5});
  IntPolynomial g = IntPolynomial::gcd(a, b);
  CHECK(g == poly({1, -1}));
  CHECK(IntPolynomial::divide_exact(a, g) == poly({3}) * poly({1, 0, 1}));

  CHECK(IntPolynomial::gcd(IntPolynomial(), b) == b);
  CHECK(IntPolynomial::gcd(poly({4, 8}), poly({6})) == poly({2}));

  std::mt19937_64 rng(555);
  auto rand_poly = [&](int maxdeg) {
    std::vector<Integer> c(1 + rng() % maxdeg);
    for (auto& x : c) x = static_cast<long>(rng() % 11) - 5;
    return IntPolynomial(std::move(c));
  };
  for (int trial = 0; trial < 100; ++trial) {
    IntPolynomial f = rand_poly(4), h = rand_poly(4);
    if (f.is_zero() || h.is_zero()) continue;
    IntPolynomial prod = f * h;
    IntPolynomial gg = IntPolynomial::gcd(prod, f);
    // f divides both, so the gcd is a multiple of f's primitive part.
    CHECK(IntPolynomial::divide_exact(gg, f.primitive_part()).degree() >= 0);
    CHECK(IntPolynomial::divide_exact(prod, f) == h);
  }
}

TEST_CASE("rational function reduction") {
  RationalFunction x(poly({0, 1}) * poly({1, -1}), poly({1, -1}) * poly({1, 1}));
  CHECK(x.num() == poly({0, 1}));
  CHECK(x.den() == poly({1, 1}));
  CHECK(x.eval(rq("1/2")) == rq("1/3"));

  // Denominator sign is normalized at the low end.
  RationalFunction y(poly({0, 1}), poly({-1, 1}));
  CHECK(y.den() == poly({1, -1}));
  CHECK(y.num() == poly({0, -1}));

  CHECK_THROWS_AS(RationalFunction(poly({1}), IntPolynomial()),
                  std::invalid_argument);
}

TEST_CASE("smallest_root linear") {
  auto bracket = lll::smallest_root(poly({1, -2}), 0, 1, rq("1/1000"));
  REQUIRE(bracket.has_value());
  CHECK(bracket->first < rq("1/2"));
  CHECK(bracket->second > rq("1/2"));
  CHECK(bracket->second - bracket->first <= rq("1/1000"));
  CHECK(sgn(poly({1, -2}).eval(bracket->first)) !=
        sgn(poly({1, -2}).eval(bracket->second)));
}

TEST_CASE("smallest_root on the degree-6 threshold polynomial") {
  IntPolynomial a = poly({1, -11, 28, -29, 17, -6, 1});
  auto bracket = lll::smallest_root(a, 0, 1, rq("1/1000000"));
  REQUIRE(bracket.has_value());
  CHECK(bracket->first > rq("0.12689"));
  CHECK(bracket->second < rq("0.126891"));
  CHECK(bracket->second - bracket->first <= rq("1/1000000"));
}

TEST_CASE("smallest_root none and errors") {
  CHECK(!lll::smallest_root(poly({1, 0, 1}), 0, 1, rq("1/1000")).has_value());
  CHECK_THROWS_WITH_AS(lll::smallest_root(poly({0, 1}), 0, 1, rq("1/8")),
                       "root at interval endpoint", std::invalid_argument);
  CHECK_THROWS_WITH_AS(lll::smallest_root(poly({1, -1}), 0, 1, rq("1/8")),
                       "root at interval endpoint", std::invalid_argument);
  CHECK_THROWS_AS(lll::smallest_root(poly({1, -2}), 0, 1, rq("0")),
                  std::invalid_argument);
  CHECK_THROWS_AS(lll::smallest_root(poly({1, -2}), 1, 0, rq("1/8")),
                  std::invalid_argument);
}

TEST_CASE("smallest_root picks the leftmost sign change") {
  // Roots at 1/4 and 3/4.
  IntPolynomial a = poly({1, -4}) * poly({3, -4});
  auto bracket = lll::smallest_root(a, 0, 1, rq("1/4096"));
  REQUIRE(bracket.has_value());
  CHECK(bracket->first < rq("1/4"));
  CHECK(bracket->second > rq("1/4"));
  CHECK(bracket->second < rq("3/4"));
}

TEST_CASE("smallest_root sign-change invariant on random cubics") {
  std::mt19937_64 rng(31337);
  int found = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Integer> c(4);
    for (auto& x : c) x = static_cast<long>(rng() % 9) - 4;
    IntPolynomial a(std::move(c));
    if (a.is_zero() || a.eval(0) == 0 || a.eval(1) == 0) continue;
    auto bracket = lll::smallest_root(a, 0, 1, rq("1/4096"));
    if (!bracket) continue;
    ++found;
    CHECK(sgn(a.eval(bracket->first)) != sgn(a.eval(bracket->second)));
    CHECK(bracket->second - bracket->first <= rq("1/4096"));
    CHECK(bracket->first >= 0);
    CHECK(bracket->second <= 1);
  }
  CHECK(found > 20);
}
