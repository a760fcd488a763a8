#include <doctest.h>

#include "lc/param.hpp"
#include "lc/rational.hpp"

using namespace lc;

TEST_CASE("rational canonical form") {
  Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::from_string("22/7") == Rational(22, 7));
  CHECK(Rational::from_string("-7") == Rational(-7));
  CHECK(Rational::from_string("1/3") == Rational(1, 3));
  CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
}

TEST_CASE("arithmetic is exact and order-independent") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Rational a = rng.next_rational(), b = rng.next_rational();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
  // reconstruction over a common denominator is bit-identical
  Rational s1 = Rational(1, 3) + Rational(1, 6);
  CHECK(s1.num() == 1);
  CHECK(s1.den() == 2);
}

TEST_CASE("integer powers") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("pochhammer examples") {
  Rng rng(11);
  for (int i = 0; i < 10; ++i) CHECK(pochhammer(rng.next_rational(), 0) == Rational(1));
  CHECK(pochhammer(Rational(-3), 5) == Rational(0));  // the factor (-3+3) vanishes
  CHECK(pochhammer(Rational(2), 3) == Rational(24));  // 2*3*4
}

TEST_CASE("qpochhammer examples") {
  Rng rng(13);
  for (int i = 0; i < 10; ++i) {
    Rational a = rng.next_rational(), q = rng.next_rational();
    CHECK(qpochhammer(a, q, 0) == Rational(1));
  }
  CHECK(qpochhammer(Rational(1), Rational(5, 7), 3) == Rational(0));
  CHECK(qpochhammer(Rational(2), Rational(2), 2) == Rational(3));  // (1-2)(1-4)
}

TEST_CASE("pochhammer additivity (a)_(m+n) = (a)_m (a+m)_n") {
  Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    Rational a = rng.next_rational();
    int m = static_cast<int>(rng.next_in(0, 20));
    int n = static_cast<int>(rng.next_in(0, 20 - m));
    CHECK(pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n));
  }
}

TEST_CASE("qpochhammer additivity (a;q)_(m+n) = (a;q)_m (a q^m;q)_n") {
  Rng rng(19);
  for (int i = 0; i < 40; ++i) {
    Rational a = rng.next_rational(), q = rng.next_rational();
    int m = static_cast<int>(rng.next_in(0, 20));
    int n = static_cast<int>(rng.next_in(0, 20 - m));
    CHECK(qpochhammer(a, q, m + n) ==
          qpochhammer(a, q, m) * qpochhammer(a * q.pow(m), q, n));
  }
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(5) == Rational(120));
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(4, 0) == Rational(1));
  CHECK(binomial(3, 5) == Rational(0));
}
