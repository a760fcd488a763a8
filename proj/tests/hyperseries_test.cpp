#include <doctest.h>

#include "lc/families.hpp"
#include "lc/hyperseries.hpp"
#include "lc/param.hpp"

using namespace lc;

TEST_CASE("terminating 1F1 expansion") {
  // 1F1(-1; alpha0+1; x) with alpha0 = 0 -> 1 - x
  auto s = SeriesSpec::ordinary({Poly(Rational(-1))}, {Rational(1)}, Poly::x(), 1);
  CHECK(hyper_sum(s) == Poly({Rational(1), Rational(-1)}));
}

TEST_CASE("truncation at zero terms yields the constant 1") {
  auto s = SeriesSpec::ordinary({Poly(Rational(-5)), Poly::x()}, {Rational(3)},
                                Poly(Rational(2)), 0);
  CHECK(hyper_sum(s) == Poly(Rational(1)));
  auto b = SeriesSpec::basic({Poly(Rational(1, 2))}, {Rational(3)}, Rational(2),
                             Poly::x(), 0);
  CHECK(hyper_sum(b) == Poly(Rational(1)));
}

TEST_CASE("1phi1(q^-1; 0; q, -q^2 x) at q=2 equals 1 - 2x") {
  Rational q(2);
  auto s = SeriesSpec::basic({Poly(Rational(1, 2))}, {Rational(0)}, q,
                             Poly::monomial(-q * q, 1), 1);
  CHECK(hyper_sum(s) == Poly({Rational(1), Rational(-2)}));
  // cross-check against the Stieltjes-Wigert generator at n = 1
  ParamPoint th;
  th.set(Sym::q, q);
  CHECK(hyper_sum(s) == Registry::instance().standard(FamilyId::SW, 1, th));
}

TEST_CASE("series errors") {
  // vanishing ordinary denominator Pochhammer: b = -1 hits zero at k = 2
  auto s = SeriesSpec::ordinary({Poly(Rational(-5))}, {Rational(-1)}, Poly::x(), 4);
  CHECK_THROWS_AS(hyper_sum(s), SeriesError);
  // q in {0,1} rejected for the basic kind
  auto b = SeriesSpec::basic({Poly(Rational(2))}, {}, Rational(1), Poly::x(), 3);
  CHECK_THROWS_AS(hyper_sum(b), SeriesError);
  b.q = Rational(0);
  CHECK_THROWS_AS(hyper_sum(b), SeriesError);
  // numerator parameters of degree > 1 rejected
  auto d = SeriesSpec::ordinary({Poly::monomial(Rational(1), 2)}, {}, Poly::x(), 2);
  CHECK_THROWS_AS(hyper_sum(d), SeriesError);
}

TEST_CASE("natural termination: -n numerator parameter kills terms beyond n") {
  for (int n = 1; n <= 6; ++n) {
    auto exact = SeriesSpec::ordinary({Poly(Rational(-n))}, {Rational(5, 3)},
                                      Poly::x(), n);
    auto overshoot = exact;
    overshoot.terms = n + 4;
    CHECK(hyper_sum(exact) == hyper_sum(overshoot));
  }
}

TEST_CASE("natural termination: (q^-n; q)_k vanishes for k > n") {
  Rational q(3, 2);
  for (int n = 1; n <= 6; ++n) {
    CHECK(qpochhammer(q.pow(-n), q, n + 1) == Rational(0));
    auto exact = SeriesSpec::basic({Poly(q.pow(-n))}, {Rational(5)}, q,
                                   Poly::monomial(Rational(2), 1), n);
    auto overshoot = exact;
    overshoot.terms = n + 3;
    CHECK(hyper_sum(exact) == hyper_sum(overshoot));
  }
}

TEST_CASE("polynomial evaluation agrees with the scalar-only summation path") {
  Rng rng(61);
  for (int i = 0; i < 30; ++i) {
    Rational a1 = rng.next_rational(9), b1 = rng.next_rational(9);
    Rational z = rng.next_rational(9);
    if (b1.is_nonneg_int() || (-b1).is_nonneg_int()) continue;
    auto s = SeriesSpec::ordinary({Poly(a1)}, {b1}, Poly(z), 6);
    CHECK(hyper_sum(s) == Poly(hyper_sum_scalar(s)));

    Rational q = rng.next_rational(9);
    if (q.is_zero() || q == Rational(1) || q == Rational(-1)) q = Rational(2, 5);
    auto bs = SeriesSpec::basic({Poly(a1)}, {}, q, Poly(z), 6);
    CHECK(hyper_sum(bs) == Poly(hyper_sum_scalar(bs)));
    // exponent 1+s-r = -1 exercised (two numerator parameters, none below)
    auto neg = SeriesSpec::basic({Poly(a1), Poly(rng.next_rational(9))}, {}, q,
                                 Poly(z), 6);
    CHECK(hyper_sum(neg) == Poly(hyper_sum_scalar(neg)));
  }
}

TEST_CASE("family generators have degree exactly n") {
  const auto& reg = Registry::instance();
  Rng rng(67);
  for (FamilyId f : all_families()) {
    for (int s = 0; s < 3; ++s) {
      ParamPoint th = reg.sample(f, rng, 14);
      for (int n = 0; n <= 12; ++n)
        CHECK(reg.standard(f, n, th).degree() == n);
    }
  }
}
