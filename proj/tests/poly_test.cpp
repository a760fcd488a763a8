#include <doctest.h>

#include "lc/bipoly.hpp"
#include "lc/param.hpp"
#include "lc/poly.hpp"

using namespace lc;

namespace {

Poly random_poly(Rng& rng, int max_deg) {
  std::vector<Rational> c;
  int d = static_cast<int>(rng.next_in(0, max_deg));
  for (int i = 0; i <= d; ++i) c.push_back(rng.next_rational(9));
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("zero polynomial convention: empty coefficient vector") {
  Poly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(z.coeffs().empty());
  CHECK(Poly(Rational(0)).is_zero());
  CHECK(Poly({Rational(1), Rational(0)}).degree() == 0);  // trailing zeros trimmed
  CHECK(Poly::x() - Poly::x() == z);
}

TEST_CASE("ring operation examples") {
  Poly x = Poly::x();
  CHECK(x + Poly() == x);                                  // additive identity
  CHECK((x + 1) * (x - 1) == Poly({Rational(-1), Rational(0), Rational(1)}));
  CHECK(Rational(1, 2) * (x * x) == Poly::monomial(Rational(1, 2), 2));
}

TEST_CASE("degree of products adds for nonzero factors") {
  Rng rng(23);
  for (int i = 0; i < 30; ++i) {
    Poly p = random_poly(rng, 6), r = random_poly(rng, 6);
    if (p.is_zero() || r.is_zero()) continue;
    CHECK((p * r).degree() == p.degree() + r.degree());
  }
}

TEST_CASE("evaluation examples") {
  Poly x2m1({Rational(-1), Rational(0), Rational(1)});
  CHECK(x2m1.eval(Rational(1)) == Rational(0));
  CHECK(x2m1.eval(Rational(0)) == Rational(-1));
  CHECK(Poly({Rational(3), Rational(2)}).eval(Rational(1, 2)) == Rational(4));
}

TEST_CASE("affine substitution examples") {
  Poly x2 = Poly::monomial(Rational(1), 2);
  CHECK(x2.subst_affine(Rational(1), Rational(1)) ==
        Poly({Rational(1), Rational(2), Rational(1)}));
  Rng rng(29);
  Poly p = random_poly(rng, 8);
  CHECK(p.subst_affine(Rational(1), Rational(0)) == p);  // identity substitution
  CHECK(Poly::x().subst_affine(Rational(2), Rational(0)) ==
        Poly::monomial(Rational(2), 1));
}

TEST_CASE("difference and derivative operator examples") {
  Poly x2 = Poly::monomial(Rational(1), 2);
  CHECK(x2.forward_diff() == Poly({Rational(1), Rational(2)}));  // 2x+1
  CHECK(Poly::x().q_derivative(Rational(7, 3)) == Poly(Rational(1)));
  CHECK(x2.q_derivative(Rational(2)) == Poly::monomial(Rational(3), 1));
  CHECK(x2.inverse_q_derivative(Rational(2)) == Poly::monomial(Rational(3, 2), 1));
  CHECK(Poly(Rational(5)).inverse_q_derivative(Rational(3)).is_zero());
  CHECK_THROWS_AS(x2.q_derivative(Rational(1)), std::domain_error);
  CHECK_THROWS_AS(x2.inverse_q_derivative(Rational(0)), std::domain_error);
}

TEST_CASE("forward and backward differences commute (degree <= 15)") {
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    Poly p = random_poly(rng, 15);
    CHECK(p.forward_diff().backward_diff() == p.backward_diff().forward_diff());
  }
}

TEST_CASE("operators are linear") {
  Rng rng(37);
  for (int i = 0; i < 20; ++i) {
    Poly p = random_poly(rng, 10), r = random_poly(rng, 10);
    Rational a = rng.next_rational(9), b = rng.next_rational(9);
    Poly combo = a * p + b * r;
    Rational q = rng.next_rational(9);
    if (q.is_zero() || q == Rational(1)) q = Rational(5, 3);
    CHECK(combo.forward_diff() == a * p.forward_diff() + b * r.forward_diff());
    CHECK(combo.backward_diff() == a * p.backward_diff() + b * r.backward_diff());
    CHECK(combo.derivative() == a * p.derivative() + b * r.derivative());
    CHECK(combo.q_derivative(q) == a * p.q_derivative(q) + b * r.q_derivative(q));
  }
}

TEST_CASE("operators drop the degree by exactly one") {
  Rng rng(41);
  for (int i = 0; i < 20; ++i) {
    Poly p = random_poly(rng, 12);
    if (p.degree() < 1) continue;
    CHECK(p.forward_diff().degree() == p.degree() - 1);
    CHECK(p.backward_diff().degree() == p.degree() - 1);
    CHECK(p.derivative().degree() == p.degree() - 1);
    CHECK(p.q_derivative(Rational(3, 2)).degree() == p.degree() - 1);
  }
}

TEST_CASE("q-derivative of x^n is the q-bracket [n]_q x^(n-1)") {
  Rng rng(43);
  for (int n = 1; n <= 15; ++n) {
    Rational q = rng.next_rational(9);
    if (q.is_zero() || q == Rational(1)) q = Rational(2);
    Rational bracket = (q.pow(n) - Rational(1)) / (q - Rational(1));
    CHECK(Poly::monomial(Rational(1), n).q_derivative(q) ==
          Poly::monomial(bracket, n - 1));
  }
}

TEST_CASE("pochhammer_poly examples") {
  Poly x = Poly::x();
  CHECK(pochhammer_poly(x, 0) == Poly(Rational(1)));
  CHECK(pochhammer_poly(-x, 1) == -x);
  CHECK(pochhammer_poly(-x, 2) ==
        Poly({Rational(0), Rational(-1), Rational(1)}));  // x^2 - x
}

TEST_CASE("pochhammer_poly evaluated equals pochhammer of the evaluation") {
  Rng rng(47);
  for (int i = 0; i < 25; ++i) {
    Poly p({rng.next_rational(9), rng.next_rational(9)});
    Rational x0 = rng.next_rational(9);
    int n = static_cast<int>(rng.next_in(0, 8));
    CHECK(pochhammer_poly(p, n).eval(x0) == pochhammer(p.eval(x0), n));
  }
}

TEST_CASE("qpochhammer_poly examples") {
  Poly x = Poly::x();
  Rational q(2);
  CHECK(qpochhammer_poly(x, q, 0) == Poly(Rational(1)));
  CHECK(qpochhammer_poly(x, q, 1) == Poly({Rational(1), Rational(-1)}));
  CHECK(qpochhammer_poly(x, q, 2) ==
        Poly({Rational(1), Rational(-3), Rational(2)}));  // (1-x)(1-2x)
}

TEST_CASE("exact division by powers of x") {
  Poly p = Poly::monomial(Rational(3), 2) + Poly::monomial(Rational(1), 4);
  auto d = p.div_exact_xpow(2);
  REQUIRE(d.has_value());
  CHECK(*d == Poly({Rational(3), Rational(0), Rational(1)}));
  CHECK(!(p + Poly(1)).div_exact_xpow(1).has_value());
  CHECK(Poly().div_exact_xpow(3).has_value());
}

TEST_CASE("string renderings") {
  Poly p({Rational(1), Rational(-2), Rational(1, 2)});
  CHECK(p.str() == "1 - 2x + 1/2 x^2");
  CHECK(p.latex() == "1 - 2x + \\frac{1}{2} x^{2}");
  CHECK(Poly().str() == "0");
  CHECK(Poly({Rational(0), Rational(-1)}).str() == "-x");
  CHECK(Poly({Rational(0), Rational(0), Rational(1)}).str("y") == "y^2");
}

TEST_CASE("coefficient string round trip") {
  Rng rng(53);
  for (int i = 0; i < 20; ++i) {
    Poly p = random_poly(rng, 9);
    CHECK(Poly::from_coeff_strings(p.coeff_strings()) == p);
  }
}

TEST_CASE("lagrange interpolation and parameter polynomials") {
  // interpolate u^2 - u/2 through 4 nodes
  std::vector<Rational> us{Rational(0), Rational(1), Rational(2), Rational(5)};
  std::vector<Rational> vs;
  for (const auto& u : us) vs.push_back(u * u - u / Rational(2));
  Poly f = lagrange_interpolate(us, vs);
  CHECK(f == Poly({Rational(0), Rational(-1, 2), Rational(1)}));

  // BiPoly: f(u) = (1 + u x)^2 has x-coefficients polynomial in u
  auto g = [](const Rational& u) {
    Poly p({Rational(1), u});
    return p * p;
  };
  BiPoly bp = BiPoly::interpolate(
      g, {Rational(1), Rational(2), Rational(3), Rational(4)});
  CHECK(bp.u_degree() == 2);
  CHECK(bp.eval_u(Rational(7)) == g(Rational(7)));
  // d/du (1+ux)^2 = 2x(1+ux)
  Poly expect = Rational(2) * Poly({Rational(0), Rational(1)}) *
                Poly({Rational(1), Rational(7)});
  CHECK(bp.d_du().eval_u(Rational(7)) == expect);
  // a degree bound that is too small must be caught
  auto h = [](const Rational& u) { return Poly(u.pow(3)); };
  CHECK_THROWS_AS(BiPoly::interpolate(h, {Rational(1), Rational(2), Rational(3)}),
                  std::logic_error);
}
