#include <doctest.h>

#include "lc/families.hpp"
#include "lc/param.hpp"

using namespace lc;

namespace {

const Registry& reg() { return Registry::instance(); }

ParamPoint theta(std::initializer_list<std::pair<Sym, Rational>> kv) {
  ParamPoint th;
  for (const auto& [s, r] : kv) th.set(s, r);
  return th;
}

}  // namespace

TEST_CASE("family keys round trip") {
  for (FamilyId f : all_families()) {
    auto back = family_from_key(family_key(f));
    REQUIRE(back.has_value());
    CHECK(*back == f);
  }
  CHECK(!family_from_key("XX").has_value());
  CHECK(all_families().size() == 10);
}

TEST_CASE("generator examples") {
  CHECK(reg().standard(FamilyId::L, 0, theta({{Sym::alpha, Rational(1, 2)}})) ==
        Poly(Rational(1)));
  CHECK(reg().standard(FamilyId::C, 1, theta({{Sym::a, Rational(2)}})) ==
        Poly({Rational(1), Rational(-1, 2)}));
  CHECK(reg().standard(FamilyId::SW, 1, theta({{Sym::q, Rational(2)}})) ==
        Poly({Rational(1), Rational(-2)}));
  // p_{-1} = 0 convention
  CHECK(reg().standard(FamilyId::L, -1, theta({{Sym::alpha, Rational(1)}})).is_zero());
}

TEST_CASE("table recurrence coefficient examples") {
  auto [a1, b1, g1] =
      reg().recurrence_coeffs(FamilyId::L, 0, 2, theta({{Sym::alpha, Rational(1)}}));
  CHECK(a1 == Rational(-4));
  CHECK(b1 == Rational(6));
  CHECK(g1 == Rational(-2));

  auto [a2, b2, g2] =
      reg().recurrence_coeffs(FamilyId::C, 0, 0, theta({{Sym::a, Rational(3)}}));
  CHECK(a2 == Rational(-3));
  CHECK(b2 == Rational(3));
  CHECK(g2 == Rational(0));

  auto [a3, b3, g3] =
      reg().recurrence_coeffs(FamilyId::SW, 0, 1, theta({{Sym::q, Rational(2)}}));
  CHECK(a3 == Rational(-1, 8));
  CHECK(g3 == Rational(1, 4));
  CHECK(b3 == -a3 - g3);
}

TEST_CASE("norm ratio examples and telescoping") {
  CHECK(reg().norm_ratio(FamilyId::L, 0, 1, theta({{Sym::alpha, Rational(0)}})) ==
        Rational(1));
  CHECK(reg().norm_ratio(FamilyId::C, 0, 1, theta({{Sym::a, Rational(2)}})) ==
        Rational(1, 2));
  CHECK_THROWS_AS(reg().norm_ratio(FamilyId::L, 0, 0,
                                   theta({{Sym::alpha, Rational(0)}})),
                  std::invalid_argument);
  // telescoping: the product of the ratios is d_n^2/d_0^2; against the
  // printed column for Charlier, d_n^2 = n!/a^n with d_0^2 = 1.
  ParamPoint th = theta({{Sym::a, Rational(3)}});
  Rational prod(1);
  for (int n = 1; n <= 8; ++n) {
    prod *= reg().norm_ratio(FamilyId::C, 0, n, th);
    CHECK(prod == factorial(n) / Rational(3).pow(n));
  }
}

TEST_CASE("printed squared-norm columns against the ratio route") {
  // For nine families the printed d_n^2 column implies exactly
  // gamma_n/alpha_(n-1); for 0LB it does not, and the registry records that.
  Rng rng(71);
  for (FamilyId f : all_families()) {
    const auto& spec = reg().spec(f);
    for (size_t b = 0; b < spec.branches.size(); ++b) {
      const auto& br = spec.branches[b];
      ParamPoint th = reg().sample(f, rng, 12);
      bool all_match = true;
      for (int n = 1; n <= 10; ++n) {
        if (br.table_dsq_ratio(n, th) !=
            reg().norm_ratio(f, static_cast<int>(b), n, th))
          all_match = false;
      }
      CHECK(all_match == br.dsq_ratio_consistent);
      CHECK((f == FamilyId::ZLB) == !br.dsq_ratio_consistent);
    }
  }
}

TEST_CASE("REC: normalized sequences satisfy the table recurrence") {
  Rng rng(73);
  for (FamilyId f : all_families()) {
    const auto& spec = reg().spec(f);
    for (size_t b = 0; b < spec.branches.size(); ++b) {
      for (int s = 0; s < 3; ++s) {
        ParamPoint th = reg().sample(f, rng, 12);
        for (int n = 0; n <= 9; ++n) {
          auto [al, be, ga] = reg().recurrence_coeffs(f, static_cast<int>(b), n, th);
          Poly pn = reg().normalized(f, static_cast<int>(b), n, th);
          Poly lhs = Poly::x() * pn;
          Poly rhs = al * reg().normalized(f, static_cast<int>(b), n + 1, th) +
                     be * pn +
                     ga * reg().normalized(f, static_cast<int>(b), n - 1, th);
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("normalized sequences equal one at the recurrence root") {
  Rng rng(79);
  for (FamilyId f : all_families()) {
    const auto& spec = reg().spec(f);
    for (size_t b = 0; b < spec.branches.size(); ++b) {
      ParamPoint th = reg().sample(f, rng, 12);
      const auto& br = spec.branches[b];
      for (int n = 0; n <= 8; ++n) {
        CHECK(reg().normalized(f, static_cast<int>(b), n, th).eval(br.root(th)) ==
              Rational(1));
        // and the standard generator takes the registered closed-form value
        CHECK(reg().standard(f, n, th).eval(br.root(th)) ==
              br.value_at_root(n, th));
      }
    }
  }
}

TEST_CASE("closed-form values at the root match the quoted forms") {
  // L_n^(alpha)(0) = (alpha+1)_n/n!  and  M_n(-beta;beta,c) = 1/c^n
  ParamPoint thL = theta({{Sym::alpha, Rational(2, 3)}});
  for (int n = 0; n <= 6; ++n)
    CHECK(reg().standard(FamilyId::L, n, thL).eval(Rational(0)) ==
          pochhammer(Rational(5, 3), n) / factorial(n));
  ParamPoint thM = theta({{Sym::beta, Rational(5, 2)}, {Sym::c, Rational(3, 7)}});
  for (int n = 0; n <= 6; ++n)
    CHECK(reg().standard(FamilyId::M, n, thM).eval(Rational(-5, 2)) ==
          Rational(1) / Rational(3, 7).pow(n));
}

TEST_CASE("validity predicate rejects pole-set points") {
  CHECK(!reg().valid(FamilyId::L, theta({{Sym::alpha, Rational(-1)}}), 8));
  CHECK(!reg().valid(FamilyId::C, theta({{Sym::a, Rational(0)}}), 8));
  CHECK(!reg().valid(FamilyId::M,
                     theta({{Sym::beta, Rational(3)}, {Sym::c, Rational(1)}}), 8));
  CHECK(!reg().valid(FamilyId::M,
                     theta({{Sym::beta, Rational(-2)}, {Sym::c, Rational(2)}}), 8));
  CHECK(!reg().valid(FamilyId::SW, theta({{Sym::q, Rational(1)}}), 8));
  CHECK(!reg().valid(FamilyId::SW, theta({{Sym::q, Rational(-1)}}), 8));
  // b q^k = 1 inside the working window is rejected
  CHECK(!reg().valid(
      FamilyId::bqL,
      theta({{Sym::a, Rational(3)},
             {Sym::b, Rational(1, 8)},
             {Sym::q, Rational(2)}}),
      8));
  CHECK(reg().valid(
      FamilyId::bqL,
      theta({{Sym::a, Rational(3)}, {Sym::b, Rational(5)}, {Sym::q, Rational(2)}}),
      8));
  // sampled points are always valid
  Rng rng(83);
  for (FamilyId f : all_families())
    for (int i = 0; i < 5; ++i)
      CHECK(reg().valid(f, reg().sample(f, rng, 12), 12));
}

TEST_CASE("relation examples") {
  // Eq (4.4) at n = 0: both sides are the constant 1
  ParamPoint th = theta({{Sym::a, Rational(3)}, {Sym::q, Rational(2)}});
  auto [l0, r0] = related_poly(RelationId::Eq44, 0, th);
  CHECK(l0 == Poly(Rational(1)));
  CHECK(r0 == Poly(Rational(1)));

  // Eqs (4.1)-(4.4) hold exactly for n <= 8 at seeded random valid points
  Rng rng(89);
  for (RelationId rel : {RelationId::Eq41, RelationId::Eq42, RelationId::Eq43,
                         RelationId::Eq44}) {
    for (int s = 0; s < 3; ++s) {
      ParamPoint t;
      for (int attempt = 0;; ++attempt) {
        REQUIRE(attempt < 4000);
        t = ParamPoint();
        for (Sym sym : relation_params(rel)) t.set(sym, rng.next_rational());
        if (relation_theta_valid(rel, t, 10)) break;
      }
      for (int n = 0; n <= 8; ++n) {
        auto [lhs, rhs] = related_poly(rel, n, t);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("registry dump carries table formulas and edges") {
  const auto& spec = reg().spec(FamilyId::M);
  CHECK(spec.branches.size() == 2);
  CHECK(spec.table_formulas.size() == 8);  // two rows of four entries
  CHECK(reg().edges().size() == 17);
  int particular = 0;
  for (const auto& e : reg().edges())
    if (e.type == "particular") ++particular;
  CHECK(particular == 5);
}
