// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// pass. Everything is exact rational arithmetic; every tolerance is zero.

#include <chrono>
#include <iostream>

#include "lc/report_json.hpp"

using namespace lc;

namespace {

const Registry& reg() { return Registry::instance(); }

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << name;
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

// 1. Recurrence reproduction: all 10 families, n in 0..12, 5 seeded random
// valid parameter points each, exact three-term recurrence on the normalized
// sequence.
void criterion_recurrence() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  Rng rng(42);
  for (FamilyId f : all_families()) {
    const auto& spec = reg().spec(f);
    for (size_t b = 0; b < spec.branches.size() && ok; ++b) {
      for (int s = 0; s < 5 && ok; ++s) {
        ParamPoint th = reg().sample(f, rng, 15);
        std::vector<Poly> p(15);
        for (int n = 0; n < 15; ++n)
          p[static_cast<size_t>(n)] = reg().normalized(f, static_cast<int>(b), n, th);
        for (int n = 0; n <= 12 && ok; ++n) {
          auto [al, be, ga] =
              reg().recurrence_coeffs(f, static_cast<int>(b), n, th);
          Poly prev = n == 0 ? Poly() : p[static_cast<size_t>(n - 1)];
          Poly lhs = Poly::x() * p[static_cast<size_t>(n)];
          Poly rhs = al * p[static_cast<size_t>(n + 1)] +
                     be * p[static_cast<size_t>(n)] + ga * prev;
          if (lhs != rhs) {
            ok = false;
            detail = "family " + family_key(f) + " fails at n=" +
                     std::to_string(n) + " theta={" + th.str() + "}";
          }
        }
      }
    }
  }
  auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  if (ok) detail = std::to_string(dt) + " ms";
  report("1 recurrence reproduction, 10 families, n<=12, 5 samples", ok, detail);
}

// 2. Membership characterization: gamma_0 = 0 and constant coefficient sum
// over n in 0..20; the constant equals the registered root for the six
// Pearson-rooted families; the perturbed pseudo-family fails at n = 1.
void criterion_membership() {
  bool ok = true;
  std::string detail;
  Rng rng(43);
  for (FamilyId f : all_families()) {
    const auto& spec = reg().spec(f);
    for (size_t b = 0; b < spec.branches.size(); ++b) {
      for (int s = 0; s < 5; ++s) {
        ParamPoint th = reg().sample(f, rng, 22);
        auto rep = check_lc_membership(f, static_cast<int>(b), th, 20);
        bool here = rep.pass && rep.gamma0_zero && rep.constant_sum;
        if (spec.branches[b].root_from_pearson && !rep.root_matches) here = false;
        if (!here) {
          ok = false;
          detail = "family " + family_key(f);
        }
      }
    }
  }
  ParamPoint thc;
  thc.set(Sym::a, Rational(3));
  auto bad = check_lc_membership_perturbed(FamilyId::C, 0, thc, 20);
  if (bad.pass || bad.first_bad_n != 1) {
    ok = false;
    detail = "negative control did not fail at n=1";
  }
  report("2 membership: gamma_0 = 0, constant sum, root match, negative control",
         ok, detail);
}

// 3. Structure relation and both ratio-reduced self-adjoint forms for every
// family with a registered degree-1 Pearson polynomial, n in 0..10, 5 samples.
void criterion_structure_sl() {
  bool ok = true;
  std::string detail;
  Rng rng(44);
  struct Target {
    FamilyId f;
    int b;
  };
  const std::vector<Target> targets = {{FamilyId::L, 0},  {FamilyId::C, 0},
                                       {FamilyId::M, 0},  {FamilyId::M, 1},
                                       {FamilyId::bqL, 0}, {FamilyId::lqL, 0},
                                       {FamilyId::SW, 0}};
  for (const auto& t : targets) {
    for (int s = 0; s < 5 && ok; ++s) {
      ParamPoint th = reg().sample(t.f, rng, 13);
      for (int n = 0; n <= 10 && ok; ++n) {
        if (!check_structure_relation(t.f, t.b, n, th) ||
            !check_sturm_liouville(t.f, t.b, n, th, SLForm::SL1) ||
            !check_sturm_liouville(t.f, t.b, n, th, SLForm::SL2)) {
          ok = false;
          detail = "family " + family_key(t.f) + " branch " +
                   std::to_string(t.b) + " at n=" + std::to_string(n);
        }
      }
    }
  }
  report("3 structure relation and both Sturm-Liouville forms, n<=10", ok,
         detail);
}

// 4. Full identity registry over the default grid: every displayed statement
// passes or is quarantined with a machine-readable erratum carrying the first
// failing grid point; corrected and step forms all pass; no stale quarantine.
void criterion_registry() {
  GridSpec grid;
  grid.n_max = 12;
  grid.k_max = 3;
  grid.samples = 5;
  grid.seed = 42;
  auto reports = verify_all("", grid);
  bool ok = true;
  std::string detail;
  int quarantined = 0;
  for (const auto& r : reports) {
    if (r.quarantined) {
      ++quarantined;
      if (r.pass) {
        ok = false;
        detail = "stale quarantine: " + r.id;
      } else if (r.erratum.empty() || r.failures.empty()) {
        ok = false;
        detail = "undocumented quarantine: " + r.id;
      }
    } else if (!r.pass) {
      ok = false;
      detail = "silent failure: " + r.id;
    }
  }
  Json agg = aggregate_to_json(reports, grid);
  if (agg["status"] != "pass") {
    ok = false;
    if (detail.empty()) detail = "aggregate status fail";
  }
  report("4 identity registry: " + std::to_string(reports.size()) +
             " entries, quarantine of " + std::to_string(quarantined) +
             " documented with first failures",
         ok, detail);
}

// 5. Cross-construction agreement: series generator vs recurrence-forward
// construction, all families, n <= 10, 5 samples.
void criterion_cross_construction() {
  bool ok = true;
  std::string detail;
  Rng rng(45);
  for (FamilyId f : all_families()) {
    const auto& spec = reg().spec(f);
    for (size_t b = 0; b < spec.branches.size() && ok; ++b) {
      for (int s = 0; s < 5 && ok; ++s) {
        ParamPoint th = reg().sample(f, rng, 13);
        for (int n = 0; n <= 10 && ok; ++n) {
          if (reg().normalized(f, static_cast<int>(b), n, th) !=
              recurrence_forward(f, static_cast<int>(b), n, th)) {
            ok = false;
            detail = "family " + family_key(f) + " at n=" + std::to_string(n);
          }
        }
      }
    }
  }
  report("5 cross-construction: series generator vs recurrence-forward, n<=10",
         ok, detail);
}

// 6. Determinism: two runs with seed 42 produce byte-identical JSON.
void criterion_determinism() {
  GridSpec grid;
  grid.n_max = 8;
  grid.k_max = 2;
  grid.samples = 3;
  grid.seed = 42;
  std::string a = aggregate_to_json(verify_all("", grid), grid).dump(2);
  std::string b = aggregate_to_json(verify_all("", grid), grid).dump(2);
  report("6 determinism: byte-identical JSON for identical seeds", a == b);
}

// 7. Desk-scale values.
void criterion_desk_values() {
  bool ok = true;
  std::string detail;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail = what;
    }
  };
  ParamPoint thL;
  thL.set(Sym::alpha, Rational(0));
  expect(reg().normalized(FamilyId::L, 0, 2, thL) ==
             Poly({Rational(1), Rational(-2), Rational(1, 2)}),
         "normalized Laguerre n=2");
  ParamPoint thC;
  thC.set(Sym::a, Rational(2));
  expect(reg().standard(FamilyId::C, 1, thC) == Poly({Rational(1), Rational(-1, 2)}),
         "Charlier n=1");
  ParamPoint thS;
  thS.set(Sym::q, Rational(2));
  expect(reg().standard(FamilyId::SW, 1, thS) == Poly({Rational(1), Rational(-2)}),
         "Stieltjes-Wigert n=1");
  ParamPoint thL1;
  thL1.set(Sym::alpha, Rational(1));
  auto [la, lb, lg] = reg().recurrence_coeffs(FamilyId::L, 0, 2, thL1);
  expect(la == Rational(-4) && lb == Rational(6) && lg == Rational(-2),
         "Laguerre table row at n=2");
  ParamPoint thC3;
  thC3.set(Sym::a, Rational(3));
  auto [ca, cb, cg] = reg().recurrence_coeffs(FamilyId::C, 0, 0, thC3);
  expect(ca == Rational(-3) && cb == Rational(3) && cg == Rational(0),
         "Charlier table row at n=0");
  auto [sa, sb, sg] = reg().recurrence_coeffs(FamilyId::SW, 0, 1, thS);
  expect(sa == Rational(-1, 8) && sg == Rational(1, 4) && sb == -sa - sg,
         "Stieltjes-Wigert table row at n=1");
  report("7 desk-scale values: expansions and table lookups", ok, detail);
}

}  // namespace

int main() {
  criterion_recurrence();
  criterion_membership();
  criterion_structure_sl();
  criterion_registry();
  criterion_cross_construction();
  criterion_determinism();
  criterion_desk_values();
  if (failures == 0) {
    std::cout << "all acceptance criteria pass\n";
    return 0;
  }
  std::cout << failures << " acceptance criteria failed\n";
  return 1;
}
