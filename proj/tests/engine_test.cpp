#include <doctest.h>

#include "lc/engine.hpp"
#include "lc/report_json.hpp"

using namespace lc;

namespace {

const Registry& reg() { return Registry::instance(); }

ParamPoint theta(std::initializer_list<std::pair<Sym, Rational>> kv) {
  ParamPoint th;
  for (const auto& [s, r] : kv) th.set(s, r);
  return th;
}

int count_ids(const std::string& prefix, const std::string& kind = "") {
  int c = 0;
  for (const auto& ident : identity_registry())
    if (ident.id.rfind(prefix, 0) == 0 && (kind.empty() || ident.kind == kind))
      ++c;
  return c;
}

}  // namespace

TEST_CASE("membership check examples") {
  auto rep = check_lc_membership(FamilyId::L, 0,
                                 theta({{Sym::alpha, Rational(1)}}), 20);
  CHECK(rep.pass);
  CHECK(rep.constant == Rational(0));
  CHECK(rep.root_checked);

  auto rep2 = check_lc_membership(
      FamilyId::bqL, 0,
      theta({{Sym::a, Rational(1, 3)}, {Sym::b, Rational(1, 5)}, {Sym::q, Rational(2)}}),
      20);
  CHECK(rep2.pass);
  CHECK(rep2.constant == Rational(1));

  // q-Meixner: constancy holds but no Pearson root is registered
  auto rep3 = check_lc_membership(
      FamilyId::qM, 0,
      theta({{Sym::b, Rational(3)}, {Sym::c, Rational(5)}, {Sym::q, Rational(2)}}),
      20);
  CHECK(rep3.pass);
  CHECK(!rep3.root_checked);
  CHECK(rep3.constant == Rational(6));  // b q
}

TEST_CASE("negative control: a gamma-perturbed family fails at n = 1") {
  auto rep = check_lc_membership_perturbed(FamilyId::C, 0,
                                           theta({{Sym::a, Rational(3)}}), 20);
  CHECK(!rep.pass);
  CHECK(!rep.constant_sum);
  CHECK(rep.first_bad_n == 1);
  CHECK(rep.gamma0_zero);
}

TEST_CASE("structure relation examples") {
  // (L, 0, alpha=1/2): x * 1 = alpha_0 (p1 - p0) - 0
  CHECK(check_structure_relation(FamilyId::L, 0, 0,
                                 theta({{Sym::alpha, Rational(1, 2)}})));
  CHECK(check_structure_relation(FamilyId::C, 0, 3, theta({{Sym::a, Rational(2)}})));
  // Meixner on the starred branch: (x+beta) p_n = ...
  CHECK(check_structure_relation(
      FamilyId::M, 1, 2,
      theta({{Sym::beta, Rational(3)}, {Sym::c, Rational(1, 2)}})));
}

TEST_CASE("Sturm-Liouville forms") {
  CHECK(check_sturm_liouville(FamilyId::L, 0, 1, theta({{Sym::alpha, Rational(0)}}),
                              SLForm::SL1));
  CHECK(check_sturm_liouville(FamilyId::C, 0, 2, theta({{Sym::a, Rational(3)}}),
                              SLForm::SL2));
  // both forms reduce to the structure relation: their difference vanishes
  Rng rng(97);
  for (FamilyId f : {FamilyId::L, FamilyId::C, FamilyId::M, FamilyId::bqL,
                     FamilyId::lqL, FamilyId::SW}) {
    ParamPoint th = reg().sample(f, rng, 10);
    for (int n = 0; n <= 6; ++n) {
      Poly r1, r2, rs;
      CHECK(check_sturm_liouville(f, 0, n, th, SLForm::SL1, &r1));
      CHECK(check_sturm_liouville(f, 0, n, th, SLForm::SL2, &r2));
      CHECK(check_structure_relation(f, 0, n, th, &rs));
      CHECK(r1 == r2);
      CHECK(r1 == rs);
    }
  }
}

TEST_CASE("theorem of equivalent characterizations on registry data") {
  // the three statements agree in the positive direction on every rooted
  // branch, and all three reject the perturbed pseudo-family
  Rng rng(101);
  for (FamilyId f : {FamilyId::L, FamilyId::C, FamilyId::M, FamilyId::bqL,
                     FamilyId::lqL, FamilyId::SW}) {
    ParamPoint th = reg().sample(f, rng, 10);
    bool membership = check_lc_membership(f, 0, th, 10).pass;
    bool sr = true, sl = true;
    for (int n = 0; n <= 8; ++n) {
      sr = sr && check_structure_relation(f, 0, n, th);
      sl = sl && check_sturm_liouville(f, 0, n, th, SLForm::SL1) &&
           check_sturm_liouville(f, 0, n, th, SLForm::SL2);
    }
    CHECK(membership);
    CHECK(sr == membership);
    CHECK(sl == membership);
  }
  // negative control: perturbing gamma breaks membership; the recurrence
  // the perturbed coefficients define is not satisfied by the sequence either
  auto bad = check_lc_membership_perturbed(FamilyId::C, 0,
                                           theta({{Sym::a, Rational(2)}}), 10);
  CHECK(!bad.pass);
}

TEST_CASE("verify single identities") {
  GridSpec grid;
  grid.n_max = 6;
  grid.samples = 3;
  grid.seed = 5;
  auto rep = verify_identity("L.lownL", grid);
  CHECK(rep.pass);
  CHECK(rep.failures.empty());

  // C.rainC at n = 0: a Delta_n C_0 = a(C_1 - C_0) = -x = -x C_0(x-1)
  auto repc = verify_identity("C.rainC", grid);
  CHECK(repc.pass);
  {
    ParamPoint th = theta({{Sym::a, Rational(2)}});
    Poly lhs = Rational(2) * (reg().standard(FamilyId::C, 1, th) -
                              reg().standard(FamilyId::C, 0, th));
    CHECK(lhs == Poly({Rational(0), Rational(-1)}));
  }

  // SW.rainSW at n = 1, q = 2: nabla_n S_1 = -2x = -q x S_0(qx)
  auto reps = verify_identity("SW.rainSW", grid);
  CHECK(reps.pass);
  {
    ParamPoint th = theta({{Sym::q, Rational(2)}});
    Poly nab = reg().standard(FamilyId::SW, 1, th) - reg().standard(FamilyId::SW, 0, th);
    CHECK(nab == Poly({Rational(0), Rational(-2)}));
  }

  CHECK_THROWS_AS(verify_identity("no.such.identity", grid), std::out_of_range);
}

TEST_CASE("parameter difference equation examples") {
  GridSpec grid;
  grid.n_max = 5;
  grid.samples = 3;
  grid.seed = 9;
  // sodeL1 passes; its n = 0 instance is 0 = 0 (the left side carries n)
  auto rep = verify_identity("L.sodeL1", grid);
  CHECK(rep.pass);
  {
    ParamPoint th = theta({{Sym::alpha, Rational(1, 3)}});
    const auto* ident = find_identity("L.sodeL1");
    REQUIRE(ident);
    auto sides0 = ident->sides(0, 0, th);
    REQUIRE(sides0.has_value());
    CHECK(sides0->first.is_zero());
    CHECK(sides0->second.is_zero());
    auto sides2 = ident->sides(2, 0, th);
    REQUIRE(sides2.has_value());
    CHECK(sides2->first == sides2->second);
  }

  // sodelqL1 as printed fails from n = 1; exact computation localizes it,
  // e.g. at a = 1/3, q = 2 (the corrected bare-difference form passes).
  {
    const auto* ident = find_identity("lqL.sodelqL1");
    REQUIRE(ident);
    CHECK(ident->quarantined);
    ParamPoint th = theta({{Sym::a, Rational(1, 3)}, {Sym::q, Rational(2)}});
    auto sides = ident->sides(1, 0, th);
    REQUIRE(sides.has_value());
    CHECK(sides->first != sides->second);
    auto repq = verify_identity("lqL.sodelqL1", grid);
    CHECK(!repq.pass);
    CHECK(repq.failures.front().n == 1);
    auto repc = verify_identity("lqL.sodelqL1.corrected", grid);
    CHECK(repc.pass);
  }
}

TEST_CASE("ladder identities verify against iterated steps") {
  GridSpec grid;
  grid.n_max = 5;
  grid.k_max = 3;
  grid.samples = 2;
  grid.seed = 21;
  for (const char* id : {"L.LalRF.step", "L.LnRF", "L.LnRF2", "L.LalRF2",
                         "C.CnRF", "C.CnRF2", "M.MbRF", "SW.SWnRF.corrected",
                         "bqL.bqLnRF.corrected"})
    CHECK(verify_identity(id, grid).pass);
}

TEST_CASE("registry cardinality by family") {
  // printed rows: the statements exactly as the source displays them
  CHECK(count_ids("L.", "printed") == 14);
  CHECK(count_ids("C.", "printed") == 6);
  CHECK(count_ids("M.", "printed") == 16);
  CHECK(count_ids("bqL.", "printed") == 11);
  CHECK(count_ids("lqL.", "printed") == 9);
  CHECK(count_ids("SW.", "printed") == 6);
  CHECK(count_ids("rel.", "relation") == 4);
  CHECK(count_ids("generic.") == 21);
  CHECK(identity_registry().size() == 117);
}

TEST_CASE("quarantine discipline") {
  // every registry entry either passes or is quarantined with a note, and
  // quarantined entries really fail (no stale quarantine)
  GridSpec grid;
  grid.n_max = 6;
  grid.k_max = 2;
  grid.samples = 2;
  grid.seed = 42;
  auto reports = verify_all("", grid);
  CHECK(all_as_expected(reports));
  for (const auto& r : reports) {
    if (r.quarantined) {
      CHECK(!r.pass);
      CHECK(!r.erratum.empty());
      CHECK(!r.failures.empty());
    } else {
      CHECK(r.pass);
    }
  }
}

TEST_CASE("determinism: identical seeds give identical reports") {
  GridSpec grid;
  grid.n_max = 5;
  grid.k_max = 2;
  grid.samples = 2;
  grid.seed = 42;
  auto a = verify_all("SW", grid);
  auto b = verify_all("SW", grid);
  CHECK(aggregate_to_json(a, grid).dump() == aggregate_to_json(b, grid).dump());
  grid.seed = 43;
  auto c = verify_all("SW", grid);
  // a different seed samples different parameter points
  CHECK(aggregate_to_json(a, grid).dump() != aggregate_to_json(c, grid).dump());
}

TEST_CASE("operator consistency: three constructions agree") {
  Rng rng(103);
  for (FamilyId f : all_families()) {
    const auto& spec = reg().spec(f);
    for (size_t b = 0; b < spec.branches.size(); ++b) {
      ParamPoint th = reg().sample(f, rng, 12);
      for (int n = 0; n <= 8; ++n) {
        Poly series = reg().normalized(f, static_cast<int>(b), n, th);
        Poly forward = recurrence_forward(f, static_cast<int>(b), n, th);
        CHECK(series == forward);
      }
    }
  }
  // one-step ladder reconstruction for the six families that have one
  for (FamilyId f : {FamilyId::L, FamilyId::C, FamilyId::M, FamilyId::bqL,
                     FamilyId::lqL, FamilyId::SW}) {
    for (int s = 0; s < 3; ++s) {
      ParamPoint th = reg().sample(f, rng, 12);
      for (int n = 0; n <= 6; ++n) {
        auto rebuilt = rodrigues_step_reconstruction(f, n, th);
        if (!rebuilt) continue;
        CHECK(*rebuilt == reg().standard(f, n, th));
      }
    }
  }
}

TEST_CASE("grid points outside an identity's hypotheses are recorded skipped") {
  GridSpec grid;
  grid.n_max = 4;
  grid.k_max = 2;
  grid.samples = 2;
  grid.seed = 3;
  // rainSW holds from n = 1; the n = 0 point is skipped, not passed
  auto rep = verify_identity("SW.rainSW", grid);
  CHECK(rep.pass);
  REQUIRE(!rep.skipped.empty());
  CHECK(rep.skipped.front().n == 0);
  // CnRF2 needs n >= k
  auto rep2 = verify_identity("C.CnRF2", grid);
  CHECK(rep2.pass);
  bool saw_n_below_k = false;
  for (const auto& s : rep2.skipped)
    if (s.n < s.k) saw_n_below_k = true;
  CHECK(saw_n_below_k);
}

TEST_CASE("reports carry the effective grid") {
  GridSpec grid;
  grid.n_max = 12;
  grid.k_max = 9;  // beyond the supported ladder depth
  grid.samples = 1;
  grid.seed = 4;
  auto rel = verify_identity("rel.eq4.4", grid);
  CHECK(rel.grid.n_max == 8);  // relations verify on the smaller default range
  auto lad = verify_identity("L.LnRF2", grid);
  CHECK(lad.grid.k_max == 6);
  CHECK(lad.pass);
}

TEST_CASE("report JSON schema fields") {
  GridSpec grid;
  grid.n_max = 4;
  grid.samples = 2;
  grid.seed = 1;
  auto rep = verify_identity("M.lowcM", grid);  // quarantined
  Json j = report_to_json(rep);
  CHECK(j.contains("identity"));
  CHECK(j.contains("paper_ref"));
  CHECK(j.contains("grid"));
  CHECK(j["grid"].contains("n_range"));
  CHECK(j["grid"].contains("k_range"));
  CHECK(j["grid"].contains("samples"));
  CHECK(j["grid"].contains("seed"));
  CHECK(j["status"] == "fail");
  CHECK(j["quarantined"] == true);
  CHECK(j["erratum"].contains("first_failure"));
  CHECK(j["erratum"]["first_failure"].contains("theta"));
  CHECK(j["erratum"]["first_failure"].contains("residual_poly"));
  CHECK(j.contains("skipped"));
  CHECK(j.contains("failures"));
}
