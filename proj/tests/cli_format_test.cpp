#include <doctest.h>

#include <regex>

#include "lc/report_json.hpp"

using namespace lc;

TEST_CASE("text rendering matches the documented format") {
  ParamPoint th;
  th.set(Sym::alpha, Rational(0));
  Poly p = Registry::instance().normalized(FamilyId::L, 0, 2, th);
  CHECK(p.str() == "1 - 2x + 1/2 x^2");
}

TEST_CASE("expand JSON output re-parses to the same polynomial") {
  Rng rng(107);
  const auto& reg = Registry::instance();
  for (FamilyId f : all_families()) {
    ParamPoint th = reg.sample(f, rng, 10);
    for (int n = 0; n <= 6; ++n) {
      Poly p = reg.standard(f, n, th);
      CHECK(poly_from_json(poly_to_json(p)) == p);
    }
  }
}

TEST_CASE("latex output stays inside math-mode syntax") {
  // fractions brace-wrapped, powers braced, no bare '/' outside \frac
  Rng rng(109);
  const auto& reg = Registry::instance();
  std::regex frac(R"(\\frac\{-?[0-9]+\}\{[0-9]+\})");
  for (int i = 0; i < 5; ++i) {
    ParamPoint th = reg.sample(FamilyId::L, rng, 10);
    std::string s = reg.standard(FamilyId::L, 5, th).latex();
    std::string no_frac = std::regex_replace(s, frac, "F");
    CHECK(no_frac.find('/') == std::string::npos);
    CHECK(no_frac.find("^") != std::string::npos);
    for (size_t pos = 0; (pos = no_frac.find('^', pos)) != std::string::npos; ++pos)
      CHECK(no_frac[pos + 1] == '{');
  }
  CHECK(Poly({Rational(1, 2)}).latex() == "\\frac{1}{2}");
}

TEST_CASE("theta serialization") {
  ParamPoint th;
  th.set(Sym::beta, Rational(7, 2));
  th.set(Sym::c, Rational(-3));
  Json j = theta_to_json(th);
  CHECK(j["beta"] == "7/2");
  CHECK(j["c"] == "-3");
  CHECK(th.str() == "beta=7/2, c=-3");
}

TEST_CASE("families dump content") {
  Json j = families_to_json();
  REQUIRE(j["families"].size() == 10);
  bool saw_bql_edge = false;
  for (const auto& e : j["relations"])
    if (e["from"] == "bqL" && e["to"] == "qM" && e["type"] == "particular" &&
        e["relation"] == "rel.eq4.1")
      saw_bql_edge = true;
  CHECK(saw_bql_edge);
  for (const auto& f : j["families"]) {
    CHECK(f.contains("table"));
    CHECK(f.contains("parameters"));
    CHECK(f.contains("pearson"));
  }
  // phi/phi* recorded for the six families that state them
  for (const auto& f : j["families"]) {
    std::string id = f["id"].get<std::string>();
    bool has_phi = f["pearson"].contains("phi");
    bool expect = id == "L" || id == "C" || id == "M" || id == "bqL" ||
                  id == "lqL" || id == "SW";
    CHECK(has_phi == expect);
  }
}
