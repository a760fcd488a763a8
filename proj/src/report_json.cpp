#include "lc/report_json.hpp"

namespace lc {

Json theta_to_json(const ParamPoint& th) {
  Json j = Json::object();
  for (const auto& [s, r] : th.values()) j[sym_name(s)] = r.str();
  return j;
}

Json poly_to_json(const Poly& p) {
  Json j = Json::array();
  for (const auto& s : p.coeff_strings()) j.push_back(s);
  return j;
}

Poly poly_from_json(const Json& j) {
  std::vector<std::string> v;
  for (const auto& e : j) v.push_back(e.get<std::string>());
  return Poly::from_coeff_strings(v);
}

Json report_to_json(const VerificationReport& rep) {
  Json j;
  j["identity"] = rep.id;
  j["paper_ref"] = rep.source;
  j["kind"] = rep.kind;
  j["grid"] = {{"n_range", Json::array({rep.n_min, rep.grid.n_max})},
               {"k_range", rep.uses_k ? Json::array({1, rep.grid.k_max})
                                      : Json::array({0, 0})},
               {"samples", rep.grid.samples},
               {"seed", rep.grid.seed}};
  j["status"] = rep.pass ? "pass" : "fail";
  j["quarantined"] = rep.quarantined;
  if (rep.quarantined) {
    Json err;
    err["note"] = rep.erratum;
    if (!rep.failures.empty()) {
      const auto& f = rep.failures.front();
      err["first_failure"] = {{"n", f.n},
                              {"k", f.k},
                              {"theta", theta_to_json(f.theta)},
                              {"residual_poly", poly_to_json(f.residual)}};
    }
    if (rep.stale_quarantine) err["stale"] = true;
    j["erratum"] = err;
  }
  Json skipped = Json::array();
  for (const auto& s : rep.skipped)
    skipped.push_back({{"n", s.n}, {"k", s.k}, {"reason", s.reason}});
  j["skipped"] = skipped;
  Json failures = Json::array();
  for (const auto& f : rep.failures)
    failures.push_back({{"n", f.n},
                        {"k", f.k},
                        {"theta", theta_to_json(f.theta)},
                        {"residual_poly", poly_to_json(f.residual)}});
  j["failures"] = failures;
  return j;
}

Json aggregate_to_json(const std::vector<VerificationReport>& reports,
                       const GridSpec& grid) {
  Json j;
  j["seed"] = grid.seed;
  j["n_max"] = grid.n_max;
  j["k_max"] = grid.k_max;
  j["samples"] = grid.samples;
  int failed_unexpected = 0;
  Json quarantine = Json::array();
  Json reps = Json::array();
  for (const auto& r : reports) {
    reps.push_back(report_to_json(r));
    if (r.quarantined) quarantine.push_back(r.id);
    if (!r.pass && !r.quarantined) ++failed_unexpected;
  }
  j["status"] = failed_unexpected == 0 ? "pass" : "fail";
  j["unexpected_failures"] = failed_unexpected;
  j["quarantine"] = quarantine;
  j["reports"] = reps;
  return j;
}

Json membership_to_json(const MembershipReport& rep) {
  Json j;
  j["family"] = family_key(rep.family);
  j["branch"] = rep.branch;
  j["theta"] = theta_to_json(rep.theta);
  j["gamma0_zero"] = rep.gamma0_zero;
  j["constant_sum"] = rep.constant_sum;
  j["constant"] = rep.constant.str();
  if (!rep.constant_sum) j["first_bad_n"] = rep.first_bad_n;
  if (rep.root_checked) j["root_matches"] = rep.root_matches;
  j["status"] = rep.pass ? "pass" : "fail";
  return j;
}

Json families_to_json() {
  const auto& reg = Registry::instance();
  Json out;
  Json fams = Json::array();
  for (FamilyId f : all_families()) {
    const auto& s = reg.spec(f);
    Json jf;
    jf["id"] = s.key;
    jf["name"] = s.name;
    Json params = Json::array();
    for (Sym p : s.params) params.push_back(sym_name(p));
    jf["parameters"] = params;
    jf["variable"] = s.var;
    Json table = Json::object();
    for (const auto& [k, v] : s.table_formulas) table[k] = v;
    jf["table"] = table;
    Json branches = Json::array();
    for (const auto& br : s.branches) {
      Json jb;
      jb["doc"] = br.doc;
      jb["root_from_pearson"] = br.root_from_pearson;
      jb["dsq_ratio_consistent"] = br.dsq_ratio_consistent;
      branches.push_back(jb);
    }
    jf["branches"] = branches;
    Json pearson = Json::object();
    if (!s.phi_text.empty()) pearson["phi"] = s.phi_text;
    if (!s.phi_star_text.empty()) pearson["phi_star"] = s.phi_star_text;
    if (!s.psi_text.empty()) pearson["psi"] = s.psi_text;
    if (!s.psi_star_text.empty()) pearson["psi_star"] = s.psi_star_text;
    jf["pearson"] = pearson;
    if (!s.notes.empty()) jf["notes"] = s.notes;
    fams.push_back(jf);
  }
  out["families"] = fams;
  Json edges = Json::array();
  for (const auto& e : Registry::instance().edges()) {
    Json je;
    je["from"] = e.from;
    je["to"] = e.to;
    je["type"] = e.type;
    je["bidirectional"] = e.bidirectional;
    if (!e.relation_id.empty()) je["relation"] = e.relation_id;
    edges.push_back(je);
  }
  out["relations"] = edges;
  return out;
}

}  // namespace lc
