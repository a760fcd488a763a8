// lcq: exact construction and verification of the Laguerre-constellation
// orthogonal polynomial families.

#include <CLI11.hpp>
#include <iostream>

#include "lc/report_json.hpp"

namespace {

using namespace lc;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string family;
  std::string identity;
  int n = 0;
  int n_max = 12;
  int k_max = 4;
  int samples = 5;
  uint64_t seed = 0;
  int branch = 0;
  std::vector<std::string> params;
  std::string format = "json";
  bool normalized = false;
};

ParamPoint parse_params(const std::vector<std::string>& kv) {
  ParamPoint th;
  for (const auto& s : kv) {
    auto eq = s.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--param expects symbol=value: " + s);
    auto sym = sym_from_name(s.substr(0, eq));
    if (!sym) throw std::invalid_argument("unknown parameter symbol in: " + s);
    th.set(*sym, Rational::from_string(s.substr(eq + 1)));
  }
  return th;
}

FamilyId parse_family(const std::string& key) {
  auto f = family_from_key(key);
  if (!f) throw std::invalid_argument("unknown family: " + key);
  return *f;
}

std::string render_poly(const Poly& p, const std::string& var,
                        const std::string& format) {
  if (format == "text") return p.str(var);
  if (format == "latex") return p.latex(var);
  return poly_to_json(p).dump();
}

int cmd_families(const Options& opt) {
  Json j = families_to_json();
  if (opt.format == "text") {
    for (const auto& f : j["families"])
      std::cout << f["id"].get<std::string>() << ": "
                << f["name"].get<std::string>() << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return kExitPass;
}

int cmd_expand(const Options& opt) {
  const auto& reg = Registry::instance();
  FamilyId f = parse_family(opt.family);
  ParamPoint th = parse_params(opt.params);
  if (!reg.valid(f, th, opt.n + 2)) {
    std::cerr << "error: parameter point outside the family's valid set\n";
    return kExitUsage;
  }
  Poly p = opt.normalized ? reg.normalized(f, opt.branch, opt.n, th)
                          : reg.standard(f, opt.n, th);
  std::cout << render_poly(p, reg.spec(f).var, opt.format) << "\n";
  return kExitPass;
}

int cmd_recurrence(const Options& opt) {
  const auto& reg = Registry::instance();
  FamilyId f = parse_family(opt.family);
  ParamPoint th = parse_params(opt.params);
  if (!reg.valid(f, th, opt.n + 2)) {
    std::cerr << "error: parameter point outside the family's valid set\n";
    return kExitUsage;
  }
  auto [al, be, ga] = reg.recurrence_coeffs(f, opt.branch, opt.n, th);
  if (opt.format == "text") {
    std::cout << "alpha_" << opt.n << " = " << al.str() << "\n"
              << "beta_" << opt.n << " = " << be.str() << "\n"
              << "gamma_" << opt.n << " = " << ga.str() << "\n";
  } else {
    Json j;
    j["alpha"] = al.str();
    j["beta"] = be.str();
    j["gamma"] = ga.str();
    std::cout << j.dump() << "\n";
  }
  return kExitPass;
}

int cmd_check_lc(const Options& opt) {
  const auto& reg = Registry::instance();
  FamilyId f = parse_family(opt.family);
  ParamPoint th = parse_params(opt.params);
  if (!reg.valid(f, th, opt.n_max + 2)) {
    std::cerr << "error: parameter point outside the family's valid set\n";
    return kExitUsage;
  }
  bool all_pass = true;
  Json out = Json::array();
  for (size_t b = 0; b < reg.spec(f).branches.size(); ++b) {
    auto rep = check_lc_membership(f, static_cast<int>(b), th, opt.n_max);
    all_pass = all_pass && rep.pass;
    if (opt.format == "text") {
      std::cout << family_key(f) << " branch " << b << ": "
                << (rep.pass ? "pass" : "fail") << " (constant "
                << rep.constant.str() << ")\n";
    } else {
      out.push_back(membership_to_json(rep));
    }
  }
  if (opt.format != "text") std::cout << out.dump(2) << "\n";
  return all_pass ? kExitPass : kExitFail;
}

GridSpec make_grid(const Options& opt) {
  GridSpec g;
  g.n_max = opt.n_max;
  g.k_max = opt.k_max;
  g.samples = opt.samples;
  g.seed = opt.seed;
  return g;
}

int report_outcome(const std::vector<VerificationReport>& reports,
                   const Options& opt) {
  if (opt.format == "text") {
    for (const auto& r : reports) {
      std::cout << (r.pass ? "PASS " : (r.quarantined ? "QUAR " : "FAIL "))
                << r.id;
      if (!r.pass && !r.failures.empty()) {
        const auto& f = r.failures.front();
        std::cout << "  first failure at n=" << f.n;
        if (r.uses_k) std::cout << " k=" << f.k;
        std::cout << " theta={" << f.theta.str() << "}";
      }
      std::cout << "\n";
    }
  } else {
    std::cout << aggregate_to_json(reports, make_grid(opt)).dump(2) << "\n";
  }
  return all_as_expected(reports) ? kExitPass : kExitFail;
}

int cmd_verify(const Options& opt) {
  std::vector<VerificationReport> reports;
  GridSpec grid = make_grid(opt);
  if (opt.identity.empty()) {
    std::cerr << "error: --identity must be nonempty\n";
    return kExitUsage;
  }
  for (const auto& ident : identity_registry()) {
    if (ident.id == opt.identity || ident.id.rfind(opt.identity + ".", 0) == 0)
      reports.push_back(verify_identity(ident, grid));
  }
  if (reports.empty()) {
    std::cerr << "error: unknown identity: " << opt.identity << "\n";
    return kExitUsage;
  }
  return report_outcome(reports, opt);
}

int cmd_verify_all(const Options& opt) {
  if (!opt.family.empty() && opt.family != "rel") parse_family(opt.family);
  auto reports = verify_all(opt.family, make_grid(opt));
  return report_outcome(reports, opt);
}

int cmd_relations(const Options& opt) {
  Options o = opt;
  o.identity = "rel";
  std::vector<VerificationReport> reports;
  GridSpec grid = make_grid(opt);
  for (const auto& ident : identity_registry())
    if (ident.id.rfind("rel.", 0) == 0)
      reports.push_back(verify_identity(ident, grid));
  return report_outcome(reports, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lcq: exact arithmetic for the Laguerre constellation of classical "
      "orthogonal polynomial families"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool with_grid) {
    sub->add_option("--param", opt.params,
                    "parameter assignment symbol=rational, e.g. alpha=1/3");
    sub->add_option("--format", opt.format, "json | text | latex")
        ->check(CLI::IsMember({"json", "text", "latex"}));
    if (with_grid) {
      sub->add_option("--nmax", opt.n_max, "largest degree index checked");
      sub->add_option("--kmax", opt.k_max, "largest ladder depth checked (capped at 6)");
      sub->add_option("--samples", opt.samples, "parameter samples per identity");
      sub->add_option("--seed", opt.seed, "seed for parameter sampling");
    }
  };

  auto* fams = app.add_subcommand("families", "dump the family registry");
  add_common(fams, false);

  auto* expand = app.add_subcommand("expand", "expand one family member");
  expand->add_option("--family", opt.family, "family key")->required();
  expand->add_option("--n", opt.n, "degree")->required();
  expand->add_flag("--normalized", opt.normalized,
                   "divide by the value at the recurrence root");
  expand->add_option("--branch", opt.branch, "normalization branch (Meixner)");
  add_common(expand, false);

  auto* rec = app.add_subcommand("recurrence", "table recurrence coefficients");
  rec->add_option("--family", opt.family, "family key")->required();
  rec->add_option("--n", opt.n, "degree")->required();
  rec->add_option("--branch", opt.branch, "normalization branch (Meixner)");
  add_common(rec, false);

  auto* chk = app.add_subcommand("check-lc", "constellation membership check");
  chk->add_option("--family", opt.family, "family key")->required();
  chk->add_option("--nmax", opt.n_max, "largest index checked");
  add_common(chk, false);

  auto* ver = app.add_subcommand("verify", "verify one identity (or a prefix)");
  ver->add_option("--identity", opt.identity, "identity id, e.g. L.lownL")
      ->required();
  add_common(ver, true);

  auto* vall = app.add_subcommand("verify-all", "verify the whole registry");
  vall->add_option("--family", opt.family, "restrict to one family (or rel)");
  add_common(vall, true);

  auto* rel = app.add_subcommand("relations", "verify the inter-family relations");
  add_common(rel, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (fams->parsed()) return cmd_families(opt);
    if (expand->parsed()) return cmd_expand(opt);
    if (rec->parsed()) return cmd_recurrence(opt);
    if (chk->parsed()) return cmd_check_lc(opt);
    if (ver->parsed()) return cmd_verify(opt);
    if (vall->parsed()) return cmd_verify_all(opt);
    if (rel->parsed()) return cmd_relations(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
