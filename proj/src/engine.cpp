#include "lc/engine.hpp"

namespace lc {

const Identity* find_identity(const std::string& id) {
  for (const auto& ident : identity_registry())
    if (ident.id == id) return &ident;
  return nullptr;
}

VerificationReport verify_identity(const Identity& ident, const GridSpec& grid) {
  const auto& reg = Registry::instance();
  VerificationReport rep;
  rep.id = ident.id;
  rep.source = ident.source;
  rep.kind = ident.kind;
  rep.grid = grid;
  rep.n_min = ident.n_min;
  rep.uses_k = ident.uses_k;
  rep.quarantined = ident.quarantined;
  rep.erratum = ident.erratum_note;

  const int n_hi = std::min(grid.n_max, ident.default_n_max);
  // Ladder depth is bounded by the parameter-shift windows the samplers
  // guarantee; anything deeper would walk off the validated pole-free range.
  const int k_hi_supported = 6;
  const int k_cap = std::min(grid.k_max, k_hi_supported);
  rep.grid.n_max = n_hi;
  rep.grid.k_max = k_cap;
  const int range = n_hi + ident.uses_k * k_cap + 4;

  Rng rng(grid.seed ^ fnv1a(ident.id));
  for (int s = 0; s < grid.samples; ++s) {
    ParamPoint th;
    bool found = false;
    for (int attempt = 0; attempt < 4000 && !found; ++attempt) {
      if (ident.sampler) {
        th = ident.sampler(rng, range);
      } else if (ident.family) {
        th = reg.sample(*ident.family, rng, range);
      } else {
        throw std::logic_error("identity lacks a sampler: " + ident.id);
      }
      found = !ident.theta_ok || ident.theta_ok(th, range);
    }
    if (!found)
      throw std::runtime_error("verify: sampling exhausted by pole rejection for " +
                               ident.id);

    const int k_lo = ident.uses_k ? 1 : 0;
    const int k_hi = ident.uses_k ? k_cap : 0;
    for (int n = 0; n <= n_hi; ++n) {
      for (int k = k_lo; k <= k_hi; ++k) {
        if (n < ident.n_min) {
          if (s == 0)
            rep.skipped.push_back({n, k, "below the identity's smallest valid index"});
          continue;
        }
        auto sides = ident.sides(n, k, th);
        if (!sides) {
          if (s == 0) rep.skipped.push_back({n, k, "outside the stated hypotheses"});
          continue;
        }
        if (sides->first != sides->second) {
          rep.failures.push_back({n, k, th, sides->first - sides->second});
        }
      }
    }
  }
  rep.pass = rep.failures.empty();
  rep.stale_quarantine = rep.quarantined && rep.pass;
  return rep;
}

VerificationReport verify_identity(const std::string& id, const GridSpec& grid) {
  const Identity* ident = find_identity(id);
  if (!ident) throw std::out_of_range("unknown identity: " + id);
  return verify_identity(*ident, grid);
}

std::vector<VerificationReport> verify_all(const std::string& family_filter,
                                           const GridSpec& grid) {
  std::vector<VerificationReport> out;
  for (const auto& ident : identity_registry()) {
    if (!family_filter.empty()) {
      const std::string fam = ident.family ? family_key(*ident.family) : "rel";
      if (fam != family_filter) continue;
    }
    out.push_back(verify_identity(ident, grid));
  }
  return out;
}

bool all_as_expected(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass && !r.quarantined) return false;
  return true;
}

namespace {

MembershipReport membership_impl(FamilyId f, int branch, const ParamPoint& th,
                                 int n_max, bool perturb) {
  const auto& reg = Registry::instance();
  const auto& br = reg.spec(f).branches.at(static_cast<size_t>(branch));
  MembershipReport rep;
  rep.family = f;
  rep.branch = branch;
  rep.theta = th;

  auto gamma_at = [&](int n) {
    Rational g = br.gamma(n, th);
    if (perturb && n >= 1) g += Rational(1);
    return g;
  };

  rep.gamma0_zero = gamma_at(0).is_zero();
  rep.constant = br.alpha(0, th) + br.beta(0, th) + gamma_at(0);
  rep.constant_sum = true;
  for (int n = 1; n <= n_max; ++n) {
    Rational sum = br.alpha(n, th) + br.beta(n, th) + gamma_at(n);
    if (sum != rep.constant) {
      rep.constant_sum = false;
      rep.first_bad_n = n;
      break;
    }
  }
  if (br.root_from_pearson) {
    rep.root_checked = true;
    rep.root_matches = rep.constant == br.root(th);
  }
  rep.pass = rep.gamma0_zero && rep.constant_sum &&
             (!rep.root_checked || rep.root_matches);
  return rep;
}

}  // namespace

MembershipReport check_lc_membership(FamilyId f, int branch, const ParamPoint& th,
                                     int n_max) {
  return membership_impl(f, branch, th, n_max, false);
}

MembershipReport check_lc_membership_perturbed(FamilyId f, int branch,
                                               const ParamPoint& th, int n_max) {
  return membership_impl(f, branch, th, n_max, true);
}

bool check_structure_relation(FamilyId f, int branch, int n, const ParamPoint& th,
                              Poly* residual) {
  const auto& reg = Registry::instance();
  const auto& br = reg.spec(f).branches.at(static_cast<size_t>(branch));
  auto p = [&](int m) { return reg.normalized(f, branch, m, th); };
  Poly phi({-br.root(th), Rational(1)});
  Poly lhs = phi * p(n);
  Poly rhs = br.alpha(n, th) * (p(n + 1) - p(n)) -
             br.gamma(n, th) * (p(n) - p(n - 1));
  if (residual) *residual = lhs - rhs;
  return lhs == rhs;
}

bool check_sturm_liouville(FamilyId f, int branch, int n, const ParamPoint& th,
                           SLForm form, Poly* residual) {
  const auto& reg = Registry::instance();
  const auto& br = reg.spec(f).branches.at(static_cast<size_t>(branch));
  auto p = [&](int m) { return reg.normalized(f, branch, m, th); };
  Poly phi({-br.root(th), Rational(1)});
  Poly lhs = phi * p(n);
  Poly fwd = p(n + 1) - p(n);
  Poly bwd = p(n) - p(n - 1);
  Poly rhs;
  if (form == SLForm::SL1) {
    // d_n^2 Delta_n (gamma_n/d_n^2) Nabla_n p_n with the ratio route:
    // d_n^2/d_{n+1}^2 = 1/rho_{n+1}.
    Rational coef = br.gamma(n + 1, th) / reg.norm_ratio(f, branch, n + 1, th);
    rhs = coef * fwd - br.gamma(n, th) * bwd;
  } else {
    // d_n^2 Nabla_n (alpha_n/d_n^2) Delta_n p_n; the n = 0 backward term
    // carries 1/d_{-1}^2 = 0.
    rhs = br.alpha(n, th) * fwd;
    if (n >= 1)
      rhs -= (reg.norm_ratio(f, branch, n, th) * br.alpha(n - 1, th)) * bwd;
  }
  if (residual) *residual = lhs - rhs;
  return lhs == rhs;
}

Poly recurrence_forward(FamilyId f, int branch, int n, const ParamPoint& th) {
  const auto& reg = Registry::instance();
  const auto& br = reg.spec(f).branches.at(static_cast<size_t>(branch));
  if (n < 0) return Poly();
  Poly pm1;  // p_{-1} = 0
  Poly p0(1);
  if (n == 0) return p0;
  Poly x = Poly::x();
  for (int m = 0; m < n; ++m) {
    // x p_m = alpha_m p_{m+1} + beta_m p_m + gamma_m p_{m-1}
    Rational am = br.alpha(m, th);
    if (am.is_zero()) throw std::domain_error("recurrence_forward: alpha_n = 0");
    Poly next = (x * p0 - br.beta(m, th) * p0 - br.gamma(m, th) * pm1)
                    .scale_div(am);
    pm1 = p0;
    p0 = next;
  }
  return p0;
}

std::optional<Poly> rodrigues_step_reconstruction(FamilyId f, int n,
                                                  const ParamPoint& th) {
  const auto& reg = Registry::instance();
  const Rational one(1);
  switch (f) {
    case FamilyId::L: {
      // L_n^(alpha) = Nabla_n L_n^(alpha+1)
      ParamPoint up = th.with(Sym::alpha, th.get(Sym::alpha) + 1);
      return reg.standard(f, n, up) - reg.standard(f, n - 1, up);
    }
    case FamilyId::C: {
      // C_n(x;a) = -a Delta_n C_n(x+1;a) / (x+1)
      Poly num = (-th.get(Sym::a)) *
                 (reg.standard(f, n + 1, th) - reg.standard(f, n, th))
                     .subst_affine(one, one);
      // division by (x+1): shift to x, divide by x, shift back
      Poly shifted = num.subst_affine(one, Rational(-1));
      auto div = shifted.div_exact_xpow(1);
      if (!div) return std::nullopt;
      return div->subst_affine(one, one);
    }
    case FamilyId::M: {
      // M_n(x;beta,c) = (beta-1)c/((c-1)(x+1)) Nabla_n M_{n+1}(x+1;beta-1,c)
      const Rational be = th.get(Sym::beta), c = th.get(Sym::c);
      if (be == one) return std::nullopt;
      ParamPoint dn = th.with(Sym::beta, be - 1);
      if (!reg.valid(f, dn, n + 2)) return std::nullopt;
      Poly num = (reg.standard(f, n + 1, dn) - reg.standard(f, n, dn))
                     .subst_affine(one, one);
      Poly shifted = num.subst_affine(one, Rational(-1));
      auto div = shifted.div_exact_xpow(1);
      if (!div) return std::nullopt;
      return ((be - 1) * c / (c - 1)) * div->subst_affine(one, one);
    }
    case FamilyId::bqL: {
      // p_n(x;a,b;q) = (1-a)(1-b) q^n Delta_n p_n(x/q; a/q, b/q; q) / (x/q - 1)
      const Rational a = th.get(Sym::a), b = th.get(Sym::b), q = th.get(Sym::q);
      ParamPoint dn = th.with(Sym::a, a / q).with(Sym::b, b / q);
      if (!reg.valid(f, dn, n + 2)) return std::nullopt;
      Poly num = (reg.standard(f, n + 1, dn) - reg.standard(f, n, dn))
                     .subst_affine(one / q, Rational(0));
      // divide by (x/q - 1): root at x = q
      Poly shifted = num.subst_affine(one, q);
      auto div = shifted.div_exact_xpow(1);
      if (!div) return std::nullopt;
      return ((one - a) * (one - b) * q.pow(n + 1)) *
             div->subst_affine(one, -q);
    }
    case FamilyId::lqL: {
      // p_n(x;a|q) = (a-1) q^n Nabla_{n+1} p_{n+1}(x; a/q |q) / x
      const Rational a = th.get(Sym::a), q = th.get(Sym::q);
      ParamPoint dn = th.with(Sym::a, a / q);
      if (!reg.valid(f, dn, n + 2)) return std::nullopt;
      Poly num = reg.standard(f, n + 1, dn) - reg.standard(f, n, dn);
      auto div = num.div_exact_xpow(1);
      if (!div) return std::nullopt;
      return ((a - 1) * q.pow(n)) * *div;
    }
    case FamilyId::SW: {
      // S_n(x) = -q^{-n-1} Nabla_{n+1} S_{n+1}(x/q) / (x/q)
      const Rational q = th.get(Sym::q);
      Poly num = (reg.standard(f, n + 1, th) - reg.standard(f, n, th))
                     .subst_affine(one / q, Rational(0));
      auto div = num.div_exact_xpow(1);
      if (!div) return std::nullopt;
      return (-q.pow(-n)) * *div;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace lc
