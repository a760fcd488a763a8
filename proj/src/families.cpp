#include "lc/families.hpp"

#include <stdexcept>

namespace lc {

namespace {

const Rational kOne(1);

Rational qpow(const Rational& q, long e) { return q.pow(e); }

// Rejects alpha-like parameters that are negative integers in the window
// needed by (alpha+1)_k denominators, k <= range.
bool alpha_ok(const Rational& alpha, int range) {
  if (!alpha.is_integer()) return true;
  if (alpha < Rational(0)) {
    Rational lim(-(static_cast<long>(range)));
    return alpha < lim;  // alpha <= -(range+1) would still be a pole upstream; reject all small negatives
  }
  return true;
}

// q-family base sanity: q not in {0, 1, -1}.
bool q_ok(const Rational& q) {
  return !q.is_zero() && q != Rational(1) && q != Rational(-1);
}

// True when u * q^k != 1 for all k in 1..range.
bool no_unit_qpow(const Rational& u, const Rational& q, int range) {
  Rational w = u;
  for (int k = 1; k <= range; ++k) {
    w *= q;
    if (w == kOne) return false;
  }
  return true;
}

// True when u + q^k != 0 for all k in 1..range.
bool no_neg_qpow(const Rational& u, const Rational& q, int range) {
  Rational w = q;
  for (int k = 1; k <= range; ++k) {
    if (u + w == Rational(0)) return false;
    w *= q;
  }
  return true;
}

}  // namespace

std::string family_key(FamilyId f) {
  switch (f) {
    case FamilyId::L: return "L";
    case FamilyId::C: return "C";
    case FamilyId::M: return "M";
    case FamilyId::bqL: return "bqL";
    case FamilyId::qM: return "qM";
    case FamilyId::lqL: return "lqL";
    case FamilyId::qL: return "qL";
    case FamilyId::qC: return "qC";
    case FamilyId::ZLB: return "0LB";
    case FamilyId::SW: return "SW";
  }
  return "?";
}

std::optional<FamilyId> family_from_key(const std::string& key) {
  for (FamilyId f : all_families())
    if (family_key(f) == key) return f;
  return std::nullopt;
}

std::vector<FamilyId> all_families() {
  return {FamilyId::L,  FamilyId::C,  FamilyId::M,  FamilyId::bqL, FamilyId::qM,
          FamilyId::lqL, FamilyId::qL, FamilyId::qC, FamilyId::ZLB, FamilyId::SW};
}

const Registry& Registry::instance() {
  static Registry reg;
  return reg;
}

const FamilySpec& Registry::spec(FamilyId f) const {
  for (const auto& s : specs_)
    if (s.id == f) return s;
  throw std::out_of_range("Registry: unknown family");
}

Poly Registry::standard(FamilyId f, int n, const ParamPoint& th) const {
  if (n < 0) return Poly();
  return spec(f).standard(n, th);
}

Poly Registry::normalized(FamilyId f, int branch, int n, const ParamPoint& th) const {
  if (n < 0) return Poly();
  const auto& br = spec(f).branches.at(static_cast<size_t>(branch));
  return standard(f, n, th).scale_div(br.value_at_root(n, th));
}

std::tuple<Rational, Rational, Rational> Registry::recurrence_coeffs(
    FamilyId f, int branch, int n, const ParamPoint& th) const {
  const auto& br = spec(f).branches.at(static_cast<size_t>(branch));
  return {br.alpha(n, th), br.beta(n, th), br.gamma(n, th)};
}

Rational Registry::norm_ratio(FamilyId f, int branch, int n,
                              const ParamPoint& th) const {
  if (n < 1) throw std::invalid_argument("norm_ratio: n >= 1 required");
  const auto& br = spec(f).branches.at(static_cast<size_t>(branch));
  Rational am1 = br.alpha(n - 1, th);
  if (am1.is_zero())
    throw std::domain_error("norm_ratio: alpha_{n-1} = 0 (degenerate point)");
  return br.gamma(n, th) / am1;
}

bool Registry::valid(FamilyId f, const ParamPoint& th, int nrange) const {
  const auto& s = spec(f);
  for (Sym p : s.params)
    if (!th.has(p)) return false;
  return s.valid(th, nrange);
}

ParamPoint Registry::sample(FamilyId f, Rng& rng, int nrange, long bound) const {
  const auto& s = spec(f);
  for (int attempt = 0; attempt < 4000; ++attempt) {
    ParamPoint th;
    for (Sym p : s.params) th.set(p, rng.next_rational(bound));
    if (s.valid(th, nrange)) return th;
  }
  throw std::runtime_error("sample: rejection sampling exhausted for family " +
                           s.key);
}

Registry::Registry() {
  // ---------------------------------------------------------------- Laguerre
  {
    FamilySpec s;
    s.id = FamilyId::L;
    s.key = "L";
    s.name = "Laguerre";
    s.params = {Sym::alpha};
    s.var = "x";
    s.standard = [](int n, const ParamPoint& th) {
      const Rational al = th.get(Sym::alpha);
      auto spec = SeriesSpec::ordinary({Poly(Rational(-n))}, {al + 1},
                                       Poly::x(), n);
      return (pochhammer(al + 1, n) / factorial(n)) * hyper_sum(spec);
    };
    Branch b;
    b.doc = "normalized at the root 0 of phi(x) = x; p_n(0) = (alpha+1)_n/n!";
    b.root_from_pearson = true;
    b.root = [](const ParamPoint&) { return Rational(0); };
    b.value_at_root = [](int n, const ParamPoint& th) {
      return pochhammer(th.get(Sym::alpha) + 1, n) / factorial(n);
    };
    b.alpha = [](int n, const ParamPoint& th) {
      return -(Rational(n) + th.get(Sym::alpha) + 1);
    };
    b.beta = [](int n, const ParamPoint& th) {
      return Rational(2 * n) + th.get(Sym::alpha) + 1;
    };
    b.gamma = [](int n, const ParamPoint&) { return Rational(-n); };
    b.table_dsq_ratio = [](int n, const ParamPoint& th) {
      return Rational(n) / (th.get(Sym::alpha) + n);
    };
    s.branches = {b};
    s.valid = [](const ParamPoint& th, int nrange) {
      return alpha_ok(th.get(Sym::alpha), nrange + 3);
    };
    s.phi = [](const ParamPoint&) { return Poly::x(); };
    s.phi_star = [](const ParamPoint&) { return Poly::x(); };
    s.psi = [](const ParamPoint& th) {
      return Poly({th.get(Sym::alpha) + 1, Rational(-1)});
    };
    s.psi_star = s.psi;
    s.phi_text = "x";
    s.phi_star_text = "x";
    s.psi_text = "alpha+1-x";
    s.psi_star_text = "alpha+1-x";
    s.table_formulas = {{"alpha_n", "-n-alpha-1"},
                        {"beta_n", "2n+alpha+1"},
                        {"gamma_n", "-n"},
                        {"d_n^2", "n! Gamma^2(alpha+1)/Gamma(n+alpha+1)"}};
    specs_.push_back(std::move(s));
  }

  // ---------------------------------------------------------------- Charlier
  {
    FamilySpec s;
    s.id = FamilyId::C;
    s.key = "C";
    s.name = "Charlier";
    s.params = {Sym::a};
    s.var = "x";
    s.standard = [](int n, const ParamPoint& th) {
      const Rational a = th.get(Sym::a);
      auto spec = SeriesSpec::ordinary(
          {Poly(Rational(-n)), Poly({Rational(0), Rational(-1)})}, {},
          Poly(Rational(-1) / a), n);
      return hyper_sum(spec);
    };
    Branch b;
    b.doc = "normalized at the root 0 of phi(x) = x; C_n(0;a) = 1";
    b.root_from_pearson = true;
    b.root = [](const ParamPoint&) { return Rational(0); };
    b.value_at_root = [](int, const ParamPoint&) { return Rational(1); };
    b.alpha = [](int, const ParamPoint& th) { return -th.get(Sym::a); };
    b.beta = [](int n, const ParamPoint& th) { return Rational(n) + th.get(Sym::a); };
    b.gamma = [](int n, const ParamPoint&) { return Rational(-n); };
    b.table_dsq_ratio = [](int n, const ParamPoint& th) {
      return Rational(n) / th.get(Sym::a);
    };
    s.branches = {b};
    s.valid = [](const ParamPoint& th, int) { return !th.get(Sym::a).is_zero(); };
    s.phi = [](const ParamPoint&) { return Poly::x(); };
    s.phi_star = [](const ParamPoint& th) { return Poly(th.get(Sym::a)); };
    s.psi = [](const ParamPoint& th) {
      return Poly({th.get(Sym::a), Rational(-1)});
    };
    s.psi_star = s.psi;
    s.phi_text = "x";
    s.phi_star_text = "a";
    s.psi_text = "a-x";
    s.psi_star_text = "a-x";
    s.table_formulas = {{"alpha_n", "-a"},
                        {"beta_n", "n+a"},
                        {"gamma_n", "-n"},
                        {"d_n^2", "n!/a^n"}};
    specs_.push_back(std::move(s));
  }

  // ----------------------------------------------------------------- Meixner
  {
    FamilySpec s;
    s.id = FamilyId::M;
    s.key = "M";
    s.name = "Meixner";
    s.params = {Sym::beta, Sym::c};
    s.var = "x";
    s.standard = [](int n, const ParamPoint& th) {
      const Rational be = th.get(Sym::beta), c = th.get(Sym::c);
      auto spec = SeriesSpec::ordinary(
          {Poly(Rational(-n)), Poly({Rational(0), Rational(-1)})}, {be},
          Poly(Rational(1) - Rational(1) / c), n);
      return hyper_sum(spec);
    };
    Branch b0;  // hypergeometric normalization, root 0 of phi(x) = x
    b0.doc = "normalized at root 0 of phi(x) = x; M_n(0) = 1 (first table row)";
    b0.root_from_pearson = true;
    b0.root = [](const ParamPoint&) { return Rational(0); };
    b0.value_at_root = [](int, const ParamPoint&) { return Rational(1); };
    b0.alpha = [](int n, const ParamPoint& th) {
      const Rational be = th.get(Sym::beta), c = th.get(Sym::c);
      return c * (be + n) / (c - 1);
    };
    b0.beta = [](int n, const ParamPoint& th) {
      const Rational be = th.get(Sym::beta), c = th.get(Sym::c);
      return -(Rational(n) + c * (be + n)) / (c - 1);
    };
    b0.gamma = [](int n, const ParamPoint& th) {
      return Rational(n) / (th.get(Sym::c) - 1);
    };
    b0.table_dsq_ratio = [](int n, const ParamPoint& th) {
      const Rational be = th.get(Sym::beta), c = th.get(Sym::c);
      return Rational(n) / (c * (be + n - 1));
    };
    Branch b1;  // c^n M_n normalization, root -beta of phi*(x) = c(x+beta)
    b1.doc =
        "normalized at root -beta of phi*(x) = c(x+beta); M_n(-beta) = 1/c^n, "
        "so the normalized sequence is c^n M_n (second table row)";
    b1.root_from_pearson = true;
    b1.root = [](const ParamPoint& th) { return -th.get(Sym::beta); };
    b1.value_at_root = [](int n, const ParamPoint& th) {
      return kOne / th.get(Sym::c).pow(n);
    };
    b1.alpha = [](int n, const ParamPoint& th) {
      const Rational be = th.get(Sym::beta), c = th.get(Sym::c);
      return (be + n) / (c - 1);
    };
    b1.gamma = [](int n, const ParamPoint& th) {
      const Rational c = th.get(Sym::c);
      return Rational(n) * c / (c - 1);
    };
    b1.beta = [b1](int n, const ParamPoint& th) {
      return -th.get(Sym::beta) - b1.alpha(n, th) - b1.gamma(n, th);
    };
    b1.table_dsq_ratio = [](int n, const ParamPoint& th) {
      const Rational be = th.get(Sym::beta), c = th.get(Sym::c);
      return Rational(n) * c / (be + n - 1);
    };
    s.branches = {b0, b1};
    s.valid = [](const ParamPoint& th, int nrange) {
      const Rational be = th.get(Sym::beta), c = th.get(Sym::c);
      if (c.is_zero() || c == kOne) return false;
      if (be.is_zero()) return false;
      return alpha_ok(be - 1, nrange + 3);  // beta not in {0,-1,-2,...}
    };
    s.phi = [](const ParamPoint&) { return Poly::x(); };
    s.phi_star = [](const ParamPoint& th) {
      const Rational be = th.get(Sym::beta), c = th.get(Sym::c);
      return Poly({c * be, c});
    };
    s.psi = [](const ParamPoint& th) {
      const Rational be = th.get(Sym::beta), c = th.get(Sym::c);
      return Poly({c * be, c - 1});
    };
    s.psi_star = s.psi;
    s.phi_text = "x";
    s.phi_star_text = "c(x+beta)";
    s.psi_text = "(c-1)x + c beta";
    s.psi_star_text = "(c-1)x + c beta";
    s.table_formulas = {
        {"alpha_n (row 1)", "c(n+beta)/(c-1)"},
        {"beta_n (row 1)", "-(n+c(n+beta))/(c-1)"},
        {"gamma_n (row 1)", "n/(c-1)"},
        {"d_n^2 (row 1)", "n! Gamma(beta)/(Gamma(beta+n) c^n)"},
        {"alpha_n (row 2)", "(n+beta)/(c-1)"},
        {"beta_n (row 2)", "-beta-alpha_n-gamma_n"},
        {"gamma_n (row 2)", "n c/(c-1)"},
        {"d_n^2 (row 2)", "n! Gamma(beta) c^n/Gamma(beta+n)"}};
    s.notes =
        "Row 1 pairs with the hypergeometric normalization (value 1 at 0); "
        "row 2 with the sequence c^n M_n (value 1 at -beta).";
    specs_.push_back(std::move(s));
  }

  // ---------------------------------------------------------- big q-Laguerre
  {
    FamilySpec s;
    s.id = FamilyId::bqL;
    s.key = "bqL";
    s.name = "big q-Laguerre";
    s.params = {Sym::a, Sym::b, Sym::q};
    s.var = "x";
    s.standard = [](int n, const ParamPoint& th) {
      const Rational a = th.get(Sym::a), b = th.get(Sym::b), q = th.get(Sym::q);
      auto spec = SeriesSpec::basic(
          {Poly(qpow(q, -n)), Poly(Rational(0)), Poly::x()}, {a * q, b * q}, q,
          Poly(q), n);
      return hyper_sum(spec);
    };
    Branch b;
    b.doc = "normalized at the root 1 of phi*(x) = a b q (1-x); p_n(1) = 1";
    b.root_from_pearson = true;
    b.root = [](const ParamPoint&) { return Rational(1); };
    b.value_at_root = [](int, const ParamPoint&) { return Rational(1); };
    b.alpha = [](int n, const ParamPoint& th) {
      const Rational a = th.get(Sym::a), bb = th.get(Sym::b), q = th.get(Sym::q);
      const Rational qn1 = qpow(q, n + 1);
      return (kOne - a * qn1) * (kOne - bb * qn1);
    };
    b.gamma = [](int n, const ParamPoint& th) {
      const Rational a = th.get(Sym::a), bb = th.get(Sym::b), q = th.get(Sym::q);
      return a * bb * qpow(q, n + 1) * (qpow(q, n) - 1);
    };
    b.beta = [b](int n, const ParamPoint& th) {
      return kOne - b.alpha(n, th) - b.gamma(n, th);
    };
    b.table_dsq_ratio = [](int n, const ParamPoint& th) {
      const Rational a = th.get(Sym::a), bb = th.get(Sym::b), q = th.get(Sym::q);
      const Rational qn = qpow(q, n);
      return a * bb * q * qn * (qn - 1) / ((kOne - a * qn) * (kOne - bb * qn));
    };
    s.branches = {b};
    s.valid = [](const ParamPoint& th, int nrange) {
      const Rational a = th.get(Sym::a), bb = th.get(Sym::b), q = th.get(Sym::q);
      if (!q_ok(q) || a.is_zero() || bb.is_zero()) return false;
      return no_unit_qpow(a, q, nrange + 3) && no_unit_qpow(bb, q, nrange + 3);
    };
    s.phi = [](const ParamPoint& th) {
      const Rational a = th.get(Sym::a), b2 = th.get(Sym::b), q = th.get(Sym::q);
      return Poly({a * q, Rational(-1)}) * Poly({b2 * q, Rational(-1)});
    };
    s.phi_star = [](const ParamPoint& th) {
      const Rational a = th.get(Sym::a), b2 = th.get(Sym::b), q = th.get(Sym::q);
      return a * b2 * q * Poly({Rational(1), Rational(-1)});
    };
    s.phi_text = "(x-aq)(x-bq)";
    s.phi_star_text = "a b q (1-x)";
    s.table_formulas = {
        {"alpha_n", "(1-a q^(n+1))(1-b q^(n+1))"},
        {"beta_n", "1-alpha_n-gamma_n"},
        {"gamma_n", "a b q^(n+1)(q^n-1)"},
        {"d_n^2", "(q^-1;q^-1)_n q^n / (a^-1 q^-1, b^-1 q^-1; q^-1)_n"}};
    specs_.push_back(std::move(s));
  }

  // --------------------------------------------------------------- q-Meixner
  {
    FamilySpec s;
    s.id = FamilyId::qM;
    s.key = "qM";
    s.name = "q-Meixner";
    s.params = {Sym::b, Sym::c, Sym::q};
    s.var = "y";  // y = q^{-x}
    s.standard = [](int n, const ParamPoint& th) {
      const Rational b = th.get(Sym::b), c = th.get(Sym::c), q = th.get(Sym::q);
      auto spec = SeriesSpec::basic({Poly(qpow(q, -n)), Poly::x()}, {b * q}, q,
                                    Poly(-qpow(q, n + 1) / c), n);
      return hyper_sum(spec);
    };
    Branch b;
    b.doc =
        "normalized at y = b q, the recurrence constant; M_n(bq) = (-q/c;q)_n "
        "(no Pearson polynomial is registered for this family)";
    b.root_from_pearson = false;
    b.root = [](const ParamPoint& th) {
      return th.get(Sym::b) * th.get(Sym::q);
    };
    b.value_at_root = [](int n, const ParamPoint& th) {
      return qpochhammer(-th.get(Sym::q) / th.get(Sym::c), th.get(Sym::q), n);
    };
    b.alpha = [](int n, const ParamPoint& th) {
      const Rational bb = th.get(Sym::b), c = th.get(Sym::c), q = th.get(Sym::q);
      const Rational qn1 = qpow(q, n + 1);
      return (c + qn1) * (bb * qn1 - 1) / qpow(q, 2 * n + 1);
    };
    b.gamma = [](int n, const ParamPoint& th) {
      const Rational c = th.get(Sym::c), q = th.get(Sym::q);
      return c * q * (qpow(q, n) - 1) / qpow(q, 2 * n + 1);
    };
    b.beta = [b](int n, const ParamPoint& th) {
      return th.get(Sym::b) * th.get(Sym::q) - b.alpha(n, th) - b.gamma(n, th);
    };
    b.table_dsq_ratio = [](int n, const ParamPoint& th) {
      const Rational bb = th.get(Sym::b), c = th.get(Sym::c), q = th.get(Sym::q);
      const Rational qn = qpow(q, n);
      return c * (kOne - qn) / (q * (c + qn) * (kOne - bb * qn));
    };
    s.branches = {b};
    s.valid = [](const ParamPoint& th, int nrange) {
      const Rational bb = th.get(Sym::b), c = th.get(Sym::c), q = th.get(Sym::q);
      if (!q_ok(q) || bb.is_zero() || c.is_zero()) return false;
      return no_unit_qpow(bb, q, nrange + 3) && no_neg_qpow(c, q, nrange + 3);
    };
    s.table_formulas = {
        {"alpha_n", "(c+q^(n+1))(b q^(n+1)-1)/q^(2n+1)"},
        {"beta_n", "b q - alpha_n - gamma_n"},
        {"gamma_n", "c q(q^n-1)/q^(2n+1)"},
        {"d_n^2", "(q;q)_n/((bq, -q/c; q)_n q^n)"}};
    specs_.push_back(std::move(s));
  }

  // ------------------------------------------------------- little q-Laguerre
  {
    FamilySpec s;
    s.id = FamilyId::lqL;
    s.key = "lqL";
    s.name = "little q-Laguerre/Wall";
    s.params = {Sym::a, Sym::q};
    s.var = "x";
    s.standard = [](int n, const ParamPoint& th) {
      const Rational a = th.get(Sym::a), q = th.get(Sym::q);
      auto spec =
          SeriesSpec::basic({Poly(qpow(q, -n)), Poly(Rational(0))}, {a * q}, q,
                            Poly::monomial(q, 1), n);
      return hyper_sum(spec);
    };
    Branch b;
    b.doc = "normalized at the root 0 of phi*(x) = a x; p_n(0) = 1";
    b.root_from_pearson = true;
    b.root = [](const ParamPoint&) { return Rational(0); };
    b.value_at_root = [](int, const ParamPoint&) { return Rational(1); };
    b.alpha = [](int n, const ParamPoint& th) {
      const Rational a = th.get(Sym::a), q = th.get(Sym::q);
      return qpow(q, n) * (a * qpow(q, n + 1) - 1);
    };
    b.gamma = [](int n, const ParamPoint& th) {
      const Rational a = th.get(Sym::a), q = th.get(Sym::q);
      return a * qpow(q, n) * (qpow(q, n) - 1);
    };
    b.beta = [b](int n, const ParamPoint& th) {
      return -b.alpha(n, th) - b.gamma(n, th);
    };
    b.table_dsq_ratio = [](int n, const ParamPoint& th) {
      const Rational a = th.get(Sym::a), q = th.get(Sym::q);
      const Rational qn = qpow(q, n);
      return a * q * (kOne - qn) / (kOne - a * qn);
    };
    s.branches = {b};
    s.valid = [](const ParamPoint& th, int nrange) {
      const Rational a = th.get(Sym::a), q = th.get(Sym::q);
      if (!q_ok(q) || a.is_zero()) return false;
      return no_unit_qpow(a, q, nrange + 3);
    };
    s.phi = [](const ParamPoint&) {
      return Poly({Rational(0), Rational(1), Rational(-1)});  // (1-x)x
    };
    s.phi_star = [](const ParamPoint& th) {
      return Poly::monomial(th.get(Sym::a), 1);
    };
    s.psi = [](const ParamPoint& th) {
      const Rational a = th.get(Sym::a), q = th.get(Sym::q);
      return Poly({(a - 1) / (q - 1), kOne / (q - 1)});
    };
    s.psi_star = [s](const ParamPoint& th) {
      return th.get(Sym::q) * s.psi(th);
    };
    s.phi_text = "(1-x)x";
    s.phi_star_text = "a x";
    s.psi_text = "(a-1+x)/(q-1)";
    s.psi_star_text = "q(a-1+x)/(q-1)";
    s.table_formulas = {{"alpha_n", "q^n(a q^(n+1)-1)"},
                        {"beta_n", "-alpha_n-gamma_n"},
                        {"gamma_n", "a q^n(q^n-1)"},
                        {"d_n^2", "(q;q)_n a^n q^n/(aq;q)_n"}};
    specs_.push_back(std::move(s));
  }

  // -------------------------------------------------------------- q-Laguerre
  {
    FamilySpec s;
    s.id = FamilyId::qL;
    s.key = "qL";
    s.name = "q-Laguerre";
    s.params = {Sym::alpha, Sym::q};
    s.var = "x";
    s.standard = [](int n, const ParamPoint& th) {
      // alpha slot stores t = q^alpha as a free rational.
      const Rational t = th.get(Sym::alpha), q = th.get(Sym::q);
      auto spec = SeriesSpec::basic({Poly(qpow(q, -n))}, {q * t}, q,
                                    Poly::monomial(-qpow(q, n + 1) * t, 1), n);
      return (qpochhammer(q * t, q, n) / qpochhammer(q, q, n)) * hyper_sum(spec);
    };
    Branch b;
    b.doc =
        "normalized at 0, the recurrence constant; L_n(0) = (qt;q)_n/(q;q)_n "
        "with t = q^alpha (no Pearson polynomial is registered)";
    b.root_from_pearson = false;
    b.root = [](const ParamPoint&) { return Rational(0); };
    b.value_at_root = [](int n, const ParamPoint& th) {
      const Rational t = th.get(Sym::alpha), q = th.get(Sym::q);
      return qpochhammer(q * t, q, n) / qpochhammer(q, q, n);
    };
    b.alpha = [](int n, const ParamPoint& th) {
      const Rational t = th.get(Sym::alpha), q = th.get(Sym::q);
      return (qpow(q, n + 1) * t - 1) / (qpow(q, 2 * n + 1) * t);
    };
    b.gamma = [](int n, const ParamPoint& th) {
      const Rational t = th.get(Sym::alpha), q = th.get(Sym::q);
      return q * (qpow(q, n) - 1) / (qpow(q, 2 * n + 1) * t);
    };
    b.beta = [b](int n, const ParamPoint& th) {
      return -b.alpha(n, th) - b.gamma(n, th);
    };
    b.table_dsq_ratio = [](int n, const ParamPoint& th) {
      const Rational t = th.get(Sym::alpha), q = th.get(Sym::q);
      const Rational qn = qpow(q, n);
      return (kOne - qn) / (q * (kOne - t * qn));
    };
    s.branches = {b};
    s.valid = [](const ParamPoint& th, int nrange) {
      const Rational t = th.get(Sym::alpha), q = th.get(Sym::q);
      if (!q_ok(q) || t.is_zero()) return false;
      return no_unit_qpow(t, q, nrange + 3);
    };
    s.notes = "The alpha parameter stores t = q^alpha as a free rational.";
    s.table_formulas = {{"alpha_n", "(q^(n+1+alpha)-1)/q^(2n+1+alpha)"},
                        {"beta_n", "-alpha_n-gamma_n"},
                        {"gamma_n", "q(q^n-1)/q^(2n+alpha+1)"},
                        {"d_n^2", "(q;q)_n/((q^(alpha+1);q)_n q^n)"}};
    specs_.push_back(std::move(s));
  }

  // -------------------------------------------------------------- q-Charlier
  {
    FamilySpec s;
    s.id = FamilyId::qC;
    s.key = "qC";
    s.name = "q-Charlier";
    s.params = {Sym::a, Sym::q};
    s.var = "y";
    s.standard = [](int n, const ParamPoint& th) {
      const Rational a = th.get(Sym::a), q = th.get(Sym::q);
      auto spec = SeriesSpec::basic({Poly(qpow(q, -n)), Poly::x()},
                                    {Rational(0)}, q, Poly(-qpow(q, n + 1) / a),
                                    n);
      return hyper_sum(spec);
    };
    Branch b;
    b.doc =
        "normalized at 0, the recurrence constant; C_n(0) = (-q/a;q)_n "
        "(no Pearson polynomial is registered)";
    b.root_from_pearson = false;
    b.root = [](const ParamPoint&) { return Rational(0); };
    b.value_at_root = [](int n, const ParamPoint& th) {
      return qpochhammer(-th.get(Sym::q) / th.get(Sym::a), th.get(Sym::q), n);
    };
    b.alpha = [](int n, const ParamPoint& th) {
      const Rational a = th.get(Sym::a), q = th.get(Sym::q);
      return -(a + qpow(q, n + 1)) / qpow(q, 2 * n + 1);
    };
    b.gamma = [](int n, const ParamPoint& th) {
      const Rational a = th.get(Sym::a), q = th.get(Sym::q);
      return a * q * (qpow(q, n) - 1) / qpow(q, 2 * n + 1);
    };
    b.beta = [b](int n, const ParamPoint& th) {
      return -b.alpha(n, th) - b.gamma(n, th);
    };
    b.table_dsq_ratio = [](int n, const ParamPoint& th) {
      const Rational a = th.get(Sym::a), q = th.get(Sym::q);
      const Rational qn = qpow(q, n);
      return a * (kOne - qn) / (q * (a + qn));
    };
    s.branches = {b};
    s.valid = [](const ParamPoint& th, int nrange) {
      const Rational a = th.get(Sym::a), q = th.get(Sym::q);
      if (!q_ok(q) || a.is_zero()) return false;
      return no_neg_qpow(a, q, nrange + 3);
    };
    s.table_formulas = {{"alpha_n", "-(a+q^(n+1))/q^(2n+1)"},
                        {"beta_n", "-alpha_n-gamma_n"},
                        {"gamma_n", "a q(q^n-1)/q^(2n+1)"},
                        {"d_n^2", "(q;q)_n/((-q/a;q)_n q^n)"}};
    specs_.push_back(std::move(s));
  }

  // ------------------------------------------------------- 0-Laguerre/Bessel
  {
    FamilySpec s;
    s.id = FamilyId::ZLB;
    s.key = "0LB";
    s.name = "0-Laguerre/Bessel";
    s.params = {Sym::a, Sym::q};
    s.var = "x";
    s.standard = [](int n, const ParamPoint& th) {
      const Rational a = th.get(Sym::a), q = th.get(Sym::q);
      auto spec = SeriesSpec::basic({Poly(qpow(q, -n)), Poly(Rational(0))}, {},
                                    q, Poly::monomial(-kOne / a, 1), n);
      return hyper_sum(spec);
    };
    Branch b;
    b.doc = "normalized at 0, the recurrence constant; l_n(0;a) = 1";
    b.root_from_pearson = false;
    b.root = [](const ParamPoint&) { return Rational(0); };
    b.value_at_root = [](int, const ParamPoint&) { return Rational(1); };
    b.alpha = [](int n, const ParamPoint& th) {
      return -th.get(Sym::a) * qpow(th.get(Sym::q), 2 * n + 1);
    };
    b.gamma = [](int n, const ParamPoint& th) {
      const Rational a = th.get(Sym::a), q = th.get(Sym::q);
      return -a * qpow(q, n) * (qpow(q, n) - 1);
    };
    b.beta = [b](int n, const ParamPoint& th) {
      return -b.alpha(n, th) - b.gamma(n, th);
    };
    b.table_dsq_ratio = [](int n, const ParamPoint& th) {
      const Rational a = th.get(Sym::a), q = th.get(Sym::q);
      const Rational qn = qpow(q, n);
      return a * q * (kOne - qn) / (kOne - a * qn);
    };
    b.dsq_ratio_consistent = false;  // printed column does not match gamma_n/alpha_{n-1}
    s.branches = {b};
    s.valid = [](const ParamPoint& th, int nrange) {
      const Rational a = th.get(Sym::a), q = th.get(Sym::q);
      if (!q_ok(q) || a.is_zero()) return false;
      return no_unit_qpow(a, q, nrange + 3);
    };
    s.table_formulas = {
        {"alpha_n", "-a q^(2n+1)"},
        {"beta_n", "-alpha_n-gamma_n"},
        {"gamma_n", "-a q^n(q^n-1)"},
        {"d_n^2", "(q;q)_n a^n q^n/(aq;q)_n  [printed; see notes]"}};
    s.notes =
        "The printed squared-norm column for this family is not consistent "
        "with gamma_n/alpha_{n-1}; the library exposes only the ratio route.";
    specs_.push_back(std::move(s));
  }

  // --------------------------------------------------------- Stieltjes-Wigert
  {
    FamilySpec s;
    s.id = FamilyId::SW;
    s.key = "SW";
    s.name = "Stieltjes-Wigert";
    s.params = {Sym::q};
    s.var = "x";
    s.standard = [](int n, const ParamPoint& th) {
      const Rational q = th.get(Sym::q);
      auto spec = SeriesSpec::basic({Poly(qpow(q, -n))}, {Rational(0)}, q,
                                    Poly::monomial(-qpow(q, n + 1), 1), n);
      return hyper_sum(spec);
    };
    Branch b;
    b.doc = "normalized at the root 0 of phi*(x) = x; S_n(0) = 1";
    b.root_from_pearson = true;
    b.root = [](const ParamPoint&) { return Rational(0); };
    b.value_at_root = [](int, const ParamPoint&) { return Rational(1); };
    b.alpha = [](int n, const ParamPoint& th) {
      return -kOne / qpow(th.get(Sym::q), 2 * n + 1);
    };
    b.gamma = [](int n, const ParamPoint& th) {
      const Rational q = th.get(Sym::q);
      return q * (qpow(q, n) - 1) / qpow(q, 2 * n + 1);
    };
    b.beta = [b](int n, const ParamPoint& th) {
      return -b.alpha(n, th) - b.gamma(n, th);
    };
    b.table_dsq_ratio = [](int n, const ParamPoint& th) {
      const Rational q = th.get(Sym::q);
      return (kOne - qpow(q, n)) / q;
    };
    s.branches = {b};
    s.valid = [](const ParamPoint& th, int) { return q_ok(th.get(Sym::q)); };
    s.phi = [](const ParamPoint&) { return Poly::monomial(kOne, 2); };
    s.phi_star = [](const ParamPoint&) { return Poly::x(); };
    s.psi = [](const ParamPoint& th) {
      const Rational q = th.get(Sym::q);
      return Poly({kOne / (q - 1), -kOne / (q - 1)});
    };
    s.psi_star = [s](const ParamPoint& th) {
      return th.get(Sym::q) * s.psi(th);
    };
    s.phi_text = "x^2";
    s.phi_star_text = "x";
    s.psi_text = "(1-x)/(q-1)";
    s.psi_star_text = "q(1-x)/(q-1)";
    s.table_formulas = {{"alpha_n", "-1/q^(2n+1)"},
                        {"beta_n", "-alpha_n-gamma_n"},
                        {"gamma_n", "q(q^n-1)/q^(2n+1)"},
                        {"d_n^2", "(q;q)_n/q^n"}};
    specs_.push_back(std::move(s));
  }

  // Relation map edges (limits in black, particular cases in gray in the
  // usual constellation picture).
  edges_ = {
      {"bqL", "L", "limit", false, ""},
      {"lqL", "L", "limit", false, ""},
      {"qL", "L", "limit", false, ""},
      {"qM", "M", "limit", false, ""},
      {"lqL", "C", "limit", false, ""},
      {"qL", "C", "limit", false, ""},
      {"qC", "C", "limit", false, ""},
      {"bqL", "lqL", "limit", false, ""},
      {"qL", "SW", "limit", false, ""},
      {"qC", "SW", "limit", false, ""},
      {"M", "L", "limit", false, ""},
      {"M", "C", "limit", false, ""},
      {"qC", "qM", "particular", false, ""},
      {"bqL", "qM", "particular", true, "rel.eq4.1"},
      {"lqL", "qL", "particular", true, "rel.eq4.2"},
      {"qL", "qC", "particular", true, "rel.eq4.3"},
      {"0LB", "SW", "particular", true, "rel.eq4.4"},
  };
}

std::string relation_key(RelationId r) {
  switch (r) {
    case RelationId::Eq41: return "rel.eq4.1";
    case RelationId::Eq42: return "rel.eq4.2";
    case RelationId::Eq43: return "rel.eq4.3";
    case RelationId::Eq44: return "rel.eq4.4";
  }
  return "?";
}

std::vector<Sym> relation_params(RelationId r) {
  switch (r) {
    case RelationId::Eq41: return {Sym::a, Sym::b, Sym::q};
    case RelationId::Eq42: return {Sym::alpha, Sym::q};
    case RelationId::Eq43: return {Sym::alpha, Sym::q};
    case RelationId::Eq44: return {Sym::a, Sym::q};
  }
  return {};
}

bool relation_theta_valid(RelationId r, const ParamPoint& th, int nrange) {
  const auto& reg = Registry::instance();
  switch (r) {
    case RelationId::Eq41: {
      const Rational a = th.get(Sym::a), b = th.get(Sym::b), q = th.get(Sym::q);
      if (!q_ok(q) || a.is_zero() || b.is_zero()) return false;
      ParamPoint lhs = th.with(Sym::q, kOne / q);
      ParamPoint rhs;
      rhs.set(Sym::b, kOne / a).set(Sym::c, -b).set(Sym::q, q);
      // The prefactor (q/b;q)_n must not vanish.
      if (!no_unit_qpow(kOne / b, q, nrange + 1)) return false;
      return reg.valid(FamilyId::bqL, lhs, nrange) &&
             reg.valid(FamilyId::qM, rhs, nrange);
    }
    case RelationId::Eq42: {
      const Rational t = th.get(Sym::alpha), q = th.get(Sym::q);
      if (!q_ok(q) || t.is_zero()) return false;
      ParamPoint lhs;
      lhs.set(Sym::a, kOne / t).set(Sym::q, kOne / q);
      ParamPoint rhs;
      rhs.set(Sym::alpha, t).set(Sym::q, q);
      return reg.valid(FamilyId::lqL, lhs, nrange) &&
             reg.valid(FamilyId::qL, rhs, nrange);
    }
    case RelationId::Eq43: {
      const Rational t = th.get(Sym::alpha), q = th.get(Sym::q);
      if (!q_ok(q) || t.is_zero()) return false;
      ParamPoint lhs;
      lhs.set(Sym::alpha, t).set(Sym::q, q);
      ParamPoint rhs;
      rhs.set(Sym::a, -kOne / t).set(Sym::q, q);
      return reg.valid(FamilyId::qL, lhs, nrange) &&
             reg.valid(FamilyId::qC, rhs, nrange);
    }
    case RelationId::Eq44: {
      const Rational a = th.get(Sym::a), q = th.get(Sym::q);
      if (!q_ok(q) || a.is_zero()) return false;
      ParamPoint lhs;
      lhs.set(Sym::q, kOne / q);
      ParamPoint rhs = th;
      return reg.valid(FamilyId::SW, lhs, nrange) &&
             reg.valid(FamilyId::ZLB, rhs, nrange);
    }
  }
  return false;
}

std::pair<Poly, Poly> related_poly(RelationId r, int n, const ParamPoint& th) {
  const auto& reg = Registry::instance();
  switch (r) {
    case RelationId::Eq41: {
      // p_n(x; a, b, 1/q) = M_n(xq/a; 1/a, -b; q) / (q/b; q)_n
      const Rational a = th.get(Sym::a), b = th.get(Sym::b), q = th.get(Sym::q);
      Poly lhs = reg.standard(FamilyId::bqL, n, th.with(Sym::q, kOne / q));
      ParamPoint qm;
      qm.set(Sym::b, kOne / a).set(Sym::c, -b).set(Sym::q, q);
      Poly m = reg.standard(FamilyId::qM, n, qm).subst_affine(q / a, Rational(0));
      Poly rhs = m.scale_div(qpochhammer(q / b, q, n));
      return {lhs, rhs};
    }
    case RelationId::Eq42: {
      // p_n(x; q^alpha | 1/q) = (q;q)_n/(q^(alpha+1);q)_n L_n^(alpha)(-x; q),
      // with t = q^alpha free and the left side taking its parameter in the
      // base 1/q, i.e. a = t^{-1}.
      const Rational t = th.get(Sym::alpha), q = th.get(Sym::q);
      ParamPoint lql;
      lql.set(Sym::a, kOne / t).set(Sym::q, kOne / q);
      Poly lhs = reg.standard(FamilyId::lqL, n, lql);
      ParamPoint ql;
      ql.set(Sym::alpha, t).set(Sym::q, q);
      Poly rhs = reg.standard(FamilyId::qL, n, ql)
                     .subst_affine(Rational(-1), Rational(0));
      rhs = (qpochhammer(q, q, n) / qpochhammer(q * t, q, n)) * rhs;
      return {lhs, rhs};
    }
    case RelationId::Eq43: {
      // L_n^(alpha)(x;q) = C_n(-x; -q^(-alpha); q) / (q;q)_n
      const Rational t = th.get(Sym::alpha), q = th.get(Sym::q);
      ParamPoint ql;
      ql.set(Sym::alpha, t).set(Sym::q, q);
      Poly lhs = reg.standard(FamilyId::qL, n, ql);
      ParamPoint qc;
      qc.set(Sym::a, -kOne / t).set(Sym::q, q);
      Poly rhs = reg.standard(FamilyId::qC, n, qc)
                     .subst_affine(Rational(-1), Rational(0))
                     .scale_div(qpochhammer(q, q, n));
      return {lhs, rhs};
    }
    case RelationId::Eq44: {
      // S_n(x/a, 1/q) = l_n(x; a)
      const Rational a = th.get(Sym::a), q = th.get(Sym::q);
      Poly lhs = reg.standard(FamilyId::SW, n, th.with(Sym::q, kOne / q))
                     .subst_affine(kOne / a, Rational(0));
      Poly rhs = reg.standard(FamilyId::ZLB, n, th);
      return {lhs, rhs};
    }
  }
  throw std::logic_error("related_poly: unknown relation");
}

}  // namespace lc
