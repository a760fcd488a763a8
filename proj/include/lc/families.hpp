#pragma once

#include <functional>
#include <optional>
#include <tuple>

#include "lc/hyperseries.hpp"
#include "lc/param.hpp"
#include "lc/poly.hpp"

namespace lc {

enum class FamilyId { L, C, M, bqL, qM, lqL, qL, qC, ZLB, SW };

std::string family_key(FamilyId f);                    // "L", "bqL", "0LB", ...
std::optional<FamilyId> family_from_key(const std::string& key);
std::vector<FamilyId> all_families();

/// One recurrence data set (one table row) tied to a normalization: the
/// sequence standard(n)/value_at_root(n) satisfies
///   x p_n = alpha_n p_{n+1} + beta_n p_n + gamma_n p_{n-1}
/// with these coefficients, and equals 1 at `root`.
struct Branch {
  std::string doc;
  /// True when the degree-1 Pearson polynomial whose root this is appears
  /// in the registry (phi or phi_star); false when the root is derived
  /// from the recurrence constant alone.
  bool root_from_pearson = false;
  std::function<Rational(const ParamPoint&)> root;
  std::function<Rational(int, const ParamPoint&)> value_at_root;
  std::function<Rational(int, const ParamPoint&)> alpha, beta, gamma;
  /// d_n^2/d_{n-1}^2 as implied by the printed squared-norm column, where
  /// that column is rational in the parameters.
  std::function<Rational(int, const ParamPoint&)> table_dsq_ratio;
  /// Whether the printed column agrees with gamma_n/alpha_{n-1}.
  bool dsq_ratio_consistent = true;
};

struct FamilySpec {
  FamilyId id;
  std::string key;
  std::string name;
  std::vector<Sym> params;
  std::string var;  // natural variable: "x", or "y" for q^{-x} lattices
  std::function<Poly(int, const ParamPoint&)> standard;
  std::vector<Branch> branches;
  std::function<bool(const ParamPoint&, int)> valid;  // (theta, n range)
  std::function<Poly(const ParamPoint&)> phi, phi_star, psi, psi_star;
  /// Formula renderings of the Pearson data, for the registry dump.
  std::string phi_text, phi_star_text, psi_text, psi_star_text;
  std::vector<std::pair<std::string, std::string>> table_formulas;
  std::string notes;
};

struct FamilyEdge {
  std::string from, to;
  std::string type;  // "limit" or "particular"
  bool bidirectional = false;
  std::string relation_id;  // e.g. "rel.eq4.1" when an exact relation backs it
};

class Registry {
 public:
  static const Registry& instance();

  const FamilySpec& spec(FamilyId f) const;
  const std::vector<FamilyEdge>& edges() const { return edges_; }

  /// Standard-normalization member; n < 0 yields the zero polynomial.
  Poly standard(FamilyId f, int n, const ParamPoint& th) const;
  /// Root-normalized member p_n / p_n(root) for the given branch.
  Poly normalized(FamilyId f, int branch, int n, const ParamPoint& th) const;

  std::tuple<Rational, Rational, Rational> recurrence_coeffs(
      FamilyId f, int branch, int n, const ParamPoint& th) const;

  /// gamma_n / alpha_{n-1} (= d_n^2/d_{n-1}^2 by the norm relation), n >= 1.
  Rational norm_ratio(FamilyId f, int branch, int n, const ParamPoint& th) const;

  bool valid(FamilyId f, const ParamPoint& th, int nrange) const;

  /// Seeded rejection sampling of a valid parameter point.
  ParamPoint sample(FamilyId f, Rng& rng, int nrange, long bound = 40) const;

 private:
  Registry();
  std::vector<FamilySpec> specs_;
  std::vector<FamilyEdge> edges_;
};

/// Both sides of one inter-family relation, as polynomials in the shared
/// variable, ready for exact comparison.
enum class RelationId { Eq41, Eq42, Eq43, Eq44 };
std::string relation_key(RelationId r);
std::pair<Poly, Poly> related_poly(RelationId r, int n, const ParamPoint& th);
bool relation_theta_valid(RelationId r, const ParamPoint& th, int nrange);
/// Parameters a relation samples over.
std::vector<Sym> relation_params(RelationId r);

}  // namespace lc
