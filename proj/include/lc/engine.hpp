#pragma once

#include <functional>
#include <optional>

#include "lc/families.hpp"

namespace lc {

struct GridSpec {
  int n_max = 12;
  int k_max = 4;
  int samples = 5;
  uint64_t seed = 0;
};

struct Failure {
  int n = 0;
  int k = 0;
  ParamPoint theta;
  Poly residual;  // lhs - rhs
};

struct Skip {
  int n = 0;
  int k = 0;
  std::string reason;
};

struct VerificationReport {
  std::string id;
  std::string source;  // identity tag plus a rendering of the statement
  std::string kind;
  GridSpec grid;
  int n_min = 0;
  bool uses_k = false;
  bool pass = false;
  bool quarantined = false;
  std::string erratum;
  std::vector<Failure> failures;
  std::vector<Skip> skipped;
  /// True for an entry that is expected to fail (quarantined) but passed.
  bool stale_quarantine = false;
};

/// One verifiable statement. `sides` produces the two cleared polynomial
/// sides for a grid point; nullopt skips the point (hypothesis excludes it).
struct Identity {
  std::string id;
  std::optional<FamilyId> family;  // none for rel.* entries
  std::string source;
  std::string kind;  // "printed", "corrected", "step", "helper", "derived", "relation"
  bool uses_k = false;
  int n_min = 0;
  int default_n_max = 12;
  /// Extra acceptance predicate on sampled parameter points (over and above
  /// family validity), e.g. shifted points must dodge the pole set.
  std::function<bool(const ParamPoint&, int)> theta_ok;
  /// Custom sampler when rational rejection sampling is not appropriate
  /// (e.g. a parameter that must be a small nonnegative integer).
  std::function<ParamPoint(Rng&, int)> sampler;
  std::function<std::optional<std::pair<Poly, Poly>>(int n, int k,
                                                     const ParamPoint&)>
      sides;
  /// Set when the statement fails as printed; the registry then carries the
  /// machine-readable erratum and the verifier expects the failure.
  bool quarantined = false;
  std::string erratum_note;
};

const std::vector<Identity>& identity_registry();
const Identity* find_identity(const std::string& id);

VerificationReport verify_identity(const Identity& ident, const GridSpec& grid);
VerificationReport verify_identity(const std::string& id, const GridSpec& grid);

/// Runs the registry in order; empty family_filter means everything.
std::vector<VerificationReport> verify_all(const std::string& family_filter,
                                           const GridSpec& grid);

/// Aggregate success: every entry passed or failed exactly as quarantined.
bool all_as_expected(const std::vector<VerificationReport>& reports);

// ------------------------------------------------------------------ generic
// Characterization checks run against registry data (and against perturbed
// copies as negative controls).

struct MembershipReport {
  FamilyId family;
  int branch = 0;
  ParamPoint theta;
  bool gamma0_zero = false;
  bool constant_sum = false;
  Rational constant;      // alpha_n + beta_n + gamma_n at n = 0
  int first_bad_n = -1;   // first n where the sum deviates (when !constant_sum)
  bool root_checked = false;
  bool root_matches = false;
  bool pass = false;
};

/// gamma_0 = 0 and the recurrence-coefficient sum is n-independent over
/// 0..n_max; where a Pearson-rooted branch is registered, the constant must
/// equal the registered root.
MembershipReport check_lc_membership(FamilyId f, int branch, const ParamPoint& th,
                                     int n_max);

/// Negative-control variant: gamma_n replaced by gamma_n + 1 for n >= 1.
MembershipReport check_lc_membership_perturbed(FamilyId f, int branch,
                                               const ParamPoint& th, int n_max);

enum class SLForm { SL1, SL2 };

/// (x - c) p_n = alpha_n Delta_n p_n - gamma_n Delta_n p_{n-1}, on the
/// root-normalized sequence.
bool check_structure_relation(FamilyId f, int branch, int n, const ParamPoint& th,
                              Poly* residual = nullptr);

/// The self-adjoint rewritings with all squared-norm ratios realized through
/// gamma_n/alpha_{n-1}:
///   SL1: (x-c) p_n = (gamma_{n+1}/rho_{n+1}) Delta_n p_n - gamma_n Nabla_n p_n
///   SL2: (x-c) p_n = alpha_n Delta_n p_n - rho_n alpha_{n-1} Nabla_n p_n
/// with the n = 0 backward term dropped (1/d_{-1}^2 = 0).
bool check_sturm_liouville(FamilyId f, int branch, int n, const ParamPoint& th,
                           SLForm form, Poly* residual = nullptr);

/// Rebuilds the normalized sequence from p_0, p_1 and the table recurrence.
Poly recurrence_forward(FamilyId f, int branch, int n, const ParamPoint& th);

/// Single operator-ladder step reconstruction of the standard member, for
/// the families with a verified one-step identity. Returns nullopt where no
/// step applies.
std::optional<Poly> rodrigues_step_reconstruction(FamilyId f, int n,
                                                  const ParamPoint& th);

}  // namespace lc
