#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "lc/rational.hpp"

namespace lc {

/// Closed symbol set for family parameters. For the q-Laguerre family the
/// alpha slot stores t = q^alpha as a free rational (see families.cpp).
enum class Sym { alpha, a, b, beta, c, q };

std::string sym_name(Sym s);
std::optional<Sym> sym_from_name(const std::string& name);

/// Named exact-rational assignment to a family's parameters.
class ParamPoint {
 public:
  ParamPoint() = default;

  bool has(Sym s) const { return v_.count(s) > 0; }
  const Rational& get(Sym s) const;
  ParamPoint& set(Sym s, const Rational& r) {
    v_[s] = r;
    return *this;
  }
  /// Copy with one symbol replaced.
  ParamPoint with(Sym s, const Rational& r) const {
    ParamPoint p = *this;
    p.v_[s] = r;
    return p;
  }
  const std::map<Sym, Rational>& values() const { return v_; }
  std::string str() const;

 private:
  std::map<Sym, Rational> v_;
};

/// Deterministic 64-bit generator (splitmix64). All randomness in the
/// library flows through this from an explicit seed; no OS entropy.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}
  uint64_t next();
  /// Uniform in [lo, hi] inclusive.
  long next_in(long lo, long hi);
  /// Nonzero rational with |num| <= bound, 1 <= den <= bound.
  Rational next_rational(long bound = 40);

 private:
  uint64_t state_;
};

/// Stable string hash (FNV-1a) for deriving per-identity seeds.
uint64_t fnv1a(const std::string& s);

}  // namespace lc
