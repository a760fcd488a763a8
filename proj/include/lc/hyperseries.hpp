#pragma once

#include <vector>

#include "lc/poly.hpp"

namespace lc {

/// Terminating (basic) hypergeometric sum producing an exact polynomial.
/// Numerator parameters may be constant or linear in x; denominator
/// parameters are scalars; the argument is a constant or a monomial.
struct SeriesSpec {
  enum class Kind { Ordinary, Basic };

  std::vector<Poly> num_params;
  std::vector<Rational> den_params;
  Poly argument;
  Kind kind = Kind::Ordinary;
  Rational q = Rational(1);  // Basic only
  int terms = 0;             // sum runs k = 0..terms

  static SeriesSpec ordinary(std::vector<Poly> num, std::vector<Rational> den,
                             Poly arg, int terms);
  static SeriesSpec basic(std::vector<Poly> num, std::vector<Rational> den,
                          const Rational& q, Poly arg, int terms);
};

struct SeriesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Evaluates the truncated series exactly. Ordinary kind:
///   sum_k  prod (a_i)_k / prod (b_j)_k * z^k / k!.
/// Basic kind:
///   sum_k  prod (a_i;q)_k / ((q;q)_k prod (b_j;q)_k)
///          * ((-1)^k q^{binom(k,2)})^{1+s-r} * z^k,
/// where r and s count numerator/denominator parameters and the exponent
/// 1+s-r may be any integer (q is a nonzero rational).
/// Throws SeriesError when a denominator factor vanishes at some k <= terms
/// or q is 0 or 1 for the basic kind.
Poly hyper_sum(const SeriesSpec& spec);

/// Independent scalar-only summation path: requires all parameters and the
/// argument to be constants. Used as a cross-check oracle for hyper_sum.
Rational hyper_sum_scalar(const SeriesSpec& spec);

}  // namespace lc
