#pragma once

#include <functional>

#include "lc/poly.hpp"

namespace lc {

/// Polynomial in x whose coefficients are exact polynomials in one scalar
/// parameter u. Built by Lagrange interpolation through exact sample
/// points; supports d/du and multiplication by polynomials in u, which is
/// what the parameter-derivative identities need.
class BiPoly {
 public:
  BiPoly() = default;

  /// Interpolates u -> f(u) through the given nodes. The x-coefficients of
  /// f must be genuine polynomials in u of degree < nodes.size(); one node
  /// beyond the claimed degree bound is used to cross-check the fit.
  static BiPoly interpolate(const std::function<Poly(const Rational&)>& f,
                            const std::vector<Rational>& nodes);

  BiPoly d_du() const;
  BiPoly mul_upoly(const Poly& g) const;
  Poly eval_u(const Rational& u0) const;
  int u_degree() const;

 private:
  std::vector<Poly> cu_;  // cu_[k] = coefficient of x^k, a polynomial in u
};

/// Exact interpolation of scalar data (u_i, v_i) -> polynomial in u.
Poly lagrange_interpolate(const std::vector<Rational>& us,
                          const std::vector<Rational>& vs);

}  // namespace lc
