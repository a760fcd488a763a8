#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lc/rational.hpp"

namespace lc {

/// Dense univariate polynomial over Rational, coefficients stored by
/// ascending power. Canonical form: the coefficient vector is empty for
/// the zero polynomial and otherwise ends with a nonzero coefficient, so
/// exact equality is vector equality.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constant polynomial
  Poly(long c) : Poly(Rational(c)) {}
  Poly(int c) : Poly(Rational(c)) {}
  explicit Poly(std::vector<Rational> coeffs);

  static Poly x() { return monomial(Rational(1), 1); }
  static Poly monomial(const Rational& c, int deg);

  /// degree() of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  const std::vector<Rational>& coeffs() const { return c_; }
  /// Coefficient of x^k (zero beyond the stored range).
  Rational coeff(int k) const;
  Rational leading() const;
  Rational constant_term() const { return coeff(0); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& p);
  friend Poly operator*(const Poly& p, const Rational& s) { return s * p; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Exact division by a nonzero scalar.
  Poly scale_div(const Rational& s) const;

  /// Exact Horner evaluation.
  Rational eval(const Rational& x0) const;

  /// p(s*x + t), exactly.
  Poly subst_affine(const Rational& s, const Rational& t) const;

  /// Delta p(x) = p(x+1) - p(x).
  Poly forward_diff() const;
  /// Nabla p(x) = p(x) - p(x-1).
  Poly backward_diff() const;
  Poly derivative() const;

  /// Hahn operator D_q p(x) = (p(qx) - p(x)) / (x(q-1)), q != 1.
  /// The division is exact: coefficient k of the result is
  /// c_{k+1} (q^{k+1}-1)/(q-1).
  Poly q_derivative(const Rational& q) const;
  /// D_{1/q}, q not in {0,1}.
  Poly inverse_q_derivative(const Rational& q) const;

  /// Exact division by x^k; nullopt if any of the k low coefficients is
  /// nonzero.
  std::optional<Poly> div_exact_xpow(int k) const;

  /// Human-readable rendering, e.g. "1 - 2x + 1/2 x^2".
  std::string str(const std::string& var = "x") const;
  /// LaTeX rendering valid inside a math environment.
  std::string latex(const std::string& var = "x") const;
  /// Rational-string coefficient list by ascending power ("[]" for zero).
  std::vector<std::string> coeff_strings() const;
  static Poly from_coeff_strings(const std::vector<std::string>& v);

 private:
  void trim();
  std::vector<Rational> c_;
};

/// (p)_n = p(p+1)...(p+n-1) as an exact polynomial; 1 for n = 0.
Poly pochhammer_poly(const Poly& p, int n);

/// (p;q)_n = prod_{j=0}^{n-1} (1 - p q^j); 1 for n = 0.
Poly qpochhammer_poly(const Poly& p, const Rational& q, int n);

}  // namespace lc
