#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lc {

using Int = mpz_class;

/// Exact rational scalar, always kept in lowest terms with positive
/// denominator. All library arithmetic is exact; there is no floating
/// point anywhere in the value path.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(int n) : v_(n) {}   // NOLINT
  Rational(const Int& n) : v_(n) {}
  Rational(const Int& num, const Int& den);
  Rational(long num, long den);

  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "7", "-7", "22/7", "-2/3". Throws std::invalid_argument on
  /// malformed input or zero denominator.
  static Rational from_string(const std::string& s);

  const mpq_class& raw() const { return v_; }
  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  /// Nonnegative-integer test, used for pole screening.
  bool is_nonneg_int() const { return is_integer() && sgn(v_) >= 0; }

  long to_long() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  /// Integer power; e may be negative (requires nonzero base).
  Rational pow(long e) const;

  /// Serializes as "num/den", with "/den" omitted when den == 1.
  std::string str() const;

 private:
  mpq_class v_;
};

/// Rising factorial (a)_n = a(a+1)...(a+n-1); empty product for n = 0.
Rational pochhammer(const Rational& a, int n);

/// q-shifted factorial (a;q)_n = (1-a)(1-aq)...(1-aq^{n-1}); 1 for n = 0.
Rational qpochhammer(const Rational& a, const Rational& q, int n);

/// Binomial coefficient as an exact rational (n >= 0, 0 <= k <= n).
Rational binomial(int n, int k);

Rational factorial(int n);

}  // namespace lc
