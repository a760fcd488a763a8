#include "lc/rational.hpp"

namespace lc {

Rational::Rational(const Int& num, const Int& den) : v_(num, den) {
  if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Int(s));
    }
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (sgn(d) == 0) throw std::invalid_argument("Rational: zero denominator");
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw std::domain_error("Rational: not a machine integer");
  return v_.get_num().get_si();
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("Rational: negative power of zero");
    return Rational(0);
  }
  mpz_class n = v_.get_num(), d = v_.get_den();
  unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class np, dp;
  mpz_pow_ui(np.get_mpz_t(), n.get_mpz_t(), ae);
  mpz_pow_ui(dp.get_mpz_t(), d.get_mpz_t(), ae);
  if (e < 0) std::swap(np, dp);
  return Rational(np, dp);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational pochhammer(const Rational& a, int n) {
  Rational r(1);
  Rational f = a;
  for (int i = 0; i < n; ++i) {
    r *= f;
    f += Rational(1);
  }
  return r;
}

Rational qpochhammer(const Rational& a, const Rational& q, int n) {
  Rational r(1);
  Rational aq = a;
  for (int i = 0; i < n; ++i) {
    r *= Rational(1) - aq;
    aq *= q;
  }
  return r;
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rational(Int(r));
}

Rational factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(Int(r));
}

}  // namespace lc
