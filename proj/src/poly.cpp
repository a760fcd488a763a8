#include "lc/poly.hpp"

#include <sstream>

namespace lc {

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, int deg) {
  if (c.is_zero()) return Poly();
  std::vector<Rational> v(static_cast<size_t>(deg) + 1, Rational(0));
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(k)];
}

Rational Poly::leading() const {
  if (c_.empty()) return Rational(0);
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(v));
}

Poly operator*(const Rational& s, const Poly& p) {
  if (s.is_zero()) return Poly();
  Poly r = p;
  for (auto& c : r.c_) c *= s;
  return r;
}

Poly Poly::scale_div(const Rational& s) const {
  if (s.is_zero()) throw std::domain_error("Poly: division by zero scalar");
  Poly r = *this;
  for (auto& c : r.c_) c /= s;
  return r;
}

Rational Poly::eval(const Rational& x0) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x0 + *it;
  return r;
}

Poly Poly::subst_affine(const Rational& s, const Rational& t) const {
  // Horner in the substituted argument: r = r*(s x + t) + c_k.
  Poly arg({t, s});
  Poly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * arg + Poly(*it);
  return r;
}

Poly Poly::forward_diff() const { return subst_affine(Rational(1), Rational(1)) - *this; }

Poly Poly::backward_diff() const { return *this - subst_affine(Rational(1), Rational(-1)); }

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> v(c_.size() - 1, Rational(0));
  for (size_t k = 1; k < c_.size(); ++k) v[k - 1] = Rational(static_cast<long>(k)) * c_[k];
  return Poly(std::move(v));
}

Poly Poly::q_derivative(const Rational& q) const {
  if (q == Rational(1)) throw std::domain_error("q_derivative: q = 1");
  if (c_.size() <= 1) return Poly();
  const Rational qm1 = q - Rational(1);
  std::vector<Rational> v(c_.size() - 1, Rational(0));
  Rational qk = q;  // q^{k+1} for k = 0,1,...
  for (size_t k = 0; k + 1 < c_.size(); ++k) {
    v[k] = c_[k + 1] * (qk - Rational(1)) / qm1;  // c_{k+1} * [k+1]_q
    qk *= q;
  }
  return Poly(std::move(v));
}

Poly Poly::inverse_q_derivative(const Rational& q) const {
  if (q.is_zero() || q == Rational(1))
    throw std::domain_error("inverse_q_derivative: q in {0,1}");
  return q_derivative(Rational(1) / q);
}

std::optional<Poly> Poly::div_exact_xpow(int k) const {
  if (k == 0) return *this;
  if (is_zero()) return Poly();
  if (static_cast<int>(c_.size()) <= k) return std::nullopt;
  for (int i = 0; i < k; ++i)
    if (!c_[static_cast<size_t>(i)].is_zero()) return std::nullopt;
  return Poly(std::vector<Rational>(c_.begin() + k, c_.end()));
}

namespace {

std::string coeff_text(const Rational& c, int deg, bool latex) {
  // Magnitude rendering of c * x^deg; sign handled by the caller.
  Rational a = (c < Rational(0)) ? -c : c;
  std::ostringstream os;
  if (deg == 0) {
    os << (latex && !a.is_integer()
               ? "\\frac{" + a.num().get_str() + "}{" + a.den().get_str() + "}"
               : a.str());
    return os.str();
  }
  if (!a.is_one()) {
    if (latex && !a.is_integer())
      os << "\\frac{" << a.num().get_str() << "}{" << a.den().get_str() << "} ";
    else if (a.is_integer())
      os << a.str();
    else
      os << a.str() << " ";
  }
  return os.str();
}

}  // namespace

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < static_cast<int>(c_.size()); ++k) {
    const Rational& c = c_[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    if (first) {
      if (c < Rational(0)) os << "-";
      first = false;
    } else {
      os << (c < Rational(0) ? " - " : " + ");
    }
    os << coeff_text(c, k, false);
    if (k == 1) os << var;
    if (k > 1) os << var << "^" << k;
  }
  return os.str();
}

std::string Poly::latex(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < static_cast<int>(c_.size()); ++k) {
    const Rational& c = c_[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    if (first) {
      if (c < Rational(0)) os << "-";
      first = false;
    } else {
      os << (c < Rational(0) ? " - " : " + ");
    }
    os << coeff_text(c, k, true);
    if (k == 1) os << var;
    if (k > 1) os << var << "^{" << k << "}";
  }
  return os.str();
}

std::vector<std::string> Poly::coeff_strings() const {
  std::vector<std::string> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c.str());
  return v;
}

Poly Poly::from_coeff_strings(const std::vector<std::string>& v) {
  std::vector<Rational> c;
  c.reserve(v.size());
  for (const auto& s : v) c.push_back(Rational::from_string(s));
  return Poly(std::move(c));
}

Poly pochhammer_poly(const Poly& p, int n) {
  Poly r(1);
  Poly f = p;
  for (int i = 0; i < n; ++i) {
    r = r * f;
    f += Poly(1);
  }
  return r;
}

Poly qpochhammer_poly(const Poly& p, const Rational& q, int n) {
  Poly r(1);
  Rational qj(1);
  for (int j = 0; j < n; ++j) {
    r = r * (Poly(1) - qj * p);
    qj *= q;
  }
  return r;
}

}  // namespace lc
