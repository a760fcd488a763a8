#include "lc/hyperseries.hpp"

namespace lc {

SeriesSpec SeriesSpec::ordinary(std::vector<Poly> num, std::vector<Rational> den,
                                Poly arg, int terms) {
  SeriesSpec s;
  s.num_params = std::move(num);
  s.den_params = std::move(den);
  s.argument = std::move(arg);
  s.kind = Kind::Ordinary;
  s.terms = terms;
  return s;
}

SeriesSpec SeriesSpec::basic(std::vector<Poly> num, std::vector<Rational> den,
                             const Rational& q, Poly arg, int terms) {
  SeriesSpec s;
  s.num_params = std::move(num);
  s.den_params = std::move(den);
  s.argument = std::move(arg);
  s.kind = Kind::Basic;
  s.q = q;
  s.terms = terms;
  return s;
}

namespace {

void check_spec(const SeriesSpec& spec) {
  for (const auto& p : spec.num_params)
    if (p.degree() > 1)
      throw SeriesError("hyper_sum: numerator parameter of degree > 1");
  if (spec.kind == SeriesSpec::Kind::Basic &&
      (spec.q.is_zero() || spec.q == Rational(1)))
    throw SeriesError("hyper_sum: basic series needs q not in {0,1}");
}

}  // namespace

Poly hyper_sum(const SeriesSpec& spec) {
  check_spec(spec);
  const bool basic = spec.kind == SeriesSpec::Kind::Basic;
  const int r = static_cast<int>(spec.num_params.size());
  const int s = static_cast<int>(spec.den_params.size());
  const long e = 1 + s - r;  // exponent on the (-1)^k q^C(k,2) factor

  Poly sum(1);
  Poly num_prod(1);   // prod of Pochhammer factors of numerator parameters
  Rational den_prod(1);  // prod of Pochhammer factors of denominator params (and k! or (q;q)_k)
  Poly arg_pow(1);
  Rational qk(1);        // q^k
  Rational qbin(1);      // q^{binom(k,2)}

  for (int k = 1; k <= spec.terms; ++k) {
    if (basic) {
      // factors entering at step k: (1 - a q^{k-1}) per numerator parameter,
      // (1 - q^k) and (1 - b q^{k-1}) per denominator parameter.
      for (const auto& a : spec.num_params) num_prod = num_prod * (Poly(1) - qk * a);
      Rational qkk = qk * spec.q;  // q^k
      Rational step = Rational(1) - qkk;
      for (const auto& b : spec.den_params) step *= Rational(1) - b * qk;
      if (step.is_zero())
        throw SeriesError("hyper_sum: denominator q-Pochhammer vanishes at k=" +
                          std::to_string(k));
      den_prod *= step;
      qbin *= qk;  // q^{binom(k,2)} accumulates q^{k-1}
      qk = qkk;
    } else {
      Rational km1(static_cast<long>(k - 1));
      for (const auto& a : spec.num_params) num_prod = num_prod * (a + Poly(km1));
      Rational step(static_cast<long>(k));
      for (const auto& b : spec.den_params) step *= b + km1;
      if (step.is_zero())
        throw SeriesError("hyper_sum: denominator Pochhammer vanishes at k=" +
                          std::to_string(k));
      den_prod *= step;
    }
    arg_pow = arg_pow * spec.argument;
    if (num_prod.is_zero()) break;  // natural termination

    Poly term = num_prod * arg_pow;
    Rational scale = Rational(1) / den_prod;
    if (basic && e != 0) {
      Rational extra = qbin.pow(e);
      if ((k % 2) != 0 && (e % 2) != 0) extra = -extra;  // (-1)^{k e}
      scale *= extra;
    }
    sum += scale * term;
  }
  return sum;
}

Rational hyper_sum_scalar(const SeriesSpec& spec) {
  check_spec(spec);
  for (const auto& p : spec.num_params)
    if (!p.is_constant())
      throw SeriesError("hyper_sum_scalar: nonconstant parameter");
  if (!spec.argument.is_constant())
    throw SeriesError("hyper_sum_scalar: nonconstant argument");

  const bool basic = spec.kind == SeriesSpec::Kind::Basic;
  const int r = static_cast<int>(spec.num_params.size());
  const int s = static_cast<int>(spec.den_params.size());
  const long e = 1 + s - r;
  const Rational z = spec.argument.constant_term();

  Rational sum(0);
  for (int k = 0; k <= spec.terms; ++k) {
    Rational t(1);
    if (basic) {
      for (const auto& a : spec.num_params)
        t *= qpochhammer(a.constant_term(), spec.q, k);
      Rational d = qpochhammer(spec.q, spec.q, k);
      for (const auto& b : spec.den_params) d *= qpochhammer(b, spec.q, k);
      if (d.is_zero()) throw SeriesError("hyper_sum_scalar: denominator vanishes");
      t /= d;
      long c2 = static_cast<long>(k) * (k - 1) / 2;
      Rational extra = spec.q.pow(c2 * e);
      if ((k % 2) != 0 && (e % 2) != 0) extra = -extra;
      t *= extra;
    } else {
      for (const auto& a : spec.num_params) t *= pochhammer(a.constant_term(), k);
      Rational d = factorial(k);
      for (const auto& b : spec.den_params) d *= pochhammer(b, k);
      if (d.is_zero()) throw SeriesError("hyper_sum_scalar: denominator vanishes");
      t /= d;
    }
    sum += t * z.pow(k);
  }
  return sum;
}

}  // namespace lc
