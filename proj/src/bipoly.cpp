#include "lc/bipoly.hpp"

#include <stdexcept>

namespace lc {

Poly lagrange_interpolate(const std::vector<Rational>& us,
                          const std::vector<Rational>& vs) {
  if (us.size() != vs.size() || us.empty())
    throw std::invalid_argument("lagrange_interpolate: bad node data");
  // Newton form with exact divided differences.
  const size_t m = us.size();
  std::vector<Rational> dd = vs;
  for (size_t level = 1; level < m; ++level) {
    for (size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (us[i] - us[i - level]);
      if (i == level) break;
    }
  }
  Poly r;
  for (size_t i = m; i-- > 0;) {
    r = r * Poly({-us[i], Rational(1)}) + Poly(dd[i]);
  }
  return r;
}

BiPoly BiPoly::interpolate(const std::function<Poly(const Rational&)>& f,
                           const std::vector<Rational>& nodes) {
  if (nodes.size() < 2) throw std::invalid_argument("BiPoly: need >= 2 nodes");
  std::vector<Poly> samples;
  samples.reserve(nodes.size());
  int xdeg = -1;
  for (const auto& u : nodes) {
    samples.push_back(f(u));
    xdeg = std::max(xdeg, samples.back().degree());
  }
  // Interpolate on all but the last node, then use the last as a check that
  // the degree bound implied by the node count was honest.
  const size_t m = nodes.size() - 1;
  std::vector<Rational> us(nodes.begin(), nodes.begin() + static_cast<long>(m));
  BiPoly out;
  out.cu_.resize(static_cast<size_t>(xdeg) + 1);
  for (int k = 0; k <= xdeg; ++k) {
    std::vector<Rational> vs;
    vs.reserve(m);
    for (size_t i = 0; i < m; ++i) vs.push_back(samples[i].coeff(k));
    out.cu_[static_cast<size_t>(k)] = lagrange_interpolate(us, vs);
    if (out.cu_[static_cast<size_t>(k)].eval(nodes.back()) !=
        samples.back().coeff(k))
      throw std::logic_error("BiPoly: parameter degree bound too small");
  }
  return out;
}

BiPoly BiPoly::d_du() const {
  BiPoly r;
  r.cu_.reserve(cu_.size());
  for (const auto& p : cu_) r.cu_.push_back(p.derivative());
  return r;
}

BiPoly BiPoly::mul_upoly(const Poly& g) const {
  BiPoly r;
  r.cu_.reserve(cu_.size());
  for (const auto& p : cu_) r.cu_.push_back(p * g);
  return r;
}

Poly BiPoly::eval_u(const Rational& u0) const {
  std::vector<Rational> c;
  c.reserve(cu_.size());
  for (const auto& p : cu_) c.push_back(p.eval(u0));
  return Poly(std::move(c));
}

int BiPoly::u_degree() const {
  int d = -1;
  for (const auto& p : cu_) d = std::max(d, p.degree());
  return d;
}

}  // namespace lc
