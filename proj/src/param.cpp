#include "lc/param.hpp"

#include <sstream>
#include <stdexcept>

namespace lc {

std::string sym_name(Sym s) {
  switch (s) {
    case Sym::alpha: return "alpha";
    case Sym::a: return "a";
    case Sym::b: return "b";
    case Sym::beta: return "beta";
    case Sym::c: return "c";
    case Sym::q: return "q";
  }
  return "?";
}

std::optional<Sym> sym_from_name(const std::string& name) {
  if (name == "alpha") return Sym::alpha;
  if (name == "a") return Sym::a;
  if (name == "b") return Sym::b;
  if (name == "beta") return Sym::beta;
  if (name == "c") return Sym::c;
  if (name == "q") return Sym::q;
  return std::nullopt;
}

const Rational& ParamPoint::get(Sym s) const {
  auto it = v_.find(s);
  if (it == v_.end())
    throw std::out_of_range("ParamPoint: missing symbol " + sym_name(s));
  return it->second;
}

std::string ParamPoint::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, r] : v_) {
    if (!first) os << ", ";
    os << sym_name(s) << "=" << r.str();
    first = false;
  }
  return os.str();
}

uint64_t Rng::next() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Rng::next_in(long lo, long hi) {
  const uint64_t span = static_cast<uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(next() % span);
}

Rational Rng::next_rational(long bound) {
  long num = 0;
  while (num == 0) num = next_in(-bound, bound);
  long den = next_in(1, bound);
  return Rational(num, den);
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace lc
