#include "halfturn/polynomial.hpp"

#include <sstream>

namespace halfturn {

namespace {
constexpr std::array<char, kNumVars> kVarNames{'x', 'y', 'z', 'a', 'b', 'c'};
}  // namespace

Poly::Poly(long constant) : Poly(Rational(constant)) {}

Poly::Poly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Exponents{}, constant);
}

Poly Poly::var(Var v) {
  Poly p;
  Exponents e{};
  e[static_cast<std::size_t>(v)] = 1;
  p.terms_.emplace(e, Rational(1));
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, coeff] : terms_) {
    int s = 0;
    for (auto k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

Rational Poly::evaluate(const Valuation& values) const {
  Rational total;
  for (const auto& [e, coeff] : terms_) {
    Rational term = coeff;
    for (std::size_t v = 0; v < kNumVars; ++v) {
      for (std::uint16_t k = 0; k < e[v]; ++k) term *= values[v];
    }
    total += term;
  }
  return total;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, coeff] : terms_) {
    Rational mag = coeff.sign() < 0 ? -coeff : coeff;
    if (first) {
      if (coeff.sign() < 0) os << '-';
    } else {
      os << (coeff.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = true;
    for (auto k : e) constant = constant && k == 0;
    bool need_star = false;
    if (constant || mag != Rational(1)) {
      os << mag;
      need_star = true;
    }
    for (std::size_t v = 0; v < kNumVars; ++v) {
      if (e[v] == 0) continue;
      if (need_star) os << '*';
      os << kVarNames[v];
      if (e[v] > 1) os << '^' << e[v];
      need_star = true;
    }
  }
  return os.str();
}

void Poly::add_term(const Exponents& e, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, coeff] : o.terms_) add_term(e, coeff);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, coeff] : o.terms_) add_term(e, -coeff);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, -coeff);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t v = 0; v < kNumVars; ++v) {
        e[v] = static_cast<std::uint16_t>(ea[v] + eb[v]);
      }
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly pow(const Poly& p, unsigned n) {
  Poly r(1);
  for (unsigned i = 0; i < n; ++i) r *= p;
  return r;
}

}  // namespace halfturn
