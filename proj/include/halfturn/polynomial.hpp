#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "halfturn/rational.hpp"

namespace halfturn {

enum class Var : std::uint8_t { x, y, z, a, b, c };
inline constexpr std::size_t kNumVars = 6;

using Exponents = std::array<std::uint16_t, kNumVars>;
using Valuation = std::array<Rational, kNumVars>;

/// Sparse multivariate polynomial over the rationals in x, y, z, a, b, c.
/// Zero coefficients are never stored, so the zero polynomial has no terms
/// and structural equality is polynomial equality.
class Poly {
 public:
  using Terms = std::map<Exponents, Rational, std::greater<>>;

  Poly() = default;
  Poly(long constant);                // NOLINT(google-explicit-constructor)
  Poly(const Rational& constant);     // NOLINT(google-explicit-constructor)

  static Poly var(Var v);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;

  Rational evaluate(const Valuation& values) const;
  std::string str() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Exponents& e, const Rational& coeff);

  Terms terms_;
};

Poly pow(const Poly& p, unsigned n);

}  // namespace halfturn
