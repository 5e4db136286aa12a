#pragma once

// Polynomial-identity proofs for a generic point P = (x:y:z) and generic side
// lengths (a,b,c). Every construction is homogeneous and polynomial
// (midpoints and half-turns use sum-weighted forms), and projective equality
// is proportionality: the cross product of two triples vanishes identically.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "halfturn/kernel.hpp"
#include "halfturn/polynomial.hpp"

namespace halfturn::symbolic {

struct SymTriple {
  std::array<Poly, 3> c;

  const Poly& operator[](std::size_t i) const { return c[i]; }
  Poly& operator[](std::size_t i) { return c[i]; }
  Poly sum() const { return c[0] + c[1] + c[2]; }
  int degree() const;
  bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }
};

using SymPoint = SymTriple;
using SymLine = SymTriple;
using SymMatrix = std::array<std::array<Poly, 3>, 3>;

SymPoint constant_point(long x, long y, long z);
/// P = (x:y:z).
SymPoint generic_point();

SymTriple cross(const SymTriple& u, const SymTriple& v);
Poly dot(const SymTriple& u, const SymTriple& v);
Poly det3(const SymTriple& u, const SymTriple& v, const SymTriple& w);

SymLine join(const SymPoint& p, const SymPoint& q);
SymPoint meet(const SymLine& l, const SymLine& m);
SymPoint midpoint(const SymPoint& p, const SymPoint& q);
SymPoint half_turn(const SymPoint& center, const SymPoint& p);
SymPoint complement(const SymPoint& p);
SymPoint anticomplement(const SymPoint& p);
SymPoint isotomic(const SymPoint& p);
SymPoint trace(const SymPoint& p, int vertex_index);

SymPoint apply(const SymMatrix& m, const SymPoint& p);
SymMatrix compose(const SymMatrix& m1, const SymMatrix& m2);
SymMatrix adjugate(const SymMatrix& m);
/// Affine map src[i] -> dst[i], up to a polynomial scalar.
SymMatrix affine_map(const std::array<SymPoint, 3>& src, const std::array<SymPoint, 3>& dst);

/// Integer point obtained by substituting `values` (gcd-normalized).
/// Empty when the evaluation is the zero triple.
std::optional<BaryPoint> evaluate(const SymPoint& p, const Valuation& values);

/// Valuation with x,y,z taken from P and a = b = c = 0.
Valuation valuation_at(const BaryPoint& p);

/// Every point of the configuration for a symbolic P, named as in the numeric
/// configuration. O and H are the closed forms.
class SymConfiguration {
 public:
  explicit SymConfiguration(const SymPoint& p);

  const SymPoint& at(std::string_view name) const;
  const std::vector<std::pair<std::string, SymPoint>>& points() const { return points_; }

  const SymMatrix& t_p() const { return t_p_; }
  const SymMatrix& t_p_prime() const { return t_p_prime_; }
  /// Closed-form T_{P'}^{-1}.
  const SymMatrix& t_p_prime_inverse() const { return t_p_prime_inverse_; }

 private:
  void add(std::string name, SymPoint p);

  std::vector<std::pair<std::string, SymPoint>> points_;
  SymMatrix t_p_, t_p_prime_, t_p_prime_inverse_;
};

SymConfiguration sym_configuration();

struct ProportionalityReport {
  std::array<Poly, 3> cross;
  bool all_zero() const { return cross[0].is_zero() && cross[1].is_zero() && cross[2].is_zero(); }
};

ProportionalityReport prove_proportional(const SymPoint& u, const SymPoint& v);

struct Identity {
  std::string label;
  int degree = 0;  // degree bound of the expression before cancellation
  bool vanishes = false;
  std::string residual;  // first nonzero polynomial, empty when it vanishes
};

struct ProofReport {
  std::string theorem;
  std::vector<Identity> identities;

  bool proved() const;
  std::string status() const { return proved() ? "proved" : "failed"; }
  const Identity* first_failure() const;
};

inline constexpr std::array<std::string_view, 10> kTheoremNames{
    "halfturn", "parallels", "thm21",     "thm23",     "cor22",
    "cor24b",   "o_formula", "h_formula", "thm34",     "nagel_centers"};

/// Throws UnknownName for names outside kTheoremNames.
ProofReport prove_theorem(std::string_view name);
std::vector<ProofReport> prove_all();

/// Throws ProofFailed carrying the first nonzero polynomial.
void require_proved(const ProofReport& report);

}  // namespace halfturn::symbolic
