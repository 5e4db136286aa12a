#pragma once

// Exact projective primitives over homogeneous barycentric coordinates with
// respect to a fixed reference triangle ABC.
//
// Points and lines are integer triples in a unique normal form (gcd 1, first
// nonzero entry positive), so projective equality is plain `==`.

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "halfturn/error.hpp"
#include "halfturn/rational.hpp"

namespace halfturn {

using Triple = std::array<Integer, 3>;
using RationalTriple = std::array<Rational, 3>;

/// Scales a triple to normal form; nullopt for the zero triple.
std::optional<Triple> normalize(Triple t);

Integer det3(const Triple& a, const Triple& b, const Triple& c);
Triple cross(const Triple& a, const Triple& b);
Integer dot(const Triple& a, const Triple& b);

template <class Tag>
class Homogeneous {
 public:
  Homogeneous(const Integer& a, const Integer& b, const Integer& c)
      : Homogeneous(Triple{a, b, c}) {}

  explicit Homogeneous(Triple t) {
    auto n = normalize(std::move(t));
    if (!n) throw Error(ErrorCode::ZeroTriple, "homogeneous triple is (0,0,0)");
    coords_ = std::move(*n);
  }

  static std::optional<Homogeneous> try_make(Triple t) {
    auto n = normalize(std::move(t));
    if (!n) return std::nullopt;
    Homogeneous h;
    h.coords_ = std::move(*n);
    return h;
  }

  /// Clears denominators of a rational triple.
  static Homogeneous from_rationals(const RationalTriple& r) {
    Integer l = 1;
    for (const auto& q : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.den().get_mpz_t());
    Triple t;
    for (std::size_t i = 0; i < 3; ++i) t[i] = r[i].num() * (l / r[i].den());
    return Homogeneous(std::move(t));
  }

  /// Parses `rat:rat:rat`.
  static Homogeneous parse(std::string_view text);

  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  const Triple& coords() const { return coords_; }
  Integer sum() const { return coords_[0] + coords_[1] + coords_[2]; }

  std::string str() const {
    return coords_[0].get_str() + ":" + coords_[1].get_str() + ":" +
           coords_[2].get_str();
  }

  friend bool operator==(const Homogeneous& a, const Homogeneous& b) {
    return a.coords_[0] == b.coords_[0] && a.coords_[1] == b.coords_[1] &&
           a.coords_[2] == b.coords_[2];
  }

  friend std::ostream& operator<<(std::ostream& os, const Homogeneous& h) {
    return os << h.str();
  }

 private:
  Homogeneous() = default;
  Triple coords_;
};

struct PointTag {};
struct LineTag {};
using BaryPoint = Homogeneous<PointTag>;
using BaryLine = Homogeneous<LineTag>;

RationalTriple parse_rational_triple(std::string_view text);

template <class Tag>
Homogeneous<Tag> Homogeneous<Tag>::parse(std::string_view text) {
  try {
    return from_rationals(parse_rational_triple(text));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ZeroTriple) {
      throw Error(ErrorCode::ParseError, "triple '" + std::string(text) + "' is all zero");
    }
    throw;
  }
}

namespace vertex {
BaryPoint A();
BaryPoint B();
BaryPoint C();
}  // namespace vertex

BaryLine line_at_infinity();
/// Side lines BC, CA, AB.
BaryLine side_a();
BaryLine side_b();
BaryLine side_c();

bool is_infinite(const BaryPoint& p);
bool lies_on(const BaryPoint& p, const BaryLine& l);

BaryLine join(const BaryPoint& p, const BaryPoint& q);
BaryPoint meet(const BaryLine& l, const BaryLine& m);

bool collinear(const BaryPoint& p, const BaryPoint& q, const BaryPoint& r);
bool concurrent(const BaryLine& l, const BaryLine& m, const BaryLine& n);

/// True iff the lines meet on the line at infinity. Identical lines count
/// as parallel.
bool parallel(const BaryLine& l, const BaryLine& m);

/// Line through `p` in the direction of `l`.
BaryLine parallel_through(const BaryPoint& p, const BaryLine& l);

BaryPoint midpoint(const BaryPoint& p, const BaryPoint& q);

/// Point reflection about `center`. Infinite points are fixed.
BaryPoint half_turn(const BaryPoint& center, const BaryPoint& p);

/// Writes c = αa + βb and returns αa − βb.
BaryPoint harmonic_conjugate(const BaryPoint& a, const BaryPoint& b,
                             const BaryPoint& c);

/// Value of a cross-ratio; `value` is empty when the cross-ratio is ∞.
struct CrossRatio {
  std::optional<Rational> value;

  bool is_infinite() const { return !value.has_value(); }
  std::string str() const { return value ? value->str() : "inf"; }
  friend bool operator==(const CrossRatio&, const CrossRatio&) = default;
};

/// (a,b;c,d) = [(c−a)(d−b)] / [(c−b)(d−a)] in an affine parameter along the
/// common line. Equal third and fourth points give 1.
CrossRatio cross_ratio(const BaryPoint& a, const BaryPoint& b,
                       const BaryPoint& c, const BaryPoint& d);

/// Intersection of the cevian from `vertex_index` (0=A,1=B,2=C) through `p`
/// with the opposite side, i.e. `p` with that coordinate zeroed. Empty when
/// `p` is the vertex itself.
std::optional<BaryPoint> trace(const BaryPoint& p, int vertex_index);

}  // namespace halfturn
