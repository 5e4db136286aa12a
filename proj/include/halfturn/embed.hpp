#pragma once

#include <array>
#include <string>

#include "halfturn/constructions.hpp"
#include "halfturn/kernel.hpp"

namespace halfturn {

class SideLengths;

struct Vec2 {
  Rational x, y;

  friend Vec2 operator+(const Vec2& u, const Vec2& v) { return {u.x + v.x, u.y + v.y}; }
  friend Vec2 operator-(const Vec2& u, const Vec2& v) { return {u.x - v.x, u.y - v.y}; }
  friend Vec2 operator*(const Rational& k, const Vec2& v) { return {k * v.x, k * v.y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// A triangle in a Cartesian plane whose inner product is
/// ⟨u,v⟩ = u.x·v.x + κ·u.y·v.y for a positive rational κ (κ = 1 is the usual
/// Euclidean plane). Stored coordinates are rational; the drawn y coordinate
/// is y·√κ. This lets triangles with rational side lengths but irrational
/// heights, such as (6, 9, 13), be embedded exactly.
class CartesianTriangle {
 public:
  CartesianTriangle(Vec2 a, Vec2 b, Vec2 c, Rational y_scale_squared = 1);

  /// A = (0,3), B = (0,0), C = (4,0).
  static CartesianTriangle default_triangle();
  /// B = (0,0), C = (a,0), A above BC, with |BC| = a, |CA| = b, |AB| = c.
  static CartesianTriangle from_side_lengths(const SideLengths& s);

  const Vec2& A() const { return a_; }
  const Vec2& B() const { return b_; }
  const Vec2& C() const { return c_; }
  const Rational& y_scale_squared() const { return kappa_; }

  Vec2 to_cartesian(const BaryPoint& p) const;

  Rational squared_distance(const Vec2& u, const Vec2& v) const;
  /// ⟨u − w, v − w⟩
  Rational dot(const Vec2& u, const Vec2& v, const Vec2& w) const;
  Rational inner(const Vec2& u, const Vec2& v) const;

  /// Drawn (Euclidean) coordinates, for presentation only.
  std::array<double, 2> drawn(const Vec2& v) const;

 private:
  Vec2 a_, b_, c_;
  Rational kappa_;
};

/// All six pairwise squared distances agree in corresponding order.
bool congruent_quads(const CartesianTriangle& t, const std::array<BaryPoint, 4>& q1,
                     const std::array<BaryPoint, 4>& q2);

/// Circumcenter from the two perpendicular-bisector equations.
Vec2 circumcenter_by_bisectors(const CartesianTriangle& t);
/// Orthocenter from the two altitude equations.
Vec2 orthocenter_by_altitudes(const CartesianTriangle& t);

struct SvgOptions {
  int width = 800;
  bool show_centers = true;  // O and H
};

std::string render_svg(const Configuration& cfg, const CartesianTriangle& t,
                       const SvgOptions& opts = {});

}  // namespace halfturn
