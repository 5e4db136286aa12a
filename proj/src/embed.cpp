#include "halfturn/embed.hpp"

#include <cmath>

#include "halfturn/centers.hpp"

namespace halfturn {

CartesianTriangle::CartesianTriangle(Vec2 a, Vec2 b, Vec2 c, Rational y_scale_squared)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), kappa_(std::move(y_scale_squared)) {
  if (kappa_.sign() <= 0) {
    throw Error(ErrorCode::DegenerateTriangle, "metric scale must be positive");
  }
  const Vec2 u = b_ - a_, v = c_ - a_;
  if ((u.x * v.y - u.y * v.x).is_zero()) {
    throw Error(ErrorCode::DegenerateTriangle, "vertices are collinear");
  }
}

CartesianTriangle CartesianTriangle::default_triangle() {
  return CartesianTriangle({0, 3}, {0, 0}, {4, 0});
}

CartesianTriangle CartesianTriangle::from_side_lengths(const SideLengths& s) {
  const Rational& a = s.a();
  const Rational& b = s.b();
  const Rational& c = s.c();
  const Rational foot = (a * a + c * c - b * b) / (2 * a);
  const Rational height_squared = c * c - foot * foot;
  return CartesianTriangle({foot, 1}, {0, 0}, {a, 0}, height_squared);
}

Vec2 CartesianTriangle::to_cartesian(const BaryPoint& p) const {
  const Integer s = p.sum();
  if (s == 0) throw Error(ErrorCode::InfinitePoint, p.str() + " has no Cartesian image");
  const Rational sr(s);
  const Rational wa = Rational(p[0]) / sr, wb = Rational(p[1]) / sr, wc = Rational(p[2]) / sr;
  return {wa * a_.x + wb * b_.x + wc * c_.x, wa * a_.y + wb * b_.y + wc * c_.y};
}

Rational CartesianTriangle::inner(const Vec2& u, const Vec2& v) const {
  return u.x * v.x + kappa_ * u.y * v.y;
}

Rational CartesianTriangle::squared_distance(const Vec2& u, const Vec2& v) const {
  const Vec2 d = u - v;
  return inner(d, d);
}

Rational CartesianTriangle::dot(const Vec2& u, const Vec2& v, const Vec2& w) const {
  return inner(u - w, v - w);
}

std::array<double, 2> CartesianTriangle::drawn(const Vec2& v) const {
  return {v.x.to_double(), v.y.to_double() * std::sqrt(kappa_.to_double())};
}

bool congruent_quads(const CartesianTriangle& t, const std::array<BaryPoint, 4>& q1,
                     const std::array<BaryPoint, 4>& q2) {
  std::array<Vec2, 4> u, v;
  for (std::size_t i = 0; i < 4; ++i) {
    u[i] = t.to_cartesian(q1[i]);
    v[i] = t.to_cartesian(q2[i]);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (t.squared_distance(u[i], u[j]) != t.squared_distance(v[i], v[j])) return false;
    }
  }
  return true;
}

namespace {

// Solves ⟨n1, X⟩ = r1, ⟨n2, X⟩ = r2 for X.
Vec2 solve_inner(const CartesianTriangle& t, const Vec2& n1, const Rational& r1,
                 const Vec2& n2, const Rational& r2) {
  const Rational& k = t.y_scale_squared();
  const Rational a11 = n1.x, a12 = k * n1.y, a21 = n2.x, a22 = k * n2.y;
  const Rational det = a11 * a22 - a12 * a21;
  return {(r1 * a22 - a12 * r2) / det, (a11 * r2 - r1 * a21) / det};
}

}  // namespace

Vec2 circumcenter_by_bisectors(const CartesianTriangle& t) {
  const Vec2 zero{0, 0};
  const Vec2& a = t.A();
  const Vec2& b = t.B();
  const Vec2& c = t.C();
  const Rational na = t.squared_distance(a, zero);
  return solve_inner(t, 2 * (b - a), t.squared_distance(b, zero) - na, 2 * (c - a),
                     t.squared_distance(c, zero) - na);
}

Vec2 orthocenter_by_altitudes(const CartesianTriangle& t) {
  const Vec2& a = t.A();
  const Vec2& b = t.B();
  const Vec2& c = t.C();
  return solve_inner(t, c - b, t.inner(c - b, a), c - a, t.inner(c - a, b));
}

}  // namespace halfturn
