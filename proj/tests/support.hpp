#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "halfturn/constructions.hpp"
#include "halfturn/kernel.hpp"
#include "halfturn/rational.hpp"

namespace testing {

using halfturn::BaryPoint;
using halfturn::Rational;

// Affine coordinates (weights summing to 1) of an ordinary point.
inline std::array<Rational, 3> weights(const BaryPoint& p) {
  const Rational s(p.sum());
  return {Rational(p[0]) / s, Rational(p[1]) / s, Rational(p[2]) / s};
}

// Three points are collinear iff the 3x3 determinant of their affine
// weights vanishes; computed by Sarrus with rationals.
inline bool affine_collinear(const BaryPoint& p, const BaryPoint& q, const BaryPoint& r) {
  const auto a = weights(p), b = weights(q), c = weights(r);
  const Rational d = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                     a[2] * (b[0] * c[1] - b[1] * c[0]);
  return d.is_zero();
}

// Direction vectors p1->p2 and q1->q2 in affine weights are proportional.
inline bool affine_parallel(const BaryPoint& p1, const BaryPoint& p2, const BaryPoint& q1,
                            const BaryPoint& q2) {
  const auto a1 = weights(p1), a2 = weights(p2), b1 = weights(q1), b2 = weights(q2);
  std::array<Rational, 3> u, v;
  for (std::size_t i = 0; i < 3; ++i) {
    u[i] = a2[i] - a1[i];
    v[i] = b2[i] - b1[i];
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!(u[i] * v[j] - u[j] * v[i]).is_zero()) return false;
    }
  }
  return true;
}

inline bool same_point(const std::array<Rational, 3>& w, const BaryPoint& p) {
  return weights(p) == w;
}

// Parameter of a point on side BC: the ratio z/y, or nullopt at y = 0.
inline std::optional<Rational> bc_param(const BaryPoint& p) {
  if (p[1] == 0) return std::nullopt;
  return Rational(p[2]) / Rational(p[1]);
}

// Cross ratio of four points on BC from affine parameters t = z/(y+z):
// (c-a)(d-b) / ((c-b)(d-a)).
inline Rational bc_cross_ratio(const BaryPoint& a, const BaryPoint& b, const BaryPoint& c,
                               const BaryPoint& d) {
  auto t = [](const BaryPoint& p) { return Rational(p[2]) / Rational(p[1] + p[2]); };
  return (t(c) - t(a)) * (t(d) - t(b)) / ((t(c) - t(b)) * (t(d) - t(a)));
}

inline long draw(std::mt19937_64& gen, long bound) {
  return static_cast<long>(gen() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
}

inline BaryPoint random_point(std::mt19937_64& gen, long bound) {
  for (;;) {
    const long x = draw(gen, bound), y = draw(gen, bound), z = draw(gen, bound);
    if (x == 0 && y == 0 && z == 0) continue;
    return BaryPoint(x, y, z);
  }
}

inline BaryPoint random_ordinary(std::mt19937_64& gen, long bound) {
  for (;;) {
    const BaryPoint p = random_point(gen, bound);
    if (!halfturn::is_infinite(p)) return p;
  }
}

inline BaryPoint random_valid(std::mt19937_64& gen, long bound) {
  for (;;) {
    const BaryPoint p = random_point(gen, bound);
    try {
      halfturn::validate_p(p);
      return p;
    } catch (const halfturn::Error&) {
    }
  }
}

}  // namespace testing
