#include "halfturn/kernel.hpp"

#include <utility>
#include <vector>

namespace halfturn {

std::optional<Triple> normalize(Triple t) {
  Integer g = 0;
  for (const auto& v : t) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g == 0) return std::nullopt;
  for (const auto& v : t) {
    if (v != 0) {
      if (v < 0) g = -g;
      break;
    }
  }
  if (g != 1) {
    for (auto& v : t) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
  return t;
}

Integer det3(const Triple& a, const Triple& b, const Triple& c) {
  return dot(a, cross(b, c));
}

Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Integer dot(const Triple& a, const Triple& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

RationalTriple parse_rational_triple(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 3) {
    throw Error(ErrorCode::ParseError,
                "expected rat:rat:rat, got '" + std::string(text) + "'");
  }
  return {Rational::parse(parts[0]), Rational::parse(parts[1]),
          Rational::parse(parts[2])};
}

namespace vertex {
BaryPoint A() { return {1, 0, 0}; }
BaryPoint B() { return {0, 1, 0}; }
BaryPoint C() { return {0, 0, 1}; }
}  // namespace vertex

BaryLine line_at_infinity() { return {1, 1, 1}; }
BaryLine side_a() { return {1, 0, 0}; }
BaryLine side_b() { return {0, 1, 0}; }
BaryLine side_c() { return {0, 0, 1}; }

bool is_infinite(const BaryPoint& p) { return p.sum() == 0; }

bool lies_on(const BaryPoint& p, const BaryLine& l) {
  return dot(p.coords(), l.coords()) == 0;
}

BaryLine join(const BaryPoint& p, const BaryPoint& q) {
  auto l = BaryLine::try_make(cross(p.coords(), q.coords()));
  if (!l) throw Error(ErrorCode::IdenticalPoints, "join(" + p.str() + ", " + q.str() + ")");
  return *l;
}

BaryPoint meet(const BaryLine& l, const BaryLine& m) {
  auto p = BaryPoint::try_make(cross(l.coords(), m.coords()));
  if (!p) throw Error(ErrorCode::IdenticalLines, "meet[" + l.str() + ", " + m.str() + "]");
  return *p;
}

bool collinear(const BaryPoint& p, const BaryPoint& q, const BaryPoint& r) {
  return det3(p.coords(), q.coords(), r.coords()) == 0;
}

bool concurrent(const BaryLine& l, const BaryLine& m, const BaryLine& n) {
  return det3(l.coords(), m.coords(), n.coords()) == 0;
}

bool parallel(const BaryLine& l, const BaryLine& m) {
  if (l == m) return true;
  return is_infinite(meet(l, m));
}

BaryLine parallel_through(const BaryPoint& p, const BaryLine& l) {
  return join(p, meet(l, line_at_infinity()));
}

BaryPoint midpoint(const BaryPoint& p, const BaryPoint& q) {
  const Integer sp = p.sum();
  const Integer sq = q.sum();
  if (sp == 0 || sq == 0) {
    throw Error(ErrorCode::InfinitePoint, "midpoint(" + p.str() + ", " + q.str() + ")");
  }
  Triple t;
  for (std::size_t i = 0; i < 3; ++i) t[i] = sq * p[i] + sp * q[i];
  return BaryPoint(std::move(t));
}

BaryPoint half_turn(const BaryPoint& center, const BaryPoint& p) {
  const Integer sn = center.sum();
  if (sn == 0) throw Error(ErrorCode::InfiniteCenter, "half_turn about " + center.str());
  const Integer sp2 = 2 * p.sum();
  Triple t;
  for (std::size_t i = 0; i < 3; ++i) t[i] = sp2 * center[i] - sn * p[i];
  return BaryPoint(std::move(t));
}

namespace {

// Homogeneous parameters (α:β) with c ∝ αa + βb. Requires a ≁ b and c on
// the line ab.
std::pair<Integer, Integer> decompose(const BaryPoint& a, const BaryPoint& b,
                                      const BaryPoint& c) {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      const Integer delta = a[i] * b[j] - a[j] * b[i];
      if (delta == 0) continue;
      Integer alpha = c[i] * b[j] - c[j] * b[i];
      Integer beta = a[i] * c[j] - a[j] * c[i];
      return {std::move(alpha), std::move(beta)};
    }
  }
  throw Error(ErrorCode::IdenticalPoints, a.str() + " ~ " + b.str());
}

void require_on_line(const BaryPoint& a, const BaryPoint& b, const BaryPoint& c) {
  if (a == b) throw Error(ErrorCode::IdenticalPoints, a.str());
  if (!collinear(a, b, c)) {
    throw Error(ErrorCode::NotOnLine, c.str() + " not on line through " + a.str() +
                                          " and " + b.str());
  }
}

}  // namespace

BaryPoint harmonic_conjugate(const BaryPoint& a, const BaryPoint& b,
                             const BaryPoint& c) {
  require_on_line(a, b, c);
  auto [alpha, beta] = decompose(a, b, c);
  if (alpha == 0 || beta == 0) {
    throw Error(ErrorCode::CoincidesWithBasePoint, c.str());
  }
  Triple t;
  for (std::size_t i = 0; i < 3; ++i) t[i] = alpha * a[i] - beta * b[i];
  return BaryPoint(std::move(t));
}

CrossRatio cross_ratio(const BaryPoint& a, const BaryPoint& b,
                       const BaryPoint& c, const BaryPoint& d) {
  if (a == b) throw Error(ErrorCode::IdenticalPoints, a.str());
  if (!collinear(a, b, c) || !collinear(a, b, d)) {
    throw Error(ErrorCode::NotCollinear,
                a.str() + ", " + b.str() + ", " + c.str() + ", " + d.str());
  }
  if (c == d) return {Rational(1)};
  // With a = [1:0], b = [0:1], c = [sc:tc], d = [sd:td] the cross-ratio is
  // (tc·sd) / (sc·td).
  const auto [sc, tc] = decompose(a, b, c);
  const auto [sd, td] = decompose(a, b, d);
  const Integer num = tc * sd;
  const Integer den = sc * td;
  if (den == 0) return {std::nullopt};
  return {Rational(num, den)};
}

std::optional<BaryPoint> trace(const BaryPoint& p, int vertex_index) {
  Triple t = p.coords();
  t.at(static_cast<std::size_t>(vertex_index)) = 0;
  return BaryPoint::try_make(std::move(t));
}

}  // namespace halfturn
