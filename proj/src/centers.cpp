#include "halfturn/centers.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "halfturn/maps.hpp"

namespace halfturn {

SideLengths::SideLengths(Rational a, Rational b, Rational c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  const bool positive = a_.sign() > 0 && b_.sign() > 0 && c_.sign() > 0;
  if (!positive || !(a_ < b_ + c_) || !(b_ < c_ + a_) || !(c_ < a_ + b_)) {
    throw Error(ErrorCode::DegenerateTriangle,
                "side lengths " + a_.str() + ", " + b_.str() + ", " + c_.str() +
                    " do not form a triangle");
  }
}

SideLengths SideLengths::parse(std::string_view text) {
  std::array<Rational, 3> v;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto comma = text.find(',', start);
    if ((i < 2) == (comma == std::string_view::npos)) {
      throw Error(ErrorCode::ParseError, "expected a,b,c, got '" + std::string(text) + "'");
    }
    v[i] = Rational::parse(text.substr(start, comma - start));
    start = comma + 1;
  }
  return SideLengths(v[0], v[1], v[2]);
}

CenterName parse_center_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (std::size_t i = 0; i < kCenterNames.size(); ++i) {
    if (kCenterNames[i] == lower) return static_cast<CenterName>(i);
  }
  throw Error(ErrorCode::UnknownName, "unknown center '" + std::string(name) + "'");
}

std::string_view to_string(CenterName name) {
  return kCenterNames.at(static_cast<std::size_t>(name));
}

namespace {

// g(a,b,c) = a²(b+c−a)(a²+b²+c²−2ab−2ac)
Rational x6600_coord(const Rational& a, const Rational& b, const Rational& c) {
  return a * a * (b + c - a) * (a * a + b * b + c * c - 2 * a * b - 2 * a * c);
}

Rational x6601_denominator(const Rational& a, const Rational& b, const Rational& c) {
  return a * a + b * b + c * c - 2 * a * b - 2 * a * c;
}

}  // namespace

BaryPoint center(CenterName name, const SideLengths& s) {
  const Rational& a = s.a();
  const Rational& b = s.b();
  const Rational& c = s.c();
  const Rational u = b + c - a, v = c + a - b, w = a + b - c;
  switch (name) {
    case CenterName::Centroid:
      return {1, 1, 1};
    case CenterName::Incenter:
      return BaryPoint::from_rationals({a, b, c});
    case CenterName::Gergonne:
      return BaryPoint::from_rationals({v * w, w * u, u * v});
    case CenterName::Nagel:
      return BaryPoint::from_rationals({u, v, w});
    case CenterName::Spieker:
      return complement(BaryPoint::from_rationals({a, b, c}));
    case CenterName::X6600:
      return BaryPoint::from_rationals(
          {x6600_coord(a, b, c), x6600_coord(b, c, a), x6600_coord(c, a, b)});
    case CenterName::X6601: {
      // h(a,b,c) = (b+c−a)/d_a, scaled by d_a·d_b·d_c.
      const Rational da = x6601_denominator(a, b, c);
      const Rational db = x6601_denominator(b, c, a);
      const Rational dc = x6601_denominator(c, a, b);
      return BaryPoint::from_rationals({u * db * dc, v * dc * da, w * da * db});
    }
  }
  throw Error(ErrorCode::UnknownName, "center");
}

}  // namespace halfturn
