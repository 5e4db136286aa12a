#pragma once

#include <array>
#include <string_view>

#include "halfturn/kernel.hpp"

namespace halfturn {

/// Positive rational side lengths a = |BC|, b = |CA|, c = |AB| satisfying the
/// strict triangle inequalities.
class SideLengths {
 public:
  SideLengths(Rational a, Rational b, Rational c);

  /// Parses `a,b,c`.
  static SideLengths parse(std::string_view text);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

 private:
  Rational a_, b_, c_;
};

enum class CenterName { Centroid, Incenter, Gergonne, Nagel, Spieker, X6600, X6601 };

inline constexpr std::array<std::string_view, 7> kCenterNames{
    "centroid", "incenter", "gergonne", "nagel", "spieker", "x6600", "x6601"};

/// Lowercase token to name; `X6600` style is also accepted. Throws UnknownName.
CenterName parse_center_name(std::string_view name);
std::string_view to_string(CenterName name);

BaryPoint center(CenterName name, const SideLengths& s);

}  // namespace halfturn
