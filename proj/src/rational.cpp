#include "halfturn/rational.hpp"

#include <ostream>

#include "halfturn/error.hpp"

namespace halfturn {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroTriple: return "ZeroTriple";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IdenticalPoints: return "IdenticalPoints";
    case ErrorCode::IdenticalLines: return "IdenticalLines";
    case ErrorCode::InfinitePoint: return "InfinitePoint";
    case ErrorCode::InfiniteCenter: return "InfiniteCenter";
    case ErrorCode::NotOnLine: return "NotOnLine";
    case ErrorCode::CoincidesWithBasePoint: return "CoincidesWithBasePoint";
    case ErrorCode::NotCollinear: return "NotCollinear";
    case ErrorCode::ZeroImage: return "ZeroImage";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::OnSideLine: return "OnSideLine";
    case ErrorCode::CollinearSources: return "CollinearSources";
    case ErrorCode::DegenerateP: return "DegenerateP";
    case ErrorCode::OnSideOfABC: return "OnSideOfABC";
    case ErrorCode::OnSideOfAnticomplementary: return "OnSideOfAnticomplementary";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::ProofFailed: return "ProofFailed";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) +
                         (detail.empty() ? "" : ": " + detail)),
      code_(code) {}

namespace {

bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') return false;
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  Integer num;
  Integer den = 1;
  const auto slash = text.find('/');
  const bool ok =
      slash == std::string_view::npos
          ? parse_integer(text, num)
          : parse_integer(text.substr(0, slash), num) &&
                parse_integer(text.substr(slash + 1), den) &&
                text[slash + 1] != '-' && text[slash + 1] != '+' && den > 0;
  if (!ok) {
    throw Error(ErrorCode::ParseError,
                "not a rational literal: '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace halfturn
