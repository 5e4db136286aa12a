#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "halfturn/kernel.hpp"
#include "halfturn/maps.hpp"

namespace halfturn {

/// Rejects P on a side line of ABC (OnSideOfABC) or of the anticomplementary
/// triangle (OnSideOfAnticomplementary), i.e. requires
/// x·y·z·(x+y)·(y+z)·(z+x) ≠ 0.
void validate_p(const BaryPoint& p);

/// Q = K(ι(P)) = (x(y+z) : y(z+x) : z(x+y)).
BaryPoint isotomcomplement(const BaryPoint& p);

/// T_P: the affine map taking ABC to the cevian triangle DEF of P.
Map3 cevian_map(const BaryPoint& p);

/// O = T_{P'}^{-1} K(Q), computed by the matrix route and by the closed form
/// (x(y+z)²x″ : y(z+x)²y″ : z(x+y)²z″) with x″ = xy+yz+zx−x², and
/// cross-checked. Throws InternalInconsistency if the routes disagree.
BaryPoint generalized_circumcenter(const BaryPoint& p);

/// H = K^{-1}(O), cross-checked against (x·y″·z″ : y·z″·x″ : z·x″·y″).
BaryPoint generalized_orthocenter(const BaryPoint& p);

/// The closed forms alone, without the matrix route.
BaryPoint circumcenter_closed_form(const BaryPoint& p);
BaryPoint orthocenter_closed_form(const BaryPoint& p);

/// Builds T_L for L = K^{-1}(P') on the anticomplementary triangle and checks
/// T_L^{-1}(Q) == H. Requires P' ordinary.
bool remark_check_tl(const BaryPoint& p);

struct Configuration {
  BaryPoint P, P_prime, Q, Q_prime;
  bool p_infinite = false;
  bool p_prime_infinite = false;

  BaryPoint D, E, F;
  BaryPoint D3, E3, F3;
  BaryPoint D0, E0, F0;
  BaryPoint Md, Me, Mf, Md_prime;
  std::optional<BaryPoint> R, R_prime;  // midpoints of AP, AP'
  BaryPoint N1;
  std::optional<BaryPoint> M, M_prime;  // K(Q'), K(Q)
  BaryPoint A0, B0, C0;                 // T_P(D0 E0 F0)
  BaryPoint A0_prime, B0_prime, C0_prime;
  BaryPoint A3_prime, B3_prime, C3_prime;  // T_{P'}(D E F)
  BaryPoint O, H;
  BaryPoint D2, E2, F2;  // traces of Q
  std::optional<BaryPoint> Ha, Hb, Hc;  // traces of H; empty if H is that vertex

  Map3 T_P, T_P_prime;

  /// Vertex R of Λ: the midpoint of AP, or Q' when P is infinite.
  const BaryPoint& lambda_R() const { return R ? *R : Q_prime; }
  /// Vertex R' of Λ': the midpoint of AP', or Q when P' is infinite.
  const BaryPoint& lambda_R_prime() const { return R_prime ? *R_prime : Q; }

  /// (name, point) pairs in a fixed order; absent points are skipped.
  std::vector<std::pair<std::string, BaryPoint>> named_points() const;
};

Configuration build_configuration(const BaryPoint& p);

}  // namespace halfturn
