#pragma once

#include <array>

#include "halfturn/kernel.hpp"

namespace halfturn {

/// 3×3 exact matrix acting on column vectors of homogeneous barycentrics.
/// A map is affine iff its three column sums are equal and nonzero; that is
/// the only affinity certificate, there is no separate affine type.
class Map3 {
 public:
  using Rows = std::array<std::array<Rational, 3>, 3>;

  Map3() = default;
  explicit Map3(Rows rows) : rows_(std::move(rows)) {}

  static Map3 identity();

  const Rational& at(std::size_t row, std::size_t col) const { return rows_[row][col]; }
  const Rows& rows() const { return rows_; }

  Rational determinant() const;
  bool is_invertible() const { return !determinant().is_zero(); }
  bool is_affine() const;

  friend bool operator==(const Map3&, const Map3&) = default;

 private:
  Rows rows_{};
};

/// Image of `p`; throws ZeroImage when `p` lies in the kernel.
BaryPoint apply(const Map3& m, const BaryPoint& p);

/// Matrix product: `compose(m1, m2)` applies `m2` first.
Map3 compose(const Map3& m1, const Map3& m2);
Map3 invert(const Map3& m);

/// Equality up to a nonzero scalar.
bool proportional(const Map3& m1, const Map3& m2);

/// The complement map K: (x:y:z) -> (y+z : z+x : x+y).
Map3 complement_map();
Map3 anticomplement_map();

BaryPoint complement(const BaryPoint& p);
BaryPoint anticomplement(const BaryPoint& p);

/// (yz : zx : xy); rejects points on a side line.
BaryPoint isotomic(const BaryPoint& p);

/// The unique affine map with src[i] -> dst[i], built as N_dst · N_src^{-1}
/// where the columns of N_* are the sum-normalized points.
Map3 map_from_correspondence(const std::array<BaryPoint, 3>& src,
                             const std::array<BaryPoint, 3>& dst);

/// Closed-form inverse of T_{P'} (the affine map taking ABC to the cevian
/// triangle of the isotomic conjugate of P), with rows
/// (−xx′, yx′, zx′ / xy′, −yy′, zy′ / xz′, yz′, −zz′) where
/// (x′,y′,z′) = (x(y+z), y(z+x), z(x+y)). Every column sums to 2xyz.
Map3 tp_prime_inverse(const BaryPoint& p);

}  // namespace halfturn
