#include "halfturn/maps.hpp"

#include "halfturn/constructions.hpp"

namespace halfturn {

Map3 Map3::identity() {
  return Map3(Rows{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
}

Rational Map3::determinant() const {
  const auto& r = rows_;
  return r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) -
         r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
         r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
}

bool Map3::is_affine() const {
  std::array<Rational, 3> sums;
  for (std::size_t c = 0; c < 3; ++c) {
    sums[c] = rows_[0][c] + rows_[1][c] + rows_[2][c];
  }
  return !sums[0].is_zero() && sums[0] == sums[1] && sums[1] == sums[2];
}

BaryPoint apply(const Map3& m, const BaryPoint& p) {
  RationalTriple r;
  for (std::size_t i = 0; i < 3; ++i) {
    r[i] = m.at(i, 0) * p[0] + m.at(i, 1) * p[1] + m.at(i, 2) * p[2];
  }
  if (r[0].is_zero() && r[1].is_zero() && r[2].is_zero()) {
    throw Error(ErrorCode::ZeroImage, p.str() + " is in the kernel");
  }
  return BaryPoint::from_rationals(r);
}

Map3 compose(const Map3& m1, const Map3& m2) {
  Map3::Rows out{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Rational s;
      for (std::size_t k = 0; k < 3; ++k) s += m1.at(i, k) * m2.at(k, j);
      out[i][j] = s;
    }
  }
  return Map3(out);
}

Map3 invert(const Map3& m) {
  const Rational det = m.determinant();
  if (det.is_zero()) throw Error(ErrorCode::Singular, "matrix is not invertible");
  Map3::Rows out{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      // adj[i][j] = cofactor of entry (j, i)
      const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      out[i][j] = (m.at(r0, c0) * m.at(r1, c1) - m.at(r0, c1) * m.at(r1, c0)) / det;
    }
  }
  return Map3(out);
}

bool proportional(const Map3& m1, const Map3& m2) {
  std::array<Rational, 9> a, b;
  for (std::size_t i = 0; i < 9; ++i) {
    a[i] = m1.at(i / 3, i % 3);
    b[i] = m2.at(i / 3, i % 3);
  }
  bool a_zero = true, b_zero = true;
  for (std::size_t i = 0; i < 9; ++i) {
    a_zero = a_zero && a[i].is_zero();
    b_zero = b_zero && b[i].is_zero();
  }
  if (a_zero || b_zero) return a_zero && b_zero;
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = i + 1; j < 9; ++j) {
      if (a[i] * b[j] != a[j] * b[i]) return false;
    }
  }
  return true;
}

Map3 complement_map() {
  return Map3(Map3::Rows{{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}});
}

Map3 anticomplement_map() {
  return Map3(Map3::Rows{{{-1, 1, 1}, {1, -1, 1}, {1, 1, -1}}});
}

BaryPoint complement(const BaryPoint& p) {
  return BaryPoint(p[1] + p[2], p[2] + p[0], p[0] + p[1]);
}

BaryPoint anticomplement(const BaryPoint& p) {
  return BaryPoint(p[1] + p[2] - p[0], p[2] + p[0] - p[1], p[0] + p[1] - p[2]);
}

BaryPoint isotomic(const BaryPoint& p) {
  if (p[0] == 0 || p[1] == 0 || p[2] == 0) {
    throw Error(ErrorCode::OnSideLine, p.str() + " has a zero coordinate");
  }
  return BaryPoint(p[1] * p[2], p[2] * p[0], p[0] * p[1]);
}

namespace {

Map3 normalized_columns(const std::array<BaryPoint, 3>& pts) {
  Map3::Rows rows{};
  for (std::size_t c = 0; c < 3; ++c) {
    const Integer s = pts[c].sum();
    if (s == 0) throw Error(ErrorCode::InfinitePoint, pts[c].str());
    for (std::size_t r = 0; r < 3; ++r) rows[r][c] = Rational(pts[c][r], s);
  }
  return Map3(rows);
}

}  // namespace

Map3 map_from_correspondence(const std::array<BaryPoint, 3>& src,
                             const std::array<BaryPoint, 3>& dst) {
  if (collinear(src[0], src[1], src[2])) {
    throw Error(ErrorCode::CollinearSources,
                src[0].str() + ", " + src[1].str() + ", " + src[2].str());
  }
  const Map3 n_src = normalized_columns(src);
  const Map3 n_dst = normalized_columns(dst);
  return compose(n_dst, invert(n_src));
}

Map3 tp_prime_inverse(const BaryPoint& p) {
  try {
    validate_p(p);
  } catch (const Error& e) {
    throw Error(ErrorCode::DegenerateP, e.what());
  }
  const Integer& x = p[0];
  const Integer& y = p[1];
  const Integer& z = p[2];
  const Integer xq = x * (y + z);
  const Integer yq = y * (z + x);
  const Integer zq = z * (x + y);
  auto q = [](const Integer& v) { return Rational(v); };
  return Map3(Map3::Rows{{
      {q(-x * xq), q(y * xq), q(z * xq)},
      {q(x * yq), q(-y * yq), q(z * yq)},
      {q(x * zq), q(y * zq), q(-z * zq)},
  }});
}

}  // namespace halfturn
