#include <doctest.h>

#include "halfturn/kernel.hpp"
#include "support.hpp"

using namespace halfturn;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_CASE("normal form") {
  CHECK(BaryPoint(-2, -4, 6).str() == "1:2:-3");
  CHECK(BaryPoint(0, -3, 6).str() == "0:1:-2");
  CHECK(BaryPoint(-2, -2, 4) == BaryPoint(1, 1, -2));
  CHECK(code_of([] { BaryPoint(0, 0, 0); }) == ErrorCode::ZeroTriple);
  CHECK(!BaryPoint::try_make({Integer(0), Integer(0), Integer(0)}));
}

TEST_CASE("literal grammar") {
  CHECK(BaryPoint::parse("1:2:3") == BaryPoint(1, 2, 3));
  CHECK(BaryPoint::parse("1/2:1/3:1/6") == BaryPoint(3, 2, 1));
  CHECK(BaryPoint::parse("-2:-2:4") == BaryPoint(1, 1, -2));
  CHECK(BaryLine::parse("0:0:5") == BaryLine(0, 0, 1));
  CHECK(code_of([] { BaryPoint::parse("1:2"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { BaryPoint::parse("1:2:3:4"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { BaryPoint::parse("0:0:0"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { BaryPoint::parse("a:b:c"); }) == ErrorCode::ParseError);
}

TEST_CASE("is_infinite") {
  CHECK(!is_infinite(BaryPoint(1, 0, 0)));
  CHECK(is_infinite(BaryPoint(0, 1, -1)));
  CHECK(is_infinite(BaryPoint(1, 1, -2)));
}

TEST_CASE("join") {
  CHECK(join(vertex::A(), vertex::B()) == BaryLine(0, 0, 1));
  CHECK(join(vertex::B(), vertex::C()) == BaryLine(1, 0, 0));
  CHECK(join(vertex::A(), BaryPoint(5, 8, 9)) == BaryLine(0, 9, -8));
  CHECK(code_of([] { join(BaryPoint(1, 2, 3), BaryPoint(2, 4, 6)); }) ==
        ErrorCode::IdenticalPoints);
}

TEST_CASE("meet") {
  CHECK(meet(BaryLine(1, 0, 0), BaryLine(0, 1, 0)) == BaryPoint(0, 0, 1));
  CHECK(meet(join(vertex::A(), BaryPoint(5, 8, 9)), side_a()) == BaryPoint(0, 8, 9));
  CHECK(meet(BaryLine(0, 0, 1), line_at_infinity()) == BaryPoint(1, -1, 0));
  CHECK(code_of([] { meet(BaryLine(1, 2, 3), BaryLine(1, 2, 3)); }) == ErrorCode::IdenticalLines);
}

TEST_CASE("collinear and concurrent") {
  CHECK(!collinear(vertex::A(), vertex::B(), vertex::C()));
  CHECK(collinear(BaryPoint(1, 0, 0), BaryPoint(0, 1, 1), BaryPoint(2, 1, 1)));
  const BaryPoint a0(7, 8, 9);
  CHECK(collinear(BaryPoint(0, 1, 1), BaryPoint(7, 2, 3), a0));
  CHECK(testing::affine_collinear(BaryPoint(0, 1, 1), BaryPoint(7, 2, 3), a0));
  CHECK(concurrent(side_a(), side_b(), BaryLine(1, 1, 0)));
  CHECK(!concurrent(side_a(), side_b(), side_c()));
}

TEST_CASE("parallel") {
  const BaryLine qd = join(BaryPoint(5, 8, 9), BaryPoint(0, 2, 3));
  const BaryLine od0 = join(BaryPoint(250, 224, 54), BaryPoint(0, 1, 1));
  CHECK(qd == BaryLine(-6, 15, -10));
  CHECK(od0 == BaryLine(-85, 125, -125));
  CHECK(parallel(qd, od0));
  CHECK(meet(qd, od0).sum() == 0);
  CHECK(!parallel(BaryLine(0, 0, 1), BaryLine(1, 0, 0)));
  CHECK(parallel(qd, qd));
  const BaryLine through = parallel_through(vertex::A(), side_a());
  CHECK(lies_on(vertex::A(), through));
  CHECK(parallel(through, side_a()));
}

TEST_CASE("midpoint") {
  CHECK(midpoint(vertex::B(), vertex::C()) == BaryPoint(0, 1, 1));
  CHECK(midpoint(vertex::A(), BaryPoint(1, 2, 3)) == BaryPoint(7, 2, 3));
  CHECK(midpoint(vertex::A(), BaryPoint(0, 1, 1)) == BaryPoint(2, 1, 1));
  CHECK(code_of([] { midpoint(vertex::A(), BaryPoint(0, 1, -1)); }) == ErrorCode::InfinitePoint);
}

TEST_CASE("half_turn") {
  const BaryPoint n1(2, 1, 1);
  CHECK(half_turn(n1, vertex::A()) == BaryPoint(0, 1, 1));
  CHECK(half_turn(n1, BaryPoint(7, 2, 3)) == BaryPoint(5, 4, 3));
  CHECK(half_turn(n1, BaryPoint(0, 1, -1)) == BaryPoint(0, 1, -1));
  CHECK(code_of([] { half_turn(BaryPoint(1, -1, 0), vertex::A()); }) ==
        ErrorCode::InfiniteCenter);
}

TEST_CASE("harmonic_conjugate") {
  const BaryPoint B = vertex::B(), C = vertex::C();
  CHECK(harmonic_conjugate(B, C, BaryPoint(0, 1, 1)) == BaryPoint(0, 1, -1));
  CHECK(harmonic_conjugate(B, C, BaryPoint(0, 1, 2)) == BaryPoint(0, 1, -2));
  CHECK(cross_ratio(B, C, BaryPoint(0, 1, 2), BaryPoint(0, 1, -2)).value == Rational(-1));
  const BaryPoint hc = harmonic_conjugate(BaryPoint(0, 2, 3), BaryPoint(0, 3, 2), BaryPoint(0, 8, 9));
  CHECK(hc == BaryPoint(0, 4, 21));
  CHECK(testing::bc_cross_ratio(BaryPoint(0, 2, 3), BaryPoint(0, 3, 2), BaryPoint(0, 8, 9), hc) ==
        Rational(-1));
  CHECK(code_of([] { harmonic_conjugate(vertex::B(), vertex::B(), vertex::C()); }) ==
        ErrorCode::IdenticalPoints);
  CHECK(code_of([] { harmonic_conjugate(vertex::B(), vertex::C(), vertex::A()); }) ==
        ErrorCode::NotOnLine);
  CHECK(code_of([] { harmonic_conjugate(vertex::B(), vertex::C(), vertex::B()); }) ==
        ErrorCode::CoincidesWithBasePoint);
}

TEST_CASE("cross_ratio") {
  const BaryPoint B = vertex::B(), C = vertex::C();
  CHECK(cross_ratio(B, C, BaryPoint(0, 1, 1), BaryPoint(0, 1, -1)).value == Rational(-1));
  CHECK(cross_ratio(B, C, BaryPoint(0, 1, 5), BaryPoint(0, 1, 5)).value == Rational(1));
  const CrossRatio cr =
      cross_ratio(BaryPoint(0, 2, 3), BaryPoint(0, 3, 2), BaryPoint(0, 8, 9), BaryPoint(0, 4, 21));
  CHECK(cr.value == Rational(-1));
  CHECK(cr.str() == "-1");
  // d = a gives an infinite value
  CHECK(cross_ratio(B, C, BaryPoint(0, 1, 1), B).is_infinite());
  CHECK(code_of([] { cross_ratio(vertex::A(), vertex::B(), vertex::C(), BaryPoint(1, 1, 1)); }) ==
        ErrorCode::NotCollinear);
}

TEST_CASE("cross_ratio agrees with the affine-parameter oracle") {
  std::mt19937_64 gen(3);
  int checked = 0;
  while (checked < 200) {
    auto on_bc = [&] {
      for (;;) {
        const long y = testing::draw(gen, 30), z = testing::draw(gen, 30);
        if ((y != 0 || z != 0) && y + z != 0) return BaryPoint(0, y, z);
      }
    };
    const BaryPoint a = on_bc(), b = on_bc(), c = on_bc(), d = on_bc();
    if (a == b || c == b || d == a) continue;
    const CrossRatio cr = cross_ratio(a, b, c, d);
    REQUIRE(cr.value);
    CHECK(*cr.value == testing::bc_cross_ratio(a, b, c, d));
    ++checked;
  }
}

TEST_CASE("kernel properties over random points") {
  std::mt19937_64 gen(2024);
  for (int i = 0; i < 300; ++i) {
    const BaryPoint p = testing::random_point(gen, 40), q = testing::random_point(gen, 40),
                    r = testing::random_point(gen, 40);
    if (p == q || p == r || q == r) continue;
    if (!collinear(p, q, r)) {
      CHECK(meet(join(p, q), join(p, r)) == p);
      CHECK(!concurrent(join(p, q), join(q, r), join(r, p)));
    } else {
      CHECK(join(p, q) == join(p, r));
    }
    CHECK(lies_on(p, join(p, q)));
    CHECK(lies_on(q, join(p, q)));

    // normal form uniqueness: scaling never changes the representation
    Triple scaled{p[0] * -7, p[1] * -7, p[2] * -7};
    CHECK(BaryPoint(scaled) == p);

    if (!is_infinite(p) && !is_infinite(q)) {
      const BaryPoint m = midpoint(p, q);
      CHECK(is_infinite(harmonic_conjugate(p, q, m)));
      // midpoint oracle: averaged affine weights
      const auto wp = testing::weights(p), wq = testing::weights(q);
      std::array<Rational, 3> avg;
      for (std::size_t k = 0; k < 3; ++k) avg[k] = (wp[k] + wq[k]) / Rational(2);
      CHECK(testing::same_point(avg, m));
      CHECK(half_turn(p, half_turn(p, r)) == r);
    }
    if (collinear(p, q, r)) {
      const BaryPoint hc = harmonic_conjugate(p, q, r);
      CHECK(harmonic_conjugate(p, q, hc) == r);
      CHECK(cross_ratio(p, q, r, hc).value == Rational(-1));
    } else {
      // r' on pq: pick a combination and test the involution there
      const BaryPoint s(Triple{p[0] * 2 + q[0] * 3, p[1] * 2 + q[1] * 3, p[2] * 2 + q[2] * 3});
      if (s != p && s != q) {
        const BaryPoint hc = harmonic_conjugate(p, q, s);
        CHECK(harmonic_conjugate(p, q, hc) == s);
        CHECK(cross_ratio(p, q, s, hc).value == Rational(-1));
      }
    }
  }
}

TEST_CASE("traces") {
  CHECK(trace(BaryPoint(1, 2, 3), 0) == BaryPoint(0, 2, 3));
  CHECK(trace(BaryPoint(1, 2, 3), 1) == BaryPoint(1, 0, 3));
  CHECK(trace(BaryPoint(1, 2, 3), 2) == BaryPoint(1, 2, 0));
  CHECK(!trace(vertex::A(), 0));
}
