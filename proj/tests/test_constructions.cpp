#include <doctest.h>

#include "halfturn/constructions.hpp"
#include "halfturn/maps.hpp"
#include "support.hpp"

using namespace halfturn;

namespace {

ErrorCode code_of(const BaryPoint& p) {
  try {
    validate_p(p);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_CASE("validate_p") {
  CHECK_NOTHROW(validate_p(BaryPoint(1, 2, 3)));
  CHECK(code_of(BaryPoint(0, 1, 1)) == ErrorCode::OnSideOfABC);
  CHECK(code_of(BaryPoint(1, -1, 2)) == ErrorCode::OnSideOfAnticomplementary);
  CHECK_NOTHROW(validate_p(BaryPoint(2, 2, -1)));
  CHECK_NOTHROW(validate_p(BaryPoint(1, 2, -3)));
}

TEST_CASE("isotomcomplement") {
  CHECK(isotomcomplement(BaryPoint(1, 1, 1)) == BaryPoint(1, 1, 1));
  CHECK(isotomcomplement(BaryPoint(1, 2, 3)) == BaryPoint(5, 8, 9));
  CHECK(isotomcomplement(BaryPoint(2, 2, -1)) == BaryPoint(1, 1, -2));
  // concurrency oracle: D_0M_d and E_0M_e meet at Q
  const Configuration cfg = build_configuration(BaryPoint(1, 2, 3));
  CHECK(meet(join(cfg.D0, cfg.Md), join(cfg.E0, cfg.Me)) == BaryPoint(5, 8, 9));
}

TEST_CASE("centroid configuration") {
  const Configuration cfg = build_configuration(BaryPoint(1, 1, 1));
  CHECK(cfg.D == cfg.D0);
  CHECK(cfg.E == cfg.E0);
  CHECK(cfg.F == cfg.F0);
  CHECK(cfg.Q == BaryPoint(1, 1, 1));
  CHECK(cfg.O == BaryPoint(1, 1, 1));
  CHECK(cfg.H == BaryPoint(1, 1, 1));
  CHECK(generalized_circumcenter(BaryPoint(1, 1, 1)) == BaryPoint(1, 1, 1));
  CHECK(generalized_orthocenter(BaryPoint(1, 1, 1)) == BaryPoint(1, 1, 1));
  CHECK(remark_check_tl(BaryPoint(1, 1, 1)));
}

TEST_CASE("P = (1:2:3) spot values with independent oracles") {
  const BaryPoint p(1, 2, 3);
  const Configuration cfg = build_configuration(p);
  CHECK(cfg.N1 == BaryPoint(2, 1, 1));
  CHECK(cfg.R == BaryPoint(7, 2, 3));
  CHECK(cfg.Q_prime == BaryPoint(5, 4, 3));
  CHECK(cfg.D2 == BaryPoint(0, 8, 9));
  CHECK(cfg.Ha == BaryPoint(0, 4, 21));
  CHECK(cfg.O == BaryPoint(125, 112, 27));
  CHECK(cfg.H == BaryPoint(7, 20, 105));

  // O: OD_0 ∥ QD and OE_0 ∥ QE in affine weights
  CHECK(testing::affine_parallel(cfg.O, cfg.D0, cfg.Q, cfg.D));
  CHECK(testing::affine_parallel(cfg.O, cfg.E0, cfg.Q, cfg.E));
  // H: HA ∥ QD, HB ∥ QE
  CHECK(testing::affine_parallel(cfg.H, vertex::A(), cfg.Q, cfg.D));
  CHECK(testing::affine_parallel(cfg.H, vertex::B(), cfg.Q, cfg.E));
  // N_1 is the average of A and D_0
  CHECK(testing::same_point({Rational(1, 2) , Rational(1, 4), Rational(1, 4)}, cfg.N1));
}

TEST_CASE("generalized centers") {
  CHECK(generalized_circumcenter(BaryPoint(1, 2, 3)) == BaryPoint(125, 112, 27));
  CHECK(generalized_orthocenter(BaryPoint(1, 2, 3)) == BaryPoint(7, 20, 105));
  CHECK(generalized_circumcenter(BaryPoint(2, 2, -1)) == BaryPoint(1, 1, -2));
  CHECK(generalized_orthocenter(BaryPoint(2, 2, -1)) == BaryPoint(1, 1, -2));
  CHECK(remark_check_tl(BaryPoint(1, 2, 3)));
  CHECK(remark_check_tl(BaryPoint(3, 1, 1)));
  CHECK(remark_check_tl(BaryPoint(5, -2, 7)));
}

TEST_CASE("Steiner circumellipse branch") {
  const Configuration cfg = build_configuration(BaryPoint(2, 2, -1));
  CHECK(cfg.p_prime_infinite);
  CHECK(!cfg.p_infinite);
  CHECK(cfg.O == BaryPoint(1, 1, -2));
  CHECK(cfg.H == BaryPoint(1, 1, -2));
  CHECK(cfg.Q == BaryPoint(1, 1, -2));
  CHECK(!cfg.R_prime);
  CHECK(!cfg.M_prime);
  CHECK(cfg.lambda_R_prime() == cfg.Q);
  CHECK(cfg.R);
}

TEST_CASE("infinite P branch") {
  const Configuration cfg = build_configuration(BaryPoint(1, 2, -3));
  CHECK(cfg.p_infinite);
  CHECK(!cfg.p_prime_infinite);
  CHECK(!cfg.R);
  CHECK(!cfg.M);
  CHECK(cfg.lambda_R() == cfg.Q_prime);
  CHECK(cfg.R_prime);
}

TEST_CASE("configuration invariants over sampled P") {
  std::mt19937_64 gen(17);
  for (int i = 0; i < 150; ++i) {
    const BaryPoint p = testing::random_valid(gen, 30);
    const Configuration cfg = build_configuration(p);
    const BaryPoint A = vertex::A(), B = vertex::B(), C = vertex::C();
    INFO("P = " << p.str());

    CHECK(cfg.N1 == midpoint(cfg.E0, cfg.F0));
    CHECK(cfg.N1 == midpoint(A, cfg.D0));
    CHECK(complement(cfg.D3) == cfg.Md);
    CHECK(parallel(join(cfg.D0, cfg.Q), join(A, cfg.P_prime)));
    CHECK(concurrent(join(A, cfg.A0), join(B, cfg.B0), join(C, cfg.C0)));
    CHECK(lies_on(cfg.Q, join(A, cfg.A0)));
    CHECK(concurrent(join(cfg.D0, cfg.Md), join(cfg.E0, cfg.Me), join(cfg.F0, cfg.Mf)));
    CHECK(lies_on(cfg.Q, join(cfg.D0, cfg.Md)));
    if (join(A, cfg.P) == join(cfg.D0, cfg.Q)) {
      CHECK(p[1] == p[2]);
      CHECK(lies_on(cfg.Md, join(A, cfg.P)));
    } else {
      CHECK(cfg.Md == meet(join(A, cfg.P), join(cfg.D0, cfg.Q)));
    }
    CHECK(cfg.A3_prime == apply(cfg.T_P_prime, cfg.D));
    if (cfg.R && cfg.M) {
      CHECK(half_turn(*cfg.M, cfg.D0) == *cfg.R);
      CHECK(collinear(cfg.D0, *cfg.R, cfg.A0));
    }
    if (!cfg.p_prime_infinite) {
      CHECK(testing::affine_parallel(vertex::A(), cfg.Q, cfg.A3_prime, cfg.P_prime));
    }
    CHECK(cfg.H == anticomplement(cfg.O));
    for (const auto& [name, q] : cfg.named_points()) {
      CHECK(BaryPoint(q.coords()) == q);
    }
  }
}

TEST_CASE("named point order is stable") {
  const Configuration cfg = build_configuration(BaryPoint(1, 2, 3));
  const auto named = cfg.named_points();
  REQUIRE(named.size() == 42);
  CHECK(named.front().first == "A");
  CHECK(named.back().first == "H_c");
}
