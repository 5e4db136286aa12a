#include <doctest.h>

#include <set>

#include "halfturn/constructions.hpp"
#include "halfturn/maps.hpp"
#include "halfturn/symbolic.hpp"
#include "support.hpp"

using namespace halfturn;
namespace sym = halfturn::symbolic;

namespace {

const Poly x = Poly::var(Var::x), y = Poly::var(Var::y), z = Poly::var(Var::z);

}  // namespace

TEST_CASE("generic configuration formulas") {
  const auto& cfg = sym::sym_configuration();
  const sym::SymPoint q{{x * (y + z), y * (x + z), z * (x + y)}};
  CHECK(sym::prove_proportional(cfg.at("Q"), q).all_zero());
  CHECK(sym::prove_proportional(cfg.at("D_0"), sym::constant_point(0, 1, 1)).all_zero());
  CHECK(sym::prove_proportional(cfg.at("N_1"), sym::constant_point(2, 1, 1)).all_zero());
  const Poly s2 = x * y + y * z + z * x;
  const sym::SymPoint o{{x * pow(y + z, 2) * (s2 - x * x), y * pow(z + x, 2) * (s2 - y * y),
                         z * pow(x + y, 2) * (s2 - z * z)}};
  CHECK(sym::prove_proportional(cfg.at("O"), o).all_zero());
}

TEST_CASE("prove_proportional") {
  const sym::SymPoint p = sym::generic_point();
  CHECK(sym::prove_proportional(p, p).all_zero());
  const auto& cfg = sym::sym_configuration();
  sym::SymPoint scaled = sym::complement(sym::isotomic(p));
  for (std::size_t i = 0; i < 3; ++i) scaled[i] = scaled[i] * x * y * z;
  CHECK(sym::prove_proportional(cfg.at("Q"), scaled).all_zero());
  CHECK(sym::prove_proportional(sym::anticomplement(cfg.at("O")), cfg.at("H")).all_zero());
  CHECK(!sym::prove_proportional(p, sym::constant_point(1, 1, 1)).all_zero());
}

TEST_CASE("every theorem is proved") {
  std::set<std::string> seen;
  for (auto name : sym::kTheoremNames) {
    const sym::ProofReport r = sym::prove_theorem(name);
    INFO(name);
    CHECK(r.theorem == name);
    CHECK(!r.identities.empty());
    CHECK(r.proved());
    CHECK(r.status() == "proved");
    CHECK(r.first_failure() == nullptr);
    CHECK_NOTHROW(sym::require_proved(r));
    for (const auto& id : r.identities) {
      CHECK(id.vanishes);
      CHECK(id.residual.empty());
      CHECK(id.degree <= 40);
    }
    seen.insert(r.theorem);
  }
  CHECK(seen.size() == sym::kTheoremNames.size());
  CHECK_THROWS_AS(sym::prove_theorem("bogus"), Error);
}

TEST_CASE("halfturn proof has the six bisections") {
  const auto r = sym::prove_theorem("halfturn");
  int bisections = 0;
  for (const auto& id : r.identities) bisections += id.label.rfind("bisect ", 0) == 0 ? 1 : 0;
  CHECK(bisections == 6);
}

TEST_CASE("a failing identity is reported") {
  sym::ProofReport r{"demo", {{"x = 0", 1, false, "x"}}};
  CHECK(!r.proved());
  CHECK(r.status() == "failed");
  REQUIRE(r.first_failure() != nullptr);
  CHECK_THROWS_AS(sym::require_proved(r), Error);
}

TEST_CASE("proofs are deterministic") {
  const auto a = sym::prove_all(), b = sym::prove_all();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].identities.size() == b[i].identities.size());
    for (std::size_t j = 0; j < a[i].identities.size(); ++j) {
      CHECK(a[i].identities[j].label == b[i].identities[j].label);
      CHECK(a[i].identities[j].degree == b[i].identities[j].degree);
    }
  }
}

TEST_CASE("symbolic points evaluate to the numeric configuration") {
  const auto& scfg = sym::sym_configuration();
  std::mt19937_64 gen(31);
  for (int i = 0; i < 12; ++i) {
    const BaryPoint p = testing::random_valid(gen, 20);
    const Configuration cfg = build_configuration(p);
    const Valuation v = sym::valuation_at(p);
    INFO("P = " << p.str());
    int compared = 0;
    for (const auto& [name, numeric] : cfg.named_points()) {
      INFO(name);
      const auto value = sym::evaluate(scfg.at(name), v);
      REQUIRE(value);
      CHECK(*value == numeric);
      ++compared;
    }
    CHECK(compared >= 36);
    const auto inv = scfg.t_p_prime_inverse();
    Map3::Rows rows;
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) rows[r][c] = inv[r][c].evaluate(v);
    }
    CHECK(Map3(rows) == tp_prime_inverse(p));
  }
}

TEST_CASE("spot checks agree with the numeric pipeline at (1:2:3)") {
  const auto& scfg = sym::sym_configuration();
  const Valuation v = sym::valuation_at(BaryPoint(1, 2, 3));
  CHECK(sym::evaluate(scfg.at("O"), v) == BaryPoint(250, 224, 54));
  CHECK(sym::evaluate(sym::half_turn(scfg.at("N_1"), scfg.at("R")), v) == BaryPoint(5, 4, 3));
}
