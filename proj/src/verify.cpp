#include "halfturn/verify.hpp"

#include <algorithm>
#include <random>

#include "halfturn/constructions.hpp"
#include "halfturn/embed.hpp"
#include "halfturn/maps.hpp"

namespace halfturn {

bool VerifyReport::pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

void VerifyReport::append(const VerifyReport& other) {
  claims.insert(claims.end(), other.claims.begin(), other.claims.end());
}

std::vector<BaryPoint> sample_valid_p(std::uint64_t seed, std::size_t count, long bound) {
  if (bound < 2) throw Error(ErrorCode::ParseError, "bound must be at least 2");
  std::mt19937_64 gen(seed);
  const std::uint64_t range = 2 * static_cast<std::uint64_t>(bound) + 1;
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % range;
  auto draw = [&]() -> long {
    std::uint64_t r;
    do {
      r = gen();
    } while (r >= limit);
    return static_cast<long>(r % range) - bound;
  };
  std::vector<BaryPoint> out;
  while (out.size() < count) {
    const long x = draw(), y = draw(), z = draw();
    if (x == 0 || y == 0 || z == 0) continue;
    const BaryPoint p(x, y, z);
    try {
      validate_p(p);
    } catch (const Error&) {
      continue;
    }
    out.push_back(p);
  }
  return out;
}

std::vector<BaryPoint> branch_probes() {
  return {
      // xy + yz + zx = 0
      BaryPoint(2, 2, -1), BaryPoint(-1, 2, 2), BaryPoint(3, 6, -2), BaryPoint(-3, 10, 15),
      // x + y + z = 0
      BaryPoint(1, 2, -3), BaryPoint(2, -5, 3), BaryPoint(-4, 1, 3),
  };
}

namespace {

class Checker {
 public:
  explicit Checker(const BaryPoint& p) : report_{p, {}} {}

  void claim(std::string id, bool pass, std::optional<std::string> witness = std::nullopt) {
    report_.claims.push_back({std::move(id), pass, std::move(witness)});
  }

  void vacuous(std::string id, const std::string& why) {
    claim(std::move(id), true, "vacuous: " + why);
  }

  void same(std::string id, const BaryPoint& got, const BaryPoint& expected,
            std::optional<std::string> note = std::nullopt) {
    if (got == expected) {
      claim(std::move(id), true, std::move(note));
    } else {
      claim(std::move(id), false, "got " + got.str() + ", expected " + expected.str());
    }
  }

  void collinear3(std::string id, const BaryPoint& p, const BaryPoint& q, const BaryPoint& r) {
    const Integer d = det3(p.coords(), q.coords(), r.coords());
    claim(std::move(id), d == 0, d == 0 ? std::nullopt : std::optional("det = " + d.get_str()));
  }

  // Line p1p2 parallel to line q1q2. A line through two coincident points is
  // undefined and the claim holds vacuously.
  void parallel4(std::string id, const BaryPoint& p1, const BaryPoint& p2, const BaryPoint& q1,
                 const BaryPoint& q2) {
    if (p1 == p2 || q1 == q2) {
      vacuous(std::move(id), "coincident points define no line");
      return;
    }
    const BaryLine l = join(p1, p2), m = join(q1, q2);
    if (l == m) {
      claim(std::move(id), true, "identical lines");
      return;
    }
    const BaryPoint x = meet(l, m);
    claim(std::move(id), is_infinite(x), "lines meet at " + x.str());
  }

  // The lines (l1,l2) and (m1,m2) meet at v; identical lines only require v
  // to lie on them.
  void vertex(std::string id, const BaryPoint& l1, const BaryPoint& l2, const BaryPoint& m1,
              const BaryPoint& m2, const BaryPoint& v) {
    if (l1 == l2 || m1 == m2) {
      vacuous(std::move(id), "coincident points define no line");
      return;
    }
    const BaryLine l = join(l1, l2), m = join(m1, m2);
    if (l == m) {
      claim(std::move(id), lies_on(v, l), "identical lines");
      return;
    }
    same(std::move(id), meet(l, m), v);
  }

  VerifyReport take() { return std::move(report_); }

 private:
  VerifyReport report_;
};

}  // namespace

VerifyReport verify_halfturn(const BaryPoint& p) {
  const Configuration cfg = build_configuration(p);
  const BaryPoint A = vertex::A();
  Checker ck(p);

  const std::optional<std::string> r_note =
      cfg.p_infinite ? std::optional<std::string>("P infinite: R replaced by Q'") : std::nullopt;
  const std::optional<std::string> rp_note =
      cfg.p_prime_infinite ? std::optional<std::string>("P' infinite: R' replaced by Q")
                           : std::nullopt;
  const BaryPoint& R = cfg.lambda_R();
  const BaryPoint& Rp = cfg.lambda_R_prime();

  ck.same("halfturn/N_1=midpoint(E_0,F_0)", midpoint(cfg.E0, cfg.F0), cfg.N1);
  ck.same("halfturn/A->D_0", half_turn(cfg.N1, A), cfg.D0);
  ck.same("halfturn/R->Q'", half_turn(cfg.N1, R), cfg.Q_prime, r_note);
  ck.same("halfturn/M_d->M_d'", half_turn(cfg.N1, cfg.Md), cfg.Md_prime);
  ck.same("halfturn/Q->R'", half_turn(cfg.N1, cfg.Q), Rp, rp_note);
  ck.same("halfturn/A_0->A_0'", half_turn(cfg.N1, cfg.A0), cfg.A0_prime);
  ck.same("halfturn/D_0->A", half_turn(cfg.N1, cfg.D0), A);

  // Λ = (AP)(AQ)(D_0Q)(D_0A_0)
  ck.vertex("halfturn/Lambda AP.AQ=A", A, cfg.P, A, cfg.Q, A);
  ck.vertex("halfturn/Lambda AP.D_0Q=M_d", A, cfg.P, cfg.D0, cfg.Q, cfg.Md);
  ck.vertex("halfturn/Lambda AP.D_0A_0=R", A, cfg.P, cfg.D0, cfg.A0, R);
  ck.vertex("halfturn/Lambda AQ.D_0Q=Q", A, cfg.Q, cfg.D0, cfg.Q, cfg.Q);
  ck.vertex("halfturn/Lambda AQ.D_0A_0=A_0", A, cfg.Q, cfg.D0, cfg.A0, cfg.A0);
  ck.vertex("halfturn/Lambda D_0Q.D_0A_0=D_0", cfg.D0, cfg.Q, cfg.D0, cfg.A0, cfg.D0);
  // Λ' = (D_0Q')(D_0A_0')(AP')(AQ')
  ck.vertex("halfturn/Lambda' D_0Q'.D_0A_0'=D_0", cfg.D0, cfg.Q_prime, cfg.D0, cfg.A0_prime, cfg.D0);
  ck.vertex("halfturn/Lambda' D_0Q'.AP'=M_d'", cfg.D0, cfg.Q_prime, A, cfg.P_prime, cfg.Md_prime);
  ck.vertex("halfturn/Lambda' D_0Q'.AQ'=Q'", cfg.D0, cfg.Q_prime, A, cfg.Q_prime, cfg.Q_prime);
  ck.vertex("halfturn/Lambda' D_0A_0'.AP'=R'", cfg.D0, cfg.A0_prime, A, cfg.P_prime, Rp);
  ck.vertex("halfturn/Lambda' D_0A_0'.AQ'=A_0'", cfg.D0, cfg.A0_prime, A, cfg.Q_prime, cfg.A0_prime);
  ck.vertex("halfturn/Lambda' AP'.AQ'=A", A, cfg.P_prime, A, cfg.Q_prime, A);

  ck.parallel4("parallels/AP||D_0Q'", A, cfg.P, cfg.D0, cfg.Q_prime);
  ck.parallel4("parallels/AQ||D_0A_0'", A, cfg.Q, cfg.D0, cfg.A0_prime);
  ck.parallel4("parallels/D_0Q||AP'", cfg.D0, cfg.Q, A, cfg.P_prime);
  ck.parallel4("parallels/D_0A_0||AQ'", cfg.D0, cfg.A0, A, cfg.Q_prime);
  return ck.take();
}

VerifyReport verify_section2(const BaryPoint& p) {
  const Configuration cfg = build_configuration(p);
  const BaryPoint A = vertex::A(), B = vertex::B(), C = vertex::C();
  Checker ck(p);

  ck.collinear3("thm21/Q on D_0M_d", cfg.D0, cfg.Md, cfg.Q);
  ck.collinear3("thm21/Q on E_0M_e", cfg.E0, cfg.Me, cfg.Q);
  ck.collinear3("thm21/Q on F_0M_f", cfg.F0, cfg.Mf, cfg.Q);

  ck.same("cor22/K(D_3)=M_d", complement(cfg.D3), cfg.Md);
  ck.same("cor22/K(E_3)=M_e", complement(cfg.E3), cfg.Me);
  ck.same("cor22/K(F_3)=M_f", complement(cfg.F3), cfg.Mf);
  ck.parallel4("cor22/D_0Q||AP'", cfg.D0, cfg.Q, A, cfg.P_prime);
  ck.parallel4("cor22/E_0Q||BP'", cfg.E0, cfg.Q, B, cfg.P_prime);
  ck.parallel4("cor22/F_0Q||CP'", cfg.F0, cfg.Q, C, cfg.P_prime);
  ck.same("cor22/D_3=trace of P'", *trace(cfg.P_prime, 0), cfg.D3);

  ck.same("thm23/A_0=midpoint(E,F)", midpoint(cfg.E, cfg.F), cfg.A0);
  ck.same("thm23/B_0=midpoint(D,F)", midpoint(cfg.D, cfg.F), cfg.B0);
  ck.same("thm23/C_0=midpoint(D,E)", midpoint(cfg.D, cfg.E), cfg.C0);
  ck.collinear3("thm23/Q on AA_0", A, cfg.A0, cfg.Q);
  ck.collinear3("thm23/Q on BB_0", B, cfg.B0, cfg.Q);
  ck.collinear3("thm23/Q on CC_0", C, cfg.C0, cfg.Q);

  if (cfg.R && cfg.M) {
    ck.collinear3("cor24b/D_0,R,A_0 collinear", cfg.D0, *cfg.R, cfg.A0);
    ck.collinear3("cor24b/D_0,R,M collinear", cfg.D0, *cfg.R, *cfg.M);
    ck.same("cor24b/M=midpoint(D_0,R)", midpoint(cfg.D0, *cfg.R), *cfg.M);
    ck.same("cor24b/halfturn about M: D_0->R", half_turn(*cfg.M, cfg.D0), *cfg.R);
  } else {
    ck.vacuous("cor24b", "P is infinite");
  }

  if (cfg.p_prime_infinite) {
    const BaryPoint k_a0 = complement(cfg.A0);
    ck.collinear3("cor24c/M_d on QD_0", cfg.Q, cfg.D0, cfg.Md);
    ck.collinear3("cor24c/A_0' on QD_0", cfg.Q, cfg.D0, cfg.A0_prime);
    ck.collinear3("cor24c/K(A_0) on QD_0", cfg.Q, cfg.D0, k_a0);
  } else {
    ck.vacuous("cor24c", "P' is ordinary");
  }

  if (cfg.R && cfg.R_prime) {
    const bool ok = congruent_quads(CartesianTriangle::default_triangle(),
                                    {*cfg.R, cfg.A0, cfg.Q, cfg.Md},
                                    {cfg.Q_prime, cfg.A0_prime, *cfg.R_prime, cfg.Md_prime});
    ck.claim("cor24a/RA_0QM_d congruent to Q'A_0'R'M_d'", ok);
  } else {
    ck.vacuous("cor24a", "P or P' is infinite");
  }
  return ck.take();
}

namespace {

void harmonic_side(Checker& ck, const std::string& side, const BaryPoint& d,
                   const BaryPoint& d3, const BaryPoint& d2, const std::optional<BaryPoint>& ha) {
  const std::string id = "thm34/harmonic on side " + side;
  if (d == d3) {
    const bool ok = d2 == d && ha && *ha == d;
    ck.claim(id, ok, "degenerate: all four traces coincide with the midpoint");
    return;
  }
  if (!ha) {
    ck.vacuous(id, "H is the opposite vertex, so its trace is undefined");
    return;
  }
  if (d2 == d3) {
    ck.claim(id, *ha == d3, "degenerate: P' infinite, trace of Q coincides with trace of P'");
    return;
  }
  const CrossRatio cr = cross_ratio(d, d3, d2, *ha);
  const bool conj = harmonic_conjugate(d, d3, d2) == *ha;
  ck.claim(id, cr.value == Rational(-1) && conj, "cross-ratio = " + cr.str());
}

}  // namespace

VerifyReport verify_section3(const BaryPoint& p) {
  const Configuration cfg = build_configuration(p);
  const BaryPoint A = vertex::A(), B = vertex::B(), C = vertex::C();
  Checker ck(p);

  ck.parallel4("def31/OD_0||QD", cfg.O, cfg.D0, cfg.Q, cfg.D);
  ck.parallel4("def31/OE_0||QE", cfg.O, cfg.E0, cfg.Q, cfg.E);
  ck.parallel4("def31/OF_0||QF", cfg.O, cfg.F0, cfg.Q, cfg.F);
  ck.parallel4("def31/HA||QD", cfg.H, A, cfg.Q, cfg.D);
  ck.parallel4("def31/HB||QE", cfg.H, B, cfg.Q, cfg.E);
  ck.parallel4("def31/HC||QF", cfg.H, C, cfg.Q, cfg.F);

  const Map3 closed_inverse = tp_prime_inverse(p);
  ck.claim("thm32/closed T_P'^-1 proportional to inverse of T_P'",
           proportional(closed_inverse, invert(cfg.T_P_prime)));
  ck.claim("thm32/closed T_P'^-1 columns sum to 2xyz", [&] {
    const Rational target(2 * p[0] * p[1] * p[2]);
    for (std::size_t c = 0; c < 3; ++c) {
      if (closed_inverse.at(0, c) + closed_inverse.at(1, c) + closed_inverse.at(2, c) != target) {
        return false;
      }
    }
    return true;
  }());
  ck.same("thm32/O matrix route = closed form", apply(closed_inverse, complement(cfg.Q)),
          circumcenter_closed_form(p));
  ck.same("thm32/O via inverted T_P'", apply(invert(cfg.T_P_prime), complement(cfg.Q)), cfg.O);
  ck.same("thm32/H=K^-1(O)", anticomplement(cfg.O), cfg.H);
  ck.same("thm32/H closed form", orthocenter_closed_form(p), cfg.H);
  if (cfg.p_prime_infinite) {
    ck.vacuous("thm32/remark H=T_L^-1(Q)", "P' is infinite");
    ck.same("thm32/P' infinite: O=Q", cfg.O, cfg.Q);
    ck.same("thm32/P' infinite: H=Q", cfg.H, cfg.Q);
  } else {
    try {
      ck.claim("thm32/remark H=T_L^-1(Q)", remark_check_tl(p));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InfinitePoint) throw;
      ck.vacuous("thm32/remark H=T_L^-1(Q)", "a trace of L is infinite");
    }
  }

  ck.same("maps/T_P(Q)=Q", apply(cfg.T_P, cfg.Q), cfg.Q);
  ck.same("maps/T_P'(Q)=P'", apply(cfg.T_P_prime, cfg.Q), cfg.P_prime);
  ck.same("maps/T_P'(K(P'))=P'", apply(cfg.T_P_prime, complement(cfg.P_prime)), cfg.P_prime);
  const Map3 s_prime = compose(cfg.T_P_prime, cfg.T_P);
  ck.same("maps/S' fixes (1:-1:0)", apply(s_prime, BaryPoint(1, -1, 0)), BaryPoint(1, -1, 0));
  ck.same("maps/S' fixes (0:1:-1)", apply(s_prime, BaryPoint(0, 1, -1)), BaryPoint(0, 1, -1));
  ck.parallel4("maps/AQ||A_3'P'", A, cfg.Q, cfg.A3_prime, cfg.P_prime);

  harmonic_side(ck, "a", cfg.D, cfg.D3, cfg.D2, cfg.Ha);
  harmonic_side(ck, "b", cfg.E, cfg.E3, cfg.E2, cfg.Hb);
  harmonic_side(ck, "c", cfg.F, cfg.F3, cfg.F2, cfg.Hc);
  return ck.take();
}

VerifyReport verify_all(const BaryPoint& p) {
  VerifyReport r = verify_halfturn(p);
  r.append(verify_section2(p));
  r.append(verify_section3(p));
  return r;
}

std::vector<VerifyReport> verify_random(std::uint64_t seed, std::size_t count, long bound) {
  std::vector<BaryPoint> points = branch_probes();
  const auto sampled = sample_valid_p(seed, count, bound);
  points.insert(points.end(), sampled.begin(), sampled.end());
  std::vector<VerifyReport> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(verify_all(p));
  return out;
}

}  // namespace halfturn
