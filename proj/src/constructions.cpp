#include "halfturn/constructions.hpp"

namespace halfturn {

void validate_p(const BaryPoint& p) {
  const Integer& x = p[0];
  const Integer& y = p[1];
  const Integer& z = p[2];
  if (x == 0 || y == 0 || z == 0) {
    throw Error(ErrorCode::OnSideOfABC, "P = " + p.str() + " lies on a side of ABC");
  }
  if (x + y == 0 || y + z == 0 || z + x == 0) {
    throw Error(ErrorCode::OnSideOfAnticomplementary,
                "P = " + p.str() + " lies on a side of the anticomplementary triangle");
  }
}

BaryPoint isotomcomplement(const BaryPoint& p) {
  validate_p(p);
  return BaryPoint(p[0] * (p[1] + p[2]), p[1] * (p[2] + p[0]), p[2] * (p[0] + p[1]));
}

Map3 cevian_map(const BaryPoint& p) {
  validate_p(p);
  return map_from_correspondence({vertex::A(), vertex::B(), vertex::C()},
                                 {*trace(p, 0), *trace(p, 1), *trace(p, 2)});
}

namespace {

// x″, y″, z″
std::array<Integer, 3> double_primes(const BaryPoint& p) {
  const Integer s2 = p[0] * p[1] + p[1] * p[2] + p[2] * p[0];
  return {s2 - p[0] * p[0], s2 - p[1] * p[1], s2 - p[2] * p[2]};
}

BaryPoint nonzero_or_throw(Triple t, const BaryPoint& p, const char* what) {
  auto h = BaryPoint::try_make(std::move(t));
  if (!h) throw Error(ErrorCode::ZeroImage, std::string(what) + " vanishes for P = " + p.str());
  return *h;
}

}  // namespace

BaryPoint circumcenter_closed_form(const BaryPoint& p) {
  validate_p(p);
  const auto pp = double_primes(p);
  const Integer& x = p[0];
  const Integer& y = p[1];
  const Integer& z = p[2];
  const Integer yz = y + z, zx = z + x, xy = x + y;
  return nonzero_or_throw({x * yz * yz * pp[0], y * zx * zx * pp[1], z * xy * xy * pp[2]},
                          p, "circumcenter closed form");
}

BaryPoint orthocenter_closed_form(const BaryPoint& p) {
  validate_p(p);
  const auto pp = double_primes(p);
  return nonzero_or_throw(
      {p[0] * pp[1] * pp[2], p[1] * pp[2] * pp[0], p[2] * pp[0] * pp[1]}, p,
      "orthocenter closed form");
}

BaryPoint generalized_circumcenter(const BaryPoint& p) {
  const BaryPoint by_matrix =
      apply(tp_prime_inverse(p), complement(isotomcomplement(p)));
  const BaryPoint closed = circumcenter_closed_form(p);
  if (!(by_matrix == closed)) {
    throw Error(ErrorCode::InternalInconsistency,
                "O routes disagree for P = " + p.str() + ": " + by_matrix.str() +
                    " vs " + closed.str());
  }
  return closed;
}

BaryPoint generalized_orthocenter(const BaryPoint& p) {
  const BaryPoint by_matrix = anticomplement(generalized_circumcenter(p));
  const BaryPoint closed = orthocenter_closed_form(p);
  if (!(by_matrix == closed)) {
    throw Error(ErrorCode::InternalInconsistency,
                "H routes disagree for P = " + p.str() + ": " + by_matrix.str() +
                    " vs " + closed.str());
  }
  return closed;
}

bool remark_check_tl(const BaryPoint& p) {
  validate_p(p);
  const BaryPoint p_prime = isotomic(p);
  if (is_infinite(p_prime)) {
    throw Error(ErrorCode::InfinitePoint, "P' = " + p_prime.str() + " is infinite");
  }
  const BaryPoint l = anticomplement(p_prime);
  const std::array<BaryPoint, 3> anti{BaryPoint(-1, 1, 1), BaryPoint(1, -1, 1),
                                      BaryPoint(1, 1, -1)};
  std::array<BaryPoint, 3> traces{anti[0], anti[1], anti[2]};
  for (std::size_t i = 0; i < 3; ++i) {
    const BaryLine opposite = join(anti[(i + 1) % 3], anti[(i + 2) % 3]);
    traces[i] = meet(join(anti[i], l), opposite);
  }
  const Map3 t_l = map_from_correspondence(anti, traces);
  return apply(invert(t_l), isotomcomplement(p)) == generalized_orthocenter(p);
}

Configuration build_configuration(const BaryPoint& p) {
  validate_p(p);
  const BaryPoint a = vertex::A(), b = vertex::B(), c = vertex::C();
  const BaryPoint p_prime = isotomic(p);
  const BaryPoint q = complement(p_prime);
  const BaryPoint q_prime = complement(p);
  const bool p_inf = is_infinite(p);
  const bool pp_inf = is_infinite(p_prime);

  const BaryPoint d = *trace(p, 0), e = *trace(p, 1), f = *trace(p, 2);
  const BaryPoint d0(0, 1, 1), e0(1, 0, 1), f0(1, 1, 0);
  const BaryPoint d3 = half_turn(d0, d), e3 = half_turn(e0, e), f3 = half_turn(f0, f);

  const Map3 t_p = map_from_correspondence({a, b, c}, {d, e, f});
  const Map3 t_pp = map_from_correspondence({a, b, c}, {d3, e3, f3});

  const BaryPoint h = generalized_orthocenter(p);

  return Configuration{
      .P = p,
      .P_prime = p_prime,
      .Q = q,
      .Q_prime = q_prime,
      .p_infinite = p_inf,
      .p_prime_infinite = pp_inf,
      .D = d,
      .E = e,
      .F = f,
      .D3 = d3,
      .E3 = e3,
      .F3 = f3,
      .D0 = d0,
      .E0 = e0,
      .F0 = f0,
      .Md = midpoint(a, d),
      .Me = midpoint(b, e),
      .Mf = midpoint(c, f),
      .Md_prime = midpoint(a, d3),
      .R = p_inf ? std::nullopt : std::optional(midpoint(a, p)),
      .R_prime = pp_inf ? std::nullopt : std::optional(midpoint(a, p_prime)),
      .N1 = midpoint(a, d0),
      .M = p_inf ? std::nullopt : std::optional(complement(q_prime)),
      .M_prime = pp_inf ? std::nullopt : std::optional(complement(q)),
      .A0 = apply(t_p, d0),
      .B0 = apply(t_p, e0),
      .C0 = apply(t_p, f0),
      .A0_prime = apply(t_pp, d0),
      .B0_prime = apply(t_pp, e0),
      .C0_prime = apply(t_pp, f0),
      .A3_prime = apply(t_pp, d),
      .B3_prime = apply(t_pp, e),
      .C3_prime = apply(t_pp, f),
      .O = generalized_circumcenter(p),
      .H = h,
      .D2 = *trace(q, 0),
      .E2 = *trace(q, 1),
      .F2 = *trace(q, 2),
      .Ha = trace(h, 0),
      .Hb = trace(h, 1),
      .Hc = trace(h, 2),
      .T_P = t_p,
      .T_P_prime = t_pp,
  };
}

std::vector<std::pair<std::string, BaryPoint>> Configuration::named_points() const {
  std::vector<std::pair<std::string, BaryPoint>> out;
  auto add = [&out](const char* name, const BaryPoint& pt) { out.emplace_back(name, pt); };
  auto add_opt = [&out](const char* name, const std::optional<BaryPoint>& pt) {
    if (pt) out.emplace_back(name, *pt);
  };
  add("A", vertex::A());
  add("B", vertex::B());
  add("C", vertex::C());
  add("P", P);
  add("P'", P_prime);
  add("Q", Q);
  add("Q'", Q_prime);
  add("D", D);
  add("E", E);
  add("F", F);
  add("D_3", D3);
  add("E_3", E3);
  add("F_3", F3);
  add("D_0", D0);
  add("E_0", E0);
  add("F_0", F0);
  add("M_d", Md);
  add("M_e", Me);
  add("M_f", Mf);
  add("M_d'", Md_prime);
  add_opt("R", R);
  add_opt("R'", R_prime);
  add("N_1", N1);
  add_opt("M", M);
  add_opt("M'", M_prime);
  add("A_0", A0);
  add("B_0", B0);
  add("C_0", C0);
  add("A_0'", A0_prime);
  add("B_0'", B0_prime);
  add("C_0'", C0_prime);
  add("A_3'", A3_prime);
  add("B_3'", B3_prime);
  add("C_3'", C3_prime);
  add("O", O);
  add("H", H);
  add("D_2", D2);
  add("E_2", E2);
  add("F_2", F2);
  add_opt("H_a", Ha);
  add_opt("H_b", Hb);
  add_opt("H_c", Hc);
  return out;
}

}  // namespace halfturn
