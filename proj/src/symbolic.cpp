#include "halfturn/symbolic.hpp"

#include <algorithm>
#include <functional>

namespace halfturn::symbolic {

int SymTriple::degree() const {
  return std::max({c[0].degree(), c[1].degree(), c[2].degree()});
}

SymPoint constant_point(long x, long y, long z) { return {{Poly(x), Poly(y), Poly(z)}}; }

SymPoint generic_point() {
  return {{Poly::var(Var::x), Poly::var(Var::y), Poly::var(Var::z)}};
}

SymTriple cross(const SymTriple& u, const SymTriple& v) {
  return {{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]}};
}

Poly dot(const SymTriple& u, const SymTriple& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

Poly det3(const SymTriple& u, const SymTriple& v, const SymTriple& w) {
  return dot(u, cross(v, w));
}

SymLine join(const SymPoint& p, const SymPoint& q) { return cross(p, q); }
SymPoint meet(const SymLine& l, const SymLine& m) { return cross(l, m); }

SymPoint midpoint(const SymPoint& p, const SymPoint& q) {
  const Poly sp = p.sum(), sq = q.sum();
  return {{sq * p[0] + sp * q[0], sq * p[1] + sp * q[1], sq * p[2] + sp * q[2]}};
}

SymPoint half_turn(const SymPoint& center, const SymPoint& p) {
  const Poly sp2 = Poly(2) * p.sum(), sn = center.sum();
  return {{sp2 * center[0] - sn * p[0], sp2 * center[1] - sn * p[1],
           sp2 * center[2] - sn * p[2]}};
}

SymPoint complement(const SymPoint& p) {
  return {{p[1] + p[2], p[2] + p[0], p[0] + p[1]}};
}

SymPoint anticomplement(const SymPoint& p) {
  return {{p[1] + p[2] - p[0], p[2] + p[0] - p[1], p[0] + p[1] - p[2]}};
}

SymPoint isotomic(const SymPoint& p) { return {{p[1] * p[2], p[2] * p[0], p[0] * p[1]}}; }

SymPoint trace(const SymPoint& p, int vertex_index) {
  SymPoint t = p;
  t[static_cast<std::size_t>(vertex_index)] = Poly();
  return t;
}

SymPoint apply(const SymMatrix& m, const SymPoint& p) {
  SymPoint r;
  for (std::size_t i = 0; i < 3; ++i) r[i] = m[i][0] * p[0] + m[i][1] * p[1] + m[i][2] * p[2];
  return r;
}

SymMatrix compose(const SymMatrix& m1, const SymMatrix& m2) {
  SymMatrix r;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      r[i][j] = m1[i][0] * m2[0][j] + m1[i][1] * m2[1][j] + m1[i][2] * m2[2][j];
    }
  }
  return r;
}

SymMatrix adjugate(const SymMatrix& m) {
  SymMatrix r;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  }
  return r;
}

namespace {

// Columns p_j · Π_{k≠j} σ(p_k): the sum-normalized points times Π σ(p_k).
SymMatrix scaled_columns(const std::array<SymPoint, 3>& pts) {
  const std::array<Poly, 3> sums{pts[0].sum(), pts[1].sum(), pts[2].sum()};
  SymMatrix m;
  for (std::size_t j = 0; j < 3; ++j) {
    const Poly scale = sums[(j + 1) % 3] * sums[(j + 2) % 3];
    for (std::size_t i = 0; i < 3; ++i) m[i][j] = pts[j][i] * scale;
  }
  return m;
}

bool is_reference_triangle(const std::array<SymPoint, 3>& pts) {
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (!(pts[j][i] == Poly(i == j ? 1 : 0))) return false;
    }
  }
  return true;
}

}  // namespace

SymMatrix affine_map(const std::array<SymPoint, 3>& src, const std::array<SymPoint, 3>& dst) {
  const SymMatrix n_dst = scaled_columns(dst);
  if (is_reference_triangle(src)) return n_dst;
  return compose(n_dst, adjugate(scaled_columns(src)));
}

std::optional<BaryPoint> evaluate(const SymPoint& p, const Valuation& values) {
  RationalTriple r{p[0].evaluate(values), p[1].evaluate(values), p[2].evaluate(values)};
  if (r[0].is_zero() && r[1].is_zero() && r[2].is_zero()) return std::nullopt;
  return BaryPoint::from_rationals(r);
}

Valuation valuation_at(const BaryPoint& p) {
  return {Rational(p[0]), Rational(p[1]), Rational(p[2]), Rational(0), Rational(0),
          Rational(0)};
}

namespace {

SymPoint circumcenter_closed(const SymPoint& p) {
  const Poly s2 = p[0] * p[1] + p[1] * p[2] + p[2] * p[0];
  SymPoint o;
  for (std::size_t i = 0; i < 3; ++i) {
    const Poly pair = p[(i + 1) % 3] + p[(i + 2) % 3];
    o[i] = p[i] * pair * pair * (s2 - p[i] * p[i]);
  }
  return o;
}

SymPoint orthocenter_closed(const SymPoint& p) {
  const Poly s2 = p[0] * p[1] + p[1] * p[2] + p[2] * p[0];
  const std::array<Poly, 3> dp{s2 - p[0] * p[0], s2 - p[1] * p[1], s2 - p[2] * p[2]};
  SymPoint h;
  for (std::size_t i = 0; i < 3; ++i) h[i] = p[i] * dp[(i + 1) % 3] * dp[(i + 2) % 3];
  return h;
}

SymMatrix tp_prime_inverse_closed(const SymPoint& p) {
  const SymPoint q{{p[0] * (p[1] + p[2]), p[1] * (p[2] + p[0]), p[2] * (p[0] + p[1])}};
  SymMatrix m;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      m[i][j] = p[j] * q[i];
      if (i == j) m[i][j] = -m[i][j];
    }
  }
  return m;
}

}  // namespace

SymConfiguration::SymConfiguration(const SymPoint& p) {
  const SymPoint a = constant_point(1, 0, 0), b = constant_point(0, 1, 0),
                 c = constant_point(0, 0, 1);
  const SymPoint p_prime = isotomic(p);
  const SymPoint q = complement(p_prime);
  const SymPoint q_prime = complement(p);
  const SymPoint d = trace(p, 0), e = trace(p, 1), f = trace(p, 2);
  const SymPoint d0 = constant_point(0, 1, 1), e0 = constant_point(1, 0, 1),
                 f0 = constant_point(1, 1, 0);
  const SymPoint d3 = half_turn(d0, d), e3 = half_turn(e0, e), f3 = half_turn(f0, f);

  t_p_ = affine_map({a, b, c}, {d, e, f});
  t_p_prime_ = affine_map({a, b, c}, {d3, e3, f3});
  t_p_prime_inverse_ = tp_prime_inverse_closed(p);

  const SymPoint o = circumcenter_closed(p);
  const SymPoint h = orthocenter_closed(p);

  add("A", a);
  add("B", b);
  add("C", c);
  add("P", p);
  add("P'", p_prime);
  add("Q", q);
  add("Q'", q_prime);
  add("D", d);
  add("E", e);
  add("F", f);
  add("D_3", d3);
  add("E_3", e3);
  add("F_3", f3);
  add("D_0", d0);
  add("E_0", e0);
  add("F_0", f0);
  add("M_d", midpoint(a, d));
  add("M_e", midpoint(b, e));
  add("M_f", midpoint(c, f));
  add("M_d'", midpoint(a, d3));
  add("R", midpoint(a, p));
  add("R'", midpoint(a, p_prime));
  add("N_1", midpoint(a, d0));
  add("M", complement(q_prime));
  add("M'", complement(q));
  add("A_0", symbolic::apply(t_p_, d0));
  add("B_0", symbolic::apply(t_p_, e0));
  add("C_0", symbolic::apply(t_p_, f0));
  add("A_0'", symbolic::apply(t_p_prime_, d0));
  add("B_0'", symbolic::apply(t_p_prime_, e0));
  add("C_0'", symbolic::apply(t_p_prime_, f0));
  add("A_3'", symbolic::apply(t_p_prime_, d));
  add("B_3'", symbolic::apply(t_p_prime_, e));
  add("C_3'", symbolic::apply(t_p_prime_, f));
  add("O", o);
  add("H", h);
  add("D_2", trace(q, 0));
  add("E_2", trace(q, 1));
  add("F_2", trace(q, 2));
  add("H_a", trace(h, 0));
  add("H_b", trace(h, 1));
  add("H_c", trace(h, 2));
}

void SymConfiguration::add(std::string name, SymPoint p) {
  points_.emplace_back(std::move(name), std::move(p));
}

const SymPoint& SymConfiguration::at(std::string_view name) const {
  for (const auto& [n, p] : points_) {
    if (n == name) return p;
  }
  throw Error(ErrorCode::UnknownName, "no symbolic point named '" + std::string(name) + "'");
}

SymConfiguration sym_configuration() { return SymConfiguration(generic_point()); }

ProportionalityReport prove_proportional(const SymPoint& u, const SymPoint& v) {
  const SymTriple w = cross(u, v);
  return {{w[0], w[1], w[2]}};
}

bool ProofReport::proved() const {
  return !identities.empty() &&
         std::all_of(identities.begin(), identities.end(),
                     [](const Identity& i) { return i.vanishes; });
}

const Identity* ProofReport::first_failure() const {
  for (const auto& i : identities) {
    if (!i.vanishes) return &i;
  }
  return nullptr;
}

void require_proved(const ProofReport& report) {
  if (const Identity* bad = report.first_failure()) {
    throw Error(ErrorCode::ProofFailed,
                report.theorem + "/" + bad->label + ": " + bad->residual);
  }
  if (report.identities.empty()) {
    throw Error(ErrorCode::ProofFailed, report.theorem + ": no identities");
  }
}

namespace {

Identity vanishing(std::string label, int degree, std::initializer_list<Poly> polys) {
  Identity id{std::move(label), degree, true, {}};
  for (const auto& p : polys) {
    if (!p.is_zero()) {
      id.vanishes = false;
      id.residual = p.str();
      break;
    }
  }
  return id;
}

Identity proportional(std::string label, const SymPoint& u, const SymPoint& v) {
  if (u.is_zero() || v.is_zero()) {
    return {std::move(label), 0, false, "degenerate: zero triple"};
  }
  const auto r = prove_proportional(u, v);
  return vanishing(std::move(label), u.degree() + v.degree(), {r.cross[0], r.cross[1], r.cross[2]});
}

Identity collinear(std::string label, const SymPoint& p, const SymPoint& q, const SymPoint& r) {
  return vanishing(std::move(label), p.degree() + q.degree() + r.degree(), {det3(p, q, r)});
}

// The two lines meet on the line at infinity.
Identity parallel(std::string label, const SymLine& l, const SymLine& m) {
  if (l.is_zero() || m.is_zero()) {
    return {std::move(label), 0, false, "degenerate: undefined line"};
  }
  return vanishing(std::move(label), l.degree() + m.degree(), {meet(l, m).sum()});
}

Identity matrices_proportional(std::string label, const SymMatrix& m1, const SymMatrix& m2) {
  int d1 = -1, d2 = -1;
  for (std::size_t i = 0; i < 9; ++i) {
    d1 = std::max(d1, m1[i / 3][i % 3].degree());
    d2 = std::max(d2, m2[i / 3][i % 3].degree());
  }
  Identity id{std::move(label), d1 + d2, true, {}};
  for (std::size_t i = 0; i < 9 && id.vanishes; ++i) {
    for (std::size_t j = i + 1; j < 9; ++j) {
      const Poly w = m1[i / 3][i % 3] * m2[j / 3][j % 3] - m1[j / 3][j % 3] * m2[i / 3][i % 3];
      if (!w.is_zero()) {
        id.vanishes = false;
        id.residual = w.str();
        break;
      }
    }
  }
  return id;
}

// Cross-ratio (a,b;c,d) = −1 on side `side`, using the two coordinates that
// parametrize that side: det(c,a)·det(d,b) + det(c,b)·det(d,a) = 0.
Identity harmonic(std::string label, int side, const SymPoint& a, const SymPoint& b,
                  const SymPoint& c, const SymPoint& d) {
  const std::size_t s = static_cast<std::size_t>((side + 1) % 3);
  const std::size_t t = static_cast<std::size_t>((side + 2) % 3);
  auto det2 = [s, t](const SymPoint& u, const SymPoint& v) { return u[s] * v[t] - u[t] * v[s]; };
  const Poly w = det2(c, a) * det2(d, b) + det2(c, b) * det2(d, a);
  return vanishing(std::move(label), a.degree() + b.degree() + c.degree() + d.degree(), {w});
}

// αa − βb where c = αa + βb on side `side`.
SymPoint harmonic_conjugate(int side, const SymPoint& a, const SymPoint& b, const SymPoint& c) {
  const std::size_t s = static_cast<std::size_t>((side + 1) % 3);
  const std::size_t t = static_cast<std::size_t>((side + 2) % 3);
  const Poly alpha = c[s] * b[t] - c[t] * b[s];
  const Poly beta = a[s] * c[t] - a[t] * c[s];
  SymPoint r;
  for (std::size_t i = 0; i < 3; ++i) r[i] = alpha * a[i] - beta * b[i];
  return r;
}

using Builder = std::function<std::vector<Identity>()>;

std::vector<Identity> halfturn_identities() {
  const auto cfg = sym_configuration();
  auto P = [&cfg](const char* n) -> const SymPoint& { return cfg.at(n); };
  const SymPoint& n1 = P("N_1");
  std::vector<Identity> ids;
  const std::array<std::pair<const char*, const char*>, 6> pairs{{
      {"A", "D_0"}, {"R", "Q'"}, {"M_d", "M_d'"}, {"Q", "R'"}, {"A_0", "A_0'"}, {"D_0", "A"}}};
  for (const auto& [from, to] : pairs) {
    ids.push_back(proportional(std::string("bisect ") + from + " -> " + to,
                               half_turn(n1, P(from)), P(to)));
  }
  ids.push_back(proportional("N_1 = midpoint(E_0,F_0)", n1, midpoint(P("E_0"), P("F_0"))));

  const SymLine ap = join(P("A"), P("P")), aq = join(P("A"), P("Q"));
  const SymLine d0q = join(P("D_0"), P("Q")), d0a0 = join(P("D_0"), P("A_0"));
  ids.push_back(proportional("Lambda vertex AP.AQ = A", meet(ap, aq), P("A")));
  ids.push_back(proportional("Lambda vertex AP.D_0Q = M_d", meet(ap, d0q), P("M_d")));
  ids.push_back(proportional("Lambda vertex AP.D_0A_0 = R", meet(ap, d0a0), P("R")));
  ids.push_back(proportional("Lambda vertex AQ.D_0Q = Q", meet(aq, d0q), P("Q")));
  ids.push_back(proportional("Lambda vertex AQ.D_0A_0 = A_0", meet(aq, d0a0), P("A_0")));
  ids.push_back(proportional("Lambda vertex D_0Q.D_0A_0 = D_0", meet(d0q, d0a0), P("D_0")));

  const SymLine d0qp = join(P("D_0"), P("Q'")), d0a0p = join(P("D_0"), P("A_0'"));
  const SymLine app = join(P("A"), P("P'")), aqp = join(P("A"), P("Q'"));
  ids.push_back(proportional("Lambda' vertex D_0Q'.D_0A_0' = D_0", meet(d0qp, d0a0p), P("D_0")));
  ids.push_back(proportional("Lambda' vertex D_0Q'.AP' = M_d'", meet(d0qp, app), P("M_d'")));
  ids.push_back(proportional("Lambda' vertex D_0Q'.AQ' = Q'", meet(d0qp, aqp), P("Q'")));
  ids.push_back(proportional("Lambda' vertex D_0A_0'.AP' = R'", meet(d0a0p, app), P("R'")));
  ids.push_back(proportional("Lambda' vertex D_0A_0'.AQ' = A_0'", meet(d0a0p, aqp), P("A_0'")));
  ids.push_back(proportional("Lambda' vertex AP'.AQ' = A", meet(app, aqp), P("A")));
  return ids;
}

std::vector<Identity> parallels_identities() {
  const auto cfg = sym_configuration();
  auto J = [&cfg](const char* u, const char* v) { return join(cfg.at(u), cfg.at(v)); };
  return {
      parallel("AP || D_0Q'", J("A", "P"), J("D_0", "Q'")),
      parallel("AQ || D_0A_0'", J("A", "Q"), J("D_0", "A_0'")),
      parallel("D_0Q || AP'", J("D_0", "Q"), J("A", "P'")),
      parallel("D_0A_0 || AQ'", J("D_0", "A_0"), J("A", "Q'")),
  };
}

std::vector<Identity> thm21_identities() {
  const auto cfg = sym_configuration();
  const SymPoint& q = cfg.at("Q");
  return {
      collinear("Q on D_0M_d", cfg.at("D_0"), cfg.at("M_d"), q),
      collinear("Q on E_0M_e", cfg.at("E_0"), cfg.at("M_e"), q),
      collinear("Q on F_0M_f", cfg.at("F_0"), cfg.at("M_f"), q),
  };
}

std::vector<Identity> thm23_identities() {
  const auto cfg = sym_configuration();
  auto P = [&cfg](const char* n) -> const SymPoint& { return cfg.at(n); };
  return {
      proportional("A_0 = midpoint(E,F)", P("A_0"), midpoint(P("E"), P("F"))),
      proportional("B_0 = midpoint(D,F)", P("B_0"), midpoint(P("D"), P("F"))),
      proportional("C_0 = midpoint(D,E)", P("C_0"), midpoint(P("D"), P("E"))),
      collinear("Q on AA_0", P("A"), P("A_0"), P("Q")),
      collinear("Q on BB_0", P("B"), P("B_0"), P("Q")),
      collinear("Q on CC_0", P("C"), P("C_0"), P("Q")),
  };
}

std::vector<Identity> cor22_identities() {
  const auto cfg = sym_configuration();
  auto P = [&cfg](const char* n) -> const SymPoint& { return cfg.at(n); };
  auto J = [&cfg](const char* u, const char* v) { return join(cfg.at(u), cfg.at(v)); };
  return {
      proportional("K(D_3) = M_d", complement(P("D_3")), P("M_d")),
      proportional("K(E_3) = M_e", complement(P("E_3")), P("M_e")),
      proportional("K(F_3) = M_f", complement(P("F_3")), P("M_f")),
      parallel("D_0Q || AP'", J("D_0", "Q"), J("A", "P'")),
      parallel("E_0Q || BP'", J("E_0", "Q"), J("B", "P'")),
      parallel("F_0Q || CP'", J("F_0", "Q"), J("C", "P'")),
      proportional("D_3 = trace of P' on BC", P("D_3"), trace(P("P'"), 0)),
  };
}

std::vector<Identity> cor24b_identities() {
  const auto cfg = sym_configuration();
  auto P = [&cfg](const char* n) -> const SymPoint& { return cfg.at(n); };
  return {
      collinear("D_0, R, A_0 collinear", P("D_0"), P("R"), P("A_0")),
      collinear("D_0, R, M collinear", P("D_0"), P("R"), P("M")),
      proportional("M = midpoint(D_0,R)", P("M"), midpoint(P("D_0"), P("R"))),
      proportional("M = midpoint(P,Q')", P("M"), midpoint(P("P"), P("Q'"))),
  };
}

std::vector<Identity> def31_parallels(const SymConfiguration& cfg, bool orthocenter) {
  auto P = [&cfg](const char* n) -> const SymPoint& { return cfg.at(n); };
  std::vector<Identity> ids;
  const std::array<std::array<const char*, 3>, 3> rows{{
      {"D_0", "A", "D"}, {"E_0", "B", "E"}, {"F_0", "C", "F"}}};
  const char* center = orthocenter ? "H" : "O";
  for (const auto& r : rows) {
    const char* anchor = orthocenter ? r[1] : r[0];
    ids.push_back(parallel(std::string(center) + anchor + " || Q" + r[2],
                           join(P(center), P(anchor)), join(P("Q"), P(r[2]))));
  }
  return ids;
}

std::vector<Identity> o_formula_identities() {
  const auto cfg = sym_configuration();
  auto P = [&cfg](const char* n) -> const SymPoint& { return cfg.at(n); };
  const SymMatrix inv_by_adjugate = adjugate(cfg.t_p_prime());
  const SymPoint kq = complement(P("Q"));
  std::vector<Identity> ids{
      matrices_proportional("closed-form T_P'^-1 = adj(T_P')", cfg.t_p_prime_inverse(),
                            inv_by_adjugate),
      proportional("T_P'^-1 K(Q) (closed matrix) = O", symbolic::apply(cfg.t_p_prime_inverse(), kq), P("O")),
      proportional("T_P'^-1 K(Q) (adjugate) = O", symbolic::apply(inv_by_adjugate, kq), P("O")),
      proportional("T_P(Q) = Q", symbolic::apply(cfg.t_p(), P("Q")), P("Q")),
      proportional("T_P'(Q) = P'", symbolic::apply(cfg.t_p_prime(), P("Q")), P("P'")),
      proportional("T_P'(K(P')) = P'", symbolic::apply(cfg.t_p_prime(), complement(P("P'"))), P("P'")),
      parallel("AQ || A_3'P'", join(P("A"), P("Q")), join(P("A_3'"), P("P'"))),
  };
  for (auto& id : def31_parallels(cfg, false)) ids.push_back(std::move(id));
  return ids;
}

std::vector<Identity> h_formula_identities() {
  const auto cfg = sym_configuration();
  auto P = [&cfg](const char* n) -> const SymPoint& { return cfg.at(n); };
  const SymPoint kq = complement(P("Q"));
  std::vector<Identity> ids{
      proportional("K^-1(O) = H", anticomplement(P("O")), P("H")),
      proportional("K^-1 T_P'^-1 K(Q) = H",
                   anticomplement(symbolic::apply(adjugate(cfg.t_p_prime()), kq)), P("H")),
  };
  for (auto& id : def31_parallels(cfg, true)) ids.push_back(std::move(id));
  return ids;
}

std::vector<Identity> thm34_identities() {
  const auto cfg = sym_configuration();
  auto P = [&cfg](const char* n) -> const SymPoint& { return cfg.at(n); };
  const std::array<std::array<const char*, 4>, 3> sides{{
      {"D", "D_3", "D_2", "H_a"}, {"E", "E_3", "E_2", "H_b"}, {"F", "F_3", "F_2", "H_c"}}};
  std::vector<Identity> ids;
  for (int side = 0; side < 3; ++side) {
    const auto& s = sides[static_cast<std::size_t>(side)];
    const std::string tag = std::string("(") + s[0] + "," + s[1] + ";" + s[2] + "," + s[3] + ")";
    ids.push_back(harmonic("cross-ratio " + tag + " = -1", side, P(s[0]), P(s[1]), P(s[2]), P(s[3])));
    ids.push_back(proportional(std::string(s[3]) + " = harmonic conjugate of " + s[2],
                               harmonic_conjugate(side, P(s[0]), P(s[1]), P(s[2])), P(s[3])));
  }
  return ids;
}

std::vector<Identity> nagel_centers_identities() {
  const Poly a = Poly::var(Var::a), b = Poly::var(Var::b), c = Poly::var(Var::c);
  const Poly u = b + c - a, v = c + a - b, w = a + b - c;
  const SymPoint nagel{{u, v, w}};
  const SymPoint gergonne{{v * w, w * u, u * v}};
  const SymPoint incenter{{a, b, c}};

  auto g = [](const Poly& a, const Poly& b, const Poly& c) {
    return a * a * (b + c - a) * (a * a + b * b + c * c - Poly(2) * a * b - Poly(2) * a * c);
  };
  auto h_den = [](const Poly& a, const Poly& b, const Poly& c) {
    return a * a + b * b + c * c - Poly(2) * a * b - Poly(2) * a * c;
  };
  const SymPoint x6600{{g(a, b, c), g(b, c, a), g(c, a, b)}};
  const Poly da = h_den(a, b, c), db = h_den(b, c, a), dc = h_den(c, a, b);
  const SymPoint x6601{{u * db * dc, v * dc * da, w * da * db}};

  const SymConfiguration na(nagel);
  const SymPoint kq = complement(na.at("Q"));

  // Classical circumcenter and orthocenter in terms of side lengths.
  const Poly a2 = a * a, b2 = b * b, c2 = c * c;
  const Poly sa = b2 + c2 - a2, sb = c2 + a2 - b2, sc = a2 + b2 - c2;
  const SymPoint x3{{a2 * sa, b2 * sb, c2 * sc}};
  const SymPoint x4{{sb * sc, sc * sa, sa * sb}};
  const SymConfiguration ge(gergonne);

  return {
      proportional("isotomic(Gergonne) = Nagel", isotomic(gergonne), nagel),
      proportional("isotomcomplement(Gergonne) = incenter", ge.at("Q"), incenter),
      proportional("O(Nagel) = X(6600)", na.at("O"), x6600),
      proportional("T_P'^-1 K(Q) at Nagel = X(6600)", symbolic::apply(adjugate(na.t_p_prime()), kq), x6600),
      proportional("H(Nagel) = X(6601)", na.at("H"), x6601),
      proportional("K^-1(O(Nagel)) = X(6601)", anticomplement(x6600), x6601),
      proportional("O(Gergonne) = circumcenter X(3)", ge.at("O"), x3),
      proportional("H(Gergonne) = orthocenter X(4)", ge.at("H"), x4),
  };
}

Builder builder_for(std::string_view name) {
  if (name == "halfturn") return halfturn_identities;
  if (name == "parallels") return parallels_identities;
  if (name == "thm21") return thm21_identities;
  if (name == "thm23") return thm23_identities;
  if (name == "cor22") return cor22_identities;
  if (name == "cor24b") return cor24b_identities;
  if (name == "o_formula") return o_formula_identities;
  if (name == "h_formula") return h_formula_identities;
  if (name == "thm34") return thm34_identities;
  if (name == "nagel_centers") return nagel_centers_identities;
  throw Error(ErrorCode::UnknownName, "unknown theorem '" + std::string(name) + "'");
}

}  // namespace

ProofReport prove_theorem(std::string_view name) {
  return ProofReport{std::string(name), builder_for(name)()};
}

std::vector<ProofReport> prove_all() {
  std::vector<ProofReport> out;
  for (auto name : kTheoremNames) out.push_back(prove_theorem(name));
  return out;
}

}  // namespace halfturn::symbolic
