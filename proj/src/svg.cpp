#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "halfturn/embed.hpp"

namespace halfturn {

namespace {

std::string num(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

struct Drawn {
  std::string name;
  double x = 0, y = 0;  // SVG space (y down)
};

struct Direction {
  std::string name;
  double dx = 0, dy = 0;  // unit vector in SVG space
};

class Figure {
 public:
  explicit Figure(const CartesianTriangle& t) : t_(t) {}

  std::optional<Drawn> finite(const std::string& name, const BaryPoint& p) const {
    if (is_infinite(p)) return std::nullopt;
    const auto xy = t_.drawn(t_.to_cartesian(p));
    return Drawn{name, xy[0], -xy[1]};
  }

  // Direction of an infinite point: the displacement from the centroid to
  // centroid + p, embedded.
  Direction direction(const std::string& name, const BaryPoint& p) const {
    const auto g = t_.drawn(t_.to_cartesian(BaryPoint(1, 1, 1)));
    Triple shifted;
    for (std::size_t i = 0; i < 3; ++i) shifted[i] = p[i] + 1;
    const auto h = t_.drawn(t_.to_cartesian(BaryPoint(shifted)));
    double dx = h[0] - g[0], dy = -(h[1] - g[1]);
    const double n = std::hypot(dx, dy);
    return {name, dx / n, dy / n};
  }

 private:
  const CartesianTriangle& t_;
};

struct Side {
  std::string label;
  std::vector<std::pair<std::string, BaryPoint>> points;
};

}  // namespace

std::string render_svg(const Configuration& cfg, const CartesianTriangle& t,
                       const SvgOptions& opts) {
  const Figure fig(t);
  const BaryPoint A = vertex::A(), B = vertex::B(), C = vertex::C();

  std::vector<std::pair<std::string, BaryPoint>> labeled{
      {"A", A},        {"B", B},         {"C", C},           {"D", cfg.D},
      {"E", cfg.E},    {"F", cfg.F},     {"D_0", cfg.D0},    {"E_0", cfg.E0},
      {"F_0", cfg.F0}, {"P", cfg.P},     {"P'", cfg.P_prime}, {"Q", cfg.Q},
      {"Q'", cfg.Q_prime}, {"M_d", cfg.Md}, {"M_d'", cfg.Md_prime}, {"A_0", cfg.A0},
      {"A_0'", cfg.A0_prime}, {"N_1", cfg.N1}};
  if (cfg.R) labeled.emplace_back("R", *cfg.R);
  if (cfg.R_prime) labeled.emplace_back("R'", *cfg.R_prime);
  if (opts.show_centers) {
    labeled.emplace_back("O", cfg.O);
    labeled.emplace_back("H", cfg.H);
  }

  const std::vector<Side> sides{
      {"AP", {{"A", A}, {"R", cfg.lambda_R()}, {"M_d", cfg.Md}, {"P", cfg.P}}},
      {"AQ", {{"A", A}, {"Q", cfg.Q}, {"A_0", cfg.A0}}},
      {"D_0Q", {{"D_0", cfg.D0}, {"M_d", cfg.Md}, {"Q", cfg.Q}}},
      {"D_0A_0", {{"D_0", cfg.D0}, {"A_0", cfg.A0}, {"R", cfg.lambda_R()}}},
      {"D_0Q'", {{"D_0", cfg.D0}, {"M_d'", cfg.Md_prime}, {"Q'", cfg.Q_prime}}},
      {"D_0A_0'", {{"D_0", cfg.D0}, {"A_0'", cfg.A0_prime}, {"R'", cfg.lambda_R_prime()}}},
      {"AP'", {{"A", A}, {"M_d'", cfg.Md_prime}, {"R'", cfg.lambda_R_prime()}, {"P'", cfg.P_prime}}},
      {"AQ'", {{"A", A}, {"A_0'", cfg.A0_prime}, {"Q'", cfg.Q_prime}}},
  };

  std::vector<Drawn> pts;
  std::vector<Direction> dirs;
  for (const auto& [name, p] : labeled) {
    if (auto d = fig.finite(name, p)) {
      pts.push_back(*d);
    } else {
      dirs.push_back(fig.direction(name, p));
    }
  }

  double minx = std::numeric_limits<double>::max(), miny = minx;
  double maxx = std::numeric_limits<double>::lowest(), maxy = maxx;
  auto grow = [&](double x, double y) {
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  };
  for (const auto& d : pts) grow(d.x, d.y);
  const double diag = std::hypot(maxx - minx, maxy - miny);
  const double arrow_len = 0.25 * diag;

  // Segments: the extreme finite points of each side; arrows for infinite ones.
  struct Segment {
    std::string label;
    double x1, y1, x2, y2;
    bool primed;  // side of the second quadrilateral
  };
  struct Arrow {
    std::string label;
    double x1, y1, x2, y2;
  };
  std::vector<Segment> segments;
  std::vector<Arrow> arrows;
  for (std::size_t si = 0; si < sides.size(); ++si) {
    const auto& side = sides[si];
    std::vector<Drawn> on;
    for (const auto& [name, p] : side.points) {
      if (auto d = fig.finite(name, p)) on.push_back(*d);
    }
    if (on.size() >= 2) {
      double ux = 0, uy = 0;
      for (const auto& d : on) {
        if (std::hypot(d.x - on[0].x, d.y - on[0].y) > std::hypot(ux, uy)) {
          ux = d.x - on[0].x;
          uy = d.y - on[0].y;
        }
      }
      auto key = [&](const Drawn& d) { return (d.x - on[0].x) * ux + (d.y - on[0].y) * uy; };
      const auto [lo, hi] = std::minmax_element(
          on.begin(), on.end(), [&](const Drawn& l, const Drawn& r) { return key(l) < key(r); });
      segments.push_back({side.label, lo->x, lo->y, hi->x, hi->y, si >= 4});
    }
    for (const auto& [name, p] : side.points) {
      if (!is_infinite(p) || on.empty()) continue;
      const auto d = fig.direction(name, p);
      const Drawn& base = on.front();
      arrows.push_back({side.label + " to " + name, base.x, base.y, base.x + arrow_len * d.dx,
                        base.y + arrow_len * d.dy});
      grow(arrows.back().x2, arrows.back().y2);
    }
  }

  const double w = maxx - minx, h = maxy - miny;
  const double mx = 0.1 * (w > 0 ? w : 1.0), my = 0.1 * (h > 0 ? h : 1.0);
  const double vx = minx - mx, vy = miny - my, vw = w + 2 * mx, vh = h + 2 * my;
  const double scale = std::max(vw, vh);
  const double stroke = scale / 400.0, radius = scale / 150.0, font = scale / 40.0;
  const int height = static_cast<int>(std::lround(opts.width * vh / vw));

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opts.width
     << "\" height=\"" << height << "\" viewBox=\"" << num(vx) << ' ' << num(vy) << ' '
     << num(vw) << ' ' << num(vh) << "\">\n";
  os << "  <title>Quadrilateral half-turn configuration for P = " << cfg.P.str() << "</title>\n";
  os << "  <defs>\n"
     << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
        "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#555\"/></marker>\n"
     << "  </defs>\n";

  const auto a = fig.finite("A", A), b = fig.finite("B", B), c = fig.finite("C", C);
  os << "  <polygon class=\"triangle\" points=\"" << num(a->x) << ',' << num(a->y) << ' '
     << num(b->x) << ',' << num(b->y) << ' ' << num(c->x) << ',' << num(c->y)
     << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"" << num(stroke) << "\"/>\n";

  for (const auto& s : segments) {
    const char* colour = s.primed ? "#d62728" : "#1f77b4";
    os << "  <line class=\"side\" data-side=\"" << s.label << "\" x1=\"" << num(s.x1)
       << "\" y1=\"" << num(s.y1) << "\" x2=\"" << num(s.x2) << "\" y2=\"" << num(s.y2)
       << "\" stroke=\"" << colour << "\" stroke-width=\"" << num(stroke) << "\"/>\n";
  }
  for (const auto& ar : arrows) {
    os << "  <line class=\"direction\" data-side=\"" << ar.label << "\" x1=\"" << num(ar.x1)
       << "\" y1=\"" << num(ar.y1) << "\" x2=\"" << num(ar.x2) << "\" y2=\"" << num(ar.y2)
       << "\" stroke=\"#555\" stroke-dasharray=\"" << num(3 * stroke) << "\" stroke-width=\""
       << num(stroke) << "\" marker-end=\"url(#arrow)\"/>\n";
  }
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    const auto& d = dirs[k];
    os << "  <text class=\"direction-label\" data-name=\"" << d.name << "\" x=\""
       << num(vx + 0.2 * mx) << "\" y=\"" << num(vy + font * static_cast<double>(k + 1))
       << "\" font-size=\"" << num(font) << "\">" << d.name << " (at infinity, direction " << num(d.dx) << ','
       << num(d.dy) << ")</text>\n";
  }
  for (const auto& d : pts) {
    const bool highlight = d.name == "N_1";
    os << "  <circle class=\"point\" data-name=\"" << d.name << "\" cx=\"" << num(d.x)
       << "\" cy=\"" << num(d.y) << "\" r=\"" << num(highlight ? 1.8 * radius : radius)
       << "\" fill=\"" << (highlight ? "#ff7f0e" : "#000") << "\"/>\n";
    os << "  <text class=\"label\" x=\"" << num(d.x + radius) << "\" y=\"" << num(d.y - radius)
       << "\" font-size=\"" << num(font) << "\">" << d.name << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace halfturn
