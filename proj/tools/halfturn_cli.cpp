#include <unistd.h>

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "halfturn/centers.hpp"
#include "halfturn/constructions.hpp"
#include "halfturn/embed.hpp"
#include "halfturn/serialize.hpp"
#include "halfturn/symbolic.hpp"
#include "halfturn/verify.hpp"

using namespace halfturn;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

bool use_colour() { return std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO); }

std::string verdict(bool pass) {
  if (!use_colour()) return pass ? "PASS" : "FAIL";
  return pass ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

Vec2 parse_vertex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw Error(ErrorCode::ParseError, "vertex must be x,y: '" + text + "'");
  }
  return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
}

int run_config(const std::string& p_text, bool json, const std::string& out) {
  const BaryPoint p = BaryPoint::parse(p_text);
  const Configuration cfg = build_configuration(p);
  std::string text;
  if (json) {
    text = to_json(cfg) + "\n";
  } else {
    std::ostringstream os;
    for (const auto& [name, q] : cfg.named_points()) os << name << " = " << q.str() << "\n";
    text = os.str();
  }
  write_output(text, out);
  return kOk;
}

void print_report(const VerifyReport& r, bool all_claims) {
  std::size_t failed = 0;
  for (const auto& c : r.claims) failed += c.pass ? 0 : 1;
  std::cout << verdict(r.pass()) << " P = " << r.p.str() << " (" << r.claims.size()
            << " claims, " << failed << " failed)\n";
  for (const auto& c : r.claims) {
    if (!all_claims && c.pass) continue;
    std::cout << "  " << verdict(c.pass) << ' ' << c.id;
    if (c.witness) std::cout << " [" << *c.witness << ']';
    std::cout << "\n";
  }
}

int run_verify(const std::optional<std::string>& p_text, std::size_t count, std::uint64_t seed,
               long bound, bool json) {
  std::vector<VerifyReport> reports;
  if (p_text) {
    reports.push_back(verify_all(BaryPoint::parse(*p_text)));
  } else {
    reports = verify_random(seed, count, bound);
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.pass();
  if (json) {
    std::cout << (p_text ? to_json(reports.front()) : to_json(reports)) << "\n";
  } else {
    for (const auto& r : reports) print_report(r, p_text.has_value());
    std::size_t claims = 0;
    for (const auto& r : reports) claims += r.claims.size();
    std::cout << verdict(ok) << ": " << reports.size() << " points, " << claims << " claims\n";
  }
  return ok ? kOk : kFailed;
}

int run_prove(const std::string& theorem, bool json) {
  std::vector<symbolic::ProofReport> reports;
  if (theorem.empty() || theorem == "all") {
    reports = symbolic::prove_all();
  } else {
    reports.push_back(symbolic::prove_theorem(theorem));
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.proved();
  if (json) {
    std::cout << (reports.size() == 1 ? to_json(reports.front()) : to_json(reports)) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << verdict(r.proved()) << ' ' << r.theorem << ": " << r.status() << " ("
                << r.identities.size() << " identities)\n";
      for (const auto& i : r.identities) {
        if (i.vanishes) continue;
        std::cout << "  nonzero: " << i.label << " -> " << i.residual << "\n";
      }
    }
  }
  return ok ? kOk : kFailed;
}

int run_figure(const std::string& p_text, const std::vector<std::string>& vertices,
               const std::string& out, bool no_centers) {
  const BaryPoint p = BaryPoint::parse(p_text);
  const Configuration cfg = build_configuration(p);
  const CartesianTriangle t =
      vertices.empty() ? CartesianTriangle::default_triangle()
                       : CartesianTriangle(parse_vertex(vertices[0]), parse_vertex(vertices[1]),
                                           parse_vertex(vertices[2]));
  SvgOptions opts;
  opts.show_centers = !no_centers;
  write_output(render_svg(cfg, t, opts), out);
  return kOk;
}

int run_centers(const std::string& sides, const std::string& name) {
  const SideLengths s = SideLengths::parse(sides);
  std::cout << center(parse_center_name(name), s).str() << "\n";
  return kOk;
}

std::string version_text() {
  std::string text = "halfturn 1.0.0\ntheorems:";
  for (auto t : symbolic::kTheoremNames) text += " " + std::string(t);
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact barycentric constructions, checks and proofs for the quadrilateral half-turn configuration"};
  app.set_version_flag("--version", version_text());
  app.require_subcommand(1);

  std::string p_text;
  bool json = false;
  std::string out;

  auto* config = app.add_subcommand("config", "Build and print the configuration for P");
  config->add_option("--p", p_text, "Point as x:y:z")->required();
  config->add_flag("--json", json, "JSON output");
  config->add_option("--out", out, "Write to file instead of stdout");

  std::optional<std::string> verify_p;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  long bound = 50;
  auto* verify = app.add_subcommand("verify", "Exact checks at one point or over random samples");
  auto* vp = verify->add_option("--p", verify_p, "Point as x:y:z");
  auto* vr = verify->add_option("--random", count, "Number of random samples");
  verify->add_option("--seed", seed, "Sampler seed")->needs(vr);
  verify->add_option("--bound", bound, "Coordinate bound (>= 2)")->needs(vr)->check(CLI::Range(2L, 1000000000L));
  vp->excludes(vr);
  verify->add_flag("--json", json, "JSON output");

  std::string theorem;
  auto* prove = app.add_subcommand("prove", "Symbolic polynomial-identity proofs");
  prove->add_option("--theorem", theorem, "Theorem name (default: all)");
  prove->add_flag("--json", json, "JSON output");

  std::vector<std::string> vertices;
  bool no_centers = false;
  auto* figure = app.add_subcommand("figure", "Render the configuration as SVG");
  figure->add_option("--p", p_text, "Point as x:y:z")->required();
  figure->add_option("--vertices", vertices, "Vertices A B C as x,y")->expected(3);
  figure->add_option("-o,--out", out, "Output SVG path (stdout if omitted)");
  figure->add_flag("--no-centers", no_centers, "Omit O and H");

  std::string sides, center_name;
  auto* centers = app.add_subcommand("centers", "Named triangle centers from side lengths");
  centers->add_option("--side-lengths", sides, "a,b,c")->required();
  centers->add_option("--center", center_name, "centroid|incenter|gergonne|nagel|spieker|x6600|x6601")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*config) return run_config(p_text, json, out);
    if (*verify) {
      if (!verify_p && count == 0) {
        std::cerr << "error: verify needs --p or --random N\n";
        return kBadInput;
      }
      return run_verify(verify_p, count, seed, bound, json);
    }
    if (*prove) return run_prove(theorem, json);
    if (*figure) return run_figure(p_text, vertices, out, no_centers);
    if (*centers) return run_centers(sides, center_name);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool defect =
        e.code() == ErrorCode::ProofFailed || e.code() == ErrorCode::InternalInconsistency;
    return defect ? kFailed : kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
