#include "halfturn/serialize.hpp"

#include <json.hpp>

namespace halfturn {

using nlohmann::ordered_json;

namespace {

ordered_json config_json(const Configuration& cfg) {
  ordered_json j = ordered_json::object();
  for (const auto& [name, p] : cfg.named_points()) j[name] = p.str();
  return j;
}

ordered_json report_json(const VerifyReport& r) {
  ordered_json claims = ordered_json::array();
  for (const auto& c : r.claims) {
    ordered_json jc{{"id", c.id}, {"pass", c.pass}};
    if (c.witness) jc["witness"] = *c.witness;
    claims.push_back(std::move(jc));
  }
  return {{"p", r.p.str()}, {"claims", std::move(claims)}, {"pass", r.pass()}};
}

ordered_json proof_json(const symbolic::ProofReport& r) {
  ordered_json ids = ordered_json::array();
  for (const auto& i : r.identities) {
    ids.push_back({{"label", i.label}, {"degree", i.degree}, {"vanishes", i.vanishes}});
  }
  return {{"theorem", r.theorem}, {"identities", std::move(ids)}, {"status", r.status()}};
}

}  // namespace

std::string to_json(const Configuration& cfg, int indent) { return config_json(cfg).dump(indent); }

std::string to_json(const Map3& m, int indent) {
  ordered_json j = ordered_json::array();
  for (const auto& row : m.rows()) {
    for (const auto& v : row) j.push_back(v.str());
  }
  return j.dump(indent);
}

std::string to_json(const VerifyReport& r, int indent) { return report_json(r).dump(indent); }

std::string to_json(const std::vector<VerifyReport>& rs, int indent) {
  ordered_json j = ordered_json::array();
  for (const auto& r : rs) j.push_back(report_json(r));
  return j.dump(indent);
}

std::string to_json(const symbolic::ProofReport& r, int indent) {
  return proof_json(r).dump(indent);
}

std::string to_json(const std::vector<symbolic::ProofReport>& rs, int indent) {
  ordered_json j = ordered_json::array();
  for (const auto& r : rs) j.push_back(proof_json(r));
  return j.dump(indent);
}

}  // namespace halfturn
