#include "homrat/serialize.hpp"

namespace homrat {

namespace {

Json premise_value(const PremiseValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  return std::get<std::string>(v);
}

template <class T>
Json optional_int(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json to_json(const CertificateNode& node) {
  Json premises = Json::array();
  for (const auto& p : node.premises) premises.push_back({{"name", p.name}, {"value", premise_value(p.value)}});
  Json children = Json::array();
  for (const auto& c : node.children) children.push_back(to_json(c));
  return {{"rule", node.rule_id}, {"paper_ref", node.paper_ref}, {"premises", premises}, {"children", children}};
}

CertificateNode certificate_from_json(const Json& j) {
  CertificateNode node;
  try {
    node.rule_id = require(j, "rule").get<std::string>();
    node.paper_ref = require(j, "paper_ref").get<std::string>();
    for (const auto& p : require(j, "premises")) {
      Premise pr;
      pr.name = require(p, "name").get<std::string>();
      const Json& v = require(p, "value");
      if (v.is_number_integer()) pr.value = v.get<std::int64_t>();
      else if (v.is_string()) pr.value = v.get<std::string>();
      else throw std::invalid_argument("premise \"" + pr.name + "\" has a non-integer, non-string value");
      node.premises.push_back(std::move(pr));
    }
    for (const auto& c : require(j, "children")) node.children.push_back(certificate_from_json(c));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
  return node;
}

Json to_json(const QuotientInvariants& q) {
  return {{"tG", q.t_G},
          {"tH", optional_int(q.t_H)},
          {"uG", q.u_G},
          {"uH", optional_int(q.u_H)},
          {"uH_rad", optional_int(q.uH_rad)},
          {"dim", q.dim_quotient},
          {"dim_BGU", optional_int(q.dim_BGU)},
          {"dim_UGB", optional_int(q.dim_UGB)}};
}

Json to_json(const Verdict& v) {
  Json j = {{"v", 1}, {"status", to_string(v.status)}};
  if (v.frontier) j["frontier"] = *v.frontier;
  if (!v.note.empty()) j["note"] = v.note;
  j["invariants"] = to_json(v.invariants);
  if (v.certificate) j["certificate"] = to_json(*v.certificate);
  if (!v.alternatives.empty()) j["alternatives"] = v.alternatives;
  return j;
}

Verdict verdict_from_json(const Json& j) {
  Verdict v;
  try {
    if (require(j, "v").get<int>() != 1) throw std::invalid_argument("unsupported certificate version");
    const auto status = require(j, "status").get<std::string>();
    if (status == "Rational") v.status = Status::Rational;
    else if (status == "Unknown") v.status = Status::Unknown;
    else throw std::invalid_argument("unknown status \"" + status + "\"");
    if (j.contains("frontier")) v.frontier = j.at("frontier").get<std::string>();
    if (j.contains("note")) v.note = j.at("note").get<std::string>();
    if (j.contains("certificate")) v.certificate = certificate_from_json(j.at("certificate"));
    if (j.contains("alternatives")) v.alternatives = j.at("alternatives").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed verdict: ") + e.what());
  }
  return v;
}

Json to_json(const MaxRankSubgroup& h) {
  Json chain = Json::array();
  for (const auto& m : h.chain()) {
    chain.push_back({{"kind", to_string(m.kind)},
                     {"node", m.node},
                     {"comark", optional_int(m.comark_at_node)},
                     {"component", m.component},
                     {"on", m.acts_on.str()},
                     {"result", m.result.str()}});
  }
  return {{"semisimple_part", h.semisimple_part().str()},
          {"torus", h.central_torus()},
          {"chain", chain},
          {"simply_connected", h.simply_connected_cover_splits()}};
}

}  // namespace homrat
