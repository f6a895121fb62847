#include "mapkit/state_io.hpp"

namespace mapkit {

using nlohmann::json;

json state_to_json(const PointedStructure& state) {
  const Signature& sig = state.structure.sig();
  json doc;
  doc["worlds"] = json::array();
  for (const auto& [u, interp] : state.structure.worlds()) {
    json literals = json::array();
    for (FluentId f = 0; f < sig.fluent_count(); ++f)
      literals.push_back((interp.value(f) ? "" : "!") + sig.fluent_name(f));
    doc["worlds"].push_back({{"id", u}, {"literals", literals}});
  }
  doc["edges"] = json::object();
  for (AgentId i = 0; i < sig.agent_count(); ++i) {
    json pairs = json::array();
    for (const auto& [u, v] : state.structure.relation(i)) pairs.push_back({u, v});
    doc["edges"][sig.agent_name(i)] = pairs;
  }
  doc["designated"] = state.real;
  return doc;
}

PointedStructure state_from_json(const json& doc, const SignaturePtr& sig) {
  if (!doc.is_object() || !doc.contains("worlds") || !doc.contains("designated"))
    throw ParseError("state document must have 'worlds' and 'designated'", 0, 0);
  KripkeStructure m(sig);
  for (const auto& w : doc.at("worlds")) {
    WorldId id = w.at("id").get<WorldId>();
    Interpretation interp;
    for (const auto& lit : w.at("literals")) {
      std::string text = lit.get<std::string>();
      bool positive = true;
      if (!text.empty() && text.front() == '!') {
        positive = false;
        text.erase(0, 1);
      }
      interp.set(sig->fluent(text), positive);
    }
    m.add_world_with_id(id, interp);
  }
  if (doc.contains("edges"))
    for (const auto& [agent, pairs] : doc.at("edges").items())
      for (const auto& p : pairs)
        m.add_edge(p.at(0).get<WorldId>(), sig->agent(agent), p.at(1).get<WorldId>());
  WorldId real = doc.at("designated").get<WorldId>();
  if (!m.has_world(real))
    throw ParseError("designated world " + std::to_string(real) + " does not exist", 0, 0);
  return PointedStructure{std::move(m), real};
}

json bstate_to_json(const BState& b) {
  if (b.failed) return json{{"failed", true}};
  json arr = json::array();
  for (const auto& st : b.states) arr.push_back(state_to_json(st));
  return arr;
}

BState bstate_from_json(const json& doc, const SignaturePtr& sig) {
  if (doc.is_object() && doc.value("failed", false)) return BState::fail();
  if (doc.is_object()) return BState::of({state_from_json(doc, sig)});
  if (!doc.is_array()) throw ParseError("belief state must be an array or a state", 0, 0);
  std::vector<PointedStructure> states;
  for (const auto& entry : doc) states.push_back(state_from_json(entry, sig));
  return BState::of(std::move(states));
}

}  // namespace mapkit
