#ifndef MAPKIT_TESTS_HELPERS_HPP
#define MAPKIT_TESTS_HELPERS_HPP

#include <memory>
#include <string>
#include <vector>

#include "mapkit/init.hpp"
#include "mapkit/lang.hpp"
#include "mapkit/random.hpp"
#include "mapkit/transition.hpp"
#include "mapkit/update.hpp"

namespace th {

inline mapkit::SignaturePtr make_sig(int agents, int fluents, int actions = 1) {
  std::vector<std::string> as, fs, acts;
  for (int k = 0; k < agents; ++k) as.push_back(std::string(1, char('A' + k)));
  for (int k = 0; k < fluents; ++k) fs.push_back(std::string(1, char('f' + k)));
  for (int k = 0; k < actions; ++k) acts.push_back("act" + std::to_string(k));
  return std::make_shared<const mapkit::Signature>(as, fs, acts);
}

/// Truth-table entailment oracle, independent of prop_entails.
inline bool entails_oracle(const mapkit::Signature& sig,
                           const std::vector<mapkit::Formula>& gamma,
                           const mapkit::Formula& phi) {
  for (const auto& z : mapkit::all_interpretations(sig)) {
    bool premises = true;
    for (const auto& g : gamma)
      if (!mapkit::eval_fluent(z, g)) { premises = false; break; }
    if (premises && !mapkit::eval_fluent(z, phi)) return false;
  }
  return true;
}

inline bool equivalent(const mapkit::Signature& sig, const mapkit::Formula& a,
                       const mapkit::Formula& b) {
  return entails_oracle(sig, {a}, b) && entails_oracle(sig, {b}, a);
}

/// Total S5 structure over the given valuations; returns ids in order.
inline mapkit::PointedStructure total_state(const mapkit::SignaturePtr& sig,
                                            const std::vector<std::uint32_t>& valuations,
                                            int real_index = 0) {
  mapkit::KripkeStructure m(sig);
  std::vector<mapkit::WorldId> ids;
  for (auto bits : valuations) ids.push_back(m.add_world(mapkit::Interpretation{bits}));
  for (mapkit::AgentId i = 0; i < sig->agent_count(); ++i)
    for (auto u : ids)
      for (auto v : ids) m.add_edge(u, i, v);
  return {std::move(m), ids[static_cast<std::size_t>(real_index)]};
}

}  // namespace th

#endif
