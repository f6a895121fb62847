#ifndef MAPKIT_STATE_IO_HPP
#define MAPKIT_STATE_IO_HPP

#include <json.hpp>

#include "mapkit/transition.hpp"

namespace mapkit {

/// JSON state documents: worlds as id plus literal list, edges per agent,
/// one designated world. A belief state is an array of documents, or the
/// object {"failed": true}.
nlohmann::json state_to_json(const PointedStructure& state);
PointedStructure state_from_json(const nlohmann::json& doc, const SignaturePtr& sig);

nlohmann::json bstate_to_json(const BState& b);
BState bstate_from_json(const nlohmann::json& doc, const SignaturePtr& sig);

}  // namespace mapkit

#endif
