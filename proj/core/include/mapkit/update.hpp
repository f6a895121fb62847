#ifndef MAPKIT_UPDATE_HPP
#define MAPKIT_UPDATE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mapkit/transition.hpp"

namespace mapkit {

using EventId = std::string;

/// Fluents absent from the map implicitly keep their value.
using Substitution = std::map<FluentId, Formula>;

/// Event structure applied to states by product update: events with belief
/// preconditions, per-agent accessibility over events, and postcondition
/// substitutions.
struct UpdateModel {
  std::vector<EventId> events;
  std::map<AgentId, std::set<std::pair<EventId, EventId>>> relations;
  std::map<EventId, Formula> pre;
  std::map<EventId, Substitution> sub;
};

struct UpdateInstance {
  UpdateModel model;
  EventId designated;
};

/// An update model with a set of designated events; applying it yields one
/// pointed result per designated event whose precondition holds at the
/// point.
struct UpdateTemplate {
  UpdateModel model;
  std::vector<EventId> designated_set;
};

/// Worlds of the product are pairs (world, event) with the event's
/// precondition true at the world; edges need both component relations;
/// valuations follow the event's substitution.
KripkeStructure product_update(const KripkeStructure& m, const UpdateModel& u);

std::vector<PointedStructure> apply_template(const PointedStructure& state,
                                             const UpdateTemplate& t);

/// The two-event model for a world-altering action: sigma carries the
/// effect substitutions, epsilon is the null event the oblivious agents
/// see. Partial observers are not supported for this action kind.
UpdateInstance omega_world(const Theory& d, ActionId a, const FrameOfReference& rho);

/// The three-event model for a sensing action with one sensed fluent:
/// sigma and tau split on the sensed value, epsilon is the null event.
UpdateTemplate omega_sense(const Theory& d, ActionId a, const FrameOfReference& rho);

/// Same shape as sensing but with the announced formula in the
/// preconditions and sigma as the only designated event.
UpdateInstance omega_announce(const Theory& d, ActionId a, const FrameOfReference& rho);

/// The update template for one action occurrence: empty designated set
/// when the action is not executable at the point, else the construction
/// for the action's kind at that occurrence's frame of reference.
UpdateTemplate omega(const Theory& d, ActionId a, const PointedStructure& state);

/// True iff the update route and the direct transition route produce
/// matching results for this occurrence: same cardinality, elements
/// pairwise matched by bisimilarity.
bool cross_check(const Theory& d, ActionId a, const PointedStructure& state);

/// DOT rendering of an update model: one rectangle per event labeled with
/// its precondition, doubled border on designated events.
std::string to_dot(const UpdateModel& u, const std::vector<EventId>& designated,
                   const Signature& sig);

}  // namespace mapkit

#endif
