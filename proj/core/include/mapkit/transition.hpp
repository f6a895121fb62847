#ifndef MAPKIT_TRANSITION_HPP
#define MAPKIT_TRANSITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "mapkit/kripke.hpp"
#include "mapkit/lang.hpp"

namespace mapkit {

/// Who observes what during one action occurrence: fully observant agents,
/// partially observant agents, everyone else oblivious. The three sets
/// partition the signature's agents.
struct FrameOfReference {
  AgentSet full;
  AgentSet partial;
  AgentSet oblivious;
};

/// Evaluates the observes/aware_of conditions at the designated point.
/// Throws ObservabilityError when some agent qualifies as both fully and
/// partially observant.
FrameOfReference frame_of_reference(const Theory& d, ActionId a, const PointedStructure& state);

/// Consistent set of effect literals, one fluent at most once.
using EffectSet = std::vector<FluentLiteral>;

/// Effect literals of a world-altering action at world u: the union over
/// its causes statements whose condition holds at (m, u). Throws
/// EffectConsistencyError when the union contains a literal and its
/// complement.
EffectSet effects(const Theory& d, ActionId a, const KripkeStructure& m, WorldId u);

/// The freshly built fragment for a world-altering step: one new world per
/// world where the action is executable, valuations rewritten by the
/// effects, edges kept only for fully observant agents. The renaming maps
/// each original world to its copy.
struct ResStructure {
  KripkeStructure structure;
  WorldRenaming renaming;
};
ResStructure res_structure(const Theory& d, ActionId a, const PointedStructure& state,
                           const FrameOfReference& frame);

/// Result of one action occurrence in one state: empty when the action is
/// not executable there (or an announcement is untruthful), otherwise a
/// single successor state. When `why_empty` is given it receives a
/// diagnostic for the empty case.
std::vector<PointedStructure> step_world(const Theory& d, ActionId a,
                                         const PointedStructure& state);
std::vector<PointedStructure> step_sense(const Theory& d, ActionId a,
                                         const PointedStructure& state);
std::vector<PointedStructure> step_announce(const Theory& d, ActionId a,
                                            const PointedStructure& state,
                                            std::string* why_empty = nullptr);
std::vector<PointedStructure> step(const Theory& d, ActionId a, const PointedStructure& state,
                                   std::string* why_empty = nullptr);

/// The fluents a sensing action determines.
std::vector<FluentId> sensed_set(const Theory& d, ActionId a);

/// Belief state: failed, or a finite set of states.
struct BState {
  bool failed = false;
  std::vector<PointedStructure> states;

  static BState fail() { return BState{true, {}}; }
  static BState of(std::vector<PointedStructure> states) {
    return BState{false, std::move(states)};
  }
};

/// One action over a belief state: failed when the input is failed or the
/// action is inexecutable in some member, else the union of the per-state
/// results.
BState step_bstate(const Theory& d, ActionId a, const BState& b, std::string* why_failed = nullptr);

/// Left fold of step_bstate over the plan; failure is absorbing.
BState run_plan(const Theory& d, const std::vector<ActionId>& plan, const BState& b,
                std::string* why_failed = nullptr);

/// True iff the plan does not fail from the initial belief state and every
/// resulting state satisfies the goal.
bool entails(const Theory& d, const Query& q, const BState& initial);

/// The preconditions under which sensing and announcement occurrences are
/// guaranteed not to wipe out beliefs: no fully or partially observant
/// agent holds a belief about the sensed fluent (or a wrong belief about
/// the announced formula) anywhere in the structure. Predicates only,
/// never enforced by the step functions.
bool consistency_preserving_sense(const Theory& d, ActionId a, const PointedStructure& state);
bool consistency_preserving_announce(const Theory& d, ActionId a, const PointedStructure& state);

}  // namespace mapkit

#endif
