#ifndef MAPKIT_INIT_HPP
#define MAPKIT_INIT_HPP

#include <utility>
#include <vector>

#include "mapkit/lang.hpp"
#include "mapkit/transition.hpp"

namespace mapkit {

/// One "everyone believes that i knows" entry: directed means the payload
/// itself is commonly believed true (C B_i phi), otherwise only its truth
/// value is commonly known to i (C (B_i phi | B_i !phi)).
struct KnownValue {
  AgentId agent = -1;
  Formula payload = Formula::top();
  bool directed = true;
};

/// The admissible initial-statement shapes, sorted by form. Every payload
/// is a fluent formula.
struct InitialClassification {
  std::vector<Formula> plain;                         // initially phi
  std::vector<Formula> common;                        // initially C phi
  std::vector<KnownValue> known_value;                // initially C B_i phi [| B_i !phi]
  std::vector<std::pair<AgentId, Formula>> ignorant;  // initially C (!B_i phi & !B_i !phi)
};

/// Syntactic classification of the theory's initial statements. Throws
/// DefinitenessError on any statement outside the admissible shapes.
InitialClassification classify(const Theory& theory);

/// The complete clauses whose truth value agent i is bound to know: those
/// constant on every class of surviving interpretations that agree on all
/// of i's known-value payloads. Surviving means satisfying every common
/// and directed formula.
std::vector<Formula> known_formulas(const Signature& sig, const InitialClassification& c,
                                    AgentId i);

/// Closed-world completion: add an ignorance entry for each agent and each
/// complete clause the theory does not bind the agent to know. Idempotent.
InitialClassification complete_cwa(const Signature& sig, InitialClassification c);

/// One shared structure with one designated world per initial state.
struct CanonicalInitial {
  KripkeStructure structure;
  std::vector<WorldId> designated;

  std::vector<PointedStructure> states() const;
  BState bstate() const;
};

/// Canonical initial-state construction: worlds are the interpretations
/// satisfying the common and directed formulas, agent relations connect
/// worlds agreeing on the agent's known clauses, designated worlds also
/// satisfy the plain formulas. Every classified statement is then verified
/// against every designated world; any failure raises InconsistencyError
/// naming the statement.
CanonicalInitial generate_initial(const SignaturePtr& sig, const InitialClassification& c);
CanonicalInitial generate_initial(const Theory& theory, bool cwa);

/// Reachable restriction followed by merging of valuation-identical
/// worlds; bisimilar to the input for generator outputs.
PointedStructure reduce_state(const PointedStructure& state);

/// The complete conjunction of literals pinning one world's valuation.
Formula world_formula(const PointedStructure& state, WorldId u);

/// Exhaustive enumeration oracle: every pointed structure whose worlds are
/// distinct interpretations (at most max_worlds of them) and whose agent
/// relations are equivalence relations, kept iff it satisfies every
/// classified statement. Guarded to tiny signatures.
std::vector<PointedStructure> brute_force_initials(const Theory& theory, int max_worlds);

}  // namespace mapkit

#endif
