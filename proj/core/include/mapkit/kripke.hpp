#ifndef MAPKIT_KRIPKE_HPP
#define MAPKIT_KRIPKE_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mapkit/logic.hpp"

namespace mapkit {

using WorldId = int;

/// Labeled edge (u, agent, v).
struct Edge {
  WorldId from = 0;
  AgentId agent = 0;
  WorldId to = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeSet = std::set<Edge>;

/// Bijective world renaming, used for replicas and the lambda union.
using WorldRenaming = std::map<WorldId, WorldId>;

/// Finite Kripke structure: worlds with total valuations plus one directed
/// relation per agent. World ids are opaque integers; fresh ids are drawn
/// from a per-structure counter and never reused.
class KripkeStructure {
 public:
  explicit KripkeStructure(SignaturePtr sig);

  const Signature& sig() const { return *sig_; }
  const SignaturePtr& sig_ptr() const { return sig_; }

  WorldId add_world(const Interpretation& interp);          // fresh id
  void add_world_with_id(WorldId id, const Interpretation& interp);
  void add_edge(WorldId from, AgentId agent, WorldId to);

  bool has_world(WorldId id) const { return worlds_.count(id) != 0; }
  const Interpretation& valuation(WorldId id) const;
  const std::map<WorldId, Interpretation>& worlds() const { return worlds_; }
  int world_count() const { return static_cast<int>(worlds_.size()); }

  const std::set<std::pair<WorldId, WorldId>>& relation(AgentId agent) const;
  bool related(WorldId u, AgentId agent, WorldId v) const;
  std::vector<WorldId> successors(WorldId u, AgentId agent) const;

  WorldId next_id() const { return next_id_; }
  void reserve_ids(WorldId floor);  // bump the fresh-id counter

  EdgeSet all_edges() const;

  friend bool operator==(const KripkeStructure&, const KripkeStructure&);

 private:
  SignaturePtr sig_;
  std::map<WorldId, Interpretation> worlds_;
  std::vector<std::set<std::pair<WorldId, WorldId>>> relations_;  // per agent
  WorldId next_id_ = 0;
};

/// A state: structure plus designated real world.
struct PointedStructure {
  KripkeStructure structure;
  WorldId real = 0;
};

/// Satisfaction of the full belief language at a state. C_alpha is evaluated
/// over all worlds reachable from the point via alpha-labeled edges,
/// including the point itself (path length >= 0).
bool satisfies(const KripkeStructure& m, WorldId s, const Formula& phi);
bool satisfies(const PointedStructure& state, const Formula& phi);

/// True iff phi holds at every world of m.
bool holds_everywhere(const KripkeStructure& m, const Formula& phi);

struct FrameClass {
  bool reflexive = false;   // T
  bool transitive = false;  // 4
  bool euclidean = false;   // 5
  bool serial = false;      // D
  bool s5() const { return reflexive && transitive && euclidean; }
};

FrameClass frame_class(const KripkeStructure& m);

/// Remove the given worlds and all edges touching them.
KripkeStructure world_subtract(const KripkeStructure& m, const std::set<WorldId>& removed);

/// Remove the listed labeled edges; absent edges are ignored.
KripkeStructure edge_subtract(const KripkeStructure& m, const EdgeSet& removed);

/// Add the listed labeled edges; endpoints must exist.
KripkeStructure edge_add(const KripkeStructure& m, const EdgeSet& added);

/// Keep only the edges labeled by agents in alpha.
PointedStructure restrict_to(const PointedStructure& state, const AgentSet& alpha);
KripkeStructure restrict_to(const KripkeStructure& m, const AgentSet& alpha);

/// Isomorphic copy under a fresh renaming; point follows. The returned
/// renaming maps original ids to copy ids. Ids start at first_fresh_id,
/// which must be above every id of the original.
struct Replica {
  PointedStructure state;
  WorldRenaming renaming;
};
Replica replica(const PointedStructure& state, WorldId first_fresh_id);

/// Component-wise union of compatible structures; valuations from m1 on
/// shared worlds.
KripkeStructure union_k(const KripkeStructure& m1, const KripkeStructure& m2);

/// The lambda-alpha union: disjoint union plus, for agents outside alpha,
/// edges (u, v) with u in m2, v in m1 and (lambda(u), v) in m1. Point is
/// m2's point. lambda must be injective and total on m2's worlds.
PointedStructure union_lambda(const PointedStructure& m1, const PointedStructure& m2,
                              const WorldRenaming& lambda, const AgentSet& alpha);

/// Largest-bisimulation equivalence of two states, by partition refinement
/// on the disjoint union. The engine's official state-equivalence test.
bool bisimilar(const PointedStructure& a, const PointedStructure& b);

/// Drop worlds not reachable from the point along directed edges.
PointedStructure reachable_restriction(const PointedStructure& state);

/// Merge worlds with identical interpretations; class edge iff some member
/// pair is related.
PointedStructure quotient(const PointedStructure& state);

/// DOT serialization: one node per world labeled "name: literal list",
/// doubled border on the designated world, one edge per (u,i,v) labeled
/// with the agent name.
std::string to_dot(const PointedStructure& state);
std::string to_dot(const KripkeStructure& m, const std::set<WorldId>& designated);

/// Human-readable literal list of one world's valuation.
std::string literal_list(const Signature& sig, const Interpretation& interp);

}  // namespace mapkit

#endif
