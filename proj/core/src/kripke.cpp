#include "mapkit/kripke.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

namespace mapkit {

KripkeStructure::KripkeStructure(SignaturePtr sig)
    : sig_(std::move(sig)), relations_(sig_->agent_count()) {}

WorldId KripkeStructure::add_world(const Interpretation& interp) {
  WorldId id = next_id_++;
  worlds_.emplace(id, interp);
  return id;
}

void KripkeStructure::add_world_with_id(WorldId id, const Interpretation& interp) {
  if (worlds_.count(id)) throw ArgumentError("world id " + std::to_string(id) + " already in use");
  worlds_.emplace(id, interp);
  next_id_ = std::max(next_id_, id + 1);
}

void KripkeStructure::add_edge(WorldId from, AgentId agent, WorldId to) {
  if (!has_world(from) || !has_world(to))
    throw ArgumentError("edge endpoint not in structure: (" + std::to_string(from) + "," +
                        std::to_string(to) + ")");
  relations_.at(agent).emplace(from, to);
}

const Interpretation& KripkeStructure::valuation(WorldId id) const {
  auto it = worlds_.find(id);
  if (it == worlds_.end()) throw ArgumentError("unknown world id " + std::to_string(id));
  return it->second;
}

const std::set<std::pair<WorldId, WorldId>>& KripkeStructure::relation(AgentId agent) const {
  return relations_.at(agent);
}

bool KripkeStructure::related(WorldId u, AgentId agent, WorldId v) const {
  return relations_.at(agent).count({u, v}) != 0;
}

std::vector<WorldId> KripkeStructure::successors(WorldId u, AgentId agent) const {
  std::vector<WorldId> out;
  const auto& rel = relations_.at(agent);
  for (auto it = rel.lower_bound({u, std::numeric_limits<int>::min()});
       it != rel.end() && it->first == u; ++it)
    out.push_back(it->second);
  return out;
}

void KripkeStructure::reserve_ids(WorldId floor) { next_id_ = std::max(next_id_, floor); }

EdgeSet KripkeStructure::all_edges() const {
  EdgeSet out;
  for (AgentId i = 0; i < sig_->agent_count(); ++i)
    for (const auto& [u, v] : relations_[i]) out.insert({u, i, v});
  return out;
}

bool operator==(const KripkeStructure& a, const KripkeStructure& b) {
  return a.worlds_ == b.worlds_ && a.relations_ == b.relations_;
}

namespace {

std::set<WorldId> group_closure(const KripkeStructure& m, WorldId s, const AgentSet& group) {
  std::set<WorldId> seen{s};
  std::deque<WorldId> queue{s};
  while (!queue.empty()) {
    WorldId u = queue.front();
    queue.pop_front();
    for (AgentId i : group)
      for (WorldId v : m.successors(u, i))
        if (seen.insert(v).second) queue.push_back(v);
  }
  return seen;
}

}  // namespace

bool satisfies(const KripkeStructure& m, WorldId s, const Formula& phi) {
  using Kind = Formula::Kind;
  switch (phi.kind()) {
    case Kind::Top:
      return true;
    case Kind::Bot:
      return false;
    case Kind::Atom:
      return m.valuation(s).value(phi.fluent());
    case Kind::Not:
      return !satisfies(m, s, phi.child());
    case Kind::And:
      return satisfies(m, s, phi.left()) && satisfies(m, s, phi.right());
    case Kind::Or:
      return satisfies(m, s, phi.left()) || satisfies(m, s, phi.right());
    case Kind::Believes: {
      for (WorldId t : m.successors(s, phi.agent()))
        if (!satisfies(m, t, phi.child())) return false;
      return true;
    }
    case Kind::Everyone: {
      for (AgentId i : phi.group())
        for (WorldId t : m.successors(s, i))
          if (!satisfies(m, t, phi.child())) return false;
      return true;
    }
    case Kind::Common: {
      for (WorldId t : group_closure(m, s, phi.group()))
        if (!satisfies(m, t, phi.child())) return false;
      return true;
    }
  }
  return false;
}

bool satisfies(const PointedStructure& state, const Formula& phi) {
  return satisfies(state.structure, state.real, phi);
}

bool holds_everywhere(const KripkeStructure& m, const Formula& phi) {
  for (const auto& [id, interp] : m.worlds())
    if (!satisfies(m, id, phi)) return false;
  return true;
}

FrameClass frame_class(const KripkeStructure& m) {
  FrameClass out{true, true, true, true};
  for (AgentId i = 0; i < m.sig().agent_count(); ++i) {
    const auto& rel = m.relation(i);
    for (const auto& [id, interp] : m.worlds()) {
      if (!rel.count({id, id})) out.reflexive = false;
      if (m.successors(id, i).empty()) out.serial = false;
    }
    for (const auto& [u, v] : rel) {
      for (WorldId w : m.successors(v, i))
        if (!rel.count({u, w})) out.transitive = false;
      // euclidean: (u,v) and (u,w) imply (v,w)
      for (WorldId w : m.successors(u, i))
        if (!rel.count({v, w})) out.euclidean = false;
    }
  }
  return out;
}

KripkeStructure world_subtract(const KripkeStructure& m, const std::set<WorldId>& removed) {
  for (WorldId u : removed)
    if (!m.has_world(u)) throw ArgumentError("world_subtract: unknown world " + std::to_string(u));
  KripkeStructure out(m.sig_ptr());
  for (const auto& [id, interp] : m.worlds())
    if (!removed.count(id)) out.add_world_with_id(id, interp);
  for (AgentId i = 0; i < m.sig().agent_count(); ++i)
    for (const auto& [u, v] : m.relation(i))
      if (!removed.count(u) && !removed.count(v)) out.add_edge(u, i, v);
  out.reserve_ids(m.next_id());
  return out;
}

KripkeStructure edge_subtract(const KripkeStructure& m, const EdgeSet& removed) {
  KripkeStructure out(m.sig_ptr());
  for (const auto& [id, interp] : m.worlds()) out.add_world_with_id(id, interp);
  for (AgentId i = 0; i < m.sig().agent_count(); ++i)
    for (const auto& [u, v] : m.relation(i))
      if (!removed.count({u, i, v})) out.add_edge(u, i, v);
  out.reserve_ids(m.next_id());
  return out;
}

KripkeStructure edge_add(const KripkeStructure& m, const EdgeSet& added) {
  KripkeStructure out(m.sig_ptr());
  for (const auto& [id, interp] : m.worlds()) out.add_world_with_id(id, interp);
  for (AgentId i = 0; i < m.sig().agent_count(); ++i)
    for (const auto& [u, v] : m.relation(i)) out.add_edge(u, i, v);
  for (const Edge& e : added) out.add_edge(e.from, e.agent, e.to);
  out.reserve_ids(m.next_id());
  return out;
}

KripkeStructure restrict_to(const KripkeStructure& m, const AgentSet& alpha) {
  KripkeStructure out(m.sig_ptr());
  for (const auto& [id, interp] : m.worlds()) out.add_world_with_id(id, interp);
  for (AgentId i : alpha)
    for (const auto& [u, v] : m.relation(i)) out.add_edge(u, i, v);
  out.reserve_ids(m.next_id());
  return out;
}

PointedStructure restrict_to(const PointedStructure& state, const AgentSet& alpha) {
  return {restrict_to(state.structure, alpha), state.real};
}

Replica replica(const PointedStructure& state, WorldId first_fresh_id) {
  const KripkeStructure& m = state.structure;
  if (first_fresh_id < m.next_id())
    throw ArgumentError("replica ids would collide with the original structure");
  WorldRenaming fresh;
  WorldId next = first_fresh_id;
  for (const auto& [id, interp] : m.worlds()) fresh[id] = next++;
  KripkeStructure copy(m.sig_ptr());
  for (const auto& [id, interp] : m.worlds()) copy.add_world_with_id(fresh.at(id), interp);
  for (AgentId i = 0; i < m.sig().agent_count(); ++i)
    for (const auto& [u, v] : m.relation(i)) copy.add_edge(fresh.at(u), i, fresh.at(v));
  return {{std::move(copy), fresh.at(state.real)}, std::move(fresh)};
}

KripkeStructure union_k(const KripkeStructure& m1, const KripkeStructure& m2) {
  for (const auto& [id, interp] : m2.worlds())
    if (m1.has_world(id) && !(m1.valuation(id) == interp))
      throw CompatibilityError("union_k: shared world " + std::to_string(id) +
                               " carries different valuations");
  KripkeStructure out(m1.sig_ptr());
  for (const auto& [id, interp] : m1.worlds()) out.add_world_with_id(id, interp);
  for (const auto& [id, interp] : m2.worlds())
    if (!out.has_world(id)) out.add_world_with_id(id, interp);
  for (AgentId i = 0; i < m1.sig().agent_count(); ++i) {
    for (const auto& [u, v] : m1.relation(i)) out.add_edge(u, i, v);
    for (const auto& [u, v] : m2.relation(i)) out.add_edge(u, i, v);
  }
  out.reserve_ids(std::max(m1.next_id(), m2.next_id()));
  return out;
}

PointedStructure union_lambda(const PointedStructure& m1, const PointedStructure& m2,
                              const WorldRenaming& lambda, const AgentSet& alpha) {
  const KripkeStructure& a = m1.structure;
  const KripkeStructure& b = m2.structure;
  std::set<WorldId> targets;
  for (const auto& [id, interp] : b.worlds()) {
    if (a.has_world(id)) throw ArgumentError("union_lambda: world sets are not disjoint");
    auto it = lambda.find(id);
    if (it == lambda.end())
      throw ArgumentError("union_lambda: lambda undefined on world " + std::to_string(id));
    if (!a.has_world(it->second))
      throw ArgumentError("union_lambda: lambda maps outside the first structure");
    if (!targets.insert(it->second).second)
      throw ArgumentError("union_lambda: lambda is not injective");
  }
  KripkeStructure out(a.sig_ptr());
  for (const auto& [id, interp] : a.worlds()) out.add_world_with_id(id, interp);
  for (const auto& [id, interp] : b.worlds()) out.add_world_with_id(id, interp);
  for (AgentId i = 0; i < a.sig().agent_count(); ++i) {
    for (const auto& [u, v] : a.relation(i)) out.add_edge(u, i, v);
    for (const auto& [u, v] : b.relation(i)) out.add_edge(u, i, v);
    if (!agent_set_contains(alpha, i)) {
      for (const auto& [u, interp] : b.worlds())
        for (WorldId v : a.successors(lambda.at(u), i)) out.add_edge(u, i, v);
    }
  }
  out.reserve_ids(std::max(a.next_id(), b.next_id()));
  return {std::move(out), m2.real};
}

namespace {

// Partition refinement over a list of (structure, world) nodes.
struct BisimUniverse {
  std::vector<const KripkeStructure*> owner;
  std::vector<WorldId> world;
  std::map<std::pair<const KripkeStructure*, WorldId>, int> index;

  void add(const KripkeStructure& m) {
    for (const auto& [id, interp] : m.worlds()) {
      index[{&m, id}] = static_cast<int>(owner.size());
      owner.push_back(&m);
      world.push_back(id);
    }
  }
};

std::vector<int> refine_partition(const BisimUniverse& uni, int agent_count) {
  const int n = static_cast<int>(uni.owner.size());
  std::vector<int> block(n);
  {
    std::map<Interpretation, int> by_val;
    for (int k = 0; k < n; ++k) {
      Interpretation interp = uni.owner[k]->valuation(uni.world[k]);
      auto [it, fresh] = by_val.emplace(interp, static_cast<int>(by_val.size()));
      block[k] = it->second;
    }
  }
  for (;;) {
    std::map<std::vector<int>, int> sig_index;
    std::vector<int> next(n);
    for (int k = 0; k < n; ++k) {
      std::vector<int> sig{block[k]};
      for (AgentId i = 0; i < agent_count; ++i) {
        std::set<int> succ;
        for (WorldId v : uni.owner[k]->successors(uni.world[k], i))
          succ.insert(block[uni.index.at({uni.owner[k], v})]);
        sig.push_back(-1);  // separator
        sig.insert(sig.end(), succ.begin(), succ.end());
      }
      auto [it, fresh] = sig_index.emplace(std::move(sig), static_cast<int>(sig_index.size()));
      next[k] = it->second;
    }
    if (next == block) return block;
    block = std::move(next);
  }
}

}  // namespace

bool bisimilar(const PointedStructure& a, const PointedStructure& b) {
  BisimUniverse uni;
  uni.add(a.structure);
  uni.add(b.structure);
  auto block = refine_partition(uni, a.structure.sig().agent_count());
  return block[uni.index.at({&a.structure, a.real})] ==
         block[uni.index.at({&b.structure, b.real})];
}

PointedStructure reachable_restriction(const PointedStructure& state) {
  const KripkeStructure& m = state.structure;
  std::set<WorldId> reach = group_closure(m, state.real, m.sig().all_agents());
  std::set<WorldId> removed;
  for (const auto& [id, interp] : m.worlds())
    if (!reach.count(id)) removed.insert(id);
  return {world_subtract(m, removed), state.real};
}

PointedStructure quotient(const PointedStructure& state) {
  const KripkeStructure& m = state.structure;
  std::map<Interpretation, WorldId> cls;
  KripkeStructure out(m.sig_ptr());
  std::map<WorldId, WorldId> rep;
  for (const auto& [id, interp] : m.worlds()) {
    auto it = cls.find(interp);
    if (it == cls.end()) it = cls.emplace(interp, out.add_world(interp)).first;
    rep[id] = it->second;
  }
  for (AgentId i = 0; i < m.sig().agent_count(); ++i)
    for (const auto& [u, v] : m.relation(i)) out.add_edge(rep.at(u), i, rep.at(v));
  return {std::move(out), rep.at(state.real)};
}

std::string literal_list(const Signature& sig, const Interpretation& interp) {
  std::ostringstream out;
  for (FluentId f = 0; f < sig.fluent_count(); ++f) {
    if (f) out << ", ";
    if (!interp.value(f)) out << '!';
    out << sig.fluent_name(f);
  }
  return out.str();
}

std::string to_dot(const KripkeStructure& m, const std::set<WorldId>& designated) {
  std::ostringstream out;
  out << "digraph state {\n  rankdir=LR;\n";
  for (const auto& [id, interp] : m.worlds()) {
    out << "  w" << id << " [label=\"s" << id << ": " << literal_list(m.sig(), interp) << "\"";
    if (designated.count(id)) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (AgentId i = 0; i < m.sig().agent_count(); ++i)
    for (const auto& [u, v] : m.relation(i))
      out << "  w" << u << " -> w" << v << " [label=\"" << m.sig().agent_name(i) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const PointedStructure& state) {
  return to_dot(state.structure, {state.real});
}

}  // namespace mapkit
