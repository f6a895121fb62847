#include "mapkit/transition.hpp"

#include <algorithm>
#include <set>

namespace mapkit {

FrameOfReference frame_of_reference(const Theory& d, ActionId a, const PointedStructure& state) {
  std::vector<AgentId> full, partial;
  for (const auto& st : d.domain) {
    if (st.action != a) continue;
    if (st.kind == DomainStatement::Kind::Observes && satisfies(state, st.condition))
      full.push_back(st.agent);
    else if (st.kind == DomainStatement::Kind::AwareOf && satisfies(state, st.condition))
      partial.push_back(st.agent);
  }
  FrameOfReference frame;
  frame.full = make_agent_set(std::move(full));
  frame.partial = make_agent_set(std::move(partial));
  for (AgentId i : frame.full)
    if (agent_set_contains(frame.partial, i))
      throw ObservabilityError("agent '" + state.structure.sig().agent_name(i) +
                               "' is both fully and partially observant of '" +
                               state.structure.sig().action_name(a) + "'");
  std::vector<AgentId> rest;
  for (AgentId i = 0; i < state.structure.sig().agent_count(); ++i)
    if (!agent_set_contains(frame.full, i) && !agent_set_contains(frame.partial, i))
      rest.push_back(i);
  frame.oblivious = make_agent_set(std::move(rest));
  return frame;
}

EffectSet effects(const Theory& d, ActionId a, const KripkeStructure& m, WorldId u) {
  std::set<FluentLiteral> lits;
  for (const auto& st : d.domain) {
    if (st.kind != DomainStatement::Kind::Causes || st.action != a) continue;
    if (satisfies(m, u, st.condition)) lits.insert(st.effect);
  }
  for (const auto& l : lits)
    if (lits.count(l.complement()))
      throw EffectConsistencyError("action '" + m.sig().action_name(a) +
                                   "' causes both '" + m.sig().fluent_name(l.fluent) +
                                   "' and its negation in one world");
  return EffectSet(lits.begin(), lits.end());
}

ResStructure res_structure(const Theory& d, ActionId a, const PointedStructure& state,
                           const FrameOfReference& frame) {
  const KripkeStructure& m = state.structure;
  Formula exec = d.executability(a);
  ResStructure res{KripkeStructure(m.sig_ptr()), {}};
  res.structure.reserve_ids(m.next_id());
  for (const auto& [u, interp] : m.worlds()) {
    if (!satisfies(m, u, exec)) continue;
    Interpretation updated = interp;
    for (const auto& l : effects(d, a, m, u)) updated.set(l.fluent, l.positive);
    res.renaming[u] = res.structure.add_world(updated);
  }
  for (AgentId i : frame.full)
    for (const auto& [u, v] : m.relation(i)) {
      auto ru = res.renaming.find(u), rv = res.renaming.find(v);
      if (ru != res.renaming.end() && rv != res.renaming.end())
        res.structure.add_edge(ru->second, i, rv->second);
    }
  return res;
}

std::vector<PointedStructure> step_world(const Theory& d, ActionId a,
                                         const PointedStructure& state) {
  FrameOfReference frame = frame_of_reference(d, a, state);
  if (!frame.partial.empty())
    throw ObservabilityError("world-altering action '" + state.structure.sig().action_name(a) +
                             "' has partially observant agents");
  if (!satisfies(state, d.executability(a))) return {};
  ResStructure res = res_structure(d, a, state, frame);
  KripkeStructure out = union_k(state.structure, res.structure);
  EdgeSet links;
  for (AgentId i : frame.oblivious)
    for (const auto& [u, v] : state.structure.relation(i)) {
      auto ru = res.renaming.find(u);
      if (ru != res.renaming.end()) links.insert({ru->second, i, v});
    }
  out = edge_add(out, links);
  return {PointedStructure{std::move(out), res.renaming.at(state.real)}};
}

std::vector<FluentId> sensed_set(const Theory& d, ActionId a) {
  std::vector<FluentId> out;
  for (const auto& st : d.domain)
    if (st.kind == DomainStatement::Kind::Determines && st.action == a)
      out.push_back(st.fluent);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

/// Shared shape of the sensing and announcement steps: prune replica worlds
/// failing the executability condition, keep only observer edges, cut the
/// given replica edges, then glue the replica above the untouched original
/// via the oblivious relations.
PointedStructure splice(const PointedStructure& state, const FrameOfReference& frame,
                        const Replica& rep, const EdgeSet& rem_links,
                        const std::set<WorldId>& rem_states) {
  AgentSet observers = agent_set_union(frame.full, frame.partial);
  KripkeStructure pruned = world_subtract(rep.state.structure, rem_states);
  KripkeStructure cut = edge_subtract(restrict_to(pruned, observers), rem_links);
  WorldRenaming back;
  for (const auto& [u, cu] : rep.renaming)
    if (cut.has_world(cu)) back[cu] = u;
  return union_lambda(state, PointedStructure{std::move(cut), rep.state.real}, back,
                      observers);
}

}  // namespace

std::vector<PointedStructure> step_sense(const Theory& d, ActionId a,
                                         const PointedStructure& state) {
  FrameOfReference frame = frame_of_reference(d, a, state);
  Formula exec = d.executability(a);
  if (!satisfies(state, exec)) return {};
  std::vector<FluentId> sensed = sensed_set(d, a);
  Replica rep = replica(state, state.structure.next_id());
  std::set<WorldId> rem_states;
  for (const auto& [u, cu] : rep.renaming)
    if (!satisfies(rep.state.structure, cu, exec)) rem_states.insert(cu);
  EdgeSet rem_links;
  for (AgentId i : frame.full)
    for (const auto& [cu, cv] : rep.state.structure.relation(i)) {
      const auto& pu = rep.state.structure.valuation(cu);
      const auto& pv = rep.state.structure.valuation(cv);
      for (FluentId f : sensed)
        if (pu.value(f) != pv.value(f)) {
          rem_links.insert({cu, i, cv});
          break;
        }
    }
  return {splice(state, frame, rep, rem_links, rem_states)};
}

std::vector<PointedStructure> step_announce(const Theory& d, ActionId a,
                                            const PointedStructure& state,
                                            std::string* why_empty) {
  FrameOfReference frame = frame_of_reference(d, a, state);
  Formula exec = d.executability(a);
  const Signature& sig = state.structure.sig();
  auto announced = d.statements_for(a, DomainStatement::Kind::Announces);
  if (announced.size() != 1)
    throw ValidationError("action '" + sig.action_name(a) +
                          "' must have exactly one announces statement");
  const Formula& psi = announced.front()->condition;
  if (!satisfies(state, exec)) {
    if (why_empty) *why_empty = "precondition false";
    return {};
  }
  if (!eval_fluent(state.structure.valuation(state.real), psi)) {
    if (why_empty)
      *why_empty = "untruthful announcement: '" + psi.to_string(sig) +
                   "' is false in the real world";
    return {};
  }
  Replica rep = replica(state, state.structure.next_id());
  std::set<WorldId> rem_states;
  for (const auto& [u, cu] : rep.renaming)
    if (!satisfies(rep.state.structure, cu, exec)) rem_states.insert(cu);
  EdgeSet rem_links;
  for (AgentId i : frame.full)
    for (const auto& [cu, cv] : rep.state.structure.relation(i)) {
      bool tu = eval_fluent(rep.state.structure.valuation(cu), psi);
      bool tv = eval_fluent(rep.state.structure.valuation(cv), psi);
      if (tu != tv) rem_links.insert({cu, i, cv});
    }
  return {splice(state, frame, rep, rem_links, rem_states)};
}

std::vector<PointedStructure> step(const Theory& d, ActionId a, const PointedStructure& state,
                                   std::string* why_empty) {
  switch (d.kind_of(a)) {
    case ActionKind::WorldAltering: {
      auto out = step_world(d, a, state);
      if (out.empty() && why_empty) *why_empty = "precondition false";
      return out;
    }
    case ActionKind::Sensing: {
      auto out = step_sense(d, a, state);
      if (out.empty() && why_empty) *why_empty = "precondition false";
      return out;
    }
    case ActionKind::Announcement:
      return step_announce(d, a, state, why_empty);
  }
  return {};
}

BState step_bstate(const Theory& d, ActionId a, const BState& b, std::string* why_failed) {
  if (b.failed) {
    if (why_failed) *why_failed = "belief state already failed";
    return BState::fail();
  }
  std::vector<PointedStructure> out;
  for (std::size_t k = 0; k < b.states.size(); ++k) {
    std::string why;
    auto next = step(d, a, b.states[k], &why);
    if (next.empty()) {
      if (why_failed)
        *why_failed = "action '" + d.sig->action_name(a) + "' failed in state " +
                      std::to_string(k) + " (" + why + ")";
      return BState::fail();
    }
    for (auto& st : next) out.push_back(std::move(st));
  }
  return BState::of(std::move(out));
}

BState run_plan(const Theory& d, const std::vector<ActionId>& plan, const BState& b,
                std::string* why_failed) {
  BState cur = b;
  for (ActionId a : plan) {
    cur = step_bstate(d, a, cur, why_failed);
    if (cur.failed) return cur;
  }
  return cur;
}

bool entails(const Theory& d, const Query& q, const BState& initial) {
  BState result = run_plan(d, q.plan, initial);
  if (result.failed) return false;
  for (const auto& st : result.states)
    if (!satisfies(st, q.goal)) return false;
  return true;
}

namespace {

bool ignorance_everywhere(const PointedStructure& state, const FrameOfReference& frame,
                          const Formula& banned) {
  AgentSet observers = agent_set_union(frame.full, frame.partial);
  for (AgentId i : observers) {
    Formula belief = Formula::believes(i, banned);
    for (const auto& [u, interp] : state.structure.worlds())
      if (satisfies(state.structure, u, belief)) return false;
  }
  return true;
}

}  // namespace

bool consistency_preserving_sense(const Theory& d, ActionId a, const PointedStructure& state) {
  FrameOfReference frame = frame_of_reference(d, a, state);
  for (FluentId f : sensed_set(d, a)) {
    Formula atom = Formula::atom(f);
    AgentSet observers = agent_set_union(frame.full, frame.partial);
    for (AgentId i : observers) {
      Formula decided = Formula::disjunction(Formula::believes(i, atom),
                                             Formula::believes(i, Formula::negation(atom)));
      for (const auto& [u, interp] : state.structure.worlds())
        if (satisfies(state.structure, u, decided)) return false;
    }
  }
  return true;
}

bool consistency_preserving_announce(const Theory& d, ActionId a,
                                     const PointedStructure& state) {
  auto announced = d.statements_for(a, DomainStatement::Kind::Announces);
  if (announced.size() != 1)
    throw ValidationError("action '" + state.structure.sig().action_name(a) +
                          "' must have exactly one announces statement");
  FrameOfReference frame = frame_of_reference(d, a, state);
  return ignorance_everywhere(state, frame, Formula::negation(announced.front()->condition));
}

}  // namespace mapkit
