#include "mapkit/random.hpp"

namespace mapkit {

Formula random_fluent_formula(Rng& rng, const Signature& sig, int depth) {
  if (depth <= 0 || rng.below(3) == 0) return Formula::atom(rng.below(sig.fluent_count()));
  switch (rng.below(3)) {
    case 0:
      return Formula::negation(random_fluent_formula(rng, sig, depth - 1));
    case 1:
      return Formula::conjunction(random_fluent_formula(rng, sig, depth - 1),
                                  random_fluent_formula(rng, sig, depth - 1));
    default:
      return Formula::disjunction(random_fluent_formula(rng, sig, depth - 1),
                                  random_fluent_formula(rng, sig, depth - 1));
  }
}

Formula random_belief_formula(Rng& rng, const Signature& sig, int depth) {
  if (depth <= 0 || rng.below(4) == 0) return Formula::atom(rng.below(sig.fluent_count()));
  switch (rng.below(6)) {
    case 0:
      return Formula::negation(random_belief_formula(rng, sig, depth - 1));
    case 1:
      return Formula::conjunction(random_belief_formula(rng, sig, depth - 1),
                                  random_belief_formula(rng, sig, depth - 1));
    case 2:
      return Formula::disjunction(random_belief_formula(rng, sig, depth - 1),
                                  random_belief_formula(rng, sig, depth - 1));
    case 3:
      return Formula::believes(rng.below(sig.agent_count()),
                               random_belief_formula(rng, sig, depth - 1));
    case 4:
      return Formula::everyone(sig.all_agents(), random_belief_formula(rng, sig, depth - 1));
    default:
      return Formula::common(sig.all_agents(), random_belief_formula(rng, sig, depth - 1));
  }
}

PointedStructure random_state(Rng& rng, const SignaturePtr& sig, int max_worlds) {
  int n = 1 + rng.below(max_worlds);
  KripkeStructure m(sig);
  std::vector<WorldId> ids;
  for (int k = 0; k < n; ++k) {
    Interpretation z;
    for (FluentId f = 0; f < sig->fluent_count(); ++f) z.set(f, rng.coin());
    ids.push_back(m.add_world(z));
  }
  for (AgentId i = 0; i < sig->agent_count(); ++i)
    for (WorldId u : ids)
      for (WorldId v : ids)
        if (rng.below(3) != 0) m.add_edge(u, i, v);
  return PointedStructure{std::move(m), ids[rng.below(n)]};
}

Theory random_theory(Rng& rng, const SignaturePtr& sig, ActionKind kind) {
  Theory theory;
  theory.sig = sig;
  ActionId a = 0;
  if (rng.coin()) {
    DomainStatement st;
    st.kind = DomainStatement::Kind::Executable;
    st.action = a;
    st.condition = random_belief_formula(rng, *sig, 2);
    theory.domain.push_back(st);
  }
  switch (kind) {
    case ActionKind::WorldAltering: {
      int effects = 1 + rng.below(2);
      for (int k = 0; k < effects; ++k) {
        DomainStatement st;
        st.kind = DomainStatement::Kind::Causes;
        st.action = a;
        st.effect = {rng.below(sig->fluent_count()), rng.coin()};
        st.condition = rng.coin() ? Formula::top() : random_fluent_formula(rng, *sig, 2);
        theory.domain.push_back(st);
      }
      break;
    }
    case ActionKind::Sensing: {
      DomainStatement st;
      st.kind = DomainStatement::Kind::Determines;
      st.action = a;
      st.fluent = rng.below(sig->fluent_count());
      theory.domain.push_back(st);
      break;
    }
    case ActionKind::Announcement: {
      DomainStatement st;
      st.kind = DomainStatement::Kind::Announces;
      st.action = a;
      st.condition = random_fluent_formula(rng, *sig, 2);
      theory.domain.push_back(st);
      break;
    }
  }
  for (AgentId i = 0; i < sig->agent_count(); ++i) {
    int role = rng.below(3);  // observes, aware_of, nothing
    if (role == 1 && kind == ActionKind::WorldAltering) role = 2;
    if (role == 2) continue;
    DomainStatement st;
    st.kind = role == 0 ? DomainStatement::Kind::Observes : DomainStatement::Kind::AwareOf;
    st.action = a;
    st.agent = i;
    st.condition = rng.coin() ? Formula::top() : random_fluent_formula(rng, *sig, 1);
    theory.domain.push_back(st);
  }
  return theory;
}

}  // namespace mapkit
