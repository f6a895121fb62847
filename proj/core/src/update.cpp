#include "mapkit/update.hpp"

#include <algorithm>
#include <sstream>

namespace mapkit {

namespace {

KripkeStructure build_product(const KripkeStructure& m, const UpdateModel& u,
                              std::map<std::pair<WorldId, EventId>, WorldId>& ids) {
  KripkeStructure out(m.sig_ptr());
  for (const auto& [s, interp] : m.worlds()) {
    for (const auto& e : u.events) {
      if (!satisfies(m, s, u.pre.at(e))) continue;
      Interpretation updated = interp;
      for (const auto& [f, phi] : u.sub.at(e)) updated.set(f, satisfies(m, s, phi));
      ids[{s, e}] = out.add_world(updated);
    }
  }
  for (AgentId i = 0; i < m.sig().agent_count(); ++i) {
    auto rel = u.relations.find(i);
    if (rel == u.relations.end()) continue;
    for (const auto& [s, v] : m.relation(i)) {
      for (const auto& [e, x] : rel->second) {
        auto from = ids.find({s, e}), to = ids.find({v, x});
        if (from != ids.end() && to != ids.end())
          out.add_edge(from->second, i, to->second);
      }
    }
  }
  return out;
}

}  // namespace

KripkeStructure product_update(const KripkeStructure& m, const UpdateModel& u) {
  std::map<std::pair<WorldId, EventId>, WorldId> ids;
  return build_product(m, u, ids);
}

std::vector<PointedStructure> apply_template(const PointedStructure& state,
                                             const UpdateTemplate& t) {
  std::vector<PointedStructure> out;
  for (const auto& e : t.designated_set) {
    if (!satisfies(state, t.model.pre.at(e))) continue;
    std::map<std::pair<WorldId, EventId>, WorldId> ids;
    KripkeStructure prod = build_product(state.structure, t.model, ids);
    out.push_back(PointedStructure{std::move(prod), ids.at({state.real, e})});
  }
  return out;
}

namespace {

void null_substitutions(UpdateModel& model) {
  for (const auto& e : model.events) model.sub[e];
}

}  // namespace

UpdateInstance omega_world(const Theory& d, ActionId a, const FrameOfReference& rho) {
  if (!rho.partial.empty())
    throw ObservabilityError("world-altering action '" + d.sig->action_name(a) +
                             "' has partially observant agents");
  UpdateModel model;
  model.events = {"sigma", "epsilon"};
  for (AgentId i : rho.full) model.relations[i] = {{"sigma", "sigma"}, {"epsilon", "epsilon"}};
  for (AgentId i : rho.oblivious)
    model.relations[i] = {{"sigma", "epsilon"}, {"epsilon", "epsilon"}};
  model.pre.insert_or_assign("sigma", d.executability(a));
  model.pre.insert_or_assign("epsilon", Formula::top());
  Substitution sub;
  for (FluentId p = 0; p < d.sig->fluent_count(); ++p) {
    std::vector<Formula> plus, minus;
    for (const auto& st : d.domain) {
      if (st.kind != DomainStatement::Kind::Causes || st.action != a ||
          st.effect.fluent != p)
        continue;
      (st.effect.positive ? plus : minus).push_back(st.condition);
    }
    auto disjoin = [](const std::vector<Formula>& fs) {
      if (fs.empty()) return Formula::bot();
      Formula acc = fs.front();
      for (std::size_t k = 1; k < fs.size(); ++k) acc = Formula::disjunction(acc, fs[k]);
      return acc;
    };
    Formula psi_plus = disjoin(plus);
    Formula psi_minus = disjoin(minus);
    sub.insert_or_assign(p, Formula::disjunction(
        psi_plus, Formula::conjunction(Formula::atom(p), Formula::negation(psi_minus))));
  }
  model.sub["sigma"] = std::move(sub);
  model.sub["epsilon"] = {};
  return {std::move(model), "sigma"};
}

namespace {

UpdateModel three_event_model(const Theory& d, ActionId a, const FrameOfReference& rho,
                              const Formula& split) {
  UpdateModel model;
  model.events = {"sigma", "tau", "epsilon"};
  for (AgentId i : rho.full)
    model.relations[i] = {{"sigma", "sigma"}, {"tau", "tau"}, {"epsilon", "epsilon"}};
  for (AgentId i : rho.partial)
    model.relations[i] = {{"sigma", "sigma"}, {"tau", "tau"}, {"epsilon", "epsilon"},
                          {"sigma", "tau"},   {"tau", "sigma"}};
  for (AgentId i : rho.oblivious)
    model.relations[i] = {{"sigma", "epsilon"}, {"tau", "epsilon"}, {"epsilon", "epsilon"}};
  Formula psi = d.executability(a);
  model.pre.insert_or_assign("sigma", Formula::conjunction(psi, split));
  model.pre.insert_or_assign("tau", Formula::conjunction(psi, Formula::negation(split)));
  model.pre.insert_or_assign("epsilon", Formula::top());
  null_substitutions(model);
  return model;
}

}  // namespace

UpdateTemplate omega_sense(const Theory& d, ActionId a, const FrameOfReference& rho) {
  std::vector<FluentId> sensed = sensed_set(d, a);
  if (sensed.size() != 1)
    throw UnsupportedShapeError("update model for sensing action '" + d.sig->action_name(a) +
                                "' requires exactly one sensed fluent, got " +
                                std::to_string(sensed.size()));
  UpdateModel model = three_event_model(d, a, rho, Formula::atom(sensed.front()));
  return {std::move(model), {"sigma", "tau"}};
}

UpdateInstance omega_announce(const Theory& d, ActionId a, const FrameOfReference& rho) {
  auto announced = d.statements_for(a, DomainStatement::Kind::Announces);
  if (announced.size() != 1)
    throw ValidationError("action '" + d.sig->action_name(a) +
                          "' must have exactly one announces statement");
  UpdateModel model = three_event_model(d, a, rho, announced.front()->condition);
  return {std::move(model), "sigma"};
}

UpdateTemplate omega(const Theory& d, ActionId a, const PointedStructure& state) {
  if (!satisfies(state, d.executability(a))) return {};
  FrameOfReference rho = frame_of_reference(d, a, state);
  switch (d.kind_of(a)) {
    case ActionKind::WorldAltering: {
      UpdateInstance inst = omega_world(d, a, rho);
      return {std::move(inst.model), {inst.designated}};
    }
    case ActionKind::Sensing:
      return omega_sense(d, a, rho);
    case ActionKind::Announcement: {
      UpdateInstance inst = omega_announce(d, a, rho);
      return {std::move(inst.model), {inst.designated}};
    }
  }
  return {};
}

bool cross_check(const Theory& d, ActionId a, const PointedStructure& state) {
  std::vector<PointedStructure> direct = step(d, a, state);
  UpdateTemplate t = omega(d, a, state);
  std::vector<PointedStructure> del =
      t.designated_set.empty() ? std::vector<PointedStructure>{} : apply_template(state, t);
  if (direct.size() != del.size()) return false;
  std::vector<bool> used(del.size(), false);
  for (const auto& lhs : direct) {
    bool matched = false;
    for (std::size_t k = 0; k < del.size(); ++k) {
      if (used[k]) continue;
      if (bisimilar(lhs, del[k])) {
        used[k] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

std::string to_dot(const UpdateModel& u, const std::vector<EventId>& designated,
                   const Signature& sig) {
  std::ostringstream out;
  out << "digraph update_model {\n";
  for (const auto& e : u.events) {
    bool marked =
        std::find(designated.begin(), designated.end(), e) != designated.end();
    out << "  \"" << e << "\" [shape=" << (marked ? "box, peripheries=2" : "box")
        << ", label=\"" << e << ": " << u.pre.at(e).to_string(sig) << "\"];\n";
  }
  for (const auto& [i, pairs] : u.relations)
    for (const auto& [e, x] : pairs)
      out << "  \"" << e << "\" -> \"" << x << "\" [label=\"" << sig.agent_name(i)
          << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace mapkit
