#include "mapkit/init.hpp"

#include <algorithm>
#include <set>

namespace mapkit {

namespace {

bool full_group(const Signature& sig, const AgentSet& group) {
  return static_cast<int>(group.size()) == sig.agent_count();
}

bool complements(const Formula& a, const Formula& b) {
  if (b.kind() == Formula::Kind::Not && b.child().same_as(a)) return true;
  if (a.kind() == Formula::Kind::Not && a.child().same_as(b)) return true;
  return false;
}

}  // namespace

InitialClassification classify(const Theory& theory) {
  const Signature& sig = *theory.sig;
  InitialClassification out;
  for (const auto& st : theory.initial) {
    const Formula& f = st.formula;
    if (f.is_fluent_formula()) {
      out.plain.push_back(f);
      continue;
    }
    bool ok = false;
    if (f.kind() == Formula::Kind::Common && full_group(sig, f.group())) {
      const Formula& body = f.child();
      if (body.is_fluent_formula()) {
        out.common.push_back(body);
        ok = true;
      } else if (body.kind() == Formula::Kind::Believes &&
                 body.child().is_fluent_formula()) {
        out.known_value.push_back({body.agent(), body.child(), true});
        ok = true;
      } else if (body.kind() == Formula::Kind::Or &&
                 body.left().kind() == Formula::Kind::Believes &&
                 body.right().kind() == Formula::Kind::Believes &&
                 body.left().agent() == body.right().agent() &&
                 body.left().child().is_fluent_formula() &&
                 complements(body.left().child(), body.right().child())) {
        out.known_value.push_back({body.left().agent(), body.left().child(), false});
        ok = true;
      } else if (body.kind() == Formula::Kind::And &&
                 body.left().kind() == Formula::Kind::Not &&
                 body.right().kind() == Formula::Kind::Not &&
                 body.left().child().kind() == Formula::Kind::Believes &&
                 body.right().child().kind() == Formula::Kind::Believes &&
                 body.left().child().agent() == body.right().child().agent() &&
                 body.left().child().child().is_fluent_formula() &&
                 complements(body.left().child().child(), body.right().child().child())) {
        out.ignorant.emplace_back(body.left().child().agent(), body.left().child().child());
        ok = true;
      }
    }
    if (!ok)
      throw DefinitenessError("initial statement 'initially " + f.to_string(sig) +
                              "' is not of an admissible definite form");
  }
  return out;
}

namespace {

std::vector<Interpretation> surviving(const Signature& sig, const InitialClassification& c) {
  check_enumeration_capacity(sig);
  std::vector<Interpretation> out;
  for (const auto& z : all_interpretations(sig)) {
    bool keep = true;
    for (const auto& phi : c.common)
      if (!eval_fluent(z, phi)) { keep = false; break; }
    if (keep)
      for (const auto& kv : c.known_value)
        if (kv.directed && !eval_fluent(z, kv.payload)) { keep = false; break; }
    if (keep) out.push_back(z);
  }
  return out;
}

bool payload_agree(const InitialClassification& c, AgentId i, const Interpretation& a,
                   const Interpretation& b) {
  for (const auto& kv : c.known_value) {
    if (kv.agent != i) continue;
    if (eval_fluent(a, kv.payload) != eval_fluent(b, kv.payload)) return false;
  }
  return true;
}

}  // namespace

std::vector<Formula> known_formulas(const Signature& sig, const InitialClassification& c,
                                    AgentId i) {
  std::vector<Interpretation> s = surviving(sig, c);
  std::vector<Formula> out;
  std::vector<Interpretation> zs = all_interpretations(sig);
  std::vector<Formula> clauses = complete_clauses(sig);
  for (std::size_t k = 0; k < clauses.size(); ++k) {
    bool constant = true;
    for (std::size_t x = 0; x < s.size() && constant; ++x)
      for (std::size_t y = x + 1; y < s.size() && constant; ++y)
        if (payload_agree(c, i, s[x], s[y]) &&
            eval_fluent(s[x], clauses[k]) != eval_fluent(s[y], clauses[k]))
          constant = false;
    if (constant) out.push_back(clauses[k]);
  }
  return out;
}

InitialClassification complete_cwa(const Signature& sig, InitialClassification c) {
  for (AgentId i = 0; i < sig.agent_count(); ++i) {
    std::vector<Formula> known = known_formulas(sig, c, i);
    for (const auto& clause : complete_clauses(sig)) {
      bool in_known = std::any_of(known.begin(), known.end(),
                                  [&](const Formula& f) { return f.same_as(clause); });
      if (in_known) continue;
      bool present = std::any_of(c.ignorant.begin(), c.ignorant.end(), [&](const auto& p) {
        return p.first == i && p.second.same_as(clause);
      });
      if (!present) c.ignorant.emplace_back(i, clause);
    }
  }
  return c;
}

namespace {

Formula statement_formula(const Signature& sig, const KnownValue& kv) {
  Formula belief = Formula::believes(kv.agent, kv.payload);
  Formula body = kv.directed
                     ? belief
                     : Formula::disjunction(
                           belief, Formula::believes(kv.agent, Formula::negation(kv.payload)));
  return Formula::common(sig.all_agents(), body);
}

Formula ignorance_formula(const Signature& sig, AgentId i, const Formula& phi) {
  return Formula::common(
      sig.all_agents(),
      Formula::conjunction(Formula::negation(Formula::believes(i, phi)),
                           Formula::negation(Formula::believes(i, Formula::negation(phi)))));
}

/// All classified statements as checkable formulas, paired with their
/// display text.
std::vector<std::pair<Formula, bool>> checkable(const Signature& sig,
                                                const InitialClassification& c) {
  std::vector<std::pair<Formula, bool>> out;  // formula, needs designated point only
  for (const auto& phi : c.plain) out.emplace_back(phi, true);
  for (const auto& phi : c.common)
    out.emplace_back(Formula::common(sig.all_agents(), phi), false);
  for (const auto& kv : c.known_value) out.emplace_back(statement_formula(sig, kv), false);
  for (const auto& [i, phi] : c.ignorant)
    out.emplace_back(ignorance_formula(sig, i, phi), false);
  return out;
}

}  // namespace

std::vector<PointedStructure> CanonicalInitial::states() const {
  std::vector<PointedStructure> out;
  for (WorldId s : designated) out.push_back(PointedStructure{structure, s});
  return out;
}

BState CanonicalInitial::bstate() const { return BState::of(states()); }

CanonicalInitial generate_initial(const SignaturePtr& sig, const InitialClassification& c) {
  std::vector<Interpretation> s = surviving(*sig, c);
  if (s.empty())
    throw InconsistencyError("initial statements admit no interpretation");
  CanonicalInitial out{KripkeStructure(sig), {}};
  std::vector<WorldId> ids;
  for (const auto& z : s) ids.push_back(out.structure.add_world(z));
  for (AgentId i = 0; i < sig->agent_count(); ++i) {
    // Two worlds are indistinguishable for i exactly when they agree on all
    // of i's known-value payloads; agreement on the derived known clauses
    // follows, and everything else stays maximally uncertain.
    std::vector<Formula> payloads;
    for (const auto& kv : c.known_value)
      if (kv.agent == i) payloads.push_back(kv.payload);
    for (std::size_t x = 0; x < s.size(); ++x)
      for (std::size_t y = 0; y < s.size(); ++y) {
        bool agree = true;
        for (const auto& phi : payloads)
          if (eval_fluent(s[x], phi) != eval_fluent(s[y], phi)) { agree = false; break; }
        if (agree) out.structure.add_edge(ids[x], i, ids[y]);
      }
  }
  for (std::size_t x = 0; x < s.size(); ++x) {
    bool real = true;
    for (const auto& phi : c.plain)
      if (!eval_fluent(s[x], phi)) { real = false; break; }
    if (real) out.designated.push_back(ids[x]);
  }
  if (out.designated.empty())
    throw InconsistencyError("no world satisfies all plain initial statements");
  for (const auto& [formula, point_only] : checkable(*sig, c)) {
    for (WorldId d : out.designated)
      if (!satisfies(out.structure, d, formula))
        throw InconsistencyError("generated initial state violates 'initially " +
                                 formula.to_string(*sig) + "'");
    (void)point_only;
  }
  return out;
}

CanonicalInitial generate_initial(const Theory& theory, bool cwa) {
  InitialClassification c = classify(theory);
  if (cwa) c = complete_cwa(*theory.sig, std::move(c));
  return generate_initial(theory.sig, c);
}

PointedStructure reduce_state(const PointedStructure& state) {
  return quotient(reachable_restriction(state));
}

Formula world_formula(const PointedStructure& state, WorldId u) {
  const Signature& sig = state.structure.sig();
  const Interpretation& z = state.structure.valuation(u);
  std::vector<Formula> lits;
  for (FluentId f = 0; f < sig.fluent_count(); ++f) {
    Formula atom = Formula::atom(f);
    lits.push_back(z.value(f) ? atom : Formula::negation(atom));
  }
  return Formula::conjoin_all(lits);
}

namespace {

/// Set partitions of {0..n-1} in restricted-growth-string order.
std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(n, 0);
  for (;;) {
    out.push_back(rgs);
    int k = n - 1;
    while (k > 0) {
      int cap = *std::max_element(rgs.begin(), rgs.begin() + k) + 1;
      if (rgs[k] < cap) { ++rgs[k]; std::fill(rgs.begin() + k + 1, rgs.end(), 0); break; }
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

}  // namespace

std::vector<PointedStructure> brute_force_initials(const Theory& theory, int max_worlds) {
  const SignaturePtr& sig = theory.sig;
  if (sig->fluent_count() > 2 || sig->agent_count() > 2 || max_worlds > 4)
    throw CapacityError("brute-force initial-state enumeration is limited to 2 fluents, "
                        "2 agents and 4 worlds");
  InitialClassification c = complete_cwa(*sig, classify(theory));
  std::vector<std::pair<Formula, bool>> statements = checkable(*sig, c);
  std::vector<Interpretation> zs = all_interpretations(*sig);
  std::vector<PointedStructure> out;
  for (std::uint32_t mask = 1; mask < (1u << zs.size()); ++mask) {
    std::vector<Interpretation> chosen;
    for (std::size_t k = 0; k < zs.size(); ++k)
      if (mask & (1u << k)) chosen.push_back(zs[k]);
    int n = static_cast<int>(chosen.size());
    if (n > max_worlds) continue;
    std::vector<std::vector<std::vector<int>>> rels(sig->agent_count(), partitions(n));
    std::vector<std::size_t> pick(sig->agent_count(), 0);
    for (;;) {
      KripkeStructure m(sig);
      std::vector<WorldId> ids;
      for (const auto& z : chosen) ids.push_back(m.add_world(z));
      for (AgentId i = 0; i < sig->agent_count(); ++i) {
        const auto& rgs = rels[i][pick[i]];
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            if (rgs[x] == rgs[y]) m.add_edge(ids[x], i, ids[y]);
      }
      for (int point = 0; point < n; ++point) {
        bool all = true;
        for (const auto& [formula, unused] : statements)
          if (!satisfies(m, ids[point], formula)) { all = false; break; }
        if (all) out.push_back(PointedStructure{m, ids[point]});
      }
      int carry = 0;
      while (carry < sig->agent_count()) {
        if (++pick[carry] < rels[carry].size()) break;
        pick[carry] = 0;
        ++carry;
      }
      if (carry == sig->agent_count()) break;
    }
  }
  return out;
}

}  // namespace mapkit
