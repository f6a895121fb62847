#include "mapkit/logic.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace mapkit {

AgentSet make_agent_set(std::vector<AgentId> agents) {
  std::sort(agents.begin(), agents.end());
  agents.erase(std::unique(agents.begin(), agents.end()), agents.end());
  return agents;
}

bool agent_set_contains(const AgentSet& set, AgentId a) {
  return std::binary_search(set.begin(), set.end(), a);
}

AgentSet agent_set_union(const AgentSet& a, const AgentSet& b) {
  AgentSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Signature::Signature(std::vector<std::string> agents, std::vector<std::string> fluents,
                     std::vector<std::string> actions)
    : agents_(std::move(agents)), fluents_(std::move(fluents)), actions_(std::move(actions)) {
  if (agents_.empty()) throw SignatureError("signature has no agents");
  if (fluents_.empty()) throw SignatureError("signature has no fluents");
  if (actions_.empty()) throw SignatureError("signature has no actions");
  if (fluents_.size() > 32) throw CapacityError("more than 32 fluents are not supported");
  std::set<std::string> seen;
  auto index = [&seen](const std::vector<std::string>& names, std::map<std::string, int>& idx,
                       const char* what) {
    for (int i = 0; i < static_cast<int>(names.size()); ++i) {
      if (!seen.insert(names[i]).second)
        throw SignatureError(std::string("duplicate name '") + names[i] + "' in " + what +
                             " declaration (names must be unique across agents/fluents/actions)");
      idx.emplace(names[i], i);
    }
  };
  index(agents_, agent_index_, "agents");
  index(fluents_, fluent_index_, "fluents");
  index(actions_, action_index_, "actions");
}

AgentId Signature::agent(const std::string& name) const {
  auto it = agent_index_.find(name);
  if (it == agent_index_.end()) throw SignatureError("unknown agent '" + name + "'");
  return it->second;
}

FluentId Signature::fluent(const std::string& name) const {
  auto it = fluent_index_.find(name);
  if (it == fluent_index_.end()) throw SignatureError("unknown fluent '" + name + "'");
  return it->second;
}

ActionId Signature::action(const std::string& name) const {
  auto it = action_index_.find(name);
  if (it == action_index_.end()) throw SignatureError("unknown action '" + name + "'");
  return it->second;
}

AgentSet Signature::all_agents() const {
  AgentSet all(agents_.size());
  for (int i = 0; i < static_cast<int>(all.size()); ++i) all[i] = i;
  return all;
}

Formula Formula::top() {
  static const auto node = std::make_shared<const Node>(Node{Kind::Top});
  return Formula(node);
}

Formula Formula::bot() {
  static const auto node = std::make_shared<const Node>(Node{Kind::Bot});
  return Formula(node);
}

Formula Formula::atom(FluentId f) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->fluent = f;
  return Formula(std::move(node));
}

Formula Formula::negation(Formula f) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Not;
  node->children = {std::move(f)};
  return Formula(std::move(node));
}

Formula Formula::conjunction(Formula a, Formula b) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::And;
  node->children = {std::move(a), std::move(b)};
  return Formula(std::move(node));
}

Formula Formula::disjunction(Formula a, Formula b) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Or;
  node->children = {std::move(a), std::move(b)};
  return Formula(std::move(node));
}

Formula Formula::implication(Formula a, Formula b) {
  return disjunction(negation(std::move(a)), std::move(b));
}

Formula Formula::believes(AgentId agent, Formula f) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Believes;
  node->agent = agent;
  node->children = {std::move(f)};
  return Formula(std::move(node));
}

Formula Formula::everyone(AgentSet group, Formula f) {
  if (group.empty()) throw ArgumentError("group operator E requires a non-empty agent set");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Everyone;
  node->group = std::move(group);
  node->children = {std::move(f)};
  return Formula(std::move(node));
}

Formula Formula::common(AgentSet group, Formula f) {
  if (group.empty()) throw ArgumentError("group operator C requires a non-empty agent set");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Common;
  node->group = std::move(group);
  node->children = {std::move(f)};
  return Formula(std::move(node));
}

Formula Formula::conjoin_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conjunction(acc, fs[i]);
  return acc;
}

bool Formula::is_fluent_formula() const {
  switch (kind()) {
    case Kind::Top:
    case Kind::Bot:
    case Kind::Atom:
      return true;
    case Kind::Not:
      return child().is_fluent_formula();
    case Kind::And:
    case Kind::Or:
      return left().is_fluent_formula() && right().is_fluent_formula();
    case Kind::Believes:
    case Kind::Everyone:
    case Kind::Common:
      return false;
  }
  return false;
}

bool Formula::same_as(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Top:
    case Kind::Bot:
      return true;
    case Kind::Atom:
      return fluent() == other.fluent();
    case Kind::Not:
      return child().same_as(other.child());
    case Kind::And:
    case Kind::Or:
      return left().same_as(other.left()) && right().same_as(other.right());
    case Kind::Believes:
      return agent() == other.agent() && child().same_as(other.child());
    case Kind::Everyone:
    case Kind::Common:
      return group() == other.group() && child().same_as(other.child());
  }
  return false;
}

namespace {

void group_to_stream(std::ostringstream& out, const Signature& sig, const AgentSet& group,
                     char op) {
  out << op;
  if (group != sig.all_agents()) {
    out << "[{";
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (i) out << ",";
      out << sig.agent_name(group[i]);
    }
    out << "}]";
  }
  out << ' ';
}

void to_stream(std::ostringstream& out, const Signature& sig, const Formula& f, int parent_prec) {
  using Kind = Formula::Kind;
  // precedence: atoms/unary 3, & 2, | 1
  switch (f.kind()) {
    case Kind::Top:
      out << "true";
      return;
    case Kind::Bot:
      out << "false";
      return;
    case Kind::Atom:
      out << sig.fluent_name(f.fluent());
      return;
    case Kind::Not:
      out << '!';
      to_stream(out, sig, f.child(), 3);
      return;
    case Kind::And:
    case Kind::Or: {
      int prec = f.kind() == Kind::And ? 2 : 1;
      bool paren = prec < parent_prec;
      if (paren) out << '(';
      to_stream(out, sig, f.left(), prec);
      out << (f.kind() == Kind::And ? " & " : " | ");
      to_stream(out, sig, f.right(), prec);
      if (paren) out << ')';
      return;
    }
    case Kind::Believes:
      out << "B[" << sig.agent_name(f.agent()) << "] ";
      to_stream(out, sig, f.child(), 3);
      return;
    case Kind::Everyone:
      group_to_stream(out, sig, f.group(), 'E');
      to_stream(out, sig, f.child(), 3);
      return;
    case Kind::Common:
      group_to_stream(out, sig, f.group(), 'C');
      to_stream(out, sig, f.child(), 3);
      return;
  }
}

}  // namespace

std::string Formula::to_string(const Signature& sig) const {
  std::ostringstream out;
  to_stream(out, sig, *this, 0);
  return out.str();
}

bool eval_fluent(const Interpretation& interp, const Formula& phi) {
  using Kind = Formula::Kind;
  switch (phi.kind()) {
    case Kind::Top:
      return true;
    case Kind::Bot:
      return false;
    case Kind::Atom:
      return interp.value(phi.fluent());
    case Kind::Not:
      return !eval_fluent(interp, phi.child());
    case Kind::And:
      return eval_fluent(interp, phi.left()) && eval_fluent(interp, phi.right());
    case Kind::Or:
      return eval_fluent(interp, phi.left()) || eval_fluent(interp, phi.right());
    default:
      throw ArgumentError("eval_fluent applied to a formula with modal operators");
  }
}

bool prop_entails(const Signature& sig, const std::vector<Formula>& gamma, const Formula& phi) {
  check_enumeration_capacity(sig);
  const std::uint64_t count = 1ull << sig.fluent_count();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    Interpretation interp{static_cast<std::uint32_t>(bits)};
    bool all = true;
    for (const auto& g : gamma)
      if (!eval_fluent(interp, g)) {
        all = false;
        break;
      }
    if (all && !eval_fluent(interp, phi)) return false;
  }
  return true;
}

int max_enumerable_fluents() {
  if (const char* env = std::getenv("MAPKIT_MAX_FLUENTS")) {
    int v = std::atoi(env);
    if (v > 0) return std::min(v, 32);
  }
  return 16;
}

void check_enumeration_capacity(const Signature& sig) {
  if (sig.fluent_count() > max_enumerable_fluents())
    throw CapacityError("signature has " + std::to_string(sig.fluent_count()) +
                        " fluents, above the enumeration bound of " +
                        std::to_string(max_enumerable_fluents()) +
                        " (set MAPKIT_MAX_FLUENTS to raise it)");
}

std::vector<Formula> complete_clauses(const Signature& sig) {
  check_enumeration_capacity(sig);
  const std::uint64_t count = 1ull << sig.fluent_count();
  std::vector<Formula> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    Formula clause = (k & 1u) ? Formula::negation(Formula::atom(0)) : Formula::atom(0);
    for (FluentId f = 1; f < sig.fluent_count(); ++f) {
      Formula lit = ((k >> f) & 1u) ? Formula::negation(Formula::atom(f)) : Formula::atom(f);
      clause = Formula::disjunction(clause, lit);
    }
    out.push_back(clause);
  }
  return out;
}

std::vector<Interpretation> all_interpretations(const Signature& sig) {
  check_enumeration_capacity(sig);
  const std::uint64_t count = 1ull << sig.fluent_count();
  std::vector<Interpretation> out;
  out.reserve(count);
  for (std::uint64_t bits = 0; bits < count; ++bits)
    out.push_back(Interpretation{static_cast<std::uint32_t>(bits)});
  return out;
}

}  // namespace mapkit
