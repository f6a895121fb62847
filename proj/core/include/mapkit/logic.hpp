#ifndef MAPKIT_LOGIC_HPP
#define MAPKIT_LOGIC_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mapkit/errors.hpp"

namespace mapkit {

using AgentId = int;
using FluentId = int;
using ActionId = int;

/// Sorted, duplicate-free set of agent ids.
using AgentSet = std::vector<AgentId>;

AgentSet make_agent_set(std::vector<AgentId> agents);
bool agent_set_contains(const AgentSet& set, AgentId a);
AgentSet agent_set_union(const AgentSet& a, const AgentSet& b);

/// The vocabulary a theory is built over: agent, fluent and action names.
/// Canonical order of each kind is declaration order.
class Signature {
 public:
  Signature(std::vector<std::string> agents, std::vector<std::string> fluents,
            std::vector<std::string> actions);

  int agent_count() const { return static_cast<int>(agents_.size()); }
  int fluent_count() const { return static_cast<int>(fluents_.size()); }
  int action_count() const { return static_cast<int>(actions_.size()); }

  const std::string& agent_name(AgentId a) const { return agents_.at(a); }
  const std::string& fluent_name(FluentId f) const { return fluents_.at(f); }
  const std::string& action_name(ActionId a) const { return actions_.at(a); }

  AgentId agent(const std::string& name) const;
  FluentId fluent(const std::string& name) const;
  ActionId action(const std::string& name) const;

  bool has_agent(const std::string& name) const { return agent_index_.count(name) != 0; }
  bool has_fluent(const std::string& name) const { return fluent_index_.count(name) != 0; }
  bool has_action(const std::string& name) const { return action_index_.count(name) != 0; }

  AgentSet all_agents() const;

 private:
  std::vector<std::string> agents_, fluents_, actions_;
  std::map<std::string, int> agent_index_, fluent_index_, action_index_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

/// A fluent literal: a fluent or its negation.
struct FluentLiteral {
  FluentId fluent = 0;
  bool positive = true;

  FluentLiteral complement() const { return {fluent, !positive}; }
  friend bool operator==(const FluentLiteral&, const FluentLiteral&) = default;
  friend auto operator<=>(const FluentLiteral&, const FluentLiteral&) = default;
};

/// Total truth assignment over the fluents of a signature, packed as bits
/// in canonical fluent order.
struct Interpretation {
  std::uint32_t bits = 0;

  bool value(FluentId f) const { return (bits >> f) & 1u; }
  void set(FluentId f, bool v) {
    if (v)
      bits |= (1u << f);
    else
      bits &= ~(1u << f);
  }
  bool satisfies(const FluentLiteral& l) const { return value(l.fluent) == l.positive; }

  friend bool operator==(const Interpretation&, const Interpretation&) = default;
  friend auto operator<=>(const Interpretation&, const Interpretation&) = default;
};

/// Belief formula AST. Implication is desugared at construction; the stored
/// connectives are exactly Top/Bot/Atom/Not/And/Or plus the modal operators.
class Formula {
 public:
  enum class Kind { Top, Bot, Atom, Not, And, Or, Believes, Everyone, Common };

  static Formula top();
  static Formula bot();
  static Formula atom(FluentId f);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);  // !a | b
  static Formula believes(AgentId agent, Formula f);
  static Formula everyone(AgentSet group, Formula f);
  static Formula common(AgentSet group, Formula f);

  static Formula conjoin_all(const std::vector<Formula>& fs);  // empty -> top

  Kind kind() const { return node_->kind; }
  FluentId fluent() const { return node_->fluent; }
  AgentId agent() const { return node_->agent; }
  const AgentSet& group() const { return node_->group; }
  const Formula& left() const { return node_->children[0]; }
  const Formula& right() const { return node_->children[1]; }
  const Formula& child() const { return node_->children[0]; }

  /// True when no modal operator occurs anywhere in the AST.
  bool is_fluent_formula() const;

  /// Structural equality.
  bool same_as(const Formula& other) const;

  std::string to_string(const Signature& sig) const;

 private:
  struct Node {
    Kind kind;
    FluentId fluent = -1;
    AgentId agent = -1;
    AgentSet group;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Evaluate a fluent formula against a total interpretation.
bool eval_fluent(const Interpretation& interp, const Formula& phi);

/// Propositional entailment by exhaustive enumeration of the 2^|F|
/// interpretations of the signature.
bool prop_entails(const Signature& sig, const std::vector<Formula>& gamma, const Formula& phi);

/// Enumeration guard for operations that range over all interpretations or
/// all complete clauses. Default 16, overridable via MAPKIT_MAX_FLUENTS.
int max_enumerable_fluents();
void check_enumeration_capacity(const Signature& sig);

/// All 2^|F| complete clauses in canonical order: clause k mentions fluent f
/// positively iff bit f of k is clear.
std::vector<Formula> complete_clauses(const Signature& sig);

/// All 2^|F| interpretations in increasing bit order.
std::vector<Interpretation> all_interpretations(const Signature& sig);

}  // namespace mapkit

#endif
