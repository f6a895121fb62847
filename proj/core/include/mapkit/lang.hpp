#ifndef MAPKIT_LANG_HPP
#define MAPKIT_LANG_HPP

#include <optional>
#include <string>
#include <vector>

#include "mapkit/logic.hpp"

namespace mapkit {

struct SourcePos {
  int line = 0;
  int column = 0;
};

/// One parsed domain statement. The causes set-shorthand is expanded at
/// parse time, one statement per literal.
struct DomainStatement {
  enum class Kind { Executable, Causes, Determines, Announces, Observes, AwareOf };

  Kind kind;
  ActionId action = -1;
  AgentId agent = -1;         // Observes / AwareOf
  FluentId fluent = -1;       // Determines
  FluentLiteral effect{};     // Causes
  Formula condition = Formula::top();  // if-clause; Announces payload lives here too
  SourcePos pos{};
};

struct InitialStatement {
  Formula formula = Formula::top();
  SourcePos pos{};
};

enum class ActionKind { WorldAltering, Sensing, Announcement };

struct Theory {
  SignaturePtr sig;
  std::vector<DomainStatement> domain;
  std::vector<InitialStatement> initial;

  /// Executability condition of a; top when no statement declares one.
  Formula executability(ActionId a) const;

  /// The action's category per its Causes/Determines/Announces statements.
  /// Throws ValidationError for uncategorized actions.
  ActionKind kind_of(ActionId a) const;

  std::vector<const DomainStatement*> statements_for(ActionId a, DomainStatement::Kind k) const;
};

struct Query {
  Formula goal = Formula::top();
  std::vector<ActionId> plan;
};

struct ValidationIssue {
  bool is_error = true;
  std::string message;
  SourcePos pos{};
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const {
    for (const auto& i : issues)
      if (i.is_error) return false;
    return true;
  }
};

Theory parse_theory(const std::string& text);
Query parse_query(const std::string& text, const SignaturePtr& sig);

/// Parse a bare formula against an existing signature (REPL, query options).
Formula parse_formula(const std::string& text, const SignaturePtr& sig);

ValidationReport validate(const Theory& theory);

std::string pretty_print(const Theory& theory);
std::string pretty_print(const Query& query, const Signature& sig);

}  // namespace mapkit

#endif
