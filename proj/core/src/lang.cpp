#include "mapkit/lang.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace mapkit {

Formula Theory::executability(ActionId a) const {
  for (const auto& st : domain)
    if (st.kind == DomainStatement::Kind::Executable && st.action == a) return st.condition;
  return Formula::top();
}

ActionKind Theory::kind_of(ActionId a) const {
  bool causes = false, senses = false, announces = false;
  for (const auto& st : domain) {
    if (st.action != a) continue;
    switch (st.kind) {
      case DomainStatement::Kind::Causes: causes = true; break;
      case DomainStatement::Kind::Determines: senses = true; break;
      case DomainStatement::Kind::Announces: announces = true; break;
      default: break;
    }
  }
  int kinds = int(causes) + int(senses) + int(announces);
  if (kinds == 0)
    throw ValidationError("action '" + sig->action_name(a) +
                          "' has no causes/determines/announces statement");
  if (kinds > 1)
    throw ValidationError("action '" + sig->action_name(a) +
                          "' appears in statements of more than one category");
  if (causes) return ActionKind::WorldAltering;
  if (senses) return ActionKind::Sensing;
  return ActionKind::Announcement;
}

std::vector<const DomainStatement*> Theory::statements_for(ActionId a,
                                                           DomainStatement::Kind k) const {
  std::vector<const DomainStatement*> out;
  for (const auto& st : domain)
    if (st.action == a && st.kind == k) out.push_back(&st);
  return out;
}

namespace {

struct Token {
  enum class Type { Ident, Punct, Newline, End };
  Type type = Type::End;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      if (c == '\n') {
        current_ = {Token::Type::Newline, "\n", line_, col_};
        ++pos_;
        ++line_;
        col_ = 1;
        return;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
        ++col_;
        continue;
      }
      int line = line_, col = col_;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
          ++pos_;
          ++col_;
        }
        current_ = {Token::Type::Ident, text_.substr(start, pos_ - start), line, col};
        return;
      }
      if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        pos_ += 2;
        col_ += 2;
        current_ = {Token::Type::Punct, "->", line, col};
        return;
      }
      static const std::string singles = "()[]{},;!&|";
      if (singles.find(c) != std::string::npos) {
        ++pos_;
        ++col_;
        current_ = {Token::Type::Punct, std::string(1, c), line, col};
        return;
      }
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    current_ = {Token::Type::End, "", line_, col_};
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_;
};

bool is_keyword(const std::string& s) {
  static const std::set<std::string> kw = {
      "agents",     "fluents",  "actions",  "executable", "if",        "causes",
      "determines", "announces", "observes", "aware_of",  "initially", "after",
      "true",       "false"};
  return kw.count(s) != 0;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  SourcePos here() {
    const Token& t = lex_.peek();
    return {t.line, t.column};
  }

  Theory parse_theory() {
    std::vector<std::string> agents, fluents, actions;
    Theory theory;
    for (;;) {
      skip_newlines();
      const Token& t = lex_.peek();
      if (t.type == Token::Type::End) break;
      if (t.type != Token::Type::Ident)
        throw ParseError("expected a statement, found '" + t.text + "'", t.line, t.column);
      if (t.text == "agents" || t.text == "fluents" || t.text == "actions") {
        if (sig_)
          throw ParseError("declarations must precede all statements", t.line, t.column);
        Token kw = lex_.take();
        auto names = parse_name_list();
        auto& dest = kw.text == "agents" ? agents : kw.text == "fluents" ? fluents : actions;
        dest.insert(dest.end(), names.begin(), names.end());
        end_statement();
        continue;
      }
      if (!sig_) {
        sig_ = std::make_shared<const Signature>(agents, fluents, actions);
        theory.sig = sig_;
      }
      if (t.text == "executable") {
        Token kw = lex_.take();
        DomainStatement st;
        st.kind = DomainStatement::Kind::Executable;
        st.pos = {kw.line, kw.column};
        st.action = sig_->action(parse_name());
        st.condition = parse_optional_if(/*fluent_only=*/false);
        theory.domain.push_back(st);
        end_statement();
        continue;
      }
      if (t.text == "initially") {
        Token kw = lex_.take();
        InitialStatement st;
        st.pos = {kw.line, kw.column};
        st.formula = parse_formula();
        theory.initial.push_back(st);
        end_statement();
        continue;
      }
      // "<agent> observes|aware_of <action> [if phi]" or
      // "<action> causes|determines|announces ...".
      Token first = lex_.peek();
      std::string name = parse_name();
      Token verb = expect_ident("statement keyword");
      SourcePos pos{first.line, first.column};
      if (verb.text == "observes" || verb.text == "aware_of") {
        DomainStatement st;
        st.kind = verb.text == "observes" ? DomainStatement::Kind::Observes
                                          : DomainStatement::Kind::AwareOf;
        st.pos = pos;
        st.agent = sig_->agent(name);
        st.action = sig_->action(parse_name());
        st.condition = parse_optional_if(/*fluent_only=*/true);
        theory.domain.push_back(st);
      } else if (verb.text == "causes") {
        std::vector<FluentLiteral> effects{parse_literal()};
        while (lex_.peek().type == Token::Type::Punct && lex_.peek().text == ",") {
          lex_.take();
          effects.push_back(parse_literal());
        }
        Formula cond = parse_optional_if(/*fluent_only=*/false);
        for (const auto& lit : effects) {
          DomainStatement st;
          st.kind = DomainStatement::Kind::Causes;
          st.pos = pos;
          st.action = sig_->action(name);
          st.effect = lit;
          st.condition = cond;
          theory.domain.push_back(st);
        }
      } else if (verb.text == "determines") {
        DomainStatement st;
        st.kind = DomainStatement::Kind::Determines;
        st.pos = pos;
        st.action = sig_->action(name);
        st.fluent = sig_->fluent(parse_name());
        theory.domain.push_back(st);
      } else if (verb.text == "announces") {
        DomainStatement st;
        st.kind = DomainStatement::Kind::Announces;
        st.pos = pos;
        st.action = sig_->action(name);
        st.condition = parse_formula();
        if (!st.condition.is_fluent_formula())
          throw ParseError("announced formula must be a fluent formula", pos.line, pos.column);
        theory.domain.push_back(st);
      } else {
        throw ParseError("unknown statement keyword '" + verb.text + "'", verb.line, verb.column);
      }
      end_statement();
    }
    if (!sig_) {
      sig_ = std::make_shared<const Signature>(agents, fluents, actions);
      theory.sig = sig_;
    }
    return theory;
  }

  Query parse_query_text(SignaturePtr sig) {
    sig_ = std::move(sig);
    skip_newlines();
    Query q;
    q.goal = parse_formula();
    Token after = expect_ident("'after'");
    if (after.text != "after")
      throw ParseError("expected 'after', found '" + after.text + "'", after.line, after.column);
    if (lex_.peek().type == Token::Type::Punct && lex_.peek().text == "[") {
      lex_.take();
      expect_punct("]");
    } else {
      q.plan.push_back(sig_->action(parse_name()));
      while (lex_.peek().type == Token::Type::Punct && lex_.peek().text == ";") {
        lex_.take();
        q.plan.push_back(sig_->action(parse_name()));
      }
    }
    end_statement();
    skip_newlines();
    const Token& t = lex_.peek();
    if (t.type != Token::Type::End)
      throw ParseError("trailing input after query", t.line, t.column);
    return q;
  }

  Formula parse_formula_text(SignaturePtr sig) {
    sig_ = std::move(sig);
    skip_newlines();
    Formula f = parse_formula();
    skip_newlines();
    const Token& t = lex_.peek();
    if (t.type != Token::Type::End)
      throw ParseError("trailing input after formula", t.line, t.column);
    return f;
  }

 private:
  void skip_newlines() {
    while (lex_.peek().type == Token::Type::Newline) lex_.take();
  }

  void end_statement() {
    if (lex_.peek().type == Token::Type::Punct && lex_.peek().text == ";") lex_.take();
    const Token& t = lex_.peek();
    if (t.type == Token::Type::Newline || t.type == Token::Type::End) return;
    throw ParseError("expected end of statement, found '" + t.text + "'", t.line, t.column);
  }

  Token expect_ident(const char* what) {
    Token t = lex_.take();
    if (t.type != Token::Type::Ident)
      throw ParseError(std::string("expected ") + what + ", found '" + t.text + "'", t.line,
                       t.column);
    return t;
  }

  void expect_punct(const std::string& p) {
    Token t = lex_.take();
    if (t.type != Token::Type::Punct || t.text != p)
      throw ParseError("expected '" + p + "', found '" + t.text + "'", t.line, t.column);
  }

  /// Ground name: IDENT optionally followed by a parenthesized argument
  /// list, folded into one name like "has_key(A)".
  std::string parse_name() {
    Token t = expect_ident("a name");
    if (is_keyword(t.text))
      throw ParseError("keyword '" + t.text + "' used as a name", t.line, t.column);
    std::string name = t.text;
    if (lex_.peek().type == Token::Type::Punct && lex_.peek().text == "(") {
      lex_.take();
      name += '(';
      name += expect_ident("an argument name").text;
      while (lex_.peek().type == Token::Type::Punct && lex_.peek().text == ",") {
        lex_.take();
        name += ',';
        name += expect_ident("an argument name").text;
      }
      expect_punct(")");
      name += ')';
    }
    return name;
  }

  std::vector<std::string> parse_name_list() {
    std::vector<std::string> names{parse_name()};
    while (lex_.peek().type == Token::Type::Punct && lex_.peek().text == ",") {
      lex_.take();
      names.push_back(parse_name());
    }
    return names;
  }

  FluentLiteral parse_literal() {
    bool positive = true;
    if (lex_.peek().type == Token::Type::Punct && lex_.peek().text == "!") {
      lex_.take();
      positive = false;
    }
    return {sig_->fluent(parse_name()), positive};
  }

  Formula parse_optional_if(bool fluent_only) {
    if (lex_.peek().type == Token::Type::Ident && lex_.peek().text == "if") {
      Token t = lex_.take();
      Formula f = parse_formula();
      if (fluent_only && !f.is_fluent_formula())
        throw ParseError("observability condition must be a fluent formula", t.line, t.column);
      return f;
    }
    return Formula::top();
  }

  Formula parse_formula() { return parse_implication(); }

  Formula parse_implication() {
    Formula lhs = parse_disjunction();
    if (lex_.peek().type == Token::Type::Punct && lex_.peek().text == "->") {
      lex_.take();
      return Formula::implication(std::move(lhs), parse_implication());
    }
    return lhs;
  }

  Formula parse_disjunction() {
    Formula f = parse_conjunction();
    while (lex_.peek().type == Token::Type::Punct && lex_.peek().text == "|") {
      lex_.take();
      f = Formula::disjunction(std::move(f), parse_conjunction());
    }
    return f;
  }

  Formula parse_conjunction() {
    Formula f = parse_unary();
    while (lex_.peek().type == Token::Type::Punct && lex_.peek().text == "&") {
      lex_.take();
      f = Formula::conjunction(std::move(f), parse_unary());
    }
    return f;
  }

  bool starts_unary(const Token& t) const {
    if (t.type == Token::Type::Punct) return t.text == "!" || t.text == "(";
    if (t.type != Token::Type::Ident) return false;
    return !is_keyword(t.text) || t.text == "true" || t.text == "false";
  }

  Formula parse_unary() {
    const Token& t = lex_.peek();
    if (t.type == Token::Type::Punct && t.text == "!") {
      lex_.take();
      return Formula::negation(parse_unary());
    }
    if (t.type == Token::Type::Punct && t.text == "(") {
      lex_.take();
      Formula f = parse_formula();
      expect_punct(")");
      return f;
    }
    if (t.type != Token::Type::Ident)
      throw ParseError("expected a formula, found '" + t.text + "'", t.line, t.column);
    if (t.text == "true") {
      lex_.take();
      return Formula::top();
    }
    if (t.text == "false") {
      lex_.take();
      return Formula::bot();
    }
    if (t.text == "B") {
      Token b = lex_.take();
      if (!(lex_.peek().type == Token::Type::Punct && lex_.peek().text == "["))
        throw ParseError("expected '[' after B", b.line, b.column);
      lex_.take();
      AgentId agent = sig_->agent(expect_ident("an agent name").text);
      expect_punct("]");
      return Formula::believes(agent, parse_unary());
    }
    if (t.text == "E" || t.text == "C") {
      // Group operator when followed by '[' or by the start of a formula;
      // otherwise an ordinary fluent name.
      Token op = lex_.take();
      AgentSet group;
      if (lex_.peek().type == Token::Type::Punct && lex_.peek().text == "[") {
        lex_.take();
        expect_punct("{");
        for (;;) {
          group.push_back(sig_->agent(expect_ident("an agent name").text));
          if (lex_.peek().type == Token::Type::Punct && lex_.peek().text == ",")
            lex_.take();
          else
            break;
        }
        expect_punct("}");
        expect_punct("]");
        group = make_agent_set(std::move(group));
      } else if (starts_unary(lex_.peek())) {
        group = sig_->all_agents();
      } else {
        return Formula::atom(sig_->fluent(op.text));
      }
      Formula body = parse_unary();
      return op.text == "E" ? Formula::everyone(std::move(group), std::move(body))
                            : Formula::common(std::move(group), std::move(body));
    }
    return Formula::atom(sig_->fluent(parse_name()));
  }

  Lexer lex_;
  SignaturePtr sig_;
};

}  // namespace

namespace {

// Undeclared names surface as parse errors with a source position.
template <typename Fn>
auto with_position(Parser& parser, Fn fn) {
  try {
    return fn();
  } catch (const SignatureError& e) {
    SourcePos pos = parser.here();
    throw ParseError(e.what(), pos.line, pos.column);
  }
}

}  // namespace

Theory parse_theory(const std::string& text) {
  Parser parser(text);
  return with_position(parser, [&] { return parser.parse_theory(); });
}

Query parse_query(const std::string& text, const SignaturePtr& sig) {
  Parser parser(text);
  return with_position(parser, [&] { return parser.parse_query_text(sig); });
}

Formula parse_formula(const std::string& text, const SignaturePtr& sig) {
  Parser parser(text);
  return with_position(parser, [&] { return parser.parse_formula_text(sig); });
}

ValidationReport validate(const Theory& theory) {
  ValidationReport report;
  const Signature& sig = *theory.sig;
  for (ActionId a = 0; a < sig.action_count(); ++a) {
    int exec = 0, announce = 0;
    bool causes = false, senses = false, announces = false;
    SourcePos pos{};
    for (const auto& st : theory.domain) {
      if (st.action != a) continue;
      pos = st.pos;
      switch (st.kind) {
        case DomainStatement::Kind::Executable: ++exec; break;
        case DomainStatement::Kind::Causes: causes = true; break;
        case DomainStatement::Kind::Determines: senses = true; break;
        case DomainStatement::Kind::Announces: announces = true; ++announce; break;
        default: break;
      }
    }
    if (exec > 1)
      report.issues.push_back({true,
                               "action '" + sig.action_name(a) +
                                   "' has more than one executability condition",
                               pos});
    if (int(causes) + int(senses) + int(announces) > 1)
      report.issues.push_back({true,
                               "action '" + sig.action_name(a) +
                                   "' appears in statements of more than one category",
                               pos});
    if (announce > 1)
      report.issues.push_back({true,
                               "action '" + sig.action_name(a) +
                                   "' has more than one announces statement",
                               pos});
    if (!causes && !senses && !announces)
      report.issues.push_back({false,
                               "action '" + sig.action_name(a) +
                                   "' has no causes/determines/announces statement",
                               pos});
  }
  // Conservative propositional pre-screen: an agent with both an observes
  // and an aware_of statement for one action whose conditions can hold
  // together. The semantic check is done again at execution time.
  for (const auto& obs : theory.domain) {
    if (obs.kind != DomainStatement::Kind::Observes) continue;
    for (const auto& aw : theory.domain) {
      if (aw.kind != DomainStatement::Kind::AwareOf || aw.action != obs.action ||
          aw.agent != obs.agent)
        continue;
      Formula both = Formula::conjunction(obs.condition, aw.condition);
      bool unsat = prop_entails(sig, {both}, Formula::bot());
      if (!unsat)
        report.issues.push_back(
            {false,
             "agent '" + sig.agent_name(obs.agent) + "' may be both observer and partial observer of '" +
                 sig.action_name(obs.action) + "' (co-satisfiable conditions)",
             aw.pos});
    }
  }
  return report;
}

namespace {

std::string literal_text(const Signature& sig, const FluentLiteral& l) {
  return (l.positive ? "" : "!") + sig.fluent_name(l.fluent);
}

}  // namespace

std::string pretty_print(const Theory& theory) {
  const Signature& sig = *theory.sig;
  std::ostringstream out;
  auto emit_names = [&out](const char* kw, int count, auto name) {
    out << kw << ' ';
    for (int i = 0; i < count; ++i) {
      if (i) out << ", ";
      out << name(i);
    }
    out << '\n';
  };
  emit_names("agents", sig.agent_count(), [&](int i) { return sig.agent_name(i); });
  emit_names("fluents", sig.fluent_count(), [&](int i) { return sig.fluent_name(i); });
  emit_names("actions", sig.action_count(), [&](int i) { return sig.action_name(i); });
  out << '\n';
  for (const auto& st : theory.domain) {
    switch (st.kind) {
      case DomainStatement::Kind::Executable:
        out << "executable " << sig.action_name(st.action);
        break;
      case DomainStatement::Kind::Causes:
        out << sig.action_name(st.action) << " causes " << literal_text(sig, st.effect);
        break;
      case DomainStatement::Kind::Determines:
        out << sig.action_name(st.action) << " determines " << sig.fluent_name(st.fluent);
        break;
      case DomainStatement::Kind::Announces:
        out << sig.action_name(st.action) << " announces " << st.condition.to_string(sig);
        break;
      case DomainStatement::Kind::Observes:
        out << sig.agent_name(st.agent) << " observes " << sig.action_name(st.action);
        break;
      case DomainStatement::Kind::AwareOf:
        out << sig.agent_name(st.agent) << " aware_of " << sig.action_name(st.action);
        break;
    }
    if (st.kind != DomainStatement::Kind::Announces &&
        st.kind != DomainStatement::Kind::Determines &&
        !st.condition.same_as(Formula::top()))
      out << " if " << st.condition.to_string(sig);
    out << '\n';
  }
  for (const auto& st : theory.initial)
    out << "initially " << st.formula.to_string(sig) << '\n';
  return out.str();
}

std::string pretty_print(const Query& query, const Signature& sig) {
  std::ostringstream out;
  out << query.goal.to_string(sig) << " after ";
  if (query.plan.empty()) {
    out << "[]";
  } else {
    for (std::size_t i = 0; i < query.plan.size(); ++i) {
      if (i) out << "; ";
      out << sig.action_name(query.plan[i]);
    }
  }
  return out.str();
}

}  // namespace mapkit
