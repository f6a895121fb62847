#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mapkit/init.hpp"
#include "mapkit/lang.hpp"
#include "mapkit/random.hpp"
#include "mapkit/state_io.hpp"
#include "mapkit/transition.hpp"
#include "mapkit/update.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSemantic = 2;
constexpr int kExitExecutionFailed = 3;
constexpr int kExitCrosscheckMismatch = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mapkit::Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

mapkit::Theory load_theory(const std::string& path) {
  mapkit::Theory theory = mapkit::parse_theory(read_file(path));
  mapkit::ValidationReport report = mapkit::validate(theory);
  for (const auto& issue : report.issues)
    if (!issue.is_error) std::cerr << "warning: " << issue.message << "\n";
  for (const auto& issue : report.issues)
    if (issue.is_error) throw mapkit::ValidationError(issue.message);
  return theory;
}

mapkit::BState initial_bstate(const mapkit::Theory& theory, const std::string& state_file,
                              bool cwa) {
  if (!state_file.empty()) {
    auto doc = nlohmann::json::parse(read_file(state_file));
    return mapkit::bstate_from_json(doc, theory.sig);
  }
  return mapkit::generate_initial(theory, cwa).bstate();
}

void print_bstate(const mapkit::BState& b, const std::string& format) {
  if (b.failed) {
    std::cout << "failed\n";
    return;
  }
  if (format == "json") {
    std::cout << mapkit::bstate_to_json(b).dump(2) << "\n";
  } else if (format == "dot") {
    for (const auto& st : b.states) std::cout << mapkit::to_dot(st);
  } else {
    for (std::size_t k = 0; k < b.states.size(); ++k) {
      const auto& st = b.states[k];
      std::cout << "state " << k << ": " << st.structure.world_count()
                << " world(s), designated " << st.real << "\n";
      for (const auto& [u, interp] : st.structure.worlds())
        std::cout << "  " << u << ": "
                  << mapkit::literal_list(st.structure.sig(), interp) << "\n";
    }
  }
}

std::vector<mapkit::ActionId> parse_plan(const std::string& text,
                                         const mapkit::SignaturePtr& sig) {
  return mapkit::parse_query("true after " + text, sig).plan;
}

/// Walk down the failing subformula chain of a goal at one state.
void explain(const mapkit::KripkeStructure& m, mapkit::WorldId s, const mapkit::Formula& phi,
             int depth) {
  const mapkit::Signature& sig = m.sig();
  std::string indent(2 * (depth + 1), ' ');
  std::cout << indent << "fails: " << phi.to_string(sig) << " at world " << s << "\n";
  using Kind = mapkit::Formula::Kind;
  switch (phi.kind()) {
    case Kind::And:
      if (!mapkit::satisfies(m, s, phi.left())) explain(m, s, phi.left(), depth + 1);
      else explain(m, s, phi.right(), depth + 1);
      return;
    case Kind::Or:
      explain(m, s, phi.left(), depth + 1);
      explain(m, s, phi.right(), depth + 1);
      return;
    case Kind::Believes:
      for (mapkit::WorldId v : m.successors(s, phi.agent()))
        if (!mapkit::satisfies(m, v, phi.child())) {
          explain(m, v, phi.child(), depth + 1);
          return;
        }
      return;
    default:
      return;
  }
}

int run_crosscheck(const mapkit::Theory& theory, const std::string& state_file, bool cwa,
                   int cases, unsigned seed) {
  int passed = 0, skipped = 0, failed = 0;
  mapkit::BState initial = initial_bstate(theory, state_file, cwa);
  for (const auto& st : initial.states) {
    for (mapkit::ActionId a = 0; a < theory.sig->action_count(); ++a) {
      try {
        (void)theory.kind_of(a);
      } catch (const mapkit::ValidationError&) {
        continue;  // uncategorized action, nothing to execute
      }
      if (theory.kind_of(a) == mapkit::ActionKind::Sensing &&
          mapkit::sensed_set(theory, a).size() != 1) {
        std::cout << theory.sig->action_name(a) << ": skipped: unsupported-shape\n";
        ++skipped;
        continue;
      }
      bool ok = mapkit::cross_check(theory, a, st);
      std::cout << theory.sig->action_name(a) << ": " << (ok ? "pass" : "FAIL") << "\n";
      (ok ? passed : failed)++;
    }
  }
  auto sig = std::make_shared<const mapkit::Signature>(
      std::vector<std::string>{"A", "B"}, std::vector<std::string>{"f", "g"},
      std::vector<std::string>{"act"});
  mapkit::Rng rng(seed);
  for (int k = 0; k < cases; ++k) {
    auto kind = static_cast<mapkit::ActionKind>(k % 3);
    mapkit::Theory random = mapkit::random_theory(rng, sig, kind);
    mapkit::PointedStructure state = mapkit::random_state(rng, sig, 3);
    if (mapkit::cross_check(random, 0, state)) {
      ++passed;
    } else {
      ++failed;
      std::cout << "random case " << k << " (seed " << seed << "): FAIL\n";
    }
  }
  std::cout << passed << " passed, " << skipped << " skipped, " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitCrosscheckMismatch;
}

int run_repl(const mapkit::Theory& theory, const std::string& state_file, bool cwa) {
  mapkit::BState current = initial_bstate(theory, state_file, cwa);
  std::vector<std::pair<mapkit::ActionId, mapkit::BState>> history;
  std::string line;
  std::cout << "mapkit repl; commands: do, undo, show, holds, frames, save, load, quit\n";
  while (std::cout << "> " << std::flush, std::getline(std::cin, line)) {
    std::istringstream words(line);
    std::string cmd;
    words >> cmd;
    std::string rest;
    std::getline(words, rest);
    while (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
    try {
      if (cmd.empty()) continue;
      if (cmd == "quit" || cmd == "exit") break;
      if (cmd == "do") {
        mapkit::ActionId a = theory.sig->action(rest);
        std::string why;
        mapkit::BState next = mapkit::step_bstate(theory, a, current, &why);
        if (next.failed) {
          std::cout << "failed: " << why << "\n";
          continue;
        }
        for (const auto& st : current.states) {
          mapkit::FrameOfReference f = mapkit::frame_of_reference(theory, a, st);
          std::cout << "frame: F={";
          for (auto i : f.full) std::cout << theory.sig->agent_name(i) << " ";
          std::cout << "} P={";
          for (auto i : f.partial) std::cout << theory.sig->agent_name(i) << " ";
          std::cout << "} O={";
          for (auto i : f.oblivious) std::cout << theory.sig->agent_name(i) << " ";
          std::cout << "}\n";
        }
        history.emplace_back(a, current);
        current = std::move(next);
        std::cout << current.states.size() << " state(s)";
        for (const auto& st : current.states) std::cout << " " << st.structure.world_count();
        std::cout << " world(s)\n";
      } else if (cmd == "undo") {
        if (history.empty()) {
          std::cout << "nothing to undo\n";
        } else {
          current = std::move(history.back().second);
          history.pop_back();
          std::cout << "ok\n";
        }
      } else if (cmd == "show") {
        print_bstate(current, rest.empty() ? "text" : rest);
      } else if (cmd == "holds") {
        mapkit::Formula phi = mapkit::parse_formula(rest, theory.sig);
        bool all = !current.failed;
        for (const auto& st : current.states)
          if (!mapkit::satisfies(st, phi)) all = false;
        std::cout << (all ? "true" : "false") << "\n";
      } else if (cmd == "frames") {
        mapkit::ActionId a = theory.sig->action(rest);
        for (const auto& st : current.states) {
          mapkit::FrameOfReference f = mapkit::frame_of_reference(theory, a, st);
          std::cout << "F={";
          for (auto i : f.full) std::cout << theory.sig->agent_name(i) << " ";
          std::cout << "} P={";
          for (auto i : f.partial) std::cout << theory.sig->agent_name(i) << " ";
          std::cout << "} O={";
          for (auto i : f.oblivious) std::cout << theory.sig->agent_name(i) << " ";
          std::cout << "}\n";
        }
      } else if (cmd == "save") {
        std::ofstream out(rest);
        if (!out) throw mapkit::Error("cannot write '" + rest + "'");
        out << mapkit::bstate_to_json(current).dump(2) << "\n";
        std::cout << "saved\n";
      } else if (cmd == "load") {
        current = mapkit::bstate_from_json(nlohmann::json::parse(read_file(rest)),
                                           theory.sig);
        history.clear();
        std::cout << "loaded\n";
      } else {
        std::cout << "unknown command '" << cmd << "'\n";
      }
    } catch (const std::exception& e) {
      std::cout << "error: " << e.what() << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mapkit: multi-agent action language engine"};
  app.require_subcommand(1);

  std::string file, state_file, out_format = "text", plan_text, queries_file;
  std::vector<std::string> inline_queries;
  bool cwa = false, trace = false, explain_flag = false;
  int cases = 0;
  unsigned seed = 1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "theory file")->required();
    cmd->add_flag("--cwa", cwa, "closed-world completion of the initial statements");
    cmd->add_option("--state", state_file, "explicit initial belief state (JSON)");
    cmd->add_option("--out", out_format, "output format: text, dot or json")
        ->check(CLI::IsMember({"text", "dot", "json"}));
  };

  CLI::App* check = app.add_subcommand("check", "parse and validate a theory");
  check->add_option("file", file, "theory file")->required();

  CLI::App* init = app.add_subcommand("init", "generate the initial belief state");
  add_common(init);

  CLI::App* exec = app.add_subcommand("exec", "execute a plan");
  add_common(exec);
  exec->add_option("--plan", plan_text, "semicolon-separated actions")->required();
  exec->add_flag("--trace", trace, "print per-step world counts");

  CLI::App* query = app.add_subcommand("query", "answer entailment queries");
  add_common(query);
  query->add_option("--queries", queries_file, "query file (.maq)");
  query->add_option("-q,--query", inline_queries, "inline query text");
  query->add_flag("--explain", explain_flag, "show a witness on false verdicts");

  CLI::App* repl = app.add_subcommand("repl", "interactive exploration");
  add_common(repl);

  CLI::App* crosscheck =
      app.add_subcommand("crosscheck", "compare direct and update-model routes");
  add_common(crosscheck);
  crosscheck->add_option("--cases", cases, "number of random cases");
  crosscheck->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) {
      mapkit::Theory theory = mapkit::parse_theory(read_file(file));
      mapkit::ValidationReport report = mapkit::validate(theory);
      for (const auto& issue : report.issues)
        std::cout << (issue.is_error ? "error" : "warning") << ": " << issue.message << "\n";
      if (!report.ok()) return kExitSemantic;
      std::cout << "OK: " << theory.sig->agent_count() << " agents, "
                << theory.sig->fluent_count() << " fluents, " << theory.sig->action_count()
                << " actions, " << theory.initial.size() << " initial statements\n";
      return kExitOk;
    }
    if (init->parsed()) {
      mapkit::Theory theory = load_theory(file);
      mapkit::BState b = initial_bstate(theory, state_file, cwa);
      std::cout << b.states.size() << " initial state(s)\n";
      print_bstate(b, out_format);
      return kExitOk;
    }
    if (exec->parsed()) {
      mapkit::Theory theory = load_theory(file);
      mapkit::BState b = initial_bstate(theory, state_file, cwa);
      std::vector<mapkit::ActionId> plan = parse_plan(plan_text, theory.sig);
      for (mapkit::ActionId a : plan) {
        std::string why;
        b = mapkit::step_bstate(theory, a, b, &why);
        if (b.failed) {
          std::cout << "failed at '" << theory.sig->action_name(a) << "': " << why << "\n";
          return kExitExecutionFailed;
        }
        if (trace) {
          std::cout << theory.sig->action_name(a) << ":";
          for (const auto& st : b.states) std::cout << " " << st.structure.world_count();
          std::cout << " world(s)\n";
        }
      }
      print_bstate(b, out_format);
      return kExitOk;
    }
    if (query->parsed()) {
      mapkit::Theory theory = load_theory(file);
      mapkit::BState b = initial_bstate(theory, state_file, cwa);
      std::vector<std::string> texts = inline_queries;
      if (!queries_file.empty()) {
        std::istringstream lines(read_file(queries_file));
        std::string line;
        while (std::getline(lines, line)) {
          std::string trimmed = line.substr(0, line.find('#'));
          if (trimmed.find_first_not_of(" \t\r") == std::string::npos) continue;
          texts.push_back(trimmed);
        }
      }
      if (texts.empty()) throw mapkit::Error("no query given; use -q or --queries");
      bool any_failed_plan = false;
      for (const auto& text : texts) {
        mapkit::Query q = mapkit::parse_query(text, theory.sig);
        bool verdict = mapkit::entails(theory, q, b);
        std::cout << mapkit::pretty_print(q, *theory.sig) << " -> "
                  << (verdict ? "true" : "false") << "\n";
        if (!verdict) {
          mapkit::BState result = mapkit::run_plan(theory, q.plan, b);
          if (result.failed) any_failed_plan = true;
          if (explain_flag) {
            if (result.failed) {
              std::cout << "  plan execution failed\n";
            } else {
              for (std::size_t k = 0; k < result.states.size(); ++k)
                if (!mapkit::satisfies(result.states[k], q.goal)) {
                  std::cout << "  witness: state " << k << "\n";
                  explain(result.states[k].structure, result.states[k].real, q.goal, 0);
                  break;
                }
            }
          }
        }
      }
      return any_failed_plan ? kExitExecutionFailed : kExitOk;
    }
    if (repl->parsed()) return run_repl(load_theory(file), state_file, cwa);
    if (crosscheck->parsed())
      return run_crosscheck(load_theory(file), state_file, cwa, cases, seed);
  } catch (const mapkit::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mapkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
