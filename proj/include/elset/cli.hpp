#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "elset/elset.hpp"

namespace elset {

// Batch front end. Exit codes: 0 success (and "true" answers), 1 for "false"
// answers of boolean queries, 2 for usage, parse, and analysis errors.
namespace cli {

namespace detail {

inline std::string read_input(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << stdin_stream.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw Error("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

inline Program load_program(const std::string& path, const std::string& mode,
                            std::istream& stdin_stream) {
  const std::string text = read_input(path, stdin_stream);
  if (mode == "auto") return parse_program_auto(text);
  if (mode == "nondisjunctive" || mode == "nd") return parse_program(text, Mode::Nondisjunctive);
  if (mode == "disjunctive" || mode == "dj") return parse_program(text, Mode::Disjunctive);
  throw Error("unknown mode '" + mode + "' (expected auto, nondisjunctive, or disjunctive)");
}

inline void print_sets(std::ostream& out, const std::vector<AtomSet>& sets) {
  for (const AtomSet& s : sets) out << render_atomset(s) << "\n";
}

inline nlohmann::json sets_json(const std::vector<AtomSet>& sets) {
  nlohmann::json out = nlohmann::json::array();
  for (const AtomSet& s : sets) out.push_back(to_json(s));
  return out;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err,
                   std::istream& stdin_stream = std::cin) {
  CLI::App app{"analysis toolkit for ground logic programs"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string mode = "auto";
  std::string format = "text";
  std::string set_text;
  std::string model_text;
  std::size_t cap = 100000;
  std::size_t model_bound = kDefaultModelBound;
  std::size_t subset_bound = kDefaultSubsetBound;
  bool verify = false;

  GenParams gen;
  int trials = 50;
  std::string gen_mode = "nondisjunctive";

  auto add_program_options = [&](CLI::App* cmd, bool with_format = true) {
    cmd->add_option("input", input, "program file in .lp format, or '-' for stdin");
    cmd->add_option("--mode", mode, "auto|nondisjunctive|disjunctive (default: auto)");
    if (with_format) cmd->add_option("--format", format, "text|json (default: text)");
  };

  CLI::App* cmd_loops = app.add_subcommand("loops", "list all loops of the program");
  add_program_options(cmd_loops);
  cmd_loops->add_option("--cap", cap, "abort if more results than this exist");

  CLI::App* cmd_elementary =
      app.add_subcommand("elementary", "decide whether a set is elementary");
  add_program_options(cmd_elementary);
  CLI::Option* elem_set =
      cmd_elementary->add_option("--set", set_text, "target atom set")->required();

  CLI::App* cmd_elementary_all =
      app.add_subcommand("elementary-sets", "list all elementary sets of the program");
  add_program_options(cmd_elementary_all);
  cmd_elementary_all->add_option("--cap", cap, "abort if more results than this exist");

  CLI::App* cmd_subgraph =
      app.add_subcommand("subgraph", "elementary subgraph of a set, with fixpoint trace");
  cmd_subgraph->add_option("input", input, "program file in .lp format, or '-' for stdin");
  cmd_subgraph->add_option("--mode", mode, "auto|nondisjunctive|disjunctive (default: auto)");
  cmd_subgraph->add_option("--format", format, "text|json|dot (default: text)");
  cmd_subgraph->add_option("--set", set_text, "target atom set")->required();

  CLI::App* cmd_depgraph =
      app.add_subcommand("depgraph", "positive dependency graph of the program");
  cmd_depgraph->add_option("input", input, "program file in .lp format, or '-' for stdin");
  cmd_depgraph->add_option("--mode", mode, "auto|nondisjunctive|disjunctive (default: auto)");
  cmd_depgraph->add_option("--format", format, "text|json|dot (default: text)");

  CLI::App* cmd_es = app.add_subcommand("es", "external support formula of a set");
  add_program_options(cmd_es);
  cmd_es->add_option("--set", set_text, "target atom set")->required();

  CLI::App* cmd_lf = app.add_subcommand("lf", "loop formula of a set");
  add_program_options(cmd_lf);
  cmd_lf->add_option("--set", set_text, "target atom set")->required();

  CLI::App* cmd_unfounded =
      app.add_subcommand("unfounded", "decide whether a set is unfounded w.r.t. a model");
  add_program_options(cmd_unfounded);
  cmd_unfounded->add_option("--set", set_text, "target atom set")->required();
  cmd_unfounded->add_option("--model", model_text, "interpretation X")->required();

  CLI::App* cmd_min_unfounded = app.add_subcommand(
      "min-unfounded", "elementarily unfounded sets (= minimal nonempty unfounded sets)");
  add_program_options(cmd_min_unfounded);
  cmd_min_unfounded->add_option("--model", model_text, "interpretation X")->required();

  CLI::App* cmd_models = app.add_subcommand("models", "list all models of the program");
  add_program_options(cmd_models);
  cmd_models->add_option("--model-bound", model_bound, "max universe size for enumeration");

  CLI::App* cmd_stable = app.add_subcommand("stable", "list all stable models of the program");
  add_program_options(cmd_stable);
  cmd_stable->add_option("--model-bound", model_bound, "max universe size for enumeration");

  CLI::App* cmd_check =
      app.add_subcommand("check", "evaluate the stability conditions for a model");
  add_program_options(cmd_check);
  cmd_check->add_option("--model", model_text, "interpretation X")->required();
  cmd_check->add_option("--subset-bound", subset_bound, "max universe size for subset sweeps");

  CLI::App* cmd_gs =
      app.add_subcommand("gs", "decide whether a non-trivial loop is GS-elementary");
  add_program_options(cmd_gs);
  cmd_gs->add_option("--set", set_text, "non-trivial loop")->required();

  CLI::App* cmd_reduce =
      app.add_subcommand("reduce", "build the elementariness program from a DIMACS 3-CNF");
  cmd_reduce->add_option("input", input, "DIMACS file, or '-' for stdin");
  cmd_reduce->add_option("--format", format, "text|json (default: text)");
  cmd_reduce->add_flag("--verify", verify,
                       "also check elementary(Y) == unsat(F) (small instances only)");

  CLI::App* cmd_suite = app.add_subcommand("suite", "run the random equivalence suite");
  cmd_suite->add_option("--format", format, "text|json (default: text)");
  cmd_suite->add_option("--seed", gen.seed, "base seed");
  cmd_suite->add_option("--trials", trials, "number of random programs");
  cmd_suite->add_option("--atoms", gen.atom_count, "atoms per program (max 8)");
  cmd_suite->add_option("--rules", gen.rule_count, "rules per program (max 16)");
  cmd_suite->add_option("--max-head", gen.max_head, "max head atoms per rule");
  cmd_suite->add_option("--max-pos", gen.max_pos_body, "max positive body atoms");
  cmd_suite->add_option("--max-neg", gen.max_neg_body, "max negated body atoms");
  cmd_suite->add_flag("--double-negation", gen.allow_double_negation,
                      "allow 'not not' literals");
  cmd_suite->add_option("--gen-mode", gen_mode, "nondisjunctive|disjunctive|hcf");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  const bool json = format == "json";
  try {
    if (app.got_subcommand(cmd_loops)) {
      const Program program = detail::load_program(input, mode, stdin_stream);
      const auto loops = enumerate_loops(program, cap);
      if (json) {
        out << nlohmann::json{{"loops", detail::sets_json(loops)}}.dump(2) << "\n";
      } else {
        detail::print_sets(out, loops);
      }
      return 0;
    }
    if (app.got_subcommand(cmd_elementary)) {
      (void)elem_set;
      const Program program = detail::load_program(input, mode, stdin_stream);
      const AtomSet set = parse_atomset(set_text);
      const bool fast_ok =
          classify(program) == Mode::Nondisjunctive || is_head_cycle_free(program);
      const bool elementary = fast_ok ? is_elementary_fast(program, set)
                                      : is_elementary_bruteforce(program, set);
      std::optional<AtomSet> witness;
      if (!elementary) witness = find_non_outbound_subset(program, set);
      if (json) {
        nlohmann::json doc{{"set", to_json(set)}, {"elementary", elementary}};
        if (witness) doc["non_outbound_subset"] = to_json(*witness);
        out << doc.dump(2) << "\n";
      } else if (elementary) {
        out << render_atomset(set) << " is elementary\n";
      } else {
        out << render_atomset(set) << " is not elementary ("
            << render_atomset(*witness) << " is not outbound)\n";
      }
      return elementary ? 0 : 1;
    }
    if (app.got_subcommand(cmd_elementary_all)) {
      const Program program = detail::load_program(input, mode, stdin_stream);
      const auto sets = enumerate_elementary_sets(program, cap);
      if (json) {
        out << nlohmann::json{{"elementary_sets", detail::sets_json(sets)}}.dump(2) << "\n";
      } else {
        detail::print_sets(out, sets);
      }
      return 0;
    }
    if (app.got_subcommand(cmd_subgraph)) {
      const Program program = detail::load_program(input, mode, stdin_stream);
      const AtomSet set = parse_atomset(set_text);
      const ElementarySubgraphTrace trace = elementary_subgraph(program, set);
      if (format == "dot") {
        out << to_dot(trace);
      } else if (json) {
        out << to_json(trace).dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < trace.levels.size(); ++i) {
          out << "level " << i << ":";
          for (const Edge& e : trace.levels[i]) {
            out << " (" << e.first.name() << "," << e.second.name() << ")";
          }
          out << "\n";
        }
        out << (is_strongly_connected(trace.final) ? "strongly connected\n"
                                                   : "not strongly connected\n");
      }
      return 0;
    }
    if (app.got_subcommand(cmd_depgraph)) {
      const Program program = detail::load_program(input, mode, stdin_stream);
      const Digraph graph = dependency_graph(program);
      if (format == "dot") {
        out << to_dot(graph, "dependencies");
      } else if (json) {
        out << to_json(graph).dump(2) << "\n";
      } else {
        for (const Edge& e : graph.edges()) {
          out << e.first.name() << " -> " << e.second.name() << "\n";
        }
      }
      return 0;
    }
    if (app.got_subcommand(cmd_es) || app.got_subcommand(cmd_lf)) {
      const bool is_es = app.got_subcommand(cmd_es);
      const Program program = detail::load_program(input, mode, stdin_stream);
      const AtomSet set = parse_atomset(set_text);
      const Formula formula = is_es ? external_support_formula(program, set)
                                    : loop_formula(program, set);
      if (json) {
        out << nlohmann::json{{"set", to_json(set)}, {"formula", render_formula(formula)}}.dump(2)
            << "\n";
      } else {
        out << render_formula(formula) << "\n";
      }
      return 0;
    }
    if (app.got_subcommand(cmd_unfounded)) {
      const Program program = detail::load_program(input, mode, stdin_stream);
      const AtomSet set = parse_atomset(set_text);
      const AtomSet model = parse_atomset(model_text);
      const bool unfounded = is_unfounded(program, set, model);
      if (json) {
        out << nlohmann::json{{"set", to_json(set)},
                              {"model", to_json(model)},
                              {"unfounded", unfounded}}
                   .dump(2)
            << "\n";
      } else {
        out << render_atomset(set) << (unfounded ? " is unfounded" : " is externally supported")
            << " w.r.t. " << render_atomset(model) << "\n";
      }
      return unfounded ? 0 : 1;
    }
    if (app.got_subcommand(cmd_min_unfounded)) {
      const Program program = detail::load_program(input, mode, stdin_stream);
      const AtomSet model = parse_atomset(model_text);
      const auto sets = enumerate_elementarily_unfounded(program, model);
      if (json) {
        out << nlohmann::json{{"model", to_json(model)}, {"sets", detail::sets_json(sets)}}.dump(2)
            << "\n";
      } else {
        detail::print_sets(out, sets);
      }
      return 0;
    }
    if (app.got_subcommand(cmd_models) || app.got_subcommand(cmd_stable)) {
      const bool stable_only = app.got_subcommand(cmd_stable);
      const Program program = detail::load_program(input, mode, stdin_stream);
      const auto models = stable_only ? enumerate_stable_models(program, model_bound)
                                      : enumerate_models(program, model_bound);
      if (json) {
        out << nlohmann::json{{stable_only ? "stable_models" : "models",
                               detail::sets_json(models)}}
                   .dump(2)
            << "\n";
      } else {
        detail::print_sets(out, models);
      }
      return 0;
    }
    if (app.got_subcommand(cmd_check)) {
      const Program program = detail::load_program(input, mode, stdin_stream);
      const AtomSet model = parse_atomset(model_text);
      const ConditionReport report = check_conditions(program, model, subset_bound);
      if (json) {
        out << to_json(report).dump(2) << "\n";
      } else {
        out << "model " << render_atomset(report.model) << ": "
            << (report.is_model ? "satisfies the program" : "does not satisfy the program")
            << "\n";
        auto line = [&](const char* name, bool value, const std::optional<AtomSet>& witness) {
          out << "  " << name << ": " << (value ? "true" : "false");
          if (witness) out << "  (violated by " << render_atomset(*witness) << ")";
          out << "\n";
        };
        line("(a) stable", report.cond_a, std::nullopt);
        line("(b) all nonempty sets", report.cond_b, report.witness_b);
        line("(b') no unfounded subset", report.cond_b_prime, report.witness_b_prime);
        line("(c) all loops", report.cond_c, report.witness_c);
        line("(d) all elementary sets", report.cond_d, report.witness_d);
        line("(e) maximal relevant elementary sets", report.cond_e, report.witness_e);
        line("(e') no elementarily unfounded subset", report.cond_e_prime,
             report.witness_e_prime);
      }
      return report.cond_a ? 0 : 1;
    }
    if (app.got_subcommand(cmd_gs)) {
      const Program program = detail::load_program(input, mode, stdin_stream);
      const AtomSet set = parse_atomset(set_text);
      const bool gs = is_gs_elementary_loop(program, set);
      if (json) {
        out << nlohmann::json{{"loop", to_json(set)}, {"gs_elementary", gs}}.dump(2) << "\n";
      } else {
        out << render_atomset(set) << (gs ? " is a GS-elementary loop\n"
                                          : " is not a GS-elementary loop\n");
      }
      return gs ? 0 : 1;
    }
    if (app.got_subcommand(cmd_reduce)) {
      const Cnf cnf = parse_dimacs(detail::read_input(input, stdin_stream));
      const auto [program, target] = build_reduction(cnf);
      std::optional<bool> verified;
      if (verify) verified = verify_reduction(cnf);
      if (json) {
        nlohmann::json doc{{"variables", cnf.var_count},
                           {"clauses", cnf.clauses.size()},
                           {"target", to_json(target)},
                           {"program", render_program(program)}};
        if (verified) doc["verified"] = *verified;
        out << doc.dump(2) << "\n";
      } else {
        out << "% target: " << render_atomset(target) << "\n";
        if (verified) out << "% verified: " << (*verified ? "true" : "false") << "\n";
        out << render_program(program);
      }
      return verified && !*verified ? 1 : 0;
    }
    if (app.got_subcommand(cmd_suite)) {
      if (gen_mode == "nondisjunctive" || gen_mode == "nd") {
        gen.mode = GenParams::Mode::Nondisjunctive;
      } else if (gen_mode == "disjunctive" || gen_mode == "dj") {
        gen.mode = GenParams::Mode::Disjunctive;
      } else if (gen_mode == "hcf") {
        gen.mode = GenParams::Mode::HcfOnly;
      } else {
        throw Error("unknown gen-mode '" + gen_mode + "'");
      }
      const SuiteReport report = run_equivalence_suite(gen, trials);
      if (json) {
        out << to_json(report).dump(2) << "\n";
      } else {
        out << "seed " << report.seed << ", " << report.trials << " random trials\n";
        for (const SuiteCheckStats& c : report.checks) {
          out << "  " << c.name << ": " << c.passes << " passed, " << c.failures << " failed\n";
        }
        for (const SuiteFailure& f : report.failures) {
          out << "counterexample for " << f.check << " (" << f.detail << "):\n";
          std::istringstream lines(f.program_text);
          std::string line;
          while (std::getline(lines, line)) out << "    " << line << "\n";
        }
      }
      return report.all_passed() ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand given\n";
  return 2;
}

}  // namespace cli
}  // namespace elset
