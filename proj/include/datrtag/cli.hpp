#pragma once

// Command-line surface. tools/datrtag.cpp only forwards argv.
//
// Exit codes: 0 success, 1 evaluation error or rule not applicable,
// 2 syntax or validation error (including bad usage), 3 golden mismatch.

#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "datrtag/engine.hpp"
#include "datrtag/error.hpp"
#include "datrtag/fragments.hpp"
#include "datrtag/golden.hpp"
#include "datrtag/syntax.hpp"
#include "datrtag/tree.hpp"

namespace datrtag::cli {

enum ExitCode : int {
  kSuccess = 0,
  kEvaluationError = 1,
  kSyntaxError = 2,
  kGoldenMismatch = 3,
};

namespace detail {

struct Source {
  std::string label;
  std::string text;
};

/// Built-in fragment names take precedence over files of the same name.
inline Source read_source(const std::string& name_or_path) {
  if (is_fragment_name(name_or_path)) {
    return {name_or_path, std::string(fragment_source(name_or_path))};
  }
  std::ifstream in(name_or_path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + name_or_path + "'");
  return {name_or_path, std::string(std::istreambuf_iterator<char>(in), {})};
}

struct Options {
  std::string file;
  std::string node;
  std::string path;
  std::string golden;
  std::vector<std::string> sets;
  std::string rule;
  std::string alt;
  std::size_t max_depth = EngineConfig{}.max_depth;
  std::string where;  // label for syntax errors

  EngineConfig config() const {
    EngineConfig cfg;
    cfg.max_depth = max_depth;
    return cfg;
  }
};

inline Theory load_theory(Options& o) {
  Source src = read_source(o.file);
  o.where = src.label;
  return parse_theory(src.text);
}

// Command-line arguments are reported as validation errors; positions are
// relative to the argument text.
template <class F>
auto parse_argument(const std::string& what, const std::string& text, F&& parse) {
  try {
    return parse(text);
  } catch (const SyntaxError& e) {
    throw ValidationError("invalid " + what + " '" + text + "' (column " +
                          std::to_string(e.column()) + ": " + e.message() + ")");
  }
}

inline AtomPath argument_path(const std::string& text) {
  return parse_argument("path", text, [](const std::string& t) { return parse_atom_path(t); });
}

inline Atom argument_atom(const std::string& text) {
  return parse_argument("atom", text, [](const std::string& t) { return parse_atom(t); });
}

inline Assignment parse_set(const std::string& arg) {
  const auto eq = arg.rfind('=');
  if (eq == std::string::npos || eq == 0) {
    throw ValidationError("--set expects <path>=<atom>, got '" + arg + "'");
  }
  return Assignment{argument_path(arg.substr(0, eq)), {argument_atom(arg.substr(eq + 1))}};
}

inline std::vector<Assignment> parse_sets(const std::vector<std::string>& specs) {
  std::vector<Assignment> out;
  for (const auto& s : specs) out.push_back(parse_set(s));
  return out;
}

inline int cmd_check(Options& o, std::ostream& out) {
  const Theory t = load_theory(o);
  out << "ok: " << t.size() << " nodes, " << t.sentence_count() << " sentences\n";
  return kSuccess;
}

inline int cmd_query(Options& o, std::ostream& out) {
  const Theory t = load_theory(o);
  const AtomPath path = argument_path(o.path);
  const auto sets = parse_sets(o.sets);
  if (!is_valid_node_name(o.node)) throw ValidationError("'" + o.node + "' is not a node name");
  const NodeName node(o.node);
  AtomSeq result;
  if (sets.empty()) {
    result = evaluate_query(t, node, path, o.config());
  } else {
    auto [extended, overlay] = make_overlay(t, node, sets);
    result = evaluate_query(extended, overlay, path, o.config());
  }
  out << join_atoms(result) << '\n';
  return kSuccess;
}

inline int cmd_tree(Options& o, std::ostream& out) {
  const Theory t = load_theory(o);
  if (!is_valid_node_name(o.node)) throw ValidationError("'" + o.node + "' is not a node name");
  const NodeName entry(o.node);
  const auto sets = parse_sets(o.sets);

  ElementaryTree tree;
  if (!o.rule.empty()) {
    if (!o.alt.empty()) throw ValidationError("--alt cannot be combined with --rule");
    auto rule = parse_rule(o.rule);
    if (!rule) throw ValidationError("unknown rule '" + o.rule + "'");
    tree = apply_lexical_rule(t, entry, RuleRequest{*rule, sets}, o.config());
  } else {
    AtomPath prefix;
    if (!o.alt.empty()) prefix = {Atom("alt"), argument_atom(o.alt)};
    tree = datrtag::detail::reconstruct_with(t, entry, sets, prefix, o.config());
  }
  out << render_bracketed(tree) << '\n';
  return kSuccess;
}

inline int cmd_entries(Options& o, std::ostream& out) {
  const Theory t = load_theory(o);
  for (const auto& node : t.nodes()) {
    for (const auto& s : node.sentences) {
      if (s.lhs == make_path({"root"})) {
        out << node.name.text << '\n';
        break;
      }
    }
  }
  return kSuccess;
}

inline int cmd_test(Options& o, std::ostream& out) {
  const Theory t = load_theory(o);
  std::string golden_text;
  if (o.golden.empty()) {
    if (!is_fragment_name(o.file)) {
      throw ValidationError("a golden file is required unless testing a built-in fragment");
    }
    golden_text = std::string(golden_source(o.file));
  } else if (is_fragment_name(o.golden)) {
    golden_text = std::string(golden_source(o.golden));
  } else {
    golden_text = read_source(o.golden).text;
  }
  o.where = o.golden.empty() ? o.file + " (golden)" : o.golden;
  const auto cases = parse_golden(golden_text);

  std::size_t passed = 0;
  for (const auto& c : cases) {
    const GoldenOutcome r = run_golden_case(t, c, o.config());
    if (r.passed) {
      ++passed;
      out << "PASS " << c.line << ": " << c.text << '\n';
      continue;
    }
    out << "FAIL " << c.line << ": " << c.text << '\n';
    out << "  expected: " << c.expected << '\n';
    if (r.error.empty()) {
      out << "  actual:   " << r.actual << '\n';
    } else {
      out << "  error:    " << r.error << '\n';
    }
  }
  out << passed << " passed, " << cases.size() - passed << " failed\n";
  return passed == cases.size() ? kSuccess : kGoldenMismatch;
}

}  // namespace detail

/// Runs one invocation; argv[0] is the program name.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Default-inheritance lexicon toolkit for LTAG elementary trees", "datrtag"};
  app.require_subcommand(1);

  detail::Options o;
  const std::string file_help = "theory file, or a built-in fragment (figure1, extended)";

  auto* check = app.add_subcommand("check", "parse and validate a theory");
  check->add_option("file", o.file, file_help)->required();

  auto add_depth = [&](CLI::App* sub) {
    sub->add_option("--max-depth", o.max_depth, "evaluation depth limit")
        ->check(CLI::PositiveNumber);
  };
  auto add_sets = [&](CLI::App* sub) {
    sub->add_option("--set", o.sets, "overlay assignment <path>=<atom> (repeatable)")
        ->allow_extra_args(false);
  };

  auto* query = app.add_subcommand("query", "evaluate NODE:<path>");
  query->add_option("file", o.file, file_help)->required();
  query->add_option("node", o.node, "node to query")->required();
  query->add_option("path", o.path, "path in angle brackets, e.g. '<parent cat>'")->required();
  add_sets(query);
  add_depth(query);

  auto* tree = app.add_subcommand("tree", "print the elementary tree of an entry");
  tree->add_option("file", o.file, file_help)->required();
  tree->add_option("entry", o.node, "lexical entry")->required();
  add_sets(tree);
  tree->add_option("--rule", o.rule, "lexical rule: dative, passive, sai or whq");
  tree->add_option("--alt", o.alt, "read the tree under <alt NAME>");
  add_depth(tree);

  auto* entries = app.add_subcommand("entries", "list nodes that define <root>");
  entries->add_option("file", o.file, file_help)->required();

  auto* test = app.add_subcommand("test", "run golden cases against a theory");
  test->add_option("file", o.file, file_help)->required();
  test->add_option("golden", o.golden,
                   "golden file, or a built-in fragment name for its bundled cases");
  add_depth(test);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kSyntaxError;
  }

  try {
    if (check->parsed()) return detail::cmd_check(o, out);
    if (query->parsed()) return detail::cmd_query(o, out);
    if (tree->parsed()) return detail::cmd_tree(o, out);
    if (entries->parsed()) return detail::cmd_entries(o, out);
    if (test->parsed()) return detail::cmd_test(o, out);
  } catch (const SyntaxError& e) {
    err << o.where << ":" << e.line() << ":" << e.column() << ": error: " << e.message() << '\n';
    return kSyntaxError;
  } catch (const ValidationError& e) {
    err << (o.where.empty() ? std::string("datrtag") : o.where) << ": error: " << e.what() << '\n';
    return kSyntaxError;
  } catch (const UnknownFragment& e) {
    err << "error: " << e.what() << '\n';
    return kSyntaxError;
  } catch (const EvaluationError& e) {
    err << "error: " << e.what() << '\n';
    return kEvaluationError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kEvaluationError;
  }
  return kSyntaxError;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"datrtag"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace datrtag::cli
