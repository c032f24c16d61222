#pragma once

// Line-oriented golden cases:
//
//   Q <node> <path> => <atoms>
//   T <entry> [rule=<rule>] [set <path>=<atom>]* => <bracketed tree>
//
// Blank lines and lines starting with '#' are ignored. Expected text is
// compared byte for byte with the rendered result.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "datrtag/engine.hpp"
#include "datrtag/error.hpp"
#include "datrtag/syntax.hpp"
#include "datrtag/tree.hpp"

namespace datrtag {

enum class GoldenKind { query, tree };

struct GoldenCase {
  GoldenKind kind = GoldenKind::query;
  NodeName subject;
  AtomPath path;                    // query cases
  std::optional<LexicalRule> rule;  // tree cases
  std::vector<Assignment> sets;     // tree cases
  std::string expected;
  std::size_t line = 0;
  std::string text;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

class GoldenLineParser {
 public:
  GoldenLineParser(std::string_view line, std::size_t line_no) : s_(line), line_(line_no) {}

  GoldenCase parse() {
    GoldenCase c;
    c.line = line_;
    c.text = std::string(trim(s_));

    const auto arrow = s_.find("=>");
    if (arrow == std::string_view::npos) fail(s_.size(), "missing '=>'");
    end_ = arrow;
    c.expected = std::string(trim(s_.substr(arrow + 2)));
    if (c.expected.empty()) fail(arrow + 2, "empty expected value");

    const std::string kind = word();
    if (kind == "Q") {
      c.kind = GoldenKind::query;
    } else if (kind == "T") {
      c.kind = GoldenKind::tree;
    } else {
      fail(pos_, "case kind must be 'Q' or 'T'");
    }

    const std::size_t subject_at = skip_space();
    const std::string subject = word();
    if (!is_valid_node_name(subject)) fail(subject_at, "expected a node name");
    c.subject = NodeName(subject);

    if (c.kind == GoldenKind::query) {
      c.path = path_at(skip_space());
      if (skip_space() != end_) fail(pos_, "unexpected text after the query path");
      return c;
    }

    while (skip_space() != end_) {
      const std::size_t item_at = pos_;
      if (s_.substr(pos_, 5) == "rule=") {
        pos_ += 5;
        const std::string name = word();
        auto r = parse_rule(name);
        if (!r) fail(item_at, "unknown rule '" + name + "'");
        if (c.rule) fail(item_at, "more than one rule");
        c.rule = r;
      } else if (word() == "set") {
        Assignment a;
        a.path = path_at(skip_space());
        if (pos_ >= end_ || s_[pos_] != '=') fail(pos_, "expected '=' after the set path");
        ++pos_;
        const std::size_t atom_at = pos_;
        const std::string value = word();
        if (!is_valid_atom(value)) fail(atom_at, "expected an atom value");
        a.value = {Atom(value)};
        c.sets.push_back(std::move(a));
      } else {
        fail(item_at, "expected 'rule=<rule>' or 'set <path>=<atom>'");
      }
    }
    return c;
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& message) const {
    throw SyntaxError(line_, at + 1, message);
  }

  std::size_t skip_space() {
    while (pos_ < end_ && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    return pos_;
  }

  std::string word() {
    skip_space();
    const std::size_t b = pos_;
    while (pos_ < end_ && s_[pos_] != ' ' && s_[pos_] != '\t' && s_[pos_] != '=' &&
           s_[pos_] != '<')
      ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }

  AtomPath path_at(std::size_t at) {
    if (at >= end_ || s_[at] != '<') fail(at, "expected a path");
    const auto close = s_.find('>', at);
    if (close == std::string_view::npos || close >= end_) fail(at, "unterminated path");
    pos_ = close + 1;
    try {
      return parse_atom_path(s_.substr(at, close - at + 1));
    } catch (const SyntaxError& e) {
      throw SyntaxError(line_, at + e.column(), e.message());
    }
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
  std::size_t end_ = 0;
};

inline ElementaryTree tree_for(const Theory& theory, const GoldenCase& c,
                               const EngineConfig& cfg) {
  if (c.rule) return apply_lexical_rule(theory, c.subject, RuleRequest{*c.rule, c.sets}, cfg);
  return reconstruct_with(theory, c.subject, c.sets, {}, cfg);
}

}  // namespace detail

/// Parses golden-case text. Throws SyntaxError with the offending position.
inline std::vector<GoldenCase> parse_golden(std::string_view text) {
  std::vector<GoldenCase> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    ++line_no;
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto t = detail::trim(line);
    if (!t.empty() && t.front() != '#') out.push_back(detail::GoldenLineParser(line, line_no).parse());
    start = nl + 1;
  }
  return out;
}

/// The text a case compares against its expectation: the atoms of a query
/// or the bracketed tree.
inline std::string golden_actual(const Theory& theory, const GoldenCase& c,
                                 const EngineConfig& cfg = {}) {
  if (c.kind == GoldenKind::query) return join_atoms(evaluate_query(theory, c.subject, c.path, cfg));
  return render_bracketed(detail::tree_for(theory, c, cfg));
}

struct GoldenOutcome {
  bool passed = false;
  std::string actual;  // empty when evaluation failed
  std::string error;
};

inline GoldenOutcome run_golden_case(const Theory& theory, const GoldenCase& c,
                                     const EngineConfig& cfg = {}) {
  GoldenOutcome out;
  try {
    out.actual = golden_actual(theory, c, cfg);
    out.passed = out.actual == c.expected;
  } catch (const Error& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace datrtag
