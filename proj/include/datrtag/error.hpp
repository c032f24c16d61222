#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace datrtag {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed theory text. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Well-formed text that violates a structural invariant of a theory.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DuplicateNode : public ValidationError {
 public:
  explicit DuplicateNode(const std::string& node)
      : ValidationError("duplicate node definition '" + node + "'"), node_(node) {}
  const std::string& node() const noexcept { return node_; }

 private:
  std::string node_;
};

class DuplicatePath : public ValidationError {
 public:
  DuplicatePath(const std::string& node, const std::string& path)
      : ValidationError("duplicate path " + path + " in node '" + node + "'"),
        node_(node),
        path_(path) {}
  const std::string& node() const noexcept { return node_; }
  const std::string& path() const noexcept { return path_; }

 private:
  std::string node_;
  std::string path_;
};

class UnknownFragment : public Error {
 public:
  explicit UnknownFragment(const std::string& name)
      : Error("unknown built-in fragment '" + name + "'") {}
};

/// Failure while answering a query or building a tree.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

class UnknownNode : public EvaluationError {
 public:
  explicit UnknownNode(const std::string& node)
      : EvaluationError("unknown node '" + node + "'"), node_(node) {}
  const std::string& node() const noexcept { return node_; }

 private:
  std::string node_;
};

class NoMatchingSentence : public EvaluationError {
 public:
  NoMatchingSentence(const std::string& node, const std::string& path)
      : EvaluationError("node '" + node + "' defines no prefix of " + path),
        node_(node),
        path_(path) {}
  const std::string& node() const noexcept { return node_; }
  const std::string& path() const noexcept { return path_; }

 private:
  std::string node_;
  std::string path_;
};

class DepthExceeded : public EvaluationError {
 public:
  explicit DepthExceeded(std::size_t limit)
      : EvaluationError("evaluation depth limit " + std::to_string(limit) +
                        " exceeded (cyclic theory?)"),
        limit_(limit) {}
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

/// A lexical rule whose trigger or alternation is missing for the entry.
class RuleNotApplicable : public EvaluationError {
 public:
  RuleNotApplicable(const std::string& rule, const std::string& reason)
      : EvaluationError("rule '" + rule + "' not applicable: " + reason), rule_(rule) {}
  const std::string& rule() const noexcept { return rule_; }

 private:
  std::string rule_;
};

/// Node features that cannot form a tree (bad type atom, multi-atom cat, ...).
class TreeError : public EvaluationError {
 public:
  using EvaluationError::EvaluationError;
};

}  // namespace datrtag
