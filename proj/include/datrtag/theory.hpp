#pragma once

// Abstract syntax of lexicon theories: named nodes holding path equations
// whose right-hand sides are sequences of descriptors.

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "datrtag/error.hpp"

namespace datrtag {

namespace detail {

inline bool is_ident_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || c == '-';
}

inline bool all_ident_chars(std::string_view s) {
  for (char c : s)
    if (!is_ident_char(c)) return false;
  return true;
}

}  // namespace detail

/// Lowercase- or digit-initial identifier used as a path component or value.
inline bool is_valid_atom(std::string_view s) {
  if (s.empty()) return false;
  const auto first = static_cast<unsigned char>(s.front());
  return (std::islower(first) || std::isdigit(first)) && detail::all_ident_chars(s);
}

/// Uppercase-initial identifier naming a node.
inline bool is_valid_node_name(std::string_view s) {
  if (s.empty()) return false;
  return std::isupper(static_cast<unsigned char>(s.front())) && detail::all_ident_chars(s);
}

struct Atom {
  std::string text;

  Atom() = default;
  explicit Atom(std::string t) : text(std::move(t)) {}

  friend auto operator<=>(const Atom&, const Atom&) = default;
};

struct NodeName {
  std::string text;

  NodeName() = default;
  explicit NodeName(std::string t) : text(std::move(t)) {}

  friend auto operator<=>(const NodeName&, const NodeName&) = default;
};

using AtomPath = std::vector<Atom>;

/// Sequence of atoms produced by a query.
using AtomSeq = std::vector<Atom>;

inline AtomPath make_path(std::initializer_list<const char*> atoms) {
  AtomPath p;
  for (const char* a : atoms) p.emplace_back(a);
  return p;
}

// Quoted descriptors: evaluated in the global context. Their paths are
// atoms only, so quoting cannot nest.
struct GlobalPath {
  AtomPath path;
  friend bool operator==(const GlobalPath&, const GlobalPath&) = default;
};

struct GlobalNode {
  NodeName node;
  friend bool operator==(const GlobalNode&, const GlobalNode&) = default;
};

struct GlobalNodePath {
  NodeName node;
  AtomPath path;
  friend bool operator==(const GlobalNodePath&, const GlobalNodePath&) = default;
};

using QuotedDescriptor = std::variant<GlobalPath, GlobalNode, GlobalNodePath>;

/// A right-hand-side path component: an atom or an embedded quoted descriptor.
using PathComponent = std::variant<Atom, QuotedDescriptor>;

struct Path {
  std::vector<PathComponent> components;

  friend bool operator==(const Path&, const Path&) = default;

  bool atoms_only() const {
    for (const auto& c : components)
      if (!std::holds_alternative<Atom>(c)) return false;
    return true;
  }

  static Path from_atoms(const AtomPath& atoms) {
    Path p;
    p.components.reserve(atoms.size());
    for (const auto& a : atoms) p.components.emplace_back(a);
    return p;
  }
};

struct AtomValue {
  Atom atom;
  friend bool operator==(const AtomValue&, const AtomValue&) = default;
};

struct LocalPath {
  Path path;
  friend bool operator==(const LocalPath&, const LocalPath&) = default;
};

struct LocalNode {
  NodeName node;
  friend bool operator==(const LocalNode&, const LocalNode&) = default;
};

struct LocalNodePath {
  NodeName node;
  Path path;
  friend bool operator==(const LocalNodePath&, const LocalNodePath&) = default;
};

using Descriptor = std::variant<AtomValue, LocalPath, LocalNode, LocalNodePath, GlobalPath,
                                GlobalNode, GlobalNodePath>;

inline Descriptor to_descriptor(const QuotedDescriptor& q) {
  return std::visit([](const auto& d) -> Descriptor { return d; }, q);
}

struct Sentence {
  AtomPath lhs;
  std::vector<Descriptor> rhs;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct NodeDef {
  NodeName name;
  std::vector<Sentence> sentences;

  friend bool operator==(const NodeDef&, const NodeDef&) = default;
};

std::string render_atom_path(const AtomPath& path);

/// Ordered collection of node definitions with unique names and, within
/// each node, unique left-hand sides. Equality is structural and ordered.
class Theory {
 public:
  Theory() = default;

  void add_node(NodeDef def) {
    if (index_.contains(def.name.text)) throw DuplicateNode(def.name.text);
    for (std::size_t i = 0; i < def.sentences.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (def.sentences[i].lhs == def.sentences[j].lhs)
          throw DuplicatePath(def.name.text, render_atom_path(def.sentences[i].lhs));
    index_.emplace(def.name.text, nodes_.size());
    nodes_.push_back(std::move(def));
  }

  const std::vector<NodeDef>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }

  const NodeDef* find(std::string_view name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &nodes_[it->second];
  }

  bool contains(std::string_view name) const { return index_.find(name) != index_.end(); }

  std::size_t sentence_count() const {
    std::size_t n = 0;
    for (const auto& node : nodes_) n += node.sentences.size();
    return n;
  }

  friend bool operator==(const Theory& a, const Theory& b) { return a.nodes_ == b.nodes_; }

 private:
  std::vector<NodeDef> nodes_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// The definition of `name`, or nullptr when the theory has none.
inline const NodeDef* get_node(const Theory& theory, const NodeName& name) {
  return theory.find(name.text);
}

inline std::string render_atom_path(const AtomPath& path) {
  std::string out = "<";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ' ';
    out += path[i].text;
  }
  out += '>';
  return out;
}

inline std::string join_atoms(const AtomSeq& atoms) {
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += ' ';
    out += atoms[i].text;
  }
  return out;
}

}  // namespace datrtag
