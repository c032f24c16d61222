#pragma once

// Query evaluation with default inheritance.
//
// A query names a node and an atom path. The node's sentence with the
// longest left-hand side that prefixes the query is selected, the unmatched
// remainder of the query is appended to each right-hand-side descriptor, and
// the descriptors are evaluated left to right. Unquoted descriptors keep the
// global context of the original query; quoted ones move it.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "datrtag/error.hpp"
#include "datrtag/syntax.hpp"
#include "datrtag/theory.hpp"

namespace datrtag {

struct EngineConfig {
  /// Recursion limit for query evaluation. Reaching it means the theory is cyclic.
  std::size_t max_depth = 500;
  /// Longest encoding address visited while rebuilding a tree.
  std::size_t max_address_length = 32;
};

struct QueryContext {
  NodeName local_node;
  AtomPath local_path;
  NodeName global_node;
  AtomPath global_path;
  std::size_t depth = 0;

  /// A fresh query: local and global contexts coincide.
  static QueryContext at(NodeName node, AtomPath path) {
    return QueryContext{node, path, node, path, 0};
  }
};

struct PrefixMatch {
  const Sentence* sentence = nullptr;
  AtomPath suffix;
};

/// The sentence whose lhs is the longest prefix of `query`, with the rest of
/// the query as suffix. Empty when no lhs prefixes the query.
inline std::optional<PrefixMatch> match_longest_prefix(std::span<const Sentence> sentences,
                                                       const AtomPath& query) {
  const Sentence* best = nullptr;
  for (const auto& s : sentences) {
    if (s.lhs.size() > query.size()) continue;
    if (best && s.lhs.size() <= best->lhs.size()) continue;
    if (std::equal(s.lhs.begin(), s.lhs.end(), query.begin())) best = &s;
  }
  if (!best) return std::nullopt;
  return PrefixMatch{best, AtomPath(query.begin() + static_cast<std::ptrdiff_t>(best->lhs.size()),
                                    query.end())};
}

/// Carries the unmatched remainder of a query into a descriptor.
inline Descriptor extend_descriptor(const Descriptor& d, const AtomPath& suffix) {
  auto append_path = [&](Path p) {
    for (const auto& a : suffix) p.components.emplace_back(a);
    return p;
  };
  auto append_atoms = [&](AtomPath p) {
    p.insert(p.end(), suffix.begin(), suffix.end());
    return p;
  };
  struct V {
    decltype(append_path)& path;
    decltype(append_atoms)& atoms;
    const AtomPath& suffix;

    Descriptor operator()(const AtomValue& v) const { return v; }
    Descriptor operator()(const LocalPath& v) const { return LocalPath{path(v.path)}; }
    Descriptor operator()(const LocalNode& v) const {
      return LocalNodePath{v.node, Path::from_atoms(suffix)};
    }
    Descriptor operator()(const LocalNodePath& v) const {
      return LocalNodePath{v.node, path(v.path)};
    }
    Descriptor operator()(const GlobalPath& v) const { return GlobalPath{atoms(v.path)}; }
    Descriptor operator()(const GlobalNode& v) const { return GlobalNodePath{v.node, suffix}; }
    Descriptor operator()(const GlobalNodePath& v) const {
      return GlobalNodePath{v.node, atoms(v.path)};
    }
  };
  return std::visit(V{append_path, append_atoms, suffix}, d);
}

namespace detail {

class Evaluator {
 public:
  Evaluator(const Theory& theory, const EngineConfig& cfg) : theory_(theory), cfg_(cfg) {}

  AtomSeq query(const QueryContext& ctx) const {
    const NodeDef* node = theory_.find(ctx.local_node.text);
    if (!node) throw UnknownNode(ctx.local_node.text);
    auto match = match_longest_prefix(node->sentences, ctx.local_path);
    if (!match) throw NoMatchingSentence(node->name.text, render_atom_path(ctx.local_path));

    AtomSeq out;
    for (const auto& d : match->sentence->rhs) {
      AtomSeq part = descriptor(extend_descriptor(d, match->suffix), ctx);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  AtomSeq descriptor(const Descriptor& d, const QueryContext& ctx) const {
    struct V {
      const Evaluator& self;
      const QueryContext& ctx;
      AtomSeq operator()(const AtomValue& v) const { return {v.atom}; }
      AtomSeq operator()(const LocalPath& v) const {
        return self.local(ctx, ctx.local_node, self.splice(v.path, ctx));
      }
      AtomSeq operator()(const LocalNode& v) const {
        return self.local(ctx, v.node, ctx.local_path);
      }
      AtomSeq operator()(const LocalNodePath& v) const {
        return self.local(ctx, v.node, self.splice(v.path, ctx));
      }
      AtomSeq operator()(const GlobalPath& v) const { return self.quoted(v, ctx); }
      AtomSeq operator()(const GlobalNode& v) const { return self.quoted(v, ctx); }
      AtomSeq operator()(const GlobalNodePath& v) const { return self.quoted(v, ctx); }
    };
    return std::visit(V{*this, ctx}, d);
  }

 private:
  QueryContext deeper(const QueryContext& ctx) const {
    QueryContext next = ctx;
    if (++next.depth >= cfg_.max_depth) throw DepthExceeded(cfg_.max_depth);
    return next;
  }

  AtomSeq local(const QueryContext& ctx, NodeName node, AtomPath path) const {
    QueryContext next = deeper(ctx);
    next.local_node = std::move(node);
    next.local_path = std::move(path);
    return query(next);
  }

  AtomSeq global(const QueryContext& ctx, NodeName node, AtomPath path) const {
    QueryContext next = deeper(ctx);
    next.local_node = node;
    next.local_path = path;
    next.global_node = std::move(node);
    next.global_path = std::move(path);
    return query(next);
  }

  AtomSeq quoted(const QuotedDescriptor& q, const QueryContext& ctx) const {
    struct V {
      const Evaluator& self;
      const QueryContext& ctx;
      AtomSeq operator()(const GlobalPath& d) const {
        return self.global(ctx, ctx.global_node, d.path);
      }
      AtomSeq operator()(const GlobalNode& d) const {
        return self.global(ctx, d.node, ctx.global_path);
      }
      AtomSeq operator()(const GlobalNodePath& d) const {
        return self.global(ctx, d.node, d.path);
      }
    };
    return std::visit(V{*this, ctx}, q);
  }

  // Replaces embedded quoted components by the atoms they evaluate to in
  // the global context, left to right.
  AtomPath splice(const Path& path, const QueryContext& ctx) const {
    AtomPath out;
    for (const auto& c : path.components) {
      if (const auto* a = std::get_if<Atom>(&c)) {
        out.push_back(*a);
      } else {
        AtomSeq atoms = quoted(std::get<QuotedDescriptor>(c), ctx);
        out.insert(out.end(), atoms.begin(), atoms.end());
      }
    }
    return out;
  }

  const Theory& theory_;
  const EngineConfig& cfg_;
};

}  // namespace detail

/// Evaluates the query described by `ctx`. Throws UnknownNode,
/// NoMatchingSentence or DepthExceeded.
inline AtomSeq evaluate_query(const Theory& theory, const QueryContext& ctx,
                              const EngineConfig& cfg = {}) {
  return detail::Evaluator(theory, cfg).query(ctx);
}

inline AtomSeq evaluate_query(const Theory& theory, const NodeName& node, const AtomPath& path,
                              const EngineConfig& cfg = {}) {
  return evaluate_query(theory, QueryContext::at(node, path), cfg);
}

/// Evaluates a single descriptor as if it were the right-hand side being
/// processed for `ctx`.
inline AtomSeq evaluate_descriptor(const Theory& theory, const Descriptor& d,
                                   const QueryContext& ctx, const EngineConfig& cfg = {}) {
  return detail::Evaluator(theory, cfg).descriptor(d, ctx);
}

/// A path defined with a fixed atom sequence, used to set trigger features.
struct Assignment {
  AtomPath path;
  AtomSeq value;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Adds a fresh node inheriting everything from `base` except the assigned
/// paths. Returns the extended theory and the fresh node's name; `theory`
/// itself is left untouched.
inline std::pair<Theory, NodeName> make_overlay(const Theory& theory, const NodeName& base,
                                                const std::vector<Assignment>& assignments) {
  if (!theory.contains(base.text)) throw UnknownNode(base.text);

  std::string name = base.text + "_OVERLAY";
  for (int n = 2; theory.contains(name); ++n) name = base.text + "_OVERLAY" + std::to_string(n);

  NodeDef def{NodeName(name), {}};
  def.sentences.push_back(Sentence{{}, {LocalNode{base}}});
  for (const auto& a : assignments) {
    if (a.value.empty()) {
      throw ValidationError("assignment to " + render_atom_path(a.path) + " has no value");
    }
    Sentence s{a.path, {}};
    for (const auto& atom : a.value) s.rhs.emplace_back(AtomValue{atom});
    def.sentences.push_back(std::move(s));
  }

  Theory extended = theory;
  extended.add_node(std::move(def));
  return {std::move(extended), NodeName(name)};
}

}  // namespace datrtag
