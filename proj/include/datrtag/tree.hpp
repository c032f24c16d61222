#pragma once

// Elementary trees rebuilt from the bottom-up node encoding.
//
// An entry describes its tree from the principal anchor outwards: `parent`,
// `left` and `right` lead to the neighbouring subtrees, every other feature
// describes the node reached. A node exists when its `cat` is not `undef`.
// Sibling subtrees are themselves encoded from their own distinguished leaf,
// so after expanding one sibling to its root at address r the next sibling
// in the same direction is found at r·right (or r·left).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "datrtag/engine.hpp"
#include "datrtag/error.hpp"
#include "datrtag/theory.hpp"

namespace datrtag {

enum class Step { parent, left, right };

inline std::string_view step_name(Step s) {
  switch (s) {
    case Step::parent: return "parent";
    case Step::left: return "left";
    case Step::right: return "right";
  }
  return "?";
}

/// Position of a tree node relative to the principal anchor.
struct EncodingAddress {
  std::vector<Step> steps;

  EncodingAddress() = default;
  EncodingAddress(std::initializer_list<Step> s) : steps(s) {}

  EncodingAddress with(Step s) const {
    EncodingAddress out = *this;
    out.steps.push_back(s);
    return out;
  }

  std::size_t size() const noexcept { return steps.size(); }
  bool empty() const noexcept { return steps.empty(); }

  AtomPath to_path() const {
    AtomPath p;
    p.reserve(steps.size());
    for (Step s : steps) p.emplace_back(std::string(step_name(s)));
    return p;
  }

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (i) out += ", ";
      out += step_name(steps[i]);
    }
    return out + "]";
  }

  friend auto operator<=>(const EncodingAddress&, const EncodingAddress&) = default;
};

enum class NodeType { normal, anchor, substitution, foot };

inline std::optional<NodeType> parse_node_type(std::string_view s) {
  if (s == "normal") return NodeType::normal;
  if (s == "anchor") return NodeType::anchor;
  if (s == "substitution") return NodeType::substitution;
  if (s == "foot") return NodeType::foot;
  return std::nullopt;
}

struct NodeFeatures {
  Atom cat;
  NodeType type = NodeType::normal;
  std::optional<Atom> form;
  std::optional<Atom> root;

  friend bool operator==(const NodeFeatures&, const NodeFeatures&) = default;
};

struct TreeNode {
  NodeFeatures features;
  std::vector<TreeNode> children;
  EncodingAddress address;

  bool is_leaf() const noexcept { return children.empty(); }

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct ElementaryTree {
  TreeNode root;
  EncodingAddress principal_anchor;
  NodeName entry;

  friend bool operator==(const ElementaryTree&, const ElementaryTree&) = default;
};

/// Pre-order, left to right.
inline void for_each_node(const TreeNode& node, const std::function<void(const TreeNode&)>& fn) {
  fn(node);
  for (const auto& child : node.children) for_each_node(child, fn);
}

namespace detail {

inline const Atom& single_atom(const AtomSeq& value, std::string_view feature,
                               const std::string& where) {
  if (value.size() != 1) {
    throw TreeError(std::string(feature) + " at " + where + " is '" + join_atoms(value) +
                    "', expected a single atom");
  }
  return value.front();
}

inline AtomPath concat(const AtomPath& a, const AtomPath& b) {
  AtomPath out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace detail

/// Features of the node at `addr`, or nothing when its cat is `undef`.
/// `form` is dropped when it is `undef` or the default `active`, and always
/// at the principal anchor, where `<form>` is the entry's rule trigger rather
/// than a property of a tree node. `root` is dropped when `undef`.
inline std::optional<NodeFeatures> query_node_features(const Theory& theory, const NodeName& entry,
                                                       const EncodingAddress& addr,
                                                       const AtomPath& base_prefix,
                                                       const EngineConfig& cfg = {}) {
  const AtomPath at = detail::concat(base_prefix, addr.to_path());
  const std::string where = entry.text + ":" + render_atom_path(at);
  auto ask = [&](const char* feature) {
    return evaluate_query(theory, entry, detail::concat(at, {Atom(feature)}), cfg);
  };

  const Atom cat = detail::single_atom(ask("cat"), "cat", where);
  if (cat.text == "undef") return std::nullopt;

  NodeFeatures f;
  f.cat = cat;
  const Atom type = detail::single_atom(ask("type"), "type", where);
  auto parsed = parse_node_type(type.text);
  if (!parsed) throw TreeError("unknown node type '" + type.text + "' at " + where);
  f.type = *parsed;

  if (!addr.empty()) {
    const Atom form = detail::single_atom(ask("form"), "form", where);
    if (form.text != "undef" && form.text != "active") f.form = form;
  }
  const Atom root = detail::single_atom(ask("root"), "root", where);
  if (root.text != "undef") f.root = root;
  return f;
}

namespace detail {

class TreeBuilder {
 public:
  TreeBuilder(const Theory& theory, const NodeName& entry, const AtomPath& base_prefix,
              const EngineConfig& cfg)
      : theory_(theory), entry_(entry), base_prefix_(base_prefix), cfg_(cfg) {}

  const std::optional<NodeFeatures>& features(const EncodingAddress& a) {
    if (a.size() > cfg_.max_address_length) throw DepthExceeded(cfg_.max_address_length);
    auto it = cache_.find(a);
    if (it == cache_.end()) {
      it = cache_.emplace(a, query_node_features(theory_, entry_, a, base_prefix_, cfg_)).first;
    }
    return it->second;
  }

  // Climbs from the distinguished leaf at `a` while a parent exists,
  // gathering sibling chains on the way. Returns the subtree and the
  // address of its root.
  std::pair<TreeNode, EncodingAddress> expand(EncodingAddress a) {
    TreeNode node{*features(a), {}, a};
    for (;;) {
      const EncodingAddress up = a.with(Step::parent);
      const auto& parent = features(up);
      if (!parent) break;
      std::vector<TreeNode> children = chain(a, Step::left);
      std::reverse(children.begin(), children.end());
      children.push_back(std::move(node));
      for (auto& sibling : chain(a, Step::right)) children.push_back(std::move(sibling));
      node = TreeNode{*parent, std::move(children), up};
      a = up;
    }
    return {std::move(node), std::move(a)};
  }

 private:
  std::vector<TreeNode> chain(const EncodingAddress& from, Step direction) {
    std::vector<TreeNode> out;
    EncodingAddress next = from.with(direction);
    while (features(next)) {
      auto [subtree, root] = expand(next);
      out.push_back(std::move(subtree));
      next = root.with(direction);
    }
    return out;
  }

  const Theory& theory_;
  const NodeName& entry_;
  const AtomPath& base_prefix_;
  const EngineConfig& cfg_;
  std::map<EncodingAddress, std::optional<NodeFeatures>> cache_;
};

}  // namespace detail

/// Rebuilds the elementary tree of `entry`, reading features under
/// `base_prefix` (empty for the entry itself, `<alt dative>` for the
/// dative alternation, ...).
inline ElementaryTree reconstruct_tree(const Theory& theory, const NodeName& entry,
                                       const AtomPath& base_prefix = {},
                                       const EngineConfig& cfg = {}) {
  if (!theory.contains(entry.text)) throw UnknownNode(entry.text);
  detail::TreeBuilder builder(theory, entry, base_prefix, cfg);
  if (!builder.features({})) {
    throw TreeError("entry " + entry.text + " has no category at " +
                    render_atom_path(detail::concat(base_prefix, {Atom("cat")})));
  }
  return ElementaryTree{builder.expand({}).first, {}, entry};
}

namespace detail {

inline void render_into(const TreeNode& node, std::string& out) {
  const NodeFeatures& f = node.features;
  if (!node.is_leaf()) {
    out += '(';
    out += f.cat.text;
    for (const auto& child : node.children) {
      out += ' ';
      render_into(child, out);
    }
    out += ')';
    return;
  }
  out += f.cat.text;
  if (f.form) out += "{form=" + f.form->text + "}";
  switch (f.type) {
    case NodeType::anchor: out += '@'; break;
    case NodeType::substitution: out += '!'; break;
    case NodeType::foot: out += '*'; break;
    case NodeType::normal: break;
  }
  if (f.root) out += "=" + f.root->text;
}

}  // namespace detail

/// Single-line bracketed form, e.g. "(s np! (vp v@=die))".
inline std::string render_bracketed(const TreeNode& node) {
  std::string out;
  detail::render_into(node, out);
  return out;
}

inline std::string render_bracketed(const ElementaryTree& tree) {
  return render_bracketed(tree.root);
}

/// Addresses of every NP whose form is `null`, in pre-order.
inline std::vector<EncodingAddress> detect_whq_trigger(const ElementaryTree& tree) {
  std::vector<EncodingAddress> out;
  for_each_node(tree.root, [&](const TreeNode& n) {
    if (n.features.cat.text == "np" && n.features.form && n.features.form->text == "null")
      out.push_back(n.address);
  });
  return out;
}

enum class LexicalRule { dative, passive, sai, whq };

inline std::string_view rule_name(LexicalRule r) {
  switch (r) {
    case LexicalRule::dative: return "dative";
    case LexicalRule::passive: return "passive";
    case LexicalRule::sai: return "sai";
    case LexicalRule::whq: return "whq";
  }
  return "?";
}

inline std::optional<LexicalRule> parse_rule(std::string_view s) {
  for (auto r : {LexicalRule::dative, LexicalRule::passive, LexicalRule::sai, LexicalRule::whq})
    if (rule_name(r) == s) return r;
  return std::nullopt;
}

struct RuleRequest {
  LexicalRule rule;
  std::vector<Assignment> extra_assignments;
};

/// Sentences that extend the top of a verbal tree with a fronted wh NP,
/// including node types for the two new nodes.
inline std::vector<Assignment> whq_activation() {
  return {
      {make_path({"parent", "parent", "parent", "cat"}), {Atom("s")}},
      {make_path({"parent", "parent", "left", "cat"}), {Atom("np")}},
      {make_path({"parent", "parent", "left", "form"}), {Atom("wh")}},
      {make_path({"parent", "parent", "parent", "type"}), {Atom("normal")}},
      {make_path({"parent", "parent", "left", "type"}), {Atom("substitution")}},
  };
}

namespace detail {

inline ElementaryTree reconstruct_with(const Theory& theory, const NodeName& entry,
                                       const std::vector<Assignment>& assignments,
                                       const AtomPath& base_prefix, const EngineConfig& cfg) {
  if (assignments.empty()) return reconstruct_tree(theory, entry, base_prefix, cfg);
  auto [extended, overlay] = make_overlay(theory, entry, assignments);
  ElementaryTree tree = reconstruct_tree(extended, overlay, base_prefix, cfg);
  tree.entry = entry;
  return tree;
}

inline std::vector<Assignment> with_trigger(const char* value,
                                            const std::vector<Assignment>& extras) {
  std::vector<Assignment> out{{make_path({"form"}), {Atom(value)}}};
  out.insert(out.end(), extras.begin(), extras.end());
  return out;
}

}  // namespace detail

/// Builds the tree of `entry` after applying a lexical rule.
///   dative:  the alternation under <alt dative>
///   passive: the entry with <form> == passive
///   sai:     the entry with <form> == inv
///   whq:     requires an NP with form null, then adds the wh extension
/// Throws RuleNotApplicable when the dative alternation is undefined or no
/// null NP exists for whq.
inline ElementaryTree apply_lexical_rule(const Theory& theory, const NodeName& entry,
                                         const RuleRequest& req, const EngineConfig& cfg = {}) {
  if (!theory.contains(entry.text)) throw UnknownNode(entry.text);
  const auto& extras = req.extra_assignments;

  switch (req.rule) {
    case LexicalRule::dative: {
      const AtomPath prefix = make_path({"alt", "dative"});
      const AtomSeq cat = evaluate_query(theory, entry, detail::concat(prefix, {Atom("cat")}), cfg);
      if (cat == AtomSeq{Atom("undef")}) {
        throw RuleNotApplicable("dative", entry.text + " defines no <alt dative> alternation");
      }
      return detail::reconstruct_with(theory, entry, extras, prefix, cfg);
    }
    case LexicalRule::passive:
      return detail::reconstruct_with(theory, entry, detail::with_trigger("passive", extras), {},
                                      cfg);
    case LexicalRule::sai:
      return detail::reconstruct_with(theory, entry, detail::with_trigger("inv", extras), {}, cfg);
    case LexicalRule::whq: {
      const ElementaryTree plain = detail::reconstruct_with(theory, entry, extras, {}, cfg);
      if (detect_whq_trigger(plain).empty()) {
        throw RuleNotApplicable("whq", "no NP with <form> == null in the tree of " + entry.text);
      }
      std::vector<Assignment> activated = extras;
      for (auto& a : whq_activation()) activated.push_back(std::move(a));
      return detail::reconstruct_with(theory, entry, activated, {}, cfg);
    }
  }
  throw RuleNotApplicable(std::string(rule_name(req.rule)), "unknown rule");
}

}  // namespace datrtag
