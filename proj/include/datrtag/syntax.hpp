#pragma once

// Concrete syntax for theories:
//
//   theory     := nodedef*
//   nodedef    := NodeName ':' sentence+ '.'
//   sentence   := '<' atom* '>' '==' descriptor+
//   descriptor := atom | rhsPath | NodeName | NodeName ':' rhsPath | quoted
//   quoted     := '"' '<' atom* '>' '"' | '"' NodeName '"'
//               | '"' NodeName ':' '<' atom* '>' '"'
//   rhsPath    := '<' (atom | quoted)* '>'
//
// Whitespace is insignificant and '%' starts a comment running to the end
// of the line. A '<' following a complete descriptor starts a new sentence
// only when its path is followed by '=='.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "datrtag/error.hpp"
#include "datrtag/theory.hpp"

namespace datrtag {

namespace detail {

enum class TokenKind { LAngle, RAngle, Colon, Dot, Equals, Quote, Ident, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline const char* token_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::LAngle: return "'<'";
    case TokenKind::RAngle: return "'>'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Equals: return "'=='";
    case TokenKind::Quote: return "'\"'";
    case TokenKind::Ident: return "identifier";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };

  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const std::size_t tl = line;
    const std::size_t tc = column;
    switch (c) {
      case '<': tokens.push_back({TokenKind::LAngle, "<", tl, tc}); advance(1); continue;
      case '>': tokens.push_back({TokenKind::RAngle, ">", tl, tc}); advance(1); continue;
      case ':': tokens.push_back({TokenKind::Colon, ":", tl, tc}); advance(1); continue;
      case '.': tokens.push_back({TokenKind::Dot, ".", tl, tc}); advance(1); continue;
      case '"': tokens.push_back({TokenKind::Quote, "\"", tl, tc}); advance(1); continue;
      case '=':
        if (i + 1 < text.size() && text[i + 1] == '=') {
          tokens.push_back({TokenKind::Equals, "==", tl, tc});
          advance(2);
          continue;
        }
        throw SyntaxError(tl, tc, "expected '==' but found a single '='");
      default: break;
    }
    if (is_ident_char(c)) {
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      tokens.push_back({TokenKind::Ident, std::string(text.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    const auto byte = static_cast<unsigned char>(c);
    std::string shown = byte >= 0x20 && byte < 0x7f ? std::string("'") + c + "'"
                                                   : "byte " + std::to_string(byte);
    throw SyntaxError(tl, tc, "unexpected character " + shown);
  }
  tokens.push_back({TokenKind::End, "", line, column});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Theory theory() {
    Theory result;
    while (peek().kind != TokenKind::End) result.add_node(node_def());
    return result;
  }

  AtomPath standalone_atom_path() {
    AtomPath p = atom_path();
    expect_end();
    return p;
  }

  Atom standalone_atom() {
    const Token& t = expect(TokenKind::Ident);
    if (!is_valid_atom(t.text)) fail(t, "expected an atom, found '" + t.text + "'");
    expect_end();
    return Atom(t.text);
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t k = pos_ + ahead;
    return k < tokens_.size() ? tokens_[k] : tokens_.back();
  }

  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  [[noreturn]] static void fail(const Token& at, const std::string& message) {
    throw SyntaxError(at.line, at.column, message);
  }

  const Token& expect(TokenKind kind) {
    const Token& t = peek();
    if (t.kind != kind) {
      fail(t, std::string("expected ") + token_name(kind) + ", found " + describe(t));
    }
    return next();
  }

  void expect_end() {
    if (peek().kind != TokenKind::End) fail(peek(), "unexpected " + describe(peek()));
  }

  static std::string describe(const Token& t) {
    if (t.kind == TokenKind::Ident) return "'" + t.text + "'";
    return token_name(t.kind);
  }

  NodeName node_name() {
    const Token& t = expect(TokenKind::Ident);
    if (!is_valid_node_name(t.text)) fail(t, "expected a node name, found '" + t.text + "'");
    return NodeName(t.text);
  }

  Atom atom() {
    const Token& t = expect(TokenKind::Ident);
    if (!is_valid_atom(t.text)) fail(t, "expected an atom, found '" + t.text + "'");
    return Atom(t.text);
  }

  NodeDef node_def() {
    NodeDef def;
    def.name = node_name();
    expect(TokenKind::Colon);
    if (peek().kind != TokenKind::LAngle) {
      fail(peek(), "expected a sentence after '" + def.name.text + ":', found " + describe(peek()));
    }
    for (;;) {
      Sentence s = sentence();
      for (const auto& prev : def.sentences)
        if (prev.lhs == s.lhs) throw DuplicatePath(def.name.text, render_atom_path(s.lhs));
      def.sentences.push_back(std::move(s));
      if (peek().kind == TokenKind::Dot) {
        next();
        break;
      }
      if (peek().kind != TokenKind::LAngle) {
        fail(peek(), "expected '<' or '.', found " + describe(peek()));
      }
    }
    return def;
  }

  AtomPath atom_path() {
    expect(TokenKind::LAngle);
    AtomPath p;
    while (peek().kind == TokenKind::Ident) p.push_back(atom());
    if (peek().kind == TokenKind::Quote) fail(peek(), "quoted descriptors are not allowed here");
    expect(TokenKind::RAngle);
    return p;
  }

  Sentence sentence() {
    Sentence s;
    s.lhs = atom_path();
    expect(TokenKind::Equals);
    do {
      s.rhs.push_back(descriptor());
    } while (starts_descriptor());
    return s;
  }

  // True when the next tokens form another descriptor rather than the start
  // of the following sentence or the node terminator.
  bool starts_descriptor() const {
    switch (peek().kind) {
      case TokenKind::Ident:
      case TokenKind::Quote: return true;
      case TokenKind::LAngle: return !path_followed_by_equals();
      default: return false;
    }
  }

  bool path_followed_by_equals() const {
    std::size_t k = 0;
    int depth = 0;
    for (;; ++k) {
      const Token& t = peek(k);
      if (t.kind == TokenKind::End) return false;
      if (t.kind == TokenKind::LAngle) ++depth;
      if (t.kind == TokenKind::RAngle && --depth == 0) break;
    }
    return peek(k + 1).kind == TokenKind::Equals;
  }

  Descriptor descriptor() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::LAngle: return LocalPath{rhs_path()};
      case TokenKind::Quote: return to_descriptor(quoted());
      case TokenKind::Ident: {
        if (is_valid_atom(t.text)) return AtomValue{atom()};
        NodeName n = node_name();
        if (peek().kind == TokenKind::Colon) {
          next();
          return LocalNodePath{std::move(n), rhs_path()};
        }
        return LocalNode{std::move(n)};
      }
      default: fail(t, "expected a descriptor, found " + describe(t));
    }
  }

  Path rhs_path() {
    expect(TokenKind::LAngle);
    Path p;
    for (;;) {
      const Token& t = peek();
      if (t.kind == TokenKind::Ident) {
        p.components.emplace_back(atom());
      } else if (t.kind == TokenKind::Quote) {
        p.components.emplace_back(quoted());
      } else {
        break;
      }
    }
    expect(TokenKind::RAngle);
    return p;
  }

  QuotedDescriptor quoted() {
    expect(TokenKind::Quote);
    QuotedDescriptor q;
    const Token& t = peek();
    if (t.kind == TokenKind::LAngle) {
      q = GlobalPath{quoted_path()};
    } else if (t.kind == TokenKind::Ident) {
      NodeName n = node_name();
      if (peek().kind == TokenKind::Colon) {
        next();
        q = GlobalNodePath{std::move(n), quoted_path()};
      } else {
        q = GlobalNode{std::move(n)};
      }
    } else {
      fail(t, "expected a path or node name after '\"', found " + describe(t));
    }
    expect(TokenKind::Quote);
    return q;
  }

  AtomPath quoted_path() {
    expect(TokenKind::LAngle);
    AtomPath p;
    while (peek().kind == TokenKind::Ident) p.push_back(atom());
    if (peek().kind == TokenKind::Quote) fail(peek(), "quoted descriptors cannot be nested");
    expect(TokenKind::RAngle);
    return p;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses theory text. Throws SyntaxError, DuplicateNode or DuplicatePath.
inline Theory parse_theory(std::string_view text) { return detail::Parser(text).theory(); }

/// Parses a standalone atoms-only path such as "<parent left cat>".
inline AtomPath parse_atom_path(std::string_view text) {
  return detail::Parser(text).standalone_atom_path();
}

inline Atom parse_atom(std::string_view text) { return detail::Parser(text).standalone_atom(); }

// Rendering

std::string render_path(const Path& path);

inline std::string render_quoted(const QuotedDescriptor& q) {
  struct V {
    std::string operator()(const GlobalPath& d) const {
      return "\"" + render_atom_path(d.path) + "\"";
    }
    std::string operator()(const GlobalNode& d) const { return "\"" + d.node.text + "\""; }
    std::string operator()(const GlobalNodePath& d) const {
      return "\"" + d.node.text + ":" + render_atom_path(d.path) + "\"";
    }
  };
  return std::visit(V{}, q);
}

inline std::string render_path(const Path& path) {
  std::string out = "<";
  for (std::size_t i = 0; i < path.components.size(); ++i) {
    if (i) out += ' ';
    const auto& c = path.components[i];
    if (const auto* a = std::get_if<Atom>(&c)) {
      out += a->text;
    } else {
      out += render_quoted(std::get<QuotedDescriptor>(c));
    }
  }
  out += '>';
  return out;
}

inline std::string render_descriptor(const Descriptor& d) {
  struct V {
    std::string operator()(const AtomValue& v) const { return v.atom.text; }
    std::string operator()(const LocalPath& v) const { return render_path(v.path); }
    std::string operator()(const LocalNode& v) const { return v.node.text; }
    std::string operator()(const LocalNodePath& v) const {
      return v.node.text + ":" + render_path(v.path);
    }
    std::string operator()(const GlobalPath& v) const { return render_quoted(v); }
    std::string operator()(const GlobalNode& v) const { return render_quoted(v); }
    std::string operator()(const GlobalNodePath& v) const { return render_quoted(v); }
  };
  return std::visit(V{}, d);
}

inline std::string render_sentence(const Sentence& s) {
  std::string out = render_atom_path(s.lhs) + " ==";
  for (const auto& d : s.rhs) out += " " + render_descriptor(d);
  return out;
}

/// One block per node: the name line, then indented sentences, the last
/// one terminated by '.'. Blocks are separated by a blank line.
inline std::string render_theory(const Theory& theory) {
  std::string out;
  bool first = true;
  for (const auto& node : theory.nodes()) {
    if (!first) out += '\n';
    first = false;
    out += node.name.text + ":\n";
    for (std::size_t i = 0; i < node.sentences.size(); ++i) {
      out += "    " + render_sentence(node.sentences[i]);
      out += i + 1 == node.sentences.size() ? ".\n" : "\n";
    }
  }
  return out;
}

}  // namespace datrtag
