#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "elset/errors.hpp"
#include "elset/program.hpp"

namespace elset {

// Text frontend for the `.lp` format:
//
//   program := rule*
//   rule    := head? (":-" body)? "."
//   head    := atom (";" atom)*
//   body    := lit ("," lit)*
//   lit     := atom | "not" atom | "not" "not" atom
//   atom    := [a-z][A-Za-z0-9_]*
//
// Whitespace-insensitive; `%` starts a comment that runs to end of line.
// A rule without ":-" is a fact, a rule without a head is a constraint.
// "not" is a keyword and cannot be used as an atom name.

namespace detail {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  struct Token {
    enum class Kind { Ident, Dot, Comma, Semicolon, If, LBrace, RBrace, End };
    Kind kind;
    std::string_view value;  // for Ident
    int line;
    int column;
  };

  Token next() {
    skip_space_and_comments();
    const int line = line_;
    const int col = column_;
    if (pos_ >= text_.size()) return {Token::Kind::End, {}, line, col};
    const char c = text_[pos_];
    if (c >= 'a' && c <= 'z') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) advance();
      return {Token::Kind::Ident, text_.substr(start, pos_ - start), line, col};
    }
    switch (c) {
      case '.': advance(); return {Token::Kind::Dot, {}, line, col};
      case ',': advance(); return {Token::Kind::Comma, {}, line, col};
      case ';': advance(); return {Token::Kind::Semicolon, {}, line, col};
      case '{': advance(); return {Token::Kind::LBrace, {}, line, col};
      case '}': advance(); return {Token::Kind::RBrace, {}, line, col};
      case ':': {
        advance();
        if (pos_ >= text_.size() || text_[pos_] != '-') {
          throw ParseError(line_, column_, "expected '-' after ':'");
        }
        advance();
        return {Token::Kind::If, {}, line, col};
      }
      default:
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
  }

 private:
  static bool is_ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class ProgramParser {
 public:
  explicit ProgramParser(std::string_view text) : lexer_(text) { shift(); }

  std::vector<Rule> parse_rules() {
    std::vector<Rule> rules;
    while (tok_.kind != Tok::Kind::End) {
      rules.push_back(parse_rule());
    }
    return rules;
  }

 private:
  using Tok = Lexer::Token;

  void shift() { tok_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(tok_.line, tok_.column, message);
  }

  Atom expect_atom(const char* what) {
    if (tok_.kind != Tok::Kind::Ident) fail(std::string("expected ") + what);
    if (tok_.value == "not") fail("'not' is a keyword, not an atom");
    Atom a = Atom::make(tok_.value);
    shift();
    return a;
  }

  Rule parse_rule() {
    std::vector<Atom> head;
    if (tok_.kind == Tok::Kind::Ident) {
      head.push_back(expect_atom("atom"));
      while (tok_.kind == Tok::Kind::Semicolon) {
        shift();
        head.push_back(expect_atom("atom after ';'"));
      }
    }
    std::vector<Atom> pos, neg, nneg;
    if (tok_.kind == Tok::Kind::If) {
      shift();
      parse_literal(pos, neg, nneg);
      while (tok_.kind == Tok::Kind::Comma) {
        shift();
        parse_literal(pos, neg, nneg);
      }
    }
    if (tok_.kind != Tok::Kind::Dot) fail("expected '.' at end of rule");
    shift();
    return Rule{AtomSet(std::move(head)), AtomSet(std::move(pos)), AtomSet(std::move(neg)),
                AtomSet(std::move(nneg))};
  }

  void parse_literal(std::vector<Atom>& pos, std::vector<Atom>& neg, std::vector<Atom>& nneg) {
    if (tok_.kind != Tok::Kind::Ident) fail("expected body literal");
    if (tok_.value == "not") {
      shift();
      if (tok_.kind == Tok::Kind::Ident && tok_.value == "not") {
        shift();
        nneg.push_back(expect_atom("atom after 'not not'"));
      } else {
        neg.push_back(expect_atom("atom after 'not'"));
      }
    } else {
      pos.push_back(expect_atom("atom"));
    }
  }

  Lexer lexer_;
  Tok tok_{};
};

}  // namespace detail

inline Program parse_program(std::string_view text, Mode mode) {
  detail::ProgramParser parser(text);
  return make_program(parser.parse_rules(), mode);
}

// Parses in the permissive syntax and then classifies: disjunctive if any
// rule has a non-singleton head or uses double negation, else nondisjunctive.
inline Program parse_program_auto(std::string_view text) {
  detail::ProgramParser parser(text);
  std::vector<Rule> rules = parser.parse_rules();
  const Mode mode = detect_mode(rules);
  return make_program(std::move(rules), mode);
}

// Accepts `p, q, r` or `{p, q, r}`; the empty string and `{}` denote the
// empty set.
inline AtomSet parse_atomset(std::string_view text) {
  detail::Lexer lexer(text);
  using Tok = detail::Lexer::Token;
  Tok tok = lexer.next();
  bool braced = false;
  if (tok.kind == Tok::Kind::LBrace) {
    braced = true;
    tok = lexer.next();
  }
  std::vector<Atom> atoms;
  if (tok.kind == Tok::Kind::Ident) {
    if (tok.value == "not") throw ParseError(tok.line, tok.column, "'not' is not an atom");
    atoms.push_back(Atom::make(tok.value));
    tok = lexer.next();
    while (tok.kind == Tok::Kind::Comma) {
      tok = lexer.next();
      if (tok.kind != Tok::Kind::Ident || tok.value == "not") {
        throw ParseError(tok.line, tok.column, "expected atom after ','");
      }
      atoms.push_back(Atom::make(tok.value));
      tok = lexer.next();
    }
  }
  if (braced) {
    if (tok.kind != Tok::Kind::RBrace) throw ParseError(tok.line, tok.column, "expected '}'");
    tok = lexer.next();
  }
  if (tok.kind != Tok::Kind::End) throw ParseError(tok.line, tok.column, "trailing input");
  return AtomSet(std::move(atoms));
}

inline std::string render_atomset(const AtomSet& set) {
  std::string out = "{";
  bool first = true;
  for (Atom a : set) {
    if (!first) out += ",";
    out += a.name();
    first = false;
  }
  out += "}";
  return out;
}

inline std::string render_rule(const Rule& rule) {
  std::string out;
  bool first = true;
  for (Atom a : rule.head) {
    if (!first) out += " ; ";
    out += a.name();
    first = false;
  }
  if (!rule.pos_body.empty() || !rule.neg_body.empty() || !rule.nneg_body.empty()) {
    if (!out.empty()) out += " ";
    out += ":- ";
    first = true;
    auto emit = [&](const std::string& prefix, const AtomSet& part) {
      for (Atom a : part) {
        if (!first) out += ", ";
        out += prefix + a.name();
        first = false;
      }
    };
    emit("", rule.pos_body);
    emit("not ", rule.neg_body);
    emit("not not ", rule.nneg_body);
  }
  out += ".";
  return out;
}

// Canonical text: one rule per line. parse_program(render_program(p)) == p.
inline std::string render_program(const Program& program) {
  std::string out;
  for (const Rule& r : program.rules()) {
    out += render_rule(r);
    out += "\n";
  }
  return out;
}

}  // namespace elset
