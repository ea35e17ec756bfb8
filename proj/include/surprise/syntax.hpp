// surprise :: concrete syntax
//
//   formula := iff ;  iff := imp ("<->" imp)* ;  imp := or ("->" imp)? ;
//   or := and ("|" and)* ;  and := unary ("&" unary)* ;
//   unary := "!" unary | "[]" unary | "<>" unary | primary ;
//   primary := "true" | "false" | atom | guard | macro | "(" formula ")" ;
//   atom := "Y_" run ;  run := Mo | Tu | We | Th | Fr | none ;
//   guard := "T" ("="|"!="|"<="|">="|"<"|">") run | "T" "in" "{" run ("," run)* "}" | "D"
//
// Binary operators nest to the right, so "a | b | c" is a | (b | c); this is
// the shape chi() produces for run sets.

#ifndef SURPRISE_SYNTAX_HPP_
#define SURPRISE_SYNTAX_HPP_

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "surprise/error.hpp"
#include "surprise/formula.hpp"

namespace surprise {

using MacroTable = std::map<std::string, Formula, std::less<>>;

namespace detail {

enum class Tok {
  End, Ident, LParen, RParen, LBrace, RBrace, Comma,
  Not, Box, Diamond, And, Or, Arrow, DoubleArrow,
  Eq, Ne, Le, Ge, Lt, Gt,
};

struct Token {
  Tok kind = Tok::End;
  std::string_view text;
  std::size_t column = 0; // 1-based
};

inline std::string_view describe(Tok t) {
  switch (t) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Not: return "'!'";
    case Tok::Box: return "'[]'";
    case Tok::Diamond: return "'<>'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::DoubleArrow: return "'<->'";
    case Tok::Eq: return "'='";
    case Tok::Ne: return "'!='";
    case Tok::Le: return "'<='";
    case Tok::Ge: return "'>='";
    case Tok::Lt: return "'<'";
    case Tok::Gt: return "'>'";
  }
  return "token";
}

inline std::vector<Token> tokenize(std::string_view text) {
  static constexpr std::pair<std::string_view, Tok> symbols[] = {
      {"<->", Tok::DoubleArrow}, {"->", Tok::Arrow}, {"<>", Tok::Diamond}, {"[]", Tok::Box},
      {"!=", Tok::Ne},           {"<=", Tok::Le},    {">=", Tok::Ge},      {"!", Tok::Not},
      {"&", Tok::And},           {"|", Tok::Or},     {"=", Tok::Eq},       {"<", Tok::Lt},
      {">", Tok::Gt},            {"(", Tok::LParen}, {")", Tok::RParen},   {"{", Tok::LBrace},
      {"}", Tok::RBrace},        {",", Tok::Comma},
  };
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i + 1;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::Ident, text.substr(i, j - i), i + 1});
      i = j;
      continue;
    }
    bool matched = false;
    for (const auto& [sym, kind] : symbols) {
      if (text.substr(i, sym.size()) == sym) {
        out.push_back({kind, text.substr(i, sym.size()), i + 1});
        i += sym.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(std::string("unexpected character '") + text[i] + "'", i + 1);
  }
  out.push_back({Tok::End, {}, text.size() + 1});
  return out;
}

class Parser {
public:
  Parser(std::string_view text, const MacroTable* macros) : tokens_(tokenize(text)), macros_(macros) {}

  Formula parse_all() {
    Formula f = parse_iff();
    if (peek().kind == Tok::RParen) throw ParseError("unbalanced ')'", peek().column);
    if (peek().kind == Tok::RBrace) throw ParseError("unbalanced '}'", peek().column);
    if (peek().kind != Tok::End)
      throw ParseError("unexpected " + std::string(describe(peek().kind)) + " after formula", peek().column);
    return f;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  Formula parse_iff() {
    Formula lhs = parse_imp();
    if (accept(Tok::DoubleArrow)) return iff(lhs, parse_iff());
    return lhs;
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (accept(Tok::Arrow)) return implies(lhs, parse_imp());
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    if (accept(Tok::Or)) return disj(lhs, parse_or());
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    if (accept(Tok::And)) return conj(lhs, parse_and());
    return lhs;
  }

  Formula parse_unary() {
    if (accept(Tok::Not)) return neg(parse_unary());
    if (accept(Tok::Box)) return box(parse_unary());
    if (accept(Tok::Diamond)) return diamond(parse_unary());
    return parse_primary();
  }

  Run expect_run() {
    const Token& t = peek();
    if (t.kind != Tok::Ident) throw ParseError("expected run name, found " + std::string(describe(t.kind)), t.column);
    auto r = run_from_name(t.text);
    if (!r) throw ParseError("unknown run name '" + std::string(t.text) + "'", t.column);
    ++pos_;
    return *r;
  }

  Formula parse_guard() {
    const Token& op = next();
    switch (op.kind) {
      case Tok::Eq: return t_eq(expect_run());
      case Tok::Ne: return t_ne(expect_run());
      case Tok::Le: return t_le(expect_run());
      case Tok::Ge: return t_ge(expect_run());
      case Tok::Lt: return t_lt(expect_run());
      case Tok::Gt: return t_gt(expect_run());
      case Tok::Ident:
        if (op.text == "in") return t_in(parse_run_set());
        [[fallthrough]];
      default:
        throw ParseError("expected comparison or 'in' after 'T', found " + std::string(describe(op.kind)), op.column);
    }
  }

  RunSet parse_run_set() {
    const Token& open = peek();
    if (!accept(Tok::LBrace)) throw ParseError("expected '{' after 'in'", open.column);
    RunSet set;
    set.insert(expect_run());
    while (accept(Tok::Comma)) set.insert(expect_run());
    if (!accept(Tok::RBrace)) {
      if (peek().kind == Tok::End) throw ParseError("unbalanced '{'", open.column);
      throw ParseError("expected ',' or '}', found " + std::string(describe(peek().kind)), peek().column);
    }
    return set;
  }

  Formula parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::LParen: {
        ++pos_;
        Formula inner = parse_iff();
        if (!accept(Tok::RParen)) {
          if (peek().kind == Tok::End) throw ParseError("unbalanced '('", t.column);
          throw ParseError("expected ')', found " + std::string(describe(peek().kind)), peek().column);
        }
        return inner;
      }
      case Tok::Ident: {
        ++pos_;
        std::string_view w = t.text;
        if (w == "true") return top();
        if (w == "false") return bot();
        if (w == "D") return t_day();
        if (w == "T") return parse_guard();
        if (w.starts_with("Y_")) {
          auto r = run_from_name(w.substr(2));
          if (!r) throw ParseError("unknown run name '" + std::string(w.substr(2)) + "'", t.column + 2);
          return atom(*r);
        }
        if (macros_) {
          if (auto it = macros_->find(w); it != macros_->end()) return it->second;
        }
        throw ParseError("unknown identifier '" + std::string(w) + "'", t.column);
      }
      case Tok::RParen: throw ParseError("unbalanced ')'", t.column);
      case Tok::RBrace: throw ParseError("unbalanced '}'", t.column);
      default: throw ParseError("expected formula, found " + std::string(describe(t.kind)), t.column);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const MacroTable* macros_;
};

enum Level : int { kIff = 0, kImp = 1, kOr = 2, kAnd = 3, kUnary = 4, kPrimary = 5 };

inline void render_to(const Formula& f, int min_level, std::string& out) {
  auto wrap = [&](int level, auto&& body) {
    const bool paren = level < min_level;
    if (paren) out += '(';
    body();
    if (paren) out += ')';
  };
  auto binary = [&](int level, const Formula& a, std::string_view op, const Formula& b) {
    wrap(level, [&] {
      render_to(a, level + 1, out);
      out += op;
      render_to(b, level, out);
    });
  };

  switch (f.kind()) {
    case Formula::Kind::Bot: out += "false"; return;
    case Formula::Kind::Atom:
      out += "Y_";
      out += run_name(f.run());
      return;
    case Formula::Kind::Box:
      wrap(kUnary, [&] {
        out += "[]";
        render_to(f.body(), kUnary, out);
      });
      return;
    case Formula::Kind::Implies: break;
  }

  if (is_top(f)) {
    out += "true";
    return;
  }
  if (auto p = match_iff(f)) return binary(kIff, p->first, " <-> ", p->second);
  if (auto p = match_conj(f)) return binary(kAnd, p->first, " & ", p->second);
  if (auto a = match_diamond(f)) {
    return wrap(kUnary, [&] {
      out += "<>";
      render_to(*a, kUnary, out);
    });
  }
  if (auto a = match_neg(f)) {
    return wrap(kUnary, [&] {
      out += "!";
      render_to(*a, kUnary, out);
    });
  }
  if (auto set = match_chi(f); set && set->size() >= 2) {
    if (*set == RunSet::days()) {
      out += "D";
    } else {
      out += "T in ";
      out += set->to_string();
    }
    return;
  }
  if (auto p = match_disj(f)) return binary(kOr, p->first, " | ", p->second);
  binary(kImp, f.lhs(), " -> ", f.rhs());
}

} // namespace detail

inline Formula parse(std::string_view text, const MacroTable& macros) {
  return detail::Parser(text, &macros).parse_all();
}

inline Formula parse(std::string_view text) { return detail::Parser(text, nullptr).parse_all(); }

// Re-sugars exact derived-connective patterns; parse(render(f)) == f.
inline std::string render(const Formula& f) {
  std::string out;
  detail::render_to(f, detail::kIff, out);
  return out;
}

} // namespace surprise

#endif // SURPRISE_SYNTAX_HPP_
