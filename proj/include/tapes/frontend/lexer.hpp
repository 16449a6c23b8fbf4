// Copyright 2026 The tapes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Tokens of the .tape language. `(x)` and `(+)` are single tokens, with
// ⊗ and ⊕ as aliases; `#` and `//` start line comments.

#pragma once

#include <cctype>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tapes/error.hpp"

namespace tapes::frontend {

enum class Tok {
  Ident,
  Number,
  Semi,     // ;
  Colon,    // :
  Arrow,    // ->
  Equals,   // =
  LBrace,   // {
  RBrace,   // }
  LBracket, // [
  RBracket, // ]
  LParen,   // (
  RParen,   // )
  Comma,    // ,
  At,       // @
  Less,     // <
  Greater,  // >
  Slash,    // /
  Tensor,   // (x) or ⊗
  Oplus,    // (+) or ⊕
  Plus,     // +
  PlusSub,  // +_
  End,
};

/// Canonical spelling; identifiers and numbers are described, not spelled.
inline std::string spelling(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Arrow: return "'->'";
    case Tok::Equals: return "'='";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::At: return "'@'";
    case Tok::Less: return "'<'";
    case Tok::Greater: return "'>'";
    case Tok::Slash: return "'/'";
    case Tok::Tensor: return "'(x)'";
    case Tok::Oplus: return "'(+)'";
    case Tok::Plus: return "'+'";
    case Tok::PlusSub: return "'+_'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Loc {
  std::size_t line = 1;
  std::size_t col = 1;
};

struct Token {
  Tok kind;
  std::string text;  // canonical text (aliases mapped to ASCII)
  Loc loc;
};

/// Error with a source position and, for syntax errors, the tokens that
/// would have been accepted.
class SourceError : public Error {
 public:
  SourceError(ErrorKind kind, Loc loc, const std::string& message, std::set<std::string> expected = {})
      : Error(kind, format(loc, message, expected)), loc_(loc), expected_(std::move(expected)) {}

  Loc loc() const noexcept { return loc_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string format(Loc loc, const std::string& message, const std::set<std::string>& expected) {
    std::string out = std::to_string(loc.line) + ":" + std::to_string(loc.col) + ": " + message;
    if (!expected.empty()) {
      out += "; expected ";
      std::size_t i = 0;
      for (const auto& e : expected) out += (i++ ? ", " : "") + e;
    }
    return out;
  }

  Loc loc_;
  std::set<std::string> expected_;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skipBlank();
      Loc at = loc_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", at});
        return out;
      }
      out.push_back(next(at));
    }
  }

 private:
  static bool identStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool identChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  char peek(std::size_t k = 0) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++loc_.line;
        loc_.col = 1;
      } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
        ++loc_.col;  // count code points, not bytes
      }
      ++pos_;
    }
  }

  void skipBlank() {
    while (pos_ < src_.size()) {
      char c = peek();
      if (c == '#' || (c == '/' && peek(1) == '/')) {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  bool startsWith(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

  Token next(Loc at) {
    char c = peek();
    if (identStart(c)) {
      std::size_t start = pos_;
      while (identChar(peek())) advance();
      std::string word(src_.substr(start, pos_ - start));
      if (word == "sym" && peek() == '+' && peek(1) == '@') {
        advance();
        word = "sym+";
      }
      return {Tok::Ident, word, at};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
      if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        throw SourceError(ErrorKind::Syntax, at, "decimal literals are not allowed; write a fraction such as 1/3");
      }
      return {Tok::Number, std::string(src_.substr(start, pos_ - start)), at};
    }
    struct Fixed {
      std::string_view text;
      Tok kind;
      const char* canonical;
    };
    static const Fixed fixed[] = {
        {"(x)", Tok::Tensor, "(x)"}, {"(+)", Tok::Oplus, "(+)"}, {"⊗", Tok::Tensor, "(x)"},
        {"⊕", Tok::Oplus, "(+)"}, {"->", Tok::Arrow, "->"}, {"→", Tok::Arrow, "->"},
        {"+_", Tok::PlusSub, "+_"},  {";", Tok::Semi, ";"},     {":", Tok::Colon, ":"},
        {"=", Tok::Equals, "="},     {"{", Tok::LBrace, "{"},   {"}", Tok::RBrace, "}"},
        {"[", Tok::LBracket, "["},   {"]", Tok::RBracket, "]"}, {"(", Tok::LParen, "("},
        {")", Tok::RParen, ")"},     {",", Tok::Comma, ","},    {"@", Tok::At, "@"},
        {"<", Tok::Less, "<"},       {">", Tok::Greater, ">"},  {"/", Tok::Slash, "/"},
        {"+", Tok::Plus, "+"},
    };
    for (const auto& f : fixed) {
      if (startsWith(f.text)) {
        advance(f.text.size());
        return {f.kind, f.canonical, at};
      }
    }
    std::string bad(1, c);
    throw SourceError(ErrorKind::Syntax, at, "unexpected character '" + bad + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Loc loc_;
};

inline std::vector<Token> lex(std::string_view src) { return Lexer(src).run(); }

/// Token texts joined by single spaces: the text with comments and layout
/// stripped and operator aliases spelled in ASCII.
inline std::string normalizeWhitespace(std::string_view src) {
  std::string out;
  for (const auto& t : lex(src)) {
    if (t.kind == Tok::End) break;
    if (!out.empty()) out += ' ';
    out += t.text;
  }
  return out;
}

}  // namespace tapes::frontend
