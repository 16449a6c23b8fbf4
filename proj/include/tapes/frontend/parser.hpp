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

// Recursive-descent parser. Tape operators bind ; < (x) < (+), all left
// associative. Object expressions use the usual (+) < (x), and
// juxtaposition is (x). A `;` inside a def continues the composite only when
// another tape atom follows; otherwise it ends the declaration.

#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tapes/frontend/ast.hpp"
#include "tapes/frontend/lexer.hpp"

namespace tapes::frontend {

inline bool isDeclKeyword(const std::string& s) {
  return s == "sort" || s == "gen" || s == "theory" || s == "interp" || s == "def" || s == "check";
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  SourceModule module() {
    SourceModule m;
    while (!at(Tok::End)) m.decls.push_back(decl());
    return m;
  }

  ObjExpr objectOnly() {
    ObjExpr e = obj();
    expect(Tok::End);
    return e;
  }

  TapeExpr tapeOnly() {
    TapeExpr e = tapeSeq(false);
    expect(Tok::End);
    return e;
  }

 private:
  // -- token plumbing -------------------------------------------------------

  const Token& cur() const { return toks_[pos_]; }
  const Token& ahead(std::size_t k) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at(Tok k) const { return cur().kind == k; }
  bool atWord(const char* w) const { return at(Tok::Ident) && cur().text == w; }

  Token take() {
    Token t = cur();
    if (t.kind != Tok::End) ++pos_;
    return t;
  }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    std::string found = at(Tok::End) ? "end of input" : "'" + cur().text + "'";
    throw SourceError(ErrorKind::Syntax, cur().loc, "unexpected " + found, std::move(expected));
  }

  Token expect(Tok k) {
    if (!at(k)) fail({spelling(k)});
    return take();
  }

  Token expectWord(const char* w) {
    if (!atWord(w)) fail({std::string("'") + w + "'"});
    return take();
  }

  std::string ident() { return expect(Tok::Ident).text; }

  RatLit rational() {
    Token n = expect(Tok::Number);
    RatLit r{n.text, Rational(Natural(n.text))};
    if (at(Tok::Slash)) {
      take();
      Token d = expect(Tok::Number);
      if (Natural(d.text) == 0) throw SourceError(ErrorKind::Syntax, d.loc, "zero denominator");
      r.text += "/" + d.text;
      r.value = Rational(Natural(n.text), Natural(d.text));
      r.value.canonicalize();
    }
    return r;
  }

  // -- declarations ---------------------------------------------------------

  Decl decl() {
    Loc loc = cur().loc;
    if (atWord("sort")) {
      take();
      SortDecl d{ident(), loc};
      expect(Tok::Semi);
      return d;
    }
    if (atWord("gen")) {
      take();
      GenDecl d;
      d.loc = loc;
      d.name = ident();
      expect(Tok::Colon);
      d.arity = obj();
      expect(Tok::Arrow);
      d.coarity = obj();
      expect(Tok::Semi);
      return d;
    }
    if (atWord("theory")) {
      take();
      TheoryDecl d;
      d.loc = loc;
      d.name = ident();
      if (atWord("with")) {
        take();
        d.param = ident();
        expect(Tok::Equals);
        d.values.push_back(rational());
        while (at(Tok::Comma)) {
          take();
          d.values.push_back(rational());
        }
      }
      expect(Tok::Semi);
      return d;
    }
    if (atWord("interp")) {
      take();
      InterpDecl d;
      d.loc = loc;
      d.name = ident();
      expect(Tok::LBrace);
      while (!at(Tok::RBrace)) {
        if (!at(Tok::Ident)) fail({"identifier", "'}'"});
        d.entries.push_back(interpEntry());
      }
      take();
      return d;
    }
    if (atWord("def")) {
      take();
      DefDecl d;
      d.loc = loc;
      d.name = ident();
      expect(Tok::Equals);
      d.body = tapeSeq(true);
      expect(Tok::Semi);
      return d;
    }
    if (atWord("check")) {
      take();
      CheckDecl d;
      d.loc = loc;
      d.lhs = tapeSeq(true);
      if (at(Tok::Colon)) {
        take();
        d.kind = CheckDecl::Kind::Type;
        d.dom = obj();
        expect(Tok::Arrow);
        d.cod = obj();
      } else if (at(Tok::Equals)) {
        take();
        d.kind = CheckDecl::Kind::Equal;
        d.rhs = tapeSeq(true);
        expectWord("in");
        d.interp = ident();
      } else {
        fail({"':'", "'='"});
      }
      expect(Tok::Semi);
      return d;
    }
    fail({"'sort'", "'gen'", "'theory'", "'interp'", "'def'", "'check'"});
  }

  InterpEntry interpEntry() {
    InterpEntry e;
    e.loc = cur().loc;
    e.key = ident();
    expect(Tok::Equals);
    if (at(Tok::LBrace)) {
      take();
      e.kind = InterpEntry::Kind::Labels;
      if (!at(Tok::RBrace)) {
        e.labels.push_back(label());
        while (at(Tok::Comma)) {
          take();
          e.labels.push_back(label());
        }
      }
      expect(Tok::RBrace);
    } else if (at(Tok::Number)) {
      e.kind = InterpEntry::Kind::Size;
      e.size = take().text;
    } else if (at(Tok::LBracket)) {
      e.kind = InterpEntry::Kind::Matrix;
      take();
      if (!at(Tok::RBracket)) {
        e.rows.push_back(matrixRow());
        while (at(Tok::Comma)) {
          take();
          e.rows.push_back(matrixRow());
        }
      }
      expect(Tok::RBracket);
    } else if (at(Tok::Ident)) {
      e.kind = InterpEntry::Kind::Model;
      e.model = take().text;
    } else {
      fail({"'{'", "'['", "number", "identifier"});
    }
    expect(Tok::Semi);
    return e;
  }

  std::string label() {
    if (at(Tok::Ident) || at(Tok::Number)) return take().text;
    fail({"identifier", "number"});
  }

  std::vector<RatLit> matrixRow() {
    std::vector<RatLit> row;
    expect(Tok::LBracket);
    if (!at(Tok::RBracket)) {
      row.push_back(rational());
      while (at(Tok::Comma)) {
        take();
        row.push_back(rational());
      }
    }
    expect(Tok::RBracket);
    return row;
  }

  // -- objects --------------------------------------------------------------

  bool atObjAtom() const {
    return (at(Tok::Ident) && !isDeclKeyword(cur().text)) || at(Tok::Number) || at(Tok::LParen);
  }

  ObjExpr obj() {
    ObjExpr e = objTensor();
    while (at(Tok::Oplus)) {
      Loc loc = take().loc;
      ObjExpr r = objTensor();
      e = ObjExpr{ObjExpr::Kind::Plus, "", false, {std::move(e), std::move(r)}, loc};
    }
    return e;
  }

  ObjExpr objTensor() {
    ObjExpr e = objAtom();
    while (true) {
      if (at(Tok::Tensor)) {
        Loc loc = take().loc;
        ObjExpr r = objAtom();
        e = ObjExpr{ObjExpr::Kind::Tensor, "", false, {std::move(e), std::move(r)}, loc};
      } else if (atObjAtom() && !(at(Tok::Ident) && cur().text == "in")) {
        Loc loc = cur().loc;
        ObjExpr r = objAtom();
        e = ObjExpr{ObjExpr::Kind::Tensor, "", true, {std::move(e), std::move(r)}, loc};
      } else {
        return e;
      }
    }
  }

  ObjExpr objAtom() {
    Loc loc = cur().loc;
    if (at(Tok::Ident) && !isDeclKeyword(cur().text)) return ObjExpr{ObjExpr::Kind::Name, take().text, false, {}, loc};
    if (at(Tok::Number)) {
      std::string n = cur().text;
      if (n != "0" && n != "1") throw SourceError(ErrorKind::Syntax, loc, "only 0 and 1 are object constants");
      take();
      return ObjExpr{n == "0" ? ObjExpr::Kind::Zero : ObjExpr::Kind::One, "", false, {}, loc};
    }
    if (at(Tok::LParen)) {
      take();
      ObjExpr inner = obj();
      expect(Tok::RParen);
      return ObjExpr{ObjExpr::Kind::Paren, "", false, {std::move(inner)}, loc};
    }
    fail({"identifier", "'0'", "'1'", "'('"});
  }

  ObjArg objArg() {
    if (at(Tok::LBrace)) {
      take();
      ObjArg a{obj(), true};
      expect(Tok::RBrace);
      return a;
    }
    if (at(Tok::Ident) || at(Tok::Number)) return ObjArg{objAtom(), false};
    fail({"identifier", "'0'", "'1'", "'{'"});
  }

  std::vector<ObjArg> objArgs(std::size_t n) {
    std::vector<ObjArg> out;
    expect(Tok::At);
    out.push_back(objArg());
    for (std::size_t i = 1; i < n; ++i) {
      expect(Tok::Comma);
      out.push_back(objArg());
    }
    return out;
  }

  // -- Σ-terms ----------------------------------------------------------------

  OpSpec opSpec() {
    OpSpec op;
    op.loc = cur().loc;
    if (at(Tok::PlusSub)) {
      take();
      op.name = "+";
      op.params.push_back(rational());
    } else if (at(Tok::Plus)) {
      take();
      op.name = "+";
    } else if (at(Tok::Ident)) {
      op.name = take().text;
    } else if (at(Tok::Number) && cur().text == "0") {
      op.name = take().text;
    } else {
      fail({"'+_'", "'+'", "identifier", "'0'"});
    }
    return op;
  }

  static bool isVariable(const std::string& s) {
    if (s.size() < 2 || s[0] != 'x') return false;
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return s[1] != '0';
  }

  SigmaExpr sigma() {
    SigmaExpr e = sigmaAtom();
    while (at(Tok::PlusSub) || at(Tok::Plus)) {
      Loc loc = cur().loc;
      OpSpec op = opSpec();
      SigmaExpr r = sigmaAtom();
      SigmaExpr node;
      node.kind = SigmaExpr::Kind::Infix;
      node.op = std::move(op);
      node.kids = {std::move(e), std::move(r)};
      node.loc = loc;
      e = std::move(node);
    }
    return e;
  }

  SigmaExpr sigmaAtom() {
    SigmaExpr e;
    e.loc = cur().loc;
    if (at(Tok::LParen)) {
      take();
      e.kind = SigmaExpr::Kind::Paren;
      e.kids.push_back(sigma());
      expect(Tok::RParen);
      return e;
    }
    if (at(Tok::Ident) && isVariable(cur().text)) {
      e.kind = SigmaExpr::Kind::Var;
      e.index = std::stoul(take().text.substr(1));
      return e;
    }
    if (at(Tok::Ident) || (at(Tok::Number) && cur().text == "0")) {
      e.kind = SigmaExpr::Kind::App;
      e.op = opSpec();
      if (at(Tok::LParen)) {
        take();
        e.kids.push_back(sigma());
        while (at(Tok::Comma)) {
          take();
          e.kids.push_back(sigma());
        }
        expect(Tok::RParen);
      }
      return e;
    }
    fail({"variable", "operation", "'('"});
  }

  // -- circuits -------------------------------------------------------------

  CircExpr circSeq() {
    CircExpr e = circTensor();
    while (at(Tok::Semi)) {
      Loc loc = take().loc;
      CircExpr r = circTensor();
      e = CircExpr{CircExpr::Kind::Seq, "", {}, {std::move(e), std::move(r)}, loc};
    }
    return e;
  }

  CircExpr circTensor() {
    CircExpr e = circAtom();
    while (at(Tok::Tensor)) {
      Loc loc = take().loc;
      CircExpr r = circAtom();
      e = CircExpr{CircExpr::Kind::Tensor, "", {}, {std::move(e), std::move(r)}, loc};
    }
    return e;
  }

  CircExpr circAtom() {
    Loc loc = cur().loc;
    if (at(Tok::LParen)) {
      take();
      CircExpr inner = circSeq();
      expect(Tok::RParen);
      return CircExpr{CircExpr::Kind::Paren, "", {}, {std::move(inner)}, loc};
    }
    if (!at(Tok::Ident)) fail({"identifier", "'('"});
    std::string w = cur().text;
    if (ahead(1).kind == Tok::At) {
      CircExpr::Kind k;
      std::size_t n = 1;
      if (w == "id") {
        k = CircExpr::Kind::Id;
      } else if (w == "sym") {
        k = CircExpr::Kind::Sym;
        n = 2;
      } else if (w == "copy") {
        k = CircExpr::Kind::Copy;
      } else if (w == "del") {
        k = CircExpr::Kind::Del;
      } else {
        throw SourceError(ErrorKind::Syntax, loc, "'" + w + "@' is not a circuit constructor",
                          {"'id@'", "'sym@'", "'copy@'", "'del@'"});
      }
      take();
      return CircExpr{k, "", objArgs(n), {}, loc};
    }
    take();
    return CircExpr{CircExpr::Kind::Name, w, {}, {}, loc};
  }

  // -- tapes ----------------------------------------------------------------

  bool atTapeAtom(std::size_t k = 0) const {
    const Token& t = ahead(k);
    return (t.kind == Tok::Ident && !isDeclKeyword(t.text)) || t.kind == Tok::LBracket || t.kind == Tok::LParen;
  }

  TapeExpr binary(TapeExpr::Kind k, TapeExpr l, TapeExpr r, Loc loc) {
    TapeExpr e;
    e.kind = k;
    e.kids = {std::move(l), std::move(r)};
    e.loc = loc;
    return e;
  }

  // In declarations a ';' followed by a non-atom terminates the expression.
  TapeExpr tapeSeq(bool inDecl) {
    TapeExpr e = tapeTensor();
    while (at(Tok::Semi) && (!inDecl || atTapeAtom(1))) {
      Loc loc = take().loc;
      e = binary(TapeExpr::Kind::Seq, std::move(e), tapeTensor(), loc);
    }
    return e;
  }

  TapeExpr tapeTensor() {
    TapeExpr e = tapeSum();
    while (at(Tok::Tensor)) {
      Loc loc = take().loc;
      e = binary(TapeExpr::Kind::Tensor, std::move(e), tapeSum(), loc);
    }
    return e;
  }

  TapeExpr tapeSum() {
    TapeExpr e = tapeAtom();
    while (at(Tok::Oplus)) {
      Loc loc = take().loc;
      e = binary(TapeExpr::Kind::Sum, std::move(e), tapeAtom(), loc);
    }
    return e;
  }

  TapeExpr tapeAtom() {
    TapeExpr e;
    e.loc = cur().loc;
    if (at(Tok::LParen)) {
      take();
      e.kind = TapeExpr::Kind::Paren;
      e.kids.push_back(tapeSeq(false));
      expect(Tok::RParen);
      return e;
    }
    if (at(Tok::LBracket)) {
      take();
      e.kind = TapeExpr::Kind::Circuit;
      e.circuit.push_back(circSeq());
      expect(Tok::RBracket);
      return e;
    }
    if (!atTapeAtom()) fail({"identifier", "'['", "'('"});
    std::string w = cur().text;
    Tok next = ahead(1).kind;
    if (w == "id0") {
      take();
      e.kind = TapeExpr::Kind::IdZero;
      return e;
    }
    if (next == Tok::Less && (w == "op" || w == "term")) {
      take();
      take();
      if (w == "op") {
        e.kind = TapeExpr::Kind::Op;
        e.op = opSpec();
      } else {
        e.kind = TapeExpr::Kind::Term;
        e.term.push_back(sigma());
      }
      expect(Tok::Greater);
      e.args = objArgs(1);
      return e;
    }
    if (next == Tok::At) {
      struct Form {
        const char* word;
        TapeExpr::Kind kind;
        std::size_t arity;
      };
      static const Form forms[] = {
          {"id", TapeExpr::Kind::Id, 1},          {"sym+", TapeExpr::Kind::SymPlus, 2},
          {"sym", TapeExpr::Kind::Sym, 2},        {"codiag", TapeExpr::Kind::Codiag, 1},
          {"cobang", TapeExpr::Kind::Cobang, 1},  {"copier", TapeExpr::Kind::Copier, 1},
          {"discard", TapeExpr::Kind::Discard, 1}, {"dl", TapeExpr::Kind::Dl, 3},
          {"dlinv", TapeExpr::Kind::DlInv, 3},
      };
      for (const auto& f : forms) {
        if (w == f.word) {
          take();
          e.kind = f.kind;
          e.args = objArgs(f.arity);
          return e;
        }
      }
      throw SourceError(ErrorKind::Syntax, e.loc, "'" + w + "@' is not a tape constructor",
                        {"'id@'", "'sym+@'", "'sym@'", "'codiag@'", "'cobang@'", "'copier@'", "'discard@'",
                         "'dl@'", "'dlinv@'"});
    }
    take();
    e.kind = TapeExpr::Kind::Ref;
    e.name = w;
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

inline SourceModule parseModule(std::string_view src) { return Parser(src).module(); }
inline ObjExpr parseObject(std::string_view src) { return Parser(src).objectOnly(); }
inline TapeExpr parseTape(std::string_view src) { return Parser(src).tapeOnly(); }

}  // namespace tapes::frontend
