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

// Surface syntax tree. It keeps written parentheses and spellings so that
// printing a parsed module gives back the same token stream.

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tapes/frontend/lexer.hpp"
#include "tapes/weights.hpp"

namespace tapes::frontend {

/// A rational literal as written (`2/5`, `1`).
struct RatLit {
  std::string text;
  Rational value;
};

struct ObjExpr {
  enum class Kind { Name, One, Zero, Tensor, Plus, Paren };
  Kind kind = Kind::One;
  std::string name;          // Name
  bool juxtaposed = false;   // Tensor written without (x)
  std::vector<ObjExpr> kids;
  Loc loc;
};

/// Argument after `@`: a bare atom, or an expression in braces.
struct ObjArg {
  ObjExpr expr;
  bool braced = false;
};

/// Operation spelling: `+_1/3`, `+`, `star`, `0`, or any identifier.
struct OpSpec {
  std::string name;
  std::vector<RatLit> params;
  Loc loc;
};

struct SigmaExpr {
  enum class Kind { Var, Infix, App, Paren };
  Kind kind = Kind::Var;
  std::size_t index = 0;  // Var
  OpSpec op;              // Infix, App (App with no kids is a constant)
  std::vector<SigmaExpr> kids;
  Loc loc;
};

struct CircExpr {
  enum class Kind { Name, Id, Sym, Copy, Del, Seq, Tensor, Paren };
  Kind kind = Kind::Name;
  std::string name;          // Name: generator, idA, id1
  std::vector<ObjArg> args;  // Id, Sym, Copy, Del
  std::vector<CircExpr> kids;
  Loc loc;
};

struct TapeExpr {
  enum class Kind {
    Id,       // id@P
    IdZero,   // id0
    SymPlus,  // sym+@P,Q
    Sym,      // sym@P,Q
    Codiag,   // codiag@P
    Cobang,   // cobang@P
    Op,       // op<f>@P
    Term,     // term<t>@P
    Copier,   // copier@P
    Discard,  // discard@P
    Dl,       // dl@P,Q,R
    DlInv,    // dlinv@P,Q,R
    Circuit,  // [c]
    Ref,      // a def name
    Seq,
    Tensor,
    Sum,
    Paren,
  };
  Kind kind = Kind::IdZero;
  std::string name;  // Ref
  std::vector<ObjArg> args;
  OpSpec op;         // Op
  std::vector<SigmaExpr> term;  // Term: exactly one
  std::vector<CircExpr> circuit;  // Circuit: exactly one
  std::vector<TapeExpr> kids;
  Loc loc;
};

struct SortDecl {
  std::string name;
  Loc loc;
};

struct GenDecl {
  std::string name;
  ObjExpr arity;
  ObjExpr coarity;
  Loc loc;
};

struct TheoryDecl {
  std::string name;
  std::string param;  // the bound name in `with p = ...`, empty if none
  std::vector<RatLit> values;
  Loc loc;
};

struct InterpEntry {
  enum class Kind { Labels, Size, Matrix, Model };
  Kind kind = Kind::Size;
  std::string key;
  std::vector<std::string> labels;         // Labels
  std::string size;                        // Size
  std::vector<std::vector<RatLit>> rows;   // Matrix
  std::string model;                       // Model
  Loc loc;
};

struct InterpDecl {
  std::string name;
  std::vector<InterpEntry> entries;
  Loc loc;
};

struct DefDecl {
  std::string name;
  TapeExpr body;
  Loc loc;
};

/// `check t : P -> Q;` or `check l = r in I;`.
struct CheckDecl {
  enum class Kind { Type, Equal };
  Kind kind = Kind::Type;
  TapeExpr lhs;
  TapeExpr rhs;       // Equal
  ObjExpr dom, cod;   // Type
  std::string interp; // Equal
  Loc loc;
};

using Decl = std::variant<SortDecl, GenDecl, TheoryDecl, InterpDecl, DefDecl, CheckDecl>;

struct SourceModule {
  std::vector<Decl> decls;
};

}  // namespace tapes::frontend
