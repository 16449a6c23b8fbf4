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

// Canonical layout for surface trees. Written parentheses are kept; trees
// built in code get the minimal parentheses their precedence needs.

#pragma once

#include <sstream>
#include <string>
#include <variant>

#include "tapes/frontend/ast.hpp"

namespace tapes::frontend {

namespace detail {

inline std::string joinParams(const std::vector<RatLit>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + ps[i].text;
  return out;
}

inline int precedence(const ObjExpr& e) {
  switch (e.kind) {
    case ObjExpr::Kind::Plus: return 1;
    case ObjExpr::Kind::Tensor: return 2;
    default: return 3;
  }
}

inline int precedence(const CircExpr& e) {
  switch (e.kind) {
    case CircExpr::Kind::Seq: return 1;
    case CircExpr::Kind::Tensor: return 2;
    default: return 3;
  }
}

inline int precedence(const TapeExpr& e) {
  switch (e.kind) {
    case TapeExpr::Kind::Seq: return 1;
    case TapeExpr::Kind::Tensor: return 2;
    case TapeExpr::Kind::Sum: return 3;
    default: return 4;
  }
}

inline int precedence(const SigmaExpr& e) { return e.kind == SigmaExpr::Kind::Infix ? 1 : 2; }

// Left operands may share the parent's level; right operands must bind tighter.
template <class E, class F>
std::string operand(const E& e, int parent, bool right, F print) {
  int p = precedence(e);
  bool wrap = right ? p <= parent : p < parent;
  return wrap ? "(" + print(e) + ")" : print(e);
}

}  // namespace detail

inline std::string print(const ObjExpr& e) {
  using K = ObjExpr::Kind;
  switch (e.kind) {
    case K::Name: return e.name;
    case K::One: return "1";
    case K::Zero: return "0";
    case K::Paren: return "(" + print(e.kids[0]) + ")";
    case K::Tensor:
    case K::Plus: {
      int p = detail::precedence(e);
      auto f = [](const ObjExpr& x) { return print(x); };
      std::string op = e.kind == K::Plus ? " (+) " : (e.juxtaposed ? " " : " (x) ");
      return detail::operand(e.kids[0], p, false, f) + op + detail::operand(e.kids[1], p, true, f);
    }
  }
  return "";
}

inline std::string print(const ObjArg& a) {
  if (a.braced) return "{" + print(a.expr) + "}";
  bool atom = a.expr.kind == ObjExpr::Kind::Name || a.expr.kind == ObjExpr::Kind::One ||
              a.expr.kind == ObjExpr::Kind::Zero;
  return atom ? print(a.expr) : "{" + print(a.expr) + "}";
}

inline std::string print(const OpSpec& op) {
  if (op.name == "+" && op.params.size() == 1) return "+_" + op.params[0].text;
  return op.name;
}

inline std::string print(const SigmaExpr& e) {
  using K = SigmaExpr::Kind;
  switch (e.kind) {
    case K::Var: return "x" + std::to_string(e.index);
    case K::Paren: return "(" + print(e.kids[0]) + ")";
    case K::Infix: {
      auto f = [](const SigmaExpr& x) { return print(x); };
      return detail::operand(e.kids[0], 1, false, f) + " " + print(e.op) + " " + detail::operand(e.kids[1], 1, true, f);
    }
    case K::App: {
      std::string out = print(e.op);
      if (e.kids.empty()) return out;
      out += "(";
      for (std::size_t i = 0; i < e.kids.size(); ++i) out += (i ? ", " : "") + print(e.kids[i]);
      return out + ")";
    }
  }
  return "";
}

inline std::string args(const std::vector<ObjArg>& as) {
  std::string out = "@";
  for (std::size_t i = 0; i < as.size(); ++i) out += (i ? "," : "") + print(as[i]);
  return out;
}

inline std::string print(const CircExpr& e) {
  using K = CircExpr::Kind;
  auto f = [](const CircExpr& x) { return print(x); };
  switch (e.kind) {
    case K::Name: return e.name;
    case K::Id: return "id" + args(e.args);
    case K::Sym: return "sym" + args(e.args);
    case K::Copy: return "copy" + args(e.args);
    case K::Del: return "del" + args(e.args);
    case K::Paren: return "(" + print(e.kids[0]) + ")";
    case K::Seq:
    case K::Tensor: {
      int p = detail::precedence(e);
      std::string op = e.kind == K::Seq ? " ; " : " (x) ";
      return detail::operand(e.kids[0], p, false, f) + op + detail::operand(e.kids[1], p, true, f);
    }
  }
  return "";
}

inline std::string print(const TapeExpr& e) {
  using K = TapeExpr::Kind;
  auto f = [](const TapeExpr& x) { return print(x); };
  switch (e.kind) {
    case K::Id: return "id" + args(e.args);
    case K::IdZero: return "id0";
    case K::SymPlus: return "sym+" + args(e.args);
    case K::Sym: return "sym" + args(e.args);
    case K::Codiag: return "codiag" + args(e.args);
    case K::Cobang: return "cobang" + args(e.args);
    case K::Op: return "op<" + print(e.op) + ">" + args(e.args);
    case K::Term: return "term<" + print(e.term[0]) + ">" + args(e.args);
    case K::Copier: return "copier" + args(e.args);
    case K::Discard: return "discard" + args(e.args);
    case K::Dl: return "dl" + args(e.args);
    case K::DlInv: return "dlinv" + args(e.args);
    case K::Circuit: return "[" + print(e.circuit[0]) + "]";
    case K::Ref: return e.name;
    case K::Paren: return "(" + print(e.kids[0]) + ")";
    case K::Seq:
    case K::Tensor:
    case K::Sum: {
      int p = detail::precedence(e);
      std::string op = e.kind == K::Seq ? " ; " : e.kind == K::Tensor ? " (x) " : " (+) ";
      return detail::operand(e.kids[0], p, false, f) + op + detail::operand(e.kids[1], p, true, f);
    }
  }
  return "";
}

inline std::string print(const InterpEntry& e) {
  using K = InterpEntry::Kind;
  std::string out = e.key + " = ";
  switch (e.kind) {
    case K::Labels: {
      out += "{";
      for (std::size_t i = 0; i < e.labels.size(); ++i) out += (i ? ", " : "") + e.labels[i];
      out += "}";
      break;
    }
    case K::Size: out += e.size; break;
    case K::Model: out += e.model; break;
    case K::Matrix: {
      out += "[";
      for (std::size_t i = 0; i < e.rows.size(); ++i) out += (i ? ", [" : "[") + detail::joinParams(e.rows[i]) + "]";
      out += "]";
      break;
    }
  }
  return out + ";";
}

inline std::string print(const Decl& d) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SortDecl>) {
          return "sort " + x.name + ";";
        } else if constexpr (std::is_same_v<T, GenDecl>) {
          return "gen " + x.name + " : " + print(x.arity) + " -> " + print(x.coarity) + ";";
        } else if constexpr (std::is_same_v<T, TheoryDecl>) {
          std::string out = "theory " + x.name;
          if (!x.param.empty()) out += " with " + x.param + " = " + detail::joinParams(x.values);
          return out + ";";
        } else if constexpr (std::is_same_v<T, InterpDecl>) {
          std::string out = "interp " + x.name + " {\n";
          for (const auto& e : x.entries) out += "  " + print(e) + "\n";
          return out + "}";
        } else if constexpr (std::is_same_v<T, DefDecl>) {
          return "def " + x.name + " = " + print(x.body) + ";";
        } else {
          if (x.kind == CheckDecl::Kind::Type) {
            return "check " + print(x.lhs) + " : " + print(x.dom) + " -> " + print(x.cod) + ";";
          }
          return "check " + print(x.lhs) + " = " + print(x.rhs) + " in " + x.interp + ";";
        }
      },
      d);
}

inline std::string print(const SourceModule& m) {
  std::ostringstream out;
  for (const auto& d : m.decls) out << print(d) << "\n";
  return out.str();
}

}  // namespace tapes::frontend
