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

// Surface to core. Declarations are processed in order, so every name must
// be declared before it is used.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "tapes/circuit.hpp"
#include "tapes/frontend/ast.hpp"
#include "tapes/frontend/parser.hpp"
#include "tapes/interp.hpp"
#include "tapes/kleisli.hpp"
#include "tapes/objects.hpp"
#include "tapes/tape.hpp"
#include "tapes/theory.hpp"

namespace tapes::frontend {

using AnyInterpretation = std::variant<Interpretation<Rational>, Interpretation<Natural>>;

struct Check {
  CheckDecl::Kind kind;
  TapeTerm lhs;
  TapeTerm rhs;
  TapeType expected;
  std::string interp;
  Loc loc;
};

struct Module {
  MonSignature sig;
  std::optional<AlgebraicTheory> theory;
  std::vector<std::string> defOrder;
  std::map<std::string, TapeTerm> defs;
  std::map<std::string, TapeType> types;
  std::map<std::string, AnyInterpretation> interps;
  std::vector<Check> checks;

  const AlgebraicTheory& theoryOrEmpty() const {
    static const AlgebraicTheory none;
    return theory ? *theory : none;
  }
};

struct ElabOptions {
  /// Extra +_p instances for a PCA theory, beyond those declared.
  std::vector<Rational> extraParams;
};

class Elaborator {
 public:
  explicit Elaborator(ElabOptions opts = {}) : opts_(std::move(opts)) {}

  Module run(const SourceModule& src) {
    for (const auto& d : src.decls) {
      Loc loc = std::visit([](const auto& x) { return x.loc; }, d);
      try {
        std::visit([this](const auto& x) { decl(x); }, d);
      } catch (const SourceError&) {
        throw;
      } catch (const Error& e) {
        throw SourceError(e.kind(), loc, e.what());
      }
    }
    return std::move(m_);
  }

  /// Objects outside a module: every name is a sort.
  static Polynomial freeObject(const ObjExpr& e) { return normalize(objTerm(e, nullptr)); }

  /// A tape expression against an already elaborated module.
  static TapeTerm tapeIn(const Module& m, const TapeExpr& e) {
    Elaborator el;
    el.m_.sig = m.sig;
    el.m_.theory = m.theory;
    el.m_.defs = m.defs;
    return el.tape(e);
  }

 private:
  // -- objects ---------------------------------------------------------------

  // A name is a declared sort, or a run of declared one-letter sorts ("AB").
  static ObjTerm nameTerm(const std::string& name, const std::set<SortId>* sorts, Loc loc) {
    if (sorts == nullptr || sorts->contains(SortId(name))) return ObjTerm::sort(SortId(name));
    std::optional<ObjTerm> out;
    for (char c : name) {
      SortId s(std::string(1, c));
      if (!sorts->contains(s)) throw SourceError(ErrorKind::UnknownSort, loc, "unknown sort '" + name + "'");
      out = out ? ObjTerm::tensor(*out, ObjTerm::sort(s)) : ObjTerm::sort(s);
    }
    return *out;
  }

  static ObjTerm objTerm(const ObjExpr& e, const std::set<SortId>* sorts) {
    using K = ObjExpr::Kind;
    switch (e.kind) {
      case K::Name: return nameTerm(e.name, sorts, e.loc);
      case K::One: return ObjTerm::unit();
      case K::Zero: return ObjTerm::zero();
      case K::Paren: return objTerm(e.kids[0], sorts);
      case K::Tensor: return ObjTerm::tensor(objTerm(e.kids[0], sorts), objTerm(e.kids[1], sorts));
      case K::Plus: return ObjTerm::sum(objTerm(e.kids[0], sorts), objTerm(e.kids[1], sorts));
    }
    return ObjTerm::zero();
  }

  Polynomial poly(const ObjExpr& e) const { return normalize(objTerm(e, &m_.sig.sorts)); }
  Polynomial poly(const ObjArg& a) const { return poly(a.expr); }

  Monomial mono(const ObjExpr& e) const {
    Polynomial p = poly(e);
    if (p.size() != 1) {
      throw SourceError(ErrorKind::TypeMismatch, e.loc, "expected a monomial, got " + toString(p));
    }
    return p[0];
  }

  // -- declarations ----------------------------------------------------------

  void decl(const SortDecl& d) {
    SortId s(d.name);
    if (m_.sig.sorts.contains(s)) throw SourceError(ErrorKind::Resolution, d.loc, "sort '" + d.name + "' declared twice");
    m_.sig.addSort(s);
  }

  void decl(const GenDecl& d) {
    if (m_.sig.findGenerator(d.name)) {
      throw SourceError(ErrorKind::Resolution, d.loc, "generator '" + d.name + "' declared twice");
    }
    m_.sig.addGenerator(GeneratorDecl{d.name, mono(d.arity), mono(d.coarity)});
  }

  void decl(const TheoryDecl& d) {
    if (m_.theory) throw SourceError(ErrorKind::Resolution, d.loc, "only one theory per module");
    std::vector<Rational> ps;
    for (const auto& v : d.values) ps.push_back(v.value);
    if (d.name == "PCA") ps.insert(ps.end(), opts_.extraParams.begin(), opts_.extraParams.end());
    m_.theory = builtinTheory(d.name, ps);
  }

  void decl(const InterpDecl& d) {
    if (m_.interps.contains(d.name)) {
      throw SourceError(ErrorKind::Resolution, d.loc, "interpretation '" + d.name + "' declared twice");
    }
    std::map<SortId, FinCarrier> carriers;
    std::optional<std::string> model;
    for (const auto& e : d.entries) {
      if (e.kind == InterpEntry::Kind::Model) {
        if (e.key != "model") throw SourceError(ErrorKind::Resolution, e.loc, "'" + e.key + "' cannot name a model");
        model = e.model;
      } else if (e.kind == InterpEntry::Kind::Labels || e.kind == InterpEntry::Kind::Size) {
        SortId s(e.key);
        if (!m_.sig.sorts.contains(s)) throw SourceError(ErrorKind::UnknownSort, e.loc, "unknown sort '" + e.key + "'");
        FinCarrier c;
        if (e.kind == InterpEntry::Kind::Labels) {
          c.size = e.labels.size();
          c.labels = e.labels;
        } else {
          c.size = std::stoul(e.size);
        }
        carriers[s] = c;
      }
    }
    for (const auto& s : m_.sig.sorts) {
      if (!carriers.contains(s)) {
        throw SourceError(ErrorKind::Resolution, d.loc, "interpretation '" + d.name + "' has no carrier for '" + s.name() + "'");
      }
    }
    if (!model) throw SourceError(ErrorKind::Resolution, d.loc, "interpretation '" + d.name + "' needs 'model = ...;'");
    if (!m_.theory || m_.theory->name != *model) {
      throw SourceError(ErrorKind::Resolution, d.loc, "model '" + *model + "' needs a matching 'theory " + *model + "' declaration");
    }
    if (*model == "PCA") {
      Interpretation<Rational> I{carriers, {}, pcaModel(*m_.theory)};
      fillMatrices(d, I);
      m_.interps.emplace(d.name, std::move(I));
    } else {
      Interpretation<Natural> I{carriers, {}, cmModel<Natural>(*m_.theory)};
      fillMatrices(d, I);
      m_.interps.emplace(d.name, std::move(I));
    }
  }

  template <Semiring W>
  void fillMatrices(const InterpDecl& d, Interpretation<W>& I) const {
    for (const auto& e : d.entries) {
      if (e.kind != InterpEntry::Kind::Matrix) continue;
      const GeneratorDecl* g = m_.sig.findGenerator(e.key);
      if (!g) throw SourceError(ErrorKind::UnknownGenerator, e.loc, "unknown generator '" + e.key + "'");
      std::size_t rows = I.sizeOf(g->coar), cols = I.sizeOf(g->ar);
      if (e.rows.size() != rows) {
        throw SourceError(ErrorKind::DimensionMismatch, e.loc,
                          "'" + e.key + "' needs " + std::to_string(rows) + " rows, got " + std::to_string(e.rows.size()));
      }
      std::vector<std::vector<W>> dense;
      for (const auto& row : e.rows) {
        if (row.size() != cols) {
          throw SourceError(ErrorKind::DimensionMismatch, e.loc,
                            "'" + e.key + "' needs " + std::to_string(cols) + " columns per row");
        }
        std::vector<W> out;
        for (const auto& v : row) {
          if constexpr (std::is_same_v<W, Natural>) {
            if (v.value.get_den() != 1) {
              throw SourceError(ErrorKind::TypeMismatch, e.loc, "CM weights are natural numbers, got " + v.text);
            }
            out.push_back(v.value.get_num());
          } else {
            out.push_back(v.value);
          }
        }
        dense.push_back(std::move(out));
      }
      I.generators[e.key] = Matrix<W>::fromRows(rows, cols, dense);
    }
  }

  void decl(const DefDecl& d) {
    if (m_.defs.contains(d.name)) throw SourceError(ErrorKind::Resolution, d.loc, "'" + d.name + "' defined twice");
    TapeTerm t = tape(d.body);
    m_.types.emplace(d.name, typeOfTape(t, m_.sig, m_.theoryOrEmpty()));
    m_.defs.emplace(d.name, t);
    m_.defOrder.push_back(d.name);
  }

  void decl(const CheckDecl& d) {
    Check c{d.kind, tape(d.lhs), TapeTerm::idZero(), {}, d.interp, d.loc};
    if (d.kind == CheckDecl::Kind::Type) {
      c.expected = TapeType{poly(d.dom), poly(d.cod)};
    } else {
      c.rhs = tape(d.rhs);
      if (!m_.interps.contains(d.interp)) {
        throw SourceError(ErrorKind::Resolution, d.loc, "unknown interpretation '" + d.interp + "'");
      }
    }
    m_.checks.push_back(std::move(c));
  }

  // -- Σ-terms ----------------------------------------------------------------

  OpSymbol op(const OpSpec& s) const {
    if (s.name == "+" && s.params.size() == 1) return ops::choice(s.params[0].value);
    if (s.name == "+") return ops::plus();
    if (s.name == "star") return ops::star();
    if (s.name == "0") return ops::zero();
    for (const auto& f : m_.theoryOrEmpty().ops) {
      if (f.name == s.name) return f;
    }
    throw SourceError(ErrorKind::UnknownOp, s.loc, "unknown operation '" + s.name + "'");
  }

  SigmaTerm sigma(const SigmaExpr& e) const {
    using K = SigmaExpr::Kind;
    switch (e.kind) {
      case K::Var: return SigmaTerm::var(e.index);
      case K::Paren: return sigma(e.kids[0]);
      case K::Infix:
      case K::App: {
        std::vector<SigmaTerm> args;
        for (const auto& k : e.kids) args.push_back(sigma(k));
        OpSymbol f = op(e.op);
        if (f.arity != args.size()) {
          throw SourceError(ErrorKind::ArityMismatch, e.loc,
                            "'" + toString(f) + "' takes " + std::to_string(f.arity) + " arguments");
        }
        return SigmaTerm::app(f, std::move(args));
      }
    }
    return SigmaTerm::var(1);
  }

  // -- circuits --------------------------------------------------------------

  CircuitTerm circuit(const CircExpr& e) const {
    using K = CircExpr::Kind;
    switch (e.kind) {
      case K::Name: {
        if (const auto* g = m_.sig.findGenerator(e.name)) return CircuitTerm::gen(*g);
        if (e.name == "id1") return CircuitTerm::idOne();
        if (e.name.size() > 2 && e.name.starts_with("id")) {
          std::string rest = e.name.substr(2);
          try {
            return circuits::identity(mono(ObjExpr{ObjExpr::Kind::Name, rest, false, {}, e.loc}));
          } catch (const Error&) {
          }
        }
        throw SourceError(ErrorKind::UnknownGenerator, e.loc, "unknown generator '" + e.name + "'");
      }
      case K::Id: return circuits::identity(mono(e.args[0].expr));
      case K::Sym: return circuits::symmetry(mono(e.args[0].expr), mono(e.args[1].expr));
      case K::Copy: return circuits::copier(mono(e.args[0].expr));
      case K::Del: return circuits::discharger(mono(e.args[0].expr));
      case K::Paren: return circuit(e.kids[0]);
      case K::Seq: return CircuitTerm::seq(circuit(e.kids[0]), circuit(e.kids[1]));
      case K::Tensor: return CircuitTerm::tensor(circuit(e.kids[0]), circuit(e.kids[1]));
    }
    return CircuitTerm::idOne();
  }

  // -- tapes -----------------------------------------------------------------

  TapeTerm tape(const TapeExpr& e) const {
    using K = TapeExpr::Kind;
    auto p = [&](std::size_t i) { return poly(e.args[i]); };
    switch (e.kind) {
      case K::Id: return identityTape(p(0));
      case K::IdZero: return TapeTerm::idZero();
      case K::SymPlus: return symPlusTape(p(0), p(1));
      case K::Sym: return symTensorPoly(p(0), p(1));
      case K::Codiag: return codiagTape(p(0));
      case K::Cobang: return cobangTape(p(0));
      case K::Op: return opInjPoly(op(e.op), p(0));
      case K::Term: {
        SigmaTerm t = sigma(e.term[0]);
        return termTape(t, maxVariable(t), p(0));
      }
      case K::Copier: return cdPoly(CdKind::Copier, p(0));
      case K::Discard: return cdPoly(CdKind::Discharger, p(0));
      case K::Dl: return distributor(p(0), p(1), p(2));
      case K::DlInv: return distributor(p(0), p(1), p(2), true);
      case K::Circuit: return TapeTerm::tapeOf(circuit(e.circuit[0]));
      case K::Ref: {
        auto it = m_.defs.find(e.name);
        if (it == m_.defs.end()) throw SourceError(ErrorKind::Resolution, e.loc, "unknown definition '" + e.name + "'");
        return it->second;
      }
      case K::Paren: return tape(e.kids[0]);
      case K::Seq: return TapeTerm::seq(tape(e.kids[0]), tape(e.kids[1]));
      case K::Tensor: return tensorTape(tape(e.kids[0]), tape(e.kids[1]));
      case K::Sum: return TapeTerm::sum(tape(e.kids[0]), tape(e.kids[1]));
    }
    return TapeTerm::idZero();
  }

  ElabOptions opts_;
  Module m_;
};

inline Module elaborate(const SourceModule& src, ElabOptions opts = {}) { return Elaborator(std::move(opts)).run(src); }

inline Module loadModule(std::string_view text, ElabOptions opts = {}) { return elaborate(parseModule(text), std::move(opts)); }

}  // namespace tapes::frontend
