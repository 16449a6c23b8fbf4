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

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tapes/circuit.hpp"
#include "tapes/error.hpp"
#include "tapes/objects.hpp"
#include "tapes/theory.hpp"

namespace tapes {

struct TapeType {
  Polynomial dom;
  Polynomial cod;

  friend bool operator==(const TapeType&, const TapeType&) = default;
};

/// Outer-layer term: circuits on tapes, composed with ; and ⊕.
class TapeTerm {
 public:
  enum class Kind { IdMon, IdZero, TapeOf, SymPlus, Seq, Sum, Cobang, Codiag, OpInj };

  static TapeTerm idMon(const Monomial& u) { return make(Kind::IdMon, {u}); }
  static TapeTerm idZero() { return make(Kind::IdZero, {}); }
  static TapeTerm tapeOf(const CircuitTerm& c) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::TapeOf;
    node->circuit = c;
    return TapeTerm(std::move(node));
  }
  static TapeTerm symPlus(const Monomial& u, const Monomial& v) { return make(Kind::SymPlus, {u, v}); }
  static TapeTerm cobang(const Monomial& u) { return make(Kind::Cobang, {u}); }
  static TapeTerm codiag(const Monomial& u) { return make(Kind::Codiag, {u}); }
  static TapeTerm opInj(const OpSymbol& f, const Monomial& u) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::OpInj;
    node->monomials = {u};
    node->op = f;
    return TapeTerm(std::move(node));
  }
  static TapeTerm seq(const TapeTerm& s, const TapeTerm& t) { return binary(Kind::Seq, s, t); }
  static TapeTerm sum(const TapeTerm& s, const TapeTerm& t) { return binary(Kind::Sum, s, t); }

  Kind kind() const { return node_->kind; }
  const Monomial& monomial(std::size_t i = 0) const { return node_->monomials.at(i); }
  const CircuitTerm& circuit() const { return *node_->circuit; }
  const OpSymbol& op() const { return *node_->op; }
  TapeTerm left() const { return TapeTerm(node_->left); }
  TapeTerm right() const { return TapeTerm(node_->right); }

  /// Identity of the node, for memoization.
  const void* id() const { return node_.get(); }

 private:
  struct Node {
    Kind kind = Kind::IdZero;
    std::vector<Monomial> monomials;
    std::optional<CircuitTerm> circuit;
    std::optional<OpSymbol> op;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  static TapeTerm make(Kind k, std::vector<Monomial> ms) {
    auto node = std::make_shared<Node>();
    node->kind = k;
    node->monomials = std::move(ms);
    return TapeTerm(std::move(node));
  }
  static TapeTerm binary(Kind k, const TapeTerm& s, const TapeTerm& t) {
    auto node = std::make_shared<Node>();
    node->kind = k;
    node->left = s.node_;
    node->right = t.node_;
    return TapeTerm(std::move(node));
  }

  explicit TapeTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

namespace detail {

inline TapeType inferTape(const TapeTerm& t, const MonSignature* sig, const AlgebraicTheory* theory) {
  using K = TapeTerm::Kind;
  auto requireSorts = [&](const Monomial& u) {
    if (!sig) return;
    for (const auto& s : u.sorts) {
      if (!sig->sorts.contains(s)) throw Error(ErrorKind::UnknownSort, "undeclared sort '" + s.name() + "'");
    }
  };
  switch (t.kind()) {
    case K::IdMon:
      requireSorts(t.monomial());
      return {t.monomial(), t.monomial()};
    case K::IdZero:
      return {};
    case K::TapeOf: {
      CircuitType ct = detail::inferCircuit(t.circuit(), sig);
      return {ct.dom, ct.cod};
    }
    case K::SymPlus: {
      requireSorts(t.monomial(0));
      requireSorts(t.monomial(1));
      return {Polynomial{t.monomial(0), t.monomial(1)}, Polynomial{t.monomial(1), t.monomial(0)}};
    }
    case K::Cobang:
      requireSorts(t.monomial());
      return {Polynomial::zero(), t.monomial()};
    case K::Codiag:
      requireSorts(t.monomial());
      return {Polynomial{t.monomial(), t.monomial()}, t.monomial()};
    case K::OpInj: {
      requireSorts(t.monomial());
      if (theory && !theory->hasOp(t.op())) {
        throw Error(ErrorKind::UnknownOp, "operation " + toString(t.op()) + " not in theory " + theory->name);
      }
      return {t.monomial(), power(t.monomial(), t.op().arity)};
    }
    case K::Seq: {
      TapeType l = inferTape(t.left(), sig, theory);
      TapeType r = inferTape(t.right(), sig, theory);
      if (l.cod != r.dom) {
        throw Error(ErrorKind::TypeMismatch,
                    "tape composition: " + toString(l.cod) + " does not match " + toString(r.dom));
      }
      return {l.dom, r.cod};
    }
    case K::Sum: {
      TapeType l = inferTape(t.left(), sig, theory);
      TapeType r = inferTape(t.right(), sig, theory);
      return {plus(l.dom, r.dom), plus(l.cod, r.cod)};
    }
  }
  return {};
}

}  // namespace detail

/// Type of t, checking generators, sorts and operations.
inline TapeType typeOfTape(const TapeTerm& t, const MonSignature& sig, const AlgebraicTheory& theory) {
  return detail::inferTape(t, &sig, &theory);
}

/// Type of t trusting recorded generator arities and operations.
inline TapeType inferTapeType(const TapeTerm& t) { return detail::inferTape(t, nullptr, nullptr); }

// ---------------------------------------------------------------------------
// Derived structure over polynomials.

/// ⊕ of a list; id₀ when empty.
inline TapeTerm sumAll(const std::vector<TapeTerm>& parts) {
  if (parts.empty()) return TapeTerm::idZero();
  TapeTerm out = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) out = TapeTerm::sum(parts[i], out);
  return out;
}

inline TapeTerm identityTape(const Polynomial& p) {
  std::vector<TapeTerm> parts;
  for (const auto& u : p.monomials) parts.push_back(TapeTerm::idMon(u));
  return sumAll(parts);
}

/// ¡_P : 0 → P.
inline TapeTerm cobangTape(const Polynomial& p) {
  std::vector<TapeTerm> parts;
  for (const auto& u : p.monomials) parts.push_back(TapeTerm::cobang(u));
  return sumAll(parts);
}

/// σ⊕_{P,Q} : P ⊕ Q → Q ⊕ P.
inline TapeTerm symPlusTape(const Polynomial& p, const Polynomial& q) {
  if (p.isZero()) return identityTape(q);
  if (q.isZero()) return identityTape(p);
  if (p.size() == 1 && q.size() == 1) return TapeTerm::symPlus(p[0], q[0]);
  if (p.size() > 1) {
    const Monomial& u = p[0];
    Polynomial rest = p.tail();
    return TapeTerm::seq(TapeTerm::sum(TapeTerm::idMon(u), symPlusTape(rest, q)),
                         TapeTerm::sum(symPlusTape(u, q), identityTape(rest)));
  }
  const Monomial& w = q[0];
  Polynomial rest = q.tail();
  return TapeTerm::seq(TapeTerm::sum(symPlusTape(p, w), identityTape(rest)),
                       TapeTerm::sum(TapeTerm::idMon(w), symPlusTape(p, rest)));
}

/// ∇_P : P ⊕ P → P.
inline TapeTerm codiagTape(const Polynomial& p) {
  if (p.isZero()) return TapeTerm::idZero();
  if (p.size() == 1) return TapeTerm::codiag(p[0]);
  const Monomial& u = p[0];
  Polynomial rest = p.tail();
  TapeTerm shuffle = sumAll({TapeTerm::idMon(u), symPlusTape(rest, u), identityTape(rest)});
  return TapeTerm::seq(shuffle, TapeTerm::sum(TapeTerm::codiag(u), codiagTape(rest)));
}

/// δˡ_{P,Q,R} : P(Q ⊕ R) → PQ ⊕ PR, or its inverse.
inline TapeTerm distributor(const Polynomial& p, const Polynomial& q, const Polynomial& r, bool inverse = false) {
  if (p.isZero()) return TapeTerm::idZero();
  const Monomial& u = p[0];
  if (p.size() == 1) return identityTape(polyTensor(u, plus(q, r)));
  Polynomial rest = p.tail();
  Polynomial uq = polyTensor(u, q);
  Polynomial ur = polyTensor(u, r);
  Polynomial restQ = polyTensor(rest, q);
  Polynomial restR = polyTensor(rest, r);
  if (!inverse) {
    TapeTerm first = TapeTerm::sum(identityTape(plus(uq, ur)), distributor(rest, q, r, false));
    TapeTerm second = sumAll({identityTape(uq), symPlusTape(ur, restQ), identityTape(restR)});
    return TapeTerm::seq(first, second);
  }
  TapeTerm first = sumAll({identityTape(uq), symPlusTape(restQ, ur), identityTape(restR)});
  TapeTerm second = TapeTerm::sum(identityTape(plus(uq, ur)), distributor(rest, q, r, true));
  return TapeTerm::seq(first, second);
}

/// δˡ_{Y,nX} : Y(⊕ⁿX) → ⊕ⁿ(YX), iterated from the binary distributor.
inline TapeTerm distributorN(const Polynomial& y, const Polynomial& x, std::size_t n, bool inverse = false) {
  if (n == 0) return TapeTerm::idZero();
  if (n == 1) return identityTape(polyTensor(y, x));
  Polynomial rest = power(x, n - 1);
  TapeTerm head = distributor(y, x, rest, inverse);
  TapeTerm tail = TapeTerm::sum(identityTape(polyTensor(y, x)), distributorN(y, x, n - 1, inverse));
  return inverse ? TapeTerm::seq(tail, head) : TapeTerm::seq(head, tail);
}

/// σ_{P,Q} : PQ → QP.
inline TapeTerm symTensorPoly(const Polynomial& p, const Polynomial& q) {
  if (q.isZero()) return TapeTerm::idZero();
  const Monomial& v = q[0];
  Polynomial rest = q.tail();
  std::vector<TapeTerm> swaps;
  for (const auto& u : p.monomials) swaps.push_back(TapeTerm::tapeOf(circuits::symmetry(u, v)));
  return TapeTerm::seq(distributor(p, v, rest), TapeTerm::sum(sumAll(swaps), symTensorPoly(p, rest)));
}

/// ⊕ⁿ1, the polynomial with n unit monomials.
inline Polynomial ordinal(std::size_t n) { return power(Monomial::unit(), n); }

/// ⟨f⟩_P : P → ⊕ⁿP.
inline TapeTerm opInjPoly(const OpSymbol& f, const Polynomial& p) {
  if (p.isZero()) return TapeTerm::idZero();
  if (p.size() == 1) return TapeTerm::opInj(f, p[0]);
  const Monomial& u = p[0];
  Polynomial rest = p.tail();
  return TapeTerm::seq(TapeTerm::sum(TapeTerm::opInj(f, u), opInjPoly(f, rest)),
                       distributor(ordinal(f.arity), u, rest, true));
}

// ---------------------------------------------------------------------------
// Whiskering.

enum class Side { Left, Right };

/// U⋉t (Side::Left) or t⋊U (Side::Right) for a monomial U.
inline TapeTerm whiskerMonomial(Side side, const Monomial& u, const TapeTerm& t) {
  using K = TapeTerm::Kind;
  auto with = [&](const Monomial& v) { return side == Side::Left ? concat(u, v) : concat(v, u); };
  switch (t.kind()) {
    case K::IdMon:
      return TapeTerm::idMon(with(t.monomial()));
    case K::IdZero:
      return TapeTerm::idZero();
    case K::TapeOf: {
      CircuitTerm id = circuits::identity(u);
      return TapeTerm::tapeOf(side == Side::Left ? CircuitTerm::tensor(id, t.circuit())
                                                 : CircuitTerm::tensor(t.circuit(), id));
    }
    case K::SymPlus:
      return TapeTerm::symPlus(with(t.monomial(0)), with(t.monomial(1)));
    case K::Seq:
      return TapeTerm::seq(whiskerMonomial(side, u, t.left()), whiskerMonomial(side, u, t.right()));
    case K::Sum:
      return TapeTerm::sum(whiskerMonomial(side, u, t.left()), whiskerMonomial(side, u, t.right()));
    case K::Cobang:
      return TapeTerm::cobang(with(t.monomial()));
    case K::Codiag:
      return TapeTerm::codiag(with(t.monomial()));
    case K::OpInj:
      return TapeTerm::opInj(t.op(), with(t.monomial()));
  }
  return t;
}

/// S⋉t : SP → SQ for t : P → Q.
inline TapeTerm whiskerLeft(const Polynomial& s, const TapeTerm& t) {
  if (s.isZero()) return TapeTerm::idZero();
  if (s.size() == 1) return whiskerMonomial(Side::Left, s[0], t);
  return TapeTerm::sum(whiskerMonomial(Side::Left, s[0], t), whiskerLeft(s.tail(), t));
}

/// t⋊S : PS → QS for t : P → Q.
inline TapeTerm whiskerRight(const TapeTerm& t, const Polynomial& s) {
  if (s.isZero()) return TapeTerm::idZero();
  if (s.size() == 1) return whiskerMonomial(Side::Right, s[0], t);
  TapeType ty = inferTapeType(t);
  const Monomial& w = s[0];
  Polynomial rest = s.tail();
  TapeTerm middle = TapeTerm::sum(whiskerMonomial(Side::Right, w, t), whiskerRight(t, rest));
  return TapeTerm::seq(TapeTerm::seq(distributor(ty.dom, w, rest), middle), distributor(ty.cod, w, rest, true));
}

inline TapeTerm whisker(Side side, const Polynomial& s, const TapeTerm& t) {
  return side == Side::Left ? whiskerLeft(s, t) : whiskerRight(t, s);
}

/// t1 ⊗ t2 = P⋉t2 ; t1⋊S for t1 : P → Q, t2 : R → S.
inline TapeTerm tensorTape(const TapeTerm& t1, const TapeTerm& t2) {
  TapeType ty1 = inferTapeType(t1);
  TapeType ty2 = inferTapeType(t2);
  return TapeTerm::seq(whiskerLeft(ty1.dom, t2), whiskerRight(t1, ty2.cod));
}

// ---------------------------------------------------------------------------
// Terms, iterated codiagonals, copy and discard.

/// ∇ᵐ_Q : ⊕ᵐQ → Q.
inline TapeTerm codiagN(const Polynomial& q, std::size_t m) {
  if (m == 0) return cobangTape(q);
  if (m == 1) return identityTape(q);
  return TapeTerm::seq(TapeTerm::sum(identityTape(q), codiagN(q, m - 1)), codiagTape(q));
}

/// ⟨t⟩_P : P → ⊕ⁿP for a Σ-term t over context n.
inline TapeTerm termTape(const SigmaTerm& t, std::size_t n, const Polynomial& p) {
  checkTerm(t, n);
  if (t.isVar()) {
    std::size_t i = t.index();
    return sumAll({cobangTape(power(p, i - 1)), identityTape(p), cobangTape(power(p, n - i))});
  }
  std::vector<TapeTerm> branches;
  for (const auto& a : t.args()) branches.push_back(termTape(a, n, p));
  return TapeTerm::seq(TapeTerm::seq(opInjPoly(t.op(), p), sumAll(branches)),
                       codiagN(power(p, n), t.args().size()));
}

enum class CdKind { Copier, Discharger };

/// copier_P : P → PP and discharger_P : P → 1.
inline TapeTerm cdPoly(CdKind kind, const Polynomial& p) {
  if (kind == CdKind::Copier) {
    if (p.isZero()) return TapeTerm::idZero();
    const Monomial& u = p[0];
    Polynomial rest = p.tail();
    TapeTerm inner = TapeTerm::seq(TapeTerm::sum(cobangTape(polyTensor(rest, u)), cdPoly(kind, rest)),
                                   distributor(rest, u, rest, true));
    return sumAll({TapeTerm::tapeOf(circuits::copier(u)), cobangTape(polyTensor(u, rest)), inner});
  }
  if (p.isZero()) return TapeTerm::cobang(Monomial::unit());
  const Monomial& u = p[0];
  return TapeTerm::seq(TapeTerm::sum(TapeTerm::tapeOf(circuits::discharger(u)), cdPoly(kind, p.tail())),
                       TapeTerm::codiag(Monomial::unit()));
}

enum class PlusStructure { Id, Codiag, Cobang, SymPlus };

inline TapeTerm structuralPlus(PlusStructure kind, const Polynomial& p, const Polynomial& q = {}) {
  switch (kind) {
    case PlusStructure::Id:
      return identityTape(p);
    case PlusStructure::Codiag:
      return codiagTape(p);
    case PlusStructure::Cobang:
      return cobangTape(p);
    case PlusStructure::SymPlus:
      return symPlusTape(p, q);
  }
  return identityTape(p);
}

// ---------------------------------------------------------------------------
// Printing in the surface syntax (fully explicit; used for reproductions).

inline std::string objectArg(const Polynomial& p) {
  std::string s = toString(p);
  bool bare = p.size() <= 1 && s.find(' ') == std::string::npos;
  return bare ? s : "{" + s + "}";
}

inline std::string toString(const CircuitTerm& c) {
  using K = CircuitTerm::Kind;
  switch (c.kind()) {
    case K::IdSort:
      return "id" + c.sorts()[0].name();
    case K::IdOne:
      return "id1";
    case K::Gen:
      return c.generator().name;
    case K::SymSorts:
      return "sym@" + c.sorts()[0].name() + "," + c.sorts()[1].name();
    case K::Copier:
      return "copy@" + c.sorts()[0].name();
    case K::Discharger:
      return "del@" + c.sorts()[0].name();
    case K::Seq:
      return "(" + toString(c.left()) + " ; " + toString(c.right()) + ")";
    case K::Tensor:
      return "(" + toString(c.left()) + " (x) " + toString(c.right()) + ")";
  }
  return {};
}

inline std::string toString(const TapeTerm& t) {
  using K = TapeTerm::Kind;
  switch (t.kind()) {
    case K::IdMon:
      return "id@" + objectArg(t.monomial());
    case K::IdZero:
      return "id0";
    case K::TapeOf:
      return "[" + toString(t.circuit()) + "]";
    case K::SymPlus:
      return "sym+@" + objectArg(t.monomial(0)) + "," + objectArg(t.monomial(1));
    case K::Cobang:
      return "cobang@" + objectArg(t.monomial());
    case K::Codiag:
      return "codiag@" + objectArg(t.monomial());
    case K::OpInj:
      return "op<" + toString(t.op()) + ">@" + objectArg(t.monomial());
    case K::Seq:
      return "(" + toString(t.left()) + " ; " + toString(t.right()) + ")";
    case K::Sum:
      return "(" + toString(t.left()) + " (+) " + toString(t.right()) + ")";
  }
  return {};
}

}  // namespace tapes
