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

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "tapes/error.hpp"
#include "tapes/objects.hpp"

namespace tapes {

struct GeneratorDecl {
  std::string name;
  Monomial ar;
  Monomial coar;

  friend bool operator==(const GeneratorDecl&, const GeneratorDecl&) = default;
};

/// Sorts and generators of a monoidal signature.
struct MonSignature {
  std::set<SortId> sorts;
  std::map<std::string, GeneratorDecl> gens;

  void addSort(const SortId& s) { sorts.insert(s); }

  void addGenerator(GeneratorDecl g) {
    for (const auto* m : {&g.ar, &g.coar}) {
      for (const auto& s : m->sorts) {
        if (!sorts.contains(s)) {
          throw Error(ErrorKind::UnknownSort, "generator '" + g.name + "' uses undeclared sort '" + s.name() + "'");
        }
      }
    }
    auto name = g.name;
    gens.insert_or_assign(name, std::move(g));
  }

  const GeneratorDecl* findGenerator(const std::string& name) const {
    auto it = gens.find(name);
    return it == gens.end() ? nullptr : &it->second;
  }
};

/// Domain and codomain of a circuit.
struct CircuitType {
  Monomial dom;
  Monomial cod;

  friend bool operator==(const CircuitType&, const CircuitType&) = default;
};

/// Inner-layer string diagram term.
class CircuitTerm {
 public:
  enum class Kind { IdSort, IdOne, Gen, SymSorts, Seq, Tensor, Copier, Discharger };

  static CircuitTerm idSort(const SortId& a) { return make(Kind::IdSort, {a}); }
  static CircuitTerm idOne() { return make(Kind::IdOne, {}); }
  static CircuitTerm gen(const GeneratorDecl& g) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Gen;
    node->gen = g;
    return CircuitTerm(std::move(node));
  }
  static CircuitTerm symSorts(const SortId& a, const SortId& b) { return make(Kind::SymSorts, {a, b}); }
  static CircuitTerm copier(const SortId& a) { return make(Kind::Copier, {a}); }
  static CircuitTerm discharger(const SortId& a) { return make(Kind::Discharger, {a}); }
  static CircuitTerm seq(const CircuitTerm& c, const CircuitTerm& d) { return binary(Kind::Seq, c, d); }
  static CircuitTerm tensor(const CircuitTerm& c, const CircuitTerm& d) { return binary(Kind::Tensor, c, d); }

  Kind kind() const { return node_->kind; }
  /// Sort arguments of IdSort/SymSorts/Copier/Discharger.
  const std::vector<SortId>& sorts() const { return node_->sorts; }
  const GeneratorDecl& generator() const { return *node_->gen; }
  CircuitTerm left() const { return CircuitTerm(node_->left); }
  CircuitTerm right() const { return CircuitTerm(node_->right); }

  /// Identity of the node, for memoization.
  const void* id() const { return node_.get(); }

 private:
  struct Node {
    Kind kind = Kind::IdOne;
    std::vector<SortId> sorts;
    std::optional<GeneratorDecl> gen;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  static CircuitTerm make(Kind k, std::vector<SortId> sorts) {
    auto node = std::make_shared<Node>();
    node->kind = k;
    node->sorts = std::move(sorts);
    return CircuitTerm(std::move(node));
  }
  static CircuitTerm binary(Kind k, const CircuitTerm& c, const CircuitTerm& d) {
    auto node = std::make_shared<Node>();
    node->kind = k;
    node->left = c.node_;
    node->right = d.node_;
    return CircuitTerm(std::move(node));
  }

  explicit CircuitTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

namespace detail {

inline CircuitType inferCircuit(const CircuitTerm& c, const MonSignature* sig) {
  using K = CircuitTerm::Kind;
  auto requireSort = [&](const SortId& s) {
    if (sig && !sig->sorts.contains(s)) throw Error(ErrorKind::UnknownSort, "undeclared sort '" + s.name() + "'");
  };
  switch (c.kind()) {
    case K::IdSort:
      requireSort(c.sorts()[0]);
      return {Monomial{c.sorts()[0]}, Monomial{c.sorts()[0]}};
    case K::IdOne:
      return {};
    case K::Gen: {
      const auto& g = c.generator();
      if (sig) {
        const auto* decl = sig->findGenerator(g.name);
        if (!decl) throw Error(ErrorKind::UnknownGenerator, "unknown generator '" + g.name + "'");
        if (!(*decl == g)) throw Error(ErrorKind::TypeMismatch, "generator '" + g.name + "' used at a different type");
      }
      return {g.ar, g.coar};
    }
    case K::SymSorts: {
      const auto& a = c.sorts()[0];
      const auto& b = c.sorts()[1];
      requireSort(a);
      requireSort(b);
      return {Monomial{a, b}, Monomial{b, a}};
    }
    case K::Copier: {
      const auto& a = c.sorts()[0];
      requireSort(a);
      return {Monomial{a}, Monomial{a, a}};
    }
    case K::Discharger:
      requireSort(c.sorts()[0]);
      return {Monomial{c.sorts()[0]}, Monomial{}};
    case K::Seq: {
      CircuitType l = inferCircuit(c.left(), sig);
      CircuitType r = inferCircuit(c.right(), sig);
      if (l.cod != r.dom) {
        throw Error(ErrorKind::TypeMismatch,
                    "circuit composition: " + toString(l.cod) + " does not match " + toString(r.dom));
      }
      return {l.dom, r.cod};
    }
    case K::Tensor: {
      CircuitType l = inferCircuit(c.left(), sig);
      CircuitType r = inferCircuit(c.right(), sig);
      return {concat(l.dom, r.dom), concat(l.cod, r.cod)};
    }
  }
  return {};
}

}  // namespace detail

/// Type of c, checking generators and sorts against sig.
inline CircuitType typeOfCircuit(const CircuitTerm& c, const MonSignature& sig) {
  return detail::inferCircuit(c, &sig);
}

/// Type of c trusting the arities recorded in its generator nodes.
inline CircuitType inferCircuitType(const CircuitTerm& c) { return detail::inferCircuit(c, nullptr); }

namespace circuits {

inline CircuitTerm identity(const Monomial& u) {
  if (u.isUnit()) return CircuitTerm::idOne();
  CircuitTerm out = CircuitTerm::idSort(u.sorts[0]);
  for (std::size_t i = 1; i < u.length(); ++i) out = CircuitTerm::tensor(out, CircuitTerm::idSort(u.sorts[i]));
  return out;
}

inline Monomial tailOf(const Monomial& u) { return Monomial(std::vector<SortId>(u.sorts.begin() + 1, u.sorts.end())); }
inline Monomial initOf(const Monomial& u) { return Monomial(std::vector<SortId>(u.sorts.begin(), u.sorts.end() - 1)); }

/// σ_{U,V} : UV → VU.
inline CircuitTerm symmetry(const Monomial& u, const Monomial& v) {
  if (v.isUnit()) return identity(u);
  if (u.isUnit()) return identity(v);
  if (u.length() == 1 && v.length() == 1) return CircuitTerm::symSorts(u.sorts[0], v.sorts[0]);
  if (u.length() > 1) {
    // σ_{A·U',W} = (id_A ⊗ σ_{U',W}) ; (σ_{A,W} ⊗ id_{U'})
    Monomial a{u.sorts[0]};
    Monomial rest = tailOf(u);
    return CircuitTerm::seq(CircuitTerm::tensor(identity(a), symmetry(rest, v)),
                            CircuitTerm::tensor(symmetry(a, v), identity(rest)));
  }
  // σ_{A,B·W'} = (σ_{A,B} ⊗ id_{W'}) ; (id_B ⊗ σ_{A,W'})
  Monomial b{v.sorts[0]};
  Monomial rest = tailOf(v);
  return CircuitTerm::seq(CircuitTerm::tensor(symmetry(u, b), identity(rest)),
                          CircuitTerm::tensor(identity(b), symmetry(u, rest)));
}

/// copier_U : U → UU.
inline CircuitTerm copier(const Monomial& u) {
  if (u.isUnit()) return CircuitTerm::idOne();
  if (u.length() == 1) return CircuitTerm::copier(u.sorts[0]);
  Monomial a{u.sorts[0]};
  Monomial rest = tailOf(u);
  CircuitTerm split = CircuitTerm::tensor(CircuitTerm::copier(u.sorts[0]), copier(rest));
  CircuitTerm shuffle =
      CircuitTerm::tensor(CircuitTerm::tensor(identity(a), symmetry(a, rest)), identity(rest));
  return CircuitTerm::seq(split, shuffle);
}

/// discharger_U : U → 1.
inline CircuitTerm discharger(const Monomial& u) {
  if (u.isUnit()) return CircuitTerm::idOne();
  if (u.length() == 1) return CircuitTerm::discharger(u.sorts[0]);
  return CircuitTerm::tensor(CircuitTerm::discharger(u.sorts[0]), discharger(tailOf(u)));
}

}  // namespace circuits

enum class CircuitStructure { Id, Sym, Copier, Discharger };

inline CircuitTerm structuralCircuit(CircuitStructure kind, const Monomial& u, const Monomial& v = {}) {
  switch (kind) {
    case CircuitStructure::Id:
      return circuits::identity(u);
    case CircuitStructure::Sym:
      return circuits::symmetry(u, v);
    case CircuitStructure::Copier:
      return circuits::copier(u);
    case CircuitStructure::Discharger:
      return circuits::discharger(u);
  }
  return circuits::identity(u);
}

}  // namespace tapes
