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

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tapes/circuit.hpp"
#include "tapes/error.hpp"
#include "tapes/kleisli.hpp"
#include "tapes/objects.hpp"
#include "tapes/tape.hpp"

namespace tapes {

/// Carriers for sorts, matrices for generators and a model of the theory.
template <Semiring W>
struct Interpretation {
  std::map<SortId, FinCarrier> carriers;
  std::map<std::string, Matrix<W>> generators;
  TheoryModel<W> model;

  std::size_t sizeOf(const SortId& s) const {
    auto it = carriers.find(s);
    if (it == carriers.end()) throw Error(ErrorKind::UnknownSort, "sort '" + s.name() + "' has no carrier");
    return it->second.size;
  }

  std::size_t sizeOf(const Monomial& u) const {
    std::size_t n = 1;
    for (const auto& s : u.sorts) n *= sizeOf(s);
    return n;
  }

  std::size_t sizeOf(const Polynomial& p) const {
    std::size_t n = 0;
    for (const auto& u : p.monomials) n += sizeOf(u);
    return n;
  }
};

/// Index map of α♯(P): block offset of each monomial, then left-major tuples.
struct PolyCarrier {
  std::vector<std::size_t> offsets;
  std::vector<std::vector<std::size_t>> radices;  // per monomial, per position
  std::size_t size = 0;

  std::size_t index(std::size_t monomial, const std::vector<std::size_t>& tuple) const {
    const auto& rad = radices.at(monomial);
    if (tuple.size() != rad.size()) throw Error(ErrorKind::DimensionMismatch, "tuple length mismatch");
    std::size_t i = 0;
    for (std::size_t k = 0; k < rad.size(); ++k) {
      if (tuple[k] >= rad[k]) throw Error(ErrorKind::DimensionMismatch, "tuple component out of range");
      i = i * rad[k] + tuple[k];
    }
    return offsets[monomial] + i;
  }

  /// Inverse of index.
  std::pair<std::size_t, std::vector<std::size_t>> decode(std::size_t i) const {
    for (std::size_t m = 0; m < offsets.size(); ++m) {
      std::size_t blockSize = 1;
      for (auto r : radices[m]) blockSize *= r;
      if (i >= offsets[m] && i < offsets[m] + blockSize) {
        std::size_t local = i - offsets[m];
        std::vector<std::size_t> tuple(radices[m].size());
        for (std::size_t k = radices[m].size(); k-- > 0;) {
          tuple[k] = local % radices[m][k];
          local /= radices[m][k];
        }
        return {m, tuple};
      }
    }
    throw Error(ErrorKind::DimensionMismatch, "index outside carrier");
  }
};

template <Semiring W>
PolyCarrier carrierOf(const Polynomial& p, const Interpretation<W>& interp) {
  PolyCarrier out;
  for (const auto& u : p.monomials) {
    out.offsets.push_back(out.size);
    std::vector<std::size_t> rad;
    for (const auto& s : u.sorts) rad.push_back(interp.sizeOf(s));
    out.radices.push_back(rad);
    out.size += interp.sizeOf(u);
  }
  return out;
}

/// Checks every generator matrix against the carriers of its arity.
template <Semiring W>
void validateInterpretation(const MonSignature& sig, const Interpretation<W>& interp) {
  for (const auto& s : sig.sorts) interp.sizeOf(s);
  for (const auto& [name, g] : sig.gens) {
    auto it = interp.generators.find(name);
    if (it == interp.generators.end()) throw Error(ErrorKind::UnknownGenerator, "generator '" + name + "' is not interpreted");
    if (it->second.cols() != interp.sizeOf(g.ar) || it->second.rows() != interp.sizeOf(g.coar)) {
      throw Error(ErrorKind::DimensionMismatch, "matrix of '" + name + "' does not match its arity");
    }
  }
}

/// Structural evaluation of circuits and tapes, memoized on shared nodes.
template <Semiring W>
class Evaluator {
 public:
  explicit Evaluator(const Interpretation<W>& interp) : interp_(interp) {}

  const Matrix<W>& circuit(const CircuitTerm& c) {
    if (auto it = circuitMemo_.find(c.id()); it != circuitMemo_.end()) return it->second.second;
    Matrix<W> out = evalCircuitNode(c);
    return circuitMemo_.emplace(c.id(), std::pair{c, std::move(out)}).first->second.second;
  }

  const Matrix<W>& tape(const TapeTerm& t) {
    if (auto it = tapeMemo_.find(t.id()); it != tapeMemo_.end()) return it->second.second;
    Matrix<W> out = evalTapeNode(t);
    return tapeMemo_.emplace(t.id(), std::pair{t, std::move(out)}).first->second.second;
  }

 private:
  Matrix<W> evalCircuitNode(const CircuitTerm& c) {
    using K = CircuitTerm::Kind;
    switch (c.kind()) {
      case K::IdSort:
        return identityK<W>(interp_.sizeOf(c.sorts()[0]));
      case K::IdOne:
        return identityK<W>(1);
      case K::Gen: {
        const auto& g = c.generator();
        auto it = interp_.generators.find(g.name);
        if (it == interp_.generators.end()) throw Error(ErrorKind::UnknownGenerator, "generator '" + g.name + "' is not interpreted");
        if (it->second.cols() != interp_.sizeOf(g.ar) || it->second.rows() != interp_.sizeOf(g.coar)) {
          throw Error(ErrorKind::DimensionMismatch, "matrix of '" + g.name + "' does not match its arity");
        }
        return it->second;
      }
      case K::SymSorts:
        return symT<W>(interp_.sizeOf(c.sorts()[0]), interp_.sizeOf(c.sorts()[1]));
      case K::Copier:
        return copierK<W>(interp_.sizeOf(c.sorts()[0]));
      case K::Discharger:
        return dischargerK<W>(interp_.sizeOf(c.sorts()[0]));
      case K::Seq: {
        Matrix<W> l = circuit(c.left());
        Matrix<W> r = circuit(c.right());
        return composeK(l, r);
      }
      case K::Tensor: {
        Matrix<W> l = circuit(c.left());
        Matrix<W> r = circuit(c.right());
        return tensorK(l, r);
      }
    }
    return {};
  }

  Matrix<W> evalTapeNode(const TapeTerm& t) {
    using K = TapeTerm::Kind;
    switch (t.kind()) {
      case K::IdMon:
        return identityK<W>(interp_.sizeOf(t.monomial()));
      case K::IdZero:
        return Matrix<W>(0, 0);
      case K::TapeOf:
        return circuit(t.circuit());
      case K::SymPlus:
        return symP<W>(interp_.sizeOf(t.monomial(0)), interp_.sizeOf(t.monomial(1)));
      case K::Cobang:
        return cobangK<W>(interp_.sizeOf(t.monomial()));
      case K::Codiag:
        return codiagK<W>(interp_.sizeOf(t.monomial()));
      case K::OpInj:
        return opK(t.op(), interp_.model, interp_.sizeOf(t.monomial()));
      case K::Seq:
        return composeK(tape(t.left()), tape(t.right()));
      case K::Sum: {
        // Nested sums are concatenated once instead of pairwise.
        std::vector<TapeTerm> leaves;
        std::vector<TapeTerm> stack{t};
        while (!stack.empty()) {
          TapeTerm u = stack.back();
          stack.pop_back();
          if (u.kind() == K::Sum) {
            stack.push_back(u.right());
            stack.push_back(u.left());
          } else {
            leaves.push_back(u);
          }
        }
        std::vector<const Matrix<W>*> blocks;
        for (const auto& u : leaves) blocks.push_back(&tape(u));
        return directSumK(blocks);
      }
    }
    return {};
  }

  const Interpretation<W>& interp_;
  // Keys stay valid because each entry holds a reference to its node;
  // node-based maps keep returned references stable.
  std::unordered_map<const void*, std::pair<CircuitTerm, Matrix<W>>> circuitMemo_;
  std::unordered_map<const void*, std::pair<TapeTerm, Matrix<W>>> tapeMemo_;
};

template <Semiring W>
Matrix<W> evalCircuit(const CircuitTerm& c, const Interpretation<W>& interp) {
  return Evaluator<W>(interp).circuit(c);
}

template <Semiring W>
Matrix<W> evalTape(const TapeTerm& t, const Interpretation<W>& interp) {
  return Evaluator<W>(interp).tape(t);
}

/// κ_{P,Q}: Kronecker index of α♯(P)×α♯(Q) ↦ index in α♯(P⊗Q).
template <Semiring W>
Matrix<W> tensorBijection(const Polynomial& p, const Polynomial& q, const Interpretation<W>& interp) {
  PolyCarrier cp = carrierOf(p, interp);
  PolyCarrier cq = carrierOf(q, interp);
  PolyCarrier cpq = carrierOf(polyTensor(p, q), interp);
  std::size_t n = cp.size * cq.size;
  return Matrix<W>::function(n, n, [&](std::size_t k) {
    auto [i, u] = cp.decode(k / cq.size);
    auto [j, v] = cq.decode(k % cq.size);
    std::vector<std::size_t> tuple = u;
    tuple.insert(tuple.end(), v.begin(), v.end());
    return cpq.index(i * q.size() + j, tuple);
  });
}

/// Transports a Kronecker-encoded arrow f : |P|·|R| → |Q|·|S| to
/// α♯(P⊗R) → α♯(Q⊗S).
template <Semiring W>
Matrix<W> transportTensor(const Matrix<W>& f, const Polynomial& p, const Polynomial& r, const Polynomial& q,
                          const Polynomial& s, const Interpretation<W>& interp) {
  Matrix<W> in = transposeK(tensorBijection(p, r, interp));
  return composeK(composeK(in, f), tensorBijection(q, s, interp));
}

}  // namespace tapes
