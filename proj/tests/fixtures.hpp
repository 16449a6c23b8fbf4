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

// Shared interpretations for the tests: two sorts with small carriers, and
// the Boolean circuits with probabilistic choice.

#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "tapes/circuit.hpp"
#include "tapes/interp.hpp"
#include "tapes/kleisli.hpp"
#include "tapes/tape.hpp"
#include "tapes/theory.hpp"

namespace fixture {

using namespace tapes;

inline Monomial mono(std::initializer_list<const char*> names) {
  Monomial u;
  for (auto n : names) u.sorts.emplace_back(n);
  return u;
}

inline Polynomial poly(std::initializer_list<Monomial> ms) { return Polynomial(std::vector<Monomial>(ms)); }

inline Interpretation<Rational> pcaAB(std::vector<Rational> params = {Rational(1, 2), Rational(1, 3), Rational(2, 5)},
                                      std::size_t a = 2, std::size_t b = 3) {
  Interpretation<Rational> I{{}, {}, pcaModel(builtinTheory("PCA", params))};
  I.carriers[SortId("A")] = FinCarrier{a, {}};
  I.carriers[SortId("B")] = FinCarrier{b, {}};
  return I;
}

inline Interpretation<Natural> cmAB(std::size_t a = 2, std::size_t b = 3) {
  Interpretation<Natural> I{{}, {}, cmModel<Natural>(builtinTheory("CM"))};
  I.carriers[SortId("A")] = FinCarrier{a, {}};
  I.carriers[SortId("B")] = FinCarrier{b, {}};
  return I;
}

/// Booleans with AND, OR, NOT, constant flips, a partial MERGE and FAIL.
struct Boolean {
  MonSignature sig;
  Interpretation<Rational> I;
  SortId A{"A"};

  explicit Boolean(std::vector<Rational> params) : I{{}, {}, pcaModel(builtinTheory("PCA", params))} {
    using Q = Rational;
    sig.addSort(A);
    I.carriers[A] = FinCarrier{2, {"0", "1"}};
    Monomial a = mono({"A"}), aa = mono({"A", "A"}), one = Monomial::unit();
    auto add = [&](const char* name, const Monomial& ar, const Monomial& coar, Matrix<Q> m) {
      sig.addGenerator(GeneratorDecl{name, ar, coar});
      I.generators[name] = std::move(m);
    };
    add("AND", aa, a, Matrix<Q>::function(2, 4, [](std::size_t x) { return x == 3 ? 1 : 0; }));
    add("OR", aa, a, Matrix<Q>::function(2, 4, [](std::size_t x) { return x == 0 ? 0 : 1; }));
    add("NOT", a, a, Matrix<Q>::function(2, 2, [](std::size_t x) { return 1 - x; }));
    add("FLIP0", one, a, Matrix<Q>::function(2, 1, [](std::size_t) { return 0; }));
    add("FLIP1", one, a, Matrix<Q>::function(2, 1, [](std::size_t) { return 1; }));
    add("MERGE", aa, a, Matrix<Q>::fromRows(2, 4, {{Q(1), Q(0), Q(0), Q(0)}, {Q(0), Q(0), Q(0), Q(1)}}));
    add("FAIL", one, a, Matrix<Q>(2, 1));
  }

  CircuitTerm gen(const std::string& name) const { return CircuitTerm::gen(*sig.findGenerator(name)); }
  TapeTerm tape(const std::string& name) const { return TapeTerm::tapeOf(gen(name)); }

  /// ⟨+_p⟩_1 ; ([FLIP1] ⊕ [FLIP0]) ; ∇_A.
  TapeTerm flip(const Rational& p) const {
    return TapeTerm::seq(TapeTerm::seq(TapeTerm::opInj(ops::choice(p), Monomial::unit()),
                                       TapeTerm::sum(tape("FLIP1"), tape("FLIP0"))),
                         TapeTerm::codiag(mono({"A"})));
  }

  /// if x then y else z, from AND, NOT, OR.
  CircuitTerm multiplexer() const {
    using C = CircuitTerm;
    C id = C::idSort(A);
    C step1 = C::tensor(C::tensor(C::copier(A), id), id);
    C step2 = C::tensor(C::tensor(id, C::symSorts(A, A)), id);
    C step3 = C::tensor(C::tensor(gen("AND"), gen("NOT")), id);
    C step4 = C::tensor(id, gen("AND"));
    return C::seq(C::seq(C::seq(C::seq(step1, step2), step3), step4), gen("OR"));
  }
};

}  // namespace fixture
