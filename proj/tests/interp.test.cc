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

#include "tapes/interp.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace tapes;
using fixture::mono;
using fixture::poly;
using Q = Rational;
using MQ = Matrix<Rational>;
using C = CircuitTerm;
using T = TapeTerm;

TEST(interp, carriers) {
  auto I = fixture::pcaAB({Q(1, 2)}, 2, 2);
  PolyCarrier c = carrierOf(poly({mono({"A"}), mono({"B"})}), I);
  EXPECT_EQ(c.size, 4u);
  EXPECT_EQ(c.index(0, {1}), 1u);
  EXPECT_EQ(c.index(1, {0}), 2u);
  auto J = fixture::pcaAB({Q(1, 2)}, 2, 3);
  PolyCarrier d = carrierOf(Polynomial(mono({"A", "B"})), J);
  EXPECT_EQ(d.size, 6u);
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 3; ++y) {
      EXPECT_EQ(d.index(0, {x, y}), 3 * x + y);
      EXPECT_EQ(d.decode(3 * x + y), (std::pair<std::size_t, std::vector<std::size_t>>{0, {x, y}}));
    }
  EXPECT_EQ(carrierOf(Polynomial::zero(), J).size, 0u);
  Interpretation<Q> missing{{}, {}, pcaModel(builtinTheory("PCA", {Q(1, 2)}))};
  EXPECT_THROW(carrierOf(Polynomial(mono({"A"})), missing), Error);
}

TEST(interp, boolean_generators) {
  fixture::Boolean b({Q(1, 3)});
  MQ expectedAnd = MQ::fromRows(2, 4, {{Q(1), Q(1), Q(1), Q(0)}, {Q(0), Q(0), Q(0), Q(1)}});
  EXPECT_EQ(evalCircuit(b.gen("AND"), b.I), expectedAnd);
  EXPECT_EQ(evalCircuit(C::idOne(), b.I), MQ::identity(1));
  SortId a("A");
  MQ m = evalCircuit(C::seq(C::copier(a), C::tensor(b.gen("NOT"), C::idSort(a))), b.I);
  // x ↦ (¬x, x): 0 ↦ (1,0) = 2, 1 ↦ (0,1) = 1.
  EXPECT_EQ(m, MQ::function(4, 2, [](std::size_t x) { return x == 0 ? 2 : 1; }));
  validateInterpretation(b.sig, b.I);
}

TEST(interp, flip_and_probabilistic_gate) {
  fixture::Boolean b({Q(1, 3)});
  MQ flip = evalTape(b.flip(Q(1, 3)), b.I);
  EXPECT_EQ(flip, MQ::fromRows(2, 1, {{Q(2, 3)}, {Q(1, 3)}}));
  Monomial aa = mono({"A", "A"});
  T gate = T::seq(T::seq(T::opInj(ops::choice(Q(1, 3)), aa), T::sum(b.tape("AND"), b.tape("OR"))),
                  T::codiag(mono({"A"})));
  MQ expected = addK(scaleK(Q(1, 3), evalCircuit(b.gen("AND"), b.I)), scaleK(Q(2, 3), evalCircuit(b.gen("OR"), b.I)));
  EXPECT_EQ(evalTape(gate, b.I), expected);
  EXPECT_EQ(evalTape(T::idZero(), b.I), MQ(0, 0));
}

TEST(interp, op_injection_blocks) {
  auto I = fixture::pcaAB();
  Monomial ab = mono({"A", "B"});
  EXPECT_EQ(evalTape(T::opInj(ops::choice(Q(2, 5)), ab), I), opK(ops::choice(Q(2, 5)), I.model, 6));
  // ⟨+_p⟩_A: x ↦ p at (0,x) and 1−p at (1,x).
  MQ m = evalTape(T::opInj(ops::choice(Q(1, 3)), mono({"A"})), I);
  for (std::size_t x = 0; x < 2; ++x) {
    EXPECT_EQ(m.at(x, x), Q(1, 3));
    EXPECT_EQ(m.at(2 + x, x), Q(2, 3));
  }
}

TEST(interp, dimension_checks) {
  fixture::Boolean b({Q(1, 2)});
  b.I.generators["AND"] = MQ::identity(2);
  EXPECT_THROW(validateInterpretation(b.sig, b.I), Error);
  EXPECT_THROW(evalCircuit(b.gen("AND"), b.I), Error);
}

TEST(interp, tensor_bijection_is_a_permutation) {
  auto I = fixture::pcaAB();
  std::vector<Polynomial> ps{Polynomial::zero(), poly({mono({"A"})}), poly({mono({"A"}), mono({"B"})}),
                             poly({Monomial::unit(), mono({"B", "A"})})};
  for (const auto& p : ps)
    for (const auto& q : ps) {
      MQ k = tensorBijection(p, q, I);
      EXPECT_TRUE(isPermutation(k));
      EXPECT_EQ(k.cols(), I.sizeOf(p) * I.sizeOf(q));
    }
  // (A ⊕ B)(A ⊕ B): (inr 1, inl 0) lands in the BA block at tuple (1, 0).
  Polynomial p = poly({mono({"A"}), mono({"B"})});
  MQ k = tensorBijection(p, p, I);
  PolyCarrier target = carrierOf(polyTensor(p, p), I);
  EXPECT_EQ(k.at(target.index(2, {1, 0}), (2 + 1) * 5 + 0), Q(1));
}

TEST(interp, evaluation_is_memoized_consistently) {
  auto I = fixture::pcaAB();
  T shared = T::opInj(ops::choice(Q(1, 2)), mono({"A"}));
  T t = T::seq(T::seq(shared, T::codiag(mono({"A"}))), T::seq(shared, T::codiag(mono({"A"}))));
  Evaluator<Q> ev(I);
  EXPECT_EQ(ev.tape(t), evalTape(t, I));
  EXPECT_EQ(ev.tape(t), MQ::identity(2));
}
