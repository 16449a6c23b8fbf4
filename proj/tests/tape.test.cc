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

#include "tapes/tape.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tapes/interp.hpp"
#include "tapes/suites.hpp"

using namespace tapes;
using fixture::mono;
using fixture::poly;
using Q = Rational;
using MQ = Matrix<Rational>;
using C = CircuitTerm;
using T = TapeTerm;

namespace {

const Monomial kA = mono({"A"});
const Monomial kB = mono({"B"});

TapeType ty(const Polynomial& d, const Polynomial& c) { return TapeType{d, c}; }

}  // namespace

TEST(tape, primitive_types) {
  auto th = builtinTheory("PCA", {Q(1, 3)});
  MonSignature sig;
  sig.addSort(SortId("A"));
  sig.addSort(SortId("B"));
  EXPECT_EQ(typeOfTape(T::codiag(kA), sig, th), ty(poly({kA, kA}), kA));
  EXPECT_EQ(typeOfTape(T::opInj(ops::choice(Q(1, 3)), kA), sig, th), ty(kA, poly({kA, kA})));
  EXPECT_EQ(typeOfTape(T::idZero(), sig, th), ty(Polynomial::zero(), Polynomial::zero()));
  try {
    typeOfTape(T::opInj(ops::choice(Q(1, 7)), kA), sig, th);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownOp);
  }
  EXPECT_THROW(typeOfTape(T::seq(T::codiag(kA), T::codiag(kA)), sig, th), Error);
}

TEST(tape, structural_plus) {
  Monomial c = mono({"C"});
  Polynomial abc = poly({kA, kB, c});
  EXPECT_EQ(inferTapeType(structuralPlus(PlusStructure::Codiag, abc)), ty(plus(abc, abc), abc));
  Polynomial q = poly({kA, mono({"B", "A"})});
  EXPECT_EQ(toString(structuralPlus(PlusStructure::SymPlus, Polynomial::zero(), q)), toString(identityTape(q)));
  auto I = fixture::pcaAB();
  Polynomial p = poly({kA, mono({"B", "B"})});
  EXPECT_EQ(evalTape(structuralPlus(PlusStructure::Id, p), I), MQ::identity(11));
  EXPECT_EQ(inferTapeType(cobangTape(p)), ty(Polynomial::zero(), p));
}

TEST(tape, distributor) {
  auto I = fixture::pcaAB();
  Polynomial q = poly({kA, kB}), r = poly({mono({"A", "B"})});
  EXPECT_EQ(toString(distributor(kA, q, r)), toString(identityTape(polyTensor(kA, plus(q, r)))));
  auto monos = monomialsUpTo({SortId("A"), SortId("B")}, 1);
  auto polys = polynomialsUpTo(monos, 2);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 60; ++i) {
    const auto& p = polys[rng() % polys.size()];
    const auto& q2 = polys[rng() % polys.size()];
    const auto& r2 = polys[rng() % polys.size()];
    T d = distributor(p, q2, r2);
    EXPECT_EQ(inferTapeType(d), ty(polyTensor(p, plus(q2, r2)), plus(polyTensor(p, q2), polyTensor(p, r2))));
    MQ m = evalTape(T::seq(d, distributor(p, q2, r2, true)), I);
    EXPECT_EQ(m, MQ::identity(m.cols()));
    EXPECT_TRUE(isPermutation(evalTape(d, I)));
  }
}

TEST(tape, tensor_symmetry) {
  auto I = fixture::pcaAB();
  EXPECT_EQ(toString(symTensorPoly(poly({kA, kB}), Polynomial::zero())), "id0");
  EXPECT_EQ(evalTape(symTensorPoly(kA, kB), I), symT<Q>(2, 3));
  auto polys = polynomialsUpTo(monomialsUpTo({SortId("A"), SortId("B")}, 1), 2);
  for (const auto& p : polys)
    for (const auto& q : polys) {
      MQ m = evalTape(T::seq(symTensorPoly(p, q), symTensorPoly(q, p)), I);
      EXPECT_EQ(m, MQ::identity(m.cols()));
    }
}

TEST(tape, op_injection_over_polynomials) {
  auto I = fixture::pcaAB();
  OpSymbol f = ops::choice(Q(1, 3));
  EXPECT_EQ(toString(opInjPoly(f, Polynomial::zero())), "id0");
  Polynomial p = poly({kA, mono({"B", "A"})});
  EXPECT_EQ(inferTapeType(opInjPoly(f, p)), ty(p, power(p, 2)));
  EXPECT_EQ(evalTape(opInjPoly(f, p), I), opK(f, I.model, 8));
  EXPECT_EQ(evalTape(opInjPoly(ops::star(), p), I), MQ(0, 8));
  // Naturality against a random h : P → P.
  Instance<Q> in(I, 4);
  T h = in.tape(p, p);
  EXPECT_TRUE(in.check(T::seq(h, opInjPoly(f, p)), T::seq(opInjPoly(f, p), T::sum(h, h))).equal());
}

TEST(tape, whiskering_clauses) {
  auto I = fixture::pcaAB();
  Instance<Q> in(I, 8);
  C c = in.gen(kA, kB);
  Monomial u = mono({"B", "A"});
  EXPECT_EQ(toString(whiskerLeft(u, T::tapeOf(c))), toString(T::tapeOf(C::tensor(circuits::identity(u), c))));
  EXPECT_EQ(toString(whiskerLeft(Polynomial::zero(), T::tapeOf(c))), "id0");
  EXPECT_EQ(toString(whiskerRight(T::tapeOf(c), Polynomial::zero())), "id0");
  OpSymbol f = ops::choice(Q(1, 2));
  EXPECT_EQ(toString(whiskerRight(T::opInj(f, kA), u)), toString(T::opInj(f, concat(kA, u))));
  EXPECT_EQ(toString(whiskerLeft(u, T::codiag(kA))), toString(T::codiag(concat(u, kA))));
}

TEST(tape, tensor_of_tapes) {
  auto I = fixture::pcaAB();
  auto polys = polynomialsUpTo(monomialsUpTo({SortId("A"), SortId("B")}, 1), 2);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    Instance<Q> in(I, 100 + i);
    const auto& p = polys[rng() % polys.size()];
    const auto& q = polys[rng() % polys.size()];
    const auto& r = polys[rng() % polys.size()];
    const auto& s = polys[rng() % polys.size()];
    T t1 = in.tape(p, q), t2 = in.tape(r, s);
    EXPECT_EQ(inferTapeType(tensorTape(t1, t2)), ty(polyTensor(p, r), polyTensor(q, s)));
    EXPECT_TRUE(in.check(tensorTape(identityTape(p), t2), whiskerLeft(p, t2)).equal());
    T seqForm = T::seq(tensorTape(t1, identityTape(r)), tensorTape(identityTape(q), t2));
    EXPECT_TRUE(in.check(seqForm, tensorTape(t1, t2)).equal());
    Evaluator<Q> ev(in.interp());
    EXPECT_EQ(ev.tape(tensorTape(t1, t2)), transportTensor(tensorK(ev.tape(t1), ev.tape(t2)), p, r, q, s, in.interp()));
  }
}

TEST(tape, term_tapes) {
  auto I = fixture::pcaAB({Q(1, 3), Q(1, 2)});
  EXPECT_EQ(evalTape(termTape(SigmaTerm::var(1), 1, kA), I), MQ::identity(2));
  OpSymbol p3 = ops::choice(Q(1, 3)), p2 = ops::choice(Q(1, 2));
  SigmaTerm mix = SigmaTerm::app(p3, {SigmaTerm::var(1), SigmaTerm::var(2)});
  EXPECT_EQ(evalTape(termTape(mix, 2, kA), I), evalTape(T::opInj(p3, kA), I));
  // (star +_p x1) +_q x1 with p = 1/3, q = 1/2: weight q(1−p) + (1−q) = 5/6 on x.
  SigmaTerm inner = SigmaTerm::app(p3, {SigmaTerm::app(ops::star(), {}), SigmaTerm::var(1)});
  SigmaTerm t = SigmaTerm::app(p2, {inner, SigmaTerm::var(1)});
  EXPECT_EQ(inferTapeType(termTape(t, 1, kA)), ty(kA, kA));
  EXPECT_EQ(evalTape(termTape(t, 1, kA), I), scaleK(Q(5, 6), MQ::identity(2)));
  EXPECT_THROW(termTape(SigmaTerm::var(2), 1, kA), Error);
}

TEST(tape, copier_and_discharger_of_polynomials) {
  auto I = fixture::pcaAB();
  Polynomial ab = poly({kA, kB});
  EXPECT_EQ(inferTapeType(cdPoly(CdKind::Copier, ab)),
            ty(ab, poly({mono({"A", "A"}), mono({"A", "B"}), mono({"B", "A"}), mono({"B", "B"})})));
  EXPECT_EQ(evalTape(cdPoly(CdKind::Discharger, ab), I), dischargerK<Q>(5));
  EXPECT_EQ(toString(cdPoly(CdKind::Copier, Polynomial::zero())), "id0");
  EXPECT_EQ(inferTapeType(cdPoly(CdKind::Discharger, Polynomial::zero())), ty(Polynomial::zero(), Monomial::unit()));
  MQ cp = evalTape(cdPoly(CdKind::Copier, ab), I);
  EXPECT_EQ(cp, composeK(copierK<Q>(5), tensorBijection(ab, ab, I)));
}

TEST(tape, iterated_codiagonal) {
  auto I = fixture::pcaAB();
  Polynomial p = poly({kA, kB});
  EXPECT_EQ(toString(codiagN(p, 0)), toString(cobangTape(p)));
  EXPECT_EQ(toString(codiagN(p, 1)), toString(identityTape(p)));
  MQ m = evalTape(codiagN(p, 3), I);
  EXPECT_EQ(m.cols(), 15u);
  for (std::size_t x = 0; x < 15; ++x) EXPECT_EQ(m.at(x % 5, x), Q(1));
}

TEST(tape, printing) {
  OpSymbol f = ops::choice(Q(1, 3));
  Monomial ab = mono({"A", "B"});
  EXPECT_EQ(toString(T::opInj(f, ab)), "op<+_1/3>@AB");
  EXPECT_EQ(toString(T::sum(T::codiag(kA), T::cobang(Monomial::unit()))), "(codiag@A (+) cobang@1)");
  EXPECT_EQ(toString(T::symPlus(kA, ab)), "sym+@A,AB");
}
