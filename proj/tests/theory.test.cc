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

#include "tapes/theory.hpp"

#include <gtest/gtest.h>

#include "tapes/kleisli.hpp"

using namespace tapes;

namespace {

SigmaTerm x(std::size_t i) { return SigmaTerm::var(i); }
SigmaTerm mix(const char* p, SigmaTerm a, SigmaTerm b) {
  return SigmaTerm::app(ops::choice(parseRational(p)), {std::move(a), std::move(b)});
}
SigmaTerm star() { return SigmaTerm::app(ops::star(), {}); }

bool hasEquation(const AlgebraicTheory& th, const SigmaTerm& l, const SigmaTerm& r) {
  for (const auto& eq : th.equations)
    if (eq.lhs == l && eq.rhs == r) return true;
  return false;
}

}  // namespace

TEST(theory, check_term) {
  EXPECT_NO_THROW(checkTerm(x(1), 1));
  try {
    checkTerm(mix("1/2", x(1), x(3)), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfContext);
  }
  EXPECT_NO_THROW(checkTerm(mix("1/3", star(), x(2)), 2));
  SigmaTerm bad = SigmaTerm::app(ops::choice(Rational(1, 2)), {x(1)});
  try {
    checkTerm(bad, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ArityMismatch);
  }
}

TEST(theory, substitute) {
  SigmaTerm s = mix("1/2", star(), x(2));
  EXPECT_EQ(substitute(x(1), {s}), s);
  EXPECT_EQ(substitute(mix("1/3", x(1), x(2)), {x(2), x(1)}), mix("1/3", x(2), x(1)));
  EXPECT_EQ(substitute(mix("1/4", x(1), x(1)), {star()}), mix("1/4", star(), star()));
  EXPECT_THROW(substitute(x(2), {star()}), Error);
}

TEST(theory, substitute_is_associative_and_unital) {
  SigmaTerm t = mix("1/3", x(1), mix("1/2", x(2), x(1)));
  std::vector<SigmaTerm> sigma{mix("2/5", x(2), x(1)), star()};
  std::vector<SigmaTerm> tau{x(2), mix("1/2", x(1), x(1))};
  std::vector<SigmaTerm> composed;
  for (const auto& s : sigma) composed.push_back(substitute(s, tau));
  EXPECT_EQ(substitute(substitute(t, sigma), tau), substitute(t, composed));
  EXPECT_EQ(substitute(t, {x(1), x(2)}), t);
}

TEST(theory, pca_equations) {
  AlgebraicTheory th = builtinTheory("PCA", {Rational(1, 2), Rational(1, 3)});
  EXPECT_TRUE(hasEquation(th, mix("1/2", x(1), x(2)), mix("1/2", x(2), x(1))));
  // p = 1/3, q = 1/2: inner parameter (1/6)/(5/6) = 1/5, outer pq = 1/6.
  EXPECT_TRUE(hasEquation(th, mix("1/3", mix("1/2", x(1), x(2)), x(3)),
                          mix("1/6", x(1), mix("1/5", x(2), x(3)))));
  EXPECT_TRUE(th.hasOp(ops::choice(Rational(1, 5))));
  EXPECT_TRUE(th.hasOp(ops::star()));
  EXPECT_TRUE(hasEquation(th, mix("1/3", x(1), x(1)), x(1)));
}

TEST(theory, pca_rejects_out_of_range_parameters) {
  for (Rational p : {Rational(0), Rational(1), Rational(3, 2)}) {
    try {
      builtinTheory("PCA", {p});
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParamOutOfRange);
    }
  }
}

TEST(theory, cm_equations) {
  AlgebraicTheory th = builtinTheory("CM");
  auto add = [](SigmaTerm a, SigmaTerm b) { return SigmaTerm::app(ops::plus(), {a, b}); };
  EXPECT_TRUE(hasEquation(th, add(add(x(1), x(2)), x(3)), add(x(1), add(x(2), x(3)))));
  EXPECT_TRUE(hasEquation(th, add(x(1), x(2)), add(x(2), x(1))));
  EXPECT_EQ(th.ops.size(), 2u);
}

TEST(theory, model_soundness) {
  AlgebraicTheory pca = builtinTheory("PCA", {Rational(1, 2), Rational(1, 3), Rational(2, 5)});
  auto model = pcaModel(pca);
  EXPECT_TRUE(modelSoundness(model).empty());
  auto lhs = evalVector(mix("1/2", mix("1/3", x(1), x(2)), x(3)), 3, model);
  EXPECT_EQ(lhs, (std::vector<Rational>{Rational(1, 6), Rational(1, 3), Rational(1, 2)}));
  EXPECT_EQ(evalVector(mix("1/3", x(1), x(1)), 1, model), std::vector<Rational>{Rational(1)});

  auto cm = cmModel<Natural>(builtinTheory("CM"));
  EXPECT_TRUE(modelSoundness(cm).empty());
  auto add = SigmaTerm::app(ops::plus(), {x(2), x(1)});
  EXPECT_EQ(evalVector(add, 2, cm), (std::vector<Natural>{1, 1}));
}

TEST(theory, unsound_model_is_reported) {
  AlgebraicTheory pca = builtinTheory("PCA", {Rational(1, 3)});
  auto model = pcaModel(pca);
  model.weights[ops::choice(Rational(1, 3))] = {Rational(1, 2), Rational(1, 2)};
  EXPECT_FALSE(modelSoundness(model).empty());
}
