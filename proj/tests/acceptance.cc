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


// Acceptance driver: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tapes/frontend/cli.hpp"
#include "tapes/suites.hpp"

using namespace tapes;
using Q = Rational;

namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

// Runs one criterion, prints its line and returns its verdict.
bool criterion(int n, const std::string& title, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  char time[32];
  std::snprintf(time, sizeof time, "%.2fs", seconds(start));
  std::cout << "criterion " << n << " " << (o.pass ? "PASS" : "FAIL") << "  " << title << "  [" << time << "]";
  if (!o.detail.empty()) std::cout << "  " << o.detail;
  std::cout << std::endl;
  return o.pass;
}

std::string summary(const Report& r) {
  return std::to_string(r.passed()) + "/" + std::to_string(r.cases.size()) + " cases, " +
         std::to_string(r.byRow().size()) + " rows";
}

void requireReport(Outcome& o, const std::string& name, const Report& r) {
  if (!r.ok()) {
    for (const auto& c : r.cases) {
      if (!c.pass) {
        o.require(false, name + ": " + c.id + " " + c.detail);
        break;
      }
    }
  }
  if (o.pass) o.detail += (o.detail.empty() ? "" : "; ") + name + " " + summary(r);
}

const std::vector<Q> kParams{Q(1, 2), Q(1, 3), Q(2, 5)};

Outcome objects() {
  Outcome o;
  std::mt19937_64 rng(2026);
  std::vector<std::string> sorts{"A", "B", "C"};
  std::vector<ObjTerm> terms;
  for (int i = 0; i < 1000; ++i) terms.push_back(oracle::randomObjTerm(rng, 6, sorts));

  auto start = std::chrono::steady_clock::now();
  std::vector<Polynomial> normal;
  for (const auto& t : terms) {
    Polynomial p = normalize(t);
    o.require(normalize(embed(p)) == p, "not idempotent on " + toString(t));
    normal.push_back(std::move(p));
  }
  for (std::size_t i = 0; i + 1 < normal.size(); ++i) {
    const auto& p = normal[i];
    const auto& q = normal[i + 1];
    o.require(polyTensor(p, q) == normalize(ObjTerm::tensor(embed(p), embed(q))),
              "polyTensor differs at " + toString(p) + " , " + toString(q));
  }
  double t = seconds(start);
  o.require(t < 1.0, "normalizer took " + std::to_string(t) + "s");

  // Independent denotation of the unrewritten tree.
  for (std::size_t i = 0; i < terms.size(); ++i) {
    o.require(oracle::denote(oracle::fromObj(terms[i])) == oracle::fromPolynomial(normal[i]),
              "oracle disagrees on " + toString(terms[i]));
  }
  if (o.pass) o.detail = "1000 terms, normalizer " + std::to_string(t).substr(0, 5) + "s";
  return o;
}

Outcome coherence() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  requireReport(o, "rational", matrixCoherenceSuite<Q>(7));
  o.require(seconds(start) < 5.0, "coherence took longer than 5s");
  return o;
}

Outcome axioms() {
  Outcome o;
  Bounds b;
  b.instances = 5;
  auto start = std::chrono::steady_clock::now();
  requireReport(o, "PCA", axiomSuite(fixture::pcaAB(kParams), b));
  requireReport(o, "CM", axiomSuite(fixture::cmAB(), b));
  o.require(seconds(start) < 60.0, "axiom suites took longer than 60s");
  return o;
}

Outcome whiskers() {
  Outcome o;
  Bounds b;
  b.instances = 3;
  Report pca = whiskerSuite(fixture::pcaAB(kParams), b);
  Report cm = whiskerSuite(fixture::cmAB(), b);
  for (int w = 1; w <= 18; ++w) {
    std::string law = "W" + std::to_string(w);
    bool seen = false;
    for (const auto& [row, counts] : pca.byRow()) {
      seen = seen || row == law || row.rfind(law + ".", 0) == 0;
    }
    o.require(seen, "no cases for " + law);
  }
  requireReport(o, "PCA", pca);
  requireReport(o, "CM", cm);
  return o;
}

Outcome fccd() {
  Outcome o;
  Bounds b;
  requireReport(o, "PCA", fccdSuite(fixture::pcaAB(kParams, 2, 3), b));
  requireReport(o, "CM", fccdSuite(fixture::cmAB(3, 2), b));
  return o;
}

Outcome propositions() {
  Outcome o;
  Bounds b;
  auto pca = fixture::pcaAB(kParams);
  auto cm = fixture::cmAB();
  requireReport(o, "codiag-tensor", codiagTensorSuite(pca, b));
  requireReport(o, "codiag-tensor/CM", codiagTensorSuite(cm, b));
  requireReport(o, "copy-merge", copyMergeSuite(pca, b));
  requireReport(o, "copy-merge/CM", copyMergeSuite(cm, b));
  requireReport(o, "enrichment", enrichmentSuite(pca, b));
  requireReport(o, "enrichment/CM", enrichmentSuite(cm, b));
  requireReport(o, "opnat", opNaturalitySuite(pca, b));
  requireReport(o, "opnat/CM", opNaturalitySuite(cm, b));
  requireReport(o, "distributors", opDistributorSuite(pca, b));
  return o;
}

Outcome soundness() {
  Outcome o;
  auto pca = pcaModel(builtinTheory("PCA", kParams));
  auto cm = cmModel<Natural>(builtinTheory("CM"));
  for (const auto& label : modelSoundness(pca)) o.require(false, "PCA " + label);
  for (const auto& label : modelSoundness(cm)) o.require(false, "CM " + label);

  // The associativity rows against hand-computed weights of
  // (x1 +_q x2) +_p x3 = pq x1 + p(1-q) x2 + (1-p) x3.
  std::size_t assoc = 0;
  for (const auto& eq : pca.theory.equations) {
    if (eq.label.rfind("PCA.assoc", 0) != 0) continue;
    ++assoc;
    const auto& w = pca.weightsOf(eq.lhs.op());
    Q p = w[0];
    Q q = pca.weightsOf(eq.lhs.args()[0].op())[0];
    std::vector<Q> expected{p * q, p * (1 - q), 1 - p};
    o.require(evalVector(eq.rhs, 3, pca) == expected, eq.label + " weights");
  }
  o.require(assoc == kParams.size() * kParams.size(), "missing associativity rows");
  if (o.pass) {
    o.detail = std::to_string(pca.theory.equations.size()) + " PCA and " +
               std::to_string(cm.theory.equations.size()) + " CM equations";
  }
  return o;
}

Outcome example() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  for (const Q& p : kParams) {
    fixture::Boolean b({p});
    const auto& I = b.I;
    std::string at = " at p=" + p.get_str();
    using T = TapeTerm;
    Monomial a = fixture::mono({"A"}), aa = fixture::mono({"A", "A"});

    Matrix<Q> flip = evalTape(b.flip(p), I);
    o.require(flip.rows() == 2 && flip.cols() == 1 && flip.at(0, 0) == 1 - p && flip.at(1, 0) == p, "flip" + at);

    T gate = T::seq(T::seq(T::opInj(ops::choice(p), aa), T::sum(b.tape("AND"), b.tape("OR"))), T::codiag(a));
    Matrix<Q> g = evalTape(gate, I);
    Matrix<Q> andM = I.generators.at("AND"), orM = I.generators.at("OR");
    for (std::size_t y = 0; y < 2; ++y)
      for (std::size_t x = 0; x < 4; ++x)
        o.require(g.at(y, x) == p * andM.at(y, x) + (1 - p) * orM.at(y, x), "gate entry" + at);

    T mux = T::tapeOf(b.multiplexer());
    auto muxComposite = [&](const std::string& c, const std::string& d) {
      return T::seq(tensorTape(tensorTape(b.flip(p), b.tape(c)), b.tape(d)), mux);
    };
    auto choice = [&](const std::string& c, const std::string& d) {
      return T::seq(T::seq(T::opInj(ops::choice(p), Monomial::unit()), T::sum(b.tape(c), b.tape(d))), T::codiag(a));
    };

    Matrix<Q> failing = evalTape(muxComposite("FLIP1", "FAIL"), I);
    o.require(failing == Matrix<Q>(2, 1), "multiplexer with fail is not zero" + at);
    Matrix<Q> chosen = evalTape(choice("FLIP1", "FAIL"), I);
    o.require(chosen.at(0, 0) == 0 && chosen.at(1, 0) == p, "tape choice with fail is not p·c" + at);

    for (const char* c : {"FLIP0", "FLIP1"})
      for (const char* d : {"FLIP0", "FLIP1"})
        o.require(semEq(muxComposite(c, d), choice(c, d), I).equal(),
                  std::string("composites differ for c=") + c + " d=" + d + at);
  }
  o.require(seconds(start) < 1.0, "took longer than 1s");
  return o;
}

Outcome frontendCorpus() {
  Outcome o;
  using namespace tapes::frontend;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(TAPES_SAMPLES_DIR))
    if (e.path().extension() == ".tape") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  o.require(files.size() >= 10, "corpus has " + std::to_string(files.size()) + " files");

  auto runCli = [](std::vector<std::string> args, std::string* out = nullptr) {
    std::ostringstream os, es;
    int code = run(std::move(args), os, es);
    if (out) *out = os.str();
    return code;
  };

  std::size_t renders = 0;
  for (const auto& f : files) {
    std::ifstream in(f);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    std::string printed = print(parseModule(text));
    o.require(normalizeWhitespace(printed) == normalizeWhitespace(text), "round trip " + f.filename().string());
    Module m = loadModule(text);
    for (const auto& name : m.defOrder) {
      std::string first, second;
      int c1 = runCli({"render", f.string(), "--term", name}, &first);
      int c2 = runCli({"render", f.string(), "--term", name}, &second);
      o.require(c1 == 0 && c2 == 0 && first == second && !first.empty(),
                "render " + f.filename().string() + " " + name);
      ++renders;
    }
  }

  std::string boolean = (fs::path(TAPES_SAMPLES_DIR) / "boolean.tape").string();
  auto eq = [&](const std::string& l, const std::string& r) {
    return runCli({"eq", boolean, "--left", l, "--right", r, "--interp", "Bool"});
  };
  o.require(eq("muxDet", "choiceDet") == 0, "eq on equal terms");
  o.require(eq("muxFail", "choiceFail") == 1, "eq on unequal terms");
  o.require(eq("flip", "gate") == 3, "eq on differently typed terms");
  o.require(runCli({"eq", boolean, "--left", "flip"}) == 2, "eq with missing options");
  if (o.pass) {
    o.detail = std::to_string(files.size()) + " files, " + std::to_string(renders) + " renders";
  }
  return o;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= criterion(1, "object normalizer", objects);
  ok &= criterion(2, "matrix coherence", coherence);
  ok &= criterion(3, "axiom suites", axioms);
  ok &= criterion(4, "whiskering laws", whiskers);
  ok &= criterion(5, "copier and discharger coherence", fccd);
  ok &= criterion(6, "derived equalities", propositions);
  ok &= criterion(7, "model soundness", soundness);
  ok &= criterion(8, "probabilistic circuits", example);
  ok &= criterion(9, "frontend", frontendCorpus);
  return ok ? 0 : 1;
}
