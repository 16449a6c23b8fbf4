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

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "tapes/circuit.hpp"
#include "tapes/error.hpp"
#include "tapes/interp.hpp"
#include "tapes/kleisli.hpp"
#include "tapes/objects.hpp"
#include "tapes/tape.hpp"
#include "tapes/theory.hpp"

namespace tapes {

// ---------------------------------------------------------------------------
// Semantic equality.

struct Witness {
  std::size_t row = 0;
  std::size_t col = 0;
  std::string lhs;
  std::string rhs;
};

enum class EqStatus { Equal, Unequal, TypeError };

struct EqResult {
  EqStatus status = EqStatus::Equal;
  std::optional<Witness> witness;
  std::string message;

  bool equal() const { return status == EqStatus::Equal; }

  std::string describe() const {
    switch (status) {
      case EqStatus::Equal:
        return "equal";
      case EqStatus::Unequal:
        return "row=" + std::to_string(witness->row) + " col=" + std::to_string(witness->col) +
               " lhs=" + witness->lhs + " rhs=" + witness->rhs;
      case EqStatus::TypeError:
        return "type error: " + message;
    }
    return message;
  }
};

/// Exact comparison; the witness is the first differing entry, columns
/// scanned left to right and rows top to bottom within a column.
template <Semiring W>
EqResult compareMatrices(const Matrix<W>& a, const Matrix<W>& b) {
  EqResult r;
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    r.status = EqStatus::TypeError;
    r.message = "dimension mismatch " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                std::to_string(b.rows()) + "x" + std::to_string(b.cols());
    return r;
  }
  for (std::size_t x = 0; x < a.cols(); ++x) {
    if (a.column(x) == b.column(x)) continue;
    for (std::size_t y = 0; y < a.rows(); ++y) {
      W u = a.at(y, x);
      W v = b.at(y, x);
      if (!(u == v)) {
        r.status = EqStatus::Unequal;
        r.witness = Witness{y, x, formatWeight(u), formatWeight(v)};
        return r;
      }
    }
  }
  return r;
}

template <Semiring W>
EqResult semEq(const TapeTerm& lhs, const TapeTerm& rhs, const Interpretation<W>& interp) {
  EqResult r;
  TapeType tl, tr;
  try {
    tl = inferTapeType(lhs);
    tr = inferTapeType(rhs);
  } catch (const Error& e) {
    r.status = EqStatus::TypeError;
    r.message = e.what();
    return r;
  }
  if (!(tl == tr)) {
    r.status = EqStatus::TypeError;
    r.message = toString(tl.dom) + " -> " + toString(tl.cod) + " vs " + toString(tr.dom) + " -> " + toString(tr.cod);
    return r;
  }
  Evaluator<W> ev(interp);
  return compareMatrices(ev.tape(lhs), ev.tape(rhs));
}

// ---------------------------------------------------------------------------
// Reports.

struct CaseResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

/// Line-oriented result list: "<id> PASS" or "<id> FAIL <detail>".
struct Report {
  std::vector<CaseResult> cases;

  void add(std::string id, bool pass, std::string detail = {}) {
    cases.push_back({std::move(id), pass, std::move(detail)});
  }

  void merge(const Report& other) { cases.insert(cases.end(), other.cases.begin(), other.cases.end()); }

  std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return c.pass; }));
  }
  std::size_t failed() const { return cases.size() - passed(); }
  bool ok() const { return failed() == 0; }

  /// Case counts per row name (the id up to the first '['): (passed, total).
  std::map<std::string, std::pair<std::size_t, std::size_t>> byRow() const {
    std::map<std::string, std::pair<std::size_t, std::size_t>> out;
    for (const auto& c : cases) {
      auto& slot = out[c.id.substr(0, c.id.find('['))];
      slot.first += c.pass ? 1 : 0;
      slot.second += 1;
    }
    return out;
  }

  void write(std::ostream& os) const {
    for (const auto& c : cases) {
      os << c.id << (c.pass ? " PASS" : " FAIL");
      if (!c.pass && !c.detail.empty()) os << ' ' << c.detail;
      os << '\n';
    }
  }
};

/// Enumeration bounds and seeding of the suites.
struct Bounds {
  std::size_t sorts = 2;
  std::size_t monomialLength = 2;
  std::size_t polynomialLength = 2;
  std::size_t instances = 5;
  std::uint64_t seed = 1;
  /// Object tuples beyond this count are sampled instead of enumerated.
  std::size_t maxAssignments = 343;
  /// Sample size for rows quantified over several polynomials.
  std::size_t polynomialAssignments = 40;
};

// ---------------------------------------------------------------------------
// Random instantiation.

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline void collectGenerators(const CircuitTerm& c, std::set<std::string>& out) {
  using K = CircuitTerm::Kind;
  if (c.kind() == K::Gen) out.insert(c.generator().name);
  if (c.kind() == K::Seq || c.kind() == K::Tensor) {
    collectGenerators(c.left(), out);
    collectGenerators(c.right(), out);
  }
}

inline void collectGenerators(const TapeTerm& t, std::set<std::string>& out) {
  using K = TapeTerm::Kind;
  if (t.kind() == K::TapeOf) collectGenerators(t.circuit(), out);
  if (t.kind() == K::Seq || t.kind() == K::Sum) {
    collectGenerators(t.left(), out);
    collectGenerators(t.right(), out);
  }
}

}  // namespace detail

/// Substochastic columns for rationals (numerators 0..3 over their sum plus
/// a slack of 0..2); entries 0..2 for naturals.
template <Semiring W>
Matrix<W> randomMatrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::vector<std::vector<W>> dense(rows, std::vector<W>(cols, W(0)));
  for (std::size_t x = 0; x < cols; ++x) {
    if constexpr (std::is_same_v<W, Rational>) {
      std::vector<long> num(rows);
      long total = 0;
      for (auto& n : num) total += n = static_cast<long>(detail::pick(rng, 4));
      total += static_cast<long>(detail::pick(rng, 3));
      if (total == 0) continue;
      for (std::size_t y = 0; y < rows; ++y) dense[y][x] = Rational(num[y], total);
    } else {
      for (std::size_t y = 0; y < rows; ++y) dense[y][x] = W(static_cast<long>(detail::pick(rng, 3)));
    }
  }
  for (auto& row : dense)
    for (auto& w : row) {
      if constexpr (std::is_same_v<W, Rational>) w.canonicalize();
    }
  return Matrix<W>::fromRows(rows, cols, dense);
}

/// All monomials of length ≤ len over the given sorts, shortest first.
inline std::vector<Monomial> monomialsUpTo(const std::vector<SortId>& sorts, std::size_t len) {
  std::vector<Monomial> out{Monomial::unit()};
  std::vector<Monomial> layer{Monomial::unit()};
  for (std::size_t l = 1; l <= len && !sorts.empty(); ++l) {
    std::vector<Monomial> next;
    for (const auto& u : layer)
      for (const auto& s : sorts) {
        Monomial v = u;
        v.sorts.push_back(s);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

/// All polynomials with ≤ len monomials drawn from monos, 0 first.
inline std::vector<Polynomial> polynomialsUpTo(const std::vector<Monomial>& monos, std::size_t len) {
  std::vector<Polynomial> out{Polynomial::zero()};
  std::vector<Polynomial> layer{Polynomial::zero()};
  for (std::size_t l = 1; l <= len; ++l) {
    std::vector<Polynomial> next;
    for (const auto& p : layer)
      for (const auto& u : monos) next.push_back(plus(p, Polynomial(u)));
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

/// Compact spelling for case ids: "0", "1", "A+BB".
inline std::string compact(const Polynomial& p) {
  if (p.isZero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += '+';
    const auto& u = p[i];
    if (u.isUnit()) {
      out += '1';
      continue;
    }
    for (std::size_t k = 0; k < u.sorts.size(); ++k) {
      if (k && u.sorts[k].name().size() > 1) out += '.';
      out += u.sorts[k].name();
    }
  }
  return out;
}

/// One seeded instantiation: a private copy of the interpretation that
/// receives fresh generators with random matrices.
template <Semiring W>
class Instance {
 public:
  Instance(const Interpretation<W>& base, std::uint64_t seed) : interp_(base), rng_(seed) {
    for (const auto& f : interp_.model.theory.ops) {
      if (f.arity == 0) nullary_.push_back(f);
      if (f.arity == 2) binary_.push_back(f);
    }
  }

  std::mt19937_64& rng() { return rng_; }
  const Interpretation<W>& interp() const { return interp_; }
  const TheoryModel<W>& model() const { return interp_.model; }

  /// Fresh generator dom → cod interpreted by a random matrix.
  CircuitTerm gen(const Monomial& dom, const Monomial& cod) {
    std::string name = "g" + std::to_string(counter_++);
    interp_.generators[name] = randomMatrix<W>(rng_, interp_.sizeOf(cod), interp_.sizeOf(dom));
    return CircuitTerm::gen(GeneratorDecl{name, dom, cod});
  }

  /// Random tape P → Q: every summand of P branches over the summands of Q
  /// through theory operations, runs a fresh generator per branch, and the
  /// |P| results are merged with ∇.
  TapeTerm tape(const Polynomial& p, const Polynomial& q) {
    std::vector<TapeTerm> rows;
    for (const auto& u : p.monomials) rows.push_back(spread(u, q));
    return TapeTerm::seq(sumAll(rows), codiagN(q, p.size()));
  }

  /// Random Σ-term over context n.
  SigmaTerm term(std::size_t n, std::size_t depth) {
    bool leaf = depth == 0 || detail::pick(rng_, 3) == 0;
    if (leaf && n > 0) return SigmaTerm::var(1 + detail::pick(rng_, n));
    std::vector<OpSymbol> candidates;
    for (const auto& f : interp_.model.theory.ops)
      if (!leaf || f.arity == 0) candidates.push_back(f);
    if (candidates.empty()) throw Error(ErrorKind::UnknownOp, "theory has no operation to build a term");
    OpSymbol f = candidates[detail::pick(rng_, candidates.size())];
    std::vector<SigmaTerm> args;
    for (std::size_t i = 0; i < f.arity; ++i) args.push_back(term(n, depth == 0 ? 0 : depth - 1));
    return SigmaTerm::app(f, std::move(args));
  }

  OpSymbol op() {
    std::vector<OpSymbol> all(interp_.model.theory.ops.begin(), interp_.model.theory.ops.end());
    return all[detail::pick(rng_, all.size())];
  }

  EqResult check(const TapeTerm& lhs, const TapeTerm& rhs) const { return semEq(lhs, rhs, interp_); }

  /// Generator matrices used by the given terms, for reproduction.
  std::string dump(const std::vector<TapeTerm>& terms) const {
    std::set<std::string> names;
    for (const auto& t : terms) detail::collectGenerators(t, names);
    std::string out;
    for (const auto& n : names) {
      auto it = interp_.generators.find(n);
      if (it == interp_.generators.end()) continue;
      out += (out.empty() ? "" : " ") + n + "=" + toString(it->second);
    }
    return out;
  }

 private:
  OpSymbol choose(const std::vector<OpSymbol>& ops, const char* what) {
    if (ops.empty()) throw Error(ErrorKind::UnknownOp, std::string("theory has no ") + what + " operation");
    return ops[detail::pick(rng_, ops.size())];
  }

  /// U → Q.
  TapeTerm spread(const Monomial& u, const Polynomial& q) {
    std::size_t m = q.size();
    if (m == 0) return TapeTerm::opInj(choose(nullary_, "nullary"), u);
    std::size_t copies = detail::pick(rng_, 2) + 1;
    std::vector<TapeTerm> branches;
    for (std::size_t c = 0; c < copies; ++c)
      for (const auto& v : q.monomials) branches.push_back(TapeTerm::tapeOf(gen(u, v)));
    std::size_t k = m * copies;
    TapeTerm fan = k == 1 ? TapeTerm::idMon(u) : termTape(chain(k), k, Polynomial(u));
    TapeTerm out = TapeTerm::seq(fan, sumAll(branches));
    if (copies == 2) out = TapeTerm::seq(out, codiagN(q, 2));
    return out;
  }

  /// x1 • (x2 • (… • xk)) with random binary operations.
  SigmaTerm chain(std::size_t k) {
    SigmaTerm t = SigmaTerm::var(k);
    for (std::size_t i = k - 1; i >= 1; --i) t = SigmaTerm::app(choose(binary_, "binary"), {SigmaTerm::var(i), t});
    return t;
  }

  Interpretation<W> interp_;
  std::mt19937_64 rng_;
  std::vector<OpSymbol> nullary_;
  std::vector<OpSymbol> binary_;
  std::size_t counter_ = 0;
};

// ---------------------------------------------------------------------------
// Suite runner.

/// Shared machinery of the suites: object enumeration and case recording.
template <Semiring W>
class SuiteRunner {
 public:
  SuiteRunner(const Interpretation<W>& base, const Bounds& bounds) : base_(base), bounds_(bounds) {
    for (const auto& [s, c] : base.carriers) {
      if (sorts_.size() >= bounds.sorts) break;
      sorts_.push_back(s);
    }
    monos_ = monomialsUpTo(sorts_, bounds.monomialLength);
    polys_ = polynomialsUpTo(monos_, bounds.polynomialLength);
  }

  const std::vector<SortId>& sorts() const { return sorts_; }
  const std::vector<Monomial>& monomials() const { return monos_; }
  const std::vector<Polynomial>& polynomials() const { return polys_; }
  const Bounds& bounds() const { return bounds_; }
  const Interpretation<W>& base() const { return base_; }
  Report& report() { return report_; }

  Instance<W> instance(const std::string& row, std::size_t assignment, std::size_t k) const {
    std::seed_seq seq{static_cast<std::uint32_t>(bounds_.seed), static_cast<std::uint32_t>(bounds_.seed >> 32),
                      static_cast<std::uint32_t>(detail::fnv1a(row)), static_cast<std::uint32_t>(assignment),
                      static_cast<std::uint32_t>(k)};
    std::vector<std::uint32_t> words(2);
    seq.generate(words.begin(), words.end());
    return Instance<W>(base_, (std::uint64_t(words[0]) << 32) | words[1]);
  }

  /// Tuples of length k: all of them when few enough, else a seeded sample.
  template <class T>
  std::vector<std::vector<T>> tuples(const std::vector<T>& xs, std::size_t k, const std::string& row,
                                     std::size_t cap) const {
    std::vector<std::vector<T>> out;
    double total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= static_cast<double>(xs.size());
    if (total <= static_cast<double>(cap)) {
      std::vector<std::size_t> idx(k, 0);
      while (true) {
        std::vector<T> t;
        for (auto i : idx) t.push_back(xs[i]);
        out.push_back(std::move(t));
        std::size_t pos = k;
        while (pos > 0 && ++idx[pos - 1] == xs.size()) idx[--pos] = 0;
        if (pos == 0) break;
      }
      return out;
    }
    std::mt19937_64 rng(bounds_.seed ^ detail::fnv1a(row + "#tuples"));
    for (std::size_t n = 0; n < cap; ++n) {
      std::vector<T> t;
      for (std::size_t i = 0; i < k; ++i) t.push_back(xs[detail::pick(rng, xs.size())]);
      out.push_back(std::move(t));
    }
    return out;
  }

  std::vector<std::vector<Monomial>> monomialTuples(std::size_t k, const std::string& row) const {
    return tuples(monos_, k, row, bounds_.maxAssignments);
  }

  std::vector<std::vector<Polynomial>> polynomialTuples(std::size_t k, const std::string& row) const {
    return tuples(polys_, k, row, k == 1 ? polys_.size() : bounds_.polynomialAssignments);
  }

  /// Records lhs = rhs under the instance's interpretation.
  void record(const std::string& id, const Instance<W>& inst, const TapeTerm& lhs, const TapeTerm& rhs) {
    EqResult r;
    try {
      r = inst.check(lhs, rhs);
    } catch (const Error& e) {
      r.status = EqStatus::TypeError;
      r.message = e.what();
    }
    std::string detail;
    if (!r.equal()) {
      detail = r.describe() + " | lhs: " + toString(lhs) + " | rhs: " + toString(rhs);
      std::string gens = inst.dump({lhs, rhs});
      if (!gens.empty()) detail += " | " + gens;
    }
    report_.add(id, r.equal(), std::move(detail));
  }

  void recordMatrices(const std::string& id, const Matrix<W>& lhs, const Matrix<W>& rhs) {
    EqResult r = compareMatrices(lhs, rhs);
    report_.add(id, r.equal(), r.equal() ? std::string() : r.describe());
  }

  /// Runs body(instance, k) for k < instances on every tuple of k monomials.
  void forMonomials(const std::string& row, std::size_t arity, std::size_t instances,
                    const std::function<void(const std::vector<Monomial>&, Instance<W>&, const std::string&)>& body) {
    auto ts = monomialTuples(arity, row);
    for (std::size_t a = 0; a < ts.size(); ++a) {
      for (std::size_t k = 0; k < instances; ++k) {
        Instance<W> inst = instance(row, a, k);
        body(ts[a], inst, caseId(row, ts[a], k, instances));
      }
    }
  }

  void forPolynomials(const std::string& row, std::size_t arity, std::size_t instances,
                      const std::function<void(const std::vector<Polynomial>&, Instance<W>&, const std::string&)>& body) {
    forPolynomialsIn(polys_, row, arity, instances, body);
  }

  void forPolynomialsIn(const std::vector<Polynomial>& domain, const std::string& row, std::size_t arity,
                        std::size_t instances,
                        const std::function<void(const std::vector<Polynomial>&, Instance<W>&, const std::string&)>& body) {
    auto ts = tuples(domain, arity, row, arity == 1 ? domain.size() : bounds_.polynomialAssignments);
    for (std::size_t a = 0; a < ts.size(); ++a) {
      for (std::size_t k = 0; k < instances; ++k) {
        Instance<W> inst = instance(row, a, k);
        body(ts[a], inst, caseId(row, ts[a], k, instances));
      }
    }
  }

 private:
  template <class T>
  static std::string caseId(const std::string& row, const std::vector<T>& objs, std::size_t k, std::size_t instances) {
    std::string id = row + "[";
    for (std::size_t i = 0; i < objs.size(); ++i) id += (i ? "," : "") + compact(Polynomial(objs[i]));
    if (instances > 1) id += std::string(objs.empty() ? "" : ",") + "#" + std::to_string(k);
    return id + "]";
  }

  const Interpretation<W>& base_;
  Bounds bounds_;
  std::vector<SortId> sorts_;
  std::vector<Monomial> monos_;
  std::vector<Polynomial> polys_;
  Report report_;
};

// ---------------------------------------------------------------------------
// Axioms of tapes: the monoidal axioms at both layers, the copy-discard
// axioms of circuits and the tape axioms proper.

template <Semiring W>
Report axiomSuite(const Interpretation<W>& base, const Bounds& bounds) {
  SuiteRunner<W> run(base, bounds);
  const std::size_t n = bounds.instances;
  using T = TapeTerm;
  using C = CircuitTerm;
  auto tape = [](const C& c) { return T::tapeOf(c); };
  auto idc = [](const Monomial& u) { return circuits::identity(u); };

  // ⊗ layer on circuits.
  run.forMonomials("circ.seq-assoc", 4, n, [&](const auto& o, auto& in, const auto& id) {
    C f = in.gen(o[0], o[1]), g = in.gen(o[1], o[2]), h = in.gen(o[2], o[3]);
    run.record(id, in, tape(C::seq(C::seq(f, g), h)), tape(C::seq(f, C::seq(g, h))));
  });
  run.forMonomials("circ.id-left", 2, n, [&](const auto& o, auto& in, const auto& id) {
    C f = in.gen(o[0], o[1]);
    run.record(id, in, tape(C::seq(idc(o[0]), f)), tape(f));
  });
  run.forMonomials("circ.id-right", 2, n, [&](const auto& o, auto& in, const auto& id) {
    C f = in.gen(o[0], o[1]);
    run.record(id, in, tape(C::seq(f, idc(o[1]))), tape(f));
  });
  run.forMonomials("circ.interchange", 6, n, [&](const auto& o, auto& in, const auto& id) {
    C f1 = in.gen(o[0], o[1]), g1 = in.gen(o[1], o[2]);
    C f2 = in.gen(o[3], o[4]), g2 = in.gen(o[4], o[5]);
    run.record(id, in, tape(C::seq(C::tensor(f1, f2), C::tensor(g1, g2))),
               tape(C::tensor(C::seq(f1, g1), C::seq(f2, g2))));
  });
  run.forMonomials("circ.unit-left", 2, n, [&](const auto& o, auto& in, const auto& id) {
    C f = in.gen(o[0], o[1]);
    run.record(id, in, tape(C::tensor(C::idOne(), f)), tape(f));
  });
  run.forMonomials("circ.unit-right", 2, n, [&](const auto& o, auto& in, const auto& id) {
    C f = in.gen(o[0], o[1]);
    run.record(id, in, tape(C::tensor(f, C::idOne())), tape(f));
  });
  run.forMonomials("circ.assoc", 6, n, [&](const auto& o, auto& in, const auto& id) {
    C f = in.gen(o[0], o[1]), g = in.gen(o[2], o[3]), h = in.gen(o[4], o[5]);
    run.record(id, in, tape(C::tensor(C::tensor(f, g), h)), tape(C::tensor(f, C::tensor(g, h))));
  });
  run.forMonomials("circ.sym-inv", 2, 1, [&](const auto& o, auto& in, const auto& id) {
    run.record(id, in, tape(C::seq(circuits::symmetry(o[0], o[1]), circuits::symmetry(o[1], o[0]))),
               tape(idc(concat(o[0], o[1]))));
  });
  run.forMonomials("circ.sym-nat", 3, n, [&](const auto& o, auto& in, const auto& id) {
    C s = in.gen(o[0], o[1]);
    run.record(id, in, tape(C::seq(C::tensor(s, idc(o[2])), circuits::symmetry(o[1], o[2]))),
               tape(C::seq(circuits::symmetry(o[0], o[2]), C::tensor(idc(o[2]), s))));
  });
  run.forMonomials("circ.copy-assoc", 1, 1, [&](const auto& o, auto& in, const auto& id) {
    const Monomial& u = o[0];
    C cp = circuits::copier(u);
    run.record(id, in, tape(C::seq(cp, C::tensor(cp, idc(u)))), tape(C::seq(cp, C::tensor(idc(u), cp))));
  });
  run.forMonomials("circ.copy-unit-left", 1, 1, [&](const auto& o, auto& in, const auto& id) {
    const Monomial& u = o[0];
    run.record(id, in, tape(C::seq(circuits::copier(u), C::tensor(circuits::discharger(u), idc(u)))), tape(idc(u)));
  });
  run.forMonomials("circ.copy-unit-right", 1, 1, [&](const auto& o, auto& in, const auto& id) {
    const Monomial& u = o[0];
    run.record(id, in, tape(C::seq(circuits::copier(u), C::tensor(idc(u), circuits::discharger(u)))), tape(idc(u)));
  });
  run.forMonomials("circ.copy-comm", 1, 1, [&](const auto& o, auto& in, const auto& id) {
    const Monomial& u = o[0];
    run.record(id, in, tape(C::seq(circuits::copier(u), circuits::symmetry(u, u))), tape(circuits::copier(u)));
  });

  // ⊕ layer on tapes.
  run.forMonomials("plus.seq-assoc", 4, n, [&](const auto& o, auto& in, const auto& id) {
    T f = in.tape(o[0], o[1]), g = in.tape(o[1], o[2]), h = in.tape(o[2], o[3]);
    run.record(id, in, T::seq(T::seq(f, g), h), T::seq(f, T::seq(g, h)));
  });
  run.forMonomials("plus.id-left", 2, n, [&](const auto& o, auto& in, const auto& id) {
    T f = in.tape(o[0], o[1]);
    run.record(id, in, T::seq(T::idMon(o[0]), f), f);
  });
  run.forMonomials("plus.id-right", 2, n, [&](const auto& o, auto& in, const auto& id) {
    T f = in.tape(o[0], o[1]);
    run.record(id, in, T::seq(f, T::idMon(o[1])), f);
  });
  run.forMonomials("plus.interchange", 6, n, [&](const auto& o, auto& in, const auto& id) {
    T f1 = in.tape(o[0], o[1]), g1 = in.tape(o[1], o[2]);
    T f2 = in.tape(o[3], o[4]), g2 = in.tape(o[4], o[5]);
    run.record(id, in, T::seq(T::sum(f1, f2), T::sum(g1, g2)), T::sum(T::seq(f1, g1), T::seq(f2, g2)));
  });
  run.forMonomials("plus.unit-left", 2, n, [&](const auto& o, auto& in, const auto& id) {
    T f = in.tape(o[0], o[1]);
    run.record(id, in, T::sum(T::idZero(), f), f);
  });
  run.forMonomials("plus.unit-right", 2, n, [&](const auto& o, auto& in, const auto& id) {
    T f = in.tape(o[0], o[1]);
    run.record(id, in, T::sum(f, T::idZero()), f);
  });
  run.forMonomials("plus.assoc", 6, n, [&](const auto& o, auto& in, const auto& id) {
    T f = in.tape(o[0], o[1]), g = in.tape(o[2], o[3]), h = in.tape(o[4], o[5]);
    run.record(id, in, T::sum(T::sum(f, g), h), T::sum(f, T::sum(g, h)));
  });
  run.forMonomials("plus.sym-inv", 2, 1, [&](const auto& o, auto& in, const auto& id) {
    run.record(id, in, T::seq(T::symPlus(o[0], o[1]), T::symPlus(o[1], o[0])),
               T::sum(T::idMon(o[0]), T::idMon(o[1])));
  });
  run.forMonomials("plus.sym-nat", 3, n, [&](const auto& o, auto& in, const auto& id) {
    T s = in.tape(o[0], o[1]);
    run.record(id, in, T::seq(T::sum(s, T::idMon(o[2])), T::symPlus(o[1], o[2])),
               T::seq(T::symPlus(o[0], o[2]), T::sum(T::idMon(o[2]), s)));
  });

  // Tape axioms.
  run.forMonomials("tape.codiag-assoc", 1, 1, [&](const auto& o, auto& in, const auto& id) {
    const Monomial& u = o[0];
    run.record(id, in, T::seq(T::sum(T::idMon(u), T::codiag(u)), T::codiag(u)),
               T::seq(T::sum(T::codiag(u), T::idMon(u)), T::codiag(u)));
  });
  run.forMonomials("tape.codiag-unit", 1, 1, [&](const auto& o, auto& in, const auto& id) {
    const Monomial& u = o[0];
    run.record(id, in, T::seq(T::sum(T::cobang(u), T::idMon(u)), T::codiag(u)), T::idMon(u));
  });
  run.forMonomials("tape.codiag-comm", 1, 1, [&](const auto& o, auto& in, const auto& id) {
    const Monomial& u = o[0];
    run.record(id, in, T::seq(T::symPlus(u, u), T::codiag(u)), T::codiag(u));
  });
  run.forMonomials("tape.codiag-nat", 2, n, [&](const auto& o, auto& in, const auto& id) {
    T c = tape(in.gen(o[0], o[1]));
    run.record(id, in, T::seq(T::codiag(o[0]), c), T::seq(T::sum(c, c), T::codiag(o[1])));
  });
  run.forMonomials("tape.cobang-nat", 2, n, [&](const auto& o, auto& in, const auto& id) {
    T c = tape(in.gen(o[0], o[1]));
    run.record(id, in, T::seq(T::cobang(o[0]), c), T::cobang(o[1]));
  });
  for (const auto& f : base.model.theory.ops) {
    std::string tag = "[" + toString(f) + "]";
    run.forMonomials("tape.codiag-op" + tag, 1, 1, [&](const auto& o, auto& in, const auto& id) {
      const Monomial& u = o[0];
      run.record(id, in, T::seq(T::codiag(u), T::opInj(f, u)),
                 T::seq(T::sum(T::opInj(f, u), T::opInj(f, u)), codiagTape(power(u, f.arity))));
    });
    run.forMonomials("tape.cobang-op" + tag, 1, 1, [&](const auto& o, auto& in, const auto& id) {
      const Monomial& u = o[0];
      run.record(id, in, T::seq(T::cobang(u), T::opInj(f, u)), cobangTape(power(u, f.arity)));
    });
    run.forMonomials("tape.op-nat" + tag, 2, n, [&](const auto& o, auto& in, const auto& id) {
      T t = in.tape(o[0], o[1]);
      std::vector<T> copies(f.arity, t);
      run.record(id, in, T::seq(t, T::opInj(f, o[1])), T::seq(T::opInj(f, o[0]), sumAll(copies)));
    });
  }
  run.forMonomials("tape.tape-id", 1, 1, [&](const auto& o, auto& in, const auto& id) {
    run.record(id, in, tape(idc(o[0])), T::idMon(o[0]));
  });
  run.forMonomials("tape.tape-seq", 3, n, [&](const auto& o, auto& in, const auto& id) {
    C c = in.gen(o[0], o[1]), d = in.gen(o[1], o[2]);
    run.record(id, in, tape(C::seq(c, d)), T::seq(tape(c), tape(d)));
  });
  for (const auto& eq : base.model.theory.equations) {
    run.forMonomials("tape.equation[" + eq.label + "]", 1, 1, [&](const auto& o, auto& in, const auto& id) {
      run.record(id, in, termTape(eq.lhs, eq.context, o[0]), termTape(eq.rhs, eq.context, o[0]));
    });
  }
  return run.report();
}

// ---------------------------------------------------------------------------
// Lemmas and propositions.

/// ∇ and ¡ against ⊗ with distributors, at tape level over polynomials and at
/// matrix level over sizes 0..3.
template <Semiring W>
Report codiagTensorSuite(const Interpretation<W>& base, const Bounds& bounds) {
  SuiteRunner<W> run(base, bounds);
  using T = TapeTerm;
  run.forPolynomials("codiag-tensor.codiag-right", 2, 1, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial &x = o[0], &y = o[1];
    // δʳ is an identity on polynomials.
    run.record(id, in, codiagTape(polyTensor(x, y)), tensorTape(codiagTape(x), identityTape(y)));
  });
  run.forPolynomials("codiag-tensor.codiag-left", 2, 1, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial &x = o[0], &y = o[1];
    run.record(id, in, codiagTape(polyTensor(x, y)),
               T::seq(distributor(x, y, y, true), tensorTape(identityTape(x), codiagTape(y))));
  });
  run.forPolynomials("codiag-tensor.cobang-right", 2, 1, [&](const auto& o, auto& in, const auto& id) {
    run.record(id, in, cobangTape(polyTensor(o[0], o[1])), tensorTape(cobangTape(o[0]), identityTape(o[1])));
  });
  run.forPolynomials("codiag-tensor.cobang-left", 2, 1, [&](const auto& o, auto& in, const auto& id) {
    run.record(id, in, cobangTape(polyTensor(o[0], o[1])), tensorTape(identityTape(o[0]), cobangTape(o[1])));
  });
  for (std::size_t x = 0; x <= 3; ++x)
    for (std::size_t y = 0; y <= 3; ++y) {
      std::string dims = "[" + std::to_string(x) + "," + std::to_string(y) + "]";
      Matrix<W> cd = codiagK<W>(x * y);
      run.recordMatrices("codiag-tensor.matrix.codiag-right" + dims, cd,
                         composeK(transposeK(dr<W>(x, x, y)), tensorK(codiagK<W>(x), identityK<W>(y))));
      run.recordMatrices("codiag-tensor.matrix.codiag-left" + dims, cd,
                         composeK(transposeK(dl<W>(x, y, y)), tensorK(identityK<W>(x), codiagK<W>(y))));
      run.recordMatrices("codiag-tensor.matrix.cobang-right" + dims, cobangK<W>(x * y),
                         tensorK(cobangK<W>(x), identityK<W>(y)));
      run.recordMatrices("codiag-tensor.matrix.cobang-left" + dims, cobangK<W>(x * y),
                         tensorK(identityK<W>(x), cobangK<W>(y)));
    }
  return run.report();
}

/// Interaction of ∇, ¡ with copier and discharger, and of copier and
/// discharger with the distributors.
template <Semiring W>
Report copyMergeSuite(const Interpretation<W>& base, const Bounds& bounds) {
  SuiteRunner<W> run(base, bounds);
  using T = TapeTerm;
  auto copier = [](const Polynomial& p) { return cdPoly(CdKind::Copier, p); };
  auto discharger = [](const Polynomial& p) { return cdPoly(CdKind::Discharger, p); };
  const Polynomial one(Monomial::unit());
  run.forPolynomials("copy-merge.1.codiag-copier", 1, 1, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial& x = o[0];
    run.record(id, in, T::seq(codiagTape(x), copier(x)),
               T::seq(T::sum(copier(x), copier(x)), codiagTape(polyTensor(x, x))));
  });
  run.forPolynomials("copy-merge.1.codiag-discharger", 1, 1, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial& x = o[0];
    run.record(id, in, T::seq(codiagTape(x), discharger(x)),
               T::seq(T::sum(discharger(x), discharger(x)), codiagTape(one)));
  });
  run.forPolynomials("copy-merge.1.cobang-copier", 1, 1, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial& x = o[0];
    run.record(id, in, T::seq(cobangTape(x), copier(x)), cobangTape(polyTensor(x, x)));
  });
  run.forPolynomials("copy-merge.1.cobang-discharger", 1, 1, [&](const auto& o, auto& in, const auto& id) {
    run.record(id, in, T::seq(cobangTape(o[0]), discharger(o[0])), cobangTape(one));
  });
  run.forPolynomials("copy-merge.2.codiag-copier", 1, 1, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial& x = o[0];
    run.record(id, in, T::seq(codiagTape(x), copier(x)),
               T::seq(copier(plus(x, x)), tensorTape(codiagTape(x), codiagTape(x))));
  });
  run.forPolynomials("copy-merge.2.codiag-discharger", 1, 1, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial& x = o[0];
    run.record(id, in, T::seq(codiagTape(x), discharger(x)), discharger(plus(x, x)));
  });
  run.forPolynomials("copy-merge.2.cobang-copier", 1, 1, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial& x = o[0];
    run.record(id, in, T::seq(cobangTape(x), copier(x)),
               T::seq(copier(Polynomial::zero()), tensorTape(cobangTape(x), cobangTape(x))));
  });
  run.forPolynomials("copy-merge.2.cobang-discharger", 1, 1, [&](const auto& o, auto& in, const auto& id) {
    run.record(id, in, T::seq(cobangTape(o[0]), discharger(o[0])), discharger(Polynomial::zero()));
  });
  // Copying P(Q ⊕ R) squares a carrier that is already cubic in the
  // monomial length, so these two rows use linear polynomials.
  const auto linear = polynomialsUpTo(monomialsUpTo(run.sorts(), 1), run.bounds().polynomialLength);
  run.forPolynomialsIn(linear, "copy-merge.3.dl-copier", 3, 1, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial &p = o[0], &q = o[1], &r = o[2];
    T d = distributor(p, q, r);
    run.record(id, in, T::seq(d, copier(plus(polyTensor(p, q), polyTensor(p, r)))),
               T::seq(copier(polyTensor(p, plus(q, r))), tensorTape(d, d)));
  });
  run.forPolynomialsIn(linear, "copy-merge.3.dl-discharger", 3, 1, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial &p = o[0], &q = o[1], &r = o[2];
    run.record(id, in, T::seq(distributor(p, q, r), discharger(plus(polyTensor(p, q), polyTensor(p, r)))),
               discharger(polyTensor(p, plus(q, r))));
  });
  return run.report();
}

/// copier_P and discharger_P against the canonical maps, and the two
/// coherence paths for X ⊕ Y.
template <Semiring W>
Report fccdSuite(const Interpretation<W>& base, const Bounds& bounds) {
  SuiteRunner<W> run(base, bounds);
  using T = TapeTerm;
  for (std::size_t a = 0; a < run.polynomials().size(); ++a) {
    const Polynomial& p = run.polynomials()[a];
    std::string tag = "[" + compact(p) + "]";
    Matrix<W> cp = evalTape(cdPoly(CdKind::Copier, p), base);
    std::size_t n = base.sizeOf(p);
    run.recordMatrices("fccd.copier-canonical" + tag, cp, composeK(copierK<W>(n), tensorBijection(p, p, base)));
    run.recordMatrices("fccd.discharger-canonical" + tag, evalTape(cdPoly(CdKind::Discharger, p), base),
                       dischargerK<W>(n));
  }
  run.forPolynomials("fccd.copier-coherence", 2, 1, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial &x = o[0], &y = o[1];
    T copies = sumAll({cdPoly(CdKind::Copier, x), cobangTape(polyTensor(x, y)), cobangTape(polyTensor(y, x)),
                       cdPoly(CdKind::Copier, y)});
    T regroup = T::sum(distributor(x, x, y, true), distributor(y, x, y, true));
    // The unitors and δʳ⁻¹ are identities on polynomials.
    run.record(id, in, cdPoly(CdKind::Copier, plus(x, y)), T::seq(copies, regroup));
  });
  run.forPolynomials("fccd.discharger-coherence", 2, 1, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial &x = o[0], &y = o[1];
    run.record(id, in, cdPoly(CdKind::Discharger, plus(x, y)),
               T::seq(T::sum(cdPoly(CdKind::Discharger, x), cdPoly(CdKind::Discharger, y)),
                      T::codiag(Monomial::unit())));
  });
  return run.report();
}

/// Appends a Σ-term to a case id, without spaces.
inline std::string withTerm(const std::string& id, const SigmaTerm& t) {
  std::string term;
  for (char c : toString(t))
    if (c != ' ') term += c;
  return id.substr(0, id.size() - 1) + ",t=" + term + "]";
}

/// t̂(h₁,…,hₙ) = ⟨t⟩_X ; ⊕hᵢ ; ∇ⁿ_Y.
inline TapeTerm enriched(const SigmaTerm& t, std::size_t n, const Polynomial& x, const Polynomial& y,
                         const std::vector<TapeTerm>& hs) {
  return TapeTerm::seq(TapeTerm::seq(termTape(t, n, x), sumAll(hs)), codiagN(y, n));
}

/// The four compatibility laws of t̂ with ; and ⊗.
template <Semiring W>
Report enrichmentSuite(const Interpretation<W>& base, const Bounds& bounds) {
  SuiteRunner<W> run(base, bounds);
  using T = TapeTerm;
  const std::size_t inst = bounds.instances;
  auto setup = [](Instance<W>& in, std::size_t& n, SigmaTerm& t) {
    n = detail::pick(in.rng(), 4);
    t = in.term(n, 2);
  };
  run.forPolynomials("enrich.1", 3, inst, [&](const auto& o, auto& in, const auto& id) {
    std::size_t n = 0;
    SigmaTerm t = SigmaTerm::var(1);
    setup(in, n, t);
    const Polynomial &x = o[0], &y = o[1], &z = o[2];
    T g = in.tape(y, z);
    std::vector<T> hs, hg;
    for (std::size_t i = 0; i < n; ++i) {
      hs.push_back(in.tape(x, y));
      hg.push_back(T::seq(hs.back(), g));
    }
    run.record(withTerm(id, t), in, T::seq(enriched(t, n, x, y, hs), g), enriched(t, n, x, z, hg));
  });
  run.forPolynomials("enrich.2", 3, inst, [&](const auto& o, auto& in, const auto& id) {
    std::size_t n = 0;
    SigmaTerm t = SigmaTerm::var(1);
    setup(in, n, t);
    const Polynomial &x = o[0], &y = o[1], &z = o[2];
    T g = in.tape(z, x);
    std::vector<T> hs, gh;
    for (std::size_t i = 0; i < n; ++i) {
      hs.push_back(in.tape(x, y));
      gh.push_back(T::seq(g, hs.back()));
    }
    run.record(withTerm(id, t), in, T::seq(g, enriched(t, n, x, y, hs)), enriched(t, n, z, y, gh));
  });
  run.forPolynomials("enrich.3", 4, inst, [&](const auto& o, auto& in, const auto& id) {
    std::size_t n = 0;
    SigmaTerm t = SigmaTerm::var(1);
    setup(in, n, t);
    const Polynomial &x = o[0], &y = o[1], &z = o[2], &u = o[3];
    T g = in.tape(z, u);
    std::vector<T> hs, hg;
    for (std::size_t i = 0; i < n; ++i) {
      hs.push_back(in.tape(x, y));
      hg.push_back(tensorTape(hs.back(), g));
    }
    run.record(withTerm(id, t), in, tensorTape(enriched(t, n, x, y, hs), g),
               enriched(t, n, polyTensor(x, z), polyTensor(y, u), hg));
  });
  run.forPolynomials("enrich.4", 4, inst, [&](const auto& o, auto& in, const auto& id) {
    std::size_t n = 0;
    SigmaTerm t = SigmaTerm::var(1);
    setup(in, n, t);
    const Polynomial &x = o[0], &y = o[1], &z = o[2], &u = o[3];
    T g = in.tape(z, u);
    std::vector<T> hs, gh;
    for (std::size_t i = 0; i < n; ++i) {
      hs.push_back(in.tape(x, y));
      gh.push_back(tensorTape(g, hs.back()));
    }
    run.record(withTerm(id, t), in, tensorTape(g, enriched(t, n, x, y, hs)),
               enriched(t, n, polyTensor(z, x), polyTensor(u, y), gh));
  });
  return run.report();
}

/// ⟨f⟩ and ⟨t⟩ are natural over polynomials: t ; ⟨f⟩_Q = ⟨f⟩_P ; ⊕ⁿt.
template <Semiring W>
Report opNaturalitySuite(const Interpretation<W>& base, const Bounds& bounds) {
  SuiteRunner<W> run(base, bounds);
  using T = TapeTerm;
  for (const auto& f : base.model.theory.ops) {
    run.forPolynomials("opnat.op[" + toString(f) + "]", 2, bounds.instances,
                       [&](const auto& o, auto& in, const auto& id) {
                         T t = in.tape(o[0], o[1]);
                         std::vector<T> copies(f.arity, t);
                         run.record(id, in, T::seq(t, opInjPoly(f, o[1])), T::seq(opInjPoly(f, o[0]), sumAll(copies)));
                       });
  }
  run.forPolynomials("opnat.term", 2, bounds.instances, [&](const auto& o, auto& in, const auto& id) {
    std::size_t n = detail::pick(in.rng(), 4);
    SigmaTerm s = in.term(n, 2);
    T t = in.tape(o[0], o[1]);
    std::vector<T> copies(n, t);
    run.record(withTerm(id, s), in, T::seq(t, termTape(s, n, o[1])), T::seq(termTape(s, n, o[0]), sumAll(copies)));
  });
  return run.report();
}

/// ⟨f⟩ and ∇ⁿ against δʳ_{nX,Y} and δˡ_{Y,nX}.
template <Semiring W>
Report opDistributorSuite(const Interpretation<W>& base, const Bounds& bounds) {
  SuiteRunner<W> run(base, bounds);
  using T = TapeTerm;
  for (const auto& f : base.model.theory.ops) {
    std::string tag = "[" + toString(f) + "]";
    run.forPolynomials("op-distributor.op-right" + tag, 2, 1, [&](const auto& o, auto& in, const auto& id) {
      const Polynomial &x = o[0], &y = o[1];
      // δʳ_{nX,Y} is an identity on polynomials.
      run.record(id, in, tensorTape(opInjPoly(f, x), identityTape(y)), opInjPoly(f, polyTensor(x, y)));
    });
    run.forPolynomials("op-distributor.op-left" + tag, 2, 1, [&](const auto& o, auto& in, const auto& id) {
      const Polynomial &x = o[0], &y = o[1];
      run.record(id, in, T::seq(tensorTape(identityTape(y), opInjPoly(f, x)), distributorN(y, x, f.arity)),
                 opInjPoly(f, polyTensor(y, x)));
    });
  }
  for (std::size_t n = 0; n <= 3; ++n) {
    std::string tag = "[n=" + std::to_string(n) + "]";
    run.forPolynomials("op-distributor.codiag-right" + tag, 2, 1, [&](const auto& o, auto& in, const auto& id) {
      const Polynomial &x = o[0], &y = o[1];
      run.record(id, in, tensorTape(codiagN(x, n), identityTape(y)), codiagN(polyTensor(x, y), n));
    });
    run.forPolynomials("op-distributor.codiag-left" + tag, 2, 1, [&](const auto& o, auto& in, const auto& id) {
      const Polynomial &x = o[0], &y = o[1];
      run.record(id, in, tensorTape(identityTape(y), codiagN(x, n)),
                 T::seq(distributorN(y, x, n), codiagN(polyTensor(y, x), n)));
    });
  }
  return run.report();
}

/// The whiskering laws W1–W18.
template <Semiring W>
Report whiskerSuite(const Interpretation<W>& base, const Bounds& bounds) {
  SuiteRunner<W> run(base, bounds);
  using T = TapeTerm;
  const std::size_t k = std::max<std::size_t>(bounds.instances, 3);
  auto L = [](const Polynomial& s, const T& t) { return whiskerLeft(s, t); };
  auto R = [](const Polynomial& s, const T& t) { return whiskerRight(t, s); };
  const Polynomial one(Monomial::unit());
  const Polynomial zero = Polynomial::zero();

  run.forPolynomials("W1.left", 2, 1, [&](const auto& o, auto& in, const auto& id) {
    run.record(id, in, L(o[0], identityTape(o[1])), identityTape(polyTensor(o[0], o[1])));
  });
  run.forPolynomials("W1.right", 2, 1, [&](const auto& o, auto& in, const auto& id) {
    run.record(id, in, R(o[0], identityTape(o[1])), identityTape(polyTensor(o[1], o[0])));
  });
  run.forPolynomials("W2.left", 4, k, [&](const auto& o, auto& in, const auto& id) {
    T t = in.tape(o[1], o[2]), s = in.tape(o[2], o[3]);
    run.record(id, in, L(o[0], T::seq(t, s)), T::seq(L(o[0], t), L(o[0], s)));
  });
  run.forPolynomials("W2.right", 4, k, [&](const auto& o, auto& in, const auto& id) {
    T t = in.tape(o[1], o[2]), s = in.tape(o[2], o[3]);
    run.record(id, in, R(o[0], T::seq(t, s)), T::seq(R(o[0], t), R(o[0], s)));
  });
  run.forPolynomials("W3", 2, k, [&](const auto& o, auto& in, const auto& id) {
    T t = in.tape(o[0], o[1]);
    run.record(id + ".left", in, L(one, t), t);
    run.record(id + ".right", in, R(one, t), t);
  });
  run.forPolynomials("W4", 2, k, [&](const auto& o, auto& in, const auto& id) {
    T t = in.tape(o[0], o[1]);
    run.record(id + ".left", in, L(zero, t), T::idZero());
    run.record(id + ".right", in, R(zero, t), T::idZero());
  });
  run.forPolynomials("W5.left", 5, k, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial &s = o[0], &p1 = o[1], &q1 = o[2], &p2 = o[3], &q2 = o[4];
    T t1 = in.tape(p1, q1), t2 = in.tape(p2, q2);
    run.record(id, in, L(s, T::sum(t1, t2)),
               T::seq(T::seq(distributor(s, p1, p2), T::sum(L(s, t1), L(s, t2))), distributor(s, q1, q2, true)));
  });
  run.forPolynomials("W5.right", 5, k, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial &s = o[0], &p1 = o[1], &q1 = o[2], &p2 = o[3], &q2 = o[4];
    T t1 = in.tape(p1, q1), t2 = in.tape(p2, q2);
    run.record(id, in, R(s, T::sum(t1, t2)), T::sum(R(s, t1), R(s, t2)));
  });
  run.forPolynomials("W6.left", 4, k, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial &s = o[0], &t = o[1];
    T f = in.tape(o[2], o[3]);
    run.record(id, in, L(plus(s, t), f), T::sum(L(s, f), L(t, f)));
  });
  run.forPolynomials("W6.right", 4, k, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial &s = o[0], &t = o[1], &p = o[2], &q = o[3];
    T f = in.tape(p, q);
    run.record(id, in, R(plus(s, t), f),
               T::seq(T::seq(distributor(p, s, t), T::sum(R(s, f), R(t, f))), distributor(q, s, t, true)));
  });
  run.forPolynomials("W7", 4, k, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial &p1 = o[0], &q1 = o[1], &p2 = o[2], &q2 = o[3];
    T t1 = in.tape(p1, q1), t2 = in.tape(p2, q2);
    run.record(id, in, T::seq(L(p1, t2), R(q2, t1)), T::seq(R(p2, t1), L(q1, t2)));
  });
  run.forMonomials("W8", 2, 1, [&](const auto& o, auto& in, const auto& id) {
    for (const auto& s : run.polynomials()) {
      run.record(id + "[S=" + compact(s) + "]", in, R(s, T::codiag(o[0])), codiagTape(polyTensor(o[0], s)));
    }
  });
  run.forMonomials("W9", 1, 1, [&](const auto& o, auto& in, const auto& id) {
    for (const auto& s : run.polynomials()) {
      run.record(id + "[S=" + compact(s) + "]", in, R(s, T::cobang(o[0])), cobangTape(polyTensor(o[0], s)));
    }
  });
  run.forPolynomials("W10", 3, 1, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial &s = o[0], &p = o[1], &q = o[2];
    run.record(id, in, R(s, symPlusTape(p, q)), symPlusTape(polyTensor(p, s), polyTensor(q, s)));
  });
  run.forPolynomials("W11", 3, 1, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial &p = o[0], &q = o[1], &s = o[2];
    run.record(id, in, symTensorPoly(polyTensor(p, q), s), T::seq(L(p, symTensorPoly(q, s)), R(q, symTensorPoly(p, s))));
  });
  run.forPolynomials("W12", 3, k, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial &s = o[0], &p = o[1], &q = o[2];
    T t = in.tape(p, q);
    run.record(id, in, T::seq(R(s, t), symTensorPoly(q, s)), T::seq(symTensorPoly(p, s), L(s, t)));
  });
  run.forPolynomials("W13", 4, k, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial &s = o[0], &t = o[1];
    T f = in.tape(o[2], o[3]);
    run.record(id, in, L(s, R(t, f)), R(t, L(s, f)));
  });
  run.forPolynomials("W14", 4, k, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial &s = o[0], &t = o[1];
    T f = in.tape(o[2], o[3]);
    run.record(id, in, L(polyTensor(s, t), f), L(s, L(t, f)));
  });
  run.forPolynomials("W15", 4, k, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial &s = o[0], &t = o[1];
    T f = in.tape(o[2], o[3]);
    run.record(id, in, R(polyTensor(t, s), f), R(s, R(t, f)));
  });
  run.forPolynomials("W16", 4, 1, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial &s = o[0], &p = o[1], &q = o[2], &r = o[3];
    run.record(id, in, R(s, distributor(p, q, r)), distributor(p, polyTensor(q, s), polyTensor(r, s)));
  });
  run.forPolynomials("W17", 4, 1, [&](const auto& o, auto& in, const auto& id) {
    const Polynomial &s = o[0], &p = o[1], &q = o[2], &r = o[3];
    run.record(id, in, L(s, distributor(p, q, r)),
               T::seq(distributor(polyTensor(s, p), q, r), distributor(s, polyTensor(p, q), polyTensor(p, r), true)));
  });
  for (const auto& f : base.model.theory.ops) {
    run.forMonomials("W18[" + toString(f) + "]", 1, 1, [&](const auto& o, auto& in, const auto& id) {
      for (const auto& s : run.polynomials()) {
        run.record(id + "[S=" + compact(s) + "]", in, R(s, T::opInj(f, o[0])), opInjPoly(f, polyTensor(o[0], s)));
      }
    });
  }
  return run.report();
}

/// Derived tapes against the matrices of the target category, transported
/// along the carrier index bijections.
template <Semiring W>
Report transportSuite(const Interpretation<W>& base, const Bounds& bounds) {
  SuiteRunner<W> run(base, bounds);
  const auto& I = base;
  for (const auto& p : run.polynomials()) {
    std::string tag = "[" + compact(p) + "]";
    std::size_t n = I.sizeOf(p);
    run.recordMatrices("transport.id" + tag, evalTape(identityTape(p), I), identityK<W>(n));
    run.recordMatrices("transport.codiag" + tag, evalTape(codiagTape(p), I), codiagK<W>(n));
    run.recordMatrices("transport.cobang" + tag, evalTape(cobangTape(p), I), cobangK<W>(n));
    for (const auto& f : I.model.theory.ops) {
      run.recordMatrices("transport.op[" + toString(f) + "]" + tag, evalTape(opInjPoly(f, p), I), opK(f, I.model, n));
    }
  }
  auto pairs = run.polynomialTuples(2, "transport.pairs");
  for (const auto& o : pairs) {
    const Polynomial &p = o[0], &q = o[1];
    std::string tag = "[" + compact(p) + "," + compact(q) + "]";
    std::size_t a = I.sizeOf(p), b = I.sizeOf(q);
    run.recordMatrices("transport.sym-plus" + tag, evalTape(symPlusTape(p, q), I), symP<W>(a, b));
    run.recordMatrices("transport.sym-tensor" + tag, evalTape(symTensorPoly(p, q), I),
                       transportTensor(symT<W>(a, b), p, q, q, p, I));
  }
  auto triples = run.polynomialTuples(3, "transport.triples");
  for (const auto& o : triples) {
    const Polynomial &p = o[0], &q = o[1], &r = o[2];
    std::string tag = "[" + compact(p) + "," + compact(q) + "," + compact(r) + "]";
    Matrix<W> in = transposeK(tensorBijection(p, plus(q, r), I));
    Matrix<W> out = oplusK(tensorBijection(p, q, I), tensorBijection(p, r, I));
    Matrix<W> expected = composeK(composeK(in, dl<W>(I.sizeOf(p), I.sizeOf(q), I.sizeOf(r))), out);
    Matrix<W> d = evalTape(distributor(p, q, r), I);
    run.recordMatrices("transport.dl" + tag, d, expected);
    run.recordMatrices("transport.dl-inverse" + tag, composeK(d, evalTape(distributor(p, q, r, true), I)),
                       identityK<W>(d.cols()));
  }
  run.forPolynomials("transport.tensor", 4, bounds.instances, [&](const auto& o, auto& inst, const auto& id) {
    const Polynomial &p = o[0], &q = o[1], &r = o[2], &s = o[3];
    TapeTerm t1 = inst.tape(p, q), t2 = inst.tape(r, s);
    Evaluator<W> ev(inst.interp());
    Matrix<W> lhs = ev.tape(tensorTape(t1, t2));
    Matrix<W> rhs = transportTensor(tensorK(ev.tape(t1), ev.tape(t2)), p, r, q, s, inst.interp());
    run.recordMatrices(id, lhs, rhs);
  });
  return run.report();
}

/// Every lemma-level suite.
template <Semiring W>
Report lemmaSuite(const Interpretation<W>& base, const Bounds& bounds) {
  Report r;
  r.merge(codiagTensorSuite(base, bounds));
  r.merge(copyMergeSuite(base, bounds));
  r.merge(fccdSuite(base, bounds));
  r.merge(enrichmentSuite(base, bounds));
  r.merge(opNaturalitySuite(base, bounds));
  r.merge(opDistributorSuite(base, bounds));
  r.merge(whiskerSuite(base, bounds));
  r.merge(transportSuite(base, bounds));
  return r;
}

/// Matrix-level coherence of the structural permutations over sizes 0..max.
template <Semiring W>
Report matrixCoherenceSuite(std::uint64_t seed, std::size_t max = 3) {
  Report rep;
  std::mt19937_64 rng(seed);
  auto rec = [&](const std::string& id, const Matrix<W>& a, const Matrix<W>& b) {
    EqResult r = compareMatrices(a, b);
    rep.add(id, r.equal(), r.equal() ? std::string() : r.describe());
  };
  for (std::size_t x = 0; x <= max; ++x)
    for (std::size_t y = 0; y <= max; ++y) {
      std::string xy = "[" + std::to_string(x) + "," + std::to_string(y) + "]";
      rep.add("matrix.perm.symT" + xy, isPermutation(symT<W>(x, y)));
      rep.add("matrix.perm.symP" + xy, isPermutation(symP<W>(x, y)));
      rec("matrix.inverse.symT" + xy, composeK(symT<W>(x, y), symT<W>(y, x)), identityK<W>(x * y));
      rec("matrix.inverse.symP" + xy, composeK(symP<W>(x, y), symP<W>(y, x)), identityK<W>(x + y));
      for (std::size_t z = 0; z <= max; ++z) {
        std::string xyz = "[" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + "]";
        Matrix<W> l = dl<W>(x, y, z), r = dr<W>(x, y, z);
        rep.add("matrix.perm.dl" + xyz, isPermutation(l));
        rep.add("matrix.perm.dr" + xyz, isPermutation(r));
        rec("matrix.inverse.dl" + xyz, composeK(l, transposeK(l)), identityK<W>(x * (y + z)));
        rec("matrix.inverse.dl-left" + xyz, composeK(transposeK(l), l), identityK<W>(x * y + x * z));
        rec("matrix.inverse.dr" + xyz, composeK(r, transposeK(r)), identityK<W>((x + y) * z));
        std::size_t x2 = detail::pick(rng, max + 1), y2 = detail::pick(rng, max + 1), z2 = detail::pick(rng, max + 1);
        Matrix<W> f = randomMatrix<W>(rng, x2, x), g = randomMatrix<W>(rng, y2, y), h = randomMatrix<W>(rng, z2, z);
        rec("matrix.natural.dl" + xyz, composeK(l, oplusK(tensorK(f, g), tensorK(f, h))),
            composeK(tensorK(f, oplusK(g, h)), dl<W>(x2, y2, z2)));
        rec("matrix.natural.dr" + xyz, composeK(r, oplusK(tensorK(f, h), tensorK(g, h))),
            composeK(tensorK(oplusK(f, g), h), dr<W>(x2, y2, z2)));
      }
    }
  return rep;
}

}  // namespace tapes
