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
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tapes/error.hpp"
#include "tapes/weights.hpp"

namespace tapes {

/// Operation symbol, possibly carrying rational parameters (e.g. +_p).
struct OpSymbol {
  std::string name;
  std::size_t arity = 0;
  std::vector<Rational> params;

  friend bool operator==(const OpSymbol& a, const OpSymbol& b) {
    return a.name == b.name && a.arity == b.arity && a.params == b.params;
  }
  friend bool operator<(const OpSymbol& a, const OpSymbol& b) {
    if (a.name != b.name) return a.name < b.name;
    if (a.arity != b.arity) return a.arity < b.arity;
    return std::lexicographical_compare(a.params.begin(), a.params.end(), b.params.begin(),
                                        b.params.end());
  }
};

/// Surface spelling: `+_1/3`, `+`, `star`, `0`, `f`.
inline std::string toString(const OpSymbol& op) {
  std::string out = op.name;
  for (std::size_t i = 0; i < op.params.size(); ++i) out += (i == 0 ? "_" : ",") + op.params[i].get_str();
  return out;
}

namespace ops {

inline OpSymbol choice(const Rational& p) { return {"+", 2, {p}}; }
inline OpSymbol star() { return {"star", 0, {}}; }
inline OpSymbol plus() { return {"+", 2, {}}; }
inline OpSymbol zero() { return {"0", 0, {}}; }

}  // namespace ops

/// Σ-term over a context of variables x1..xn.
class SigmaTerm {
 public:
  static SigmaTerm var(std::size_t index) {
    if (index == 0) throw Error(ErrorKind::OutOfContext, "variables are 1-based");
    auto node = std::make_shared<Node>();
    node->index = index;
    return SigmaTerm(std::move(node));
  }

  static SigmaTerm app(OpSymbol op, std::vector<SigmaTerm> args) {
    auto node = std::make_shared<Node>();
    node->op = std::move(op);
    node->args = std::move(args);
    return SigmaTerm(std::move(node));
  }

  bool isVar() const { return node_->index != 0; }
  std::size_t index() const { return node_->index; }
  const OpSymbol& op() const { return node_->op; }
  const std::vector<SigmaTerm>& args() const { return node_->args; }

  friend bool operator==(const SigmaTerm& a, const SigmaTerm& b) {
    if (a.node_ == b.node_) return true;
    if (a.isVar() || b.isVar()) return a.isVar() == b.isVar() && a.index() == b.index();
    return a.op() == b.op() && a.args() == b.args();
  }

 private:
  struct Node {
    std::size_t index = 0;  // nonzero for variables
    OpSymbol op;
    std::vector<SigmaTerm> args;
  };

  explicit SigmaTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline std::string toString(const SigmaTerm& t) {
  if (t.isVar()) return "x" + std::to_string(t.index());
  const auto& op = t.op();
  if (op.arity == 2 && op.name == "+" && t.args().size() == 2) {
    auto side = [](const SigmaTerm& s) {
      bool infix = !s.isVar() && s.op().name == "+" && s.args().size() == 2;
      return infix ? "(" + toString(s) + ")" : toString(s);
    };
    return side(t.args()[0]) + " " + toString(op) + " " + side(t.args()[1]);
  }
  std::string out = toString(op);
  if (t.args().empty()) return out;
  out += "(";
  for (std::size_t i = 0; i < t.args().size(); ++i) out += (i ? ", " : "") + toString(t.args()[i]);
  return out + ")";
}

/// Throws unless every variable lies in 1..n and every arity matches.
inline void checkTerm(const SigmaTerm& t, std::size_t n) {
  if (t.isVar()) {
    if (t.index() > n) {
      throw Error(ErrorKind::OutOfContext, "variable x" + std::to_string(t.index()) +
                                               " outside context of size " + std::to_string(n));
    }
    return;
  }
  if (t.args().size() != t.op().arity) {
    throw Error(ErrorKind::ArityMismatch, "operation " + toString(t.op()) + " expects " +
                                              std::to_string(t.op().arity) + " arguments, got " +
                                              std::to_string(t.args().size()));
  }
  for (const auto& a : t.args()) checkTerm(a, n);
}

/// Largest variable index occurring in t (0 if none).
inline std::size_t maxVariable(const SigmaTerm& t) {
  if (t.isVar()) return t.index();
  std::size_t m = 0;
  for (const auto& a : t.args()) m = std::max(m, maxVariable(a));
  return m;
}

/// Simultaneous substitution of x_i by args[i-1].
inline SigmaTerm substitute(const SigmaTerm& t, const std::vector<SigmaTerm>& args) {
  if (t.isVar()) {
    if (t.index() > args.size()) {
      throw Error(ErrorKind::OutOfContext, "substitution has no entry for x" + std::to_string(t.index()));
    }
    return args[t.index() - 1];
  }
  std::vector<SigmaTerm> out;
  out.reserve(t.args().size());
  for (const auto& a : t.args()) out.push_back(substitute(a, args));
  return SigmaTerm::app(t.op(), std::move(out));
}

struct Equation {
  std::string label;
  std::size_t context = 0;
  SigmaTerm lhs;
  SigmaTerm rhs;
};

struct AlgebraicTheory {
  std::string name;
  std::vector<OpSymbol> ops;
  std::vector<Equation> equations;

  bool hasOp(const OpSymbol& op) const { return std::find(ops.begin(), ops.end(), op) != ops.end(); }

  void addOp(const OpSymbol& op) {
    if (!hasOp(op)) ops.push_back(op);
  }
};

namespace detail {

inline void requireOpen(const Rational& p) {
  if (p <= 0 || p >= 1) {
    throw Error(ErrorKind::ParamOutOfRange, "choice parameter " + p.get_str() + " not in (0,1)");
  }
}

inline void addPcaEquations(AlgebraicTheory& th, const std::vector<Rational>& params) {
  auto x = [](std::size_t i) { return SigmaTerm::var(i); };
  auto mix = [](const Rational& p, SigmaTerm a, SigmaTerm b) {
    return SigmaTerm::app(ops::choice(p), {std::move(a), std::move(b)});
  };
  th.addOp(ops::star());
  for (const auto& p : params) {
    th.addOp(ops::choice(p));
    th.addOp(ops::choice(1 - p));
  }
  for (const auto& p : params) {
    for (const auto& q : params) {
      Rational pq = p * q;
      Rational inner = p * (1 - q) / (1 - pq);
      th.addOp(ops::choice(pq));
      th.addOp(ops::choice(inner));
      th.equations.push_back({"PCA.assoc[p=" + p.get_str() + ",q=" + q.get_str() + "]", 3,
                              mix(p, mix(q, x(1), x(2)), x(3)),
                              mix(pq, x(1), mix(inner, x(2), x(3)))});
    }
  }
  for (const auto& p : params) {
    th.equations.push_back({"PCA.comm[p=" + p.get_str() + "]", 2, mix(p, x(1), x(2)),
                            mix(1 - p, x(2), x(1))});
  }
  for (const auto& p : params) {
    th.equations.push_back({"PCA.idem[p=" + p.get_str() + "]", 1, mix(p, x(1), x(1)), x(1)});
  }
}

inline void addCmEquations(AlgebraicTheory& th) {
  auto x = [](std::size_t i) { return SigmaTerm::var(i); };
  auto add = [](SigmaTerm a, SigmaTerm b) { return SigmaTerm::app(ops::plus(), {std::move(a), std::move(b)}); };
  SigmaTerm zero = SigmaTerm::app(ops::zero(), {});
  th.addOp(ops::plus());
  th.addOp(ops::zero());
  th.equations.push_back({"CM.assoc", 3, add(add(x(1), x(2)), x(3)), add(x(1), add(x(2), x(3)))});
  th.equations.push_back({"CM.comm", 2, add(x(1), x(2)), add(x(2), x(1))});
  th.equations.push_back({"CM.unit", 1, add(x(1), zero), x(1)});
}

}  // namespace detail

/// "PCA" (pointed convex algebras) or "CM" (commutative monoids), with the
/// equation schemas instantiated at every combination of `params`.
inline AlgebraicTheory builtinTheory(const std::string& name, std::vector<Rational> params = {}) {
  AlgebraicTheory th;
  th.name = name;
  if (name == "PCA") {
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end()), params.end());
    for (const auto& p : params) detail::requireOpen(p);
    detail::addPcaEquations(th, params);
  } else if (name == "CM") {
    if (!params.empty()) throw Error(ErrorKind::ParamOutOfRange, "CM takes no parameters");
    detail::addCmEquations(th);
  } else {
    throw Error(ErrorKind::Resolution, "unknown built-in theory '" + name + "'");
  }
  for (const auto& eq : th.equations) {
    checkTerm(eq.lhs, eq.context);
    checkTerm(eq.rhs, eq.context);
  }
  return th;
}

}  // namespace tapes
