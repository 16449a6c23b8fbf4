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

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tapes/error.hpp"

namespace tapes {

/// Name of a basic sort.
class SortId {
 public:
  explicit SortId(std::string name) : name_(std::move(name)) {
    if (name_.empty()) throw Error(ErrorKind::UnknownSort, "sort names must be nonempty");
  }

  const std::string& name() const noexcept { return name_; }

  friend auto operator<=>(const SortId&, const SortId&) = default;
  friend bool operator==(const SortId&, const SortId&) = default;

 private:
  std::string name_;
};

/// A word of sorts; the empty word is the unit 1.
struct Monomial {
  std::vector<SortId> sorts;

  Monomial() = default;
  Monomial(std::initializer_list<SortId> s) : sorts(s) {}
  explicit Monomial(std::vector<SortId> s) : sorts(std::move(s)) {}

  static Monomial unit() { return {}; }
  bool isUnit() const noexcept { return sorts.empty(); }
  std::size_t length() const noexcept { return sorts.size(); }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline Monomial concat(const Monomial& u, const Monomial& v) {
  Monomial out = u;
  out.sorts.insert(out.sorts.end(), v.sorts.begin(), v.sorts.end());
  return out;
}

/// A word of monomials; the empty word is 0. Implicitly built from one monomial.
struct Polynomial {
  std::vector<Monomial> monomials;

  Polynomial() = default;
  Polynomial(Monomial m) : monomials{std::move(m)} {}  // NOLINT(google-explicit-constructor)
  Polynomial(std::initializer_list<Monomial> ms) : monomials(ms) {}
  explicit Polynomial(std::vector<Monomial> ms) : monomials(std::move(ms)) {}

  static Polynomial zero() { return {}; }
  bool isZero() const noexcept { return monomials.empty(); }
  std::size_t size() const noexcept { return monomials.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials.at(i); }

  /// The polynomial with the first monomial removed.
  Polynomial tail() const {
    if (monomials.empty()) throw std::out_of_range("tail of the zero polynomial");
    return Polynomial(std::vector<Monomial>(monomials.begin() + 1, monomials.end()));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend auto operator<=>(const Polynomial&, const Polynomial&) = default;
};

/// Concatenation; the strict ⊕ of polynomials.
inline Polynomial plus(const Polynomial& p, const Polynomial& q) {
  Polynomial out = p;
  out.monomials.insert(out.monomials.end(), q.monomials.begin(), q.monomials.end());
  return out;
}

/// n-fold ⊕ of p with itself.
inline Polynomial power(const Polynomial& p, std::size_t n) {
  Polynomial out;
  for (std::size_t i = 0; i < n; ++i) out = plus(out, p);
  return out;
}

/// ⊕ᵢ⊕ⱼ UᵢVⱼ, i outer.
inline Polynomial polyTensor(const Polynomial& p, const Polynomial& q) {
  Polynomial out;
  out.monomials.reserve(p.size() * q.size());
  for (const auto& u : p.monomials) {
    for (const auto& v : q.monomials) out.monomials.push_back(concat(u, v));
  }
  return out;
}

inline std::string toString(const Monomial& u) {
  if (u.isUnit()) return "1";
  bool compact = true;
  for (const auto& s : u.sorts) compact = compact && s.name().size() == 1;
  std::string out;
  for (std::size_t i = 0; i < u.sorts.size(); ++i) {
    if (i > 0 && !compact) out += ' ';
    out += u.sorts[i].name();
  }
  return out;
}

inline std::string toString(const Polynomial& p) {
  if (p.isZero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += " (+) ";
    out += toString(p.monomials[i]);
  }
  return out;
}

/// Unnormalized object expression.
class ObjTerm {
 public:
  enum class Kind { Sort, Unit, Zero, Tensor, Sum };

  static ObjTerm sort(SortId a) { return ObjTerm(std::make_shared<Node>(Node{Kind::Sort, std::move(a), {}, {}})); }
  static ObjTerm unit() { return ObjTerm(std::make_shared<Node>(Node{Kind::Unit, std::nullopt, {}, {}})); }
  static ObjTerm zero() { return ObjTerm(std::make_shared<Node>(Node{Kind::Zero, std::nullopt, {}, {}})); }
  static ObjTerm tensor(const ObjTerm& x, const ObjTerm& y) {
    return ObjTerm(std::make_shared<Node>(Node{Kind::Tensor, std::nullopt, x.node_, y.node_}));
  }
  static ObjTerm sum(const ObjTerm& x, const ObjTerm& y) {
    return ObjTerm(std::make_shared<Node>(Node{Kind::Sum, std::nullopt, x.node_, y.node_}));
  }

  Kind kind() const { return node_->kind; }
  const SortId& sortId() const { return *node_->sort; }
  ObjTerm left() const { return ObjTerm(node_->left); }
  ObjTerm right() const { return ObjTerm(node_->right); }

  friend bool operator==(const ObjTerm& x, const ObjTerm& y) {
    if (x.node_ == y.node_) return true;
    if (x.kind() != y.kind()) return false;
    switch (x.kind()) {
      case Kind::Sort:
        return x.sortId() == y.sortId();
      case Kind::Unit:
      case Kind::Zero:
        return true;
      default:
        return x.left() == y.left() && x.right() == y.right();
    }
  }

 private:
  struct Node {
    Kind kind;
    std::optional<SortId> sort;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  explicit ObjTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline std::string toString(const ObjTerm& t) {
  switch (t.kind()) {
    case ObjTerm::Kind::Sort:
      return t.sortId().name();
    case ObjTerm::Kind::Unit:
      return "1";
    case ObjTerm::Kind::Zero:
      return "0";
    case ObjTerm::Kind::Tensor:
      return "(" + toString(t.left()) + " (x) " + toString(t.right()) + ")";
    case ObjTerm::Kind::Sum:
      return "(" + toString(t.left()) + " (+) " + toString(t.right()) + ")";
  }
  return {};
}

namespace detail {

// Both arguments are in normal form; returns the normal form of their ⊗.
// Rules are tried in the order below; left operands are reduced before right ones.
inline ObjTerm reduceTensor(const ObjTerm& x, const ObjTerm& y);

inline ObjTerm reduceSum(const ObjTerm& x, const ObjTerm& y) {
  using K = ObjTerm::Kind;
  if (x.kind() == K::Sum) {
    ObjTerm inner = reduceSum(x.right(), y);
    return reduceSum(x.left(), inner);
  }
  if (x.kind() == K::Zero) return y;
  if (y.kind() == K::Zero) return x;
  return ObjTerm::sum(x, y);
}

inline ObjTerm reduceTensor(const ObjTerm& x, const ObjTerm& y) {
  using K = ObjTerm::Kind;
  if (x.kind() == K::Tensor) {
    ObjTerm inner = reduceTensor(x.right(), y);
    return reduceTensor(x.left(), inner);
  }
  if (x.kind() == K::Unit) return y;
  if (y.kind() == K::Unit) return x;
  if (x.kind() == K::Sum) {
    ObjTerm l = reduceTensor(x.left(), y);
    ObjTerm r = reduceTensor(x.right(), y);
    return reduceSum(l, r);
  }
  if (x.kind() == K::Zero) return ObjTerm::zero();
  if (y.kind() == K::Zero) return ObjTerm::zero();
  if (x.kind() == K::Sort && y.kind() == K::Sum) {
    ObjTerm l = reduceTensor(x, y.left());
    ObjTerm r = reduceTensor(x, y.right());
    return reduceSum(l, r);
  }
  return ObjTerm::tensor(x, y);
}

inline Monomial readMonomial(const ObjTerm& t) {
  using K = ObjTerm::Kind;
  Monomial out;
  ObjTerm cur = t;
  while (cur.kind() == K::Tensor) {
    if (cur.left().kind() != K::Sort) throw std::logic_error("not a normal monomial: " + toString(t));
    out.sorts.push_back(cur.left().sortId());
    cur = cur.right();
  }
  if (cur.kind() == K::Sort) {
    out.sorts.push_back(cur.sortId());
  } else if (cur.kind() != K::Unit) {
    throw std::logic_error("not a normal monomial: " + toString(t));
  }
  return out;
}

}  // namespace detail

/// Normal form as a term, innermost-leftmost.
inline ObjTerm rewriteToNormalForm(const ObjTerm& t) {
  using K = ObjTerm::Kind;
  switch (t.kind()) {
    case K::Sort:
    case K::Unit:
    case K::Zero:
      return t;
    case K::Tensor: {
      ObjTerm l = rewriteToNormalForm(t.left());
      ObjTerm r = rewriteToNormalForm(t.right());
      return detail::reduceTensor(l, r);
    }
    case K::Sum: {
      ObjTerm l = rewriteToNormalForm(t.left());
      ObjTerm r = rewriteToNormalForm(t.right());
      return detail::reduceSum(l, r);
    }
  }
  return t;
}

/// Reads a term in normal form as a polynomial.
inline Polynomial readNormalForm(const ObjTerm& t) {
  using K = ObjTerm::Kind;
  Polynomial out;
  if (t.kind() == K::Zero) return out;
  ObjTerm cur = t;
  while (cur.kind() == K::Sum) {
    out.monomials.push_back(detail::readMonomial(cur.left()));
    cur = cur.right();
  }
  out.monomials.push_back(detail::readMonomial(cur));
  return out;
}

inline Polynomial normalize(const ObjTerm& t) { return readNormalForm(rewriteToNormalForm(t)); }

inline void collectSorts(const ObjTerm& t, std::set<SortId>& out) {
  switch (t.kind()) {
    case ObjTerm::Kind::Sort:
      out.insert(t.sortId());
      break;
    case ObjTerm::Kind::Tensor:
    case ObjTerm::Kind::Sum:
      collectSorts(t.left(), out);
      collectSorts(t.right(), out);
      break;
    default:
      break;
  }
}

/// As `normalize`, rejecting sorts outside `registered`.
inline Polynomial normalize(const ObjTerm& t, const std::set<SortId>& registered) {
  std::set<SortId> used;
  collectSorts(t, used);
  for (const auto& s : used) {
    if (!registered.contains(s)) throw Error(ErrorKind::UnknownSort, "unregistered sort '" + s.name() + "'");
  }
  return normalize(t);
}

inline ObjTerm embed(const Monomial& u) {
  if (u.isUnit()) return ObjTerm::unit();
  ObjTerm out = ObjTerm::sort(u.sorts.back());
  for (std::size_t i = u.sorts.size() - 1; i-- > 0;) out = ObjTerm::tensor(ObjTerm::sort(u.sorts[i]), out);
  return out;
}

/// Right-nested n-ary sums of right-nested products.
inline ObjTerm embed(const Polynomial& p) {
  if (p.isZero()) return ObjTerm::zero();
  ObjTerm out = embed(p.monomials.back());
  for (std::size_t i = p.size() - 1; i-- > 0;) out = ObjTerm::sum(embed(p.monomials[i]), out);
  return out;
}

}  // namespace tapes
