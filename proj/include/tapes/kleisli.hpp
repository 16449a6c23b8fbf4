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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tapes/error.hpp"
#include "tapes/theory.hpp"
#include "tapes/weights.hpp"

namespace tapes {

/// Finite carrier 0..size-1, optionally labelled.
struct FinCarrier {
  std::size_t size = 0;
  std::vector<std::string> labels;

  friend bool operator==(const FinCarrier&, const FinCarrier&) = default;
};

/// Kleisli arrow between finite carriers: a cod×dom matrix over W, stored
/// column by column. Column x lists the nonzero (y, weight) pairs sorted by y.
template <Semiring W>
class Matrix {
 public:
  using Entry = std::pair<std::size_t, W>;
  using Column = std::vector<Entry>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t x = 0; x < n; ++x) m.columns_[x].emplace_back(x, W(1));
    return m;
  }

  /// Row-major dense literal: dense[y][x].
  static Matrix fromRows(std::size_t rows, std::size_t cols, const std::vector<std::vector<W>>& dense) {
    if (dense.size() != rows) throw Error(ErrorKind::DimensionMismatch, "matrix literal has wrong row count");
    Matrix m(rows, cols);
    for (std::size_t y = 0; y < rows; ++y) {
      if (dense[y].size() != cols) throw Error(ErrorKind::DimensionMismatch, "matrix literal has ragged rows");
      for (std::size_t x = 0; x < cols; ++x) {
        if (!(dense[y][x] == W(0))) m.columns_[x].emplace_back(y, dense[y][x]);
      }
    }
    return m;
  }

  /// Matrix with entry(f(x), x) = 1.
  static Matrix function(std::size_t rows, std::size_t cols, const std::function<std::size_t(std::size_t)>& f) {
    Matrix m(rows, cols);
    for (std::size_t x = 0; x < cols; ++x) {
      std::size_t y = f(x);
      if (y >= rows) throw Error(ErrorKind::DimensionMismatch, "function image out of range");
      m.columns_[x].emplace_back(y, W(1));
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  const Column& column(std::size_t x) const { return columns_.at(x); }

  W at(std::size_t y, std::size_t x) const {
    for (const auto& [row, w] : columns_.at(x)) {
      if (row == y) return w;
      if (row > y) break;
    }
    return W(0);
  }

  /// Adds w to entry (y, x).
  void add(std::size_t y, std::size_t x, const W& w) {
    if (y >= rows_ || x >= cols()) throw Error(ErrorKind::DimensionMismatch, "entry out of range");
    auto& col = columns_[x];
    auto it = col.begin();
    while (it != col.end() && it->first < y) ++it;
    if (it != col.end() && it->first == y) {
      it->second += w;
      if (it->second == W(0)) col.erase(it);
    } else if (!(w == W(0))) {
      col.insert(it, Entry(y, w));
    }
  }

  std::vector<std::vector<W>> dense() const {
    std::vector<std::vector<W>> out(rows_, std::vector<W>(cols(), W(0)));
    for (std::size_t x = 0; x < cols(); ++x) {
      for (const auto& [y, w] : columns_[x]) out[y][x] = w;
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.columns_ == b.columns_;
  }

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;

  template <Semiring V>
  friend Matrix<V> fromColumnMaps(std::size_t rows, std::vector<std::map<std::size_t, V>>&& cols);
  template <Semiring V>
  friend Matrix<V> fromColumns(std::size_t rows, std::vector<typename Matrix<V>::Column>&& cols);
};

/// Takes columns that are already sorted by row; drops zero entries.
template <Semiring W>
Matrix<W> fromColumns(std::size_t rows, std::vector<typename Matrix<W>::Column>&& cols) {
  Matrix<W> m;
  m.rows_ = rows;
  for (auto& col : cols) std::erase_if(col, [](const auto& e) { return e.second == W(0); });
  m.columns_ = std::move(cols);
  return m;
}

template <Semiring W>
Matrix<W> fromColumnMaps(std::size_t rows, std::vector<std::map<std::size_t, W>>&& cols) {
  Matrix<W> m(rows, cols.size());
  for (std::size_t x = 0; x < cols.size(); ++x) {
    for (auto& [y, w] : cols[x]) {
      if (!(w == W(0))) m.columns_[x].emplace_back(y, std::move(w));
    }
  }
  return m;
}

/// f ; g, i.e. the matrix product g·f.
template <Semiring W>
Matrix<W> composeK(const Matrix<W>& f, const Matrix<W>& g) {
  if (f.rows() != g.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "compose: codomain " + std::to_string(f.rows()) +
                                                  " vs domain " + std::to_string(g.cols()));
  }
  std::vector<typename Matrix<W>::Column> cols(f.cols());
  for (std::size_t x = 0; x < f.cols(); ++x) {
    auto& acc = cols[x];
    for (const auto& [y, a] : f.column(x)) {
      for (const auto& [z, b] : g.column(y)) {
        acc.emplace_back(z, a);
        acc.back().second *= b;
      }
    }
    if (f.column(x).size() > 1) {
      std::sort(acc.begin(), acc.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
      std::size_t out = 0;
      for (std::size_t i = 0; i < acc.size(); ++i) {
        if (out > 0 && acc[out - 1].first == acc[i].first) {
          acc[out - 1].second += acc[i].second;
        } else {
          if (out != i) acc[out] = std::move(acc[i]);
          ++out;
        }
      }
      acc.resize(out);
    }
  }
  return fromColumns<W>(g.rows(), std::move(cols));
}

/// Kronecker product; pair (x, x') is indexed x·|X'| + x'.
template <Semiring W>
Matrix<W> tensorK(const Matrix<W>& f, const Matrix<W>& g) {
  std::vector<typename Matrix<W>::Column> cols(f.cols() * g.cols());
  for (std::size_t x = 0; x < f.cols(); ++x) {
    for (std::size_t x2 = 0; x2 < g.cols(); ++x2) {
      auto& acc = cols[x * g.cols() + x2];
      acc.reserve(f.column(x).size() * g.column(x2).size());
      for (const auto& [y, a] : f.column(x)) {
        for (const auto& [y2, b] : g.column(x2)) {
          acc.emplace_back(y * g.rows() + y2, a);
          acc.back().second *= b;
        }
      }
    }
  }
  return fromColumns<W>(f.rows() * g.rows(), std::move(cols));
}

/// Block diagonal, left block first.
template <Semiring W>
Matrix<W> oplusK(const Matrix<W>& f, const Matrix<W>& g) {
  std::vector<typename Matrix<W>::Column> cols;
  cols.reserve(f.cols() + g.cols());
  for (std::size_t x = 0; x < f.cols(); ++x) cols.push_back(f.column(x));
  for (std::size_t x = 0; x < g.cols(); ++x) {
    auto& col = cols.emplace_back(g.column(x));
    for (auto& e : col) e.first += f.rows();
  }
  return fromColumns<W>(f.rows() + g.rows(), std::move(cols));
}

/// Block diagonal of several matrices, in order.
template <Semiring W>
Matrix<W> directSumK(const std::vector<const Matrix<W>*>& blocks) {
  std::vector<typename Matrix<W>::Column> cols;
  std::size_t total = 0, offset = 0;
  for (const auto* b : blocks) total += b->cols();
  cols.reserve(total);
  for (const auto* b : blocks) {
    for (std::size_t x = 0; x < b->cols(); ++x) {
      auto& col = cols.emplace_back(b->column(x));
      for (auto& e : col) e.first += offset;
    }
    offset += b->rows();
  }
  return fromColumns<W>(offset, std::move(cols));
}

template <Semiring W>
Matrix<W> scaleK(const W& s, const Matrix<W>& f) {
  std::vector<std::map<std::size_t, W>> cols(f.cols());
  for (std::size_t x = 0; x < f.cols(); ++x) {
    for (const auto& [y, a] : f.column(x)) {
      W w = a;
      w *= s;
      cols[x].emplace(y, std::move(w));
    }
  }
  return fromColumnMaps(f.rows(), std::move(cols));
}

template <Semiring W>
Matrix<W> addK(const Matrix<W>& f, const Matrix<W>& g) {
  if (f.rows() != g.rows() || f.cols() != g.cols()) throw Error(ErrorKind::DimensionMismatch, "add: shapes differ");
  Matrix<W> out = f;
  for (std::size_t x = 0; x < g.cols(); ++x) {
    for (const auto& [y, a] : g.column(x)) out.add(y, x, a);
  }
  return out;
}

template <Semiring W>
Matrix<W> transposeK(const Matrix<W>& f) {
  std::vector<std::map<std::size_t, W>> cols(f.rows());
  for (std::size_t x = 0; x < f.cols(); ++x) {
    for (const auto& [y, a] : f.column(x)) cols[y].emplace(x, a);
  }
  return fromColumnMaps(f.cols(), std::move(cols));
}

/// True iff f is square with exactly one entry 1 per row and column.
template <Semiring W>
bool isPermutation(const Matrix<W>& f) {
  if (f.rows() != f.cols()) return false;
  std::vector<bool> hit(f.rows(), false);
  for (std::size_t x = 0; x < f.cols(); ++x) {
    const auto& col = f.column(x);
    if (col.size() != 1 || !(col[0].second == W(1)) || hit[col[0].first]) return false;
    hit[col[0].first] = true;
  }
  return true;
}

/// Column sums at most one (meaningful for nonnegative rationals).
inline bool isSubstochastic(const Matrix<Rational>& f) {
  for (std::size_t x = 0; x < f.cols(); ++x) {
    Rational total = 0;
    for (const auto& [y, a] : f.column(x)) {
      if (a < 0) return false;
      total += a;
    }
    if (total > 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Structural arrows.

template <Semiring W>
Matrix<W> identityK(std::size_t n) {
  return Matrix<W>::identity(n);
}

/// σ⊗ : m·n → n·m, x·n+y ↦ y·m+x.
template <Semiring W>
Matrix<W> symT(std::size_t m, std::size_t n) {
  return Matrix<W>::function(m * n, m * n, [m, n](std::size_t i) { return (i % n) * m + i / n; });
}

/// σ⊕ : m+n → n+m.
template <Semiring W>
Matrix<W> symP(std::size_t m, std::size_t n) {
  return Matrix<W>::function(m + n, m + n, [m, n](std::size_t i) { return i < m ? n + i : i - m; });
}

/// δˡ : X×(Y+Z) → X×Y + X×Z.
template <Semiring W>
Matrix<W> dl(std::size_t x, std::size_t y, std::size_t z) {
  std::size_t size = x * (y + z);
  return Matrix<W>::function(size, size, [=](std::size_t i) {
    std::size_t a = i / (y + z);
    std::size_t b = i % (y + z);
    return b < y ? a * y + b : x * y + a * z + (b - y);
  });
}

/// δʳ : (X+Y)×Z → X×Z + Y×Z.
template <Semiring W>
Matrix<W> dr(std::size_t x, std::size_t y, std::size_t z) {
  std::size_t size = (x + y) * z;
  return Matrix<W>::function(size, size, [=](std::size_t i) {
    std::size_t a = i / z;
    std::size_t c = i % z;
    return a < x ? a * z + c : x * z + (a - x) * z + c;
  });
}

template <Semiring W>
Matrix<W> copierK(std::size_t n) {
  return Matrix<W>::function(n * n, n, [n](std::size_t x) { return x * n + x; });
}

template <Semiring W>
Matrix<W> dischargerK(std::size_t n) {
  return Matrix<W>::function(1, n, [](std::size_t) { return std::size_t{0}; });
}

template <Semiring W>
Matrix<W> codiagK(std::size_t n) {
  return Matrix<W>::function(n, 2 * n, [n](std::size_t i) { return i % (n == 0 ? 1 : n); });
}

template <Semiring W>
Matrix<W> cobangK(std::size_t n) {
  return Matrix<W>(n, 0);
}

enum class KStructure { Id, SymT, SymP, Dl, Dr, Copier, Discharger, Codiag, Cobang };

/// Dispatcher over the structural arrows; unused sizes are ignored.
template <Semiring W>
Matrix<W> structuralK(KStructure kind, std::size_t a, std::size_t b = 0, std::size_t c = 0) {
  switch (kind) {
    case KStructure::Id:
      return identityK<W>(a);
    case KStructure::SymT:
      return symT<W>(a, b);
    case KStructure::SymP:
      return symP<W>(a, b);
    case KStructure::Dl:
      return dl<W>(a, b, c);
    case KStructure::Dr:
      return dr<W>(a, b, c);
    case KStructure::Copier:
      return copierK<W>(a);
    case KStructure::Discharger:
      return dischargerK<W>(a);
    case KStructure::Codiag:
      return codiagK<W>(a);
    case KStructure::Cobang:
      return cobangK<W>(a);
  }
  return identityK<W>(a);
}

// ---------------------------------------------------------------------------
// Models of theories.

/// Weights w(f) ∈ W^arity for every operation of a theory.
template <Semiring W>
struct TheoryModel {
  std::string kind;  // "PCA" or "CM"
  AlgebraicTheory theory;
  std::map<OpSymbol, std::vector<W>> weights;

  const std::vector<W>& weightsOf(const OpSymbol& f) const {
    auto it = weights.find(f);
    if (it == weights.end()) throw Error(ErrorKind::UnknownOp, "operation " + toString(f) + " has no weights");
    return it->second;
  }
};

/// w(+_p) = (p, 1−p), w(star) = ().
inline TheoryModel<Rational> pcaModel(const AlgebraicTheory& theory) {
  TheoryModel<Rational> m{"PCA", theory, {}};
  for (const auto& f : theory.ops) {
    if (f.name == "+" && f.arity == 2 && f.params.size() == 1) {
      m.weights[f] = {f.params[0], Rational(1 - f.params[0])};
    } else if (f.name == "star" && f.arity == 0) {
      m.weights[f] = {};
    } else {
      throw Error(ErrorKind::UnknownOp, "no PCA weights for " + toString(f));
    }
  }
  return m;
}

/// w(+) = (1, 1), w(0) = ().
template <Semiring W>
TheoryModel<W> cmModel(const AlgebraicTheory& theory) {
  TheoryModel<W> m{"CM", theory, {}};
  for (const auto& f : theory.ops) {
    if (f.name == "+" && f.arity == 2 && f.params.empty()) {
      m.weights[f] = {W(1), W(1)};
    } else if (f.name == "0" && f.arity == 0) {
      m.weights[f] = {};
    } else {
      throw Error(ErrorKind::UnknownOp, "no CM weights for " + toString(f));
    }
  }
  return m;
}

/// ⟨f⟩ on a carrier of size n: (arity·n)×n, block j = w_j(f)·I.
template <Semiring W>
Matrix<W> opK(const OpSymbol& f, const TheoryModel<W>& model, std::size_t n) {
  const auto& w = model.weightsOf(f);
  if (w.size() != f.arity) throw Error(ErrorKind::ArityMismatch, "weight vector of " + toString(f) + " has wrong length");
  std::vector<std::map<std::size_t, W>> cols(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (!(w[j] == W(0))) cols[x].emplace(j * n + x, w[j]);
    }
  }
  return fromColumnMaps(f.arity * n, std::move(cols));
}

/// Linear weight of each variable: var i ↦ e_i, f(t…) ↦ Σⱼ wⱼ(f)·eval(tⱼ).
template <Semiring W>
std::vector<W> evalVector(const SigmaTerm& t, std::size_t n, const TheoryModel<W>& model) {
  std::vector<W> out(n, W(0));
  if (t.isVar()) {
    if (t.index() > n) throw Error(ErrorKind::OutOfContext, "variable outside context");
    out[t.index() - 1] = W(1);
    return out;
  }
  const auto& w = model.weightsOf(t.op());
  if (w.size() != t.args().size()) throw Error(ErrorKind::ArityMismatch, "arity mismatch in " + toString(t));
  for (std::size_t j = 0; j < w.size(); ++j) {
    auto sub = evalVector(t.args()[j], n, model);
    for (std::size_t i = 0; i < n; ++i) {
      sub[i] *= w[j];
      out[i] += sub[i];
    }
  }
  return out;
}

/// Labels of equations whose two sides have different weight vectors.
template <Semiring W>
std::vector<std::string> modelSoundness(const TheoryModel<W>& model) {
  std::vector<std::string> failing;
  for (const auto& eq : model.theory.equations) {
    if (evalVector(eq.lhs, eq.context, model) != evalVector(eq.rhs, eq.context, model)) failing.push_back(eq.label);
  }
  return failing;
}

template <Semiring W>
std::string toString(const Matrix<W>& m) {
  std::string out = "[";
  for (std::size_t y = 0; y < m.rows(); ++y) {
    out += y ? ",[" : "[";
    for (std::size_t x = 0; x < m.cols(); ++x) out += (x ? "," : "") + formatWeight(m.at(y, x));
    out += "]";
  }
  return out + "]";
}

}  // namespace tapes
