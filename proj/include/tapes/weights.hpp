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

#include <gmpxx.h>

#include <concepts>
#include <string>
#include <string_view>

#include "tapes/error.hpp"

namespace tapes {

/// Exact rationals. Weights of subdistribution kernels live here.
using Rational = mpq_class;
/// Arbitrary precision naturals, used for multiset multiplicities.
using Natural = mpz_class;

template <class W>
concept Semiring = requires(W a, const W& b) {
  { W(0) };
  { W(1) };
  { a += b };
  { a *= b };
  { a == b } -> std::convertible_to<bool>;
};

/// Parses `n` or `n/d` with nonnegative integers; decimals are rejected.
inline Rational parseRational(std::string_view text) {
  auto isDigits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
      if (ch < '0' || ch > '9') return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!isDigits(num) || !isDigits(den)) {
    throw Error(ErrorKind::Syntax, "malformed rational literal '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorKind::Syntax, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

template <class W>
struct WeightTraits;

template <>
struct WeightTraits<Rational> {
  static constexpr std::string_view name = "rational";
  static std::string format(const Rational& w) { return w.get_str(); }
  static Rational fromRational(const Rational& r) { return r; }
};

template <>
struct WeightTraits<Natural> {
  static constexpr std::string_view name = "natural";
  static std::string format(const Natural& w) { return w.get_str(); }
  static Natural fromRational(const Rational& r) {
    if (r.get_den() != 1 || r < 0) {
      throw Error(ErrorKind::ParamOutOfRange,
                  "expected a natural number, got " + r.get_str());
    }
    return Natural(r.get_num());
  }
};

template <class W>
std::string formatWeight(const W& w) {
  return WeightTraits<W>::format(w);
}

}  // namespace tapes
