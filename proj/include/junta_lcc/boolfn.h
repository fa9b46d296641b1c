// Copyright 2026 The Junta LCC Authors.
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

#ifndef JUNTA_LCC_BOOLFN_H_
#define JUNTA_LCC_BOOLFN_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "junta_lcc/point.h"
#include "junta_lcc/random.h"

namespace junta_lcc {

inline constexpr int kMaxTableArity = 24;

// Dense truth table of a function on k variables.
//
// Entry j holds f(a) where a_i is bit (i - 1) of j, so variable 1 is the
// least significant bit of the index. Tables are packed 64 entries per word;
// for k < 6 the unused high bits of the single word stay zero.
class TruthTable {
 public:
  // Constant-zero table. Throws std::invalid_argument unless 1 <= k <= 24.
  explicit TruthTable(int k);

  static TruthTable Constant(int k, bool value);
  static TruthTable And(int k);
  static TruthTable Parity(int k);
  // Strict majority; k must be odd.
  static TruthTable Majority(int k);
  static TruthTable FromFunction(int k,
                                 const std::function<bool(std::uint64_t)>& f);
  // Every one of the 2^(2^k) tables is equally likely.
  static TruthTable Random(int k, Rng& rng);

  int k() const { return k_; }
  std::uint64_t size() const { return std::uint64_t{1} << k_; }

  bool Get(std::uint64_t index) const {
    return (words_[index >> 6] >> (index & 63)) & 1u;
  }
  void Set(std::uint64_t index, bool value);

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& mutable_words() { return words_; }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  int k_;
  std::vector<std::uint64_t> words_;
};

// Table file format: a "k=<int>" header line followed by one line of
// lowercase hex, least significant digit first (digit d holds entries
// 4d..4d+3, entry 4d in its low bit).
std::string TableToHex(const TruthTable& tt);
TruthTable TableFromHex(int k, std::string_view hex);
void WriteTruthTable(std::ostream& out, const TruthTable& tt);
TruthTable ReadTruthTable(std::istream& in);

// GF(2) polynomial in algebraic normal form over m <= 64 variables. Each
// monomial is a bitmask over variables (bit i - 1 for variable i); the empty
// mask is the constant 1. Monomials are kept sorted and distinct.
class AnfPolynomial {
 public:
  AnfPolynomial(int m, std::vector<std::uint64_t> monomials);

  int m() const { return m_; }
  const std::vector<std::uint64_t>& monomials() const { return monomials_; }
  int Degree() const;

  // Evaluates at an assignment of variables 1..m packed as a bitmask.
  bool Evaluate(std::uint64_t assignment) const;
  // Evaluates at x_1..x_m; x.n() must be at least m.
  bool Evaluate(const Point& x) const;

  // Monomials as sorted lists of 1-based variable indices.
  std::vector<std::vector<int>> MonomialSets() const;

  friend bool operator==(const AnfPolynomial&, const AnfPolynomial&) = default;

 private:
  int m_;
  std::vector<std::uint64_t> monomials_;
};

// Each monomial of size <= max_degree is present independently with
// probability 1/2. Requires m <= 24.
AnfPolynomial RandomAnf(int m, int max_degree, Rng& rng);

AnfPolynomial AnfFromTruthTable(const TruthTable& tt);
// Requires 1 <= m <= 24.
TruthTable TruthTableFromAnf(const AnfPolynomial& anf);
// Largest monomial size; 0 for both constant functions.
int Degree(const TruthTable& tt);

// f_sigma for a k-variable core: core variable i is read from coordinate
// embedding[i - 1] (1-based) of an n-dimensional point.
class JuntaSpec {
 public:
  // Throws std::invalid_argument if the embedding is not an injective list
  // of core.k() coordinates in [1, n].
  JuntaSpec(std::size_t n, TruthTable core, std::vector<std::size_t> embedding);

  std::size_t n() const { return n_; }
  int k() const { return core_.k(); }
  const TruthTable& core() const { return core_; }
  const std::vector<std::size_t>& embedding() const { return embedding_; }

  // Core table index of the restriction of x to the embedding.
  std::uint64_t Restrict(const Point& x) const;

 private:
  std::size_t n_;
  TruthTable core_;
  std::vector<std::size_t> embedding_;
};

bool EvalJunta(const JuntaSpec& spec, const Point& x);
JuntaSpec Relabel(const JuntaSpec& spec, std::vector<std::size_t> new_embedding);

// Opaque function on n-dimensional points, the common currency between
// bases, oracles and estimators.
struct BlackBox {
  std::size_t n = 0;
  std::function<bool(const Point&)> eval;

  bool operator()(const Point& x) const { return eval(x); }
};

BlackBox MakeBlackBox(const JuntaSpec& spec);
// The polynomial reads coordinates 1..m of an n-dimensional point.
BlackBox MakeBlackBox(const AnfPolynomial& anf, std::size_t n);
// profile[w] is the value at Hamming weight w; profile.size() == n + 1.
BlackBox MakeSymmetricBlackBox(std::vector<int> profile);

}  // namespace junta_lcc

#endif  // JUNTA_LCC_BOOLFN_H_
