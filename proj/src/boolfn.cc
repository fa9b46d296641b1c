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

#include "junta_lcc/boolfn.h"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace junta_lcc {
namespace {

constexpr std::uint64_t kLowHalfMasks[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

void CheckArity(int k) {
  if (k < 1 || k > kMaxTableArity) {
    throw std::invalid_argument("TruthTable: k must be in [1, 24], got " +
                                std::to_string(k));
  }
}

std::size_t TableWords(int k) {
  return k <= 6 ? 1 : std::size_t{1} << (k - 6);
}

std::uint64_t UsedMask(int k) {
  return k >= 6 ? ~std::uint64_t{0}
                : (std::uint64_t{1} << (std::uint64_t{1} << k)) - 1;
}

// In-place GF(2) Moebius transform; it is its own inverse.
void Moebius(std::vector<std::uint64_t>& words, int k) {
  for (int i = 0; i < std::min(k, 6); ++i) {
    const int shift = 1 << i;
    for (auto& w : words) w ^= (w & kLowHalfMasks[i]) << shift;
  }
  for (int i = 6; i < k; ++i) {
    const std::size_t stride = std::size_t{1} << (i - 6);
    for (std::size_t a = 0; a < words.size(); ++a) {
      if ((a & stride) == 0) words[a | stride] ^= words[a];
    }
  }
}

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

TruthTable::TruthTable(int k) : k_(k) {
  CheckArity(k);
  words_.assign(TableWords(k), 0);
}

TruthTable TruthTable::Constant(int k, bool value) {
  TruthTable tt(k);
  if (value) {
    for (auto& w : tt.words_) w = UsedMask(k);
  }
  return tt;
}

TruthTable TruthTable::And(int k) {
  TruthTable tt(k);
  tt.Set(tt.size() - 1, true);
  return tt;
}

TruthTable TruthTable::Parity(int k) {
  return FromFunction(k, [](std::uint64_t j) { return std::popcount(j) & 1; });
}

TruthTable TruthTable::Majority(int k) {
  if (k % 2 == 0) {
    throw std::invalid_argument("TruthTable: majority needs odd arity");
  }
  return FromFunction(k, [k](std::uint64_t j) { return std::popcount(j) > k / 2; });
}

TruthTable TruthTable::FromFunction(
    int k, const std::function<bool(std::uint64_t)>& f) {
  TruthTable tt(k);
  for (std::uint64_t j = 0; j < tt.size(); ++j) {
    if (f(j)) tt.words_[j >> 6] |= std::uint64_t{1} << (j & 63);
  }
  return tt;
}

TruthTable TruthTable::Random(int k, Rng& rng) {
  TruthTable tt(k);
  for (auto& w : tt.words_) w = rng.Next() & UsedMask(k);
  return tt;
}

void TruthTable::Set(std::uint64_t index, bool value) {
  if (index >= size()) throw std::out_of_range("TruthTable: index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (index & 63);
  if (value) {
    words_[index >> 6] |= mask;
  } else {
    words_[index >> 6] &= ~mask;
  }
}

std::string TableToHex(const TruthTable& tt) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::uint64_t digits = (tt.size() + 3) / 4;
  std::string out(digits, '0');
  for (std::uint64_t d = 0; d < digits; ++d) {
    const std::uint64_t bit = 4 * d;
    out[d] = kDigits[(tt.words()[bit >> 6] >> (bit & 63)) & 0xf];
  }
  return out;
}

TruthTable TableFromHex(int k, std::string_view hex) {
  TruthTable tt(k);
  const std::uint64_t digits = (tt.size() + 3) / 4;
  if (hex.size() != digits) {
    throw std::invalid_argument("TruthTable: expected " +
                                std::to_string(digits) + " hex digits, got " +
                                std::to_string(hex.size()));
  }
  auto& words = tt.mutable_words();
  for (std::uint64_t d = 0; d < digits; ++d) {
    const int v = HexValue(hex[d]);
    if (v < 0) {
      throw std::invalid_argument("TruthTable: invalid lowercase hex digit");
    }
    const std::uint64_t bit = 4 * d;
    words[bit >> 6] |= static_cast<std::uint64_t>(v) << (bit & 63);
  }
  if (words[0] & ~UsedMask(k)) {
    throw std::invalid_argument("TruthTable: hex sets entries beyond 2^k");
  }
  return tt;
}

void WriteTruthTable(std::ostream& out, const TruthTable& tt) {
  out << "k=" << tt.k() << '\n' << TableToHex(tt) << '\n';
}

TruthTable ReadTruthTable(std::istream& in) {
  std::string header;
  std::string hex;
  if (!std::getline(in, header) || !std::getline(in, hex)) {
    throw std::invalid_argument("TruthTable: truncated table file");
  }
  if (!header.empty() && header.back() == '\r') header.pop_back();
  if (!hex.empty() && hex.back() == '\r') hex.pop_back();
  if (!header.starts_with("k=")) {
    throw std::invalid_argument("TruthTable: missing 'k=' header");
  }
  int k = 0;
  try {
    std::size_t used = 0;
    k = std::stoi(header.substr(2), &used);
    if (used != header.size() - 2) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw std::invalid_argument("TruthTable: malformed header '" + header + "'");
  }
  return TableFromHex(k, hex);
}

AnfPolynomial::AnfPolynomial(int m, std::vector<std::uint64_t> monomials)
    : m_(m), monomials_(std::move(monomials)) {
  if (m < 1 || m > 64) {
    throw std::invalid_argument("AnfPolynomial: m must be in [1, 64]");
  }
  const std::uint64_t allowed =
      m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  for (auto mono : monomials_) {
    if (mono & ~allowed) {
      throw std::invalid_argument("AnfPolynomial: monomial uses variable > m");
    }
  }
  std::sort(monomials_.begin(), monomials_.end());
  if (std::adjacent_find(monomials_.begin(), monomials_.end()) !=
      monomials_.end()) {
    throw std::invalid_argument("AnfPolynomial: duplicate monomial");
  }
}

int AnfPolynomial::Degree() const {
  int d = 0;
  for (auto mono : monomials_) d = std::max(d, std::popcount(mono));
  return d;
}

bool AnfPolynomial::Evaluate(std::uint64_t assignment) const {
  bool value = false;
  for (auto mono : monomials_) value ^= (mono & ~assignment) == 0;
  return value;
}

bool AnfPolynomial::Evaluate(const Point& x) const {
  if (x.n() < static_cast<std::size_t>(m_)) {
    throw std::invalid_argument("AnfPolynomial: point has fewer than m coordinates");
  }
  std::uint64_t assignment = x.words()[0];
  if (m_ < 64) assignment &= (std::uint64_t{1} << m_) - 1;
  return Evaluate(assignment);
}

std::vector<std::vector<int>> AnfPolynomial::MonomialSets() const {
  std::vector<std::vector<int>> sets;
  sets.reserve(monomials_.size());
  for (auto mono : monomials_) {
    std::vector<int> vars;
    for (int i = 0; i < m_; ++i) {
      if ((mono >> i) & 1) vars.push_back(i + 1);
    }
    sets.push_back(std::move(vars));
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

AnfPolynomial RandomAnf(int m, int max_degree, Rng& rng) {
  if (m < 1 || m > kMaxTableArity) {
    throw std::invalid_argument("RandomAnf: m must be in [1, 24]");
  }
  std::vector<std::uint64_t> monomials;
  for (std::uint64_t mono = 0; mono < (std::uint64_t{1} << m); ++mono) {
    if (std::popcount(mono) <= max_degree && rng.Bit()) monomials.push_back(mono);
  }
  return AnfPolynomial(m, std::move(monomials));
}

AnfPolynomial AnfFromTruthTable(const TruthTable& tt) {
  std::vector<std::uint64_t> words = tt.words();
  Moebius(words, tt.k());
  std::vector<std::uint64_t> monomials;
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (std::uint64_t bits = words[w]; bits != 0; bits &= bits - 1) {
      monomials.push_back((w << 6) | std::countr_zero(bits));
    }
  }
  return AnfPolynomial(tt.k(), std::move(monomials));
}

TruthTable TruthTableFromAnf(const AnfPolynomial& anf) {
  TruthTable tt(anf.m());
  auto& words = tt.mutable_words();
  for (auto mono : anf.monomials()) {
    words[mono >> 6] |= std::uint64_t{1} << (mono & 63);
  }
  Moebius(words, anf.m());
  return tt;
}

int Degree(const TruthTable& tt) {
  std::vector<std::uint64_t> words = tt.words();
  Moebius(words, tt.k());
  int d = 0;
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (std::uint64_t bits = words[w]; bits != 0; bits &= bits - 1) {
      const std::uint64_t mono = (w << 6) | std::countr_zero(bits);
      d = std::max(d, std::popcount(mono));
    }
  }
  return d;
}

JuntaSpec::JuntaSpec(std::size_t n, TruthTable core,
                     std::vector<std::size_t> embedding)
    : n_(n), core_(std::move(core)), embedding_(std::move(embedding)) {
  if (n == 0) throw std::invalid_argument("JuntaSpec: n must be positive");
  if (embedding_.size() != static_cast<std::size_t>(core_.k())) {
    throw std::invalid_argument("JuntaSpec: embedding length must equal k");
  }
  std::vector<std::size_t> sorted = embedding_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 1 || sorted.back() > n) {
    throw std::invalid_argument("JuntaSpec: embedding coordinate out of [1, n]");
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("JuntaSpec: embedding is not injective");
  }
}

std::uint64_t JuntaSpec::Restrict(const Point& x) const {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < embedding_.size(); ++i) {
    index |= static_cast<std::uint64_t>(x.Get(embedding_[i])) << i;
  }
  return index;
}

bool EvalJunta(const JuntaSpec& spec, const Point& x) {
  CheckDimension(x, spec.n(), "EvalJunta");
  return spec.core().Get(spec.Restrict(x));
}

JuntaSpec Relabel(const JuntaSpec& spec, std::vector<std::size_t> new_embedding) {
  return JuntaSpec(spec.n(), spec.core(), std::move(new_embedding));
}

BlackBox MakeBlackBox(const JuntaSpec& spec) {
  return BlackBox{spec.n(), [spec](const Point& x) { return EvalJunta(spec, x); }};
}

BlackBox MakeBlackBox(const AnfPolynomial& anf, std::size_t n) {
  if (n < static_cast<std::size_t>(anf.m())) {
    throw std::invalid_argument("MakeBlackBox: n smaller than polynomial arity");
  }
  return BlackBox{n, [anf, n](const Point& x) {
                    CheckDimension(x, n, "AnfPolynomial");
                    return anf.Evaluate(x);
                  }};
}

BlackBox MakeSymmetricBlackBox(std::vector<int> profile) {
  if (profile.size() < 2) {
    throw std::invalid_argument("symmetric profile needs n + 1 >= 2 entries");
  }
  const std::size_t n = profile.size() - 1;
  return BlackBox{n, [profile = std::move(profile), n](const Point& x) {
                    CheckDimension(x, n, "symmetric function");
                    return profile[x.Weight()] != 0;
                  }};
}

}  // namespace junta_lcc
