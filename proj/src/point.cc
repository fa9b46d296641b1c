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

#include "junta_lcc/point.h"

#include <bit>
#include <stdexcept>

namespace junta_lcc {
namespace {

std::size_t WordCount(std::size_t n) { return (n + 63) / 64; }

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Point::Point(std::size_t n) : n_(n), words_(WordCount(n), 0) {
  if (n == 0) throw std::invalid_argument("Point: n must be positive");
}

Point Point::AllOnes(std::size_t n) {
  Point p(n);
  for (auto& w : p.words_) w = ~std::uint64_t{0};
  p.ClearPadding();
  return p;
}

Point Point::FromBits(const std::vector<int>& bits) {
  Point p(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1) {
      throw std::invalid_argument("Point: bits must be 0 or 1");
    }
    p.Set(i + 1, bits[i] == 1);
  }
  return p;
}

Point Point::FromHex(std::string_view hex, std::size_t n) {
  Point p(n);
  const std::size_t digits = (n + 3) / 4;
  if (hex.size() != digits) {
    throw std::invalid_argument("Point: expected " + std::to_string(digits) +
                                " hex digits for n=" + std::to_string(n) +
                                ", got " + std::to_string(hex.size()));
  }
  for (std::size_t d = 0; d < digits; ++d) {
    const int v = HexValue(hex[d]);
    if (v < 0) throw std::invalid_argument("Point: invalid hex digit");
    for (int b = 0; b < 4; ++b) {
      const std::size_t coord = 4 * d + b + 1;
      const bool bit = (v >> b) & 1;
      if (coord > n) {
        if (bit) throw std::invalid_argument("Point: hex sets bits beyond n");
        continue;
      }
      p.Set(coord, bit);
    }
  }
  return p;
}

Point& Point::operator^=(const Point& other) {
  CheckDimension(other, n_, "Point xor");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

Point Point::Complement() const {
  Point p = *this;
  for (auto& w : p.words_) w = ~w;
  p.ClearPadding();
  return p;
}

std::size_t Point::Weight() const {
  std::size_t total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

std::size_t Point::WeightInRange(std::size_t first, std::size_t last) const {
  if (first < 1 || last > n_ || first > last + 1) {
    throw std::invalid_argument("Point: weight range out of bounds");
  }
  if (first > last) return 0;
  const std::size_t lo = first - 1;
  const std::size_t hi = last;  // exclusive, 0-based
  std::size_t total = 0;
  std::size_t w = lo >> 6;
  const std::size_t w_end = (hi - 1) >> 6;
  for (; w <= w_end; ++w) {
    std::uint64_t word = words_[w];
    const std::size_t base = w << 6;
    if (base < lo) word &= ~std::uint64_t{0} << (lo - base);
    if (hi < base + 64) word &= (std::uint64_t{1} << (hi - base)) - 1;
    total += std::popcount(word);
  }
  return total;
}

std::string Point::ToHex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = (n_ + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    const std::size_t bit = 4 * d;
    out[d] = kDigits[(words_[bit >> 6] >> (bit & 63)) & 0xf];
  }
  return out;
}

void Point::ClearPadding() {
  const std::size_t tail = n_ & 63;
  if (tail != 0) words_.back() &= (std::uint64_t{1} << tail) - 1;
}

void CheckDimension(const Point& x, std::size_t n, const char* what) {
  if (x.n() != n) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(x.n()) + " vs " +
                                std::to_string(n) + ")");
  }
}

std::size_t PointHash::operator()(const Point& p) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ p.n();
  for (auto w : p.words()) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace junta_lcc
