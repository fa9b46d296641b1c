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

#ifndef JUNTA_LCC_POINT_H_
#define JUNTA_LCC_POINT_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace junta_lcc {

// An element of Z_2^n stored as packed 64-bit words.
//
// Coordinates are 1-based: Get(1) is x_1. Bits past n in the last word are
// always zero, so word-level equality and hashing are exact.
class Point {
 public:
  Point() = default;
  // All-zeros point with n coordinates. Throws std::invalid_argument if n == 0.
  explicit Point(std::size_t n);

  static Point AllOnes(std::size_t n);
  // Builds a point from explicit bits, bits[0] being x_1.
  static Point FromBits(const std::vector<int>& bits);
  // Parses the hex encoding produced by ToHex().
  static Point FromHex(std::string_view hex, std::size_t n);

  std::size_t n() const { return n_; }

  bool Get(std::size_t coord) const {
    const std::size_t i = coord - 1;
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void Set(std::size_t coord, bool value) {
    const std::size_t i = coord - 1;
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void Flip(std::size_t coord) {
    const std::size_t i = coord - 1;
    words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
  }

  // In-place XOR; both points must have the same n.
  Point& operator^=(const Point& other);
  friend Point operator^(Point a, const Point& b) { return a ^= b; }
  Point Complement() const;

  std::size_t Weight() const;
  // Hamming weight of coordinates first..last inclusive (1-based).
  std::size_t WeightInRange(std::size_t first, std::size_t last) const;

  // Lowercase hex, least significant digit first; digit d covers x_{4d+1}
  // (its low bit) through x_{4d+4}. Length is ceil(n / 4).
  std::string ToHex() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> mutable_words() { return words_; }
  // Re-zeroes the unused high bits of the last word after raw word writes.
  void ClearPadding();

  friend bool operator==(const Point& a, const Point& b) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Throws std::invalid_argument naming `what` if x.n() != n.
void CheckDimension(const Point& x, std::size_t n, const char* what);

struct PointHash {
  std::size_t operator()(const Point& p) const;
};

}  // namespace junta_lcc

#endif  // JUNTA_LCC_POINT_H_
