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

#include "junta_lcc/rational.h"

#include <cctype>
#include <stdexcept>

namespace junta_lcc {
namespace {

BigInt ParseInteger(std::string_view digits, std::string_view original) {
  if (digits.empty()) {
    throw std::invalid_argument("invalid rational: '" + std::string(original) +
                                "'");
  }
  BigInt value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("invalid rational: '" +
                                  std::string(original) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

std::string ToString(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

Rational ParseRational(std::string_view text) {
  const std::string_view original = text;
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  Rational result;
  if (text.starts_with("2^")) {
    std::string_view e = text.substr(2);
    bool neg_exp = false;
    if (!e.empty() && e.front() == '-') {
      neg_exp = true;
      e.remove_prefix(1);
    }
    const BigInt exponent = ParseInteger(e, original);
    if (exponent > 4096) {
      throw std::invalid_argument("invalid rational: exponent too large");
    }
    const int ex = exponent.convert_to<int>();
    result = PowerOfTwo(neg_exp ? -ex : ex);
  } else if (const auto slash = text.find('/');
             slash != std::string_view::npos) {
    const BigInt num = ParseInteger(text.substr(0, slash), original);
    const BigInt den = ParseInteger(text.substr(slash + 1), original);
    if (den == 0) throw std::invalid_argument("invalid rational: zero denominator");
    result = Rational(num, den);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    const BigInt w = whole.empty() ? BigInt(0) : ParseInteger(whole, original);
    const BigInt f = frac.empty() ? BigInt(0) : ParseInteger(frac, original);
    if (whole.empty() && frac.empty()) ParseInteger("", original);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    result = Rational(w * scale + f, scale);
  } else {
    result = Rational(ParseInteger(text, original));
  }
  return negative ? Rational(-result) : result;
}

BigInt Binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Rational PowerOfTwo(int exponent) {
  BigInt p = 1;
  p <<= (exponent < 0 ? -exponent : exponent);
  return exponent < 0 ? Rational(BigInt(1), p) : Rational(p);
}

double ToDouble(const Rational& r) { return r.convert_to<double>(); }

}  // namespace junta_lcc
