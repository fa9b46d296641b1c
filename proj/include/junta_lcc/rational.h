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

#ifndef JUNTA_LCC_RATIONAL_H_
#define JUNTA_LCC_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace junta_lcc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "num/den" in lowest terms, e.g. "0/1", "1/64".
std::string ToString(const Rational& r);

// Accepts "a/b", a plain decimal ("0.25", "3"), or a power of two "2^-12".
// Throws std::invalid_argument on anything else.
Rational ParseRational(std::string_view text);

BigInt Binomial(unsigned n, unsigned k);
Rational PowerOfTwo(int exponent);
double ToDouble(const Rational& r);

}  // namespace junta_lcc

#endif  // JUNTA_LCC_RATIONAL_H_
