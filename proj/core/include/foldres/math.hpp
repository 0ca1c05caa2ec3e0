// Copyright 2026 The foldres Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace foldres {

/// Arbitrary-precision count. Interaction totals for long chains overflow
/// 64-bit binomial intermediates, so every count in the library uses this.
using BigInt = boost::multiprecision::cpp_int;

/// ceil(log2(x)) for x >= 1; ceil_log2(1) == 0.
unsigned ceil_log2(std::uint64_t x);

/// ceil(a / b) for b > 0.
constexpr std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
  return (a + b - 1) / b;
}

/// binom(n, k); zero when k > n.
BigInt binomial(const BigInt& n, std::uint64_t k);
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// log2(x) for x > 0, accurate to double precision for any magnitude.
double log2_big(const BigInt& x);

std::string to_string(const BigInt& x);

bool fits_u64(const BigInt& x);

}  // namespace foldres
