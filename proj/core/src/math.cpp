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

#include "foldres/math.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace foldres {

unsigned ceil_log2(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("ceil_log2: argument must be >= 1");
  return static_cast<unsigned>(std::bit_width(x - 1));
}

BigInt binomial(const BigInt& n, std::uint64_t k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (BigInt(k) > n) return 0;
  // binom(n, k) == binom(n, n - k); keep the loop short.
  const BigInt rest = n - k;
  if (rest < k) k = static_cast<std::uint64_t>(rest);
  BigInt result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  return binomial(BigInt(n), k);
}

double log2_big(const BigInt& x) {
  if (x <= 0) throw std::invalid_argument("log2_big: argument must be > 0");
  const auto msb = boost::multiprecision::msb(x);
  if (msb < 63) return std::log2(static_cast<double>(static_cast<std::uint64_t>(x)));
  const auto shift = static_cast<unsigned>(msb - 62);
  const auto top = static_cast<std::uint64_t>(x >> shift);
  return std::log2(static_cast<double>(top)) + static_cast<double>(shift);
}

std::string to_string(const BigInt& x) { return x.str(); }

bool fits_u64(const BigInt& x) {
  return x >= 0 && x <= std::numeric_limits<std::uint64_t>::max();
}

}  // namespace foldres
