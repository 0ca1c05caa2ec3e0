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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace foldres {

enum class Scheme { Unary, Binary, BlockUnaryBinary };

/// Integer-to-bitstring scheme. The block size is only meaningful for
/// BlockUnaryBinary and is stored as 1 for the other two schemes.
class Encoding {
 public:
  static Encoding unary() { return Encoding(Scheme::Unary, 1); }
  static Encoding binary() { return Encoding(Scheme::Binary, 1); }
  /// Throws DomainError when g == 0.
  static Encoding block_unary_binary(unsigned g);

  /// Parses "unary", "binary" or "bubinary" (g applies to the last one).
  static Encoding parse(std::string_view name, unsigned g = 3);

  Scheme scheme() const { return scheme_; }
  unsigned block_size() const { return g_; }

  /// Bits per block, ceil(log2(g + 1)). Only meaningful for BlockUnaryBinary.
  unsigned block_bits() const;

  /// "unary", "binary" or "bubinary".
  std::string_view tag() const;

  friend bool operator==(const Encoding&, const Encoding&) = default;

 private:
  Encoding(Scheme s, unsigned g) : scheme_(s), g_(g) {}

  Scheme scheme_;
  unsigned g_;
};

/// Conformation codeword. Bit 0 is the leftmost bit.
struct Codeword {
  std::vector<std::uint8_t> bits;
  std::uint64_t capacity = 1;

  std::string str() const;
};

/// Number of qubits needed for one variable with c conformations.
/// Unary: c. Binary: ceil(log2 c) (zero for c == 1).
/// BlockUnaryBinary: ceil(c / g) * ceil(log2(g + 1)).
std::uint64_t code_length(const Encoding& enc, std::uint64_t c);

/// Throws DomainError unless r < c.
Codeword encode_integer(std::uint64_t r, const Encoding& enc, std::uint64_t c);

/// Inverse of encode_integer. Returns nullopt for infeasible strings and
/// throws DomainError on a length mismatch.
std::optional<std::uint64_t> decode_codeword(std::span<const std::uint8_t> bits,
                                             const Encoding& enc,
                                             std::uint64_t c);

/// Parses a string of '0'/'1' characters.
std::vector<std::uint8_t> bits_from_string(std::string_view s);

}  // namespace foldres
