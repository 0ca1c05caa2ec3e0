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

#include "foldres/encoding.hpp"

#include <string>

#include "foldres/error.hpp"
#include "foldres/math.hpp"

namespace foldres {

Encoding Encoding::block_unary_binary(unsigned g) {
  if (g == 0) throw DomainError("block size g must be >= 1");
  return Encoding(Scheme::BlockUnaryBinary, g);
}

Encoding Encoding::parse(std::string_view name, unsigned g) {
  if (name == "unary") return unary();
  if (name == "binary") return binary();
  if (name == "bubinary") return block_unary_binary(g);
  throw DomainError("unknown encoding '" + std::string(name) +
                    "' (expected unary, binary or bubinary)");
}

unsigned Encoding::block_bits() const { return ceil_log2(std::uint64_t{g_} + 1); }

std::string_view Encoding::tag() const {
  switch (scheme_) {
    case Scheme::Unary:
      return "unary";
    case Scheme::Binary:
      return "binary";
    case Scheme::BlockUnaryBinary:
      return "bubinary";
  }
  return "unknown";
}

std::string Codeword::str() const {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

std::uint64_t code_length(const Encoding& enc, std::uint64_t c) {
  if (c == 0) throw DomainError("conformation count must be >= 1");
  switch (enc.scheme()) {
    case Scheme::Unary:
      return c;
    case Scheme::Binary:
      return ceil_log2(c);
    case Scheme::BlockUnaryBinary:
      return ceil_div(c, enc.block_size()) * enc.block_bits();
  }
  return 0;
}

namespace {

// Writes value MSB-first into out[offset, offset + width).
void write_msb_first(std::vector<std::uint8_t>& out, std::size_t offset,
                     unsigned width, std::uint64_t value) {
  for (unsigned i = 0; i < width; ++i) {
    out[offset + i] = static_cast<std::uint8_t>((value >> (width - 1 - i)) & 1U);
  }
}

std::uint64_t read_msb_first(std::span<const std::uint8_t> bits) {
  std::uint64_t v = 0;
  for (auto b : bits) v = (v << 1) | (b & 1U);
  return v;
}

}  // namespace

Codeword encode_integer(std::uint64_t r, const Encoding& enc, std::uint64_t c) {
  const auto length = code_length(enc, c);
  if (r >= c) {
    throw DomainError("integer " + std::to_string(r) + " out of range for " +
                      std::to_string(c) + " conformations");
  }
  Codeword word{std::vector<std::uint8_t>(length, 0), c};
  switch (enc.scheme()) {
    case Scheme::Unary:
      word.bits[r] = 1;
      break;
    case Scheme::Binary:
      write_msb_first(word.bits, 0, static_cast<unsigned>(length), r);
      break;
    case Scheme::BlockUnaryBinary: {
      // Block k counts from the right end; a block holds (r mod g) + 1 so the
      // all-zero block means "inactive".
      const unsigned b = enc.block_bits();
      const std::uint64_t k = r / enc.block_size();
      const std::size_t offset = length - (k + 1) * b;
      write_msb_first(word.bits, offset, b, r % enc.block_size() + 1);
      break;
    }
  }
  return word;
}

std::optional<std::uint64_t> decode_codeword(std::span<const std::uint8_t> bits,
                                             const Encoding& enc,
                                             std::uint64_t c) {
  const auto length = code_length(enc, c);
  if (bits.size() != length) {
    throw DomainError("codeword has " + std::to_string(bits.size()) +
                      " bits, expected " + std::to_string(length));
  }
  switch (enc.scheme()) {
    case Scheme::Unary: {
      std::optional<std::uint64_t> hit;
      for (std::size_t i = 0; i < bits.size(); ++i) {
        if (!bits[i]) continue;
        if (hit) return std::nullopt;
        hit = i;
      }
      return hit;
    }
    case Scheme::Binary: {
      const auto v = read_msb_first(bits);
      if (v >= c) return std::nullopt;
      return v;
    }
    case Scheme::BlockUnaryBinary: {
      const unsigned b = enc.block_bits();
      const std::uint64_t blocks = length / b;
      std::optional<std::uint64_t> r;
      for (std::uint64_t k = 0; k < blocks; ++k) {
        const auto v = read_msb_first(bits.subspan(length - (k + 1) * b, b));
        if (v == 0) continue;
        if (r || v > enc.block_size()) return std::nullopt;
        r = k * enc.block_size() + (v - 1);
      }
      if (!r || *r >= c) return std::nullopt;
      return r;
    }
  }
  return std::nullopt;
}

std::vector<std::uint8_t> bits_from_string(std::string_view s) {
  std::vector<std::uint8_t> out;
  out.reserve(s.size());
  for (char ch : s) {
    if (ch == '0' || ch == '1') {
      out.push_back(static_cast<std::uint8_t>(ch - '0'));
    } else if (ch != ' ') {
      throw DomainError("bitstring may only contain '0' and '1'");
    }
  }
  return out;
}

}  // namespace foldres
