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

#include "foldres/instances.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>

#include "foldres/error.hpp"

namespace foldres {

namespace {

template <typename T>
T parse_unsigned(std::string_view token, std::string_view what) {
  T value{};
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || token.empty()) {
    throw DomainError("invalid " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

GridSpec::GridSpec(std::vector<unsigned> sides) : sides_(std::move(sides)) {
  if (sides_.size() != 2 && sides_.size() != 3) {
    throw DomainError("a grid needs 2 or 3 sides");
  }
  if (std::ranges::any_of(sides_, [](unsigned s) { return s == 0; })) {
    throw DomainError("grid sides must be positive");
  }
  std::ranges::sort(sides_);
}

GridSpec GridSpec::parse(std::string_view text) {
  std::vector<unsigned> sides;
  for (auto token : split(text, 'x')) sides.push_back(parse_unsigned<unsigned>(token, "grid side"));
  return GridSpec(std::move(sides));
}

std::uint64_t GridSpec::sites() const {
  std::uint64_t s = 1;
  for (auto side : sides_) s *= side;
  return s;
}

std::string GridSpec::str() const {
  std::string out;
  for (std::size_t i = 0; i < sides_.size(); ++i) {
    if (i) out += 'x';
    out += std::to_string(sides_[i]);
  }
  return out;
}

CardinalityVector::CardinalityVector(std::vector<std::uint64_t> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("cardinality vector must have N >= 1 entries");
  if (std::ranges::any_of(entries_, [](std::uint64_t c) { return c == 0; })) {
    throw DomainError("every conformation count must be >= 1");
  }
}

CardinalityVector CardinalityVector::parse(std::string_view text) {
  std::vector<std::uint64_t> entries;
  for (auto token : split(text, ',')) {
    entries.push_back(parse_unsigned<std::uint64_t>(token, "conformation count"));
  }
  return CardinalityVector(std::move(entries));
}

std::string CardinalityVector::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

void validate(const ModelInstance& instance) {
  std::visit(
      [](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, CoordinateLattice>) {
          if (m.dim != 2 && m.dim != 3) throw DomainError("lattice dimension must be 2 or 3");
          if (m.grid.dim() != m.dim) {
            throw DomainError("grid " + m.grid.str() + " does not match dimension " +
                              std::to_string(m.dim));
          }
          if (m.n == 0) throw DomainError("chain length must be >= 1");
          if (m.grid.sites() < m.n) {
            throw DomainError("grid " + m.grid.str() + " has " + std::to_string(m.grid.sites()) +
                              " sites, fewer than N = " + std::to_string(m.n));
          }
        } else if constexpr (std::is_same_v<T, TurnLattice>) {
          if (m.dim != 2 && m.dim != 3) throw DomainError("lattice dimension must be 2 or 3");
          if (m.n == 0) throw DomainError("chain length must be >= 1");
        }
      },
      instance);
}

CardinalityVector cardinality_vector(const ModelInstance& instance) {
  validate(instance);
  return std::visit(
      [](const auto& m) -> CardinalityVector {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, CoordinateLattice>) {
          const auto s = m.grid.sites();
          std::vector<std::uint64_t> c(m.n);
          for (unsigned i = 0; i < m.n; ++i) c[i] = (i % 2 == 0) ? (s + 1) / 2 : s / 2;
          return CardinalityVector(std::move(c));
        } else if constexpr (std::is_same_v<T, TurnLattice>) {
          return CardinalityVector(std::vector<std::uint64_t>(m.n, m.dim == 2 ? 4 : 6));
        } else {
          return m.confs;
        }
      },
      instance);
}

std::vector<GridSpec> enumerate_grids(unsigned n, unsigned dim, double slack,
                                      unsigned min_side) {
  if (dim != 2 && dim != 3) throw DomainError("lattice dimension must be 2 or 3");
  if (min_side == 0) throw DomainError("minimum side must be >= 1");
  // The epsilon keeps e.g. 1.15 * 20 from flooring to 22.
  const double upper = std::floor(slack * n + 1e-9);
  const std::uint64_t hi = upper < 0 ? 0 : static_cast<std::uint64_t>(upper);

  std::vector<GridSpec> out;
  std::vector<unsigned> sides;
  // Non-decreasing side tuples in lexicographic order, pruned by the site cap.
  std::function<void(unsigned, std::uint64_t)> walk = [&](unsigned lo, std::uint64_t prod) {
    if (sides.size() == dim) {
      if (prod >= n && prod <= hi) out.emplace_back(sides);
      return;
    }
    for (std::uint64_t s = lo; prod * s <= hi; ++s) {
      // Remaining sides are >= s, so the product only grows from here.
      std::uint64_t min_final = prod;
      for (std::size_t k = sides.size(); k < dim; ++k) min_final *= s;
      if (min_final > hi) break;
      sides.push_back(static_cast<unsigned>(s));
      walk(static_cast<unsigned>(s), prod * s);
      sides.pop_back();
    }
  };
  walk(min_side, 1);
  if (!out.empty()) return out;

  // Fallback: smallest site count >= N realisable with sides >= min_side,
  // lexicographically first grid at that count.
  for (std::uint64_t target = std::max<std::uint64_t>(n, 1);; ++target) {
    std::vector<GridSpec> found;
    std::function<void(unsigned, std::uint64_t)> exact = [&](unsigned lo, std::uint64_t prod) {
      if (!found.empty()) return;
      if (sides.size() == dim) {
        if (prod == target) found.emplace_back(sides);
        return;
      }
      for (std::uint64_t s = lo; prod * s <= target; ++s) {
        sides.push_back(static_cast<unsigned>(s));
        exact(static_cast<unsigned>(s), prod * s);
        sides.pop_back();
      }
    };
    exact(min_side, 1);
    if (!found.empty()) return found;
  }
}

RngStream derive_stream(std::uint64_t master_seed, std::uint64_t n,
                        std::uint64_t instance_index) {
  const std::uint64_t key = mix64(mix64(mix64(master_seed) ^ n) ^ instance_index);
  std::seed_seq seq{static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)};
  return RngStream(seq);
}

CardinalityVector sample_sidechain_instance(unsigned n, std::uint64_t c_min,
                                            std::uint64_t c_max, RngStream& rng) {
  if (c_min < 2 || c_min > c_max) {
    throw DomainError("conformation bounds must satisfy 2 <= c_min <= c_max");
  }
  if (n == 0) throw DomainError("chain length must be >= 1");
  std::uniform_int_distribution<std::uint64_t> dist(c_min, c_max);
  std::vector<std::uint64_t> c(n);
  for (auto& ci : c) ci = dist(rng);
  return CardinalityVector(std::move(c));
}

}  // namespace foldres
