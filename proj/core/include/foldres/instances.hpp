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
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace foldres {

/// Minimum side length used by enumerate_grids unless overridden. Strips of
/// width two are excluded by default; see README ("Grid convention").
inline constexpr unsigned kDefaultMinSide = 3;
inline constexpr double kDefaultGridSlack = 1.5;

/// Rectangular (2 sides) or cuboid (3 sides) lattice, sides sorted
/// non-decreasing.
class GridSpec {
 public:
  /// Sorts the sides. Throws DomainError for anything other than 2 or 3
  /// positive sides.
  explicit GridSpec(std::vector<unsigned> sides);

  /// Parses "3x5" or "2x2x3" (any order).
  static GridSpec parse(std::string_view text);

  const std::vector<unsigned>& sides() const { return sides_; }
  unsigned dim() const { return static_cast<unsigned>(sides_.size()); }
  std::uint64_t sites() const;

  /// Canonical "3x5" form.
  std::string str() const;

  friend auto operator<=>(const GridSpec&, const GridSpec&) = default;

 private:
  std::vector<unsigned> sides_;
};

/// Per-residue conformation counts c_1..c_N, every entry >= 1.
class CardinalityVector {
 public:
  explicit CardinalityVector(std::vector<std::uint64_t> entries);

  /// Parses "4,7,2".
  static CardinalityVector parse(std::string_view text);

  std::span<const std::uint64_t> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::uint64_t operator[](std::size_t i) const { return entries_[i]; }

  std::string str() const;

  friend bool operator==(const CardinalityVector&, const CardinalityVector&) = default;

 private:
  std::vector<std::uint64_t> entries_;
};

struct CoordinateLattice {
  unsigned dim;
  GridSpec grid;
  unsigned n;
};

struct TurnLattice {
  unsigned dim;
  unsigned n;
};

struct SideChain {
  CardinalityVector confs;
};

using ModelInstance = std::variant<CoordinateLattice, TurnLattice, SideChain>;

/// Checks the instance invariants (dimension, grid size); throws DomainError.
void validate(const ModelInstance& instance);

/// Cardinality vector of a model instance. Coordinate lattices alternate
/// ceil(S/2), floor(S/2) (checkerboard parity classes, odd beads first);
/// turn lattices use the coordination number (4 or 6).
CardinalityVector cardinality_vector(const ModelInstance& instance);

/// All canonical grids with sides >= min_side and N <= sites <= floor(slack*N),
/// in lexicographic order of sides. When the window is empty, returns the
/// single smallest canonical grid with sites >= N.
std::vector<GridSpec> enumerate_grids(unsigned n, unsigned dim,
                                      double slack = kDefaultGridSlack,
                                      unsigned min_side = kDefaultMinSide);

/// Explicit random state for instance sampling.
using RngStream = std::mt19937_64;

/// Independent stream for (master seed, chain length, instance index). The
/// split is counter-based, so any scheduling of instances reproduces the
/// serial draws.
RngStream derive_stream(std::uint64_t master_seed, std::uint64_t n,
                        std::uint64_t instance_index);

/// N independent draws from the discrete uniform distribution on
/// [c_min, c_max]. Requires 2 <= c_min <= c_max.
CardinalityVector sample_sidechain_instance(unsigned n, std::uint64_t c_min,
                                            std::uint64_t c_max, RngStream& rng);

}  // namespace foldres
