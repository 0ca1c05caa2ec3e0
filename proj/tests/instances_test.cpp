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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "foldres/error.hpp"
#include "foldres/instances.hpp"

namespace foldres {
namespace {

std::vector<std::string> grid_names(const std::vector<GridSpec>& grids) {
  std::vector<std::string> out;
  for (const auto& g : grids) out.push_back(g.str());
  return out;
}

// Every sorted side tuple with sides >= min_side and sites in [n, hi].
std::set<std::string> brute_grids(unsigned n, unsigned dim, unsigned min_side, unsigned hi) {
  std::set<std::string> found;
  for (unsigned a = min_side; a <= hi; ++a) {
    for (unsigned b = a; a * b <= hi; ++b) {
      if (dim == 2) {
        if (a * b >= n) found.insert(GridSpec({a, b}).str());
        continue;
      }
      for (unsigned c = b; a * b * c <= hi; ++c) {
        if (a * b * c >= n) found.insert(GridSpec({a, b, c}).str());
      }
    }
  }
  return found;
}

TEST(CardinalityVector, Coordinate) {
  const auto v = cardinality_vector(CoordinateLattice{2, GridSpec::parse("3x5"), 4});
  EXPECT_EQ(v, CardinalityVector({8, 7, 8, 7}));
}

TEST(CardinalityVector, TurnAndSideChain) {
  EXPECT_EQ(cardinality_vector(TurnLattice{3, 5}), CardinalityVector({6, 6, 6, 6, 6}));
  EXPECT_EQ(cardinality_vector(TurnLattice{2, 3}), CardinalityVector({4, 4, 4}));
  EXPECT_EQ(cardinality_vector(SideChain{CardinalityVector({4, 7, 2})}),
            CardinalityVector({4, 7, 2}));
}

TEST(CardinalityVector, GridTooSmall) {
  EXPECT_THROW(cardinality_vector(CoordinateLattice{2, GridSpec::parse("2x2"), 5}), DomainError);
  EXPECT_THROW(validate(CoordinateLattice{3, GridSpec::parse("2x2"), 3}), DomainError);
}

TEST(CardinalityVector, ParsingRejectsBadInput) {
  EXPECT_THROW(CardinalityVector::parse(""), DomainError);
  EXPECT_THROW(CardinalityVector::parse("3,0"), DomainError);
  EXPECT_THROW(CardinalityVector::parse("3,x"), DomainError);
  EXPECT_EQ(CardinalityVector::parse("4,7,2").str(), "4,7,2");
}

TEST(CardinalityVector, CoordinateEntriesAlternate) {
  for (unsigned s1 = 2; s1 <= 7; ++s1) {
    for (unsigned s2 = s1; s2 <= 7; ++s2) {
      const GridSpec grid({s1, s2});
      for (unsigned n = 1; n <= grid.sites(); ++n) {
        const auto v = cardinality_vector(CoordinateLattice{2, grid, n});
        for (std::size_t i = 1; i < v.size(); ++i) {
          EXPECT_LE(std::max(v[i], v[i - 1]) - std::min(v[i], v[i - 1]), 1u);
        }
        if (grid.sites() % 2 == 0) {
          std::uint64_t sum = 0;
          for (auto c : v.entries()) sum += c;
          EXPECT_EQ(2 * sum, n * grid.sites());
        }
      }
    }
  }
}

TEST(GridSpec, Canonicalizes) {
  EXPECT_EQ(GridSpec::parse("5x3").str(), "3x5");
  EXPECT_EQ(GridSpec::parse("3x2x2").str(), "2x2x3");
  EXPECT_EQ(GridSpec::parse("3x5"), GridSpec::parse("5x3"));
  EXPECT_THROW(GridSpec::parse("3"), DomainError);
  EXPECT_THROW(GridSpec::parse("0x3"), DomainError);
}

TEST(EnumerateGrids, SidesAtLeastTwo) {
  EXPECT_EQ(grid_names(enumerate_grids(15, 2, 1.5, 2)),
            (std::vector<std::string>{"2x8", "2x9", "2x10", "2x11", "3x5", "3x6", "3x7", "4x4",
                                      "4x5"}));
  EXPECT_EQ(grid_names(enumerate_grids(4, 2, 1.5, 2)), (std::vector<std::string>{"2x2", "2x3"}));
  EXPECT_EQ(grid_names(enumerate_grids(4, 3, 1.5, 2)), (std::vector<std::string>{"2x2x2"}));
}

TEST(EnumerateGrids, DefaultConvention) {
  EXPECT_EQ(grid_names(enumerate_grids(15, 2)),
            (std::vector<std::string>{"3x5", "3x6", "3x7", "4x4", "4x5"}));
  EXPECT_EQ(grid_names(enumerate_grids(3, 2)), (std::vector<std::string>{"3x3"}));
}

TEST(EnumerateGrids, MatchesBruteForce) {
  for (unsigned min_side : {2u, 3u}) {
    for (unsigned dim : {2u, 3u}) {
      for (unsigned n = 3; n <= 60; ++n) {
        const unsigned hi = static_cast<unsigned>(std::floor(1.5 * n + 1e-9));
        const auto grids = enumerate_grids(n, dim, 1.5, min_side);
        const auto expected = brute_grids(n, dim, min_side, hi);
        if (expected.empty()) {
          ASSERT_EQ(grids.size(), 1u);
          EXPECT_GE(grids.front().sites(), n);
          continue;
        }
        const auto names = grid_names(grids);
        EXPECT_EQ(std::set<std::string>(names.begin(), names.end()), expected)
            << "n=" << n << " dim=" << dim;
        EXPECT_EQ(names.size(), expected.size());
        EXPECT_TRUE(std::is_sorted(grids.begin(), grids.end()));
      }
    }
  }
}

TEST(EnumerateGrids, FallbackIsSmallestAdmissible) {
  // With sides >= 3 a 3D grid needs 27 sites; N = 5 has window [5, 7].
  const auto grids = enumerate_grids(5, 3, 1.5, 3);
  ASSERT_EQ(grids.size(), 1u);
  EXPECT_EQ(grids.front().str(), "3x3x3");
}

TEST(Sampling, DegenerateBounds) {
  auto rng = derive_stream(7, 3, 0);
  EXPECT_EQ(sample_sidechain_instance(3, 2, 2, rng), CardinalityVector({2, 2, 2}));
}

TEST(Sampling, InvalidBounds) {
  auto rng = derive_stream(7, 3, 0);
  EXPECT_THROW(sample_sidechain_instance(3, 1, 5, rng), DomainError);
  EXPECT_THROW(sample_sidechain_instance(3, 6, 5, rng), DomainError);
}

TEST(Sampling, UniformMean) {
  auto rng = derive_stream(12345, 10000, 0);
  const auto v = sample_sidechain_instance(10000, 2, 100, rng);
  double sum = 0;
  for (auto c : v.entries()) {
    ASSERT_GE(c, 2u);
    ASSERT_LE(c, 100u);
    sum += static_cast<double>(c);
  }
  EXPECT_NEAR(sum / 10000.0, 51.0, 1.5);
}

TEST(Sampling, Reproducible) {
  auto a = derive_stream(99, 5, 3);
  auto b = derive_stream(99, 5, 3);
  EXPECT_EQ(sample_sidechain_instance(5, 2, 20, a), sample_sidechain_instance(5, 2, 20, b));
  auto c = derive_stream(99, 5, 4);
  auto d = derive_stream(99, 6, 3);
  EXPECT_NE(c(), d());
}

}  // namespace
}  // namespace foldres
