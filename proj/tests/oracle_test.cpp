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
#include <set>

#include "foldres/error.hpp"
#include "foldres/oracle.hpp"

namespace foldres {
namespace {

using Census = std::map<unsigned, std::uint64_t>;

TEST(Polynomial, SpinExpansion) {
  // x0 * x1 = (1 - z0 - z1 + z0 z1) / 4; the constant is not a term.
  const auto p = PseudoBooleanPolynomial::variable(0) * PseudoBooleanPolynomial::variable(1);
  auto supports = p.spin_support();
  std::sort(supports.begin(), supports.end());
  EXPECT_EQ(supports, (std::vector<std::uint64_t>{0b01, 0b10, 0b11}));
}

TEST(Polynomial, CancellationIsStructural) {
  // x0 - x0 vanishes; x0 (1 - x0) = 0 on Booleans.
  auto p = PseudoBooleanPolynomial::variable(0);
  p += PseudoBooleanPolynomial::constant(-1) * PseudoBooleanPolynomial::variable(0);
  EXPECT_TRUE(p.spin_support().empty());
  auto q = PseudoBooleanPolynomial::constant(1);
  q += PseudoBooleanPolynomial::constant(-1) * PseudoBooleanPolynomial::variable(0);
  EXPECT_TRUE((q * PseudoBooleanPolynomial::variable(0)).spin_support().empty());
}

TEST(Polynomial, OneHotPenaltyTouchesEveryPair) {
  auto s = PseudoBooleanPolynomial::constant(-1);
  for (unsigned i = 0; i < 3; ++i) s += PseudoBooleanPolynomial::variable(i);
  const auto supports = (s * s).spin_support();
  std::set<std::uint64_t> set(supports.begin(), supports.end());
  for (std::uint64_t m : {0b011u, 0b101u, 0b110u, 0b001u, 0b010u, 0b100u}) {
    EXPECT_TRUE(set.contains(m)) << m;
  }
  EXPECT_FALSE(set.contains(0b111));
}

TEST(LiteralProduct, MixedPolarity) {
  const std::vector<Literal> lits = {{0, true}, {2, false}};
  auto supports = literal_product_support(lits);
  std::sort(supports.begin(), supports.end());
  EXPECT_EQ(supports, (std::vector<std::uint64_t>{0b001, 0b100, 0b101}));
}

TEST(Census, Examples) {
  EXPECT_EQ(census_dense_pairwise(CardinalityVector({4, 4}), Encoding::binary()).counts_by_order,
            (Census{{1, 4}, {2, 6}, {3, 4}, {4, 1}}));
  EXPECT_EQ(census_dense_pairwise(CardinalityVector({2, 2, 2}), Encoding::unary()).counts_by_order,
            (Census{{1, 6}, {2, 15}}));
  EXPECT_EQ(census_dense_pairwise(CardinalityVector({8, 8, 8}), Encoding::binary()).total(), 168u);
}

TEST(Census, CapAndDomain) {
  EXPECT_THROW(census_dense_pairwise(CardinalityVector({13, 13}), Encoding::unary()), DomainError);
  EXPECT_THROW(census_dense_pairwise(CardinalityVector({4}), Encoding::binary()), DomainError);
}

TEST(CensusEqualsEstimate, Examples) {
  EXPECT_TRUE(census_equals_estimate(CardinalityVector({4, 4}), Encoding::binary()).equal);
  EXPECT_TRUE(
      census_equals_estimate(CardinalityVector({5, 3}), Encoding::block_unary_binary(3)).equal);
  EXPECT_TRUE(census_equals_estimate(CardinalityVector({2, 2}), Encoding::unary()).equal);
}

TEST(CensusEqualsEstimate, MatchHasNoDivergentOrder) {
  const auto cmp = census_equals_estimate(CardinalityVector({3, 3}), Encoding::binary());
  EXPECT_TRUE(cmp.equal);
  EXPECT_FALSE(cmp.first_divergent_order.has_value());
}

TEST(Census, PermutationInvariant) {
  const auto a = census_dense_pairwise(CardinalityVector({3, 5, 5}), Encoding::binary());
  const auto b = census_dense_pairwise(CardinalityVector({5, 3, 5}), Encoding::binary());
  const auto c = census_dense_pairwise(CardinalityVector({5, 5, 3}), Encoding::binary());
  EXPECT_EQ(a.counts_by_order, b.counts_by_order);
  EXPECT_EQ(a.counts_by_order, c.counts_by_order);
}

TEST(Census, AddingResidueNeverShrinksAnyOrder) {
  for (const auto& enc : {Encoding::unary(), Encoding::binary(), Encoding::block_unary_binary(3)}) {
    const auto small = census_dense_pairwise(CardinalityVector({3, 4}), enc);
    const auto big = census_dense_pairwise(CardinalityVector({3, 4, 5}), enc);
    for (const auto& [m, c] : small.counts_by_order) {
      EXPECT_LE(c, big.counts_by_order.at(m)) << enc.tag() << " m=" << m;
    }
  }
}

TEST(Census, BoundedByBinomial) {
  const auto census = census_dense_pairwise(CardinalityVector({7, 6, 5}), Encoding::binary());
  std::uint64_t binom = 1;
  for (unsigned m = 1; m <= census.qubit_count; ++m) {
    binom = binom * (census.qubit_count - m + 1) / m;
    if (census.counts_by_order.contains(m)) {
      EXPECT_LE(census.counts_by_order.at(m), binom);
    }
  }
}

}  // namespace
}  // namespace foldres
