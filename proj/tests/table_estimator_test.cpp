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

#include <random>

#include "foldres/error.hpp"
#include "foldres/math.hpp"
#include "foldres/table_estimator.hpp"

namespace foldres {
namespace {

const Encoding kBub3 = Encoding::block_unary_binary(3);

OrderCounts counts(std::initializer_list<std::pair<const unsigned, BigInt>> init) {
  return OrderCounts(init);
}

TEST(QubitCount, Examples) {
  EXPECT_EQ(qubit_count(CardinalityVector({8, 7, 8, 7}), Encoding::binary()), 12u);
  EXPECT_EQ(qubit_count(CardinalityVector({2, 2, 2}), Encoding::unary()), 6u);
  EXPECT_EQ(qubit_count(CardinalityVector({5, 5}), kBub3), 8u);
}

TEST(KLocality, Examples) {
  EXPECT_EQ(k_locality(CardinalityVector({4, 7}), Encoding::binary()), 5u);
  EXPECT_EQ(k_locality(CardinalityVector({9, 9, 2}), Encoding::unary()), 2u);
  EXPECT_EQ(k_locality(CardinalityVector({5, 5}), kBub3), 4u);
  EXPECT_EQ(k_locality(CardinalityVector({9, 9, 2}), Encoding::binary()), 8u);
}

TEST(KLocality, SingleResidueBinaryIsUndefined) {
  EXPECT_THROW(k_locality(CardinalityVector({7}), Encoding::binary()), DomainError);
}

TEST(InteractionCounts, Examples) {
  EXPECT_EQ(interaction_counts(CardinalityVector({4, 4}), Encoding::binary()),
            counts({{1, 4}, {2, 6}, {3, 4}, {4, 1}}));
  EXPECT_EQ(interaction_counts(CardinalityVector({2, 2, 2}), Encoding::unary()),
            counts({{1, 6}, {2, 15}}));
  const auto est = estimate(CardinalityVector({8, 8, 8}), Encoding::binary());
  EXPECT_EQ(est.total_interactions, 168);
  EXPECT_EQ(est.correction_subtracted, 3);
}

TEST(InteractionCounts, NoCorrectionForTwoResidues) {
  EXPECT_EQ(correction_term(CardinalityVector({9, 9}), Encoding::binary()), 0);
  EXPECT_EQ(correction_term(CardinalityVector({4, 4, 3}), Encoding::binary()), 0);
}

TEST(InteractionCounts, RequiresTwoResidues) {
  EXPECT_THROW(interaction_counts(CardinalityVector({4}), Encoding::unary()), DomainError);
}

TEST(InteractionCounts, BlockCorrectionSumsOverBlocks) {
  // g = 4 gives 3-bit blocks; (5,5) has four blocks, each triple shared by 3 pairs.
  const auto enc = Encoding::block_unary_binary(4);
  const CardinalityVector confs({5, 5});
  EXPECT_EQ(correction_term(confs, enc), 4 * 2);
  const auto counts = interaction_counts(confs, enc);
  EXPECT_EQ(counts.at(3), 6 * 20 - 8);
  EXPECT_EQ(correction_term(CardinalityVector({9, 9, 9}), Encoding::block_unary_binary(3)), 0);
}

TEST(TwoQubitGates, LadderRule) {
  EXPECT_EQ(two_qubit_gate_count(counts({{1, 6}, {2, 15}})), 30);
  EXPECT_EQ(two_qubit_gate_count(counts({{3, 1}})), 4);
  EXPECT_EQ(two_qubit_gate_count(counts({{1, 4}, {2, 6}, {3, 4}, {4, 1}})), 34);
}

TEST(Estimate, Examples) {
  const auto coord = estimate(CoordinateLattice{2, GridSpec::parse("2x2"), 3}, Encoding::unary());
  EXPECT_EQ(coord.qubits, 6u);
  EXPECT_EQ(coord.k_locality, 2u);
  EXPECT_EQ(coord.total_interactions, 21);
  EXPECT_EQ(coord.two_qubit_gates, 30);

  const auto g1 = estimate(CardinalityVector({2, 2}), Encoding::block_unary_binary(1));
  const auto un = estimate(CardinalityVector({2, 2}), Encoding::unary());
  EXPECT_EQ(g1.interactions_by_order, un.interactions_by_order);
  EXPECT_EQ(g1.qubits, un.qubits);
}

TEST(Estimate, TurnLatticeRejected) {
  EXPECT_THROW(estimate(ModelInstance{TurnLattice{2, 10}}, Encoding::binary()), DomainError);
}

TEST(Estimate, NoOverflowAtLargeN) {
  std::vector<std::uint64_t> confs(100, 100);
  const auto est = estimate(CardinalityVector(confs), Encoding::binary());
  EXPECT_EQ(est.k_locality, 14u);
  EXPECT_GT(est.total_interactions, BigInt(0));
}

class RandomCardinality : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20260101};

  CardinalityVector draw(unsigned n_lo, unsigned n_hi, std::uint64_t c_hi) {
    std::uniform_int_distribution<unsigned> nd(n_lo, n_hi);
    std::uniform_int_distribution<std::uint64_t> cd(1, c_hi);
    std::vector<std::uint64_t> v(nd(rng));
    for (auto& c : v) c = cd(rng);
    return CardinalityVector(std::move(v));
  }
};

TEST_F(RandomCardinality, InvariantsHold) {
  const std::vector<Encoding> encs = {Encoding::unary(), Encoding::binary(), kBub3,
                                      Encoding::block_unary_binary(1),
                                      Encoding::block_unary_binary(5)};
  for (int trial = 0; trial < 200; ++trial) {
    const auto confs = draw(2, 12, 80);
    for (const auto& enc : encs) {
      const auto est = estimate(confs, enc);
      BigInt total = 0;
      BigInt gates = 0;
      for (const auto& [m, c] : est.interactions_by_order) {
        EXPECT_GE(c, 0);
        EXPECT_LE(m, est.k_locality);
        total += c;
        gates += c * 2 * (m - 1);
      }
      EXPECT_EQ(total, est.total_interactions);
      EXPECT_EQ(gates, est.two_qubit_gates);
    }
  }
}

TEST_F(RandomCardinality, BinaryRegroupingAlgebra) {
  // Per-order counts plus the subtracted duplicates equal the raw pair sum.
  for (int trial = 0; trial < 200; ++trial) {
    const auto confs = draw(3, 15, 300);
    const auto est = estimate(confs, Encoding::binary());
    std::vector<std::uint64_t> q;
    for (auto c : confs.entries()) q.push_back(ceil_log2(c));
    BigInt raw = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = i + 1; j < q.size(); ++j) {
        for (unsigned m = 3; m <= est.k_locality; ++m) raw += binomial(q[i] + q[j], m);
      }
    }
    BigInt higher = 0;
    for (const auto& [m, c] : est.interactions_by_order) {
      if (m >= 3) higher += c;
    }
    EXPECT_EQ(higher + est.correction_subtracted, raw) << confs.str();
    EXPECT_LE(est.correction_subtracted, raw);
  }
}

TEST_F(RandomCardinality, UnaryNeverUsesFewerQubits) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto confs = draw(1, 20, 40);
    const auto u = qubit_count(confs, Encoding::unary());
    const auto b = qubit_count(confs, Encoding::binary());
    EXPECT_GE(u, b);
    const bool small = std::ranges::all_of(confs.entries(), [](auto c) { return c <= 2; });
    // c = 1 costs one Unary qubit and no Binary qubit.
    const bool has_one = std::ranges::any_of(confs.entries(), [](auto c) { return c == 1; });
    if (!has_one) {
      EXPECT_EQ(u == b, small) << confs.str();
    }
  }
}

}  // namespace
}  // namespace foldres
