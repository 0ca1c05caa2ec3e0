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

#include "foldres/table_estimator.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "foldres/error.hpp"

namespace foldres {

namespace {

// Histogram of per-residue code widths ceil(log2 c_i).
std::map<unsigned, std::uint64_t> binary_width_histogram(const CardinalityVector& confs) {
  std::map<unsigned, std::uint64_t> hist;
  for (auto c : confs.entries()) ++hist[ceil_log2(c)];
  return hist;
}

std::uint64_t total_blocks(const CardinalityVector& confs, unsigned g) {
  std::uint64_t blocks = 0;
  for (auto c : confs.entries()) blocks += ceil_div(c, g);
  return blocks;
}

void require_pairs(const CardinalityVector& confs) {
  if (confs.size() < 2) {
    throw DomainError("interaction counting needs N >= 2 residues, got N = " +
                      std::to_string(confs.size()));
  }
}

}  // namespace

std::uint64_t qubit_count(const CardinalityVector& confs, const Encoding& enc) {
  std::uint64_t q = 0;
  for (auto c : confs.entries()) q += code_length(enc, c);
  return q;
}

unsigned k_locality(const CardinalityVector& confs, const Encoding& enc) {
  switch (enc.scheme()) {
    case Scheme::Unary:
      return 2;
    case Scheme::Binary: {
      if (confs.size() < 2) {
        throw DomainError("Binary k-locality needs at least two residues");
      }
      std::vector<std::uint64_t> c(confs.entries().begin(), confs.entries().end());
      std::partial_sort(c.begin(), c.begin() + 2, c.end(), std::greater<>());
      return ceil_log2(c[0]) + ceil_log2(c[1]);
    }
    case Scheme::BlockUnaryBinary:
      return 2 * enc.block_bits();
  }
  return 0;
}

OrderCounts interaction_counts(const CardinalityVector& confs, const Encoding& enc) {
  require_pairs(confs);
  const auto q_total = qubit_count(confs, enc);
  const unsigned k = k_locality(confs, enc);
  const auto n = static_cast<std::uint64_t>(confs.size());

  OrderCounts counts;
  if (k >= 1) counts[1] = q_total;
  if (k >= 2) counts[2] = binomial(q_total, 2);

  switch (enc.scheme()) {
    case Scheme::Unary:
      break;
    case Scheme::Binary: {
      // sum_{i<j} binom(q_i + q_j, m) - (N - 2) sum_i binom(q_i, m),
      // evaluated over the width histogram instead of all residue pairs.
      const auto hist = binary_width_histogram(confs);
      for (unsigned m = 3; m <= k; ++m) {
        BigInt raw = 0;
        BigInt within = 0;
        for (auto a = hist.begin(); a != hist.end(); ++a) {
          const auto& [qa, na] = *a;
          raw += binomial(na, 2) * binomial(2 * qa, m);
          within += BigInt(na) * binomial(qa, m);
          for (auto b = std::next(a); b != hist.end(); ++b) {
            const auto& [qb, nb] = *b;
            raw += BigInt(na) * nb * binomial(qa + qb, m);
          }
        }
        counts[m] = raw - BigInt(n - 2) * within;
      }
      break;
    }
    case Scheme::BlockUnaryBinary: {
      const unsigned b = enc.block_bits();
      const std::uint64_t blocks = total_blocks(confs, enc.block_size());
      const BigInt block_pairs = binomial(blocks, 2);
      for (unsigned m = 3; m <= k; ++m) {
        // Each block's internal m-subsets recur in all blocks - 1 of its pairs.
        counts[m] = block_pairs * binomial(2 * b, m) - BigInt(blocks) * (blocks - 2) * binomial(b, m);
      }
      break;
    }
  }
  return counts;
}

BigInt correction_term(const CardinalityVector& confs, const Encoding& enc) {
  require_pairs(confs);
  const auto n = static_cast<std::uint64_t>(confs.size());
  BigInt eps = 0;
  switch (enc.scheme()) {
    case Scheme::Unary:
      break;
    case Scheme::Binary:
      for (auto c : confs.entries()) {
        const unsigned q = ceil_log2(c);
        for (unsigned m = 3; m <= q; ++m) eps += binomial(q, m);
      }
      eps *= n - 2;
      break;
    case Scheme::BlockUnaryBinary: {
      const unsigned b = enc.block_bits();
      for (unsigned m = 3; m <= b; ++m) eps += binomial(b, m);
      const std::uint64_t blocks = total_blocks(confs, enc.block_size());
      eps *= BigInt(blocks) * (blocks - 2);
      break;
    }
  }
  return eps;
}

BigInt two_qubit_gate_count(const OrderCounts& counts) {
  BigInt gates = 0;
  for (const auto& [m, count] : counts) {
    if (m >= 2) gates += count * (2 * (m - 1));
  }
  return gates;
}

ResourceEstimate estimate(const CardinalityVector& confs, const Encoding& enc) {
  ResourceEstimate est;
  est.qubits = qubit_count(confs, enc);
  est.k_locality = k_locality(confs, enc);
  est.interactions_by_order = interaction_counts(confs, enc);
  est.total_interactions = 0;
  for (const auto& [m, count] : est.interactions_by_order) est.total_interactions += count;
  est.two_qubit_gates = two_qubit_gate_count(est.interactions_by_order);
  est.correction_subtracted = correction_term(confs, enc);
  return est;
}

ResourceEstimate estimate(const ModelInstance& instance, const Encoding& enc) {
  if (std::holds_alternative<TurnLattice>(instance)) {
    throw DomainError("turn-lattice instances are counted by turn_estimate");
  }
  return estimate(cardinality_vector(instance), enc);
}

}  // namespace foldres
