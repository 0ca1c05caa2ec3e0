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
#include <map>

#include "foldres/encoding.hpp"
#include "foldres/instances.hpp"
#include "foldres/math.hpp"

namespace foldres {

/// Interaction (Pauli-Z monomial) counts keyed by interaction order m.
using OrderCounts = std::map<unsigned, BigInt>;

/// Closed-form resources for a coordinate-lattice or side-chain instance.
struct ResourceEstimate {
  std::uint64_t qubits = 0;
  unsigned k_locality = 0;
  OrderCounts interactions_by_order;
  BigInt total_interactions;
  BigInt two_qubit_gates;
  /// Duplicate within-residue (or within-block) supports removed from the
  /// raw pairwise sums.
  BigInt correction_subtracted;
};

std::uint64_t qubit_count(const CardinalityVector& confs, const Encoding& enc);

/// Largest interaction order. Binary uses the two largest entries (ties
/// count twice); a single-residue Binary instance is a DomainError.
unsigned k_locality(const CardinalityVector& confs, const Encoding& enc);

/// Per-order counts: all qubits at order 1, all qubit pairs at order 2, and
/// for Binary / BlockUnaryBinary the pairwise higher-order supports with
/// shared within-residue supports counted once. Requires N >= 2.
OrderCounts interaction_counts(const CardinalityVector& confs, const Encoding& enc);

/// Total of the duplicates removed by interaction_counts. Binary:
/// (N - 2) * sum_i sum_m binom(q_i, m). BlockUnaryBinary: the same sum taken
/// over all B blocks, B (B - 2) * sum_m binom(b, m), zero below g = 4.
/// Unary: zero.
BigInt correction_term(const CardinalityVector& confs, const Encoding& enc);

/// Sum over m of count_m * 2(m - 1): the CNOT-ladder cost of every term.
BigInt two_qubit_gate_count(const OrderCounts& counts);

/// Composes the above. TurnLattice instances throw DomainError; use
/// turn_estimate for those.
ResourceEstimate estimate(const ModelInstance& instance, const Encoding& enc);
ResourceEstimate estimate(const CardinalityVector& confs, const Encoding& enc);

}  // namespace foldres
