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
#include <string>
#include <vector>

#include "foldres/encoding.hpp"
#include "foldres/math.hpp"

namespace foldres {

// Resource counting for the turn-based square (dim 2) and cubic (dim 3)
// lattice model with distance and contact ancillas.
//
// Chain lengths start at N = 3; sums whose index range is empty for short
// chains evaluate to zero. The interaction total uses explicit back-turn
// term counts in place of the "(DN - 8) c_1" placeholder of the closed form.

struct TurnOptions {
  /// Constant subtracted from dim * N for Binary conformation qubits.
  /// Defaults to 3 * dim - 1 (2N - 5 on the square lattice, 3N - 8 cubic).
  std::optional<long long> c1_override;
};

struct OperatorClass {
  std::string name;  // Dij^2, alpha^2, 2Dij*alpha, linear-alpha, pair
  BigInt count;
  unsigned locality = 0;
};

struct TurnResourceBreakdown {
  std::uint64_t conformation_qubits = 0;
  std::uint64_t aux_dist_qubits = 0;
  std::uint64_t aux_pair_qubits = 0;
  std::uint64_t total_qubits = 0;
  BigInt hback_terms;
  unsigned hback_locality = 0;
  std::vector<OperatorClass> operator_classes;
  BigInt total_interactions;
  unsigned k_locality = 0;
  BigInt two_qubit_gates;
};

/// Default c_1 for a lattice dimension.
long long default_c1(unsigned dim);

std::uint64_t conformation_qubits(unsigned n, unsigned dim, const Encoding& enc,
                                  const TurnOptions& opts = {});

/// Slack-variable width ceil(2u) for two beads at chain distance d, where u
/// is d (Unary), log2 d (Binary) or ceil(d/g) ceil(log2(g+1)) (BUBinary).
std::uint64_t distance_slack_width(std::uint64_t d, const Encoding& enc);

/// Distance ancillas: every pair at even chain distance >= 4 carries a slack
/// register of distance_slack_width bits.
std::uint64_t aux_dist_qubits(unsigned n, const Encoding& enc);

/// Contact ancillas: one per pair at odd chain distance >= 3.
std::uint64_t aux_pair_qubits(unsigned n);

/// Back-turn penalty terms: 20 (N - 5) cubic, 11 (2N - 10) square, clamped.
BigInt hback_terms(unsigned n, unsigned dim);

std::vector<OperatorClass> overlap_and_pair_classes(unsigned n, unsigned dim,
                                                    const Encoding& enc);

TurnResourceBreakdown turn_estimate(unsigned n, unsigned dim, const Encoding& enc,
                                    const TurnOptions& opts = {});

}  // namespace foldres
