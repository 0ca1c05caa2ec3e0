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
#include <string_view>

#include "foldres/encoding.hpp"
#include "foldres/instances.hpp"
#include "foldres/math.hpp"

namespace foldres {

enum class FeasibilityMethod { Formula, ExactEnumeration, CoordinateApproximate };

std::string_view to_string(FeasibilityMethod method);

/// |F| against |S| = 2^M. The ratio is held as log2; ratio() gives the
/// linear value only at or above 2^-1022.
struct FeasibilityReport {
  std::optional<BigInt> feasible_count;
  std::uint64_t qubits = 0;  // M
  double log2_ratio = 0.0;
  FeasibilityMethod method = FeasibilityMethod::Formula;

  BigInt total_count() const { return BigInt(1) << qubits; }

  /// Linear ratio, or nullopt below the smallest normal double (2^-1022).
  std::optional<double> ratio() const;

  /// Reduced "a/b" form of feasible_count / 2^M; nullopt without a count.
  std::optional<std::string> ratio_fraction() const;
};

/// log2 of the closed-form ratio prod_i c_i / 2^{w_i} without building the
/// product; used by the sweep driver.
double formula_log2_ratio(const CardinalityVector& confs, const Encoding& enc);

/// Closed form: per residue c_i feasible codewords out of 2^{w_i}, with w_i
/// the code length of the encoding.
FeasibilityReport feasible_ratio_formula(const CardinalityVector& confs, const Encoding& enc);

inline constexpr std::uint64_t kDefaultQubitCap = 24;

/// Exhaustive count over all 2^M bitstrings of the strings in which every
/// residue's codeword decodes. Throws DomainError when M > qubit_cap.
FeasibilityReport feasible_ratio_exact(const CardinalityVector& confs, const Encoding& enc,
                                       std::uint64_t qubit_cap = kDefaultQubitCap);

/// Injective parity-respecting placements of N beads on a grid:
/// P(ceil(S/2), ceil(N/2)) * P(floor(S/2), floor(N/2)). Chain connectivity
/// is ignored.
BigInt coordinate_feasible_count(const GridSpec& grid, unsigned n);

/// Coordinate-model approximate ratio using coordinate_feasible_count.
FeasibilityReport coordinate_feasible_ratio(const GridSpec& grid, unsigned n,
                                            const Encoding& enc);

/// Closed-form ratio on the turn cardinality vector (4s or 6s); ancillas are not
/// part of the feasibility question.
FeasibilityReport turn_feasible_ratio(unsigned n, unsigned dim, const Encoding& enc);

}  // namespace foldres
