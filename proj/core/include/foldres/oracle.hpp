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
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "foldres/encoding.hpp"
#include "foldres/instances.hpp"
#include "foldres/table_estimator.hpp"

namespace foldres {

// Brute-force ground truth for the closed-form interaction counts.
//
// A dense pairwise energy is written out as a pseudo-Boolean polynomial:
// every value pair of every residue pair gets its own symbolic coefficient,
// times the product of the two value indicators. Each such term is mapped to
// spin variables with x -> (1 - z) / 2 and the non-vanishing monomial
// supports are collected. Because coefficients are independent symbols, a
// support is present iff it survives inside at least one term, so no
// floating-point cancellation can hide or invent a monomial.

/// Multilinear polynomial over binary variables (x^2 = x), keyed by the
/// bitmask of the variables in each monomial. Used for penalty terms that
/// share one coefficient across several monomials.
class PseudoBooleanPolynomial {
 public:
  void add(std::uint64_t monomial, long long coeff);
  PseudoBooleanPolynomial operator*(const PseudoBooleanPolynomial& rhs) const;
  PseudoBooleanPolynomial& operator+=(const PseudoBooleanPolynomial& rhs);

  static PseudoBooleanPolynomial constant(long long c);
  static PseudoBooleanPolynomial variable(unsigned index);

  /// Non-empty spin supports with a non-zero coefficient after x -> (1-z)/2.
  std::vector<std::uint64_t> spin_support() const;

  const std::unordered_map<std::uint64_t, long long>& terms() const { return terms_; }

 private:
  std::unordered_map<std::uint64_t, long long> terms_;
};

/// A binary variable or its complement (1 - x).
struct Literal {
  unsigned qubit;
  bool positive;
};

/// Non-empty spin supports of a product of literals over distinct qubits.
std::vector<std::uint64_t> literal_product_support(std::span<const Literal> literals);

struct MonomialCensus {
  std::map<unsigned, std::uint64_t> counts_by_order;
  std::uint64_t qubit_count = 0;

  std::uint64_t total() const;
};

inline constexpr std::uint64_t kOracleQubitCap = 24;

/// Requires N >= 2 and qubit_count(C, enc) <= qubit_cap (DomainError).
MonomialCensus census_dense_pairwise(const CardinalityVector& confs, const Encoding& enc,
                                     std::uint64_t qubit_cap = kOracleQubitCap);

struct CensusComparison {
  bool equal = false;
  /// Smallest order whose counts differ.
  std::optional<unsigned> first_divergent_order;
  std::uint64_t census_count = 0;
  BigInt estimate_count;
  MonomialCensus census;
  OrderCounts estimate;
};

CensusComparison census_equals_estimate(const CardinalityVector& confs, const Encoding& enc,
                                        std::uint64_t qubit_cap = kOracleQubitCap);

}  // namespace foldres
