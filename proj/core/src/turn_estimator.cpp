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

#include "foldres/turn_estimator.hpp"

#include <algorithm>
#include <string>

#include "foldres/error.hpp"

namespace foldres {

namespace {

void check_domain(unsigned n, unsigned dim) {
  if (dim != 2 && dim != 3) throw DomainError("lattice dimension must be 2 or 3");
  if (n < 3) {
    throw DomainError("turn-lattice model needs N >= 3, got N = " + std::to_string(n));
  }
}

bool is_unary(const Encoding& enc) { return enc.scheme() == Scheme::Unary; }

// Smallest k with 2^k >= d^2, i.e. ceil(2 log2 d) without rounding error.
std::uint64_t ceil_two_log2(std::uint64_t d) {
  const BigInt sq = BigInt(d) * d;
  std::uint64_t k = 0;
  while ((BigInt(1) << k) < sq) ++k;
  return k;
}

}  // namespace

long long default_c1(unsigned dim) { return 3LL * dim - 1; }

std::uint64_t conformation_qubits(unsigned n, unsigned dim, const Encoding& enc,
                                  const TurnOptions& opts) {
  check_domain(n, dim);
  const std::uint64_t dn = std::uint64_t{dim} * n;
  switch (enc.scheme()) {
    case Scheme::Binary: {
      const long long c1 = opts.c1_override.value_or(default_c1(dim));
      const long long q = static_cast<long long>(dn) - c1;
      if (q < 0) {
        throw DomainError("c1 = " + std::to_string(c1) + " exceeds dim * N = " +
                          std::to_string(dn));
      }
      return static_cast<std::uint64_t>(q);
    }
    case Scheme::Unary:
      return 2 * dn;
    case Scheme::BlockUnaryBinary:
      return std::uint64_t{enc.block_bits()} * ceil_div(dn, enc.block_size());
  }
  return 0;
}

std::uint64_t distance_slack_width(std::uint64_t d, const Encoding& enc) {
  switch (enc.scheme()) {
    case Scheme::Unary:
      return 2 * d;
    case Scheme::Binary:
      return ceil_two_log2(d);
    case Scheme::BlockUnaryBinary:
      return 2 * ceil_div(d, enc.block_size()) * enc.block_bits();
  }
  return 0;
}

std::uint64_t aux_dist_qubits(unsigned n, const Encoding& enc) {
  check_domain(n, 2);
  std::uint64_t total = 0;
  for (std::uint64_t d = 4; d < n; d += 2) total += (n - d) * distance_slack_width(d, enc);
  return total;
}

std::uint64_t aux_pair_qubits(unsigned n) {
  check_domain(n, 2);
  std::uint64_t total = 0;
  for (std::uint64_t d = 3; d < n; d += 2) total += n - d;
  return total;
}

BigInt hback_terms(unsigned n, unsigned dim) {
  check_domain(n, dim);
  if (dim == 3) return BigInt(20) * (n > 5 ? n - 5 : 0);
  return BigInt(11) * (n > 5 ? 2 * n - 10 : 0);
}

std::vector<OperatorClass> overlap_and_pair_classes(unsigned n, unsigned dim,
                                                    const Encoding& enc) {
  check_domain(n, dim);
  const bool unary = is_unary(enc);
  const BigInt pairs = binomial(n, 2);
  const std::uint64_t m_dist = aux_dist_qubits(n, enc);
  const std::uint64_t m_pair = aux_pair_qubits(n);
  const unsigned mixed = unary ? 3 : 2 * (dim - 1) + 1;
  return {
      {"Dij^2", binomial(pairs, 2), unary ? 4u : 4 * (dim - 1)},
      {"alpha^2", binomial(m_dist, 2), 2},
      {"2Dij*alpha", pairs * m_dist, mixed},
      {"linear-alpha", BigInt(m_dist), 1},
      {"pair", pairs * m_pair, mixed},
  };
}

TurnResourceBreakdown turn_estimate(unsigned n, unsigned dim, const Encoding& enc,
                                    const TurnOptions& opts) {
  check_domain(n, dim);
  TurnResourceBreakdown out;
  out.conformation_qubits = conformation_qubits(n, dim, enc, opts);
  out.aux_dist_qubits = aux_dist_qubits(n, enc);
  out.aux_pair_qubits = aux_pair_qubits(n);
  out.total_qubits = out.conformation_qubits + out.aux_dist_qubits + out.aux_pair_qubits;
  out.hback_terms = hback_terms(n, dim);
  out.hback_locality = is_unary(enc) ? 2 : 2 * dim;
  out.operator_classes = overlap_and_pair_classes(n, dim, enc);

  out.total_interactions = out.hback_terms;
  out.two_qubit_gates = out.hback_terms * (2 * (out.hback_locality - 1));
  out.k_locality = out.hback_terms > 0 ? out.hback_locality : 0;
  for (const auto& cls : out.operator_classes) {
    out.total_interactions += cls.count;
    out.two_qubit_gates += cls.count * (2 * (cls.locality - 1));
    if (cls.count > 0) out.k_locality = std::max(out.k_locality, cls.locality);
  }
  return out;
}

}  // namespace foldres
