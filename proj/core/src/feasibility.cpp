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

#include "foldres/feasibility.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

#include "foldres/error.hpp"
#include "foldres/table_estimator.hpp"

namespace foldres {

namespace {

BigInt falling_factorial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt p = 1;
  for (std::uint64_t i = 0; i < k; ++i) p *= n - i;
  return p;
}

FeasibilityReport report_from_count(BigInt count, std::uint64_t qubits,
                                    FeasibilityMethod method) {
  FeasibilityReport r;
  r.qubits = qubits;
  r.method = method;
  r.log2_ratio = count > 0 ? log2_big(count) - static_cast<double>(qubits)
                           : -std::numeric_limits<double>::infinity();
  r.feasible_count = std::move(count);
  return r;
}

}  // namespace

std::string_view to_string(FeasibilityMethod method) {
  switch (method) {
    case FeasibilityMethod::Formula:
      return "formula";
    case FeasibilityMethod::ExactEnumeration:
      return "exact-enumeration";
    case FeasibilityMethod::CoordinateApproximate:
      return "coordinate-approximate";
  }
  return "unknown";
}

std::optional<double> FeasibilityReport::ratio() const {
  if (!(log2_ratio >= -1022.0)) return std::nullopt;
  if (feasible_count && *feasible_count > 0) {
    // Keep the top 64 bits of the count so the quotient is exact when it can be.
    const auto bits = static_cast<std::int64_t>(boost::multiprecision::msb(*feasible_count)) + 1;
    const std::int64_t drop = std::max<std::int64_t>(bits - 64, 0);
    const auto head = static_cast<std::uint64_t>(*feasible_count >> drop);
    return std::ldexp(static_cast<double>(head), static_cast<int>(drop - static_cast<std::int64_t>(qubits)));
  }
  return std::exp2(log2_ratio);
}

std::optional<std::string> FeasibilityReport::ratio_fraction() const {
  if (!feasible_count) return std::nullopt;
  BigInt num = *feasible_count;
  std::uint64_t exp = qubits;
  if (num == 0) return std::string("0/1");
  while (exp > 0 && (num & 1) == 0) {
    num >>= 1;
    --exp;
  }
  return to_string(num) + "/" + to_string(BigInt(1) << exp);
}

double formula_log2_ratio(const CardinalityVector& confs, const Encoding& enc) {
  double acc = 0.0;
  for (auto c : confs.entries()) {
    acc += std::log2(static_cast<double>(c)) - static_cast<double>(code_length(enc, c));
  }
  return acc;
}

FeasibilityReport feasible_ratio_formula(const CardinalityVector& confs, const Encoding& enc) {
  FeasibilityReport r;
  r.method = FeasibilityMethod::Formula;
  r.qubits = qubit_count(confs, enc);
  BigInt count = 1;
  for (auto c : confs.entries()) count *= c;
  r.feasible_count = std::move(count);
  r.log2_ratio = formula_log2_ratio(confs, enc);
  return r;
}

FeasibilityReport feasible_ratio_exact(const CardinalityVector& confs, const Encoding& enc,
                                       std::uint64_t qubit_cap) {
  const std::uint64_t m = qubit_count(confs, enc);
  if (m > qubit_cap) {
    throw DomainError("exact enumeration needs " + std::to_string(m) +
                      " qubits, above the cap of " + std::to_string(qubit_cap));
  }
  if (m > 62) throw DomainError("exact enumeration is limited to 62 qubits");

  // Per-residue lookup of which local patterns decode; the bitstring is
  // then walked in full and split into residue slices.
  struct Slice {
    unsigned shift;
    std::uint64_t mask;
    std::vector<std::uint8_t> ok;
  };
  std::vector<Slice> slices;
  std::uint64_t offset = 0;
  for (auto c : confs.entries()) {
    const auto len = code_length(enc, c);
    Slice s{static_cast<unsigned>(m - offset - len), (std::uint64_t{1} << len) - 1,
            std::vector<std::uint8_t>(std::size_t{1} << len)};
    std::vector<std::uint8_t> bits(len);
    for (std::uint64_t p = 0; p < s.ok.size(); ++p) {
      for (std::uint64_t i = 0; i < len; ++i) bits[i] = (p >> (len - 1 - i)) & 1U;
      s.ok[p] = decode_codeword(bits, enc, c).has_value();
    }
    slices.push_back(std::move(s));
    offset += len;
  }

  std::uint64_t hits = 0;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t x = 0; x < total; ++x) {
    bool all = true;
    for (const auto& s : slices) {
      if (!s.ok[(x >> s.shift) & s.mask]) {
        all = false;
        break;
      }
    }
    hits += all;
  }
  return report_from_count(BigInt(hits), m, FeasibilityMethod::ExactEnumeration);
}

BigInt coordinate_feasible_count(const GridSpec& grid, unsigned n) {
  const std::uint64_t s = grid.sites();
  if (s < n) {
    throw DomainError("grid " + grid.str() + " has fewer sites than N = " + std::to_string(n));
  }
  return falling_factorial((s + 1) / 2, (n + 1) / 2) * falling_factorial(s / 2, n / 2);
}

FeasibilityReport coordinate_feasible_ratio(const GridSpec& grid, unsigned n,
                                            const Encoding& enc) {
  const auto confs = cardinality_vector(CoordinateLattice{grid.dim(), grid, n});
  return report_from_count(coordinate_feasible_count(grid, n), qubit_count(confs, enc),
                           FeasibilityMethod::CoordinateApproximate);
}

FeasibilityReport turn_feasible_ratio(unsigned n, unsigned dim, const Encoding& enc) {
  return feasible_ratio_formula(cardinality_vector(TurnLattice{dim, n}), enc);
}

}  // namespace foldres
