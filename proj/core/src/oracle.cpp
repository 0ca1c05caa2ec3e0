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

#include "foldres/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "foldres/error.hpp"

namespace foldres {

void PseudoBooleanPolynomial::add(std::uint64_t monomial, long long coeff) {
  if (coeff == 0) return;
  auto& c = terms_[monomial];
  c += coeff;
  if (c == 0) terms_.erase(monomial);
}

PseudoBooleanPolynomial PseudoBooleanPolynomial::operator*(
    const PseudoBooleanPolynomial& rhs) const {
  PseudoBooleanPolynomial out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) out.add(ma | mb, ca * cb);
  }
  return out;
}

PseudoBooleanPolynomial& PseudoBooleanPolynomial::operator+=(
    const PseudoBooleanPolynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add(m, c);
  return *this;
}

PseudoBooleanPolynomial PseudoBooleanPolynomial::constant(long long c) {
  PseudoBooleanPolynomial p;
  p.add(0, c);
  return p;
}

PseudoBooleanPolynomial PseudoBooleanPolynomial::variable(unsigned index) {
  PseudoBooleanPolynomial p;
  p.add(std::uint64_t{1} << index, 1);
  return p;
}

std::vector<std::uint64_t> PseudoBooleanPolynomial::spin_support() const {
  int degree = 0;
  for (const auto& [m, c] : terms_) degree = std::max(degree, std::popcount(m));
  // Scaled by 2^degree so every coefficient stays integral:
  // c_T x_T -> c_T 2^(degree - |T|) sum_{S subset T} (-1)^|S| z_S.
  std::unordered_map<std::uint64_t, long long> spin;
  for (const auto& [t, c] : terms_) {
    const long long scaled = c * (1LL << (degree - std::popcount(t)));
    for (std::uint64_t s = t;; s = (s - 1) & t) {
      spin[s] += (std::popcount(s) % 2) ? -scaled : scaled;
      if (s == 0) break;
    }
  }
  std::vector<std::uint64_t> out;
  for (const auto& [s, c] : spin) {
    if (s != 0 && c != 0) out.push_back(s);
  }
  return out;
}

std::vector<std::uint64_t> literal_product_support(std::span<const Literal> literals) {
  const std::size_t k = literals.size();
  if (k > 30) throw DomainError("literal product too wide for the oracle");
  // Dense x-basis coefficients over the local variables.
  std::vector<long long> a(std::size_t{1} << k, 0);
  a[0] = 1;
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t bit = std::size_t{1} << j;
    for (std::size_t m = 0; m < bit; ++m) {
      const long long v = a[m];
      if (literals[j].positive) {
        a[m] = 0;
        a[m | bit] = v;
      } else {
        a[m | bit] = -v;
      }
    }
  }
  // z-basis: b[S] = (-1)^|S| sum_{T >= S} a[T] 2^(k - |T|) (superset sums).
  for (std::size_t t = 0; t < a.size(); ++t) a[t] <<= (k - std::popcount(t));
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t bit = std::size_t{1} << j;
    for (std::size_t m = 0; m < a.size(); ++m) {
      if (!(m & bit)) a[m] += a[m | bit];
    }
  }
  std::vector<std::uint64_t> out;
  for (std::size_t s = 1; s < a.size(); ++s) {
    if (a[s] == 0) continue;
    std::uint64_t global = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (s & (std::size_t{1} << j)) global |= std::uint64_t{1} << literals[j].qubit;
    }
    out.push_back(global);
  }
  return out;
}

std::uint64_t MonomialCensus::total() const {
  std::uint64_t t = 0;
  for (const auto& [m, c] : counts_by_order) t += c;
  return t;
}

namespace {

// Qubit layout and value indicators for one residue.
struct ResidueLayout {
  std::uint64_t conformations;
  unsigned offset;
  unsigned length;
};

// Literals whose product indicates "residue takes value r". Unary: the single
// one-hot bit. Binary: every bit of the codeword. BlockUnaryBinary: the bits
// of the active block only.
std::vector<Literal> value_indicator(const ResidueLayout& res, std::uint64_t r,
                                     const Encoding& enc) {
  const auto word = encode_integer(r, enc, res.conformations);
  std::vector<Literal> lits;
  switch (enc.scheme()) {
    case Scheme::Unary:
      lits.push_back({res.offset + static_cast<unsigned>(r), true});
      break;
    case Scheme::Binary:
      for (unsigned p = 0; p < res.length; ++p) lits.push_back({res.offset + p, word.bits[p] != 0});
      break;
    case Scheme::BlockUnaryBinary: {
      const unsigned b = enc.block_bits();
      const auto k = static_cast<unsigned>(r / enc.block_size());
      const unsigned start = res.length - (k + 1) * b;
      for (unsigned p = start; p < start + b; ++p) {
        lits.push_back({res.offset + p, word.bits[p] != 0});
      }
      break;
    }
  }
  return lits;
}

std::vector<Literal> concat(const std::vector<Literal>& a, const std::vector<Literal>& b) {
  std::vector<Literal> out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

class SupportSet {
 public:
  void insert(const std::vector<std::uint64_t>& supports) {
    masks_.insert(masks_.end(), supports.begin(), supports.end());
    if (masks_.size() > 1u << 20) compact();
  }
  const std::vector<std::uint64_t>& finish() {
    compact();
    return masks_;
  }

 private:
  void compact() {
    std::ranges::sort(masks_);
    masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
  }
  std::vector<std::uint64_t> masks_;
};

}  // namespace

MonomialCensus census_dense_pairwise(const CardinalityVector& confs, const Encoding& enc,
                                     std::uint64_t qubit_cap) {
  if (confs.size() < 2) throw DomainError("the oracle needs N >= 2 residues");
  std::vector<ResidueLayout> layout;
  std::uint64_t q = 0;
  for (auto c : confs.entries()) {
    const auto len = code_length(enc, c);
    layout.push_back({c, static_cast<unsigned>(q), static_cast<unsigned>(len)});
    q += len;
  }
  if (q > qubit_cap) {
    throw DomainError("oracle census needs " + std::to_string(q) +
                      " qubits, above the cap of " + std::to_string(qubit_cap));
  }

  std::vector<std::vector<std::vector<Literal>>> indicators;
  for (const auto& res : layout) {
    std::vector<std::vector<Literal>> per_value;
    for (std::uint64_t r = 0; r < res.conformations; ++r) {
      per_value.push_back(value_indicator(res, r, enc));
    }
    indicators.push_back(std::move(per_value));
  }

  SupportSet supports;
  // Pair energy: one independent coefficient per value pair.
  for (std::size_t i = 0; i < layout.size(); ++i) {
    for (std::size_t j = i + 1; j < layout.size(); ++j) {
      for (const auto& a : indicators[i]) {
        for (const auto& b : indicators[j]) supports.insert(literal_product_support(concat(a, b)));
      }
    }
  }

  // Within-residue constraint structure.
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const auto& res = layout[i];
    switch (enc.scheme()) {
      case Scheme::Unary: {
        // One-hot penalty (sum_a x_a - 1)^2 with a single coefficient.
        PseudoBooleanPolynomial s = PseudoBooleanPolynomial::constant(-1);
        for (unsigned a = 0; a < res.length; ++a) s += PseudoBooleanPolynomial::variable(res.offset + a);
        supports.insert((s * s).spin_support());
        break;
      }
      case Scheme::Binary:
        break;
      case Scheme::BlockUnaryBinary: {
        // At most one active block: an independent coefficient for each pair
        // of patterns in two different blocks, plus the single-pattern terms.
        const auto& vals = indicators[i];
        const std::uint64_t g = enc.block_size();
        for (std::uint64_t r = 0; r < vals.size(); ++r) {
          supports.insert(literal_product_support(vals[r]));
          for (std::uint64_t s = r + 1; s < vals.size(); ++s) {
            if (r / g == s / g) continue;
            supports.insert(literal_product_support(concat(vals[r], vals[s])));
          }
        }
        break;
      }
    }
  }

  MonomialCensus census;
  census.qubit_count = q;
  for (auto m : supports.finish()) ++census.counts_by_order[std::popcount(m)];
  return census;
}

CensusComparison census_equals_estimate(const CardinalityVector& confs, const Encoding& enc,
                                        std::uint64_t qubit_cap) {
  CensusComparison cmp;
  cmp.census = census_dense_pairwise(confs, enc, qubit_cap);
  cmp.estimate = interaction_counts(confs, enc);
  cmp.census_count = cmp.census.total();
  cmp.estimate_count = 0;
  for (const auto& [m, c] : cmp.estimate) cmp.estimate_count += c;

  unsigned top = 0;
  if (!cmp.census.counts_by_order.empty()) top = cmp.census.counts_by_order.rbegin()->first;
  if (!cmp.estimate.empty()) top = std::max(top, cmp.estimate.rbegin()->first);
  cmp.equal = true;
  for (unsigned m = 1; m <= top; ++m) {
    const auto it_c = cmp.census.counts_by_order.find(m);
    const auto it_e = cmp.estimate.find(m);
    const BigInt have = it_c == cmp.census.counts_by_order.end() ? BigInt(0) : BigInt(it_c->second);
    const BigInt want = it_e == cmp.estimate.end() ? BigInt(0) : it_e->second;
    if (have != want) {
      cmp.equal = false;
      cmp.first_divergent_order = m;
      break;
    }
  }
  return cmp;
}

}  // namespace foldres
