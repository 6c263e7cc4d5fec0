/**************************************************************************
 * oracle.hpp
 *
 * Copyright 2026 The ringdna Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

// Test-only reference computations. Nothing here goes through the library's
// lookup tables or packed kernels.

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ringdna/ring.hpp"

namespace oracle {

using Coeffs = std::array<int, 3>;

inline Coeffs coeffs(ringdna::RingElement x) { return {int(x.a()), int(x.b()), int(x.c())}; }

inline ringdna::RingElement from_coeffs(const Coeffs& c) { return {c[0], c[1], c[2]}; }

inline ringdna::RingElement add(ringdna::RingElement x, ringdna::RingElement y) {
  const auto p = coeffs(x), q = coeffs(y);
  return from_coeffs({(p[0] + q[0]) % 4, (p[1] + q[1]) % 4, (p[2] + q[2]) % 4});
}

// Full degree-4 polynomial product, then fold u^3 -> 1 and u^4 -> u.
inline ringdna::RingElement mul(ringdna::RingElement x, ringdna::RingElement y) {
  const auto p = coeffs(x), q = coeffs(y);
  int full[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) full[i + j] += p[i] * q[j];
  return from_coeffs({(full[0] + full[3]) % 4, (full[1] + full[4]) % 4, full[2] % 4});
}

inline std::string reverse_complement(const std::string& s) {
  std::string out;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    switch (*it) {
      case 'A': out += 'T'; break;
      case 'T': out += 'A'; break;
      case 'C': out += 'G'; break;
      case 'G': out += 'C'; break;
    }
  }
  return out;
}

inline std::size_t string_hamming(const std::string& x, const std::string& y) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

/// Span by iterating every coefficient tuple in R^k.
inline std::set<ringdna::RingVector> tuple_span(const std::vector<ringdna::RingVector>& rows) {
  const std::size_t k = rows.size();
  const std::size_t n = rows.front().size();
  std::set<ringdna::RingVector> out;
  std::vector<std::size_t> coef(k, 0);
  while (true) {
    ringdna::RingVector v(n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t p = 0; p < n; ++p) v[p] = oracle::add(v[p], oracle::mul(ringdna::RingElement::from_index(coef[i]), rows[i][p]));
    out.insert(v);
    std::size_t pos = 0;
    while (pos < k && ++coef[pos] == 64) coef[pos++] = 0;
    if (pos == k) break;
  }
  return out;
}

/// Minimum Hamming distance by comparing DNA strings pairwise.
inline std::size_t string_min_distance(const std::vector<std::string>& code) {
  std::size_t best = SIZE_MAX;
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j)
      if (code[i] != code[j]) best = std::min(best, string_hamming(code[i], code[j]));
  return best;
}

inline std::string random_dna(std::mt19937_64& gen, std::size_t length) {
  static constexpr char kSymbols[] = "ACGT";
  std::string s(length, 'A');
  for (auto& ch : s) ch = kSymbols[gen() % 4];
  return s;
}

inline ringdna::RingVector random_vector(std::mt19937_64& gen, std::size_t n) {
  ringdna::RingVector v(n);
  for (auto& x : v) x = ringdna::RingElement::from_index(gen() % 64);
  return v;
}

}  // namespace oracle
