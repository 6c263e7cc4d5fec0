/**************************************************************************
 * gau.hpp
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

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ringdna/parallel.hpp"
#include "ringdna/psi.hpp"
#include "ringdna/ring.hpp"

// Gau distance on R: the number of positions in which the psi triples of two
// elements differ. Summed coordinate-wise it is the distance on R^n, and psi
// carries it onto Hamming distance of the DNA images.

namespace ringdna {

namespace detail {

inline constexpr RingTable kGauTable = [] {
  RingTable t{};
  for (std::size_t i = 0; i < kRingOrder; ++i) {
    for (std::size_t j = 0; j < kRingOrder; ++j) {
      std::uint8_t d = 0;
      for (std::size_t p = 0; p < 3; ++p) d += kPsiForward[i][p] != kPsiForward[j][p];
      t[i][j] = d;
    }
  }
  return t;
}();

}  // namespace detail

constexpr unsigned gau_element(RingElement x, RingElement y) {
  return detail::kGauTable[x.index()][y.index()];
}

inline std::size_t gau_vec(const RingVector& x, const RingVector& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("gau_vec: length mismatch (" + std::to_string(x.size()) + " vs " +
                                std::to_string(y.size()) + ")");
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += gau_element(x[i], y[i]);
  return d;
}

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2026u;

struct ExactDistance {};

/// Minimum over `pairs` uniformly drawn pairs of distinct indices; an upper
/// bound on the true minimum.
struct SampledDistance {
  std::uint64_t pairs = 0;
  std::uint64_t seed = kDefaultSeed;
};

using DistanceMode = std::variant<ExactDistance, SampledDistance>;

struct DistanceResult {
  std::uint32_t distance = 0;
  bool exact = false;
  std::uint64_t pairs_examined = 0;
  // Indices into the code of one pair attaining `distance`.
  std::size_t first = 0;
  std::size_t second = 0;
};

namespace detail {

inline void require_code(std::span<const RingVector> code) {
  if (code.size() < 2) {
    throw std::invalid_argument("minimum distance is undefined for a code with fewer than 2 codewords");
  }
  for (const auto& v : code) {
    if (v.size() != code.front().size()) {
      throw std::invalid_argument("codewords have mixed lengths");
    }
  }
}

// Exhaustive sweep. Coordinates are consumed two at a time: for each row the
// scan builds 4096-entry tables giving the Gau distance of a coordinate pair
// against the row's pair, so one lookup covers two coordinates.
inline DistanceResult exact_min_gau(std::span<const RingVector> code, unsigned threads) {
  const std::size_t n = code.front().size();
  const std::size_t words = (n + 1) / 2;
  const std::size_t m = code.size();
  std::vector<std::uint16_t> packed(m * words);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t p = 0; p < words; ++p) {
      const std::size_t hi = code[j][2 * p].index();
      const std::size_t lo = 2 * p + 1 < n ? code[j][2 * p + 1].index() : 0;
      packed[j * words + p] = static_cast<std::uint16_t>(hi * kRingOrder + lo);
    }
  }

  auto scan = [&](std::size_t i, std::uint32_t, PairMinimum& local) {
    static thread_local std::vector<std::uint8_t> table;
    table.resize(words * kRingOrder * kRingOrder);
    const std::uint16_t* row = &packed[i * words];
    for (std::size_t p = 0; p < words; ++p) {
      const std::size_t hi = row[p] / kRingOrder;
      const std::size_t lo = row[p] % kRingOrder;
      std::uint8_t* t = &table[p * kRingOrder * kRingOrder];
      for (std::size_t y0 = 0; y0 < kRingOrder; ++y0) {
        const std::uint8_t base = kGauTable[hi][y0];
        for (std::size_t y1 = 0; y1 < kRingOrder; ++y1) {
          t[y0 * kRingOrder + y1] = static_cast<std::uint8_t>(base + kGauTable[lo][y1]);
        }
      }
    }
    std::uint32_t best = local.value;
    std::size_t best_j = 0;
    const std::uint8_t* t = table.data();
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::uint16_t* other = &packed[j * words];
      std::uint32_t s = 0;
      for (std::size_t p = 0; p < words; ++p) s += t[p * kRingOrder * kRingOrder + other[p]];
      if (s != 0 && s < best) {
        best = s;
        best_j = j;
      }
    }
    if (best < local.value) local.offer(best, i, best_j);
  };

  const PairMinimum found = parallel_row_minimum(m, threads, 1, scan);
  if (!found.found()) throw std::invalid_argument("code has no pair of distinct codewords");
  return {found.value, true, 0, found.first, found.second};
}

}  // namespace detail

/// Minimum Gau distance over pairs of distinct codewords.
///
/// Exact mode sweeps all M(M-1)/2 pairs, split by rows across `threads`
/// workers (0 = hardware concurrency), and stops as soon as distance 1 is
/// found. Sampled mode is sequential and reproducible from its seed; the
/// result is flagged non-exact.
inline DistanceResult min_gau_distance(std::span<const RingVector> code, const DistanceMode& mode,
                                       unsigned threads = 0) {
  detail::require_code(code);
  if (std::holds_alternative<ExactDistance>(mode)) {
    DistanceResult r = detail::exact_min_gau(code, threads);
    r.pairs_examined = code.size() * (code.size() - 1) / 2;
    return r;
  }
  const auto& sampled = std::get<SampledDistance>(mode);
  if (sampled.pairs == 0) throw std::invalid_argument("sampled distance needs at least one pair");
  std::mt19937_64 gen(sampled.seed);
  std::uniform_int_distribution<std::size_t> pick_first(0, code.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_second(0, code.size() - 2);
  detail::PairMinimum best;
  for (std::uint64_t s = 0; s < sampled.pairs; ++s) {
    const std::size_t i = pick_first(gen);
    std::size_t j = pick_second(gen);
    if (j >= i) ++j;
    const auto d = static_cast<std::uint32_t>(gau_vec(code[i], code[j]));
    if (d != 0 && d < best.value) {
      best.value = d;
      best.first = i;
      best.second = j;
    }
  }
  if (!best.found()) throw std::invalid_argument("no sampled pair of distinct codewords");
  return {best.value, false, sampled.pairs, best.first, best.second};
}

}  // namespace ringdna
