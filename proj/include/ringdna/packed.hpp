/**************************************************************************
 * packed.hpp
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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ringdna/dna.hpp"
#include "ringdna/parallel.hpp"

// 2-bit packed DNA (A=0, C=1, G=2, T=3, 32 symbols per word) and pairwise
// Hamming sweeps over packed sets. Symbol mismatches are counted with
// xor + fold + popcount, so this path never touches the ring tables.

namespace ringdna::detail {

class PackedDnaSet {
 public:
  PackedDnaSet(std::span<const DnaSequence> seqs, std::size_t length)
      : length_(length), words_((length + 31) / 32), count_(seqs.size()), data_(count_ * words_, 0) {
    for (std::size_t i = 0; i < count_; ++i) {
      std::uint64_t* w = &data_[i * words_];
      for (std::size_t p = 0; p < length_; ++p) {
        w[p / 32] |= std::uint64_t(code(seqs[i][p])) << (2 * (p % 32));
      }
    }
  }

  std::size_t size() const { return count_; }
  std::size_t words() const { return words_; }
  const std::uint64_t* row(std::size_t i) const { return &data_[i * words_]; }

  static std::uint32_t distance(const std::uint64_t* x, const std::uint64_t* y, std::size_t words) {
    constexpr std::uint64_t kLow = 0x5555555555555555ull;
    std::uint32_t d = 0;
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t diff = x[w] ^ y[w];
      d += static_cast<std::uint32_t>(std::popcount((diff | (diff >> 1)) & kLow));
    }
    return d;
  }

 private:
  static unsigned code(char ch) {
    switch (ch) {
      case 'C': return 1;
      case 'G': return 2;
      case 'T': return 3;
      default: return 0;
    }
  }

  std::size_t length_;
  std::size_t words_;
  std::size_t count_;
  std::vector<std::uint64_t> data_;
};

/// Minimum Hamming distance over pairs i < j with distinct sequences.
inline PairMinimum packed_min_distance(const PackedDnaSet& set, unsigned threads, std::uint32_t floor) {
  const std::size_t words = set.words();
  return parallel_row_minimum(set.size(), threads, floor,
                              [&](std::size_t i, std::uint32_t, PairMinimum& local) {
                                const std::uint64_t* x = set.row(i);
                                for (std::size_t j = i + 1; j < set.size(); ++j) {
                                  const std::uint32_t d = PackedDnaSet::distance(x, set.row(j), words);
                                  if (d != 0 && d < local.value) local.offer(d, i, j);
                                }
                              });
}

/// Minimum Hamming distance between rows[i] and cols[j] over all (i, j) whose
/// sequences differ. Scans everything, so the witness is the smallest (i, j).
inline PairMinimum packed_cross_min_distance(const PackedDnaSet& rows, const PackedDnaSet& cols,
                                             unsigned threads) {
  const std::size_t words = rows.words();
  return parallel_row_minimum(rows.size(), threads, 0,
                              [&](std::size_t i, std::uint32_t, PairMinimum& local) {
                                const std::uint64_t* x = rows.row(i);
                                for (std::size_t j = 0; j < cols.size(); ++j) {
                                  const std::uint32_t d = PackedDnaSet::distance(x, cols.row(j), words);
                                  if (d != 0 && d < local.value) local.offer(d, i, j);
                                }
                              });
}

}  // namespace ringdna::detail
