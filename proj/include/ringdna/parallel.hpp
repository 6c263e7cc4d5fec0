/**************************************************************************
 * parallel.hpp
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

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <thread>
#include <tuple>
#include <vector>

namespace ringdna::detail {

inline constexpr std::uint32_t kNoPair = std::numeric_limits<std::uint32_t>::max();

/// Smallest pair distance seen so far, with the pair that produced it.
struct PairMinimum {
  std::uint32_t value = kNoPair;
  std::size_t first = 0;
  std::size_t second = 0;

  bool found() const { return value != kNoPair; }

  void offer(std::uint32_t v, std::size_t i, std::size_t j) {
    if (std::tie(v, i, j) < std::tie(value, first, second)) {
      value = v;
      first = i;
      second = j;
    }
  }

  void merge(const PairMinimum& other) {
    if (other.found()) offer(other.value, other.first, other.second);
  }
};

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs `scan(row, bound, local)` over every row, rows handed out in chunks to
/// `threads` workers. `bound` is the best value any worker has published; a
/// scan may skip pairs whose distance strictly exceeds it. Workers stop once
/// the global minimum reaches `floor` (pass 0 to scan everything).
///
/// Without an early stop the result is the lexicographically smallest
/// (value, row, column) over all offered pairs, independent of thread count.
template <class RowScan>
PairMinimum parallel_row_minimum(std::size_t rows, unsigned threads, std::uint32_t floor,
                                 RowScan&& scan) {
  threads = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads),
                                                        std::max<std::size_t>(rows, 1)));
  constexpr std::size_t kChunk = 16;
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint32_t> best{kNoPair};
  std::atomic<bool> stop{false};
  std::vector<PairMinimum> partial(threads);

  auto worker = [&](unsigned t) {
    PairMinimum& local = partial[t];
    while (!stop.load(std::memory_order_relaxed)) {
      const std::size_t begin = next.fetch_add(kChunk, std::memory_order_relaxed);
      if (begin >= rows) break;
      const std::size_t end = std::min(rows, begin + kChunk);
      for (std::size_t row = begin; row < end; ++row) {
        scan(row, best.load(std::memory_order_relaxed), local);
        std::uint32_t seen = best.load(std::memory_order_relaxed);
        while (local.value < seen &&
               !best.compare_exchange_weak(seen, local.value, std::memory_order_relaxed)) {
        }
        if (local.value <= floor) {
          stop.store(true, std::memory_order_relaxed);
          break;
        }
      }
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }

  PairMinimum result;
  for (const auto& p : partial) result.merge(p);
  return result;
}

}  // namespace ringdna::detail
