/**************************************************************************
 * audit.hpp
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
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ringdna/code.hpp"
#include "ringdna/dna.hpp"
#include "ringdna/gau.hpp"
#include "ringdna/packed.hpp"
#include "ringdna/psi.hpp"

// Verdicts for the four DNA code constraints (GC-content, homopolymer
// run-length, reversible, reversible-complement), rate figures, and the
// end-to-end report for a generator matrix.

namespace ringdna {

/// A nonempty set of equal-length DNA codewords. Duplicates are dropped and
/// the first-occurrence order is kept.
class DnaCode {
 public:
  explicit DnaCode(std::vector<DnaSequence> codewords) {
    if (codewords.empty()) throw std::invalid_argument("DNA code must contain at least one codeword");
    const std::size_t length = codewords.front().size();
    codewords_.reserve(codewords.size());
    index_.reserve(codewords.size());
    for (auto& c : codewords) {
      if (c.size() != length) {
        throw std::invalid_argument("DNA code has mixed lengths (" + std::to_string(length) + " and " +
                                    std::to_string(c.size()) + ")");
      }
      if (index_.insert(c.str()).second) codewords_.push_back(std::move(c));
    }
  }

  static DnaCode from_span(const SpanCode& code) {
    std::vector<DnaSequence> image;
    image.reserve(code.size());
    for (const auto& c : code.codewords()) image.push_back(psi_vec(c));
    return DnaCode(std::move(image));
  }

  const std::vector<DnaSequence>& codewords() const { return codewords_; }
  const DnaSequence& operator[](std::size_t i) const { return codewords_[i]; }
  std::size_t size() const { return codewords_.size(); }
  std::size_t length() const { return codewords_.front().size(); }
  bool contains(const DnaSequence& s) const { return index_.contains(s.str()); }

  /// Exact minimum distance, when already known.
  const std::optional<std::uint32_t>& declared_distance() const { return declared_distance_; }
  void declare_distance(std::uint32_t d) { declared_distance_ = d; }

 private:
  std::vector<DnaSequence> codewords_;
  std::unordered_set<std::string> index_;
  std::optional<std::uint32_t> declared_distance_;
};

/// Exact minimum Hamming distance between distinct codewords; nullopt when
/// the code has a single codeword.
inline std::optional<std::uint32_t> min_hamming_distance(const DnaCode& code, unsigned threads = 0) {
  if (code.size() < 2) return std::nullopt;
  const detail::PackedDnaSet packed(code.codewords(), code.length());
  return detail::packed_min_distance(packed, threads, 1).value;
}

struct GcVerdict {
  bool satisfied = false;
  std::optional<std::size_t> w;  // common GC count when satisfied
  std::size_t length = 0;
  std::map<std::size_t, std::size_t> histogram;  // GC count -> number of codewords
};

inline GcVerdict check_gc_constraint(const DnaCode& code) {
  GcVerdict v;
  v.length = code.length();
  for (const auto& c : code.codewords()) ++v.histogram[gc_content(c)];
  v.satisfied = v.histogram.size() == 1;
  if (v.satisfied) v.w = v.histogram.begin()->first;
  return v;
}

struct HomopolymerVerdict {
  bool satisfied = false;
  std::size_t k = 0;
  std::size_t max_observed = 0;
  DnaSequence witness;  // first codeword attaining max_observed
};

inline HomopolymerVerdict check_homopolymer(const DnaCode& code, std::size_t k) {
  if (k < 1) throw std::invalid_argument("homopolymer bound k must be >= 1");
  HomopolymerVerdict v;
  v.k = k;
  for (const auto& c : code.codewords()) {
    const std::size_t run = max_homopolymer_run(c);
    if (v.witness.empty() || run > v.max_observed) {
      v.max_observed = run;
      v.witness = c;
    }
  }
  v.satisfied = v.max_observed <= k;
  return v;
}

enum class AuditMethod { exhaustive, closure };

constexpr std::string_view to_string(AuditMethod m) {
  return m == AuditMethod::exhaustive ? "exhaustive" : "closure";
}

struct PairVerdict {
  bool satisfied = false;
  AuditMethod method = AuditMethod::exhaustive;
  // nullopt: measured against the code's own minimum distance.
  std::optional<std::uint32_t> threshold;
  bool closed = false;                       // closure method only
  std::optional<std::uint32_t> min_observed;  // exhaustive method only
  // Failing pair (c1, c2) with d_H(T(c1), c2) below the threshold, or for the
  // closure method a codeword whose transform is missing (second empty).
  std::optional<std::pair<DnaSequence, DnaSequence>> witness;
  std::string evidence;
};

namespace detail {

using Transform = DnaSequence (*)(const DnaSequence&);

inline PairVerdict check_pair_constraint(const DnaCode& code, std::optional<std::uint32_t> d,
                                         AuditMethod method, Transform transform, std::string_view name,
                                         unsigned threads) {
  if (d && *d < 1) throw std::invalid_argument("distance threshold must be >= 1");
  PairVerdict v;
  v.method = method;
  v.threshold = d;

  if (method == AuditMethod::closure) {
    v.closed = true;
    for (const auto& c : code.codewords()) {
      if (!code.contains(transform(c))) {
        v.closed = false;
        v.witness = std::pair{c, DnaSequence{}};
        break;
      }
    }
    if (!v.closed) {
      v.evidence = "code is not closed under " + std::string(name) + " (" + v.witness->first.str() +
                   " has no partner); closure is inconclusive";
      return v;
    }
    if (!d) {
      v.satisfied = true;
      v.evidence = "closed under " + std::string(name) + ", so every pair is a within-code distance";
      return v;
    }
    std::optional<std::uint32_t> own = code.declared_distance();
    if (!own) own = min_hamming_distance(code, threads);
    v.satisfied = !own || *d <= *own;
    v.evidence = "closed under " + std::string(name) + "; threshold " + std::to_string(*d) +
                 (own ? " vs code distance " + std::to_string(*own) : std::string(" (single codeword)"));
    return v;
  }

  std::uint32_t threshold = 0;
  if (d) {
    threshold = *d;
  } else if (code.declared_distance()) {
    threshold = *code.declared_distance();
  } else if (auto own = min_hamming_distance(code, threads)) {
    threshold = *own;
  } else {
    threshold = 1;
  }
  v.threshold = threshold;

  std::vector<DnaSequence> transformed;
  transformed.reserve(code.size());
  for (const auto& c : code.codewords()) transformed.push_back(transform(c));
  const PackedDnaSet rows(transformed, code.length());
  const PackedDnaSet cols(code.codewords(), code.length());
  const PairMinimum found = packed_cross_min_distance(rows, cols, threads);
  if (!found.found()) {
    v.satisfied = true;
    v.evidence = "no ordered pair with " + std::string(name) + "(c1) != c2";
    return v;
  }
  v.min_observed = found.value;
  v.satisfied = found.value >= threshold;
  v.evidence = "min d_H(" + std::string(name) + "(c1), c2) = " + std::to_string(found.value) +
               " over all ordered pairs, threshold " + std::to_string(threshold);
  if (!v.satisfied) v.witness = std::pair{code[found.first], code[found.second]};
  return v;
}

}  // namespace detail

/// d_H(c1^r, c2) >= d for all c1, c2 with c1^r != c2. The exhaustive method
/// tests every ordered pair; the closure method checks reverse(c) is in the
/// code for every c.
inline PairVerdict check_reversible(const DnaCode& code, std::optional<std::uint32_t> d, AuditMethod method,
                                    unsigned threads = 0) {
  return detail::check_pair_constraint(code, d, method, [](const DnaSequence& s) { return reverse(s); },
                                       "reverse", threads);
}

inline PairVerdict check_reversible_complement(const DnaCode& code, std::optional<std::uint32_t> d,
                                               AuditMethod method, unsigned threads = 0) {
  return detail::check_pair_constraint(code, d, method,
                                       [](const DnaSequence& s) { return reverse_complement(s); },
                                       "reverse-complement", threads);
}

/// A ratio in [0, 1] with an exact rational rendering when one exists.
struct Ratio {
  double value = 0;
  std::optional<std::string> exact;

  double rounded() const { return std::round(value * 1000.0) / 1000.0; }

  std::string decimal() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", value);
    return buf;
  }
};

/// log4(M) / L. Exact when M is a power of two: "9/12" for M = 4^9,
/// "9/24" for M = 2^9 and L = 12.
inline Ratio code_rate(std::size_t size, std::size_t length) {
  if (size < 1 || length < 1) throw std::invalid_argument("code_rate needs M >= 1 and L >= 1");
  Ratio r;
  r.value = std::log2(static_cast<double>(size)) / 2.0 / static_cast<double>(length);
  if (std::has_single_bit(size)) {
    const auto bits = static_cast<std::size_t>(std::countr_zero(size));
    r.value = static_cast<double>(bits) / (2.0 * static_cast<double>(length));
    r.exact = bits % 2 == 0 ? std::to_string(bits / 2) + "/" + std::to_string(length)
                            : std::to_string(bits) + "/" + std::to_string(2 * length);
  }
  return r;
}

inline Ratio relative_distance(std::size_t d, std::size_t length) {
  if (length < 1) throw std::invalid_argument("relative_distance needs L >= 1");
  return {static_cast<double>(d) / static_cast<double>(length),
          std::to_string(d) + "/" + std::to_string(length)};
}

struct ReportOptions {
  DistanceMode distance = ExactDistance{};
  // Allows an exact distance sweep above exhaustive_limit.
  bool slow = false;
  std::uint64_t fallback_sample_pairs = 1'000'000;
  std::size_t homopolymer_k = 2;
  // Codes larger than this use closure verdicts and, unless slow is set, a
  // sampled distance.
  std::size_t exhaustive_limit = std::size_t{1} << 16;
  std::size_t span_limit = kDefaultSpanLimit;
  std::optional<std::uint32_t> threshold;
  unsigned threads = 0;
};

struct CodeReport {
  CodeParams params;
  std::string distance_method;  // "exhaustive" or "sampled"
  std::optional<WitnessPair> witness;
  Ratio rate;
  Ratio relative;
  GcVerdict gc;
  HomopolymerVerdict homopolymer;
  PairVerdict reversible;
  PairVerdict reversible_complement;
  bool complement_condition = false;
  ClosureResult reverse_closure;
};

inline CodeReport full_report(const GeneratorMatrix& g, const ReportOptions& options = {}) {
  const SpanCode code = span(g, options.span_limit);
  CodeReport report;

  DistanceMode mode = options.distance;
  if (std::holds_alternative<ExactDistance>(mode) && code.size() > options.exhaustive_limit && !options.slow) {
    mode = SampledDistance{options.fallback_sample_pairs, kDefaultSeed};
  }
  report.params = code_params(code, mode, options.threads);
  report.distance_method = report.params.exact ? "exhaustive" : "sampled";
  if (!report.params.exact && g.provenance()) {
    report.witness = rm_distance_witness(g);
    const auto w = static_cast<std::uint32_t>(report.witness->distance);
    if (w < report.params.d_gau) report.params.d_gau = report.params.d_hamming = w;
  }

  report.complement_condition = check_complement_condition(code);
  report.reverse_closure = check_reverse_closure(code);

  DnaCode dna = DnaCode::from_span(code);
  if (report.params.exact) dna.declare_distance(report.params.d_hamming);
  report.gc = check_gc_constraint(dna);
  report.homopolymer = check_homopolymer(dna, options.homopolymer_k);

  const AuditMethod method =
      code.size() <= options.exhaustive_limit ? AuditMethod::exhaustive : AuditMethod::closure;
  std::optional<std::uint32_t> threshold = options.threshold;
  if (!threshold && report.params.exact) threshold = report.params.d_hamming;
  report.reversible = check_reversible(dna, threshold, method, options.threads);
  report.reversible_complement = check_reversible_complement(dna, threshold, method, options.threads);

  report.rate = code_rate(code.size(), report.params.n_dna);
  report.relative = relative_distance(report.params.d_hamming, report.params.n_dna);
  return report;
}

}  // namespace ringdna
