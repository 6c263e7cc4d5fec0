/**************************************************************************
 * code.hpp
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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ringdna/gau.hpp"
#include "ringdna/packed.hpp"
#include "ringdna/psi.hpp"
#include "ringdna/ring.hpp"

// Linear codes over R given by generator matrices: the Reed-Muller type
// doubling construction, exact span enumeration, membership, and the
// generator-level closure conditions for complement and reverse.

namespace ringdna {

struct RmProvenance {
  unsigned m = 0;
  RingElement z;
};

class GeneratorMatrix {
 public:
  explicit GeneratorMatrix(std::vector<RingVector> rows, std::optional<RmProvenance> provenance = {})
      : rows_(std::move(rows)), provenance_(provenance) {
    if (rows_.empty()) throw std::invalid_argument("generator matrix needs at least one row");
    if (rows_.front().empty()) throw std::invalid_argument("generator matrix rows must be nonempty");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i].size() != rows_.front().size()) {
        throw std::invalid_argument("generator matrix row " + std::to_string(i + 1) + " has length " +
                                    std::to_string(rows_[i].size()) + ", expected " +
                                    std::to_string(rows_.front().size()));
      }
    }
  }

  const std::vector<RingVector>& rows() const { return rows_; }
  const RingVector& row(std::size_t i) const { return rows_.at(i); }
  std::size_t k() const { return rows_.size(); }
  std::size_t n() const { return rows_.front().size(); }
  const std::optional<RmProvenance>& provenance() const { return provenance_; }

  friend bool operator==(const GeneratorMatrix& x, const GeneratorMatrix& y) { return x.rows_ == y.rows_; }

 private:
  std::vector<RingVector> rows_;
  std::optional<RmProvenance> provenance_;
};

/// Generator of the first-order Reed-Muller type code R(1, m) over R:
/// base [z z; 0 z], then G <- [G G; 0...0 z...z] until the length is 2^m.
inline GeneratorMatrix rm_generator(unsigned m, RingElement z) {
  if (m < 1) throw std::invalid_argument("rm_generator: m must be >= 1, got " + std::to_string(m));
  if (m > 24) throw std::invalid_argument("rm_generator: m = " + std::to_string(m) + " is too large");
  if (z.is_zero()) throw std::invalid_argument("rm_generator: z must be nonzero");
  std::vector<RingVector> rows{{z, z}, {kZero, z}};
  for (unsigned i = 1; i < m; ++i) {
    const std::size_t half = rows.front().size();
    for (auto& r : rows) r.insert(r.end(), r.begin(), r.end());
    RingVector last(half, kZero);
    last.resize(2 * half, z);
    rows.push_back(std::move(last));
  }
  return GeneratorMatrix(std::move(rows), RmProvenance{m, z});
}

/// One row per line, coordinates as "abc" separated by single spaces.
inline std::string format_matrix(const GeneratorMatrix& g) {
  std::string out;
  for (const auto& r : g.rows()) {
    out += format_vector(r);
    out += '\n';
  }
  return out;
}

/// Blank lines are ignored; errors name the 1-based line.
inline GeneratorMatrix parse_matrix(std::string_view text) {
  std::vector<RingVector> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") != std::string_view::npos) {
      try {
        rows.push_back(parse_vector(line));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("matrix line " + std::to_string(line_no) + ": " + e.what());
      }
      if (rows.back().size() != rows.front().size()) {
        throw std::invalid_argument("matrix line " + std::to_string(line_no) + ": row has " +
                                    std::to_string(rows.back().size()) + " entries, expected " +
                                    std::to_string(rows.front().size()));
      }
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return GeneratorMatrix(std::move(rows));
}

inline constexpr std::size_t kDefaultSpanLimit = std::size_t{1} << 24;

class SpanLimitExceeded : public std::runtime_error {
 public:
  SpanLimitExceeded(std::size_t projected, std::size_t limit)
      : std::runtime_error("span may reach " + std::to_string(projected) +
                           " codewords, above the limit of " + std::to_string(limit) +
                           "; raise the limit or audit the generator with closure checks and "
                           "sampled distances"),
        projected_(projected),
        limit_(limit) {}

  std::size_t projected() const { return projected_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t projected_;
  std::size_t limit_;
};

namespace detail {

inline std::string vector_key(const RingVector& v) {
  std::string key(v.size(), '\0');
  for (std::size_t i = 0; i < v.size(); ++i) key[i] = static_cast<char>(v[i].index());
  return key;
}

inline RingVector key_vector(const std::string& key) {
  RingVector v(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) v[i] = RingElement::from_index(static_cast<unsigned char>(key[i]));
  return v;
}

/// Distinct multiples a*v, a in R, including the zero vector.
inline std::vector<RingVector> row_multiples(const RingVector& v) {
  std::unordered_set<std::string> seen;
  std::vector<RingVector> out;
  for (RingElement a : kAllElements) {
    RingVector w = scale(a, v);
    if (seen.insert(vector_key(w)).second) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace detail

/// Product of the row-ideal sizes |<g_i>|, saturating at SIZE_MAX. The span
/// is the sumset of the row ideals, so this bounds its size.
inline std::size_t projected_span_bound(const GeneratorMatrix& g) {
  std::size_t bound = 1;
  for (const auto& r : g.rows()) {
    const std::size_t s = detail::row_multiples(r).size();
    if (bound > SIZE_MAX / s) return SIZE_MAX;
    bound *= s;
  }
  return bound;
}

/// The row module <G> = { sum a_i g_i } as an explicit, deduplicated set.
/// Codewords are ordered lexicographically by coordinate (canonical element
/// order), so indices are stable across runs.
class SpanCode {
 public:
  SpanCode(GeneratorMatrix source, std::vector<RingVector> codewords)
      : source_(std::move(source)), codewords_(std::move(codewords)) {
    index_.reserve(codewords_.size());
    for (const auto& c : codewords_) index_.insert(detail::vector_key(c));
  }

  const GeneratorMatrix& source() const { return source_; }
  const std::vector<RingVector>& codewords() const { return codewords_; }
  const RingVector& operator[](std::size_t i) const { return codewords_[i]; }
  std::size_t size() const { return codewords_.size(); }
  std::size_t length() const { return source_.n(); }

  bool contains(const RingVector& v) const {
    if (v.size() != length()) {
      throw std::invalid_argument("contains: vector length " + std::to_string(v.size()) +
                                  " does not match code length " + std::to_string(length()));
    }
    return index_.contains(detail::vector_key(v));
  }

 private:
  GeneratorMatrix source_;
  std::vector<RingVector> codewords_;
  std::unordered_set<std::string> index_;
};

/// Enumerates <G> by adding one row ideal at a time (sumset with dedup).
/// Throws SpanLimitExceeded before enumerating when the projected size is
/// above `limit`.
inline SpanCode span(const GeneratorMatrix& g, std::size_t limit = kDefaultSpanLimit) {
  const std::size_t projected = projected_span_bound(g);
  if (projected > limit) throw SpanLimitExceeded(projected, limit);

  std::vector<std::string> current{detail::vector_key(RingVector(g.n(), kZero))};
  for (const auto& r : g.rows()) {
    const auto multiples = detail::row_multiples(r);
    std::unordered_set<std::string> next;
    next.reserve(current.size() * multiples.size());
    for (const auto& base : current) {
      for (const auto& mult : multiples) {
        std::string key = base;
        for (std::size_t i = 0; i < key.size(); ++i) {
          key[i] = static_cast<char>(detail::kAddTable[static_cast<unsigned char>(key[i])][mult[i].index()]);
        }
        next.insert(std::move(key));
      }
    }
    current.assign(std::make_move_iterator(next.begin()), std::make_move_iterator(next.end()));
  }
  std::sort(current.begin(), current.end());

  std::vector<RingVector> codewords;
  codewords.reserve(current.size());
  for (const auto& key : current) codewords.push_back(detail::key_vector(key));
  return SpanCode(g, std::move(codewords));
}

/// Membership in <G> without materializing the span: walks coefficient
/// choices for rows 1..k-1 and checks that the remainder is a multiple of
/// the last row. Costs up to projected_span_bound / |<g_k>| steps.
inline bool row_span_contains(const GeneratorMatrix& g, const RingVector& v) {
  if (v.size() != g.n()) {
    throw std::invalid_argument("row_span_contains: vector length " + std::to_string(v.size()) +
                                " does not match code length " + std::to_string(g.n()));
  }
  std::vector<std::vector<RingVector>> multiples;
  multiples.reserve(g.k());
  for (const auto& r : g.rows()) multiples.push_back(detail::row_multiples(r));
  std::unordered_set<std::string> last;
  for (const auto& w : multiples.back()) last.insert(detail::vector_key(w));

  const std::size_t depth = g.k() - 1;
  std::vector<RingVector> partial(depth + 1, RingVector(g.n(), kZero));
  std::vector<std::size_t> choice(depth, 0);
  // partial[i] is the sum of the chosen multiples of rows 0..i-1.
  std::size_t level = 0;
  while (true) {
    if (level == depth) {
      if (last.contains(detail::vector_key(sub(v, partial[depth])))) return true;
      if (depth == 0) return false;
      --level;
      ++choice[level];
    }
    if (choice[level] == multiples[level].size()) {
      if (level == 0) return false;
      choice[level] = 0;
      --level;
      ++choice[level];
      continue;
    }
    partial[level + 1] = add(partial[level], multiples[level][choice[level]]);
    ++level;
  }
}

struct ClosureResult {
  bool closed = true;
  std::vector<std::size_t> failing_rows;  // 0-based
};

/// Reverse closure of psi(<G>) holds when every row's ring reverse lies in
/// <G>. Checked by membership in the enumerated span.
inline ClosureResult check_reverse_closure(const SpanCode& code) {
  ClosureResult result;
  const auto& rows = code.source().rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!code.contains(ring_reverse(rows[i]))) {
      result.closed = false;
      result.failing_rows.push_back(i);
    }
  }
  return result;
}

/// Same check against the generator alone, via row_span_contains.
inline ClosureResult check_reverse_closure(const GeneratorMatrix& g) {
  ClosureResult result;
  for (std::size_t i = 0; i < g.k(); ++i) {
    if (!row_span_contains(g, ring_reverse(g.row(i)))) {
      result.closed = false;
      result.failing_rows.push_back(i);
    }
  }
  return result;
}

/// Complement closure holds when the all-(2+2u+2u^2) vector lies in <G>.
inline bool check_complement_condition(const SpanCode& code) {
  return code.contains(constant_vector(code.length(), kComplementShift));
}

inline bool check_complement_condition(const GeneratorMatrix& g) {
  return row_span_contains(g, constant_vector(g.n(), kComplementShift));
}

/// Diagnostic for the Reed-Muller rows: does g_1^r = lambda*g_1 and
/// g_i^r = lambda*(g_1 - g_i) for every i >= 2?
inline bool row_reverse_identity(const GeneratorMatrix& g, RingElement lambda) {
  const RingVector& first = g.row(0);
  if (ring_reverse(first) != scale(lambda, first)) return false;
  for (std::size_t i = 1; i < g.k(); ++i) {
    if (ring_reverse(g.row(i)) != scale(lambda, sub(first, g.row(i)))) return false;
  }
  return true;
}

struct WitnessPair {
  RingVector first;
  RingVector second;
  std::size_t distance = 0;
};

/// For a Reed-Muller type generator: the zero codeword against the last row
/// 0...0 z...z. Their Gau distance bounds the code's minimum from above.
inline WitnessPair rm_distance_witness(const GeneratorMatrix& g) {
  if (!g.provenance()) throw std::invalid_argument("rm_distance_witness needs a Reed-Muller type generator");
  WitnessPair w{RingVector(g.n(), kZero), g.rows().back(), 0};
  w.distance = gau_vec(w.first, w.second);
  return w;
}

struct CodeParams {
  std::size_t n_ring = 0;
  std::size_t n_dna = 0;
  std::size_t size = 0;
  std::uint32_t d_gau = 0;
  std::uint32_t d_hamming = 0;
  bool exact = false;
  // True when d_hamming was measured on the DNA image rather than inferred.
  bool hamming_measured = false;
  DistanceResult distance;
};

/// Codes up to this size get their DNA-image distance measured independently.
inline constexpr std::size_t kDnaCrossCheckLimit = 4096;

inline CodeParams code_params(const SpanCode& code, const DistanceMode& mode, unsigned threads = 0) {
  CodeParams p;
  p.n_ring = code.length();
  p.n_dna = 3 * code.length();
  p.size = code.size();
  p.distance = min_gau_distance(code.codewords(), mode, threads);
  p.d_gau = p.distance.distance;
  p.d_hamming = p.d_gau;
  p.exact = p.distance.exact;
  if (p.exact && code.size() <= kDnaCrossCheckLimit) {
    std::vector<DnaSequence> image;
    image.reserve(code.size());
    for (const auto& c : code.codewords()) image.push_back(psi_vec(c));
    const detail::PackedDnaSet packed(image, p.n_dna);
    const auto measured = detail::packed_min_distance(packed, threads, 1);
    if (measured.value != p.d_gau) {
      throw std::logic_error("DNA image distance " + std::to_string(measured.value) +
                             " disagrees with Gau distance " + std::to_string(p.d_gau));
    }
    p.hamming_measured = true;
  }
  return p;
}

inline CodeParams code_params(const GeneratorMatrix& g, const DistanceMode& mode,
                              std::size_t limit = kDefaultSpanLimit, unsigned threads = 0) {
  return code_params(span(g, limit), mode, threads);
}

}  // namespace ringdna
