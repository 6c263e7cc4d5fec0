/**************************************************************************
 * dna.hpp
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
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ringdna {

constexpr bool is_nucleotide(char ch) {
  return ch == 'A' || ch == 'C' || ch == 'G' || ch == 'T';
}

/// Watson-Crick pairing A<->T, C<->G.
constexpr char complement(char ch) {
  switch (ch) {
    case 'A': return 'T';
    case 'T': return 'A';
    case 'C': return 'G';
    case 'G': return 'C';
  }
  return ch;
}

/// Sequence over {A, C, G, T}. Any length is allowed; lowercase input is
/// canonicalized to uppercase and every other symbol (N included) is rejected.
class DnaSequence {
 public:
  DnaSequence() = default;

  explicit DnaSequence(std::string_view text) : symbols_(text) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      char& ch = symbols_[i];
      if (ch >= 'a' && ch <= 'z') ch = static_cast<char>(ch - 'a' + 'A');
      if (!is_nucleotide(ch)) {
        throw std::invalid_argument("invalid nucleotide '" + std::string(1, text[i]) +
                                    "' at position " + std::to_string(i));
      }
    }
  }

  /// No validation; the caller guarantees an uppercase ACGT string.
  static DnaSequence from_canonical(std::string symbols) {
    DnaSequence s;
    s.symbols_ = std::move(symbols);
    return s;
  }

  const std::string& str() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  char operator[](std::size_t i) const { return symbols_[i]; }

  friend bool operator==(const DnaSequence&, const DnaSequence&) = default;
  friend auto operator<=>(const DnaSequence&, const DnaSequence&) = default;

 private:
  std::string symbols_;
};

inline std::ostream& operator<<(std::ostream& os, const DnaSequence& s) { return os << s.str(); }

inline DnaSequence complement(const DnaSequence& s) {
  std::string out = s.str();
  for (char& ch : out) ch = complement(ch);
  return DnaSequence::from_canonical(std::move(out));
}

inline DnaSequence reverse(const DnaSequence& s) {
  return DnaSequence::from_canonical(std::string(s.str().rbegin(), s.str().rend()));
}

inline DnaSequence reverse_complement(const DnaSequence& s) { return complement(reverse(s)); }

inline std::size_t gc_content(const DnaSequence& s) {
  return static_cast<std::size_t>(
      std::count_if(s.str().begin(), s.str().end(), [](char ch) { return ch == 'G' || ch == 'C'; }));
}

inline std::size_t max_homopolymer_run(const DnaSequence& s) {
  std::size_t best = 0;
  std::size_t run = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    run = (i > 0 && s[i] == s[i - 1]) ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

inline std::size_t hamming(const DnaSequence& x, const DnaSequence& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("hamming: length mismatch (" + std::to_string(x.size()) + " vs " +
                                std::to_string(y.size()) + ")");
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

}  // namespace ringdna
