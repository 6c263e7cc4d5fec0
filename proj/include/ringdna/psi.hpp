/**************************************************************************
 * psi.hpp
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
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringdna/dna.hpp"
#include "ringdna/ring.hpp"

// The bijection psi : R -> {A,C,G,T}^3 and the vector-level transforms that
// mirror DNA reverse / complement on the ring side.

namespace ringdna {

/// Adding this constant to an element complements its DNA triple.
inline constexpr RingElement kComplementShift{2, 2, 2};

namespace detail {

struct PsiEntry {
  std::string_view element;
  std::string_view triple;
};

// Listed column by column, as published.
inline constexpr std::array<PsiEntry, kRingOrder> kPsiEntries{{
    {"000", "GAG"}, {"010", "ACA"}, {"020", "GTG"}, {"030", "AGA"}, {"001", "AAC"},
    {"011", "ACC"}, {"021", "ATC"}, {"031", "AAT"}, {"002", "AGC"}, {"012", "ACT"},
    {"022", "GCT"},
    {"032", "AGT"}, {"003", "AAG"}, {"013", "ACG"}, {"023", "ATG"}, {"033", "AGG"},
    {"100", "CAA"}, {"110", "CCA"}, {"120", "CTA"}, {"130", "TAA"}, {"101", "TAT"},
    {"111", "CCC"},
    {"121", "TTT"}, {"131", "CGC"}, {"102", "CAT"}, {"112", "CCT"}, {"122", "CTT"},
    {"132", "CGT"}, {"103", "CAG"}, {"113", "CCG"}, {"123", "CTG"}, {"133", "CGG"},
    {"200", "CGA"},
    {"210", "TCA"}, {"220", "TCG"}, {"230", "TGA"}, {"201", "TAC"}, {"211", "TCC"},
    {"221", "TTC"}, {"231", "TGC"}, {"202", "CAC"}, {"212", "TCT"}, {"222", "CTC"},
    {"232", "TGT"},
    {"203", "TAG"}, {"213", "TTA"}, {"223", "TTG"}, {"233", "TGG"}, {"300", "GAA"},
    {"310", "GCA"}, {"320", "GTA"}, {"330", "GGA"}, {"301", "GAC"}, {"311", "GCC"},
    {"321", "GTC"},
    {"331", "GGC"}, {"302", "GAT"}, {"312", "ATT"}, {"322", "GTT"}, {"332", "GGT"},
    {"303", "AAA"}, {"313", "GCG"}, {"323", "ATA"}, {"333", "GGG"},
}};

using Triple = std::array<char, 3>;

constexpr int nucleotide_code(char ch) {
  switch (ch) {
    case 'A': return 0;
    case 'C': return 1;
    case 'G': return 2;
    case 'T': return 3;
  }
  return -1;
}

constexpr int triple_code(const Triple& t) {
  return nucleotide_code(t[0]) * 16 + nucleotide_code(t[1]) * 4 + nucleotide_code(t[2]);
}

constexpr std::size_t entry_index(std::string_view abc) {
  return std::size_t(abc[0] - '0') * 16 + std::size_t(abc[1] - '0') * 4 + std::size_t(abc[2] - '0');
}

// Forward table indexed by element index. An element listed twice or missing
// leaves a zero triple, which the validation below rejects.
inline constexpr std::array<Triple, kRingOrder> kPsiForward = [] {
  std::array<Triple, kRingOrder> out{};
  for (const auto& e : kPsiEntries) {
    out[entry_index(e.element)] = Triple{e.triple[0], e.triple[1], e.triple[2]};
  }
  return out;
}();

inline constexpr std::array<std::uint8_t, kRingOrder> kPsiBackward = [] {
  std::array<std::uint8_t, kRingOrder> out{};
  for (std::size_t i = 0; i < kRingOrder; ++i) {
    const int code = triple_code(kPsiForward[i]);
    if (code >= 0) out[std::size_t(code)] = static_cast<std::uint8_t>(i);
  }
  return out;
}();

constexpr Triple complement_triple(const Triple& t) {
  return {complement(t[0]), complement(t[1]), complement(t[2])};
}

constexpr Triple reverse_triple(const Triple& t) { return {t[2], t[1], t[0]}; }

}  // namespace detail

/// Problems found in the embedded table; empty when it is a bijection that
/// satisfies both the complement and the reverse correspondences.
constexpr std::size_t psi_table_defects() {
  std::size_t defects = 0;
  std::array<bool, kRingOrder> hit{};
  for (std::size_t i = 0; i < kRingOrder; ++i) {
    const int code = detail::triple_code(detail::kPsiForward[i]);
    if (code < 0 || code >= int(kRingOrder) || hit[std::size_t(code)]) {
      ++defects;
      continue;
    }
    hit[std::size_t(code)] = true;
  }
  for (std::size_t i = 0; i < kRingOrder; ++i) {
    const auto x = RingElement::from_index(i);
    if (detail::kPsiForward[(x + kComplementShift).index()] !=
        detail::complement_triple(detail::kPsiForward[i]))
      ++defects;
    if (detail::kPsiForward[element_reverse(x).index()] !=
        detail::reverse_triple(detail::kPsiForward[i]))
      ++defects;
  }
  return defects;
}

static_assert(psi_table_defects() == 0, "psi table is corrupted");

inline DnaSequence psi(RingElement x) {
  const auto& t = detail::kPsiForward[x.index()];
  return DnaSequence::from_canonical(std::string(t.begin(), t.end()));
}

inline RingElement psi_inv(const DnaSequence& s) {
  if (s.size() != 3) {
    throw std::invalid_argument("psi_inv: expected a DNA triple, got length " +
                                std::to_string(s.size()));
  }
  const int code = detail::triple_code({s[0], s[1], s[2]});
  return RingElement::from_index(detail::kPsiBackward[std::size_t(code)]);
}

inline DnaSequence psi_vec(const RingVector& v) {
  std::string out;
  out.reserve(3 * v.size());
  for (RingElement x : v) {
    const auto& t = detail::kPsiForward[x.index()];
    out.append(t.begin(), t.end());
  }
  return DnaSequence::from_canonical(std::move(out));
}

/// Inverse of psi_vec; the length must be a multiple of 3.
inline RingVector psi_vec_inv(const DnaSequence& s) {
  if (s.size() % 3 != 0) {
    throw std::invalid_argument("psi_vec_inv: length " + std::to_string(s.size()) +
                                " is not a multiple of 3");
  }
  RingVector out;
  out.reserve(s.size() / 3);
  for (std::size_t i = 0; i < s.size(); i += 3) {
    out.push_back(RingElement::from_index(
        detail::kPsiBackward[std::size_t(detail::triple_code({s[i], s[i + 1], s[i + 2]}))]));
  }
  return out;
}

/// Ring-side counterpart of reversing the DNA image.
inline RingVector ring_reverse(const RingVector& v) {
  RingVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[v.size() - 1 - i] = element_reverse(v[i]);
  return out;
}

inline RingVector ring_complement(const RingVector& v) {
  RingVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] + kComplementShift;
  return out;
}

inline RingVector ring_reverse_complement(const RingVector& v) {
  return ring_complement(ring_reverse(v));
}

}  // namespace ringdna
