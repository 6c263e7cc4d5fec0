/**************************************************************************
 * ring.hpp
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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Arithmetic in R = Z4 + uZ4 + u^2 Z4 with u^3 = 1, i.e. Z4[u]/(u^3 - 1).

namespace ringdna {

inline constexpr std::size_t kRingOrder = 64;

/// Element a + b*u + c*u^2 with a, b, c in Z4.
///
/// Stored as the packed index 16a + 4b + c, so comparing indices is the
/// lexicographic order on (a, b, c). That order is used wherever the library
/// needs a canonical ordering.
class RingElement {
 public:
  constexpr RingElement() = default;
  constexpr RingElement(int a, int b, int c)
      : index_(static_cast<std::uint8_t>(mod4(a) * 16 + mod4(b) * 4 + mod4(c))) {}

  static constexpr RingElement from_index(std::size_t index) {
    RingElement x;
    x.index_ = static_cast<std::uint8_t>(index & 63u);
    return x;
  }

  constexpr unsigned a() const { return index_ >> 4; }
  constexpr unsigned b() const { return (index_ >> 2) & 3u; }
  constexpr unsigned c() const { return index_ & 3u; }
  constexpr std::size_t index() const { return index_; }
  constexpr bool is_zero() const { return index_ == 0; }

  friend constexpr bool operator==(RingElement, RingElement) = default;
  friend constexpr auto operator<=>(RingElement, RingElement) = default;

 private:
  static constexpr unsigned mod4(int v) { return static_cast<unsigned>(((v % 4) + 4) % 4); }

  std::uint8_t index_ = 0;
};

using RingVector = std::vector<RingElement>;

namespace detail {

using RingTable = std::array<std::array<std::uint8_t, kRingOrder>, kRingOrder>;

inline constexpr RingTable kAddTable = [] {
  RingTable t{};
  for (std::size_t i = 0; i < kRingOrder; ++i) {
    for (std::size_t j = 0; j < kRingOrder; ++j) {
      const auto x = RingElement::from_index(i);
      const auto y = RingElement::from_index(j);
      t[i][j] = static_cast<std::uint8_t>(
          RingElement(int(x.a() + y.a()), int(x.b() + y.b()), int(x.c() + y.c())).index());
    }
  }
  return t;
}();

// Cyclic convolution of coefficient triples: u^3 folds back onto 1.
inline constexpr RingTable kMulTable = [] {
  RingTable t{};
  for (std::size_t i = 0; i < kRingOrder; ++i) {
    for (std::size_t j = 0; j < kRingOrder; ++j) {
      const auto x = RingElement::from_index(i);
      const auto y = RingElement::from_index(j);
      const int xs[3] = {int(x.a()), int(x.b()), int(x.c())};
      const int ys[3] = {int(y.a()), int(y.b()), int(y.c())};
      int out[3] = {0, 0, 0};
      for (int p = 0; p < 3; ++p) {
        for (int q = 0; q < 3; ++q) out[(p + q) % 3] += xs[p] * ys[q];
      }
      t[i][j] = static_cast<std::uint8_t>(RingElement(out[0], out[1], out[2]).index());
    }
  }
  return t;
}();

}  // namespace detail

constexpr RingElement operator+(RingElement x, RingElement y) {
  return RingElement::from_index(detail::kAddTable[x.index()][y.index()]);
}

constexpr RingElement operator-(RingElement x) {
  return RingElement(-int(x.a()), -int(x.b()), -int(x.c()));
}

constexpr RingElement operator-(RingElement x, RingElement y) { return x + (-y); }

constexpr RingElement operator*(RingElement x, RingElement y) {
  return RingElement::from_index(detail::kMulTable[x.index()][y.index()]);
}

constexpr RingElement& operator+=(RingElement& x, RingElement y) { return x = x + y; }
constexpr RingElement& operator*=(RingElement& x, RingElement y) { return x = x * y; }

constexpr RingElement add(RingElement x, RingElement y) { return x + y; }
constexpr RingElement mul(RingElement x, RingElement y) { return x * y; }

inline constexpr RingElement kZero{0, 0, 0};
inline constexpr RingElement kOne{1, 0, 0};
inline constexpr RingElement kU{0, 1, 0};
inline constexpr RingElement kU2{0, 0, 1};

/// All 64 elements in canonical order.
inline constexpr std::array<RingElement, kRingOrder> kAllElements = [] {
  std::array<RingElement, kRingOrder> out{};
  for (std::size_t i = 0; i < kRingOrder; ++i) out[i] = RingElement::from_index(i);
  return out;
}();

/// a + bu + cu^2  ->  c + bu + au^2
constexpr RingElement element_reverse(RingElement x) {
  return RingElement(int(x.c()), int(x.b()), int(x.a()));
}

/// The automorphism u -> u^2: a + bu + cu^2 -> a + cu + bu^2.
constexpr RingElement sigma(RingElement x) {
  return RingElement(int(x.a()), int(x.c()), int(x.b()));
}

enum class ElementClass { unit, zero_divisor, zero };

namespace detail {

inline constexpr std::array<bool, kRingOrder> kIsUnit = [] {
  std::array<bool, kRingOrder> out{};
  for (std::size_t i = 0; i < kRingOrder; ++i) {
    for (std::size_t j = 0; j < kRingOrder; ++j) {
      if (kMulTable[i][j] == kOne.index()) {
        out[i] = true;
        break;
      }
    }
  }
  return out;
}();

}  // namespace detail

constexpr ElementClass classify(RingElement x) {
  if (x.is_zero()) return ElementClass::zero;
  return detail::kIsUnit[x.index()] ? ElementClass::unit : ElementClass::zero_divisor;
}

constexpr bool is_unit(RingElement x) { return classify(x) == ElementClass::unit; }

constexpr std::string_view to_string(ElementClass c) {
  switch (c) {
    case ElementClass::unit: return "unit";
    case ElementClass::zero_divisor: return "zero_divisor";
    case ElementClass::zero: return "zero";
  }
  return "?";
}

/// The principal ideal {a*z : a in R}, deduplicated, in canonical order.
inline std::vector<RingElement> ideal_elements(RingElement z) {
  std::array<bool, kRingOrder> seen{};
  for (RingElement a : kAllElements) seen[(a * z).index()] = true;
  std::vector<RingElement> out;
  for (std::size_t i = 0; i < kRingOrder; ++i) {
    if (seen[i]) out.push_back(RingElement::from_index(i));
  }
  return out;
}

/// Parses the three-digit "abc" form, e.g. "132" is 1 + 3u + 2u^2.
inline RingElement parse_element(std::string_view text) {
  if (text.size() != 3) {
    throw std::invalid_argument("ring element '" + std::string(text) +
                                "' must have exactly 3 digits, got " +
                                std::to_string(text.size()));
  }
  int digits[3];
  for (std::size_t i = 0; i < 3; ++i) {
    const char ch = text[i];
    if (ch < '0' || ch > '3') {
      throw std::invalid_argument("ring element '" + std::string(text) + "': digit '" +
                                  std::string(1, ch) + "' at position " + std::to_string(i) +
                                  " is not in 0-3");
    }
    digits[i] = ch - '0';
  }
  return RingElement(digits[0], digits[1], digits[2]);
}

inline std::string format_element(RingElement x) {
  return {char('0' + x.a()), char('0' + x.b()), char('0' + x.c())};
}

inline std::ostream& operator<<(std::ostream& os, RingElement x) { return os << format_element(x); }

// Vector helpers. Length mismatches are programming errors at this level and
// are rejected with std::invalid_argument.

inline RingVector add(const RingVector& x, const RingVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vector length mismatch in add");
  RingVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

inline RingVector sub(const RingVector& x, const RingVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vector length mismatch in sub");
  RingVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

inline RingVector scale(RingElement a, const RingVector& x) {
  RingVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i];
  return out;
}

inline RingVector constant_vector(std::size_t n, RingElement value) { return RingVector(n, value); }

inline RingVector parse_vector(std::string_view text) {
  RingVector out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
    out.push_back(parse_element(text.substr(pos, end - pos)));
    pos = end;
  }
  return out;
}

inline std::string format_vector(const RingVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += format_element(v[i]);
  }
  return out;
}

}  // namespace ringdna
