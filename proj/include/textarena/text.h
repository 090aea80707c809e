// Copyright 2026 The TextArena Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TEXTARENA_TEXT_H_
#define TEXTARENA_TEXT_H_

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace textarena {

// A 16-bit code unit. Always charged 2 bytes in byte accounting; surrogate
// pairs count as two units.
using CodeUnit = char16_t;
inline constexpr std::size_t kBytesPerCodeUnit = sizeof(CodeUnit);
static_assert(kBytesPerCodeUnit == 2);

inline constexpr CodeUnit kPadUnit = u' ';

// Immutable, value-semantic sequence of code units.
class Text {
 public:
  Text() = default;
  explicit Text(std::u16string units) : units_(std::move(units)) {}
  explicit Text(std::u16string_view units) : units_(units) {}
  Text(const char16_t* units) : units_(units) {}  // NOLINT: literal sugar

  // Decodes UTF-8; malformed sequences become U+FFFD.
  static Text FromUtf8(std::string_view utf8);
  std::string ToUtf8() const;

  std::u16string_view units() const { return units_; }
  std::size_t size() const { return units_.size(); }
  bool empty() const { return units_.empty(); }
  std::size_t RawBytes() const { return units_.size() * kBytesPerCodeUnit; }

  CodeUnit operator[](std::size_t i) const { return units_[i]; }

  friend Text operator+(const Text& a, const Text& b) {
    std::u16string out;
    out.reserve(a.size() + b.size());
    out.append(a.units_).append(b.units_);
    return Text(std::move(out));
  }

  friend bool operator==(const Text&, const Text&) = default;
  friend auto operator<=>(const Text&, const Text&) = default;

 private:
  std::u16string units_;
};

// Pretty-printer hook for test frameworks.
void PrintTo(const Text& text, std::ostream* os);

// Renders a double the way implicit text conversion does:
//  - integers with |value| < 2^53 as plain decimal digits ("-0" prints "0"),
//  - other finite values as the shortest decimal that round-trips,
//  - non-finite values as "Inf", "-Inf" or "NaN".
Text NumToText(double value);

// A padded character matrix stored column-major.
class CharMatrix {
 public:
  CharMatrix(std::size_t rows, std::size_t cols, std::u16string units);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  // Storage order: down each column, left to right.
  std::u16string_view units() const { return units_; }

  CodeUnit at(std::size_t row, std::size_t col) const {
    return units_[col * rows_ + row];
  }
  Text Row(std::size_t row) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::u16string units_;
};

// Stacks texts as rows, right-padding each with spaces to the longest length.
// Throws std::invalid_argument("empty matrix source") for an empty input.
CharMatrix PadToCharMatrix(std::span<const Text> texts);

// Units in storage order.
Text ColumnMajorReadout(const CharMatrix& matrix);

enum class DataType { kDouble, kChar, kString, kCell };

struct ArrayShape {
  std::size_t rows = 1;
  std::size_t cols = 1;

  bool IsScalar() const { return rows == 1 && cols == 1; }
  friend bool operator==(const ArrayShape&, const ArrayShape&) = default;
};

// Type and shape of a value, as seen by the uniformity check.
struct TypedValue {
  DataType type = DataType::kDouble;
  ArrayShape shape;

  static TypedValue Double() { return {DataType::kDouble, {1, 1}}; }
  static TypedValue DoubleRow(std::size_t n) { return {DataType::kDouble, {1, n}}; }
  static TypedValue String() { return {DataType::kString, {1, 1}}; }
  static TypedValue CharRow(std::size_t n) { return {DataType::kChar, {1, n}}; }
};

// True iff every value is 1x1 and all share one data type. Vacuously true for
// an empty sequence.
bool IsUniform(std::span<const TypedValue> values);

}  // namespace textarena

#endif  // TEXTARENA_TEXT_H_
