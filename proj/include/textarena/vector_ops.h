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

#ifndef TEXTARENA_VECTOR_OPS_H_
#define TEXTARENA_VECTOR_OPS_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "textarena/containers.h"
#include "textarena/text.h"

namespace textarena {

// A char vector ('abc'), as opposed to a string scalar ("abc").
struct CharText {
  Text text;
  friend bool operator==(const CharText&, const CharText&) = default;
};

// A dynamically typed value taking part in concatenation or formatting.
class Operand {
 public:
  using Value = std::variant<double, std::vector<double>, Text, CharText,
                             UniformStringArray>;

  Operand(double number) : value_(number) {}  // NOLINT: implicit by design
  Operand(int number) : value_(static_cast<double>(number)) {}  // NOLINT
  Operand(Text string) : value_(std::move(string)) {}  // NOLINT
  Operand(const char16_t* string) : value_(Text(string)) {}  // NOLINT
  Operand(UniformStringArray strings) : value_(std::move(strings)) {}  // NOLINT

  static Operand Numbers(std::vector<double> numbers) {
    return Operand(Value(std::move(numbers)));
  }
  static Operand Char(Text chars) { return Operand(Value(CharText{std::move(chars)})); }
  static Operand Char(char16_t c) { return Char(Text(std::u16string(1, c))); }

  const Value& value() const { return value_; }

  bool is_number() const { return std::holds_alternative<double>(value_); }
  bool is_numbers() const {
    return std::holds_alternative<std::vector<double>>(value_);
  }
  bool is_string() const { return std::holds_alternative<Text>(value_); }
  bool is_char() const { return std::holds_alternative<CharText>(value_); }
  bool is_strings() const {
    return std::holds_alternative<UniformStringArray>(value_);
  }
  bool is_numeric() const { return is_number() || is_numbers(); }
  bool is_textual() const { return is_string() || is_char() || is_strings(); }

  double number() const { return std::get<double>(value_); }
  const std::vector<double>& numbers() const {
    return std::get<std::vector<double>>(value_);
  }
  // The text of a string scalar or char vector.
  const Text& text() const;
  const UniformStringArray& strings() const {
    return std::get<UniformStringArray>(value_);
  }

  // Elements along the vector dimension; 1 for scalars and char vectors.
  std::size_t ElementCount() const;
  TypedValue Describe() const;

 private:
  explicit Operand(Value value) : value_(std::move(value)) {}

  Value value_;
};

// Elementwise `+` with scalar expansion. With at least one textual side the
// result is concatenation after NumToText on numeric sides: a string scalar
// when both sides are scalars, otherwise a UniformStringArray. Two numeric
// sides add arithmetically.
//
// Throws std::invalid_argument("shape mismatch (m vs n)") for two vectors of
// different lengths.
Operand PlusBroadcast(const Operand& left, const Operand& right);

inline Operand operator+(const Operand& left, const Operand& right) {
  return PlusBroadcast(left, right);
}

// [a b c] on text parts. Numeric or array parts are rejected.
Text ConcatBrackets(std::span<const Operand> parts);
inline Text ConcatBrackets(std::initializer_list<Operand> parts) {
  return ConcatBrackets(std::span<const Operand>(parts.begin(), parts.size()));
}

// Raised when an element does not contain the delimiter.
class MissingDelimiterError : public std::invalid_argument {
 public:
  MissingDelimiterError(std::size_t index, const std::string& message)
      : std::invalid_argument(message), index_(index) {}

  // Zero-based; the message reports it one-based.
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// The part of each element before the first occurrence of delimiter.
UniformStringArray ExtractBefore(const UniformStringArray& strings,
                                 const Text& delimiter);
// The part of each element after the first occurrence of delimiter.
UniformStringArray ExtractAfter(const UniformStringArray& strings,
                                const Text& delimiter);

}  // namespace textarena

#endif  // TEXTARENA_VECTOR_OPS_H_
