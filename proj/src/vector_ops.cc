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

#include "textarena/vector_ops.h"

#include <string>

namespace textarena {
namespace {

bool IsVector(const Operand& op) { return op.is_numbers() || op.is_strings(); }

// Element i of an operand as text; scalars expand to every index.
Text ElementText(const Operand& op, std::size_t i) {
  if (op.is_number()) return NumToText(op.number());
  if (op.is_numbers()) return NumToText(op.numbers()[i]);
  if (op.is_strings()) return Text(op.strings().view(i));
  return op.text();
}

double ElementNumber(const Operand& op, std::size_t i) {
  return op.is_number() ? op.number() : op.numbers()[i];
}

// Length of the broadcast result, or throws on mismatched vectors.
std::size_t BroadcastLength(const Operand& left, const Operand& right) {
  const bool left_scalar = !IsVector(left) || left.ElementCount() == 1;
  const bool right_scalar = !IsVector(right) || right.ElementCount() == 1;
  if (left_scalar) return right.ElementCount();
  if (right_scalar || left.ElementCount() == right.ElementCount()) {
    return left.ElementCount();
  }
  throw std::invalid_argument("shape mismatch (" + std::to_string(left.ElementCount()) +
                              " vs " + std::to_string(right.ElementCount()) + ")");
}

std::size_t Pick(const Operand& op, std::size_t i) {
  return op.ElementCount() == 1 ? 0 : i;
}

template <typename Slice>
UniformStringArray ExtractEach(const UniformStringArray& strings, const Text& delimiter,
                               Slice slice) {
  if (delimiter.empty()) throw std::invalid_argument("delimiter must be non-empty");
  UniformStringArray::Builder builder(strings.orientation());
  builder.ReserveElements(strings.size());
  for (std::size_t i = 0; i < strings.size(); ++i) {
    const std::u16string_view element = strings.view(i);
    const std::size_t at = element.find(delimiter.units());
    if (at == std::u16string_view::npos) {
      throw MissingDelimiterError(
          i, "element " + std::to_string(i + 1) + " does not contain the delimiter \"" +
                 delimiter.ToUtf8() + "\"");
    }
    builder.Append(slice(element, at, delimiter.size()));
  }
  return std::move(builder).Build();
}

}  // namespace

const Text& Operand::text() const {
  if (const auto* chars = std::get_if<CharText>(&value_)) return chars->text;
  return std::get<Text>(value_);
}

std::size_t Operand::ElementCount() const {
  if (is_numbers()) return numbers().size();
  if (is_strings()) return strings().size();
  return 1;
}

TypedValue Operand::Describe() const {
  if (is_number()) return TypedValue::Double();
  if (is_numbers()) return TypedValue::DoubleRow(numbers().size());
  if (is_char()) return TypedValue::CharRow(text().size());
  if (is_string()) return TypedValue::String();
  const auto& s = strings();
  return s.orientation() == Orientation::kRow
             ? TypedValue{DataType::kString, {1, s.size()}}
             : TypedValue{DataType::kString, {s.size(), 1}};
}

Operand PlusBroadcast(const Operand& left, const Operand& right) {
  const std::size_t n = BroadcastLength(left, right);
  const bool vector_result = IsVector(left) || IsVector(right);

  if (left.is_numeric() && right.is_numeric()) {
    if (!vector_result) return Operand(left.number() + right.number());
    std::vector<double> sums(n);
    for (std::size_t i = 0; i < n; ++i) {
      sums[i] = ElementNumber(left, Pick(left, i)) + ElementNumber(right, Pick(right, i));
    }
    return Operand::Numbers(std::move(sums));
  }

  if (!vector_result) return Operand(ElementText(left, 0) + ElementText(right, 0));

  UniformStringArray::Builder builder(
      (left.is_strings() ? left.strings().orientation()
                         : right.is_strings() ? right.strings().orientation()
                                              : Orientation::kRow));
  builder.ReserveElements(n);
  for (std::size_t i = 0; i < n; ++i) {
    builder.AppendConcat(ElementText(left, Pick(left, i)).units(),
                         ElementText(right, Pick(right, i)).units());
  }
  return Operand(std::move(builder).Build());
}

Text ConcatBrackets(std::span<const Operand> parts) {
  std::u16string out;
  for (const Operand& part : parts) {
    if (!part.is_string() && !part.is_char()) {
      throw std::invalid_argument(
          "bracket concatenation requires text; convert numerics first");
    }
    out.append(part.text().units());
  }
  return Text(std::move(out));
}

UniformStringArray ExtractBefore(const UniformStringArray& strings,
                                 const Text& delimiter) {
  return ExtractEach(strings, delimiter,
                     [](std::u16string_view s, std::size_t at, std::size_t) {
                       return s.substr(0, at);
                     });
}

UniformStringArray ExtractAfter(const UniformStringArray& strings,
                                const Text& delimiter) {
  return ExtractEach(strings, delimiter,
                     [](std::u16string_view s, std::size_t at, std::size_t width) {
                       return s.substr(at + width);
                     });
}

}  // namespace textarena
