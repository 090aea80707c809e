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

// printf-family format strings.
//
//   spec        := '%' flags* width? ('.' precision?)? conversion
//   flags       := '-' | '+' | ' ' | '0' | '#'
//   conversion  := d i u f e E g G x X o s c
//
// '%%' is a literal percent. There are no length modifiers, no positional
// arguments and no '*' widths. Rendering is strict: the argument count must
// equal the number of specs, and every argument must suit its conversion.

#ifndef TEXTARENA_FORMAT_H_
#define TEXTARENA_FORMAT_H_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "textarena/text.h"
#include "textarena/vector_ops.h"

namespace textarena {

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Width and precision above this are rejected.
inline constexpr std::size_t kMaxFormatField = 1'000'000;

struct FormatFlags {
  bool minus = false;
  bool plus = false;
  bool space = false;
  bool zero = false;
  bool hash = false;

  friend bool operator==(const FormatFlags&, const FormatFlags&) = default;
};

struct FormatSpec {
  FormatFlags flags;
  std::optional<std::size_t> width;
  std::optional<std::size_t> precision;
  char conversion = 'd';

  friend bool operator==(const FormatSpec&, const FormatSpec&) = default;
};

struct FormatLiteral {
  Text text;
  friend bool operator==(const FormatLiteral&, const FormatLiteral&) = default;
};

using FormatToken = std::variant<FormatLiteral, FormatSpec>;

class FormatString {
 public:
  explicit FormatString(std::vector<FormatToken> tokens);

  const std::vector<FormatToken>& tokens() const { return tokens_; }
  // Number of FormatSpec tokens.
  std::size_t arity() const { return arity_; }

 private:
  std::vector<FormatToken> tokens_;
  std::size_t arity_;
};

// Single pass. Throws FormatError for a dangling '%', an unknown conversion
// or a width/precision above kMaxFormatField.
FormatString ParseFormat(const Text& source);

// Throws FormatError on arity or type mismatch.
Text Render(const FormatString& format, std::span<const Operand> args);
inline Text Render(const FormatString& format, std::initializer_list<Operand> args) {
  return Render(format, std::span<const Operand>(args.begin(), args.size()));
}

// ParseFormat + Render.
Text Sprintf(const Text& format, std::initializer_list<Operand> args);

}  // namespace textarena

#endif  // TEXTARENA_FORMAT_H_
