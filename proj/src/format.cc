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

#include "textarena/format.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <string_view>

namespace textarena {
namespace {

constexpr std::u16string_view kConversions = u"diufeEgGxXosc";

std::string Describe(const FormatSpec& spec) { return std::string("%") + spec.conversion; }

[[noreturn]] void TypeMismatch(std::size_t position, const FormatSpec& spec,
                               std::string_view expected) {
  throw FormatError("type mismatch at argument " + std::to_string(position) + " for " +
                    Describe(spec) + ": expected " + std::string(expected));
}

// Reads a decimal field; stops at the first non-digit.
std::size_t ReadField(std::u16string_view src, std::size_t& i, std::string_view what) {
  std::size_t value = 0;
  while (i < src.size() && src[i] >= u'0' && src[i] <= u'9') {
    value = value * 10 + static_cast<std::size_t>(src[i] - u'0');
    if (value > kMaxFormatField) {
      throw FormatError(std::string(what) + " overflow (> " +
                        std::to_string(kMaxFormatField) + ")");
    }
    ++i;
  }
  return value;
}

// sign + prefix + body, padded to the spec width.
std::string Pad(const FormatSpec& spec, std::string_view lead, std::string_view body,
                bool zero_pad_allowed) {
  const std::size_t length = lead.size() + body.size();
  const std::size_t width = spec.width.value_or(0);
  std::string out;
  out.reserve(std::max(width, length));
  if (width <= length) {
    out.append(lead).append(body);
  } else if (spec.flags.minus) {
    out.append(lead).append(body).append(width - length, ' ');
  } else if (spec.flags.zero && zero_pad_allowed) {
    out.append(lead).append(width - length, '0').append(body);
  } else {
    out.append(width - length, ' ').append(lead).append(body);
  }
  return out;
}

std::string SignOf(bool negative, const FormatFlags& flags) {
  if (negative) return "-";
  if (flags.plus) return "+";
  if (flags.space) return " ";
  return "";
}

bool IsIntegral(double v) {
  // [-2^63, 2^63)
  return std::isfinite(v) && std::trunc(v) == v && v >= -9223372036854775808.0 &&
         v < 9223372036854775808.0;
}

std::string RenderInteger(const FormatSpec& spec, const Operand& arg,
                          std::size_t position) {
  const char conv = spec.conversion;
  const bool is_signed = conv == 'd' || conv == 'i';
  if (!arg.is_number() || !IsIntegral(arg.number())) {
    TypeMismatch(position, spec, "an integer-valued numeric scalar");
  }
  const auto value = static_cast<std::int64_t>(arg.number());
  if (!is_signed && value < 0) {
    TypeMismatch(position, spec, "a non-negative integer");
  }
  const bool negative = value < 0;
  const std::uint64_t magnitude =
      negative ? ~static_cast<std::uint64_t>(value) + 1 : static_cast<std::uint64_t>(value);

  const int base = (conv == 'x' || conv == 'X') ? 16 : conv == 'o' ? 8 : 10;
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, magnitude, base);
  std::string digits(buf, res.ptr);
  if (conv == 'X') {
    std::transform(digits.begin(), digits.end(), digits.begin(),
                   [](char c) { return static_cast<char>(std::toupper(c)); });
  }

  if (spec.precision) {
    if (*spec.precision == 0 && magnitude == 0) digits.clear();
    if (digits.size() < *spec.precision) digits.insert(0, *spec.precision - digits.size(), '0');
  }

  std::string lead = is_signed ? SignOf(negative, spec.flags) : "";
  if (spec.flags.hash) {
    if (conv == 'o' && (digits.empty() || digits.front() != '0')) digits.insert(0, "0");
    if (conv == 'x' && magnitude != 0) lead += "0x";
    if (conv == 'X' && magnitude != 0) lead += "0X";
  }
  return Pad(spec, lead, digits, !spec.precision.has_value());
}

std::string ToChars(double magnitude, std::chars_format fmt, std::size_t precision) {
  std::string buf(precision + 400, '\0');
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), magnitude, fmt,
                           static_cast<int>(precision));
  buf.resize(static_cast<std::size_t>(res.ptr - buf.data()));
  return buf;
}

int ExponentOf(std::string_view scientific) {
  const auto e = scientific.find('e');
  int exponent = 0;
  std::string_view digits = scientific.substr(e + 1);
  if (digits.front() == '+') digits.remove_prefix(1);
  std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
  return exponent;
}

void InsertPointBeforeExponent(std::string& s) {
  const auto e = s.find('e');
  if (s.find('.') == std::string::npos) s.insert(e, ".");
}

void StripTrailingZeros(std::string& s) {
  const auto e = s.find('e');
  std::string exponent = e == std::string::npos ? "" : s.substr(e);
  std::string mantissa = s.substr(0, e);
  if (mantissa.find('.') != std::string::npos) {
    while (mantissa.back() == '0') mantissa.pop_back();
    if (mantissa.back() == '.') mantissa.pop_back();
  }
  s = mantissa + exponent;
}

std::string RenderFloat(const FormatSpec& spec, const Operand& arg, std::size_t position) {
  if (!arg.is_number()) TypeMismatch(position, spec, "a numeric scalar");
  const char conv = spec.conversion;
  const bool upper = conv == 'E' || conv == 'G';
  const double value = arg.number();
  const bool negative = std::signbit(value);
  const std::string sign = SignOf(negative, spec.flags);

  if (!std::isfinite(value)) {
    std::string body = std::isnan(value) ? "nan" : "inf";
    if (upper) {
      std::transform(body.begin(), body.end(), body.begin(),
                     [](char c) { return static_cast<char>(std::toupper(c)); });
    }
    return Pad(spec, sign, body, false);
  }

  const double magnitude = std::fabs(value);
  const std::size_t precision = spec.precision.value_or(6);
  std::string body;
  if (conv == 'f') {
    body = ToChars(magnitude, std::chars_format::fixed, precision);
    if (spec.flags.hash && precision == 0) body += '.';
  } else if (conv == 'e' || conv == 'E') {
    body = ToChars(magnitude, std::chars_format::scientific, precision);
    if (spec.flags.hash && precision == 0) InsertPointBeforeExponent(body);
  } else {
    // %g: pick fixed or exponential by the exponent at precision P.
    const std::size_t p = precision == 0 ? 1 : precision;
    const std::string sci = ToChars(magnitude, std::chars_format::scientific, p - 1);
    const int x = ExponentOf(sci);
    if (static_cast<long long>(p) > x && x >= -4) {
      const auto frac = static_cast<std::size_t>(static_cast<long long>(p) - 1 - x);
      body = ToChars(magnitude, std::chars_format::fixed, frac);
      if (spec.flags.hash && frac == 0) body += '.';
    } else {
      body = sci;
      if (spec.flags.hash && p == 1) InsertPointBeforeExponent(body);
    }
    if (!spec.flags.hash) StripTrailingZeros(body);
  }
  if (upper) {
    std::replace(body.begin(), body.end(), 'e', 'E');
  }
  return Pad(spec, sign, body, true);
}

Text RenderText(const FormatSpec& spec, const Operand& arg, std::size_t position) {
  if (!arg.is_string() && !arg.is_char()) TypeMismatch(position, spec, "text");
  std::u16string_view units = arg.text().units();
  if (spec.precision && *spec.precision < units.size()) {
    units = units.substr(0, *spec.precision);
  }
  const std::size_t width = spec.width.value_or(0);
  std::u16string out;
  if (width > units.size() && !spec.flags.minus) out.append(width - units.size(), u' ');
  out.append(units);
  if (width > units.size() && spec.flags.minus) out.append(width - units.size(), u' ');
  return Text(std::move(out));
}

Text RenderChar(const FormatSpec& spec, const Operand& arg, std::size_t position) {
  std::u16string unit;
  if ((arg.is_string() || arg.is_char()) && arg.text().size() == 1) {
    unit = arg.text().units();
  } else if (arg.is_number() && IsIntegral(arg.number()) && arg.number() >= 0 &&
             arg.number() <= 0x10FFFF &&
             !(arg.number() >= 0xD800 && arg.number() <= 0xDFFF)) {
    const auto cp = static_cast<char32_t>(arg.number());
    if (cp < 0x10000) {
      unit.push_back(static_cast<char16_t>(cp));
    } else {
      unit.push_back(static_cast<char16_t>(0xD800 + ((cp - 0x10000) >> 10)));
      unit.push_back(static_cast<char16_t>(0xDC00 + ((cp - 0x10000) & 0x3FF)));
    }
  } else {
    TypeMismatch(position, spec, "a single code unit or an integer code point");
  }
  FormatSpec as_text = spec;
  as_text.precision.reset();
  return RenderText(as_text, Operand(Text(std::move(unit))), position);
}

Text Widen(const std::string& ascii) { return Text(std::u16string(ascii.begin(), ascii.end())); }

}  // namespace

FormatString::FormatString(std::vector<FormatToken> tokens)
    : tokens_(std::move(tokens)),
      arity_(static_cast<std::size_t>(
          std::count_if(tokens_.begin(), tokens_.end(), [](const FormatToken& t) {
            return std::holds_alternative<FormatSpec>(t);
          }))) {}

FormatString ParseFormat(const Text& source) {
  const std::u16string_view src = source.units();
  std::vector<FormatToken> tokens;
  std::u16string literal;
  auto flush = [&] {
    if (!literal.empty()) tokens.emplace_back(FormatLiteral{Text(std::move(literal))});
    literal.clear();
  };

  std::size_t i = 0;
  while (i < src.size()) {
    if (src[i] != u'%') {
      literal.push_back(src[i++]);
      continue;
    }
    ++i;
    if (i < src.size() && src[i] == u'%') {
      flush();
      tokens.emplace_back(FormatLiteral{Text(u"%")});
      ++i;
      continue;
    }
    flush();
    FormatSpec spec;
    for (; i < src.size(); ++i) {
      const char16_t c = src[i];
      if (c == u'-') spec.flags.minus = true;
      else if (c == u'+') spec.flags.plus = true;
      else if (c == u' ') spec.flags.space = true;
      else if (c == u'0') spec.flags.zero = true;
      else if (c == u'#') spec.flags.hash = true;
      else break;
    }
    if (i < src.size() && src[i] >= u'1' && src[i] <= u'9') {
      spec.width = ReadField(src, i, "width");
    }
    if (i < src.size() && src[i] == u'.') {
      ++i;
      spec.precision = ReadField(src, i, "precision");
    }
    if (i >= src.size()) throw FormatError("dangling '%' at end of format");
    const char16_t conv = src[i++];
    if (kConversions.find(conv) == std::u16string_view::npos) {
      throw FormatError("unknown conversion '" +
                        Text(std::u16string(1, conv)).ToUtf8() + "'");
    }
    spec.conversion = static_cast<char>(conv);
    tokens.emplace_back(spec);
  }
  flush();
  return FormatString(std::move(tokens));
}

Text Render(const FormatString& format, std::span<const Operand> args) {
  if (args.size() != format.arity()) {
    throw FormatError("arity mismatch: format expects " + std::to_string(format.arity()) +
                      " arguments, " + std::to_string(args.size()) + " given");
  }
  std::u16string out;
  std::size_t next = 0;
  for (const FormatToken& token : format.tokens()) {
    if (const auto* literal = std::get_if<FormatLiteral>(&token)) {
      out.append(literal->text.units());
      continue;
    }
    const auto& spec = std::get<FormatSpec>(token);
    const Operand& arg = args[next++];
    const std::size_t position = next;  // one-based
    switch (spec.conversion) {
      case 'd':
      case 'i':
      case 'u':
      case 'x':
      case 'X':
      case 'o':
        out.append(Widen(RenderInteger(spec, arg, position)).units());
        break;
      case 'f':
      case 'e':
      case 'E':
      case 'g':
      case 'G':
        out.append(Widen(RenderFloat(spec, arg, position)).units());
        break;
      case 's':
        out.append(RenderText(spec, arg, position).units());
        break;
      case 'c':
        out.append(RenderChar(spec, arg, position).units());
        break;
    }
  }
  return Text(std::move(out));
}

Text Sprintf(const Text& format, std::initializer_list<Operand> args) {
  return Render(ParseFormat(format), args);
}

}  // namespace textarena
