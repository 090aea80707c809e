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

#include "textarena/text.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace textarena {
namespace {

constexpr char32_t kReplacement = 0xFFFD;

void AppendUtf16(char32_t cp, std::u16string& out) {
  if (cp < 0x10000) {
    out.push_back(static_cast<char16_t>(cp));
  } else {
    cp -= 0x10000;
    out.push_back(static_cast<char16_t>(0xD800 + (cp >> 10)));
    out.push_back(static_cast<char16_t>(0xDC00 + (cp & 0x3FF)));
  }
}

void AppendUtf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// 2^53: above this not every integer is representable.
constexpr double kExactIntegerLimit = 9007199254740992.0;

}  // namespace

Text Text::FromUtf8(std::string_view utf8) {
  std::u16string out;
  out.reserve(utf8.size());
  std::size_t i = 0;
  while (i < utf8.size()) {
    const auto lead = static_cast<unsigned char>(utf8[i]);
    int extra = 0;
    char32_t cp = 0;
    char32_t min = 0;
    if (lead < 0x80) {
      cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      extra = 1, cp = lead & 0x1F, min = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
      extra = 2, cp = lead & 0x0F, min = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
      extra = 3, cp = lead & 0x07, min = 0x10000;
    } else {
      out.push_back(static_cast<char16_t>(kReplacement));
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k <= extra; ++k) {
      if (i + k >= utf8.size() ||
          (static_cast<unsigned char>(utf8[i + k]) & 0xC0) != 0x80) {
        ok = false;
        extra = k - 1;
        break;
      }
      cp = (cp << 6) | (static_cast<unsigned char>(utf8[i + k]) & 0x3F);
    }
    if (!ok || cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      cp = kReplacement;
    }
    AppendUtf16(cp, out);
    i += static_cast<std::size_t>(extra) + 1;
  }
  return Text(std::move(out));
}

std::string Text::ToUtf8() const {
  std::string out;
  out.reserve(units_.size());
  for (std::size_t i = 0; i < units_.size(); ++i) {
    char32_t cp = units_[i];
    if (cp >= 0xD800 && cp <= 0xDBFF && i + 1 < units_.size() &&
        units_[i + 1] >= 0xDC00 && units_[i + 1] <= 0xDFFF) {
      cp = 0x10000 + ((cp - 0xD800) << 10) + (units_[i + 1] - 0xDC00);
      ++i;
    } else if (cp >= 0xD800 && cp <= 0xDFFF) {
      cp = kReplacement;
    }
    AppendUtf8(cp, out);
  }
  return out;
}

void PrintTo(const Text& text, std::ostream* os) {
  *os << '"' << text.ToUtf8() << '"';
}

Text NumToText(double value) {
  if (std::isnan(value)) return Text(u"NaN");
  if (std::isinf(value)) return Text(value > 0 ? u"Inf" : u"-Inf");

  std::array<char, 64> buf;
  std::to_chars_result res;
  if (std::trunc(value) == value && std::fabs(value) < kExactIntegerLimit) {
    res = std::to_chars(buf.data(), buf.data() + buf.size(),
                        static_cast<std::int64_t>(value));
  } else {
    res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  }
  std::u16string out(buf.data(), res.ptr);
  return Text(std::move(out));
}

CharMatrix::CharMatrix(std::size_t rows, std::size_t cols, std::u16string units)
    : rows_(rows), cols_(cols), units_(std::move(units)) {
  if (units_.size() != rows_ * cols_) {
    throw std::invalid_argument("char matrix storage does not match rows x cols");
  }
}

Text CharMatrix::Row(std::size_t row) const {
  std::u16string out(cols_, kPadUnit);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = at(row, c);
  return Text(std::move(out));
}

CharMatrix PadToCharMatrix(std::span<const Text> texts) {
  if (texts.empty()) throw std::invalid_argument("empty matrix source");
  const std::size_t rows = texts.size();
  std::size_t cols = 0;
  for (const Text& t : texts) cols = std::max(cols, t.size());

  std::u16string units(rows * cols, kPadUnit);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto row = texts[r].units();
    for (std::size_t c = 0; c < row.size(); ++c) units[c * rows + r] = row[c];
  }
  return CharMatrix(rows, cols, std::move(units));
}

Text ColumnMajorReadout(const CharMatrix& matrix) {
  return Text(matrix.units());
}

bool IsUniform(std::span<const TypedValue> values) {
  if (values.empty()) return true;
  const DataType type = values.front().type;
  return std::all_of(values.begin(), values.end(), [&](const TypedValue& v) {
    return v.type == type && v.shape.IsScalar();
  });
}

}  // namespace textarena
