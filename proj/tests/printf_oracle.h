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

// Random format strings checked against the C library's snprintf.

#ifndef TEXTARENA_TESTS_PRINTF_ORACLE_H_
#define TEXTARENA_TESTS_PRINTF_ORACLE_H_

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "textarena/format.h"
#include "textarena/vector_ops.h"

namespace textarena::testing {

struct PrintfCase {
  std::string format;  // ASCII
  std::vector<Operand> args;
  std::string expected;  // from snprintf
};

template <typename... Args>
std::string CFormat(const std::string& format, Args... args) {
  const int length = std::snprintf(nullptr, 0, format.c_str(), args...);
  std::vector<char> buf(static_cast<std::size_t>(length) + 1);
  std::snprintf(buf.data(), buf.size(), format.c_str(), args...);
  return std::string(buf.data(), static_cast<std::size_t>(length));
}

class PrintfCaseGenerator {
 public:
  explicit PrintfCaseGenerator(std::uint64_t seed,
                               std::string_view conversions = "diuxXofeEgG")
      : rng_(seed), conversions_(conversions) {}

  PrintfCase Next() {
    PrintfCase c;
    const int specs = 1 + Uniform(0, 2);
    for (int s = 0; s < specs; ++s) {
      AppendLiteral(c);
      AppendSpec(c);
    }
    AppendLiteral(c);
    return c;
  }

 private:
  int Uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool Coin() { return Uniform(0, 1) == 1; }

  void AppendLiteral(PrintfCase& c) {
    static constexpr std::string_view kPieces[] = {"", "", " ", "x=", "[", "] ", "%%", "ab"};
    const std::string_view piece = kPieces[Uniform(0, 7)];
    c.format += piece;
    c.expected += piece == "%%" ? "%" : std::string(piece);
  }

  void AppendSpec(PrintfCase& c) {
    const char conv = conversions_[static_cast<std::size_t>(
        Uniform(0, static_cast<int>(conversions_.size()) - 1))];
    const bool is_signed = conv == 'd' || conv == 'i';
    const bool is_float = std::string_view("feEgG").find(conv) != std::string_view::npos;

    std::string spec = "%";
    if (Coin()) spec += '-';
    if ((is_signed || is_float) && Uniform(0, 3) == 0) spec += '+';
    if ((is_signed || is_float) && Uniform(0, 3) == 0) spec += ' ';
    if (Coin()) spec += '0';
    if (!is_signed && conv != 'u' && Uniform(0, 2) == 0) spec += '#';
    if (Coin()) spec += std::to_string(Uniform(1, 25));
    if (Coin()) spec += "." + std::to_string(Uniform(0, 20));

    c.format += spec;
    c.format += conv;
    if (is_float) {
      const double v = RandomDouble();
      c.args.emplace_back(v);
      c.expected += CFormat(spec + conv, v);
    } else if (is_signed) {
      const long long v = RandomInteger();
      c.args.emplace_back(static_cast<double>(v));
      c.expected += CFormat(spec + "ll" + conv, v);
    } else {
      long long v = RandomInteger();
      if (v < 0) v = v == std::numeric_limits<long long>::min() ? 0 : -v;
      c.args.emplace_back(static_cast<double>(v));
      c.expected += CFormat(spec + "ll" + conv, static_cast<unsigned long long>(v));
    }
  }

  // Exactly representable as a double, so the operand carries the same value.
  long long RandomInteger() {
    switch (Uniform(0, 4)) {
      case 0:
        return Uniform(-9, 9);
      case 1:
        return Uniform(-100000, 100000);
      case 2: {
        const long long limit = 1LL << 53;
        return std::uniform_int_distribution<long long>(-limit, limit)(rng_);
      }
      case 3: {
        // Large powers of two stay exact.
        const long long magnitude = 1LL << Uniform(0, 62);
        return Coin() ? magnitude : -magnitude;
      }
      default:
        return std::numeric_limits<long long>::min();
    }
  }

  double RandomDouble() {
    switch (Uniform(0, 7)) {
      case 0:
        return static_cast<double>(Uniform(-1000, 1000));
      case 1:
        return std::uniform_real_distribution<double>(-1e6, 1e6)(rng_);
      case 2:
        return std::uniform_real_distribution<double>(-1, 1)(rng_);
      case 3: {
        const double mantissa = std::uniform_real_distribution<double>(1, 10)(rng_);
        return (Coin() ? 1 : -1) * mantissa * std::pow(10.0, Uniform(-30, 30));
      }
      case 4: {
        std::uint64_t bits = std::uniform_int_distribution<std::uint64_t>()(rng_);
        double v;
        std::memcpy(&v, &bits, sizeof v);
        return std::isfinite(v) ? v : 0.5;
      }
      case 5:
        // Halfway cases for rounding at a few decimals.
        return static_cast<double>(Uniform(-2000, 2000)) / 8.0;
      case 6: {
        static constexpr double kSpecial[] = {0.0, -0.0, 1e-320, 9.5, 0.05, 1e15, 1e16};
        return kSpecial[Uniform(0, 6)];
      }
      default: {
        static const double kNonFinite[] = {std::numeric_limits<double>::infinity(),
                                            -std::numeric_limits<double>::infinity(),
                                            std::numeric_limits<double>::quiet_NaN()};
        return kNonFinite[Uniform(0, 2)];
      }
    }
  }

  std::mt19937_64 rng_;
  std::string conversions_;
};

// Renders `c` with the formatter and returns the UTF-8 result, or the error
// message prefixed with "error: ".
inline std::string RenderCase(const PrintfCase& c) {
  try {
    const Text format = Text::FromUtf8(c.format);
    return Render(ParseFormat(format), c.args).ToUtf8();
  } catch (const std::exception& e) {
    return std::string("error: ") + e.what();
  }
}

}  // namespace textarena::testing

#endif  // TEXTARENA_TESTS_PRINTF_ORACLE_H_
