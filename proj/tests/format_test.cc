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

#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "printf_oracle.h"

namespace textarena {
namespace {

FormatSpec Spec(char conversion) {
  FormatSpec spec;
  spec.conversion = conversion;
  return spec;
}

std::string ErrorOf(const Text& format, std::initializer_list<Operand> args) {
  try {
    Sprintf(format, args);
  } catch (const FormatError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseFormatTest, SpecLiteralSpec) {
  const FormatString f = ParseFormat(u"%d %s");
  const std::vector<FormatToken> want = {Spec('d'), FormatLiteral{u" "}, Spec('s')};
  EXPECT_EQ(f.tokens(), want);
  EXPECT_EQ(f.arity(), 2u);
}

TEST(ParseFormatTest, PercentEscape) {
  const std::vector<FormatToken> want = {FormatLiteral{u"100"}, FormatLiteral{u"%"}};
  EXPECT_EQ(ParseFormat(u"100%%").tokens(), want);
  EXPECT_EQ(ParseFormat(u"100%%").arity(), 0u);
}

TEST(ParseFormatTest, FlagsWidthPrecision) {
  FormatSpec want = Spec('f');
  want.flags.zero = true;
  want.width = 8;
  want.precision = 3;
  const std::vector<FormatToken> tokens = {want};
  EXPECT_EQ(ParseFormat(u"%08.3f").tokens(), tokens);
  EXPECT_EQ(Sprintf(u"%08.3f", {3.14159}), Text(u"0003.142"));
}

TEST(ParseFormatTest, AllFlags) {
  const FormatString f = ParseFormat(u"%-+ 0#5.2e");
  const auto& spec = std::get<FormatSpec>(f.tokens().at(0));
  EXPECT_TRUE(spec.flags.minus && spec.flags.plus && spec.flags.space && spec.flags.zero &&
              spec.flags.hash);
  EXPECT_EQ(spec.width, 5u);
  EXPECT_EQ(spec.precision, 2u);
  EXPECT_EQ(spec.conversion, 'e');
}

TEST(ParseFormatTest, Errors) {
  EXPECT_THROW(ParseFormat(u"%q"), FormatError);
  EXPECT_THROW(ParseFormat(u"abc%"), FormatError);
  EXPECT_THROW(ParseFormat(u"%5.2"), FormatError);
  EXPECT_THROW(ParseFormat(u"%1000001d"), FormatError);
  EXPECT_THROW(ParseFormat(u"%.1000001f"), FormatError);
  EXPECT_NO_THROW(ParseFormat(u"%1000000d"));
  try {
    ParseFormat(u"%q");
  } catch (const FormatError& e) {
    EXPECT_STREQ(e.what(), "unknown conversion 'q'");
  }
}

TEST(ParseFormatTest, LiteralOnlyFormatsRoundTrip) {
  std::mt19937 rng(17);
  const std::u16string alphabet = u"ab %é\n";
  for (int trial = 0; trial < 500; ++trial) {
    std::u16string plain(rng() % 12, u'a');
    for (auto& u : plain) u = alphabet[rng() % alphabet.size()];
    std::u16string escaped;
    for (char16_t u : plain) {
      escaped += u;
      if (u == u'%') escaped += u'%';
    }
    const FormatString f = ParseFormat(Text(escaped));
    ASSERT_EQ(f.arity(), 0u);
    ASSERT_EQ(Render(f, {}), Text(plain));
  }
}

TEST(RenderTest, Examples) {
  EXPECT_EQ(Sprintf(u"%d %s", {1, u"a"}), Text(u"1 a"));
  EXPECT_EQ(Sprintf(u"%d %s", {1, Operand::Char(u'a')}), Text(u"1 a"));
  EXPECT_EQ(Sprintf(u"hello, %s", {u"world"}), Text(u"hello, world"));
  EXPECT_EQ(Sprintf(u"%x", {255}), Text(u"ff"));
  EXPECT_EQ(Sprintf(u"%c%c", {Operand::Char(u'h'), 105}), Text(u"hi"));
}

TEST(RenderTest, ArityMismatch) {
  EXPECT_EQ(ErrorOf(u"%d", {1, 2}), "arity mismatch: format expects 1 arguments, 2 given");
  EXPECT_EQ(ErrorOf(u"%d %d", {1}), "arity mismatch: format expects 2 arguments, 1 given");
}

TEST(RenderTest, TypeMismatch) {
  EXPECT_NE(ErrorOf(u"%d", {u"x"}).find("type mismatch at argument 1 for %d"),
            std::string::npos);
  EXPECT_NE(ErrorOf(u"%s %d", {u"x", 1.5}).find("type mismatch at argument 2 for %d"),
            std::string::npos);
  EXPECT_NE(ErrorOf(u"%x", {-1}).find("type mismatch"), std::string::npos);
  EXPECT_NE(ErrorOf(u"%s", {3}).find("type mismatch"), std::string::npos);
  EXPECT_NE(ErrorOf(u"%f", {u"3"}).find("type mismatch"), std::string::npos);
  EXPECT_NE(ErrorOf(u"%c", {0xD800}).find("type mismatch"), std::string::npos);
}

TEST(RenderTest, StringIdentityAndTruncation) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    std::u16string s(rng() % 20, u'a');
    for (auto& u : s) u = static_cast<char16_t>(u'!' + rng() % 90);
    EXPECT_EQ(Sprintf(u"%s", {Text(s)}), Text(s));
    EXPECT_EQ(Sprintf(u"%.3s", {Text(s)}), Text(s.substr(0, 3)));
  }
  EXPECT_EQ(Sprintf(u"[%5s|%-5s]", {u"ab", u"cd"}), Text(u"[   ab|cd   ]"));
}

TEST(RenderTest, NonAsciiText) {
  EXPECT_EQ(Sprintf(u"%s → %s", {u"é", u"€"}), Text(u"é → €"));
}

// Fixed cases whose expected text is taken from snprintf.
TEST(DifferentialTest, EdgeCases) {
  using testing::CFormat;
  EXPECT_EQ(Sprintf(u"%.0d", {0}).ToUtf8(), CFormat("%.0d", 0));
  EXPECT_EQ(Sprintf(u"%#o", {0}).ToUtf8(), CFormat("%#o", 0));
  EXPECT_EQ(Sprintf(u"%#.0o", {0}).ToUtf8(), CFormat("%#.0o", 0));
  EXPECT_EQ(Sprintf(u"%#x", {0}).ToUtf8(), CFormat("%#x", 0));
  EXPECT_EQ(Sprintf(u"%#08x", {255}).ToUtf8(), CFormat("%#08x", 255));
  EXPECT_EQ(Sprintf(u"%08.3d", {-5}).ToUtf8(), CFormat("%08.3d", -5));
  EXPECT_EQ(Sprintf(u"%+ d", {5}).ToUtf8(), CFormat("%+ d", 5));
  EXPECT_EQ(Sprintf(u"%g", {100000}).ToUtf8(), CFormat("%g", 100000.0));
  EXPECT_EQ(Sprintf(u"%g", {1000000}).ToUtf8(), CFormat("%g", 1000000.0));
  EXPECT_EQ(Sprintf(u"%g", {0.0001}).ToUtf8(), CFormat("%g", 0.0001));
  EXPECT_EQ(Sprintf(u"%g", {0.00001}).ToUtf8(), CFormat("%g", 0.00001));
  EXPECT_EQ(Sprintf(u"%#g", {1}).ToUtf8(), CFormat("%#g", 1.0));
  EXPECT_EQ(Sprintf(u"%#.0f", {1}).ToUtf8(), CFormat("%#.0f", 1.0));
  EXPECT_EQ(Sprintf(u"%#.0e", {1}).ToUtf8(), CFormat("%#.0e", 1.0));
  EXPECT_EQ(Sprintf(u"%.0g", {0.5}).ToUtf8(), CFormat("%.0g", 0.5));
  EXPECT_EQ(Sprintf(u"%.3g", {9.9999}).ToUtf8(), CFormat("%.3g", 9.9999));
  EXPECT_EQ(Sprintf(u"%.0f", {2.5}).ToUtf8(), CFormat("%.0f", 2.5));
  EXPECT_EQ(Sprintf(u"%f", {-0.0}).ToUtf8(), CFormat("%f", -0.0));
  EXPECT_EQ(Sprintf(u"%e", {0}).ToUtf8(), CFormat("%e", 0.0));
  EXPECT_EQ(Sprintf(u"%e", {1e-320}).ToUtf8(), CFormat("%e", 1e-320));
  EXPECT_EQ(Sprintf(u"%f", {1e300}).ToUtf8(), CFormat("%f", 1e300));
  EXPECT_EQ(Sprintf(u"%010f", {std::numeric_limits<double>::infinity()}).ToUtf8(),
            CFormat("%010f", std::numeric_limits<double>::infinity()));
  EXPECT_EQ(Sprintf(u"%-6E|", {std::numeric_limits<double>::quiet_NaN()}).ToUtf8(),
            CFormat("%-6E|", std::numeric_limits<double>::quiet_NaN()));
  EXPECT_EQ(Sprintf(u"%d", {-9223372036854775808.0}).ToUtf8(),
            CFormat("%lld", std::numeric_limits<long long>::min()));
}

TEST(DifferentialTest, RandomizedAgainstSnprintf) {
  testing::PrintfCaseGenerator generator(424242);
  int mismatches = 0;
  for (int i = 0; i < 20000; ++i) {
    const testing::PrintfCase c = generator.Next();
    const std::string got = testing::RenderCase(c);
    if (got != c.expected) {
      ++mismatches;
      ADD_FAILURE() << "format \"" << c.format << "\": got \"" << got << "\", want \""
                    << c.expected << "\"";
      if (mismatches > 20) break;
    }
  }
  EXPECT_EQ(mismatches, 0);
}

}  // namespace
}  // namespace textarena
