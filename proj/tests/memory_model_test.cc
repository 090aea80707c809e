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

#include "textarena/memory_model.h"

#include <numeric>
#include <vector>

#include "gtest/gtest.h"
#include "textarena/containers.h"

namespace textarena {
namespace {

constexpr AccountingMode kPaper = AccountingMode::kPaperModel;
constexpr AccountingMode kNative = AccountingMode::kNative;

// Units of "TestResult1".."TestResultN", counted digit by digit.
std::size_t TestResultUnits(std::size_t n) {
  std::size_t units = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    units += 10;
    for (std::size_t v = k; v != 0; v /= 10) ++units;
  }
  return units;
}

TEST(MeasureTest, PaperModelAtOneThousand) {
  const BoxedTextArray boxed = BuildBoxedPerElement(u"TestResult", 1000);
  const UniformStringArray uniform = BuildUniformBroadcast(u"TestResult", 1000);

  const MemoryReport b = Measure(boxed, kPaper);
  EXPECT_EQ(b.kind, ContainerKind::kBoxed);
  EXPECT_EQ(b.n, 1000u);
  EXPECT_EQ(b.total_bytes, 129786u);
  EXPECT_EQ(b.raw_bytes, 25786u);
  EXPECT_EQ(b.metadata_bytes, 104000u);

  const MemoryReport u = Measure(uniform, kPaper);
  EXPECT_EQ(u.kind, ContainerKind::kUniform);
  EXPECT_EQ(u.total_bytes, 70096u);
  EXPECT_EQ(u.raw_bytes, 25786u);
  EXPECT_EQ(u.metadata_bytes, 44310u);
}

TEST(MeasureTest, Husk) {
  BoxedTextArray husk;
  husk.PushBack(u"");
  const MemoryReport r = Measure(husk, kPaper);
  EXPECT_EQ(r.total_bytes, 104u);
  EXPECT_EQ(r.raw_bytes, 0u);
}

TEST(MeasureTest, EmptyUniform) {
  const MemoryReport r = Measure(UniformStringArray(), kPaper);
  EXPECT_EQ(r.raw_bytes, 0u);
  EXPECT_EQ(r.metadata_bytes, 310u);
}

TEST(MeasureTest, PaperModelIsLinear) {
  for (std::size_t n : {0u, 1u, 7u, 100u, 999u, 1000u, 1500u}) {
    const std::size_t raw = 2 * TestResultUnits(n);
    const MemoryReport b = Measure(BuildBoxedPerElement(u"TestResult", n), kPaper);
    const MemoryReport u = Measure(BuildUniformBroadcast(u"TestResult", n), kPaper);
    EXPECT_EQ(b.raw_bytes, raw) << n;
    EXPECT_EQ(u.raw_bytes, raw) << n;
    EXPECT_EQ(b.metadata_bytes, 104 * n) << n;
    EXPECT_EQ(u.metadata_bytes, 310 + 44 * n) << n;
    EXPECT_EQ(b.total_bytes, b.raw_bytes + b.metadata_bytes) << n;
    EXPECT_EQ(u.total_bytes, u.raw_bytes + u.metadata_bytes) << n;
  }
}

TEST(MeasureTest, RawBytesExamples) {
  EXPECT_EQ(RawBytesOf(BuildUniformBroadcast(u"TestResult", 1000)), 25786u);
  EXPECT_EQ(RawBytesOf(UniformStringArray()), 0u);
  const std::vector<Text> texts = {u"ab", u"c"};
  EXPECT_EQ(RawBytesOf(UniformStringArray::FromTexts(texts)), 6u);
}

TEST(MeasureTest, NativeAccountingIsConsistent) {
  for (std::size_t n = 0; n <= 300; n += 13) {
    const BoxedTextArray boxed = BuildBoxedPerElement(u"TestResult", n);
    const UniformStringArray uniform = BuildUniformBroadcast(u"TestResult", n);
    const MemoryReport b = Measure(boxed, kNative);
    const MemoryReport u = Measure(uniform, kNative);
    EXPECT_EQ(b.total_bytes, boxed.AllocatedBytes());
    EXPECT_EQ(u.total_bytes, uniform.AllocatedBytes());
    EXPECT_EQ(b.metadata_bytes, b.total_bytes - b.raw_bytes);
    EXPECT_EQ(u.metadata_bytes, u.total_bytes - u.raw_bytes);
    if (n >= 8) EXPECT_LT(u.metadata_bytes, b.metadata_bytes) << n;
  }
}

TEST(RatioTest, TableValue) {
  const BoxedTextArray boxed = BuildBoxedPerElement(u"TestResult", 1000);
  const UniformStringArray uniform = BuildUniformBroadcast(u"TestResult", 1000);
  const Ratio ratio = MetadataRatio(Measure(boxed, kPaper), Measure(uniform, kPaper));
  EXPECT_EQ(ratio, Ratio(104000, 44310));
  EXPECT_EQ(ratio.numerator() * 44310, ratio.denominator() * 104000);
  EXPECT_EQ(std::gcd(ratio.numerator(), ratio.denominator()), 1u);
  EXPECT_EQ(ratio.Rendered(2), "2.35");
  EXPECT_EQ(ratio.Rendered(3), "2.347");
}

TEST(RatioTest, Examples) {
  const MemoryReport b = Measure(BuildBoxedPerElement(u"TestResult", 100), kPaper);
  const MemoryReport u = Measure(BuildUniformBroadcast(u"TestResult", 100), kPaper);
  EXPECT_EQ(b.metadata_bytes, 10400u);
  EXPECT_EQ(u.metadata_bytes, 4710u);
  EXPECT_EQ(MetadataRatio(b, u).Rendered(2), "2.21");
  EXPECT_EQ(MetadataRatio(b, b).Rendered(2), "1.00");
}

TEST(RatioTest, RoundsHalfAwayFromZero) {
  EXPECT_EQ(Ratio(1, 8).Rendered(2), "0.13");
  EXPECT_EQ(Ratio(5, 8).Rendered(2), "0.63");
  EXPECT_EQ(Ratio(1, 3).Rendered(2), "0.33");
  EXPECT_EQ(Ratio(0, 3).Rendered(2), "0.00");
  EXPECT_EQ(Ratio(7, 1).Rendered(0), "7");
}

TEST(RatioTest, ErrorCases) {
  EXPECT_THROW(Ratio(1, 0), std::domain_error);
  const MemoryReport b = Measure(BuildBoxedPerElement(u"T", 10), kPaper);
  const MemoryReport u = Measure(BuildUniformBroadcast(u"T", 10), kNative);
  EXPECT_THROW(MetadataRatio(b, u), std::invalid_argument);
}

TEST(NamesTest, RoundTrip) {
  for (AccountingMode m : {kPaper, kNative}) EXPECT_EQ(ParseAccountingMode(ToString(m)), m);
  for (ContainerKind k : {ContainerKind::kBoxed, ContainerKind::kUniform}) {
    EXPECT_EQ(ParseContainerKind(ToString(k)), k);
  }
  EXPECT_THROW(ParseAccountingMode("exact"), std::invalid_argument);
}

TEST(SuffixLedgerTest, TestResultDecomposition) {
  const UniformStringArray uniform = BuildUniformBroadcast(u"TestResult", 1000);
  EXPECT_EQ(JoinAll(uniform, Text()).size(), 12893u);
  const SuffixLedger ledger = SuffixLedgerOf(uniform, u"TestResult");
  EXPECT_EQ(ledger.prefix_bytes, 20000u);
  ASSERT_EQ(ledger.buckets.size(), 4u);
  EXPECT_EQ(ledger.buckets.at(1).count, 9u);
  EXPECT_EQ(ledger.buckets.at(1).bytes, 18u);
  EXPECT_EQ(ledger.buckets.at(2).count, 90u);
  EXPECT_EQ(ledger.buckets.at(2).bytes, 360u);
  EXPECT_EQ(ledger.buckets.at(3).count, 900u);
  EXPECT_EQ(ledger.buckets.at(3).bytes, 5400u);
  EXPECT_EQ(ledger.buckets.at(4).count, 1u);
  EXPECT_EQ(ledger.buckets.at(4).bytes, 8u);
  EXPECT_EQ(ledger.TotalBytes(), 25786u);
}

TEST(SuffixLedgerTest, WrongPrefixThrows) {
  EXPECT_THROW(SuffixLedgerOf(BuildUniformBroadcast(u"A", 3), u"B"), std::invalid_argument);
}

TEST(AllocationStatsTest, CountsBuild) {
  if (!InstrumentationAvailable()) {
    EXPECT_THROW(AllocationStatsOf([] {}), std::runtime_error);
    return;
  }
  const AllocationStats stats =
      AllocationStatsOf([] { BuildBoxedPerElement(u"TestResult", 1000); });
  EXPECT_GE(stats.element_allocations, 1000u);
  EXPECT_GT(stats.peak_bytes, 25786u);
}

}  // namespace
}  // namespace textarena
