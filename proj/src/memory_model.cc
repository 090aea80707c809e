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
#include <stdexcept>

namespace textarena {
namespace {

MemoryReport MakeReport(ContainerKind kind, AccountingMode mode, std::size_t n,
                        std::size_t raw, std::size_t metadata) {
  return MemoryReport{kind, mode, n, raw + metadata, raw, metadata};
}

}  // namespace

std::string_view ToString(AccountingMode mode) {
  return mode == AccountingMode::kPaperModel ? "paper" : "native";
}

std::string_view ToString(ContainerKind kind) {
  return kind == ContainerKind::kBoxed ? "boxed" : "uniform";
}

AccountingMode ParseAccountingMode(std::string_view name) {
  if (name == "paper") return AccountingMode::kPaperModel;
  if (name == "native") return AccountingMode::kNative;
  throw std::invalid_argument("unknown accounting mode: " + std::string(name));
}

ContainerKind ParseContainerKind(std::string_view name) {
  if (name == "boxed") return ContainerKind::kBoxed;
  if (name == "uniform") return ContainerKind::kUniform;
  throw std::invalid_argument("unknown container kind: " + std::string(name));
}

MemoryReport Measure(const BoxedTextArray& boxed, AccountingMode mode) {
  const std::size_t raw = RawBytesOf(boxed);
  const std::size_t n = boxed.size();
  if (mode == AccountingMode::kPaperModel) {
    // No outer header: 1000 elements cost exactly 104,000 bytes.
    return MakeReport(ContainerKind::kBoxed, mode, n, raw,
                      ElementHeader::kSimulatedBytes * n);
  }
  return MakeReport(ContainerKind::kBoxed, mode, n, raw, boxed.AllocatedBytes() - raw);
}

MemoryReport Measure(const UniformStringArray& uniform, AccountingMode mode) {
  const std::size_t raw = RawBytesOf(uniform);
  const std::size_t n = uniform.size();
  if (mode == AccountingMode::kPaperModel) {
    return MakeReport(ContainerKind::kUniform, mode, n, raw,
                      kUniformFixedOverheadBytes + kUniformDescriptorBytes * n);
  }
  return MakeReport(ContainerKind::kUniform, mode, n, raw,
                    uniform.AllocatedBytes() - raw);
}

Ratio::Ratio(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) throw std::domain_error("ratio with zero denominator");
  const std::uint64_t g = std::gcd(numerator, denominator);
  numerator_ = numerator / g;
  denominator_ = denominator / g;
}

std::string Ratio::Rendered(int decimals) const {
  std::uint64_t scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  // floor(num * scale / den + 1/2)
  const unsigned __int128 scaled =
      (static_cast<unsigned __int128>(numerator_) * scale * 2 + denominator_) /
      (static_cast<unsigned __int128>(denominator_) * 2);
  const auto whole = static_cast<std::uint64_t>(scaled / scale);
  const auto frac = static_cast<std::uint64_t>(scaled % scale);
  std::string out = std::to_string(whole);
  if (decimals > 0) {
    std::string digits = std::to_string(frac);
    out += '.';
    out.append(static_cast<std::size_t>(decimals) - digits.size(), '0');
    out += digits;
  }
  return out;
}

Ratio MetadataRatio(const MemoryReport& a, const MemoryReport& b) {
  if (a.mode != b.mode) {
    throw std::invalid_argument("metadata ratio needs reports in the same mode");
  }
  return Ratio(a.metadata_bytes, b.metadata_bytes);
}

AllocationStats AllocationStatsOf(const std::function<void()>& build_run) {
  if (!InstrumentationAvailable()) {
    throw std::runtime_error("allocation instrumentation unavailable in this build");
  }
  AllocationRecorder recorder;
  build_run();
  return recorder.stats();
}

std::size_t SuffixLedger::TotalBytes() const {
  std::size_t total = prefix_bytes;
  for (const auto& [digits, bucket] : buckets) total += bucket.bytes;
  return total;
}

}  // namespace textarena
