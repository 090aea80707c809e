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

// Byte accounting for the two containers.
//
// kPaperModel charges the reference runtime's constants:
//   boxed    metadata = 104 * n          (one variable header per element)
//   uniform  metadata = 310 + 44 * n     (one header + per-string descriptor)
// The uniform split is calibrated on a single point (44,310 bytes at n = 1000);
// 310 covers the 104-byte array header plus a residual the reference runtime
// does not explain.
//
// kNative charges what this library actually requested from the allocator.
// Allocator bookkeeping and padding are not included.

#ifndef TEXTARENA_MEMORY_MODEL_H_
#define TEXTARENA_MEMORY_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "textarena/alloc_recorder.h"
#include "textarena/containers.h"

namespace textarena {

enum class AccountingMode { kPaperModel, kNative };
enum class ContainerKind { kBoxed, kUniform };

inline constexpr std::size_t kUniformFixedOverheadBytes = 310;
inline constexpr std::size_t kUniformDescriptorBytes = 44;

std::string_view ToString(AccountingMode mode);
std::string_view ToString(ContainerKind kind);
// Accepts "paper" and "native"; throws std::invalid_argument otherwise.
AccountingMode ParseAccountingMode(std::string_view name);
ContainerKind ParseContainerKind(std::string_view name);

struct MemoryReport {
  ContainerKind kind = ContainerKind::kUniform;
  AccountingMode mode = AccountingMode::kPaperModel;
  std::size_t n = 0;
  std::size_t total_bytes = 0;
  std::size_t raw_bytes = 0;
  std::size_t metadata_bytes = 0;

  friend bool operator==(const MemoryReport&, const MemoryReport&) = default;
};

template <TextSequence T>
std::size_t RawBytesOf(const T& seq) {
  std::size_t units = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) units += seq.view(i).size();
  return units * kBytesPerCodeUnit;
}

MemoryReport Measure(const BoxedTextArray& boxed, AccountingMode mode);
MemoryReport Measure(const UniformStringArray& uniform, AccountingMode mode);

// An exact non-negative fraction kept in lowest terms.
class Ratio {
 public:
  // Throws std::domain_error when denominator is zero.
  Ratio(std::uint64_t numerator, std::uint64_t denominator);

  std::uint64_t numerator() const { return numerator_; }
  std::uint64_t denominator() const { return denominator_; }
  double value() const {
    return static_cast<double>(numerator_) / static_cast<double>(denominator_);
  }
  // Decimal rendering, rounded half away from zero.
  std::string Rendered(int decimals = 2) const;

  friend bool operator==(const Ratio&, const Ratio&) = default;

 private:
  std::uint64_t numerator_;
  std::uint64_t denominator_;
};

// a.metadata_bytes / b.metadata_bytes. Both reports must use the same mode.
Ratio MetadataRatio(const MemoryReport& a, const MemoryReport& b);

// Runs build_run under a fresh AllocationRecorder and returns its counts.
// Throws std::runtime_error when instrumentation is compiled out.
AllocationStats AllocationStatsOf(const std::function<void()>& build_run);

// Raw bytes of prefix ++ digits elements, split into the shared prefix and one
// bucket per suffix length.
struct SuffixLedger {
  std::size_t prefix_bytes = 0;
  // suffix length in units -> {element count, bytes}
  struct Bucket {
    std::size_t count = 0;
    std::size_t bytes = 0;
  };
  std::map<std::size_t, Bucket> buckets;

  std::size_t TotalBytes() const;
};

// Throws std::invalid_argument when an element does not start with prefix.
template <TextSequence T>
SuffixLedger SuffixLedgerOf(const T& seq, const Text& prefix) {
  SuffixLedger ledger;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const std::u16string_view element = seq.view(i);
    if (!element.starts_with(prefix.units())) {
      throw std::invalid_argument("element " + std::to_string(i + 1) +
                                  " does not start with the prefix");
    }
    const std::size_t suffix = element.size() - prefix.size();
    ledger.prefix_bytes += prefix.RawBytes();
    auto& bucket = ledger.buckets[suffix];
    ++bucket.count;
    bucket.bytes += suffix * kBytesPerCodeUnit;
  }
  return ledger;
}

}  // namespace textarena

#endif  // TEXTARENA_MEMORY_MODEL_H_
