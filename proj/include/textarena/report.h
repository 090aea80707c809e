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

// Machine-readable output for the command-line tool.
//
// CSV columns are fixed:
//   memory reports     kind,mode,n,totalBytes,rawBytes,metadataBytes
//   benchmark results  name,iterations,mean_ns,stddev_ns,allocs
//   comparisons        baseline,candidate,speedup
// Numbers never use locale grouping or a decimal comma. CSV starts with '# '
// lines carrying the run manifest, Markdown with a "Run" line, and JSON holds
// it as the "manifest" object. Every JSON document parses back into its struct and
// re-serializes byte-identically.

#ifndef TEXTARENA_REPORT_H_
#define TEXTARENA_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "textarena/bench.h"
#include "textarena/memory_model.h"

namespace textarena {

enum class OutputFormat { kCsv, kMarkdown, kJson };

// "csv", "md" or "json"; throws std::invalid_argument otherwise.
OutputFormat ParseOutputFormat(std::string_view name);

struct RunManifest {
  std::string command;
  // Every flag with its effective value, in declaration order.
  std::vector<std::pair<std::string, std::string>> flags;
  std::string timestamp;  // ISO 8601, UTC
  std::string host;

  friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

// Fills timestamp and host for the current machine.
RunManifest MakeManifest(std::string command,
                         std::vector<std::pair<std::string, std::string>> flags);

struct RatioSummary {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 0;
  std::string rendered;

  friend bool operator==(const RatioSummary&, const RatioSummary&) = default;
};

struct MemDocument {
  RunManifest manifest;
  std::vector<MemoryReport> reports;
  std::optional<RatioSummary> metadata_ratio;  // absent when undefined

  friend bool operator==(const MemDocument&, const MemDocument&) = default;
};

struct BenchRow {
  std::string name;
  std::uint64_t iterations = 0;
  double mean_ns = 0;
  double stddev_ns = 0;
  std::optional<std::uint64_t> allocs;

  static BenchRow From(const BenchmarkResult& result);
  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct ComparisonSummary {
  std::string baseline;
  std::string candidate;
  double speedup = 0;
  std::string rendered;

  static ComparisonSummary From(const ComparisonRow& row);
  friend bool operator==(const ComparisonSummary&, const ComparisonSummary&) = default;
};

struct AssertionSummary {
  std::string name;
  bool hard = true;
  bool passed = false;
  std::string detail;

  friend bool operator==(const AssertionSummary&, const AssertionSummary&) = default;
};

struct BenchDocument {
  RunManifest manifest;
  std::vector<BenchRow> results;
  std::vector<ComparisonSummary> comparisons;
  std::vector<AssertionSummary> assertions;
  std::vector<std::string> warnings;

  friend bool operator==(const BenchDocument&, const BenchDocument&) = default;
};

struct DemoDocument {
  RunManifest manifest;
  std::string operation;
  std::vector<std::string> values;  // UTF-8

  friend bool operator==(const DemoDocument&, const DemoDocument&) = default;
};

std::string Emit(const MemDocument& doc, OutputFormat format);
std::string Emit(const BenchDocument& doc, OutputFormat format);
std::string Emit(const DemoDocument& doc, OutputFormat format);

// Throw nlohmann::json exceptions on malformed input.
MemDocument ParseMemJson(std::string_view json);
BenchDocument ParseBenchJson(std::string_view json);
DemoDocument ParseDemoJson(std::string_view json);

// RFC 4180 quoting when the field needs it.
std::string CsvField(std::string_view field);

}  // namespace textarena

#endif  // TEXTARENA_REPORT_H_
