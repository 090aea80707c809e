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

#include "textarena/report.h"

#include <sys/utsname.h>
#include <unistd.h>

#include <ctime>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace textarena {

using Json = nlohmann::ordered_json;

// --- JSON mapping -----------------------------------------------------------

void to_json(Json& j, const RunManifest& m) {
  Json flags = Json::object();
  for (const auto& [name, value] : m.flags) flags[name] = value;
  j = Json{{"command", m.command},
           {"flags", flags},
           {"timestamp", m.timestamp},
           {"host", m.host}};
}

void from_json(const Json& j, RunManifest& m) {
  j.at("command").get_to(m.command);
  m.flags.clear();
  for (const auto& [name, value] : j.at("flags").items()) {
    m.flags.emplace_back(name, value.get<std::string>());
  }
  j.at("timestamp").get_to(m.timestamp);
  j.at("host").get_to(m.host);
}

void to_json(Json& j, const MemoryReport& r) {
  j = Json{{"kind", ToString(r.kind)},
           {"mode", ToString(r.mode)},
           {"n", r.n},
           {"totalBytes", r.total_bytes},
           {"rawBytes", r.raw_bytes},
           {"metadataBytes", r.metadata_bytes}};
}

void from_json(const Json& j, MemoryReport& r) {
  r.kind = ParseContainerKind(j.at("kind").get<std::string>());
  r.mode = ParseAccountingMode(j.at("mode").get<std::string>());
  j.at("n").get_to(r.n);
  j.at("totalBytes").get_to(r.total_bytes);
  j.at("rawBytes").get_to(r.raw_bytes);
  j.at("metadataBytes").get_to(r.metadata_bytes);
}

void to_json(Json& j, const RatioSummary& r) {
  j = Json{{"numerator", r.numerator},
           {"denominator", r.denominator},
           {"rendered", r.rendered}};
}

void from_json(const Json& j, RatioSummary& r) {
  j.at("numerator").get_to(r.numerator);
  j.at("denominator").get_to(r.denominator);
  j.at("rendered").get_to(r.rendered);
}

void to_json(Json& j, const BenchRow& r) {
  j = Json{{"name", r.name},
           {"iterations", r.iterations},
           {"mean_ns", r.mean_ns},
           {"stddev_ns", r.stddev_ns},
           {"allocs", r.allocs ? Json(*r.allocs) : Json(nullptr)}};
}

void from_json(const Json& j, BenchRow& r) {
  j.at("name").get_to(r.name);
  j.at("iterations").get_to(r.iterations);
  j.at("mean_ns").get_to(r.mean_ns);
  j.at("stddev_ns").get_to(r.stddev_ns);
  const Json& allocs = j.at("allocs");
  r.allocs = allocs.is_null() ? std::nullopt
                              : std::optional<std::uint64_t>(allocs.get<std::uint64_t>());
}

void to_json(Json& j, const ComparisonSummary& c) {
  j = Json{{"baseline", c.baseline},
           {"candidate", c.candidate},
           {"speedup", c.speedup},
           {"rendered", c.rendered}};
}

void from_json(const Json& j, ComparisonSummary& c) {
  j.at("baseline").get_to(c.baseline);
  j.at("candidate").get_to(c.candidate);
  j.at("speedup").get_to(c.speedup);
  j.at("rendered").get_to(c.rendered);
}

void to_json(Json& j, const AssertionSummary& a) {
  j = Json{{"name", a.name}, {"hard", a.hard}, {"passed", a.passed}, {"detail", a.detail}};
}

void from_json(const Json& j, AssertionSummary& a) {
  j.at("name").get_to(a.name);
  j.at("hard").get_to(a.hard);
  j.at("passed").get_to(a.passed);
  j.at("detail").get_to(a.detail);
}

namespace {

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

std::string FlagList(const RunManifest& m) {
  std::string line;
  for (const auto& [name, value] : m.flags) {
    if (!line.empty()) line += ' ';
    line += "--" + name + "=" + value;
  }
  return line;
}

std::string FlagLine(const RunManifest& m) {
  return m.flags.empty() ? m.command : m.command + " " + FlagList(m);
}

std::string CsvPreamble(const RunManifest& m) {
  std::string out;
  out += "# command: " + m.command + "\n";
  out += "# flags: " + FlagList(m) + "\n";
  out += "# timestamp: " + m.timestamp + "\n";
  out += "# host: " + m.host + "\n";
  return out;
}

std::string MarkdownPreamble(const RunManifest& m) {
  return "Run: `" + FlagLine(m) + "` at " + m.timestamp + " on " + m.host + "\n\n";
}

std::string MarkdownCell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

// --- Shared helpers ---------------------------------------------------------

OutputFormat ParseOutputFormat(std::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "md") return OutputFormat::kMarkdown;
  if (name == "json") return OutputFormat::kJson;
  throw std::invalid_argument("unknown output format: " + std::string(name));
}

RunManifest MakeManifest(std::string command,
                         std::vector<std::pair<std::string, std::string>> flags) {
  RunManifest m;
  m.command = std::move(command);
  m.flags = std::move(flags);

  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
  m.timestamp = stamp;

  utsname uts{};
  char hostname[256] = "unknown";
  gethostname(hostname, sizeof hostname - 1);
  std::ostringstream host;
  if (uname(&uts) == 0) {
    host << uts.sysname << ' ' << uts.release << ' ' << uts.machine << ", ";
  }
  host << hostname << ", " << std::thread::hardware_concurrency() << " hw threads";
  m.host = host.str();
  return m;
}

std::string CsvField(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

BenchRow BenchRow::From(const BenchmarkResult& result) {
  BenchRow row;
  row.name = result.name;
  row.iterations = result.iterations;
  row.mean_ns = result.mean_ns_per_iter;
  row.stddev_ns = result.stddev_ns_per_iter;
  if (result.alloc_stats) row.allocs = result.alloc_stats->total_allocations();
  return row;
}

ComparisonSummary ComparisonSummary::From(const ComparisonRow& row) {
  return {row.baseline_name, row.candidate_name, row.speedup_ratio, row.RenderedRatio()};
}

// --- mem --------------------------------------------------------------------

std::string Emit(const MemDocument& doc, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    Json j{{"manifest", doc.manifest}, {"reports", doc.reports}};
    j["metadata_ratio"] = doc.metadata_ratio ? Json(*doc.metadata_ratio) : Json(nullptr);
    return Dump(j);
  }
  std::ostringstream out;
  if (format == OutputFormat::kCsv) {
    out << CsvPreamble(doc.manifest);
    out << "kind,mode,n,totalBytes,rawBytes,metadataBytes\n";
    for (const auto& r : doc.reports) {
      out << ToString(r.kind) << ',' << ToString(r.mode) << ',' << r.n << ','
          << r.total_bytes << ',' << r.raw_bytes << ',' << r.metadata_bytes << '\n';
    }
    if (doc.metadata_ratio) {
      out << "\nratio,numerator,denominator,rendered\n";
      out << "metadata_boxed_over_uniform," << doc.metadata_ratio->numerator << ','
          << doc.metadata_ratio->denominator << ',' << doc.metadata_ratio->rendered << '\n';
    }
    return out.str();
  }
  out << MarkdownPreamble(doc.manifest);
  out << "| Metric | Total bytes | Raw data bytes | Metadata (total - raw) |\n";
  out << "|---|---|---|---|\n";
  for (const auto& r : doc.reports) {
    out << "| " << ToString(r.kind) << " (" << ToString(r.mode) << ", n=" << r.n << ") | "
        << r.total_bytes << " | " << r.raw_bytes << " | " << r.metadata_bytes;
    if (doc.metadata_ratio && r.kind == ContainerKind::kBoxed) {
      out << " (" << doc.metadata_ratio->rendered << "x more bloated)";
    }
    out << " |\n";
  }
  if (doc.metadata_ratio) {
    out << "\nMetadata ratio (boxed / uniform): " << doc.metadata_ratio->numerator << "/"
        << doc.metadata_ratio->denominator << " = " << doc.metadata_ratio->rendered << "\n";
  }
  return out.str();
}

MemDocument ParseMemJson(std::string_view json) {
  const Json j = Json::parse(json);
  MemDocument doc;
  j.at("manifest").get_to(doc.manifest);
  j.at("reports").get_to(doc.reports);
  if (!j.at("metadata_ratio").is_null()) {
    doc.metadata_ratio = j.at("metadata_ratio").get<RatioSummary>();
  }
  return doc;
}

// --- bench ------------------------------------------------------------------

std::string Emit(const BenchDocument& doc, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    return Dump(Json{{"manifest", doc.manifest},
                     {"results", doc.results},
                     {"comparisons", doc.comparisons},
                     {"assertions", doc.assertions},
                     {"warnings", doc.warnings}});
  }
  std::ostringstream out;
  if (format == OutputFormat::kCsv) {
    out << CsvPreamble(doc.manifest);
    out << "name,iterations,mean_ns,stddev_ns,allocs\n";
    for (const auto& r : doc.results) {
      out << CsvField(r.name) << ',' << r.iterations << ',' << FormatFixed(r.mean_ns, 3)
          << ',' << FormatFixed(r.stddev_ns, 3) << ','
          << (r.allocs ? std::to_string(*r.allocs) : "") << '\n';
    }
    out << "\nbaseline,candidate,speedup\n";
    for (const auto& c : doc.comparisons) {
      out << CsvField(c.baseline) << ',' << CsvField(c.candidate) << ',' << c.rendered
          << '\n';
    }
    if (!doc.assertions.empty()) {
      out << "\nassertion,hard,passed,detail\n";
      for (const auto& a : doc.assertions) {
        out << CsvField(a.name) << ',' << (a.hard ? "true" : "false") << ','
            << (a.passed ? "true" : "false") << ',' << CsvField(a.detail) << '\n';
      }
    }
    return out.str();
  }
  out << MarkdownPreamble(doc.manifest);
  out << "| Workload | Iterations | Mean (ns) | Stddev (ns) | Allocs |\n";
  out << "|---|---|---|---|---|\n";
  for (const auto& r : doc.results) {
    out << "| " << MarkdownCell(r.name) << " | " << r.iterations << " | "
        << FormatFixed(r.mean_ns, 1) << " | " << FormatFixed(r.stddev_ns, 1) << " | "
        << (r.allocs ? std::to_string(*r.allocs) : "-") << " |\n";
  }
  if (!doc.comparisons.empty()) {
    out << "\n| Baseline | Candidate | Advantage over baseline |\n|---|---|---|\n";
    for (const auto& c : doc.comparisons) {
      out << "| " << MarkdownCell(c.baseline) << " | " << MarkdownCell(c.candidate) << " | "
          << c.rendered << "x faster |\n";
    }
  }
  if (!doc.assertions.empty()) {
    out << "\n| Assertion | Kind | Result | Detail |\n|---|---|---|---|\n";
    for (const auto& a : doc.assertions) {
      out << "| " << MarkdownCell(a.name) << " | " << (a.hard ? "hard" : "soft") << " | "
          << (a.passed ? "pass" : "FAIL") << " | " << MarkdownCell(a.detail) << " |\n";
    }
  }
  return out.str();
}

BenchDocument ParseBenchJson(std::string_view json) {
  const Json j = Json::parse(json);
  BenchDocument doc;
  j.at("manifest").get_to(doc.manifest);
  j.at("results").get_to(doc.results);
  j.at("comparisons").get_to(doc.comparisons);
  j.at("assertions").get_to(doc.assertions);
  j.at("warnings").get_to(doc.warnings);
  return doc;
}

// --- demo -------------------------------------------------------------------

std::string Emit(const DemoDocument& doc, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    return Dump(Json{{"manifest", doc.manifest},
                     {"operation", doc.operation},
                     {"values", doc.values}});
  }
  std::ostringstream out;
  if (format == OutputFormat::kCsv) {
    out << CsvPreamble(doc.manifest);
    out << "index,value\n";
    for (std::size_t i = 0; i < doc.values.size(); ++i) {
      out << (i + 1) << ',' << CsvField(doc.values[i]) << '\n';
    }
    return out.str();
  }
  out << MarkdownPreamble(doc.manifest);
  out << "| # | " << MarkdownCell(doc.operation) << " |\n|---|---|\n";
  for (std::size_t i = 0; i < doc.values.size(); ++i) {
    out << "| " << (i + 1) << " | \"" << MarkdownCell(doc.values[i]) << "\" |\n";
  }
  return out.str();
}

DemoDocument ParseDemoJson(std::string_view json) {
  const Json j = Json::parse(json);
  DemoDocument doc;
  j.at("manifest").get_to(doc.manifest);
  j.at("operation").get_to(doc.operation);
  j.at("values").get_to(doc.values);
  return doc;
}

}  // namespace textarena
