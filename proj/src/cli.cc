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

#include "textarena/cli.h"

#include <charconv>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "textarena/containers.h"
#include "textarena/memory_model.h"
#include "textarena/report.h"
#include "textarena/vector_ops.h"
#include "textarena/workloads.h"

namespace textarena {
namespace {

// Thrown for bad flag values discovered after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double DefaultMinTimeSeconds() {
  const char* env = std::getenv(kMinTimeEnv);
  if (env == nullptr || *env == '\0') return 0.5;
  const std::string_view text(env);
  long long ms = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), ms);
  if (ec != std::errc() || ptr != text.data() + text.size() || ms <= 0) {
    throw UsageError(std::string(kMinTimeEnv) + " must be a positive integer");
  }
  return static_cast<double>(ms) / 1000.0;
}

std::string Str(double v) { return FormatFixed(v, 3); }

struct BenchOptions {
  std::string suite = "all";
  std::string format = "md";
  double min_time = 0.5;
  std::size_t reps = 5;
  std::size_t warmup = 100;
  bool assert_ordering = false;
};

struct MemOptions {
  std::size_t n = 1000;
  std::string prefix = "TestResult";
  std::string mode = "paper";
  std::string format = "md";
};

struct DemoOptions {
  std::string operation;
  std::vector<std::string> args;
  std::string delim = "_";
  bool after = false;
  std::string format = "md";
};

int RunBench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  const OutputFormat format = ParseOutputFormat(opts.format);
  BenchmarkConfig config;
  config.min_time_per_rep = std::chrono::nanoseconds(
      static_cast<std::int64_t>(opts.min_time * 1e9));
  config.repetitions = opts.reps;
  config.warmup_iterations = opts.warmup;
  try {
    config.Validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const WorkloadSuite suite = RegisterWorkloads();
  const bool build = opts.suite == "build" || opts.suite == "all";
  const bool concat = opts.suite == "concat" || opts.suite == "all";

  BenchDocument doc;
  doc.manifest = MakeManifest(
      "bench", {{"suite", opts.suite},
                {"format", opts.format},
                {"min-time", Str(opts.min_time)},
                {"reps", std::to_string(opts.reps)},
                {"warmup", std::to_string(opts.warmup)},
                {"assert", opts.assert_ordering ? "true" : "false"}});

  auto run_all = [&](std::initializer_list<std::string_view> names) {
    std::vector<BenchmarkResult> results;
    for (std::string_view name : names) {
      results.push_back(RunWorkload(suite.Get(name), config));
      for (const auto& w : results.back().warnings) {
        doc.warnings.push_back(results.back().name + ": " + w);
      }
      doc.results.push_back(BenchRow::From(results.back()));
    }
    return results;
  };
  auto add_comparisons = [&](std::span<const BenchmarkResult> results,
                             std::string_view baseline) {
    for (const auto& row : Compare(results, baseline)) {
      doc.comparisons.push_back(ComparisonSummary::From(row));
    }
  };

  if (build) {
    const auto containers = run_all({kBoxedBuild, kUniformBuild});
    add_comparisons(containers, kBoxedBuild);
    const auto builders = run_all({kAlgorithmicBuilder, kLoopBuilder});
    add_comparisons(builders, kAlgorithmicBuilder);

    const double loop = builders[1].mean_ns_per_iter;
    const double algorithmic = builders[0].mean_ns_per_iter;
    const bool soft_ok = loop <= 1.10 * algorithmic;
    doc.assertions.push_back({"loopBuilder <= 1.10 x algorithmicBuilder", false, soft_ok,
                              Str(loop) + " ns vs " + Str(algorithmic) + " ns"});
    if (!soft_ok) {
      err << "warning: loopBuilder is slower than 1.10 x algorithmicBuilder\n";
    }
    if (opts.assert_ordering) {
      const OrderingCheck check = CheckBuildOrdering(suite, config, 3);
      doc.assertions.push_back(
          {"uniformBuild <= 0.5 x boxedBuild (median of 3)", true, check.passed,
           check.Describe()});
    }
  }
  if (concat) {
    const auto routes = run_all({kFormatterConcat, kBracketConcat, kPlusConcat});
    add_comparisons(routes, kFormatterConcat);
  }

  out << Emit(doc, format);
  for (const auto& a : doc.assertions) {
    if (a.hard && !a.passed) {
      err << "performance assertion failed: " << a.name << ": " << a.detail << "\n";
      return kExitPerformanceAssertion;
    }
  }
  return kExitOk;
}

int RunMem(const MemOptions& opts, std::ostream& out) {
  const OutputFormat format = ParseOutputFormat(opts.format);
  const AccountingMode mode = ParseAccountingMode(opts.mode);
  const Text prefix = Text::FromUtf8(opts.prefix);

  const BoxedTextArray boxed = BuildBoxedPerElement(prefix, opts.n);
  const UniformStringArray uniform = BuildUniformBroadcast(prefix, opts.n);

  MemDocument doc;
  doc.manifest = MakeManifest("mem", {{"n", std::to_string(opts.n)},
                                      {"prefix", opts.prefix},
                                      {"mode", opts.mode},
                                      {"format", opts.format}});
  doc.reports = {Measure(boxed, mode), Measure(uniform, mode)};
  if (doc.reports[1].metadata_bytes != 0) {
    const Ratio ratio = MetadataRatio(doc.reports[0], doc.reports[1]);
    doc.metadata_ratio = RatioSummary{ratio.numerator(), ratio.denominator(),
                                      ratio.Rendered(2)};
  }
  out << Emit(doc, format);
  return kExitOk;
}

double ParseNumber(const std::string& s) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("not a number: " + s);
  }
  return v;
}

int RunDemo(const DemoOptions& opts, std::ostream& out) {
  const OutputFormat format = ParseOutputFormat(opts.format);
  std::vector<Text> texts;
  for (const auto& a : opts.args) texts.push_back(Text::FromUtf8(a));

  DemoDocument doc;
  doc.operation = opts.operation;
  std::vector<std::pair<std::string, std::string>> flags = {
      {"format", opts.format}};

  auto collect = [&](const UniformStringArray& strings) {
    for (std::size_t i = 0; i < strings.size(); ++i) {
      doc.values.push_back(strings.Get(i).ToUtf8());
    }
  };

  if (opts.operation == "extract") {
    flags.emplace_back("delim", opts.delim);
    flags.emplace_back("after", opts.after ? "true" : "false");
    const auto strings = UniformStringArray::FromTexts(texts);
    const Text delim = Text::FromUtf8(opts.delim);
    collect(opts.after ? ExtractAfter(strings, delim) : ExtractBefore(strings, delim));
  } else if (opts.operation == "plus") {
    if (texts.empty()) throw UsageError("plus needs a prefix and numbers");
    std::vector<double> numbers;
    for (std::size_t i = 1; i < opts.args.size(); ++i) {
      numbers.push_back(ParseNumber(opts.args[i]));
    }
    const Operand result = Operand(texts[0]) + Operand::Numbers(std::move(numbers));
    collect(result.strings());
  } else if (opts.operation == "matrix") {
    if (texts.empty()) throw UsageError("matrix needs at least one text");
    doc.values.push_back(ColumnMajorReadout(PadToCharMatrix(texts)).ToUtf8());
  } else {
    throw UsageError("unknown demo operation: " + opts.operation);
  }

  std::string joined;
  for (const auto& a : opts.args) joined += (joined.empty() ? "" : " ") + a;
  flags.emplace_back("args", joined);
  doc.manifest = MakeManifest("demo " + opts.operation, std::move(flags));
  out << Emit(doc, format);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boxed versus uniform text containers: benchmarks, memory reports, demos",
               "textarena"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"csv", "md", "json"};

  BenchOptions bench;
  MemOptions mem;
  DemoOptions demo;

  try {
    bench.min_time = DefaultMinTimeSeconds();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  auto* bench_cmd = app.add_subcommand("bench", "Run the benchmark workloads");
  bench_cmd->add_option("--suite", bench.suite, "Workload suite")
      ->check(CLI::IsMember({"build", "concat", "all"}))
      ->capture_default_str();
  bench_cmd->add_option("--format", bench.format, "Output format")->check(CLI::IsMember(formats))
      ->capture_default_str();
  bench_cmd->add_option("--min-time", bench.min_time, "Seconds per repetition")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--reps", bench.reps, "Repetitions per workload")->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--warmup", bench.warmup, "Untimed calls before measuring")->capture_default_str();
  bench_cmd->add_flag("--assert", bench.assert_ordering,
                      "Exit 2 when uniformBuild is not at least 2x faster than boxedBuild");

  auto* mem_cmd = app.add_subcommand("mem", "Report memory of both containers");
  mem_cmd->add_option("--n", mem.n, "Element count")->capture_default_str();
  mem_cmd->add_option("--prefix", mem.prefix, "Element prefix")->capture_default_str();
  mem_cmd->add_option("--mode", mem.mode, "Byte accounting model")->check(CLI::IsMember({"paper", "native"}))
      ->capture_default_str();
  mem_cmd->add_option("--format", mem.format, "Output format")->check(CLI::IsMember(formats))
      ->capture_default_str();

  auto* demo_cmd = app.add_subcommand("demo", "Run one text operation");
  demo_cmd->add_option("operation", demo.operation, "extract, plus or matrix")->required();
  demo_cmd->add_option("args", demo.args, "Operation inputs");
  demo_cmd->add_option("--delim", demo.delim, "Delimiter for extract")
      ->capture_default_str();
  demo_cmd->add_flag("--after", demo.after, "extract the part after the delimiter");
  demo_cmd->add_option("--format", demo.format, "Output format")->check(CLI::IsMember(formats))
      ->capture_default_str();

  std::vector<const char*> argv = {"textarena"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bench_cmd) return RunBench(bench, out, err);
    if (*mem_cmd) return RunMem(mem, out);
    return RunDemo(demo, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace textarena
