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

#include "textarena/workloads.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "textarena/format.h"
#include "textarena/memory_model.h"
#include "textarena/vector_ops.h"

namespace textarena {
namespace {

template <typename Producer>
Workload MakeWorkload(std::string_view name, Producer producer, bool instrumented) {
  Workload w;
  w.name = std::string(name);
  w.run = [producer] {
    auto product = producer();
    BlackBox(product);
  };
  w.make = [producer] { return WorkloadProduct(producer()); };
  w.instrumented = instrumented;
  return w;
}

}  // namespace

std::vector<std::string> BuildTestResultsLoop(std::size_t n) {
  std::vector<std::string> v(n, "TestResult");
  for (std::size_t x = 0; x < v.size(); ++x) {
    v[x] += std::to_string(x + 1);
  }
  return v;
}

std::vector<std::string> BuildTestResultsAlgorithmic(std::size_t n) {
  std::vector<std::string> v(n, "TestResult");
  std::vector<int> num(n);
  std::iota(num.begin(), num.end(), 1);
  // Appends in place, then copies the result back over the same element.
  std::transform(num.begin(), num.end(), v.begin(), v.begin(),
                 [](int k, std::string& s) { return s += std::to_string(k); });
  return v;
}

void WorkloadSuite::Add(Workload workload) {
  if (Contains(workload.name)) {
    throw std::invalid_argument("duplicate workload name: " + workload.name);
  }
  workloads_.push_back(std::move(workload));
}

bool WorkloadSuite::Contains(std::string_view name) const {
  return std::any_of(workloads_.begin(), workloads_.end(),
                     [&](const Workload& w) { return w.name == name; });
}

const Workload& WorkloadSuite::Get(std::string_view name) const {
  for (const Workload& w : workloads_) {
    if (w.name == name) return w;
  }
  throw std::out_of_range("unknown workload: " + std::string(name));
}

WorkloadSuite RegisterWorkloads() {
  WorkloadSuite suite;
  suite.Add(MakeWorkload(
      kBoxedBuild,
      [] { return BuildBoxedPerElement(Text(kTestResultPrefix), kTestResultCount); },
      true));
  suite.Add(MakeWorkload(
      kUniformBuild,
      [] { return BuildUniformBroadcast(Text(kTestResultPrefix), kTestResultCount); },
      true));
  suite.Add(MakeWorkload(
      kLoopBuilder, [] { return BuildTestResultsLoop(kTestResultCount); }, false));
  suite.Add(MakeWorkload(
      kAlgorithmicBuilder, [] { return BuildTestResultsAlgorithmic(kTestResultCount); },
      false));

  // Three routes to "1 a".
  suite.Add(MakeWorkload(
      kFormatterConcat,
      [] { return Sprintf(u"%d %s", {Operand(1), Operand::Char(u'a')}); }, false));
  suite.Add(MakeWorkload(
      kBracketConcat,
      [] {
        return ConcatBrackets({Operand::Char(NumToText(1)), Operand::Char(u' '),
                               Operand::Char(u'a')});
      },
      false));
  suite.Add(MakeWorkload(
      kPlusConcat,
      [] {
        const Operand sum = Operand(1) + Operand(u" ") + Operand::Char(u'a');
        return sum.text();
      },
      false));
  return suite;
}

BenchmarkResult RunWorkload(const Workload& workload, const BenchmarkConfig& config) {
  BenchmarkResult result = RunBenchmark(workload.name, workload.run, config);
  if (workload.instrumented && InstrumentationAvailable()) {
    result.alloc_stats = AllocationStatsOf(workload.run);
  }
  return result;
}

std::string OrderingCheck::Describe() const {
  return faster_name + " " + FormatFixed(faster_median_ns, 1) + " ns " +
         (passed ? "<=" : ">") + " " + FormatFixed(factor, 2) + " x " + slower_name + " " +
         FormatFixed(slower_median_ns, 1) + " ns";
}

OrderingCheck CheckOrdering(const WorkloadSuite& suite, std::string_view faster,
                            std::string_view slower, double factor,
                            const BenchmarkConfig& config, std::size_t runs) {
  const Workload& fast = suite.Get(faster);
  const Workload& slow = suite.Get(slower);
  std::vector<double> fast_means;
  std::vector<double> slow_means;
  for (std::size_t r = 0; r < runs; ++r) {
    slow_means.push_back(RunBenchmark(slow.name, slow.run, config).mean_ns_per_iter);
    fast_means.push_back(RunBenchmark(fast.name, fast.run, config).mean_ns_per_iter);
  }
  OrderingCheck check;
  check.faster_name = fast.name;
  check.slower_name = slow.name;
  check.faster_median_ns = Median(fast_means);
  check.slower_median_ns = Median(slow_means);
  check.factor = factor;
  check.passed = check.faster_median_ns <= factor * check.slower_median_ns;
  return check;
}

OrderingCheck CheckBuildOrdering(const WorkloadSuite& suite,
                                 const BenchmarkConfig& config, std::size_t runs) {
  return CheckOrdering(suite, kUniformBuild, kBoxedBuild, 0.5, config, runs);
}

OrderingCheck CheckLoopOrdering(const WorkloadSuite& suite, const BenchmarkConfig& config,
                                std::size_t runs) {
  return CheckOrdering(suite, kLoopBuilder, kAlgorithmicBuilder, 1.10, config, runs);
}

}  // namespace textarena
