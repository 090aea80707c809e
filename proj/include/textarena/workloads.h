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

#ifndef TEXTARENA_WORKLOADS_H_
#define TEXTARENA_WORKLOADS_H_

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "textarena/bench.h"
#include "textarena/containers.h"
#include "textarena/text.h"

namespace textarena {

inline constexpr std::size_t kTestResultCount = 1000;
inline constexpr std::u16string_view kTestResultPrefix = u"TestResult";

inline constexpr std::string_view kBoxedBuild = "boxedBuild";
inline constexpr std::string_view kUniformBuild = "uniformBuild";
inline constexpr std::string_view kLoopBuilder = "loopBuilder";
inline constexpr std::string_view kAlgorithmicBuilder = "algorithmicBuilder";
inline constexpr std::string_view kFormatterConcat = "formatterConcat";
inline constexpr std::string_view kBracketConcat = "bracketConcat";
inline constexpr std::string_view kPlusConcat = "plusConcat";

// "TestResult1".."TestResultN" with std::string, single pass:
// v[x] += std::to_string(x + 1).
std::vector<std::string> BuildTestResultsLoop(std::size_t n);
// Same content in two passes: materialize 1..n, then map-and-append.
std::vector<std::string> BuildTestResultsAlgorithmic(std::size_t n);

using WorkloadProduct =
    std::variant<BoxedTextArray, UniformStringArray, std::vector<std::string>, Text>;

struct Workload {
  std::string name;
  // Builds the product and passes it through BlackBox.
  std::function<void()> run;
  // Builds the product for inspection.
  std::function<WorkloadProduct()> make;
  // Whether container allocations are visible to AllocationRecorder.
  bool instrumented = false;
};

class WorkloadSuite {
 public:
  // Throws std::invalid_argument on a duplicate name.
  void Add(Workload workload);

  // Throws std::out_of_range for an unknown name.
  const Workload& Get(std::string_view name) const;
  bool Contains(std::string_view name) const;

  const std::vector<Workload>& workloads() const { return workloads_; }
  std::size_t size() const { return workloads_.size(); }

 private:
  std::vector<Workload> workloads_;
};

// The seven named workloads.
WorkloadSuite RegisterWorkloads();

// Runs the workload and, when it is instrumented, records the allocation
// statistics of one extra invocation.
BenchmarkResult RunWorkload(const Workload& workload, const BenchmarkConfig& config);

// Outcome of "faster <= factor x slower" on the median of several runs.
struct OrderingCheck {
  std::string faster_name;
  std::string slower_name;
  double faster_median_ns = 0;
  double slower_median_ns = 0;
  double factor = 0;  // passes iff faster <= factor * slower
  bool passed = false;

  std::string Describe() const;
};

OrderingCheck CheckOrdering(const WorkloadSuite& suite, std::string_view faster,
                            std::string_view slower, double factor,
                            const BenchmarkConfig& config, std::size_t runs = 3);

// Hard: uniformBuild <= 0.5 x boxedBuild.
OrderingCheck CheckBuildOrdering(const WorkloadSuite& suite,
                                 const BenchmarkConfig& config, std::size_t runs = 3);
// Soft: loopBuilder <= 1.10 x algorithmicBuilder.
OrderingCheck CheckLoopOrdering(const WorkloadSuite& suite, const BenchmarkConfig& config,
                                std::size_t runs = 3);

}  // namespace textarena

#endif  // TEXTARENA_WORKLOADS_H_
