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

// A small micro-benchmark runner.
//
// Each repetition runs the workload in passes of 1, 2, 4, ... iterations and
// stops once the repetition has spent at least min_time_per_rep; the final
// pass gives that repetition's time per iteration. The reported mean is the
// median of the repetitions, the stddev is taken across them.
//
// Everything runs on the calling thread. Do not benchmark concurrently.

#ifndef TEXTARENA_BENCH_H_
#define TEXTARENA_BENCH_H_

#include <atomic>
#include <chrono>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "textarena/alloc_recorder.h"

namespace textarena {

// Forces `value` to be materialized and treated as read and written by
// unknown code, so the optimizer cannot drop the computation behind it.
template <typename T>
inline void Sink(T& value) {
#if defined(__GNUC__) || defined(__clang__)
  // A single memory operand; GCC 11 mishandles the "+m,r" alternative pair.
  asm volatile("" : "+m"(value) : : "memory");
#else
  std::atomic_signal_fence(std::memory_order_seq_cst);
  static volatile const void* escape;
  escape = &value;
#endif
}

// Identity with an optimizer barrier.
template <typename T>
T& BlackBox(T& value) {
  Sink(value);
  return value;
}

template <typename T>
  requires(!std::is_lvalue_reference_v<T>)
T BlackBox(T&& value) {
  T out(std::move(value));
  Sink(out);
  return out;
}

struct BenchmarkConfig {
  std::chrono::nanoseconds min_time_per_rep = std::chrono::milliseconds(500);
  std::size_t repetitions = 5;
  std::size_t warmup_iterations = 100;

  // Throws std::invalid_argument.
  void Validate() const;
};

struct RepetitionSample {
  std::uint64_t iterations = 0;  // final pass
  double elapsed_ns = 0;         // final pass
  double total_elapsed_ns = 0;   // all passes of the repetition
  double ns_per_iter() const { return elapsed_ns / static_cast<double>(iterations); }
};

struct BenchmarkResult {
  std::string name;
  std::uint64_t iterations = 0;  // final pass of the median repetition
  double mean_ns_per_iter = 0;
  double stddev_ns_per_iter = 0;
  std::optional<AllocationStats> alloc_stats;
  std::vector<RepetitionSample> repetitions;
  std::vector<std::string> warnings;
};

// Thrown when a workload throws; the workload's exception is nested.
class BenchmarkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace internal {

using BenchClock = std::chrono::steady_clock;
static_assert(BenchClock::is_steady);

// Summarizes repetitions and attaches clock warnings.
BenchmarkResult Summarize(std::string name, std::vector<RepetitionSample> samples);

}  // namespace internal

template <std::invocable F>
BenchmarkResult RunBenchmark(std::string name, F&& workload,
                             const BenchmarkConfig& config) {
  config.Validate();
  using internal::BenchClock;
  const double budget_ns = static_cast<double>(config.min_time_per_rep.count());
  std::vector<RepetitionSample> samples;
  samples.reserve(config.repetitions);
  try {
    for (std::size_t w = 0; w < config.warmup_iterations; ++w) workload();
    for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
      RepetitionSample sample;
      for (std::uint64_t iterations = 1;; iterations *= 2) {
        const auto start = BenchClock::now();
        for (std::uint64_t i = 0; i < iterations; ++i) workload();
        const auto stop = BenchClock::now();
        const double elapsed = std::chrono::duration<double, std::nano>(stop - start).count();
        sample.iterations = iterations;
        sample.elapsed_ns = elapsed;
        sample.total_elapsed_ns += elapsed;
        if (sample.total_elapsed_ns >= budget_ns) break;
      }
      samples.push_back(sample);
    }
  } catch (...) {
    std::throw_with_nested(BenchmarkError("workload '" + name + "' failed"));
  }
  return internal::Summarize(std::move(name), std::move(samples));
}

struct ComparisonRow {
  std::string baseline_name;
  std::string candidate_name;
  double speedup_ratio = 0;  // baseline mean / candidate mean

  std::string RenderedRatio() const;
};

// One row per result other than the baseline, in input order. Throws
// std::invalid_argument for an unknown baseline.
std::vector<ComparisonRow> Compare(std::span<const BenchmarkResult> results,
                                   std::string_view baseline);

// Fixed-point rendering with dot separator.
std::string FormatFixed(double value, int decimals);

double Median(std::vector<double> values);

}  // namespace textarena

#endif  // TEXTARENA_BENCH_H_
