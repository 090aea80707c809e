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

// Calibration workloads for the benchmark harness.

#ifndef TEXTARENA_TESTS_HARNESS_CHECKS_H_
#define TEXTARENA_TESTS_HARNESS_CHECKS_H_

#include <chrono>
#include <cstdint>
#include <thread>

#include "textarena/bench.h"

namespace textarena::testing {

inline constexpr std::uint64_t kSinkLoopIterations = 10'000'000;

struct SinkLoopTiming {
  double empty_ns = 0;
  double sink_ns = 0;
};

// Times the same loop twice: once with nothing in the body, which the
// optimizer is free to delete, and once passing the counter through Sink.
inline SinkLoopTiming TimeSinkLoop() {
  using Clock = std::chrono::steady_clock;
  SinkLoopTiming timing;
  std::uint64_t n = kSinkLoopIterations;
  Sink(n);

  auto start = Clock::now();
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint64_t x = i * 3 + 1;
    (void)x;
  }
  auto stop = Clock::now();
  timing.empty_ns = std::chrono::duration<double, std::nano>(stop - start).count();

  start = Clock::now();
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint64_t x = i * 3 + 1;
    Sink(x);
  }
  stop = Clock::now();
  timing.sink_ns = std::chrono::duration<double, std::nano>(stop - start).count();
  return timing;
}

// Mean ns per iteration of a workload that sleeps for one millisecond.
inline BenchmarkResult MeasureSleep() {
  BenchmarkConfig config;
  config.min_time_per_rep = std::chrono::milliseconds(200);
  config.repetitions = 3;
  config.warmup_iterations = 2;
  return RunBenchmark(
      "sleep1ms", [] { std::this_thread::sleep_for(std::chrono::milliseconds(1)); },
      config);
}

// A fixed amount of arithmetic per call.
inline void ConstantKernel() {
  std::uint64_t acc = 0x9E3779B97F4A7C15ULL;
  for (int i = 0; i < 1000; ++i) {
    acc ^= acc << 13;
    acc ^= acc >> 7;
    acc ^= acc << 17;
  }
  Sink(acc);
}

}  // namespace textarena::testing

#endif  // TEXTARENA_TESTS_HARNESS_CHECKS_H_
