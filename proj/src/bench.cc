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

#include "textarena/bench.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ratio>

namespace textarena {

void BenchmarkConfig::Validate() const {
  if (min_time_per_rep.count() <= 0) {
    throw std::invalid_argument("min time per repetition must be positive");
  }
  if (repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
}

double Median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty set");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2;
}

namespace internal {

BenchmarkResult Summarize(std::string name, std::vector<RepetitionSample> samples) {
  BenchmarkResult result;
  result.name = std::move(name);

  std::vector<double> per_iter;
  per_iter.reserve(samples.size());
  for (const auto& s : samples) per_iter.push_back(s.ns_per_iter());
  result.mean_ns_per_iter = Median(per_iter);

  if (per_iter.size() > 1) {
    double mean = 0;
    for (double v : per_iter) mean += v;
    mean /= static_cast<double>(per_iter.size());
    double ss = 0;
    for (double v : per_iter) ss += (v - mean) * (v - mean);
    result.stddev_ns_per_iter = std::sqrt(ss / static_cast<double>(per_iter.size() - 1));
  }

  // Iteration count of the repetition closest to the median.
  const auto median_rep = std::min_element(
      samples.begin(), samples.end(), [&](const auto& a, const auto& b) {
        return std::fabs(a.ns_per_iter() - result.mean_ns_per_iter) <
               std::fabs(b.ns_per_iter() - result.mean_ns_per_iter);
      });
  result.iterations = median_rep->iterations;
  result.repetitions = std::move(samples);

  if (std::ratio_greater_v<BenchClock::period, std::micro>) {
    result.warnings.push_back("clock resolution is coarser than 1 us");
  }
  return result;
}

}  // namespace internal

std::string FormatFixed(double value, int decimals) {
  char buf[128];
  auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
  if (res.ec != std::errc()) return std::to_string(value);
  return std::string(buf, res.ptr);
}

std::string ComparisonRow::RenderedRatio() const { return FormatFixed(speedup_ratio, 2); }

std::vector<ComparisonRow> Compare(std::span<const BenchmarkResult> results,
                                   std::string_view baseline) {
  const auto base = std::find_if(results.begin(), results.end(),
                                 [&](const BenchmarkResult& r) { return r.name == baseline; });
  if (base == results.end()) {
    throw std::invalid_argument("unknown baseline: " + std::string(baseline));
  }
  std::vector<ComparisonRow> rows;
  for (const auto& r : results) {
    if (&r == &*base) continue;
    rows.push_back({base->name, r.name, base->mean_ns_per_iter / r.mean_ns_per_iter});
  }
  return rows;
}

}  // namespace textarena
