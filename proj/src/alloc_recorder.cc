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

#include "textarena/alloc_recorder.h"

#include <algorithm>
#include <stdexcept>

namespace textarena {
namespace {

thread_local AllocationRecorder* g_active = nullptr;

}  // namespace

bool InstrumentationAvailable() {
#ifdef TEXTARENA_ALLOC_INSTRUMENTATION
  return true;
#else
  return false;
#endif
}

AllocationRecorder::AllocationRecorder() {
  if (g_active != nullptr) {
    throw std::logic_error("an allocation recorder is already active on this thread");
  }
  g_active = this;
}

AllocationRecorder::~AllocationRecorder() { g_active = nullptr; }

AllocationRecorder* AllocationRecorder::Active() { return g_active; }

void AllocationRecorder::OnAllocate(AllocationKind kind, std::size_t bytes) {
  switch (kind) {
    case AllocationKind::kElement:
      ++stats_.element_allocations;
      break;
    case AllocationKind::kBuffer:
      ++stats_.buffer_reallocations;
      break;
    case AllocationKind::kTable:
      ++stats_.table_allocations;
      break;
  }
  live_bytes_ += bytes;
  stats_.peak_bytes = std::max(stats_.peak_bytes, live_bytes_);
}

void AllocationRecorder::OnDeallocate(std::size_t bytes) {
  // Memory allocated before the recorder started may be released under it.
  live_bytes_ -= std::min(live_bytes_, bytes);
}

}  // namespace textarena
