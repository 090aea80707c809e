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

#ifndef TEXTARENA_ALLOC_RECORDER_H_
#define TEXTARENA_ALLOC_RECORDER_H_

#include <cstddef>
#include <memory>

namespace textarena {

// What a container allocation holds.
enum class AllocationKind {
  kElement,  // one boxed element's code units
  kBuffer,   // the contiguous code-unit buffer of a uniform array
  kTable,    // cell tables and offset tables
};

struct AllocationStats {
  std::size_t element_allocations = 0;
  // Every allocation of a uniform buffer, including the first one.
  std::size_t buffer_reallocations = 0;
  std::size_t table_allocations = 0;
  std::size_t peak_bytes = 0;

  std::size_t total_allocations() const {
    return element_allocations + buffer_reallocations + table_allocations;
  }
};

// True when the library was built with allocation instrumentation.
bool InstrumentationAvailable();

// Records container allocations made on the constructing thread for as long
// as it lives. At most one recorder may be active per thread; a second one
// throws std::logic_error.
//
//   AllocationRecorder recorder;
//   auto boxed = BuildBoxedPerElement(u"TestResult", 1000);
//   recorder.stats().element_allocations;  // 1000
class AllocationRecorder {
 public:
  AllocationRecorder();
  ~AllocationRecorder();

  AllocationRecorder(const AllocationRecorder&) = delete;
  AllocationRecorder& operator=(const AllocationRecorder&) = delete;

  const AllocationStats& stats() const { return stats_; }

  static AllocationRecorder* Active();

  void OnAllocate(AllocationKind kind, std::size_t bytes);
  void OnDeallocate(std::size_t bytes);

 private:
  AllocationStats stats_;
  std::size_t live_bytes_ = 0;
};

namespace internal {

inline void NoteAllocate(AllocationKind kind, std::size_t bytes) {
#ifdef TEXTARENA_ALLOC_INSTRUMENTATION
  if (AllocationRecorder* r = AllocationRecorder::Active()) {
    r->OnAllocate(kind, bytes);
  }
#else
  (void)kind, (void)bytes;
#endif
}

inline void NoteDeallocate(std::size_t bytes) {
#ifdef TEXTARENA_ALLOC_INSTRUMENTATION
  if (AllocationRecorder* r = AllocationRecorder::Active()) {
    r->OnDeallocate(bytes);
  }
#else
  (void)bytes;
#endif
}

}  // namespace internal

// std::allocator that reports to the thread's active recorder.
template <typename T, AllocationKind Kind>
struct CountingAllocator {
  using value_type = T;

  CountingAllocator() noexcept = default;
  template <typename U>
  CountingAllocator(const CountingAllocator<U, Kind>&) noexcept {}  // NOLINT

  template <typename U>
  struct rebind {
    using other = CountingAllocator<U, Kind>;
  };

  T* allocate(std::size_t n) {
    T* p = std::allocator<T>().allocate(n);
    internal::NoteAllocate(Kind, n * sizeof(T));
    return p;
  }

  void deallocate(T* p, std::size_t n) noexcept {
    internal::NoteDeallocate(n * sizeof(T));
    std::allocator<T>().deallocate(p, n);
  }

  template <typename U>
  friend bool operator==(const CountingAllocator&,
                         const CountingAllocator<U, Kind>&) noexcept {
    return true;
  }
};

}  // namespace textarena

#endif  // TEXTARENA_ALLOC_RECORDER_H_
