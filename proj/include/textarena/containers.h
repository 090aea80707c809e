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

// Two text containers with identical logical content and different layouts:
//
//  BoxedTextArray       one header + one separately allocated code-unit
//                       buffer per element (a cell array of char vectors).
//  UniformStringArray   one contiguous code-unit buffer plus n+1 offsets
//                       (a string array).
//
// Both are 1-D with a row/column orientation flag. Indices are zero-based.

#ifndef TEXTARENA_CONTAINERS_H_
#define TEXTARENA_CONTAINERS_H_

#include <concepts>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "textarena/alloc_recorder.h"
#include "textarena/text.h"

namespace textarena {

enum class Orientation { kRow, kColumn };

// The per-element variable header charged to every boxed element.
struct ElementHeader {
  static constexpr std::size_t kSimulatedBytes = 104;
};

class BoxedTextArray {
 public:
  BoxedTextArray() = default;
  explicit BoxedTextArray(Orientation orientation) : orientation_(orientation) {}

  void Reserve(std::size_t n) { cells_.reserve(n); }
  // Allocates a fresh buffer for the element.
  void PushBack(std::u16string_view units);

  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  Orientation orientation() const { return orientation_; }

  std::u16string_view view(std::size_t i) const { return cells_[i].units(); }
  // Throws std::out_of_range.
  Text Get(std::size_t i) const;

  // Address of element i's buffer. Distinct for every element.
  const CodeUnit* data(std::size_t i) const { return cells_[i].units().data(); }

  // Bytes requested from the allocator: the cell table plus every element.
  std::size_t AllocatedBytes() const;

 private:
  // Owns one element's code units.
  class Cell {
   public:
    explicit Cell(std::u16string_view units);
    Cell(const Cell& other) : Cell(other.units()) {}
    Cell(Cell&& other) noexcept;
    Cell& operator=(Cell other) noexcept;
    ~Cell();

    std::u16string_view units() const { return {data_, size_}; }

   private:
    using Allocator = CountingAllocator<CodeUnit, AllocationKind::kElement>;
    CodeUnit* data_ = nullptr;
    std::size_t size_ = 0;
  };

  std::vector<Cell, CountingAllocator<Cell, AllocationKind::kTable>> cells_;
  Orientation orientation_ = Orientation::kRow;
};

class UniformStringArray {
 public:
  // Appends elements into one geometrically growing buffer. Build() trims the
  // buffer to its exact size so the finished array holds a single allocation.
  class Builder {
   public:
    explicit Builder(Orientation orientation = Orientation::kRow);

    void ReserveElements(std::size_t n) { offsets_.reserve(n + 1); }
    void Append(std::u16string_view units);
    // Appends head ++ tail as one element.
    void AppendConcat(std::u16string_view head, std::u16string_view tail);

    UniformStringArray Build() &&;

   private:
    void Grow(std::size_t extra_units);

    std::vector<CodeUnit, CountingAllocator<CodeUnit, AllocationKind::kBuffer>> buffer_;
    std::vector<std::size_t, CountingAllocator<std::size_t, AllocationKind::kTable>> offsets_;
    Orientation orientation_;
  };

  // Initial buffer capacity in code units.
  static constexpr std::size_t kInitialBufferUnits = 16;

  UniformStringArray() : UniformStringArray(Orientation::kRow) {}
  explicit UniformStringArray(Orientation orientation);
  static UniformStringArray FromTexts(std::span<const Text> texts,
                                      Orientation orientation = Orientation::kRow);

  std::size_t size() const { return offsets_.size() - 1; }
  bool empty() const { return size() == 0; }
  Orientation orientation() const { return orientation_; }

  std::u16string_view view(std::size_t i) const {
    return std::u16string_view(buffer_.data() + offsets_[i],
                               offsets_[i + 1] - offsets_[i]);
  }
  // Throws std::out_of_range.
  Text Get(std::size_t i) const;

  std::u16string_view buffer() const { return {buffer_.data(), buffer_.size()}; }
  std::span<const std::size_t> offsets() const { return offsets_; }

  // offsets[0] == 0, offsets monotone, offsets[n] == buffer length.
  bool OffsetsValid() const;

  std::size_t AllocatedBytes() const;

 private:
  using Buffer =
      std::vector<CodeUnit, CountingAllocator<CodeUnit, AllocationKind::kBuffer>>;
  using Offsets =
      std::vector<std::size_t, CountingAllocator<std::size_t, AllocationKind::kTable>>;

  UniformStringArray(Buffer buffer, Offsets offsets, Orientation orientation);

  Buffer buffer_;
  Offsets offsets_;
  Orientation orientation_;
};

// Anything exposing size() and view(i).
template <typename T>
concept TextSequence = requires(const T& seq, std::size_t i) {
  { seq.size() } -> std::convertible_to<std::size_t>;
  { seq.view(i) } -> std::convertible_to<std::u16string_view>;
};

template <TextSequence T>
std::size_t Count(const T& seq) {
  return seq.size();
}

// Element-wise comparison across container kinds. Orientation is ignored.
template <TextSequence A, TextSequence B>
bool ContentEquals(const A& a, const B& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.view(i) != b.view(i)) return false;
  }
  return true;
}

template <TextSequence T>
Text JoinAll(const T& seq, const Text& delimiter) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) total += seq.view(i).size();
  if (seq.size() > 1) total += delimiter.size() * (seq.size() - 1);

  std::u16string out;
  out.reserve(total);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out.append(delimiter.units());
    out.append(seq.view(i));
  }
  return Text(std::move(out));
}

// prefix ++ NumToText(i) for i = 1..n, one boxed element per string.
BoxedTextArray BuildBoxedPerElement(const Text& prefix, std::size_t n);

// prefix + (1:n), written into one growing buffer.
UniformStringArray BuildUniformBroadcast(const Text& prefix, std::size_t n);

UniformStringArray BoxedToUniform(const BoxedTextArray& boxed);
BoxedTextArray UniformToBoxed(const UniformStringArray& uniform);

}  // namespace textarena

#endif  // TEXTARENA_CONTAINERS_H_
