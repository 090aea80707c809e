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

#include "textarena/containers.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace textarena {
namespace {

std::string OutOfRangeMessage(std::size_t i, std::size_t n) {
  return "index " + std::to_string(i) + " out of range for " + std::to_string(n) +
         " elements";
}

}  // namespace

// --- BoxedTextArray ---------------------------------------------------------

BoxedTextArray::Cell::Cell(std::u16string_view units) : size_(units.size()) {
  // Zero-length elements still get their own allocation.
  data_ = Allocator().allocate(size_);
  std::copy(units.begin(), units.end(), data_);
}

BoxedTextArray::Cell::Cell(Cell&& other) noexcept
    : data_(std::exchange(other.data_, nullptr)),
      size_(std::exchange(other.size_, 0)) {}

BoxedTextArray::Cell& BoxedTextArray::Cell::operator=(Cell other) noexcept {
  std::swap(data_, other.data_);
  std::swap(size_, other.size_);
  return *this;
}

BoxedTextArray::Cell::~Cell() {
  if (data_ != nullptr) Allocator().deallocate(data_, size_);
}

void BoxedTextArray::PushBack(std::u16string_view units) {
  cells_.emplace_back(units);
}

Text BoxedTextArray::Get(std::size_t i) const {
  if (i >= size()) throw std::out_of_range(OutOfRangeMessage(i, size()));
  return Text(view(i));
}

std::size_t BoxedTextArray::AllocatedBytes() const {
  std::size_t bytes = cells_.capacity() * sizeof(Cell);
  for (const Cell& cell : cells_) bytes += cell.units().size() * kBytesPerCodeUnit;
  return bytes;
}

// --- UniformStringArray -----------------------------------------------------

UniformStringArray::Builder::Builder(Orientation orientation)
    : orientation_(orientation) {
  offsets_.push_back(0);
}

void UniformStringArray::Builder::Grow(std::size_t extra_units) {
  const std::size_t needed = buffer_.size() + extra_units;
  if (needed <= buffer_.capacity()) return;
  std::size_t capacity =
      buffer_.capacity() == 0 ? kInitialBufferUnits : buffer_.capacity() * 2;
  while (capacity < needed) capacity *= 2;
  buffer_.reserve(capacity);
}

void UniformStringArray::Builder::Append(std::u16string_view units) {
  Grow(units.size());
  buffer_.insert(buffer_.end(), units.begin(), units.end());
  offsets_.push_back(buffer_.size());
}

void UniformStringArray::Builder::AppendConcat(std::u16string_view head,
                                                std::u16string_view tail) {
  Grow(head.size() + tail.size());
  buffer_.insert(buffer_.end(), head.begin(), head.end());
  buffer_.insert(buffer_.end(), tail.begin(), tail.end());
  offsets_.push_back(buffer_.size());
}

UniformStringArray UniformStringArray::Builder::Build() && {
  if (buffer_.capacity() != buffer_.size()) {
    Buffer exact(buffer_.begin(), buffer_.end());
    buffer_.swap(exact);
  }
  if (offsets_.capacity() != offsets_.size()) {
    Offsets exact(offsets_.begin(), offsets_.end());
    offsets_.swap(exact);
  }
  return UniformStringArray(std::move(buffer_), std::move(offsets_), orientation_);
}

UniformStringArray::UniformStringArray(Orientation orientation)
    : offsets_(1, 0), orientation_(orientation) {}

UniformStringArray::UniformStringArray(Buffer buffer, Offsets offsets,
                                       Orientation orientation)
    : buffer_(std::move(buffer)),
      offsets_(std::move(offsets)),
      orientation_(orientation) {}

UniformStringArray UniformStringArray::FromTexts(std::span<const Text> texts,
                                                 Orientation orientation) {
  Builder builder(orientation);
  builder.ReserveElements(texts.size());
  for (const Text& t : texts) builder.Append(t.units());
  return std::move(builder).Build();
}

Text UniformStringArray::Get(std::size_t i) const {
  if (i >= size()) throw std::out_of_range(OutOfRangeMessage(i, size()));
  return Text(view(i));
}

bool UniformStringArray::OffsetsValid() const {
  if (offsets_.empty() || offsets_.front() != 0) return false;
  if (offsets_.back() != buffer_.size()) return false;
  return std::is_sorted(offsets_.begin(), offsets_.end());
}

std::size_t UniformStringArray::AllocatedBytes() const {
  return buffer_.capacity() * kBytesPerCodeUnit +
         offsets_.capacity() * sizeof(std::size_t);
}

// --- Builders and conversions -------------------------------------------------

BoxedTextArray BuildBoxedPerElement(const Text& prefix, std::size_t n) {
  BoxedTextArray boxed(Orientation::kRow);
  boxed.Reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const Text element = prefix + NumToText(static_cast<double>(i));
    boxed.PushBack(element.units());
  }
  return boxed;
}

UniformStringArray BuildUniformBroadcast(const Text& prefix, std::size_t n) {
  UniformStringArray::Builder builder(Orientation::kRow);
  builder.ReserveElements(n);
  for (std::size_t i = 1; i <= n; ++i) {
    builder.AppendConcat(prefix.units(), NumToText(static_cast<double>(i)).units());
  }
  return std::move(builder).Build();
}

UniformStringArray BoxedToUniform(const BoxedTextArray& boxed) {
  UniformStringArray::Builder builder(boxed.orientation());
  builder.ReserveElements(boxed.size());
  for (std::size_t i = 0; i < boxed.size(); ++i) builder.Append(boxed.view(i));
  return std::move(builder).Build();
}

BoxedTextArray UniformToBoxed(const UniformStringArray& uniform) {
  BoxedTextArray boxed(uniform.orientation());
  boxed.Reserve(uniform.size());
  for (std::size_t i = 0; i < uniform.size(); ++i) boxed.PushBack(uniform.view(i));
  return boxed;
}

}  // namespace textarena
