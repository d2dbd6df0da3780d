// Copyright 2026 The qbitsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <new>

namespace qbitsim::memory {

// Amplitude buffers and dense matrices are allocated through TrackedAllocator
// so the benchmark harness can prove that no 2^n x 2^n matrix is created
// outside the oracle path.
enum class Pool { kState, kMatrix };

struct PoolStats {
  std::size_t current_bytes = 0;
  std::size_t peak_bytes = 0;
  std::size_t allocations = 0;
};

PoolStats stats(Pool pool);

/// Sets the pool's peak to its current usage and zeroes the allocation count.
void reset_peak(Pool pool);

void record_alloc(Pool pool, std::size_t bytes);
void record_free(Pool pool, std::size_t bytes);

template <class T, Pool P>
struct TrackedAllocator {
  using value_type = T;

  TrackedAllocator() noexcept = default;
  template <class U>
  TrackedAllocator(const TrackedAllocator<U, P>&) noexcept {}

  template <class U>
  struct rebind {
    using other = TrackedAllocator<U, P>;
  };

  T* allocate(std::size_t n) {
    T* p = static_cast<T*>(::operator new(n * sizeof(T), std::align_val_t{64}));
    record_alloc(P, n * sizeof(T));
    return p;
  }

  void deallocate(T* p, std::size_t n) noexcept {
    record_free(P, n * sizeof(T));
    ::operator delete(p, std::align_val_t{64});
  }

  template <class U>
  bool operator==(const TrackedAllocator<U, P>&) const noexcept {
    return true;
  }
};

}  // namespace qbitsim::memory
