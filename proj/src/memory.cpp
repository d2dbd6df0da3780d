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

#include "qbitsim/memory.hpp"

#include <atomic>

namespace qbitsim::memory {
namespace {

struct AtomicStats {
  std::atomic<std::size_t> current{0};
  std::atomic<std::size_t> peak{0};
  std::atomic<std::size_t> allocations{0};
};

AtomicStats& pool_stats(Pool pool) {
  static AtomicStats state_pool;
  static AtomicStats matrix_pool;
  return pool == Pool::kState ? state_pool : matrix_pool;
}

}  // namespace

PoolStats stats(Pool pool) {
  const auto& s = pool_stats(pool);
  return {s.current.load(), s.peak.load(), s.allocations.load()};
}

void reset_peak(Pool pool) {
  auto& s = pool_stats(pool);
  s.peak.store(s.current.load());
  s.allocations.store(0);
}

void record_alloc(Pool pool, std::size_t bytes) {
  auto& s = pool_stats(pool);
  const std::size_t now = s.current.fetch_add(bytes) + bytes;
  std::size_t prev = s.peak.load();
  while (now > prev && !s.peak.compare_exchange_weak(prev, now)) {
  }
  s.allocations.fetch_add(1);
}

void record_free(Pool pool, std::size_t bytes) {
  pool_stats(pool).current.fetch_sub(bytes);
}

}  // namespace qbitsim::memory
