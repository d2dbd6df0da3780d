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

#include "qbitsim/random.hpp"

namespace qbitsim {

// First draws for seed 0, fixed so any change to the update rule breaks the
// build instead of silently changing every recorded histogram.
static_assert(RandomSource(0).next_u64() == mix64(0x9E3779B97F4A7C15ULL));
static_assert(mix64(0x9E3779B97F4A7C15ULL) == 0xE220A8397B1DCDAFULL);

}  // namespace qbitsim
