// Copyright 2026 The irrmeasure Authors
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

#include <cstdint>
#include <vector>

#include "irm/numeric.hpp"

namespace irm {

// Natural log at scale 10^6 with integer endpoints: lo <= 10^6 ln x <= hi.
struct FixedLog {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const FixedLog&, const FixedLog&) = default;
};

inline constexpr std::int64_t kLogScale = 1000000;

FixedLog fixed_log(std::uint64_t x);
FixedLog fixed_log(const ExactInt& x);

// Same values as fixed_log for each element, much faster on long runs of
// nearby arguments such as a segment of primes.
std::vector<FixedLog> fixed_logs(const std::vector<std::uint64_t>& xs);

}  // namespace irm
