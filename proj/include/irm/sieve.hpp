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
#include <filesystem>
#include <vector>

namespace irm {

// All primes <= limit, by a plain sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// Primes in (lo, hi]. base must hold every prime <= sqrt(hi).
std::vector<std::uint64_t> sieve_segment(std::uint64_t lo, std::uint64_t hi,
                                         const std::vector<std::uint64_t>& base);

// Odd-only segmented sieve over (lo, hi], yielding primes in increasing
// order one segment at a time.
class SegmentedSieve {
 public:
  SegmentedSieve(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment = 10000000);
  // Primes of the next segment; false once (lo, hi] is exhausted.
  bool next(std::vector<std::uint64_t>& out);
  std::uint64_t segment_lo() const { return seg_lo_; }
  std::uint64_t segment_hi() const { return seg_hi_; }

 private:
  std::uint64_t lo_, hi_, segment_;
  std::uint64_t cursor_;
  std::uint64_t seg_lo_ = 0, seg_hi_ = 0;
  std::vector<std::uint64_t> base_;
  std::vector<std::uint8_t> marks_;
};

// Binary prime cache: 8-byte magic "IRMPRIM1", u64 little-endian count,
// then the primes as u64 little-endian.
void write_prime_cache(const std::filesystem::path& path, const std::vector<std::uint64_t>& primes);
std::vector<std::uint64_t> read_prime_cache(const std::filesystem::path& path);

}  // namespace irm
