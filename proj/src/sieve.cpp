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

#include "irm/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "irm/numeric.hpp"

namespace irm {

namespace {

constexpr char kCacheMagic[8] = {'I', 'R', 'M', 'P', 'R', 'I', 'M', '1'};

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

void put_u64(std::ostream& out, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint64_t get_u64(std::istream& in) {
  unsigned char b[8];
  if (!in.read(reinterpret_cast<char*>(b), 8)) throw std::runtime_error("truncated prime cache");
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

// Marks composites among the odd numbers of [start, start + 2 * marks.size()).
void mark_odd_composites(std::uint64_t start, std::vector<std::uint8_t>& marks,
                         const std::vector<std::uint64_t>& base) {
  std::fill(marks.begin(), marks.end(), 1);
  const std::uint64_t end = start + 2 * marks.size();
  for (std::uint64_t p : base) {
    if (p == 2) continue;
    if (p * p >= end) break;
    std::uint64_t first = std::max(p * p, (start + p - 1) / p * p);
    if (first % 2 == 0) first += p;
    for (std::uint64_t m = first; m < end; m += 2 * p) marks[(m - start) / 2] = 0;
  }
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::uint64_t> sieve_segment(std::uint64_t lo, std::uint64_t hi,
                                         const std::vector<std::uint64_t>& base) {
  std::vector<std::uint64_t> out;
  if (hi <= lo) return out;
  std::vector<std::uint64_t> own;
  const std::vector<std::uint64_t>* use = &base;
  if (base.empty() || base.back() < isqrt(hi)) {
    own = primes_up_to(isqrt(hi));
    use = &own;
  }
  if (lo < 2 && hi >= 2) out.push_back(2);
  std::uint64_t start = (lo + 1) | 1;  // first odd > lo
  if (start < 3) start = 3;
  if (start > hi) return out;
  std::vector<std::uint8_t> marks((hi - start) / 2 + 1);
  mark_odd_composites(start, marks, *use);
  for (std::size_t i = 0; i < marks.size(); ++i) {
    if (!marks[i]) continue;
    out.push_back(start + 2 * i);
  }
  return out;
}

SegmentedSieve::SegmentedSieve(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment)
    : lo_(lo), hi_(hi), segment_(segment), cursor_(lo) {
  if (segment_ < 2) throw DomainError("sieve segment size must be at least 2");
  base_ = primes_up_to(isqrt(hi) + 1);
}

bool SegmentedSieve::next(std::vector<std::uint64_t>& out) {
  out.clear();
  if (cursor_ >= hi_) return false;
  seg_lo_ = cursor_;
  seg_hi_ = std::min(hi_, cursor_ + segment_);
  cursor_ = seg_hi_;
  if (seg_lo_ < 2 && seg_hi_ >= 2) out.push_back(2);
  std::uint64_t start = (seg_lo_ + 1) | 1;
  if (start < 3) start = 3;
  if (start > seg_hi_) return true;
  marks_.resize((seg_hi_ - start) / 2 + 1);
  mark_odd_composites(start, marks_, base_);
  for (std::size_t i = 0; i < marks_.size(); ++i) {
    if (marks_[i]) out.push_back(start + 2 * i);
  }
  return true;
}

void write_prime_cache(const std::filesystem::path& path, const std::vector<std::uint64_t>& primes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write prime cache " + path.string());
  out.write(kCacheMagic, 8);
  put_u64(out, primes.size());
  for (auto p : primes) put_u64(out, p);
}

std::vector<std::uint64_t> read_prime_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read prime cache " + path.string());
  char magic[8];
  if (!in.read(magic, 8) || std::memcmp(magic, kCacheMagic, 8) != 0) {
    throw std::runtime_error("bad prime cache header in " + path.string());
  }
  std::uint64_t count = get_u64(in);
  std::vector<std::uint64_t> out(count);
  for (auto& p : out) p = get_u64(in);
  return out;
}

}  // namespace irm
