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
#include <string>
#include <vector>

#include "irm/fixed_log.hpp"
#include "irm/interval.hpp"
#include "irm/numeric.hpp"

namespace irm {

struct SmallScanResult {
  RealInterval min_value;
  long argmin = 0;
};

// min over 1 <= r <= d.size()-1 of 0.29 D_r^2 / (r^{1/6} 4^r), where d[r]
// holds D_{1,3,r} (d[0] is ignored).
SmallScanResult scan_ratio_small(const std::vector<ExactInt>& d);
// Same with D_r computed exactly.
SmallScanResult scan_ratio_small(long r_max);

// Exponent of 3 in 3^{dr} / N_r^lb: 0 for d in {0, 1}, r/2 - v_3(r!) for 3/2.
enum class DMode { zero, one, three_halves };
DMode parse_dmode(const std::string& s);
std::string to_string(DMode mode);
ExactRational three_exponent(DMode mode, long r);

// Primes up to a limit with their fixed-point logs, plus prefix sums over the
// primes = 2 (mod 3).
class PrimeLogCache {
 public:
  explicit PrimeLogCache(std::uint64_t limit);
  std::uint64_t limit() const { return limit_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  const std::vector<FixedLog>& logs() const { return logs_; }
  const std::vector<std::uint64_t>& class2() const { return class2_; }
  // Sum of logs of class2()[0..k).
  FixedLog class2_prefix(std::size_t k) const { return {pre_lo_[k], pre_hi_[k]}; }

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> primes_;
  std::vector<FixedLog> logs_;
  std::vector<std::uint64_t> class2_;
  std::vector<std::int64_t> pre_lo_, pre_hi_;
};

// Fixed-point log of the criterion denominator D_{1,3,r}, summing
// criterion_valuation(p) * log p over every prime p <= 3r.
FixedLog log_denominator_direct(long r, const PrimeLogCache& cache);

// Same quantity for consecutive r. Primes above the cube-root region are
// handled through the intervals [(3r+4)/(3A+2), (3r-1)/(3A+1)], whose
// endpoints only move up as r grows; the rest use the criterion directly.
class IncrementalDenominator {
 public:
  IncrementalDenominator(const PrimeLogCache& cache, long a_cap = 1000);
  FixedLog at(long r);

 private:
  const PrimeLogCache& cache_;
  long a_cap_;
  long last_r_ = -1;
  std::vector<std::size_t> lo_idx_, hi_idx_;
};

struct LargeScanOptions {
  long r_min = 1;
  long r_max = 25000;
  DMode mode = DMode::three_halves;
  long a_cap = 1000;
  int jobs = 1;
  long chunk = 0;  // 0: split evenly across jobs
  ExactRational target1 = parse_rational("1.161e39");
  ExactRational target2 = parse_rational("1.176e40");
  ExactRational flag_fraction = parse_rational("0.95");
};

struct LargeScanResult {
  RealInterval max1, max2;  // values, not logs
  long argmax1 = 0, argmax2 = 0;
  bool below1 = false, below2 = false;
  std::vector<long> flagged1, flagged2;
  long rechecked = 0;  // r values re-evaluated exactly to break near-ties
};

// Running maxima of 3^{dr} D_r / (N_r^lb e^{0.911 r}) and of the same times
// (1/3)...(r+1/3)/r!.
LargeScanResult scan_ratio_large(const LargeScanOptions& opt);

}  // namespace irm
