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

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "irm/fixed_log.hpp"
#include "irm/interval.hpp"
#include "irm/numeric.hpp"

namespace irm {

// Residue classes (k, l) for k in {1, 3, 4, 6}, every l in [0, k).
inline constexpr int kNumClasses = 14;
int class_index(int k, int l);
int class_modulus(int idx);
int class_residue(int idx);
int euler_phi(int k);
bool coprime_class(int idx);

// A candidate for the normalized deviation (f(y) - y/phi(k)) / sqrt(y),
// stored exactly as N / (10^6 phi sqrt(y)) with N = phi F - 10^6 y where F
// is a fixed-point sum. n uses the conservative sum for its direction
// (upper sum for a maximum, lower sum for a minimum), n_alt the other one.
struct DevPoint {
  std::int64_t n = 0;
  std::int64_t n_alt = 0;
  std::uint64_t y = 0;  // 0 while unset
  bool left_limit = false;  // value as y' -> y from below
  bool set() const { return y != 0; }
};

// Compares N1/sqrt(y1) with N2/sqrt(y2) exactly: -1, 0 or 1.
int compare_normalized(std::int64_t n1, std::uint64_t y1, std::int64_t n2, std::uint64_t y2);

struct ClassStats {
  std::int64_t theta_lo = 0, theta_hi = 0, psi_lo = 0, psi_hi = 0;
  std::uint64_t pi_count = 0;    // primes in the class so far
  std::uint64_t psi_terms = 0;   // prime powers (including primes) so far
  DevPoint min_theta, max_theta, min_psi, max_psi;
};

struct BlockStats {
  std::uint64_t block_index = 0;  // block i covers (size*(i-1), size*i]
  std::uint64_t lo = 0, hi = 0;
  std::array<ClassStats, kNumClasses> cls{};
};

// theta(y; 3, 2) and psi(y; 3, 2) ratio extrema per bucket (b R, (b+1) R],
// kept for the t+/t- envelope. Ratios are F / (10^6 y) with F a fixed sum.
struct RatioPoint {
  std::int64_t f = 0;
  std::uint64_t y = 0;
};
struct RatioBucket {
  std::int64_t start_lo = 0, start_hi = 0;  // theta(b R) sums
  std::int64_t start_psi_hi = 0;
  RatioPoint sup_theta, inf_theta, sup_psi;
};
struct RatioTrack {
  std::uint64_t bucket = 10000;
  std::uint64_t x_end = 0;
  std::vector<RatioBucket> buckets;
};

struct SieveConfig {
  std::uint64_t x_max = 1000000000;
  std::uint64_t segment = 10000000;
  std::uint64_t block = 100000000;
  int jobs = 1;
  bool track_ratio = false;
  std::uint64_t ratio_bucket = 10000;
};

struct SieveRun {
  SieveConfig config;
  std::vector<BlockStats> blocks;
  std::optional<RatioTrack> ratio;
};

// Throws DomainError on invalid sizes or when 10^6 psi(x_max) could overflow.
void validate(const SieveConfig& c);

// Sieves (0, x_max] and accumulates theta/psi for all classes with fixed-point
// logs, one BlockStats per block.
SieveRun accumulate(const SieveConfig& c);

// Fixed column order; deviations scaled by 10^6 and rounded outward, "NA"
// for classes with gcd(l, k) > 1.
void write_block_tsv(std::ostream& out, const SieveRun& run, const std::vector<int>& moduli);

// Lossless text form of a run, so checks can be repeated without sieving.
// Header "irm-sieve-run v1"; load throws DomainError on a malformed file.
void save_run(std::ostream& out, const SieveRun& run);
SieveRun load_run(std::istream& in);

// Enclosure of theta(y; k, l) (or psi) at prec bits from a fresh sieve;
// left_limit excludes y itself. Cost is linear in y.
RealInterval class_sum(int k, int l, std::uint64_t y, bool left_limit, bool psi, mpfr_prec_t prec);

enum class Verdict { pass, fail, indeterminate };
std::string to_string(Verdict v);

struct SqrtBoundResult {
  Verdict verdict = Verdict::pass;
  std::uint64_t worst_y = 0;
  double worst_value = 0;  // largest |deviation|/sqrt(y), refined when possible
  std::string worst_kind;  // "theta" or "psi"
  int refined = 0;         // extrema that needed class_sum
};

// max_{y <= x_max} |f(y; k, l) - y/phi(k)| / sqrt(y) <= c for f = theta, psi.
// Block extrema that the fixed-point sums cannot decide are recomputed with
// class_sum up to 512 bits before giving up as indeterminate.
SqrtBoundResult verify_sqrt_bound(const SieveRun& run, int k, int l, const ExactRational& c);

// (c/eps)^2 <= x0 exactly.
bool crossover_check(const ExactRational& c, const ExactRational& eps, const ExactRational& x0);

}  // namespace irm
