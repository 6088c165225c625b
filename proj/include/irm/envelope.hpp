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

#include "irm/chebyshev.hpp"
#include "irm/numeric.hpp"

namespace irm {

// t+(x) = max(1/2 + 351/10^7, sup_{y >= x} theta(y; 3, 2)/y) and
// t-(x) = min(1/2 - 351/10^7, inf_{y >= x} theta(y; 3, 2)/y). Within the
// sieved range the sup/inf come from the ratio track (upper sums for sup,
// lower sums for inf); beyond it theta(y; 3, 2)/y lies within 1/2 +- eps
// with eps the tabulated epsilon valid past the end of the data.
class Envelope {
 public:
  explicit Envelope(const RatioTrack& track);

  ExactRational t_plus(std::uint64_t x) const;
  ExactRational t_minus(std::uint64_t x) const;
  // sup_{y >= x} theta(y; 3, 2)/y and psi(y; 3, 2)/y without the constants.
  ExactRational theta_sup(std::uint64_t x) const;
  ExactRational psi_sup(std::uint64_t x) const;

  std::uint64_t data_end() const { return track_.x_end; }
  const ExactRational& tail_eps() const { return tail_eps_; }

 private:
  struct Partial {
    ExactRational theta_sup, theta_inf, psi_sup;
  };
  // Extrema over [x, end of x's bucket] by re-sieving that bucket.
  Partial partial(std::uint64_t x) const;

  const RatioTrack& track_;
  ExactRational tail_eps_;
  // Suffix extrema over buckets b, b+1, ...
  std::vector<RatioPoint> suffix_sup_, suffix_inf_, suffix_psi_;
};

inline const ExactRational& t_plus_floor() {
  static const ExactRational v(5000351, 10000000);
  return v;
}
inline const ExactRational& t_minus_ceiling() {
  static const ExactRational v(4999649, 10000000);
  return v;
}

// 3 (sum_{A=0}^{N} t+(X/(3A+1))/(3A+1) - sum_{A=0}^{N-1} t-(X/(3A+2))/(3A+2))
// with X = 6*10^8. Arguments are rounded down to integers, which can only
// raise t+ and lower t-, so the result is an exact upper bound.
struct DrlResult {
  ExactRational value;
  ExactRational plus_sum, minus_sum;
};
DrlResult drl_exponent(const Envelope& env, int n_terms = 200, std::uint64_t x = 600000000);

// sup over y >= 3000 of theta(y; 3, 2)/y and psi(y; 3, 2)/y, and whether
// both stay below 0.51 so that 1.5 * 0.51 + 0.51 < 1.28.
struct SmallPrimeCheck {
  ExactRational theta_sup, psi_sup;
  bool below_051 = false;
  bool combined_ok = false;
};
SmallPrimeCheck small_prime_check(const Envelope& env, std::uint64_t from = 3000);

}  // namespace irm
