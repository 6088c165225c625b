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

#include <mpfr.h>

#include <optional>
#include <string>
#include <type_traits>
#include <utility>

#include "irm/numeric.hpp"

namespace irm {

// Closed interval [lo, hi] with MPFR endpoints. Every operation rounds the
// lower endpoint toward -inf and the upper endpoint toward +inf, so the
// result always encloses the exact value of the operation applied to any
// points of the operands.
class RealInterval {
 public:
  explicit RealInterval(mpfr_prec_t prec = 64);
  RealInterval(const RealInterval& other);
  RealInterval(RealInterval&& other) noexcept;
  RealInterval& operator=(const RealInterval& other);
  RealInterval& operator=(RealInterval&& other) noexcept;
  ~RealInterval();

  static RealInterval exact(const ExactRational& x, mpfr_prec_t prec);
  static RealInterval exact(const ExactInt& x, mpfr_prec_t prec);
  static RealInterval exact(long x, mpfr_prec_t prec);
  static RealInterval hull(const ExactRational& lo, const ExactRational& hi, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }
  const __mpfr_struct* lo() const { return lo_; }
  const __mpfr_struct* hi() const { return hi_; }
  __mpfr_struct* lo() { return lo_; }
  __mpfr_struct* hi() { return hi_; }

  // Exact values of the endpoints.
  ExactRational lower() const;
  ExactRational upper() const;
  double lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_double() const;

  bool contains(const ExactRational& x) const;
  bool contains_zero() const;
  bool is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }
  bool positive() const { return mpfr_sgn(lo_) > 0; }
  bool negative() const { return mpfr_sgn(hi_) < 0; }
  // Upper bound on hi - lo.
  double width() const;

  // Decimal rendering "[lo, hi]" with the given number of significant digits,
  // rounded outward.
  std::string str(int digits = 20) const;

  friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator*(const RealInterval& a, const RealInterval& b);
  // Throws IndeterminateError when b contains zero.
  friend RealInterval operator/(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator-(const RealInterval& a);

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

RealInterval abs(const RealInterval& x);
RealInterval sqrt(const RealInterval& x);
RealInterval cbrt(const RealInterval& x);
// k-th root of a nonnegative interval.
RealInterval root(const RealInterval& x, unsigned long k);
RealInterval log(const RealInterval& x);
RealInterval exp(const RealInterval& x);
RealInterval pow(const RealInterval& x, unsigned long k);
// x^y for x > 0, via exp(y log x).
RealInterval pow(const RealInterval& x, const RealInterval& y);
RealInterval max(const RealInterval& a, const RealInterval& b);
RealInterval min(const RealInterval& a, const RealInterval& b);

// Enclosure of x^(1/3) for rational x > 0. Perfect cubes give a point.
RealInterval cube_root(const ExactRational& x, mpfr_prec_t prec);

// Three-valued comparisons: nullopt means the intervals overlap.
std::optional<bool> less(const RealInterval& a, const RealInterval& b);
std::optional<bool> less(const RealInterval& a, const ExactRational& b);
std::optional<bool> greater(const RealInterval& a, const ExactRational& b);

struct RefinePolicy {
  mpfr_prec_t start_bits = 64;
  int max_doublings = 16;
};

// Calls f(prec) with prec = start, 2*start, ... until it returns a value.
// f returns std::optional<T>; an empty result asks for more precision.
template <class F>
auto decide(F&& f, RefinePolicy policy = {}, const char* what = "comparison")
    -> typename std::invoke_result_t<F&, mpfr_prec_t>::value_type {
  mpfr_prec_t prec = policy.start_bits;
  for (int i = 0; i <= policy.max_doublings; ++i, prec *= 2) {
    if (auto out = f(prec)) return *std::move(out);
  }
  throw IndeterminateError(std::string("undecided after refinement cap: ") + what);
}

}  // namespace irm
