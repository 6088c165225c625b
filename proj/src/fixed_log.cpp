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

#include "irm/fixed_log.hpp"

#include <mpfr.h>

#include <cmath>

#include "irm/interval.hpp"

namespace irm {

namespace {

// Scratch MPFR values reused across calls on the same thread.
struct LogScratch {
  mpfr_prec_t prec = 0;
  mpfr_t x, lo, hi;
  LogScratch() {
    mpfr_inits2(64, x, lo, hi, static_cast<mpfr_ptr>(nullptr));
    prec = 64;
  }
  ~LogScratch() { mpfr_clears(x, lo, hi, static_cast<mpfr_ptr>(nullptr)); }
  void set_prec(mpfr_prec_t p) {
    if (p == prec) return;
    mpfr_set_prec(x, p);
    mpfr_set_prec(lo, p);
    mpfr_set_prec(hi, p);
    prec = p;
  }
};

thread_local LogScratch scratch;

// Returns true when floor and ceil of 10^6 ln x were pinned down at the
// current precision. x has already been loaded into scratch.x exactly.
bool try_scaled_log(FixedLog& out) {
  // One correctly rounded log: the true value lies in [lo, nextabove(lo)].
  const int inexact = mpfr_log(scratch.lo, scratch.x, MPFR_RNDD);
  mpfr_set(scratch.hi, scratch.lo, MPFR_RNDN);
  if (inexact) mpfr_nextabove(scratch.hi);
  mpfr_mul_ui(scratch.lo, scratch.lo, kLogScale, MPFR_RNDD);
  mpfr_mul_ui(scratch.hi, scratch.hi, kLogScale, MPFR_RNDU);
  mpfr_floor(scratch.lo, scratch.lo);
  mpfr_ceil(scratch.hi, scratch.hi);
  std::int64_t lo = mpfr_get_si(scratch.lo, MPFR_RNDD);
  std::int64_t hi = mpfr_get_si(scratch.hi, MPFR_RNDU);
  if (hi - lo > 1) return false;
  out = {lo, hi};
  return true;
}

template <class Load>
FixedLog scaled_log(Load load) {
  FixedLog out;
  for (mpfr_prec_t p = 64; p <= 4096; p *= 2) {
    scratch.set_prec(p);
    load(scratch.x);
    if (try_scaled_log(out)) {
      scratch.set_prec(64);
      return out;
    }
  }
  scratch.set_prec(64);
  throw IndeterminateError("fixed_log: could not separate 10^6 ln x from an integer");
}

}  // namespace

FixedLog fixed_log(std::uint64_t x) {
  if (x < 2) throw DomainError("fixed_log requires x >= 2");
  return scaled_log([x](mpfr_ptr dst) {
    // Exact for x < 2^64 once the precision is at least 64 bits.
    mpfr_set_ui(dst, x, MPFR_RNDN);
  });
}

FixedLog fixed_log(const ExactInt& x) {
  if (x < 2) throw DomainError("fixed_log requires x >= 2");
  if (x.fits_ulong_p()) return fixed_log(static_cast<std::uint64_t>(x.get_ui()));
  // Rare path for huge x; interval arithmetic keeps it rigorous.
  for (mpfr_prec_t p = 128; p <= 8192; p *= 2) {
    RealInterval v = log(RealInterval::exact(x, p)) * RealInterval::exact(kLogScale, p);
    ExactInt lo = floor(v.lower());
    ExactInt hi = ceil(v.upper());
    if (hi - lo <= 1) return {to_int64(lo), to_int64(hi)};
  }
  throw IndeterminateError("fixed_log: could not separate 10^6 ln x from an integer");
}

}  // namespace irm

namespace irm {

namespace {

int bit_width(std::uint64_t x) { return 64 - __builtin_clzll(x); }

}  // namespace

// 10^6 ln x = 10^6 ln q + 10^6 ln(1 + u) with q an anchor within x/4096 of x,
// ln q from MPFR and ln(1 + u) from five series terms in double. Total error
// stays below 1e-8 (anchor rounding 2^-28 for x < 2^40, final sum 2^-28,
// series and its rounding far smaller), so a value at least 1e-6 away from an
// integer has a certain floor. Anything closer goes through fixed_log.
std::vector<FixedLog> fixed_logs(const std::vector<std::uint64_t>& xs) {
  std::vector<FixedLog> out;
  out.reserve(xs.size());
  mpfr_t t;
  mpfr_init2(t, 128);
  std::uint64_t anchor = 0;
  double anchor_log = 0;
  for (std::uint64_t x : xs) {
    if (x < 4096 || x >= (std::uint64_t{1} << 40)) {
      out.push_back(fixed_log(x));
      continue;
    }
    const int shift = bit_width(x) - 12;
    const std::uint64_t q = ((x >> shift) << shift) + (std::uint64_t{1} << (shift - 1));
    if (q != anchor) {
      anchor = q;
      mpfr_set_ui(t, q, MPFR_RNDN);
      mpfr_log(t, t, MPFR_RNDN);
      mpfr_mul_ui(t, t, kLogScale, MPFR_RNDN);
      anchor_log = mpfr_get_d(t, MPFR_RNDN);
    }
    const double u = (static_cast<double>(x) - static_cast<double>(q)) / static_cast<double>(q);
    const double series = u * (1.0 - u * (0.5 - u * (1.0 / 3 - u * (0.25 - u * 0.2))));
    const double v = anchor_log + 1e6 * series;
    const double fl = std::floor(v);
    if (v - fl < 1e-6 || fl + 1 - v < 1e-6) {
      out.push_back(fixed_log(x));
      continue;
    }
    const auto lo = static_cast<std::int64_t>(fl);
    out.push_back({lo, lo + 1});
  }
  mpfr_clear(t);
  return out;
}

}  // namespace irm
