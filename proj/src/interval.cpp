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

#include "irm/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace irm {

RealInterval::RealInterval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const RealInterval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

RealInterval& RealInterval::operator=(const RealInterval& other) {
  if (this != &other) {
    prec_ = other.prec_;
    mpfr_set_prec(lo_, prec_);
    mpfr_set_prec(hi_, prec_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

RealInterval& RealInterval::operator=(RealInterval&& other) noexcept {
  std::swap(prec_, other.prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

RealInterval::~RealInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

RealInterval RealInterval::exact(const ExactRational& x, mpfr_prec_t prec) {
  RealInterval out(prec);
  mpfr_set_q(out.lo_, x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, x.get_mpq_t(), MPFR_RNDU);
  return out;
}

RealInterval RealInterval::exact(const ExactInt& x, mpfr_prec_t prec) {
  RealInterval out(prec);
  mpfr_set_z(out.lo_, x.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(out.hi_, x.get_mpz_t(), MPFR_RNDU);
  return out;
}

RealInterval RealInterval::exact(long x, mpfr_prec_t prec) {
  RealInterval out(prec);
  mpfr_set_si(out.lo_, x, MPFR_RNDD);
  mpfr_set_si(out.hi_, x, MPFR_RNDU);
  return out;
}

RealInterval RealInterval::hull(const ExactRational& lo, const ExactRational& hi,
                                mpfr_prec_t prec) {
  if (lo > hi) throw DomainError("interval hull with lo > hi");
  RealInterval out(prec);
  mpfr_set_q(out.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return out;
}

ExactRational RealInterval::lower() const {
  ExactRational q;
  mpfr_get_q(q.get_mpq_t(), lo_);
  return q;
}

ExactRational RealInterval::upper() const {
  ExactRational q;
  mpfr_get_q(q.get_mpq_t(), hi_);
  return q;
}

double RealInterval::mid_double() const {
  return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

bool RealInterval::contains(const ExactRational& x) const {
  return mpfr_cmp_q(lo_, x.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, x.get_mpq_t()) >= 0;
}

bool RealInterval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

double RealInterval::width() const {
  mpfr_t w;
  mpfr_init2(w, 53);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double out = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return out;
}

std::string RealInterval::str(int digits) const {
  std::vector<char> a(digits + 64), b(digits + 64);
  mpfr_snprintf(a.data(), a.size(), "%.*RDe", digits - 1, lo_);
  mpfr_snprintf(b.data(), b.size(), "%.*RUe", digits - 1, hi_);
  return "[" + std::string(a.data()) + ", " + std::string(b.data()) + "]";
}

namespace {

mpfr_prec_t joint(const RealInterval& a, const RealInterval& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
  RealInterval out(joint(a, b));
  mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
  RealInterval out(joint(a, b));
  mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return out;
}

RealInterval operator-(const RealInterval& a) {
  RealInterval out(a.prec_);
  mpfr_neg(out.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, a.lo_, MPFR_RNDU);
  return out;
}

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
  mpfr_prec_t prec = joint(a, b);
  RealInterval out(prec);
  // Nonnegative fast path covers almost every use.
  if (mpfr_sgn(a.lo_) >= 0 && mpfr_sgn(b.lo_) >= 0) {
    mpfr_mul(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return out;
  }
  const __mpfr_struct* xs[2] = {a.lo_, a.hi_};
  const __mpfr_struct* ys[2] = {b.lo_, b.hi_};
  mpfr_t t;
  mpfr_init2(t, prec);
  bool first = true;
  for (auto* x : xs) {
    for (auto* y : ys) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, out.lo_)) mpfr_set(out.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, out.hi_)) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return out;
}

RealInterval operator/(const RealInterval& a, const RealInterval& b) {
  if (b.contains_zero()) throw IndeterminateError("interval division by an interval containing 0");
  mpfr_prec_t prec = joint(a, b);
  RealInterval inv(prec);
  // 1/b is monotone decreasing on either sign branch.
  mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
  return a * inv;
}

RealInterval abs(const RealInterval& x) {
  if (mpfr_sgn(x.lo()) >= 0) return x;
  if (mpfr_sgn(x.hi()) <= 0) return -x;
  RealInterval out(x.precision());
  mpfr_set_zero(out.lo(), 1);
  mpfr_neg(out.hi(), x.lo(), MPFR_RNDU);
  if (mpfr_greater_p(x.hi(), out.hi())) mpfr_set(out.hi(), x.hi(), MPFR_RNDU);
  return out;
}

RealInterval sqrt(const RealInterval& x) {
  if (mpfr_sgn(x.lo()) < 0) throw DomainError("sqrt of an interval with negative part");
  RealInterval out(x.precision());
  mpfr_sqrt(out.lo(), x.lo(), MPFR_RNDD);
  mpfr_sqrt(out.hi(), x.hi(), MPFR_RNDU);
  return out;
}

RealInterval cbrt(const RealInterval& x) {
  RealInterval out(x.precision());
  mpfr_cbrt(out.lo(), x.lo(), MPFR_RNDD);
  mpfr_cbrt(out.hi(), x.hi(), MPFR_RNDU);
  return out;
}

RealInterval root(const RealInterval& x, unsigned long k) {
  if (k == 0) throw DomainError("zeroth root");
  if (mpfr_sgn(x.lo()) < 0) throw DomainError("root of an interval with negative part");
  RealInterval out(x.precision());
  mpfr_rootn_ui(out.lo(), x.lo(), k, MPFR_RNDD);
  mpfr_rootn_ui(out.hi(), x.hi(), k, MPFR_RNDU);
  return out;
}

RealInterval log(const RealInterval& x) {
  if (mpfr_sgn(x.lo()) <= 0) {
    throw IndeterminateError("log of an interval not bounded away from 0");
  }
  RealInterval out(x.precision());
  mpfr_log(out.lo(), x.lo(), MPFR_RNDD);
  mpfr_log(out.hi(), x.hi(), MPFR_RNDU);
  return out;
}

RealInterval exp(const RealInterval& x) {
  RealInterval out(x.precision());
  mpfr_exp(out.lo(), x.lo(), MPFR_RNDD);
  mpfr_exp(out.hi(), x.hi(), MPFR_RNDU);
  return out;
}

RealInterval pow(const RealInterval& x, unsigned long k) {
  if (k == 0) return RealInterval::exact(1L, x.precision());
  if (mpfr_sgn(x.lo()) >= 0) {
    RealInterval out(x.precision());
    mpfr_pow_ui(out.lo(), x.lo(), k, MPFR_RNDD);
    mpfr_pow_ui(out.hi(), x.hi(), k, MPFR_RNDU);
    return out;
  }
  RealInterval out = RealInterval::exact(1L, x.precision());
  RealInterval base = x;
  while (k) {
    if (k & 1) out = out * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return out;
}

RealInterval pow(const RealInterval& x, const RealInterval& y) { return exp(y * log(x)); }

RealInterval max(const RealInterval& a, const RealInterval& b) {
  RealInterval out(joint(a, b));
  mpfr_max(out.lo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(out.hi(), a.hi(), b.hi(), MPFR_RNDU);
  return out;
}

RealInterval min(const RealInterval& a, const RealInterval& b) {
  RealInterval out(joint(a, b));
  mpfr_min(out.lo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(out.hi(), a.hi(), b.hi(), MPFR_RNDU);
  return out;
}

RealInterval cube_root(const ExactRational& x, mpfr_prec_t prec) {
  if (x <= 0) throw DomainError("cube_root of a nonpositive rational");
  if (auto r = exact_cube_root(x)) return RealInterval::exact(*r, prec);
  // A few guard bits keep the relative width under 2^-prec.
  return cbrt(RealInterval::exact(x, prec + 4));
}

std::optional<bool> less(const RealInterval& a, const RealInterval& b) {
  if (mpfr_less_p(a.hi(), b.lo())) return true;
  if (mpfr_greaterequal_p(a.lo(), b.hi())) return false;
  return std::nullopt;
}

std::optional<bool> less(const RealInterval& a, const ExactRational& b) {
  if (mpfr_cmp_q(a.hi(), b.get_mpq_t()) < 0) return true;
  if (mpfr_cmp_q(a.lo(), b.get_mpq_t()) >= 0) return false;
  return std::nullopt;
}

std::optional<bool> greater(const RealInterval& a, const ExactRational& b) {
  if (mpfr_cmp_q(a.lo(), b.get_mpq_t()) > 0) return true;
  if (mpfr_cmp_q(a.hi(), b.get_mpq_t()) <= 0) return false;
  return std::nullopt;
}

}  // namespace irm
