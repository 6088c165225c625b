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

#include "irm/envelope.hpp"

#include <algorithm>
#include <cmath>

#include "irm/fixed_log.hpp"
#include "irm/sieve.hpp"
#include "irm/tables.hpp"

namespace irm {

namespace {

bool ratio_greater(const RatioPoint& a, const RatioPoint& b) {
  return static_cast<__int128>(a.f) * b.y > static_cast<__int128>(b.f) * a.y;
}

ExactRational as_ratio(std::int64_t f, std::uint64_t y) {
  return make_rational(ExactInt(static_cast<long>(f)), ExactInt(std::to_string(y)) * kLogScale);
}

ExactRational as_ratio(const RatioPoint& p) { return as_ratio(p.f, p.y); }

struct Step {
  std::uint64_t y;
  FixedLog f;
  bool prime;
};

// Prime powers of the class 2 mod 3 in (lo, hi], in increasing order.
std::vector<Step> class_steps(std::uint64_t lo, std::uint64_t hi) {
  std::vector<Step> out;
  std::vector<std::uint64_t> primes = sieve_segment(lo, hi, {});
  std::vector<std::uint64_t> kept;
  for (auto p : primes) {
    if (p % 3 == 2) kept.push_back(p);
  }
  const auto logs = fixed_logs(kept);
  for (std::size_t i = 0; i < kept.size(); ++i) out.push_back({kept[i], logs[i], true});
  for (auto p : primes_up_to(static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 1)) {
    if (p * p > hi) break;
    for (std::uint64_t q = p * p;; q *= p) {
      if (q > lo && q % 3 == 2) out.push_back({q, fixed_log(p), false});
      if (q > hi / p) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const Step& a, const Step& b) { return a.y < b.y; });
  return out;
}

}  // namespace

Envelope::Envelope(const RatioTrack& track) : track_(track) {
  if (track_.x_end < 100000) throw DomainError("envelope needs sieve data to at least 10^5");
  tail_eps_ = *epsilon_for(3, 2, ExactRational(ExactInt(std::to_string(track_.x_end))));
  const std::size_t nb = track_.buckets.size();
  suffix_sup_.assign(nb + 1, RatioPoint{});
  suffix_inf_.assign(nb + 1, RatioPoint{});
  suffix_psi_.assign(nb + 1, RatioPoint{});
  for (std::size_t b = nb; b-- > 0;) {
    const RatioBucket& k = track_.buckets[b];
    suffix_sup_[b] = k.sup_theta;
    suffix_inf_[b] = k.inf_theta;
    suffix_psi_[b] = k.sup_psi;
    if (b + 1 < nb) {
      if (ratio_greater(suffix_sup_[b + 1], suffix_sup_[b])) suffix_sup_[b] = suffix_sup_[b + 1];
      if (ratio_greater(suffix_inf_[b], suffix_inf_[b + 1])) suffix_inf_[b] = suffix_inf_[b + 1];
      if (ratio_greater(suffix_psi_[b + 1], suffix_psi_[b])) suffix_psi_[b] = suffix_psi_[b + 1];
    }
  }
}

Envelope::Partial Envelope::partial(std::uint64_t x) const {
  const std::uint64_t b = (x - 1) / track_.bucket;
  const RatioBucket& k = track_.buckets.at(b);
  const std::uint64_t lo = b * track_.bucket;
  const std::uint64_t hi = std::min(lo + track_.bucket, track_.x_end);
  std::int64_t th_lo = k.start_lo, th_hi = k.start_hi, ps_hi = k.start_psi_hi;
  const auto steps = class_steps(lo, hi);
  std::size_t i = 0;
  for (; i < steps.size() && steps[i].y <= x; ++i) {
    if (steps[i].prime) {
      th_lo += steps[i].f.lo;
      th_hi += steps[i].f.hi;
    }
    ps_hi += steps[i].f.hi;
  }
  RatioPoint sup{th_hi, x}, psi{ps_hi, x}, inf{};
  auto lower = [&](RatioPoint c) {
    if (inf.y == 0 || ratio_greater(inf, c)) inf = c;
  };
  for (; i < steps.size(); ++i) {
    const Step& s = steps[i];
    if (s.prime) {
      lower({th_lo, s.y});
      th_lo += s.f.lo;
      th_hi += s.f.hi;
      if (ratio_greater({th_hi, s.y}, sup)) sup = {th_hi, s.y};
    }
    ps_hi += s.f.hi;
    if (ratio_greater({ps_hi, s.y}, psi)) psi = {ps_hi, s.y};
  }
  lower({th_lo, hi});
  return {as_ratio(sup), as_ratio(inf), as_ratio(psi)};
}

ExactRational Envelope::theta_sup(std::uint64_t x) const {
  if (x < 2) throw DomainError("envelope query below 2");
  ExactRational out = ExactRational(1, 2) + tail_eps_;
  if (x > track_.x_end) return out;
  const std::uint64_t b = (x - 1) / track_.bucket;
  out = std::max(out, partial(x).theta_sup);
  if (b + 1 < track_.buckets.size()) out = std::max(out, as_ratio(suffix_sup_[b + 1]));
  return out;
}

ExactRational Envelope::psi_sup(std::uint64_t x) const {
  if (x < 2) throw DomainError("envelope query below 2");
  ExactRational out = ExactRational(1, 2) + tail_eps_;
  if (x > track_.x_end) return out;
  const std::uint64_t b = (x - 1) / track_.bucket;
  out = std::max(out, partial(x).psi_sup);
  if (b + 1 < track_.buckets.size()) out = std::max(out, as_ratio(suffix_psi_[b + 1]));
  return out;
}

ExactRational Envelope::t_plus(std::uint64_t x) const { return std::max(t_plus_floor(), theta_sup(x)); }

ExactRational Envelope::t_minus(std::uint64_t x) const {
  if (x < 2) throw DomainError("envelope query below 2");
  ExactRational out = std::min(t_minus_ceiling(), ExactRational(ExactRational(1, 2) - tail_eps_));
  if (x > track_.x_end) return out;
  const std::uint64_t b = (x - 1) / track_.bucket;
  out = std::min(out, partial(x).theta_inf);
  if (b + 1 < track_.buckets.size()) out = std::min(out, as_ratio(suffix_inf_[b + 1]));
  return out;
}

DrlResult drl_exponent(const Envelope& env, int n_terms, std::uint64_t x) {
  if (n_terms < 0) throw DomainError("negative term count");
  DrlResult out;
  for (int a = 0; a <= n_terms; ++a) {
    const std::uint64_t d = 3 * static_cast<std::uint64_t>(a) + 1;
    out.plus_sum += env.t_plus(x / d) / d;
  }
  for (int a = 0; a < n_terms; ++a) {
    const std::uint64_t d = 3 * static_cast<std::uint64_t>(a) + 2;
    out.minus_sum += env.t_minus(x / d) / d;
  }
  out.value = 3 * (out.plus_sum - out.minus_sum);
  return out;
}

SmallPrimeCheck small_prime_check(const Envelope& env, std::uint64_t from) {
  SmallPrimeCheck out;
  out.theta_sup = env.theta_sup(from);
  out.psi_sup = env.psi_sup(from);
  const ExactRational bound(51, 100);
  out.below_051 = out.theta_sup < bound && out.psi_sup < bound;
  out.combined_ok = out.below_051 && ExactRational(3, 2) * bound + bound < make_rational(128, 100);
  return out;
}

}  // namespace irm
