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

#include "irm/ratio_scan.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "irm/denominators.hpp"
#include "irm/sieve.hpp"

namespace irm {

namespace {

std::uint64_t isqrt_u(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

RealInterval fixed_sum_interval(const FixedLog& s, mpfr_prec_t prec) {
  return RealInterval::hull(make_rational(s.lo, kLogScale), make_rational(s.hi, kLogScale), prec);
}

}  // namespace

SmallScanResult scan_ratio_small(const std::vector<ExactInt>& d) {
  if (d.size() < 2) throw DomainError("scan_ratio_small needs r_max >= 1");
  const mpfr_prec_t prec = 128;
  const RealInterval c = log(RealInterval::exact(parse_rational("0.29"), prec));
  const RealInterval log4 = log(RealInterval::exact(4L, prec));
  const RealInterval six = RealInterval::exact(6L, prec);
  std::vector<RealInterval> vals;
  vals.reserve(d.size());
  std::size_t best = 1;
  for (std::size_t r = 1; r < d.size(); ++r) {
    RealInterval rr = RealInterval::exact(static_cast<long>(r), prec);
    RealInterval v = c + RealInterval::exact(2L, prec) * log(RealInterval::exact(d[r], prec)) -
                     log(rr) / six - rr * log4;
    vals.push_back(v);
    if (mpfr_less_p(v.hi(), vals[best - 1].hi())) best = r;
  }
  for (std::size_t r = 1; r < d.size(); ++r) {
    if (r != best && !mpfr_greater_p(vals[r - 1].lo(), vals[best - 1].hi())) {
      throw IndeterminateError("scan_ratio_small: minimum not isolated at r = " + std::to_string(r));
    }
  }
  return {exp(vals[best - 1]), static_cast<long>(best)};
}

SmallScanResult scan_ratio_small(long r_max) {
  std::vector<ExactInt> d(static_cast<std::size_t>(r_max) + 1, ExactInt(1));
  for (long r = 1; r <= r_max; ++r) d[static_cast<std::size_t>(r)] = denom_exact({1, 3, r});
  return scan_ratio_small(d);
}

DMode parse_dmode(const std::string& s) {
  if (s == "0") return DMode::zero;
  if (s == "1") return DMode::one;
  if (s == "3/2" || s == "1.5") return DMode::three_halves;
  throw DomainError("d mode must be 0, 1 or 3/2");
}

std::string to_string(DMode mode) {
  switch (mode) {
    case DMode::zero: return "0";
    case DMode::one: return "1";
    case DMode::three_halves: return "3/2";
  }
  return "?";
}

ExactRational three_exponent(DMode mode, long r) {
  if (mode != DMode::three_halves) return 0;
  // v_3(r!) by Legendre.
  long v = 0;
  for (long q = r / 3; q > 0; q /= 3) v += q;
  return make_rational(ExactInt(r) - 2 * v, ExactInt(2));
}

PrimeLogCache::PrimeLogCache(std::uint64_t limit) : limit_(limit) {
  primes_ = primes_up_to(limit);
  logs_.reserve(primes_.size());
  pre_lo_.push_back(0);
  pre_hi_.push_back(0);
  for (auto p : primes_) {
    FixedLog l = fixed_log(p);
    logs_.push_back(l);
    if (p % 3 == 2) {
      class2_.push_back(p);
      pre_lo_.push_back(pre_lo_.back() + l.lo);
      pre_hi_.push_back(pre_hi_.back() + l.hi);
    }
  }
}

FixedLog log_denominator_direct(long r, const PrimeLogCache& cache) {
  if (static_cast<std::uint64_t>(3 * r) > cache.limit()) throw DomainError("prime cache too small");
  FixedLog s;
  const auto& ps = cache.primes();
  for (std::size_t i = 0; i < ps.size() && ps[i] <= static_cast<std::uint64_t>(3 * r); ++i) {
    long c = criterion_valuation(static_cast<long>(ps[i]), 1, 3, r).count;
    s.lo += c * cache.logs()[i].lo;
    s.hi += c * cache.logs()[i].hi;
  }
  return s;
}

IncrementalDenominator::IncrementalDenominator(const PrimeLogCache& cache, long a_cap)
    : cache_(cache), a_cap_(a_cap) {}

FixedLog IncrementalDenominator::at(long r) {
  if (static_cast<std::uint64_t>(3 * r) > cache_.limit()) throw DomainError("prime cache too small");
  if (r < last_r_) {
    lo_idx_.clear();
    hi_idx_.clear();
  }
  last_r_ = r;
  const auto& c2 = cache_.class2();
  const std::uint64_t tr = 3 * static_cast<std::uint64_t>(r);
  FixedLog sum;
  long A = 0;
  for (; A < a_cap_; ++A) {
    const std::uint64_t den_lo = 3 * A + 2, den_hi = 3 * A + 1;
    const std::uint64_t L = (tr + 4 + den_lo - 1) / den_lo;
    const std::uint64_t U = (tr - 1) / den_hi;
    if (L * L <= tr) break;
    const auto a = static_cast<std::size_t>(A);
    if (a >= lo_idx_.size()) {
      lo_idx_.push_back(std::lower_bound(c2.begin(), c2.end(), L) - c2.begin());
      hi_idx_.push_back(std::upper_bound(c2.begin(), c2.end(), U) - c2.begin());
    } else {
      while (lo_idx_[a] < c2.size() && c2[lo_idx_[a]] < L) ++lo_idx_[a];
      while (hi_idx_[a] < c2.size() && c2[hi_idx_[a]] <= U) ++hi_idx_[a];
    }
    if (hi_idx_[a] > lo_idx_[a]) {
      FixedLog hi = cache_.class2_prefix(hi_idx_[a]);
      FixedLog lo = cache_.class2_prefix(lo_idx_[a]);
      sum.lo += hi.lo - lo.lo;
      sum.hi += hi.hi - lo.hi;
    }
  }
  const std::uint64_t B = A == 0 ? tr : (tr - 1) / (3 * static_cast<std::uint64_t>(A) + 1);
  const std::uint64_t T = std::max(B, isqrt_u(tr));
  const auto& ps = cache_.primes();
  for (std::size_t i = 0; i < ps.size() && ps[i] <= T; ++i) {
    if (ps[i] == 3) continue;
    long c = criterion_valuation(static_cast<long>(ps[i]), 1, 3, r).count;
    sum.lo += c * cache_.logs()[i].lo;
    sum.hi += c * cache_.logs()[i].hi;
  }
  return sum;
}

namespace {

struct Candidate {
  long r;
  double lo, hi;
};

struct Track {
  double best_lo = -INFINITY;
  std::vector<Candidate> cands;
  std::vector<long> flagged;

  void add(long r, const RealInterval& v, double flag_level) {
    double lo = v.lower_double(), hi = v.upper_double();
    if (hi > flag_level) flagged.push_back(r);
    if (hi < best_lo) return;
    if (lo > best_lo) {
      best_lo = lo;
      std::erase_if(cands, [&](const Candidate& c) { return c.hi < best_lo; });
    }
    cands.push_back({r, lo, hi});
  }
};

struct ChunkOut {
  Track t1, t2;
};

struct ScanConstants {
  mpfr_prec_t prec = 128;
  RealInterval ln3, rate;
  double flag1, flag2;
  explicit ScanConstants(const LargeScanOptions& opt)
      : ln3(log(RealInterval::exact(3L, 128))),
        rate(RealInterval::exact(parse_rational("0.911"), 128)) {
    flag1 = log(RealInterval::exact(opt.flag_fraction * opt.target1, 128)).lower_double();
    flag2 = log(RealInterval::exact(opt.flag_fraction * opt.target2, 128)).lower_double();
  }
};

// log((1/3)(4/3)...(r+1/3)/r!) = lnGamma(r+4/3) - lnGamma(1/3) - lnGamma(r+1).
RealInterval log_weight_exact(long r, mpfr_prec_t prec) {
  if (r == 0) return log(RealInterval::exact(make_rational(1, 3), prec));
  RealInterval x = RealInterval::exact(ExactRational(r) + make_rational(4, 3), prec);
  RealInterval third = RealInterval::exact(make_rational(1, 3), prec);
  RealInterval g1(prec), g2(prec), g3(prec);
  int sign;
  // lnGamma increases beyond 1.4617 and decreases on (0, 1.4616).
  mpfr_lgamma(g1.lo(), &sign, x.lo(), MPFR_RNDD);
  mpfr_lgamma(g1.hi(), &sign, x.hi(), MPFR_RNDU);
  mpfr_lgamma(g2.lo(), &sign, third.hi(), MPFR_RNDD);
  mpfr_lgamma(g2.hi(), &sign, third.lo(), MPFR_RNDU);
  mpfr_set_si(g3.lo(), r + 1, MPFR_RNDD);
  mpfr_set_si(g3.hi(), r + 1, MPFR_RNDU);
  mpfr_lgamma(g3.lo(), &sign, g3.lo(), MPFR_RNDD);
  mpfr_lgamma(g3.hi(), &sign, g3.hi(), MPFR_RNDU);
  return g1 - g2 - g3;
}

ChunkOut scan_chunk(const LargeScanOptions& opt, const PrimeLogCache& cache, long r0, long r1) {
  ScanConstants k(opt);
  ChunkOut out;
  IncrementalDenominator inc(cache, opt.a_cap);
  RealInterval w = log_weight_exact(r0 - 1, k.prec);
  for (long r = r0; r <= r1; ++r) {
    w = w + log(RealInterval::exact(make_rational(3 * ExactInt(r) + 1, 3 * ExactInt(r)), k.prec));
    RealInterval v1 = fixed_sum_interval(inc.at(r), k.prec) +
                      RealInterval::exact(three_exponent(opt.mode, r), k.prec) * k.ln3 -
                      k.rate * RealInterval::exact(r, k.prec);
    out.t1.add(r, v1, k.flag1);
    out.t2.add(r, v1 + w, k.flag2);
  }
  return out;
}

RealInterval exact_log_value(const LargeScanOptions& opt, long r, bool weighted) {
  const mpfr_prec_t prec = 256;
  ExactInt d = denom_criterion({1, 3, r});
  RealInterval v = log(RealInterval::exact(d, prec)) +
                   RealInterval::exact(three_exponent(opt.mode, r), prec) * log(RealInterval::exact(3L, prec)) -
                   RealInterval::exact(parse_rational("0.911"), prec) * RealInterval::exact(r, prec);
  if (weighted) v = v + log_weight_exact(r, prec);
  return v;
}

void resolve(const LargeScanOptions& opt, std::vector<Track>& parts, bool weighted,
             const ExactRational& target, RealInterval& max_out, long& arg_out, bool& below,
             std::vector<long>& flagged, long& rechecked) {
  double best_lo = -INFINITY;
  for (auto& t : parts) best_lo = std::max(best_lo, t.best_lo);
  std::vector<long> cands;
  for (auto& t : parts) {
    for (auto& c : t.cands) {
      if (c.hi >= best_lo) cands.push_back(c.r);
    }
    flagged.insert(flagged.end(), t.flagged.begin(), t.flagged.end());
  }
  std::sort(cands.begin(), cands.end());
  std::sort(flagged.begin(), flagged.end());
  std::vector<RealInterval> vals;
  for (long r : cands) vals.push_back(exact_log_value(opt, r, weighted));
  rechecked += static_cast<long>(cands.size());
  std::size_t best = 0;
  for (std::size_t i = 1; i < vals.size(); ++i) {
    if (mpfr_greater_p(vals[i].lo(), vals[best].lo())) best = i;
  }
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i != best && !mpfr_less_p(vals[i].hi(), vals[best].lo())) {
      throw IndeterminateError("scan_ratio_large: maximum not isolated");
    }
  }
  arg_out = cands[best];
  max_out = exp(vals[best]);
  RealInterval lt = log(RealInterval::exact(target, 256));
  auto cmp = less(vals[best], lt);
  if (!cmp) throw IndeterminateError("scan_ratio_large: maximum too close to the target");
  below = *cmp;
}

}  // namespace

LargeScanResult scan_ratio_large(const LargeScanOptions& opt) {
  if (opt.r_min < 1 || opt.r_max < opt.r_min) throw DomainError("scan_ratio_large: bad r range");
  PrimeLogCache cache(3 * static_cast<std::uint64_t>(opt.r_max) + 3);
  const int jobs = std::max(1, opt.jobs);
  const long span = opt.r_max - opt.r_min + 1;
  const long chunk = opt.chunk > 0 ? opt.chunk : (span + jobs - 1) / jobs;
  std::vector<std::pair<long, long>> ranges;
  for (long r = opt.r_min; r <= opt.r_max; r += chunk) {
    ranges.emplace_back(r, std::min(opt.r_max, r + chunk - 1));
  }
  std::vector<ChunkOut> outs(ranges.size());
  std::size_t next = 0;
  while (next < ranges.size()) {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs && next < ranges.size(); ++j, ++next) {
      pool.emplace_back([&, idx = next] {
        outs[idx] = scan_chunk(opt, cache, ranges[idx].first, ranges[idx].second);
      });
    }
    for (auto& t : pool) t.join();
  }
  std::vector<Track> t1, t2;
  for (auto& o : outs) {
    t1.push_back(std::move(o.t1));
    t2.push_back(std::move(o.t2));
  }
  LargeScanResult res;
  resolve(opt, t1, false, opt.target1, res.max1, res.argmax1, res.below1, res.flagged1, res.rechecked);
  resolve(opt, t2, true, opt.target2, res.max2, res.argmax2, res.below2, res.flagged2, res.rechecked);
  return res;
}

}  // namespace irm
