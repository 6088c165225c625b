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

#include <random>

#include "doctest.h"
#include "irm/denominators.hpp"
#include "irm/ratio_scan.hpp"
#include "irm/sieve.hpp"

using namespace irm;

namespace {

std::int64_t brute_vp_product(long n, long m, long p, long u, long v) {
  ExactInt prod = 1;
  for (long j = u; j <= v; ++j) prod *= n * j - m;
  return prod == 0 ? -1 : vp(prod, ExactInt(p));
}

long vpl(const ExactInt& x, long p) { return static_cast<long>(vp(x, ExactInt(p))); }

}  // namespace

TEST_CASE("valuation of products n j - m") {
  CHECK(vp_product(3, 1, 5, 1, 3) == 1);
  CHECK(vp_product(3, 1, 2, 1, 4) == 4);
  CHECK(vp_product(3, 1, 7, 2, 1) == 0);
  CHECK_THROWS_AS(vp_product(3, 1, 3, 1, 5), DomainError);
  std::mt19937_64 rng(17);
  const std::pair<long, long> mn[] = {{1, 3}, {2, 3}, {1, 4}, {3, 4}, {1, 6}, {5, 6}, {2, 7}};
  for (auto [m, n] : mn) {
    for (long p : {2L, 5L, 7L, 11L, 13L}) {
      if (std::gcd(p, n) != 1) continue;
      for (int t = 0; t < 10; ++t) {
        long u = std::uniform_int_distribution<long>(-60, 60)(rng);
        long v = u + std::uniform_int_distribution<long>(0, 80)(rng);
        CHECK(vp_product(n, m, p, u, v) == brute_vp_product(n, m, p, u, v));
      }
    }
  }
}

TEST_CASE("prime-power criterion") {
  CriterionResult c = criterion_valuation(5, 1, 3, 2);
  REQUIRE(c.count == 1);
  CHECK(c.witnesses[0].l == 1);
  CHECK(c.witnesses[0].lower == 2);
  CHECK(c.witnesses[0].upper == 2);
  CHECK(c.witnesses[0].residue == 2);
  CHECK(criterion_valuation(7, 2, 3, 17).count == 2);
  CHECK(criterion_valuation(5, 2, 3, 10).count >= 1);
  CHECK(criterion_valuation(3, 1, 3, 100).count == 0);
  for (auto& w : criterion_valuation(7, 2, 3, 17).witnesses) {
    CHECK(std::gcd(w.l, 3L) == 1);
    CHECK(ExactRational(w.residue) >= w.lower);
    CHECK(ExactRational(w.residue) <= w.upper);
  }
}

TEST_CASE("exact denominators") {
  CHECK(denom_exact({1, 3, 2}) == 5);
  CHECK(denom_exact({1, 3, 13}) == 1334);
  CHECK(denom_exact({1, 3, 0}) == 1);
  CHECK_THROWS_AS(denom_exact({1, 3, 50}, 10), DomainError);
  CHECK(denom_criterion({1, 3, 2}) == 5);
}

TEST_CASE("known divisibility facts") {
  CHECK(denom_criterion({2, 3, 17}) % 49 == 0);
  CHECK(denom_criterion({2, 3, 10}) % 5 == 0);
  CHECK(denom_criterion({1, 3, 42}) % 25 == 0);
  CHECK(denom_criterion({1, 3, 1042}) % 125 == 0);
  CHECK(vpl(denom_criterion({1, 3, 43}), 5) == 1);
  CHECK(denom_exact({2, 3, 17}) % 49 == 0);
  CHECK(vpl(denom_exact({1, 3, 43}), 5) == 1);
}

TEST_CASE("criterion bounds the exact valuations") {
  const std::pair<long, long> mn[] = {{1, 3}, {2, 3}, {1, 4}, {3, 4}, {1, 6}, {5, 6}};
  for (auto [m, n] : mn) {
    for (long r = 1; r <= 200; ++r) {
      DenomReport rep = denom_report({m, n, r});
      CHECK_MESSAGE(rep.bounded(), "m=" << m << " n=" << n << " r=" << r);
      if (m == 1 && n == 3) CHECK(rep.equal());
    }
  }
}

TEST_CASE("numerator gcd") {
  CHECK(numerator_gcd(128, 125, 0) == 1);
  CHECK(numerator_gcd(128, 125, 1) % 3 == 0);
  CHECK(numerator_gcd(9, 8, 2) == 1);
  // 3^r | N_r when 3 || a - b, and 3^{r + v_3(r!)} | N_r when 9 | a - b.
  for (long r = 1; r <= 30; ++r) {
    CHECK(vpl(numerator_gcd(128, 125, r), 3) >= r);
    long v3fact = 0;
    for (long q = r / 3; q > 0; q /= 3) v3fact += q;
    CHECK(vpl(numerator_gcd(1009, 1000, r), 3) >= r + v3fact);
    CHECK(numerator_gcd(128, 125, r) <= ipow(3, static_cast<unsigned long>(r)));
  }
}

TEST_CASE("lemma consistency") {
  CHECK(lemma_consistency({1, 3, 2}).ok);
  CHECK(lemma_consistency({2, 3, 17}).ok);
  CHECK(lemma_consistency({1, 3, 42}).ok);
  const std::pair<long, long> mn[] = {{1, 3}, {2, 3}, {1, 4}, {3, 4}, {1, 6}, {5, 6}, {2, 5}};
  for (auto [m, n] : mn) {
    for (long r = 1; r <= 120; r += 7) {
      LemmaCheck c = lemma_consistency({m, n, r});
      CHECK_MESSAGE(c.ok, (c.failures.empty() ? std::string() : c.failures.front()));
    }
  }
  // The sharper cap at r = 42 and r = 1042 is attained.
  CHECK(vpl(denom_exact({1, 3, 42}), 5) == 2);
}

TEST_CASE("small ratio scan") {
  SmallScanResult one = scan_ratio_small(1);
  CHECK(one.argmin == 1);
  CHECK(one.min_value.contains(parse_rational("0.0725")));
  SmallScanResult s = scan_ratio_small(60);
  CHECK(s.argmin == 13);
  CHECK(s.min_value.lower() >= parse_rational("0.00501"));
  CHECK(s.min_value.upper() <= parse_rational("0.00502"));
}

TEST_CASE("incremental large-prime denominators match direct enumeration") {
  PrimeLogCache cache(15003);
  IncrementalDenominator inc(cache);
  std::mt19937_64 rng(23);
  std::vector<long> rs;
  for (int i = 0; i < 100; ++i) rs.push_back(std::uniform_int_distribution<long>(1, 5000)(rng));
  std::sort(rs.begin(), rs.end());
  for (long r : rs) {
    FixedLog a = inc.at(r), b = log_denominator_direct(r, cache);
    CHECK(a == b);
  }
  // Also every r in a short consecutive run, and an exact cross-check.
  IncrementalDenominator run(cache);
  for (long r = 1; r <= 400; ++r) {
    FixedLog a = run.at(r);
    CHECK(a == log_denominator_direct(r, cache));
    if (r % 50 == 0) {
      RealInterval l = log(RealInterval::exact(denom_exact({1, 3, r}), 128));
      CHECK(l.lower() >= make_rational(a.lo, 1000000));
      CHECK(l.upper() <= make_rational(a.hi, 1000000));
    }
  }
}

TEST_CASE("large ratio scan sanity at small r") {
  LargeScanOptions opt;
  opt.r_max = 10;
  LargeScanResult res = scan_ratio_large(opt);
  // Direct maximum of 3^{r/2 - v3(r!)} D_r / e^{0.911 r} with exact D_r.
  RealInterval best(256);
  long arg = 0;
  for (long r = 1; r <= 10; ++r) {
    RealInterval v = exp(RealInterval::exact(three_exponent(DMode::three_halves, r), 256) *
                             log(RealInterval::exact(3L, 256)) -
                         RealInterval::exact(parse_rational("0.911") * r, 256)) *
                     RealInterval::exact(denom_exact({1, 3, r}), 256);
    if (arg == 0 || mpfr_greater_p(v.lo(), best.lo())) {
      best = v;
      arg = r;
    }
  }
  CHECK(res.argmax1 == arg);
  CHECK(res.max1.lower() <= best.upper());
  CHECK(res.max1.upper() >= best.lower());
  CHECK(res.below1);
  CHECK(res.below2);

  // Chunking does not change the answer.
  LargeScanOptions split = opt;
  split.r_max = 3000;
  LargeScanOptions chunks = split;
  chunks.chunk = 700;
  LargeScanResult a = scan_ratio_large(split), b = scan_ratio_large(chunks);
  CHECK(a.argmax1 == b.argmax1);
  CHECK(a.argmax2 == b.argmax2);
  CHECK(a.max1.lower() == b.max1.lower());
}
