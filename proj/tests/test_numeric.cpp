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
#include "irm/fixed_log.hpp"
#include "irm/interval.hpp"
#include "irm/numeric.hpp"

using namespace irm;

namespace {

// ln x for rational x > 0 via 2 atanh((x-1)/(x+1)); returns [lo, hi] with
// the truncated tail bounded by a geometric series. Converges fast only for
// x near 1.
std::pair<ExactRational, ExactRational> atanh_log(const ExactRational& x, int terms) {
  ExactRational u = (x - 1) / (x + 1);
  ExactRational u2 = u * u;
  ExactRational pw = u, sum = 0;
  for (int k = 0; k < terms; ++k) {
    sum += pw / (2 * k + 1);
    pw *= u2;
  }
  ExactRational tail = abs(pw) / (1 - u2);
  return {2 * (sum - tail), 2 * (sum + tail)};
}

// ln x = k ln 2 + ln(x / 2^k) with x / 2^k in [1, 2).
std::pair<ExactRational, ExactRational> ln_oracle(const ExactRational& x, int terms) {
  ExactRational y = x;
  long k = 0;
  while (y >= 2) {
    y /= 2;
    ++k;
  }
  auto [l2lo, l2hi] = atanh_log(2, terms);
  auto [ylo, yhi] = atanh_log(y, terms);
  return {k * l2lo + ylo, k * l2hi + yhi};
}

// floor(x^(1/3) * 10^digits) for integer x, by integer root.
ExactInt scaled_cbrt(const ExactInt& x, unsigned digits) {
  ExactInt big = x * ipow(10, 3 * digits), out;
  mpz_root(out.get_mpz_t(), big.get_mpz_t(), 3);
  return out;
}

}  // namespace

TEST_CASE("vp of integers and rationals") {
  CHECK(vp(ExactInt(80), ExactInt(5)) == 1);
  CHECK(vp(make_rational(14, 5), ExactInt(5)) == -1);
  CHECK(vp(ExactInt(1), ExactInt(7)) == 0);
  CHECK(vp(ExactInt(-96), ExactInt(2)) == 5);
}

TEST_CASE("vp is additive on random rationals") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(1, 1000000);
  for (int i = 0; i < 200; ++i) {
    ExactRational x = make_rational(dist(rng), dist(rng));
    ExactRational y = make_rational(-dist(rng), dist(rng));
    for (long p : {2L, 3L, 5L, 7L, 101L}) {
      CHECK(vp(ExactRational(x * y), ExactInt(p)) == vp(x, ExactInt(p)) + vp(y, ExactInt(p)));
    }
  }
}

TEST_CASE("decimal parsing is exact") {
  CHECK(parse_rational("2.052818") == make_rational(2052818, 1000000));
  CHECK(parse_rational("12.2e9") == ExactRational(12200000000L));
  CHECK(parse_rational("1.161e39") == ExactRational(ExactInt(1161) * ipow(10, 36)));
  CHECK(parse_rational("-3/6") == make_rational(-1, 2));
  CHECK(to_string(parse_rational("0.25")) == "1/4");
  CHECK_THROWS_AS(parse_rational("1.2.3"), DomainError);
  ExactInt big("123456789012345678901234567890", 10);
  CHECK(parse_int(to_string(big)) == big);
  CHECK(to_string(ExactInt(0)) == "0");
}

TEST_CASE("cube roots") {
  RealInterval r8 = cube_root(ExactRational(8), 64);
  CHECK(r8.is_point());
  CHECK(r8.contains(2));

  // 2^(1/3) and (128/125)^(1/3) against an integer-root oracle at 200 digits.
  ExactInt s = scaled_cbrt(2, 200);
  ExactRational lo = make_rational(s, ipow(10, 200)), hi = make_rational(s + 1, ipow(10, 200));
  RealInterval c2 = cube_root(ExactRational(2), 64);
  CHECK(c2.lower() <= hi);
  CHECK(c2.upper() >= lo);
  CHECK(c2.width() < 1e-18);

  ExactInt t = scaled_cbrt(128 * ipow(125, 2), 200);  // (128/125)^(1/3) = cbrt(128*125^2)/125
  ExactRational lo2 = make_rational(t, 125 * ipow(10, 200));
  ExactRational hi2 = make_rational(t + 1, 125 * ipow(10, 200));
  RealInterval c3 = cube_root(make_rational(128, 125), 64);
  CHECK(c3.lower() <= hi2);
  CHECK(c3.upper() >= lo2);
  CHECK(c3.mid_double() == doctest::Approx(1.0079368399158985).epsilon(1e-15));
}

TEST_CASE("cube root enclosures contain x and shrink with precision") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(1, 100000);
  for (int i = 0; i < 50; ++i) {
    ExactRational x = make_rational(dist(rng), dist(rng));
    RealInterval prev = cube_root(x, 64);
    CHECK(pow(prev, 3).contains(x));
    for (mpfr_prec_t p : {128, 256}) {
      RealInterval cur = cube_root(x, p);
      CHECK(pow(cur, 3).contains(x));
      CHECK(cur.lower() >= prev.lower());
      CHECK(cur.upper() <= prev.upper());
      prev = cur;
    }
  }
}

TEST_CASE("fixed_log golden values") {
  CHECK(fixed_log(2ULL) == FixedLog{693147, 693148});
  CHECK(fixed_log(3ULL) == FixedLog{1098612, 1098613});
  CHECK(fixed_log(1000000ULL) == FixedLog{13815510, 13815511});
  CHECK_THROWS_AS(fixed_log(1ULL), DomainError);
  CHECK(fixed_log(ExactInt("100000000000000000000000000000", 10)).hi ==
        fixed_log(ExactInt("100000000000000000000000000000", 10)).lo + 1);
}

TEST_CASE("fixed_log agrees with a series oracle") {
  for (std::uint64_t x : {2ULL, 5ULL, 7ULL, 97ULL, 1000003ULL, 999999937ULL}) {
    auto [lo, hi] = ln_oracle(ExactRational(ExactInt(static_cast<unsigned long>(x))), 400);
    FixedLog f = fixed_log(x);
    CHECK(ExactRational(f.lo) <= lo * 1000000);
    CHECK(ExactRational(f.hi) >= hi * 1000000);
    CHECK(f.hi - f.lo == 1);
  }
}

TEST_CASE("fixed_log is monotone and sums stay within the term count") {
  FixedLog prev = fixed_log(2ULL);
  std::int64_t slo = prev.lo, shi = prev.hi;
  std::int64_t n = 1;
  for (std::uint64_t x = 3; x < 20000; ++x, ++n) {
    FixedLog f = fixed_log(x);
    CHECK(f.lo >= prev.lo);
    CHECK(f.hi >= prev.hi);
    slo += f.lo;
    shi += f.hi;
    prev = f;
  }
  CHECK(shi - slo <= n);
}

TEST_CASE("interval arithmetic and decisions") {
  RealInterval a = RealInterval::exact(make_rational(1, 3), 64);
  RealInterval b = RealInterval::exact(make_rational(-2, 7), 64);
  CHECK((a * b).contains(make_rational(-2, 21)));
  CHECK((a / b).contains(make_rational(-7, 6)));
  CHECK((a - b).contains(make_rational(13, 21)));
  CHECK_THROWS_AS(a / (b - b), IndeterminateError);
  CHECK(less(a, ExactRational(1)) == std::optional<bool>(true));

  // sqrt(2)^2 vs 2 can never be decided; the policy must give up.
  auto never = [](mpfr_prec_t p) -> std::optional<bool> {
    RealInterval s = sqrt(RealInterval::exact(2L, p));
    return less(s * s, ExactRational(2));
  };
  CHECK_THROWS_AS(decide(never, RefinePolicy{64, 3}), IndeterminateError);

  // e^{0.911} is separated from 2.4868 quickly.
  bool gt = decide([](mpfr_prec_t p) -> std::optional<bool> {
    return greater(exp(RealInterval::exact(parse_rational("0.911"), p)), parse_rational("2.4867"));
  });
  CHECK(gt);
}

TEST_CASE("batched fixed logs agree with the scalar path") {
  std::mt19937_64 rng(11);
  std::vector<std::uint64_t> xs;
  for (std::uint64_t x = 2; x < 20000; ++x) xs.push_back(x);
  for (int i = 0; i < 100000; ++i) xs.push_back(2 + rng() % ((std::uint64_t{1} << 41) - 2));
  const auto fast = fixed_logs(xs);
  REQUIRE(fast.size() == xs.size());
  std::size_t bad = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) bad += !(fast[i] == fixed_log(xs[i]));
  CHECK(bad == 0);
}
