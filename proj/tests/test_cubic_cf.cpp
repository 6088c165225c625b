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

#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "irm/cubic_cf.hpp"
#include "irm/interval.hpp"

using namespace irm;

namespace {

std::vector<long> as_longs(const std::vector<ExactInt>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

std::vector<ExactInt> rational_cf(ExactInt p, ExactInt q) {
  std::vector<ExactInt> out;
  while (q != 0) {
    ExactInt a;
    mpz_fdiv_q(a.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    out.push_back(a);
    ExactInt r = p - a * q;
    p = q;
    q = r;
  }
  return out;
}

// Quotients of n^(1/3) from s/10^k < n^(1/3) < (s+1)/10^k: both endpoints
// share the quotients of every number between them, except possibly the
// last common one.
std::vector<ExactInt> oracle_cf(long n, unsigned digits) {
  const ExactInt scale = ipow(10, digits);
  ExactInt big = n * ipow(10, 3 * digits), s;
  mpz_root(s.get_mpz_t(), big.get_mpz_t(), 3);
  const auto lo = rational_cf(s, scale), hi = rational_cf(s + 1, scale);
  std::vector<ExactInt> out;
  for (std::size_t i = 0; i < std::min(lo.size(), hi.size()) && lo[i] == hi[i]; ++i) out.push_back(lo[i]);
  if (!out.empty()) out.pop_back();
  return out;
}

}  // namespace

TEST_CASE("initial states") {
  CHECK_THROWS_AS(init(8), DomainError);
  CHECK_THROWS_AS(init(0), DomainError);
  CHECK_THROWS_AS(init_ratio(250, 16), DomainError);  // 125/8
  auto s = init(2);
  CHECK(next_quotient(s) == 1);
  auto r = init_ratio(128, 125);
  CHECK(next_quotient(r) == 1);
  auto small = init_ratio(1, 2);
  CHECK(next_quotient(small) == 0);
  CHECK(next_quotient(small) == 1);  // 2^(1/3) = 1.2599...
}

TEST_CASE("cube root of 2 prefix") {
  auto s = init(2);
  CHECK(as_longs(quotients(s, 18)) ==
        std::vector<long>{1, 3, 1, 5, 1, 1, 4, 1, 1, 8, 1, 14, 1, 10, 2, 1, 4, 12});
  auto m = start_max_scan(init(2));
  run_max_scan(m, 20);
  CHECK(m.argmax == 11);
  CHECK(m.max_value == 14);
}

TEST_CASE("first 1000 quotients agree with an integer-root oracle") {
  for (long n : {2, 3, 5, 7, 10}) {
    INFO("n = " << n);
    const auto want = oracle_cf(n, 3000);
    REQUIRE(want.size() >= 1000);
    auto s = init(n);
    const auto got = quotients(s, 1000);
    CHECK(std::equal(got.begin(), got.end(), want.begin()));
  }
}

TEST_CASE("convergents") {
  const auto c = convergents({1, 3, 1});
  CHECK(c[1].p == 4);
  CHECK(c[1].q == 3);
  CHECK(c[2].p == 5);
  CHECK(c[2].q == 4);
  auto s = init(3);
  const auto a = quotients(s, 1000);
  const auto cv = convergents(a);
  for (std::size_t i = 1; i < cv.size(); ++i) {
    const ExactInt det = cv[i].p * cv[i - 1].q - cv[i - 1].p * cv[i].q;
    CHECK(det == (i % 2 == 1 ? 1 : -1));
    if (i >= 2) CHECK(cv[i].q > cv[i - 1].q);
  }
}

TEST_CASE("gap sandwich for the first 200 convergents") {
  CHECK(gap_lower_bound({4, 3, 1}, 1) == make_rational(1, 27));
  for (long n : {2, 3, 5}) {
    auto s = init(n);
    const auto a = quotients(s, 202);
    const auto cv = convergents(a);
    const RealInterval alpha = cube_root(ExactRational(n), 2000);
    for (std::size_t i = 0; i <= 200; ++i) {
      const RealInterval err = abs(alpha - RealInterval::exact(make_rational(cv[i].p, cv[i].q), 2000));
      const ExactRational lower = gap_lower_bound(cv[i], a[i + 1]);
      const ExactRational upper = make_rational(1, a[i + 1] * cv[i].q * cv[i].q);
      CHECK(lower < upper);
      CHECK(greater(err, lower) == std::optional<bool>(true));
      CHECK(less(err, upper) == std::optional<bool>(true));
    }
  }
}

TEST_CASE("first quotient of (a/b)^(1/3) is at least floor(3b/(a-b))") {
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 50) {
    const long b = 100 + static_cast<long>(rng() % 1000000);
    const long a = b + 1 + static_cast<long>(rng() % static_cast<long>(std::sqrt(b)));
    // E > 1 with the smallest power of 3: (sqrt a + sqrt b)^2 > e^0.911 (a - b)^2.
    const double e = std::pow(std::sqrt(a) + std::sqrt(b), 2) * std::exp(-0.911) / std::pow(a - b, 2.0);
    if (e < 1.001 || exact_cube_root(make_rational(a, b))) continue;
    auto s = init_ratio(a, b);
    CHECK(next_quotient(s) == 1);
    CHECK(next_quotient(s) >= (3 * b) / (a - b));
    ++checked;
  }
}

TEST_CASE("largest quotient of the cube root of 3 up to 14000") {
  auto m = start_max_scan(init(3));
  run_max_scan(m, 14000);
  CHECK(m.argmax == 13628);
  CHECK(m.max_value == 738358);
}

TEST_CASE("checkpoint round trip resumes identically") {
  auto direct = start_max_scan(init(5));
  run_max_scan(direct, 3000);
  auto part = start_max_scan(init(5));
  run_max_scan(part, 1200);
  std::stringstream buf;
  save_checkpoint(buf, part);
  auto resumed = load_checkpoint(buf);
  run_max_scan(resumed, 3000);
  CHECK(resumed.state.c == direct.state.c);
  CHECK(resumed.q_cur == direct.q_cur);
  CHECK(resumed.argmax == direct.argmax);
  std::stringstream bad("cubic-cf-checkpoint v0\n");
  CHECK_THROWS_AS(load_checkpoint(bad), DomainError);
}
