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

#include "doctest.h"
#include "irm/envelope.hpp"
#include "irm/tables.hpp"

using namespace irm;

namespace {

constexpr std::uint64_t kEnd = 300000;

const SieveRun& shared_run() {
  static const SieveRun run = [] {
    SieveConfig c;
    c.x_max = kEnd;
    c.segment = 50000;
    c.block = 100000;
    c.track_ratio = true;
    c.ratio_bucket = 1000;
    return accumulate(c);
  }();
  return run;
}

// theta(n; 3, 2) for every n <= kEnd from trial division and long double logs.
const std::vector<long double>& theta_table() {
  static const std::vector<long double> t = [] {
    std::vector<long double> v(kEnd + 1, 0);
    for (std::uint64_t n = 2; n <= kEnd; ++n) {
      bool prime = true;
      for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
          prime = false;
          break;
        }
      }
      v[n] = v[n - 1] + ((prime && n % 3 == 2) ? std::log(static_cast<long double>(n)) : 0);
    }
    return v;
  }();
  return t;
}

long double oracle_sup(std::uint64_t x) {
  const auto& t = theta_table();
  long double best = 0;
  for (std::uint64_t n = x; n <= kEnd; ++n) best = std::max(best, t[n] / n);
  return best;
}

long double oracle_inf(std::uint64_t x) {
  const auto& t = theta_table();
  long double best = t[kEnd] / kEnd;
  for (std::uint64_t n = x + 1; n <= kEnd; ++n) best = std::min(best, t[n - 1] / n);
  return best;
}

}  // namespace

TEST_CASE("epsilon lookup") {
  CHECK(*epsilon_for(3, 2, 1000000000) == parse_rational("0.0000351"));
  CHECK(*epsilon_for(3, 2, 600000000) == parse_rational("0.0000428"));
  CHECK(*epsilon_for(1, 0, parse_rational("1e10")) == parse_rational("0.0000186"));
  CHECK_FALSE(epsilon_for(3, 2, 99999).has_value());
}

TEST_CASE("envelope matches a brute-force oracle") {
  const Envelope env(*shared_run().ratio);
  const long double tail = 0.5L + env.tail_eps().get_d();
  std::mt19937_64 rng(5);
  std::vector<std::uint64_t> xs = {2, 5, 999, 1000, 1001, 3000, kEnd - 1, kEnd};
  for (int i = 0; i < 40; ++i) xs.push_back(2 + rng() % (kEnd - 2));
  for (auto x : xs) {
    INFO("x = " << x);
    const double sup = env.theta_sup(x).get_d();
    const long double want_sup = std::max(tail, oracle_sup(x));
    CHECK(sup >= want_sup - 1e-15);
    // fixed-point slack: 10^-6 per prime, pi(y)/y < 1/5 here
    CHECK(sup - want_sup < 2e-7);
    const double inf = env.t_minus(x).get_d();
    const long double want_inf = std::min({0.4999649L, 1 - tail, oracle_inf(x)});
    CHECK(inf <= want_inf + 1e-15);
    CHECK(want_inf - inf < 2e-7);
  }
}

TEST_CASE("envelope constants and queries past the data") {
  const Envelope env(*shared_run().ratio);
  for (std::uint64_t x : {2ULL, 100000ULL, 5000000ULL}) {
    CHECK(env.t_plus(x) >= t_plus_floor());
    CHECK(env.t_minus(x) <= t_minus_ceiling());
  }
  CHECK(env.t_plus(kEnd + 1) == ExactRational(1, 2) + parse_rational("0.00217"));
  CHECK_THROWS_AS(env.t_plus(1), DomainError);
}

TEST_CASE("drl exponent sanity") {
  const Envelope env(*shared_run().ratio);
  const auto d0 = drl_exponent(env, 0);
  CHECK(d0.value == 3 * env.t_plus(600000000));
  CHECK(d0.value > ExactRational(3, 2));
  const auto d10 = drl_exponent(env, 10);
  const auto d40 = drl_exponent(env, 40);
  CHECK(d10.value < d0.value);
  CHECK(d40.value < d10.value);
}

TEST_CASE("small-prime bound") {
  const Envelope env(*shared_run().ratio);
  const auto s = small_prime_check(env);
  CHECK(s.below_051);
  CHECK(s.combined_ok);
  CHECK(s.psi_sup >= s.theta_sup);
}
