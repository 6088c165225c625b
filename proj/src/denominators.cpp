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

#include "irm/denominators.hpp"

#include <numeric>
#include <sstream>

#include "irm/sieve.hpp"

namespace irm {

namespace {

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

long inverse_mod(long a, long n) {
  // n is tiny (at most a few dozen), so a linear search is fine.
  a = mod(a, n);
  for (long x = 1; x < n; ++x) {
    if (mod(a * x, n) == 1) return x;
  }
  throw DomainError("no modular inverse");
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Smallest k in [1, q] with k n = m (mod q).
long k_index(long n, long m, long q) {
  ExactInt inv, nn = n, qq = q;
  mpz_invert(inv.get_mpz_t(), nn.get_mpz_t(), qq.get_mpz_t());
  ExactInt k = (inv * m) % qq;
  if (k <= 0) k += qq;
  return k.get_si();
}

long criterion_l(long p_pow_mod_n, long m, long n) {
  return mod(-m * inverse_mod(p_pow_mod_n, n), n);
}

}  // namespace

std::int64_t vp_product(long n, long m, long p, long u, long v) {
  if (m <= 0 || m >= n) throw DomainError("vp_product needs 0 < m < n");
  if (std::gcd(m, n) != 1 || std::gcd(p, n) != 1) {
    throw DomainError("vp_product needs gcd(m, n) = gcd(p, n) = 1");
  }
  if (u > v) return 0;
  const long limit = n * std::max(std::labs(u), std::labs(v)) + m;
  std::int64_t total = 0;
  for (long q = p; q <= limit; ) {
    long k = k_index(n, m, q);
    total += floor_div(v - k, q) - floor_div(u - 1 - k, q);
    if (q > limit / p) break;
    q *= p;
  }
  return total;
}

CriterionResult criterion_valuation(long p, long m, long n, long r) {
  CriterionResult out;
  if (std::gcd(p, n) != 1 || r <= 0) return out;
  const long nr = n * r;
  long i = 1;
  for (long q = p; q <= nr; ++i) {
    long l = criterion_l(mod(q, n), m, n);
    long res = r % q;
    if (l >= 1 && n * res >= l * q + m && n * res <= (n - l) * q - m - n) {
      out.count++;
      out.witnesses.push_back({i, l, make_rational(ExactInt(l) * q + m, ExactInt(n)),
                               make_rational(ExactInt(n - l) * q - m - n, ExactInt(n)), res});
    }
    if (q > nr / p) break;
    q *= p;
  }
  return out;
}

ExactInt denom_exact(const HGParams& params, long cap) {
  validate(params);
  if (params.r > cap) {
    throw DomainError("denom_exact: r exceeds the cap " + std::to_string(cap) +
                      "; use denom_criterion for larger r");
  }
  ExactInt d = 1;
  const RatPoly y = y_poly(params);
  for (const auto& c : y.coeffs()) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  }
  return d;
}

ExactInt denom_criterion(const HGParams& params) {
  validate(params);
  ExactInt d = 1;
  if (params.r == 0) return d;
  for (auto p : primes_up_to(static_cast<std::uint64_t>(params.n * params.r))) {
    long c = criterion_valuation(static_cast<long>(p), params.m, params.n, params.r).count;
    if (c > 0) d *= ipow(ExactInt(static_cast<unsigned long>(p)), static_cast<unsigned long>(c));
  }
  return d;
}

bool DenomReport::bounded() const {
  for (const auto& [p, v] : valuations) {
    if (v.first > v.second) return false;
  }
  return true;
}

DenomReport denom_report(const HGParams& params) {
  DenomReport rep;
  rep.params = params;
  rep.d_exact = denom_exact(params);
  rep.d_criterion = denom_criterion(params);
  if (params.r == 0) return rep;
  for (auto p : primes_up_to(static_cast<std::uint64_t>(params.n * params.r))) {
    ExactInt pp = static_cast<unsigned long>(p);
    long ve = static_cast<long>(vp(rep.d_exact, pp));
    long vc = static_cast<long>(vp(rep.d_criterion, pp));
    if (ve || vc) rep.valuations[static_cast<long>(p)] = {ve, vc};
  }
  return rep;
}

ExactInt numerator_gcd(const ExactInt& a, const ExactInt& b, long r) {
  if (!(0 < b && b < a)) throw DomainError("numerator_gcd needs 0 < b < a");
  RatPoly s = substitute_affine(x_poly({1, 3, r}), make_rational(a - b, a));
  ExactInt g = 0;
  for (const auto& c : s.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  return g;
}

namespace {

// Some A >= 0 with lo_num/(nA + lo_off) <= p <= hi_num/(nA + hi_off).
bool in_some_interval(long p, long n, long lo_num, long lo_off, long hi_num, long hi_off) {
  // The upper end shrinks as A grows, so stop once it drops below p.
  for (long A = 0; p * (n * A + hi_off) <= hi_num; ++A) {
    if (p * (n * A + lo_off) >= lo_num) return true;
  }
  return false;
}

bool pow_le(long p, long e, long bound) {
  long v = 1;
  for (long k = 0; k < e; ++k) {
    if (v > bound / p) return false;
    v *= p;
  }
  return v <= bound;
}

}  // namespace

LemmaCheck lemma_consistency(const HGParams& params) {
  validate(params);
  LemmaCheck out;
  const long m = params.m, n = params.n, r = params.r;
  if (r == 0) return out;
  const long nr = n * r;
  const bool special = m == 1 && (n == 3 || n == 4 || n == 6);
  ExactInt d = denom_exact(params);
  auto fail = [&](const std::string& s) {
    out.ok = false;
    out.failures.push_back(s);
  };
  for (auto pu : primes_up_to(static_cast<std::uint64_t>(nr))) {
    const long p = static_cast<long>(pu);
    const long v = static_cast<long>(vp(d, ExactInt(p)));
    std::ostringstream tag;
    tag << "(" << m << "," << n << "," << r << ") p=" << p << " v=" << v;
    const bool big = p * p > nr;
    long l = std::gcd(p, n) == 1 ? criterion_l(mod(p, n), m, n) : 0;
    if (v > 0) {
      if (!pow_le(p, v, nr)) fail(tag.str() + ": exceeds cap p^v <= nr");
      if (big) {
        if (v != 1) fail(tag.str() + ": large prime with p^2 | D");
        if (!(2 * l < n) ||
            !in_some_interval(p, n, nr + m + n, n - l, nr - m, l)) {
          fail(tag.str() + ": large prime outside every interval");
        }
      }
      if (special) {
        if (mod(p, n) != n - 1) fail(tag.str() + ": divisor not = n-1 mod n");
        if (!pow_le(p, 2 * v - 1, nr)) fail(tag.str() + ": exceeds cap p^(2v-1) <= nr");
        if (p * p * p > nr) {
          if (v != 1) fail(tag.str() + ": prime above cube root with p^2 | D");
          if (!in_some_interval(p, n, nr + n + 1, n - 1, nr - 1, 1)) {
            fail(tag.str() + ": prime above cube root outside every interval");
          }
        }
      }
    } else if (std::gcd(p, n) == 1) {
      // Converse statements: these primes must divide D.
      if (p * p > nr + m && 2 * l < n && in_some_interval(p, n, nr + m + n, n - l, nr - m, l)) {
        fail(tag.str() + ": interval prime missing from D");
      }
      if (special && p * p > nr + 1 && mod(p, n) == n - 1 &&
          in_some_interval(p, n, nr + n + 1, n - 1, nr - 1, 1)) {
        fail(tag.str() + ": interval prime missing from D");
      }
    }
  }
  if (!special && (n == 3 || n == 4 || n == 6)) {
    out.notes.push_back("congruence checks skipped: they are stated for m = 1 only");
  }
  return out;
}

}  // namespace irm
