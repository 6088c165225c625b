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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "irm/hypergeom.hpp"
#include "irm/numeric.hpp"

namespace irm {

// v_p(prod_{j=u}^{v} (n j - m)) by counting, for each i, the j in [u, v]
// with n j = m (mod p^i). Empty when u > v.
std::int64_t vp_product(long n, long m, long p, long u, long v);

struct CriterionWitness {
  long i = 0;
  long l = 0;
  // (l p^i + m)/n <= r mod p^i <= ((n-l) p^i - m - n)/n
  ExactRational lower;
  ExactRational upper;
  long residue = 0;
};

struct CriterionResult {
  long count = 0;
  std::vector<CriterionWitness> witnesses;
};

// Number of i with p^i <= n r satisfying the prime-power criterion.
// Primes dividing n never divide the denominator and give count 0.
CriterionResult criterion_valuation(long p, long m, long n, long r);

inline constexpr long kDefaultDenomCap = 5000;

// LCM of the denominators of y_poly(params).
ExactInt denom_exact(const HGParams& params, long cap = kDefaultDenomCap);
// prod over primes p <= n r of p^{criterion_valuation}.
ExactInt denom_criterion(const HGParams& params);

struct DenomReport {
  HGParams params;
  ExactInt d_exact;
  ExactInt d_criterion;
  // prime -> (v_exact, v_criterion)
  std::map<long, std::pair<long, long>> valuations;
  bool equal() const { return d_exact == d_criterion; }
  bool bounded() const;
};
DenomReport denom_report(const HGParams& params);

// N_r: gcd of the numerators of X_{1,3,r}(1 - (a-b) z / a).
ExactInt numerator_gcd(const ExactInt& a, const ExactInt& b, long r);

struct LemmaCheck {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

// Valuation caps and large-prime structure of D_{m,n,r} checked against
// the exact denominator.
LemmaCheck lemma_consistency(const HGParams& params);

}  // namespace irm
