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

#include <optional>
#include <string>
#include <vector>

#include "irm/cubic_cf.hpp"
#include "irm/interval.hpp"
#include "irm/numeric.hpp"

namespace irm {

enum class MeasureStatus { measure, liouville_fallback, inapplicable };
std::string to_string(MeasureStatus s);

// d as twice its value: 0, 2 or 3.
int twice_d(const ExactInt& a, const ExactInt& b);

// |(a/b)^(1/3) - p/q| > 1 / (c1 |q|^(kappa+1)) with
//   E = e^-0.911 3^d (sqrt a - sqrt b)^-2,  Q = e^0.911 3^-d (sqrt a + sqrt b)^2,
//   kappa = log Q / log E,  c1 = 10^(40 (kappa+1)) a.
// c1_no_a drops the factor a. kappa and c1 are only meaningful when E > 1.
struct MeasureParams {
  ExactInt a, b;
  int d2 = 0;
  RealInterval E, Q, kappa, c1, c1_no_a, k0, l0;
  MeasureStatus status = MeasureStatus::inapplicable;
};
MeasureParams theorem_params(const ExactInt& a, const ExactInt& b, mpfr_prec_t prec = 256);

// 3^d e^-0.911 (sqrt a + sqrt b) / (b (sqrt a - sqrt b)) maximized over
// 1 <= b < a <= a_max with E > 1 and kappa < 2.
struct ExtremalResult {
  RealInterval value;
  long a = 0, b = 0;
  long feasible = 0;
  long interval_checks = 0;  // pairs the double prefilter could not settle
  bool below_limit = true;   // every feasible pair certified < 1.822
  bool a_below_2b = true;    // every feasible pair has a < 2b
};
ExtremalResult extremal_scan(long a_max);

enum class ScalingCase { direct, scale_i, scale_ii, none };
std::string to_string(ScalingCase c);
// scale_i when a/(b n) = (s/t)^3, scale_ii when a n / b = (s/t)^3; direct is
// scale_i with s = t = 1.
struct Scaling {
  ScalingCase kind = ScalingCase::none;
  ExactInt s, t;
};
Scaling classify_scaling(long n, const ExactInt& a, const ExactInt& b);

// Constant C in |n^(1/3) - p/q| > 1 / (C |q|^(kappa+1)):
//   case i:  s c1 t^kappa,  case ii: s c1 t^kappa (n^(1/3) + 1/2)^kappa / n^(1/3).
RealInterval scaled_constant(long n, const MeasureParams& params, const Scaling& sc, bool with_a = true);

// Corollary check |n^(1/3) - p/q| > c2 / q^(kappa_t + 1) for every p/q.
// Past Q1 = (c2 C)^(1/(kappa_t - kappa)) the theorem suffices; below it only
// convergents can fail (c2 < 1/2), and each is settled by the gap bound or,
// failing that, by a direct interval evaluation.
struct CorollaryRecord {
  long n = 0;
  ExactInt a, b;
  Scaling scaling;
  ExactRational c2, kappa_table;
  RealInterval kappa, C, Q1, Q2;
  long convergents_checked = 0;
  long direct_checks = 0;
  long argmax = -1;
  ExactInt max_quotient;
  std::size_t q_digits = 0;  // digits of the last denominator reached
  bool pass = false;
  std::string detail;
};
struct CorollaryOptions {
  long max_terms = 20000;
  bool with_a = true;
};
CorollaryRecord corollary_verify(long n, const ExactInt& a, const ExactInt& b, const ExactRational& c2,
                                 const ExactRational& kappa_table, const CorollaryOptions& opt = {});
// Same, with kappa_t = kappa + gap in place of a tabulated value.
CorollaryRecord corollary_verify_gap(long n, const ExactInt& a, const ExactInt& b, const ExactRational& c2,
                                     const ExactRational& gap, const CorollaryOptions& opt = {});

// Best (a, b) from convergents p/q of n^(1/3): a/b = (p/q)^3/n or its
// reciprocal, whichever exceeds 1; smallest kappa among measure pairs.
struct Candidate {
  ExactInt a, b;
  ExactInt p, q;
  long index = 0;
  double kappa = 0;
};
std::optional<Candidate> candidate_search(long n, long max_terms);

// p_r = a^r D_r / N_r X_r(b/a), q_r = a^r D_r / N_r Y_r(b/a), with X, Y for
// (m, n) = (1, 3). Throws InvariantError when either is not an integer.
struct ApproxPair {
  ExactInt p, q, D, N;
};
ApproxPair approx_pair(const ExactInt& a, const ExactInt& b, long r);

struct BoundCheck {
  bool lower_ok = false, upper_ok = false;
};
// D_r/N_r (a+b)^r <= q_r < 1.161e39 Q^r.
BoundCheck qest_check(const ExactInt& a, const ExactInt& b, long r, const ApproxPair& pq);
// (a-b)/(200 a q_r) < |q_r (a/b)^(1/3) - p_r| < 1.176e40 (a-b)/b (e^0.911 3^-d (sqrt a - sqrt b)^2)^r.
BoundCheck remainder_check(const ExactInt& a, const ExactInt& b, long r, const ApproxPair& pq);

// kappa = log Q / log E and c = 2 k0 (2 l0 E)^kappa.
struct KappaLemma {
  RealInterval kappa, c;
};
KappaLemma kappa_lemma(const RealInterval& k0, const RealInterval& l0, const RealInterval& E,
                       const RealInterval& Q);

// ceil(10^4 (kappa + log10(c2 C) / digits)): the exponent that the measure
// yields once q exceeds 10^digits, rounded up at the 4th decimal.
struct TableKappa {
  ExactInt ceil_1e4;   // lower candidate; equals the upper when decided
  ExactInt ceil_1e4_hi;
  RealInterval kappa_plus;
};
TableKappa table_kappa(const RealInterval& kappa, const RealInterval& C, const ExactRational& c2,
                       long digits = 257000);

}  // namespace irm
