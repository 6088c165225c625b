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

#include "irm/measures.hpp"

#include <cmath>

#include "irm/denominators.hpp"
#include "irm/hypergeom.hpp"

namespace irm {

namespace {

RealInterval iv(long x, mpfr_prec_t prec) { return RealInterval::exact(x, prec); }
RealInterval iv(const ExactInt& x, mpfr_prec_t prec) { return RealInterval::exact(x, prec); }
RealInterval iv(const ExactRational& x, mpfr_prec_t prec) { return RealInterval::exact(x, prec); }

RealInterval e911(mpfr_prec_t prec) { return exp(iv(make_rational(911, 1000), prec)); }

// 3^(d2/2).
RealInterval three_pow_d(int d2, mpfr_prec_t prec) { return pow(sqrt(iv(3L, prec)), static_cast<unsigned long>(d2)); }

RealInterval log10(const RealInterval& x) { return log(x) / log(iv(10L, x.precision())); }

// (sqrt a - sqrt b) without cancellation.
RealInterval sqrt_gap(const ExactInt& a, const ExactInt& b, mpfr_prec_t prec) {
  return iv(ExactInt(a - b), prec) / (sqrt(iv(a, prec)) + sqrt(iv(b, prec)));
}

// Decides x > y for a rational y, refining through make(prec).
template <class Make>
bool decide_greater(Make make, const ExactRational& y, mpfr_prec_t start, const char* what) {
  return decide([&](mpfr_prec_t prec) { return greater(make(prec), y); }, {start, 12}, what);
}

}  // namespace

std::string to_string(MeasureStatus s) {
  switch (s) {
    case MeasureStatus::measure: return "measure";
    case MeasureStatus::liouville_fallback: return "liouville_fallback";
    default: return "inapplicable";
  }
}

std::string to_string(ScalingCase c) {
  switch (c) {
    case ScalingCase::direct: return "direct";
    case ScalingCase::scale_i: return "scale_i";
    case ScalingCase::scale_ii: return "scale_ii";
    default: return "none";
  }
}

int twice_d(const ExactInt& a, const ExactInt& b) {
  const ExactInt t = a - b;
  if (t == 0) throw DomainError("d undefined for a = b");
  const auto v = vp(t, ExactInt(3));
  return v == 0 ? 0 : (v == 1 ? 2 : 3);
}

MeasureParams theorem_params(const ExactInt& a, const ExactInt& b, mpfr_prec_t prec) {
  if (!(0 < b && b < a)) throw DomainError("theorem_params needs 0 < b < a");
  MeasureParams out;
  out.a = a;
  out.b = b;
  out.d2 = twice_d(a, b);
  auto build_eq = [&](mpfr_prec_t p) {
    const RealInterval e = e911(p), t = three_pow_d(out.d2, p);
    const RealInterval gap = sqrt_gap(a, b, p);
    const RealInterval sum = sqrt(iv(a, p)) + sqrt(iv(b, p));
    return std::pair{t / (e * gap * gap), e / t * sum * sum};
  };
  const bool e_above_one = decide_greater([&](mpfr_prec_t p) { return build_eq(p).first; }, 1, prec, "E > 1");
  bool kappa_below_two = false;
  if (e_above_one) {
    // kappa < 2 iff Q < E^2.
    kappa_below_two = decide_greater(
        [&](mpfr_prec_t p) {
          auto [E, Q] = build_eq(p);
          return E * E - Q;
        },
        0, prec, "kappa < 2");
  }
  auto [E, Q] = build_eq(prec);
  out.E = E;
  out.Q = Q;
  out.k0 = iv(parse_rational("1.161e39"), prec);
  out.l0 = iv(ExactRational(parse_rational("1.176e40") * make_rational(a - b, b)), prec);
  if (!e_above_one) {
    out.status = MeasureStatus::inapplicable;
    return out;
  }
  out.kappa = log(Q) / log(E);
  out.c1_no_a = pow(iv(10L, prec), iv(40L, prec) * (out.kappa + iv(1L, prec)));
  out.c1 = out.c1_no_a * iv(a, prec);
  out.status = kappa_below_two ? MeasureStatus::measure : MeasureStatus::liouville_fallback;
  return out;
}

ExtremalResult extremal_scan(long a_max) {
  ExtremalResult out;
  const long double ln3 = std::log(3.0L), e911d = std::exp(-0.911L);
  long double best = -1;
  const mpfr_prec_t prec = 128;
  auto f_interval = [](long a, long b, mpfr_prec_t p) {
    const int d2 = twice_d(a, b);
    const RealInterval gap = sqrt_gap(a, b, p);
    const RealInterval sum = sqrt(iv(a, p)) + sqrt(iv(b, p));
    return three_pow_d(d2, p) / e911(p) * sum / (iv(b, p) * gap);
  };
  const ExactRational limit = make_rational(1822, 1000);
  for (long a = 2; a <= a_max; ++a) {
    for (long b = 1; b < a; ++b) {
      const int d2 = twice_d(a, b);
      const long double d = d2 / 2.0L;
      const long double sum = std::sqrt(static_cast<long double>(a)) + std::sqrt(static_cast<long double>(b));
      const long double gap = (a - b) / sum;
      const long double three_d = std::exp(d * ln3);
      // E > 1: gap^2 < 3^d e^-0.911; kappa < 2: sum^2 gap^4 < 3^(3d) e^-2.733.
      const long double g1 = gap * gap / (three_d * e911d);
      const long double g2 = sum * sum * gap * gap * gap * gap / (three_d * three_d * three_d * std::exp(-2.733L));
      if (g1 > 1 + 1e-12L || g2 > 1 + 1e-12L) continue;
      bool feasible = g1 < 1 - 1e-12L && g2 < 1 - 1e-12L;
      if (!feasible) {
        ++out.interval_checks;
        feasible = theorem_params(a, b, prec).status == MeasureStatus::measure;
        if (!feasible) continue;
      }
      ++out.feasible;
      if (a >= 2 * b) out.a_below_2b = false;
      const long double f = three_d * e911d * sum / (b * gap);
      if (f > 1.822L * (1 - 1e-12L)) {
        ++out.interval_checks;
        if (!decide_greater([&](mpfr_prec_t p) { return iv(limit, p) - f_interval(a, b, p); }, 0, prec,
                            "extremal value < 1.822")) {
          out.below_limit = false;
        }
      }
      if (f > best) {
        best = f;
        out.a = a;
        out.b = b;
      }
    }
  }
  if (out.a != 0) out.value = f_interval(out.a, out.b, prec);
  return out;
}

Scaling classify_scaling(long n, const ExactInt& a, const ExactInt& b) {
  if (n < 2) throw DomainError("n must be at least 2");
  if (auto st = exact_cube_root(make_rational(a, b * n))) {
    const bool direct = st->get_num() == 1 && st->get_den() == 1;
    return {direct ? ScalingCase::direct : ScalingCase::scale_i, st->get_num(), st->get_den()};
  }
  if (auto st = exact_cube_root(make_rational(a * n, b))) {
    return {ScalingCase::scale_ii, st->get_num(), st->get_den()};
  }
  return {};
}

RealInterval scaled_constant(long n, const MeasureParams& params, const Scaling& sc, bool with_a) {
  if (params.status != MeasureStatus::measure) throw DomainError("scaled constant needs a measure");
  if (sc.kind == ScalingCase::none) throw DomainError("(a, b) does not scale to the cube root of n");
  const mpfr_prec_t prec = params.kappa.precision();
  const RealInterval& k = params.kappa;
  RealInterval C = iv(sc.s, prec) * (with_a ? params.c1 : params.c1_no_a) * pow(iv(sc.t, prec), k);
  if (sc.kind == ScalingCase::scale_ii) {
    const RealInterval cn = cube_root(ExactRational(n), prec);
    C = C * pow(cn + iv(make_rational(1, 2), prec), k) / cn;
  }
  return C;
}

namespace {

// |n^(1/3) - p/q| > c2 / q^(kt + 1), decided by refinement.
bool direct_convergent_check(long n, const ExactInt& p, const ExactInt& q, const ExactRational& c2,
                             const ExactRational& kt) {
  const mpfr_prec_t start = 128 + 4 * static_cast<mpfr_prec_t>(mpz_sizeinbase(q.get_mpz_t(), 2));
  return decide_greater(
      [&](mpfr_prec_t prec) {
        const RealInterval err = abs(cube_root(ExactRational(n), prec) - iv(make_rational(p, q), prec));
        return err - iv(c2, prec) / pow(iv(q, prec), iv(ExactRational(kt + 1), prec));
      },
      0, start, "direct convergent check");
}

CorollaryRecord verify_impl(long n, const ExactInt& a, const ExactInt& b, const ExactRational& c2,
                            std::optional<ExactRational> kappa_table, const ExactRational& gap,
                            const CorollaryOptions& opt) {
  CorollaryRecord rec;
  rec.n = n;
  rec.a = a;
  rec.b = b;
  rec.c2 = c2;
  const MeasureParams params = theorem_params(a, b);
  rec.scaling = classify_scaling(n, a, b);
  if (params.status != MeasureStatus::measure) {
    rec.detail = "theorem gives no measure below the Liouville exponent for this (a, b)";
    return rec;
  }
  if (rec.scaling.kind == ScalingCase::none) {
    rec.detail = "(a, b) does not scale to the cube root of n";
    return rec;
  }
  const mpfr_prec_t prec = 256;
  rec.kappa = params.kappa;
  if (!kappa_table) {
    // Smallest 6-decimal value >= kappa + gap.
    kappa_table = make_rational(ceil(ExactRational((params.kappa.upper() + gap) * 1000000)), 1000000);
  }
  rec.kappa_table = *kappa_table;
  const ExactRational& kt = *kappa_table;
  if (!(c2 > 0 && 2 * c2 < 1)) {
    rec.detail = "c2 must lie in (0, 1/2)";
    return rec;
  }
  if (!(params.kappa.upper() < kt)) {
    rec.detail = "kappa_table must exceed kappa";
    return rec;
  }
  rec.C = scaled_constant(n, params, rec.scaling, opt.with_a);
  rec.Q1 = pow(iv(c2, prec) * rec.C, iv(1L, prec) / (iv(kt, prec) - params.kappa));
  // Denominators past Q1 (upper end) are covered by the theorem.
  const ExactInt q1_cap = ceil(rec.Q1.upper());

  CubicCFState s = init(n);
  ExactInt a_cur = next_quotient(s);  // a_0
  ExactInt p2 = 0, q2 = 1, p1 = 1, q1 = 0;
  const RealInterval kt_minus_one = iv(ExactRational(kt - 1), prec);
  for (long i = 0;; ++i) {
    const ExactInt p = a_cur * p1 + p2, q = a_cur * q1 + q2;
    if (q > q1_cap) {
      rec.pass = true;
      rec.q_digits = decimal_digits(q);
      break;
    }
    if (i + 1 > opt.max_terms) {
      rec.q_digits = decimal_digits(q);
      rec.detail = "insufficient expansion: q_" + std::to_string(i) + " has " + std::to_string(rec.q_digits) +
                   " digits, Q1 needs " + std::to_string(decimal_digits(q1_cap));
      return rec;
    }
    const ExactInt a_next = next_quotient(s);
    if (i >= 1 && a_next > rec.max_quotient) {
      rec.max_quotient = a_next;
      rec.argmax = i + 1;
    }
    ++rec.convergents_checked;
    // Gap bound: 1/((a_{i+1}+2) q^2) >= c2/q^(kt+1) iff (kt-1) ln q >= ln(c2 (a_{i+1}+2)).
    const RealInterval lhs = kt_minus_one * log(iv(q, prec));
    const RealInterval rhs = log(iv(ExactRational(c2 * (a_next + 2)), prec));
    const auto shortcut = less(rhs, lhs);
    if (!(shortcut && *shortcut)) {
      ++rec.direct_checks;
      bool ok = false;
      try {
        ok = direct_convergent_check(n, p, q, c2, kt);
      } catch (const IndeterminateError&) {
        rec.detail = "direct check undecided at convergent " + std::to_string(i);
        return rec;
      }
      if (!ok) {
        rec.detail = "convergent " + std::to_string(i) + " = " + to_string(p) + "/" + to_string(q) +
                     " violates the bound";
        return rec;
      }
    }
    p2 = p1;
    q2 = q1;
    p1 = p;
    q1 = q;
    a_cur = a_next;
  }
  rec.Q2 = pow(iv(ExactRational(c2 * (rec.max_quotient + 2)), prec), iv(1L, prec) / kt_minus_one);
  rec.detail = "pass";
  return rec;
}

}  // namespace

CorollaryRecord corollary_verify(long n, const ExactInt& a, const ExactInt& b, const ExactRational& c2,
                                 const ExactRational& kappa_table, const CorollaryOptions& opt) {
  return verify_impl(n, a, b, c2, kappa_table, 0, opt);
}

CorollaryRecord corollary_verify_gap(long n, const ExactInt& a, const ExactInt& b, const ExactRational& c2,
                                     const ExactRational& gap, const CorollaryOptions& opt) {
  if (gap <= 0) throw DomainError("kappa gap must be positive");
  return verify_impl(n, a, b, c2, std::nullopt, gap, opt);
}

namespace {

long double log_of(const ExactInt& x) {
  long e = 0;
  const double m = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log(static_cast<long double>(m)) + e * std::log(2.0L);
}

}  // namespace

std::optional<Candidate> candidate_search(long n, long max_terms) {
  if (n < 2) throw DomainError("n must be at least 2");
  CubicCFState s = init(n);
  const auto cv = convergents(quotients(s, max_terms));
  std::optional<Candidate> best;
  const long double ln3 = std::log(3.0L);
  for (const auto& c : cv) {
    if (c.q == 0 || c.p == 0) continue;
    ExactRational r = make_rational(c.p * c.p * c.p, n * c.q * c.q * c.q);
    if (r == 1) continue;
    if (r < 1) r = 1 / r;
    const ExactInt a = r.get_num(), b = r.get_den();
    const int d2 = twice_d(a, b);
    // ln(sqrt a + sqrt b) = ln b / 2 + ln(1 + sqrt(a/b)).
    const long double ratio = static_cast<long double>(r.get_d());
    const long double ln_sum = log_of(b) / 2 + std::log1p(std::sqrt(ratio));
    const long double ln_gap = log_of(ExactInt(a - b)) - ln_sum;
    const long double lnE = -0.911L + d2 / 2.0L * ln3 - 2 * ln_gap;
    const long double lnQ = 0.911L - d2 / 2.0L * ln3 + 2 * ln_sum;
    if (lnE <= 0) continue;
    const long double kappa = lnQ / lnE;
    if (kappa >= 2) continue;
    if (!best || kappa < best->kappa) best = Candidate{a, b, c.p, c.q, c.i, static_cast<double>(kappa)};
  }
  return best;
}

ApproxPair approx_pair(const ExactInt& a, const ExactInt& b, long r) {
  if (!(0 < b && b < a)) throw DomainError("approx_pair needs 0 < b < a");
  if (r < 0) throw DomainError("negative r");
  const HGParams hp{1, 3, r};
  ApproxPair out;
  out.D = denom_exact(hp);
  out.N = r == 0 ? ExactInt(1) : numerator_gcd(a, b, r);
  const ExactRational z = make_rational(b, a);
  const ExactRational scale = make_rational(ipow(a, static_cast<unsigned long>(r)) * out.D, out.N);
  const ExactRational p = scale * x_poly(hp).evaluate(z);
  const ExactRational q = scale * y_poly(hp).evaluate(z);
  if (p.get_den() != 1 || q.get_den() != 1) {
    throw InvariantError("approximation pair is not integral at r = " + std::to_string(r));
  }
  out.p = p.get_num();
  out.q = q.get_num();
  return out;
}

BoundCheck qest_check(const ExactInt& a, const ExactInt& b, long r, const ApproxPair& pq) {
  BoundCheck out;
  out.lower_ok = make_rational(pq.D, pq.N) * ipow(ExactInt(a + b), static_cast<unsigned long>(r)) <= pq.q;
  const int d2 = twice_d(a, b);
  out.upper_ok = decide_greater(
      [&](mpfr_prec_t p) {
        const RealInterval sum = sqrt(iv(a, p)) + sqrt(iv(b, p));
        const RealInterval Q = e911(p) / three_pow_d(d2, p) * sum * sum;
        return iv(parse_rational("1.161e39"), p) * pow(Q, static_cast<unsigned long>(r)) - iv(pq.q, p);
      },
      0, 128, "q_r upper bound");
  return out;
}

BoundCheck remainder_check(const ExactInt& a, const ExactInt& b, long r, const ApproxPair& pq) {
  BoundCheck out;
  const int d2 = twice_d(a, b);
  const mpfr_prec_t start = 128 + 4 * static_cast<mpfr_prec_t>(mpz_sizeinbase(pq.q.get_mpz_t(), 2));
  auto value = [&](mpfr_prec_t p) {
    return abs(iv(pq.q, p) * cube_root(make_rational(a, b), p) - iv(pq.p, p));
  };
  out.lower_ok = decide_greater(
      [&](mpfr_prec_t p) { return value(p) - iv(make_rational(a - b, 200 * a * pq.q), p); }, 0, start,
      "remainder lower bound");
  out.upper_ok = decide_greater(
      [&](mpfr_prec_t p) {
        const RealInterval gap = sqrt_gap(a, b, p);
        const RealInterval base = e911(p) / three_pow_d(d2, p) * gap * gap;
        const RealInterval bound =
            iv(ExactRational(parse_rational("1.176e40") * make_rational(a - b, b)), p) *
            pow(base, static_cast<unsigned long>(r));
        return bound - value(p);
      },
      0, start, "remainder upper bound");
  return out;
}

KappaLemma kappa_lemma(const RealInterval& k0, const RealInterval& l0, const RealInterval& E,
                       const RealInterval& Q) {
  const ExactRational one(1);
  if (!(greater(E, one).value_or(false)) || !(greater(Q, one).value_or(false))) {
    throw DomainError("kappa lemma needs E, Q > 1");
  }
  if (!k0.positive() || !l0.positive()) throw DomainError("kappa lemma needs k0, l0 > 0");
  const mpfr_prec_t prec = E.precision();
  KappaLemma out;
  out.kappa = log(Q) / log(E);
  out.c = iv(2L, prec) * k0 * pow(iv(2L, prec) * l0 * E, out.kappa);
  return out;
}

TableKappa table_kappa(const RealInterval& kappa, const RealInterval& C, const ExactRational& c2, long digits) {
  const mpfr_prec_t prec = kappa.precision();
  TableKappa out;
  out.kappa_plus = kappa + log10(iv(c2, prec) * C) / iv(digits, prec);
  const RealInterval scaled = out.kappa_plus * iv(10000L, prec);
  out.ceil_1e4 = ceil(scaled.lower());
  out.ceil_1e4_hi = ceil(scaled.upper());
  return out;
}

}  // namespace irm
