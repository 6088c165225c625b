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

#include "irm/hypergeom.hpp"

#include <algorithm>
#include <numeric>

namespace irm {

void validate(const HGParams& p) {
  if (p.m <= 0 || p.n <= p.m) throw DomainError("hypergeometric parameters need 0 < m < n");
  if (std::gcd(p.m, p.n) != 1) throw DomainError("hypergeometric parameters need gcd(m, n) = 1");
  if (p.r < 0) throw DomainError("hypergeometric parameters need r >= 0");
}

RatPoly::RatPoly(std::vector<ExactRational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ExactRational RatPoly::coeff(long i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

ExactRational RatPoly::evaluate(const ExactRational& z) const {
  ExactRational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

RealInterval RatPoly::evaluate(const RealInterval& z) const {
  RealInterval acc = RealInterval::exact(0L, z.precision());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * z + RealInterval::exact(*it, z.precision());
  }
  return acc;
}

void RatPoly::write_tsv(std::ostream& out) const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    out << i << '\t' << c_[i].get_num().get_str() << '\t' << c_[i].get_den().get_str() << '\n';
  }
}

ExactRational y_coeff(const HGParams& p, long h) {
  validate(p);
  if (h < 0 || h > p.r) throw DomainError("y_coeff: h outside [0, r]");
  ExactInt num = 1, den = 1;
  mpz_bin_uiui(num.get_mpz_t(), static_cast<unsigned long>(p.r), static_cast<unsigned long>(h));
  for (long i = p.r - h + 1; i <= p.r; ++i) num *= i * p.n + p.m;
  for (long i = 1; i <= h; ++i) den *= i * p.n - p.m;
  return make_rational(num, den);
}

RatPoly y_poly(const HGParams& p) {
  validate(p);
  std::vector<ExactRational> c;
  c.reserve(static_cast<std::size_t>(p.r) + 1);
  ExactRational a = 1;
  c.push_back(a);
  for (long h = 0; h < p.r; ++h) {
    // a_{h+1}/a_h = (r-h)/(h+1) * ((r-h)n+m)/((h+1)n-m)
    ExactInt num = ExactInt(p.r - h) * ((p.r - h) * p.n + p.m);
    ExactInt den = ExactInt(h + 1) * ((h + 1) * p.n - p.m);
    a *= make_rational(num, den);
    c.push_back(a);
  }
  return RatPoly(std::move(c));
}

RatPoly x_poly(const HGParams& p) {
  auto c = y_poly(p).coeffs();
  std::reverse(c.begin(), c.end());
  return RatPoly(std::move(c));
}

RatPoly substitute_affine(const RatPoly& p, const ExactRational& c) {
  // Horner in the ring Q[z] with the linear factor (1 - c z).
  std::vector<ExactRational> acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    std::vector<ExactRational> next(acc.size() + 1, ExactRational(0));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i] += acc[i];
      next[i + 1] -= c * acc[i];
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return RatPoly(std::move(acc));
}

namespace {

ExactRational remainder_prefactor(const HGParams& p) {
  ExactRational num = 1;
  ExactInt den = 1;
  for (long i = 0; i <= p.r; ++i) num *= make_rational(ExactInt(i * p.n + p.m), ExactInt(p.n));
  for (long i = p.r + 1; i <= 2 * p.r + 1; ++i) den *= i;
  return num / den;
}

}  // namespace

RealInterval remainder_value(const HGParams& p, const ExactRational& z, mpfr_prec_t prec) {
  validate(p);
  if (z <= 0 || z >= 1) throw DomainError("remainder_value needs 0 < z < 1");
  const mpfr_prec_t wp = prec + 32;
  const ExactRational alpha = ExactRational(p.r + 1) - make_rational(p.m, p.n);
  const ExactRational beta = p.r + 1;
  const ExactRational gamma = 2 * p.r + 2;
  const ExactRational w = 1 - z;

  RealInterval sum = RealInterval::exact(0L, wp);
  RealInterval term = RealInterval::exact(1L, wp);
  RealInterval cutoff_scale = RealInterval::exact(0L, wp);
  mpfr_set_ui_2exp(cutoff_scale.lo(), 1, -(prec + 8), MPFR_RNDD);
  mpfr_set_ui_2exp(cutoff_scale.hi(), 1, -(prec + 8), MPFR_RNDU);
  for (long k = 0;; ++k) {
    // Every later ratio (alpha+j)(beta+j)/((gamma+j)(j+1)) w is at most
    // w max(1, (alpha+k)/(k+1)) because beta < gamma.
    ExactRational lead = (alpha + k) / ExactRational(k + 1);
    ExactRational rho = w * (lead > 1 ? lead : ExactRational(1));
    if (k > 0 && rho < 1) {
      RealInterval cutoff = sum * cutoff_scale;
      if (mpfr_lessequal_p(term.hi(), cutoff.lo())) {
        RealInterval tail = term / RealInterval::exact(ExactRational(1 - rho), wp);
        mpfr_set_zero(tail.lo(), 1);
        sum = sum + tail;
        break;
      }
    }
    sum = sum + term;
    ExactRational ratio = (alpha + k) * (beta + k) / ((gamma + k) * (k + 1)) * w;
    term = term * RealInterval::exact(ratio, wp);
  }
  return sum * RealInterval::exact(remainder_prefactor(p), wp);
}

RealInterval check_identity(const HGParams& p, const ExactRational& z, const ExactRational& tol,
                            RefinePolicy policy) {
  validate(p);
  if (z <= 0 || z >= 1) throw DomainError("check_identity needs 0 < z < 1");
  const ExactRational xz = x_poly(p).evaluate(z);
  const ExactRational yz = y_poly(p).evaluate(z);
  ExactRational lin = 1;
  for (long i = 0; i < 2 * p.r + 1; ++i) lin *= z - 1;
  return decide(
      [&](mpfr_prec_t prec) -> std::optional<RealInterval> {
        RealInterval zmn = pow(root(RealInterval::exact(z, prec), static_cast<unsigned long>(p.n)),
                               static_cast<unsigned long>(p.m));
        RealInterval res = zmn * RealInterval::exact(xz, prec) - RealInterval::exact(yz, prec) -
                           RealInterval::exact(lin, prec) * remainder_value(p, z, prec);
        if (!res.contains_zero()) return res;
        if (less(res, tol).value_or(false) && greater(res, -tol).value_or(false)) return res;
        return std::nullopt;
      },
      policy, "hypergeometric identity residual");
}

AnalyticBounds analytic_bounds(const HGParams& p, const ExactRational& z) {
  validate(p);
  if (z < 0 || z > 1) throw DomainError("analytic_bounds needs 0 <= z <= 1");
  const ExactRational y = y_poly(p).evaluate(z);
  AnalyticBounds out;
  ExactRational lower = 1;
  for (long i = 0; i < p.r; ++i) lower *= 1 + z;
  out.lower_ok = lower <= y;
  out.upper_ok = decide(
      [&](mpfr_prec_t prec) -> std::optional<bool> {
        RealInterval s = sqrt(RealInterval::exact(z, prec));
        RealInterval u = pow(RealInterval::exact(1L, prec) + s, static_cast<unsigned long>(2 * p.r));
        if (mpfr_cmp_q(u.lo(), y.get_mpq_t()) >= 0) return true;
        if (mpfr_cmp_q(u.hi(), y.get_mpq_t()) < 0) return false;
        return std::nullopt;
      },
      {}, "analytic upper bound");
  return out;
}

SharperBoundReport sharper_bound_report(const HGParams& p, const ExactRational& z) {
  validate(p);
  const mpfr_prec_t prec = 128;
  const ExactRational y = y_poly(p).evaluate(z);
  RealInterval s = sqrt(RealInterval::exact(z, prec));
  RealInterval u = pow(RealInterval::exact(1L, prec) + s, static_cast<unsigned long>(2 * p.r));
  ExactRational factor = 1;
  for (long i = 1; i <= p.r; ++i) {
    // (2r)!/r! = prod_{i=1}^{r} (r+i); Gamma ratio = 1/prod (i - m/n).
    factor *= make_rational(ExactInt(p.r + i) * p.n, ExactInt(4) * (i * p.n - p.m));
  }
  return {RealInterval::exact(y, prec) / u, RealInterval::exact(factor, prec)};
}

}  // namespace irm
