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

#include <ostream>
#include <string>
#include <vector>

#include "irm/interval.hpp"
#include "irm/numeric.hpp"

namespace irm {

struct HGParams {
  long m = 1;
  long n = 3;
  long r = 0;
};

// Throws DomainError unless 0 < m < n, gcd(m, n) = 1 and r >= 0.
void validate(const HGParams& p);

// Dense polynomial over Q, ascending degree. The zero polynomial has no
// coefficients; otherwise the last coefficient is nonzero.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<ExactRational> coeffs);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<ExactRational>& coeffs() const { return c_; }
  const ExactRational& operator[](std::size_t i) const { return c_[i]; }
  ExactRational coeff(long i) const;

  ExactRational evaluate(const ExactRational& z) const;
  RealInterval evaluate(const RealInterval& z) const;

  // Rows "degree<TAB>numerator<TAB>denominator".
  void write_tsv(std::ostream& out) const;

  friend bool operator==(const RatPoly&, const RatPoly&) = default;

 private:
  void trim();
  std::vector<ExactRational> c_;
};

// a_{r,h} = C(r,h) prod_{i=r-h+1}^{r} (in+m) / prod_{i=1}^{h} (in-m).
ExactRational y_coeff(const HGParams& p, long h);
RatPoly y_poly(const HGParams& p);
// Degree reversal of y_poly; monic.
RatPoly x_poly(const HGParams& p);

// p(1 - c z).
RatPoly substitute_affine(const RatPoly& p, const ExactRational& c);

// R_{m,n,r}(z) for rational 0 < z < 1, as the 2F1(r+1-m/n, r+1; 2r+2; 1-z)
// series times its gamma prefactor, with a geometric tail bound.
RealInterval remainder_value(const HGParams& p, const ExactRational& z, mpfr_prec_t prec);

// Enclosure of z^{m/n} X(z) - Y(z) - (z-1)^{2r+1} R(z), refined until it lies
// inside (-tol, tol). Throws IndeterminateError at the refinement cap.
RealInterval check_identity(const HGParams& p, const ExactRational& z, const ExactRational& tol,
                            RefinePolicy policy = {});

// Y(z) against (1+z)^r from below and (1+sqrt z)^{2r} from above.
struct AnalyticBounds {
  bool lower_ok = false;
  bool upper_ok = false;
};
AnalyticBounds analytic_bounds(const HGParams& p, const ExactRational& z);

// Exploratory only: Y(z)/(1+sqrt z)^{2r} next to the conjectured factor
// 4^{-r} (2r)!/r! Gamma(1-m/n)/Gamma(r+1-m/n).
struct SharperBoundReport {
  RealInterval observed;
  RealInterval conjectured;
};
SharperBoundReport sharper_bound_report(const HGParams& p, const ExactRational& z);

}  // namespace irm
