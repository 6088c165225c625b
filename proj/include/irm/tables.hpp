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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "irm/numeric.hpp"

namespace irm {

// Effective irrationality measure rows: n, c2, kappa as printed.
struct MeasureRow {
  int n;
  std::string c2;
  std::string kappa;
};
const std::vector<MeasureRow>& measure_table();

// Epsilons for |f(x; k, l) - x/phi(k)| <= eps x once x >= x0, x0 = 10^5 .. 10^10.
struct EpsilonRow {
  int k, l;
  std::array<std::string, 6> eps;
};
const std::vector<EpsilonRow>& epsilon_table();
ExactInt epsilon_x0(int column);  // 10^(5 + column)
// Smallest tabulated eps valid for every x >= x, or nullopt below 10^5.
std::optional<ExactRational> epsilon_for(int k, int l, const ExactRational& x);

// Large partial quotients of cube roots with the (a, b) used for each n.
// a and b are kept as the printed products of powers, e.g. "2*4^3".
struct QuotientRow {
  int n;
  std::string a, b;
  long index;
  long quotient;
};
const std::vector<QuotientRow>& quotient_table();

// Evaluates "p1^e1*p2^e2*..." products.
ExactInt eval_product(const std::string& expr);

}  // namespace irm
