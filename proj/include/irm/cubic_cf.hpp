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
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <vector>

#include "irm/numeric.hpp"

namespace irm {

// c[0] x^3 + c[1] x^2 + c[2] x + c[3] with one real root. Before a step the
// leading coefficient is positive, so f < 0 left of the root and f > 0
// right of it; from step 1 on the root lies in (1, inf).
struct CubicCFState {
  std::array<ExactInt, 4> c;
  long step = 0;  // index of the quotient the next call returns
};

// x^3 - n; n positive and not a cube.
CubicCFState init(const ExactInt& n);
// b x^3 - a for the root (a/b)^(1/3); a/b positive and not a rational cube.
CubicCFState init_ratio(const ExactInt& a, const ExactInt& b);

// Returns a_{step} = floor(root) and replaces f by x^3 f(a + 1/x), negated
// so the leading coefficient is positive again. Integer arithmetic only.
ExactInt next_quotient(CubicCFState& s);

std::vector<ExactInt> quotients(CubicCFState& s, long count);

struct Convergent {
  ExactInt p, q;
  long i = 0;
};
// Convergents p_i/q_i of [a_0; a_1, ...], one per quotient.
std::vector<Convergent> convergents(const std::vector<ExactInt>& a);

// 1 / ((a_{i+1} + 2) q_i^2), a lower bound for |alpha - p_i/q_i|.
ExactRational gap_lower_bound(const Convergent& c, const ExactInt& a_next);

// Running maximum of a_i over i = 1 .. count (a_0 excluded) together with
// the denominators q_i needed for the size of q_count.
struct MaxScan {
  CubicCFState state;
  ExactInt q_prev = 1, q_cur = 0;  // q_{step-2}, q_{step-1}
  long argmax = -1;
  ExactInt max_value = 0;
  std::size_t q_digits() const { return decimal_digits(q_cur); }
};
MaxScan start_max_scan(const CubicCFState& s);
// Advances until state.step > count. With a checkpoint path the scan is
// written there every checkpoint_every steps and at the end.
void run_max_scan(MaxScan& scan, long count, const std::optional<std::filesystem::path>& checkpoint = {},
                  long checkpoint_every = 10000);

// Text format: "cubic-cf-checkpoint v1" header, then key value lines.
void save_checkpoint(std::ostream& out, const MaxScan& scan);
MaxScan load_checkpoint(std::istream& in);

}  // namespace irm
