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

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace irm {

// Arbitrary precision integers and reduced rationals. mpq_class keeps the
// denominator positive and gcd(num, den) = 1 once canonicalized; every
// constructor below canonicalizes.
using ExactInt = mpz_class;
using ExactRational = mpq_class;

// Raised when an argument lies outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when an internal invariant that the mathematics guarantees is
// observed to fail (e.g. a non-integral value that must be integral).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised when interval refinement hits its precision cap before a
// comparison could be decided.
class IndeterminateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ExactRational make_rational(const ExactInt& num, const ExactInt& den);

ExactInt parse_int(std::string_view text);

// Accepts "p", "p/q", and decimal notation such as "2.052818", "12.2e9",
// "1.161e39". Decimal input is converted exactly.
ExactRational parse_rational(std::string_view text);

std::string to_string(const ExactInt& x);
// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const ExactRational& x);

// v_p(x) for x != 0. p is trusted to be prime.
std::int64_t vp(const ExactInt& x, const ExactInt& p);
std::int64_t vp(const ExactRational& x, const ExactInt& p);

// Integer cube root when x is a perfect cube (negative allowed).
std::optional<ExactInt> exact_cube_root(const ExactInt& x);
// (s/t) with s/t reduced when x = (s/t)^3.
std::optional<ExactRational> exact_cube_root(const ExactRational& x);

ExactInt ipow(const ExactInt& base, unsigned long exponent);

// Floor and ceiling of a rational.
ExactInt floor(const ExactRational& x);
ExactInt ceil(const ExactRational& x);

// Number of decimal digits of |x| (1 for zero).
std::size_t decimal_digits(const ExactInt& x);

std::int64_t to_int64(const ExactInt& x);

}  // namespace irm
