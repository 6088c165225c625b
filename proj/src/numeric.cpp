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

#include "irm/numeric.hpp"

#include <cctype>

namespace irm {

ExactRational make_rational(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

ExactInt parse_int(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw DomainError("malformed integer: " + s);
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw DomainError("malformed integer: " + s);
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return ExactInt(s, 10);
}

ExactRational parse_rational(std::string_view text) {
  std::string s(text);
  if (auto slash = s.find('/'); slash != std::string::npos) {
    return make_rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
  }
  // Decimal with optional exponent.
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    std::string exp_part = s.substr(e + 1);
    exponent = to_int64(parse_int(exp_part));
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string frac = s.substr(dot + 1);
    digits = s.substr(0, dot) + frac;
    exponent -= static_cast<long>(frac.size());
  } else {
    digits = s;
  }
  if (digits.empty()) throw DomainError("malformed number: " + std::string(text));
  ExactInt mantissa = parse_int(digits);
  if (negative) mantissa = -mantissa;
  ExactInt ten = 10;
  if (exponent >= 0) {
    return ExactRational(mantissa * ipow(ten, static_cast<unsigned long>(exponent)));
  }
  return make_rational(mantissa, ipow(ten, static_cast<unsigned long>(-exponent)));
}

std::string to_string(const ExactInt& x) { return x.get_str(10); }

std::string to_string(const ExactRational& x) {
  if (x.get_den() == 1) return x.get_num().get_str(10);
  return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

std::int64_t vp(const ExactInt& x, const ExactInt& p) {
  if (x == 0) throw DomainError("vp of zero");
  if (p < 2) throw DomainError("vp with p < 2");
  ExactInt rest;
  return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

std::int64_t vp(const ExactRational& x, const ExactInt& p) {
  if (x == 0) throw DomainError("vp of zero");
  return vp(x.get_num(), p) - vp(x.get_den(), p);
}

std::optional<ExactInt> exact_cube_root(const ExactInt& x) {
  ExactInt root;
  ExactInt magnitude = abs(x);
  if (mpz_root(root.get_mpz_t(), magnitude.get_mpz_t(), 3) == 0) return std::nullopt;
  return x < 0 ? ExactInt(-root) : root;
}

std::optional<ExactRational> exact_cube_root(const ExactRational& x) {
  auto num = exact_cube_root(x.get_num());
  auto den = exact_cube_root(x.get_den());
  if (!num || !den) return std::nullopt;
  return make_rational(*num, *den);
}

ExactInt ipow(const ExactInt& base, unsigned long exponent) {
  ExactInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

ExactInt floor(const ExactRational& x) {
  ExactInt out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

ExactInt ceil(const ExactRational& x) {
  ExactInt out;
  mpz_cdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

std::size_t decimal_digits(const ExactInt& x) {
  if (x == 0) return 1;
  // mpz_sizeinbase may overshoot by one.
  std::size_t n = mpz_sizeinbase(x.get_mpz_t(), 10);
  ExactInt bound = ipow(ExactInt(10), n - 1);
  return abs(x) < bound ? n - 1 : n;
}

std::int64_t to_int64(const ExactInt& x) {
  if (!x.fits_slong_p()) throw DomainError("integer does not fit in 64 bits: " + x.get_str());
  return x.get_si();
}

}  // namespace irm
