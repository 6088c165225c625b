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

#include "irm/cubic_cf.hpp"

#include <fstream>
#include <map>
#include <string>

namespace irm {

namespace {

// f(t) by Horner.
ExactInt eval(const CubicCFState& s, const ExactInt& t) {
  ExactInt v = s.c[0];
  for (int i = 1; i < 4; ++i) v = v * t + s.c[i];
  return v;
}

}  // namespace

CubicCFState init(const ExactInt& n) {
  if (n <= 0) throw DomainError("cube root of a nonpositive integer");
  if (exact_cube_root(n)) throw DomainError(to_string(n) + " is a perfect cube");
  return {{1, 0, 0, ExactInt(-n)}, 0};
}

CubicCFState init_ratio(const ExactInt& a, const ExactInt& b) {
  if (a <= 0 || b <= 0) throw DomainError("ratio must be positive");
  const ExactRational r = make_rational(a, b);
  if (exact_cube_root(r)) throw DomainError(to_string(r) + " is a rational cube");
  return {{r.get_den(), 0, 0, ExactInt(-r.get_num())}, 0};
}

ExactInt next_quotient(CubicCFState& s) {
  if (s.c[0] <= 0) throw InvariantError("cubic state with nonpositive leading coefficient");
  // Largest a with f(a) < 0: bracket by doubling, then bisect.
  if (sgn(eval(s, 0)) >= 0) throw InvariantError("root not positive");
  ExactInt lo = 0, hi = 1;
  for (;;) {
    const int sg = sgn(eval(s, hi));
    if (sg == 0) throw InvariantError("cubic has an integer root");
    if (sg > 0) break;
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const ExactInt mid = (lo + hi) / 2;
    const int sg = sgn(eval(s, mid));
    if (sg == 0) throw InvariantError("cubic has an integer root");
    (sg < 0 ? lo : hi) = mid;
  }
  const ExactInt& a = lo;
  if (s.step > 0 && a < 1) throw InvariantError("partial quotient below 1");
  // g(x) = f(x + a), then x^3 g(1/x); g(0) = f(a) < 0 so negate.
  const ExactInt& c3 = s.c[0];
  const ExactInt& c2 = s.c[1];
  const ExactInt& c1 = s.c[2];
  ExactInt d0 = eval(s, a);
  ExactInt d1 = (3 * c3 * a + 2 * c2) * a + c1;
  ExactInt d2 = 3 * c3 * a + c2;
  ExactInt d3 = c3;
  s.c = {ExactInt(-d0), ExactInt(-d1), ExactInt(-d2), ExactInt(-d3)};
  ++s.step;
  return a;
}

std::vector<ExactInt> quotients(CubicCFState& s, long count) {
  std::vector<ExactInt> out;
  out.reserve(static_cast<std::size_t>(std::max(0L, count)));
  for (long i = 0; i < count; ++i) out.push_back(next_quotient(s));
  return out;
}

std::vector<Convergent> convergents(const std::vector<ExactInt>& a) {
  std::vector<Convergent> out;
  ExactInt p2 = 0, q2 = 1, p1 = 1, q1 = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ExactInt p = a[i] * p1 + p2, q = a[i] * q1 + q2;
    out.push_back({p, q, static_cast<long>(i)});
    p2 = p1;
    q2 = q1;
    p1 = p;
    q1 = q;
  }
  return out;
}

ExactRational gap_lower_bound(const Convergent& c, const ExactInt& a_next) {
  if (a_next < 1 || c.q <= 0) throw DomainError("gap bound needs a_next >= 1 and q > 0");
  return make_rational(1, (a_next + 2) * c.q * c.q);
}

MaxScan start_max_scan(const CubicCFState& s) {
  if (s.step != 0) throw DomainError("max scan starts from a fresh state");
  MaxScan scan;
  scan.state = s;
  return scan;
}

void run_max_scan(MaxScan& scan, long count, const std::optional<std::filesystem::path>& checkpoint,
                  long checkpoint_every) {
  auto write = [&] {
    if (!checkpoint) return;
    const std::filesystem::path tmp = checkpoint->string() + ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
      save_checkpoint(out, scan);
    }
    std::filesystem::rename(tmp, *checkpoint);
  };
  while (scan.state.step <= count) {
    const long i = scan.state.step;
    const ExactInt a = next_quotient(scan.state);
    ExactInt q = a * scan.q_cur + scan.q_prev;
    scan.q_prev = std::move(scan.q_cur);
    scan.q_cur = std::move(q);
    if (i >= 1 && a > scan.max_value) {
      scan.max_value = a;
      scan.argmax = i;
    }
    if (checkpoint && checkpoint_every > 0 && scan.state.step % checkpoint_every == 0) write();
  }
  write();
}

void save_checkpoint(std::ostream& out, const MaxScan& scan) {
  out << "cubic-cf-checkpoint v1\n";
  out << "step " << scan.state.step << '\n';
  for (int i = 0; i < 4; ++i) out << 'c' << (3 - i) << ' ' << to_string(scan.state.c[i]) << '\n';
  out << "q_prev " << to_string(scan.q_prev) << '\n';
  out << "q_cur " << to_string(scan.q_cur) << '\n';
  out << "argmax " << scan.argmax << '\n';
  out << "max " << to_string(scan.max_value) << '\n';
}

MaxScan load_checkpoint(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "cubic-cf-checkpoint v1") {
    throw DomainError("not a cubic-cf-checkpoint v1 file");
  }
  std::map<std::string, std::string> kv;
  while (std::getline(in, line)) {
    const auto sp = line.find(' ');
    if (sp == std::string::npos) continue;
    kv[line.substr(0, sp)] = line.substr(sp + 1);
  }
  auto get = [&](const char* key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw DomainError(std::string("checkpoint missing ") + key);
    return it->second;
  };
  MaxScan scan;
  scan.state.step = to_int64(parse_int(get("step")));
  scan.state.c = {parse_int(get("c3")), parse_int(get("c2")), parse_int(get("c1")), parse_int(get("c0"))};
  scan.q_prev = parse_int(get("q_prev"));
  scan.q_cur = parse_int(get("q_cur"));
  scan.argmax = to_int64(parse_int(get("argmax")));
  scan.max_value = parse_int(get("max"));
  return scan;
}

}  // namespace irm
