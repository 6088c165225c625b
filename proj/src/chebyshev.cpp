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

#include "irm/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "irm/sieve.hpp"

namespace irm {

namespace {

constexpr int kModuli[4] = {1, 3, 4, 6};
constexpr int kBase[7] = {-1, 0, -1, 1, 4, -1, 8};

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

int bit_length(unsigned __int128 v) {
  int b = 0;
  while (v) {
    ++b;
    v >>= 1;
  }
  return b;
}

unsigned __int128 uabs(std::int64_t v) {
  return v < 0 ? static_cast<unsigned __int128>(-static_cast<__int128>(v)) : v;
}

// |n1|^2 y2 vs |n2|^2 y1.
int compare_square_scaled(std::int64_t n1, std::uint64_t y1, std::int64_t n2, std::uint64_t y2) {
  unsigned __int128 a1 = uabs(n1), a2 = uabs(n2);
  if (2 * bit_length(a1) + bit_length(y2) <= 127 && 2 * bit_length(a2) + bit_length(y1) <= 127) {
    unsigned __int128 l = a1 * a1 * y2, r = a2 * a2 * y1;
    return l < r ? -1 : (l > r ? 1 : 0);
  }
  ExactInt l = ExactInt(static_cast<long>(n1)), r = ExactInt(static_cast<long>(n2));
  l = l * l * ExactInt(std::to_string(y2));
  r = r * r * ExactInt(std::to_string(y1));
  return cmp(l, r) < 0 ? -1 : (cmp(l, r) > 0 ? 1 : 0);
}

// Sign of a sqrt(y) - b for rationals a, b.
int sign_sqrt_minus(const ExactRational& a, std::uint64_t y, const ExactRational& b) {
  int sa = sgn(a), sb = sgn(b);
  if (sa >= 0 && sb <= 0) return (sa == 0 && sb == 0) ? 0 : 1;
  if (sa <= 0 && sb >= 0) return -1;
  ExactRational lhs = a * a * ExactRational(ExactInt(std::to_string(y)));
  ExactRational rhs = b * b;
  int c = cmp(lhs, rhs);
  c = c < 0 ? -1 : (c > 0 ? 1 : 0);
  return sa > 0 ? c : -c;
}

struct Event {
  std::uint64_t y;
  FixedLog f;
  bool prime;
};

struct PrimeBatch {
  std::vector<std::uint64_t> primes;
  std::vector<FixedLog> logs;
};

PrimeBatch make_batch(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint64_t>& base) {
  PrimeBatch b;
  b.primes = sieve_segment(lo, hi, base);
  b.logs = fixed_logs(b.primes);
  return b;
}

class Accumulator {
 public:
  explicit Accumulator(const SieveConfig& c) : c_(c) {
    for (int i = 0; i < kNumClasses; ++i) phi_[i] = euler_phi(class_modulus(i));
    open_block(0);
    if (c_.track_ratio) {
      ratio_.emplace();
      ratio_->bucket = c_.ratio_bucket;
      ratio_->x_end = c_.x_max;
      open_bucket(0);
    }
  }

  void event(const Event& e) {
    advance(e.y);
    const double sy = std::sqrt(static_cast<double>(e.y));
    for (int k : kModuli) {
      const int idx = kBase[k] + static_cast<int>(e.y % k);
      ClassStats& s = cur_.cls[idx];
      const bool dev = coprime_[idx];
      if (e.prime) {
        if (dev) lower_candidate(idx, 0, s.theta_lo, s.theta_hi, e.y, sy);
        s.theta_lo += e.f.lo;
        s.theta_hi += e.f.hi;
        ++s.pi_count;
        if (dev) upper_candidate(idx, 1, s.theta_hi, s.theta_lo, e.y, sy);
      }
      if (dev) lower_candidate(idx, 2, s.psi_lo, s.psi_hi, e.y, sy);
      s.psi_lo += e.f.lo;
      s.psi_hi += e.f.hi;
      ++s.psi_terms;
      if (dev) upper_candidate(idx, 3, s.psi_hi, s.psi_lo, e.y, sy);
    }
    if (ratio_ && e.y % 3 == 2) ratio_event(e);
  }

  SieveRun finish() {
    advance(c_.x_max);
    close_block();
    if (ratio_) close_bucket();
    SieveRun run;
    run.config = c_;
    run.blocks = std::move(blocks_);
    run.ratio = std::move(ratio_);
    return run;
  }

 private:
  ClassStats& cls(int idx) { return cur_.cls[idx]; }

  DevPoint& slot(int idx, int which) {
    ClassStats& s = cur_.cls[idx];
    switch (which) {
      case 0: return s.min_theta;
      case 1: return s.max_theta;
      case 2: return s.min_psi;
      default: return s.max_psi;
    }
  }

  std::int64_t numer(int idx, std::int64_t f, std::uint64_t y) const {
    return phi_[idx] * f - kLogScale * static_cast<std::int64_t>(y);
  }

  // Records (phi f - 10^6 y) as a new minimum when it is smaller.
  void lower_candidate(int idx, int which, std::int64_t f, std::int64_t f_alt, std::uint64_t y, double sy,
                       bool left_limit = true) {
    const std::int64_t n = numer(idx, f, y);
    const double d = static_cast<double>(n) / sy;
    DevPoint& p = slot(idx, which);
    double& best = cache_[idx][which];
    if (p.set()) {
      const double tol = 1e-12 * std::max(std::fabs(d), std::fabs(best)) + 1e-300;
      if (d > best + tol) return;
      if (d >= best - tol && compare_normalized(n, y, p.n, p.y) >= 0) return;
    }
    p = {n, numer(idx, f_alt, y), y, left_limit};
    best = d;
  }

  void upper_candidate(int idx, int which, std::int64_t f, std::int64_t f_alt, std::uint64_t y, double sy) {
    const std::int64_t n = numer(idx, f, y);
    const double d = static_cast<double>(n) / sy;
    DevPoint& p = slot(idx, which);
    double& best = cache_[idx][which];
    if (p.set()) {
      const double tol = 1e-12 * std::max(std::fabs(d), std::fabs(best)) + 1e-300;
      if (d < best - tol) return;
      if (d <= best + tol && compare_normalized(n, y, p.n, p.y) <= 0) return;
    }
    p = {n, numer(idx, f_alt, y), y};
    best = d;
  }

  void open_block(std::uint64_t lo) {
    std::array<ClassStats, kNumClasses> carry = cur_.cls;
    cur_ = BlockStats{};
    cur_.block_index = lo / c_.block + 1;
    cur_.lo = lo;
    cur_.hi = std::min(lo + c_.block, c_.x_max);
    for (int i = 0; i < kNumClasses; ++i) {
      ClassStats& s = cur_.cls[i];
      s = carry[i];
      s.min_theta = s.max_theta = s.min_psi = s.max_psi = DevPoint{};
      coprime_[i] = coprime_class(i);
      if (!coprime_[i]) continue;
      // The supremum over (lo, first jump) is approached as y -> lo.
      const std::uint64_t y = lo == 0 ? 1 : lo;
      const double sy = std::sqrt(static_cast<double>(y));
      upper_candidate(i, 1, s.theta_hi, s.theta_lo, y, sy);
      upper_candidate(i, 3, s.psi_hi, s.psi_lo, y, sy);
    }
  }

  void close_block() {
    const std::uint64_t y = cur_.hi;
    const double sy = std::sqrt(static_cast<double>(y));
    for (int i = 0; i < kNumClasses; ++i) {
      if (!coprime_[i]) continue;
      ClassStats& s = cur_.cls[i];
      lower_candidate(i, 0, s.theta_lo, s.theta_hi, y, sy, false);
      lower_candidate(i, 2, s.psi_lo, s.psi_hi, y, sy, false);
    }
    blocks_.push_back(cur_);
  }

  void advance(std::uint64_t y) {
    while (y > cur_.hi) {
      close_block();
      open_block(cur_.hi);
    }
    if (ratio_) {
      while (y > bucket_hi_) {
        close_bucket();
        open_bucket(bucket_hi_);
      }
    }
  }

  // Ratio track on theta(y; 3, 2), psi(y; 3, 2).
  static bool ratio_greater(std::int64_t f1, std::uint64_t y1, std::int64_t f2, std::uint64_t y2) {
    return static_cast<__int128>(f1) * y2 > static_cast<__int128>(f2) * y1;
  }

  void open_bucket(std::uint64_t lo) {
    const ClassStats& s = cur_.cls[kBase[3] + 2];
    RatioBucket b;
    b.start_lo = s.theta_lo;
    b.start_hi = s.theta_hi;
    b.start_psi_hi = s.psi_hi;
    const std::uint64_t y = lo == 0 ? 1 : lo;
    b.sup_theta = {s.theta_hi, y};
    b.sup_psi = {s.psi_hi, y};
    ratio_->buckets.push_back(b);
    bucket_hi_ = std::min(lo + c_.ratio_bucket, c_.x_max);
  }

  void close_bucket() {
    const ClassStats& s = cur_.cls[kBase[3] + 2];
    RatioBucket& b = ratio_->buckets.back();
    inf_candidate(b, s.theta_lo, bucket_hi_);
  }

  static void inf_candidate(RatioBucket& b, std::int64_t f, std::uint64_t y) {
    if (b.inf_theta.y == 0 || ratio_greater(b.inf_theta.f, b.inf_theta.y, f, y)) b.inf_theta = {f, y};
  }

  void ratio_event(const Event& e) {
    // cur_ already includes this event.
    const ClassStats& s = cur_.cls[kBase[3] + 2];
    RatioBucket& b = ratio_->buckets.back();
    if (e.prime) {
      inf_candidate(b, s.theta_lo - e.f.lo, e.y);
      if (ratio_greater(s.theta_hi, e.y, b.sup_theta.f, b.sup_theta.y)) b.sup_theta = {s.theta_hi, e.y};
    }
    if (ratio_greater(s.psi_hi, e.y, b.sup_psi.f, b.sup_psi.y)) b.sup_psi = {s.psi_hi, e.y};
  }

  SieveConfig c_;
  std::int64_t phi_[kNumClasses];
  bool coprime_[kNumClasses] = {};
  double cache_[kNumClasses][4] = {};
  BlockStats cur_;
  std::vector<BlockStats> blocks_;
  std::optional<RatioTrack> ratio_;
  std::uint64_t bucket_hi_ = 0;
};

}  // namespace

int class_index(int k, int l) {
  if (k < 1 || k > 6 || kBase[k] < 0 || l < 0 || l >= k) throw DomainError("unsupported residue class");
  return kBase[k] + l;
}

int class_modulus(int idx) {
  if (idx < 0 || idx >= kNumClasses) throw DomainError("class index out of range");
  return idx == 0 ? 1 : (idx < 4 ? 3 : (idx < 8 ? 4 : 6));
}

int class_residue(int idx) { return idx - kBase[class_modulus(idx)]; }

int euler_phi(int k) {
  switch (k) {
    case 1: return 1;
    case 3: case 4: case 6: return 2;
    default: throw DomainError("unsupported modulus");
  }
}

bool coprime_class(int idx) { return std::gcd(class_modulus(idx), class_residue(idx)) == 1; }

int compare_normalized(std::int64_t n1, std::uint64_t y1, std::int64_t n2, std::uint64_t y2) {
  const int s1 = (n1 > 0) - (n1 < 0), s2 = (n2 > 0) - (n2 < 0);
  if (s1 != s2) return s1 < s2 ? -1 : 1;
  if (s1 == 0) return 0;
  const int mag = compare_square_scaled(n1, y1, n2, y2);
  return s1 > 0 ? mag : -mag;
}

void validate(const SieveConfig& c) {
  if (c.x_max < 2) throw DomainError("x_max must be at least 2");
  if (c.segment < 2 || c.block < 2) throw DomainError("segment and block sizes must be at least 2");
  if (c.block % c.segment != 0) throw DomainError("block size must be a multiple of the segment size");
  if (c.jobs < 1) throw DomainError("jobs must be positive");
  if (c.track_ratio && c.ratio_bucket < 2) throw DomainError("ratio bucket must be at least 2");
  // psi(x) < 1.04 x; the fixed sums carry 10^6 psi, the numerators 2 of that.
  if (static_cast<long double>(c.x_max) * 2.2e6L > 9.0e18L) {
    throw DomainError("x_max too large for 64-bit fixed-point sums");
  }
}

SieveRun accumulate(const SieveConfig& c) {
  validate(c);
  const std::uint64_t root = isqrt(c.x_max);
  const std::vector<std::uint64_t> base = primes_up_to(root + 1);

  std::vector<Event> powers;
  for (auto p : base) {
    if (p > root) break;
    const FixedLog f = fixed_log(p);
    for (std::uint64_t q = p * p;; q *= p) {
      powers.push_back({q, f, false});
      if (q > c.x_max / p) break;
    }
  }
  std::sort(powers.begin(), powers.end(), [](const Event& a, const Event& b) { return a.y < b.y; });
  std::size_t next_power = 0;

  Accumulator acc(c);
  std::vector<PrimeBatch> batches(static_cast<std::size_t>(c.jobs));
  for (std::uint64_t lo = 0; lo < c.x_max;) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    for (int j = 0; j < c.jobs && lo < c.x_max; ++j) {
      const std::uint64_t hi = std::min(lo + c.segment, c.x_max);
      ranges.emplace_back(lo, hi);
      lo = hi;
    }
    if (ranges.size() == 1) {
      batches[0] = make_batch(ranges[0].first, ranges[0].second, base);
    } else {
      std::vector<std::thread> workers;
      for (std::size_t j = 0; j < ranges.size(); ++j) {
        workers.emplace_back([&, j] { batches[j] = make_batch(ranges[j].first, ranges[j].second, base); });
      }
      for (auto& w : workers) w.join();
    }
    for (std::size_t j = 0; j < ranges.size(); ++j) {
      const PrimeBatch& b = batches[j];
      for (std::size_t i = 0; i < b.primes.size(); ++i) {
        while (next_power < powers.size() && powers[next_power].y < b.primes[i]) {
          acc.event(powers[next_power++]);
        }
        acc.event({b.primes[i], b.logs[i], true});
      }
    }
  }
  while (next_power < powers.size()) acc.event(powers[next_power++]);
  return acc.finish();
}

namespace {

// floor or ceil of N / (phi sqrt(y)), i.e. 10^6 times the deviation.
ExactInt scaled_deviation(const DevPoint& p, int phi, bool up) {
  const double est = static_cast<double>(p.n) / (phi * std::sqrt(static_cast<double>(p.y)));
  ExactInt t(static_cast<long>(std::floor(est)) - 2);
  const ExactRational n(ExactInt(static_cast<long>(p.n)));
  // Largest t with t phi sqrt(y) <= N.
  auto le = [&](const ExactInt& t) { return sign_sqrt_minus(ExactRational(t * phi), p.y, n) <= 0; };
  while (!le(t)) t -= 1;
  while (le(t + 1)) t += 1;
  if (!up) return t;
  return sign_sqrt_minus(ExactRational(t * phi), p.y, n) == 0 ? t : ExactInt(t + 1);
}

std::string dev_cell(const DevPoint& p, int phi, bool up) {
  if (!p.set()) return "NA";
  return to_string(scaled_deviation(p, phi, up));
}

}  // namespace

void write_block_tsv(std::ostream& out, const SieveRun& run, const std::vector<int>& moduli) {
  out << "block_index\tk\tl\ttheta_lo\ttheta_hi\tpsi_lo\tpsi_hi\tpi_count"
         "\tmin_dev_theta\tmax_dev_theta\tmin_dev_psi\tmax_dev_psi\n";
  for (const BlockStats& b : run.blocks) {
    for (int idx = 0; idx < kNumClasses; ++idx) {
      const int k = class_modulus(idx);
      if (std::find(moduli.begin(), moduli.end(), k) == moduli.end()) continue;
      const ClassStats& s = b.cls[idx];
      const int phi = euler_phi(k);
      const bool dev = coprime_class(idx);
      out << b.block_index << '\t' << k << '\t' << class_residue(idx) << '\t' << s.theta_lo << '\t'
          << s.theta_hi << '\t' << s.psi_lo << '\t' << s.psi_hi << '\t' << s.pi_count << '\t'
          << (dev ? dev_cell(s.min_theta, phi, false) : "NA") << '\t'
          << (dev ? dev_cell(s.max_theta, phi, true) : "NA") << '\t'
          << (dev ? dev_cell(s.min_psi, phi, false) : "NA") << '\t'
          << (dev ? dev_cell(s.max_psi, phi, true) : "NA") << '\n';
    }
  }
}

namespace {

void put(std::ostream& out, const DevPoint& p) { out << ' ' << p.n << ' ' << p.n_alt << ' ' << p.y << ' ' << p.left_limit; }

void get(std::istream& in, DevPoint& p) { in >> p.n >> p.n_alt >> p.y >> p.left_limit; }

void put(std::ostream& out, const RatioPoint& p) { out << ' ' << p.f << ' ' << p.y; }

void get(std::istream& in, RatioPoint& p) { in >> p.f >> p.y; }

}  // namespace

void save_run(std::ostream& out, const SieveRun& run) {
  const auto& c = run.config;
  out << "irm-sieve-run v1\n";
  out << c.x_max << ' ' << c.segment << ' ' << c.block << ' ' << c.jobs << ' ' << c.track_ratio << ' '
      << c.ratio_bucket << '\n';
  out << run.blocks.size() << '\n';
  for (const auto& b : run.blocks) {
    out << b.block_index << ' ' << b.lo << ' ' << b.hi << '\n';
    for (const auto& s : b.cls) {
      out << s.theta_lo << ' ' << s.theta_hi << ' ' << s.psi_lo << ' ' << s.psi_hi << ' ' << s.pi_count << ' '
          << s.psi_terms;
      for (const auto* p : {&s.min_theta, &s.max_theta, &s.min_psi, &s.max_psi}) put(out, *p);
      out << '\n';
    }
  }
  if (!run.ratio) {
    out << "no-ratio\n";
    return;
  }
  out << "ratio " << run.ratio->bucket << ' ' << run.ratio->x_end << ' ' << run.ratio->buckets.size() << '\n';
  for (const auto& b : run.ratio->buckets) {
    out << b.start_lo << ' ' << b.start_hi << ' ' << b.start_psi_hi;
    for (const auto* p : {&b.sup_theta, &b.inf_theta, &b.sup_psi}) put(out, *p);
    out << '\n';
  }
}

SieveRun load_run(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "irm-sieve-run v1") throw DomainError("not a sieve run file");
  SieveRun run;
  auto& c = run.config;
  std::size_t count = 0;
  in >> c.x_max >> c.segment >> c.block >> c.jobs >> c.track_ratio >> c.ratio_bucket >> count;
  run.blocks.resize(count);
  for (auto& b : run.blocks) {
    in >> b.block_index >> b.lo >> b.hi;
    for (auto& s : b.cls) {
      in >> s.theta_lo >> s.theta_hi >> s.psi_lo >> s.psi_hi >> s.pi_count >> s.psi_terms;
      for (auto* p : {&s.min_theta, &s.max_theta, &s.min_psi, &s.max_psi}) get(in, *p);
    }
  }
  std::string tag;
  in >> tag;
  if (tag == "ratio") {
    RatioTrack t;
    in >> t.bucket >> t.x_end >> count;
    t.buckets.resize(count);
    for (auto& b : t.buckets) {
      in >> b.start_lo >> b.start_hi >> b.start_psi_hi;
      for (auto* p : {&b.sup_theta, &b.inf_theta, &b.sup_psi}) get(in, *p);
    }
    run.ratio = std::move(t);
  } else if (tag != "no-ratio") {
    throw DomainError("malformed sieve run file");
  }
  if (!in) throw DomainError("truncated sieve run file");
  return run;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "indeterminate";
  }
}

RealInterval class_sum(int k, int l, std::uint64_t y, bool left_limit, bool psi, mpfr_prec_t prec) {
  const int idx = class_index(k, l);
  const std::uint64_t top = left_limit ? y - 1 : y;
  mpfr_t lo, hi, t;
  mpfr_inits2(prec, lo, hi, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(lo, 0, MPFR_RNDN);
  mpfr_set_ui(hi, 0, MPFR_RNDN);
  auto add = [&](std::uint64_t p) {
    mpfr_set_ui(t, p, MPFR_RNDN);
    mpfr_log(t, t, MPFR_RNDD);
    mpfr_add(lo, lo, t, MPFR_RNDD);
    mpfr_set_ui(t, p, MPFR_RNDN);
    mpfr_log(t, t, MPFR_RNDU);
    mpfr_add(hi, hi, t, MPFR_RNDU);
  };
  const std::vector<std::uint64_t> base = primes_up_to(isqrt(std::max<std::uint64_t>(top, 4)) + 1);
  for (std::uint64_t seg = 0; seg < top; seg += 10000000) {
    for (std::uint64_t p : sieve_segment(seg, std::min(top, seg + 10000000), base)) {
      if (static_cast<int>(p % k) == class_residue(idx)) add(p);
      if (!psi || p > top / p) continue;
      for (std::uint64_t q = p * p;; q *= p) {
        if (static_cast<int>(q % k) == class_residue(idx)) add(p);
        if (q > top / p) break;
      }
    }
  }
  RealInterval out(prec);
  mpfr_set(out.lo(), lo, MPFR_RNDD);
  mpfr_set(out.hi(), hi, MPFR_RNDU);
  mpfr_clears(lo, hi, t, static_cast<mpfr_ptr>(nullptr));
  return out;
}

SqrtBoundResult verify_sqrt_bound(const SieveRun& run, int k, int l, const ExactRational& c) {
  const int idx = class_index(k, l);
  if (!coprime_class(idx)) throw DomainError("sqrt bound needs gcd(l, k) = 1");
  const int phi = euler_phi(k);
  // |N| <= c 10^6 phi sqrt(y).
  const ExactRational a = c * kLogScale * phi;
  SqrtBoundResult res;
  double worst = -1;
  auto note = [&](Verdict v) {
    if (v == Verdict::fail || res.verdict == Verdict::pass) res.verdict = v;
  };
  // (f(y) - y/phi) / sqrt(y) against c from a direct enclosure of f.
  auto refine = [&](const DevPoint& p, bool upper, bool psi) {
    for (mpfr_prec_t prec = 128; prec <= 512; prec *= 2) {
      const RealInterval f = class_sum(k, l, p.y, p.left_limit, psi, prec);
      const RealInterval y = RealInterval::exact(ExactInt(std::to_string(p.y)), prec);
      RealInterval d = (f - y / RealInterval::exact(phi, prec)) / sqrt(y);
      if (!upper) d = -d;
      const auto over = greater(d, c);
      if (p.y == res.worst_y) res.worst_value = std::fabs(d.mid_double());
      if (over) return *over ? Verdict::fail : Verdict::pass;
    }
    return Verdict::indeterminate;
  };
  auto check = [&](const DevPoint& p, bool upper, bool psi) {
    if (!p.set()) return;
    const double v = std::fabs(static_cast<double>(p.n)) / (kLogScale * phi * std::sqrt(static_cast<double>(p.y)));
    if (v > worst) {
      worst = v;
      res.worst_y = p.y;
      res.worst_value = v;
      res.worst_kind = psi ? "psi" : "theta";
    }
    // upper: N <= a sqrt(y); lower: -N <= a sqrt(y).
    auto ok = [&](std::int64_t n) {
      const ExactRational b(ExactInt(static_cast<long>(upper ? n : -n)));
      return sign_sqrt_minus(a, p.y, b) >= 0;
    };
    if (ok(p.n)) return;
    if (!ok(p.n_alt)) {
      note(Verdict::fail);
      return;
    }
    ++res.refined;
    note(refine(p, upper, psi));
  };
  for (const BlockStats& b : run.blocks) {
    const ClassStats& s = b.cls[idx];
    check(s.max_theta, true, false);
    check(s.min_theta, false, false);
    check(s.max_psi, true, true);
    check(s.min_psi, false, true);
  }
  return res;
}

bool crossover_check(const ExactRational& c, const ExactRational& eps, const ExactRational& x0) {
  if (eps <= 0) throw DomainError("eps must be positive");
  const ExactRational q = c / eps;
  return q * q <= x0;
}

}  // namespace irm
