// Copyright 2025 The mbs Authors
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

#include "mbs/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mbs {

namespace {

long mod(long x, long m) { return ((x % m) + m) % m; }

// Shortest word whose repetition gives v.
std::vector<long> primitive(std::vector<long> v) {
  size_t n = v.size();
  for (size_t p = 1; p <= n / 2; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (size_t i = p; i < n && ok; ++i) ok = v[i] == v[i % p];
    if (ok) return std::vector<long>(v.begin(), v.begin() + p);
  }
  return v;
}

long lcm_capped(long a, long b) {
  long l = std::lcm(a, b);
  if (l > 100000) throw std::overflow_error("period lcm too large");
  return l;
}

}  // namespace

BilliardSeq::BilliardSeq(std::vector<long> left, std::vector<long> core,
                         std::vector<long> right, long origin)
    : left_(std::move(left)),
      core_(std::move(core)),
      right_(std::move(right)),
      origin_(origin) {
  if (left_.empty() || right_.empty()) {
    throw std::invalid_argument("empty period");
  }
  for (const auto* part : {&left_, &core_, &right_}) {
    for (long v : *part) {
      if (v < 1) throw std::invalid_argument("sequence entry below 1");
    }
  }
}

BilliardSeq BilliardSeq::periodic(std::vector<long> period) {
  return BilliardSeq(period, {}, period);
}

long BilliardSeq::layout(long m) const {
  long c = static_cast<long>(core_.size());
  if (m <= 0) return left_[mod(m - 1, static_cast<long>(left_.size()))];
  if (m <= c) return core_[m - 1];
  return right_[mod(m - c - 1, static_cast<long>(right_.size()))];
}

long BilliardSeq::entry(long n) const { return layout(n - 1 + origin_); }

BilliardSeq BilliardSeq::shifted(long j) const {
  BilliardSeq out = *this;
  out.origin_ += j;
  return out;
}

BilliardSeq BilliardSeq::reversal() const {
  std::vector<long> l(right_.rbegin(), right_.rend());
  std::vector<long> c(core_.rbegin(), core_.rend());
  std::vector<long> r(left_.rbegin(), left_.rend());
  long origin = static_cast<long>(core_.size()) + 2 - origin_;
  return BilliardSeq(std::move(l), std::move(c), std::move(r), origin);
}

BilliardSeq BilliardSeq::canonical() const {
  std::vector<long> left = primitive(left_);
  std::vector<long> right = primitive(right_);
  std::vector<long> core = core_;
  long origin = origin_;
  // Fold core entries that merely restate the adjacent period.
  while (!core.empty() && core.back() == right.back()) {
    core.pop_back();
    std::rotate(right.rbegin(), right.rbegin() + 1, right.rend());
  }
  while (!core.empty() && core.front() == left.front()) {
    core.erase(core.begin());
    std::rotate(left.begin(), left.begin() + 1, left.end());
    origin -= 1;
  }
  return BilliardSeq(std::move(left), std::move(core), std::move(right),
                     origin);
}

bool BilliardSeq::purely_periodic() const {
  BilliardSeq c = canonical();
  return c.core_.empty() && c.left_ == c.right_;
}

std::string BilliardSeq::to_string() const {
  auto word = [](const std::vector<long>& v) {
    std::ostringstream os;
    os << "per(";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) os << ",";
      os << v[i];
    }
    os << ")";
    return os.str();
  };
  std::ostringstream os;
  os << word(left_);
  for (long v : core_) os << ";" << v;
  os << ";" << word(right_);
  return os.str();
}

TailValues tails(const BilliardSeq& k, long n) {
  const long c = static_cast<long>(k.core().size());
  const long rlen = static_cast<long>(k.right().size());
  const long llen = static_cast<long>(k.left().size());

  // Forward tail r_n = [k_n; k_(n+1), ...]: collect digits until the pure
  // right-periodic region, then attach the rotated right period.
  CFExpansion rf;
  long x0 = c + 2 - k.origin();  // first index in the right-period region
  long start = std::max(n, x0);
  for (long x = n; x < start; ++x) rf.preperiod.push_back(k.entry(x));
  long phase = mod(start - 1 + k.origin() - c - 1, rlen);
  for (long i = 0; i < rlen; ++i) {
    rf.period.push_back(k.right()[(phase + i) % rlen]);
  }

  // Backward tail s_n = [0; k_(n-1), k_(n-2), ...]: digits down to the pure
  // left-periodic region, then the reversed left period.
  CFExpansion sf;
  sf.preperiod.push_back(0);
  long y0 = 1 - k.origin();  // last index in the left-period region
  long stop = std::min(n - 1, y0);
  for (long y = n - 1; y > stop; --y) sf.preperiod.push_back(k.entry(y));
  long lpos = mod(stop - 1 + k.origin() - 1, llen);
  for (long i = 0; i < llen; ++i) {
    sf.period.push_back(k.left()[mod(lpos - i, llen)]);
  }

  return TailValues{cf_value(rf), cf_value(sf)};
}

std::vector<long> seq_shifts(const BilliardSeq& a, const BilliardSeq& b) {
  BilliardSeq k = a.canonical(), l = b.canonical();
  long ck = static_cast<long>(k.core().size());
  long cl = static_cast<long>(l.core().size());
  long lper = lcm_capped(
      lcm_capped(static_cast<long>(k.left().size()),
                 static_cast<long>(k.right().size())),
      lcm_capped(static_cast<long>(l.left().size()),
                 static_cast<long>(l.right().size())));
  long big_j = ck + cl + 2 * lper + 4;
  long window = big_j + ck + cl + 2 * lper + 8;
  long delta = l.origin() - k.origin();
  std::vector<long> shifts;
  for (long e = -big_j; e <= big_j; ++e) {
    long j = delta + e;
    bool ok = true;
    for (long n = -window; n <= window && ok; ++n) {
      ok = k.entry(n + j) == l.entry(n);
    }
    if (ok) shifts.push_back(j);
  }
  return shifts;
}

bool seq_equivalent(const BilliardSeq& a, const BilliardSeq& b, bool proper) {
  for (long j : seq_shifts(a, b)) {
    if (!proper || mod(j, 2) == 0) return true;
  }
  return false;
}

SeqClass classify_seq(const BilliardSeq& k) {
  SeqClass out;
  out.periodic = k.purely_periodic();
  out.palindromic = seq_equivalent(k, k.reversal(), /*proper=*/false);
  return out;
}

TailExtremum sup_tail_sum(const BilliardSeq& seq) {
  BilliardSeq k = seq.canonical();
  const long c = static_cast<long>(k.core().size());
  const long rl = static_cast<long>(k.right().size());
  const long ll = static_cast<long>(k.left().size());
  // Even block lengths make the one-block shift map increasing, so values
  // along each tail branch are monotone between first value and limit.
  const long r2 = rl % 2 ? 2 * rl : rl;
  const long l2 = ll % 2 ? 2 * ll : ll;
  const long x0 = c + 2 - k.origin();  // k_n right-periodic for n >= x0
  const long y0 = 1 - k.origin();      // k_n left-periodic for n <= y0
  const long n_hi = x0 + r2;
  const long n_lo = y0 + 1 - l2;

  bool have = false;
  TailExtremum best{QuadSurd(0), false, 0};
  auto consider = [&](const QuadSurd& v, bool attained, long index) {
    if (!have || v > best.value ||
        (v == best.value && attained && !best.attained)) {
      best = TailExtremum{v, attained, index};
      have = true;
    }
  };

  for (long n = n_lo; n <= n_hi; ++n) {
    TailValues t = tails(k, n);
    consider(t.r + t.s, true, n);
  }
  // Right branches n_b + m*r2: r_n repeats exactly, s_n is monotone with
  // purely periodic limit.
  for (long j = 1; j <= r2; ++j) {
    long n_b = n_hi + j;
    TailValues t = tails(k, n_b);
    CFExpansion lim;
    lim.preperiod.push_back(0);
    for (long i = 0; i < r2; ++i) lim.period.push_back(k.entry(n_b - 1 - i));
    QuadSurd stilde = cf_value(lim);
    bool attained = t.s >= stilde;
    consider(t.r + (attained ? t.s : stilde), attained, n_b);
  }
  // Left branches n_b - m*l2: s_n repeats exactly, r_n is monotone.
  for (long j = 1; j <= l2; ++j) {
    long n_b = n_lo - j;
    TailValues t = tails(k, n_b);
    CFExpansion lim;
    for (long i = 0; i < l2; ++i) lim.period.push_back(k.entry(n_b + i));
    QuadSurd rtilde = cf_value(lim);
    bool attained = t.r >= rtilde;
    consider(t.s + (attained ? t.r : rtilde), attained, n_b);
  }
  return best;
}

}  // namespace mbs
