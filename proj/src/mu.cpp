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

#include <numeric>
#include <stdexcept>
#include <vector>

#include "mbs/cfrac.hpp"
#include "mbs/spectra.hpp"

namespace mbs {
namespace {

// Writing r = r_n and s = s_n, the recurrences give r_(n-1) + s_(n-1) =
// 1/r + 1/s, so every one of the six tail quantities is a function of the
// single cut (r, s):
//
//   mu'_n           |1 - rs| / (r + s)
//   mu''_n          |2 - r + s - rs| / (r + s)
//   mu'''_n         |2rs + r - s - 1| / (r + s)
//   mu''_(2-n)(K*)  |2rs - r + s - 1| / (r + s)
//   mu'''_(2-n)(K*) |2 + r - s - rs| / (r + s)
//
// using that the reversal swaps the cut to (1/s, 1/r) at the mirrored
// position, which fixes the first quantity and exchanges the roles shown.
QuadSurd numerator_of(int j, const QuadSurd& r, const QuadSurd& s) {
  switch (j) {
    case 1: return 1 - r * s;
    case 2: return 2 - r + s - r * s;
    case 3: return 2 * (r * s) + r - s - 1;
    case 4: return 2 * (r * s) - r + s - 1;
    case 5: return 2 + r - s - r * s;
    default: throw std::logic_error("mu functional index out of range");
  }
}

// Numerator coefficients (u, v) of the same quantity as a function of one
// tail with the other held fixed: |u x + v| / (x + w).
void linear_in_s(int j, const QuadSurd& r, QuadSurd* u, QuadSurd* v) {
  switch (j) {
    case 1: *u = -r;            *v = QuadSurd(1); break;
    case 2: *u = 1 - r;         *v = 2 - r;       break;
    case 3: *u = 2 * r - 1;     *v = r - 1;       break;
    case 4: *u = 2 * r + 1;     *v = -(r + 1);    break;
    case 5: *u = -(1 + r);      *v = 2 + r;       break;
    default: throw std::logic_error("mu functional index out of range");
  }
}

void linear_in_r(int j, const QuadSurd& s, QuadSurd* u, QuadSurd* v) {
  switch (j) {
    case 1: *u = -s;            *v = QuadSurd(1); break;
    case 2: *u = -(1 + s);      *v = 2 + s;       break;
    case 3: *u = 2 * s + 1;     *v = -(s + 1);    break;
    case 4: *u = 2 * s - 1;     *v = s - 1;       break;
    case 5: *u = 1 - s;         *v = 2 - s;       break;
    default: throw std::logic_error("mu functional index out of range");
  }
}

// Unnormalized 2x2 integer matrix.  GL2 reduces modulo global sign, which
// would scramble the sign bookkeeping below, so branches track their own.
struct Mat2 {
  Int a, b, c, d;

  Mat2 operator*(const Mat2& o) const {
    return Mat2{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
                c * o.b + d * o.d};
  }
};

const Mat2 kIdentity{1, 0, 0, 1};

QuadSurd apply(const Mat2& m, const QuadSurd& x) {
  return (QuadSurd(m.a) * x + QuadSurd(m.b)) /
         (QuadSurd(m.c) * x + QuadSurd(m.d));
}

struct Inf {
  QuadSurd value;
  bool attained = false;
  long index = 0;
  bool have = false;
};

void consider(Inf* inf, const QuadSurd& v, bool attained, long index) {
  if (!inf->have || v < inf->value ||
      (v == inf->value && attained && !inf->attained)) {
    *inf = Inf{v, attained, index, true};
  }
}

// Infimum of |u x + v| / (x + w) along x_t = h^t(x0), t >= 0, where h has
// nonnegative entries and an even word length, so x_t marches monotonically
// from x0 to the fixed point xlim.  The value is a Moebius function of x,
// hence monotone along the branch: with equal signs at both ends the
// infimum sits at an endpoint, and with opposite signs it sits at the
// single sign change, located exactly by doubling and bisecting exact
// matrix powers.
void branch_inf(const QuadSurd& u, const QuadSurd& v, const QuadSurd& w,
                const QuadSurd& x0, const QuadSurd& xlim, const Mat2& h,
                long base, long stride, Inf* inf) {
  auto value = [&](const QuadSurd& x) {
    return (u * x + v).abs() / (x + w);
  };
  int sign0 = (u * x0 + v).sign();
  if (sign0 == 0) {
    consider(inf, QuadSurd(0), true, base);
    return;
  }
  int sign_lim = (u * xlim + v).sign();
  if (sign_lim == 0 || sign_lim == sign0) {
    QuadSurd v0 = value(x0), vl = value(xlim);
    if (v0 <= vl) {
      consider(inf, v0, true, base);
    } else {
      consider(inf, vl, false, base);  // approached along the tail only
    }
    return;
  }
  // Sign of u x_t + v from the power p = h^t: positive denominators make it
  // the sign of (u p.a + v p.c) x0 + (u p.b + v p.d).
  auto sign_at = [&](const Mat2& p) {
    return ((u * QuadSurd(p.a) + v * QuadSurd(p.c)) * x0 + u * QuadSurd(p.b) +
            v * QuadSurd(p.d))
        .sign();
  };
  std::vector<Mat2> pow2 = {h};  // h^(2^i)
  long t_hi = 1;
  while (sign_at(pow2.back()) == sign0) {
    if (t_hi > (1L << 20)) {
      throw std::logic_error("branch sign change not found");
    }
    pow2.push_back(pow2.back() * pow2.back());
    t_hi *= 2;
  }
  auto power = [&](long t) {
    Mat2 p = kIdentity;
    for (size_t i = 0; t; ++i, t >>= 1) {
      if (t & 1) p = p * pow2[i];
    }
    return p;
  };
  long lo = t_hi / 2, hi = t_hi;  // sign flips somewhere in (lo, hi]
  while (hi - lo > 1) {
    long mid = lo + (hi - lo) / 2;
    (sign_at(power(mid)) == sign0 ? lo : hi) = mid;
  }
  QuadSurd before = value(apply(power(hi - 1), x0));
  QuadSurd after = value(apply(power(hi), x0));
  if (before <= after) {
    consider(inf, before, true, base + (hi - 1) * stride);
  } else {
    consider(inf, after, true, base + hi * stride);
  }
}

}  // namespace

QuadSurd mu_functional(int j, const QuadSurd& r, const QuadSurd& s) {
  return numerator_of(j, r, s).abs() / (r + s);
}

MuProfile mu_profile(const BilliardSeq& seq) {
  const BilliardSeq k = seq.canonical();
  {
    // Every cut (r_n, s_n) mixes the two tail values in one product, so the
    // whole profile lives in a single quadratic field only when both periods
    // generate the same one. Sequences read off a quadratic form always do.
    TailValues t = tails(k, 1);
    if (t.r.d() != t.s.d()) {
      throw PreconditionError("mu profile requires both tails in one field: sqrt(" +
                              t.r.d().get_str() + ") vs sqrt(" + t.s.d().get_str() + ")");
    }
  }
  const long c = static_cast<long>(k.core().size());
  const long rl = static_cast<long>(k.right().size());
  const long ll = static_cast<long>(k.left().size());
  const long r2 = rl % 2 ? 2 * rl : rl;
  const long l2 = ll % 2 ? 2 * ll : ll;
  const long x0 = c + 2 - k.origin();  // k_n right-periodic for n >= x0
  const long y0 = 1 - k.origin();      // k_n left-periodic for n <= y0
  const long pad = 2 * std::lcm(r2, l2) + 8;
  const long n_hi = x0 + pad + r2;
  const long n_lo = y0 - pad - l2;

  Inf inf[6];
  for (long n = n_lo; n <= n_hi; ++n) {
    TailValues t = tails(k, n);
    for (int j = 1; j <= 5; ++j) {
      consider(&inf[j], mu_functional(j, t.r, t.s), true, n);
    }
  }
  // Right branches n_b + t*r2: r repeats exactly there while s contracts
  // monotonically onto its purely periodic limit.
  for (long j = 1; j <= r2; ++j) {
    const long n_b = n_hi + j;
    TailValues t = tails(k, n_b);
    CFExpansion lim;
    lim.preperiod.push_back(0);
    for (long i = 0; i < r2; ++i) lim.period.push_back(k.entry(n_b - 1 - i));
    QuadSurd stilde = cf_value(lim);
    Mat2 h = kIdentity;  // s_(n+1) = 1 / (k_n + s_n) composed over a block
    for (long i = 0; i < r2; ++i) {
      h = Mat2{0, 1, 1, k.entry(n_b + i)} * h;
    }
    for (int f = 1; f <= 5; ++f) {
      QuadSurd u, v;
      linear_in_s(f, t.r, &u, &v);
      branch_inf(u, v, t.r, t.s, stilde, h, n_b, r2, &inf[f]);
    }
  }
  // Left branches n_b - t*l2, the mirror image: s repeats, r contracts.
  for (long j = 1; j <= l2; ++j) {
    const long n_b = n_lo - j;
    TailValues t = tails(k, n_b);
    CFExpansion lim;
    for (long i = 0; i < l2; ++i) lim.period.push_back(k.entry(n_b + i));
    QuadSurd rtilde = cf_value(lim);
    Mat2 h = kIdentity;  // r_(n-1) = k_(n-1) + 1/r_n composed over a block
    for (long i = n_b - l2; i <= n_b - 1; ++i) {
      h = h * Mat2{k.entry(i), 1, 1, 0};
    }
    for (int f = 1; f <= 5; ++f) {
      QuadSurd u, v;
      linear_in_r(f, t.s, &u, &v);
      branch_inf(u, v, t.s, t.r, rtilde, h, n_b, -l2, &inf[f]);
    }
  }

  MuProfile out;
  out.mu1 = inf[1].value;
  out.mu2 = inf[2].value;
  out.mu3 = inf[3].value;
  out.mu1s = inf[1].value;  // |1 - rs|/(r + s) is its own reversal
  out.mu2s = inf[4].value;
  out.mu3s = inf[5].value;
  Inf overall;
  for (int f = 1; f <= 5; ++f) {
    consider(&overall, inf[f].value, inf[f].attained, inf[f].index);
  }
  out.mu = overall.value;
  out.attained = overall.attained;
  out.attained_index = overall.index;
  return out;
}

}  // namespace mbs
