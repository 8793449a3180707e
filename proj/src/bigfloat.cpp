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

#include "mbs/bigfloat.hpp"

#include <stdexcept>

namespace mbs {

namespace {

// 2 * atanh(t) = ln((1+t)/(1-t)) by series, |t| <= 1/3.
mpf_class two_atanh(const mpf_class& t, unsigned prec) {
  mpf_class term(t, prec), sum(t, prec), t2(t * t, prec);
  mpf_class eps(1, prec);
  eps >>= prec + 8;
  for (unsigned long k = 3;; k += 2) {
    term *= t2;
    mpf_class inc = term / k;
    sum += inc;
    if (::abs(inc) < eps * ::abs(sum)) break;
    if (k > 16 * prec) throw std::runtime_error("atanh series stalled");
  }
  return 2 * sum;
}

mpf_class ln2(unsigned prec) {
  mpf_class third(1, prec);
  third /= 3;
  return two_atanh(third, prec);
}

}  // namespace

mpf_class mpf_ln(const mpf_class& x) {
  if (x <= 0) throw std::domain_error("mpf_ln of nonpositive");
  unsigned prec = x.get_prec();
  long k;
  double m0 = mpf_get_d_2exp(&k, x.get_mpf_t());
  (void)m0;
  // x = m * 2^k with m in [1/2, 1).
  mpf_class m(x, prec);
  if (k >= 0) {
    m >>= static_cast<unsigned long>(k);
  } else {
    m <<= static_cast<unsigned long>(-k);
  }
  mpf_class t = (m - 1) / (m + 1);  // m in [1/2,1) gives t in [-1/3, 0)
  mpf_class lnm = two_atanh(t, prec);
  return lnm + static_cast<long>(k) * ln2(prec);
}

mpf_class mpf_of(const QuadSurd& x, unsigned prec_bits) {
  mpf_class p(x.p(), prec_bits), q(x.q(), prec_bits), r(x.r(), prec_bits),
      d(x.d(), prec_bits);
  return (p + q * sqrt(d)) / r;
}

mpf_class mpf_of(const Rational& x, unsigned prec_bits) {
  mpf_class n(x.get_num(), prec_bits), de(x.get_den(), prec_bits);
  return n / de;
}

}  // namespace mbs
