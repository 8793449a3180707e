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

#include "mbs/cfrac.hpp"

#include <map>
#include <sstream>

namespace mbs {

namespace {

long to_long(const Int& v) {
  if (!v.fits_slong_p()) {
    throw std::overflow_error("continued fraction digit exceeds long");
  }
  return v.get_si();
}

// 2x2 integer continuant matrix of a digit word.
struct Mat {
  Int a{1}, b{0}, c{0}, d{1};
  void push(long k) {
    // Right-multiply by (k 1; 1 0).
    Int na = a * k + b, nc = c * k + d;
    b = a;
    d = c;
    a = na;
    c = nc;
  }
};

}  // namespace

CFResult cf_expand_any(const QuadSurd& x) {
  if (x.is_rational()) {
    FiniteCF out;
    Rational v = x.rational_value();
    while (true) {
      Int k = floor_of(v);
      out.terms.push_back(to_long(k));
      Rational frac = v - Rational(k);
      if (frac == 0) break;
      v = Rational(1) / frac;
    }
    // Canonical tail: [..., a, 1] -> [..., a+1].
    size_t n = out.terms.size();
    if (n >= 2 && out.terms[n - 1] == 1) {
      out.terms.pop_back();
      out.terms.back() += 1;
    }
    return out;
  }
  CFExpansion out;
  std::vector<long> digits;
  std::map<QuadSurd, size_t> seen;
  QuadSurd z = x;
  while (true) {
    auto it = seen.find(z);
    if (it != seen.end()) {
      size_t start = it->second;
      out.preperiod.assign(digits.begin(), digits.begin() + start);
      out.period.assign(digits.begin() + start, digits.end());
      return out;
    }
    seen.emplace(z, digits.size());
    Int k = z.floor();
    digits.push_back(to_long(k));
    z = QuadSurd(1) / (z - QuadSurd(Rational(k)));
  }
}

CFExpansion cf_expand(const QuadSurd& x) {
  CFResult r = cf_expand_any(x);
  if (std::holds_alternative<FiniteCF>(r)) {
    throw std::domain_error("cf_expand of rational value");
  }
  return std::get<CFExpansion>(r);
}

QuadSurd cf_value(const CFExpansion& e) {
  if (e.period.empty()) throw std::domain_error("empty period");
  Mat m;
  for (long k : e.period) m.push(k);
  // Fixed point of z -> (az+b)/(cz+d), larger root: c z^2 + (d-a) z - b = 0.
  Int disc = (m.d - m.a) * (m.d - m.a) + 4 * m.b * m.c;
  QuadSurd z(m.a - m.d, 1, 2 * m.c, disc);
  Mat pre;
  for (long k : e.preperiod) pre.push(k);
  QuadSurd num = QuadSurd(pre.a) * z + QuadSurd(pre.b);
  QuadSurd den = QuadSurd(pre.c) * z + QuadSurd(pre.d);
  return num / den;
}

QuadSurd cf_value(const FiniteCF& e) {
  if (e.terms.empty()) throw std::domain_error("empty finite expansion");
  Mat m;
  for (long k : e.terms) m.push(k);
  Rational v(m.a, m.c);
  v.canonicalize();
  return QuadSurd(v);
}

std::string cf_to_string(const CFExpansion& e) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < e.preperiod.size(); ++i) {
    if (i) os << ",";
    os << e.preperiod[i];
  }
  if (!e.preperiod.empty()) os << ",";
  os << "per(";
  for (size_t i = 0; i < e.period.size(); ++i) {
    if (i) os << ",";
    os << e.period[i];
  }
  os << ")]";
  return os.str();
}

}  // namespace mbs
