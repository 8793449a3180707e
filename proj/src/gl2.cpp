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

#include "mbs/gl2.hpp"

#include <stdexcept>

namespace mbs {

GL2::GL2(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  Int det = a_ * d_ - b_ * c_;
  if (det != 1 && det != -1) {
    throw std::invalid_argument("GL2 entries must have determinant +-1");
  }
  // Global sign: make the first nonzero of a, b, c, d positive.
  int lead = 0;
  if (a_ != 0) lead = sgn(a_);
  else if (b_ != 0) lead = sgn(b_);
  else if (c_ != 0) lead = sgn(c_);
  else lead = sgn(d_);
  if (lead < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

int GL2::det() const { return a_ * d_ - b_ * c_ == 1 ? 1 : -1; }

GL2 GL2::inverse() const { return GL2(d_, -b_, -c_, a_); }

GL2 GL2::operator*(const GL2& o) const {
  return GL2(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
             c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

bool GL2::operator==(const GL2& o) const {
  return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
}

std::string GL2::to_string() const {
  return "(" + a_.get_str() + "," + b_.get_str() + ";" + c_.get_str() + "," +
         d_.get_str() + ")";
}

ExtendedReal moebius(const GL2& m, const ExtendedReal& x) {
  if (x.is_infinite()) {
    if (m.c() == 0) return ExtendedReal::infinity();
    return ExtendedReal(QuadSurd(Rational(m.a(), m.c())));
  }
  const QuadSurd& v = x.finite();
  QuadSurd den = QuadSurd(m.c()) * v + QuadSurd(m.d());
  if (den.is_zero()) return ExtendedReal::infinity();
  return ExtendedReal((QuadSurd(m.a()) * v + QuadSurd(m.b())) / den);
}

GL2 cusp_to_infinity(const ExtendedReal& c) {
  if (c.is_infinite()) return GL2::identity();
  if (!c.finite().is_rational()) {
    throw std::invalid_argument("cusp_to_infinity: irrational point");
  }
  Rational v = c.finite().rational_value();
  Int p = v.get_num(), q = v.get_den();
  Int g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), p.get_mpz_t(),
             q.get_mpz_t());
  // x p + y q = 1, so (x y; q -p) has determinant -1 and kills p/q.
  return GL2(x, y, q, -p);
}

}  // namespace mbs
