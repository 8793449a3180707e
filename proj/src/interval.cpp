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

#include "mbs/interval.hpp"

#include <algorithm>

namespace mbs {

namespace {

// Endpoint with a -inf/finite/+inf class tag; arithmetic follows the closed
// interval conventions (0 * inf contributes 0 to endpoint products).
struct Ext {
  Rational v;
  int cls;  // -1, 0, +1
};

Ext ext_neg(const Ext& a) { return {-a.v, -a.cls}; }

Ext ext_add(const Ext& a, const Ext& b) {
  if (a.cls != 0 && b.cls != 0 && a.cls != b.cls) {
    throw EnclosureError("inf - inf in interval endpoint arithmetic");
  }
  if (a.cls != 0) return a;
  if (b.cls != 0) return b;
  return {a.v + b.v, 0};
}

Ext ext_mul(const Ext& a, const Ext& b) {
  auto rsgn = [](const Ext& e) {
    return e.cls != 0 ? e.cls : sgn(e.v);
  };
  if (a.cls != 0 || b.cls != 0) {
    int s = rsgn(a) * rsgn(b);
    if (s == 0) return {Rational(0), 0};
    return {Rational(0), s};
  }
  return {a.v * b.v, 0};
}

bool ext_less(const Ext& a, const Ext& b) {
  if (a.cls != b.cls) return a.cls < b.cls;
  if (a.cls != 0) return false;
  return a.v < b.v;
}

}  // namespace

Interval::Interval(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_inf_(false), hi_inf_(false) {
  lo_.canonicalize();
  hi_.canonicalize();
  if (lo_ > hi_) throw EnclosureError("interval with lo > hi");
}

Interval Interval::ray_ge(const Rational& lo) {
  Interval x;
  x.lo_ = lo;
  x.lo_.canonicalize();
  x.hi_inf_ = true;
  return x;
}

Interval Interval::ray_le(const Rational& hi) {
  Interval x;
  x.hi_ = hi;
  x.hi_.canonicalize();
  x.lo_inf_ = true;
  return x;
}

Interval Interval::whole() {
  Interval x;
  x.lo_inf_ = x.hi_inf_ = true;
  return x;
}

bool Interval::contains(const Rational& v) const {
  if (!lo_inf_ && v < lo_) return false;
  if (!hi_inf_ && v > hi_) return false;
  return true;
}

Rational Interval::width() const {
  if (!bounded()) throw EnclosureError("width of unbounded interval");
  return hi_ - lo_;
}

Interval Interval::operator-() const {
  Interval x;
  x.lo_ = -hi_;
  x.hi_ = -lo_;
  x.lo_inf_ = hi_inf_;
  x.hi_inf_ = lo_inf_;
  return x;
}

Interval Interval::operator+(const Interval& o) const {
  Interval x;
  x.lo_inf_ = lo_inf_ || o.lo_inf_;
  x.hi_inf_ = hi_inf_ || o.hi_inf_;
  if (!x.lo_inf_) x.lo_ = lo_ + o.lo_;
  if (!x.hi_inf_) x.hi_ = hi_ + o.hi_;
  return x;
}

Interval Interval::operator-(const Interval& o) const { return *this + (-o); }

Interval Interval::operator*(const Interval& o) const {
  Ext a{lo_, lo_inf_ ? -1 : 0}, b{hi_, hi_inf_ ? 1 : 0};
  Ext c{o.lo_, o.lo_inf_ ? -1 : 0}, d{o.hi_, o.hi_inf_ ? 1 : 0};
  Ext prods[4] = {ext_mul(a, c), ext_mul(a, d), ext_mul(b, c), ext_mul(b, d)};
  Ext lo = prods[0], hi = prods[0];
  for (int i = 1; i < 4; ++i) {
    if (ext_less(prods[i], lo)) lo = prods[i];
    if (ext_less(hi, prods[i])) hi = prods[i];
  }
  Interval x;
  x.lo_inf_ = lo.cls < 0;
  x.hi_inf_ = hi.cls > 0;
  if (!x.lo_inf_) x.lo_ = lo.v;
  if (!x.hi_inf_) x.hi_ = hi.v;
  if (lo.cls > 0 || hi.cls < 0) throw EnclosureError("interval product order");
  return x;
}

Interval Interval::reciprocal() const {
  bool pos = !lo_inf_ && lo_ > 0;
  bool neg = !hi_inf_ && hi_ < 0;
  bool lo_zero = !lo_inf_ && lo_ == 0;
  bool hi_zero = !hi_inf_ && hi_ == 0;
  if (!pos && !neg && !lo_zero && !hi_zero) {
    throw EnclosureError("reciprocal of interval containing zero");
  }
  // Zero endpoints map to unbounded results on the corresponding side.
  Interval x;
  if (pos || lo_zero) {
    if (lo_zero && hi_zero) throw EnclosureError("reciprocal of [0,0]");
    x.lo_inf_ = false;
    x.lo_ = hi_inf_ ? Rational(0) : Rational(1) / hi_;
    x.hi_inf_ = lo_zero;
    if (!x.hi_inf_) x.hi_ = Rational(1) / lo_;
  } else {
    x.hi_inf_ = false;
    x.hi_ = lo_inf_ ? Rational(0) : Rational(1) / lo_;
    x.lo_inf_ = hi_zero;
    if (!x.lo_inf_) x.lo_ = Rational(1) / hi_;
  }
  return x;
}

Interval Interval::operator/(const Interval& o) const {
  return *this * o.reciprocal();
}

Interval Interval::abs() const {
  if (!lo_inf_ && lo_ >= 0) return *this;
  if (!hi_inf_ && hi_ <= 0) return -*this;
  Interval x;
  x.lo_ = 0;
  x.hi_inf_ = lo_inf_ || hi_inf_;
  if (!x.hi_inf_) x.hi_ = std::max(Rational(-lo_), hi_);
  return x;
}

Interval Interval::hull(const Interval& o) const {
  Interval x;
  x.lo_inf_ = lo_inf_ || o.lo_inf_;
  x.hi_inf_ = hi_inf_ || o.hi_inf_;
  if (!x.lo_inf_) x.lo_ = std::min(lo_, o.lo_);
  if (!x.hi_inf_) x.hi_ = std::max(hi_, o.hi_);
  return x;
}

std::string Interval::to_string() const {
  std::string l = lo_inf_ ? "-inf" : lo_.get_str();
  std::string h = hi_inf_ ? "+inf" : hi_.get_str();
  return "[" + l + ", " + h + "]";
}

}  // namespace mbs
