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

#ifndef MBS_INTERVAL_H_
#define MBS_INTERVAL_H_

#include <string>

#include "mbs/numeric.hpp"

namespace mbs {

struct EnclosureError : std::runtime_error {
  explicit EnclosureError(const std::string& what) : std::runtime_error(what) {}
};

// Closed interval with exact rational endpoints, optionally unbounded on
// either side.  Every operation returns an enclosure of the exact image;
// endpoint arithmetic is exact, so enclosures are tight except for division
// by an interval touching zero.
class Interval {
 public:
  Interval() : lo_(0), hi_(0), lo_inf_(false), hi_inf_(false) {}
  Interval(Rational lo, Rational hi);
  static Interval point(const Rational& v) { return Interval(v, v); }
  static Interval ray_ge(const Rational& lo);   // [lo, +inf)
  static Interval ray_le(const Rational& hi);   // (-inf, hi]
  static Interval whole();

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool lo_unbounded() const { return lo_inf_; }
  bool hi_unbounded() const { return hi_inf_; }
  bool bounded() const { return !lo_inf_ && !hi_inf_; }

  bool contains(const Rational& v) const;
  bool contains_zero() const { return contains(Rational(0)); }
  Rational width() const;  // requires bounded()

  Interval operator-() const;
  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  Interval operator/(const Interval& o) const;
  Interval reciprocal() const;
  Interval abs() const;
  Interval hull(const Interval& o) const;

  std::string to_string() const;

 private:
  Rational lo_, hi_;
  bool lo_inf_, hi_inf_;
};

inline Interval operator+(const Rational& a, const Interval& x) {
  return Interval::point(a) + x;
}
inline Interval operator-(const Rational& a, const Interval& x) {
  return Interval::point(a) - x;
}
inline Interval operator*(const Rational& a, const Interval& x) {
  return Interval::point(a) * x;
}

}  // namespace mbs

#endif  // MBS_INTERVAL_H_
