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

#ifndef MBS_QUADSURD_H_
#define MBS_QUADSURD_H_

#include <optional>
#include <string>

#include "mbs/numeric.hpp"

namespace mbs {

// Exact element (p + q*sqrt(d))/r of a real quadratic field.
//
// Canonical form: r > 0, gcd(p, q, r) = 1, d squarefree with square factors
// absorbed into q, and q = 0 iff the value is rational (then d = 0).
// Equality is structural.  Values are immutable after construction.
class QuadSurd {
 public:
  QuadSurd() : p_(0), q_(0), r_(1), d_(0) {}
  QuadSurd(long v) : p_(v), q_(0), r_(1), d_(0) {}  // NOLINT: implicit
  QuadSurd(const Int& v) : p_(v), q_(0), r_(1), d_(0) {}  // NOLINT: implicit
  QuadSurd(const Rational& v);  // NOLINT: implicit
  QuadSurd(Int p, Int q, Int r, Int d);

  static QuadSurd sqrt_of(const Int& n);  // sqrt(n), n >= 0

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  const Int& r() const { return r_; }
  const Int& d() const { return d_; }

  bool is_rational() const { return q_ == 0; }
  bool is_zero() const { return q_ == 0 && p_ == 0; }
  Rational rational_value() const;  // requires is_rational()

  QuadSurd conjugate() const;      // (p - q*sqrt(d))/r
  Rational norm() const;           // x * conj(x)
  Rational trace() const;          // x + conj(x)
  int sign() const;
  QuadSurd abs() const;

  QuadSurd operator-() const;
  QuadSurd operator+(const QuadSurd& o) const;
  QuadSurd operator-(const QuadSurd& o) const;
  QuadSurd operator*(const QuadSurd& o) const;
  QuadSurd operator/(const QuadSurd& o) const;

  bool operator==(const QuadSurd& o) const {
    return p_ == o.p_ && q_ == o.q_ && r_ == o.r_ && d_ == o.d_;
  }
  bool operator!=(const QuadSurd& o) const { return !(*this == o); }

  // Exact total order consistent with the real embedding, including values
  // from different quadratic fields (compared by controlled squaring).
  int cmp(const QuadSurd& o) const;
  bool operator<(const QuadSurd& o) const { return cmp(o) < 0; }
  bool operator<=(const QuadSurd& o) const { return cmp(o) <= 0; }
  bool operator>(const QuadSurd& o) const { return cmp(o) > 0; }
  bool operator>=(const QuadSurd& o) const { return cmp(o) >= 0; }

  Int floor() const;

  // Square root inside the same field, if one exists.
  std::optional<QuadSurd> field_sqrt() const;

  // Round-half-even decimal string with `sig` significant digits.
  std::string decimal(unsigned sig = 15) const;
  double to_double() const;
  std::string to_string() const;  // "(p+q*sqrt(d))/r" literal

 private:
  void canonicalize();

  Int p_, q_, r_, d_;
};

inline QuadSurd operator+(long a, const QuadSurd& x) { return QuadSurd(a) + x; }
inline QuadSurd operator-(long a, const QuadSurd& x) { return QuadSurd(a) - x; }
inline QuadSurd operator*(long a, const QuadSurd& x) { return QuadSurd(a) * x; }
inline QuadSurd operator/(long a, const QuadSurd& x) { return QuadSurd(a) / x; }

// A real value or the single (projective) point at infinity.  In ordering
// contexts infinity compares greater than every finite value.
class ExtendedReal {
 public:
  ExtendedReal() : finite_(QuadSurd(0)), infinite_(false) {}
  ExtendedReal(QuadSurd v) : finite_(std::move(v)), infinite_(false) {}  // NOLINT
  static ExtendedReal infinity() {
    ExtendedReal e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  const QuadSurd& finite() const {
    if (infinite_) throw std::domain_error("finite() on infinity");
    return finite_;
  }

  bool operator==(const ExtendedReal& o) const {
    if (infinite_ || o.infinite_) return infinite_ == o.infinite_;
    return finite_ == o.finite_;
  }
  int cmp(const ExtendedReal& o) const {
    if (infinite_ && o.infinite_) return 0;
    if (infinite_) return 1;
    if (o.infinite_) return -1;
    return finite_.cmp(o.finite_);
  }
  bool operator<(const ExtendedReal& o) const { return cmp(o) < 0; }

  std::string to_string() const {
    return infinite_ ? "inf" : finite_.to_string();
  }

 private:
  QuadSurd finite_;
  bool infinite_;
};

}  // namespace mbs

#endif  // MBS_QUADSURD_H_
