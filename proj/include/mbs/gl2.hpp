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

#ifndef MBS_GL2_H_
#define MBS_GL2_H_

#include <string>

#include "mbs/quadsurd.hpp"

namespace mbs {

// Integer matrix (a b; c d) with determinant +-1, taken modulo global sign.
// The stored representative has its first nonzero entry (in the order a, b,
// c, d) positive.  Instances of the three reflection generators:
//
//   gen_A = (0 1; 1 0)   inversion in the unit circle,
//   gen_B = (-1 0; 0 1)  reflection in the line x = 0,
//   gen_C = (-1 1; 0 1)  reflection in the line x = 1/2,
//
// which generate the extended modular group.
class GL2 {
 public:
  GL2() : a_(1), b_(0), c_(0), d_(1) {}
  GL2(Int a, Int b, Int c, Int d);

  static GL2 identity() { return GL2(); }
  static GL2 gen_A() { return GL2(0, 1, 1, 0); }
  static GL2 gen_B() { return GL2(-1, 0, 0, 1); }
  static GL2 gen_C() { return GL2(-1, 1, 0, 1); }
  // Continued fraction step (k 1; 1 0).
  static GL2 cf_step(const Int& k) { return GL2(k, 1, 1, 0); }
  // Translation z -> z + n.
  static GL2 translation(const Int& n) { return GL2(1, n, 0, 1); }

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }

  // +1 or -1; the representative's determinant is sign-invariant.
  int det() const;
  GL2 inverse() const;  // the adjugate, which inverts projectively
  GL2 operator*(const GL2& o) const;
  bool operator==(const GL2& o) const;
  bool operator!=(const GL2& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Int a_, b_, c_, d_;
};

// Moebius action (a x + b) / (c x + d) on the boundary of the upper half
// plane.  A zero denominator, or an infinite input with c = 0, yields the
// point at infinity.
ExtendedReal moebius(const GL2& m, const ExtendedReal& x);

// Matrix sending the cusp c (a rational number or infinity) to infinity.
// Throws std::invalid_argument for an irrational input.
GL2 cusp_to_infinity(const ExtendedReal& c);

}  // namespace mbs

#endif  // MBS_GL2_H_
