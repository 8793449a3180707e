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

#ifndef MBS_FORM_H_
#define MBS_FORM_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbs/gl2.hpp"
#include "mbs/quadsurd.hpp"
#include "mbs/sequence.hpp"

namespace mbs {

// Binary quadratic form a x^2 + b xy + c y^2 with coefficients in a common
// real quadratic field and nonzero discriminant b^2 - 4ac.  Coefficients are
// full surds rather than rationals so that forms built from arbitrary
// quadratic-surd geodesic endpoints stay exact.
class BinaryForm {
 public:
  BinaryForm(QuadSurd a, QuadSurd b, QuadSurd c);

  const QuadSurd& a() const { return a_; }
  const QuadSurd& b() const { return b_; }
  const QuadSurd& c() const { return c_; }
  const QuadSurd& disc() const { return disc_; }

  QuadSurd eval(const QuadSurd& x, const QuadSurd& y) const;
  BinaryForm operator-() const;
  bool operator==(const BinaryForm& o) const;
  bool operator!=(const BinaryForm& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  QuadSurd a_, b_, c_, disc_;
};

// Roots of Q(x, 1).  The first root is (-b + sqrt(d)) / (2a); for a = 0 the
// finite root -c/b is first when b > 0 and second when b < 0.
struct RootPair {
  ExtendedReal alpha;
  ExtendedReal beta;
};

// (Q|M)(x, y) = det(M) Q(ax + by, cx + dy).  Discriminant preserving; the
// first root transforms as alpha -> M^-1(alpha).
BinaryForm act(const BinaryForm& q, const GL2& m);

// Requires positive discriminant which is a square in the coefficient field
// (automatic for rational coefficients).
RootPair roots(const BinaryForm& q);

// alpha > 1 and -1 < beta < 0.
bool is_reduced(const BinaryForm& q);

struct ReduceResult {
  BinaryForm reduced;
  GL2 witness;  // act(input, witness) == reduced
  int parity;   // number of reduction steps mod 2; each step has det -1
};

// Classical reduction by continued fraction steps on the first root.
// Throws PreconditionError when the form represents zero (such classes have
// no reduced member; callers route them to the improper-billiard path).
ReduceResult reduce(const BinaryForm& q);

// Q*(x, y) = -Q(-y, x), coefficients (-c, b, -a).  Involution; preserves
// reducedness; alpha_{Q*} = -1/beta_Q.
BinaryForm star(const BinaryForm& q);

// d^{-1/2} min(|a + c|, |2a + b + c|, |2c + b + a|).
QuadSurd nu(const BinaryForm& q);

// Neighbor of a reduced form in its chain: +1 steps toward the expansion of
// alpha, -1 undoes that.  Iterating in either direction cycles through all
// reduced forms equivalent to Q.
BinaryForm chain_step(const BinaryForm& q, int direction);

// floor(alpha_Q), the continued fraction digit consumed by a forward step.
Int chain_digit(const BinaryForm& q);

// Full forward cycle of a reduced form: forms[0] == q, forms[i+1] ==
// chain_step(forms[i], +1), and one more step returns to forms[0].
// digits[i] is the digit consumed when leaving forms[i].
struct ChainCycle {
  std::vector<BinaryForm> forms;
  std::vector<Int> digits;
};

ChainCycle chain_cycle(const BinaryForm& q);

struct ClassPredicates {
  bool represents_zero;             // some root rational or infinite
  bool reciprocal;                  // Q equivalent to -Q
  bool ambiguous;                   // some chain element has a | b
  bool primitive_integral_scalable; // some multiple of Q is primitive integral
};

ClassPredicates class_predicates(const BinaryForm& q);

// Primitive integral form kappa * Q together with kappa, when one exists.
// kappa is positive and possibly irrational (e.g. for sqrt(21) * Q).
std::optional<std::pair<BinaryForm, QuadSurd>> to_primitive_integral(
    const BinaryForm& q);

struct EquivalenceResult {
  bool equivalent;
  bool properly;  // some witness with determinant +1 exists
  GL2 witness;    // act(q1, witness) == q2; det +1 whenever properly
};

// Decides GL2(Z)-equivalence by reducing both forms and aligning their digit
// sequences (a shared discriminant plus a shift of marked sequences pins the
// reduced forms to each other, so no cycle closure is needed).  Requires both
// discriminants positive and neither form representing zero.
EquivalenceResult equivalent_forms(const BinaryForm& q1, const BinaryForm& q2);

struct PellSolution {
  Int t, u;          // minimal positive solution of t^2 - d u^2 = sign
  int sign;          // -4 when that side is solvable, else +4
  QuadSurd epsilon;  // (t + u sqrt(d)) / 2, the fundamental automorph factor
};

// Solves t^2 - d u^2 = +-4 for d > 0 a nonsquare with d = 0 or 1 mod 4, by
// walking one period of the principal form's chain; the resulting unit is
// the fundamental one, so (t, u) is minimal.
PellSolution pell(const Int& d);

// Doubly infinite digit sequence K_Q of the class of Q: forward entries
// k_1, k_2, ... expand alpha of the reduced representative, backward entries
// k_0, k_-1, ... expand -1/beta.
BilliardSeq form_sequence(const BinaryForm& q);

}  // namespace mbs

#endif  // MBS_FORM_H_
