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

#ifndef MBS_SEQUENCE_H_
#define MBS_SEQUENCE_H_

#include <string>
#include <vector>

#include "mbs/cfrac.hpp"
#include "mbs/quadsurd.hpp"

namespace mbs {

// Doubly infinite sequence of positive integers, periodic toward both ends:
//
//   ... left left | core | right right ...
//
// In layout coordinates the core occupies positions 1..core.size(), the left
// period ends at position 0, and the right period starts at core.size()+1.
// The indexed entry k_n is the layout entry at position n - 1 + origin, so
// with the default origin 1, k_1 is the first core entry (or the first right
// period entry when the core is empty).
class BilliardSeq {
 public:
  BilliardSeq(std::vector<long> left, std::vector<long> core,
              std::vector<long> right, long origin = 1);

  static BilliardSeq periodic(std::vector<long> period);

  const std::vector<long>& left() const { return left_; }
  const std::vector<long>& core() const { return core_; }
  const std::vector<long>& right() const { return right_; }
  long origin() const { return origin_; }

  long entry(long n) const;          // k_n
  BilliardSeq shifted(long j) const; // k'_n = k_{n+j}
  BilliardSeq reversal() const;      // k'_n = k_{1-n}

  // Absorbs period rotations into shorter cores and reduces periods to
  // primitive words.  Preserves every entry k_n.
  BilliardSeq canonical() const;

  bool purely_periodic() const;  // single rotation generates the sequence

  std::string to_string() const;  // "per(3,1);4;per(1,3)" literal

 private:
  long layout(long m) const;

  std::vector<long> left_, core_, right_;
  long origin_;
};

struct TailValues {
  QuadSurd r;  // r_n = [k_n; k_(n+1), ...], > 1
  QuadSurd s;  // s_n = [0; k_(n-1), k_(n-2), ...], in (0, 1)
};

TailValues tails(const BilliardSeq& k, long n);

// All shifts j with k.entry(n + j) == l.entry(n) for every n, listed within
// a window wide enough to contain a full period's worth of solutions (so
// both parities appear whenever they exist at all).
std::vector<long> seq_shifts(const BilliardSeq& k, const BilliardSeq& l);

// True iff some shift j (even j when proper) aligns all entries.
bool seq_equivalent(const BilliardSeq& k, const BilliardSeq& l, bool proper);

struct SeqClass {
  bool periodic;
  bool palindromic;
};

SeqClass classify_seq(const BilliardSeq& k);

struct TailExtremum {
  QuadSurd value;  // sup over n of r_n + s_n
  bool attained;   // false when the sup is only approached along a tail
  long index;      // an achieving index, or the base of the limiting branch
};

// Supremum of r_n + s_n over all positions.  Exact: the core window is
// scanned directly and each periodic tail contributes a monotone branch
// whose endpoints (first value and purely periodic limit) bound it.  Both
// tails of the sequence must generate the same quadratic field.
TailExtremum sup_tail_sum(const BilliardSeq& k);

}  // namespace mbs

#endif  // MBS_SEQUENCE_H_
