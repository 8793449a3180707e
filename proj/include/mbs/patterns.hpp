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
//
// Certified bounds for entry patterns in billiard sequences.
//
// A pattern constrains a block of consecutive entries; each position is a
// fixed digit or a wildcard ranging over a finite union of integer
// intervals, possibly unbounded above.  pattern_bound encloses one of the
// five tail functionals at a chosen cut, over every doubly infinite
// completion of the pattern, by bracketing the two tails with endpoint
// convergents and taking corners of the resulting box: the functionals are
// Moebius in each tail separately, so box extrema sit at corners and the
// enclosure is exact rational arithmetic throughout.
//
// The named bounds in exclusion_bounds() cover every sequence that is not
// equivalent to one of the three exceptional ones; classify_exceptional
// applies them in order, so each certificate's standing assumption (that
// (1,1) never occurs) is established by the earlier bounds before it is
// used.  Sequences no pattern catches are settled by direct evaluation of
// mu, exactly when both tails share a quadratic field and by certified
// interval refinement otherwise.

#ifndef MBS_PATTERNS_H_
#define MBS_PATTERNS_H_

#include <string>
#include <vector>

#include "mbs/interval.hpp"
#include "mbs/spectra.hpp"

namespace mbs {

// One allowed integer interval for a pattern position; hi == kUnbounded
// means no upper limit.
struct EntryRange {
  static constexpr long kUnbounded = -1;
  long lo;
  long hi;
};

// A pattern position: the union of its allowed ranges.
struct PatternEntry {
  std::vector<EntryRange> allowed;

  static PatternEntry fixed(long k);
  static PatternEntry at_least(long lo);
  static PatternEntry range(long lo, long hi);

  bool contains(long k) const;
  bool is_fixed_one() const;
  bool unbounded() const;
};

using Pattern = std::vector<PatternEntry>;

// Enclosure of tail functional `functional` at the cut whose right tail
// starts at pattern position `pivot`, valid for every completion.  `value`
// bounds the functional itself; `r_range` and `s_range` bound the two tails
// (r_range may be a ray when a wildcard is unbounded).
struct PatternCertificate {
  int functional;
  long pivot;
  Interval r_range;
  Interval s_range;
  Interval value;
};

// Preconditions: pattern nonempty, 0 <= pivot < size, functional in 1..5.
// When `no_adjacent_ones` is set the free entries next to a fixed 1 at
// either end of the pattern are taken >= 2.  Unbounded wildcards need
// `monotone_tail`: the flag records that the enclosure leans on the
// monotonicity of the continued fraction value in each entry, which is what
// makes a corner evaluation at an infinite endpoint legitimate.
PatternCertificate pattern_bound(const Pattern& pattern, long pivot,
                                 int functional, bool no_adjacent_ones = true,
                                 bool monotone_tail = false);

// One certified pattern instance inside a named bound.
struct ExclusionCase {
  std::string label;
  Pattern pattern;
  long pivot;
  int functional;
  bool no_adjacent_ones;
  PatternCertificate certificate;
};

// A named family of patterns sharing one stated constant.  `upper` is the
// largest certified upper endpoint over the cases and never exceeds
// `stated`.
struct ExclusionBound {
  std::string name;
  Rational stated;
  std::vector<ExclusionCase> cases;
  Rational upper;
};

// The nine bounds that exclude every non-exceptional configuration, in the
// order classify_exceptional applies them.  Built once.
const std::vector<ExclusionBound>& exclusion_bounds();

// The three exceptional sequences: (overline{1,3}), (overline{1,2,1,6}) and
// (overline{3,1},4,overline{1,3}) with the 4 at position 1.  Their billiards
// realize the three smallest values of the corner-i spectrum.
const BilliardSeq& exceptional_sequence(int j);

// (sqrt(21) - 3) / 4, the value of mu on the third exceptional sequence.
// Every other class of sequences lies strictly below it.
const QuadSurd& exceptional_threshold();

struct ExceptionalResult {
  bool exceptional = false;
  int family = 0;             // 1..3 when exceptional
  std::string reason;

  bool by_pattern = false;    // witness: a certified pattern occurrence
  std::string bound_name;
  long offset = 0;            // first entry of the occurrence
  bool reversed = false;      // matched against the reversed pattern
  Rational bound_upper;

  bool by_value = false;      // witness: direct evaluation of mu
  bool value_exact = false;
  QuadSurd mu;                // when value_exact
  Rational mu_upper;          // certified upper bound otherwise
};

// Decides whether the sequence is equivalent to one of the three
// exceptional ones.  Non-exceptional sequences come with a witness: the
// first certified pattern occurrence in bound order, or a direct value of
// mu below the threshold.
ExceptionalResult classify_exceptional(const BilliardSeq& k);

// Certified upper bound of mu(k) strictly below `target`, by interval
// refinement of the tail brackets over a growing window.  Works for tails
// in different quadratic fields, where mu_profile cannot.  Throws
// PreconditionError if no separating cut is found, which for a correct
// target means the sequence is exceptional.
Rational mu_upper_certificate(const BilliardSeq& k, const QuadSurd& target);

}  // namespace mbs

#endif  // MBS_PATTERNS_H_
