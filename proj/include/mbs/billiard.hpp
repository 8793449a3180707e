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

#ifndef MBS_BILLIARD_H_
#define MBS_BILLIARD_H_

#include <optional>
#include <string>
#include <vector>

#include "mbs/form.hpp"
#include "mbs/sequence.hpp"

namespace mbs {

// Oriented geodesic of the upper half plane, stored by its ordered pair of
// boundary endpoints.
struct Geodesic {
  ExtendedReal alpha, beta;

  Geodesic(ExtendedReal a, ExtendedReal b);

  Geodesic reversed() const { return Geodesic(beta, alpha); }
  bool operator==(const Geodesic& o) const {
    return alpha == o.alpha && beta == o.beta;
  }
  bool operator!=(const Geodesic& o) const { return !(*this == o); }
  std::string to_string() const;
};

// Pieces of the boundary of the triangle T = {0 <= Re z <= 1/2, |z| >= 1}.
enum class Side { kCircle, kLineZero, kLineHalf, kCornerI, kCornerRho, kCusp };

std::string side_name(Side s);

// One pass of a geodesic translate through T.
struct TrajectorySegment {
  Geodesic geodesic;
  Side entry_side, exit_side;
  QuadSurd entry_x, exit_x;    // x-coordinates of the boundary crossings
  QuadSurd entry_y2, exit_y2;  // squared heights there; 0 on a cusp end

  std::string to_string() const;
  bool operator==(const TrajectorySegment& o) const;
};

struct Billiard {
  Geodesic representative;
  BinaryForm form;  // roots are exactly (alpha, beta)
  bool proper = false;
  bool orientable = false;
  bool periodic = false;
  std::optional<Int> disc;          // integral discriminant, periodic only
  std::optional<QuadSurd> epsilon;  // fundamental automorph, periodic only

  std::string length_string() const;  // "2*log(<epsilon>)", periodic only
};

// Builds the billiard of an oriented geodesic: the quadratic form with that
// ordered root pair, classified by its equivalence class.  Throws
// PreconditionError for a degenerate (equal-endpoint) input.
Billiard billiard_from_geodesic(const Geodesic& s);

// The crossing of a geodesic through T, or nullopt when the geodesic misses
// the interior (a single corner touch does not count).  Geodesics lying on a
// wall of T yield the wall segment itself.
std::optional<TrajectorySegment> tile_crossing(const Geodesic& g);

struct FoldResult {
  std::vector<TrajectorySegment> segments;
  bool closed = false;           // returned to the start, same orientation
  bool cusp_terminated = false;  // escaped through the cusp (improper)
};

// Folds the billiard into T starting from a canonical translate: the reduced
// form's geodesic moved by the first reflection word that meets T (proper),
// or the cusp-normalized vertical (improper).  Emits segments until closure,
// cusp escape, or the segment budget runs out.
FoldResult fold(const Billiard& b, long max_segments);

// Hyperbolic length of a finite segment, computed at prec_bits.  Throws
// PreconditionError on a cusp-ended segment.
mpf_class segment_length(const TrajectorySegment& seg,
                         unsigned prec_bits = 256);

// Half the supremum of r_n + s_n over the billiard's digit sequence, which
// is the maximal height sqrt(d)/(2|a|) over the chain; infinite for improper
// billiards.
ExtendedReal max_height(const Billiard& b);

}  // namespace mbs

#endif  // MBS_BILLIARD_H_
