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
// Static SVG emission of the standard pictures: the triangle T with a folded
// billiard trajectory, Ford circles, and hyperbolic disk packings around the
// group orbit of a point.  All geometry (membership, pruning, ordering,
// clipping) is decided in exact arithmetic; values are converted to decimal
// only at the final coordinate-emission step, correctly rounded to 12
// significant digits, so equal inputs produce byte-identical documents.

#ifndef MBS_RENDER_H_
#define MBS_RENDER_H_

#include <string>
#include <vector>

#include "mbs/billiard.hpp"
#include "mbs/spectra.hpp"

namespace mbs {

// Viewport: the window [x_min, x_max] of the real axis, heights up to y_cap,
// mapped onto width_px output pixels (height follows from the aspect ratio).
struct Scene {
  Rational x_min, x_max;
  Rational y_cap;
  long width_px = 800;

  Rational scale() const;  // pixels per unit length; window must be nonempty

  static Scene domain_window();   // around the triangle T, for billiards
  static Scene unit_window();     // [0, 1] low strip, for Ford circles
  static Scene packing_window();  // several periods wide, for orbit disks
};

// The billiard folded into T, drawn over the outline of T: arcs of circles
// centered on the real axis and vertical lines, one path per trajectory
// segment, at most `segments` of them.
std::string draw_billiard(const Billiard& b, long segments,
                          const Scene& scene);

// Ford-style circles: one circle of radius radius_scale / q^2 tangent to the
// real axis at every reduced fraction p/q inside the window with
// q <= max_denominator.  radius_scale must be positive.
std::string draw_ford(const Scene& scene, const Rational& radius_scale,
                      long max_denominator);

// Hyperbolic disk radius, carried as the exact pair (cosh r0, sinh r0).
struct DiskRadius {
  QuadSurd cosh_r, sinh_r;

  static DiskRadius half_log(long m);      // r0 = (log m) / 2, m >= 2
  static DiskRadius log_golden_ratio();    // r0 = log((1 + sqrt 5) / 2)
};

// One orbit point z = x + i sqrt(|D|) t of an integral point form, where
// |D| is the common absolute discriminant and t = 1 / (2a).
struct OrbitPoint {
  Rational x;
  Rational t;
};

struct OrbitSet {
  Int abs_disc;
  std::vector<OrbitPoint> points;  // sorted by size then position
};

// Orbit of the point under the group generated by the three side
// reflections of T, enumerated breadth first and pruned where the disk of
// the given radius would fall below a quarter of a display pixel or leave
// the window by a margin.  The point form must have integral coefficients
// and the radius surds must live in the field of sqrt(|D|).
OrbitSet orbit_points(const PointForm& zf, const DiskRadius& radius,
                      const Scene& scene);

// The disks of hyperbolic radius r0 around the orbit: Euclidean circles with
// center x + i y cosh(r0) and radius y sinh(r0), emitted largest first.
std::string draw_orbit_disks(const PointForm& zf, const DiskRadius& radius,
                             const Scene& scene);

// cosh of the pairwise hyperbolic distances between the enumerated orbit
// points, the `count` smallest in increasing order, exact:
// cosh d = 1 + ((x1 - x2)^2 + |D| (t1 - t2)^2) / (2 |D| t1 t2).
// Disks of radius r0 never overlap iff every value is >= cosh(2 r0).
std::vector<Rational> nearest_pair_cosh(const PointForm& zf,
                                        const DiskRadius& radius,
                                        const Scene& scene, long count);

// Correctly rounded decimal rendering of sqrt(v), `sig` significant digits,
// round half to even; v must be nonnegative.
std::string sqrt_decimal(const QuadSurd& v, unsigned sig = 12);

}  // namespace mbs

#endif  // MBS_RENDER_H_
