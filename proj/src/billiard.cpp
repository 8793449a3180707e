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

#include "mbs/billiard.hpp"

#include <array>
#include <set>
#include <stdexcept>
#include <utility>

#include "mbs/bigfloat.hpp"

namespace mbs {
namespace {

Geodesic apply_gl2(const GL2& m, const Geodesic& g) {
  return Geodesic(moebius(m, g.alpha), moebius(m, g.beta));
}

// The quadratic form whose ordered roots are exactly (alpha, beta).  The
// overall sign puts alpha on the +sqrt branch of the root formula.
BinaryForm form_from_roots(const Geodesic& g) {
  if (g.beta.is_infinite()) {
    return BinaryForm(QuadSurd(0), QuadSurd(1), -g.alpha.finite());
  }
  if (g.alpha.is_infinite()) {
    return BinaryForm(QuadSurd(0), QuadSurd(-1), g.beta.finite());
  }
  const QuadSurd& a = g.alpha.finite();
  const QuadSurd& b = g.beta.finite();
  QuadSurd s(a > b ? 1 : -1);
  return BinaryForm(s, -s * (a + b), s * (a * b));
}

struct Boundary {
  Side side;
  QuadSurd x;
  QuadSurd y2;
};

// Canonical starting translate of an improper billiard: one cusp endpoint
// sent to infinity, the other endpoint normalized into [0, 1/2] by maps
// fixing infinity.
Geodesic improper_start(const Geodesic& g) {
  bool beta_cusp = g.beta.is_infinite() || g.beta.finite().is_rational();
  GL2 w = cusp_to_infinity(beta_cusp ? g.beta : g.alpha);
  Geodesic g1 = apply_gl2(w, g);
  QuadSurd t = (beta_cusp ? g1.alpha : g1.beta).finite();
  Int k = t.floor();
  QuadSurd fr = t - QuadSurd(k);
  GL2 norm = fr > QuadSurd(Rational(1, 2))
                 ? GL2::gen_B() * GL2::translation(-k - 1)
                 : GL2::translation(-k);
  return apply_gl2(norm, g1);
}

// Canonical starting translate of a proper billiard: the reduced form's
// geodesic, pushed around by the reflection generators until it meets the
// tile.  Reduced geodesics hug the unit circle, so the search is shallow;
// breadth-first order with generators tried as A, B, C makes it canonical.
Geodesic proper_start(const BinaryForm& form) {
  BinaryForm r = reduce(form).reduced;
  RootPair rp = roots(r);
  Geodesic g0(rp.alpha, rp.beta);
  const std::array<GL2, 3> gens = {GL2::gen_A(), GL2::gen_B(), GL2::gen_C()};
  std::vector<Geodesic> frontier{g0};
  std::set<std::string> seen{g0.to_string()};
  for (int depth = 0; depth < 16; ++depth) {
    for (const Geodesic& g : frontier) {
      if (tile_crossing(g)) return g;
    }
    std::vector<Geodesic> next;
    for (const Geodesic& g : frontier) {
      for (const GL2& gen : gens) {
        Geodesic ng = apply_gl2(gen, g);
        if (seen.insert(ng.to_string()).second) next.push_back(ng);
      }
    }
    frontier = std::move(next);
  }
  throw std::logic_error("fold: no nearby translate meets the tile");
}

// Translate for the next pass through the tile, given the side just exited.
// Walls reflect.  A geodesic through a corner leaves into the sector
// opposite the tile: around i four right-angle sectors meet, and the
// opposite one is the image under the rotation AB; around rho six sectors
// meet, and the opposite one is the image under the third mirror ACA (the
// reflection in |z - 1| = 1), not under either order-3 rotation.
Geodesic continue_from(const Geodesic& g, Side exit) {
  switch (exit) {
    case Side::kLineZero:
      return apply_gl2(GL2::gen_B(), g);
    case Side::kLineHalf:
      return apply_gl2(GL2::gen_C(), g);
    case Side::kCircle:
      return apply_gl2(GL2::gen_A(), g);
    case Side::kCornerI:
      return apply_gl2(GL2::gen_A() * GL2::gen_B(), g);
    case Side::kCornerRho:
      return apply_gl2(GL2::gen_A() * GL2::gen_C() * GL2::gen_A(), g);
    default:
      throw std::logic_error("fold: cannot continue through the cusp");
  }
}

}  // namespace

Geodesic::Geodesic(ExtendedReal a, ExtendedReal b)
    : alpha(std::move(a)), beta(std::move(b)) {
  if (alpha == beta) {
    throw PreconditionError("geodesic: endpoints must be distinct");
  }
}

std::string Geodesic::to_string() const {
  return "<" + alpha.to_string() + ", " + beta.to_string() + ">";
}

std::string side_name(Side s) {
  switch (s) {
    case Side::kCircle:
      return "circle";
    case Side::kLineZero:
      return "x=0";
    case Side::kLineHalf:
      return "x=1/2";
    case Side::kCornerI:
      return "corner_i";
    case Side::kCornerRho:
      return "corner_rho";
    case Side::kCusp:
      return "cusp";
  }
  return "?";
}

std::string TrajectorySegment::to_string() const {
  return geodesic.to_string() + " " + side_name(entry_side) + "@" +
         entry_x.to_string() + " -> " + side_name(exit_side) + "@" +
         exit_x.to_string();
}

bool TrajectorySegment::operator==(const TrajectorySegment& o) const {
  return geodesic == o.geodesic && entry_side == o.entry_side &&
         exit_side == o.exit_side && entry_x == o.entry_x &&
         exit_x == o.exit_x && entry_y2 == o.entry_y2 && exit_y2 == o.exit_y2;
}

std::string Billiard::length_string() const {
  if (!epsilon) throw PreconditionError("length: billiard is not periodic");
  return "2*log(" + epsilon->to_string() + ")";
}

Billiard billiard_from_geodesic(const Geodesic& s) {
  BinaryForm q = form_from_roots(s);
  ClassPredicates p = class_predicates(q);
  Billiard b{s, q};
  b.proper = !p.represents_zero;
  b.orientable = !p.reciprocal;
  b.periodic = b.proper && p.primitive_integral_scalable;
  if (b.periodic) {
    auto prim = to_primitive_integral(q);
    b.form = prim->first;  // same roots: the scale factor is positive
    b.disc = prim->first.disc().rational_value().get_num();
    b.epsilon = pell(*b.disc).epsilon;
  }
  return b;
}

std::optional<TrajectorySegment> tile_crossing(const Geodesic& g) {
  const QuadSurd zero(0), one(1);
  const QuadSurd half(Rational(1, 2));
  const QuadSurd three_quarter(Rational(3, 4));
  auto seg = [&g](Side es, QuadSurd ex, QuadSurd ey2, Side xs, QuadSurd xx,
                  QuadSurd xy2) {
    return TrajectorySegment{g,  es,           xs,
                             std::move(ex), std::move(xx),
                             std::move(ey2), std::move(xy2)};
  };

  // Vertical geodesics: one endpoint at the cusp.
  if (g.alpha.is_infinite() || g.beta.is_infinite()) {
    QuadSurd m = (g.alpha.is_infinite() ? g.beta : g.alpha).finite();
    if (m < zero || m > half) return std::nullopt;
    QuadSurd y2 = one - m * m;
    Side bottom = m.is_zero()    ? Side::kCornerI
                  : (m == half) ? Side::kCornerRho
                                : Side::kCircle;
    if (g.beta.is_infinite()) {
      return seg(bottom, m, y2, Side::kCusp, m, zero);
    }
    return seg(Side::kCusp, m, zero, bottom, m, y2);
  }

  const QuadSurd a = g.alpha.finite();
  const QuadSurd b = g.beta.finite();
  // The unit circle itself covers the circle wall corner to corner.
  if ((a + b).is_zero() && a * b == -one) {
    if (a < b) {
      return seg(Side::kCornerI, zero, one, Side::kCornerRho, half,
                 three_quarter);
    }
    return seg(Side::kCornerRho, half, three_quarter, Side::kCornerI, zero,
               one);
  }

  std::vector<Boundary> pts;
  auto add = [&pts](Side side, QuadSurd x, QuadSurd y2) {
    for (const Boundary& p : pts) {
      if (p.x == x) return;  // a corner reached from two side tests
    }
    pts.push_back(Boundary{side, std::move(x), std::move(y2)});
  };
  QuadSurd y2_0 = -(a * b);
  if (y2_0 >= one) {
    add(y2_0 == one ? Side::kCornerI : Side::kLineZero, zero, y2_0);
  }
  QuadSurd y2_1 = (half - a) * (b - half);
  if (y2_1 >= three_quarter) {
    add(y2_1 == three_quarter ? Side::kCornerRho : Side::kLineHalf, half,
        y2_1);
  }
  QuadSurd den = a + b;
  if (!den.is_zero()) {
    QuadSurd xc = (a * b + one) / den;
    if (xc >= zero && xc <= half) {
      QuadSurd y2c = one - xc * xc;
      if (y2c.sign() > 0) {
        Side s = xc.is_zero()    ? Side::kCornerI
                 : (xc == half) ? Side::kCornerRho
                                : Side::kCircle;
        add(s, std::move(xc), std::move(y2c));
      }
    }
  }
  if (pts.size() < 2) return std::nullopt;  // misses, or touches a corner
  if (pts.size() > 2) {
    throw std::logic_error("tile crossing: more than two boundary points");
  }
  // x runs monotonically from alpha to beta along a semicircle.
  bool first = a < b ? pts[0].x < pts[1].x : pts[0].x > pts[1].x;
  Boundary& en = first ? pts[0] : pts[1];
  Boundary& ex = first ? pts[1] : pts[0];
  return seg(en.side, std::move(en.x), std::move(en.y2), ex.side,
             std::move(ex.x), std::move(ex.y2));
}

FoldResult fold(const Billiard& b, long max_segments) {
  FoldResult out;
  if (max_segments <= 0) return out;
  Geodesic start =
      b.proper ? proper_start(b.form) : improper_start(b.representative);
  Geodesic g = start;
  for (long n = 0; n < max_segments; ++n) {
    std::optional<TrajectorySegment> seg = tile_crossing(g);
    if (!seg) throw std::logic_error("fold: translate misses the tile");
    if (n > 0) {
      const TrajectorySegment& prev = out.segments.back();
      if (seg->entry_x != prev.exit_x || seg->entry_y2 != prev.exit_y2) {
        throw std::logic_error("fold: segments disagree at the shared wall");
      }
    }
    out.segments.push_back(*seg);
    if (seg->exit_side == Side::kCusp) {
      out.cusp_terminated = true;
      return out;
    }
    Geodesic next = continue_from(g, seg->exit_side);
    if (next == start) {
      out.closed = true;
      return out;
    }
    g = next;
  }
  return out;
}

mpf_class segment_length(const TrajectorySegment& seg, unsigned prec_bits) {
  if (seg.entry_side == Side::kCusp || seg.exit_side == Side::kCusp) {
    throw PreconditionError("segment_length: segment reaches the cusp");
  }
  mpf_class x1 = mpf_of(seg.entry_x, prec_bits);
  mpf_class x2 = mpf_of(seg.exit_x, prec_bits);
  mpf_class y1 = sqrt(mpf_of(seg.entry_y2, prec_bits));
  mpf_class y2 = sqrt(mpf_of(seg.exit_y2, prec_bits));
  mpf_class dx = x1 - x2;
  mpf_class dy = y1 - y2;
  mpf_class ch = 1 + (dx * dx + dy * dy) / (2 * y1 * y2);
  return mpf_ln(ch + sqrt(ch * ch - 1));
}

ExtendedReal max_height(const Billiard& b) {
  if (!b.proper) return ExtendedReal::infinity();
  TailExtremum e = sup_tail_sum(form_sequence(b.form));
  return ExtendedReal(e.value / QuadSurd(2));
}

}  // namespace mbs
