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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "mbs/bigfloat.hpp"
#include "mbs/billiard.hpp"

using mbs::Billiard;
using mbs::BilliardSeq;
using mbs::BinaryForm;
using mbs::ExtendedReal;
using mbs::FoldResult;
using mbs::Geodesic;
using mbs::GL2;
using mbs::Int;
using mbs::PreconditionError;
using mbs::QuadSurd;
using mbs::Rational;
using mbs::Side;
using mbs::TailExtremum;
using mbs::TrajectorySegment;

namespace {

QuadSurd surd(long p, long q, long r, long d) {
  return QuadSurd(Int(p), Int(q), Int(r), Int(d));
}

QuadSurd rat(long num, long den) { return QuadSurd(Rational(num, den)); }

Geodesic geo(QuadSurd a, QuadSurd b) {
  return Geodesic(ExtendedReal(std::move(a)), ExtendedReal(std::move(b)));
}

Geodesic to_cusp(QuadSurd a) {
  return Geodesic(ExtendedReal(std::move(a)), ExtendedReal::infinity());
}

Geodesic from_cusp(QuadSurd b) {
  return Geodesic(ExtendedReal::infinity(), ExtendedReal(std::move(b)));
}

// The five standing periodic examples.
Billiard golden() { return billiard_from_geodesic(geo(surd(1, 1, 2, 5), surd(1, -1, 2, 5))); }
Billiard disc8() { return billiard_from_geodesic(geo(surd(1, 1, 1, 2), surd(1, -1, 1, 2))); }
Billiard disc12() { return billiard_from_geodesic(geo(surd(1, 1, 1, 3), surd(1, -1, 1, 3))); }
Billiard c1() {
  return billiard_from_geodesic(geo(surd(1, -1, 2, 21), surd(1, 1, 2, 21)));
}
Billiard disc56() {
  return billiard_from_geodesic(geo(surd(3, 1, 1, 14), surd(3, -1, 1, 14)));
}
Billiard c3() {
  return billiard_from_geodesic(geo(surd(3, -1, 2, 21), surd(5, 1, 2, 21)));
}

std::vector<std::string> segment_multiset(const FoldResult& f) {
  std::vector<std::string> out;
  out.reserve(f.segments.size());
  for (const TrajectorySegment& s : f.segments) out.push_back(s.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

mpf_class total_length(const FoldResult& f, unsigned prec) {
  mpf_class sum(0, prec);
  for (const TrajectorySegment& s : f.segments) {
    sum += segment_length(s, prec);
  }
  return sum;
}

GL2 random_word(std::mt19937* rng, int len) {
  GL2 m;
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<long> off(-3, 3);
  for (int i = 0; i < len; ++i) {
    switch (pick(*rng)) {
      case 0: m = m * GL2::gen_A(); break;
      case 1: m = m * GL2::gen_B(); break;
      case 2: m = m * GL2::gen_C(); break;
      default: m = m * GL2::translation(off(*rng)); break;
    }
  }
  return m;
}

Geodesic translate(const GL2& m, const Geodesic& g) {
  return Geodesic(moebius(m, g.alpha), moebius(m, g.beta));
}

// Exact check that ten interior points of a non-vertical segment lie in the
// tile: 0 <= x <= 1/2 and x^2 + y^2 >= 1.
void check_interior(const TrajectorySegment& s) {
  QuadSurd lo = s.geodesic.alpha.finite(), hi = s.geodesic.beta.finite();
  if (lo > hi) std::swap(lo, hi);
  for (int t = 1; t <= 10; ++t) {
    QuadSurd x = s.entry_x + (s.exit_x - s.entry_x) * rat(t, 11);
    QuadSurd y2 = (x - lo) * (hi - x);
    REQUIRE(x >= QuadSurd(0));
    REQUIRE(x <= rat(1, 2));
    REQUIRE(x * x + y2 >= QuadSurd(1));
  }
}

}  // namespace

TEST_CASE("tile crossing oracles") {
  // The golden geodesic runs from the x = 1/2 wall into the corner at i.
  auto seg = tile_crossing(geo(surd(1, 1, 2, 5), surd(1, -1, 2, 5)));
  REQUIRE(seg.has_value());
  CHECK(seg->entry_side == Side::kLineHalf);
  CHECK(seg->entry_x == rat(1, 2));
  CHECK(seg->entry_y2 == rat(5, 4));
  CHECK(seg->exit_side == Side::kCornerI);
  CHECK(seg->exit_x == QuadSurd(0));
  CHECK(seg->exit_y2 == QuadSurd(1));

  // Reversing orientation swaps entry and exit.
  seg = tile_crossing(geo(surd(1, -1, 2, 5), surd(1, 1, 2, 5)));
  REQUIRE(seg.has_value());
  CHECK(seg->entry_side == Side::kCornerI);
  CHECK(seg->exit_side == Side::kLineHalf);

  // The reduced disc 21 geodesic misses the tile entirely; its image under
  // the circle reflection crosses from x = 1/2 to x = 0.
  CHECK(!tile_crossing(geo(surd(3, 1, 6, 21), surd(3, -1, 6, 21))));
  seg = tile_crossing(geo(surd(-3, 1, 2, 21), surd(-3, -1, 2, 21)));
  REQUIRE(seg.has_value());
  CHECK(seg->entry_side == Side::kLineHalf);
  CHECK(seg->entry_y2 == rat(5, 4));
  CHECK(seg->exit_side == Side::kLineZero);
  CHECK(seg->exit_y2 == QuadSurd(3));

  // Wall geodesics cover their wall.
  seg = tile_crossing(to_cusp(QuadSurd(0)));
  REQUIRE(seg.has_value());
  CHECK(seg->entry_side == Side::kCornerI);
  CHECK(seg->exit_side == Side::kCusp);
  seg = tile_crossing(from_cusp(QuadSurd(0)));
  REQUIRE(seg.has_value());
  CHECK(seg->entry_side == Side::kCusp);
  CHECK(seg->exit_side == Side::kCornerI);
  seg = tile_crossing(to_cusp(rat(1, 2)));
  REQUIRE(seg.has_value());
  CHECK(seg->entry_side == Side::kCornerRho);
  CHECK(seg->exit_side == Side::kCusp);
  seg = tile_crossing(geo(QuadSurd(-1), QuadSurd(1)));
  REQUIRE(seg.has_value());
  CHECK(seg->entry_side == Side::kCornerI);
  CHECK(seg->exit_side == Side::kCornerRho);
  CHECK(seg->exit_y2 == rat(3, 4));
  seg = tile_crossing(geo(QuadSurd(1), QuadSurd(-1)));
  REQUIRE(seg.has_value());
  CHECK(seg->entry_side == Side::kCornerRho);
  CHECK(seg->exit_side == Side::kCornerI);

  // Interior verticals entering and leaving.
  seg = tile_crossing(to_cusp(rat(1, 3)));
  REQUIRE(seg.has_value());
  CHECK(seg->entry_side == Side::kCircle);
  CHECK(seg->entry_x == rat(1, 3));
  CHECK(seg->entry_y2 == rat(8, 9));
  CHECK(seg->exit_side == Side::kCusp);
  seg = tile_crossing(from_cusp(rat(1, 3)));
  REQUIRE(seg.has_value());
  CHECK(seg->entry_side == Side::kCusp);
  CHECK(seg->exit_side == Side::kCircle);
  CHECK(!tile_crossing(to_cusp(QuadSurd(2))));
  CHECK(!tile_crossing(to_cusp(rat(-1, 3))));

  // A single corner touch is not a crossing.
  CHECK(!tile_crossing(geo(QuadSurd(0), QuadSurd(2))));

  // Crossing two walls above the circle, and wall-to-circle.
  seg = tile_crossing(geo(QuadSurd(-2), QuadSurd(2)));
  REQUIRE(seg.has_value());
  CHECK(seg->entry_side == Side::kLineZero);
  CHECK(seg->entry_y2 == QuadSurd(4));
  CHECK(seg->exit_side == Side::kLineHalf);
  CHECK(seg->exit_y2 == rat(15, 4));
  seg = tile_crossing(geo(QuadSurd(-3), rat(1, 2)));
  REQUIRE(seg.has_value());
  CHECK(seg->entry_side == Side::kLineZero);
  CHECK(seg->entry_y2 == rat(3, 2));
  CHECK(seg->exit_side == Side::kCircle);
  CHECK(seg->exit_x == rat(1, 5));
  CHECK(seg->exit_y2 == rat(24, 25));
}

TEST_CASE("billiard classification oracles") {
  Billiard b = c1();
  CHECK(b.proper);
  CHECK(!b.orientable);
  CHECK(b.periodic);
  REQUIRE(b.disc.has_value());
  CHECK(*b.disc == 21);
  REQUIRE(b.epsilon.has_value());
  CHECK(*b.epsilon == surd(5, 1, 2, 21));
  CHECK(b.length_string() == "2*log(" + b.epsilon->to_string() + ")");
  mbs::RootPair rp = roots(b.form);
  CHECK(rp.alpha == b.representative.alpha);
  CHECK(rp.beta == b.representative.beta);

  b = c3();
  CHECK(b.proper);
  CHECK(!b.orientable);
  CHECK(!b.periodic);
  CHECK(!b.disc.has_value());
  CHECK(!b.epsilon.has_value());

  b = billiard_from_geodesic(to_cusp(QuadSurd(0)));
  CHECK(!b.proper);
  CHECK(!b.orientable);
  CHECK(!b.periodic);

  b = billiard_from_geodesic(to_cusp(rat(1, 2)));
  CHECK(!b.proper);
  CHECK(!b.orientable);

  b = billiard_from_geodesic(to_cusp(rat(1, 3)));
  CHECK(!b.proper);
  CHECK(!b.orientable);

  // <2/7, inf> reverses onto <3/7, inf>, a different class.
  b = billiard_from_geodesic(to_cusp(rat(2, 7)));
  CHECK(!b.proper);
  CHECK(b.orientable);

  b = golden();
  CHECK(b.proper);
  CHECK(!b.orientable);
  CHECK(b.periodic);
  CHECK(*b.disc == 5);
  CHECK(*b.epsilon == surd(1, 1, 2, 5));

  // One cusp endpoint and one irrational endpoint.
  b = billiard_from_geodesic(geo(QuadSurd(-1), surd(0, -1, 1, 21)));
  CHECK(!b.proper);
  CHECK(b.orientable);
  CHECK(!b.periodic);

  CHECK_THROWS_AS(Geodesic(ExtendedReal(QuadSurd(1)),
                           ExtendedReal(QuadSurd(1))),
                  PreconditionError);
}

TEST_CASE("fold closes the golden billiard through the corner at i") {
  FoldResult f = fold(golden(), 10);
  CHECK(f.closed);
  CHECK(!f.cusp_terminated);
  REQUIRE(f.segments.size() == 2);
  // The trajectory bounces between the x = 1/2 wall and the corner at i.
  for (const TrajectorySegment& s : f.segments) {
    bool in_half = s.entry_side == Side::kLineHalf;
    CHECK((in_half ? s.exit_side : s.entry_side) == Side::kCornerI);
  }
  mpf_class len = total_length(f, 512);
  mpf_class want = 2 * mbs::mpf_ln(mbs::mpf_of(surd(1, 1, 2, 5), 512));
  mpf_class err = abs(len - want);
  CHECK(err < mpf_class("1e-40"));

  // The reversal folds to the same multiset (the billiard is its own
  // reversal).
  FoldResult r = fold(billiard_from_geodesic(
                          geo(surd(1, -1, 2, 5), surd(1, 1, 2, 5))),
                      10);
  CHECK(r.closed);
  CHECK(segment_multiset(r) == segment_multiset(f));
}

TEST_CASE("fold closes the disc 21 billiard with length 2 log eps") {
  Billiard b = c1();
  FoldResult f = fold(b, 200);
  CHECK(f.closed);
  CHECK(f.segments.size() >= 3);
  mpf_class len = total_length(f, 512);
  mpf_class want = 2 * mbs::mpf_ln(mbs::mpf_of(*b.epsilon, 512));
  CHECK(abs(len - want) < mpf_class("1e-40"));
  for (const TrajectorySegment& s : f.segments) check_interior(s);
}

TEST_CASE("fold reports cusp termination for improper billiards") {
  // <0, inf> covers the wall segment from i to the cusp.
  FoldResult f = fold(billiard_from_geodesic(to_cusp(QuadSurd(0))), 100);
  CHECK(f.cusp_terminated);
  CHECK(!f.closed);
  REQUIRE(f.segments.size() == 1);
  CHECK(f.segments[0].entry_side == Side::kCornerI);
  CHECK(f.segments[0].exit_side == Side::kCusp);

  f = fold(billiard_from_geodesic(to_cusp(rat(1, 2))), 100);
  REQUIRE(f.segments.size() == 1);
  CHECK(f.segments[0].entry_side == Side::kCornerRho);
  CHECK(f.segments[0].exit_side == Side::kCusp);

  f = fold(billiard_from_geodesic(to_cusp(rat(1, 3))), 100);
  REQUIRE(f.segments.size() == 1);
  CHECK(f.segments[0].entry_side == Side::kCircle);
  CHECK(f.segments[0].entry_y2 == rat(8, 9));

  // The unit circle geodesic is in the class of <1/2, inf>.
  f = fold(billiard_from_geodesic(geo(QuadSurd(-1), QuadSurd(1))), 100);
  CHECK(f.cusp_terminated);
  REQUIRE(f.segments.size() == 1);
  CHECK(f.segments[0].entry_side == Side::kCornerRho);

  // <7/2, 0> is the class of <2/7, inf>; both canonicalize identically.
  FoldResult f1 = fold(billiard_from_geodesic(geo(rat(7, 2), QuadSurd(0))), 100);
  FoldResult f2 = fold(billiard_from_geodesic(to_cusp(rat(2, 7))), 100);
  CHECK(f1.cusp_terminated);
  CHECK(segment_multiset(f1) == segment_multiset(f2));
  CHECK(f1.segments[0].entry_y2 == rat(45, 49));

  // A half-cusp geodesic pointed at the cusp escapes at once; pointed away
  // it bounces indefinitely.
  f = fold(billiard_from_geodesic(geo(surd(0, -1, 1, 21), QuadSurd(-1))), 100);
  CHECK(f.cusp_terminated);
  CHECK(f.segments.size() == 1);
  f = fold(billiard_from_geodesic(geo(QuadSurd(-1), surd(0, -1, 1, 21))), 50);
  CHECK(!f.cusp_terminated);
  CHECK(!f.closed);
  REQUIRE(f.segments.size() == 50);
  CHECK(f.segments[0].entry_side == Side::kCusp);
}

TEST_CASE("fold of C3 does not close within ten thousand segments") {
  FoldResult f = fold(c3(), 10000);
  CHECK(!f.closed);
  CHECK(!f.cusp_terminated);
  REQUIRE(f.segments.size() == 10000);
  for (size_t i = 0; i < f.segments.size(); i += 500) {
    check_interior(f.segments[i]);
  }
}

TEST_CASE("adjacent segments are glued by the wall generator") {
  for (const Billiard& b : {c1(), c3()}) {
    FoldResult f = fold(b, 100);
    for (size_t i = 0; i + 1 < f.segments.size(); ++i) {
      const TrajectorySegment& cur = f.segments[i];
      const TrajectorySegment& nxt = f.segments[i + 1];
      CHECK(cur.exit_x == nxt.entry_x);
      CHECK(cur.exit_y2 == nxt.entry_y2);
      Geodesic g = cur.geodesic;
      switch (cur.exit_side) {
        case Side::kLineZero:
          CHECK(translate(GL2::gen_B(), g) == nxt.geodesic);
          break;
        case Side::kLineHalf:
          CHECK(translate(GL2::gen_C(), g) == nxt.geodesic);
          break;
        case Side::kCircle:
          CHECK(translate(GL2::gen_A(), g) == nxt.geodesic);
          break;
        case Side::kCornerI:
          CHECK(translate(GL2::gen_A() * GL2::gen_B(), g) == nxt.geodesic);
          break;
        case Side::kCornerRho:
          CHECK(translate(GL2::gen_A() * GL2::gen_C() * GL2::gen_A(), g) ==
                nxt.geodesic);
          break;
        default:
          FAIL("unexpected cusp exit in a proper fold");
      }
    }
  }
}

TEST_CASE("folding is invariant under translating the representative") {
  std::mt19937 rng(20250814);
  for (const Billiard& b : {golden(), disc8(), disc12(), c1(), disc56()}) {
    FoldResult base = fold(b, 500);
    REQUIRE(base.closed);
    mpf_class want_len = 2 * mbs::mpf_ln(mbs::mpf_of(*b.epsilon, 512));
    CHECK(abs(total_length(base, 512) - want_len) < mpf_class("1e-40"));
    std::vector<std::string> want = segment_multiset(base);
    for (int k = 0; k < 4; ++k) {
      GL2 m = random_word(&rng, 6);
      Billiard tb = billiard_from_geodesic(translate(m, b.representative));
      CHECK(tb.proper == b.proper);
      CHECK(tb.orientable == b.orientable);
      CHECK(tb.periodic == b.periodic);
      REQUIRE(tb.disc.has_value());
      CHECK(*tb.disc == *b.disc);
      CHECK(*tb.epsilon == *b.epsilon);
      FoldResult tf = fold(tb, 500);
      REQUIRE(tf.closed);
      CHECK(segment_multiset(tf) == want);
    }
  }
}

TEST_CASE("max height oracles") {
  CHECK(max_height(golden()).finite() == surd(0, 1, 2, 5));
  CHECK(max_height(disc8()).finite() == surd(0, 1, 1, 2));
  CHECK(max_height(c1()).finite() == surd(0, 1, 2, 21));
  CHECK(max_height(c3()).finite() == surd(1, 1, 2, 21));
  CHECK(max_height(billiard_from_geodesic(to_cusp(rat(1, 3)))).is_infinite());
  CHECK(max_height(billiard_from_geodesic(to_cusp(QuadSurd(0)))).is_infinite());
}

TEST_CASE("max height agrees with the chain maximum for periodic billiards") {
  for (const Billiard& b : {golden(), disc8(), disc12(), c1(), disc56()}) {
    mbs::ChainCycle cyc = chain_cycle(reduce(b.form).reduced);
    QuadSurd best(0);
    for (const BinaryForm& q : cyc.forms) {
      QuadSurd h = *q.disc().field_sqrt() / (QuadSurd(2) * q.a().abs());
      if (h > best) best = h;
    }
    CHECK(max_height(b).finite() == best);
  }
}

TEST_CASE("tail sums") {
  TailExtremum e = sup_tail_sum(BilliardSeq::periodic({1}));
  CHECK(e.value == QuadSurd::sqrt_of(Int(5)));
  CHECK(e.attained);
  e = sup_tail_sum(BilliardSeq::periodic({2}));
  CHECK(e.value == QuadSurd::sqrt_of(Int(8)));
  CHECK(e.attained);
  e = sup_tail_sum(BilliardSeq::periodic({1, 3}));
  CHECK(e.value == QuadSurd::sqrt_of(Int(21)));
  CHECK(e.attained);
  // The C3 word: the supremum sits at the core digit 4.
  e = sup_tail_sum(BilliardSeq({3, 1}, {4}, {1, 3}));
  CHECK(e.value == QuadSurd(1) + QuadSurd::sqrt_of(Int(21)));
  CHECK(e.attained);
}
