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
#include <vector>

#include "doctest.h"
#include "mbs/spectra.hpp"

using mbs::BilliardSeq;
using mbs::BinaryForm;
using mbs::Billiard;
using mbs::ExtendedReal;
using mbs::Geodesic;
using mbs::GL2;
using mbs::Int;
using mbs::KEll;
using mbs::MarkovTriple;
using mbs::MuProfile;
using mbs::PointForm;
using mbs::PreconditionError;
using mbs::QuadSurd;
using mbs::SpectrumId;
using mbs::SpectrumPoint;
using mbs::TailValues;

namespace {

QuadSurd surd(long p, long q, long r, long d) {
  return QuadSurd(Int(p), Int(q), Int(r), Int(d));
}

QuadSurd rat(long num, long den) { return surd(num, 0, den, 0); }

BinaryForm form(long a, long b, long c) {
  return BinaryForm(QuadSurd(a), QuadSurd(b), QuadSurd(c));
}

Billiard from_form(const BinaryForm& q) {
  mbs::RootPair rp = mbs::roots(q);
  return mbs::billiard_from_geodesic(Geodesic(rp.alpha, rp.beta));
}

// |2c'a + 2a'c - b'b|, the distance numerator of q seen from the point form.
QuadSurd numerator_at(const PointForm& z, const BinaryForm& q) {
  const BinaryForm& f = z.form();
  return (2 * (f.c() * q.a()) + 2 * (f.a() * q.c()) - f.b() * q.b()).abs();
}

// Random two-sided sequences whose tails live in one quadratic field, as the
// mu engine requires. Reversing or rotating a period word conjugates or
// transposes its continued fraction matrix, so the trace and hence the field
// are preserved; sequences read off a form have this shape automatically.
BilliardSeq random_seq(std::mt19937* rng) {
  std::uniform_int_distribution<long> digit(1, 4), len(1, 3), clen(0, 4),
      orig(-2, 3), coin(0, 1);
  auto word = [&](long n) {
    std::vector<long> w;
    for (long i = 0; i < n; ++i) w.push_back(digit(*rng));
    return w;
  };
  std::vector<long> right = word(len(*rng));
  std::vector<long> left = right;
  if (coin(*rng)) std::reverse(left.begin(), left.end());
  std::uniform_int_distribution<long> rot(0, static_cast<long>(left.size()) - 1);
  std::rotate(left.begin(), left.begin() + rot(*rng), left.end());
  return BilliardSeq(left, word(clen(*rng)), right, orig(*rng));
}

const QuadSurd kMuLimit = surd(-3, 1, 4, 21);  // (sqrt(21) - 3) / 4

}  // namespace

TEST_CASE("point forms mark interior points") {
  CHECK(PointForm::at_i().form().disc() == QuadSurd(-4));
  CHECK(PointForm::at_rho().form().disc() == QuadSurd(-3));
  CHECK(PointForm::at_2i().form().disc() == QuadSurd(-16));
  CHECK(PointForm::at_sqrt2i().form().disc() == QuadSurd(-8));
  CHECK_THROWS_AS(PointForm(form(1, 0, -1), "bad"), PreconditionError);
  CHECK_THROWS_AS(PointForm(form(-1, 0, -1), "bad"), PreconditionError);
}

TEST_CASE("sinh distance oracles") {
  // The geodesic |z| = 1 passes through i and touches sqrt(-2) at distance
  // arcsinh(1 / sqrt(8)).
  CHECK(sinh_delta(PointForm::at_i(), form(1, 0, -1)).is_zero());
  CHECK(sinh_delta(PointForm::at_sqrt2i(), form(1, 0, -1)) ==
        surd(0, 1, 4, 2));
  CHECK(sinh_delta(PointForm::at_i(), form(3, -3, -1)) == surd(0, 2, 21, 21));
  CHECK(sinh_delta(PointForm::at_rho(), form(1, -5, -1)) ==
        surd(0, 5, 87, 87));
  CHECK_THROWS_AS(sinh_delta(PointForm::at_i(), form(1, 0, 1)),
                  PreconditionError);
}

TEST_CASE("quaternary form sweeps the class of the binary form") {
  std::mt19937 rng(20250812);
  std::uniform_int_distribution<long> coef(-6, 6), step(1, 4);
  PointForm pts[] = {PointForm::at_i(), PointForm::at_rho(),
                     PointForm::at_sqrt2i()};
  int done = 0;
  while (done < 100) {
    long a = coef(rng), b = coef(rng), c = coef(rng);
    if (a == 0 || b * b - 4 * a * c <= 0) continue;
    BinaryForm q = form(a, b, c);
    // Random word in the elementary column operations keeps the entries of
    // (x1 x2; x3 x4) exact and the determinant +-1.
    Int x1 = 1, x2 = 0, x3 = 0, x4 = 1;
    for (int i = 0; i < 6; ++i) {
      long k = step(rng);
      if (rng() & 1) {
        x2 += k * x1;
        x4 += k * x3;
      } else {
        x1 += k * x2;
        x3 += k * x4;
      }
      if (rng() & 1) {
        std::swap(x1, x2);
        std::swap(x3, x4);
      }
    }
    const PointForm& z = pts[done % 3];
    QuadSurd direct = quaternary_eval(z, q, x1, x2, x3, x4).abs();
    GL2 adj(x4, -x2, -x3, x1);
    CHECK(direct == numerator_at(z, act(q, adj)));
    ++done;
  }
  // The identity matrix recovers the numerator of the form itself.
  BinaryForm q = form(3, -3, -1);
  CHECK(quaternary_eval(PointForm::at_i(), q, 1, 0, 0, 1).abs() ==
        numerator_at(PointForm::at_i(), q));
  CHECK_THROWS_AS(quaternary_eval(PointForm::at_i(), q, 1, 1, 1, 1),
                  PreconditionError);
}

TEST_CASE("tail functionals at the disc 21 cuts") {
  BilliardSeq k = BilliardSeq::periodic({3, 1});
  TailValues t1 = tails(k, 1);
  CHECK(t1.r == surd(3, 1, 2, 21));
  CHECK(t1.s == surd(-3, 1, 2, 21));
  long want1[] = {0, 2, 4, 8, 2, 2};
  long want2[] = {0, 2, 2, 2, 4, 8};
  TailValues t2 = tails(k, 2);
  for (int j = 1; j <= 5; ++j) {
    CHECK(mu_functional(j, t1.r, t1.s) == surd(0, want1[j], 21, 21));
    CHECK(mu_functional(j, t2.r, t2.s) == surd(0, want2[j], 21, 21));
  }
}

TEST_CASE("mu profile oracles") {
  MuProfile p1 = mu_profile(BilliardSeq::periodic({3, 1}));
  CHECK(p1.mu == surd(0, 2, 21, 21));  // 2 / sqrt(21)
  CHECK(p1.attained);

  MuProfile p2 = mu_profile(BilliardSeq::periodic({1, 2, 1, 6}));
  CHECK(p2.mu == surd(0, 3, 28, 14));  // 3 / (2 sqrt(14))
  CHECK(p2.attained);

  MuProfile p3 = mu_profile(BilliardSeq({3, 1}, {4}, {1, 3}, 2));
  CHECK(p3.mu == kMuLimit);  // (sqrt(21) - 3) / 4
  CHECK(p3.attained);
  // The sequence is a palindrome about its 4, so the cuts on either side of
  // it both realize the infimum and either index is a valid report.
  CHECK((p3.attained_index == 1 || p3.attained_index == -1));
  TailValues t3 = tails(BilliardSeq({3, 1}, {4}, {1, 3}, 2), p3.attained_index);
  QuadSurd at_cut = mu_functional(1, t3.r, t3.s);
  for (int j = 2; j <= 5; ++j) at_cut = std::min(at_cut, mu_functional(j, t3.r, t3.s));
  CHECK(at_cut == p3.mu);

  // Billiards through the corner i: the digit 2 fixed point and the golden
  // sequence both have r s = 1 somewhere, so mu vanishes.
  CHECK(mu_profile(BilliardSeq::periodic({2})).mu.is_zero());
  CHECK(mu_profile(BilliardSeq::periodic({1})).mu.is_zero());
}

TEST_CASE("mu profile is a reversal invariant and a true infimum") {
  std::mt19937 rng(20250813);
  for (int trial = 0; trial < 200; ++trial) {
    BilliardSeq k = random_seq(&rng);
    MuProfile p = mu_profile(k);
    MuProfile q = mu_profile(k.reversal());
    CHECK(p.mu == q.mu);
    QuadSurd six = std::min({p.mu1, p.mu2, p.mu3, p.mu1s, p.mu2s, p.mu3s});
    CHECK(p.mu == six);
    CHECK(p.mu1 == p.mu1s);
    if (trial < 40) {
      // Every directly evaluated position must sit at or above the reported
      // infimum, including far outside the transitional window.
      for (long n = -40; n <= 40; ++n) {
        TailValues t = tails(k, n);
        for (int j = 1; j <= 5; ++j) {
          CHECK(mu_functional(j, t.r, t.s) >= p.mu);
        }
      }
    }
  }
  // Tails in two different fields mix in every cut product, which exact
  // arithmetic in one field cannot represent.
  CHECK_THROWS_AS(mu_profile(BilliardSeq({2}, {}, {3}, 1)), PreconditionError);
}

TEST_CASE("chain minimum of nu equals the sequence infimum") {
  for (long d = 5; d <= 150; ++d) {
    if (mbs::is_perfect_square(Int(d))) continue;
    if (d % 4 != 0 && d % 4 != 1) continue;
    for (long b = 1; b * b <= d; ++b) {
      if ((d - b * b) % 4 != 0) continue;
      long m = (d - b * b) / 4;  // -ac
      for (long a = 1; a <= m; ++a) {
        if (m % a != 0) continue;
        for (int sgn = 0; sgn < 2; ++sgn) {
          long aa = sgn ? -a : a, cc = sgn ? m / a : -(m / a);
          BinaryForm q = form(aa, b, cc);
          if (mbs::gcd(mbs::gcd(Int(aa), Int(b)), Int(cc)) != 1) continue;
          if (!is_reduced(q)) continue;
          mbs::ChainCycle cyc = chain_cycle(q);
          QuadSurd best = nu(cyc.forms.front());
          for (const BinaryForm& f : cyc.forms) best = std::min(best, nu(f));
          CHECK(best == mu_profile(form_sequence(q)).mu);
        }
      }
    }
  }
}

TEST_CASE("classical lambda oracles") {
  SpectrumPoint golden = lambda_inf(from_form(form(1, -1, -1)));
  CHECK(golden.value.finite() == surd(0, 1, 1, 5));
  CHECK(golden.attained);
  CHECK(golden.certificate == "exact");

  CHECK(lambda_inf(from_form(form(1, -2, -1))).value.finite() ==
        surd(0, 1, 1, 8));

  Billiard m5 = mbs::markov_billiard(5);
  SpectrumPoint sp = lambda_inf(m5);
  CHECK(sp.value.finite() == surd(0, 1, 5, 221));
  CHECK(seq_equivalent(*sp.witness_seq, BilliardSeq::periodic({2, 2, 1, 1}),
                       false));
  CHECK(sp.value.finite() == 2 * max_height(m5).finite());

  Billiard ray = mbs::billiard_from_geodesic(
      Geodesic(rat(1, 3), ExtendedReal::infinity()));
  CHECK(lambda_inf(ray).value.is_infinite());
}

TEST_CASE("three smallest values seen from the corner i") {
  QuadSurd h = QuadSurd::sqrt_of(21), g = QuadSurd::sqrt_of(14);
  Billiard c1 = mbs::billiard_from_geodesic(Geodesic((1 - h) / 2, (1 + h) / 2));
  Billiard c2 = mbs::billiard_from_geodesic(Geodesic((2 - g) / 2, (2 + g) / 2));
  Billiard c3 = mbs::billiard_from_geodesic(Geodesic((3 - h) / 2, (5 + h) / 2));

  CHECK(c1.proper);
  CHECK(c2.proper);
  CHECK(c3.proper);
  CHECK(!c1.orientable);
  CHECK(!c2.orientable);
  CHECK(!c3.orientable);
  CHECK(c1.periodic);
  CHECK(c2.periodic);
  CHECK(!c3.periodic);

  SpectrumPoint v1 = lambda_i(c1), v2 = lambda_i(c2), v3 = lambda_i(c3);
  CHECK(v1.value.finite() == surd(0, 1, 2, 21));
  CHECK(v2.value.finite() == surd(0, 2, 3, 14));
  CHECK(v3.value.finite() == surd(3, 1, 3, 21));
  for (const SpectrumPoint* v : {&v1, &v2, &v3}) {
    CHECK(v->attained);
    CHECK(v->certificate == "exact");
  }

  // Five decimal places: |value - rounded| <= 0.5e-5, checked exactly.
  CHECK((v1.value.finite() - rat(229129, 100000)).abs() <= rat(1, 200000));
  CHECK((v2.value.finite() - rat(249444, 100000)).abs() <= rat(1, 200000));
  CHECK((v3.value.finite() - rat(252753, 100000)).abs() <= rat(1, 200000));

  // The third sequence is the two-four interpolation seen from its far end.
  CHECK(seq_equivalent(*v3.witness_seq, BilliardSeq({3, 1}, {4}, {1, 3}, 2),
                       false));
}

TEST_CASE("improper billiards report the reflection line bound") {
  auto improper = [](const QuadSurd& alpha) {
    return mbs::billiard_from_geodesic(
        Geodesic(alpha, ExtendedReal::infinity()));
  };
  SpectrumPoint third = lambda_i(improper(rat(1, 3)));
  CHECK(third.value.finite() == QuadSurd(3));
  CHECK(!third.attained);
  CHECK(third.certificate == "upper_bound_on_inverse");

  CHECK(lambda_i(improper(QuadSurd(0))).value.is_infinite());
  CHECK(lambda_i(improper(rat(1, 2))).value.is_infinite());

  // 2/7 has gamma 2/7 one way and 3/7 the other; the second orientation
  // gives the better bound min(3/7, 1/7) = 1/7.
  CHECK(lambda_i(improper(rat(2, 7))).value.finite() == QuadSurd(7));

  // One cusp endpoint and one irrational endpoint: no vertical
  // representative exists, so no bound is defined.
  Billiard half = mbs::billiard_from_geodesic(
      Geodesic(QuadSurd(-1), -QuadSurd::sqrt_of(21)));
  CHECK(!half.proper);
  CHECK_THROWS_AS(lambda_i(half), PreconditionError);
}

TEST_CASE("lambda at rho along the approximant family") {
  ExtendedReal prev;
  for (long ell = 1; ell <= 100; ++ell) {
    SpectrumPoint sp =
        lambda_point(PointForm::at_rho(), mbs::approximant_rho(ell));
    CHECK(sp.value.finite() == QuadSurd(0, 1, ell, 3 * ell * ell + 12));
    CHECK(sp.attained);
    CHECK(sp.certificate == "exact");
    if (ell > 1) CHECK(sp.value.finite() < prev.finite());
    prev = sp.value;
  }
  CHECK(prev.finite() < surd(0, 1, 1, 3) + rat(1, 1000));
  CHECK(prev.finite() > surd(0, 1, 1, 3));
}

TEST_CASE("lambda at sqrt(-2) along the approximant family") {
  ExtendedReal prev;
  for (long ell : {3L, 4L, 5L, 9L, 12L, 20L, 6000L}) {
    SpectrumPoint sp =
        lambda_point(PointForm::at_sqrt2i(), mbs::approximant_2i(ell));
    CHECK(sp.value.finite() ==
          QuadSurd(0, 1, ell - 2, 8 * ell * ell + 2));
    CHECK(sp.value.finite() > surd(0, 1, 1, 8));
    CHECK(sp.certificate == "exact");
    if (ell > 3) CHECK(sp.value.finite() < prev.finite());
    prev = sp.value;
  }
  CHECK(prev.finite() < surd(0, 1, 1, 8) + rat(1, 1000));

  CHECK_THROWS_AS(mbs::approximant_2i(2), PreconditionError);

  Billiard boundary = mbs::billiard_from_geodesic(
      Geodesic(rat(1, 2), ExtendedReal::infinity()));
  CHECK(!boundary.proper);
  CHECK(!boundary.orientable);
  CHECK_THROWS_AS(lambda_point(PointForm::at_sqrt2i(), boundary),
                  PreconditionError);
}

TEST_CASE("markov triples and their billiards") {
  std::vector<MarkovTriple> small = mbs::markov_triples(2);
  REQUIRE(small.size() == 2);
  CHECK(small[0].p == 1);
  CHECK(small[0].r == 1);
  CHECK(small[1].r == 2);

  std::vector<Int> maxima;
  for (const MarkovTriple& t : mbs::markov_triples(35)) {
    CHECK(t.p * t.p + t.q * t.q + t.r * t.r == 3 * t.p * t.q * t.r);
    if (maxima.empty() || maxima.back() != t.r) maxima.push_back(t.r);
  }
  CHECK(maxima == std::vector<Int>{1, 2, 5, 13, 29, 34});

  for (long p : {1L, 2L, 5L, 13L, 29L}) {
    Billiard b = mbs::markov_billiard(p);
    CHECK(b.proper);
    CHECK(b.periodic);
    CHECK(!b.orientable);
    CHECK(lambda_inf(b).value.finite() ==
          QuadSurd(0, 1, p, 9 * p * p - 4));
    CHECK(!mbs::is_perfect_square(Int(9 * p * p - 4)));
  }
  CHECK_THROWS_AS(mbs::markov_billiard(3), PreconditionError);
}

TEST_CASE("low ends of the four spectra") {
  std::vector<SpectrumPoint> minf = spectrum_low(SpectrumId::kInf, 5);
  long want_p[] = {1, 2, 5, 13, 29};
  REQUIRE(minf.size() == 5);
  for (int i = 0; i < 5; ++i) {
    long p = want_p[i];
    CHECK(minf[i].value.finite() == QuadSurd(0, 1, p, 9 * p * p - 4));
    CHECK(minf[i].attained);
    CHECK(lambda_inf(*minf[i].witness).value.finite() ==
          minf[i].value.finite());
    CHECK(minf[i].value.finite() < QuadSurd(3));
  }

  std::vector<SpectrumPoint> mi = spectrum_low(SpectrumId::kI, 3);
  REQUIRE(mi.size() == 3);
  CHECK(mi[0].value.finite() == surd(0, 1, 2, 21));
  CHECK(mi[1].value.finite() == surd(0, 2, 3, 14));
  CHECK(mi[2].value.finite() == surd(3, 1, 3, 21));
  CHECK(lambda_i(*mi[0].witness).value.finite() == mi[0].value.finite());
  CHECK(lambda_i(*mi[2].witness).value.finite() == mi[2].value.finite());

  std::vector<SpectrumPoint> mrho = spectrum_low(SpectrumId::kRho, 1);
  REQUIRE(mrho.size() == 1);
  CHECK(mrho[0].value.finite() == surd(0, 1, 1, 3));
  CHECK(!mrho[0].witness->proper);

  std::vector<SpectrumPoint> m2i = spectrum_low(SpectrumId::k2I, 1);
  REQUIRE(m2i.size() == 1);
  CHECK(m2i[0].value.finite() == surd(0, 2, 1, 2));

  CHECK_THROWS_AS(spectrum_low(SpectrumId::kI, 4), PreconditionError);
  CHECK_THROWS_AS(spectrum_low(SpectrumId::kRho, 2), PreconditionError);
  CHECK_THROWS_AS(spectrum_low(SpectrumId::k2I, 2), PreconditionError);
  CHECK(spectrum_low(SpectrumId::kInf, 7).size() == 7);
}

TEST_CASE("two-four interpolation family") {
  QuadSurd prev(0);
  QuadSurd lim = surd(3, 1, 3, 21);  // (3 + sqrt(21)) / 3
  for (long ell = 1; ell <= 20; ++ell) {
    KEll fam = mbs::k_ell(ell);
    MuProfile prof = mu_profile(fam.seq);
    CHECK(prof.mu == fam.closed_form_mu);
    CHECK(prof.mu > prev);
    CHECK(prof.mu < kMuLimit);
    CHECK(1 / prof.mu > lim);
    prev = prof.mu;
  }
  CHECK(mbs::k_ell(1).closed_form_mu == surd(42, -8, 15, 21));
  CHECK((1 / prev - lim).abs() < surd(1, 0, 10000000000L, 0));

  // First forward tail obeys the descent recurrence of the family.
  QuadSurd r = tails(mbs::k_ell(1).seq, 1).r;
  CHECK(r == surd(7, -1, 2, 21));
  for (long ell = 2; ell <= 6; ++ell) {
    r = 1 + 1 / (3 + 1 / r);
    CHECK(tails(mbs::k_ell(ell).seq, 1).r == r);
  }
}

TEST_CASE("direct quaternary minimum matches the distance formula") {
  std::vector<GL2> mats = mbs::unimodular_matrices(50);
  QuadSurd h = QuadSurd::sqrt_of(21), g = QuadSurd::sqrt_of(14);
  Billiard bs[] = {
      mbs::billiard_from_geodesic(Geodesic((1 - h) / 2, (1 + h) / 2)),
      mbs::billiard_from_geodesic(Geodesic((2 - g) / 2, (2 + g) / 2))};
  for (const Billiard& b : bs) {
    BinaryForm q = mbs::to_primitive_integral(b.form)->first;
    bool have = false;
    QuadSurd best(0);
    for (const GL2& m : mats) {
      QuadSurd v =
          quaternary_eval(PointForm::at_i(), q, m.a(), m.b(), m.c(), m.d())
              .abs();
      best = have ? std::min(best, v) : v;
      have = true;
    }
    // d^(1/2) |d'|^(1/2) / lambda_i with d' = -4.
    QuadSurd lam = lambda_i(b).value.finite();
    CHECK(best == 2 * q.disc().field_sqrt()->abs() / lam);
  }
}

TEST_CASE("spectrum plumbing") {
  CHECK(mbs::spectrum_id_name(SpectrumId::kInf) == "M_inf");
  CHECK(mbs::spectrum_id_name(SpectrumId::k2I) == "M_2i");
  CHECK(mbs::spectrum_point(SpectrumId::kI).form().disc() == QuadSurd(-4));
  CHECK(mbs::spectrum_point(SpectrumId::k2I).form().disc() == QuadSurd(-8));
  CHECK_THROWS_AS(mbs::spectrum_point(SpectrumId::kInf), PreconditionError);
}

TEST_CASE("spectrum floors hold on random samples") {
  std::mt19937 rng(20250814);
  std::uniform_int_distribution<long> coef(-9, 9);
  int done = 0;
  while (done < 30) {
    long a = coef(rng), b = coef(rng), c = coef(rng);
    long disc = b * b - 4 * a * c;
    if (a == 0 || disc <= 0 || mbs::is_perfect_square(Int(disc))) continue;
    Billiard bil = from_form(form(a, b, c));
    CHECK(lambda_inf(bil).value.finite() >= surd(0, 1, 1, 5));
    SpectrumPoint li = lambda_i(bil);
    if (!li.value.is_infinite()) {
      CHECK(li.value.finite() >= QuadSurd(2));
    }
    ++done;
  }
  // Any digit above 2 pushes the classical value past 3.
  std::uniform_int_distribution<long> digit(1, 2), big(3, 7);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<long> word{digit(rng), digit(rng), big(rng), digit(rng)};
    QuadSurd v = sup_tail_sum(BilliardSeq::periodic(word)).value;
    CHECK(v > QuadSurd(3));
  }
}

TEST_CASE("branch functional is monotone in both tails") {
  // F(x, y) = (2xy + x - y - 1) / (x + y) increases in each variable on
  // x > 1, 0 < y < 1; the branch search relies on this shape.
  std::mt19937 rng(20250815);
  std::uniform_int_distribution<long> num(1, 999);
  auto f = [](const QuadSurd& x, const QuadSurd& y) {
    return (2 * (x * y) + x - y - 1) / (x + y);
  };
  for (int trial = 0; trial < 10000; ++trial) {
    QuadSurd x = 1 + rat(num(rng), 1000), y = rat(num(rng), 1000);
    QuadSurd hx = rat(num(rng), 500), hy = rat(num(rng), 2000);
    CHECK(f(x + hx, y) > f(x, y));
    if ((y + hy) < QuadSurd(1)) CHECK(f(x, y + hy) > f(x, y));
  }
}
