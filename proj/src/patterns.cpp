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

#include "mbs/patterns.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mbs/sequence.hpp"

namespace mbs {

namespace {

// Numerator coefficients of the five tail functionals,
// N_j(r, s) = a r s + b r + c s + d, matching mu_functional.
struct Coeffs {
  long a, b, c, d;
};

Coeffs coeffs(int j) {
  switch (j) {
    case 1: return {-1, 0, 0, 1};
    case 2: return {-1, -1, 1, 2};
    case 3: return {2, 1, -1, -1};
    case 4: return {2, -1, 1, -1};
    case 5: return {-1, 1, -1, 2};
    default:
      throw PreconditionError("tail functional index must be 1..5");
  }
}

// Signed enclosure of N_j(r, s) / (r + s) over the box R x S.  Needs
// R.lo >= 1 and S bounded inside [0, 1], which every tail satisfies.  For
// fixed s the quotient is Moebius in r with denominator r + s > 0, hence
// monotone, and symmetrically in s, so the extrema over the box sit at the
// four corners; the corner at r = +inf is the limit a s + b.
Interval functional_box(int j, const Interval& r, const Interval& s) {
  const Coeffs k = coeffs(j);
  if (r.lo_unbounded() || r.lo() < 1 || !s.bounded() || s.lo() < 0)
    throw EnclosureError("tail box must have r >= 1 and s bounded in [0, 1]");
  std::optional<Rational> lo, hi;
  auto take = [&](const Rational& g) {
    if (!lo || g < *lo) lo = g;
    if (!hi || g > *hi) hi = g;
  };
  for (const Rational& sv : {s.lo(), s.hi()}) {
    if (r.hi_unbounded()) {
      take(k.a * sv + k.b);
    } else {
      const Rational rv = r.hi();
      take((k.a * rv * sv + k.b * rv + k.c * sv + k.d) / (rv + sv));
    }
    const Rational rv = r.lo();
    take((k.a * rv * sv + k.b * rv + k.c * sv + k.d) / (rv + sv));
  }
  return Interval(*lo, *hi);
}

Interval entry_hull(const EntryRange& p) {
  if (p.hi == EntryRange::kUnbounded) return Interval::ray_ge(Rational(p.lo));
  return Interval(Rational(p.lo), Rational(p.hi));
}

// Right tail r = [p_pivot; p_(pivot+1), ..., p_last, free], evaluated
// backward so every step is hull + reciprocal.
Interval right_tail(const Pattern& pat, const std::vector<int>& choice,
                    long pivot, long free_min) {
  Interval x = Interval::ray_ge(Rational(free_min));
  for (long i = static_cast<long>(pat.size()) - 1; i >= pivot; --i)
    x = entry_hull(pat[i].allowed[choice[i]]) + x.reciprocal();
  return x;
}

// Left tail s = [0; p_(pivot-1), ..., p_0, free].
Interval left_tail(const Pattern& pat, const std::vector<int>& choice,
                   long pivot, long free_min) {
  Interval x = Interval::ray_ge(Rational(free_min));
  for (long i = 0; i < pivot; ++i)
    x = entry_hull(pat[i].allowed[choice[i]]) + x.reciprocal();
  return x.reciprocal();
}

}  // namespace

PatternEntry PatternEntry::fixed(long k) {
  return PatternEntry{{EntryRange{k, k}}};
}

PatternEntry PatternEntry::at_least(long lo) {
  return PatternEntry{{EntryRange{lo, EntryRange::kUnbounded}}};
}

PatternEntry PatternEntry::range(long lo, long hi) {
  return PatternEntry{{EntryRange{lo, hi}}};
}

bool PatternEntry::contains(long k) const {
  for (const EntryRange& p : allowed)
    if (k >= p.lo && (p.hi == EntryRange::kUnbounded || k <= p.hi))
      return true;
  return false;
}

bool PatternEntry::is_fixed_one() const {
  return allowed.size() == 1 && allowed[0].lo == 1 && allowed[0].hi == 1;
}

bool PatternEntry::unbounded() const {
  for (const EntryRange& p : allowed)
    if (p.hi == EntryRange::kUnbounded) return true;
  return false;
}

PatternCertificate pattern_bound(const Pattern& pattern, long pivot,
                                 int functional, bool no_adjacent_ones,
                                 bool monotone_tail) {
  if (pattern.empty()) throw PreconditionError("pattern_bound: empty pattern");
  const long n = static_cast<long>(pattern.size());
  if (pivot < 0 || pivot >= n)
    throw PreconditionError("pattern_bound: pivot outside the pattern");
  coeffs(functional);
  bool has_unbounded = false;
  for (const PatternEntry& e : pattern) {
    if (e.allowed.empty())
      throw PreconditionError("pattern_bound: entry with no allowed range");
    for (const EntryRange& p : e.allowed) {
      if (p.lo < 1 || (p.hi != EntryRange::kUnbounded && p.hi < p.lo))
        throw PreconditionError("pattern_bound: bad entry range");
      if (p.hi == EntryRange::kUnbounded) has_unbounded = true;
    }
  }
  if (has_unbounded && !monotone_tail)
    throw PreconditionError(
        "pattern_bound: unbounded wildcard requires monotone_tail");

  // The free entries just outside the pattern are at least 1, or at least 2
  // next to a fixed 1 when the ambient sequence has no adjacent ones.
  const long free_right =
      no_adjacent_ones && pattern.back().is_fixed_one() ? 2 : 1;
  const long free_left =
      no_adjacent_ones && pattern.front().is_fixed_one() ? 2 : 1;

  std::optional<Interval> rr, ss, val;
  std::vector<int> choice(pattern.size(), 0);
  for (;;) {
    const Interval r = right_tail(pattern, choice, pivot, free_right);
    const Interval s = left_tail(pattern, choice, pivot, free_left);
    const Interval g = functional_box(functional, r, s);
    rr = rr ? rr->hull(r) : r;
    ss = ss ? ss->hull(s) : s;
    val = val ? val->hull(g) : g;
    std::size_t i = 0;
    while (i < choice.size() &&
           ++choice[i] == static_cast<int>(pattern[i].allowed.size())) {
      choice[i] = 0;
      ++i;
    }
    if (i == choice.size()) break;
  }
  return PatternCertificate{functional, pivot, *rr, *ss, val->abs()};
}

namespace {

ExclusionCase make_case(std::string label, Pattern pattern, long pivot,
                        int functional, bool no_adjacent_ones) {
  PatternCertificate cert =
      pattern_bound(pattern, pivot, functional, no_adjacent_ones,
                    /*monotone_tail=*/true);
  return ExclusionCase{std::move(label), std::move(pattern), pivot, functional,
                       no_adjacent_ones, std::move(cert)};
}

ExclusionBound make_bound(std::string name, Rational stated,
                          std::vector<ExclusionCase> cases) {
  Rational upper = cases.front().certificate.value.hi();
  for (const ExclusionCase& c : cases)
    upper = std::max(upper, Rational(c.certificate.value.hi()));
  if (upper > stated)
    throw std::logic_error("certified upper exceeds the stated constant in " +
                           name);
  return ExclusionBound{std::move(name), std::move(stated), std::move(cases),
                        std::move(upper)};
}

}  // namespace

const std::vector<ExclusionBound>& exclusion_bounds() {
  static const std::vector<ExclusionBound> kBounds = [] {
    using E = PatternEntry;
    std::vector<ExclusionBound> out;

    // Every adjacent pair that is not 1 next to m >= 2 falls under one of
    // these seven shapes, and each bounds mu' at the cut between the two
    // entries.  No ambient assumption: the (1,1) case is what later rules
    // out adjacent ones in the first place.
    out.push_back(make_bound(
        "adjacent pair", Rational(1, 3),
        {
            make_case("(1,1)", {E::fixed(1), E::fixed(1)}, 1, 1, false),
            make_case("(2,2)", {E::fixed(2), E::fixed(2)}, 1, 1, false),
            make_case("(2,3)", {E::fixed(2), E::fixed(3)}, 1, 1, false),
            make_case("(2,4)", {E::fixed(2), E::fixed(4)}, 1, 1, false),
            make_case("(2,5)", {E::fixed(2), E::fixed(5)}, 1, 1, false),
            make_case("(2,6)", {E::fixed(2), E::fixed(6)}, 1, 1, false),
            make_case("(m,m'), m,m' >= 3", {E::at_least(3), E::at_least(3)}, 1,
                      1, false),
        }));

    out.push_back(make_bound(
        "(l',2,l), l,l' >= 7", Rational(11, 56),
        {make_case("(l',2,l)", {E::at_least(7), E::fixed(2), E::at_least(7)},
                   1, 2, true)}));

    out.push_back(make_bound(
        "(m',1,m,1,2,l), m,m' >= 2, l >= 7", Rational(4, 11),
        {make_case("(m',1,m,1,2,l)",
                   {E::at_least(2), E::fixed(1), E::at_least(2), E::fixed(1),
                    E::fixed(2), E::at_least(7)},
                   3, 2, true)}));

    out.push_back(make_bound(
        "(m,2,1,2,l), m,l >= 7", Rational(157, 870),
        {make_case("(m,2,1,2,l)",
                   {E::at_least(7), E::fixed(2), E::fixed(1), E::fixed(2),
                    E::at_least(7)},
                   2, 2, true)}));

    out.push_back(make_bound(
        "(m'',1,2,1,m,1,m'), 2 <= m <= 4, m',m'' >= 2", Rational(9, 23),
        {make_case("(m'',1,2,1,m,1,m')",
                   {E::at_least(2), E::fixed(1), E::fixed(2), E::fixed(1),
                    E::range(2, 4), E::fixed(1), E::at_least(2)},
                   3, 1, true)}));

    out.push_back(make_bound(
        "(m'',1,m,1,2,1,m',1), m >= 7, m' >= 5, m'' >= 2",
        Rational(2721, 6902),
        {make_case("(m'',1,m,1,2,1,m',1)",
                   {E::at_least(2), E::fixed(1), E::at_least(7), E::fixed(1),
                    E::fixed(2), E::fixed(1), E::at_least(5), E::fixed(1)},
                   3, 3, true)}));

    out.push_back(make_bound(
        "(1,5,1,2,1,5,1)", Rational(71, 182),
        {make_case("(1,5,1,2,1,5,1)",
                   {E::fixed(1), E::fixed(5), E::fixed(1), E::fixed(2),
                    E::fixed(1), E::fixed(5), E::fixed(1)},
                   3, 1, true)}));

    out.push_back(make_bound(
        "(1,5,1,2,1,6,1)", Rational(82, 209),
        {make_case("(1,5,1,2,1,6,1)",
                   {E::fixed(1), E::fixed(5), E::fixed(1), E::fixed(2),
                    E::fixed(1), E::fixed(6), E::fixed(1)},
                   3, 1, true)}));

    out.push_back(make_bound(
        "(1,2,1,6,1,m,1), m >= 3", Rational(185848, 519893),
        {make_case("(1,2,1,6,1,m,1)",
                   {E::fixed(1), E::fixed(2), E::fixed(1), E::fixed(6),
                    E::fixed(1), E::at_least(3), E::fixed(1)},
                   4, 3, true)}));

    return out;
  }();
  return kBounds;
}

const BilliardSeq& exceptional_sequence(int j) {
  static const BilliardSeq k1 = BilliardSeq::periodic({1, 3});
  static const BilliardSeq k2 = BilliardSeq::periodic({1, 2, 1, 6});
  static const BilliardSeq k3 = BilliardSeq({3, 1}, {4}, {1, 3}, 2);
  switch (j) {
    case 1: return k1;
    case 2: return k2;
    case 3: return k3;
    default:
      throw PreconditionError("exceptional sequence index must be 1..3");
  }
}

const QuadSurd& exceptional_threshold() {
  static const QuadSurd t{Int(-3), Int(1), Int(4), Int(21)};
  return t;
}

namespace {

bool matches_at(const BilliardSeq& k, const Pattern& p, long offset) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p[i].contains(k.entry(offset + static_cast<long>(i)))) return false;
  return true;
}

bool same_entry(const PatternEntry& a, const PatternEntry& b) {
  if (a.allowed.size() != b.allowed.size()) return false;
  for (std::size_t i = 0; i < a.allowed.size(); ++i)
    if (a.allowed[i].lo != b.allowed[i].lo ||
        a.allowed[i].hi != b.allowed[i].hi)
      return false;
  return true;
}

bool palindromic(const Pattern& p) {
  for (std::size_t i = 0; 2 * i < p.size(); ++i)
    if (!same_entry(p[i], p[p.size() - 1 - i])) return false;
  return true;
}

// Lower and upper brackets of the two tails at cut n from the entries
// within `depth` of it: the remaining tail [e; ...] lies in [e, e + 1].
Interval bracket_right_tail(const BilliardSeq& k, long n, long depth) {
  const long e = k.entry(n + depth + 1);
  Interval x{Rational(e), Rational(e + 1)};
  for (long i = n + depth; i >= n; --i)
    x = Rational(k.entry(i)) + x.reciprocal();
  return x;
}

Interval bracket_left_tail(const BilliardSeq& k, long n, long depth) {
  const long e = k.entry(n - depth - 2);
  Interval x{Rational(e), Rational(e + 1)};
  for (long i = n - depth - 1; i < n; ++i)
    x = Rational(k.entry(i)) + x.reciprocal();
  return x.reciprocal();
}

// Certified upper bound of min_j |N_j| / (r + s) at one cut.
Rational cut_upper(const BilliardSeq& k, long n, long depth) {
  const Interval r = bracket_right_tail(k, n, depth);
  const Interval s = bracket_left_tail(k, n, depth);
  Rational best = functional_box(1, r, s).abs().hi();
  for (int j = 2; j <= 5; ++j)
    best = std::min(best, Rational(functional_box(j, r, s).abs().hi()));
  return best;
}

}  // namespace

Rational mu_upper_certificate(const BilliardSeq& seq, const QuadSurd& target) {
  const BilliardSeq k = seq.canonical();
  const long c = static_cast<long>(k.core().size());
  const long rl = static_cast<long>(k.right().size());
  const long ll = static_cast<long>(k.left().size());
  const long x0 = c + 2 - k.origin();
  const long y0 = 1 - k.origin();
  // Widening the window approaches the periodic orbit cuts at both ends, so
  // an infimum attained only in the limit is still separated eventually.
  // Depth 512 brackets tails to ~10^-200, so giving up after the last round
  // means the gap below the target is implausibly small or truly zero.
  for (int round = 0; round < 7; ++round) {
    const long depth = 8L << round;
    const long pad = 2L << round;
    std::optional<Rational> best;
    for (long n = y0 - ll - pad; n <= x0 + rl + pad; ++n) {
      const Rational u = cut_upper(k, n, depth);
      if (!best || u < *best) best = u;
    }
    if (QuadSurd(*best) < target) return *best;
  }
  throw PreconditionError("no cut separates mu(" + k.to_string() +
                          ") from the target");
}

ExceptionalResult classify_exceptional(const BilliardSeq& seq) {
  const BilliardSeq k = seq.canonical();
  ExceptionalResult out;
  for (int j = 1; j <= 3; ++j) {
    const BilliardSeq& e = exceptional_sequence(j);
    if (seq_equivalent(k, e, false) ||
        seq_equivalent(k.reversal(), e, false)) {
      out.exceptional = true;
      out.family = j;
      out.reason = "equivalent to " + e.to_string();
      return out;
    }
  }

  const long c = static_cast<long>(k.core().size());
  const long rl = static_cast<long>(k.right().size());
  const long ll = static_cast<long>(k.left().size());
  const long x0 = c + 2 - k.origin();
  const long y0 = 1 - k.origin();
  for (const ExclusionBound& b : exclusion_bounds()) {
    for (const ExclusionCase& cs : b.cases) {
      for (int rev = 0; rev < 2; ++rev) {
        Pattern p = cs.pattern;
        if (rev) {
          if (palindromic(p)) continue;
          std::reverse(p.begin(), p.end());
        }
        const long len = static_cast<long>(p.size());
        for (long o = y0 - ll - len - 2; o <= x0 + rl + 2; ++o) {
          if (!matches_at(k, p, o)) continue;
          out.by_pattern = true;
          out.bound_name = b.name;
          out.offset = o;
          out.reversed = rev != 0;
          out.bound_upper = b.upper;
          out.reason = "contains " + cs.label +
                       (rev ? " reversed" : "") + " at offset " +
                       std::to_string(o) + ", so mu <= " +
                       b.upper.get_str();
          return out;
        }
      }
    }
  }

  // No pattern applies; settle by the value of mu itself.
  out.by_value = true;
  const TailValues t = tails(k, 1);
  if (t.r.d() == t.s.d()) {
    const MuProfile p = mu_profile(k);
    if (!(p.mu < exceptional_threshold()))
      throw std::logic_error("unmatched sequence at or above the threshold: " +
                             k.to_string());
    out.value_exact = true;
    out.mu = p.mu;
    out.reason = "mu = " + p.mu.to_string() + " is below the threshold";
  } else {
    out.mu_upper = mu_upper_certificate(k, exceptional_threshold());
    out.reason = "certified mu <= " + out.mu_upper.get_str() +
                 " below the threshold";
  }
  return out;
}

}  // namespace mbs
