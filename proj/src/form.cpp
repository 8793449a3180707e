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

#include "mbs/form.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "mbs/cfrac.hpp"

namespace mbs {
namespace {

constexpr long kStepCap = 1000000;

bool both_roots_cusps(const RootPair& rp) {
  return (rp.alpha.is_infinite() || rp.alpha.finite().is_rational()) &&
         (rp.beta.is_infinite() || rp.beta.finite().is_rational());
}

// Class invariant of an ordered pair of cusps: send the second to infinity
// and take the first modulo x -> +-x + n, landing in [0, 1/2].
Rational ordered_cusp_gamma(const ExtendedReal& first,
                            const ExtendedReal& second) {
  ExtendedReal img = moebius(cusp_to_infinity(second), first);
  Rational x = img.finite().rational_value();
  Rational fr = x - Rational(floor_of(x));
  Rational other = Rational(1) - fr;
  return fr < other ? fr : other;
}

bool represents_zero_check(const BinaryForm& q) {
  if (q.disc().sign() < 0) return false;
  if (q.a().is_zero()) return true;
  auto s = q.disc().field_sqrt();
  if (!s) return false;
  RootPair rp = roots(q);
  return rp.alpha.finite().is_rational() || rp.beta.finite().is_rational();
}

// Marked digit sequence of a reduced form.
BilliardSeq sequence_of_reduced(const BinaryForm& r) {
  RootPair rp = roots(r);
  CFExpansion fwd = cf_expand(rp.alpha.finite());
  CFExpansion bwd = cf_expand(QuadSurd(-1) / rp.beta.finite());
  std::vector<long> left(bwd.period.rbegin(), bwd.period.rend());
  std::vector<long> core(bwd.preperiod.rbegin(), bwd.preperiod.rend());
  core.insert(core.end(), fwd.preperiod.begin(), fwd.preperiod.end());
  long origin = 1 + static_cast<long>(bwd.preperiod.size());
  return BilliardSeq(std::move(left), std::move(core), fwd.period, origin);
}

// Forward (j > 0) or backward (j < 0) chain walk, returning the product of
// the step matrices; each step has determinant -1.
GL2 chain_walk(BinaryForm* q, long j) {
  GL2 p = GL2::identity();
  for (long i = 0; i < (j >= 0 ? j : -j); ++i) {
    RootPair rp = roots(*q);
    GL2 step = j >= 0 ? GL2::cf_step(rp.alpha.finite().floor())
                      : GL2(0, 1, 1, -(QuadSurd(-1) / rp.beta.finite()).floor());
    p = p * step;
    *q = act(*q, step);
  }
  return p;
}

}  // namespace

BinaryForm::BinaryForm(QuadSurd a, QuadSurd b, QuadSurd c)
    : a_(std::move(a)),
      b_(std::move(b)),
      c_(std::move(c)),
      disc_(b_ * b_ - QuadSurd(4) * a_ * c_) {
  if (disc_.is_zero()) {
    throw std::invalid_argument("singular form: zero discriminant");
  }
}

QuadSurd BinaryForm::eval(const QuadSurd& x, const QuadSurd& y) const {
  return a_ * x * x + b_ * x * y + c_ * y * y;
}

BinaryForm BinaryForm::operator-() const { return BinaryForm(-a_, -b_, -c_); }

bool BinaryForm::operator==(const BinaryForm& o) const {
  return a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
}

std::string BinaryForm::to_string() const {
  return "form(" + a_.to_string() + "," + b_.to_string() + "," +
         c_.to_string() + ")";
}

BinaryForm act(const BinaryForm& q, const GL2& m) {
  QuadSurd pa(m.a()), pb(m.b()), pc(m.c()), pd(m.d());
  QuadSurd det(m.det());
  QuadSurd a2 = det * q.eval(pa, pc);
  QuadSurd c2 = det * q.eval(pb, pd);
  QuadSurd b2 =
      det * (QuadSurd(2) * q.a() * pa * pb + q.b() * (pa * pd + pb * pc) +
             QuadSurd(2) * q.c() * pc * pd);
  return BinaryForm(a2, b2, c2);
}

RootPair roots(const BinaryForm& q) {
  if (q.disc().sign() < 0) {
    throw PreconditionError("roots: negative discriminant");
  }
  if (q.a().is_zero()) {
    ExtendedReal finite(-(q.c() / q.b()));
    if (q.b().sign() > 0) return {finite, ExtendedReal::infinity()};
    return {ExtendedReal::infinity(), finite};
  }
  auto s = q.disc().field_sqrt();
  if (!s) {
    throw SurdDomainError(
        "roots: discriminant is not a square in the coefficient field");
  }
  QuadSurd two_a = QuadSurd(2) * q.a();
  return {ExtendedReal((-q.b() + *s) / two_a),
          ExtendedReal((-q.b() - *s) / two_a)};
}

bool is_reduced(const BinaryForm& q) {
  if (q.disc().sign() <= 0 || q.a().is_zero()) return false;
  RootPair rp = roots(q);
  const QuadSurd& alpha = rp.alpha.finite();
  const QuadSurd& beta = rp.beta.finite();
  return alpha > QuadSurd(1) && QuadSurd(-1) < beta && beta < QuadSurd(0);
}

ReduceResult reduce(const BinaryForm& q) {
  if (q.disc().sign() <= 0) {
    throw PreconditionError("reduce: needs positive discriminant");
  }
  if (represents_zero_check(q)) {
    throw PreconditionError("reduce: form represents zero");
  }
  BinaryForm cur = q;
  GL2 witness = GL2::identity();
  QuadSurd x = roots(q).alpha.finite();
  long steps = 0;
  while (!is_reduced(cur)) {
    Int k = x.floor();
    GL2 step = GL2::cf_step(k);
    witness = witness * step;
    cur = act(cur, step);
    x = QuadSurd(1) / (x - QuadSurd(k));
    if (++steps > kStepCap) {
      throw std::logic_error("reduce: no reduced form reached");
    }
  }
  return {cur, witness, static_cast<int>(steps % 2)};
}

BinaryForm star(const BinaryForm& q) {
  return BinaryForm(-q.c(), q.b(), -q.a());
}

QuadSurd nu(const BinaryForm& q) {
  if (q.disc().sign() <= 0) {
    throw PreconditionError("nu: needs positive discriminant");
  }
  auto s = q.disc().field_sqrt();
  if (!s) {
    throw SurdDomainError(
        "nu: discriminant is not a square in the coefficient field");
  }
  QuadSurd m1 = (q.a() + q.c()).abs();
  QuadSurd m2 = (QuadSurd(2) * q.a() + q.b() + q.c()).abs();
  QuadSurd m3 = (QuadSurd(2) * q.c() + q.b() + q.a()).abs();
  return std::min({m1, m2, m3}) / *s;
}

BinaryForm chain_step(const BinaryForm& q, int direction) {
  if (!is_reduced(q)) {
    throw PreconditionError("chain_step: needs a reduced form");
  }
  BinaryForm cur = q;
  chain_walk(&cur, direction >= 0 ? 1 : -1);
  return cur;
}

Int chain_digit(const BinaryForm& q) {
  return roots(q).alpha.finite().floor();
}

ChainCycle chain_cycle(const BinaryForm& q) {
  if (!is_reduced(q)) {
    throw PreconditionError("chain_cycle: needs a reduced form");
  }
  ChainCycle cyc;
  BinaryForm cur = q;
  do {
    cyc.forms.push_back(cur);
    cyc.digits.push_back(chain_digit(cur));
    cur = chain_step(cur, +1);
    if (cyc.forms.size() > kStepCap) {
      throw std::logic_error("chain_cycle: chain did not close");
    }
  } while (cur != q);
  return cyc;
}

ClassPredicates class_predicates(const BinaryForm& q) {
  if (q.disc().sign() <= 0) {
    throw PreconditionError("class_predicates: needs positive discriminant");
  }
  ClassPredicates out{};
  out.represents_zero = represents_zero_check(q);
  out.primitive_integral_scalable = to_primitive_integral(q).has_value();
  if (out.represents_zero) {
    RootPair rp = roots(q);
    // Cusp pairs are equivalent iff their gamma invariants agree; a geodesic
    // with one cusp and one irrational endpoint is never its own reversal.
    out.reciprocal = both_roots_cusps(rp) &&
                     ordered_cusp_gamma(rp.alpha, rp.beta) ==
                         ordered_cusp_gamma(rp.beta, rp.alpha);
    out.ambiguous = false;
    return out;
  }
  out.reciprocal = equivalent_forms(q, -q).equivalent;
  if (out.primitive_integral_scalable) {
    BinaryForm integral = to_primitive_integral(q)->first;
    for (const BinaryForm& f : chain_cycle(reduce(integral).reduced).forms) {
      Int a = f.a().rational_value().get_num();
      Int b = f.b().rational_value().get_num();
      if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        out.ambiguous = true;
        break;
      }
    }
  }
  return out;
}

std::optional<std::pair<BinaryForm, QuadSurd>> to_primitive_integral(
    const BinaryForm& q) {
  const QuadSurd& lead = q.a().is_zero() ? q.b() : q.a();
  QuadSurd r1 = q.a() / lead, r2 = q.b() / lead, r3 = q.c() / lead;
  if (!r1.is_rational() || !r2.is_rational() || !r3.is_rational()) {
    return std::nullopt;
  }
  Rational v1 = r1.rational_value(), v2 = r2.rational_value(),
           v3 = r3.rational_value();
  Int l = v1.get_den() * v2.get_den() / gcd(v1.get_den(), v2.get_den());
  l = l * v3.get_den() / gcd(l, v3.get_den());
  Int n1 = v1.get_num() * (l / v1.get_den());
  Int n2 = v2.get_num() * (l / v2.get_den());
  Int n3 = v3.get_num() * (l / v3.get_den());
  Int g = gcd(n1, gcd(n2, n3));
  Int scale = l / g;
  QuadSurd kappa = QuadSurd(scale) / lead;
  if (kappa.sign() < 0) kappa = -kappa;
  BinaryForm p(kappa * q.a(), kappa * q.b(), kappa * q.c());
  return std::make_pair(p, kappa);
}

EquivalenceResult equivalent_forms(const BinaryForm& q1,
                                   const BinaryForm& q2) {
  if (q1.disc().sign() <= 0 || q2.disc().sign() <= 0) {
    throw PreconditionError("equivalence: needs positive discriminants");
  }
  if (represents_zero_check(q1) || represents_zero_check(q2)) {
    throw PreconditionError("equivalence: form represents zero");
  }
  EquivalenceResult out{false, false, GL2::identity()};
  if (q1.disc() != q2.disc()) return out;
  ReduceResult r1 = reduce(q1), r2 = reduce(q2);
  std::vector<long> shifts =
      seq_shifts(sequence_of_reduced(r1.reduced), sequence_of_reduced(r2.reduced));
  if (shifts.empty()) return out;
  // A reduced form is pinned down by its discriminant together with its
  // marked digit sequence, so an aligning shift j means that j chain steps
  // take r1 to r2.  Each step has determinant -1.
  long chosen = shifts[0];
  for (long j : shifts) {
    if (((r1.parity + r2.parity + j) % 2 + 2) % 2 == 0) {
      out.properly = true;
      chosen = j;
      break;
    }
  }
  out.equivalent = true;
  BinaryForm walked = r1.reduced;
  GL2 p = chain_walk(&walked, chosen);
  if (walked != r2.reduced) {
    throw std::logic_error("equivalence: chain alignment failed");
  }
  out.witness = r1.witness * p * r2.witness.inverse();
  return out;
}

BilliardSeq form_sequence(const BinaryForm& q) {
  return sequence_of_reduced(reduce(q).reduced);
}

}  // namespace mbs
