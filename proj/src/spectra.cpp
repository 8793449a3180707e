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

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "mbs/gl2.hpp"
#include "mbs/numeric.hpp"
#include "mbs/spectra.hpp"

namespace mbs {
namespace {

BinaryForm int_form(long a, long b, long c) {
  return BinaryForm(QuadSurd(a), QuadSurd(b), QuadSurd(c));
}

// |2c'a + 2a'c - b'b|, the numerator of sinh_delta before normalization.
QuadSurd sinh_numerator(const PointForm& zf, const BinaryForm& q) {
  const BinaryForm& z = zf.form();
  return (2 * (z.c() * q.a()) + 2 * (z.a() * q.c()) - z.b() * q.b()).abs();
}

QuadSurd surd_sqrt(const QuadSurd& x, const char* what) {
  std::optional<QuadSurd> r = x.field_sqrt();
  if (!r) throw PreconditionError(std::string(what) + " has no exact root");
  return r->abs();
}

BinaryForm form_of_geodesic(const Geodesic& g) {
  QuadSurd a = g.alpha.finite(), b = g.beta.finite();
  return BinaryForm(QuadSurd(1), -(a + b), a * b);
}

bool is_cusp(const ExtendedReal& x) {
  return x.is_infinite() || x.finite().is_rational();
}

// Representative in [0, 1/2] of the cusp the matrix sending b to infinity
// assigns to a, modulo translations and the sign flip.
QuadSurd cusp_gamma(const ExtendedReal& a, const ExtendedReal& b) {
  GL2 g = cusp_to_infinity(b);
  QuadSurd t = moebius(g, a).finite();
  QuadSurd fr = t - QuadSurd(t.floor());
  return std::min(fr, 1 - fr);
}

QuadSurd pow_surd(const QuadSurd& x, long e) {
  QuadSurd out(1);
  for (long i = 0; i < e; ++i) out = out * x;
  return out;
}

SpectrumPoint base_point(SpectrumId id, const Billiard& witness) {
  SpectrumPoint out;
  out.id = id;
  out.witness = witness;
  if (witness.proper) out.witness_seq = form_sequence(witness.form);
  return out;
}

}  // namespace

// Columns (x1, x3) run over coprime pairs and the second column solves the
// determinant equation along its residue line.
std::vector<GL2> unimodular_matrices(long h) {
  std::vector<GL2> out;
  for (long x1 = -h; x1 <= h; ++x1) {
    for (long x3 = (x1 > 0 || (x1 == 0 && h >= 1)) ? -h : 1; x3 <= h; ++x3) {
      if (x1 < 0 || (x1 == 0 && x3 <= 0)) continue;  // fix the global sign
      Int g, u, v;
      mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(),
                 Int(x1).get_mpz_t(), Int(x3).get_mpz_t());
      if (g != 1) continue;
      for (int det = -1; det <= 1; det += 2) {
        // x1*x4 - x2*x3 = det with base solution x4 = u*det, x2 = -v*det.
        Int x4b = u * det, x2b = -v * det;
        // Shift by t*(x3, x1) to bring both entries within the bound.
        Int lo = -2 * Int(h) - 1, hi = 2 * Int(h) + 1;
        for (Int t = lo; t <= hi; ++t) {
          Int x4 = x4b + t * x3, x2 = x2b + t * x1;
          if (abs(x4) <= h && abs(x2) <= h) {
            out.emplace_back(Int(x1), x2, Int(x3), x4);
          }
        }
      }
    }
  }
  return out;
}

PointForm::PointForm(BinaryForm f, std::string name)
    : form_(std::move(f)), name_(std::move(name)) {
  if (form_.a().sign() <= 0 || form_.disc().sign() >= 0) {
    throw PreconditionError("point form must be positive definite");
  }
}

PointForm PointForm::at_i() { return PointForm(int_form(1, 0, 1), "i"); }
PointForm PointForm::at_rho() { return PointForm(int_form(1, -1, 1), "rho"); }
PointForm PointForm::at_2i() { return PointForm(int_form(1, 0, 4), "2i"); }
PointForm PointForm::at_sqrt2i() {
  return PointForm(int_form(1, 0, 2), "sqrt(-2)");
}

QuadSurd sinh_delta(const PointForm& zf, const BinaryForm& q) {
  if (q.disc().sign() <= 0) {
    throw PreconditionError("sinh_delta needs an indefinite form");
  }
  QuadSurd dd = q.disc() * zf.form().disc().abs();
  return sinh_numerator(zf, q) / surd_sqrt(dd, "discriminant product");
}

QuadSurd quaternary_eval(const PointForm& zf, const BinaryForm& q,
                         const Int& x1, const Int& x2, const Int& x3,
                         const Int& x4) {
  Int det = x1 * x4 - x2 * x3;
  if (det != 1 && det != -1) {
    throw PreconditionError("quaternary argument must have determinant +-1");
  }
  const BinaryForm& z = zf.form();
  const QuadSurd &A = z.a(), &B = z.b(), &C = z.c();
  const QuadSurd &a = q.a(), &b = q.b(), &c = q.c();
  QuadSurd s1(x1), s2(x2), s3(x3), s4(x4);
  return 2 * (A * c) * (s1 * s1) + 2 * (A * a) * (s2 * s2) +
         2 * (C * c) * (s3 * s3) + 2 * (C * a) * (s4 * s4) +
         2 * (B * a) * (s2 * s4) + 2 * (B * c) * (s1 * s3) -
         2 * (C * b) * (s3 * s4) - 2 * (A * b) * (s1 * s2) -
         B * b * (s1 * s4) - B * b * (s2 * s3);
}

std::string spectrum_id_name(SpectrumId id) {
  switch (id) {
    case SpectrumId::kInf: return "M_inf";
    case SpectrumId::kI: return "M_i";
    case SpectrumId::kRho: return "M_rho";
    case SpectrumId::k2I: return "M_2i";
  }
  throw std::logic_error("unknown spectrum id");
}

PointForm spectrum_point(SpectrumId id) {
  switch (id) {
    case SpectrumId::kI: return PointForm::at_i();
    case SpectrumId::kRho: return PointForm::at_rho();
    case SpectrumId::k2I: return PointForm::at_sqrt2i();
    case SpectrumId::kInf:
      throw PreconditionError("the classical spectrum has no base point");
  }
  throw std::logic_error("unknown spectrum id");
}

SpectrumPoint lambda_inf(const Billiard& b) {
  SpectrumPoint out = base_point(SpectrumId::kInf, b);
  if (!b.proper) {
    out.value = ExtendedReal::infinity();
    out.attained = true;  // the billiard runs into the cusp
    out.certificate = "exact";
    return out;
  }
  TailExtremum e = sup_tail_sum(*out.witness_seq);
  out.value = e.value;
  out.attained = e.attained;
  out.certificate = "exact";
  return out;
}

SpectrumPoint lambda_i(const Billiard& b) {
  SpectrumPoint out = base_point(SpectrumId::kI, b);
  if (b.proper) {
    MuProfile prof = mu_profile(*out.witness_seq);
    if (b.periodic) {
      // Cross-route consistency: the chain minimum of nu must agree with
      // the sequence infimum.
      auto prim = to_primitive_integral(b.form);
      ChainCycle cycle = chain_cycle(reduce(prim->first).reduced);
      QuadSurd best = nu(cycle.forms.front());
      for (const BinaryForm& f : cycle.forms) best = std::min(best, nu(f));
      if (best != prof.mu) {
        throw std::logic_error("lambda_i: chain and sequence routes differ");
      }
    }
    out.value = prof.mu.is_zero() ? ExtendedReal::infinity()
                                  : ExtendedReal(1 / prof.mu);
    out.attained = prof.attained;
    out.certificate = "exact";
    return out;
  }
  const Geodesic& g = b.representative;
  if (!is_cusp(g.alpha) || !is_cusp(g.beta)) {
    throw PreconditionError(
        "improper billiard with an irrational endpoint has no certified "
        "i-distance bound");
  }
  // The billiard is determined by <gamma, infinity> for the gamma of either
  // orientation; each gives the bound 1/lambda_i <= min(gamma, 1-2gamma).
  QuadSurd bound(2);
  for (const QuadSurd& gam :
       {cusp_gamma(g.alpha, g.beta), cusp_gamma(g.beta, g.alpha)}) {
    bound = std::min(bound, std::min(gam, 1 - 2 * gam));
  }
  out.value =
      bound.is_zero() ? ExtendedReal::infinity() : ExtendedReal(1 / bound);
  out.attained = false;
  out.certificate = "upper_bound_on_inverse";
  return out;
}

SpectrumPoint lambda_point(const PointForm& zf, const Billiard& b,
                           long search_bound) {
  if (!b.proper) {
    throw PreconditionError("lambda_point requires a proper billiard");
  }
  SpectrumPoint out = base_point(SpectrumId::kI, b);
  if (zf.name() == "rho") out.id = SpectrumId::kRho;
  if (zf.name() == "sqrt(-2)" || zf.name() == "2i") out.id = SpectrumId::k2I;

  if (b.periodic) {
    // Folding lists every class member whose geodesic meets the triangle;
    // unfolding the shortest connecting arc shows the distance infimum is
    // attained on one of them, so this minimum is exact.
    FoldResult fr = fold(b, 200000);
    if (!fr.closed) throw std::logic_error("periodic fold did not close");
    bool have = false;
    QuadSurd num_min(0), d(0);
    for (const TrajectorySegment& seg : fr.segments) {
      auto prim = to_primitive_integral(form_of_geodesic(seg.geodesic));
      if (!prim) throw std::logic_error("periodic segment not integral");
      if (!have) {
        d = prim->first.disc();
      } else if (d != prim->first.disc()) {
        throw std::logic_error("fold segments changed discriminant");
      }
      QuadSurd n = sinh_numerator(zf, prim->first);
      num_min = have ? std::min(num_min, n) : n;
      have = true;
    }
    QuadSurd root = surd_sqrt(d * zf.form().disc().abs(), "distance scale");
    out.value = num_min.is_zero() ? ExtendedReal::infinity()
                                  : ExtendedReal(root / num_min);
    out.attained = true;
    out.certificate = "exact";
    return out;
  }

  // Non-periodic: sweep a transitional window of the reduced chain under
  // every bounded matrix.  Minimizing over a subset of the class bounds the
  // distance from above, so the value is only certified as a bound.
  BinaryForm base = b.form;
  if (!base.disc().is_rational()) {
    QuadSurd conj = base.disc().conjugate();
    if (conj.sign() <= 0) {
      throw PreconditionError("geodesic discriminant cannot be normalized");
    }
    QuadSurd s = surd_sqrt(conj, "conjugate discriminant");
    base = BinaryForm(base.a() * s, base.b() * s, base.c() * s);
  }
  const BilliardSeq& k = *out.witness_seq;
  long lcm2 = std::lcm(std::max<long>(1, 2 * k.left().size()),
                       std::max<long>(1, 2 * k.right().size()));
  long window = static_cast<long>(k.core().size()) + 2 * lcm2 + 8;
  BinaryForm q = reduce(base).reduced;
  for (long i = 0; i < window; ++i) q = chain_step(q, -1);
  std::vector<GL2> mats = unimodular_matrices(search_bound);
  bool have = false;
  QuadSurd num_min(0);
  for (long i = 0; i <= 2 * window; ++i) {
    for (const GL2& m : mats) {
      QuadSurd n = sinh_numerator(zf, act(q, m));
      num_min = have ? std::min(num_min, n) : n;
      have = true;
    }
    q = chain_step(q, +1);
  }
  QuadSurd root =
      surd_sqrt(base.disc() * zf.form().disc().abs(), "distance scale");
  out.value = num_min.is_zero() ? ExtendedReal::infinity()
                                : ExtendedReal(root / num_min);
  out.attained = false;
  out.certificate = "upper_bound(H=" + std::to_string(search_bound) + ")";
  return out;
}

std::vector<MarkovTriple> markov_triples(const Int& bound) {
  if (bound < 1) throw PreconditionError("markov bound must be positive");
  std::set<std::array<Int, 3>> seen;
  std::vector<std::array<Int, 3>> queue;
  auto push = [&](std::array<Int, 3> t) {
    std::sort(t.begin(), t.end());
    if (t[2] <= bound && seen.insert(t).second) queue.push_back(t);
  };
  push({1, 1, 1});
  for (size_t i = 0; i < queue.size(); ++i) {
    auto [p, q, r] = queue[i];
    push({p, 3 * p * r - q, r});
    push({q, r, 3 * q * r - p});
  }
  std::vector<MarkovTriple> out;
  out.reserve(seen.size());
  for (const auto& t : seen) out.push_back(MarkovTriple{t[0], t[1], t[2]});
  std::sort(out.begin(), out.end(), [](const MarkovTriple& x,
                                       const MarkovTriple& y) {
    return std::tie(x.r, x.q, x.p) < std::tie(y.r, y.q, y.p);
  });
  return out;
}

Billiard markov_billiard(const Int& p) {
  if (p < 1) throw PreconditionError("markov number must be positive");
  // k with k^2 = -1 mod p; exists exactly for Markov numbers' divisors.
  Int k = 0;
  bool found = false;
  for (; k <= p / 2; ++k) {
    if ((k * k + 1) % p == 0) {
      found = true;
      break;
    }
  }
  if (!found) throw PreconditionError("no square root of -1 modulo p");
  Int ell = (k * k + 1) / p;
  Int mid = 3 * p - 2 * k, last = ell - 3 * k;
  BinaryForm q{QuadSurd(p), QuadSurd(mid), QuadSurd(last)};
  RootPair rp = roots(q);
  return billiard_from_geodesic(Geodesic(rp.alpha, rp.beta));
}

std::vector<SpectrumPoint> spectrum_low(SpectrumId id, long count) {
  if (count < 0) throw PreconditionError("count must be nonnegative");
  std::vector<SpectrumPoint> out;
  switch (id) {
    case SpectrumId::kInf: {
      Int bound = 40;
      std::vector<Int> maxima;
      for (;;) {
        maxima.clear();
        for (const MarkovTriple& t : markov_triples(bound)) {
          if (maxima.empty() || maxima.back() != t.r) maxima.push_back(t.r);
        }
        if (static_cast<long>(maxima.size()) >= count) break;
        bound *= 8;
      }
      for (long i = 0; i < count; ++i) {
        const Int& p = maxima[i];
        SpectrumPoint sp = base_point(id, markov_billiard(p));
        sp.value = QuadSurd(0, 1, p, 9 * p * p - 4);
        sp.attained = true;
        sp.certificate = "exact";
        out.push_back(std::move(sp));
      }
      return out;
    }
    case SpectrumId::kI: {
      if (count > 3) {
        throw PreconditionError(
            "only the three smallest points of M_i are proven");
      }
      QuadSurd h = QuadSurd::sqrt_of(21);
      const Geodesic c1((1 - h) / 2, (1 + h) / 2);
      const Geodesic c2((2 - QuadSurd::sqrt_of(14)) / 2,
                        (2 + QuadSurd::sqrt_of(14)) / 2);
      const Geodesic c3((3 - h) / 2, (5 + h) / 2);
      const QuadSurd values[] = {QuadSurd(0, 1, 2, 21), QuadSurd(0, 2, 3, 14),
                                 QuadSurd(3, 1, 3, 21)};
      const Geodesic* reps[] = {&c1, &c2, &c3};
      for (long i = 0; i < count; ++i) {
        SpectrumPoint sp = base_point(id, billiard_from_geodesic(*reps[i]));
        sp.value = values[i];
        sp.attained = true;
        sp.certificate = "exact";
        out.push_back(std::move(sp));
      }
      return out;
    }
    case SpectrumId::kRho: {
      if (count > 1) {
        throw PreconditionError(
            "only the smallest point of M_rho is proven; the approximant "
            "family only accumulates there");
      }
      if (count == 1) {
        SpectrumPoint sp = base_point(
            id, billiard_from_geodesic(Geodesic(QuadSurd(0),
                                                ExtendedReal::infinity())));
        sp.value = QuadSurd(0, 1, 1, 3);
        sp.attained = true;
        sp.certificate = "exact";
        out.push_back(std::move(sp));
      }
      return out;
    }
    case SpectrumId::k2I: {
      if (count > 1) {
        throw PreconditionError(
            "only the smallest point of M_2i is proven; the approximant "
            "family only accumulates there");
      }
      if (count == 1) {
        SpectrumPoint sp = base_point(
            id, billiard_from_geodesic(Geodesic(QuadSurd(1, 0, 2, 0),
                                                ExtendedReal::infinity())));
        sp.value = QuadSurd(0, 2, 1, 2);
        sp.attained = true;
        sp.certificate = "exact";
        out.push_back(std::move(sp));
      }
      return out;
    }
  }
  throw std::logic_error("unknown spectrum id");
}

Billiard approximant_rho(long ell) {
  if (ell < 1) throw PreconditionError("family index must be positive");
  RootPair rp = roots(int_form(1, -ell, -1));
  return billiard_from_geodesic(Geodesic(rp.alpha, rp.beta));
}

Billiard approximant_2i(long ell) {
  // ell = 2 is excluded: disc 17 has one class and it contains (1, 3, -2),
  // whose geodesic passes through sqrt(-2) exactly, so the value is infinite.
  if (ell < 3) throw PreconditionError("family starts at ell = 3");
  RootPair rp = roots(int_form(ell, 1, -ell));
  return billiard_from_geodesic(Geodesic(rp.alpha, rp.beta));
}

KEll k_ell(long ell) {
  if (ell < 1) throw PreconditionError("k_ell requires ell >= 1");
  std::vector<long> core{4};
  for (long i = 1; i < ell; ++i) {
    core.push_back(1);
    core.push_back(3);
  }
  core.push_back(1);
  core.push_back(4);
  // Origin 2 puts the leading 4 at position zero, so the ones sit at the
  // odd positions 1, 3, ..., 2*ell - 1 and the trailing 4 at 2*ell.
  BilliardSeq seq({3, 1}, core, {1, 3}, 2);
  const QuadSurd eps(5, 1, 2, 21), eps_inv(5, -1, 2, 21);
  QuadSurd el = pow_surd(eps, ell), el_inv = pow_surd(eps_inv, ell);
  QuadSurd num = QuadSurd(-3, 2, 1, 21) * el - 3 * (eps * el_inv);
  QuadSurd den = QuadSurd(11, 1, 1, 21) * el - el_inv / 2;
  return KEll{std::move(seq), num / den};
}

}  // namespace mbs
