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

#ifndef MBS_SPECTRA_H_
#define MBS_SPECTRA_H_

#include <optional>
#include <string>
#include <vector>

#include "mbs/billiard.hpp"
#include "mbs/form.hpp"
#include "mbs/quadsurd.hpp"
#include "mbs/sequence.hpp"

namespace mbs {

// Positive definite integral form a'x^2 + b'xy + c'y^2 marking the interior
// point z of the triangle that is the first root of the form.
class PointForm {
 public:
  PointForm(BinaryForm f, std::string name);

  static PointForm at_i();        // (1, 0, 1),  z = i
  static PointForm at_rho();      // (1, -1, 1), z = (1 + sqrt(-3)) / 2
  static PointForm at_2i();       // (1, 0, 4),  z = 2i
  static PointForm at_sqrt2i();   // (1, 0, 2),  z = sqrt(-2)

  const BinaryForm& form() const { return form_; }
  const std::string& name() const { return name_; }

 private:
  BinaryForm form_;
  std::string name_;
};

// sinh of the hyperbolic distance from the point of zf to the geodesic of Q:
// (d |d'|)^(-1/2) |2c'a + 2a'c - b'b|.  Exact; requires disc(Q) > 0 and the
// product d |d'| to have a square root in a real quadratic field.
QuadSurd sinh_delta(const PointForm& zf, const BinaryForm& q);

// The quaternary form Q'' attached to (zf, Q), evaluated on one matrix worth
// of integers subject to x1 x4 - x2 x3 = +-1.  Its value at (x1,x2,x3,x4)
// equals the sinh numerator 2c'a~ + 2a'c~ - b'b~ of the translated form
// (a~,b~,c~) = act(Q, N) with N = (x4,-x2;-x3,x1), up to the sign det N, so
// minimizing |Q''| over the constraint sweeps the class of Q.
QuadSurd quaternary_eval(const PointForm& zf, const BinaryForm& q,
                         const Int& x1, const Int& x2, const Int& x3,
                         const Int& x4);

// One of the six tail functionals: j picks mu', mu'', mu''' of K (1..3) or
// of the reversal K* indexed on K (4 = mu''*, 5 = mu'''*; mu'* equals mu').
// All five are |u r s + v r + w s + z| / (r + s) for constants depending on
// nothing, evaluated here exactly at the tails of position n.
QuadSurd mu_functional(int j, const QuadSurd& r, const QuadSurd& s);

struct MuProfile {
  QuadSurd mu1, mu2, mu3;        // inf over n of mu'_n, mu''_n, mu'''_n
  QuadSurd mu1s, mu2s, mu3s;     // the same for the reversal K*
  QuadSurd mu;                   // min of the six
  bool attained = false;         // overall inf achieved at a finite index
  long attained_index = 0;       // achieving index, or limiting branch base
};

// Exact infima over all integer positions of the six tail quantities whose
// minimum is 1 / lambda_i.  Indices inside a core window are evaluated
// directly; each periodic tail splits into finitely many monotone branches
// whose infima are resolved by endpoint comparison, with an exact matrix
// power search when the branch value changes sign.  Starred infima are
// reported at the matching position of K itself.
MuProfile mu_profile(const BilliardSeq& k);

enum class SpectrumId { kInf, kI, kRho, k2I };

std::string spectrum_id_name(SpectrumId id);

// The point form a spectrum measures distances from.  The 2i spectrum uses
// the disk-packing point sqrt(-2): that is the point whose smallest value is
// sqrt(8), reached along the boundary billiard; the literal point 2i sits at
// distance arcsinh(1/4) from that billiard and has no comparable theory.
PointForm spectrum_point(SpectrumId id);

struct SpectrumPoint {
  SpectrumId id = SpectrumId::kInf;
  ExtendedReal value;
  std::optional<Billiard> witness;
  std::optional<BilliardSeq> witness_seq;
  bool attained = false;
  // "exact", "upper_bound_on_inverse" (improper distance bound), or
  // "upper_bound(H=...)" (search truncated at matrix entry bound H).
  std::string certificate;
};

// Twice the maximal height: sup over n of r_n + s_n, exact.  Improper
// billiards get the infinite point.
SpectrumPoint lambda_inf(const Billiard& b);

// 1 / mu(K) for proper billiards (infinite when mu = 0, i.e. the billiard
// meets the corner i).  For periodic billiards the chain minimum of nu is
// computed as well and asserted equal.  Improper billiards report the
// reflection-line bound 1 / min(alpha, 1 - 2 alpha), minimized over both
// orientations, with certificate "upper_bound_on_inverse".
SpectrumPoint lambda_i(const Billiard& b);

// lambda_z for a proper billiard.  Periodic billiards are exact: folding
// enumerates every class member whose geodesic meets the triangle, and an
// unfolding argument shows the distance infimum is attained among those, so
// the minimum of |2c'a + 2a'c - b'b| over the folded segments closes the
// search.  Non-periodic billiards are searched over a window of chain forms
// acted on by all matrices with entries bounded by H; the result is then
// only certified as a bound, "upper_bound(H=...)".
SpectrumPoint lambda_point(const PointForm& zf, const Billiard& b,
                           long search_bound = 50);

struct MarkovTriple {
  Int p, q, r;  // p <= q <= r, p^2 + q^2 + r^2 = 3 p q r
};

// All Markov triples with largest component at most bound, each once up to
// permutation, sorted by (r, q, p).
std::vector<MarkovTriple> markov_triples(const Int& bound);

// The billiard attaining sqrt(9p^2 - 4) / p, built from the Markov form
// (p, 3p - 2k, (k^2 + 1)/p - 3k) where k^2 = -1 mod p.
Billiard markov_billiard(const Int& p);

// The smallest points of a spectrum, exact with re-evaluable witnesses.
// Only the proven ranges are served: every point below 3 for the classical
// spectrum, three points for i, one for rho and sqrt(-2).  Counts beyond
// that throw PreconditionError.
std::vector<SpectrumPoint> spectrum_low(SpectrumId id, long count);

// The family whose rho values decrease to sqrt(3): form (1, -ell, -1) with
// lambda_rho = sqrt(3 ell^2 + 12) / ell.
Billiard approximant_rho(long ell);

// The family whose sqrt(-2) values decrease to sqrt(8): form (ell, 1, -ell)
// for ell >= 3, with lambda = sqrt(8 ell^2 + 2) / (ell - 2).  The minimum is
// carried by the class member (1, 2 ell - 1, -ell), whose pairing with the
// point form is 2 (ell - 2).
Billiard approximant_2i(long ell);

struct KEll {
  BilliardSeq seq;          // (per(3,1), 4, 1,3,...,1, 4, per(1,3))
  QuadSurd closed_form_mu;  // mu of the sequence in closed form
};

// The two-tailed family interpolating between the first and third smallest
// i-spectrum billiards: ell ones between the two fours.  mu(K_ell) increases
// strictly to (sqrt(21) - 3) / 4, so 1 / mu decreases to (3 + sqrt(21)) / 3
// from above as ell grows.
KEll k_ell(long ell);

// Every integer matrix of determinant +-1 with entries bounded by h in
// absolute value, one representative per global sign.
std::vector<GL2> unimodular_matrices(long h);

}  // namespace mbs

#endif  // MBS_SPECTRA_H_
