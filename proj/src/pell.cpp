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

#include <stdexcept>

#include "mbs/form.hpp"

namespace mbs {

// One period of the principal form's chain multiplies the step matrices into
// (p_L p_{L-1}; q_L q_{L-1}), and q_L alpha + q_{L-1} is the fundamental
// unit of the order of discriminant d, which carries the minimal (t, u).
PellSolution pell(const Int& d) {
  if (d <= 0) throw PreconditionError("pell: needs d > 0");
  if (is_perfect_square(d)) throw PreconditionError("pell: square d");
  Int m = d % 4;
  if (m != 0 && m != 1) {
    throw PreconditionError("pell: d must be 0 or 1 mod 4");
  }
  BinaryForm principal =
      m == 0 ? BinaryForm(QuadSurd(1), QuadSurd(0), QuadSurd(Int(-d / 4)))
             : BinaryForm(QuadSurd(1), QuadSurd(1), QuadSurd(Int((1 - d) / 4)));
  ReduceResult rr = reduce(principal);
  ChainCycle cyc = chain_cycle(rr.reduced);
  GL2 p = GL2::identity();
  for (const Int& k : cyc.digits) p = p * GL2::cf_step(k);
  QuadSurd alpha = roots(rr.reduced).alpha.finite();
  QuadSurd lambda = (QuadSurd(p.c()) * alpha + QuadSurd(p.d())).abs();
  SquarefreeDecomposition dec = squarefree_decompose(d);
  if (lambda.d() != dec.squarefree || lambda <= QuadSurd(1)) {
    throw std::logic_error("pell: unexpected unit");
  }
  // lambda = (t + u sqrt(d)) / 2: the canonical surd denominator divides 2.
  Int two_p = 2 * lambda.p(), two_q = 2 * lambda.q();
  if (two_p % lambda.r() != 0 || two_q % lambda.r() != 0) {
    throw std::logic_error("pell: unit not half-integral");
  }
  Int t = two_p / lambda.r();
  Int us = two_q / lambda.r();
  if (us % dec.square_part != 0) {
    throw std::logic_error("pell: unit outside the order");
  }
  Int u = us / dec.square_part;
  Int norm = t * t - d * u * u;
  if (norm != 4 && norm != -4) {
    throw std::logic_error("pell: norm is not +-4");
  }
  QuadSurd eps(t, u, Int(2), d);
  if (eps != lambda || t <= 0 || u <= 0) {
    throw std::logic_error("pell: solution not positive");
  }
  return {t, u, norm == 4 ? 4 : -4, eps};
}

}  // namespace mbs
