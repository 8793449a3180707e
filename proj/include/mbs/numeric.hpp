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

#ifndef MBS_NUMERIC_H_
#define MBS_NUMERIC_H_

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mbs {

using Int = mpz_class;
using Rational = mpq_class;

struct SurdDomainError : std::runtime_error {
  explicit SurdDomainError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical precondition of an operation does not hold for the given
// input (reducing a form that represents zero, Pell for a square, ...).
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Largest s with s*s <= n.  Requires n >= 0.
inline Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  Int s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  return s;
}

inline bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int pow10(unsigned long k) {
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
  return p;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_of(const Rational& x) {
  return floor_div(x.get_num(), x.get_den());
}

inline Int ceil_of(const Rational& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

// Writes n = s^2 * f with f squarefree.  Returns {f, s}.  Trial division up
// to 1e5 followed by a square test and a primality test on the cofactor;
// inputs with two large distinct prime squares are out of range and rejected.
struct SquarefreeDecomposition {
  Int squarefree;
  Int square_part;
};

SquarefreeDecomposition squarefree_decompose(Int n);

double to_double(const Rational& x);

}  // namespace mbs

#endif  // MBS_NUMERIC_H_
