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

#include "mbs/quadsurd.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace mbs {

namespace {

constexpr unsigned long kTrialLimit = 100000;

SquarefreeDecomposition decompose_uncached(Int n) {
  SquarefreeDecomposition out{1, 1};
  if (n == 0) return {0, 1};
  auto strip = [&](unsigned long pr) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), pr)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), pr);
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) out.square_part *= pr;
    if (e % 2) out.squarefree *= pr;
  };
  strip(2);
  strip(3);
  for (unsigned long pr = 5; pr <= kTrialLimit && n > 1; pr += 6) {
    strip(pr);
    strip(pr + 2);
  }
  if (n > 1) {
    if (is_perfect_square(n)) {
      out.square_part *= isqrt(n);
    } else if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
      out.squarefree *= n;
    } else if (n <= Int("1000000000000000")) {
      // Composite, non-square, no factor below the trial limit: any square
      // divisor would exceed 1e15, so the cofactor is squarefree.
      out.squarefree *= n;
    } else {
      throw std::domain_error("squarefree_decompose: radicand out of range");
    }
  }
  return out;
}

}  // namespace

SquarefreeDecomposition squarefree_decompose(Int n) {
  if (n < 0) throw std::domain_error("squarefree_decompose of negative");
  static thread_local std::map<Int, SquarefreeDecomposition> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  SquarefreeDecomposition out = decompose_uncached(n);
  cache.emplace(n, out);
  return out;
}

double to_double(const Rational& x) {
  return mpq_class(x).get_d();
}

QuadSurd::QuadSurd(const Rational& v)
    : p_(v.get_num()), q_(0), r_(v.get_den()), d_(0) {
  canonicalize();
}

QuadSurd::QuadSurd(Int p, Int q, Int r, Int d)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
  canonicalize();
}

QuadSurd QuadSurd::sqrt_of(const Int& n) {
  if (n < 0) throw std::domain_error("sqrt_of negative");
  return QuadSurd(0, 1, 1, n);
}

void QuadSurd::canonicalize() {
  if (r_ == 0) throw std::domain_error("QuadSurd with zero denominator");
  if (d_ < 0) throw std::domain_error("QuadSurd with negative radicand");
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  if (q_ == 0 || d_ == 0) {
    q_ = 0;
    d_ = 0;
  } else if (d_ == 1) {
    p_ += q_;
    q_ = 0;
    d_ = 0;
  } else {
    SquarefreeDecomposition sd = squarefree_decompose(d_);
    if (sd.square_part != 1 || sd.squarefree != d_) {
      q_ *= sd.square_part;
      d_ = sd.squarefree;
      if (d_ == 1) {
        p_ += q_;
        q_ = 0;
        d_ = 0;
      }
    }
  }
  Int g = gcd(gcd(p_, q_), r_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

Rational QuadSurd::rational_value() const {
  if (!is_rational()) throw std::domain_error("rational_value of irrational");
  Rational v(p_, r_);
  v.canonicalize();
  return v;
}

QuadSurd QuadSurd::conjugate() const { return QuadSurd(p_, -q_, r_, d_); }

Rational QuadSurd::norm() const {
  Rational v(p_ * p_ - q_ * q_ * d_, r_ * r_);
  v.canonicalize();
  return v;
}

Rational QuadSurd::trace() const {
  Rational v(2 * p_, r_);
  v.canonicalize();
  return v;
}

int QuadSurd::sign() const {
  // r > 0, so the sign is that of p + q*sqrt(d).
  if (q_ == 0) return sgn(p_);
  int sp = sgn(p_);
  int sq = sgn(q_);
  if (sp == sq || sp == 0) return sq;
  if (sq == 0) return sp;
  // Opposite signs: compare p^2 against q^2 d; the larger magnitude wins.
  Int lhs = p_ * p_;
  Int rhs = q_ * q_ * d_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sp : sq;
}

QuadSurd QuadSurd::abs() const { return sign() < 0 ? -*this : *this; }

QuadSurd QuadSurd::operator-() const { return QuadSurd(-p_, -q_, r_, d_); }

namespace {

// Shared radicand for a binary operation, or throws.
const Int& common_d(const QuadSurd& a, const QuadSurd& b) {
  if (a.is_rational()) return b.d();
  if (b.is_rational()) return a.d();
  if (a.d() != b.d()) {
    throw SurdDomainError("mixed radicands: sqrt(" + a.d().get_str() +
                          ") vs sqrt(" + b.d().get_str() + ")");
  }
  return a.d();
}

}  // namespace

QuadSurd QuadSurd::operator+(const QuadSurd& o) const {
  const Int& d = common_d(*this, o);
  return QuadSurd(p_ * o.r_ + o.p_ * r_, q_ * o.r_ + o.q_ * r_, r_ * o.r_, d);
}

QuadSurd QuadSurd::operator-(const QuadSurd& o) const {
  const Int& d = common_d(*this, o);
  return QuadSurd(p_ * o.r_ - o.p_ * r_, q_ * o.r_ - o.q_ * r_, r_ * o.r_, d);
}

QuadSurd QuadSurd::operator*(const QuadSurd& o) const {
  const Int& d = common_d(*this, o);
  return QuadSurd(p_ * o.p_ + q_ * o.q_ * d, p_ * o.q_ + q_ * o.p_,
                  r_ * o.r_, d);
}

QuadSurd QuadSurd::operator/(const QuadSurd& o) const {
  if (o.is_zero()) throw std::domain_error("QuadSurd division by zero");
  const Int& d = common_d(*this, o);
  // 1/((p+q*sqrt(d))/r) = r(p - q*sqrt(d)) / (p^2 - q^2 d).
  Int denom = o.p_ * o.p_ - o.q_ * o.q_ * d;
  QuadSurd inv(o.r_ * o.p_, -o.r_ * o.q_, denom, d);
  return *this * inv;
}

int QuadSurd::cmp(const QuadSurd& o) const {
  if (is_rational() || o.is_rational() || d_ == o.d_) {
    return (*this - o).sign();
  }
  // Different radicands.  Compare A + B*sqrt(d1) against E*sqrt(d2) with
  // A = p1 r2 - p2 r1, B = q1 r2, E = q2 r1 (both r positive).
  Int A = p_ * o.r_ - o.p_ * r_;
  Int B = q_ * o.r_;
  Int E = o.q_ * r_;
  int sl = QuadSurd(A, B, 1, d_).sign();
  int sr = sgn(E);
  if (sl != sr) return sl < sr ? -1 : 1;
  if (sl == 0) return 0;
  // Same nonzero sign: square both sides and compare within Q(sqrt(d1)).
  QuadSurd diff(A * A + B * B * d_ - E * E * o.d_, 2 * A * B, 1, d_);
  int s2 = diff.sign();
  return sl > 0 ? s2 : -s2;
}

Int QuadSurd::floor() const {
  // floor(q*sqrt(d)) first, then one exact comparison fixes the quotient.
  Int t;
  Int qq = q_ * q_ * d_;
  if (q_ >= 0) {
    t = isqrt(qq);
  } else {
    t = -isqrt(qq);
    if (!is_perfect_square(qq)) t -= 1;
  }
  Int k = floor_div(p_ + t, r_);
  // p + q*sqrt(d) lies in [p+t, p+t+1), so floor is k or k+1.
  QuadSurd upper = *this - QuadSurd(Rational(k + 1));
  if (upper.sign() >= 0) k += 1;
  return k;
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& v) {
  if (v < 0) return std::nullopt;
  if (!is_perfect_square(Int(v.get_num()))) return std::nullopt;
  if (!is_perfect_square(Int(v.get_den()))) return std::nullopt;
  Rational out(isqrt(Int(v.get_num())), isqrt(Int(v.get_den())));
  out.canonicalize();
  return out;
}

}  // namespace

std::optional<QuadSurd> QuadSurd::field_sqrt() const {
  if (sign() < 0) return std::nullopt;
  if (is_rational()) {
    // sqrt(n/m) = sqrt(n*m)/m, always a QuadSurd for nonnegative rationals.
    Rational v = rational_value();
    Int nm = Int(v.get_num()) * Int(v.get_den());
    return QuadSurd(0, 1, Int(v.get_den()), nm);
  }
  // Want (s + t*sqrt(d))^2 = A + B*sqrt(d); then s^2 and t^2 d are the roots
  // of z^2 - A z + B^2 d / 4, so norm(x) = A^2 - B^2 d must be a rational
  // square for an in-field root to exist.
  Rational A(p_, r_);
  A.canonicalize();
  Rational B(q_, r_);
  B.canonicalize();
  std::optional<Rational> w = rational_sqrt(norm());
  if (!w) return std::nullopt;
  for (int branch = 0; branch < 2; ++branch) {
    Rational z = branch == 0 ? Rational((A + *w) / 2) : Rational((A - *w) / 2);
    std::optional<Rational> s = rational_sqrt(z);
    if (!s || *s == 0) continue;
    Rational t = B / (2 * (*s));
    QuadSurd y = QuadSurd(*s) + QuadSurd(t) * sqrt_of(d_);
    if (y * y == *this) return y.abs();
  }
  return std::nullopt;
}

double QuadSurd::to_double() const {
  mpf_class p(p_, 128), q(q_, 128), r(r_, 128), d(d_, 128);
  mpf_class val = (p + q * sqrt(d)) / r;
  return val.get_d();
}

std::string QuadSurd::decimal(unsigned sig) const {
  if (sig == 0) sig = 1;
  if (is_zero()) return "0";
  QuadSurd a = abs();
  bool neg = sign() < 0;

  double est = a.to_double();
  long e = 1;
  if (est > 0) e = static_cast<long>(std::floor(std::log10(est))) + 1;
  auto pow10_rat = [](long k) {
    return k >= 0 ? Rational(pow10(k)) : Rational(1, pow10(-k));
  };
  while (a.cmp(QuadSurd(pow10_rat(e))) >= 0) ++e;
  while (a.cmp(QuadSurd(pow10_rat(e - 1))) < 0) --e;

  long k = static_cast<long>(sig) - e;
  QuadSurd scaled = a * QuadSurd(pow10_rat(k));
  Int n = scaled.floor();
  int c = (scaled - QuadSurd(Rational(n))).cmp(QuadSurd(Rational(1, 2)));
  if (c > 0 || (c == 0 && mpz_odd_p(n.get_mpz_t()))) n += 1;
  if (n == pow10(sig)) {
    n = pow10(sig - 1);
    e += 1;
  }

  std::string digits = n.get_str();
  std::string out;
  if (e >= static_cast<long>(sig)) {
    out = digits + std::string(e - sig, '0');
  } else if (e >= 1) {
    std::string frac = digits.substr(e);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = digits.substr(0, e);
    if (!frac.empty()) out += "." + frac;
  } else {
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out = "0." + std::string(-e, '0') + digits;
  }
  return neg ? "-" + out : out;
}

std::string QuadSurd::to_string() const {
  if (is_rational()) {
    Rational v = rational_value();
    return v.get_den() == 1 ? v.get_num().get_str() : v.get_str();
  }
  std::ostringstream os;
  Int aq = q_ < 0 ? Int(-q_) : q_;
  std::string radical = aq == 1 ? "sqrt(" + d_.get_str() + ")"
                                : aq.get_str() + "*sqrt(" + d_.get_str() + ")";
  bool wrap = r_ != 1;
  if (p_ == 0) {
    if (q_ < 0) os << "-";
    if (wrap) os << "(" << radical << ")/" << r_.get_str();
    else os << radical;
    return os.str();
  }
  if (wrap) os << "(";
  os << p_.get_str() << (q_ < 0 ? "-" : "+") << radical;
  if (wrap) os << ")/" << r_.get_str();
  return os.str();
}

}  // namespace mbs
