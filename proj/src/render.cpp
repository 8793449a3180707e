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

#include "mbs/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mbs/form.hpp"
#include "mbs/gl2.hpp"

namespace mbs {

namespace {

Int pow10(long k) {
  Int v;
  mpz_ui_pow_ui(v.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return v;
}

Rational make_rational(const Int& num, const Int& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Int rfloor(const Rational& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Int rceil(const Rational& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

std::string dec(const QuadSurd& v) { return v.decimal(12); }
std::string dec(const Rational& v) { return QuadSurd(v).decimal(12); }

// Stroke width of w_px display pixels in the mathematical coordinates the
// transform group uses.
std::string stroke_width(const Rational& w_px, const Rational& scale) {
  return dec(Rational(w_px / scale));
}

std::string svg_preamble(long width_px, const std::string& height,
                         const std::string& title) {
  const std::string w = std::to_string(width_px);
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         w + "\" height=\"" + height + "\" viewBox=\"0 0 " + w + " " + height +
         "\">\n<title>" + title + "</title>\n";
  return out;
}

std::string empty_doc(const Scene& sc, const std::string& title) {
  return svg_preamble(sc.width_px, "1", title) + "</svg>\n";
}

// Document header plus a group mapping mathematical coordinates (x up to
// y_cap) onto pixels, flipping y.  Coordinates inside the group are emitted
// as exact decimals of the mathematical values.
std::string svg_open(const Scene& sc, const std::string& title) {
  const Rational s = sc.scale();
  const std::string h = dec(Rational(sc.y_cap * s));
  std::string out = svg_preamble(sc.width_px, h, title);
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(sc.width_px) +
         "\" height=\"" + h + "\" fill=\"#ffffff\"/>\n";
  out += "<g transform=\"matrix(" + dec(s) + " 0 0 " + dec(Rational(-s)) +
         " " + dec(Rational(-sc.x_min * s)) + " " + h + ")\">\n";
  return out;
}

const char kSvgClose[] = "</g>\n</svg>\n";

std::string axis_line(const Scene& sc) {
  return "<line x1=\"" + dec(sc.x_min) + "\" y1=\"0\" x2=\"" + dec(sc.x_max) +
         "\" y2=\"0\" stroke=\"#9a9a9a\" stroke-width=\"" +
         stroke_width(1, sc.scale()) + "\"/>\n";
}

// One folded trajectory segment as a path: a vertical chord for geodesics
// through infinity (cusp ends clipped at the height cap), otherwise the arc
// of the circle over the real diameter (alpha, beta).  Both candidate arcs
// between the endpoints are minor here, and travel with increasing x runs in
// the negative angular direction of the y-up coordinate group.
std::string segment_path(const TrajectorySegment& seg, const Rational& y_cap) {
  const Geodesic& g = seg.geodesic;
  auto height = [&](const QuadSurd& y2, Side side) {
    if (side == Side::kCusp) return dec(y_cap);
    return sqrt_decimal(y2);
  };
  if (g.alpha.is_infinite() || g.beta.is_infinite()) {
    const QuadSurd& x = g.alpha.is_infinite() ? g.beta.finite()
                                              : g.alpha.finite();
    return "M " + dec(x) + " " + height(seg.entry_y2, seg.entry_side) + " L " +
           dec(x) + " " + height(seg.exit_y2, seg.exit_side);
  }
  const QuadSurd half = QuadSurd(Rational(1, 2));
  const QuadSurd radius = ((g.beta.finite() - g.alpha.finite()) * half).abs();
  const char* sweep = seg.entry_x.cmp(seg.exit_x) < 0 ? "0" : "1";
  return "M " + dec(seg.entry_x) + " " + sqrt_decimal(seg.entry_y2) + " A " +
         dec(radius) + " " + dec(radius) + " 0 0 " + sweep + " " +
         dec(seg.exit_x) + " " + sqrt_decimal(seg.exit_y2);
}

// Outline of T: both vertical walls up to the height cap and the circle arc
// between the corners i and rho.
std::string domain_path(const Rational& y_cap) {
  const std::string cap = dec(y_cap);
  return "M 0 " + cap + " L 0 1 A 1 1 0 0 0 0.5 " +
         sqrt_decimal(QuadSurd(Rational(3, 4))) + " L 0.5 " + cap;
}

Int coefficient_int(const QuadSurd& v, const char* what) {
  if (!v.is_rational())
    throw PreconditionError(std::string("orbit disks need an integral point "
                                        "form; coefficient ") +
                            what + " is irrational");
  const Rational r = v.rational_value();
  if (r.get_den() != 1)
    throw PreconditionError(std::string("orbit disks need an integral point "
                                        "form; coefficient ") +
                            what + " is fractional");
  return Int(r.get_num());
}

struct OrbitGeometry {
  Int abs_disc;
  QuadSurd center_factor;  // y cosh r0 = t * center_factor
  QuadSurd radius_factor;  // y sinh r0 = t * radius_factor
};

OrbitGeometry orbit_geometry(const PointForm& zf, const DiskRadius& radius) {
  const BinaryForm& f = zf.form();
  coefficient_int(f.a(), "a");
  coefficient_int(f.b(), "b");
  coefficient_int(f.c(), "c");
  const QuadSurd d = f.disc();
  if (!d.is_rational() || d.sign() >= 0)
    throw PreconditionError("orbit disks need a negative discriminant");
  const Int abs_disc{-d.rational_value().get_num()};
  const QuadSurd sqrt_abs_disc = QuadSurd::sqrt_of(abs_disc);
  return OrbitGeometry{abs_disc, sqrt_abs_disc * radius.cosh_r,
                       sqrt_abs_disc * radius.sinh_r};
}

}  // namespace

Rational Scene::scale() const {
  if (x_max <= x_min)
    throw PreconditionError("scene window is empty");
  return Rational(width_px) / Rational(x_max - x_min);
}

Scene Scene::domain_window() {
  return Scene{Rational(-3, 10), Rational(4, 5), Rational(5, 2), 660};
}

Scene Scene::unit_window() {
  return Scene{Rational(0), Rational(1), Rational(21, 20), 800};
}

Scene Scene::packing_window() {
  return Scene{Rational(-2), Rational(3), Rational(3, 2), 900};
}

std::string sqrt_decimal(const QuadSurd& v, unsigned sig) {
  if (sig == 0) sig = 1;
  if (v.is_zero()) return "0";
  if (v.sign() < 0) throw SurdDomainError("sqrt_decimal of a negative value");
  auto p10r = [](long k) {
    return k >= 0 ? Rational(pow10(k)) : Rational(1, pow10(-k));
  };
  // e with 10^(e-1) <= sqrt(v) < 10^e: estimated, then fixed exactly.
  const double est = std::sqrt(v.to_double());
  long e = 1;
  if (std::isfinite(est) && est > 0)
    e = static_cast<long>(std::floor(std::log10(est))) + 1;
  while (v.cmp(QuadSurd(p10r(2 * e))) >= 0) ++e;
  while (v.cmp(QuadSurd(p10r(2 * (e - 1)))) < 0) --e;
  const long k = static_cast<long>(sig) - e;
  const QuadSurd u = v * QuadSurd(p10r(2 * k));  // (sqrt(v) 10^k)^2
  Int n = u.floor();
  mpz_sqrt(n.get_mpz_t(), n.get_mpz_t());  // floor(sqrt(v) 10^k)
  // Round half to even: the tie is at (n + 1/2)^2.
  const int c =
      u.cmp(QuadSurd(Rational(n * n) + Rational(n) + Rational(1, 4)));
  if (c > 0 || (c == 0 && mpz_odd_p(n.get_mpz_t()))) n += 1;
  long ee = e;
  if (n == pow10(sig)) {
    n = pow10(sig - 1);
    ee += 1;
  }
  std::string digits = n.get_str();
  std::string out;
  if (ee >= static_cast<long>(sig)) {
    out = digits + std::string(ee - sig, '0');
  } else if (ee >= 1) {
    std::string frac = digits.substr(ee);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = digits.substr(0, ee);
    if (!frac.empty()) out += "." + frac;
  } else {
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out = "0." + std::string(-ee, '0') + digits;
  }
  return out;
}

std::string draw_billiard(const Billiard& b, long segments,
                          const Scene& scene) {
  if (scene.x_max <= scene.x_min) return empty_doc(scene, "modular billiard");
  const FoldResult folded = fold(b, std::max(0L, segments));
  const Rational s = scene.scale();
  std::string out = svg_open(scene, "modular billiard");
  out += "<g id=\"domain\" fill=\"none\" stroke=\"#9a9a9a\" stroke-width=\"" +
         stroke_width(1, s) + "\">\n<path d=\"" + domain_path(scene.y_cap) +
         "\"/>\n</g>\n";
  out += "<g id=\"trajectory\" fill=\"none\" stroke=\"#1f6feb\" "
         "stroke-width=\"" +
         stroke_width(Rational(3, 2), s) + "\" stroke-linecap=\"round\">\n";
  for (const TrajectorySegment& seg : folded.segments)
    out += "<path d=\"" + segment_path(seg, scene.y_cap) + "\"/>\n";
  out += "</g>\n";
  out += kSvgClose;
  return out;
}

std::string draw_ford(const Scene& scene, const Rational& radius_scale,
                      long max_denominator) {
  if (radius_scale <= 0)
    throw PreconditionError("ford radius scale must be positive");
  if (scene.x_max <= scene.x_min) return empty_doc(scene, "ford circles");
  const Rational s = scene.scale();
  std::string out = svg_open(scene, "ford circles");
  out += axis_line(scene);
  out += "<g id=\"circles\" fill=\"#dbe9ff\" stroke=\"#1f6feb\" "
         "stroke-width=\"" +
         stroke_width(Rational(3, 4), s) + "\">\n";
  for (long q = 1; q <= max_denominator; ++q) {
    const Rational r = radius_scale / Rational(q * q);
    const Int p_lo = rceil(Rational(scene.x_min * q));
    const Int p_hi = rfloor(Rational(scene.x_max * q));
    for (Int p = p_lo; p <= p_hi; ++p) {
      Int g;
      mpz_gcd_ui(g.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(q));
      if (g != 1) continue;
      out += "<circle cx=\"" + dec(make_rational(p, Int(q))) + "\" cy=\"" +
             dec(r) + "\" r=\"" + dec(r) + "\"/>\n";
    }
  }
  out += "</g>\n";
  out += kSvgClose;
  return out;
}

DiskRadius DiskRadius::half_log(long m) {
  if (m < 2) throw PreconditionError("half_log radius needs m >= 2");
  return DiskRadius{QuadSurd(Int(0), Int(m + 1), Int(2 * m), Int(m)),
                    QuadSurd(Int(0), Int(m - 1), Int(2 * m), Int(m))};
}

DiskRadius DiskRadius::log_golden_ratio() {
  return DiskRadius{QuadSurd(Int(0), Int(1), Int(2), Int(5)),
                    QuadSurd(Rational(1, 2))};
}

OrbitSet orbit_points(const PointForm& zf, const DiskRadius& radius,
                      const Scene& scene) {
  const OrbitGeometry geom = orbit_geometry(zf, radius);
  OrbitSet out{geom.abs_disc, {}};
  if (scene.x_max <= scene.x_min) return out;
  const Rational s = scene.scale();

  // A disk is kept once its radius factor/(2a) covers a quarter pixel, that
  // is a <= 2 s radius_factor =: a_max.  The walk may not prune on disk
  // size alone.  Driving any kept form back to the reduced one by Gauss
  // reduction never raises a, each translation sweeps x monotonically
  // towards [-1/2, 1/2] through wall reflections that mirror x about 0 or
  // 1/2, and each inversion lands at |x| = |b|/(2c) <= sqrt(a).  So every
  // kept form is reachable inside {a <= a_max, |x| <= x_bound} with
  // x_bound = max(window, seed, sqrt(a_max)) + 3, the finite expansion
  // region used here; finiteness also terminates the walk.
  const BinaryForm seed = zf.form();
  Int a_bound = (QuadSurd(Rational(2 * s)) * geom.radius_factor).floor();
  const Int a_seed = coefficient_int(seed.a(), "a");
  const Int b_seed = coefficient_int(seed.b(), "b");
  if (a_seed > a_bound) a_bound = a_seed;
  Int slack;
  mpz_sqrt(slack.get_mpz_t(), a_bound.get_mpz_t());
  Rational x_bound = abs(Rational(slack));
  for (const Rational& cand :
       {abs(scene.x_min), abs(scene.x_max),
        abs(make_rational(b_seed, 2 * a_seed))})
    if (cand > x_bound) x_bound = cand;
  x_bound += 3;
  const GL2 gens[3] = {GL2::gen_A(), GL2::gen_B(), GL2::gen_C()};

  std::deque<BinaryForm> queue;
  std::set<std::string> seen;
  auto push = [&](const BinaryForm& f) {
    const std::string key = f.a().to_string() + ":" + f.b().to_string();
    if (seen.insert(key).second) queue.push_back(f);
  };
  push(seed);
  while (!queue.empty()) {
    const BinaryForm f = queue.front();
    queue.pop_front();
    const Int a = coefficient_int(f.a(), "a");
    const Int b = coefficient_int(f.b(), "b");
    if (a <= 0) throw PreconditionError("orbit point form must be definite");
    const Rational x = make_rational(-b, 2 * a);
    const Rational t = make_rational(Int(1), 2 * a);
    const QuadSurd r_eucl = geom.radius_factor * QuadSurd(t);
    const QuadSurd c_eucl = geom.center_factor * QuadSurd(t);
    const bool visible = a <= a_bound &&
                         QuadSurd(Rational(scene.x_min)) <= QuadSurd(x) + r_eucl &&
                         QuadSurd(x) - r_eucl <= QuadSurd(Rational(scene.x_max)) &&
                         c_eucl - r_eucl <= QuadSurd(Rational(scene.y_cap));
    if (visible) out.points.push_back(OrbitPoint{x, t});
    if (a > a_bound || abs(x) > x_bound) continue;
    for (const GL2& gen : gens) push(act(f, gen));
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const OrbitPoint& p, const OrbitPoint& q) {
              if (p.t != q.t) return p.t > q.t;
              return p.x < q.x;
            });
  return out;
}

std::string draw_orbit_disks(const PointForm& zf, const DiskRadius& radius,
                             const Scene& scene) {
  const std::string title = zf.name() + " orbit disks";
  if (scene.x_max <= scene.x_min) return empty_doc(scene, title);
  const OrbitGeometry geom = orbit_geometry(zf, radius);
  const OrbitSet orbit = orbit_points(zf, radius, scene);
  const Rational s = scene.scale();
  std::string out = svg_open(scene, title);
  out += axis_line(scene);
  out += "<g id=\"disks\" fill=\"#dbe9ff\" stroke=\"#1f6feb\" "
         "stroke-width=\"" +
         stroke_width(Rational(3, 4), s) + "\">\n";
  for (const OrbitPoint& p : orbit.points) {
    const QuadSurd t{Rational(p.t)};
    out += "<circle cx=\"" + dec(p.x) + "\" cy=\"" +
           dec(geom.center_factor * t) + "\" r=\"" +
           dec(geom.radius_factor * t) + "\"/>\n";
  }
  out += "</g>\n";
  out += kSvgClose;
  return out;
}

std::vector<Rational> nearest_pair_cosh(const PointForm& zf,
                                        const DiskRadius& radius,
                                        const Scene& scene, long count) {
  const OrbitSet orbit = orbit_points(zf, radius, scene);
  const std::size_t n = orbit.points.size();
  std::vector<Rational> values;
  if (count < 1 || n < 2) return values;

  // Doubles preselect candidate pairs; membership below the threshold is
  // then settled exactly, so the result never depends on rounding.
  std::vector<double> xd(n), td(n);
  for (std::size_t i = 0; i < n; ++i) {
    xd[i] = orbit.points[i].x.get_d();
    td[i] = orbit.points[i].t.get_d();
  }
  const double dd = orbit.abs_disc.get_d();
  const Rational big = orbit.abs_disc;
  for (Rational threshold(5, 2);; threshold *= 2) {
    const double loose = threshold.get_d() + 1e-6;
    values.clear();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double dx = xd[i] - xd[j];
        const double dt = td[i] - td[j];
        const double ch = 1 + (dx * dx + dd * dt * dt) / (2 * dd * td[i] * td[j]);
        if (ch > loose) continue;
        const Rational ex = orbit.points[i].x - orbit.points[j].x;
        const Rational et = orbit.points[i].t - orbit.points[j].t;
        const Rational exact =
            1 + (ex * ex + big * et * et) /
                    (2 * big * orbit.points[i].t * orbit.points[j].t);
        if (exact <= threshold) values.push_back(exact);
      }
    }
    if (values.size() >= static_cast<std::size_t>(count) ||
        threshold > 1000000) {
      std::sort(values.begin(), values.end());
      if (values.size() > static_cast<std::size_t>(count))
        values.resize(static_cast<std::size_t>(count));
      return values;
    }
  }
}

}  // namespace mbs
