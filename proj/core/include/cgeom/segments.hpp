#pragma once

// Segment-level predicates for self-avoidance checks. On rational coordinates
// the tests are exact in any dimension (orientation-based in the plane,
// closest-approach distances otherwise); floats use tolerance comparisons.

#include <algorithm>
#include <cmath>

#include "cgeom/tuple.hpp"

namespace cgeom {

// Sign of the z-component of (b-a) x (c-a); 0 means collinear (within tol on
// floats, exact on rationals).
template <class S>
int orient2d(const Pt<S>& a, const Pt<S>& b, const Pt<S>& c, double tol = 1e-9) {
  S cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  if constexpr (is_exact_scalar<S>) {
    (void)tol;
    return sign_of(cross);
  } else {
    double scale = std::abs((b[0] - a[0]) * (c[1] - a[1])) +
                   std::abs((b[1] - a[1]) * (c[0] - a[0]));
    if (std::abs(cross) <= tol * std::max(scale, 1.0)) return 0;
    return cross > 0 ? 1 : -1;
  }
}

// For p collinear with [a, b]: is p inside the closed segment box?
template <class S>
bool in_segment_box(const Pt<S>& p, const Pt<S>& a, const Pt<S>& b) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const S& lo = a[i] < b[i] ? a[i] : b[i];
    const S& hi = a[i] < b[i] ? b[i] : a[i];
    if (p[i] < lo || p[i] > hi) return false;
  }
  return true;
}

// Closed-segment intersection in the plane (proper crossings and touches).
template <class S>
bool segments_intersect_2d(const Pt<S>& p1, const Pt<S>& q1, const Pt<S>& p2, const Pt<S>& q2,
                           double tol = 1e-9) {
  int d1 = orient2d(p2, q2, p1, tol);
  int d2 = orient2d(p2, q2, q1, tol);
  int d3 = orient2d(p1, q1, p2, tol);
  int d4 = orient2d(p1, q1, q2, tol);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && in_segment_box(p1, p2, q2)) return true;
  if (d2 == 0 && in_segment_box(q1, p2, q2)) return true;
  if (d3 == 0 && in_segment_box(p2, p1, q1)) return true;
  if (d4 == 0 && in_segment_box(q2, p1, q1)) return true;
  return false;
}

// Consecutive segments [a,b] and [b,c] fold back over each other (they share b
// legitimately; any further common point is an overlap).
template <class S>
bool adjacent_fold_back_2d(const Pt<S>& a, const Pt<S>& b, const Pt<S>& c, double tol = 1e-9) {
  if (orient2d(a, b, c, tol) != 0) return false;
  return in_segment_box(c, a, b) || in_segment_box(a, b, c);
}

// --- exact distances for dimension > 2 ---------------------------------------

// Squared distance from p to the closed segment [a, b], exact on rationals.
template <class S>
S point_segment_dist_sq(const Pt<S>& p, const Pt<S>& a, const Pt<S>& b) {
  Pt<S> ab = sub(b, a), ap = sub(p, a);
  S den = dot(ab, ab);
  S num = dot(ap, ab);
  if (!(den > S(0)) || !(num > S(0))) return norm_sq(ap);
  if (!(num < den)) return norm_sq(sub(p, b));
  S t = num / den;
  Pt<S> foot = add(a, scaled(ab, t));
  return norm_sq(sub(p, foot));
}

// Squared distance between closed segments [p1,q1] and [p2,q2]. The minimum of
// the convex quadratic over the parameter box lies at the interior critical
// point or on an edge; all five candidates are rational expressions.
template <class S>
S segment_segment_dist_sq(const Pt<S>& p1, const Pt<S>& q1, const Pt<S>& p2, const Pt<S>& q2) {
  S best = point_segment_dist_sq(p1, p2, q2);
  auto keep = [&best](S v) {
    if (v < best) best = v;
  };
  keep(point_segment_dist_sq(q1, p2, q2));
  keep(point_segment_dist_sq(p2, p1, q1));
  keep(point_segment_dist_sq(q2, p1, q1));
  Pt<S> d1 = sub(q1, p1), d2 = sub(q2, p2), r = sub(p1, p2);
  S a = dot(d1, d1), e = dot(d2, d2), b = dot(d1, d2);
  S c = dot(d1, r), f = dot(d2, r);
  S denom = a * e - b * b;
  if (denom > S(0)) {
    S s = (b * f - c * e) / denom;
    S t = (a * f - b * c) / denom;
    if (!(s < S(0)) && !(s > S(1)) && !(t < S(0)) && !(t > S(1))) {
      Pt<S> diff = add(r, sub(scaled(d1, s), scaled(d2, t)));
      keep(norm_sq(diff));
    }
  }
  return best;
}

// --- float fallbacks ---------------------------------------------------------

inline double point_segment_dist_sq_f(const Pt<double>& p, const Pt<double>& a,
                                      const Pt<double>& b) {
  Pt<double> ab = sub(b, a), ap = sub(p, a);
  double denom = dot(ab, ab);
  double t = denom > 0.0 ? dot(ap, ab) / denom : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double d = p[i] - (a[i] + t * ab[i]);
    acc += d * d;
  }
  return acc;
}

// Minimal distance between two closed segments (double coordinates).
double segment_segment_dist_sq_f(const Pt<double>& p1, const Pt<double>& q1, const Pt<double>& p2,
                                 const Pt<double>& q2);

template <class S>
Pt<double> to_float_pt(const Pt<S>& p) {
  Pt<double> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = to_double(p[i]);
  return out;
}

template <class S>
bool segments_intersect_nd(const Pt<S>& p1, const Pt<S>& q1, const Pt<S>& p2, const Pt<S>& q2,
                           double tol = 1e-9) {
  if constexpr (is_exact_scalar<S>) {
    (void)tol;
    return sign_of(segment_segment_dist_sq(p1, q1, p2, q2)) == 0;
  } else {
    double d2 = segment_segment_dist_sq_f(to_float_pt(p1), to_float_pt(q1), to_float_pt(p2),
                                          to_float_pt(q2));
    return d2 <= tol * tol;
  }
}

template <class S>
bool adjacent_fold_back_nd(const Pt<S>& a, const Pt<S>& b, const Pt<S>& c, double tol = 1e-9) {
  if constexpr (is_exact_scalar<S>) {
    (void)tol;
    return sign_of(point_segment_dist_sq(c, a, b)) == 0 ||
           sign_of(point_segment_dist_sq(a, b, c)) == 0;
  } else {
    Pt<double> af = to_float_pt(a), bf = to_float_pt(b), cf = to_float_pt(c);
    return point_segment_dist_sq_f(cf, af, bf) <= tol * tol ||
           point_segment_dist_sq_f(af, bf, cf) <= tol * tol;
  }
}

}  // namespace cgeom
