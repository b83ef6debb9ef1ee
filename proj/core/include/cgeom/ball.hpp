#pragma once

// Balls induced by the reciprocal map: the ball of a generator x is the
// diameter ball of the segment [x, image(x)] — center (x + image)/2, squared
// radius gap_sq/4. Membership, nesting and disjointness are decided in the
// tuple's scalar type; on rationals every comparison here is exact (nesting and
// disjointness use the square-free case split rather than square roots).

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cgeom/rng.hpp"
#include "cgeom/stats.hpp"

namespace cgeom {

template <class S>
struct Ball {
  Tuple<S> generator;  // pre-image metadata; center of a translated ball moves away from it
  Scale m;
  Pt<S> center;
  S radius_sq;
};

template <class S>
Ball<S> ball_of(const Tuple<S>& x, Scale m) {
  Tuple<S> img = compress(x, m);
  Pt<S> c;
  c.reserve(x.dim());
  const S half = scalar_from_long<S>(1) / scalar_from_long<S>(2);
  for (std::size_t i = 0; i < x.dim(); ++i) c.push_back((x[i] + img[i]) * half);
  S r = gap_sq(x, m) / scalar_from_long<S>(4);
  return Ball<S>{x, m, std::move(c), std::move(r)};
}

// Closed-ball membership.
template <class S>
bool contains(const Ball<S>& b, const Pt<S>& z) {
  return norm_sq(sub(z, b.center)) <= b.radius_sq;
}

// sqrt(a) + sqrt(b) <= sqrt(c) for nonnegative scalars, without square roots.
template <class S>
bool sqrt_sum_leq(const S& a, const S& b, const S& c) {
  S slack = c - a - b;
  if (sign_of(slack) < 0) return false;
  return scalar_from_long<S>(4) * a * b <= slack * slack;
}

// Strict variant: sqrt(a) + sqrt(b) < sqrt(c).
template <class S>
bool sqrt_sum_lt(const S& a, const S& b, const S& c) {
  S slack = c - a - b;
  if (!(sign_of(slack) > 0)) return false;
  return scalar_from_long<S>(4) * a * b < slack * slack;
}

// Inner ball contained in outer ball: ||c_in - c_out|| + r_in <= r_out.
template <class S>
bool nested(const Ball<S>& inner, const Ball<S>& outer) {
  S d = norm_sq(sub(inner.center, outer.center));
  return sqrt_sum_leq(d, inner.radius_sq, outer.radius_sq);
}

// No common point (closed balls): ||c1 - c2|| > r1 + r2.
template <class S>
bool disjoint(const Ball<S>& b1, const Ball<S>& b2) {
  S d = norm_sq(sub(b1.center, b2.center));
  return sqrt_sum_lt(b1.radius_sq, b2.radius_sq, d);
}

// Membership of z in the ball of y, decided two ways: the direct metric test
// and the gap comparison gap_sq(z) <= gap_sq(y). The two can disagree (equal
// norms with different gaps are the classic tie family), so both verdicts are
// reported.
struct MembershipVerdict {
  bool direct = false;
  bool criterion = false;
  bool agree = false;
};

template <class S>
MembershipVerdict gap_criterion(const Tuple<S>& z, const Tuple<S>& y, Scale m) {
  MembershipVerdict v;
  v.criterion = gap_sq(z, m) <= gap_sq(y, m);
  v.direct = contains(ball_of(y, m), z.coords());
  v.agree = v.criterion == v.direct;
  return v;
}

// Ball induced by the scaled generator t*x; t > 0.
template <class S>
Ball<S> dilate(const Ball<S>& b, const S& t) {
  if (!(sign_of(t) > 0)) throw std::domain_error("dilation factor must be positive");
  Pt<S> g = scaled(b.generator.coords(), t);
  return ball_of(Tuple<S>(std::move(g)), b.m);
}

// Rigid translation: center moves, radius unchanged, generator kept as the
// pre-image metadata of the original ball.
template <class S>
Ball<S> translate(const Ball<S>& b, const Pt<S>& v) {
  return Ball<S>{b.generator, b.m, add(b.center, v), b.radius_sq};
}

// Exactly on the boundary sphere (rationals); relative 1e-12 on floats.
template <class S>
bool is_admissible(const Ball<S>& b, const Pt<S>& y) {
  S d = norm_sq(sub(y, b.center));
  if constexpr (is_exact_scalar<S>) {
    return d == b.radius_sq;
  } else {
    double dd = d, rr = b.radius_sq;
    double scale = std::max(std::abs(dd), std::abs(rr));
    return std::abs(dd - rr) <= 1e-12 * std::max(scale, 1.0);
  }
}

// k deterministic points on the boundary sphere (float coordinates). A
// zero-radius ball yields just the center.
template <class S>
std::vector<Pt<double>> sample_admissible(const Ball<S>& b, int k, std::uint64_t seed) {
  if (k < 1) throw std::domain_error("sample count must be >= 1");
  const std::size_t n = b.center.size();
  Pt<double> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = to_double(b.center[i]);
  const double r = std::sqrt(to_double(b.radius_sq));
  std::vector<Pt<double>> out;
  if (r == 0.0) {
    out.push_back(c);
    return out;
  }
  Rng rng(seed);
  out.reserve(static_cast<std::size_t>(k));
  while (out.size() < static_cast<std::size_t>(k)) {
    Pt<double> dir(n);
    double len2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      dir[i] = 2.0 * rng.unit() - 1.0;
      len2 += dir[i] * dir[i];
    }
    if (len2 > 1.0 || len2 < 1e-12) continue;  // uniform direction via ball rejection
    const double inv = r / std::sqrt(len2);
    Pt<double> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = c[i] + dir[i] * inv;
    out.push_back(std::move(p));
  }
  return out;
}

// If x is exactly a scalar multiple t*y, returns t; otherwise absent ("free").
// Requires y to lie in the ball of x.
template <class S>
std::optional<S> order_of(const Tuple<S>& y, const Tuple<S>& x, Scale m) {
  if (y.dim() != x.dim()) throw std::domain_error("dimension mismatch");
  if (!contains(ball_of(x, m), y.coords()))
    throw std::domain_error("order is defined only for points of the ball");
  S t = x[0] / y[0];
  for (std::size_t i = 1; i < x.dim(); ++i)
    if (!(x[i] == t * y[i])) return std::nullopt;
  return t;
}

// --- descending chains -------------------------------------------------------

template <class S>
using DescentPicker = std::function<std::optional<Tuple<S>>(const Ball<S>&)>;

// Chain of balls from repeatedly picking a contained point of strictly smaller
// gap. The picker signals termination by returning nothing; a picker that
// returns a point that is outside the current ball or fails the strict descent
// contract triggers an invalid_argument.
template <class S>
std::vector<Ball<S>> descend_to_limit(const Ball<S>& start, const DescentPicker<S>& picker,
                                      int max_steps = 1024) {
  std::vector<Ball<S>> chain;
  chain.push_back(start);
  for (int step = 0; step < max_steps; ++step) {
    const Ball<S>& cur = chain.back();
    if (sign_of(gap_sq(cur.generator, cur.m)) == 0) break;  // point ball: the limit
    std::optional<Tuple<S>> next = picker(cur);
    if (!next) break;
    if (!contains(cur, next->coords()))
      throw std::invalid_argument("descent picker left the current ball");
    if (!(gap_sq(*next, cur.m) < gap_sq(cur.generator, cur.m)))
      throw std::invalid_argument("descent picker did not strictly decrease the gap");
    chain.push_back(ball_of(*next, cur.m));
  }
  return chain;
}

// Integer coordinate descent: decrement the largest coordinate above 1. On
// positive-integer generators at scale 1 this walks the chain all the way down
// to the all-ones point ball.
std::optional<RatTuple> integer_descent_pick(const Ball<Rat>& b);

inline DescentPicker<Rat> integer_descent_picker() {
  return [](const Ball<Rat>& b) { return integer_descent_pick(b); };
}

// Halve the distance to the all-ones point: z = (x + 1)/2. Strictly decreases
// the gap for generators with all coordinates > 1 at scale 1.
std::optional<RatTuple> midpoint_descent_pick(const Ball<Rat>& b);

inline DescentPicker<Rat> midpoint_descent_picker() {
  return [](const Ball<Rat>& b) { return midpoint_descent_pick(b); };
}

// --- pairwise overlap audit --------------------------------------------------

enum class OverlapClass { Nested, Disjoint, Partial };

struct OverlapPair {
  std::size_t i = 0, j = 0;
  OverlapClass cls = OverlapClass::Partial;
  bool equal_norm_sq = false;  // marks the tie family ||x_i|| == ||x_j||
};

struct OverlapReport {
  std::vector<OverlapPair> pairs;
  std::vector<std::pair<std::size_t, std::size_t>> skipped_identical;
  long nested = 0, disjoint = 0, partial = 0;
};

template <class S>
OverlapReport overlap_audit(const std::vector<Tuple<S>>& xs, Scale m) {
  OverlapReport rep;
  std::vector<Ball<S>> balls;
  balls.reserve(xs.size());
  for (const auto& x : xs) balls.push_back(ball_of(x, m));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (xs[i] == xs[j]) {
        rep.skipped_identical.emplace_back(i, j);
        continue;
      }
      OverlapPair p;
      p.i = i;
      p.j = j;
      p.equal_norm_sq = norm_sq(xs[i].coords()) == norm_sq(xs[j].coords());
      const S d = norm_sq(sub(balls[i].center, balls[j].center));
      if (sqrt_sum_leq(d, balls[i].radius_sq, balls[j].radius_sq) ||
          sqrt_sum_leq(d, balls[j].radius_sq, balls[i].radius_sq)) {
        p.cls = OverlapClass::Nested;
        ++rep.nested;
      } else if (sqrt_sum_lt(balls[i].radius_sq, balls[j].radius_sq, d)) {
        p.cls = OverlapClass::Disjoint;
        ++rep.disjoint;
      } else {
        p.cls = OverlapClass::Partial;
        ++rep.partial;
      }
      rep.pairs.push_back(p);
    }
  }
  return rep;
}

}  // namespace cgeom
