#pragma once

// Lines spanned by a generator and its image: anchor x, direction x - image(x).
// Collinearity and line relations are decided exactly on rationals (vanishing
// 2x2 minors) and with a relative tolerance on floats.

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "cgeom/stats.hpp"

namespace cgeom {

template <class S>
struct CompressionLine {
  Tuple<S> generator;
  Scale m;
  Pt<S> anchor;     // the generator itself
  Pt<S> image;      // componentwise m / generator
  Pt<S> direction;  // anchor - image, never the zero vector
};

template <class S>
CompressionLine<S> line_of(const Tuple<S>& x, Scale m) {
  Tuple<S> img = compress(x, m);
  Pt<S> dir = sub(x.coords(), img.coords());
  if (is_zero(dir))
    throw std::domain_error("degenerate line: tuple equals its image");
  return CompressionLine<S>{x, m, x.coords(), img.coords(), std::move(dir)};
}

namespace detail {

// All 2x2 minors of [u; v] vanish  <=>  u and v are parallel.
template <class S>
bool parallel_vectors(const Pt<S>& u, const Pt<S>& v, double tol) {
  if constexpr (is_exact_scalar<S>) {
    (void)tol;
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = i + 1; j < u.size(); ++j)
        if (!(u[i] * v[j] - u[j] * v[i] == 0)) return false;
    return true;
  } else {
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = i + 1; j < u.size(); ++j) {
        double minor = u[i] * v[j] - u[j] * v[i];
        double scale = std::abs(u[i] * v[j]) + std::abs(u[j] * v[i]);
        if (std::abs(minor) > tol * std::max(scale, 1.0)) return false;
      }
    return true;
  }
}

}  // namespace detail

template <class S>
bool on_line(const CompressionLine<S>& l, const Pt<S>& p, double tol = 1e-9) {
  return detail::parallel_vectors(sub(p, l.anchor), l.direction, tol);
}

// The implication "p on the line => image(p) on the line", evaluated as a
// single verdict (vacuously true when p is off the line).
template <class S>
bool image_on_line_check(const CompressionLine<S>& l, const Tuple<S>& p, double tol = 1e-9) {
  if (!on_line(l, p.coords(), tol)) return true;
  return on_line(l, compress(p, l.m).coords(), tol);
}

enum class LineRelation { Identical, Parallel, Intersecting, Disjoint };

template <class S>
LineRelation lines_relation(const CompressionLine<S>& l1, const CompressionLine<S>& l2,
                            double tol = 1e-9) {
  if (l1.anchor.size() != l2.anchor.size()) throw std::domain_error("dimension mismatch");
  if (detail::parallel_vectors(l1.direction, l2.direction, tol))
    return on_line(l1, l2.anchor, tol) ? LineRelation::Identical : LineRelation::Parallel;

  // Solve anchor1 + a*d1 = anchor2 + b*d2 on a row pair with invertible minor,
  // then verify the remaining coordinates.
  const Pt<S>& d1 = l1.direction;
  const Pt<S>& d2 = l2.direction;
  Pt<S> w = sub(l2.anchor, l1.anchor);
  const std::size_t n = d1.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      S det = d1[i] * (-d2[j]) - d1[j] * (-d2[i]);
      bool invertible;
      if constexpr (is_exact_scalar<S>) {
        invertible = !(det == 0);
      } else {
        invertible = std::abs(det) > tol * std::max(std::abs(d1[i] * d2[j]) +
                                                        std::abs(d1[j] * d2[i]),
                                                    1.0);
      }
      if (!invertible) continue;
      S a = (w[i] * (-d2[j]) - w[j] * (-d2[i])) / det;
      S b = (d1[i] * w[j] - d1[j] * w[i]) / det;
      for (std::size_t k = 0; k < n; ++k) {
        S lhs = l1.anchor[k] + a * d1[k];
        S rhs = l2.anchor[k] + b * d2[k];
        if constexpr (is_exact_scalar<S>) {
          if (!(lhs == rhs)) return LineRelation::Disjoint;
        } else {
          double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
          if (std::abs(lhs - rhs) > tol * scale) return LineRelation::Disjoint;
        }
      }
      return LineRelation::Intersecting;
    }
  }
  // Unreachable for non-parallel directions (some minor is invertible).
  return LineRelation::Disjoint;
}

// The translated image: image(x) + a.
template <class S>
Pt<S> needle(const Tuple<S>& x, Scale m, const Pt<S>& a) {
  return add(compress(x, m).coords(), a);
}

// Squared distance from a point to an (infinite) line, as a float.
template <class S>
double point_line_dist_sq(const Pt<S>& p, const CompressionLine<S>& l) {
  Pt<double> v(p.size()), d(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    v[i] = to_double(p[i]) - to_double(l.anchor[i]);
    d[i] = to_double(l.direction[i]);
  }
  double vv = dot(v, v), vd = dot(v, d), dd = dot(d, d);
  double out = vv - vd * vd / dd;
  return out > 0.0 ? out : 0.0;
}

}  // namespace cgeom
