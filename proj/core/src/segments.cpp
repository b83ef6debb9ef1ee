#include "cgeom/segments.hpp"

namespace cgeom {

// Classic closest-approach parametrisation clamped to both segments.
double segment_segment_dist_sq_f(const Pt<double>& p1, const Pt<double>& q1, const Pt<double>& p2,
                                 const Pt<double>& q2) {
  Pt<double> d1 = sub(q1, p1);
  Pt<double> d2 = sub(q2, p2);
  Pt<double> r = sub(p1, p2);
  double a = dot(d1, d1);
  double e = dot(d2, d2);
  double f = dot(d2, r);
  double s = 0.0, t = 0.0;
  constexpr double kEps = 1e-30;
  if (a <= kEps && e <= kEps) {
    // Both segments degenerate to points.
  } else if (a <= kEps) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    double c = dot(d1, r);
    if (e <= kEps) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      double b = dot(d1, d2);
      double denom = a * e - b * b;
      if (denom > kEps) s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    double d = (p1[i] + s * d1[i]) - (p2[i] + t * d2[i]);
    acc += d * d;
  }
  return acc;
}

}  // namespace cgeom
