#include "doctest.h"

#include "cgeom/lines.hpp"
#include "cgeom/segments.hpp"
#include "cgeom/walk.hpp"

using namespace cgeom;

namespace {

RatTuple rt(std::initializer_list<long> v) {
  Pt<Rat> p;
  for (long x : v) p.emplace_back(x);
  return RatTuple(p);
}

Pt<Rat> rp(std::initializer_list<long> v) {
  Pt<Rat> p;
  for (long x : v) p.emplace_back(x);
  return p;
}

}  // namespace

TEST_CASE("line_of oracle values") {
  CompressionLine<Rat> l = line_of(rt({2, 3}), Scale(1));
  CHECK(l.anchor == rp({2, 3}));
  CHECK(l.image[0] == make_rat(1, 2));
  CHECK(l.image[1] == make_rat(1, 3));
  CHECK(l.direction[0] == make_rat(3, 2));   // 2 - 1/2
  CHECK(l.direction[1] == make_rat(8, 3));   // 3 - 1/3

  CompressionLine<Rat> l2 = line_of(rt({4, 9}), Scale(1));
  CHECK(l2.direction[0] == make_rat(15, 4));
  CHECK(l2.direction[1] == make_rat(80, 9));

  // Fixed points have no line.
  CHECK_THROWS(line_of(RatTuple(Pt<Rat>{Rat(1), Rat(1)}), Scale(1)));
}

TEST_CASE("on_line and the image membership check") {
  CompressionLine<Rat> l = line_of(rt({2, 3}), Scale(1));
  CHECK(on_line(l, l.anchor));
  CHECK(on_line(l, l.image));
  Pt<Rat> mid;
  for (std::size_t i = 0; i < 2; ++i) mid.push_back(l.anchor[i] + make_rat(7, 13) * l.direction[i]);
  CHECK(on_line(l, mid));
  CHECK_FALSE(on_line(l, rp({0, 5})));
  CHECK(image_on_line_check(l, rt({2, 3})));
}

TEST_CASE("lines relations") {
  CompressionLine<Rat> l = line_of(rt({2, 3}), Scale(1));
  // The image generator spans the same line (direction flips sign).
  CompressionLine<Rat> li = line_of(compress(rt({2, 3}), Scale(1)), Scale(1));
  CHECK(lines_relation(l, li) == LineRelation::Identical);
  // Distinct generators in the plane generally intersect.
  CompressionLine<Rat> l2 = line_of(rt({4, 9}), Scale(1));
  CHECK(lines_relation(l, l2) == LineRelation::Intersecting);
  // A parallel translate is parallel, not identical.
  CompressionLine<Rat> lp = l;
  lp.anchor[0] += 1;
  lp.image[0] += 1;
  CHECK(lines_relation(l, lp) == LineRelation::Parallel);
  // Skew pair in three dimensions; only anchor and direction matter here.
  CompressionLine<Rat> a{rt({2, 3, 4}), Scale(1), rp({0, 0, 0}), rp({-1, 0, 0}), rp({1, 0, 0})};
  CompressionLine<Rat> b{rt({2, 3, 4}), Scale(1), rp({0, 1, 1}), rp({0, 0, 1}), rp({0, 1, 0})};
  CHECK(lines_relation(a, b) == LineRelation::Disjoint);
}

TEST_CASE("needle oracle value and bijectivity") {
  Pt<Rat> out = needle(rt({2, 3}), Scale(1), rp({1, 1}));
  CHECK(out[0] == make_rat(3, 2));
  CHECK(out[1] == make_rat(4, 3));
  // Zero translation returns the image.
  Pt<Rat> img = needle(rt({2, 3}), Scale(1), rp({0, 0}));
  CHECK(img[0] == make_rat(1, 2));
  CHECK(img[1] == make_rat(1, 3));
  // Invert: subtract the translation, compress again.
  Pt<Rat> back = out;
  back[0] -= 1;
  back[1] -= 1;
  CHECK(compress(RatTuple(back), Scale(1)) == rt({2, 3}));
}

TEST_CASE("point-line distance") {
  CompressionLine<Rat> l = line_of(rt({2, 3}), Scale(1));
  CHECK(point_line_dist_sq(l.anchor, l) == doctest::Approx(0.0));
  // Distance from the origin: |cross(anchor, dir)|^2 / |dir|^2 in the plane.
  double cross = to_double(l.anchor[0] * l.direction[1] - l.anchor[1] * l.direction[0]);
  double dn = to_double(l.direction[0] * l.direction[0] + l.direction[1] * l.direction[1]);
  CHECK(point_line_dist_sq(rp({0, 0}), l) == doctest::Approx(cross * cross / dn).epsilon(1e-12));
}

TEST_CASE("planar orientation and segment intersection predicates") {
  Pt<Rat> a = rp({0, 0}), b = rp({4, 0}), c = rp({0, 4}), d = rp({4, 4});
  CHECK(orient2d(a, b, c) > 0);
  CHECK(orient2d(a, c, b) < 0);
  CHECK(orient2d(a, b, rp({2, 0})) == 0);

  CHECK(segments_intersect_2d(a, d, b, c));        // proper crossing
  CHECK_FALSE(segments_intersect_2d(a, b, c, d));  // parallel horizontals
  CHECK(segments_intersect_2d(a, b, rp({2, 0}), rp({2, 4})));   // T-touch
  CHECK(segments_intersect_2d(a, b, rp({3, 0}), rp({9, 0})));   // collinear overlap
  CHECK_FALSE(segments_intersect_2d(a, b, rp({5, 0}), rp({9, 0})));  // collinear gap
}

TEST_CASE("adjacent fold-back detection") {
  Pt<Rat> a = rp({0, 0}), b = rp({4, 0});
  CHECK(adjacent_fold_back_2d(a, b, rp({2, 0})));     // returns into [a,b]
  CHECK(adjacent_fold_back_2d(a, b, rp({-1, 0})));    // swallows [a,b]
  CHECK_FALSE(adjacent_fold_back_2d(a, b, rp({5, 0})));   // extends past b
  CHECK_FALSE(adjacent_fold_back_2d(a, b, rp({4, 3})));   // turns away
}

TEST_CASE("exact point-segment distance in any dimension") {
  Pt<Rat> a = rp({0, 0, 0}), b = rp({2, 0, 0});
  CHECK(point_segment_dist_sq(rp({1, 1, 1}), a, b) == Rat(2));    // foot at (1,0,0)
  CHECK(point_segment_dist_sq(rp({-1, 0, 0}), a, b) == Rat(1));   // clamps to a
  CHECK(point_segment_dist_sq(rp({3, 0, 4}), a, b) == Rat(17));   // clamps to b
  CHECK(point_segment_dist_sq(rp({1, 0, 0}), a, b) == Rat(0));    // on the segment
  // Degenerate segment behaves as a point.
  CHECK(point_segment_dist_sq(rp({1, 1, 0}), a, a) == Rat(2));
}

TEST_CASE("exact segment-segment distance in any dimension") {
  // Classic skew pair: x-axis segment vs a y-parallel segment at height one.
  CHECK(segment_segment_dist_sq(rp({0, 0, 0}), rp({1, 0, 0}), rp({0, -1, 1}), rp({0, 1, 1})) ==
        Rat(1));
  // Parallel offset pair in three dimensions.
  CHECK(segment_segment_dist_sq(rp({0, 0, 0}), rp({1, 0, 0}), rp({0, 1, 1}), rp({1, 1, 1})) ==
        Rat(2));
  // Crossing pair has distance zero.
  CHECK(segment_segment_dist_sq(rp({0, 0}), rp({4, 4}), rp({0, 4}), rp({4, 0})) == Rat(0));
  // Clamped endpoint-to-endpoint case.
  CHECK(segment_segment_dist_sq(rp({0, 0}), rp({1, 0}), rp({3, 1}), rp({4, 1})) == Rat(5));
  // Parallel offset.
  CHECK(segment_segment_dist_sq(rp({0, 0}), rp({4, 0}), rp({0, 3}), rp({4, 3})) == Rat(9));
  // Exact contact at interior/skew closest approach.
  CHECK(segments_intersect_nd(rp({0, 0, 0}), rp({2, 2, 2}), rp({2, 0, 0}), rp({0, 2, 2})));
  CHECK_FALSE(segments_intersect_nd(rp({0, 0, 0}), rp({1, 0, 0}), rp({0, 1, 1}), rp({1, 1, 1})));
  CHECK(adjacent_fold_back_nd(rp({0, 0, 0}), rp({4, 0, 0}), rp({2, 0, 0})));
  CHECK_FALSE(adjacent_fold_back_nd(rp({0, 0, 0}), rp({4, 0, 0}), rp({5, 1, 0})));
}

TEST_CASE("manual walks through the self-avoidance oracle") {
  // Staircase: three segments, no revisits.
  Walk<Rat> stair;
  stair.m = Scale(1);
  stair.vertices = {rp({0, 0}), rp({1, 0}), rp({1, 1}), rp({2, 1})};
  stair.segments = {{0, 1}, {1, 2}, {2, 3}};
  stair.step_kinds = {StepKind::Compression, StepKind::Translation, StepKind::Compression};
  CHECK(is_self_avoiding(stair));

  // Figure X: the two diagonals cross.
  Walk<Rat> cross;
  cross.m = Scale(1);
  cross.vertices = {rp({0, 0}), rp({4, 4}), rp({4, 0}), rp({0, 4})};
  cross.segments = {{0, 1}, {1, 2}, {2, 3}};
  cross.step_kinds = {StepKind::Compression, StepKind::Translation, StepKind::Compression};
  CHECK_FALSE(is_self_avoiding(cross));

  // Fold-back onto the previous segment.
  Walk<Rat> fold;
  fold.m = Scale(1);
  fold.vertices = {rp({0, 0}), rp({4, 0}), rp({2, 0})};
  fold.segments = {{0, 1}, {1, 2}};
  fold.step_kinds = {StepKind::Compression, StepKind::Translation};
  CHECK_FALSE(is_self_avoiding(fold));

  // Zero-length segment is degenerate, not self-avoiding.
  Walk<Rat> zero;
  zero.m = Scale(1);
  zero.vertices = {rp({0, 0}), rp({4, 0}), rp({4, 0})};
  zero.segments = {{0, 1}, {1, 2}};
  zero.step_kinds = {StepKind::Compression, StepKind::Translation};
  CHECK_FALSE(is_self_avoiding(zero));

  // A 3D staircase goes through the exact distance path.
  Walk<Rat> stair3;
  stair3.m = Scale(1);
  stair3.vertices = {rp({0, 0, 0}), rp({1, 0, 0}), rp({1, 1, 0}), rp({1, 1, 1})};
  stair3.segments = {{0, 1}, {1, 2}, {2, 3}};
  stair3.step_kinds = {StepKind::Compression, StepKind::Translation, StepKind::Compression};
  CHECK(is_self_avoiding(stair3));
}
