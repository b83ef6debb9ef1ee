#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "cgeom/experiments.hpp"
#include "cgeom/stats.hpp"

using namespace cgeom;

TEST_CASE("unit fraction triples for small n") {
  auto s3 = erdos_straus_solve(3, 10000);
  REQUIRE(s3.has_value());
  CHECK(s3->denominators == std::array<long, 3>{1, 4, 12});
  CHECK(s3->exact_sum == make_rat(4, 3));

  auto s4 = erdos_straus_solve(4, 10000);
  REQUIRE(s4.has_value());
  CHECK(s4->denominators == std::array<long, 3>{2, 3, 6});
  CHECK(s4->exact_sum == Rat(1));

  auto s5 = erdos_straus_solve(5, 10000);
  REQUIRE(s5.has_value());
  CHECK(s5->denominators == std::array<long, 3>{2, 4, 20});
  CHECK(s5->exact_sum == make_rat(4, 5));

  auto s7 = erdos_straus_solve(7, 10000);
  REQUIRE(s7.has_value());
  CHECK(s7->denominators == std::array<long, 3>{2, 15, 210});
  CHECK(s7->exact_sum == make_rat(4, 7));

  // A bound of one leaves no room for the two capped denominators.
  CHECK_FALSE(erdos_straus_solve(4, 1).has_value());
  CHECK_THROWS_AS(erdos_straus_solve(2, 100), std::invalid_argument);
  CHECK_THROWS_AS(erdos_straus_solve(5, 0), std::invalid_argument);
}

TEST_CASE("unit fraction reports") {
  auto s4 = erdos_straus_solve(4, 10000);
  REQUIRE(s4.has_value());
  CHECK(erdos_straus_csv({*s4}) == "n,x1,x2,x3\n4,2,3,6\n");
  CHECK(solution_json_line(*s4) == "{\"n\":4,\"sum\":\"1\",\"x1\":2,\"x2\":3,\"x3\":6}\n");
}

TEST_CASE("centered run witness") {
  ExistenceWitness w = sandwich_search(2, 2, Scale(1), "centered_run");
  CHECK(w.tuple.coords() == std::vector<long>{1, 2});
  CHECK(w.actual == make_rat(3, 2));
  CHECK(w.c_lower == make_rat(3, 2));
  CHECK(w.c_upper == make_rat(3, 2));
  CHECK(w.c_lower > 1);
  CHECK_FALSE(w.log_side.has_value());
  std::string line = witness_json_line(w);
  CHECK(line.find("\"theorem_id\":\"centered_run\"") != std::string::npos);
  CHECK(line.find("\"tuple\":[1,2]") != std::string::npos);
  CHECK(line.find("\"actual\":\"3/2\"") != std::string::npos);
  CHECK(line.back() == '\n');
}

TEST_CASE("harmonic run witness") {
  ExistenceWitness w = sandwich_search(3, 3, Scale(1), "harmonic_run");
  CHECK(w.tuple.coords() == std::vector<long>{3, 4, 5});
  CHECK(w.actual == make_rat(47, 60));
  // Ratios against m*n/sup and m*n/L: 47/60 over 3/5 and over 1.
  CHECK(w.c_lower == make_rat(47, 36));
  CHECK(w.c_upper == make_rat(47, 60));
  CHECK(w.c_lower >= 1);
  CHECK(w.c_upper <= 1);
}

TEST_CASE("split run witness") {
  ExistenceWitness w = sandwich_search(4, 2, Scale(1), "split_run", 5);
  CHECK(w.tuple.coords() == std::vector<long>{2, 3, 4, 5});
  CHECK(w.actual == make_rat(77, 60));
  CHECK(w.c_lower == make_rat(77, 48));
  CHECK(w.c_upper == make_rat(77, 120));
  REQUIRE(w.log_side.has_value());
  CHECK(*w.log_side == doctest::Approx((77.0 / 60.0) / std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("sandwich search guards") {
  CHECK_THROWS_AS(sandwich_search(3, 2, Scale(1), "harmonic_run"), std::invalid_argument);
  CHECK_THROWS_AS(sandwich_search(2, 2, Scale(1), "centered_run", 5), std::invalid_argument);
  CHECK_THROWS_AS(sandwich_search(4, 2, Scale(1), "split_run"), std::invalid_argument);
  CHECK_THROWS_AS(sandwich_search(4, 2, Scale(1), "split_run", 4), std::invalid_argument);
  CHECK_THROWS_AS(sandwich_search(3, 3, Scale(1), "mystery_run"), std::invalid_argument);
}

TEST_CASE("power sum witness above the diagonal") {
  ExistenceWitness w = power_sum_search(2, 2, 2);
  CHECK(w.tuple.coords() == std::vector<long>{2, 3});
  CHECK(w.actual == make_rat(13, 36));
  CHECK(w.c_lower == make_rat(13, 72));
  CHECK(w.c_upper == make_rat(13, 18));
  CHECK_FALSE(w.log_side.has_value());
}

TEST_CASE("power sum witness below the diagonal") {
  ExistenceWitness w = power_sum_search(3, 1, 2);
  CHECK(w.tuple.coords() == std::vector<long>{1, 3, 4});
  CHECK(w.actual == make_rat(169, 144));
  CHECK(w.c_lower == make_rat(169, 27));
  CHECK(w.c_upper == make_rat(169, 432));
  REQUIRE(w.log_side.has_value());
  CHECK(*w.log_side == doctest::Approx(0.9723784097058865).epsilon(1e-12));
  // L = n-1 satisfies neither side of the statement.
  CHECK_THROWS_AS(power_sum_search(3, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(power_sum_search(2, 2, 1), std::invalid_argument);
}

TEST_CASE("product witness without K") {
  ExistenceWitness w = product_search(3, 3);
  CHECK(w.tuple.coords() == std::vector<long>{3, 4, 5});
  CHECK(w.actual == make_rat(1, 60));
  CHECK(w.c_lower == make_rat(25, 12));
  CHECK(w.c_upper == make_rat(9, 20));
  CHECK_FALSE(w.K.has_value());
  CHECK_FALSE(w.log_side.has_value());
  CHECK_THROWS_AS(product_search(3, 2), std::invalid_argument);
}

TEST_CASE("product witness with K") {
  ExistenceWitness w = product_search(5, 3, 9);
  CHECK(w.tuple.coords() == std::vector<long>{3, 4, 5, 6, 9});
  CHECK(w.actual == make_rat(1, 3240));
  CHECK(w.c_lower == make_rat(729, 40));
  CHECK(w.c_upper == make_rat(3, 40));
  REQUIRE(w.log_side.has_value());
  CHECK(*w.log_side ==
        doctest::Approx((405.0 / 3240.0) / std::log(5.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("unit gap points hit the unit sphere of the gap functional") {
  for (int i = 0; i < 50; ++i) {
    Tuple<double> t = unit_gap_point(3, 1000 + static_cast<std::uint64_t>(i));
    CHECK(std::abs(gap_sq(t, Scale(1)) - 1.0) <= 1e-12);
  }
  Tuple<double> planar = unit_gap_point(2, 17);
  CHECK(std::abs(gap_sq(planar, Scale(1)) - 1.0) <= 1e-12);

  Tuple<double> a = unit_gap_point(3, 5);
  Tuple<double> b = unit_gap_point(3, 5);
  CHECK(a.coords() == b.coords());
  Tuple<double> c = unit_gap_point(3, 6);
  CHECK(a.coords() != c.coords());
  CHECK_THROWS_AS(unit_gap_point(1, 5), std::invalid_argument);
}

TEST_CASE("symmetric unit gap point is analytic") {
  Tuple<double> t2 = symmetric_unit_gap_point(2);
  // For n = 2 the all-equal solution of t - 1/t = 1/sqrt(2) is t = sqrt(2).
  CHECK(t2[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(t2[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::abs(gap_sq(t2, Scale(1)) - 1.0) <= 1e-12);

  Tuple<double> t5 = symmetric_unit_gap_point(5);
  for (std::size_t i = 1; i < 5; ++i) CHECK(t5[i] == t5[0]);
  CHECK(std::abs(gap_sq(t5, Scale(1)) - 1.0) <= 1e-12);
}

TEST_CASE("rational distance family along the ray") {
  RationalDistanceFamily fam = rational_distance_family(NatTuple({2, 3}), Scale(1), 3);
  CHECK(fam.gap_sq == make_rat(337, 36));
  REQUIRE(fam.radii.size() == 3);
  CHECK(fam.radii[0] == make_rat(337, 72));
  CHECK(fam.radii[1] == make_rat(337, 144));
  CHECK(fam.radii[2] == make_rat(337, 216));
  // Annular widths follow gap^2 / (2k(k+1)).
  for (std::size_t k = 0; k + 1 < fam.radii.size(); ++k) {
    Rat width = fam.radii[k] - fam.radii[k + 1];
    long kk = static_cast<long>(k) + 1;
    CHECK(width == fam.gap_sq / Rat(2 * kk * (kk + 1)));
  }
  REQUIRE(fam.points.size() == 3);
  double dirlen = std::sqrt(dot(fam.direction, fam.direction));
  CHECK(dirlen == doctest::Approx(1.0).epsilon(1e-12));
  // Distances between family points are differences of exact radii.
  double d01 = norm(sub(fam.points[0], fam.points[1]));
  CHECK(d01 == doctest::Approx(to_double(fam.radii[0] - fam.radii[1])).epsilon(1e-9));

  CHECK_THROWS_AS(rational_distance_family(NatTuple({2, 3, 4}), Scale(1), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(rational_distance_family(NatTuple({2, 3}), Scale(1), 0),
                  std::invalid_argument);
}

TEST_CASE("integer distances along a compression line") {
  IntegerLinePoints pts = integer_distance_line(NatTuple({2, 3}), Scale(1), 5);
  CHECK(pts.parameters == std::vector<long>{0, 1, 2, 3, 4, 5});
  REQUIRE(pts.points.size() == 6);
  double dirlen = std::sqrt(dot(pts.unit_direction, pts.unit_direction));
  CHECK(dirlen == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pairwise_integer_distances(pts.points));

  std::vector<Pt<double>> bent = pts.points;
  bent[2][0] += 0.25;
  CHECK_FALSE(pairwise_integer_distances(bent));
  CHECK_THROWS_AS(integer_distance_line(NatTuple({2, 3}), Scale(1), 0), std::invalid_argument);
}

TEST_CASE("unit distance pair counting") {
  std::vector<Pt<double>> square = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
  CHECK(unit_distance_pairs(square) == 4);

  std::vector<Pt<Rat>> exact = {
      {Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {make_rat(3, 5), make_rat(4, 5)}};
  CHECK(unit_distance_pairs(exact) == 2);  // the 3-4-5 point misses the third pair

  std::vector<Pt<double>> ragged = {{0.0, 0.0}, {1.0, 0.0, 0.0}};
  CHECK_THROWS_AS(unit_distance_pairs(ragged), std::invalid_argument);
}

TEST_CASE("cluster lower bound value") {
  double expect = std::sqrt(2.0) * 5.0 * (1.0 / 2 + 1.0 / 3 + 1.0 / 4);
  CHECK(anning_lower_bound(2, 5, 4) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(anning_lower_bound(3, 4, 2) ==
        doctest::Approx(std::sqrt(3.0) * 4.0 * 0.5).epsilon(1e-12));
  CHECK_THROWS_AS(anning_lower_bound(2, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(anning_lower_bound(2, 0, 4), std::invalid_argument);
}
