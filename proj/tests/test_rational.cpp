#include "doctest.h"

#include <stdexcept>

#include "cgeom/rational.hpp"
#include "cgeom/rng.hpp"
#include "cgeom/serialize.hpp"

using namespace cgeom;

TEST_CASE("make_rat canonicalizes") {
  CHECK(make_rat(2, 4) == make_rat(1, 2));
  CHECK(make_rat(-2, 4) == make_rat(-1, 2));
  CHECK(make_rat(1, -2) == make_rat(-1, 2));
  CHECK(make_rat(0, 7) == Rat(0));
  CHECK(make_rat(6, 3) == Rat(2));
  CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
}

TEST_CASE("parse_rat and rat_str round-trip") {
  CHECK(parse_rat("3/4") == make_rat(3, 4));
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK(parse_rat("0/5") == Rat(0));
  CHECK(parse_rat("10/4") == make_rat(5, 2));
  CHECK(rat_str(make_rat(5, 2)) == "5/2");
  CHECK(rat_str(Rat(3)) == "3");
  CHECK(rat_str(make_rat(-1, 3)) == "-1/3");
  CHECK(parse_rat(rat_str(make_rat(-1234, 987))) == make_rat(-1234, 987));
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("abc"));
  CHECK_THROWS(parse_rat(""));
}

TEST_CASE("rat_of_double is exact on dyadics") {
  CHECK(rat_of_double(0.5) == make_rat(1, 2));
  CHECK(rat_of_double(-0.75) == make_rat(-3, 4));
  CHECK(rat_of_double(3.0) == Rat(3));
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    double v = (rng.unit() - 0.5) * 1000.0;
    CHECK(to_double(rat_of_double(v)) == v);
  }
}

TEST_CASE("factorial and pow_scalar") {
  CHECK(factorial(0) == Int(1));
  CHECK(factorial(1) == Int(1));
  CHECK(factorial(5) == Int(120));
  CHECK(factorial(12) == Int(479001600));
  CHECK(pow_scalar(make_rat(1, 2), 3) == make_rat(1, 8));
  CHECK(pow_scalar(Rat(3), 0) == Rat(1));
  CHECK(pow_scalar(2.0, 10) == 1024.0);
}

TEST_CASE("sign_of and abs_val") {
  CHECK(sign_of(make_rat(-3, 7)) == -1);
  CHECK(sign_of(Rat(0)) == 0);
  CHECK(sign_of(make_rat(3, 7)) == 1);
  CHECK(abs_val(make_rat(-3, 7)) == make_rat(3, 7));
  CHECK(abs_val(-2.5) == 2.5);
}

TEST_CASE("scalar traits") {
  CHECK(is_exact_scalar<Rat>);
  CHECK_FALSE(is_exact_scalar<double>);
  CHECK(scalar_from_long<Rat>(7) == Rat(7));
  CHECK(scalar_from_long<double>(7) == 7.0);
}

TEST_CASE("rng determinism and ranges") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(42), d(43);
  CHECK(c.next() != d.next());
  Rng s1(42, 0), s2(42, 1);
  CHECK(s1.next() != s2.next());

  Rng r(7);
  bool lo_hit = false, hi_hit = false;
  for (int i = 0; i < 1000; ++i) {
    long v = r.range(3, 6);
    CHECK(v >= 3);
    CHECK(v <= 6);
    lo_hit |= v == 3;
    hi_hit |= v == 6;
  }
  CHECK(lo_hit);
  CHECK(hi_hit);
  for (int i = 0; i < 1000; ++i) {
    CHECK(r.below(10) < 10);
    double u = r.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    double p = r.unit_pos();
    CHECK(p > 0.0);
    CHECK(p <= 1.0);
  }
}

TEST_CASE("decimal and point formatting helpers") {
  CHECK(decimal_str(1.0) == "1.0");
  CHECK(decimal_str(0.5) == "0.5");
  CHECK(decimal_str(-3.0) == "-3.0");
  CHECK(decimal_str(1e20) == "1e+20");
  CHECK(exact_with_decimal(Rat(1)) == "1 (1.0)");
  CHECK(exact_with_decimal(make_rat(1, 2)) == "1/2 (0.5)");

  Pt<Rat> p = parse_rat_point("2, 3/4 ,-5");
  REQUIRE(p.size() == 3);
  CHECK(p[0] == Rat(2));
  CHECK(p[1] == make_rat(3, 4));
  CHECK(p[2] == Rat(-5));
  CHECK_THROWS(parse_rat_point("1,,2"));

  Pt<double> f = parse_float_point("1.5,-2");
  REQUIRE(f.size() == 2);
  CHECK(f[0] == 1.5);
  CHECK(f[1] == -2.0);
  CHECK_THROWS(parse_float_point("1.5,x"));

  std::vector<long> l = parse_long_list("3,11,7");
  CHECK(l == std::vector<long>{3, 11, 7});
  CHECK_THROWS(parse_long_list("3,1.5"));
}
