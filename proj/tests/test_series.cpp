#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "riopoly/series.hpp"

using namespace riopoly;
using riotest::Q;
using riotest::Rng;
using riotest::S;

TEST_CASE("rational parse and print") {
  CHECK(to_string(Q("6/4")) == "3/2");
  CHECK(to_string(Q("-22/7")) == "-22/7");
  CHECK(to_string(Q("7")) == "7");
  CHECK(Q(" 1/2 ") == Rational(1, 2));
  CHECK(make_rational(-6, -4) == Rational(3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ZeroDivisor);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(binomial(7, 3) == 35);
  CHECK(factorial(6) == 720);
}

TEST_CASE("add truncates to the shorter operand") {
  CHECK(add(S("1,2,3"), S("1,1,0,0,0")) == S("2,3,3"));
}

TEST_CASE("cauchy_mul squares (1-x)^2") {
  const Series sq = S("1,-2,1", 4);
  CHECK(cauchy_mul(sq, sq) == S("1,-4,6,-4,1"));
}

TEST_CASE("reciprocal of 1/2 - x^2/2") {
  CHECK(reciprocal(S("1/2,0,-1/2", 4)) == S("2,0,2,0,2"));
  CHECK(reciprocal(S("1,-1", 5)) == named_series("geometric", 5));
  CHECK_THROWS_AS(reciprocal(S("0,1")), ZeroConstantTerm);
}

TEST_CASE("divide cancels the common x power") {
  // x / log((1+x)/(1-x)), the classic even series starting 1/2.
  const Series q = divide(S("0,1", 5), named_series("logratio", 5));
  CHECK(q == S("1/2,0,-1/6,0,-2/45"));

  CHECK_THROWS_AS(divide(S("1,0", 3), S("0,1", 3)), OrderMismatch);
  CHECK_THROWS_AS(divide(S("1,1"), Series::zero(1)), ZeroDivisor);
}

TEST_CASE("divide by a unit matches mul by reciprocal") {
  Rng rng(11);
  for (int it = 0; it < 50; ++it) {
    const Series a = rng.series(8), b = rng.unit_series(8);
    CHECK(divide(a, b) == cauchy_mul(a, reciprocal(b)));
  }
}

TEST_CASE("compose geometric with x/(1-x)") {
  const Series geo = named_series("geometric", 6);
  const Series inner = times_x(named_series("geometric", 5));  // x/(1-x)
  // 1/(1 - x/(1-x)) = (1-x)/(1-2x).
  CHECK(compose(geo, inner) == S("1,1,2,4,8,16,32"));
  // With the f/g prefactor this is column 0 of the Pascal square, 1/(1-2x).
  CHECK(cauchy_mul(geo, compose(geo, inner)) == S("1,2,4,8,16,32,64"));
  CHECK_THROWS_AS(compose(geo, S("1,1", 6)), InnerOrderZero);
}

TEST_CASE("compose exp with logratio gives (1+x)/(1-x)") {
  const Series e = compose(named_series("exp", 7), named_series("logratio", 7));
  CHECK(e == S("1,2,2,2,2,2,2,2"));
}

TEST_CASE("comp_inverse of x/(1-x) is x/(1+x)") {
  const Series w = times_x(named_series("geometric", 5));
  CHECK(comp_inverse(w) == S("0,1,-1,1,-1,1,-1"));
  CHECK_THROWS_AS(comp_inverse(S("1,1,1")), NotInvertible);
  CHECK_THROWS_AS(comp_inverse(S("0,0,1")), NotInvertible);
  CHECK_THROWS_AS(comp_inverse(S("0")), NotInvertible);
}

TEST_CASE("hadamard product and its unit") {
  CHECK(hadamard(S("1,2,1"), named_series("exp", 2)) == S("1,2,1/2"));
  CHECK(hadamard_reciprocal(named_series("exp", 4)) == S("1,1,2,6,24"));
  CHECK_THROWS_WITH_AS(hadamard_reciprocal(S("1,0,2")),
                       doctest::Contains("index 1"), NotHadamardUnit);
  const Series geo = named_series("geometric", 6);
  Rng rng(12);
  for (int it = 0; it < 20; ++it) {
    const Series a = rng.series(6);
    CHECK(hadamard(a, geo) == a);
  }
}

TEST_CASE("derivative") {
  CHECK(derivative(named_series("neglog1m", 4)) == S("1,1,1,1"));
  CHECK(derivative(Series::constant(5, 3)) == Series::zero(2));
  CHECK(derivative(Series::constant(5, 0)) == Series::zero(0));
}

TEST_CASE("named series prefixes") {
  CHECK(named_series("exp", 4) == S("1,1,1/2,1/6,1/24"));
  CHECK(named_series("logratio", 5) == S("0,2,0,2/3,0,2/5"));
  CHECK(named_series("neglog1m", 4) == S("0,1,1/2,1/3,1/4"));
  CHECK(named_series("one", 2) == S("1,0,0"));
  CHECK(named_series("poly:1,-1", 3) == S("1,-1,0,0"));
  CHECK_THROWS_AS(named_series("euler", 4), UnknownName);
}

TEST_CASE("parse_series dispatches literals and tokens") {
  CHECK(parse_series("1/2,0,-1/2", 4) == S("1/2,0,-1/2,0,0"));
  CHECK(parse_series(" exp", 2) == S("1,1,1/2"));
  CHECK_THROWS_AS(parse_series("", 2), std::invalid_argument);
}

TEST_CASE("series text round-trip") {
  Rng rng(13);
  for (int it = 0; it < 30; ++it) {
    const Series a = rng.series(7);
    CHECK(parse_series(to_string(a), 7) == a);
  }
}

TEST_CASE("ring axioms hold on random series") {
  Rng rng(1);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = 6;
    const Series a = rng.series(n), b = rng.series(n), c = rng.series(n);
    CHECK(add(a, b) == add(b, a));
    CHECK(add(add(a, b), c) == add(a, add(b, c)));
    CHECK(cauchy_mul(a, b) == cauchy_mul(b, a));
    CHECK(cauchy_mul(cauchy_mul(a, b), c) == cauchy_mul(a, cauchy_mul(b, c)));
    CHECK(cauchy_mul(a, add(b, c)) == add(cauchy_mul(a, b), cauchy_mul(a, c)));
    CHECK(cauchy_mul(a, named_series("one", n)) == a);
    CHECK(add(a, Series::zero(n)) == a);
    CHECK(add(a, negate(a)) == Series::zero(n));
  }
}

TEST_CASE("reciprocal round-trips") {
  Rng rng(2);
  for (int it = 0; it < 100; ++it) {
    const Series a = rng.unit_series(8);
    CHECK(cauchy_mul(a, reciprocal(a)) == named_series("one", 8));
    CHECK(reciprocal(reciprocal(a)) == a);
  }
}

TEST_CASE("compose round-trips and associativity") {
  Rng rng(3);
  for (int it = 0; it < 100; ++it) {
    const Series f = rng.series(7);
    const Series u = rng.order1_series(7), v = rng.order1_series(7);
    CHECK(compose(compose(f, u), v) == compose(f, compose(u, v)));
    CHECK(compose(f, named_series("poly:0,1", 7)) == f);
  }
}

TEST_CASE("comp_inverse round-trips both ways") {
  Rng rng(4);
  const Series id = named_series("poly:0,1", 7);
  for (int it = 0; it < 100; ++it) {
    const Series w = rng.order1_series(7);
    const Series v = comp_inverse(w);
    CHECK(compose(w, v) == id);
    CHECK(compose(v, w) == id);
    CHECK(comp_inverse(v) == w);
  }
}

TEST_CASE("product rule for the formal derivative") {
  Rng rng(5);
  for (int it = 0; it < 100; ++it) {
    const Series a = rng.series(8), b = rng.series(8);
    const Series lhs = derivative(cauchy_mul(a, b));
    const Series rhs = add(cauchy_mul(derivative(a), truncate(b, 7)),
                           cauchy_mul(truncate(a, 7), derivative(b)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("mul then divide restores the factor") {
  Rng rng(6);
  for (int it = 0; it < 100; ++it) {
    const Series a = rng.series(8);
    Series b = rng.series(8);
    if (b.is_zero()) b = S("0,1", 8);
    const auto om = *x_order(b);
    CHECK(divide(cauchy_mul(a, b), b) == truncate(a, 8 - om));
  }
}

TEST_CASE("hadamard reciprocal round-trips to geometric") {
  Rng rng(7);
  for (int it = 0; it < 100; ++it) {
    const Series h = rng.hadamard_unit(8);
    CHECK(hadamard(h, hadamard_reciprocal(h)) == named_series("geometric", 8));
  }
}
