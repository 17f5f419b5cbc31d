#include <doctest.h>

#include "dioph/core_arith.hpp"
#include "oracles.hpp"

using namespace dioph;

TEST_CASE("hpfloat pi and e enclose the series brackets") {
  const HPFloat pi = HPFloat::pi(256);
  const auto machin = oracle::machin_pi();
  CHECK(pi.lower_exact() <= machin.hi);
  CHECK(machin.lo <= pi.upper_exact());
  CHECK(pi.radius_double() < 1e-70);

  const HPFloat e = eval(Real::e(), 256);
  const auto series = oracle::euler_e();
  CHECK(e.lower_exact() <= series.hi);
  CHECK(series.lo <= e.upper_exact());
}

TEST_CASE("hpfloat arithmetic encloses exact rational results") {
  const mpq_class a(1, 3), b(-22, 7);
  const HPFloat x(a, 64), y(b, 64);
  CHECK((x + y).contains(mpq_class(a + b)));
  CHECK((x * y).contains(mpq_class(a * b)));
  CHECK((x / y).contains(mpq_class(a / b)));
  CHECK(square(y).contains(mpq_class(b * b)));
  CHECK(abs(y).contains(mpq_class(-b)));
  CHECK(certainly_less(y, x));
  CHECK_FALSE(certainly_less(x, x));
}

TEST_CASE("precision widens with the larger operand") {
  const HPFloat lo(1L, 64), hi(3L, 512);
  CHECK((lo / hi).precision() == 512);
  CHECK((lo / hi).radius_double() < 1e-140);
}

TEST_CASE("floor throws when the interval straddles an integer") {
  const HPFloat near_one = HPFloat::from_endpoints(mpq_class(999, 1000), mpq_class(1001, 1000), 64);
  CHECK_THROWS_AS(near_one.floor(), IntervalStraddlesInteger);
  CHECK(HPFloat(mpq_class(7, 2), 64).floor() == 3);
}

TEST_CASE("parse: atoms and operators") {
  CHECK(Real::parse("355/113") == Real(mpq_class(355, 113)));
  CHECK(Real::parse("1.25") == Real(mpq_class(5, 4)));
  CHECK(Real::parse("golden").is_surd());
  CHECK(Real::parse("sqrt2").is_surd());
  CHECK(Real::parse("(1+sqrt(5))/2 - 1") == Real::golden());
  CHECK(Real::parse("sqrt(11)-3").is_surd());
  CHECK(Real::parse("-sqrt(11)").is_surd());
  CHECK(Real::parse("sqrt(3)/7").is_surd());
  CHECK(Real::parse("5*sqrt(2)").is_surd());
  CHECK(Real::parse("sqrt(4)") == Real(2L));
  CHECK(Real::parse("pi-3").known_irrational());
  CHECK(Real::parse("3.14159@5").is_decimal());
}

TEST_CASE("parse: errors are ParseError") {
  for (const char* bad : {"", "1/0", "pi*pi", "sqrt(pi)", "2+", "foo", "(1", "1.2.3"})
    CHECK_THROWS_AS(Real::parse(bad), Error);
  CHECK_THROWS_AS(Real::parse("2+"), ParseError);
}

TEST_CASE("golden encloses the Newton bracket") {
  const auto g = oracle::golden();
  const HPFloat v = eval(Real::golden(), 256);
  CHECK(v.lower_exact() <= g.hi);
  CHECK(g.lo <= v.upper_exact());
}

TEST_CASE("floor, fractional part and nearest-integer distance") {
  CHECK(floor_int(Real(mpq_class(-7, 2))) == -4);
  CHECK(frac_part(Real(mpq_class(-7, 2))) == Real(mpq_class(1, 2)));
  CHECK(dist_nearest(Real(mpq_class(7, 10))) == Real(mpq_class(3, 10)));
  CHECK(signed_nearest(Real(mpq_class(1, 2))) == Real(0L));
  CHECK(braces_nearest(Real(mpq_class(1, 2))) == Real(mpq_class(1, 2)));
  CHECK(signed_nearest(Real(mpq_class(7, 10))) == Real(mpq_class(-3, 10)));
  CHECK(is_half_integer(Real(mpq_class(-5, 2))));
  CHECK_FALSE(is_half_integer(Real::golden()));
  CHECK(floor_int(Real::pi() * Real(1000L)) == 3141);
}

TEST_CASE("property: ||x|| = min(R(x), 1 - R(x)) and R(x + n) = R(x)") {
  for (long num = -50; num <= 50; ++num) {
    mpq_class q(num, 17);
    q.canonicalize();
    const Real x(q);
    const Real r = frac_part(x);
    const Real d = dist_nearest(x);
    CHECK(r == frac_part(x + Real(5L)));
    CHECK((d == r || d == Real(1L) - r));
    CHECK(d.compare(mpq_class(1, 2)) <= 0);
    CHECK(d.sign() >= 0);
  }
}

TEST_CASE("adaptive precision resolves a near-integer floor") {
  // 10^40 * golden, floor needs more than 64 bits
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 40);
  const Real x = Real::golden() * Real(big);
  const mpz_class f = with_adaptive_precision([&](Precision p) { return eval(x, p).floor(); }, 64);
  const auto g = oracle::golden();
  CHECK(mpq_class(f) <= big * g.hi);
  CHECK(big * g.lo < mpq_class(f + 1));
}

TEST_CASE("a coarse decimal raises PrecisionExhausted") {
  const Real x = Real::parse("1.0@1");
  CHECK_THROWS_AS(floor_int(x), PrecisionExhausted);
}
