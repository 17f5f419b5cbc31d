#include <doctest.h>

#include <cmath>

#include "dioph/core_arith.hpp"
#include "dioph/dioph_sums.hpp"

using namespace dioph;
using namespace dioph::sums;

namespace {

double norm_d(long double t) { return static_cast<double>(std::fabs(t - std::nearbyint(t))); }

}  // namespace

TEST_CASE("small sums against long double loops") {
  const long double g = (std::sqrt(5.0L) - 1) / 2;
  double recip = 0, recipj = 0, norm = 0, sine = 0, frac = 0;
  for (unsigned long j = 1; j <= 2000; ++j) {
    const long double t = g * j;
    const double d = norm_d(t);
    recip += 1 / d;
    recipj += 1 / (static_cast<double>(j) * d);
    norm += d;
    sine += 1 / std::fabs(static_cast<double>(std::sin(M_PIl * t)));
    frac += static_cast<double>(t - std::floor(t)) - 0.5;
  }
  const Real x = Real::golden();
  CHECK(sum_recip_norm(x, 2000).to_double() == doctest::Approx(recip).epsilon(1e-10));
  CHECK(sum_recip_jnorm(x, 2000).to_double() == doctest::Approx(recipj).epsilon(1e-10));
  CHECK(sum_norm(x, 2000).to_double() == doctest::Approx(norm).epsilon(1e-10));
  CHECK(sum_recip_sin(x, 2000).to_double() == doctest::Approx(sine).epsilon(1e-10));
  CHECK(sum_fracpart(x, 2000).to_double() == doctest::Approx(frac).epsilon(1e-8));
}

TEST_CASE("jobs do not change the result") {
  const Real x = Real::parse("sqrt(11)-3");
  const HPFloat one = sum_recip_norm(x, 300000, {128, 1}), four = sum_recip_norm(x, 300000, {128, 4});
  CHECK(one.lower_exact() == four.lower_exact());
  CHECK(one.upper_exact() == four.upper_exact());
}

TEST_CASE("segments add up") {
  const Real x = Real::pi();
  const HPFloat whole = segment_sum(SumKind::recip, x, 1, 5000);
  const HPFloat parts = segment_sum(SumKind::recip, x, 1, 1234) + segment_sum(SumKind::recip, x, 1235, 5000);
  CHECK(whole.overlaps(parts));
}

TEST_CASE("rational poles raise DomainError") {
  CHECK_THROWS_AS(sum_recip_norm(Real(mpq_class(1, 7)), 10), DomainError);
  CHECK_NOTHROW(sum_recip_norm(Real(mpq_class(1, 7)), 6));
  CHECK(sum_fracpart(Real(mpq_class(1, 7)), 7).contains(mpq_class(-1, 2)));
}

TEST_CASE("horizon") {
  CHECK_THROWS_AS(sum_norm(Real::golden(), kSumHorizon + 1), HorizonExceeded);
}

TEST_CASE("sweep records running sums and normalizers") {
  const Real x = Real::golden();
  const auto rows = sweep(SumKind::recip, x, 100, 1000, 300, Normalization::mlogm);
  REQUIRE(rows.size() == 4);
  for (const auto& r : rows) {
    CHECK(r.value.overlaps(sum_recip_norm(x, r.m)));
    const double m = static_cast<double>(r.m);
    CHECK(r.bound_value.to_double() == doctest::Approx(m * std::log(m)));
  }
  CHECK(parse_sum_kind("fracpart") == SumKind::fracpart);
  CHECK_THROWS_AS(parse_sum_kind("nope"), ParseError);
  CHECK_THROWS_AS(parse_normalization("nope"), ParseError);
}

TEST_CASE("type functions") {
  const auto c = TypeFunction::constant(4);
  CHECK(c(1000, 64).contains(mpq_class(4)));
  const auto pl = TypeFunction::power_log(2, mpq_class(1, 2));
  CHECK(pl(1, 64).contains(mpq_class(2)));
  CHECK(certainly_less(pl(10, 64), pl(100, 64)));
  const auto t = TypeFunction::table({{1, mpq_class(3)}, {10, mpq_class(5)}});
  CHECK(t(9, 64).contains(mpq_class(3)));
  CHECK(t(10, 64).contains(mpq_class(5)));
}

TEST_CASE("surd certificates give ratios below one") {
  const Real x = Real::golden();
  const auto c = contfrac::classify_type(x, 1000);
  const auto psi = certificate_for(c);
  CHECK(psi.certified());
  CHECK(certificate_consistent(psi, c));
  CHECK(certainly_less(bound_jalpha(x, psi, 10000).ratio, HPFloat(1L, 64)));
  CHECK(certainly_less(bound_hhalpha(x, psi, 10000).ratio, HPFloat(1L, 64)));
  CHECK(certainly_less(bound_h0(x, psi, 8, 0).ratio, HPFloat(1L, 64)));
}

TEST_CASE("the lower-bound ratio stays away from zero") {
  const auto r = bound_lower(Real::parse("sqrt2-1"), 100000);
  CHECK(r.ratio.lower() > 0.1);
}

TEST_CASE("counterexample sums beat q_n^n") {
  const auto rows = counterexample_check(6);
  REQUIRE_FALSE(rows.empty());
  for (const auto& r : rows) CHECK(r.exceeds);
}

TEST_CASE("nathanson sums need a good rational approximation") {
  NathansonParams p{mpz_class(1), 3, mpq_class(3), mpq_class(3), 9, 1};
  CHECK_THROWS_AS(nathanson_sums(Real::golden(), p), BadRationalApproximation);
  p.a = 2;
  const auto rows = nathanson_sums(Real::golden(), p);
  CHECK(rows.size() == 4);
}
