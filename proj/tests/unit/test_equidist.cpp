#include <doctest.h>

#include <random>

#include "dioph/core_arith.hpp"
#include "dioph/equidist.hpp"
#include "oracles.hpp"

using namespace dioph;
using namespace dioph::equidist;

TEST_CASE("singleton and grid") {
  const auto single = PointSet::from_rationals({mpq_class(0)});
  CHECK(discrepancy(single).contains(mpq_class(1)));
  CHECK(discrepancy_star(single).contains(mpq_class(1)));
  std::vector<mpq_class> grid;
  for (long i = 0; i < 8; ++i) grid.emplace_back(i, 8);
  for (auto& g : grid) g.canonicalize();
  CHECK(discrepancy(PointSet::from_rationals(grid)).contains(mpq_class(1, 8)));
}

TEST_CASE("property: sorted formulas equal the endpoint scan") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 40; ++rep) {
    const unsigned long N = 1 + rng() % 30, den = 1 + rng() % 50;
    std::vector<mpq_class> pts;
    for (unsigned long i = 0; i < N; ++i) {
      pts.emplace_back(mpz_class(rng() % den), mpz_class(den));
      pts.back().canonicalize();
    }
    const auto [star, d] = oracle::discrepancies(pts);
    const auto ps = PointSet::from_rationals(pts);
    CHECK(discrepancy_star(ps).contains(star));
    CHECK(discrepancy(ps).contains(d));
  }
}

TEST_CASE("kronecker discrepancy decreases for golden") {
  const Real g = Real::golden();
  const HPFloat d100 = discrepancy(PointSet::kronecker(g, 100)), d10k = discrepancy(PointSet::kronecker(g, 10000));
  CHECK(certainly_less(d10k, d100));
  CHECK(certainly_le(d10k, bounded_pq_discrepancy_bound(1, 10000)));
}

TEST_CASE("erdos-turan bracket with m = 1 is at least 1") {
  const HPFloat b = erdos_turan_bracket(Real::pi(), 100, 1);
  CHECK(certainly_le(HPFloat(1L, 64), b));
}

TEST_CASE("weyl sums: closed form equals direct, and the geometric bound") {
  for (long h : {1L, 3L, -2L}) {
    const HPFloat a = weyl_sum(Real::golden(), h, 1000), b = weyl_sum_direct(Real::golden(), h, 1000);
    CHECK(a.overlaps(b));
    CHECK((a - b).radius_double() < 1e-30);
  }
  CHECK(weyl_sum(Real(mpq_class(1, 2)), 1, 1001).contains(mpq_class(1)));
}

TEST_CASE("koksma for the norm, sawtooth and constant functions") {
  const auto ps = PointSet::kronecker(Real::golden(), 1000);
  for (const auto& f : {norm_function(), sawtooth_function(), constant_function(mpq_class(3, 7))}) {
    const auto k = koksma_check(f, ps);
    CHECK(k.holds);
  }
  CHECK(koksma_check(constant_function(mpq_class(2)), ps).lhs.contains_zero());
}

TEST_CASE("quadratic weyl chain") {
  const auto w = weyl_quadratic(Real::golden(), 1000);
  CHECK(w.holds);
  CHECK(certainly_le(w.lhs_sq, w.intermediate));
  CHECK_THROWS_AS(weyl_quadratic(Real(mpq_class(1, 3)), 10), DomainError);
}
