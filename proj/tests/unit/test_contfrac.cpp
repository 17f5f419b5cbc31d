#include <doctest.h>

#include "dioph/contfrac.hpp"
#include "dioph/core_arith.hpp"
#include "oracles.hpp"

using namespace dioph;
using namespace dioph::contfrac;

TEST_CASE("rational expansion matches Euclid and terminates") {
  for (auto [p, q] : {std::pair{355L, 113L}, {2L, 3L}, {1234567L, 7654321L}, {-17L, 5L}}) {
    const mpq_class r(p, q);
    const auto cf = cf_expand(Real(r), 100);
    CHECK(cf.terminated);
    const mpq_class frac = r - mpq_class(cf.a0);
    CHECK(cf.a == oracle::cf_rational(frac.get_num(), frac.get_den()));
    CHECK(cf.convergent(cf.size()) == frac);
  }
}

TEST_CASE("sqrt(D) quotients match the integer recurrence") {
  for (long D : {2L, 3L, 7L, 11L, 13L, 19L, 61L, 94L}) {
    const auto ref = oracle::cf_sqrt(D, 60);
    const auto cf = cf_expand(Real::surd(0, 1, D, 1), 60);
    CHECK(cf.a0 == ref[0]);
    for (std::size_t k = 1; k <= 60; ++k) CHECK(cf.quotient(k) == ref[k]);
    REQUIRE(cf.period.has_value());
  }
}

TEST_CASE("pi against the Machin bracket") {
  const auto cf = cf_expand(Real::pi(), 30);
  CHECK(cf.a0 == 3);
  const std::vector<long> head{7, 15, 1, 292, 1, 1, 1, 2, 1, 3};
  for (std::size_t k = 1; k <= head.size(); ++k) CHECK(cf.quotient(k) == head[k - 1]);
  const auto pi = oracle::machin_pi();
  for (std::size_t k = 1; k + 1 <= cf.size(); ++k) {
    // the convergent sits within 1/(q_k q_{k+1}) of pi - 3
    const mpq_class err = 1 / mpq_class(cf.q[k] * cf.q[k + 1]);
    CHECK(abs(pi.lo - 3 - cf.convergent(k)) <= err + (pi.hi - pi.lo));
  }
}

TEST_CASE("e - 2 pattern 1, 2k, 1") {
  const auto cf = cf_expand(Real::e() - Real(2L), 45);
  for (std::size_t k = 1; k <= 45; ++k) {
    const mpz_class expect = k % 3 == 2 ? mpz_class(2 * ((k + 1) / 3)) : mpz_class(1);
    CHECK(cf.quotient(k) == expect);
  }
}

TEST_CASE("property: determinant identity p_{k-1} q_k - p_k q_{k-1} = (-1)^k") {
  for (const char* s : {"golden", "sqrt(7)/3", "pi", "e", "1234567/7654321"}) {
    const auto cf = cf_expand(Real::parse(s), 80);
    for (std::size_t k = 1; k <= cf.size(); ++k) {
      const mpz_class det = cf.p[k - 1] * cf.q[k] - cf.p[k] * cf.q[k - 1];
      CHECK(det == (k % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("from_quotients and value_of") {
  const auto cf = from_quotients({1, 1, 1});
  CHECK(cf.convergent(3) == mpq_class(2, 3));
  CHECK(value_of({1, 1, 1}, 64).contains(mpq_class(2, 3)));
  CHECK(rational_quotients(mpq_class(2, 3), 10) == std::vector<mpz_class>{1, 2});
}

TEST_CASE("best approximation holds for the first convergents") {
  for (std::size_t n = 1; n <= 8; ++n) CHECK(best_approx_verify(Real::parse("sqrt2-1"), n).holds);
  const auto r = best_approx_verify(Real(mpq_class(2, 3)), 2);
  CHECK(r.vacuous);
  CHECK_THROWS_AS(best_approx_verify(Real::parse("golden"), 40), HorizonExceeded);
}

TEST_CASE("ostrowski digits reconstruct m and are legal") {
  const auto cf = cf_expand(Real::parse("pi-3"), 20);
  for (mpz_class m = 1; m <= 5000; m += 7) {
    const auto d = ostrowski_expand(m, cf);
    mpz_class back = 0;
    for (std::size_t i = 0; i < d.z.size(); ++i) back += d.z[i] * cf.q[i];
    CHECK(back == m);
    CHECK(ostrowski_legal(d.z, cf));
  }
  const auto short_cf = cf_expand(Real(mpq_class(1, 3)), 5);
  CHECK_THROWS_AS(ostrowski_expand(100, short_cf), InsufficientConvergents);
}

TEST_CASE("brown-shiue sum against direct summation") {
  for (const char* s : {"golden", "sqrt(3)/7", "e-2"}) {
    const Real x = Real::parse(s);
    for (unsigned long m : {1UL, 2UL, 99UL, 2024UL}) {
      const HPFloat a = brown_shiue_sum(x, m, 128), b = sawtooth_sum_direct(x, m, 128);
      CHECK(a.overlaps(b));
    }
  }
}

TEST_CASE("cylinders shrink and nest") {
  const auto c1 = cylinder_interval({2});
  CHECK(std::min(c1.u, c1.v) == mpq_class(1, 3));
  CHECK(std::max(c1.u, c1.v) == mpq_class(1, 2));
  CHECK(c1.measure == mpq_class(1, 6));
  const auto c2 = cylinder_interval({2, 3});
  CHECK(std::min(c1.u, c1.v) <= std::min(c2.u, c2.v));
  CHECK(std::max(c2.u, c2.v) <= std::max(c1.u, c1.v));
  CHECK(c2.measure < c1.measure);
}

TEST_CASE("gauss measure is invariant under the map") {
  for (auto [a, b] : {std::pair{mpq_class(0), mpq_class(1, 2)}, {mpq_class(1, 3), mpq_class(3, 4)}}) {
    const HPFloat direct = gauss_measure(a, b, 128), pre = gauss_preimage_measure(a, b, 200, 128);
    CHECK(direct.overlaps(pre));
  }
}

TEST_CASE("gauss map fixes golden") {
  CHECK(gauss_map_exact(Real::golden(), 5) == Real::golden());
}

TEST_CASE("surds classify as bounded with exact K") {
  const auto c = classify_type(Real::parse("sqrt(11)-3"), 500);
  CHECK(c.bounded_pq_certified);
  REQUIRE(c.K.has_value());
  CHECK(*c.K == 6);
}
