#include <doctest.h>

#include <cmath>

#include "dioph/bernoulli.hpp"
#include "dioph/core_arith.hpp"
#include "oracles.hpp"

using namespace dioph;
using namespace dioph::bernoulli;

TEST_CASE("bernoulli numbers match Akiyama-Tanigawa") {
  const auto ref = oracle::bernoulli_numbers(60);
  for (int k = 0; k <= 60; ++k) CHECK(bernoulli_number(k) == ref[static_cast<std::size_t>(k)]);
  CHECK(bernoulli_number(1) == mpq_class(-1, 2));
  CHECK(bernoulli_number(12) == mpq_class(-691, 2730));
}

TEST_CASE("low-degree polynomials") {
  CHECK(bernoulli_poly(1).to_string() == "x - 1/2");
  const auto& b2 = bernoulli_poly(2).coefficients();
  REQUIRE(b2.size() == 3);
  CHECK(b2[0] == mpq_class(1, 6));
  CHECK(b2[1] == -1);
  CHECK(b2[2] == 1);
  CHECK_THROWS_AS(bernoulli_poly(kMaxDegree + 1), DomainError);
  CHECK_THROWS_AS(bernoulli_poly(-1), DomainError);
}

TEST_CASE("property: B_k' = k B_{k-1}, integral zero, symmetry") {
  for (int k = 1; k <= 40; ++k) {
    const auto d = bernoulli_poly(k).derivative();
    const auto& prev = bernoulli_poly(k - 1).coefficients();
    REQUIRE(d.size() == prev.size());
    for (std::size_t j = 0; j < d.size(); ++j) CHECK(d[j] == k * prev[j]);
    CHECK(bernoulli_poly(k).integral_0_1() == 0);
    for (const mpq_class& x : {mpq_class(1, 3), mpq_class(2, 7), mpq_class(5, 4)}) {
      const mpq_class lhs = bernoulli_poly(k)(mpq_class(1 - x));
      const mpq_class rhs = bernoulli_poly(k)(x);
      CHECK(lhs == (k % 2 == 0 ? rhs : mpq_class(-rhs)));
      // B_k(x + 1) - B_k(x) = k x^{k-1}
      CHECK(bernoulli_poly(k)(mpq_class(x + 1)) - rhs == k * oracle::pow_q(x, static_cast<unsigned long>(k - 1)));
    }
  }
}

TEST_CASE("periodic functions are 1-periodic") {
  for (int k = 1; k <= 8; ++k)
    for (long n = -3; n <= 3; ++n) {
      const mpq_class t(2, 9);
      CHECK(periodic_bernoulli(k, mpq_class(t + n)) == periodic_bernoulli(k, t));
    }
  const HPFloat p = periodic_bernoulli(2, Real::golden() + Real(4L), 128);
  CHECK(p.overlaps(periodic_bernoulli(2, Real::golden(), 128)));
}

TEST_CASE("faulhaber equals direct power sums") {
  for (int k = 0; k <= 12; ++k)
    for (long a : {-7L, 0L, 1L, 5L})
      for (long b : {a, a + 1, a + 30}) {
        mpz_class direct = 0;
        for (long m = a; m <= b; ++m) {
          mpz_class t;
          mpz_pow_ui(t.get_mpz_t(), mpz_class(m).get_mpz_t(), static_cast<unsigned long>(k));
          direct += t;
        }
        CHECK(faulhaber_sum(a, b, k) == mpq_class(direct));
      }
}

TEST_CASE("raabe multiplication residual contains zero") {
  for (int k = 1; k <= 10; ++k)
    for (unsigned long q : {1UL, 2UL, 5UL}) {
      CHECK(raabe_residual(k, q, Real(mpq_class(3, 11)), 128).contains_zero());
      CHECK(raabe_residual(k, q, Real::golden(), 128).contains_zero());
    }
}

TEST_CASE("euler gamma and stirling") {
  const HPFloat g = euler_gamma(128);
  CHECK(g.lower() <= 0.5772156649015329);
  CHECK(0.5772156649015328 <= g.upper());
  CHECK(std::abs(stirling_check(1000, 128).to_double() - 1) < 1e-3);
}

TEST_CASE("watson: direct sum against a long double loop") {
  for (unsigned long n : {2UL, 3UL, 17UL, 100UL}) {
    long double s = 0;
    for (unsigned long m = 1; m < n; ++m) s += 1.0L / std::sin(static_cast<long double>(m) * M_PIl / n);
    const auto w = watson_csc_sum(n, 2, 128);
    CHECK(std::abs(w.direct.to_double() - static_cast<double>(s)) < 1e-9 * static_cast<double>(s));
  }
}

TEST_CASE("watson: more correction terms shrink the error") {
  const auto w0 = watson_csc_sum(500, 0, 256), w2 = watson_csc_sum(500, 2, 256);
  const double e0 = std::abs((w0.direct - w0.asymptotic).to_double());
  const double e2 = std::abs((w2.direct - w2.asymptotic).to_double());
  CHECK(e2 < e0);
}
