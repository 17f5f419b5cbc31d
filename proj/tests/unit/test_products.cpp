#include <doctest.h>

#include <cmath>

#include "dioph/core_arith.hpp"
#include "dioph/products.hpp"
#include "oracles.hpp"

using namespace dioph;
using namespace dioph::products;

TEST_CASE("sine products against long double loops") {
  const long double g = (std::sqrt(5.0L) - 1) / 2;
  long double logsum = 0, two = 1;
  for (unsigned long k = 1; k <= 500; ++k) {
    const long double s = std::fabs(std::sin(M_PIl * k * g));
    logsum += std::log(s);
    two *= 2 * s;
  }
  const Real x = Real::golden();
  CHECK(log_sin_product(x, 500).to_double() == doctest::Approx(static_cast<double>(logsum)).epsilon(1e-10));
  CHECK(sin_product_geomean(x, 500).to_double() ==
        doctest::Approx(static_cast<double>(std::exp(logsum / 500))).epsilon(1e-10));
  CHECK(two_sin_product(x, 500).to_double() == doctest::Approx(static_cast<double>(two)).epsilon(1e-9));
}

TEST_CASE("fibonacci numbers and products") {
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(20) == 6765);
  const auto f = fibonacci_products(20);
  CHECK(f.F_n == 6765);
  CHECK(f.P_Fn.to_double() == doctest::Approx(2.407).epsilon(1e-3));
  CHECK_THROWS_AS(fibonacci_products(2), DomainError);
}

TEST_CASE("partitions: pentagonal recurrence against counting") {
  const auto ref = oracle::partitions(400);
  const auto table = partition_table(400);
  REQUIRE(table.size() == ref.size());
  for (std::size_t n = 0; n < ref.size(); ++n) CHECK(table[n] == ref[n]);
  CHECK(partition_dp(4) == 5);
  CHECK(partition_dp(100) == mpz_class("190569292"));
}

TEST_CASE("rademacher rounds to p(n)") {
  for (unsigned long n : {1UL, 10UL, 57UL, 100UL, 250UL}) {
    const unsigned long K = static_cast<unsigned long>(std::ceil(std::sqrt(static_cast<double>(n)))) + 2;
    const HPFloat r = partition_rademacher(n, K, 256);
    const mpz_class rounded = (r + HPFloat(mpq_class(1, 2), 256)).floor();
    CHECK(rounded == partition_dp(n));
  }
}

TEST_CASE("dedekind sums match the naive definition") {
  for (long k = 1; k <= 40; ++k)
    for (long h = -k; h <= 2 * k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      CHECK(dedekind_sum(h, k) == oracle::dedekind(h, k));
    }
}

TEST_CASE("property: dedekind reciprocity s(h,k) + s(k,h) = ((h/k + k/h + 1/(hk)) - 3) / 12") {
  for (long h = 1; h <= 30; ++h)
    for (long k = 1; k <= 30; ++k) {
      if (std::gcd(h, k) != 1) continue;
      mpq_class rhs = mpq_class(h, k) + mpq_class(k, h) + mpq_class(1, h * k) - 3;
      rhs.canonicalize();
      CHECK(dedekind_sum(h, k) + dedekind_sum(k, h) == rhs / 12);
    }
}

TEST_CASE("eta transformation residuals are tiny") {
  const ComplexHP i(HPFloat(128), HPFloat(1L, 128));
  CHECK(eta_functional_residual(0, -1, 1, 0, i, 40).to_double() < 1e-20);
  CHECK(eta_functional_residual(1, 1, 0, 1, i, 40).to_double() < 1e-20);
  CHECK_THROWS_AS(eta_functional_residual(1, 1, 1, 1, i, 40), DomainError);
}

TEST_CASE("q-binomial identity") {
  const ComplexHP z(HPFloat(mpq_class(3, 10), 128), HPFloat(mpq_class(1, 5), 128));
  const ComplexHP q(HPFloat(128), HPFloat(mpq_class(1, 2), 128));
  CHECK(qbinomial_residual(z, q, 60).to_double() < 1e-12);
}

TEST_CASE("radius estimates") {
  const auto r = radius_estimate(ConstructedExpansion::constant_rate(1), 8, 128);
  CHECK(r.via_formula.to_double() == doctest::Approx(std::exp(-1.0)).epsilon(1e-6));
  const auto g = radius_estimate(Real::golden(), 30, 128);
  CHECK(g.via_formula.to_double() > 0.9);
}
