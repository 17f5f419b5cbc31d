#include <numeric>

#include "dioph/arith_funcs.hpp"
#include "dioph/bernoulli.hpp"
#include "dioph/contfrac.hpp"
#include "dioph/products.hpp"
#include "runner.hpp"

namespace dioph::verify::detail {

namespace {

const char* const kExpansionInputs[] = {"golden", "sqrt2-1", "sqrt(11)-3", "(1+sqrt(7))/3", "e-2", "pi-3",
                                        "355/113", "2/3", "1234567/7654321"};

}  // namespace

std::vector<Check> exact_identities(const GoldenFile&, const Options& opt) {
  Runner r(Suite::exact_identities);

  r.check("determinant identity, n <= 500", [&] {
    Tally t;
    for (const char* s : kExpansionInputs) {
      const auto cf = contfrac::cf_expand(Real::parse(s), 500);
      for (std::size_t n = 1; n <= cf.size(); ++n) {
        const mpz_class det = cf.p[n] * cf.q[n - 1] - cf.p[n - 1] * cf.q[n];
        t.expect(det == (n % 2 == 1 ? 1 : -1), std::string(s) + " n=" + std::to_string(n));
      }
    }
    return t.outcome();
  });

  r.check("farey neighbor identity, N <= 300", [&] {
    Tally t;
    for (unsigned long N = 1; N <= 300; ++N) {
      const auto F = arith::farey(N);
      bool ok = F.elements.size() == arith::totient_sum(N) + 1;
      for (std::size_t i = 0; i + 1 < F.elements.size(); ++i) {
        const mpq_class &x = F.elements[i], &y = F.elements[i + 1];
        ok = ok && x.get_den() * y.get_num() - x.get_num() * y.get_den() == 1;
      }
      t.expect(ok, "N=" + std::to_string(N));
    }
    return t.outcome();
  });

  r.check("ford tangency criterion", [&] {
    // Against the geometry: tangent iff |z1 - z2|^2 = (r1 + r2)^2, disjoint iff larger.
    std::vector<arith::FordCircle> circles;
    for (long b = 1; b <= 14; ++b)
      for (long a = -b; a <= 2 * b; ++a)
        if (std::gcd(a, b) == 1) circles.emplace_back(a, b);
    Tally t;
    for (std::size_t i = 0; i < circles.size(); ++i)
      for (std::size_t j = i + 1; j < circles.size(); ++j) {
        const auto &c1 = circles[i], &c2 = circles[j];
        const auto z1 = c1.center(), z2 = c2.center();
        const mpq_class dx = z1.re - z2.re, dy = z1.im - z2.im, rs = c1.radius() + c2.radius();
        const mpq_class d2 = dx * dx + dy * dy, r2 = rs * rs;
        const auto tan = arith::ford_tangency(c1, c2);
        bool ok = d2 >= r2 && tan.tangent == (d2 == r2);
        if (tan.tangent) {
          const auto& p = *tan.touch_point;
          const mpq_class e1 = (p.re - z1.re) * (p.re - z1.re) + (p.im - z1.im) * (p.im - z1.im);
          const mpq_class e2 = (p.re - z2.re) * (p.re - z2.re) + (p.im - z2.im) * (p.im - z2.im);
          ok = ok && e1 == c1.radius() * c1.radius() && e2 == c2.radius() * c2.radius();
        }
        t.expect(ok, "C(" + c1.a().get_str() + "," + c1.b().get_str() + ") C(" + c2.a().get_str() + "," +
                         c2.b().get_str() + ")");
      }
    return t.outcome();
  });

  r.check("hermite identity", [&] {
    Tally t;
    for (const char* s : {"7/3", "-5/4", "0", "golden", "sqrt2", "-sqrt(11)", "(1+sqrt(7))/3", "22/7"})
      for (unsigned long n = 1; n <= 30; ++n)
        t.expect(arith::hermite_identity(Real::parse(s), n).holds(), std::string(s) + " n=" + std::to_string(n));
    return t.outcome();
  });

  r.check("gauss identity", [&] {
    Tally t;
    for (const char* s : {"golden", "sqrt2", "sqrt(11)-3", "(1+sqrt(7))/3", "sqrt(3)/7", "5*sqrt(2)"})
      for (unsigned long n = 1; n <= 40; ++n)
        t.expect(arith::gauss_identity(Real::parse(s), n).holds(), std::string(s) + " n=" + std::to_string(n));
    return t.outcome();
  });

  r.check("stern sum", [&] {
    Tally t;
    for (unsigned long m = 1; m <= 40; ++m)
      for (unsigned long n = 1; n <= 40; ++n)
        if (std::gcd(m, n) == 1) t.expect(arith::stern_sum(m, n).holds(), std::to_string(m) + "," + std::to_string(n));
    return t.outcome();
  });

  const auto primes = arith::primes_up_to(200);
  r.check("S(q,p) + S(p,q), gauss lemma, reciprocity, odd primes <= 200", [&] {
    Tally t;
    for (unsigned long p : primes)
      for (unsigned long q : primes) {
        if (p == 2 || q == 2 || p == q) continue;
        const std::string at = std::to_string(q) + "," + std::to_string(p);
        const unsigned long h = (p - 1) / 2, k = (q - 1) / 2;
        t.expect(arith::S_sum(q, p) + arith::S_sum(p, q) == h * k, "S sum at " + at);
        const unsigned long mu = arith::gauss_mu(q, p);
        t.expect((mu % 2 == 0 ? 1 : -1) == arith::legendre(q, p), "gauss lemma at " + at);
        t.expect(arith::S_sum(q, p) % 2 == mu % 2, "S = mu mod 2 at " + at);
        t.expect(arith::legendre(p, q) * arith::legendre(q, p) == ((h * k) % 2 == 0 ? 1 : -1), "reciprocity at " + at);
      }
    return t.outcome();
  });

  r.check("sum d(k) = sum [n/k], n <= 10^4", [&] {
    const unsigned long M = 10000;
    std::vector<unsigned long> d(M + 1);
    for (unsigned long k = 1; k <= M; ++k)
      for (unsigned long m = k; m <= M; m += k) ++d[m];
    Tally t;
    unsigned long lhs = 0;
    for (unsigned long n = 1; n <= M; ++n) {
      lhs += d[n];
      unsigned long rhs = 0;
      for (unsigned long k = 1; k <= n; ++k) rhs += n / k;
      t.expect(lhs == rhs && arith::divisor_summatory(n) == lhs, "n=" + std::to_string(n));
    }
    for (unsigned long n : {1UL, 17UL, 1000UL, 10000UL}) {
      const auto ds = arith::divisor_sum_identity(n, opt.bits);
      t.expect(ds.lhs == ds.rhs && ds.rhs == ds.hyperbola, "identity at n=" + std::to_string(n));
    }
    return t.outcome();
  });

  r.check("faulhaber vs brute force, b <= 200, k <= 10", [&] {
    Tally t;
    for (int k = 0; k <= 10; ++k) {
      std::vector<mpz_class> prefix(201);
      for (unsigned long m = 1; m <= 200; ++m) {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), m, k);
        prefix[m] = prefix[m - 1] + pw;
      }
      for (unsigned long a = 1; a <= 200; ++a)
        for (unsigned long b = a; b <= 200; ++b)
          t.expect(bernoulli::faulhaber_sum(a, b, k) == prefix[b] - prefix[a - 1],
                   "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(k) + ")");
    }
    return t.outcome();
  });

  r.check("raabe residual within interval width", [&] {
    Tally t;
    for (const char* s : {"0", "1/3", "2/7", "golden", "pi-3", "e-2", "sqrt(11)-3"})
      for (int k = 0; k <= 12; ++k)
        for (unsigned long q = 1; q <= 7; ++q) {
          const HPFloat res = bernoulli::raabe_residual(k, q, Real::parse(s), opt.bits);
          t.expect(res.contains_zero(), std::string(s) + " k=" + std::to_string(k) + " q=" + std::to_string(q) +
                                            " residual " + res.to_interval_string(4));
        }
    return t.outcome();
  });

  r.check("dedekind sum h-periodicity", [&] {
    Tally t;
    for (long k = 1; k <= 60; ++k)
      for (long h = -k; h <= k; ++h)
        if (std::gcd(h, k) == 1)
          t.expect(products::dedekind_sum(h + k, k) == products::dedekind_sum(h, k),
                   "s(" + std::to_string(h) + "," + std::to_string(k) + ")");
    return t.outcome();
  });

  return r.take();
}

}  // namespace dioph::verify::detail
