#include <algorithm>

#include "detail.hpp"
#include "dioph/core_arith.hpp"
#include "dioph/errors.hpp"
#include "dioph/products.hpp"

namespace dioph::products {

namespace {

ComplexHP one(Precision p) { return ComplexHP::real(HPFloat(1L, p)); }

ComplexHP times_i(const ComplexHP& z) { return {-z.im, z.re}; }

ComplexHP widen(const ComplexHP& z, const HPFloat& r) { return {z.re.widened(r), z.im.widened(r)}; }

// e^{pi i t} for rational t, reduced mod 2 first.
ComplexHP cis_pi(mpq_class t, Precision p) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  if (f % 2 != 0) f -= 1;
  t -= f;
  return ComplexHP::cis(HPFloat::pi(p) * HPFloat(t, p));
}

bool inside_unit_disc(const ComplexHP& z) { return certainly_less(norm_sq(z), HPFloat(1L, z.precision())); }

}  // namespace

HPFloat qbinomial_residual(const ComplexHP& z, const ComplexHP& q, unsigned long N) {
  if (!inside_unit_disc(z) || !inside_unit_disc(q)) throw DomainError("qbinomial_residual needs |z| < 1 and |q| < 1");
  const Precision p = std::max(z.precision(), q.precision());
  ComplexHP F = one(p), f(p), zn = one(p), qn = one(p), prod = one(p);
  for (unsigned long n = 1; n <= N; ++n) {
    zn *= z;
    qn *= q;
    const ComplexHP d = one(p) - qn;
    prod *= d;
    F += zn / prod;
    f += zn / (d * HPFloat(static_cast<long>(n), p));
  }
  return abs(F - exp(f));
}

ComplexHP hecke_abel_limit(const Real& x, const mpq_class& r, unsigned long N, Precision bits) {
  if (r < 0 || r >= 1) throw DomainError("hecke_abel_limit needs 0 <= r < 1");
  if (r == 0) return ComplexHP(bits);
  return with_adaptive_precision(
      x,
      [&](Precision p) {
        const detail::TermEvaluator ev(x, p);
        const HPFloat two_pi = HPFloat::pi(p) * 2L, R(r, p);
        ComplexHP s(p);
        HPFloat rn(1L, p);
        for (unsigned long n = 1; n <= N; ++n) {
          rn *= R;
          const HPFloat t = ev.frac(n);
          s += ComplexHP::cis(two_pi * t) * (rn * t);
        }
        rn *= R;
        return widen(s * (1L - R), rn);
      },
      bits);
}

mpq_class dedekind_sum(const mpz_class& h, const mpz_class& k) {
  if (k < 1) throw DomainError("dedekind_sum needs k >= 1");
  if (gcd(h, k) != 1) throw DomainError("dedekind_sum needs gcd(h, k) = 1");
  mpz_class hm;
  mpz_fdiv_r(hm.get_mpz_t(), h.get_mpz_t(), k.get_mpz_t());
  // hr/k is never an integer for 0 < r < k, so P_1(hr/k) = R(hr/k) - 1/2.
  mpz_class s = 0, t;
  for (mpz_class r = 1; r < k; ++r) {
    t = hm * r;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), k.get_mpz_t());
    s += r * t;
  }
  mpq_class v(s, k * k);
  v.canonicalize();
  return v - detail::ratio(k - 1, 4);
}

ComplexHP eta(const ComplexHP& tau, unsigned long N) {
  if (!tau.im.positive()) throw DomainError("eta needs Im tau > 0");
  const Precision p = tau.precision();
  const HPFloat pi = HPFloat::pi(p);
  const ComplexHP i_tau = times_i(tau);
  ComplexHP v = exp(i_tau * (pi / 12L));
  for (unsigned long m = 1; m <= N; ++m) v *= one(p) - exp(i_tau * (pi * 2L * static_cast<long>(m)));
  // |prod_{m>N}(1 - u_m) - 1| <= e^s - 1 with s = sum_{m>N} |u_m| = rho^{N+1}/(1 - rho).
  const HPFloat rho = exp(-(pi * 2L * tau.im));
  const HPFloat s = pow(rho, N + 1) / (1L - rho);
  return widen(v, abs(v) * expm1(s));
}

ComplexHP eta_epsilon(long a, long b, long c, long d, Precision bits) {
  if (c <= 0) throw DomainError("eta_epsilon needs c > 0");
  if (mpz_class(a) * d - mpz_class(b) * c != 1) throw DomainError("eta_epsilon needs ad - bc = 1");
  return cis_pi(detail::ratio(a + d, 12 * c) + dedekind_sum(-d, c), bits);
}

HPFloat eta_functional_residual(long a, long b, long c, long d, const ComplexHP& tau, unsigned long N) {
  if (mpz_class(a) * d - mpz_class(b) * c != 1) throw DomainError("the matrix must have ad - bc = 1");
  if (c < 0) throw DomainError("eta_functional_residual needs c >= 0");
  const Precision p = tau.precision();
  if (c == 0) {
    const ComplexHP shifted{tau.re + b * d, tau.im};
    return abs(eta(shifted, N) - cis_pi(detail::ratio(b * d, 12), p) * eta(tau, N));
  }
  const ComplexHP den = tau * HPFloat(c, p) + ComplexHP::real(HPFloat(d, p));
  const ComplexHP num = tau * HPFloat(a, p) + ComplexHP::real(HPFloat(b, p));
  const ComplexHP lhs = eta(num / den, N);
  const ComplexHP rhs = eta_epsilon(a, b, c, d, p) * sqrt(-times_i(den)) * eta(tau, N);
  return abs(lhs - rhs);
}

std::vector<mpz_class> partition_table(unsigned long n) {
  std::vector<mpz_class> P(n + 1);
  P[0] = 1;
  for (unsigned long m = 1; m <= n; ++m) {
    mpz_class s = 0;
    for (unsigned long j = 1;; ++j) {
      const unsigned long g1 = j * (3 * j - 1) / 2;
      if (g1 > m) break;
      const unsigned long g2 = g1 + j;
      mpz_class t = P[m - g1];
      if (g2 <= m) t += P[m - g2];
      if (j % 2 == 1)
        s += t;
      else
        s -= t;
    }
    P[m] = std::move(s);
  }
  return P;
}

mpz_class partition_dp(unsigned long n) { return partition_table(n).back(); }

ComplexHP kloosterman_A(unsigned long k, unsigned long n, Precision bits) {
  if (k < 1) throw DomainError("kloosterman_A needs k >= 1");
  ComplexHP s(bits);
  const mpz_class K(k);
  for (unsigned long h = 0; h < k; ++h) {
    if (gcd(mpz_class(h), K) != 1) continue;
    s += cis_pi(dedekind_sum(h, K) - detail::ratio(mpz_class(2) * n * h, K), bits);
  }
  return s;
}

HPFloat partition_rademacher(unsigned long n, unsigned long K, Precision bits) {
  if (n < 1) throw DomainError("partition_rademacher needs n >= 1");
  const HPFloat pi = HPFloat::pi(bits);
  const HPFloat lambda(detail::ratio(24 * mpz_class(n) - 1, 24), bits);
  const HPFloat sl = sqrt(lambda);
  const HPFloat C = pi * sqrt(HPFloat(mpq_class(2, 3), bits));
  HPFloat s(bits);
  for (unsigned long k = 1; k <= K; ++k) {
    const long kl = static_cast<long>(k);
    const HPFloat t = C * sl / kl;
    // d/dn [sinh(C sqrt(lambda)/k) / sqrt(lambda)]
    const HPFloat deriv = (C / kl) * cosh(t) / (lambda * 2L) - sinh(t) / (lambda * sl * 2L);
    s += kloosterman_A(k, n, bits).re * sqrt(HPFloat(kl, bits)) * deriv;
  }
  return s / (pi * sqrt(HPFloat(2L, bits)));
}

}  // namespace dioph::products
