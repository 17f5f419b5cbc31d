#include "dioph/arith_funcs.hpp"

#include <cmath>
#include <numeric>

#include "dioph/bernoulli.hpp"
#include "dioph/core_arith.hpp"
#include "dioph/errors.hpp"
#include "detail.hpp"

namespace dioph::arith {

namespace {

void require_odd_prime(unsigned long p, const char* what) {
  if (p == 2 || !is_prime(p)) throw DomainError(std::string(what) + " needs an odd prime, got " + std::to_string(p));
}

}  // namespace

IdentityCheck hermite_identity(const Real& x, unsigned long n) {
  if (n < 1) throw DomainError("hermite_identity needs n >= 1");
  IdentityCheck c{0, floor_int(x * Real(static_cast<long>(n)))};
  for (unsigned long k = 0; k < n; ++k) c.lhs += floor_int(x + Real(detail::ratio(k, n)));
  return c;
}

IdentityCheck gauss_identity(const Real& x, unsigned long n) {
  if (!x.is_surd()) throw DomainError("gauss_identity needs an irrational quadratic surd x");
  if (x.sign() <= 0) throw DomainError("gauss_identity needs x > 0");
  const mpz_class nx = floor_int(x * Real(static_cast<long>(n)));
  IdentityCheck c{0, nx * n};
  for (unsigned long k = 1; k <= n; ++k) c.lhs += floor_int(x * Real(static_cast<long>(k)));
  const Real inv = x.reciprocal();
  for (mpz_class k = 1; k <= nx; ++k) c.lhs += floor_int(inv * Real(k));
  return c;
}

IdentityCheck stern_sum(unsigned long m, unsigned long n) {
  if (m < 1 || n < 1) throw DomainError("stern_sum needs m, n >= 1");
  if (std::gcd(m, n) != 1) throw DomainError("stern_sum needs gcd(m, n) = 1");
  IdentityCheck c{0, mpz_class(m - 1) * (n - 1) / 2};
  for (unsigned long k = 1; k < n; ++k) c.lhs += mpz_class(k) * m / n;
  return c;
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<unsigned long> primes_up_to(unsigned long n) {
  std::vector<unsigned long> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1);
  for (unsigned long p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (unsigned long m = p * p; m <= n; m += p) composite[m] = true;
  }
  return out;
}

int legendre(const mpz_class& a, unsigned long p) {
  require_odd_prime(p, "legendre");
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p);
  if (r == 0) throw DomainError("legendre needs p not dividing a");
  mpz_powm_ui(r.get_mpz_t(), r.get_mpz_t(), (p - 1) / 2, mpz_class(p).get_mpz_t());
  return r == 1 ? 1 : -1;
}

unsigned long gauss_mu(unsigned long q, unsigned long p) {
  require_odd_prime(p, "gauss_mu");
  if (q % p == 0) throw DomainError("gauss_mu needs p not dividing q");
  unsigned long mu = 0;
  for (unsigned long k = 1; k <= (p - 1) / 2; ++k)
    if ((k * (q % p)) % p > (p - 1) / 2) ++mu;
  return mu;
}

unsigned long S_sum(unsigned long q, unsigned long p) {
  require_odd_prime(p, "S_sum");
  unsigned long s = 0;
  for (unsigned long j = 1; j <= (p - 1) / 2; ++j) s += j * q / p;
  return s;
}

mpz_class divisor_summatory(unsigned long n) {
  const unsigned long s = static_cast<unsigned long>(std::sqrt(static_cast<double>(n)));
  unsigned long r = s;
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  mpz_class t = 0;
  for (unsigned long k = 1; k <= r; ++k) t += n / k;
  return 2 * t - mpz_class(r) * r;
}

DivisorSums divisor_sum_identity(unsigned long n, Precision bits) {
  if (n < 1) throw DomainError("divisor_sum_identity needs n >= 1");
  std::vector<unsigned> d(n + 1);
  for (unsigned long k = 1; k <= n; ++k)
    for (unsigned long m = k; m <= n; m += k) ++d[m];
  DivisorSums r{n, 0, 0, divisor_summatory(n), HPFloat(bits)};
  for (unsigned long k = 1; k <= n; ++k) {
    r.lhs += d[k];
    r.rhs += n / k;
  }
  const HPFloat N(static_cast<long>(n), bits);
  r.residual = HPFloat(r.lhs, bits) - N * log(N) - (bernoulli::euler_gamma(bits) * 2L - 1L) * N;
  return r;
}

}  // namespace dioph::arith
