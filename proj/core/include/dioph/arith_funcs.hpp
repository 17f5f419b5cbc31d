#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "dioph/hpfloat.hpp"
#include "dioph/real.hpp"

namespace dioph::arith {

struct FareySequence {
  unsigned long N;
  std::vector<mpq_class> elements;  // 0 = rho_0 < rho_1 < ... < rho_Phi = 1
};

FareySequence farey(unsigned long N);

/// phi(0..N), phi(0) = 0
std::vector<unsigned long> totients(unsigned long N);
/// Phi(N) = sum_{k<=N} phi(k)
mpz_class totient_sum(unsigned long N);
/// Phi(N) / (3 N^2 / pi^2)
HPFloat mertens_ratio(unsigned long N, Precision bits = default_precision());

/// sum_{n=1}^{Phi(N)} |rho_{n,N} - n/Phi(N)|
mpq_class franel_landau_sum(unsigned long N);

struct GaussianRational {
  mpq_class re;
  mpq_class im;
  bool operator==(const GaussianRational&) const = default;
};

/// The circle tangent to the real axis at a/b with radius 1/(2b^2).
class FordCircle {
 public:
  FordCircle(mpz_class a, mpz_class b);
  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  GaussianRational center() const;
  mpq_class radius() const;

 private:
  mpz_class a_, b_;
};

struct Tangency {
  bool tangent;
  std::optional<GaussianRational> touch_point;
};

/// Tangent iff (bc - ad)^2 = 1, otherwise disjoint.
Tangency ford_tangency(const FordCircle& c1, const FordCircle& c2);

struct IdentityCheck {
  mpz_class lhs;
  mpz_class rhs;
  bool holds() const { return lhs == rhs; }
};

/// sum_{k=0}^{n-1} [x + k/n] against [nx]
IdentityCheck hermite_identity(const Real& x, unsigned long n);
/// sum_{k<=n} [kx] + sum_{k<=[nx]} [k/x] against n[nx]; x > 0 irrational.
IdentityCheck gauss_identity(const Real& x, unsigned long n);
/// sum_{k=1}^{n-1} [km/n] against (m-1)(n-1)/2; gcd(m, n) = 1.
IdentityCheck stern_sum(unsigned long m, unsigned long n);

bool is_prime(unsigned long p);
std::vector<unsigned long> primes_up_to(unsigned long n);

/// Euler's criterion; p an odd prime not dividing a.
int legendre(const mpz_class& a, unsigned long p);
/// Number of k <= (p-1)/2 whose residue kq mod p exceeds (p-1)/2.
unsigned long gauss_mu(unsigned long q, unsigned long p);
/// S(q, p) = sum_{j=1}^{(p-1)/2} [jq/p]
unsigned long S_sum(unsigned long q, unsigned long p);

struct DivisorSums {
  unsigned long n;
  mpz_class lhs;         // sum_{k<=n} d(k), by sieve
  mpz_class rhs;         // sum_{k<=n} [n/k]
  mpz_class hyperbola;   // 2 sum_{k<=s} [n/k] - s^2, s = [sqrt n]
  HPFloat residual;      // lhs - n log n - (2 gamma - 1) n
};

DivisorSums divisor_sum_identity(unsigned long n, Precision bits = default_precision());
/// The hyperbola-method value alone, O(sqrt n).
mpz_class divisor_summatory(unsigned long n);

struct SingularSeries {
  HPFloat value;          // encloses the full product
  HPFloat truncated;      // primes p <= P plus every prime dividing n
  HPFloat tail_log_bound; // log of the largest possible tail factor
};

/// prod_{p | n} (1 - (p-1)^-2) * prod_{p not| n} (1 + (p-1)^-3)
SingularSeries singular_series(unsigned long n, unsigned long P, Precision bits = default_precision());

/// sum over ordered prime triples p1 + p2 + p3 = n of log p1 log p2 log p3
HPFloat ternary_R(unsigned long n, Precision bits = default_precision(), unsigned jobs = 1);

struct GoldbachRatio {
  unsigned long n;
  HPFloat R;
  HPFloat S;
  HPFloat ratio;  // 2 R / (n^2 S)
};

GoldbachRatio goldbach_ratio(unsigned long n, unsigned long P, Precision bits = default_precision(),
                             unsigned jobs = 1);

}  // namespace dioph::arith
