#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "dioph/complex_hp.hpp"
#include "dioph/hpfloat.hpp"
#include "dioph/real.hpp"

namespace dioph::products {

inline constexpr unsigned long kMaxProductLength = 100'000'000;

struct ProductOptions {
  Precision bits = default_precision();
  unsigned jobs = 1;
};

/// The partial quotients a_1 = 1, a_{n+1} = [e^{phi(n) q_n}] with phi(n) = r
/// (radius e^-r) or phi(n) = n (radius 0). Quotients are kept exactly while
/// they fit in kMaxExactBits; later ones are known only through phi.
class ConstructedExpansion {
 public:
  static constexpr unsigned long kMaxExactBits = 1UL << 20;

  static ConstructedExpansion constant_rate(const mpq_class& r);
  static ConstructedExpansion linear_rate();

  /// phi(n)
  HPFloat rate(std::size_t n, Precision bits) const;
  const std::vector<mpz_class>& a() const { return a_; }  // a[0] = a_1
  const std::vector<mpz_class>& q() const { return q_; }  // q[0] = q_0 = 1
  std::size_t exact_terms() const { return a_.size(); }
  /// The cylinder of the exact prefix, which contains x.
  HPFloat enclose(Precision bits) const;
  std::string describe() const;

 private:
  ConstructedExpansion(bool linear, mpq_class r);
  bool linear_;
  mpq_class r_;
  std::vector<mpz_class> a_;
  std::vector<mpz_class> q_;
};

/// sum_{k<=n} log|sin k pi x|
HPFloat log_sin_product(const Real& x, unsigned long n, const ProductOptions& opt = {});
/// (prod_{k<=n} |sin k pi x|)^{1/n}, evaluated as exp of the mean log.
HPFloat sin_product_geomean(const Real& x, unsigned long n, const ProductOptions& opt = {});

/// sum_{r<=n} log|2 sin pi r w|, summed term by term.
HPFloat log_two_sin_product(const Real& w, unsigned long n, const ProductOptions& opt = {});
/// P_n(w) = prod_{r<=n} |2 sin pi r w|
HPFloat two_sin_product(const Real& w, unsigned long n, const ProductOptions& opt = {});

/// F_1 = F_2 = 1
mpz_class fibonacci(unsigned long n);

struct FibonacciProducts {
  unsigned long n;
  mpz_class F_n;
  HPFloat P_Fn;               // P_{F_n}(g)
  HPFloat ratio_printed;      // P_{F_{n-1}}(g) / F_n
  HPFloat ratio_corrected;    // P_{F_n - 1}(g) / F_n
  HPFloat target_printed;     // P_{F_n}(g) / (2 pi sqrt 5)
  HPFloat target_corrected;   // P_{F_n}(g) sqrt 5 / (2 pi)
};

/// g = (sqrt 5 - 1)/2; needs n >= 3.
FibonacciProducts fibonacci_products(unsigned long n, const ProductOptions& opt = {});

struct PowerWindow {
  HPFloat c1;  // min over 2 <= k <= n of log P_k(w) / log k
  HPFloat c2;  // max of the same
};

PowerWindow power_window(const Real& w, unsigned long n, const ProductOptions& opt = {});

/// Estimates of R_x = liminf ||qx||^{1/q} = liminf a_{k+1}^{-1/q_k}; both are
/// minima over the convergent indices k in the tail window [ceil(n/2), n].
struct RadiusEstimate {
  std::string x;
  std::size_t n;
  HPFloat via_norm;     // ||q_k x||^{1/q_k}
  HPFloat via_formula;  // a_{k+1}^{-1/q_k}
};

RadiusEstimate radius_estimate(const Real& x, std::size_t n, Precision bits = default_precision());
RadiusEstimate radius_estimate(const ConstructedExpansion& x, std::size_t n, Precision bits = default_precision());

/// R1 from min over m in [n/2, n] of (prod_{k<=m} |sin k pi x|)^{1/m},
/// rho1 from min over the same m of |sin m pi x|^{1/m}; ratio = R1 / (rho1/2).
struct RadiusRelation {
  HPFloat R1_est;
  HPFloat rho1_est;
  HPFloat ratio;
};

RadiusRelation radius_relation_check(const Real& x, unsigned long n, const ProductOptions& opt = {});
RadiusRelation radius_relation_check(const ConstructedExpansion& x, unsigned long n, const ProductOptions& opt = {});

/// |F_N(z,q) - exp(f_N(z,q))| with F = 1 + sum z^n / prod_{k<=n}(1 - q^k)
/// and f = sum z^n / (n (1 - q^n)), both cut at N terms.
HPFloat qbinomial_residual(const ComplexHP& z, const ComplexHP& q, unsigned long N);

/// (1 - r) sum_{n<=N} R(nx) (r e(x))^n, widened by the tail bound r^{N+1}.
ComplexHP hecke_abel_limit(const Real& x, const mpq_class& r, unsigned long N, Precision bits = default_precision());

/// s(h, k) = sum_{r=1}^{k-1} (r/k) P_1(hr/k); gcd(h, k) = 1, k >= 1.
mpq_class dedekind_sum(const mpz_class& h, const mpz_class& k);

/// e^{pi i tau/12} prod_{m<=N} (1 - e^{2 pi i m tau}), widened by the tail of the product.
ComplexHP eta(const ComplexHP& tau, unsigned long N);

/// exp(pi i ((a + d)/(12c) + s(-d, c))), c > 0
ComplexHP eta_epsilon(long a, long b, long c, long d, Precision bits);

/// |eta((a tau + b)/(c tau + d)) - eps (-i(c tau + d))^{1/2} eta(tau)| for ad - bc = 1.
/// c = 0 is the translation eta(tau + b d) = e^{pi i b d/12} eta(tau).
HPFloat eta_functional_residual(long a, long b, long c, long d, const ComplexHP& tau, unsigned long N);

/// p(0..n) by the pentagonal-number recurrence.
std::vector<mpz_class> partition_table(unsigned long n);
mpz_class partition_dp(unsigned long n);

/// A_k(n) = sum_{0<=h<k, (h,k)=1} e^{pi i s(h,k) - 2 pi i n h/k}
ComplexHP kloosterman_A(unsigned long k, unsigned long n, Precision bits);

/// The first K terms of Rademacher's series for p(n), n >= 1.
HPFloat partition_rademacher(unsigned long n, unsigned long K, Precision bits = default_precision());

}  // namespace dioph::products
