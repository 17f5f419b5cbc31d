#pragma once

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

#include "dioph/hpfloat.hpp"
#include "dioph/real.hpp"

namespace dioph::bernoulli {

inline constexpr int kMaxDegree = 200;

class BernoulliPoly {
 public:
  BernoulliPoly(int degree, std::vector<mpq_class> coefficients)
      : degree_(degree), coeffs_(std::move(coefficients)) {}

  int degree() const { return degree_; }
  /// Ascending powers: coefficients()[j] multiplies x^j.
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  mpq_class operator()(const mpq_class& x) const;
  HPFloat operator()(const HPFloat& x) const;

  std::vector<mpq_class> derivative() const;
  mpq_class integral_0_1() const;
  std::string to_string() const;

 private:
  int degree_;
  std::vector<mpq_class> coeffs_;
};

/// B_k(x) for 0 <= k <= kMaxDegree, from a table built once on first use.
const BernoulliPoly& bernoulli_poly(int k);
mpq_class bernoulli_number(int k);

/// P_k(t) = B_k(R(t)).
mpq_class periodic_bernoulli(int k, const mpq_class& t);
HPFloat periodic_bernoulli(int k, const HPFloat& t);
HPFloat periodic_bernoulli(int k, const Real& t, Precision bits);

/// sum_{a <= m <= b} m^k
mpq_class faulhaber_sum(const mpz_class& a, const mpz_class& b, int k);

/// |q B_k(qx) - q^k sum_{j<q} B_k(x + j/q)|, each side evaluated separately.
HPFloat raabe_residual(int k, unsigned long q, const Real& x, Precision bits);

/// Upper bound for sup_{[0,1]} |B_K|.
HPFloat bernoulli_sup(int K, Precision bits);

/// A function for Euler-Maclaurin summation. `derivative(j, x)` returns
/// f^(j)(x) for 0 <= j <= K. If `abs_integral` is empty, f^(K) is assumed
/// to keep one sign on [a, b] so that the integral of |f^(K)| equals
/// |f^(K-1)(b) - f^(K-1)(a)|.
struct EMFunction {
  std::function<HPFloat(int order, const HPFloat& x)> derivative;
  std::function<HPFloat(const HPFloat& a, const HPFloat& b)> integral;
  std::function<HPFloat(int K, const HPFloat& a, const HPFloat& b)> abs_integral;
};

struct EMResult {
  HPFloat estimate;
  HPFloat remainder_bound;
};

/// sum_{a < m <= b} f(m) = estimate + remainder, |remainder| <= remainder_bound.
EMResult euler_maclaurin(const EMFunction& f, long a, long b, int K, Precision bits);

/// Euler's constant from H_n - log n with the Euler-Maclaurin correction
/// through B_{2J}; the enclosure includes the remainder bound.
HPFloat euler_gamma_at(unsigned long n, int J, Precision bits);
HPFloat euler_gamma(Precision bits);

/// n! / (n^n e^-n sqrt(2 pi n))
HPFloat stirling_check(unsigned long n, Precision bits);

struct WatsonResult {
  HPFloat direct;
  HPFloat asymptotic;
};

/// S_n = sum_{m<n} csc(m pi / n), directly and by the asymptotic series
/// truncated after J correction terms.
WatsonResult watson_csc_sum(unsigned long n, int J, Precision bits);

}  // namespace dioph::bernoulli
