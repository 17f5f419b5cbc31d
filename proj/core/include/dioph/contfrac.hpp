#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "dioph/hpfloat.hpp"
#include "dioph/real.hpp"

namespace dioph::contfrac {

struct Period {
  std::size_t preperiod;  // quotients a_1.. before the repeating block
  std::size_t length;
};

/// Expansion of R(x) = [a_1, a_2, ...] with x = a0 + R(x).
/// p[k], q[k] for 0 <= k <= n with p_0 = 0, q_0 = 1, p_1 = 1, q_1 = a_1.
struct ContinuedFractionExpansion {
  Real x;
  mpz_class a0;
  std::vector<mpz_class> a;  // a[0] is a_1
  std::vector<mpz_class> p;
  std::vector<mpz_class> q;
  bool terminated = false;  // R(x) rational and fully expanded
  std::optional<Period> period;

  std::size_t size() const { return a.size(); }
  const mpz_class& quotient(std::size_t k) const { return a.at(k - 1); }
  mpq_class convergent(std::size_t k) const { return mpq_class(p.at(k), q.at(k)); }
};

/// First n partial quotients of R(x), fewer if x is rational.
/// Exact for rationals and surds (surds also report their period); for
/// named constants and decimals each quotient is certified by interval
/// evaluation. Throws PrecisionExhausted when that fails.
ContinuedFractionExpansion cf_expand(const Real& x, std::size_t n, Precision start = default_precision());

/// As cf_expand, but returns the certified prefix instead of throwing.
ContinuedFractionExpansion cf_expand_certified(const Real& x, std::size_t n,
                                               Precision start = default_precision());

/// Expansion of the rational [a_1, ..., a_n] (a0 = 0).
ContinuedFractionExpansion from_quotients(const std::vector<mpz_class>& a);

/// Canonical quotients of r in [0, 1), at most max_terms of them.
std::vector<mpz_class> rational_quotients(mpq_class r, std::size_t max_terms);

/// v([a_1..a_n]) from the alternating series sum (-1)^(k+1) / (q_{k-1} q_k).
HPFloat value_of(const std::vector<mpz_class>& a, Precision bits);

struct BestApproxResult {
  bool holds;
  bool vacuous;  // x rational and q_{n+1} does not exist
  unsigned long scanned;
};

inline constexpr unsigned long kBestApproxHorizon = 1000000;

/// Scans 1 <= q < q_{n+1}: min_p |qx - p| >= |q_n x - p_n|.
/// Throws HorizonExceeded when q_{n+1} > kBestApproxHorizon.
BestApproxResult best_approx_verify(const Real& x, std::size_t n);

struct OstrowskiDigits {
  mpz_class m;
  Real x;
  std::vector<mpz_class> z;  // z[0] is z_1
  std::size_t t = 0;
};

/// Greedy digits of m in the numeration q_0, q_1, ... of cf.
/// Throws InsufficientConvergents unless some q_n > m.
OstrowskiDigits ostrowski_expand(const mpz_class& m, const ContinuedFractionExpansion& cf);
OstrowskiDigits ostrowski_expand(const mpz_class& m, const Real& x);

/// Checks the digit legality rules for the first digits.size() quotients.
bool ostrowski_legal(const std::vector<mpz_class>& z, const ContinuedFractionExpansion& cf);

/// d_k = (-1)^k (q_k R(x) - p_k) > 0
HPFloat ostrowski_d(const ContinuedFractionExpansion& cf, const HPFloat& frac_x, std::size_t k);

/// sum_{k <= m} (R(kx) - 1/2) through the Ostrowski digits of m.
HPFloat brown_shiue_sum(const Real& x, const mpz_class& m, Precision bits = default_precision());

/// The same sum accumulated term by term.
HPFloat sawtooth_sum_direct(const Real& x, unsigned long m, Precision bits = default_precision());

struct Cylinder {
  mpq_class u;
  mpq_class v;
  mpq_class measure;
};

/// Points of (0, 1) whose expansion starts with i: the open interval (u, v).
Cylinder cylinder_interval(const std::vector<mpz_class>& i);

/// T(x) = R(1/x) iterated n times, starting from R(x).
Real gauss_map_exact(const Real& x, std::size_t n);
HPFloat gauss_map(const Real& x, std::size_t n, Precision bits = default_precision());

/// 1 / ((1 + x) log 2)
HPFloat gauss_density(const HPFloat& x);

/// gamma([a, b]) = log((1 + b) / (1 + a)) / log 2
HPFloat gauss_measure(const mpq_class& a, const mpq_class& b, Precision bits = default_precision());

/// gamma(T^-1 [a, b]): the branches k <= K summed, the rest enclosed by
/// Euler-Maclaurin with a rigorous remainder.
HPFloat gauss_preimage_measure(const mpq_class& a, const mpq_class& b, unsigned long K,
                               Precision bits = default_precision());

struct BoundedFunction {
  std::function<HPFloat(const HPFloat&)> f;
  mpq_class sup_abs;
};

/// sum_k (x + k)^-2 f(1 / (x + k)); the tail past K is enclosed by
/// sup|f| / (x + K).
HPFloat pf_operator_apply(const BoundedFunction& f, const HPFloat& x, unsigned long K);

/// sum_k (x + 1) / ((x + k)(x + k + 1)) f(1 / (x + k)), the transfer
/// operator with respect to the Gauss measure.
HPFloat pf_gauss_operator_apply(const BoundedFunction& f, const HPFloat& x, unsigned long K);

struct TypeRow {
  unsigned long h;
  double inverse_h_norm;  // 1 / (h ||hx||) rounded up, a new running maximum at h
};

struct DiophClassification {
  Real x;
  unsigned long H = 0;
  std::optional<bool> bounded_pq;
  bool bounded_pq_certified = false;
  std::optional<mpz_class> K;  // max a_n, n >= 1, when bounded and certified
  std::vector<TypeRow> empirical_type;
  double sup_inverse_h_norm = 0;  // max over h <= H of 1 / (h ||hx||)
  double tau_estimate = 0;        // max over the sampled n of 1 + log q_{n+1} / log q_n
  std::vector<mpz_class> quotients_used;
};

/// Exact for surds; heuristic (flagged uncertified) otherwise.
DiophClassification classify_type(const Real& x, unsigned long H, Precision bits = default_precision());

}  // namespace dioph::contfrac
