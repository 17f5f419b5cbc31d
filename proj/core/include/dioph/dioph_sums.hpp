#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "dioph/contfrac.hpp"
#include "dioph/hpfloat.hpp"
#include "dioph/real.hpp"

namespace dioph::sums {

inline constexpr unsigned long kSumHorizon = 100000000;

enum class SumKind {
  recip,     // 1 / ||jx||
  recipj,    // 1 / (j ||jx||)
  norm,      // ||jx||
  sin,       // 1 / |sin(pi j x)|
  fracpart,  // R(jx) - 1/2
};

SumKind parse_sum_kind(const std::string& name);
std::string to_string(SumKind kind);

struct SumOptions {
  Precision bits = default_precision();
  unsigned jobs = 1;
};

/// sum_{from <= j <= to} of the kind's term. Rational x raises DomainError
/// when a term has a pole. Blocks are fixed-size and merged in order, so
/// the result does not depend on jobs.
HPFloat segment_sum(SumKind kind, const Real& x, unsigned long from, unsigned long to, const SumOptions& opt = {});

HPFloat sum_recip_norm(const Real& x, unsigned long m, const SumOptions& opt = {});
HPFloat sum_recip_sin(const Real& x, unsigned long m, const SumOptions& opt = {});
HPFloat sum_recip_jnorm(const Real& x, unsigned long m, const SumOptions& opt = {});
HPFloat sum_norm(const Real& x, unsigned long N, const SumOptions& opt = {});
HPFloat sum_fracpart(const Real& x, unsigned long m, const SumOptions& opt = {});

struct SumRecord {
  unsigned long m;
  HPFloat value;
  HPFloat bound_value;
  HPFloat ratio;
};

enum class Normalization { none, mlogm, log2m, m };

Normalization parse_normalization(const std::string& name);

/// Running sum recorded at m = start, start + step, ..., <= stop.
/// bound_value holds the normalizer (1 for none).
std::vector<SumRecord> sweep(SumKind kind, const Real& x, unsigned long start, unsigned long stop,
                             unsigned long step, Normalization norm, const SumOptions& opt = {});

/// A nondecreasing positive psi for "x is of type < psi":
/// ||hx|| >= 1 / (h psi(h)) for all h >= 1.
class TypeFunction {
 public:
  enum class Kind { constant, power_log, table };

  static TypeFunction constant(const mpq_class& K, bool certified = false);
  /// K * max(1, log h)^(1 + eps); max(1, .) keeps psi(1) positive.
  static TypeFunction power_log(const mpq_class& K, const mpq_class& eps);
  /// Step function: psi(h) = value of the last step with start <= h.
  static TypeFunction table(std::vector<std::pair<unsigned long, mpq_class>> steps);

  Kind kind() const { return kind_; }
  bool certified() const { return certified_; }
  HPFloat operator()(unsigned long h, Precision bits) const;
  std::string describe() const;

 private:
  TypeFunction(Kind k, bool certified) : kind_(k), certified_(certified) {}
  Kind kind_;
  bool certified_;
  mpq_class K_;
  mpq_class eps_;
  std::vector<std::pair<unsigned long, mpq_class>> steps_;
};

/// Surds: the constant 2(K+1), certified. Otherwise the running maximum of
/// 1 / (h ||hx||) from the classification table, uncertified and only
/// meaningful up to its horizon.
TypeFunction certificate_for(const contfrac::DiophClassification& c);

/// psi(h) >= 1 / (h ||hx||) at every record row of the table.
bool certificate_consistent(const TypeFunction& psi, const contfrac::DiophClassification& c,
                            Precision bits = default_precision());

/// sum over 1 <= j <= q_n with j + h0 < q_{n+1} of 1 / ||(j + h0) x||
/// against 6 q_n (psi(q_n) + log q_n).
SumRecord bound_h0(const Real& x, const TypeFunction& psi, std::size_t n, const mpz_class& h0,
                   const SumOptions& opt = {});

/// sum_{j <= m} 1 / ||jx|| against 12 m (psi(m) + log m).
SumRecord bound_jalpha(const Real& x, const TypeFunction& psi, unsigned long m, const SumOptions& opt = {});

/// sum_{j <= m} 1 / (j ||jx||) against 24 ((log m)^2 + psi(m) + sum_{j <= m} psi(j) / j).
SumRecord bound_hhalpha(const Real& x, const TypeFunction& psi, unsigned long m, const SumOptions& opt = {});

/// sum_{j <= m} 1 / ||jx|| over m log m; m >= 2.
SumRecord bound_lower(const Real& x, unsigned long m, const SumOptions& opt = {});

/// a_1 = 1, a_{k+1} = q_k^(k-1) + 1 for k < levels: an x whose reciprocal
/// sums beat q_n^n.
std::vector<mpz_class> counterexample_quotients(std::size_t levels);

struct CounterexampleRow {
  std::size_t n;
  mpz_class q_n;
  HPFloat sum;     // sum_{j <= q_n} 1 / ||jx||
  mpz_class q_pow;  // q_n^n
  bool exceeds;
};

/// Rows n = 1..levels-2 for x = [counterexample_quotients(levels)].
std::vector<CounterexampleRow> counterexample_check(std::size_t levels, Precision bits = default_precision());

struct NathansonRow {
  std::string lemma;
  HPFloat sum;
  HPFloat bracket;
  HPFloat constant;  // sum / bracket, 0 when the bracket vanishes
};

struct NathansonParams {
  mpz_class a;
  unsigned long q;
  mpq_class U;
  mpq_class V;
  unsigned long n;
  unsigned long h;
};

/// The four sums with their brackets, in lemma order. Throws
/// BadRationalApproximation unless gcd(a, q) = 1 and |alpha - a/q| <= 1/q^2.
std::vector<NathansonRow> nathanson_sums(const Real& alpha, const NathansonParams& p,
                                         Precision bits = default_precision());

}  // namespace dioph::sums
