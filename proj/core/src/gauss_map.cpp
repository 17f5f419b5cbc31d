#include "dioph/contfrac.hpp"
#include "dioph/core_arith.hpp"
#include "dioph/errors.hpp"

namespace dioph::contfrac {

Real gauss_map_exact(const Real& x, std::size_t n) {
  if (!x.is_exact()) throw DomainError("gauss_map_exact needs a rational or surd input");
  Real y = frac_part(x);
  for (std::size_t k = 0; k < n; ++k) {
    if (y.sign() == 0) throw DomainError("the Gauss map is undefined at 0 (iterate " + std::to_string(k) + ")");
    y = frac_part(y.reciprocal());
  }
  return y;
}

HPFloat gauss_map(const Real& x, std::size_t n, Precision bits) {
  if (x.is_exact()) return eval(gauss_map_exact(x, n), bits);
  const mpq_class tolerance = mpq_class(1, mpz_class(1) << static_cast<unsigned long>(bits - 1));
  return with_adaptive_precision(
      x,
      [&](Precision p) {
        HPFloat y = frac_part(enclose(x, p));
        for (std::size_t k = 0; k < n; ++k) {
          if (y.contains_zero()) throw IntervalStraddlesInteger("Gauss map iterate touches 0");
          y = frac_part(reciprocal(y));
        }
        if (x.refinable() && y.upper_exact() - y.lower_exact() > tolerance)
          throw IntervalStraddlesInteger("Gauss map iterate too wide");
        return y.with_precision(bits);
      },
      bits + 8 * static_cast<Precision>(n) + 16);
}

HPFloat gauss_density(const HPFloat& x) { return reciprocal((x + 1L) * HPFloat::ln2(x.precision())); }

HPFloat gauss_measure(const mpq_class& a, const mpq_class& b, Precision bits) {
  if (a < 0 || b > 1 || a > b) throw DomainError("gauss_measure needs 0 <= a <= b <= 1");
  return log(HPFloat(mpq_class((1 + b) / (1 + a)), bits)) / HPFloat::ln2(bits);
}

HPFloat gauss_preimage_measure(const mpq_class& a, const mpq_class& b, unsigned long K, Precision bits) {
  if (a < 0 || b > 1 || a > b) throw DomainError("gauss_preimage_measure needs 0 <= a <= b <= 1");
  if (K < 1) throw DomainError("gauss_preimage_measure needs K >= 1");
  const Precision p = bits + 32;
  // g(k) = log(1 + 1/(k+a)) - log(1 + 1/(k+b)) is the unnormalized
  // measure of the k-th branch [1/(k+b), 1/(k+a)].
  auto g = [&](const mpq_class& k) {
    return log(HPFloat(mpq_class((k + a + 1) * (k + b) / ((k + a) * (k + b + 1))), p));
  };
  HPFloat sum(p);
  for (unsigned long k = 1; k <= K; ++k) sum += g(mpq_class(k));

  // Tail over k > K by Euler-Maclaurin of order 2. g'' > 0, so the
  // remainder is at most |g'(K)| / 12.
  const mpq_class Kq(K);
  auto H = [&](const mpq_class& y) {
    const HPFloat Y(y, p), Y1(mpq_class(y + 1), p);
    return Y1 * log(Y1) - Y * log(Y);
  };
  const mpq_class dg = 1 / (Kq + a + 1) - 1 / (Kq + a) - 1 / (Kq + b + 1) + 1 / (Kq + b);
  HPFloat tail = H(Kq + b) - H(Kq + a) - g(Kq) / 2L - HPFloat(mpq_class(dg / 12), p);
  tail = tail.widened(HPFloat(mpq_class(abs(dg) / 12), p));
  return ((sum + tail) / HPFloat::ln2(p)).with_precision(bits);
}

HPFloat pf_operator_apply(const BoundedFunction& f, const HPFloat& x, unsigned long K) {
  if (K < 10) throw DomainError("pf_operator_apply needs K >= 10");
  const Precision p = x.precision();
  HPFloat sum(p);
  for (unsigned long k = 1; k <= K; ++k) {
    const HPFloat y = x + static_cast<long>(k);
    sum += f.f(reciprocal(y)) / square(y);
  }
  return sum.widened(HPFloat(mpq_class(f.sup_abs / K), p));
}

HPFloat pf_gauss_operator_apply(const BoundedFunction& f, const HPFloat& x, unsigned long K) {
  if (K < 10) throw DomainError("pf_gauss_operator_apply needs K >= 10");
  const Precision p = x.precision();
  HPFloat sum(p);
  const HPFloat x1 = x + 1L;
  for (unsigned long k = 1; k <= K; ++k) {
    const HPFloat y = x + static_cast<long>(k);
    sum += f.f(reciprocal(y)) * x1 / (y * (y + 1L));
  }
  // sum_{k > K} (x+1)/((x+k)(x+k+1)) = (x+1)/(x+K+1) <= 2/(K+1)
  return sum.widened(HPFloat(mpq_class(2 * f.sup_abs / (K + 1)), p));
}

}  // namespace dioph::contfrac
