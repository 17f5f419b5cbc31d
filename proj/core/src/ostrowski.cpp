#include <stdexcept>

#include "dioph/contfrac.hpp"
#include "dioph/core_arith.hpp"
#include "dioph/errors.hpp"
#include "detail.hpp"

namespace dioph::contfrac {

namespace {

ContinuedFractionExpansion expansion_beyond(const Real& x, const mpz_class& m) {
  for (std::size_t n = 16;; n *= 2) {
    ContinuedFractionExpansion cf = cf_expand(x, n);
    if (cf.q.back() > m || cf.terminated) return cf;
  }
}

}  // namespace

bool ostrowski_legal(const std::vector<mpz_class>& z, const ContinuedFractionExpansion& cf) {
  if (z.empty() || z.back() == 0 || z.size() > cf.size()) return false;
  for (std::size_t k = 1; k <= z.size(); ++k) {
    const mpz_class& zk = z[k - 1];
    if (zk < 0) return false;
    const mpz_class cap = k == 1 ? mpz_class(cf.quotient(1) - 1) : cf.quotient(k);
    if (zk > cap) return false;
    if (k >= 2 && zk == cf.quotient(k) && z[k - 2] != 0) return false;
  }
  return true;
}

OstrowskiDigits ostrowski_expand(const mpz_class& m, const ContinuedFractionExpansion& cf) {
  if (m < 1) throw DomainError("ostrowski_expand needs m >= 1");
  std::size_t top = 0;
  while (top < cf.q.size() && cf.q[top] <= m) ++top;
  if (top == cf.q.size())
    throw InsufficientConvergents("need a convergent denominator above " + m.get_str() + "; have q_" +
                                  std::to_string(cf.size()) + " = " + cf.q.back().get_str());
  OstrowskiDigits d{m, cf.x, std::vector<mpz_class>(top), 0};
  mpz_class rem = m;
  for (std::size_t j = top; j-- > 0;) {
    mpz_fdiv_qr(d.z[j].get_mpz_t(), rem.get_mpz_t(), rem.get_mpz_t(), cf.q[j].get_mpz_t());
  }
  while (!d.z.empty() && d.z.back() == 0) d.z.pop_back();
  d.t = d.z.size();
  if (rem != 0 || !ostrowski_legal(d.z, cf)) throw std::logic_error("greedy Ostrowski digits of " + m.get_str() + " are illegal");
  return d;
}

OstrowskiDigits ostrowski_expand(const mpz_class& m, const Real& x) {
  return ostrowski_expand(m, expansion_beyond(x, m));
}

HPFloat ostrowski_d(const ContinuedFractionExpansion& cf, const HPFloat& frac_x, std::size_t k) {
  const Precision p = frac_x.precision();
  HPFloat d = frac_x * HPFloat(cf.q.at(k), p) - HPFloat(cf.p.at(k), p);
  return k % 2 == 0 ? d : -d;
}

HPFloat brown_shiue_sum(const Real& x, const mpz_class& m, Precision bits) {
  if (m < 1) throw DomainError("brown_shiue_sum needs m >= 1");
  const ContinuedFractionExpansion cf = expansion_beyond(x, m);
  const OstrowskiDigits od = ostrowski_expand(m, cf);
  const Precision p = bits + 2 * static_cast<Precision>(mpz_sizeinbase(m.get_mpz_t(), 2)) + 16;
  const HPFloat X = enclose(frac_part(x), p);
  const HPFloat half(mpq_class(1, 2), p);
  HPFloat sum(p);
  mpz_class m_prev = 0;
  for (std::size_t k = 1; k <= od.t; ++k) {
    const mpz_class& zk = od.z[k - 1];
    if (zk == 0) continue;
    const mpz_class& q_prev = cf.q[k - 1];
    const mpq_class inner = mpq_class(m_prev) + detail::ratio(zk * q_prev + 1, 2);
    HPFloat term = HPFloat(zk, p) * (half - ostrowski_d(cf, X, k - 1) * HPFloat(inner, p));
    if (k % 2 == 1)
      sum -= term;
    else
      sum += term;
    m_prev += zk * q_prev;
  }
  return sum;
}

HPFloat sawtooth_sum_direct(const Real& x, unsigned long m, Precision bits) {
  if (auto* v = x.as_rational()) {
    mpq_class s = 0;
    for (unsigned long k = 1; k <= m; ++k) {
      const mpq_class t = *v * k;
      mpz_class f;
      mpz_fdiv_q(f.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
      s += t - f - mpq_class(1, 2);
    }
    return HPFloat(s, bits);
  }
  return with_adaptive_precision(
      x,
      [&](Precision p) {
        const HPFloat X = enclose(x, p);
        const HPFloat half(mpq_class(1, 2), p);
        HPFloat s(p);
        for (unsigned long k = 1; k <= m; ++k) s += frac_part(X * static_cast<long>(k)) - half;
        return s;
      },
      bits + 64);
}

}  // namespace dioph::contfrac
