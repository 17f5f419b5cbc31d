#include <algorithm>
#include <cmath>

#include "dioph/contfrac.hpp"
#include "dioph/core_arith.hpp"
#include "dioph/errors.hpp"

namespace dioph::contfrac {

namespace {

constexpr std::size_t kSampleQuotients = 60;

double log_mpz(const mpz_class& v) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

DiophClassification classify_type(const Real& x, unsigned long H, Precision bits) {
  if (x.is_rational()) throw DomainError("classify_type needs an irrational x");
  if (H < 1) throw DomainError("classify_type needs H >= 1");
  DiophClassification c;
  c.x = x;
  c.H = H;

  ContinuedFractionExpansion cf = cf_expand_certified(x, kSampleQuotients, bits);
  if (cf.period) {
    const std::size_t span = cf.period->preperiod + cf.period->length;
    if (cf.size() < span) cf = cf_expand(x, span);
    c.bounded_pq = true;
    c.bounded_pq_certified = true;
    c.K = *std::max_element(cf.a.begin(), cf.a.begin() + static_cast<std::ptrdiff_t>(span));
  } else {
    // Unbounded quotients show up as a steady stream of new running maxima.
    std::size_t records = 0;
    mpz_class best = 0;
    for (const auto& ak : cf.a)
      if (ak > best) {
        best = ak;
        ++records;
      }
    if (records >= std::max<std::size_t>(6, cf.size() / 6)) c.bounded_pq = false;
  }
  c.quotients_used = cf.a;

  for (std::size_t k = std::max<std::size_t>(2, cf.size() / 2); k + 1 < cf.q.size(); ++k) {
    if (cf.q[k] < 2) continue;
    c.tau_estimate = std::max(c.tau_estimate, 1.0 + log_mpz(cf.q[k + 1]) / log_mpz(cf.q[k]));
  }

  const Real r = frac_part(x);
  c.empirical_type = with_adaptive_precision(
      x,
      [&](Precision p) {
        std::vector<TypeRow> rows;
        const HPFloat X = enclose(r, p);
        double running = 0;
        for (unsigned long h = 1; h <= H; ++h) {
          const HPFloat d = dist_nearest(X * static_cast<long>(h));
          if (!d.positive()) throw IntervalStraddlesInteger("||hx|| not separated from 0 at h = " + std::to_string(h));
          const double inv = reciprocal(d * static_cast<long>(h)).upper();
          if (inv > running) {
            running = inv;
            rows.push_back({h, inv});
          }
        }
        return rows;
      },
      bits);
  c.sup_inverse_h_norm = c.empirical_type.empty() ? 0 : c.empirical_type.back().inverse_h_norm;
  return c;
}

}  // namespace dioph::contfrac
