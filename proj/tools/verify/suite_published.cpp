#include <algorithm>

#include "dioph/arith_funcs.hpp"
#include "dioph/bernoulli.hpp"
#include "dioph/contfrac.hpp"
#include "dioph/dioph_sums.hpp"
#include "dioph/products.hpp"
#include "runner.hpp"

namespace dioph::verify::detail {

namespace {

Outcome printed(const HPFloat& v, const char* expect) {
  return {matches_printed(v, expect), show(v, 16) + " vs " + expect + "..."};
}

}  // namespace

std::vector<Check> published_values(const GoldenFile&, const Options& opt) {
  Runner r(Suite::published_values);

  const auto watson = bernoulli::watson_csc_sum(1000, 0, opt.bits);
  r.check("watson S_1000 direct", [&] { return printed(watson.direct, "4477.593932"); });
  r.check("watson S_1000 asymptotic", [&] { return printed(watson.asymptotic, "4477.594019"); });

  const sums::SumOptions so{opt.bits, opt.jobs};
  r.check("sum R(kg) - 1/2, k <= 10^6 (digits)", [&] {
    return printed(contfrac::brown_shiue_sum(Real::golden(), 1000000, opt.bits), "0.941799");
  });
  r.check("sum R(kg) - 1/2, k <= 10^6 (direct)", [&] {
    return printed(sums::sum_fracpart(Real::golden(), 1000000, so), "0.941799");
  });
  r.check("sum R(k pi) - 1/2, k <= 10^6 (digits)", [&] {
    return printed(contfrac::brown_shiue_sum(Real::pi(), 1000000, opt.bits), "19.223414");
  });
  r.check("sum R(k pi) - 1/2, k <= 10^6 (direct)", [&] {
    return printed(sums::sum_fracpart(Real::pi(), 1000000, so), "19.223414");
  });

  r.check("farey N=5", [&] {
    const auto F = arith::farey(5);
    const std::vector<mpq_class> rho{mpq_class(1, 5), mpq_class(1, 4), mpq_class(1, 3), mpq_class(2, 5),
                                     mpq_class(1, 2), mpq_class(3, 5), mpq_class(2, 3), mpq_class(3, 4),
                                     mpq_class(4, 5), mpq_class(1)};
    std::vector<mpq_class> eta_expect{mpq_class(1, 10), mpq_class(1, 20), mpq_class(1, 30), 0, 0, 0,
                                      mpq_class(-1, 30), mpq_class(-1, 20), mpq_class(-1, 10), 0};
    const mpz_class Phi = arith::totient_sum(5);
    std::vector<mpq_class> eta;
    for (std::size_t n = 1; n < F.elements.size(); ++n) {
      mpq_class share(n, Phi);
      share.canonicalize();
      eta.push_back(F.elements[n] - share);
    }
    std::sort(eta.begin(), eta.end());
    std::sort(eta_expect.begin(), eta_expect.end());
    const mpq_class fl = arith::franel_landau_sum(5);
    const bool ok = Phi == 10 && std::equal(rho.begin(), rho.end(), F.elements.begin() + 1, F.elements.end()) &&
                    eta == eta_expect && fl == mpq_class(11, 30);
    return Outcome{ok, "Phi(5) = " + Phi.get_str() + ", sum |eta| = " + fl.get_str()};
  });

  r.check("legendre and gauss lemma", [&] {
    const int l67 = arith::legendre(6, 7), l27 = arith::legendre(2, 7), l313 = arith::legendre(3, 13);
    const unsigned long mu = arith::gauss_mu(3, 13);
    return Outcome{l67 == -1 && l27 == 1 && mu == 2 && l313 == 1,
                   "(6/7) = " + std::to_string(l67) + ", (2/7) = " + std::to_string(l27) +
                       ", mu(3,13) = " + std::to_string(mu) + ", (3/13) = " + std::to_string(l313)};
  });

  r.check("partitions", [&] {
    const mpz_class p4 = products::partition_dp(4), p100 = products::partition_dp(100);
    const HPFloat rad = products::partition_rademacher(100, 10, opt.bits);
    const mpz_class rounded = (rad + HPFloat(mpq_class(1, 2), opt.bits)).floor();
    return Outcome{p4 == 5 && rounded == p100,
                   "p(4) = " + p4.get_str() + ", rademacher(100, 10) = " + show(rad, 14) + ", p(100) = " +
                       p100.get_str()};
  });

  r.check("cf sqrt(11)-3 period (3, 6)", [&] {
    const auto cf = contfrac::cf_expand(Real::parse("sqrt(11)-3"), 40);
    bool ok = cf.period && cf.period->preperiod == 0 && cf.period->length == 2;
    for (std::size_t k = 1; k <= cf.size(); ++k) ok = ok && cf.quotient(k) == (k % 2 == 1 ? 3 : 6);
    return Outcome{ok, "a_1..a_4 = " + cf.a[0].get_str() + "," + cf.a[1].get_str() + "," + cf.a[2].get_str() +
                           "," + cf.a[3].get_str()};
  });

  r.check("cf e-2 pattern, k <= 20", [&] {
    const auto cf = contfrac::cf_expand(Real::parse("e-2"), 60);
    Tally t;
    for (unsigned long k = 1; k <= 20; ++k) {
      t.expect(cf.quotient(3 * k) == 1 && cf.quotient(3 * k - 2) == 1, "a_3k or a_3k-2 != 1 at k=" + std::to_string(k));
      t.expect(cf.quotient(3 * k - 1) == 2 * k, "a_3k-1 != 2k at k=" + std::to_string(k));
    }
    return t.outcome();
  });

  r.check("[1,1,1] = 2/3", [&] {
    const std::vector<mpz_class> a{1, 1, 1};
    const auto cf = contfrac::from_quotients(a);
    const HPFloat v = contfrac::value_of(a, opt.bits);
    const auto canon = contfrac::rational_quotients(mpq_class(2, 3), 10);
    const bool ok = cf.convergent(3) == mpq_class(2, 3) && v.contains(mpq_class(2, 3)) &&
                    canon == std::vector<mpz_class>{1, 2};
    return Outcome{ok, "v([1,1,1]) = " + show(v)};
  });

  return r.take();
}

}  // namespace dioph::verify::detail
