#include <algorithm>

#include "dioph/arith_funcs.hpp"
#include "dioph/bernoulli.hpp"
#include "dioph/complex_hp.hpp"
#include "dioph/products.hpp"
#include "measures.hpp"
#include "runner.hpp"

namespace dioph::verify::detail {

namespace {

/// |v - target| < tol with certainty
bool within(const HPFloat& v, const HPFloat& target, const mpq_class& tol) {
  return certainly_less(abs(v - target), HPFloat(tol, v.precision()));
}

std::string range(double lo, double hi) { return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]"; }

}  // namespace

std::vector<Check> asymptotics(const GoldenFile& g, const Options& opt) {
  Runner r(Suite::asymptotics);
  const Precision bits = opt.bits;
  const products::ProductOptions po{bits, opt.jobs};
  const mpq_class cent(1, 100);

  r.check("sin product geomean, golden, n = 10^6", [&] {
    const HPFloat v = products::sin_product_geomean(Real::golden(), 1000000, po);
    return Outcome{within(v, HPFloat(mpq_class(1, 2), bits), cent), show(v) + " vs 0.5 +- 0.01"};
  });

  r.check("P_{F_20}(g)", [&] {
    const auto f = products::fibonacci_products(20, po);
    return Outcome{within(f.P_Fn, HPFloat(mpq_class(2407, 1000), bits), cent),
                   "F_20 = " + f.F_n.get_str() + ", P = " + show(f.P_Fn) + " vs 2.407 +- 0.01"};
  });

  r.check("radius of the constructed x, r = 1", [&] {
    const auto x = products::ConstructedExpansion::constant_rate(1);
    const auto est = products::radius_estimate(x, 8, bits);
    const HPFloat target = exp(HPFloat(-1L, bits));
    return Outcome{within(est.via_formula, target, cent) && within(est.via_norm, target, cent),
                   "via formula " + show(est.via_formula) + ", via norm " + show(est.via_norm) + " vs e^-1"};
  });

  r.check("hecke abel limit, golden, r = 0.999", [&] {
    const ComplexHP v = products::hecke_abel_limit(Real::golden(), mpq_class(999, 1000), 100000, bits);
    const HPFloat target = -reciprocal(HPFloat::pi(bits) * 2L);
    const HPFloat dist = sqrt(square(v.re) + square(v.im - target));
    return Outcome{certainly_less(dist, HPFloat(cent, bits)),
                   "(" + show(v.re, 6) + ", " + show(v.im, 6) + "), distance " + show(dist, 4)};
  });

  r.check("q-binomial residual (0.3+0.2i, 0.5i, 60)", [&] {
    const ComplexHP z(HPFloat(mpq_class(3, 10), bits), HPFloat(mpq_class(1, 5), bits));
    const ComplexHP q(HPFloat(bits), HPFloat(mpq_class(1, 2), bits));
    const HPFloat res = products::qbinomial_residual(z, q, 60);
    return Outcome{certainly_less(res, HPFloat(mpq_class(1, mpz_class("10000000000")), bits)), show(res, 4)};
  });

  r.check("eta functional equation, three matrices", [&] {
    const ComplexHP i(HPFloat(bits), HPFloat(1L, bits)), two_i(HPFloat(bits), HPFloat(2L, bits));
    const HPFloat r1 = products::eta_functional_residual(1, 1, 0, 1, i, 50);
    const HPFloat r2 = products::eta_functional_residual(0, -1, 1, 0, i, 50);
    const HPFloat r3 = products::eta_functional_residual(2, 1, 1, 1, two_i, 80);
    const HPFloat tol(mpq_class(1, mpz_class("1000000000000000")), bits);
    return Outcome{certainly_less(r1, tol) && certainly_less(r2, tol) && certainly_less(r3, tol),
                   show(r1, 3) + ", " + show(r2, 3) + ", " + show(r3, 3)};
  });

  r.check("mertens ratio, N = 10^5", [&] {
    const HPFloat v = arith::mertens_ratio(100000, bits);
    return Outcome{within(v, HPFloat(1L, bits), mpq_class(1, 1000)), show(v)};
  });

  r.check("stirling ratio, n = 10^4", [&] {
    const HPFloat v = bernoulli::stirling_check(10000, bits);
    return Outcome{within(v, HPFloat(1L, bits), mpq_class(1, 10000)), show(v)};
  });

  r.check("euler gamma at 64 bits", [&] {
    const HPFloat v = bernoulli::euler_gamma(64);
    const bool ok = v.lower_exact() >= mpq_class(5772156649, 10000000000) &&
                    v.upper_exact() < mpq_class(5772156650, 10000000000);
    return Outcome{ok, v.to_interval_string(15)};
  });

  r.check("1/||jg|| sweep band", [&] {
    const auto& band = g.at("recip_sweep.ratio_band");
    const auto ratios = measure::recip_sweep_ratios(opt);
    const auto b = measure::band_of(ratios);
    const bool inside = std::all_of(ratios.begin(), ratios.end(), [&](double v) { return band.accepts(v); });
    const double width = band.hi() / band.lo();
    return Outcome{inside && width < 1.5, std::to_string(ratios.size()) + " ratios in " + range(b.lo, b.hi) +
                                              ", frozen band " + range(band.lo(), band.hi()) +
                                              ", width ratio " + std::to_string(width)};
  });

  r.check("goldbach ratio near 10^4", [&] {
    Tally t;
    std::string vals;
    for (unsigned long n : measure::kGoldbachNs) {
      const double v = measure::goldbach_ratio(n, opt);
      vals += (vals.empty() ? "" : ", ") + std::to_string(v);
      t.expect(v >= 0.8 && v <= 1.2 && g.at("goldbach.ratio_" + std::to_string(n)).accepts(v),
               "n=" + std::to_string(n));
    }
    return t.outcome(vals);
  });

  return r.take();
}

}  // namespace dioph::verify::detail
