#include <algorithm>

#include "dioph/bernoulli.hpp"
#include "measures.hpp"
#include "runner.hpp"

namespace dioph::verify::detail {

namespace {

std::string range(double lo, double hi) { return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]"; }

}  // namespace

std::vector<Check> golden_properties(const GoldenFile& g, const Options& opt) {
  Runner r(Suite::golden_properties);
  const Precision bits = opt.bits;

  r.check("erdos-turan constant on held-out pi", [&] {
    const HPFloat C(mpq_class(g.at("erdos_turan.C").value), bits);
    Tally t;
    auto points = measure::erdos_turan_points(measure::kEtFitSet, measure::kEtNs, opt);
    const auto held = measure::erdos_turan_points({measure::kEtHeldOut}, measure::kEtNs, opt);
    points.insert(points.end(), held.begin(), held.end());
    HPFloat worst(bits);
    for (const auto& p : points) {
      t.expect(!violated_le(p.D, C * p.B), p.x + " N=" + std::to_string(p.N));
      if (p.x == measure::kEtHeldOut) worst = max(worst, p.D / p.B);
    }
    return t.outcome("C = " + std::to_string(g.at("erdos_turan.C").value) + ", held-out max D/B " + show(worst, 4));
  });

  r.check("erdos reciprocal sum band", [&] {
    const double v = measure::erdos_ratio(opt);
    return Outcome{v >= 0.5 && v <= 3 && g.at("erdos.recipj_ratio_m1e4").accepts(v), std::to_string(v)};
  });

  r.check("nathanson constants", [&] {
    Tally t;
    for (const auto& pt : measure::nathanson_sweep(opt))
      for (std::size_t l = 0; l < pt.lemma.size(); ++l) {
        const auto& frozen = g.at("nathanson." + pt.lemma[l] + ".max_constant");
        t.expect(pt.constant[l] < 20 && pt.constant[l] <= frozen.hi(),
                 pt.lemma[l] + " q=" + std::to_string(pt.q) + " constant " + std::to_string(pt.constant[l]));
      }
    return t.outcome();
  });

  r.check("sum ||ng|| drift", [&] {
    const double C = g.at("norm_drift.C").value;
    Tally t;
    double worst = 0;
    auto all = measure::kNormDriftFit;
    all.insert(all.end(), measure::kNormDriftHeldOut.begin(), measure::kNormDriftHeldOut.end());
    for (unsigned long N : all) {
      const double v = measure::norm_drift_scaled(N, opt);
      worst = std::max(worst, v);
      t.expect(v <= C, "N=" + std::to_string(N) + " scaled drift " + std::to_string(v));
    }
    return t.outcome("C = " + std::to_string(C) + ", largest " + std::to_string(worst));
  });

  r.check("watson asymptotic error", [&] {
    const double c = g.at("watson.c").value;
    Tally t;
    for (unsigned long n : {100UL, 150UL, 200UL, 300UL, 500UL, 700UL, 1000UL, 1500UL, 2000UL}) {
      t.expect(measure::watson_scaled(n, opt) <= c, "n=" + std::to_string(n) + " beyond c/n");
      const auto w0 = bernoulli::watson_csc_sum(n, 0, bits), w1 = bernoulli::watson_csc_sum(n, 1, bits);
      t.expect(certainly_less(abs(w1.direct - w1.asymptotic), abs(w0.direct - w0.asymptotic)),
               "J=1 no better at n=" + std::to_string(n));
    }
    return t.outcome("c = " + std::to_string(c));
  });

  r.check("quadratic weyl sums for sqrt2-1", [&] {
    const auto& band = g.at("weyl_quadratic.scaled_band");
    Tally t;
    for (unsigned long N : measure::kWeylQuadNs) {
      const double v = measure::weyl_quadratic_scaled(Real::parse("sqrt2-1"), N, opt);
      t.expect(band.accepts(v), "N=" + std::to_string(N) + " " + std::to_string(v));
    }
    return t.outcome("band " + range(band.lo(), band.hi()));
  });

  r.check("divisor residual", [&] {
    const double v = measure::divisor_residual_scaled(10000, opt);
    return Outcome{v < 2 && g.at("divisor.residual_scaled_n1e4").accepts(v), "|residual|/sqrt n = " + std::to_string(v)};
  });

  r.check("franel-landau sum (monitoring)", [&] {
    const double v = measure::franel_landau_scaled(1000);
    return Outcome{g.at("franel_landau.scaled_N1000").accepts(v), "sum |eta| / N^0.6 at N = 1000: " + std::to_string(v)};
  });

  return r.take();
}

}  // namespace dioph::verify::detail
