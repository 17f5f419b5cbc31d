#include <algorithm>
#include <cmath>

#include "dioph/real.hpp"
#include "dioph/verify.hpp"
#include "measures.hpp"

namespace dioph::verify {

namespace {

double round_sig(double x, int digits, bool up) {
  if (x == 0) return 0;
  const double e = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(std::fabs(x)))));
  return (up ? std::ceil(x * e) : std::floor(x * e)) / e;
}

GoldenEntry band_entry(measure::Band b, int digits, std::string note) {
  const double lo = round_sig(b.lo, digits, false), hi = round_sig(b.hi, digits, true);
  return {(lo + hi) / 2, (hi - lo) / 2, "oracle", std::move(note)};
}

GoldenEntry regression_entry(double v, std::string note) {
  return {v, std::fabs(v) * 1e-6, "oracle", std::move(note)};
}

GoldenEntry constant_entry(double v, std::string note) { return {round_sig(v, 3, true), 0, "fit", std::move(note)}; }

}  // namespace

GoldenFile fit_golden(const Options& opt) {
  GoldenFile g;

  g.set("recip_sweep.ratio_band",
        band_entry(measure::band_of(measure::recip_sweep_ratios(opt)), 4,
                   "sum_{j<=m} 1/||jg|| / (m log m), m = 5000:40000:100"));

  g.set("erdos.recipj_ratio_m1e4",
        regression_entry(measure::erdos_ratio(opt), "sum_{j<=m} 1/(j ||jg||) / (log m)^2 at m = 10^4"));

  const auto nat = measure::nathanson_sweep(opt);
  for (std::size_t l = 0; l < nat.front().lemma.size(); ++l) {
    double mx = 0;
    for (const auto& pt : nat) mx = std::max(mx, pt.constant[l]);
    g.set("nathanson." + nat.front().lemma[l] + ".max_constant",
          regression_entry(mx, "max of sum/bracket over (a, q) = (p_k, q_k) of g, k = 6..12"));
  }

  double et = 0;
  for (const auto& p : measure::erdos_turan_points(measure::kEtFitSet, measure::kEtNs, opt))
    et = std::max(et, (p.D / p.B).upper());
  g.set("erdos_turan.C", constant_entry(et, "max D_N / B over g and sqrt2-1, N = 10^2, 10^3, 10^4, m = N"));

  g.set("franel_landau.scaled_N1000",
        regression_entry(measure::franel_landau_scaled(1000), "monitoring only: sum |eta| / N^0.6"));

  g.set("divisor.residual_scaled_n1e4",
        regression_entry(measure::divisor_residual_scaled(10000, opt), "|residual| / sqrt n"));

  std::vector<double> wq;
  const Real s2 = Real::parse("sqrt2-1");
  for (unsigned long N : measure::kWeylQuadNs) wq.push_back(measure::weyl_quadratic_scaled(s2, N, opt));
  g.set("weyl_quadratic.scaled_band", band_entry(measure::band_of(wq), 3,
                                                 "|sum e(n^2 x)| / sqrt(N log N), x = sqrt2-1, N = 10^2..10^4"));

  double drift = 0;
  for (unsigned long N : measure::kNormDriftFit) drift = std::max(drift, measure::norm_drift_scaled(N, opt));
  g.set("norm_drift.C", constant_entry(drift, "max |sum ||ng|| - N/4| / (log N)^2, N = 10^3, 10^4, 10^5"));

  double wc = 0;
  for (unsigned long n : measure::kWatsonNs) wc = std::max(wc, measure::watson_scaled(n, opt));
  g.set("watson.c", constant_entry(wc, "max n |S_n - asymptotic|, J = 0, n = 100..2000"));

  for (unsigned long n : measure::kGoldbachNs)
    g.set("goldbach.ratio_" + std::to_string(n),
          regression_entry(measure::goldbach_ratio(n, opt), "2 R(n) / (n^2 S(n)), primes <= 10^5 in S"));

  return g;
}

}  // namespace dioph::verify
