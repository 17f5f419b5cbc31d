#include "measures.hpp"

#include <algorithm>
#include <cmath>

#include "dioph/arith_funcs.hpp"
#include "dioph/bernoulli.hpp"
#include "dioph/contfrac.hpp"
#include "dioph/dioph_sums.hpp"
#include "dioph/equidist.hpp"

namespace dioph::verify::measure {

namespace {

sums::SumOptions sum_opt(const Options& opt) { return {opt.bits, opt.jobs}; }

}  // namespace

Band band_of(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return {*lo, *hi};
}

std::vector<double> recip_sweep_ratios(const Options& opt) {
  const auto rows = sums::sweep(sums::SumKind::recip, Real::golden(), 5000, 40000, 100,
                                sums::Normalization::mlogm, sum_opt(opt));
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.ratio.to_double());
  return out;
}

double erdos_ratio(const Options& opt) {
  const unsigned long m = 10000;
  const HPFloat s = sums::sum_recip_jnorm(Real::golden(), m, sum_opt(opt));
  return (s / square(log(HPFloat(static_cast<long>(m), opt.bits)))).to_double();
}

std::vector<NathansonPoint> nathanson_sweep(const Options& opt) {
  const Real g = Real::golden();
  const auto cf = contfrac::cf_expand(g, 13);
  std::vector<NathansonPoint> out;
  for (std::size_t k = 6; k <= 12; ++k) {
    const unsigned long q = cf.q[k].get_ui();
    const sums::NathansonParams prm{cf.p[k], q, mpq_class(q), mpq_class(q), q * q, 1};
    NathansonPoint pt{q, {}, {}};
    for (const auto& row : sums::nathanson_sums(g, prm, opt.bits)) {
      pt.lemma.push_back(row.lemma);
      pt.constant.push_back(row.constant.to_double());
    }
    out.push_back(std::move(pt));
  }
  return out;
}

std::vector<EtPoint> erdos_turan_points(const std::vector<std::string>& xs, const std::vector<unsigned long>& Ns,
                                        const Options& opt) {
  std::vector<EtPoint> out;
  for (const auto& name : xs) {
    const Real x = Real::parse(name);
    for (unsigned long N : Ns) {
      HPFloat D = equidist::discrepancy(equidist::PointSet::kronecker(x, N, opt.bits));
      HPFloat B = equidist::erdos_turan_bracket(x, N, N, opt.bits);
      out.push_back({name, N, std::move(D), std::move(B)});
    }
  }
  return out;
}

double franel_landau_scaled(unsigned long N) {
  return arith::franel_landau_sum(N).get_d() / std::pow(static_cast<double>(N), 0.6);
}

double divisor_residual_scaled(unsigned long n, const Options& opt) {
  const auto r = arith::divisor_sum_identity(n, opt.bits);
  return (abs(r.residual) / sqrt(HPFloat(static_cast<long>(n), opt.bits))).to_double();
}

double weyl_quadratic_scaled(const Real& x, unsigned long N, const Options& opt) {
  const auto w = equidist::weyl_quadratic(x, N, opt.bits);
  const HPFloat Nf(static_cast<long>(N), opt.bits);
  return sqrt(w.lhs_sq / (Nf * log(Nf))).to_double();
}

double norm_drift_scaled(unsigned long N, const Options& opt) {
  const HPFloat s = sums::sum_norm(Real::golden(), N, sum_opt(opt));
  const HPFloat Nf(static_cast<long>(N), opt.bits);
  return (abs(s - Nf / 4L) / square(log(Nf))).to_double();
}

double watson_scaled(unsigned long n, const Options& opt) {
  const auto w = bernoulli::watson_csc_sum(n, 0, opt.bits);
  return (abs(w.direct - w.asymptotic) * static_cast<long>(n)).to_double();
}

double goldbach_ratio(unsigned long n, const Options& opt) {
  return arith::goldbach_ratio(n, 100000, opt.bits, opt.jobs).ratio.to_double();
}

}  // namespace dioph::verify::measure
