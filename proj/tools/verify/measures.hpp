#pragma once

#include <string>
#include <vector>

#include "dioph/real.hpp"
#include "dioph/verify.hpp"

// Quantities measured both by the golden-file fit and by the suites that
// check against it.
namespace dioph::verify::measure {

struct Band {
  double lo;
  double hi;
};

Band band_of(const std::vector<double>& v);

/// sum_{j<=m} 1/||jg|| / (m log m) for m = 5000, 5100, ..., 40000.
std::vector<double> recip_sweep_ratios(const Options& opt);

/// sum_{j<=10^4} 1/(j ||jg||) / (log 10^4)^2
double erdos_ratio(const Options& opt);

struct NathansonPoint {
  unsigned long q;
  std::vector<std::string> lemma;
  std::vector<double> constant;
};
/// Golden ratio with (a, q) = (p_k, q_k), k = 6..12.
std::vector<NathansonPoint> nathanson_sweep(const Options& opt);

struct EtPoint {
  std::string x;
  unsigned long N;
  HPFloat D;
  HPFloat B;
};
/// D_N of the n x sequence against the Erdos-Turan bracket with m = N.
std::vector<EtPoint> erdos_turan_points(const std::vector<std::string>& xs, const std::vector<unsigned long>& Ns,
                                        const Options& opt);
inline const std::vector<std::string> kEtFitSet{"golden", "sqrt2-1"};
inline const std::string kEtHeldOut = "pi";
inline const std::vector<unsigned long> kEtNs{100, 1000, 10000};

/// sum |eta_{n,N}| / N^0.6
double franel_landau_scaled(unsigned long N);

/// |sum d(k) - n log n - (2 gamma - 1) n| / sqrt n
double divisor_residual_scaled(unsigned long n, const Options& opt);

/// |sum_{n<=N} e(n^2 x)| / sqrt(N log N)
double weyl_quadratic_scaled(const Real& x, unsigned long N, const Options& opt);
inline const std::vector<unsigned long> kWeylQuadNs{100, 1000, 10000};

/// |sum_{n<=N} ||ng|| - N/4| / (log N)^2
double norm_drift_scaled(unsigned long N, const Options& opt);
inline const std::vector<unsigned long> kNormDriftFit{1000, 10000, 100000};
inline const std::vector<unsigned long> kNormDriftHeldOut{3000, 30000, 70000};

/// n |S_n direct - asymptotic| with J = 0
double watson_scaled(unsigned long n, const Options& opt);
inline const std::vector<unsigned long> kWatsonNs{100, 200, 500, 1000, 2000};

/// 2 R(n) / (n^2 S(n)) with primes up to 10^5 in the singular series
double goldbach_ratio(unsigned long n, const Options& opt);
inline const std::vector<unsigned long> kGoldbachNs{9999, 10001, 10003};

}  // namespace dioph::verify::measure
