#include <algorithm>

#include "dioph/contfrac.hpp"
#include "dioph/core_arith.hpp"
#include "dioph/errors.hpp"
#include "dioph/products.hpp"

namespace dioph::products {

namespace {

Precision bits_for(const mpz_class& v) { return static_cast<Precision>(mpz_sizeinbase(v.get_mpz_t(), 2)); }

// v^{1/q} = exp(log(v)/q)
HPFloat root_of(const HPFloat& v, const mpz_class& q) { return exp(log(v) / HPFloat(q, v.precision())); }

// ||q x||^{1/q} from an enclosure of x.
HPFloat norm_root(const HPFloat& X, const mpz_class& q) {
  const HPFloat d = dist_nearest(X * q);
  if (!d.positive()) throw IntervalStraddlesInteger("||qx|| not separated from 0 at q = " + q.get_str());
  return root_of(d, q);
}

HPFloat window_min(const std::vector<HPFloat>& v) {
  HPFloat m = v.front();
  for (const auto& e : v) m = min(m, e);
  return m;
}

}  // namespace

ConstructedExpansion::ConstructedExpansion(bool linear, mpq_class r) : linear_(linear), r_(std::move(r)) {
  a_ = {1};
  q_ = {1, 1};
  for (std::size_t n = 1;; ++n) {
    const HPFloat probe = rate(n, 64) * HPFloat(q_[n], 64) / HPFloat::ln2(64);
    if (probe.upper() > static_cast<double>(kMaxExactBits)) break;
    const Precision start = static_cast<Precision>(probe.upper()) + 64;
    mpz_class next = with_adaptive_precision(
        [&](Precision p) { return exp(rate(n, p) * HPFloat(q_[n], p)).floor(); }, start, 4 * start);
    q_.push_back(next * q_[n] + q_[n - 1]);
    a_.push_back(std::move(next));
  }
}

ConstructedExpansion ConstructedExpansion::constant_rate(const mpq_class& r) {
  if (r <= 0) throw DomainError("constant_rate needs r > 0");
  return ConstructedExpansion(false, r);
}

ConstructedExpansion ConstructedExpansion::linear_rate() { return ConstructedExpansion(true, 0); }

HPFloat ConstructedExpansion::rate(std::size_t n, Precision bits) const {
  return linear_ ? HPFloat(static_cast<long>(n), bits) : HPFloat(r_, bits);
}

HPFloat ConstructedExpansion::enclose(Precision bits) const {
  const contfrac::Cylinder c = contfrac::cylinder_interval(a_);
  const Precision p = std::max(bits, 2 * bits_for(q_.back()) + 64);
  return HPFloat::from_endpoints(std::min(c.u, c.v), std::max(c.u, c.v), p);
}

std::string ConstructedExpansion::describe() const {
  return linear_ ? "a_{n+1} = [e^{n q_n}]" : "a_{n+1} = [e^{" + r_.get_str() + " q_n}]";
}

RadiusEstimate radius_estimate(const Real& x, std::size_t n, Precision bits) {
  if (n < 1) throw DomainError("radius_estimate needs n >= 1");
  if (x.is_rational()) throw DomainError("radius_estimate needs an irrational x");
  const contfrac::ContinuedFractionExpansion cf = contfrac::cf_expand(x, n + 1, bits);
  const std::size_t first = (n + 1) / 2;
  std::vector<HPFloat> formula, norm;
  for (std::size_t k = first; k <= n; ++k) {
    const Precision p = std::max(bits, bits_for(cf.a[k]) + 64);
    formula.push_back(exp(-log(HPFloat(cf.a[k], p)) / HPFloat(cf.q[k], p)));
  }
  const Real r = frac_part(x);
  HPFloat via_norm = with_adaptive_precision(
      x,
      [&](Precision p) {
        norm.clear();
        for (std::size_t k = first; k <= n; ++k) {
          const HPFloat X = enclose(r, std::max(p, 2 * bits_for(cf.q[k + 1]) + 64));
          norm.push_back(norm_root(X, cf.q[k]));
        }
        return window_min(norm);
      },
      bits);
  return RadiusEstimate{x.to_string(), n, std::move(via_norm), window_min(formula)};
}

RadiusEstimate radius_estimate(const ConstructedExpansion& x, std::size_t n, Precision bits) {
  if (n < 1) throw DomainError("radius_estimate needs n >= 1");
  const std::size_t K = x.exact_terms();
  const mpz_class& L = x.q()[K];
  const HPFloat X = x.enclose(bits);
  const Precision p = X.precision();
  const HPFloat Lf(L, p);
  // Past the exact prefix, a_{k+1} in [e^{phi q_k}/2, e^{phi q_k}] and q_k >= L give
  // a_{k+1}^{-1/q_k} in e^-phi [1, 2^{1/L}] and ||q_k x||^{1/q_k} in e^-phi [(4L)^{-1/L}, 2^{1/L}].
  const HPFloat up = exp(HPFloat::ln2(p) / Lf);
  const HPFloat down = exp(-log(Lf * 4L) / Lf);
  std::vector<HPFloat> formula, norm;
  for (std::size_t k = (n + 1) / 2; k <= n; ++k) {
    if (k < K) {
      formula.push_back(exp(-log(HPFloat(x.a()[k], p)) / HPFloat(x.q()[k], p)));
      norm.push_back(norm_root(X, x.q()[k]));
      continue;
    }
    const HPFloat base = exp(-x.rate(k, p));
    formula.push_back(HPFloat::hull(base, base * up));
    norm.push_back(HPFloat::hull(base * down, base * up));
  }
  return RadiusEstimate{x.describe(), n, window_min(norm), window_min(formula)};
}

}  // namespace dioph::products
