#include "dioph/equidist.hpp"

#include <algorithm>

#include "detail.hpp"
#include "dioph/complex_hp.hpp"
#include "dioph/core_arith.hpp"
#include "dioph/errors.hpp"

namespace dioph::equidist {

namespace {

struct SortedMids {
  std::vector<mpq_class> y;
  mpq_class radius;
  Precision bits = kDefaultPrecision;
};

SortedMids sorted_mids(const PointSet& ps) {
  SortedMids s;
  if (ps.exact()) {
    s.y = ps.rationals();
    std::sort(s.y.begin(), s.y.end());
    return s;
  }
  s.y.reserve(ps.size());
  for (const auto& p : ps.points()) {
    s.y.push_back(p.mid_exact());
    s.radius = std::max(s.radius, mpq_class(p.upper_exact() - s.y.back()));
    s.bits = std::max(s.bits, p.precision());
  }
  std::sort(s.y.begin(), s.y.end());
  return s;
}

// max_i (i/N - y_i) and max_i (y_i - (i-1)/N)
std::pair<mpq_class, mpq_class> one_sided(const std::vector<mpq_class>& y) {
  const long N = static_cast<long>(y.size());
  mpq_class plus = -1, minus = -1;
  for (long i = 1; i <= N; ++i) {
    const mpq_class& yi = y[static_cast<std::size_t>(i - 1)];
    plus = std::max(plus, mpq_class(detail::ratio(i, N) - yi));
    minus = std::max(minus, mpq_class(yi - detail::ratio(i - 1, N)));
  }
  return {plus, minus};
}

HPFloat widen_exact(const mpq_class& v, const mpq_class& r, Precision bits) {
  if (r == 0) return HPFloat(v, bits);
  return HPFloat::from_endpoints(v - r, v + r, bits);
}

// |sin(pi a N)/sin(pi a)| for a = hx, from the evaluator's ||.||.
HPFloat weyl_closed(const detail::TermEvaluator& ev, unsigned long h, unsigned long N) {
  const Precision p = ev.bits();
  if (ev.rational() && ev.frac_exact(h) == 0) return HPFloat(static_cast<long>(N), p);
  const HPFloat pi = HPFloat::pi(p);
  const HPFloat den = sin(pi * ev.norm_positive(h));
  const HPFloat num = sin(pi * ev.norm(h * N));
  return num / den;
}

}  // namespace

PointSet::PointSet(std::vector<HPFloat> points, std::vector<mpq_class> rationals, std::string source)
    : points_(std::move(points)), rationals_(std::move(rationals)), source_(std::move(source)) {
  if (points_.empty()) throw DomainError("a point set needs N >= 1");
  for (const auto& p : points_)
    if (p.upper_exact() < 0 || p.lower_exact() >= 1) throw DomainError("points must lie in [0, 1)");
}

PointSet PointSet::from_rationals(std::vector<mpq_class> points, std::string source) {
  std::vector<HPFloat> v;
  v.reserve(points.size());
  for (const auto& q : points) {
    if (q < 0 || q >= 1) throw DomainError("points must lie in [0, 1): " + q.get_str());
    v.emplace_back(q, kDefaultPrecision);
  }
  return PointSet(std::move(v), std::move(points), std::move(source));
}

PointSet PointSet::from_intervals(std::vector<HPFloat> points, std::string source) {
  return PointSet(std::move(points), {}, std::move(source));
}

PointSet PointSet::kronecker(const Real& x, unsigned long N, Precision bits) {
  if (N < 1) throw DomainError("a point set needs N >= 1");
  if (auto* q = x.as_rational()) {
    const detail::TermEvaluator ev(x, bits);
    std::vector<mpq_class> pts;
    pts.reserve(N);
    for (unsigned long n = 1; n <= N; ++n) pts.push_back(ev.frac_exact(n));
    return from_rationals(std::move(pts), "n*(" + q->get_str() + ")");
  }
  auto pts = with_adaptive_precision(
      x,
      [&](Precision p) {
        const detail::TermEvaluator ev(x, p);
        std::vector<HPFloat> v;
        v.reserve(N);
        for (unsigned long n = 1; n <= N; ++n) v.push_back(ev.frac(n));
        return v;
      },
      bits);
  return from_intervals(std::move(pts), "n*(" + x.to_string() + ")");
}

HPFloat discrepancy_star(const PointSet& ps) {
  const SortedMids s = sorted_mids(ps);
  const auto [plus, minus] = one_sided(s.y);
  return widen_exact(std::max(plus, minus), s.radius, s.bits);
}

HPFloat discrepancy(const PointSet& ps) {
  const SortedMids s = sorted_mids(ps);
  const auto [plus, minus] = one_sided(s.y);
  // Moving every point by at most r moves each one-sided term by at most r.
  return widen_exact(plus + minus, 2 * s.radius, s.bits);
}

HPFloat bounded_pq_discrepancy_bound(const mpz_class& K, unsigned long N, Precision bits) {
  if (K < 1 || N < 1) throw DomainError("bounded_pq_discrepancy_bound needs K >= 1 and N >= 1");
  const HPFloat Nf(static_cast<long>(N), bits), Kf(K, bits);
  const HPFloat g = (sqrt(HPFloat(5L, bits)) + 1L) / 2L;
  const HPFloat c = reciprocal(log(g)) + Kf / log(Kf + 1L);
  return (HPFloat(3L, bits) + c * log(Nf)) / Nf;
}

HPFloat weyl_sum(const Real& x, long h, unsigned long N, Precision bits) {
  if (h == 0) throw DomainError("weyl_sum needs h != 0");
  if (N < 1) throw DomainError("weyl_sum needs N >= 1");
  const unsigned long ah = static_cast<unsigned long>(h < 0 ? -h : h);
  return with_adaptive_precision(
      x, [&](Precision p) { return weyl_closed(detail::TermEvaluator(x, p), ah, N); }, bits);
}

HPFloat weyl_sum_direct(const Real& x, long h, unsigned long N, Precision bits) {
  if (h == 0) throw DomainError("weyl_sum_direct needs h != 0");
  const unsigned long ah = static_cast<unsigned long>(h < 0 ? -h : h);
  return with_adaptive_precision(
      x,
      [&](Precision p) {
        const detail::TermEvaluator ev(x, p);
        const HPFloat two_pi = HPFloat::pi(p) * 2L;
        ComplexHP s(p);
        for (unsigned long n = 1; n <= N; ++n) s += ComplexHP::cis(two_pi * ev.frac(ah * n));
        return abs(s);
      },
      bits);
}

HPFloat erdos_turan_bracket(const Real& x, unsigned long N, unsigned long m, Precision bits) {
  if (N < 1 || m < 1) throw DomainError("erdos_turan_bracket needs N >= 1 and m >= 1");
  return with_adaptive_precision(
      x,
      [&](Precision p) {
        const detail::TermEvaluator ev(x, p);
        HPFloat s(mpq_class(1, m), p);
        const long Nl = static_cast<long>(N);
        for (unsigned long j = 1; j <= m; ++j) s += weyl_closed(ev, j, N) / (Nl * static_cast<long>(j));
        return s;
      },
      bits);
}

BVFunction norm_function() {
  return {"||t||", [](const HPFloat& t) { return dist_nearest(t); }, 1, mpq_class(1, 4)};
}

BVFunction sawtooth_function() {
  return {"R(t)", [](const HPFloat& t) { return frac_part(t); }, 1, mpq_class(1, 2)};
}

BVFunction constant_function(const mpq_class& c) {
  return {"const " + c.get_str(), [c](const HPFloat& t) { return HPFloat(c, t.precision()); }, 0, c};
}

KoksmaResult koksma_check(const BVFunction& f, const PointSet& ps) {
  const Precision p = std::max(kDefaultPrecision, ps.points().front().precision());
  if (f.variation == 0) return {HPFloat(0L, p), HPFloat(0L, p), true};
  HPFloat s(p);
  for (const auto& y : ps.points()) s += f.f(y);
  HPFloat lhs = abs(s / static_cast<long>(ps.size()) - HPFloat(f.integral, p));
  HPFloat rhs = discrepancy(ps) * HPFloat(f.variation, p);
  const bool holds = certainly_le(lhs, rhs);
  return {std::move(lhs), std::move(rhs), holds};
}

WeylQuadratic weyl_quadratic(const Real& x, unsigned long N, Precision bits) {
  if (N < 1) throw DomainError("weyl_quadratic needs N >= 1");
  if (x.is_rational()) throw DomainError("weyl_quadratic needs an irrational x");
  return with_adaptive_precision(
      x,
      [&](Precision p) {
        const detail::TermEvaluator ev(x, p);
        const HPFloat pi = HPFloat::pi(p);
        ComplexHP s(p);
        for (unsigned long n = 1; n <= N; ++n) s += ComplexHP::cis(pi * 2L * ev.frac(n * n));
        HPFloat lhs_sq = norm_sq(s);
        const HPFloat Nf(static_cast<long>(N), p);
        HPFloat mid(p), rhs(p);
        for (unsigned long n = 1; n <= N; ++n) mid += reciprocal(sin(pi * ev.norm_positive(4 * n)));
        for (unsigned long n = 1; n <= 4 * N; ++n) rhs += reciprocal(sin(pi * ev.norm_positive(n)));
        mid = Nf + mid * 4L;
        rhs = Nf + rhs * 4L;
        const bool holds = certainly_le(lhs_sq, rhs);
        return WeylQuadratic{std::move(lhs_sq), std::move(mid), std::move(rhs), holds};
      },
      bits);
}

}  // namespace dioph::equidist
