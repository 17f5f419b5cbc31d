#include "dioph/contfrac.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

#include "dioph/core_arith.hpp"
#include "dioph/errors.hpp"

namespace dioph::contfrac {

namespace {

constexpr std::size_t kMaxCycleSearch = 1000000;

void fill_convergents(ContinuedFractionExpansion& cf) {
  cf.p.assign({mpz_class(0)});
  cf.q.assign({mpz_class(1)});
  mpz_class p_prev = 1, q_prev = 0;
  for (const auto& ak : cf.a) {
    mpz_class pk = ak * cf.p.back() + p_prev;
    mpz_class qk = ak * cf.q.back() + q_prev;
    p_prev = cf.p.back();
    q_prev = cf.q.back();
    cf.p.push_back(std::move(pk));
    cf.q.push_back(std::move(qk));
  }
}

mpz_class fdiv(const mpz_class& n, const mpz_class& d) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

// (P + sqrt(D)) / Q with Q | D - P^2, D not a square.
struct SurdState {
  mpz_class P;
  mpz_class Q;

  bool operator<(const SurdState& o) const { return std::tie(P, Q) < std::tie(o.P, o.Q); }
};

mpz_class surd_floor(const SurdState& s, const mpz_class& root) {
  if (s.Q > 0) return fdiv(s.P + root, s.Q);
  return fdiv(-s.P - root - 1, -s.Q);
}

SurdState surd_step(const SurdState& s, const mpz_class& ak, const mpz_class& D) {
  const mpz_class P = ak * s.Q - s.P;
  const mpz_class Q = (D - P * P) / s.Q;
  return {P, Q};
}

ContinuedFractionExpansion expand_surd(const Real& x, const QuadraticSurd& s, std::size_t n) {
  ContinuedFractionExpansion cf;
  cf.x = x;
  mpz_class D = s.b * s.b * s.d;
  SurdState st{s.b > 0 ? s.a : mpz_class(-s.a), s.b > 0 ? s.c : mpz_class(-s.c)};
  if (((D - st.P * st.P) % st.Q) != 0) {
    const mpz_class aq = abs(st.Q);
    st.P *= aq;
    D *= st.Q * st.Q;
    st.Q *= aq;
  }
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), D.get_mpz_t());

  cf.a0 = surd_floor(st, root);
  st = surd_step(st, cf.a0, D);

  std::map<SurdState, std::size_t> seen;
  std::vector<mpz_class> quotients;
  for (std::size_t k = 1; k <= kMaxCycleSearch; ++k) {
    auto [it, fresh] = seen.emplace(st, k);
    if (!fresh) {
      cf.period = Period{it->second - 1, k - it->second};
      break;
    }
    mpz_class ak = surd_floor(st, root);
    st = surd_step(st, ak, D);
    quotients.push_back(std::move(ak));
  }
  if (cf.period) {
    const std::size_t pre = cf.period->preperiod, len = cf.period->length;
    for (std::size_t k = 0; k < n; ++k)
      cf.a.push_back(k < pre ? quotients[k] : quotients[pre + (k - pre) % len]);
  } else {
    // No cycle within the search budget; continue the exact recurrence.
    for (std::size_t k = quotients.size(); k < n; ++k) {
      mpz_class ak = surd_floor(st, root);
      st = surd_step(st, ak, D);
      quotients.push_back(std::move(ak));
    }
    quotients.resize(n);
    cf.a = std::move(quotients);
  }
  fill_convergents(cf);
  return cf;
}

ContinuedFractionExpansion expand_rational(const Real& x, const mpq_class& v, std::size_t n) {
  ContinuedFractionExpansion cf;
  cf.x = x;
  cf.a0 = fdiv(v.get_num(), v.get_den());
  mpq_class r = v - cf.a0;
  cf.a = rational_quotients(r, n + 1);
  cf.terminated = cf.a.size() <= n;
  if (!cf.terminated) cf.a.resize(n);
  fill_convergents(cf);
  return cf;
}

std::size_t common_prefix(const std::vector<mpz_class>& u, const std::vector<mpz_class>& v) {
  std::size_t k = 0;
  while (k < u.size() && k < v.size() && u[k] == v[k]) ++k;
  return k;
}

// Every point of an interval whose endpoints share the expansion prefix c
// lies in the closure of the cylinder of c, so c is certified.
ContinuedFractionExpansion expand_interval(const Real& x, std::size_t n, Precision start) {
  ContinuedFractionExpansion best;
  best.x = x;
  bool have_a0 = false;
  for (Precision bits = start;; bits *= 2) {
    const HPFloat v = enclose(x, bits);
    try {
      const mpz_class a0 = v.floor();
      const mpq_class lo = v.lower_exact() - a0, hi = v.upper_exact() - a0;
      const auto ql = rational_quotients(lo, n + 1), qh = rational_quotients(hi, n + 1);
      const std::size_t L = std::min(common_prefix(ql, qh), n);
      if (!have_a0 || L > best.a.size()) {
        best.a0 = a0;
        best.a.assign(ql.begin(), ql.begin() + static_cast<std::ptrdiff_t>(L));
        have_a0 = true;
      }
    } catch (const IntervalStraddlesInteger&) {
    }
    if ((have_a0 && best.a.size() >= n) || !x.refinable() || bits * 2 > kPrecisionCap) break;
  }
  if (!have_a0) throw PrecisionExhausted("cannot certify the integer part of " + x.to_string());
  fill_convergents(best);
  return best;
}

}  // namespace

std::vector<mpz_class> rational_quotients(mpq_class r, std::size_t max_terms) {
  if (r < 0 || r >= 1) throw DomainError("rational_quotients needs r in [0, 1)");
  std::vector<mpz_class> out;
  mpz_class num = r.get_num(), den = r.get_den();
  while (num != 0 && out.size() < max_terms) {
    mpz_class ak, rem;
    mpz_fdiv_qr(ak.get_mpz_t(), rem.get_mpz_t(), den.get_mpz_t(), num.get_mpz_t());
    out.push_back(std::move(ak));
    den = std::move(num);
    num = std::move(rem);
  }
  return out;
}

ContinuedFractionExpansion cf_expand_certified(const Real& x, std::size_t n, Precision start) {
  if (auto* v = x.as_rational()) return expand_rational(x, *v, n);
  if (auto* s = x.as_surd()) return expand_surd(x, *s, n);
  return expand_interval(x, n, start);
}

ContinuedFractionExpansion cf_expand(const Real& x, std::size_t n, Precision start) {
  ContinuedFractionExpansion cf = cf_expand_certified(x, n, start);
  if (!cf.terminated && cf.size() < n)
    throw PrecisionExhausted("only " + std::to_string(cf.size()) + " partial quotients of " + x.to_string() +
                             " could be certified");
  return cf;
}

ContinuedFractionExpansion from_quotients(const std::vector<mpz_class>& a) {
  ContinuedFractionExpansion cf;
  for (const auto& ak : a)
    if (ak <= 0) throw DomainError("partial quotients must be positive");
  cf.a0 = 0;
  cf.a = a;
  fill_convergents(cf);
  cf.x = Real(cf.a.empty() ? mpq_class(0) : cf.convergent(cf.size()));
  cf.terminated = true;
  return cf;
}

HPFloat value_of(const std::vector<mpz_class>& a, Precision bits) {
  const ContinuedFractionExpansion cf = from_quotients(a);
  HPFloat sum(bits);
  for (std::size_t k = 1; k <= cf.size(); ++k) {
    HPFloat term = HPFloat(mpq_class(1, cf.q[k - 1] * cf.q[k]), bits);
    if (k % 2 == 0)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

BestApproxResult best_approx_verify(const Real& x, std::size_t n) {
  const ContinuedFractionExpansion cf = cf_expand(x, n + 1);
  if (cf.size() < n + 1) return {true, true, 0};
  const mpz_class& q_next = cf.q[n + 1];
  if (q_next > kBestApproxHorizon)
    throw HorizonExceeded("q_" + std::to_string(n + 1) + " = " + q_next.get_str() + " exceeds the scan horizon");
  const unsigned long limit = q_next.get_ui();
  const unsigned long qn = cf.q[n].get_ui();

  if (auto* v = x.as_rational()) {
    const mpq_class r = *v - cf.a0;
    const mpq_class target = abs(r * cf.q[n] - cf.p[n]);
    for (unsigned long q = 1; q < limit; ++q) {
      const mpq_class t = r * q;
      const mpq_class f = t - fdiv(t.get_num(), t.get_den());
      if (std::min(f, mpq_class(1 - f)) < target) return {false, false, q};
    }
    return {true, false, limit - 1};
  }

  const Real r = frac_part(x);
  return with_adaptive_precision(x, [&](Precision bits) -> BestApproxResult {
    const HPFloat X = enclose(r, bits);
    const HPFloat target = abs(X * HPFloat(cf.q[n], bits) - HPFloat(cf.p[n], bits));
    for (unsigned long q = 1; q < limit; ++q) {
      if (q == qn) continue;
      const HPFloat d = dist_nearest(X * static_cast<long>(q));
      if (certainly_le(target, d)) continue;
      if (certainly_less(d, target)) return {false, false, q};
      throw IntervalStraddlesInteger("best approximation comparison undecided at q = " + std::to_string(q));
    }
    return {true, false, limit - 1};
  });
}

Cylinder cylinder_interval(const std::vector<mpz_class>& i) {
  if (i.empty()) return {0, 1, 1};
  const ContinuedFractionExpansion cf = from_quotients(i);
  const std::size_t n = i.size();
  const mpq_class end(cf.p[n], cf.q[n]);
  const mpq_class mediant(cf.p[n] + cf.p[n - 1], cf.q[n] + cf.q[n - 1]);
  Cylinder c = n % 2 == 1 ? Cylinder{mediant, end, 0} : Cylinder{end, mediant, 0};
  c.measure = c.v - c.u;
  return c;
}

}  // namespace dioph::contfrac
