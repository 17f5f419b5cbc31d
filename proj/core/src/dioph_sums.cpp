#include "dioph/dioph_sums.hpp"

#include <sstream>

#include "detail.hpp"
#include "dioph/core_arith.hpp"
#include "dioph/errors.hpp"

namespace dioph::sums {

namespace {

HPFloat term(SumKind kind, const detail::TermEvaluator& ev, unsigned long j, const HPFloat& pi,
             const HPFloat& half) {
  switch (kind) {
    case SumKind::recip:
      return reciprocal(ev.norm_positive(j));
    case SumKind::recipj:
      return reciprocal(ev.norm_positive(j) * static_cast<long>(j));
    case SumKind::norm:
      return ev.norm(j);
    case SumKind::sin:
      // |sin(pi y)| = sin(pi ||y||)
      return reciprocal(sin(pi * ev.norm_positive(j)));
    case SumKind::fracpart:
      return ev.frac(j) - half;
  }
  throw DomainError("unknown sum kind");
}

HPFloat log_of(unsigned long m, Precision bits) { return log(HPFloat(static_cast<long>(m), bits)); }

HPFloat normalizer(Normalization norm, unsigned long m, Precision bits) {
  switch (norm) {
    case Normalization::none:
      return HPFloat(1L, bits);
    case Normalization::m:
      return HPFloat(static_cast<long>(m), bits);
    case Normalization::mlogm:
      if (m < 2) throw DomainError("m log m normalization needs m >= 2");
      return log_of(m, bits) * static_cast<long>(m);
    case Normalization::log2m:
      if (m < 2) throw DomainError("(log m)^2 normalization needs m >= 2");
      return square(log_of(m, bits));
  }
  throw DomainError("unknown normalization");
}

unsigned long to_ulong(const mpz_class& v, const char* what) {
  if (v < 0 || v > kSumHorizon) throw HorizonExceeded(std::string(what) + " = " + v.get_str() + " exceeds the sum horizon");
  return v.get_ui();
}

}  // namespace

SumKind parse_sum_kind(const std::string& name) {
  if (name == "recip") return SumKind::recip;
  if (name == "recipj") return SumKind::recipj;
  if (name == "norm") return SumKind::norm;
  if (name == "sin") return SumKind::sin;
  if (name == "fracpart") return SumKind::fracpart;
  throw ParseError("unknown sum kind: " + name);
}

std::string to_string(SumKind kind) {
  switch (kind) {
    case SumKind::recip:
      return "recip";
    case SumKind::recipj:
      return "recipj";
    case SumKind::norm:
      return "norm";
    case SumKind::sin:
      return "sin";
    case SumKind::fracpart:
      return "fracpart";
  }
  return "?";
}

Normalization parse_normalization(const std::string& name) {
  if (name == "none") return Normalization::none;
  if (name == "m") return Normalization::m;
  if (name == "mlogm") return Normalization::mlogm;
  if (name == "log2m") return Normalization::log2m;
  throw ParseError("unknown normalization: " + name);
}

HPFloat segment_sum(SumKind kind, const Real& x, unsigned long from, unsigned long to, const SumOptions& opt) {
  if (from < 1) throw DomainError("sums start at j = 1");
  if (to > kSumHorizon) throw HorizonExceeded("sum length " + std::to_string(to) + " exceeds the horizon");
  if (from > to) return HPFloat(opt.bits);
  return with_adaptive_precision(
      x,
      [&](Precision p) {
        const detail::TermEvaluator ev(x, p);
        const HPFloat pi = HPFloat::pi(p);
        const HPFloat half(mpq_class(1, 2), p);
        // Blocks are aligned to multiples of kBlockSize so that every
        // partition of a range reuses the same block boundaries.
        const unsigned long first_block = (from - 1) / detail::kBlockSize;
        const unsigned long last_block = (to - 1) / detail::kBlockSize;
        const std::size_t nblocks = last_block - first_block + 1;
        std::vector<HPFloat> partial(nblocks, HPFloat(p));
        detail::parallel_for(nblocks, opt.jobs, [&](std::size_t b) {
          const unsigned long lo = std::max(from, (first_block + b) * detail::kBlockSize + 1);
          const unsigned long hi = std::min(to, (first_block + b + 1) * detail::kBlockSize);
          HPFloat s(p);
          for (unsigned long j = lo; j <= hi; ++j) s += term(kind, ev, j, pi, half);
          partial[b] = std::move(s);
        });
        HPFloat total(p);
        for (const auto& s : partial) total += s;
        return total;
      },
      opt.bits);
}

HPFloat sum_recip_norm(const Real& x, unsigned long m, const SumOptions& opt) {
  return segment_sum(SumKind::recip, x, 1, m, opt);
}
HPFloat sum_recip_sin(const Real& x, unsigned long m, const SumOptions& opt) {
  return segment_sum(SumKind::sin, x, 1, m, opt);
}
HPFloat sum_recip_jnorm(const Real& x, unsigned long m, const SumOptions& opt) {
  return segment_sum(SumKind::recipj, x, 1, m, opt);
}
HPFloat sum_norm(const Real& x, unsigned long N, const SumOptions& opt) {
  return segment_sum(SumKind::norm, x, 1, N, opt);
}
HPFloat sum_fracpart(const Real& x, unsigned long m, const SumOptions& opt) {
  return segment_sum(SumKind::fracpart, x, 1, m, opt);
}

std::vector<SumRecord> sweep(SumKind kind, const Real& x, unsigned long start, unsigned long stop,
                             unsigned long step, Normalization norm, const SumOptions& opt) {
  if (start < 1 || step < 1 || stop < start) throw DomainError("sweep needs 1 <= start <= stop and step >= 1");
  std::vector<SumRecord> rows;
  HPFloat running = segment_sum(kind, x, 1, start, opt);
  for (unsigned long m = start;; m += step) {
    if (m > start) running += segment_sum(kind, x, m - step + 1, m, opt);
    HPFloat bound = normalizer(norm, m, opt.bits);
    HPFloat ratio = running / bound;
    rows.push_back({m, running, std::move(bound), std::move(ratio)});
    if (stop - m < step) break;
  }
  return rows;
}

TypeFunction TypeFunction::constant(const mpq_class& K, bool certified) {
  if (K <= 0) throw DomainError("a type function must be positive");
  TypeFunction f(Kind::constant, certified);
  f.K_ = K;
  return f;
}

TypeFunction TypeFunction::power_log(const mpq_class& K, const mpq_class& eps) {
  if (K <= 0 || eps < 0) throw DomainError("power-log type function needs K > 0 and eps >= 0");
  TypeFunction f(Kind::power_log, false);
  f.K_ = K;
  f.eps_ = eps;
  return f;
}

TypeFunction TypeFunction::table(std::vector<std::pair<unsigned long, mpq_class>> steps) {
  if (steps.empty() || steps.front().first != 1) throw DomainError("a type table must start at h = 1");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].second <= 0) throw DomainError("a type function must be positive");
    if (i > 0 && (steps[i].first <= steps[i - 1].first || steps[i].second < steps[i - 1].second))
      throw DomainError("a type table must be increasing in h and nondecreasing in value");
  }
  TypeFunction f(Kind::table, false);
  f.steps_ = std::move(steps);
  return f;
}

HPFloat TypeFunction::operator()(unsigned long h, Precision bits) const {
  if (h < 1) throw DomainError("type functions are defined for h >= 1");
  switch (kind_) {
    case Kind::constant:
      return HPFloat(K_, bits);
    case Kind::power_log: {
      HPFloat l = max(log_of(h, bits), HPFloat(1L, bits));
      return HPFloat(K_, bits) * pow(l, HPFloat(mpq_class(eps_ + 1), bits));
    }
    case Kind::table: {
      auto it = std::upper_bound(steps_.begin(), steps_.end(), h,
                                 [](unsigned long v, const auto& s) { return v < s.first; });
      return HPFloat(std::prev(it)->second, bits);
    }
  }
  throw DomainError("unknown type function");
}

std::string TypeFunction::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::constant:
      os << "constant " << K_;
      break;
    case Kind::power_log:
      os << K_ << "*max(1,log h)^(1+" << eps_ << ")";
      break;
    case Kind::table:
      os << "table of " << steps_.size() << " steps up to h=" << steps_.back().first;
      break;
  }
  if (!certified_) os << " (uncertified)";
  return os.str();
}

TypeFunction certificate_for(const contfrac::DiophClassification& c) {
  if (c.K && c.bounded_pq_certified) return TypeFunction::constant(mpq_class(2 * (*c.K + 1)), true);
  std::vector<std::pair<unsigned long, mpq_class>> steps;
  for (const auto& row : c.empirical_type) steps.emplace_back(row.h, mpq_class(row.inverse_h_norm));
  if (steps.empty()) steps.emplace_back(1, mpq_class(1));
  return TypeFunction::table(std::move(steps));
}

bool certificate_consistent(const TypeFunction& psi, const contfrac::DiophClassification& c, Precision bits) {
  for (const auto& row : c.empirical_type) {
    if (psi(row.h, bits).lower_exact() < mpq_class(row.inverse_h_norm)) return false;
  }
  return true;
}

SumRecord bound_h0(const Real& x, const TypeFunction& psi, std::size_t n, const mpz_class& h0, const SumOptions& opt) {
  const contfrac::ContinuedFractionExpansion cf = contfrac::cf_expand(x, n + 1);
  if (cf.size() < n + 1) throw InsufficientConvergents("x is rational with fewer than n + 1 partial quotients");
  const mpz_class& qn = cf.q[n];
  const mpz_class& qn1 = cf.q[n + 1];
  if (h0 < 0 || h0 >= qn1) throw DomainError("bound_h0 needs 0 <= h0 < q_{n+1}");
  const unsigned long jmax = to_ulong(std::min(qn, mpz_class(qn1 - 1 - h0)), "q_n");
  const unsigned long off = to_ulong(h0, "h0");
  const Precision p = opt.bits;
  HPFloat value = jmax == 0 ? HPFloat(p) : segment_sum(SumKind::recip, x, off + 1, off + jmax, opt);
  const unsigned long q = to_ulong(qn, "q_n");
  HPFloat bound = (psi(q, p) + log_of(q, p)) * HPFloat(6L * static_cast<long>(q), p);
  HPFloat ratio = value / bound;
  return {q, value, bound, ratio};
}

SumRecord bound_jalpha(const Real& x, const TypeFunction& psi, unsigned long m, const SumOptions& opt) {
  if (m < 1) throw DomainError("bound_jalpha needs m >= 1");
  const Precision p = opt.bits;
  HPFloat value = sum_recip_norm(x, m, opt);
  HPFloat bound = (psi(m, p) + log_of(m, p)) * HPFloat(12L * static_cast<long>(m), p);
  HPFloat ratio = value / bound;
  return {m, value, bound, ratio};
}

SumRecord bound_hhalpha(const Real& x, const TypeFunction& psi, unsigned long m, const SumOptions& opt) {
  if (m < 1) throw DomainError("bound_hhalpha needs m >= 1");
  const Precision p = opt.bits;
  HPFloat value = sum_recip_jnorm(x, m, opt);
  HPFloat psi_sum(p);
  if (psi.kind() == TypeFunction::Kind::constant) {
    mpq_class harmonic = 0;
    for (unsigned long j = 1; j <= m; ++j) harmonic += mpq_class(1, j);
    psi_sum = psi(1, p) * HPFloat(harmonic, p);
  } else {
    for (unsigned long j = 1; j <= m; ++j) psi_sum += psi(j, p) / static_cast<long>(j);
  }
  HPFloat bound = (square(log_of(m, p)) + psi(m, p) + psi_sum) * 24L;
  HPFloat ratio = value / bound;
  return {m, value, bound, ratio};
}

SumRecord bound_lower(const Real& x, unsigned long m, const SumOptions& opt) {
  if (m < 2) throw DomainError("bound_lower needs m >= 2");
  HPFloat value = sum_recip_norm(x, m, opt);
  HPFloat bound = normalizer(Normalization::mlogm, m, opt.bits);
  HPFloat ratio = value / bound;
  return {m, value, bound, ratio};
}

std::vector<mpz_class> counterexample_quotients(std::size_t levels) {
  std::vector<mpz_class> a;
  mpz_class q = 1, q_prev = 0;  // q_k and q_{k-1}
  for (std::size_t k = 0; k < levels; ++k) {
    mpz_class ak;
    if (k == 0) {
      ak = 1;
    } else {
      // a_{k+1} = q_k^(k-1) + 1
      mpz_pow_ui(ak.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k - 1));
      ak += 1;
    }
    mpz_class next = ak * q + q_prev;
    q_prev = q;
    q = next;
    a.push_back(std::move(ak));
  }
  return a;
}

std::vector<CounterexampleRow> counterexample_check(std::size_t levels, Precision bits) {
  if (levels < 3) throw DomainError("counterexample_check needs at least 3 levels");
  const std::vector<mpz_class> a = counterexample_quotients(levels);
  const contfrac::ContinuedFractionExpansion cf = contfrac::from_quotients(a);
  std::vector<CounterexampleRow> rows;
  for (std::size_t n = 1; n + 2 <= levels; ++n) {
    const unsigned long qn = to_ulong(cf.q[n], "q_n");
    HPFloat s = sum_recip_norm(cf.x, qn, {bits, 1});
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), cf.q[n].get_mpz_t(), n);
    const bool exceeds = s.lower_exact() > pw;
    rows.push_back({n, cf.q[n], std::move(s), std::move(pw), exceeds});
  }
  return rows;
}

std::vector<NathansonRow> nathanson_sums(const Real& alpha, const NathansonParams& prm, Precision bits) {
  if (prm.q < 1) throw BadRationalApproximation("q must be positive");
  if (gcd(prm.a, mpz_class(prm.q)) != 1)
    throw BadRationalApproximation("gcd(a, q) != 1");
  if (prm.U < 1 || prm.V <= 0) throw DomainError("nathanson_sums needs U >= 1 and V > 0");
  const mpq_class aq(prm.a, prm.q);
  const mpq_class tol(1, mpz_class(prm.q) * prm.q);
  const Real diff = alpha - Real(aq);
  if (auto* d = diff.as_rational()) {
    if (abs(*d) > tol) throw BadRationalApproximation("|alpha - a/q| > 1/q^2");
  } else {
    const int c = with_adaptive_precision(
        alpha,
        [&](Precision p) {
          const HPFloat e = abs(enclose(diff, p));
          if (certainly_le(e, HPFloat(tol, p))) return 0;
          if (certainly_less(HPFloat(tol, p), e)) return 1;
          throw IntervalStraddlesInteger("approximation test undecided");
        },
        bits);
    if (c != 0) throw BadRationalApproximation("|alpha - a/q| > 1/q^2");
  }

  mpz_class Ufloor;
  mpz_fdiv_q(Ufloor.get_mpz_t(), prm.U.get_num_mpz_t(), prm.U.get_den_mpz_t());
  const unsigned long U = to_ulong(Ufloor, "U");
  const unsigned long q = prm.q;

  return with_adaptive_precision(
      alpha,
      [&](Precision p) {
        const detail::TermEvaluator ev(alpha, p);
        const HPFloat V(prm.V, p);
        auto capped = [&](const HPFloat& cap, unsigned long k) {
          const HPFloat d = ev.norm(k);
          if (ev.rational() && d.is_point() && !d.positive()) return cap;
          if (!d.positive()) {
            // The cap wins once ||.|| <= 1/cap is certain.
            if (certainly_le(d, reciprocal(cap))) return cap;
            throw IntervalStraddlesInteger("min(cap, 1/||k alpha||) undecided");
          }
          return min(cap, reciprocal(d));
        };

        HPFloat s1(p);
        for (unsigned long r = 1; 2 * r <= q; ++r) s1 += reciprocal(ev.norm_positive(r));
        HPFloat s2(p);
        for (unsigned long r = 1; r <= q; ++r) s2 += capped(V, prm.h * q + r);
        HPFloat s3(p);
        for (unsigned long k = 1; k <= U; ++k) s3 += capped(HPFloat(mpq_class(prm.n, k), p), k);
        HPFloat s4(p);
        for (unsigned long k = 1; k <= U; ++k) s4 += capped(V, k);

        const HPFloat Q(static_cast<long>(q), p), Uh(prm.U, p);
        const HPFloat logq = log(Q);
        const HPFloat b1 = Q * logq;
        const HPFloat b2 = V + Q * logq;
        const HPFloat b3 = (HPFloat(mpq_class(prm.n, q), p) + Uh + Q) * log(Q * Uh * 2L);
        const HPFloat b4 = (Q + Uh + V + Uh * V / Q) * max(HPFloat(1L, p), logq);

        auto row = [&](const char* name, HPFloat s, HPFloat b) {
          HPFloat c = b.positive() ? s / b : HPFloat(p);
          return NathansonRow{name, std::move(s), std::move(b), std::move(c)};
        };
        return std::vector<NathansonRow>{row("half_range", s1, b1), row("block_min_V", s2, b2),
                                         row("min_n_over_k", s3, b3), row("min_V", s4, b4)};
      },
      bits);
}

}  // namespace dioph::sums
