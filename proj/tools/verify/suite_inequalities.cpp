#include <random>

#include "dioph/contfrac.hpp"
#include "dioph/core_arith.hpp"
#include "dioph/dioph_sums.hpp"
#include "dioph/equidist.hpp"
#include "runner.hpp"

namespace dioph::verify::detail {

namespace {

const char* const kIrrationals[] = {"golden", "sqrt2-1", "sqrt(11)-3", "e-2", "pi-3"};
const char* const kSurds[] = {"golden", "sqrt2-1", "sqrt(11)-3"};

}  // namespace

std::vector<Check> inequalities(const GoldenFile&, const Options& opt) {
  Runner r(Suite::inequalities);
  const sums::SumOptions so{opt.bits, opt.jobs};

  r.check("convergent sandwich and signs, n <= 200", [&] {
    Tally t;
    for (const char* s : kIrrationals) {
      const Real x = Real::parse(s);
      const auto cf = contfrac::cf_expand(x, 201);
      for (std::size_t n = 1; n + 1 < cf.q.size(); ++n) {
        const mpz_class &qn = cf.q[n], &qn1 = cf.q[n + 1];
        const Precision bits = 4 * static_cast<Precision>(mpz_sizeinbase(qn1.get_mpz_t(), 2)) + opt.bits;
        const HPFloat diff = enclose(x - Real(cf.convergent(n)), bits);
        const HPFloat err = abs(diff);
        const HPFloat upper(mpq_class(1, qn * qn1), bits), lower(mpq_class(1, qn * (qn + qn1)), bits);
        const bool sign_ok = n % 2 == 0 ? diff.positive() : diff.negative();
        t.expect(certainly_less(lower, err) && certainly_less(err, upper) && sign_ok,
                 std::string(s) + " n=" + std::to_string(n));
      }
    }
    return t.outcome();
  });

  r.check("sine sandwich 2||x|| <= |sin pi x| <= pi ||x||", [&] {
    Tally t;
    const HPFloat pi = HPFloat::pi(opt.bits);
    for (const char* s : kIrrationals) {
      const Real x = Real::parse(s);
      const HPFloat xs = enclose(x, opt.bits);
      for (long j = 1; j <= 5000; ++j) {
        const HPFloat jx = xs * j;
        const HPFloat d = dist_nearest(jx), sn = abs(sin(pi * jx));
        t.expect(!violated_le(d * 2L, sn) && !violated_le(sn, pi * d), std::string(s) + " j=" + std::to_string(j));
      }
      for (unsigned long m : {10UL, 1000UL, 100000UL}) {
        const HPFloat norm = sums::sum_recip_norm(x, m, so), sine = sums::sum_recip_sin(x, m, so);
        t.expect(certainly_less(norm / pi, sine) && certainly_less(sine, norm / 2L),
                 std::string(s) + " summed m=" + std::to_string(m));
      }
    }
    return t.outcome();
  });

  r.check("koksma inequality", [&] {
    Tally t;
    const equidist::BVFunction fs[] = {equidist::norm_function(), equidist::sawtooth_function(),
                                       equidist::constant_function(mpq_class(3, 7))};
    for (const char* s : kIrrationals)
      for (unsigned long N : {10UL, 100UL, 1000UL, 10000UL}) {
        const auto ps = equidist::PointSet::kronecker(Real::parse(s), N, opt.bits);
        for (const auto& f : fs) {
          const auto k = equidist::koksma_check(f, ps);
          t.expect(k.holds, f.name + " " + s + " N=" + std::to_string(N));
        }
      }
    return t.outcome();
  });

  r.check("D* <= D <= 2 D*", [&] {
    Tally t;
    for (const char* s : kIrrationals)
      for (unsigned long N : {1UL, 10UL, 100UL, 1000UL, 10000UL}) {
        const auto ps = equidist::PointSet::kronecker(Real::parse(s), N, opt.bits);
        const HPFloat ds = equidist::discrepancy_star(ps), d = equidist::discrepancy(ps);
        t.expect(!violated_le(ds, d) && !violated_le(d, ds * 2L), std::string(s) + " N=" + std::to_string(N));
      }
    std::mt19937_64 rng(20240601);
    for (int set = 0; set < 100; ++set) {
      const unsigned long N = 1 + rng() % 200;
      const unsigned long den = 1 + rng() % 1000000;
      std::vector<mpq_class> pts;
      for (unsigned long i = 0; i < N; ++i) pts.emplace_back(mpz_class(rng() % den), mpz_class(den));
      for (auto& p : pts) p.canonicalize();
      const auto ps = equidist::PointSet::from_rationals(pts);
      const HPFloat ds = equidist::discrepancy_star(ps), d = equidist::discrepancy(ps);
      t.expect(certainly_le(ds, d) && certainly_le(d, ds * 2L), "random set " + std::to_string(set));
    }
    return t.outcome();
  });

  r.check("bounded partial quotient discrepancy bound", [&] {
    Tally t;
    for (const char* s : kSurds) {
      const Real x = Real::parse(s);
      const auto c = contfrac::classify_type(x, 1000, opt.bits);
      for (unsigned long N : {100UL, 10000UL}) {
        const HPFloat d = equidist::discrepancy(equidist::PointSet::kronecker(x, N, opt.bits));
        t.expect(certainly_le(d, equidist::bounded_pq_discrepancy_bound(*c.K, N, opt.bits)),
                 std::string(s) + " N=" + std::to_string(N));
      }
    }
    return t.outcome();
  });

  r.check("weyl geometric bound", [&] {
    Tally t;
    const HPFloat pi = HPFloat::pi(opt.bits);
    for (const char* s : kIrrationals) {
      const Real x = Real::parse(s);
      for (long h : {1L, 2L, 3L, 5L, 10L, -7L})
        for (unsigned long N : {10UL, 1000UL, 100000UL}) {
          const HPFloat w = equidist::weyl_sum(x, h, N, opt.bits);
          const HPFloat bound = reciprocal(abs(sin(pi * enclose(x, opt.bits) * h)));
          t.expect(!violated_le(w, bound), std::string(s) + " h=" + std::to_string(h) + " N=" + std::to_string(N));
        }
    }
    return t.outcome();
  });

  r.check("quadratic weyl chained bound", [&] {
    Tally t;
    for (const char* s : {"golden", "sqrt2-1", "pi-3", "e-2"})
      for (unsigned long N : {1UL, 10UL, 100UL, 1000UL})
        t.expect(equidist::weyl_quadratic(Real::parse(s), N, opt.bits).holds,
                 std::string(s) + " N=" + std::to_string(N));
    return t.outcome();
  });

  for (const char* s : kSurds) {
    const Real x = Real::parse(s);
    r.check(std::string("h0 / jalpha / hhalpha ratios < 1 for ") + s, [&] {
      const auto c = contfrac::classify_type(x, 2000, opt.bits);
      const auto psi = sums::certificate_for(c);
      Tally t;
      t.expect(psi.certified() && sums::certificate_consistent(psi, c, opt.bits), "certificate " + psi.describe());
      const auto cf = contfrac::cf_expand(x, 14);
      HPFloat worst(opt.bits);
      auto record = [&](const sums::SumRecord& rec, const std::string& what) {
        t.expect(certainly_less(rec.ratio, HPFloat(1L, opt.bits)), what + " ratio " + show(rec.ratio, 6));
        worst = max(worst, rec.ratio);
      };
      for (std::size_t n = 1; n <= 12 && cf.q[n + 1] <= 1000000; ++n) {
        const mpz_class top = cf.q[n + 1] - 1;
        for (const mpz_class& h0 : std::vector<mpz_class>{0, mpz_class(top / 2), top})
          record(sums::bound_h0(x, psi, n, h0, so), "h0 n=" + std::to_string(n) + " h0=" + h0.get_str());
      }
      for (unsigned long m : {100UL, 10000UL, 1000000UL})
        record(sums::bound_jalpha(x, psi, m, so), "jalpha m=" + std::to_string(m));
      for (unsigned long m : {100UL, 10000UL, 100000UL})
        record(sums::bound_hhalpha(x, psi, m, so), "hhalpha m=" + std::to_string(m));
      return t.outcome("psi = " + psi.describe() + ", largest ratio " + show(worst, 4));
    });
  }

  return r.take();
}

}  // namespace dioph::verify::detail
