#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "dioph/arith_funcs.hpp"
#include "dioph/contfrac.hpp"
#include "dioph/core_arith.hpp"
#include "dioph/equidist.hpp"
#include "runner.hpp"

namespace dioph::verify::detail {

namespace {

mpq_class abs_q(const mpq_class& v) { return v < 0 ? mpq_class(-v) : v; }

/// Both discrepancies by scanning every candidate endpoint, O(N^2 log N).
std::pair<mpq_class, mpq_class> brute_discrepancies(std::vector<mpq_class> y) {
  std::sort(y.begin(), y.end());
  const mpq_class N(static_cast<long>(y.size()));
  auto below = [&](const mpq_class& b) { return std::lower_bound(y.begin(), y.end(), b) - y.begin(); };
  auto upto = [&](const mpq_class& b) { return std::upper_bound(y.begin(), y.end(), b) - y.begin(); };

  // [0, beta) for beta = y_j, beta -> y_j from above, and beta = 1.
  mpq_class star = abs_q(mpq_class(below(1)) / N - 1);
  for (const auto& b : y) {
    star = std::max(star, abs_q(mpq_class(below(b)) / N - b));
    star = std::max(star, abs_q(mpq_class(upto(b)) / N - b));
  }

  // Over-counts [y_i, y_j + 0), under-counts (a + 0, b) with a in {0-, y_i}, b in {y_j, 1}.
  std::vector<mpq_class> left{0}, right{1};
  left.insert(left.end(), y.begin(), y.end());
  right.insert(right.end(), y.begin(), y.end());
  mpq_class d = 0;
  for (const auto& a : y)
    for (const auto& b : y)
      if (a <= b) d = std::max(d, mpq_class(mpq_class(upto(b) - below(a)) / N - (b - a)));
  for (std::size_t i = 0; i < left.size(); ++i)
    for (const auto& b : right) {
      const mpq_class& a = left[i];
      if (b < a) continue;
      const long inside = below(b) - (i == 0 ? 0 : upto(a));
      d = std::max(d, mpq_class((b - a) - mpq_class(std::max(0L, inside)) / N));
    }
  return {star, d};
}

/// Every legal digit vector with value <= limit, keyed by value.
std::multimap<mpz_class, std::vector<mpz_class>> all_ostrowski(const contfrac::ContinuedFractionExpansion& cf,
                                                              const mpz_class& limit) {
  std::multimap<mpz_class, std::vector<mpz_class>> out;
  std::vector<mpz_class> z;
  std::function<void(std::size_t, const mpz_class&)> rec = [&](std::size_t k, const mpz_class& value) {
    // z holds z_1..z_{k-1}; trailing zeros are trimmed when recording.
    if (k > cf.size() || cf.q[k - 1] > limit) {
      std::vector<mpz_class> t = z;
      while (!t.empty() && t.back() == 0) t.pop_back();
      if (value > 0) out.emplace(value, std::move(t));
      return;
    }
    const mpz_class hi = k == 1 ? cf.quotient(1) - 1 : cf.quotient(k);
    for (mpz_class d = 0; d <= hi; ++d) {
      const mpz_class v = value + d * cf.q[k - 1];
      if (v > limit) break;
      if (k >= 2 && d == cf.quotient(k) && z.back() != 0) continue;
      z.push_back(d);
      rec(k + 1, v);
      z.pop_back();
    }
  };
  rec(1, 0);
  return out;
}

}  // namespace

std::vector<Check> oracle_equivalence(const GoldenFile&, const Options& opt) {
  Runner r(Suite::oracle_equivalence);

  r.check("discrepancy formulas = brute scan, N <= 500", [&] {
    Tally t;
    std::mt19937_64 rng(7);
    std::vector<std::vector<mpq_class>> sets{{mpq_class(0)}};
    for (unsigned long N : {1UL, 7UL, 10UL}) {
      std::vector<mpq_class> grid;
      for (unsigned long i = 1; i <= N; ++i) grid.emplace_back(2 * i - 1, 2 * N);
      sets.push_back(grid);
    }
    for (unsigned long N : {1UL, 2UL, 3UL, 5UL, 8UL, 13UL, 50UL, 100UL, 250UL, 500UL})
      for (int rep = 0; rep < 3; ++rep) {
        const unsigned long den = rep == 0 ? 16 : 1 + rng() % 100000;
        std::vector<mpq_class> pts;
        for (unsigned long i = 0; i < N; ++i) {
          pts.emplace_back(mpz_class(rng() % den), mpz_class(den));
          pts.back().canonicalize();
        }
        sets.push_back(std::move(pts));
      }
    for (const auto& pts : sets) {
      const auto [star, d] = brute_discrepancies(pts);
      const auto ps = equidist::PointSet::from_rationals(pts);
      const HPFloat fs = equidist::discrepancy_star(ps), fd = equidist::discrepancy(ps);
      t.expect(fs.contains(star) && fd.contains(d) && fs.radius_double() < 1e-60 && fd.radius_double() < 1e-60,
               "N=" + std::to_string(pts.size()) + " star " + star.get_str() + " vs " + show(fs) + ", D " +
                   d.get_str() + " vs " + show(fd));
    }
    return t.outcome();
  });

  r.check("ostrowski greedy = exhaustive, m <= 1000", [&] {
    Tally t;
    for (const char* s : {"golden", "sqrt2-1", "e-2", "sqrt(11)-3", "pi-3"}) {
      const auto cf = contfrac::cf_expand(Real::parse(s), 40);
      const auto all = all_ostrowski(cf, 1000);
      for (mpz_class m = 1; m <= 1000; ++m) {
        const auto [lo, hi] = all.equal_range(m);
        const auto count = std::distance(lo, hi);
        const auto g = contfrac::ostrowski_expand(m, cf);
        t.expect(count == 1 && lo->second == g.z && g.t == g.z.size() && contfrac::ostrowski_legal(g.z, cf),
                 std::string(s) + " m=" + m.get_str() + " (" + std::to_string(count) + " legal vectors)");
      }
    }
    return t.outcome();
  });

  r.check("brown-shiue = direct sum, m <= 10^4", [&] {
    Tally t;
    const HPFloat half(mpq_class(1, 2), opt.bits);
    for (const char* s : {"golden", "sqrt2-1", "pi", "e-2", "sqrt(11)-3"}) {
      const Real x = Real::parse(s);
      const HPFloat xs = enclose(x, opt.bits);
      HPFloat running(opt.bits);
      for (long m = 1; m <= 10000; ++m) {
        running += frac_part(xs * m) - half;
        const HPFloat bs = contfrac::brown_shiue_sum(x, m, opt.bits);
        t.expect(bs.overlaps(running), std::string(s) + " m=" + std::to_string(m) + ": " + show(bs) + " vs " +
                                           show(running));
      }
      t.expect(contfrac::sawtooth_sum_direct(x, 10000, opt.bits).overlaps(running), std::string(s) + " library direct");
    }
    return t.outcome();
  });

  r.check("ternary R(11) = hand enumeration", [&] {
    // 11 = 2+2+7 and 3+3+5, three orderings each.
    const HPFloat l2 = log(HPFloat(2L, opt.bits)), l3 = log(HPFloat(3L, opt.bits));
    const HPFloat l5 = log(HPFloat(5L, opt.bits)), l7 = log(HPFloat(7L, opt.bits));
    const HPFloat hand = (square(l2) * l7 + square(l3) * l5) * 3L;
    const HPFloat R = arith::ternary_R(11, opt.bits);
    return Outcome{R.overlaps(hand) && R.radius_double() < 1e-60, show(R) + " vs " + show(hand)};
  });

  r.check("ternary R(n) = ordered triple scan, odd n <= 301", [&] {
    Tally t;
    for (unsigned long n = 7; n <= 301; n += 2) {
      HPFloat scan(opt.bits);
      for (unsigned long p1 = 2; p1 <= n; ++p1)
        for (unsigned long p2 = 2; p1 + p2 < n; ++p2) {
          const unsigned long p3 = n - p1 - p2;
          if (arith::is_prime(p1) && arith::is_prime(p2) && arith::is_prime(p3))
            scan += log(HPFloat(static_cast<long>(p1), opt.bits)) * log(HPFloat(static_cast<long>(p2), opt.bits)) *
                    log(HPFloat(static_cast<long>(p3), opt.bits));
        }
      t.expect(arith::ternary_R(n, opt.bits, opt.jobs).overlaps(scan), "n=" + std::to_string(n));
    }
    return t.outcome();
  });

  return r.take();
}

}  // namespace dioph::verify::detail
