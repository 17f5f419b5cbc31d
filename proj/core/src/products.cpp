#include "dioph/products.hpp"

#include "detail.hpp"
#include "dioph/core_arith.hpp"
#include "dioph/errors.hpp"

namespace dioph::products {

namespace {

template <class F>
auto with_evaluator(const Real& x, Precision bits, F&& f) {
  return with_adaptive_precision(x, [&](Precision p) { return f(detail::TermEvaluator(x, p)); }, bits);
}

template <class F>
auto with_evaluator(const ConstructedExpansion& x, Precision bits, F&& f) {
  try {
    return f(detail::TermEvaluator(frac_part(x.enclose(bits))));
  } catch (const IntervalStraddlesInteger& e) {
    throw PrecisionExhausted(x.describe() + ": exact prefix too short: " + e.what());
  }
}

// log |sin k pi x|
HPFloat log_sin(const detail::TermEvaluator& ev, const HPFloat& pi, unsigned long k) {
  return log(sin(pi * ev.norm_positive(k)));
}

std::size_t block_count(unsigned long n) { return (n + detail::kBlockSize - 1) / detail::kBlockSize; }

void check_length(unsigned long n) {
  if (n > kMaxProductLength) throw HorizonExceeded("product length " + std::to_string(n) + " exceeds the horizon");
}

template <class Term>
HPFloat block_sum(unsigned long from, unsigned long to, unsigned jobs, Precision p, const Term& term) {
  if (from > to) return HPFloat(p);
  const unsigned long first_block = (from - 1) / detail::kBlockSize;
  const std::size_t nblocks = (to - 1) / detail::kBlockSize - first_block + 1;
  std::vector<HPFloat> partial(nblocks, HPFloat(p));
  detail::parallel_for(nblocks, jobs, [&](std::size_t b) {
    const unsigned long lo = std::max(from, (first_block + b) * detail::kBlockSize + 1);
    const unsigned long hi = std::min(to, (first_block + b + 1) * detail::kBlockSize);
    HPFloat s(p);
    for (unsigned long k = lo; k <= hi; ++k) s += term(k);
    partial[b] = std::move(s);
  });
  HPFloat total(p);
  for (const auto& s : partial) total += s;
  return total;
}

struct Extremes {
  HPFloat lo, hi;
  bool any = false;

  void add(const HPFloat& v) {
    if (!any) {
      lo = hi = v;
      any = true;
      return;
    }
    lo = min(lo, v);
    hi = max(hi, v);
  }
  void merge(const Extremes& o) {
    if (!o.any) return;
    if (!any) {
      *this = o;
      return;
    }
    lo = min(lo, o.lo);
    hi = max(hi, o.hi);
  }
};

// Extremes of key(m, S_m) over m in [first, n] with S_m = sum_{k<=m} term(k).
// Block totals first, then each block is rescanned from its prefix offset.
template <class Term, class Key>
Extremes scan_extremes(unsigned long first, unsigned long n, unsigned jobs, Precision p, const Term& term,
                       const Key& key) {
  const std::size_t nblocks = block_count(n);
  std::vector<HPFloat> totals(nblocks, HPFloat(p));
  detail::parallel_for(nblocks, jobs, [&](std::size_t b) {
    totals[b] = block_sum(b * detail::kBlockSize + 1, std::min(n, (b + 1) * detail::kBlockSize), 1, p, term);
  });
  std::vector<HPFloat> offset(nblocks, HPFloat(p));
  for (std::size_t b = 1; b < nblocks; ++b) offset[b] = offset[b - 1] + totals[b - 1];
  std::vector<Extremes> ext(nblocks);
  detail::parallel_for(nblocks, jobs, [&](std::size_t b) {
    const unsigned long hi = std::min(n, (b + 1) * detail::kBlockSize);
    if (hi < first) return;
    HPFloat s = offset[b];
    for (unsigned long m = b * detail::kBlockSize + 1; m <= hi; ++m) {
      s += term(m);
      if (m >= first) ext[b].add(key(m, s));
    }
  });
  Extremes out;
  for (const auto& e : ext) out.merge(e);
  return out;
}

template <class X>
RadiusRelation relation(const X& x, unsigned long n, const ProductOptions& opt) {
  if (n < 2) throw DomainError("radius_relation_check needs n >= 2");
  check_length(n);
  const unsigned long first = (n + 1) / 2;
  return with_evaluator(x, opt.bits, [&](const detail::TermEvaluator& ev) {
    const Precision p = ev.bits();
    const HPFloat pi = HPFloat::pi(p);
    const auto term = [&](unsigned long k) { return log_sin(ev, pi, k); };
    const Extremes prod = scan_extremes(first, n, opt.jobs, p, term,
                                        [](unsigned long m, const HPFloat& s) { return s / static_cast<long>(m); });
    const std::size_t count = n - first + 1;
    std::vector<Extremes> single(block_count(count));
    detail::parallel_for(single.size(), opt.jobs, [&](std::size_t b) {
      const unsigned long lo = first + b * detail::kBlockSize;
      const unsigned long hi = std::min(n, lo + detail::kBlockSize - 1);
      for (unsigned long m = lo; m <= hi; ++m) single[b].add(term(m) / static_cast<long>(m));
    });
    Extremes rho;
    for (const auto& e : single) rho.merge(e);
    HPFloat R1 = exp(prod.lo), rho1 = exp(rho.lo);
    HPFloat ratio = R1 * 2L / rho1;
    return RadiusRelation{std::move(R1), std::move(rho1), std::move(ratio)};
  });
}

}  // namespace

HPFloat log_sin_product(const Real& x, unsigned long n, const ProductOptions& opt) {
  check_length(n);
  return with_evaluator(x, opt.bits, [&](const detail::TermEvaluator& ev) {
    const HPFloat pi = HPFloat::pi(ev.bits());
    return block_sum(1, n, opt.jobs, ev.bits(), [&](unsigned long k) { return log_sin(ev, pi, k); });
  });
}

HPFloat sin_product_geomean(const Real& x, unsigned long n, const ProductOptions& opt) {
  if (n < 1) throw DomainError("sin_product_geomean needs n >= 1");
  return exp(log_sin_product(x, n, opt) / static_cast<long>(n));
}

HPFloat log_two_sin_product(const Real& w, unsigned long n, const ProductOptions& opt) {
  check_length(n);
  return with_evaluator(w, opt.bits, [&](const detail::TermEvaluator& ev) {
    const HPFloat pi = HPFloat::pi(ev.bits());
    return block_sum(1, n, opt.jobs, ev.bits(),
                     [&](unsigned long r) { return log(sin(pi * ev.norm_positive(r)) * 2L); });
  });
}

HPFloat two_sin_product(const Real& w, unsigned long n, const ProductOptions& opt) {
  return exp(log_two_sin_product(w, n, opt));
}

mpz_class fibonacci(unsigned long n) {
  mpz_class f;
  mpz_fib_ui(f.get_mpz_t(), n);
  return f;
}

FibonacciProducts fibonacci_products(unsigned long n, const ProductOptions& opt) {
  if (n < 3) throw DomainError("fibonacci_products needs n >= 3");
  const mpz_class Fn = fibonacci(n), Fn1 = fibonacci(n - 1);
  if (Fn > kMaxProductLength) throw HorizonExceeded("F_" + std::to_string(n) + " exceeds the product horizon");
  const unsigned long a = Fn1.get_ui(), b = Fn.get_ui();
  const Real g = Real::parse("golden");
  return with_evaluator(g, opt.bits, [&](const detail::TermEvaluator& ev) {
    const Precision p = ev.bits();
    const HPFloat pi = HPFloat::pi(p);
    const auto term = [&](unsigned long r) { return log(sin(pi * ev.norm_positive(r)) * 2L); };
    const HPFloat s_a = block_sum(1, a, opt.jobs, p, term);
    const HPFloat s_b1 = s_a + block_sum(a + 1, b - 1, opt.jobs, p, term);
    HPFloat P = exp(s_b1 + term(b));
    const HPFloat F(Fn, p);
    const HPFloat sqrt5 = sqrt(HPFloat(5L, p));
    HPFloat printed = exp(s_a) / F;
    HPFloat corrected = exp(s_b1) / F;
    HPFloat t_printed = P / (pi * 2L * sqrt5);
    HPFloat t_corrected = P * sqrt5 / (pi * 2L);
    return FibonacciProducts{n,         Fn, std::move(P), std::move(printed), std::move(corrected), std::move(t_printed),
                             std::move(t_corrected)};
  });
}

PowerWindow power_window(const Real& w, unsigned long n, const ProductOptions& opt) {
  if (n < 2) throw DomainError("power_window needs n >= 2");
  check_length(n);
  return with_evaluator(w, opt.bits, [&](const detail::TermEvaluator& ev) {
    const Precision p = ev.bits();
    const HPFloat pi = HPFloat::pi(p);
    const Extremes e = scan_extremes(
        2, n, opt.jobs, p, [&](unsigned long r) { return log(sin(pi * ev.norm_positive(r)) * 2L); },
        [p](unsigned long m, const HPFloat& s) { return s / log(HPFloat(static_cast<long>(m), p)); });
    return PowerWindow{e.lo, e.hi};
  });
}

RadiusRelation radius_relation_check(const Real& x, unsigned long n, const ProductOptions& opt) {
  if (x.is_rational()) throw DomainError("radius_relation_check needs an irrational x (rational x gives poles)");
  return relation(x, n, opt);
}

RadiusRelation radius_relation_check(const ConstructedExpansion& x, unsigned long n, const ProductOptions& opt) {
  return relation(x, n, opt);
}

}  // namespace dioph::products
