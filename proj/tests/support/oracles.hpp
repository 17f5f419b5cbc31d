#pragma once

// Slow, independent reference implementations used only by tests.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

struct Bracket {
  mpq_class lo, hi;
  bool contains(const mpq_class& v) const { return lo <= v && v <= hi; }
};

inline mpq_class pow_q(const mpq_class& x, unsigned long k) {
  mpq_class r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= x;
  return r;
}

/// arctan(1/n) by its alternating series: consecutive partial sums bracket it.
inline Bracket arctan_inv(long n, unsigned long terms) {
  mpq_class s = 0, prev = 0, term(1, n);
  const mpq_class step(1, n * n);
  for (unsigned long k = 0; k <= terms; ++k) {
    prev = s;
    mpq_class t = term / (2 * k + 1);
    t.canonicalize();
    s += k % 2 == 0 ? t : mpq_class(-t);
    term *= step;
  }
  return {std::min(prev, s), std::max(prev, s)};
}

/// pi = 16 arctan(1/5) - 4 arctan(1/239)
inline Bracket machin_pi(unsigned long terms = 60) {
  const Bracket a = arctan_inv(5, terms), b = arctan_inv(239, terms);
  return {16 * a.lo - 4 * b.hi, 16 * a.hi - 4 * b.lo};
}

/// e from sum 1/k!, tail below 2/(n+1)!
inline Bracket euler_e(unsigned long n = 60) {
  mpq_class s = 0, f = 1;
  for (unsigned long k = 0; k <= n; ++k) {
    if (k > 0) f /= k;
    s += f;
  }
  return {s, s + 2 * f / (n + 1)};
}

/// sqrt(d) by Newton from above; the lower end is d / upper.
inline Bracket sqrt_q(const mpq_class& d, int iterations = 12) {
  mpq_class x = d + 1;
  for (int i = 0; i < iterations; ++i) x = (x + d / x) / 2;
  return {d / x, x};
}

inline Bracket golden() {
  const Bracket s = sqrt_q(5);
  return {(s.lo - 1) / 2, (s.hi - 1) / 2};
}

/// Akiyama-Tanigawa, giving B_1 = +1/2; flipped to the B_1 = -1/2 convention.
inline std::vector<mpq_class> bernoulli_numbers(int n) {
  std::vector<mpq_class> out, a(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    a[static_cast<std::size_t>(m)] = mpq_class(1, m + 1);
    for (int j = m; j >= 1; --j) {
      auto& aj = a[static_cast<std::size_t>(j - 1)];
      aj = j * (aj - a[static_cast<std::size_t>(j)]);
    }
    out.push_back(m == 1 ? mpq_class(-a[0]) : a[0]);
  }
  return out;
}

/// Quotients of a rational in (0, 1) by Euclid.
inline std::vector<mpz_class> cf_rational(mpz_class p, mpz_class q) {
  std::vector<mpz_class> a;
  while (p != 0) {
    mpz_class t = q / p;
    a.push_back(t);
    const mpz_class r = q - t * p;
    q = p;
    p = r;
  }
  return a;
}

/// Partial quotients of sqrt(D), D not a square, by the integer recurrence;
/// a[0] is the floor.
inline std::vector<long> cf_sqrt(long D, std::size_t n) {
  const long a0 = static_cast<long>(std::sqrt(static_cast<double>(D)));
  std::vector<long> a{a0};
  long m = 0, d = 1, ak = a0;
  while (a.size() < n + 1) {
    m = d * ak - m;
    d = (D - m * m) / d;
    ak = (a0 + m) / d;
    a.push_back(ak);
  }
  return a;
}

inline std::vector<mpq_class> farey(unsigned long N) {
  std::vector<mpq_class> v;
  for (unsigned long b = 1; b <= N; ++b)
    for (unsigned long a = 0; a <= b; ++a) {
      mpq_class r(a, b);
      r.canonicalize();
      v.push_back(r);
    }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// ((x)) = x - [x] - 1/2 off the integers, 0 on them
inline mpq_class sawtooth(const mpq_class& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (x == f) return 0;
  return x - f - mpq_class(1, 2);
}

inline mpq_class dedekind(long h, long k) {
  mpq_class s = 0;
  for (long r = 1; r < k; ++r) {
    mpq_class a(r, k), b(h * r, k);
    a.canonicalize();
    b.canonicalize();
    s += sawtooth(a) * sawtooth(b);
  }
  return s;
}

/// p(0..n) by counting with parts 1..n.
inline std::vector<mpz_class> partitions(unsigned long n) {
  std::vector<mpz_class> p(n + 1, 0);
  p[0] = 1;
  for (unsigned long part = 1; part <= n; ++part)
    for (unsigned long s = part; s <= n; ++s) p[s] += p[s - part];
  return p;
}

inline unsigned long divisor_count(unsigned long n) {
  unsigned long c = 0;
  for (unsigned long d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

inline bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Euler's criterion.
inline int legendre(long a, unsigned long p) {
  mpz_class r, base((a % static_cast<long>(p) + static_cast<long>(p)) % static_cast<long>(p));
  mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), (p - 1) / 2, mpz_class(p).get_mpz_t());
  return r == 0 ? 0 : r == 1 ? 1 : -1;
}

/// Both discrepancies of a finite set by scanning interval endpoints.
inline std::pair<mpq_class, mpq_class> discrepancies(std::vector<mpq_class> y) {
  std::sort(y.begin(), y.end());
  const mpq_class N(static_cast<long>(y.size()));
  auto in = [&](const mpq_class& a, bool a_closed, const mpq_class& b, bool b_closed) -> mpq_class {
    long c = 0;
    for (const auto& t : y) c += (a_closed ? t >= a : t > a) && (b_closed ? t <= b : t < b);
    return mpq_class(c) / N;
  };
  std::vector<mpq_class> ends{0, 1};
  ends.insert(ends.end(), y.begin(), y.end());
  mpq_class star = 0, d = 0;
  for (const auto& b : ends) {
    star = std::max(star, mpq_class(abs(in(0, true, b, false) - b)));
    star = std::max(star, mpq_class(abs(in(0, true, b, true) - b)));
  }
  for (const auto& a : ends)
    for (const auto& b : ends)
      if (a <= b)
        for (bool ac : {false, true})
          for (bool bc : {false, true}) d = std::max(d, mpq_class(abs(in(a, ac, b, bc) - (b - a))));
  return {star, d};
}

}  // namespace oracle
