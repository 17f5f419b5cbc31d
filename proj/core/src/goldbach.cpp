#include <algorithm>

#include "detail.hpp"
#include "dioph/arith_funcs.hpp"
#include "dioph/errors.hpp"

namespace dioph::arith {

SingularSeries singular_series(unsigned long n, unsigned long P, Precision bits) {
  if (n < 1) throw DomainError("singular_series needs n >= 1");
  if (P < 2) throw DomainError("singular_series needs P >= 2");
  HPFloat s(1L, bits);
  auto factor = [&](unsigned long p) {
    const mpz_class m = p - 1;
    if (n % p == 0) {
      s *= HPFloat(1 - mpq_class(1, m * m), bits);
    } else {
      s *= HPFloat(1 + mpq_class(1, m * m * m), bits);
    }
  };
  for (unsigned long p : primes_up_to(P)) factor(p);
  // Primes dividing n beyond the cutoff are exact factors, not tail.
  unsigned long rest = n;
  for (unsigned long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    if (p > P) factor(p);
    while (rest % p == 0) rest /= p;
  }
  if (rest > P) factor(rest);
  // Remaining factors are 1 + (p-1)^-3 with p - 1 >= P:
  // sum_{m>=P} m^-3 <= P^-3 + 1/(2P^2).
  const mpz_class Pz = P;
  const HPFloat tail(mpq_class(1, Pz * Pz * Pz) + mpq_class(1, 2 * Pz * Pz), bits);
  SingularSeries out{s, s, tail};
  if (!s.contains_zero()) out.value = HPFloat::hull(s, s * exp(tail));
  return out;
}

HPFloat ternary_R(unsigned long n, Precision bits, unsigned jobs) {
  if (n < 6) return HPFloat(bits);
  const std::vector<unsigned long> primes = primes_up_to(n);
  std::vector<bool> prime(n + 1);
  for (unsigned long p : primes) prime[p] = true;
  std::vector<HPFloat> logs;
  logs.reserve(primes.size());
  for (unsigned long p : primes) logs.push_back(log(HPFloat(static_cast<long>(p), bits)));
  std::vector<std::size_t> index(n + 1);
  for (std::size_t i = 0; i < primes.size(); ++i) index[primes[i]] = i;

  // p1 <= p2 <= p3, weighted by the number of distinct orderings.
  std::vector<HPFloat> partial(primes.size(), HPFloat(bits));
  detail::parallel_for(primes.size(), jobs, [&](std::size_t i) {
    const unsigned long p1 = primes[i];
    if (3 * p1 > n) return;
    HPFloat s(bits);
    for (std::size_t j = i; j < primes.size(); ++j) {
      const unsigned long p2 = primes[j];
      if (p1 + 2 * p2 > n) break;
      const unsigned long p3 = n - p1 - p2;
      if (!prime[p3]) continue;
      const long w = (p1 == p2 && p2 == p3) ? 1 : (p1 == p2 || p2 == p3) ? 3 : 6;
      s += logs[i] * logs[j] * logs[index[p3]] * w;
    }
    partial[i] = std::move(s);
  });
  HPFloat total(bits);
  for (const auto& s : partial) total += s;
  return total;
}

GoldbachRatio goldbach_ratio(unsigned long n, unsigned long P, Precision bits, unsigned jobs) {
  if (n % 2 == 0) throw DomainError("goldbach_ratio needs odd n (the singular series vanishes for even n)");
  HPFloat R = ternary_R(n, bits, jobs);
  HPFloat S = singular_series(n, P, bits).value;
  const HPFloat n2 = square(HPFloat(static_cast<long>(n), bits));
  HPFloat ratio = R * 2L / (n2 * S);
  return {n, std::move(R), std::move(S), std::move(ratio)};
}

}  // namespace dioph::arith
