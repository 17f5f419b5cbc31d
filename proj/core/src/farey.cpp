#include "dioph/arith_funcs.hpp"
#include "dioph/errors.hpp"
#include "detail.hpp"

namespace dioph::arith {

FareySequence farey(unsigned long N) {
  if (N < 1) throw DomainError("farey needs N >= 1");
  FareySequence F{N, {mpq_class(0)}};
  // h/k, h2/k2 adjacent; the next term is (j h2 - h)/(j k2 - k) with j = [(N + k)/k2].
  unsigned long h = 0, k = 1, h2 = 1, k2 = N;
  for (;;) {
    F.elements.emplace_back(h2, k2);
    if (h2 == k2) break;
    const unsigned long j = (N + k) / k2;
    const unsigned long h3 = j * h2 - h, k3 = j * k2 - k;
    h = h2;
    k = k2;
    h2 = h3;
    k2 = k3;
  }
  return F;
}

std::vector<unsigned long> totients(unsigned long N) {
  std::vector<unsigned long> phi(N + 1);
  for (unsigned long i = 0; i <= N; ++i) phi[i] = i;
  for (unsigned long p = 2; p <= N; ++p) {
    if (phi[p] != p) continue;
    for (unsigned long m = p; m <= N; m += p) phi[m] -= phi[m] / p;
  }
  return phi;
}

mpz_class totient_sum(unsigned long N) {
  mpz_class s = 0;
  const auto phi = totients(N);
  for (unsigned long k = 1; k <= N; ++k) s += phi[k];
  return s;
}

HPFloat mertens_ratio(unsigned long N, Precision bits) {
  if (N < 1) throw DomainError("mertens_ratio needs N >= 1");
  const HPFloat pi = HPFloat::pi(bits);
  const mpz_class N2 = mpz_class(N) * N * 3;
  return HPFloat(totient_sum(N), bits) * square(pi) / HPFloat(N2, bits);
}

mpq_class franel_landau_sum(unsigned long N) {
  const FareySequence F = farey(N);
  const mpz_class Phi = static_cast<unsigned long>(F.elements.size() - 1);
  // |h/k - n/Phi| = |h Phi - n k| / (k Phi): collect the numerators per k.
  std::vector<mpz_class> by_k(N + 1);
  mpz_class t;
  for (std::size_t n = 1; n < F.elements.size(); ++n) {
    const mpq_class& r = F.elements[n];
    const unsigned long k = r.get_den().get_ui();
    t = r.get_num() * Phi - r.get_den() * n;
    by_k[k] += abs(t);
  }
  mpq_class s = 0;
  for (unsigned long k = 1; k <= N; ++k)
    if (by_k[k] != 0) s += detail::ratio(by_k[k], k);
  s /= Phi;
  s.canonicalize();
  return s;
}

FordCircle::FordCircle(mpz_class a, mpz_class b) : a_(std::move(a)), b_(std::move(b)) {
  if (b_ < 1) throw DomainError("a Ford circle needs b >= 1");
  if (gcd(a_, b_) != 1) throw DomainError("a Ford circle needs gcd(a, b) = 1");
}

GaussianRational FordCircle::center() const { return {mpq_class(a_, b_), radius()}; }

mpq_class FordCircle::radius() const { return mpq_class(1, 2 * b_ * b_); }

Tangency ford_tangency(const FordCircle& c1, const FordCircle& c2) {
  const mpz_class det = c1.b() * c2.a() - c1.a() * c2.b();
  if (det == 0) throw DomainError("ford_tangency needs two different circles");
  if (det * det != 1) return {false, std::nullopt};
  const GaussianRational z1 = c1.center(), z2 = c2.center();
  const mpq_class r1 = c1.radius();
  const mpq_class t = r1 / (r1 + c2.radius());
  return {true, GaussianRational{z1.re + t * (z2.re - z1.re), z1.im + t * (z2.im - z1.im)}};
}

}  // namespace dioph::arith
