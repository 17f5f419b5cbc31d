#include "dioph/bernoulli.hpp"

#include <sstream>

#include "dioph/core_arith.hpp"
#include "dioph/errors.hpp"
#include "detail.hpp"

namespace dioph::bernoulli {

namespace {

std::vector<BernoulliPoly> build_table() {
  std::vector<BernoulliPoly> table;
  table.reserve(kMaxDegree + 1);
  table.emplace_back(0, std::vector<mpq_class>{1});
  for (int k = 1; k <= kMaxDegree; ++k) {
    const auto& prev = table.back().coefficients();
    std::vector<mpq_class> c(static_cast<std::size_t>(k) + 1);
    // B_k' = k B_{k-1}
    for (int j = 1; j <= k; ++j) {
      c[j] = prev[j - 1] * k / j;
      c[j].canonicalize();
    }
    // choose c_0 so that the integral over [0, 1] vanishes
    mpq_class integral = 0;
    for (int j = 1; j <= k; ++j) integral += c[j] / (j + 1);
    c[0] = -integral;
    table.emplace_back(k, std::move(c));
  }
  return table;
}

const std::vector<BernoulliPoly>& table() {
  static const std::vector<BernoulliPoly> t = build_table();
  return t;
}

Precision guard_bits(int k) { return 4 * static_cast<Precision>(k) + 16; }

}  // namespace

mpq_class BernoulliPoly::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

HPFloat BernoulliPoly::operator()(const HPFloat& x) const {
  const Precision p = x.precision();
  HPFloat acc(p);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += HPFloat(*it, p);
  }
  return acc;
}

std::vector<mpq_class> BernoulliPoly::derivative() const {
  std::vector<mpq_class> d;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) d.push_back(coeffs_[j] * static_cast<long>(j));
  if (d.empty()) d.push_back(0);
  return d;
}

mpq_class BernoulliPoly::integral_0_1() const {
  mpq_class s = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) s += coeffs_[j] / static_cast<long>(j + 1);
  return s;
}

std::string BernoulliPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int j = degree_; j >= 0; --j) {
    const mpq_class& c = coeffs_[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && j > 0;
    if (!unit) os << (j > 0 && mag.get_den() != 1 ? "(" + mag.get_str() + ")" : mag.get_str());
    if (j > 0) os << (unit ? "" : "*") << "x";
    if (j > 1) os << "^" << j;
  }
  if (first) os << "0";
  return os.str();
}

const BernoulliPoly& bernoulli_poly(int k) {
  if (k < 0 || k > kMaxDegree) throw DomainError("Bernoulli degree outside [0, 200]: " + std::to_string(k));
  return table()[static_cast<std::size_t>(k)];
}

mpq_class bernoulli_number(int k) { return bernoulli_poly(k).coefficients()[0]; }

mpq_class periodic_bernoulli(int k, const mpq_class& t) {
  if (k < 1) throw DomainError("periodic Bernoulli function needs k >= 1");
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return bernoulli_poly(k)(t - f);
}

HPFloat periodic_bernoulli(int k, const HPFloat& t) {
  if (k < 1) throw DomainError("periodic Bernoulli function needs k >= 1");
  HPFloat r = frac_part(t.with_precision(t.precision() + guard_bits(k)));
  return bernoulli_poly(k)(r).with_precision(t.precision());
}

HPFloat periodic_bernoulli(int k, const Real& t, Precision bits) {
  if (k < 1) throw DomainError("periodic Bernoulli function needs k >= 1");
  if (auto* q = t.as_rational()) return HPFloat(periodic_bernoulli(k, *q), bits);
  Real r = frac_part(t);
  return bernoulli_poly(k)(enclose(r, bits + guard_bits(k)));
}

mpq_class faulhaber_sum(const mpz_class& a, const mpz_class& b, int k) {
  if (a > b) throw DomainError("faulhaber_sum needs a <= b");
  if (k < 0 || k + 1 > kMaxDegree) throw DomainError("faulhaber_sum exponent out of range");
  const BernoulliPoly& B = bernoulli_poly(k + 1);
  return (B(mpq_class(b + 1)) - B(mpq_class(a))) / (k + 1);
}

HPFloat raabe_residual(int k, unsigned long q, const Real& x, Precision bits) {
  if (q == 0) throw DomainError("raabe_residual needs q >= 1");
  const BernoulliPoly& B = bernoulli_poly(k);
  mpz_class qk;
  mpz_ui_pow_ui(qk.get_mpz_t(), q, static_cast<unsigned long>(k));
  if (auto* xq = x.as_rational()) {
    mpq_class lhs = B(*xq * q) * q;
    mpq_class rhs = 0;
    for (unsigned long j = 0; j < q; ++j) rhs += B(*xq + detail::ratio(j, q));
    rhs *= qk;
    return HPFloat(mpq_class(abs(lhs - rhs)), bits);
  }
  const Precision p = bits + guard_bits(k);
  HPFloat xv = enclose(x, p);
  HPFloat lhs = B(xv * static_cast<long>(q)) * static_cast<long>(q);
  HPFloat rhs(p);
  for (unsigned long j = 0; j < q; ++j) rhs += B(xv + HPFloat(detail::ratio(j, q), p));
  rhs *= qk;
  return abs(lhs - rhs);
}

HPFloat bernoulli_sup(int K, Precision bits) {
  if (K < 1) throw DomainError("bernoulli_sup needs K >= 1");
  if (K == 1) return HPFloat(mpq_class(1, 2), bits);
  // Even K: the maximum of |B_K| on [0, 1] is attained at 0.
  if (K % 2 == 0) return HPFloat(mpq_class(abs(bernoulli_number(K))), bits);
  // Odd K >= 3: |B_K(x)| <= 2 zeta(K) K! / (2 pi)^K <= 2 zeta(3) K! / (2 pi)^K.
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(K));
  HPFloat zeta3_upper(mpq_class(120206, 100000), bits);
  HPFloat two_pi = HPFloat::pi(bits) * 2L;
  return zeta3_upper * 2L * HPFloat(fact, bits) / pow(two_pi, static_cast<unsigned long>(K));
}

EMResult euler_maclaurin(const EMFunction& f, long a, long b, int K, Precision bits) {
  if (K < 1) throw DomainError("euler_maclaurin needs K >= 1");
  if (K > kMaxDegree) throw DomainError("euler_maclaurin order too large");
  if (a > b) throw DomainError("euler_maclaurin needs a <= b");
  const HPFloat A(a, bits), B(b, bits);
  HPFloat estimate = f.integral(A, B);
  mpz_class fact = 1;
  for (int k = 1; k <= K; ++k) {
    fact *= k;
    // P_k at an integer equals B_k(0).
    const mpq_class bk = bernoulli_number(k);
    if (bk == 0) continue;
    HPFloat diff = f.derivative(k - 1, B) - f.derivative(k - 1, A);
    HPFloat term = diff * HPFloat(mpq_class(bk / fact), bits);
    if (k % 2 == 1) term = -term;
    estimate += term;
  }
  HPFloat var = f.abs_integral ? f.abs_integral(K, A, B) : abs(f.derivative(K - 1, B) - f.derivative(K - 1, A));
  HPFloat bound = bernoulli_sup(K, bits) * abs(var) / HPFloat(fact, bits);
  return {estimate, HPFloat::hull(bound, bound).with_precision(bits)};
}

HPFloat euler_gamma_at(unsigned long n, int J, Precision bits) {
  if (n < 1 || J < 1) throw DomainError("euler_gamma_at needs n >= 1 and J >= 1");
  mpq_class h = 0;
  for (unsigned long m = 1; m <= n; ++m) h += mpq_class(1, m);
  mpq_class corr = mpq_class(-1, 2 * n);
  mpz_class npow = n;
  for (int j = 1; j <= J; ++j) {
    mpz_class n2j;
    mpz_pow_ui(n2j.get_mpz_t(), npow.get_mpz_t(), 2UL * static_cast<unsigned long>(j));
    corr += bernoulli_number(2 * j) / (mpq_class(2 * j) * n2j);
  }
  mpz_class n2J;
  mpz_pow_ui(n2J.get_mpz_t(), npow.get_mpz_t(), 2UL * static_cast<unsigned long>(J));
  mpq_class rem = abs(bernoulli_number(2 * J)) / (mpq_class(2 * J) * n2J);
  HPFloat value = HPFloat(mpq_class(h + corr), bits) - log(HPFloat(static_cast<long>(n), bits));
  return value.widened(HPFloat(rem, bits));
}

HPFloat euler_gamma(Precision bits) {
  const Precision p = bits + 16;
  const unsigned long n = static_cast<unsigned long>(bits) / 4 + 10;
  // Increase J until the remainder |B_2J| / (2J n^2J) drops below 2^-(bits+8).
  const mpq_class target = mpq_class(1, mpz_class(1) << static_cast<unsigned long>(bits + 8));
  int J = 1;
  for (; 2 * J < kMaxDegree; ++J) {
    mpz_class n2J;
    mpz_ui_pow_ui(n2J.get_mpz_t(), n, 2UL * static_cast<unsigned long>(J));
    if (abs(bernoulli_number(2 * J)) / (mpq_class(2 * J) * n2J) < target) break;
  }
  return euler_gamma_at(n, J, p);
}

HPFloat stirling_check(unsigned long n, Precision bits) {
  if (n < 1) throw DomainError("stirling_check needs n >= 1");
  const Precision p = bits + 32;
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  const HPFloat N(static_cast<long>(n), p);
  HPFloat log_fact = log(HPFloat(fact, p));
  HPFloat log_approx = N * log(N) - N + log(HPFloat::pi(p) * 2L * N) / 2L;
  return exp(log_fact - log_approx);
}

WatsonResult watson_csc_sum(unsigned long n, int J, Precision bits) {
  if (n < 2) throw DomainError("watson_csc_sum needs n >= 2");
  if (J < 0 || 2 * J > kMaxDegree) throw DomainError("watson_csc_sum term count out of range");
  const Precision p = bits + 16;
  const HPFloat pi = HPFloat::pi(p);
  const long nl = static_cast<long>(n);
  HPFloat direct(p);
  for (long m = 1; m < nl; ++m) direct += reciprocal(sin(pi * m / nl));

  const HPFloat N(nl, p);
  HPFloat asym = N * log(N) * 2L / pi;
  HPFloat lin = HPFloat::ln2(p) * 2L + euler_gamma(p) * 2L - log(pi) * 2L;
  asym += N * lin / pi;
  mpz_class fact = 1;
  for (int j = 1; j <= J; ++j) {
    fact *= (2 * j - 1) * (2 * j);
    const mpq_class b = bernoulli_number(2 * j);
    mpz_class two2j = mpz_class(1) << (2UL * static_cast<unsigned long>(j));
    mpq_class coeff = b * b * mpq_class(two2j - 2) / (mpq_class(j) * fact);
    if (j % 2 == 1) coeff = -coeff;
    HPFloat term = HPFloat(coeff, p) * pow(pi, 2UL * static_cast<unsigned long>(j)) /
                   pow(N, 2UL * static_cast<unsigned long>(j) - 1);
    asym += term / pi;
  }
  return {direct, asym};
}

}  // namespace dioph::bernoulli
