#include "dioph/core_arith.hpp"

namespace dioph {

namespace {

const mpq_class kHalf(1, 2);

}  // namespace

mpz_class floor_int(const Real& x) {
  if (auto* q = x.as_rational()) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q->get_num_mpz_t(), q->get_den_mpz_t());
    return r;
  }
  if (auto* s = x.as_surd()) {
    // floor((a + y)/c) = floor((a + floor(y))/c) for irrational y, c > 0.
    mpz_class root;
    mpz_class radicand = s->b * s->b * s->d;
    mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
    const mpz_class fy = s->b > 0 ? root : mpz_class(-root - 1);
    const mpz_class n = s->a + fy;
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), s->c.get_mpz_t());
    return r;
  }
  return with_adaptive_precision(x, [&](Precision bits) { return enclose(x, bits).floor(); }, 64);
}

mpz_class floor_int(const HPFloat& x) { return x.floor(); }

Real frac_part(const Real& x) { return x - Real(floor_int(x)); }

HPFloat frac_part(const HPFloat& x) { return x - x.floor(); }

Real dist_nearest(const Real& x) {
  Real r = frac_part(x);
  if (r.compare(kHalf) <= 0) return r;
  return Real(1L) - r;
}

HPFloat dist_nearest(const HPFloat& x) {
  HPFloat r = frac_part(x);
  return min(r, 1L - r);
}

bool is_half_integer(const Real& x) {
  if (auto* q = x.as_rational()) return q->get_den() == 2;
  if (x.known_irrational()) return false;
  // DecimalLiteral: decide from the enclosure.
  HPFloat v = enclose(x, 64);
  HPFloat shifted = v + HPFloat(kHalf, 64);
  try {
    shifted.floor();
  } catch (const IntervalStraddlesInteger&) {
    throw PrecisionExhausted(x.to_string() + " may be a half-integer");
  }
  return false;
}

Real signed_nearest(const Real& x) {
  if (is_half_integer(x)) return Real();
  Real r = frac_part(x);
  if (r.compare(kHalf) < 0) return r;
  return r - Real(1L);
}

Real braces_nearest(const Real& x) {
  if (is_half_integer(x)) return Real(kHalf);
  return signed_nearest(x);
}

namespace {

bool point_half_integer(const HPFloat& x) {
  if (!x.is_point()) return false;
  return x.lower_exact().get_den() == 2;
}

}  // namespace

HPFloat signed_nearest(const HPFloat& x) {
  if (point_half_integer(x)) return HPFloat(x.precision());
  const mpz_class m = (x + HPFloat(kHalf, x.precision())).floor();
  return x - m;
}

HPFloat braces_nearest(const HPFloat& x) {
  if (point_half_integer(x)) return HPFloat(kHalf, x.precision());
  return signed_nearest(x);
}

}  // namespace dioph
