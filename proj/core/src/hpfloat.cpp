#include "dioph/hpfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "dioph/errors.hpp"

namespace dioph {

namespace {

// RAII scratch value for intermediate MPFR results.
class Scratch {
 public:
  explicit Scratch(Precision prec) { mpfr_init2(v_, prec); }
  ~Scratch() { mpfr_clear(v_); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_ptr get() { return v_; }
  operator mpfr_ptr() { return v_; }
  mpfr_ptr operator->() { return v_; }

 private:
  mpfr_t v_;
};

void set_q(mpfr_ptr dst, const mpq_class& q, mpfr_rnd_t rnd) { mpfr_set_q(dst, q.get_mpq_t(), rnd); }

mpq_class to_q(mpfr_srcptr v) {
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v);
  mpq_class q(m);
  if (e >= 0) {
    mpz_mul_2exp(q.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(q.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  q.canonicalize();
  return q;
}

std::string format(mpfr_srcptr v, int digits, mpfr_rnd_t rnd) {
  char* buf = nullptr;
  const char* fmt = rnd == MPFR_RNDD ? "%.*RDg" : rnd == MPFR_RNDU ? "%.*RUg" : "%.*RNg";
  mpfr_asprintf(&buf, fmt, digits, v);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

}  // namespace

Precision default_precision() {
  if (const char* env = std::getenv("DIOPH_PRECISION_BITS")) {
    char* end = nullptr;
    long bits = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && bits >= kMinPrecision && bits <= kPrecisionCap) return bits;
  }
  return kDefaultPrecision;
}

HPFloat::HPFloat(Uninit, Precision prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
}

HPFloat::HPFloat(Precision prec) : HPFloat(Uninit{}, prec) {
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

HPFloat::HPFloat(long value, Precision prec) : HPFloat(Uninit{}, prec) {
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

HPFloat::HPFloat(const mpz_class& value, Precision prec) : HPFloat(Uninit{}, prec) {
  mpfr_set_z(lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_, value.get_mpz_t(), MPFR_RNDU);
}

HPFloat::HPFloat(const mpq_class& value, Precision prec) : HPFloat(Uninit{}, prec) {
  set_q(lo_, value, MPFR_RNDD);
  set_q(hi_, value, MPFR_RNDU);
}

HPFloat HPFloat::from_double(double value, Precision prec) {
  HPFloat r(Uninit{}, std::max<Precision>(prec, 53));
  mpfr_set_d(r.lo_, value, MPFR_RNDD);
  mpfr_set_d(r.hi_, value, MPFR_RNDU);
  return r;
}

HPFloat HPFloat::from_endpoints(const mpq_class& lo, const mpq_class& hi, Precision prec) {
  if (lo > hi) throw DomainError("HPFloat::from_endpoints: lo > hi");
  HPFloat r(Uninit{}, prec);
  set_q(r.lo_, lo, MPFR_RNDD);
  set_q(r.hi_, hi, MPFR_RNDU);
  return r;
}

HPFloat HPFloat::hull(const HPFloat& a, const HPFloat& b) {
  HPFloat r(Uninit{}, std::max(a.precision(), b.precision()));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

HPFloat HPFloat::pi(Precision prec) {
  HPFloat r(Uninit{}, prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

HPFloat HPFloat::ln2(Precision prec) {
  HPFloat r(Uninit{}, prec);
  mpfr_const_log2(r.lo_, MPFR_RNDD);
  mpfr_const_log2(r.hi_, MPFR_RNDU);
  return r;
}

HPFloat::HPFloat(const HPFloat& other) : HPFloat(Uninit{}, other.precision()) {
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

HPFloat::HPFloat(HPFloat&& other) noexcept : HPFloat(Uninit{}, mpfr_get_prec(other.lo_)) {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

HPFloat& HPFloat::operator=(const HPFloat& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.precision());
    mpfr_set_prec(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

HPFloat& HPFloat::operator=(HPFloat&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

HPFloat::~HPFloat() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void HPFloat::raise_precision(Precision prec) {
  if (prec > precision()) {
    mpfr_prec_round(lo_, prec, MPFR_RNDD);
    mpfr_prec_round(hi_, prec, MPFR_RNDU);
  }
}

HPFloat HPFloat::with_precision(Precision prec) const {
  HPFloat r(Uninit{}, prec);
  mpfr_set(r.lo_, lo_, MPFR_RNDD);
  mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

double HPFloat::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double HPFloat::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double HPFloat::to_double() const {
  Scratch m(precision() + 1);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  return mpfr_get_d(m, MPFR_RNDN);
}

mpq_class HPFloat::lower_exact() const { return to_q(lo_); }
mpq_class HPFloat::upper_exact() const { return to_q(hi_); }
mpq_class HPFloat::mid_exact() const { return (to_q(lo_) + to_q(hi_)) / 2; }

HPFloat HPFloat::mid() const {
  HPFloat r(Uninit{}, precision());
  mpfr_add(r.lo_, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDN);
  mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
  return r;
}

HPFloat HPFloat::radius() const {
  HPFloat m = mid();
  HPFloat r(Uninit{}, precision());
  Scratch a(precision()), b(precision());
  mpfr_sub(a, hi_, m.lo_, MPFR_RNDU);
  mpfr_sub(b, m.lo_, lo_, MPFR_RNDU);
  mpfr_max(r.hi_, a, b, MPFR_RNDU);
  mpfr_set(r.lo_, r.hi_, MPFR_RNDD);
  return r;
}

HPFloat HPFloat::width() const {
  HPFloat r(Uninit{}, precision());
  mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
  mpfr_set(r.lo_, r.hi_, MPFR_RNDD);
  return r;
}

double HPFloat::radius_double() const { return radius().upper(); }

HPFloat HPFloat::widened(const HPFloat& r) const {
  HPFloat out(Uninit{}, std::max(precision(), r.precision()));
  Scratch a(out.precision());
  mpfr_abs(a, r.hi_, MPFR_RNDU);
  if (mpfr_cmpabs(r.lo_, a) > 0) mpfr_abs(a, r.lo_, MPFR_RNDU);
  mpfr_sub(out.lo_, lo_, a, MPFR_RNDD);
  mpfr_add(out.hi_, hi_, a, MPFR_RNDU);
  return out;
}

bool HPFloat::contains(const mpq_class& v) const {
  return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool HPFloat::contains(const HPFloat& inner) const {
  return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_greaterequal_p(hi_, inner.hi_);
}

bool HPFloat::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool HPFloat::overlaps(const HPFloat& other) const {
  return mpfr_lessequal_p(lo_, other.hi_) && mpfr_lessequal_p(other.lo_, hi_);
}

mpz_class HPFloat::floor() const {
  mpz_class a, b;
  mpfr_get_z(a.get_mpz_t(), lo_, MPFR_RNDD);
  mpfr_get_z(b.get_mpz_t(), hi_, MPFR_RNDD);
  if (a != b) {
    throw IntervalStraddlesInteger("floor of " + to_interval_string(12) + " is ambiguous at " +
                                   std::to_string(precision()) + " bits");
  }
  return a;
}

std::string HPFloat::to_string(int digits) const {
  HPFloat m = mid();
  return format(m.lo_, digits, MPFR_RNDN);
}

std::string HPFloat::to_interval_string(int digits) const {
  return "[" + format(lo_, digits, MPFR_RNDD) + ", " + format(hi_, digits, MPFR_RNDU) + "]";
}

HPFloat HPFloat::operator-() const {
  HPFloat r(Uninit{}, precision());
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

HPFloat& HPFloat::operator+=(const HPFloat& b) {
  raise_precision(b.precision());
  mpfr_add(lo_, lo_, b.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, b.hi_, MPFR_RNDU);
  return *this;
}

HPFloat& HPFloat::operator-=(const HPFloat& b) {
  raise_precision(b.precision());
  if (this == &b) {
    Scratch w(precision());
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    mpfr_neg(lo_, w, MPFR_RNDD);
    mpfr_set(hi_, w, MPFR_RNDU);
    return *this;
  }
  mpfr_sub(lo_, lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, b.lo_, MPFR_RNDU);
  return *this;
}

HPFloat& HPFloat::operator*=(const HPFloat& b) {
  raise_precision(b.precision());
  const Precision p = precision();
  if (mpfr_sgn(lo_) >= 0 && mpfr_sgn(b.lo_) >= 0) {
    mpfr_mul(lo_, lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(hi_, hi_, b.hi_, MPFR_RNDU);
    return *this;
  }
  Scratch l1(p), l2(p), l3(p), l4(p), h1(p), h2(p), h3(p), h4(p);
  mpfr_mul(l1, lo_, b.lo_, MPFR_RNDD);
  mpfr_mul(l2, lo_, b.hi_, MPFR_RNDD);
  mpfr_mul(l3, hi_, b.lo_, MPFR_RNDD);
  mpfr_mul(l4, hi_, b.hi_, MPFR_RNDD);
  mpfr_mul(h1, lo_, b.lo_, MPFR_RNDU);
  mpfr_mul(h2, lo_, b.hi_, MPFR_RNDU);
  mpfr_mul(h3, hi_, b.lo_, MPFR_RNDU);
  mpfr_mul(h4, hi_, b.hi_, MPFR_RNDU);
  mpfr_min(l1, l1, l2, MPFR_RNDD);
  mpfr_min(l3, l3, l4, MPFR_RNDD);
  mpfr_min(lo_, l1, l3, MPFR_RNDD);
  mpfr_max(h1, h1, h2, MPFR_RNDU);
  mpfr_max(h3, h3, h4, MPFR_RNDU);
  mpfr_max(hi_, h1, h3, MPFR_RNDU);
  return *this;
}

HPFloat& HPFloat::operator/=(const HPFloat& b) {
  if (b.contains_zero()) throw DomainError("division by an interval containing zero: " + b.to_interval_string(8));
  raise_precision(b.precision());
  const Precision p = precision();
  Scratch l1(p), l2(p), l3(p), l4(p), h1(p), h2(p), h3(p), h4(p);
  mpfr_div(l1, lo_, b.lo_, MPFR_RNDD);
  mpfr_div(l2, lo_, b.hi_, MPFR_RNDD);
  mpfr_div(l3, hi_, b.lo_, MPFR_RNDD);
  mpfr_div(l4, hi_, b.hi_, MPFR_RNDD);
  mpfr_div(h1, lo_, b.lo_, MPFR_RNDU);
  mpfr_div(h2, lo_, b.hi_, MPFR_RNDU);
  mpfr_div(h3, hi_, b.lo_, MPFR_RNDU);
  mpfr_div(h4, hi_, b.hi_, MPFR_RNDU);
  mpfr_min(l1, l1, l2, MPFR_RNDD);
  mpfr_min(l3, l3, l4, MPFR_RNDD);
  mpfr_min(lo_, l1, l3, MPFR_RNDD);
  mpfr_max(h1, h1, h2, MPFR_RNDU);
  mpfr_max(h3, h3, h4, MPFR_RNDU);
  mpfr_max(hi_, h1, h3, MPFR_RNDU);
  return *this;
}

HPFloat& HPFloat::operator+=(long b) {
  mpfr_add_si(lo_, lo_, b, MPFR_RNDD);
  mpfr_add_si(hi_, hi_, b, MPFR_RNDU);
  return *this;
}

HPFloat& HPFloat::operator-=(long b) {
  mpfr_sub_si(lo_, lo_, b, MPFR_RNDD);
  mpfr_sub_si(hi_, hi_, b, MPFR_RNDU);
  return *this;
}

HPFloat& HPFloat::operator*=(long b) {
  if (b >= 0) {
    mpfr_mul_si(lo_, lo_, b, MPFR_RNDD);
    mpfr_mul_si(hi_, hi_, b, MPFR_RNDU);
  } else {
    Scratch t(precision());
    mpfr_mul_si(t, hi_, b, MPFR_RNDD);
    mpfr_mul_si(hi_, lo_, b, MPFR_RNDU);
    mpfr_set(lo_, t, MPFR_RNDD);
  }
  return *this;
}

HPFloat& HPFloat::operator/=(long b) {
  if (b == 0) throw DomainError("division by zero");
  mpfr_div_si(lo_, lo_, b, b > 0 ? MPFR_RNDD : MPFR_RNDU);
  mpfr_div_si(hi_, hi_, b, b > 0 ? MPFR_RNDU : MPFR_RNDD);
  if (b < 0) mpfr_swap(lo_, hi_);
  return *this;
}

HPFloat& HPFloat::operator+=(const mpz_class& b) {
  mpfr_add_z(lo_, lo_, b.get_mpz_t(), MPFR_RNDD);
  mpfr_add_z(hi_, hi_, b.get_mpz_t(), MPFR_RNDU);
  return *this;
}

HPFloat& HPFloat::operator-=(const mpz_class& b) {
  mpfr_sub_z(lo_, lo_, b.get_mpz_t(), MPFR_RNDD);
  mpfr_sub_z(hi_, hi_, b.get_mpz_t(), MPFR_RNDU);
  return *this;
}

HPFloat& HPFloat::operator*=(const mpz_class& b) {
  if (sgn(b) >= 0) {
    mpfr_mul_z(lo_, lo_, b.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(hi_, hi_, b.get_mpz_t(), MPFR_RNDU);
  } else {
    Scratch t(precision());
    mpfr_mul_z(t, hi_, b.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(hi_, lo_, b.get_mpz_t(), MPFR_RNDU);
    mpfr_set(lo_, t, MPFR_RNDD);
  }
  return *this;
}

bool certainly_less(const HPFloat& a, const HPFloat& b) { return mpfr_less_p(a.hi(), b.lo()) != 0; }
bool certainly_le(const HPFloat& a, const HPFloat& b) { return mpfr_lessequal_p(a.hi(), b.lo()) != 0; }

namespace {

using MpfrFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// Enclosure of f over [m - r, m + r] given a Lipschitz bound `lip` on f there:
// f(m) is computed once with round-to-nearest and widened by one ulp.
void lipschitz(mpfr_ptr lo, mpfr_ptr hi, MpfrFn f, mpfr_srcptr m, mpfr_srcptr lipr) {
  const Precision p = mpfr_get_prec(lo);
  Scratch v(p), err(p);
  f(v, m, MPFR_RNDN);
  mpfr_set(err, lipr, MPFR_RNDU);
  if (!mpfr_zero_p(v)) {
    Scratch ulp(p);
    mpfr_set_ui_2exp(ulp, 1, mpfr_get_exp(v) - p, MPFR_RNDU);
    mpfr_add(err, err, ulp, MPFR_RNDU);
  }
  mpfr_sub(lo, v, err, MPFR_RNDD);
  mpfr_add(hi, v, err, MPFR_RNDU);
}

}  // namespace

HPFloat abs(const HPFloat& x) {
  if (x.nonnegative()) return x;
  if (x.negative()) return -x;
  HPFloat r(HPFloat::Uninit{}, x.precision());
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, x.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

HPFloat sqrt(const HPFloat& x) {
  if (x.negative()) throw DomainError("sqrt of a negative interval");
  HPFloat r(HPFloat::Uninit{}, x.precision());
  if (mpfr_sgn(x.lo_) < 0) {
    mpfr_set_zero(r.lo_, 1);
  } else {
    mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
  }
  mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

HPFloat exp(const HPFloat& x) {
  HPFloat r(HPFloat::Uninit{}, x.precision());
  mpfr_exp(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

HPFloat expm1(const HPFloat& x) {
  HPFloat r(HPFloat::Uninit{}, x.precision());
  mpfr_expm1(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_expm1(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

HPFloat log(const HPFloat& x) {
  if (!x.positive()) throw DomainError("log of an interval not strictly positive: " + x.to_interval_string(8));
  HPFloat r(HPFloat::Uninit{}, x.precision());
  if (x.is_point()) {
    mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
    return r;
  }
  // log(m) +- rad/lo: one logarithm instead of two.
  HPFloat m = x.mid();
  HPFloat rad = x.radius();
  Scratch lip(x.precision());
  mpfr_div(lip, rad.hi_, x.lo_, MPFR_RNDU);
  lipschitz(r.lo_, r.hi_, mpfr_log, m.lo_, lip);
  return r;
}

HPFloat log1p(const HPFloat& x) {
  if (mpfr_cmp_si(x.lo_, -1) <= 0) throw DomainError("log1p of an interval reaching -1");
  HPFloat r(HPFloat::Uninit{}, x.precision());
  mpfr_log1p(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_log1p(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

namespace {

void clamp_unit(mpfr_ptr lo, mpfr_ptr hi) {
  if (mpfr_cmp_si(lo, -1) < 0) mpfr_set_si(lo, -1, MPFR_RNDD);
  if (mpfr_cmp_si(hi, 1) > 0) mpfr_set_si(hi, 1, MPFR_RNDU);
}

}  // namespace

HPFloat sin(const HPFloat& x) {
  HPFloat r(HPFloat::Uninit{}, x.precision());
  HPFloat rad = x.radius();
  if (mpfr_cmp_ui(rad.hi_, 2) >= 0) {
    mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    return r;
  }
  HPFloat m = x.mid();
  lipschitz(r.lo_, r.hi_, mpfr_sin, m.lo_, rad.hi_);
  clamp_unit(r.lo_, r.hi_);
  return r;
}

HPFloat cos(const HPFloat& x) {
  HPFloat r(HPFloat::Uninit{}, x.precision());
  HPFloat rad = x.radius();
  if (mpfr_cmp_ui(rad.hi_, 2) >= 0) {
    mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    return r;
  }
  HPFloat m = x.mid();
  lipschitz(r.lo_, r.hi_, mpfr_cos, m.lo_, rad.hi_);
  clamp_unit(r.lo_, r.hi_);
  return r;
}

HPFloat atan(const HPFloat& x) {
  HPFloat r(HPFloat::Uninit{}, x.precision());
  mpfr_atan(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_atan(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

HPFloat atan2(const HPFloat& y, const HPFloat& x) {
  if (mpfr_sgn(x.hi_) <= 0 && y.contains_zero()) {
    throw DomainError("atan2: box meets the branch cut on the non-positive real axis");
  }
  // On a box avoiding the cut, arg is extremal at the corners.
  const Precision p = std::max(x.precision(), y.precision());
  HPFloat r(HPFloat::Uninit{}, p);
  Scratch t(p);
  mpfr_srcptr xs[2] = {x.lo_, x.hi_};
  mpfr_srcptr ys[2] = {y.lo_, y.hi_};
  bool first = true;
  for (auto xv : xs) {
    for (auto yv : ys) {
      mpfr_atan2(t, yv, xv, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_atan2(t, yv, xv, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

HPFloat sinh(const HPFloat& x) {
  HPFloat r(HPFloat::Uninit{}, x.precision());
  mpfr_sinh(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_sinh(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

HPFloat cosh(const HPFloat& x) {
  HPFloat a = abs(x);
  HPFloat r(HPFloat::Uninit{}, x.precision());
  mpfr_cosh(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_cosh(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

HPFloat min(const HPFloat& a, const HPFloat& b) {
  HPFloat r(HPFloat::Uninit{}, std::max(a.precision(), b.precision()));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

HPFloat max(const HPFloat& a, const HPFloat& b) {
  HPFloat r(HPFloat::Uninit{}, std::max(a.precision(), b.precision()));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

HPFloat square(const HPFloat& x) {
  HPFloat a = abs(x);
  HPFloat r(HPFloat::Uninit{}, x.precision());
  mpfr_sqr(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

HPFloat pow(const HPFloat& x, unsigned long n) {
  HPFloat result(1L, x.precision());
  HPFloat base = x;
  while (n > 0) {
    if (n & 1UL) result *= base;
    n >>= 1;
    if (n > 0) base = square(base);
  }
  return result;
}

HPFloat pow(const HPFloat& x, const HPFloat& y) { return exp(y * log(x)); }

HPFloat reciprocal(const HPFloat& x) { return HPFloat(1L, x.precision()) / x; }

}  // namespace dioph
