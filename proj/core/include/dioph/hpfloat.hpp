#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace dioph {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 256;
inline constexpr Precision kMinPrecision = 32;
inline constexpr Precision kPrecisionCap = Precision{1} << 14;

/// Working precision: DIOPH_PRECISION_BITS if set and valid, otherwise 256.
Precision default_precision();

/// Closed interval [lo, hi] with MPFR endpoints rounded outward.
///
/// Every operation returns an interval containing all exact results for
/// exact operands drawn from the input intervals. Result precision is the
/// larger of the operand precisions.
class HPFloat {
 public:
  explicit HPFloat(Precision prec = kDefaultPrecision);
  HPFloat(long value, Precision prec);
  HPFloat(const mpz_class& value, Precision prec);
  HPFloat(const mpq_class& value, Precision prec);

  static HPFloat from_double(double value, Precision prec);
  static HPFloat from_endpoints(const mpq_class& lo, const mpq_class& hi, Precision prec);
  static HPFloat hull(const HPFloat& a, const HPFloat& b);
  static HPFloat pi(Precision prec);
  static HPFloat ln2(Precision prec);

  HPFloat(const HPFloat& other);
  HPFloat(HPFloat&& other) noexcept;
  HPFloat& operator=(const HPFloat& other);
  HPFloat& operator=(HPFloat&& other) noexcept;
  ~HPFloat();

  Precision precision() const { return mpfr_get_prec(lo_); }
  HPFloat with_precision(Precision prec) const;

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  double lower() const;  // rounded down
  double upper() const;  // rounded up
  double to_double() const;
  mpq_class lower_exact() const;
  mpq_class upper_exact() const;
  mpq_class mid_exact() const;

  HPFloat mid() const;
  HPFloat radius() const;
  HPFloat width() const;
  double radius_double() const;
  /// [lo - r, hi + r] using the upper bound of r.
  HPFloat widened(const HPFloat& r) const;

  bool is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }
  bool contains(const mpq_class& v) const;
  bool contains(const HPFloat& inner) const;
  bool contains_zero() const;
  bool overlaps(const HPFloat& other) const;
  bool positive() const { return mpfr_sgn(lo_) > 0; }
  bool negative() const { return mpfr_sgn(hi_) < 0; }
  bool nonnegative() const { return mpfr_sgn(lo_) >= 0; }

  /// Throws IntervalStraddlesInteger unless both endpoints share a floor.
  mpz_class floor() const;

  /// Midpoint with `digits` significant decimal digits.
  std::string to_string(int digits = 20) const;
  /// "[lo, hi]" with `digits` significant digits per endpoint.
  std::string to_interval_string(int digits = 20) const;

  HPFloat operator-() const;
  HPFloat& operator+=(const HPFloat& b);
  HPFloat& operator-=(const HPFloat& b);
  HPFloat& operator*=(const HPFloat& b);
  HPFloat& operator/=(const HPFloat& b);
  HPFloat& operator+=(long b);
  HPFloat& operator-=(long b);
  HPFloat& operator*=(long b);
  HPFloat& operator/=(long b);
  HPFloat& operator+=(const mpz_class& b);
  HPFloat& operator-=(const mpz_class& b);
  HPFloat& operator*=(const mpz_class& b);

 private:
  struct Uninit {};
  HPFloat(Uninit, Precision prec);
  void raise_precision(Precision prec);

  friend HPFloat abs(const HPFloat&);
  friend HPFloat sqrt(const HPFloat&);
  friend HPFloat exp(const HPFloat&);
  friend HPFloat expm1(const HPFloat&);
  friend HPFloat log(const HPFloat&);
  friend HPFloat log1p(const HPFloat&);
  friend HPFloat sin(const HPFloat&);
  friend HPFloat cos(const HPFloat&);
  friend HPFloat atan(const HPFloat&);
  friend HPFloat atan2(const HPFloat&, const HPFloat&);
  friend HPFloat sinh(const HPFloat&);
  friend HPFloat cosh(const HPFloat&);
  friend HPFloat min(const HPFloat&, const HPFloat&);
  friend HPFloat max(const HPFloat&, const HPFloat&);
  friend HPFloat square(const HPFloat&);

  mpfr_t lo_;
  mpfr_t hi_;
};

inline HPFloat operator+(HPFloat a, const HPFloat& b) { return a += b; }
inline HPFloat operator-(HPFloat a, const HPFloat& b) { return a -= b; }
inline HPFloat operator*(HPFloat a, const HPFloat& b) { return a *= b; }
inline HPFloat operator/(HPFloat a, const HPFloat& b) { return a /= b; }
inline HPFloat operator+(HPFloat a, long b) { return a += b; }
inline HPFloat operator-(HPFloat a, long b) { return a -= b; }
inline HPFloat operator*(HPFloat a, long b) { return a *= b; }
inline HPFloat operator/(HPFloat a, long b) { return a /= b; }
inline HPFloat operator+(long a, HPFloat b) { return b += a; }
inline HPFloat operator-(long a, const HPFloat& b) { return -b + a; }
inline HPFloat operator*(long a, HPFloat b) { return b *= a; }
inline HPFloat operator/(long a, const HPFloat& b) { return HPFloat(a, b.precision()) /= b; }
inline HPFloat operator+(HPFloat a, const mpz_class& b) { return a += b; }
inline HPFloat operator-(HPFloat a, const mpz_class& b) { return a -= b; }
inline HPFloat operator*(HPFloat a, const mpz_class& b) { return a *= b; }

/// a.hi < b.lo
bool certainly_less(const HPFloat& a, const HPFloat& b);
/// a.hi <= b.lo
bool certainly_le(const HPFloat& a, const HPFloat& b);

HPFloat abs(const HPFloat& x);
HPFloat sqrt(const HPFloat& x);
HPFloat exp(const HPFloat& x);
HPFloat expm1(const HPFloat& x);
HPFloat log(const HPFloat& x);
HPFloat log1p(const HPFloat& x);
HPFloat sin(const HPFloat& x);
HPFloat cos(const HPFloat& x);
HPFloat atan(const HPFloat& x);
/// Range of arg(x + iy) over the box; throws DomainError if the box meets
/// the branch cut on the non-positive real axis.
HPFloat atan2(const HPFloat& y, const HPFloat& x);
HPFloat sinh(const HPFloat& x);
HPFloat cosh(const HPFloat& x);
HPFloat min(const HPFloat& a, const HPFloat& b);
HPFloat max(const HPFloat& a, const HPFloat& b);
HPFloat square(const HPFloat& x);
HPFloat pow(const HPFloat& x, unsigned long n);
/// x^y for x > 0 via exp(y log x).
HPFloat pow(const HPFloat& x, const HPFloat& y);
HPFloat reciprocal(const HPFloat& x);

}  // namespace dioph
