#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <variant>

#include "dioph/hpfloat.hpp"

namespace dioph {

struct Rational {
  mpq_class value;  // canonical: lowest terms, positive denominator
};

/// (a + b*sqrt(d)) / c with d > 1 squarefree, b != 0, c > 0, gcd(a, b, c) = 1.
struct QuadraticSurd {
  mpz_class a;
  mpz_class b;
  mpz_class d;
  mpz_class c;
};

enum class Constant { pi, e, golden, sqrt2 };

/// scale * C + offset for a named constant C. Only pi and e survive
/// normalization; golden and sqrt2 become QuadraticSurd.
struct NamedConstant {
  Constant which;
  mpq_class scale{1};
  mpq_class offset{0};
};

/// A decimal value known only to within +-half_width of center.
struct DecimalLiteral {
  std::string digits;
  int places;
  mpq_class center;
  mpq_class half_width;
};

/// Tagged exact or symbolic real number: the input type for every x.
class Real {
 public:
  using Variant = std::variant<Rational, QuadraticSurd, NamedConstant, DecimalLiteral>;

  Real() : v_(Rational{0}) {}
  Real(long v) : v_(Rational{v}) {}  // NOLINT(google-explicit-constructor)
  Real(const mpz_class& v) : v_(Rational{mpq_class(v)}) {}  // NOLINT
  Real(const mpq_class& v);  // NOLINT

  static Real rational(const mpz_class& p, const mpz_class& q);
  /// Normalizes; collapses to Rational when b == 0 or d is a perfect square.
  static Real surd(const mpz_class& a, const mpz_class& b, const mpz_class& d, const mpz_class& c);
  static Real constant(Constant which);
  static Real golden() { return constant(Constant::golden); }
  static Real pi() { return constant(Constant::pi); }
  static Real e() { return constant(Constant::e); }
  static Real sqrt2() { return constant(Constant::sqrt2); }
  /// `text` is a plain decimal; the value is known to +-1/2 * 10^-places.
  static Real decimal(std::string_view text, int places);

  /// Grammar: integers, decimals with optional "@places", pi, e, golden,
  /// sqrt2, sqrt(<rational expr>), combined with + - * / and parentheses.
  /// The expression must fold to one representable variant.
  static Real parse(std::string_view text);

  const Variant& variant() const { return v_; }
  const mpq_class* as_rational() const;
  const QuadraticSurd* as_surd() const;
  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_surd() const { return std::holds_alternative<QuadraticSurd>(v_); }
  bool is_decimal() const { return std::holds_alternative<DecimalLiteral>(v_); }
  bool is_exact() const { return is_rational() || is_surd(); }
  /// True when irrationality is known (surds and named constants).
  bool known_irrational() const { return is_surd() || std::holds_alternative<NamedConstant>(v_); }
  /// False for DecimalLiteral: more bits cannot help.
  bool refinable() const { return !is_decimal(); }

  /// Re-parseable canonical text.
  std::string to_string() const;

  Real operator-() const;
  Real reciprocal() const;

  /// Exact sign; adaptive evaluation for named constants.
  int sign() const;
  int compare(const mpq_class& r) const;

  friend Real operator+(const Real& x, const Real& y);
  friend Real operator-(const Real& x, const Real& y);
  friend Real operator*(const Real& x, const Real& y);
  friend Real operator/(const Real& x, const Real& y);
  friend bool operator==(const Real& x, const Real& y);

 private:
  explicit Real(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Enclosure of x with width <= 2^(1-bits) * max(1, |x|).
/// Throws PrecisionExhausted if x is a DecimalLiteral too coarse for `bits`.
HPFloat eval(const Real& x, Precision bits);

/// Enclosure of x computed at roughly `bits` bits, with no width guarantee
/// for DecimalLiteral inputs (their own interval is returned).
HPFloat enclose(const Real& x, Precision bits);

}  // namespace dioph
