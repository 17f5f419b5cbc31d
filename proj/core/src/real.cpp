#include "dioph/real.hpp"

#include <sstream>

#include "dioph/errors.hpp"

namespace dioph {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

mpz_class gcd3(const mpz_class& a, const mpz_class& b, const mpz_class& c) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// Splits d = s^2 * r with r squarefree.
void split_square(const mpz_class& d, mpz_class& s, mpz_class& r) {
  static const mpz_class kLimit("1000000000000000000000000");
  if (d > kLimit) throw DomainError("radicand too large to certify squarefree: " + d.get_str());
  s = 1;
  r = d;
  for (unsigned long p = 2; mpz_class(p) * p <= r; ++p) {
    const unsigned long pp = p * p;
    while (mpz_divisible_ui_p(r.get_mpz_t(), pp)) {
      mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), pp);
      s *= p;
    }
  }
  if (mpz_perfect_square_p(r.get_mpz_t())) {
    mpz_class t;
    mpz_sqrt(t.get_mpz_t(), r.get_mpz_t());
    s *= t;
    r = 1;
  }
}

const char* constant_name(Constant c) {
  switch (c) {
    case Constant::pi:
      return "pi";
    case Constant::e:
      return "e";
    case Constant::golden:
      return "golden";
    case Constant::sqrt2:
      return "sqrt2";
  }
  return "?";
}

HPFloat constant_value(Constant c, Precision prec) {
  switch (c) {
    case Constant::pi:
      return HPFloat::pi(prec);
    case Constant::e:
      return exp(HPFloat(1L, prec));
    case Constant::golden:
      return (sqrt(HPFloat(5L, prec)) - 1) / 2;
    case Constant::sqrt2:
      return sqrt(HPFloat(2L, prec));
  }
  throw DomainError("unknown constant");
}

HPFloat surd_value(const QuadraticSurd& s, Precision prec) {
  HPFloat v = sqrt(HPFloat(s.d, prec)) * s.b + s.a;
  return v / HPFloat(s.c, prec);
}

// sign(a + b*sqrt(d)) for non-square d.
int surd_numerator_sign(const mpz_class& a, const mpz_class& b, const mpz_class& d) {
  const int sa = sgn(a), sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const mpz_class lhs = a * a, rhs = b * b * d;
  return sb > 0 ? (rhs > lhs ? 1 : -1) : (lhs > rhs ? 1 : -1);
}

// Exact decimal text of a rational whose denominator is 2^a 5^b.
std::string decimal_text(const mpq_class& v) {
  const mpz_class& den = v.get_den();
  mpz_class pow10 = 1;
  int scale = 0;
  while (!mpz_divisible_p(pow10.get_mpz_t(), den.get_mpz_t())) {
    pow10 *= 10;
    ++scale;
    if (scale > 100000) throw DomainError("value has no finite decimal expansion");
  }
  mpz_class n = abs(v.get_num()) * (pow10 / den);
  std::string digits = n.get_str();
  if (scale > 0) {
    if (static_cast<int>(digits.size()) <= scale) digits.insert(0, static_cast<std::size_t>(scale) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(scale), ".");
  }
  return (v < 0 ? "-" : "") + digits;
}

}  // namespace

Real::Real(const mpq_class& v) : v_(Rational{v}) { std::get<Rational>(v_).value.canonicalize(); }

Real Real::rational(const mpz_class& p, const mpz_class& q) {
  if (q == 0) throw DomainError("zero denominator");
  mpq_class v(p, q);
  v.canonicalize();
  return Real(v);
}

Real Real::surd(const mpz_class& a0, const mpz_class& b0, const mpz_class& d0, const mpz_class& c0) {
  if (c0 == 0) throw DomainError("surd with zero denominator");
  if (d0 < 0) throw DomainError("surd with negative radicand");
  if (b0 == 0 || d0 == 0) return rational(a0, c0);
  mpz_class s, r;
  split_square(d0, s, r);
  if (r == 1) return rational(a0 + b0 * s, c0);
  mpz_class a = a0, b = b0 * s, c = c0;
  if (c < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  const mpz_class g = gcd3(a, b, c);
  a /= g;
  b /= g;
  c /= g;
  return Real(Variant(QuadraticSurd{a, b, r, c}));
}

Real Real::constant(Constant which) {
  switch (which) {
    case Constant::golden:
      return surd(-1, 1, 5, 2);
    case Constant::sqrt2:
      return surd(0, 1, 2, 1);
    default:
      return Real(Variant(NamedConstant{which, 1, 0}));
  }
}

Real Real::decimal(std::string_view text, int places) {
  if (places < 0) throw DomainError("negative decimal precision");
  std::string t(text);
  bool neg = false;
  std::size_t i = 0;
  if (i < t.size() && (t[i] == '-' || t[i] == '+')) neg = t[i++] == '-';
  std::string intpart, fracpart;
  bool dot = false;
  for (; i < t.size(); ++i) {
    const char ch = t[i];
    if (ch == '.' && !dot) {
      dot = true;
    } else if (ch >= '0' && ch <= '9') {
      (dot ? fracpart : intpart) += ch;
    } else {
      throw ParseError("bad decimal literal: " + t);
    }
  }
  if (intpart.empty() && fracpart.empty()) throw ParseError("bad decimal literal: " + t);
  mpz_class num(intpart.empty() ? std::string("0") : intpart);
  mpz_class den = 1;
  for (char ch : fracpart) {
    num = num * 10 + (ch - '0');
    den *= 10;
  }
  mpq_class center(neg ? -num : num, den);
  center.canonicalize();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  mpq_class half(1, 2 * scale);
  half.canonicalize();
  return Real(Variant(DecimalLiteral{t, places, center, half}));
}

const mpq_class* Real::as_rational() const {
  if (auto* r = std::get_if<Rational>(&v_)) return &r->value;
  return nullptr;
}

const QuadraticSurd* Real::as_surd() const { return std::get_if<QuadraticSurd>(&v_); }

std::string Real::to_string() const {
  return std::visit(
      Overloaded{
          [](const Rational& r) { return r.value.get_str(); },
          [](const QuadraticSurd& s) {
            std::ostringstream os;
            std::string num = s.a.get_str();
            std::string rad = "sqrt(" + s.d.get_str() + ")";
            std::string term = s.b == 1 ? rad : s.b == -1 ? "-" + rad : s.b.get_str() + "*" + rad;
            if (s.a == 0) {
              num = term;
            } else {
              num += (s.b > 0 ? "+" : "") + term;
            }
            if (s.c == 1) return num;
            os << "(" << num << ")/" << s.c.get_str();
            return os.str();
          },
          [](const NamedConstant& n) {
            std::ostringstream os;
            const char* name = constant_name(n.which);
            if (n.scale == 1) {
              os << name;
            } else if (n.scale == -1) {
              os << "-" << name;
            } else if (n.scale.get_den() == 1) {
              os << n.scale.get_str() << "*" << name;
            } else {
              os << "(" << n.scale.get_str() << ")*" << name;
            }
            if (n.offset > 0) os << "+" << (n.offset.get_den() == 1 ? n.offset.get_str() : "(" + n.offset.get_str() + ")");
            if (n.offset < 0) {
              mpq_class m = -n.offset;
              os << "-" << (m.get_den() == 1 ? m.get_str() : "(" + m.get_str() + ")");
            }
            return os.str();
          },
          [](const DecimalLiteral& d) { return d.digits + "@" + std::to_string(d.places); },
      },
      v_);
}

Real Real::operator-() const { return *this * Real(-1L); }

Real Real::reciprocal() const {
  if (auto* r = as_rational()) {
    if (*r == 0) throw DomainError("reciprocal of zero");
    return Real(mpq_class(1) / *r);
  }
  if (auto* s = as_surd()) {
    // c / (a + b sqrt d) = c (a - b sqrt d) / (a^2 - b^2 d)
    return surd(s->c * s->a, -s->c * s->b, s->d, s->a * s->a - s->b * s->b * s->d);
  }
  throw DomainError("reciprocal of " + to_string() + " is not representable");
}

int Real::sign() const {
  return std::visit(Overloaded{
                        [](const Rational& r) { return sgn(r.value); },
                        [](const QuadraticSurd& s) { return surd_numerator_sign(s.a, s.b, s.d); },
                        [this](const NamedConstant&) {
                          for (Precision p = 64; p <= kPrecisionCap; p *= 2) {
                            HPFloat v = enclose(*this, p);
                            if (v.positive()) return 1;
                            if (v.negative()) return -1;
                          }
                          throw PrecisionExhausted("sign of " + to_string() + " undecided at the precision cap");
                        },
                        [this](const DecimalLiteral& d) {
                          if (d.center - d.half_width > 0) return 1;
                          if (d.center + d.half_width < 0) return -1;
                          throw PrecisionExhausted("sign of " + to_string() + " not determined by its digits");
                        },
                    },
                    v_);
}

int Real::compare(const mpq_class& r) const {
  if (auto* d = std::get_if<DecimalLiteral>(&v_)) {
    if (d->center - d->half_width > r) return 1;
    if (d->center + d->half_width < r) return -1;
    throw PrecisionExhausted("comparison of " + to_string() + " with " + r.get_str() + " not determined by its digits");
  }
  return (*this - Real(r)).sign();
}

Real operator+(const Real& x, const Real& y) {
  const mpq_class* qx = x.as_rational();
  const mpq_class* qy = y.as_rational();
  if (qx && qy) return Real(*qx + *qy);
  if (qx) return y + x;
  const Real& other = y;
  if (qy) {
    const mpq_class& q = *qy;
    return std::visit(Overloaded{
                          [&](const Rational&) -> Real { return Real(); },
                          [&](const QuadraticSurd& s) -> Real {
                            const mpz_class& u = q.get_num();
                            const mpz_class& v = q.get_den();
                            return Real::surd(s.a * v + u * s.c, s.b * v, s.d, s.c * v);
                          },
                          [&](const NamedConstant& n) -> Real {
                            Real r;
                            r.v_ = NamedConstant{n.which, n.scale, n.offset + q};
                            return r;
                          },
                          [&](const DecimalLiteral& d) -> Real {
                            if (q.get_den() != 1) {
                              throw DomainError("decimal literal shifted by a non-integer is not representable");
                            }
                            return Real::decimal(decimal_text(d.center + q), d.places);
                          },
                      },
                      x.v_);
  }
  auto* sx = x.as_surd();
  auto* sy = other.as_surd();
  if (sx && sy && sx->d == sy->d) {
    return Real::surd(sx->a * sy->c + sy->a * sx->c, sx->b * sy->c + sy->b * sx->c, sx->d, sx->c * sy->c);
  }
  auto* nx = std::get_if<NamedConstant>(&x.v_);
  auto* ny = std::get_if<NamedConstant>(&y.v_);
  if (nx && ny && nx->which == ny->which) {
    NamedConstant n{nx->which, nx->scale + ny->scale, nx->offset + ny->offset};
    if (n.scale == 0) return Real(n.offset);
    Real r;
    r.v_ = n;
    return r;
  }
  throw DomainError("sum of " + x.to_string() + " and " + y.to_string() + " is not representable");
}

Real operator-(const Real& x, const Real& y) { return x + (y * Real(-1L)); }

Real operator*(const Real& x, const Real& y) {
  const mpq_class* qx = x.as_rational();
  const mpq_class* qy = y.as_rational();
  if (qx && qy) return Real(*qx * *qy);
  if (qx) return y * x;
  if (qy) {
    const mpq_class& q = *qy;
    if (q == 0) return Real();
    return std::visit(Overloaded{
                          [&](const Rational&) -> Real { return Real(); },
                          [&](const QuadraticSurd& s) -> Real {
                            const mpz_class& u = q.get_num();
                            const mpz_class& v = q.get_den();
                            return Real::surd(s.a * u, s.b * u, s.d, s.c * v);
                          },
                          [&](const NamedConstant& n) -> Real {
                            NamedConstant out{n.which, n.scale * q, n.offset * q};
                            Real r;
                            r.v_ = out;
                            return r;
                          },
                          [&](const DecimalLiteral& d) -> Real {
                            if (q.get_den() != 1) {
                              throw DomainError("decimal literal scaled by a non-integer is not representable");
                            }
                            // |q| * 1/2 * 10^-k <= 1/2 * 10^-(k - digits(|q|)): widen soundly.
                            const mpz_class m = abs(q.get_num());
                            const int lost = m == 1 ? 0 : static_cast<int>(mpz_sizeinbase(mpz_class(m - 1).get_mpz_t(), 10));
                            return Real::decimal(decimal_text(d.center * q), std::max(0, d.places - lost));
                          },
                      },
                      x.v_);
  }
  auto* sx = x.as_surd();
  auto* sy = y.as_surd();
  if (sx && sy && sx->d == sy->d) {
    return Real::surd(sx->a * sy->a + sx->b * sy->b * sx->d, sx->a * sy->b + sx->b * sy->a, sx->d, sx->c * sy->c);
  }
  throw DomainError("product of " + x.to_string() + " and " + y.to_string() + " is not representable");
}

Real operator/(const Real& x, const Real& y) { return x * y.reciprocal(); }

bool operator==(const Real& x, const Real& y) {
  return std::visit(Overloaded{
                        [](const Rational& a, const Rational& b) { return a.value == b.value; },
                        [](const QuadraticSurd& a, const QuadraticSurd& b) {
                          return a.a == b.a && a.b == b.b && a.c == b.c && a.d == b.d;
                        },
                        [](const NamedConstant& a, const NamedConstant& b) {
                          return a.which == b.which && a.scale == b.scale && a.offset == b.offset;
                        },
                        [](const DecimalLiteral& a, const DecimalLiteral& b) {
                          return a.center == b.center && a.half_width == b.half_width;
                        },
                        [](const auto&, const auto&) { return false; },
                    },
                    x.v_, y.v_);
}

HPFloat enclose(const Real& x, Precision bits) {
  return std::visit(Overloaded{
                        [&](const Rational& r) { return HPFloat(r.value, bits); },
                        [&](const QuadraticSurd& s) { return surd_value(s, bits); },
                        [&](const NamedConstant& n) {
                          HPFloat v = constant_value(n.which, bits) * HPFloat(n.scale, bits);
                          return v + HPFloat(n.offset, bits);
                        },
                        [&](const DecimalLiteral& d) {
                          return HPFloat::from_endpoints(d.center - d.half_width, d.center + d.half_width, bits);
                        },
                    },
                    x.variant());
}

HPFloat eval(const Real& x, Precision bits) {
  if (bits < kMinPrecision) throw DomainError("precision below 32 bits");
  for (Precision p = bits + 8;; p *= 2) {
    HPFloat v = enclose(x, p);
    HPFloat bound(1L, p);
    HPFloat mag = abs(v);
    if (mpfr_cmp_ui(mag.hi(), 1) > 0) bound = HPFloat::hull(mag, mag);
    mpfr_t limit;
    mpfr_init2(limit, p);
    mpfr_mul_2si(limit, bound.lo(), 1 - static_cast<long>(bits), MPFR_RNDD);
    HPFloat w = v.width();
    const bool ok = mpfr_lessequal_p(w.hi(), limit) != 0;
    mpfr_clear(limit);
    if (ok) return v;
    if (x.is_decimal()) {
      throw PrecisionExhausted(x.to_string() + " cannot be evaluated to " + std::to_string(bits) + " bits");
    }
    if (p > 4 * kPrecisionCap) throw PrecisionExhausted("eval of " + x.to_string() + " did not converge");
  }
}

}  // namespace dioph
