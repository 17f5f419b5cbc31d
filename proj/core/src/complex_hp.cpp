#include "dioph/complex_hp.hpp"

namespace dioph {

ComplexHP ComplexHP::cis(const HPFloat& theta) { return {cos(theta), sin(theta)}; }

ComplexHP& ComplexHP::operator+=(const ComplexHP& b) {
  re += b.re;
  im += b.im;
  return *this;
}

ComplexHP& ComplexHP::operator-=(const ComplexHP& b) {
  re -= b.re;
  im -= b.im;
  return *this;
}

ComplexHP& ComplexHP::operator*=(const ComplexHP& b) {
  HPFloat r = re * b.re - im * b.im;
  HPFloat i = re * b.im + im * b.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

ComplexHP& ComplexHP::operator*=(const HPFloat& b) {
  re *= b;
  im *= b;
  return *this;
}

ComplexHP& ComplexHP::operator/=(const ComplexHP& b) {
  HPFloat d = norm_sq(b);
  ComplexHP num = *this * conj(b);
  re = num.re / d;
  im = num.im / d;
  return *this;
}

ComplexHP conj(const ComplexHP& z) { return {z.re, -z.im}; }

HPFloat norm_sq(const ComplexHP& z) { return square(z.re) + square(z.im); }

HPFloat abs(const ComplexHP& z) { return sqrt(norm_sq(z)); }

HPFloat arg(const ComplexHP& z) { return atan2(z.im, z.re); }

ComplexHP exp(const ComplexHP& z) { return exp(z.re) * ComplexHP::cis(z.im); }

ComplexHP sqrt(const ComplexHP& z) {
  HPFloat half_arg = arg(z) / 2;
  HPFloat mod = sqrt(abs(z));
  return mod * ComplexHP::cis(half_arg);
}

ComplexHP pow(const ComplexHP& z, unsigned long n) {
  ComplexHP result(HPFloat(1L, z.precision()), HPFloat(z.precision()));
  ComplexHP base = z;
  while (n > 0) {
    if (n & 1UL) result *= base;
    n >>= 1;
    if (n > 0) base *= ComplexHP(base);
  }
  return result;
}

}  // namespace dioph
