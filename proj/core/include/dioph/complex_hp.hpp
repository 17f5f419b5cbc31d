#pragma once

#include <algorithm>
#include <utility>

#include "dioph/hpfloat.hpp"

namespace dioph {

/// Rectangular complex interval (box).
struct ComplexHP {
  HPFloat re;
  HPFloat im;

  explicit ComplexHP(Precision prec = kDefaultPrecision) : re(prec), im(prec) {}
  ComplexHP(HPFloat r, HPFloat i) : re(std::move(r)), im(std::move(i)) {}

  static ComplexHP real(const HPFloat& r) { return {r, HPFloat(r.precision())}; }
  /// cos(theta) + i sin(theta)
  static ComplexHP cis(const HPFloat& theta);

  Precision precision() const { return std::max(re.precision(), im.precision()); }

  ComplexHP operator-() const { return {-re, -im}; }
  ComplexHP& operator+=(const ComplexHP& b);
  ComplexHP& operator-=(const ComplexHP& b);
  ComplexHP& operator*=(const ComplexHP& b);
  ComplexHP& operator*=(const HPFloat& b);
  ComplexHP& operator/=(const ComplexHP& b);
};

inline ComplexHP operator+(ComplexHP a, const ComplexHP& b) { return a += b; }
inline ComplexHP operator-(ComplexHP a, const ComplexHP& b) { return a -= b; }
inline ComplexHP operator*(ComplexHP a, const ComplexHP& b) { return a *= b; }
inline ComplexHP operator*(ComplexHP a, const HPFloat& b) { return a *= b; }
inline ComplexHP operator*(const HPFloat& b, ComplexHP a) { return a *= b; }
inline ComplexHP operator/(ComplexHP a, const ComplexHP& b) { return a /= b; }

ComplexHP conj(const ComplexHP& z);
HPFloat norm_sq(const ComplexHP& z);
HPFloat abs(const ComplexHP& z);
/// Principal argument; throws DomainError if the box meets the branch cut.
HPFloat arg(const ComplexHP& z);
ComplexHP exp(const ComplexHP& z);
/// Principal square root; throws DomainError if the box meets the branch cut.
ComplexHP sqrt(const ComplexHP& z);
ComplexHP pow(const ComplexHP& z, unsigned long n);

}  // namespace dioph
