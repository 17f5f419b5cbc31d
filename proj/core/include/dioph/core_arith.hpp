#pragma once

#include <gmpxx.h>

#include <type_traits>
#include <utility>

#include "dioph/errors.hpp"
#include "dioph/hpfloat.hpp"
#include "dioph/real.hpp"

namespace dioph {

/// Runs f(bits) for bits = start, 2*start, ... while it throws
/// IntervalStraddlesInteger; past `cap` the last error propagates.
template <class F>
auto with_adaptive_precision(F&& f, Precision start = default_precision(), Precision cap = kPrecisionCap)
    -> std::invoke_result_t<F&, Precision> {
  for (Precision bits = start;; bits *= 2) {
    try {
      return f(bits);
    } catch (const IntervalStraddlesInteger&) {
      if (bits * 2 > cap) throw;
    }
  }
}

/// As above, but a DecimalLiteral x cannot be refined: raise PrecisionExhausted.
template <class F>
auto with_adaptive_precision(const Real& x, F&& f, Precision start = default_precision(),
                             Precision cap = kPrecisionCap) -> std::invoke_result_t<F&, Precision> {
  try {
    return with_adaptive_precision(std::forward<F>(f), start, x.refinable() ? cap : start);
  } catch (const IntervalStraddlesInteger& e) {
    if (!x.refinable()) throw PrecisionExhausted(std::string("decimal input too coarse: ") + e.what());
    throw;
  }
}

// [x]
mpz_class floor_int(const Real& x);
mpz_class floor_int(const HPFloat& x);

// R(x) = x - [x]
Real frac_part(const Real& x);
HPFloat frac_part(const HPFloat& x);

// ||x|| = min(R(x), 1 - R(x))
Real dist_nearest(const Real& x);
HPFloat dist_nearest(const HPFloat& x);

// (x): x minus the nearest integer, 0 on Z + 1/2
Real signed_nearest(const Real& x);
HPFloat signed_nearest(const HPFloat& x);

// {{x}}: as (x) but 1/2 on Z + 1/2
Real braces_nearest(const Real& x);
HPFloat braces_nearest(const HPFloat& x);

/// True iff x is exactly a half-integer; throws PrecisionExhausted when a
/// DecimalLiteral cannot decide.
bool is_half_integer(const Real& x);

}  // namespace dioph
