#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "dioph/core_arith.hpp"
#include "dioph/errors.hpp"
#include "dioph/hpfloat.hpp"
#include "dioph/real.hpp"

namespace dioph::detail {

inline constexpr unsigned long kBlockSize = 1UL << 16;

/// a/b in lowest terms; gmp arithmetic expects canonical operands.
inline mpq_class ratio(const mpz_class& a, const mpz_class& b) {
  mpq_class r(a, b);
  r.canonicalize();
  return r;
}

/// fn(i) for i in [0, count) on up to `jobs` threads; the first exception
/// is rethrown after all workers stop.
template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& fn) {
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::size_t>(count, 256))));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

/// ||jx|| and R(jx) for a fixed x: exact for rationals, interval otherwise.
class TermEvaluator {
 public:
  TermEvaluator(const Real& x, Precision bits) : bits_(bits) {
    if (auto* q = x.as_rational()) {
      rational_ = true;
      mpz_class f;
      mpz_fdiv_q(f.get_mpz_t(), q->get_num_mpz_t(), q->get_den_mpz_t());
      const mpq_class r = *q - f;
      num_ = r.get_num();
      den_ = r.get_den();
    } else {
      X_ = enclose(frac_part(x), bits);
    }
  }

  /// From an enclosure of R(x) for an x known only through intervals.
  explicit TermEvaluator(HPFloat frac_x) : bits_(frac_x.precision()), X_(std::move(frac_x)) {}

  bool rational() const { return rational_; }
  const mpz_class& denominator() const { return den_; }
  Precision bits() const { return bits_; }

  /// R(jx) exactly, rationals only.
  mpq_class frac_exact(unsigned long j) const {
    mpz_class t = num_ * j;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), den_.get_mpz_t());
    return ratio(t, den_);
  }

  HPFloat frac(unsigned long j) const {
    if (rational_) return HPFloat(frac_exact(j), bits_);
    return frac_part(X_ * static_cast<long>(j));
  }

  HPFloat norm(unsigned long j) const {
    if (rational_) {
      const mpq_class r = frac_exact(j);
      return HPFloat(std::min(r, mpq_class(1 - r)), bits_);
    }
    return dist_nearest(X_ * static_cast<long>(j));
  }

  /// ||jx|| bounded away from 0; DomainError at a pole of a rational x.
  HPFloat norm_positive(unsigned long j) const {
    HPFloat d = norm(j);
    if (d.positive()) return d;
    if (rational_) throw DomainError("||jx|| = 0 at j = " + std::to_string(j) + " for rational x");
    throw IntervalStraddlesInteger("||jx|| not separated from 0 at j = " + std::to_string(j));
  }

 private:
  Precision bits_;
  bool rational_ = false;
  mpz_class num_;
  mpz_class den_;
  HPFloat X_{kMinPrecision};
};

}  // namespace dioph::detail
