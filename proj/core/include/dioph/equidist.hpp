#pragma once

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

#include "dioph/hpfloat.hpp"
#include "dioph/real.hpp"

namespace dioph::equidist {

/// Points of [0, 1), each known as an enclosing interval (a point interval
/// for rational data).
class PointSet {
 public:
  static PointSet from_rationals(std::vector<mpq_class> points, std::string source = "rationals");
  static PointSet from_intervals(std::vector<HPFloat> points, std::string source = "intervals");
  /// R(n x) for n = 1..N
  static PointSet kronecker(const Real& x, unsigned long N, Precision bits = default_precision());

  std::size_t size() const { return points_.size(); }
  const std::vector<HPFloat>& points() const { return points_; }
  /// Exact values when the set was built from rationals, else empty.
  const std::vector<mpq_class>& rationals() const { return rationals_; }
  const std::string& source() const { return source_; }
  bool exact() const { return !rationals_.empty(); }

 private:
  PointSet(std::vector<HPFloat> points, std::vector<mpq_class> rationals, std::string source);
  std::vector<HPFloat> points_;
  std::vector<mpq_class> rationals_;
  std::string source_;
};

/// sup over 0 < b <= 1 of |A([0, b)) / N - b| from the sorted points.
/// Inexact points are replaced by their midpoints and the result widened by
/// the largest radius (the discrepancy is 1-Lipschitz in the points).
HPFloat discrepancy_star(const PointSet& ps);

/// sup over 0 <= a < b <= 1 of |A([a, b)) / N - (b - a)|.
HPFloat discrepancy(const PointSet& ps);

/// 3/N + (1/log g + K/log(K+1)) log(N)/N, g = (1 + sqrt 5)/2: the
/// discrepancy bound for n x when every partial quotient of x is <= K.
HPFloat bounded_pq_discrepancy_bound(const mpz_class& K, unsigned long N, Precision bits = default_precision());

/// |sum_{n=1}^N e(h n x)| from |sin(pi h N x) / sin(pi h x)|; N when hx is an integer.
HPFloat weyl_sum(const Real& x, long h, unsigned long N, Precision bits = default_precision());

/// The same modulus by summing the terms.
HPFloat weyl_sum_direct(const Real& x, long h, unsigned long N, Precision bits = default_precision());

/// 1/m + sum_{j=1}^m |N^-1 sum_{n<=N} e(j n x)| / j
HPFloat erdos_turan_bracket(const Real& x, unsigned long N, unsigned long m, Precision bits = default_precision());

/// A function of bounded variation on [0, 1] with known variation and integral.
struct BVFunction {
  std::string name;
  std::function<HPFloat(const HPFloat&)> f;
  mpq_class variation;
  mpq_class integral;
};

BVFunction norm_function();      // ||t||: V = 1, integral 1/4
BVFunction sawtooth_function();  // R(t) = t on [0, 1): V = 1, integral 1/2
BVFunction constant_function(const mpq_class& c);

struct KoksmaResult {
  HPFloat lhs;  // |N^-1 sum f(y_n) - integral|
  HPFloat rhs;  // V(f) D_N
  bool holds;   // lhs <= rhs certainly
};

KoksmaResult koksma_check(const BVFunction& f, const PointSet& ps);

struct WeylQuadratic {
  HPFloat lhs_sq;        // |sum_{n<=N} e(n^2 x)|^2
  HPFloat intermediate;  // N + 4 sum_{n<=N} 1/|sin 4 pi n x|
  HPFloat rhs;           // N + 4 sum_{n<=4N} 1/|sin pi n x|
  bool holds;            // lhs_sq <= rhs certainly
};

WeylQuadratic weyl_quadratic(const Real& x, unsigned long N, Precision bits = default_precision());

}  // namespace dioph::equidist
