#pragma once

// Eventually periodic continued fractions of real quadratic irrationals and
// the incidence matrix of the periodic Bratteli diagram they induce.

#include "afinv/af_invariant.hpp"
#include "afinv/bigint.hpp"

#include <cstddef>
#include <vector>

namespace afinv {

/// Integer quadratic a x^2 + b x + c, normalized to positive content-free form
/// with a > 0 (or the first nonzero coefficient positive).
struct IntQuadratic {
  BigInt a, b, c;

  IntQuadratic normalized() const;
  friend bool operator==(const IntQuadratic&, const IntQuadratic&) = default;
};

/// The real number (p + sqrt(d)) / q.  Stored canonically with q | d - p^2.
class QuadraticIrrational {
 public:
  /// Throws NotIrrational if d <= 0 or d is a perfect square, InvalidArgument
  /// if q = 0.
  QuadraticIrrational(BigInt p, BigInt d, BigInt q);

  static QuadraticIrrational sqrt_of(const BigInt& d) { return {0, d, 1}; }

  const BigInt& p_num() const { return p_; }
  const BigInt& d_rad() const { return d_; }
  const BigInt& q_den() const { return q_; }

  /// floor of the value, exactly.
  BigInt floor() const;

  /// Sign of (this - r): -1 or +1 (never 0, the value is irrational).
  int compare(const Rational& r) const;

  /// Primitive integer quadratic with this value as a root.
  IntQuadratic minimal_polynomial() const;

 private:
  BigInt p_, d_, q_;
};

struct PeriodicCF {
  std::vector<BigInt> preperiod;
  std::vector<BigInt> period;

  /// i-th partial quotient of the infinite expansion, i >= 0.
  const BigInt& partial_quotient(std::size_t i) const;
};

/// Exact expansion by the integral (P, Q) recurrence.  The period starts at
/// the first state that recurs, so preperiod and period are both minimal.
PeriodicCF expand(const QuadraticIrrational& theta);

/// Product over the period of the blocks [[a, 1], [1, 0]]; squared when that
/// product is not strictly positive (a one-term period).
IncidenceMatrix incidence_from_period(const PeriodicCF& cf);

/// Convergent from the first `depth` partial quotients, depth >= 1.
Rational convergent(const PeriodicCF& cf, std::size_t depth);

/// Integer quadratic satisfied by the value of `cf`, obtained symbolically
/// from the fixed-point equation of the periodic tail.
IntQuadratic fixed_point_quadratic(const PeriodicCF& cf);

bool is_cyclic_rotation(const std::vector<BigInt>& x, const std::vector<BigInt>& y);

/// x = (a y + b) / (c y + d) for some ad - bc = +-1, decided by comparing
/// minimal periods up to rotation.
bool gl2z_equivalent(const QuadraticIrrational& x, const QuadraticIrrational& y);

}  // namespace afinv
