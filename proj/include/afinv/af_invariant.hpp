#pragma once

// Abelianized invariant Ab_p(A) = Z^n / p(A) Z^n of a stationary AF-algebra
// given by its incidence matrix A, plus a harness that checks invariance of
// the group under GL_n(Z) conjugation of A.

#include "afinv/abelian_group.hpp"
#include "afinv/exact_linalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace afinv {

/// A nonnegative unimodular matrix with a strictly positive power.  Only
/// constructible through validate_incidence().
class IncidenceMatrix {
 public:
  const IntMatrix& matrix() const { return m_; }
  Index dimension() const { return m_.rows(); }
  /// Smallest k >= 1 with m^k strictly positive.
  unsigned positivity_power() const { return positivity_power_; }

 private:
  friend IncidenceMatrix validate_incidence(const IntMatrix&, std::optional<unsigned>);
  IncidenceMatrix(IntMatrix m, unsigned k) : m_(std::move(m)), positivity_power_(k) {}

  IntMatrix m_;
  unsigned positivity_power_;
};

/// Default search bound for the positivity power: 2 n^2.
unsigned default_power_bound(Index n);

/// Errors: NegativeEntry, NotUnimodular, NeverStrictlyPositive (checked in
/// that order).
IncidenceMatrix validate_incidence(const IntMatrix& m,
                                   std::optional<unsigned> power_bound = std::nullopt);

/// Throws BadConstantTerm unless p(0) = +-1.
void require_unit_constant_term(const IntPolynomial& p);

/// Z^n / p(m) Z^n for any square integer matrix (the conjugates used by the
/// probe need not be nonnegative).  Singular p(m) yields free summands.
AbelianGroup abelianize(const IntMatrix& m, const IntPolynomial& p);
AbelianGroup abelianize(const IncidenceMatrix& a, const IntPolynomial& p);

/// Bowen-Franks group Z^n / (A - I) Z^n.
AbelianGroup bowen_franks(const IncidenceMatrix& a);

struct ProbeReport {
  IntMatrix matrix;
  IntPolynomial polynomial;
  unsigned trials = 0;
  unsigned steps = 0;
  std::uint64_t seed = 0;
  unsigned failures = 0;
  std::vector<unsigned> failed_trials;
  AbelianGroup group;
};

inline constexpr unsigned kDefaultConjugationSteps = 20;

/// For each trial draws B = random_glnz(n, steps, seed_t) with a per-trial
/// seed derived from `seed`, and compares abelianize(B A B^-1, p) against
/// abelianize(A, p).
ProbeReport invariance_probe(const IncidenceMatrix& a, const IntPolynomial& p,
                             unsigned trials, std::uint64_t seed,
                             unsigned steps = kDefaultConjugationSteps);

/// Seed of trial `t` of a probe started with `seed` (splitmix64 mix).
std::uint64_t trial_seed(std::uint64_t seed, unsigned t);

}  // namespace afinv
