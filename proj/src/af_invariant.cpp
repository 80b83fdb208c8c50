#include "afinv/af_invariant.hpp"

#include <string>

namespace afinv {

unsigned default_power_bound(Index n) { return static_cast<unsigned>(2 * n * n); }

IncidenceMatrix validate_incidence(const IntMatrix& m, std::optional<unsigned> power_bound) {
  detail::require_square(m);
  if (!is_nonnegative(m))
    throw Error(ErrorKind::NegativeEntry, "incidence matrix has a negative entry");
  if (!is_unimodular(m))
    throw Error(ErrorKind::NotUnimodular, "incidence matrix is not unimodular");
  const unsigned bound = power_bound.value_or(default_power_bound(m.rows()));
  IntMatrix power = m;
  for (unsigned k = 1; k <= bound; ++k) {
    if (is_strictly_positive(power)) return IncidenceMatrix(m, k);
    power = (power * m).eval();
  }
  throw Error(ErrorKind::NeverStrictlyPositive,
              "no power up to " + std::to_string(bound) + " is strictly positive");
}

void require_unit_constant_term(const IntPolynomial& p) {
  if (abs(p.constant_term()) != 1)
    throw Error(ErrorKind::BadConstantTerm,
                "polynomial constant term must be +1 or -1, got " +
                    to_string(p.constant_term()));
}

AbelianGroup abelianize(const IntMatrix& m, const IntPolynomial& p) {
  require_unit_constant_term(p);
  return AbelianGroup::from_smith_diagonal(snf(mat_poly_eval(p, m)).diagonal);
}

AbelianGroup abelianize(const IncidenceMatrix& a, const IntPolynomial& p) {
  return abelianize(a.matrix(), p);
}

AbelianGroup bowen_franks(const IncidenceMatrix& a) {
  return abelianize(a, IntPolynomial::x_minus_one());
}

std::uint64_t trial_seed(std::uint64_t seed, unsigned t) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(t) + 1);
  z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31U);
}

ProbeReport invariance_probe(const IncidenceMatrix& a, const IntPolynomial& p,
                             unsigned trials, std::uint64_t seed, unsigned steps) {
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be >= 1");
  ProbeReport report;
  report.matrix = a.matrix();
  report.polynomial = p;
  report.trials = trials;
  report.steps = steps;
  report.seed = seed;
  report.group = abelianize(a, p);

  for (unsigned t = 0; t < trials; ++t) {
    const IntMatrix b = random_glnz(a.dimension(), steps, trial_seed(seed, t));
    const IntMatrix conjugate = (b * a.matrix() * unimodular_inverse(b)).eval();
    if (!(abelianize(conjugate, p) == report.group)) {
      ++report.failures;
      report.failed_trials.push_back(t);
    }
  }
  return report;
}

}  // namespace afinv
