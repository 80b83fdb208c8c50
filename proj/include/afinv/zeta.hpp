#pragma once

// Local zeta data at a prime on both sides of the comparison: the curve side
// (point counts, Frobenius trace, Hasse-Weil factor) and the operator side
// built from L_p = [[tr(A^p), p], [-1, 0]].
//
// Operator-side cardinality convention: |K_0| of the crossed product by
// eps_n is taken to be |det(I - eps_n)|, the Bowen-Franks style count.  On
// the bad branch (p | tr(A)^2 - 4) eps_n is the scalar 1 - alpha^n and the
// count is |1 - alpha^n|.  This identification is a modelling choice, kept
// inside operator_local_zeta_counts() only.

#include "afinv/af_invariant.hpp"
#include "afinv/bigint.hpp"
#include "afinv/elliptic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace afinv {

enum class CountMethod {
  /// n = 1 by enumeration; n > 1 from the trace recurrence, cross-checked
  /// against field enumeration when p^n <= kCrossCheckBudget.
  Auto,
  /// Direct enumeration of F_{p^n}; requires p^n <= kEnumerationBudget.
  Enumerate,
  /// p^n + 1 - s_n with s_n from a_p; a_p itself is enumerated.
  Recurrence,
};

inline constexpr std::uint64_t kEnumerationBudget = 1'000'000;
inline constexpr std::uint64_t kCrossCheckBudget = 10'000;

/// Throws NotPrime, UnsupportedCharacteristic (p = 2) or BadReduction (p | disc).
void require_good_odd_prime(const CurveQ& e, const BigInt& p);

/// #E(F_{p^n}) including the point at infinity.
BigInt count_points(const CurveQ& e, const BigInt& p, unsigned n,
                    CountMethod method = CountMethod::Auto);

/// a_p = p + 1 - #E(F_p).
BigInt trace_frobenius(const CurveQ& e, const BigInt& p);

/// s_n = phi^n + conj(phi)^n for phi + conj(phi) = trace, phi conj(phi) = norm;
/// entries n = 0 .. count-1.
std::vector<BigInt> power_sums(const BigInt& trace, const BigInt& norm, unsigned count);

struct CurveZeta {
  BigInt prime;
  BigInt a_p;
  /// #E(F_{p^n}), n = 1 .. order.
  std::vector<BigInt> counts;
  /// Coefficients z^0 .. z^order of exp(sum N_n z^n / n).
  std::vector<Rational> exp_series;
  /// Coefficients z^0 .. z^order of (1 - a_p z + p z^2) / ((1 - z)(1 - p z)).
  std::vector<BigInt> closed_form_series;
  /// 1 - a_p z + p z^2, ascending.
  std::vector<BigInt> numerator;
  /// (1 - z)(1 - p z), ascending.
  std::vector<BigInt> denominator;
  bool agree = false;
};

CurveZeta curve_local_zeta(const CurveQ& e, const BigInt& p, unsigned order);

/// [[tr(A^p), p], [-1, 0]].
IntMatrix lp_matrix(const IncidenceMatrix& a, const BigInt& p);

enum class ZetaBranch { Good, Bad };

std::string_view branch_name(ZetaBranch b);

struct OperatorZeta {
  BigInt prime;
  BigInt trace_power;      // tr(A^p)
  BigInt trace_discriminant;  // tr(A)^2 - 4
  ZetaBranch branch = ZetaBranch::Good;
  std::optional<int> alpha;
  /// |K_0| for n = 1 .. order.
  std::vector<BigInt> counts;
};

/// p | tr(A)^2 - 4.
bool is_bad_operator_prime(const IncidenceMatrix& a, const BigInt& p);

/// Throws AlphaRequired when the bad branch is reached without alpha, and
/// InvalidArgument for alpha outside {-1, 0, 1}.
OperatorZeta operator_local_zeta_counts(const IncidenceMatrix& a, const BigInt& p,
                                        unsigned order, std::optional<int> alpha);

struct LocalZetaReport {
  CurveZeta curve;
  OperatorZeta op;
  std::vector<bool> match_flags;
};

/// Assembles both sides and flags per-n equality.  Equality is reported, not
/// required.
LocalZetaReport compare_local(const CurveQ& e, const IncidenceMatrix& a, const BigInt& p,
                              unsigned order, std::optional<int> alpha);

}  // namespace afinv
