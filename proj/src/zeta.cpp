#include "afinv/zeta.hpp"

#include "afinv/error.hpp"
#include "afinv/finite_field.hpp"

#include <stdexcept>

namespace afinv {

void require_good_odd_prime(const CurveQ& e, const BigInt& p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, p.get_str() + " is not prime");
  if (p == 2)
    throw Error(ErrorKind::UnsupportedCharacteristic,
                "point counting in characteristic 2 is not supported");
  if (divides(p, e.discriminant()))
    throw Error(ErrorKind::BadReduction,
                "curve has bad reduction at " + p.get_str());
}

namespace {

std::uint64_t budget_power(const BigInt& p, unsigned n, std::uint64_t budget) {
  BigInt q = pow(p, n);
  if (q > BigInt(static_cast<unsigned long>(budget))) return 0;
  return q.get_ui();
}

BigInt enumerate_points(const CurveQ& e, std::uint64_t p, unsigned n) {
  const FiniteField field(p, n);
  const std::uint64_t q = field.size();
  std::vector<bool> square(q, false);
  for (std::uint64_t y = 0; y < q; ++y) square[field.mul(y, y)] = true;

  const auto sp = BigInt(static_cast<unsigned long>(p));
  const auto fa = field.from_integer(static_cast<std::int64_t>(mod(e.a(), sp).get_ui()));
  const auto fb = field.from_integer(static_cast<std::int64_t>(mod(e.b(), sp).get_ui()));
  std::uint64_t count = 1;  // infinity
  for (std::uint64_t x = 0; x < q; ++x) {
    const auto x2 = field.mul(x, x);
    const auto rhs = field.add(field.add(field.mul(x2, x), field.mul(fa, x)), fb);
    if (rhs == 0)
      count += 1;
    else if (square[rhs])
      count += 2;
  }
  return BigInt(static_cast<unsigned long>(count));
}

BigInt count_from_trace(const BigInt& p, const BigInt& a_p, unsigned n) {
  const auto s = power_sums(a_p, p, n + 1);
  return pow(p, n) + 1 - s[n];
}

}  // namespace

std::vector<BigInt> power_sums(const BigInt& trace, const BigInt& norm, unsigned count) {
  std::vector<BigInt> s;
  s.reserve(count);
  for (unsigned k = 0; k < count; ++k) {
    if (k == 0)
      s.emplace_back(2);
    else if (k == 1)
      s.push_back(trace);
    else
      s.push_back(trace * s[k - 1] - norm * s[k - 2]);
  }
  return s;
}

BigInt count_points(const CurveQ& e, const BigInt& p, unsigned n, CountMethod method) {
  require_good_odd_prime(e, p);
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");

  auto enumerate = [&](unsigned degree, std::uint64_t budget) {
    if (budget_power(p, degree, budget) == 0)
      throw Error(ErrorKind::OutOfBudget,
                  "p^n exceeds the enumeration budget of " + std::to_string(budget));
    return enumerate_points(e, p.get_ui(), degree);
  };

  switch (method) {
    case CountMethod::Enumerate:
      return enumerate(n, kEnumerationBudget);
    case CountMethod::Recurrence: {
      const BigInt a_p = p + 1 - enumerate(1, kEnumerationBudget);
      return count_from_trace(p, a_p, n);
    }
    case CountMethod::Auto:
    default: {
      const BigInt n1 = enumerate(1, kEnumerationBudget);
      if (n == 1) return n1;
      const BigInt derived = count_from_trace(p, BigInt(p + 1 - n1), n);
      if (budget_power(p, n, kCrossCheckBudget) != 0 &&
          enumerate_points(e, p.get_ui(), n) != derived)
        throw std::logic_error("field enumeration disagrees with the trace recurrence");
      return derived;
    }
  }
}

BigInt trace_frobenius(const CurveQ& e, const BigInt& p) {
  const BigInt a_p = p + 1 - count_points(e, p, 1);
  if (a_p * a_p > 4 * p) throw std::logic_error("Hasse bound violated");
  return a_p;
}

CurveZeta curve_local_zeta(const CurveQ& e, const BigInt& p, unsigned order) {
  CurveZeta z;
  z.prime = p;
  z.a_p = trace_frobenius(e, p);
  z.numerator = {BigInt(1), BigInt(-z.a_p), p};
  z.denominator = {BigInt(1), BigInt(-(p + 1)), p};

  const auto s = power_sums(z.a_p, p, order + 1);
  for (unsigned n = 1; n <= order; ++n) {
    BigInt c = (n == 1) ? count_points(e, p, 1) : count_from_trace(p, z.a_p, n);
    if (c != pow(p, n) + 1 - s[n]) throw std::logic_error("inconsistent point counts");
    z.counts.push_back(std::move(c));
  }

  // Z' = S' Z  =>  k c_k = sum_{i=1..k} N_i c_{k-i}.
  z.exp_series.emplace_back(1);
  for (unsigned k = 1; k <= order; ++k) {
    Rational acc = 0;
    for (unsigned i = 1; i <= k; ++i) acc += Rational(z.counts[i - 1]) * z.exp_series[k - i];
    acc /= k;
    acc.canonicalize();
    z.exp_series.push_back(acc);
  }

  // 1 / ((1 - z)(1 - pz)) = sum h_k z^k with h_k = 1 + p + ... + p^k.
  std::vector<BigInt> h;
  BigInt pk = 1, run = 0;
  for (unsigned k = 0; k <= order; ++k) {
    run += pk;
    h.push_back(run);
    pk *= p;
  }
  for (unsigned k = 0; k <= order; ++k) {
    BigInt c = h[k];
    if (k >= 1) c -= z.a_p * h[k - 1];
    if (k >= 2) c += p * h[k - 2];
    z.closed_form_series.push_back(std::move(c));
  }

  z.agree = true;
  for (unsigned k = 0; k <= order; ++k)
    if (z.exp_series[k] != Rational(z.closed_form_series[k])) z.agree = false;
  return z;
}

IntMatrix lp_matrix(const IncidenceMatrix& a, const BigInt& p) {
  if (p < 1) throw Error(ErrorKind::InvalidArgument, "p must be positive");
  IntMatrix l(2, 2);
  l << mat_pow(a.matrix(), p.get_ui()).trace(), p, -1, 0;
  return l;
}

std::string_view branch_name(ZetaBranch b) { return b == ZetaBranch::Good ? "good" : "bad"; }

bool is_bad_operator_prime(const IncidenceMatrix& a, const BigInt& p) {
  const BigInt t = a.matrix().trace();
  return divides(p, BigInt(t * t - 4));
}

OperatorZeta operator_local_zeta_counts(const IncidenceMatrix& a, const BigInt& p,
                                        unsigned order, std::optional<int> alpha) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, p.get_str() + " is not prime");
  if (alpha && (*alpha < -1 || *alpha > 1))
    throw Error(ErrorKind::InvalidArgument, "alpha must be -1, 0 or 1");
  OperatorZeta z;
  z.prime = p;
  const BigInt t = a.matrix().trace();
  z.trace_discriminant = t * t - 4;
  z.trace_power = lp_matrix(a, p)(0, 0);
  z.branch = divides(p, z.trace_discriminant) ? ZetaBranch::Bad : ZetaBranch::Good;

  if (z.branch == ZetaBranch::Bad) {
    if (!alpha)
      throw Error(ErrorKind::AlphaRequired,
                  p.get_str() + " divides tr(A)^2 - 4; alpha must be supplied");
    z.alpha = alpha;
    const BigInt al(*alpha);
    BigInt power = 1;
    for (unsigned n = 1; n <= order; ++n) {
      power *= al;
      z.counts.push_back(abs(BigInt(1 - power)));
    }
    return z;
  }

  // det(I - L^n) = 1 - tr(L^n) + det(L)^n, tr(L^n) = s_n, det L = p.
  const auto s = power_sums(z.trace_power, p, order + 1);
  for (unsigned n = 1; n <= order; ++n)
    z.counts.push_back(abs(BigInt(1 - s[n] + pow(p, n))));
  return z;
}

LocalZetaReport compare_local(const CurveQ& e, const IncidenceMatrix& a, const BigInt& p,
                              unsigned order, std::optional<int> alpha) {
  LocalZetaReport r;
  r.curve = curve_local_zeta(e, p, order);
  r.op = operator_local_zeta_counts(a, p, order, alpha);
  for (unsigned n = 0; n < order; ++n) r.match_flags.push_back(r.curve.counts[n] == r.op.counts[n]);
  return r;
}

}  // namespace afinv
