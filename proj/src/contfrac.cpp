#include "afinv/contfrac.hpp"

#include <map>
#include <utility>

namespace afinv {

IntQuadratic IntQuadratic::normalized() const {
  BigInt g = gcd(gcd(a, b), c);
  if (g == 0) return *this;
  IntQuadratic out{a / g, b / g, c / g};
  const BigInt& lead = out.a != 0 ? out.a : (out.b != 0 ? out.b : out.c);
  if (lead < 0) {
    out.a = -out.a;
    out.b = -out.b;
    out.c = -out.c;
  }
  return out;
}

QuadraticIrrational::QuadraticIrrational(BigInt p, BigInt d, BigInt q)
    : p_(std::move(p)), d_(std::move(d)), q_(std::move(q)) {
  if (q_ == 0) throw Error(ErrorKind::InvalidArgument, "denominator must be nonzero");
  if (d_ <= 0 || is_perfect_square(d_))
    throw Error(ErrorKind::NotIrrational,
                "sqrt(" + d_.get_str() + ") is not a real quadratic irrational");
  if (!divides(q_, BigInt(d_ - p_ * p_))) {
    const BigInt s = abs(q_);
    p_ *= s;
    d_ *= q_ * q_;
    q_ *= s;
  }
}

BigInt QuadraticIrrational::floor() const {
  const BigInt r = isqrt(d_);
  // sqrt(d) is irrational: floor(p + sqrt d) = p + r, ceil = p + r + 1.
  if (q_ > 0) return floor_div(BigInt(p_ + r), q_);
  return floor_div(BigInt(-p_ - r - 1), BigInt(-q_));
}

int QuadraticIrrational::compare(const Rational& r) const {
  // this - r = (sqrt(d) - t) / q with t = r q - p.
  const Rational t = r * Rational(q_) - Rational(p_);
  int s;
  if (t < 0)
    s = 1;
  else
    s = (Rational(d_) > t * t) ? 1 : -1;
  return q_ > 0 ? s : -s;
}

IntQuadratic QuadraticIrrational::minimal_polynomial() const {
  return IntQuadratic{q_ * q_, BigInt(-2 * p_ * q_), BigInt(p_ * p_ - d_)}.normalized();
}

const BigInt& PeriodicCF::partial_quotient(std::size_t i) const {
  if (i < preperiod.size()) return preperiod[i];
  return period[(i - preperiod.size()) % period.size()];
}

namespace {

std::size_t minimal_block(const std::vector<BigInt>& seq) {
  const std::size_t n = seq.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = seq[i] == seq[i - d];
    if (ok) return d;
  }
  return n;
}

struct Mobius {
  BigInt a = 1, b = 0, c = 0, d = 1;
};

// Product of [[q, 1], [1, 0]] over the sequence.
Mobius block_product(const std::vector<BigInt>& quotients) {
  Mobius m;
  for (const auto& q : quotients) {
    Mobius next{m.a * q + m.b, m.a, m.c * q + m.d, m.c};
    m = std::move(next);
  }
  return m;
}

}  // namespace

PeriodicCF expand(const QuadraticIrrational& theta) {
  const BigInt& d = theta.d_rad();
  const BigInt root = isqrt(d);
  BigInt p = theta.p_num();
  BigInt q = theta.q_den();
  std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
  std::vector<BigInt> quotients;
  std::size_t start = 0;
  for (;;) {
    auto [it, inserted] = seen.emplace(std::make_pair(p, q), quotients.size());
    if (!inserted) {
      start = it->second;
      break;
    }
    const BigInt a = q > 0 ? floor_div(BigInt(p + root), q)
                           : floor_div(BigInt(-p - root - 1), BigInt(-q));
    quotients.push_back(a);
    p = a * q - p;
    q = (d - p * p) / q;
  }

  PeriodicCF cf;
  cf.preperiod.assign(quotients.begin(), quotients.begin() + static_cast<std::ptrdiff_t>(start));
  cf.period.assign(quotients.begin() + static_cast<std::ptrdiff_t>(start), quotients.end());
  cf.period.resize(minimal_block(cf.period));
  return cf;
}

IncidenceMatrix incidence_from_period(const PeriodicCF& cf) {
  if (cf.period.empty()) throw Error(ErrorKind::InvalidArgument, "empty period");
  const Mobius m = block_product(cf.period);
  IntMatrix a(2, 2);
  a << m.a, m.b, m.c, m.d;
  if (!is_strictly_positive(a)) a = (a * a).eval();
  return validate_incidence(a);
}

Rational convergent(const PeriodicCF& cf, std::size_t depth) {
  if (depth < 1) throw Error(ErrorKind::InvalidArgument, "depth must be >= 1");
  std::vector<BigInt> head;
  head.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i) head.push_back(cf.partial_quotient(i));
  const Mobius m = block_product(head);
  return make_rational(m.a, m.c);
}

IntQuadratic fixed_point_quadratic(const PeriodicCF& cf) {
  if (cf.period.empty()) throw Error(ErrorKind::InvalidArgument, "empty period");
  // Tail x = [period; x]:  q_k x^2 + (q_{k-1} - p_k) x - p_{k-1} = 0.
  const Mobius t = block_product(cf.period);
  const BigInt qa = t.c, qb = t.d - t.a, qc = -t.b;
  // theta = (al x + be) / (ga x + de)  =>  x = (de theta - be) / (al - ga theta).
  const Mobius h = block_product(cf.preperiod);
  const BigInt &al = h.a, &be = h.b, &ga = h.c, &de = h.d;
  IntQuadratic out{
      qa * de * de - qb * de * ga + qc * ga * ga,
      BigInt(-2 * qa * de * be + qb * (de * al + be * ga) - 2 * qc * al * ga),
      qa * be * be - qb * be * al + qc * al * al,
  };
  return out.normalized();
}

bool is_cyclic_rotation(const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
  if (x.size() != y.size()) return false;
  const std::size_t n = x.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = x[i] == y[(i + shift) % n];
    if (ok) return true;
  }
  return n == 0;
}

bool gl2z_equivalent(const QuadraticIrrational& x, const QuadraticIrrational& y) {
  return is_cyclic_rotation(expand(x).period, expand(y).period);
}

}  // namespace afinv
