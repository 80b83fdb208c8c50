#include "afinv/finite_field.hpp"

#include "afinv/error.hpp"

namespace afinv {

namespace {

using Poly = std::vector<std::uint64_t>;

// Remainder of f modulo monic g over F_p.
Poly poly_rem(Poly f, const Poly& g, std::uint64_t p) {
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    if (lead != 0)
      for (std::size_t i = 0; i < dg; ++i)
        f[shift + i] = (f[shift + i] + (p - lead) * g[i] % p) % p;
    f.pop_back();
  }
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

// Monic polynomial of degree d whose lower coefficients are the base-p
// digits of `index`.
Poly monic_from_index(std::uint64_t index, unsigned d, std::uint64_t p) {
  Poly f(d + 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    f[i] = index % p;
    index /= p;
  }
  f[d] = 1;
  return f;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint64_t>& f, std::uint64_t p) {
  const unsigned deg = static_cast<unsigned>(f.size()) - 1;
  for (unsigned d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t idx = 0; idx < count; ++idx)
      if (poly_rem(f, monic_from_index(idx, d, p), p).empty()) return false;
  }
  return true;
}

FiniteField::FiniteField(std::uint64_t p, unsigned n) : p_(p), n_(n), q_(ipow(p, n)) {
  if (p < 2 || n < 1) throw Error(ErrorKind::InvalidArgument, "bad field parameters");
  if (n == 1) {
    modulus_ = {0, 1};
    return;
  }
  for (std::uint64_t idx = 0;; ++idx) {
    Poly f = monic_from_index(idx, n, p);
    if (f[0] == 0) continue;
    if (is_irreducible_mod_p(f, p)) {
      modulus_ = std::move(f);
      return;
    }
  }
}

std::vector<std::uint64_t> FiniteField::digits(Element x) const {
  std::vector<std::uint64_t> d(n_);
  for (unsigned i = 0; i < n_; ++i) {
    d[i] = x % p_;
    x /= p_;
  }
  return d;
}

FiniteField::Element FiniteField::encode(const std::vector<std::uint64_t>& d) const {
  Element x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * p_ + d[i];
  return x;
}

FiniteField::Element FiniteField::from_integer(std::int64_t v) const {
  const auto sp = static_cast<std::int64_t>(p_);
  return static_cast<Element>(((v % sp) + sp) % sp);
}

FiniteField::Element FiniteField::add(Element x, Element y) const {
  auto dx = digits(x);
  const auto dy = digits(y);
  for (unsigned i = 0; i < n_; ++i) dx[i] = (dx[i] + dy[i]) % p_;
  return encode(dx);
}

FiniteField::Element FiniteField::mul(Element x, Element y) const {
  if (n_ == 1) return (x * y) % p_;
  const auto dx = digits(x);
  const auto dy = digits(y);
  Poly prod(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i) {
    if (dx[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p_;
  }
  Poly r = poly_rem(std::move(prod), modulus_, p_);
  r.resize(n_, 0);
  return encode(r);
}

}  // namespace afinv
