#pragma once

#include <cstdint>
#include <vector>

namespace afinv {

/// F_{p^n} as F_p[t] / (f) for a monic irreducible f found by search.
/// Elements are encoded as integers 0 .. p^n - 1 (base-p digits are the
/// coefficients, constant first).  Meant for enumeration at q <= 10^6.
class FiniteField {
 public:
  using Element = std::uint64_t;

  FiniteField(std::uint64_t p, unsigned n);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  std::uint64_t size() const { return q_; }
  /// Monic modulus, coefficients constant first (size n + 1).
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  Element from_integer(std::int64_t v) const;
  Element add(Element x, Element y) const;
  Element mul(Element x, Element y) const;

 private:
  std::vector<std::uint64_t> digits(Element x) const;
  Element encode(const std::vector<std::uint64_t>& d) const;

  std::uint64_t p_;
  unsigned n_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
};

/// True iff the monic polynomial `f` (constant first) is irreducible over
/// F_p, by trial division with every monic polynomial of degree <= deg/2.
bool is_irreducible_mod_p(const std::vector<std::uint64_t>& f, std::uint64_t p);

}  // namespace afinv
