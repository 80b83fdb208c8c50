#pragma once

// Shared fixtures and test-only oracles.  Nothing here calls into the code
// path it is used to check.

#include "afinv/exact_linalg.hpp"

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace afinv::testing {

inline IntMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
  const auto n = static_cast<Index>(rows.size());
  IntMatrix m(n, n);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline IntPolynomial poly(std::initializer_list<long> coeffs) {
  std::vector<BigInt> c;
  for (long v : coeffs) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

inline std::vector<BigInt> ints(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

/// Triple-loop product, independent of Eigen's kernels.
inline IntMatrix naive_product(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c = IntMatrix::Zero(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j)
      for (Index k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, Index n, long bound) {
  IntMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      m(i, j) = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  return m;
}

inline IntPolynomial random_poly(std::mt19937_64& rng, int max_degree, long bound) {
  const int deg = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
  std::vector<BigInt> c;
  for (int i = 0; i <= deg; ++i)
    c.emplace_back(static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound);
  return IntPolynomial(std::move(c));
}

/// #E(F_p) by the double loop over (x, y) in F_p^2, plus infinity.
inline long brute_count(long a, long b, long p) {
  long count = 1;
  for (long x = 0; x < p; ++x) {
    const long rhs = (((x * x % p) * x + a * x + b) % p + p) % p;
    for (long y = 0; y < p; ++y)
      if (y * y % p == rhs) ++count;
  }
  return count;
}

}  // namespace afinv::testing
