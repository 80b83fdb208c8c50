#include "afinv/exact_linalg.hpp"

#include <random>

namespace afinv {

IntMatrix random_glnz(Index n, unsigned steps, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be >= 1");
  std::mt19937_64 rng(seed);
  IntMatrix m = identity<BigInt>(n);
  const auto un = static_cast<std::uint64_t>(n);
  for (unsigned s = 0; s < steps; ++s) {
    const std::uint64_t kind = (n == 1) ? 1 : rng() % 3;
    const auto i = static_cast<Index>(rng() % un);
    Index j = i;
    if (n > 1) {
      j = static_cast<Index>(rng() % (un - 1));
      if (j >= i) ++j;
    }
    switch (kind) {
      case 0:
        m.row(i).swap(m.row(j));
        break;
      case 1:
        m.row(i) = (-m.row(i)).eval();
        break;
      default: {
        static constexpr long kMultipliers[] = {-3, -2, -1, 1, 2, 3};
        const BigInt k(kMultipliers[rng() % 6]);
        m.row(i) += k * m.row(j);
        break;
      }
    }
  }
  return m;
}

namespace {

BigInt laplace_det(const IntMatrix& m) {
  const Index n = m.rows();
  if (n == 1) return m(0, 0);
  if (n == 2) return BigInt(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
  BigInt det = 0;
  IntMatrix minor(n - 1, n - 1);
  for (Index c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    for (Index i = 1; i < n; ++i)
      for (Index j = 0, mj = 0; j < n; ++j)
        if (j != c) minor(i - 1, mj++) = m(i, j);
    BigInt term = m(0, c) * laplace_det(minor);
    if (c % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(Index n, Index k, F&& f) {
  std::vector<Index> idx(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    f(idx);
    Index pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) return;
    ++idx[static_cast<std::size_t>(pos)];
    for (Index i = pos + 1; i < k; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
}

}  // namespace

std::vector<BigInt> determinantal_divisors(const IntMatrix& m) {
  detail::require_square(m);
  const Index n = m.rows();
  std::vector<BigInt> out;
  for (Index k = 1; k <= n; ++k) {
    BigInt g = 0;
    IntMatrix sub(k, k);
    for_each_subset(n, k, [&](const std::vector<Index>& rows) {
      for_each_subset(n, k, [&](const std::vector<Index>& cols) {
        for (Index i = 0; i < k; ++i)
          for (Index j = 0; j < k; ++j)
            sub(i, j) = m(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
        g = gcd(g, laplace_det(sub));
      });
    });
    out.push_back(g);
  }
  return out;
}

IntMatrix make_matrix(const std::vector<std::vector<long long>>& rows) {
  const auto n = static_cast<Index>(rows.size());
  IntMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<Index>(row.size()) != n)
      throw Error(ErrorKind::InvalidArgument, "matrix must be square");
    for (Index j = 0; j < n; ++j)
      m(i, j) = BigInt(static_cast<long>(row[static_cast<std::size_t>(j)]));
  }
  return m;
}

bool is_strictly_positive(const IntMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) <= 0) return false;
  return true;
}

bool is_nonnegative(const IntMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) < 0) return false;
  return true;
}

}  // namespace afinv
