#pragma once

// Exact dense integer linear algebra over Eigen matrices.  The algorithms are
// templated on the scalar so the same code runs on BigInt (the production
// path) and on builtin integers where a test wants to cross-check quickly.
// Every routine is division-exact: no rounding, no floating point.

#include "afinv/bigint.hpp"
#include "afinv/error.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <utility>
#include <vector>

namespace afinv {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = Matrix<BigInt>;
using Index = Eigen::Index;

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : Scalar(x);
}

template <typename Scalar>
void require_square(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw Error(ErrorKind::InvalidArgument,
                "matrix must be square with dimension >= 1");
}

}  // namespace detail

/// Integer polynomial, coefficient index = degree.  Trailing zeros are
/// stripped, so the zero polynomial has no coefficients.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial x_minus_one() { return Polynomial({Scalar(-1), Scalar(1)}); }

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Scalar constant_term() const { return coeffs_.empty() ? Scalar(0) : coeffs_[0]; }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Scalar> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
        out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;

/// D = P * M * Q with P, Q unimodular; `diagonal` has the nonzero entries
/// first, positive, each dividing the next, followed by zeros.
template <typename Scalar>
struct SmithDecomposition {
  std::vector<Scalar> diagonal;
  Matrix<Scalar> p_left;
  Matrix<Scalar> q_right;

  Index rank() const {
    Index r = 0;
    for (const auto& d : diagonal)
      if (d != Scalar(0)) ++r;
    return r;
  }

  Matrix<Scalar> diagonal_matrix() const {
    const auto n = static_cast<Index>(diagonal.size());
    Matrix<Scalar> d = Matrix<Scalar>::Zero(n, n);
    for (Index i = 0; i < n; ++i) d(i, i) = diagonal[static_cast<std::size_t>(i)];
    return d;
  }
};

template <typename Scalar>
Matrix<Scalar> identity(Index n) {
  return Matrix<Scalar>::Identity(n, n);
}

template <typename Scalar>
Matrix<Scalar> mat_pow(const Matrix<Scalar>& m, std::uint64_t k) {
  detail::require_square(m);
  Matrix<Scalar> result = identity<Scalar>(m.rows());
  Matrix<Scalar> base = m;
  while (k > 0) {
    if (k & 1U) result = (result * base).eval();
    k >>= 1U;
    if (k > 0) base = (base * base).eval();
  }
  return result;
}

/// Horner evaluation of p at m; the constant term contributes p(0) * I.
template <typename Scalar>
Matrix<Scalar> mat_poly_eval(const Polynomial<Scalar>& p, const Matrix<Scalar>& m) {
  detail::require_square(m);
  const Index n = m.rows();
  Matrix<Scalar> acc = Matrix<Scalar>::Zero(n, n);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = (acc * m).eval();
    for (Index i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

/// Fraction-free (Bareiss) elimination with row pivoting.
template <typename Scalar>
Scalar determinant(const Matrix<Scalar>& m) {
  detail::require_square(m);
  const Index n = m.rows();
  Matrix<Scalar> a = m;
  Scalar sign(1);
  Scalar prev(1);
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Index swap_row = -1;
      for (Index i = k + 1; i < n; ++i)
        if (a(i, k) != Scalar(0)) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return Scalar(0);
      a.row(k).swap(a.row(swap_row));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        Scalar t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = Scalar(t / prev);  // exact by Sylvester's identity
      }
      a(i, k) = Scalar(0);
    }
    prev = a(k, k);
  }
  return Scalar(sign * a(n - 1, n - 1));
}

template <typename Scalar>
bool is_unimodular(const Matrix<Scalar>& m) {
  return detail::abs_value(determinant(m)) == Scalar(1);
}

/// Classical adjugate: adj(m) * m = det(m) * I.
template <typename Scalar>
Matrix<Scalar> adjugate(const Matrix<Scalar>& m) {
  detail::require_square(m);
  const Index n = m.rows();
  if (n == 1) return identity<Scalar>(1);
  Matrix<Scalar> adj(n, n);
  Matrix<Scalar> minor(n - 1, n - 1);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      for (Index i = 0, mi = 0; i < n; ++i) {
        if (i == r) continue;
        for (Index j = 0, mj = 0; j < n; ++j) {
          if (j == c) continue;
          minor(mi, mj++) = m(i, j);
        }
        ++mi;
      }
      Scalar cof = determinant(minor);
      adj(c, r) = ((r + c) % 2 == 0) ? cof : Scalar(-cof);
    }
  }
  return adj;
}

/// Exact inverse of a unimodular matrix: adj(m) * det(m), det(m) = +-1.
template <typename Scalar>
Matrix<Scalar> unimodular_inverse(const Matrix<Scalar>& m) {
  const Scalar det = determinant(m);
  if (detail::abs_value(det) != Scalar(1))
    throw Error(ErrorKind::NotUnimodular, "matrix is not unimodular");
  Matrix<Scalar> adj = adjugate(m);
  if (det < Scalar(0)) adj = (-adj).eval();
  return adj;
}

namespace detail {

template <typename Scalar>
Scalar extended_gcd(Scalar a, Scalar b, Scalar& s, Scalar& t) {
  Scalar s0(1), s1(0), t0(0), t1(1);
  while (b != Scalar(0)) {
    Scalar q = a / b;
    Scalar r = a - q * b;
    a = b;
    b = r;
    Scalar s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    Scalar t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (a < Scalar(0)) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return a;
}

}  // namespace detail

/// Smith normal form with transform certificates.
///
/// Diagonalization pivots on the nonzero entry of least absolute value in the
/// trailing submatrix and clears its row and column by Euclidean steps.  The
/// resulting diagonal is then made into a divisibility chain by pairwise
/// gcd/lcm repairs, and signs are normalized by negating rows of P.
template <typename Scalar>
SmithDecomposition<Scalar> snf(const Matrix<Scalar>& m) {
  detail::require_square(m);
  const Index n = m.rows();
  Matrix<Scalar> a = m;
  Matrix<Scalar> p = identity<Scalar>(n);
  Matrix<Scalar> q = identity<Scalar>(n);

  Index rank = 0;
  for (Index k = 0; k < n; ++k) {
    bool found = false;
    for (;;) {
      Index pr = -1, pc = -1;
      Scalar best(0);
      for (Index i = k; i < n; ++i)
        for (Index j = k; j < n; ++j) {
          if (a(i, j) == Scalar(0)) continue;
          Scalar v = detail::abs_value(a(i, j));
          if (pr < 0 || v < best) {
            best = v;
            pr = i;
            pc = j;
          }
        }
      if (pr < 0) break;
      found = true;
      if (pr != k) {
        a.row(k).swap(a.row(pr));
        p.row(k).swap(p.row(pr));
      }
      if (pc != k) {
        a.col(k).swap(a.col(pc));
        q.col(k).swap(q.col(pc));
      }

      bool clean = true;
      const Scalar pivot = a(k, k);
      for (Index i = k + 1; i < n; ++i) {
        if (a(i, k) == Scalar(0)) continue;
        const Scalar f = a(i, k) / pivot;
        a.row(i) -= f * a.row(k);
        p.row(i) -= f * p.row(k);
        if (a(i, k) != Scalar(0)) clean = false;
      }
      for (Index j = k + 1; j < n; ++j) {
        if (a(k, j) == Scalar(0)) continue;
        const Scalar f = a(k, j) / pivot;
        a.col(j) -= f * a.col(k);
        q.col(j) -= f * q.col(k);
        if (a(k, j) != Scalar(0)) clean = false;
      }
      if (clean) break;
    }
    if (!found) break;
    rank = k + 1;
  }

  for (Index k = 0; k < rank; ++k) {
    if (a(k, k) < Scalar(0)) {
      a.row(k) = (-a.row(k)).eval();
      p.row(k) = (-p.row(k)).eval();
    }
  }

  for (Index i = 0; i < rank; ++i) {
    for (Index j = i + 1; j < rank; ++j) {
      const Scalar x = a(i, i);
      const Scalar y = a(j, j);
      if (y % x == Scalar(0)) continue;
      Scalar s, t;
      const Scalar g = detail::extended_gcd(x, y, s, t);
      // [x 0; 0 y] -> [x y; 0 y] -> [g 0; ty xy/g] -> [g 0; 0 xy/g]
      a.row(i) += a.row(j);
      p.row(i) += p.row(j);
      const Scalar u = Scalar(-y / g), v = Scalar(x / g);
      Matrix<Scalar> ci = a.col(i), cj = a.col(j);
      a.col(i) = s * ci + t * cj;
      a.col(j) = u * ci + v * cj;
      ci = q.col(i);
      cj = q.col(j);
      q.col(i) = s * ci + t * cj;
      q.col(j) = u * ci + v * cj;
      const Scalar f = Scalar(a(j, i) / g);
      a.row(j) -= f * a.row(i);
      p.row(j) -= f * p.row(i);
    }
  }

  SmithDecomposition<Scalar> out;
  out.diagonal.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) out.diagonal.push_back(a(i, i));
  out.p_left = std::move(p);
  out.q_right = std::move(q);
  return out;
}

/// Product of `steps` random elementary matrices (row swap, row negation,
/// row_i += k * row_j with 1 <= |k| <= 3).  Deterministic for a fixed seed and
/// portable across standard libraries (uses raw mt19937_64 output).
IntMatrix random_glnz(Index n, unsigned steps, std::uint64_t seed);

/// Determinantal divisors D_1..D_n: D_k is the gcd of all k x k minors (0 when
/// they all vanish).  Minors come from cofactor expansion, independently of
/// the elimination code above.  Enumeration cost grows combinatorially, so
/// this is an oracle for small n only.
std::vector<BigInt> determinantal_divisors(const IntMatrix& m);

/// Build a matrix from row-major nested values.
IntMatrix make_matrix(const std::vector<std::vector<long long>>& rows);

bool is_strictly_positive(const IntMatrix& m);
bool is_nonnegative(const IntMatrix& m);

}  // namespace afinv
