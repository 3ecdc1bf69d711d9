#include "ktoric/zlattice.hpp"

#include <stdexcept>

namespace ktoric {

namespace {

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

// Truncated quotient; exact when remainder is zero.
Int quot(const Int& a, const Int& b) { return a / b; }

}  // namespace

SnfDecomposition snf(const MatZ& A) {
  const Eigen::Index r = A.rows(), c = A.cols();
  if (r == 0 || c == 0) throw std::invalid_argument("snf: empty matrix");
  MatZ U = MatZ::Identity(r, r);
  MatZ V = MatZ::Identity(c, c);
  MatZ D = A;

  const Eigen::Index steps = std::min(r, c);
  for (Eigen::Index t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero |pivot| in the trailing block.
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < r; ++i)
        for (Eigen::Index j = t; j < c; ++j)
          if (D(i, j) != 0 &&
              (pi < 0 || int_abs(D(i, j)) < int_abs(D(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) { pi = pj = -2; }
      if (pi == -2) break;  // trailing block all zero
      if (pi != t) { D.row(t).swap(D.row(pi)); U.row(t).swap(U.row(pi)); }
      if (pj != t) { D.col(t).swap(D.col(pj)); V.col(t).swap(V.col(pj)); }

      bool clean = true;
      for (Eigen::Index i = t + 1; i < r; ++i) {
        if (D(i, t) == 0) continue;
        Int q = quot(D(i, t), D(t, t));
        if (q != 0) { D.row(i) -= q * D.row(t); U.row(i) -= q * U.row(t); }
        if (D(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < c; ++j) {
        if (D(t, j) == 0) continue;
        Int q = quot(D(t, j), D(t, t));
        if (q != 0) { D.col(j) -= q * D.col(t); V.col(j) -= q * V.col(t); }
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility fixup: drag a non-divisible entry into row t.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < r && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < c && bad < 0; ++j)
          if (D(i, j) % D(t, t) != 0) bad = i;
      if (bad < 0) break;
      D.row(t) += D.row(bad);
      U.row(t) += U.row(bad);
    }
    if (t < r && t < c && D(t, t) < 0) {
      D.row(t) = -D.row(t);
      U.row(t) = -U.row(t);
    }
  }
  return {U, D, V};
}

Int determinant(const MatZ& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant: not square");
  const Eigen::Index n = A.rows();
  if (n == 0) return 1;
  MatZ m = A;
  Int denom = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index p = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / denom;
    denom = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

MatZ unimodular_inverse(const MatZ& A) {
  SnfDecomposition s = snf(A);
  if (A.rows() != A.cols() || !s.D.isIdentity())
    throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
  return s.V * s.U;
}

bool is_part_of_basis(const std::vector<VecZ>& vectors) {
  if (vectors.empty()) return true;
  const Eigen::Index n = vectors[0].rows();
  for (const auto& v : vectors)
    if (v.rows() != n)
      throw std::invalid_argument("is_part_of_basis: dimension mismatch");
  if (static_cast<Eigen::Index>(vectors.size()) > n) return false;
  MatZ m(static_cast<Eigen::Index>(vectors.size()), n);
  for (Eigen::Index i = 0; i < m.rows(); ++i) m.row(i) = vectors[i].transpose();
  SnfDecomposition s = snf(m);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if (s.D(i, i) != 1) return false;
  return true;
}

std::vector<VecZ> kernel_basis(const MatZ& A) {
  const Eigen::Index c = A.cols();
  if (A.rows() == 0) {
    std::vector<VecZ> basis;
    for (Eigen::Index j = 0; j < c; ++j) {
      VecZ e = VecZ::Zero(c);
      e(j) = 1;
      basis.push_back(e);
    }
    return basis;
  }
  SnfDecomposition s = snf(A);
  std::vector<VecZ> basis;
  const Eigen::Index steps = std::min(A.rows(), c);
  for (Eigen::Index j = 0; j < c; ++j) {
    bool zero_factor = j >= steps || s.D(j, j) == 0;
    if (zero_factor) basis.push_back(s.V.col(j));
  }
  return basis;
}

VecZ primitive(const VecZ& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.rows(); ++i) g = gcd(g, v(i));
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  VecZ out = v;
  for (Eigen::Index i = 0; i < out.rows(); ++i) out(i) /= g;
  return out;
}

std::optional<VecZ> solve_integer(const MatZ& A, const VecZ& b) {
  if (A.rows() != b.rows()) throw std::invalid_argument("solve_integer: shape");
  if (A.rows() == 0) return VecZ::Zero(A.cols());
  SnfDecomposition s = snf(A);
  VecZ rhs = s.U * b;
  VecZ y = VecZ::Zero(A.cols());
  const Eigen::Index steps = std::min(A.rows(), A.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    Int d = (i < steps) ? s.D(i, i) : Int(0);
    if (d == 0) {
      if (rhs(i) != 0) return std::nullopt;
    } else {
      if (rhs(i) % d != 0) return std::nullopt;
      y(i) = rhs(i) / d;
    }
  }
  return VecZ(s.V * y);
}

MatZ extend_to_basis(const MatZ& cols, int ambient_rank) {
  const Eigen::Index n = ambient_rank, k = cols.cols();
  if (k == 0) return MatZ::Identity(n, n);
  if (cols.rows() != n) throw std::invalid_argument("extend_to_basis: shape");
  SnfDecomposition s = snf(cols);
  for (Eigen::Index i = 0; i < k; ++i)
    if (s.D(i, i) != 1)
      throw std::invalid_argument(
          "extend_to_basis: columns are not part of a lattice basis");
  // A = U^-1 D V^-1; pad D V^-1 with unit columns and undo U.
  MatZ C = MatZ::Identity(n, n);
  C.topLeftCorner(k, k) = unimodular_inverse(s.V);
  C.bottomLeftCorner(n - k, k).setZero();
  return unimodular_inverse(s.U) * C;
}

}  // namespace ktoric
